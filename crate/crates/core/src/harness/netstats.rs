use std::fmt::Write;

use super::{cell_seed, format_path, SweepAxis};
use crate::error::{Error, Result};
use crate::netgraph::{generate, PathLength};
use crate::parallel::{map_indexed, Execution};
use crate::seeding::{stream, StreamId};

/// Metrics of one generated network.
#[derive(Debug, Clone, PartialEq)]
pub struct NetStatsRecord {
    pub grid_index: usize,
    pub repetition: usize,
    pub seed: u64,
    pub edges: usize,
    pub density: f64,
    pub connected: bool,
    pub avg_path: PathLength,
}

/// Draws `repetitions` networks per grid value. Cell seeds and the graph
/// stream match [`super::sweep`], so the same master seed yields the very
/// networks the sweep ran on.
pub fn network_stats(
    axis: &SweepAxis,
    n: usize,
    repetitions: usize,
    master_seed: u64,
    execution: Execution,
) -> Result<Vec<NetStatsRecord>> {
    if repetitions == 0 {
        return Err(Error::InvalidConfig("repetitions must be at least 1".into()));
    }
    for i in 0..axis.len() {
        axis.topology(i).validate(n)?;
    }
    map_indexed(axis.len() * repetitions, execution, |cell| {
        let (grid_index, repetition) = (cell / repetitions, cell % repetitions);
        let seed = cell_seed(master_seed, grid_index, repetition);
        let g = generate(axis.topology(grid_index), n, &mut stream(seed, StreamId::Graph))?;
        Ok(NetStatsRecord {
            grid_index,
            repetition,
            seed,
            edges: g.edge_count(),
            density: g.density()?,
            connected: g.is_connected(),
            avg_path: g.average_shortest_path_length(),
        })
    })
    .into_iter()
    .collect()
}

/// `axis,value,repetition,seed,edges,density,connected,avg_path`.
pub fn netstats_csv(axis: &SweepAxis, records: &[NetStatsRecord]) -> String {
    let mut out = String::from("axis,value,repetition,seed,edges,density,connected,avg_path\n");
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            axis.label(),
            axis.value_label(r.grid_index),
            r.repetition,
            r.seed,
            r.edges,
            r.density,
            r.connected,
            format_path(r.avg_path)
        )
        .unwrap();
    }
    out
}
