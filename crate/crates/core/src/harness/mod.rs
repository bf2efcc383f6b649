//! Experiment drivers: topology panels, parameter sweeps, the standard-GA
//! comparison and network statistics, plus their CSV renderings.
//!
//! Every run in an experiment gets its seed from [`cell_seed`], so any single
//! cell can be replayed on its own from the seed recorded next to it.

mod compare;
mod netstats;
mod panel;
mod sweep;

pub use compare::{compare, comparison_csv, render_comparison, standard_runs, Column, ComparisonRow, ComparisonTable, StandardRuns};
pub use netstats::{network_stats, netstats_csv, NetStatsRecord};
pub use panel::{panel_csv, run_topology_panel, PanelTrace};
pub use sweep::{sweep, SweepAxis, SweepRecord, SweepResult, SweepSpec};

use crate::netgraph::PathLength;
use crate::seeding::derive_seed;

/// Generations at which sweeps record the population mean.
pub const DEFAULT_SNAPSHOTS: [usize; 3] = [20, 50, 100];
pub const DEFAULT_REPETITIONS: usize = 10;
/// Degree of the polynomial fitted to grid means.
pub const FIT_ORDER: usize = 4;

/// Seed of cell `(major, minor)`; `major` is a grid or topology index.
pub fn cell_seed(master: u64, major: usize, minor: usize) -> u64 {
    let narrow = |v: usize| u32::try_from(v).expect("cell index fits in 32 bits");
    derive_seed(master, narrow(major), narrow(minor))
}

pub(crate) fn mean(values: impl IntoIterator<Item = f64>) -> f64 {
    let (sum, count) = values.into_iter().fold((0.0, 0usize), |(s, c), v| (s + v, c + 1));
    sum / count as f64
}

pub(crate) fn format_path(path: PathLength) -> String {
    path.value().map_or_else(|| "NA".to_string(), |v| v.to_string())
}
