use std::fmt::Write;

use super::{cell_seed, mean, SweepAxis, SweepResult};
use crate::benchmarks::Function;
use crate::engine::{run, GaConfig};
use crate::error::{Error, Result};
use crate::netgraph::Topology;
use crate::parallel::{map_indexed, Execution};

/// Seed-derivation major index reserved for standard-GA runs.
const STANDARD_MAJOR: usize = u32::MAX as usize;

/// Complete-network runs: the standard GA baseline.
#[derive(Debug, Clone, PartialEq)]
pub struct StandardRuns {
    pub function: Function,
    pub snapshots: Vec<usize>,
    pub seeds: Vec<u64>,
    /// `values[r][s]`: population mean at snapshot `s` of repetition `r`.
    pub values: Vec<Vec<f64>>,
}

impl StandardRuns {
    pub fn mean(&self, s: usize) -> f64 {
        mean(self.values.iter().map(|v| v[s]))
    }
}

pub fn standard_runs(
    base: &GaConfig,
    repetitions: usize,
    snapshots: &[usize],
    master_seed: u64,
    execution: Execution,
) -> Result<StandardRuns> {
    if repetitions == 0 {
        return Err(Error::InvalidConfig("repetitions must be at least 1".into()));
    }
    if let Some(&t) = snapshots.iter().find(|&&t| t > base.tau) {
        return Err(Error::InvalidConfig(format!("snapshot t = {t} beyond tau = {}", base.tau)));
    }
    let seeds: Vec<u64> = (0..repetitions).map(|r| cell_seed(master_seed, STANDARD_MAJOR, r)).collect();
    let values = map_indexed(repetitions, execution, |r| {
        let config = GaConfig { topology: Topology::Complete, seed: seeds[r], ..base.clone() };
        run(&config).map(|trace| snapshots.iter().map(|&t| trace.records[t].mean_fitness).collect())
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(StandardRuns { function: base.objective.function, snapshots: snapshots.to_vec(), seeds, values })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Column {
    Ga,
    Er,
    Ab,
}

/// One snapshot of the comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub snapshot: usize,
    pub ga: f64,
    pub er_best: f64,
    pub er_argmin_p: f64,
    pub ab_best: f64,
    pub ab_argmin_m: f64,
}

impl ComparisonRow {
    /// Column holding the row minimum; ties favour GA, then ER.
    pub fn best(&self) -> Column {
        let mut best = (Column::Ga, self.ga);
        for (c, v) in [(Column::Er, self.er_best), (Column::Ab, self.ab_best)] {
            if v < best.1 {
                best = (c, v);
            }
        }
        best.0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonTable {
    pub function: Function,
    pub rows: Vec<ComparisonRow>,
}

/// Standard GA against the best ER and best BA grid means, per snapshot.
pub fn compare(er: &SweepResult, ba: &SweepResult, standard: &StandardRuns) -> Result<ComparisonTable> {
    if !matches!(er.axis, SweepAxis::ErP(_)) || !matches!(ba.axis, SweepAxis::BaM(_)) {
        return Err(Error::Mismatch("expected an ER p-sweep and a BA m-sweep".into()));
    }
    if er.function != ba.function || er.function != standard.function {
        return Err(Error::Mismatch(format!(
            "functions differ: ER {}, BA {}, GA {}",
            er.function, ba.function, standard.function
        )));
    }
    if er.snapshots != ba.snapshots || er.snapshots != standard.snapshots {
        return Err(Error::Mismatch(format!(
            "snapshot sets differ: ER {:?}, BA {:?}, GA {:?}",
            er.snapshots, ba.snapshots, standard.snapshots
        )));
    }
    let rows = er
        .snapshots
        .iter()
        .enumerate()
        .map(|(s, &snapshot)| {
            let (er_argmin_p, er_best) = er.best(s);
            let (ab_argmin_m, ab_best) = ba.best(s);
            ComparisonRow { snapshot, ga: standard.mean(s), er_best, er_argmin_p, ab_best, ab_argmin_m }
        })
        .collect();
    Ok(ComparisonTable { function: er.function, rows })
}

/// One line per function, snapshots side by side.
pub fn comparison_csv(tables: &[ComparisonTable]) -> String {
    let mut out = String::from("function");
    if let Some(first) = tables.first() {
        for row in &first.rows {
            let t = row.snapshot;
            write!(out, ",t{t}_ga,t{t}_er,t{t}_er_p,t{t}_ab,t{t}_ab_m,t{t}_best").unwrap();
        }
    }
    out.push('\n');
    for table in tables {
        out.push_str(table.function.name());
        for r in &table.rows {
            let best = match r.best() {
                Column::Ga => "ga",
                Column::Er => "er",
                Column::Ab => "ab",
            };
            write!(out, ",{},{},{},{},{},{best}", r.ga, r.er_best, r.er_argmin_p, r.ab_best, r.ab_argmin_m).unwrap();
        }
        out.push('\n');
    }
    out
}

/// Fixed-width text table; `*` marks each row minimum.
pub fn render_comparison(tables: &[ComparisonTable]) -> String {
    let mut out = format!("{:<10} {:>5}  {:>10}  {:>20}  {:>18}\n", "function", "t", "GA", "ER* (p)", "AB* (m)");
    for table in tables {
        for r in &table.rows {
            let mark = |c: Column| if r.best() == c { "*" } else { " " };
            let er = format!("{:.3} ({}){}", r.er_best, r.er_argmin_p, mark(Column::Er));
            let ab = format!("{:.3} ({}){}", r.ab_best, r.ab_argmin_m, mark(Column::Ab));
            writeln!(
                out,
                "{:<10} {:>5}  {:>10}  {:>20}  {:>18}",
                table.function.name(),
                r.snapshot,
                format!("{:.3}{}", r.ga, mark(Column::Ga)),
                er,
                ab
            )
            .unwrap();
        }
    }
    out
}
