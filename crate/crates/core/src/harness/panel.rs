use std::fmt::Write;

use super::{cell_seed, mean};
use crate::benchmarks::Function;
use crate::engine::{run, GaConfig};
use crate::error::{Error, Result};
use crate::netgraph::Topology;
use crate::parallel::{map_indexed, Execution};

/// Per-generation mean fitness of one topology, averaged over repetitions.
#[derive(Debug, Clone, PartialEq)]
pub struct PanelTrace {
    pub topology: Topology,
    pub mean_fitness_avg: Vec<f64>,
}

impl PanelTrace {
    pub fn final_value(&self) -> f64 {
        *self.mean_fitness_avg.last().expect("trace holds generation 0")
    }
}

/// Runs each topology `repetitions` times from `base`; run `(i, r)` of
/// topology `i` uses seed `cell_seed(master_seed, i, r)`.
pub fn run_topology_panel(
    base: &GaConfig,
    topologies: &[Topology],
    repetitions: usize,
    master_seed: u64,
    execution: Execution,
) -> Result<Vec<PanelTrace>> {
    if repetitions == 0 {
        return Err(Error::InvalidConfig("repetitions must be at least 1".into()));
    }
    for t in topologies {
        t.validate(base.n)?;
    }
    let traces = map_indexed(topologies.len() * repetitions, execution, |cell| {
        let (i, r) = (cell / repetitions, cell % repetitions);
        let config = GaConfig { topology: topologies[i], seed: cell_seed(master_seed, i, r), ..base.clone() };
        run(&config).map(|t| t.records.into_iter().map(|rec| rec.mean_fitness).collect::<Vec<_>>())
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;

    Ok(topologies
        .iter()
        .zip(traces.chunks(repetitions))
        .map(|(&topology, runs)| PanelTrace {
            topology,
            mean_fitness_avg: (0..=base.tau).map(|t| mean(runs.iter().map(|r| r[t]))).collect(),
        })
        .collect())
}

/// `function,topology,t,mean_fitness_avg`.
pub fn panel_csv(function: Function, panel: &[PanelTrace]) -> String {
    let mut out = String::from("function,topology,t,mean_fitness_avg\n");
    for trace in panel {
        for (t, v) in trace.mean_fitness_avg.iter().enumerate() {
            writeln!(out, "{function},{},{t},{v}", trace.topology).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_and_determinism() {
        let base = GaConfig { tau: 100, ..GaConfig::for_function(Function::Sphere) };
        let topologies = [Topology::Star, Topology::ErdosRenyi(0.2)];
        let a = run_topology_panel(&base, &topologies, 2, 5, Execution::Parallel).unwrap();
        let b = run_topology_panel(&base, &topologies, 2, 5, Execution::Sequential).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|t| t.mean_fitness_avg.len() == 101));
        let csv = panel_csv(Function::Sphere, &a);
        assert_eq!(csv.lines().count(), 1 + 2 * 101);
        assert!(csv.contains("\nsphere,er:0.2,100,"));
    }

    #[test]
    fn averages_individual_runs() {
        let base = GaConfig { tau: 10, ..GaConfig::for_function(Function::Rastrigin) };
        let panel = run_topology_panel(&base, &[Topology::Complete], 3, 9, Execution::Sequential).unwrap();
        let finals: Vec<f64> = (0..3)
            .map(|r| {
                let c = GaConfig { topology: Topology::Complete, seed: cell_seed(9, 0, r), ..base.clone() };
                run(&c).unwrap().final_record().mean_fitness
            })
            .collect();
        assert!((panel[0].final_value() - (finals[0] + finals[1] + finals[2]) / 3.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_invalid_topology() {
        let base = GaConfig::default();
        assert!(run_topology_panel(&base, &[Topology::BarabasiAlbert(50)], 1, 0, Execution::Sequential).is_err());
        assert!(run_topology_panel(&base, &[Topology::Star], 0, 0, Execution::Sequential).is_err());
    }
}
