use std::fmt::Write;

use super::{cell_seed, format_path, mean, DEFAULT_REPETITIONS, DEFAULT_SNAPSHOTS, FIT_ORDER};
use crate::benchmarks::Function;
use crate::engine::{run, GaConfig};
use crate::error::{Error, Result};
use crate::netgraph::{PathLength, Topology};
use crate::parallel::{map_indexed, Execution};
use crate::polyfit::polyfit;

/// The network parameter being swept and its grid.
#[derive(Debug, Clone, PartialEq)]
pub enum SweepAxis {
    /// Erdős–Rényi link probabilities.
    ErP(Vec<f64>),
    /// Barabási–Albert attachment counts.
    BaM(Vec<usize>),
}

impl SweepAxis {
    /// `p = 0.00, 0.01, ..., 1.00`.
    pub fn default_p() -> Self {
        SweepAxis::ErP((0..=100).map(|i| f64::from(i) / 100.0).collect())
    }

    /// `m = 1, ..., n - 1`.
    pub fn default_m(n: usize) -> Self {
        SweepAxis::BaM((1..n).collect())
    }

    pub fn label(&self) -> &'static str {
        match self {
            SweepAxis::ErP(_) => "p",
            SweepAxis::BaM(_) => "m",
        }
    }

    pub fn len(&self) -> usize {
        match self {
            SweepAxis::ErP(v) => v.len(),
            SweepAxis::BaM(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn value(&self, i: usize) -> f64 {
        match self {
            SweepAxis::ErP(v) => v[i],
            SweepAxis::BaM(v) => v[i] as f64,
        }
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.len()).map(|i| self.value(i)).collect()
    }

    pub fn value_label(&self, i: usize) -> String {
        match self {
            SweepAxis::ErP(v) => v[i].to_string(),
            SweepAxis::BaM(v) => v[i].to_string(),
        }
    }

    pub fn topology(&self, i: usize) -> Topology {
        match self {
            SweepAxis::ErP(v) => Topology::ErdosRenyi(v[i]),
            SweepAxis::BaM(v) => Topology::BarabasiAlbert(v[i]),
        }
    }
}

/// A sweep over one network parameter for one test function.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    /// Run template; its topology and seed are replaced per cell.
    pub base: GaConfig,
    pub axis: SweepAxis,
    pub repetitions: usize,
    pub snapshots: Vec<usize>,
    pub master_seed: u64,
}

impl SweepSpec {
    /// Default grid, repetitions and snapshots for `function`.
    pub fn new(function: Function, axis_label: char, master_seed: u64) -> Result<Self> {
        let base = GaConfig::for_function(function);
        let axis = match axis_label {
            'p' => SweepAxis::default_p(),
            'm' => SweepAxis::default_m(base.n),
            other => return Err(Error::InvalidConfig(format!("unknown sweep axis '{other}' (expected p or m)"))),
        };
        Ok(Self { base, axis, repetitions: DEFAULT_REPETITIONS, snapshots: DEFAULT_SNAPSHOTS.to_vec(), master_seed })
    }

    pub fn function(&self) -> Function {
        self.base.objective.function
    }

    pub fn validate(&self) -> Result<()> {
        if self.repetitions == 0 {
            return Err(Error::InvalidConfig("repetitions must be at least 1".into()));
        }
        if self.axis.is_empty() {
            return Err(Error::InvalidConfig("sweep grid is empty".into()));
        }
        if self.snapshots.is_empty() {
            return Err(Error::InvalidConfig("no snapshot generations".into()));
        }
        if let Some(&t) = self.snapshots.iter().find(|&&t| t > self.base.tau) {
            return Err(Error::InvalidConfig(format!("snapshot t = {t} beyond tau = {}", self.base.tau)));
        }
        for i in 0..self.axis.len() {
            self.axis.topology(i).validate(self.base.n)?;
        }
        self.base.validate()
    }
}

/// One run of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub grid_index: usize,
    pub value: f64,
    pub repetition: usize,
    /// Replays this cell via `run` with the cell's topology.
    pub seed: u64,
    /// Population mean raw fitness at each snapshot generation.
    pub snapshot_means: Vec<f64>,
    pub density: f64,
    pub connected: bool,
    pub avg_path: PathLength,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub function: Function,
    pub axis: SweepAxis,
    pub snapshots: Vec<usize>,
    pub repetitions: usize,
    /// Grid-major, repetition-minor.
    pub records: Vec<SweepRecord>,
    /// `grid_means[s][g]`: mean over repetitions at snapshot `s`, grid point `g`.
    pub grid_means: Vec<Vec<f64>>,
    /// Order-4 fit of grid means against grid values, per snapshot; `None`
    /// when the grid has too few points.
    pub fits: Vec<Option<Vec<f64>>>,
}

impl SweepResult {
    pub fn snapshot_index(&self, t: usize) -> Option<usize> {
        self.snapshots.iter().position(|&s| s == t)
    }

    /// Lowest grid mean at snapshot index `s`, as `(grid value, mean)`.
    /// Ties go to the first grid point.
    pub fn best(&self, s: usize) -> (f64, f64) {
        self.grid_means[s]
            .iter()
            .enumerate()
            .fold((f64::NAN, f64::INFINITY), |acc, (g, &m)| if m < acc.1 { (self.axis.value(g), m) } else { acc })
    }

    /// `function,axis,value,repetition,seed,t20,t50,t100,density,connected,avg_path`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("function,axis,value,repetition,seed");
        for t in &self.snapshots {
            write!(out, ",t{t}").unwrap();
        }
        out.push_str(",density,connected,avg_path\n");
        for r in &self.records {
            write!(out, "{},{},{},{},{}", self.function, self.axis.label(), self.axis.value_label(r.grid_index), r.repetition, r.seed)
                .unwrap();
            for m in &r.snapshot_means {
                write!(out, ",{m}").unwrap();
            }
            writeln!(out, ",{},{},{}", r.density, r.connected, format_path(r.avg_path)).unwrap();
        }
        out
    }

    /// `function,axis,snapshot,c0..c4`.
    pub fn fits_csv(&self) -> String {
        let mut out = String::from("function,axis,snapshot");
        for k in 0..=FIT_ORDER {
            write!(out, ",c{k}").unwrap();
        }
        out.push('\n');
        for (t, fit) in self.snapshots.iter().zip(&self.fits) {
            if let Some(coeffs) = fit {
                write!(out, "{},{},{t}", self.function, self.axis.label()).unwrap();
                for c in coeffs {
                    write!(out, ",{c}").unwrap();
                }
                out.push('\n');
            }
        }
        out
    }
}

/// Runs every grid value `repetitions` times and aggregates.
pub fn sweep(spec: &SweepSpec, execution: Execution) -> Result<SweepResult> {
    spec.validate()?;
    let reps = spec.repetitions;
    let cells = spec.axis.len() * reps;
    let records = map_indexed(cells, execution, |cell| {
        let (grid_index, repetition) = (cell / reps, cell % reps);
        let seed = cell_seed(spec.master_seed, grid_index, repetition);
        let config = GaConfig { topology: spec.axis.topology(grid_index), seed, ..spec.base.clone() };
        let trace = run(&config)?;
        Ok(SweepRecord {
            grid_index,
            value: spec.axis.value(grid_index),
            repetition,
            seed,
            snapshot_means: spec.snapshots.iter().map(|&t| trace.records[t].mean_fitness).collect(),
            density: trace.graph.density()?,
            connected: trace.graph.is_connected(),
            avg_path: trace.graph.average_shortest_path_length(),
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;

    let grid_means: Vec<Vec<f64>> = (0..spec.snapshots.len())
        .map(|s| {
            records.chunks(reps).map(|chunk| mean(chunk.iter().map(|r| r.snapshot_means[s]))).collect()
        })
        .collect();
    let xs = spec.axis.values();
    let fits = grid_means.iter().map(|ys| polyfit(&xs, ys, FIT_ORDER).ok()).collect();

    Ok(SweepResult {
        function: spec.function(),
        axis: spec.axis.clone(),
        snapshots: spec.snapshots.clone(),
        repetitions: reps,
        records,
        grid_means,
        fits,
    })
}
