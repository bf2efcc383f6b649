//! The networked genetic algorithm.
//!
//! Each generation performs `n / 2` mating events. The first parent is drawn
//! fitness-proportionately from the whole population; the mate is drawn the
//! same way but only among the first parent's network neighbours. Offspring
//! replace the whole population, filling slots in event order. There is no
//! elitism.

mod config;
mod operators;
mod population;

pub use config::{parse_kv, GaConfig, MutationScheme, SelectionVariant, CONFIG_KEYS};
pub use operators::{
    crossover, crossover_at, fitness_transform, mutate, mutate_single_gene, select_first_parent, select_mate,
    selection_weights,
};
pub use population::Population;

use std::fmt::Write;

use rand::Rng;

use crate::error::{Error, Result};
use crate::genome::Genome;
use crate::netgraph::{self, PopulationGraph};
use crate::seeding::{stream, StreamId};
use operators::{mutate_with, spin};
use rand_distr::StandardNormal;

/// Initial population for `config`, coordinates uniform over the domain.
pub fn init_population<R: Rng + ?Sized>(config: &GaConfig, rng: &mut R) -> Population {
    Population::random(&config.objective, config.n, rng)
}

/// Produces the next generation.
pub fn step_generation<R: Rng + ?Sized>(
    pop: &Population,
    graph: &PopulationGraph,
    config: &GaConfig,
    rng: &mut R,
) -> Result<Population> {
    if pop.len() != graph.node_count() {
        return Err(Error::PopulationGraphMismatch { population: pop.len(), graph: graph.node_count() });
    }
    let all: Vec<usize> = (0..pop.len()).collect();
    let parent_weights = selection_weights(pop, &all, config.selection)?;
    let objective = &config.objective;
    let mut next = Vec::with_capacity(pop.len());
    for _ in 0..pop.len() / 2 {
        let k = spin(&parent_weights, rng);
        let (mut first, mut second) = match select_mate(pop, graph, k, config.selection, rng)? {
            Some(j) => crossover(pop.individual(k), pop.individual(j), config.rho, rng)?,
            None => (pop.individual(k).clone(), pop.individual(k).clone()),
        };
        for child in [&mut first, &mut second] {
            mutate_with(child, config.mutation, config.mu, objective, rng, |r| r.sample(StandardNormal));
        }
        next.push(first);
        next.push(second);
    }
    Population::new(objective, next)
}

/// Population statistics at one generation.
#[derive(Debug, Clone, PartialEq)]
pub struct GenerationRecord {
    pub t: usize,
    pub mean_fitness: f64,
    pub best_fitness: f64,
    pub best_genome: Genome,
}

impl GenerationRecord {
    fn observe(t: usize, pop: &Population) -> Self {
        let (slot, best) = pop.best();
        Self { t, mean_fitness: pop.mean_fitness(), best_fitness: best, best_genome: pop.individual(slot).clone() }
    }
}

/// Everything one run produced: `tau + 1` records, the final population and
/// the network used throughout.
#[derive(Debug, Clone, PartialEq)]
pub struct RunTrace {
    pub records: Vec<GenerationRecord>,
    pub final_population: Population,
    pub graph: PopulationGraph,
}

impl RunTrace {
    /// Mean raw fitness at generation `t`, if recorded.
    pub fn mean_at(&self, t: usize) -> Option<f64> {
        self.records.get(t).map(|r| r.mean_fitness)
    }

    pub fn final_record(&self) -> &GenerationRecord {
        self.records.last().expect("a trace always holds generation 0")
    }

    /// CSV with columns `t,mean_fitness,best_fitness`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,mean_fitness,best_fitness\n");
        for r in &self.records {
            writeln!(out, "{},{},{}", r.t, r.mean_fitness, r.best_fitness).expect("write to String");
        }
        out
    }
}

/// Runs the NGA for `config.tau` generations.
///
/// The seed is split into three streams: one draws the network (once, before
/// the first generation), one the initial population, one the evolution.
pub fn run(config: &GaConfig) -> Result<RunTrace> {
    config.validate()?;
    let graph = netgraph::generate(config.topology, config.n, &mut stream(config.seed, StreamId::Graph))?;
    let mut pop = init_population(config, &mut stream(config.seed, StreamId::Init));
    let mut rng = stream(config.seed, StreamId::Evolution);
    let mut records = Vec::with_capacity(config.tau + 1);
    records.push(GenerationRecord::observe(0, &pop));
    for t in 1..=config.tau {
        pop = step_generation(&pop, &graph, config, &mut rng)?;
        records.push(GenerationRecord::observe(t, &pop));
    }
    Ok(RunTrace { records, final_population: pop, graph })
}
