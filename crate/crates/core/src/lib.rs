//! Networked genetic algorithms.
//!
//! A genetic algorithm whose mating is constrained by a population network:
//! the first parent is drawn fitness-proportionately from the whole
//! population, the second only among the first parent's neighbours. The
//! crate provides the three test functions, network generators and metrics,
//! the engine, and the experiment harness used to relate network structure
//! to optimisation performance.

pub mod benchmarks;
pub mod engine;
pub mod error;
pub mod genome;
pub mod harness;
pub mod netgraph;
pub mod parallel;
pub mod polyfit;
pub mod seeding;

pub use benchmarks::{Function, ObjectiveSpec};
pub use engine::{run, GaConfig, MutationScheme, Population, RunTrace, SelectionVariant};
pub use error::{Error, Result};
pub use genome::Genome;
pub use netgraph::{PathLength, PopulationGraph, Topology};
pub use parallel::Execution;
