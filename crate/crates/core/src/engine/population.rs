use rand::Rng;

use crate::benchmarks::{evaluate_unchecked, ObjectiveSpec};
use crate::error::{Error, Result};
use crate::genome::Genome;

/// Individuals indexed by population slot, with their raw objective values.
#[derive(Debug, Clone, PartialEq)]
pub struct Population {
    individuals: Vec<Genome>,
    fitness: Vec<f64>,
}

impl Population {
    /// Evaluates every individual under `objective`.
    pub fn new(objective: &ObjectiveSpec, individuals: Vec<Genome>) -> Result<Self> {
        let fitness = individuals.iter().map(|g| objective.evaluate(g)).collect::<Result<_>>()?;
        Ok(Self { individuals, fitness })
    }

    /// Builds a population with externally supplied raw fitness values.
    pub fn from_parts(individuals: Vec<Genome>, fitness: Vec<f64>) -> Result<Self> {
        if individuals.len() != fitness.len() {
            return Err(Error::Mismatch(format!(
                "{} individuals but {} fitness values",
                individuals.len(),
                fitness.len()
            )));
        }
        Ok(Self { individuals, fitness })
    }

    /// `n` genomes with coordinates uniform over the objective's domain.
    pub fn random<R: Rng + ?Sized>(objective: &ObjectiveSpec, n: usize, rng: &mut R) -> Self {
        let individuals: Vec<Genome> = (0..n)
            .map(|_| {
                Genome::new(
                    (0..objective.dimension)
                        .map(|_| rng.random_range(objective.lower..=objective.upper))
                        .collect(),
                )
            })
            .collect();
        let fitness = individuals.iter().map(|g| evaluate_unchecked(objective.function, g.coords())).collect();
        Self { individuals, fitness }
    }

    pub fn len(&self) -> usize {
        self.individuals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.individuals.is_empty()
    }

    pub fn individuals(&self) -> &[Genome] {
        &self.individuals
    }

    pub fn individual(&self, slot: usize) -> &Genome {
        &self.individuals[slot]
    }

    /// Raw objective values, one per slot.
    pub fn fitness(&self) -> &[f64] {
        &self.fitness
    }

    pub fn mean_fitness(&self) -> f64 {
        self.fitness.iter().sum::<f64>() / self.fitness.len() as f64
    }

    /// Lowest raw objective value and its slot (first on ties).
    pub fn best(&self) -> (usize, f64) {
        self.fitness
            .iter()
            .copied()
            .enumerate()
            .fold((0, f64::INFINITY), |acc, (i, f)| if f < acc.1 { (i, f) } else { acc })
    }
}
