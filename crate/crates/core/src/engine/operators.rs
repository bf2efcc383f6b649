//! Selection, crossover and mutation.

use rand::Rng;
use rand_distr::StandardNormal;

use super::config::{MutationScheme, SelectionVariant};
use super::population::Population;
use crate::benchmarks::ObjectiveSpec;
use crate::error::{Error, Result};
use crate::genome::Genome;
use crate::netgraph::PopulationGraph;

/// `1 / (1 + f)`: maps raw objective values (lower is better) into `(0, 1]`.
#[inline]
pub fn fitness_transform(f: f64) -> f64 {
    1.0 / (1.0 + f)
}

/// Selection probabilities over `subset`, in the order given.
pub fn selection_weights(pop: &Population, subset: &[usize], variant: SelectionVariant) -> Result<Vec<f64>> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let raw = pop.fitness();
    if let Some(&slot) = subset.iter().find(|&&s| s >= raw.len()) {
        return Err(Error::NodeOutOfRange { node: slot, n: raw.len() });
    }
    let transformed: Vec<f64> = subset.iter().map(|&s| fitness_transform(raw[s])).collect();
    let mut weights = match variant {
        SelectionVariant::LinearDenominator => transformed,
        SelectionVariant::SquaredDenominator => {
            let denom: f64 = transformed.iter().map(|t| t * t).sum();
            transformed.into_iter().map(|t| t / denom).collect()
        }
    };
    let total: f64 = weights.iter().sum();
    weights.iter_mut().for_each(|w| *w /= total);
    Ok(weights)
}

/// Roulette spin over normalised `weights`.
pub(crate) fn spin<R: Rng + ?Sized>(weights: &[f64], rng: &mut R) -> usize {
    let u: f64 = rng.random();
    let mut cumulative = 0.0;
    for (i, &w) in weights.iter().enumerate() {
        cumulative += w;
        if u < cumulative {
            return i;
        }
    }
    // rounding left the cumulative sum just below u
    weights.iter().rposition(|&w| w > 0.0).unwrap_or(weights.len() - 1)
}

/// Draws a slot from the whole population, fitness-proportionately.
pub fn select_first_parent<R: Rng + ?Sized>(pop: &Population, variant: SelectionVariant, rng: &mut R) -> usize {
    let all: Vec<usize> = (0..pop.len()).collect();
    let weights = selection_weights(pop, &all, variant).expect("population is nonempty");
    spin(&weights, rng)
}

/// Draws a mate for `k` among its graph neighbours; `None` if `k` is isolated.
pub fn select_mate<R: Rng + ?Sized>(
    pop: &Population,
    graph: &PopulationGraph,
    k: usize,
    variant: SelectionVariant,
    rng: &mut R,
) -> Result<Option<usize>> {
    let neighbours = graph.neighbors(k)?;
    if neighbours.is_empty() {
        return Ok(None);
    }
    let weights = selection_weights(pop, neighbours, variant)?;
    Ok(Some(neighbours[spin(&weights, rng)]))
}

/// Single-point exchange: genes from `cut` onward are swapped between parents.
pub fn crossover_at(a: &Genome, b: &Genome, cut: usize) -> Result<(Genome, Genome)> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch { expected: a.len(), actual: b.len() });
    }
    let cut = cut.min(a.len());
    let (a, b) = (a.coords(), b.coords());
    let first = a[..cut].iter().chain(&b[cut..]).copied().collect::<Vec<_>>();
    let second = b[..cut].iter().chain(&a[cut..]).copied().collect::<Vec<_>>();
    Ok((first.into(), second.into()))
}

/// With probability `rho`, exchanges genes after a cut drawn uniformly from
/// `{0, ..., d}`; otherwise returns copies of the parents.
pub fn crossover<R: Rng + ?Sized>(a: &Genome, b: &Genome, rho: f64, rng: &mut R) -> Result<(Genome, Genome)> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch { expected: a.len(), actual: b.len() });
    }
    if rng.random::<f64>() < rho {
        let cut = rng.random_range(0..=a.len());
        crossover_at(a, b, cut)
    } else {
        Ok((a.clone(), b.clone()))
    }
}

/// Each gene independently, with probability `mu`, gets a standard normal
/// increment and is clamped back into the domain.
pub fn mutate<R: Rng + ?Sized>(x: &Genome, mu: f64, objective: &ObjectiveSpec, rng: &mut R) -> Genome {
    let mut out = x.clone();
    mutate_in_place(&mut out, mu, objective, rng, |r| r.sample(StandardNormal));
    out
}

/// With probability `mu`, one uniformly chosen gene gets a standard normal
/// increment and is clamped back into the domain.
pub fn mutate_single_gene<R: Rng + ?Sized>(x: &Genome, mu: f64, objective: &ObjectiveSpec, rng: &mut R) -> Genome {
    let mut out = x.clone();
    mutate_with(&mut out, MutationScheme::PerIndividual, mu, objective, rng, |r| r.sample(StandardNormal));
    out
}

pub(crate) fn mutate_in_place<R, F>(x: &mut Genome, mu: f64, objective: &ObjectiveSpec, rng: &mut R, noise: F)
where
    R: Rng + ?Sized,
    F: FnMut(&mut R) -> f64,
{
    mutate_with(x, MutationScheme::PerGene, mu, objective, rng, noise)
}

pub(crate) fn mutate_with<R, F>(
    x: &mut Genome,
    scheme: MutationScheme,
    mu: f64,
    objective: &ObjectiveSpec,
    rng: &mut R,
    mut noise: F,
) where
    R: Rng + ?Sized,
    F: FnMut(&mut R) -> f64,
{
    match scheme {
        MutationScheme::PerGene => {
            for v in x.coords_mut() {
                if rng.random::<f64>() < mu {
                    *v = objective.clamp_coord(*v + noise(rng));
                }
            }
        }
        MutationScheme::PerIndividual => {
            if !x.is_empty() && rng.random::<f64>() < mu {
                let i = rng.random_range(0..x.len());
                let v = &mut x.coords_mut()[i];
                *v = objective.clamp_coord(*v + noise(rng));
            }
        }
    }
}
