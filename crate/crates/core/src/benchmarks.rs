//! The three test functions (Rastrigin, Sphere, Ackley) and their domains.
//!
//! All three are minimised, are non-negative over their domains and reach
//! their global optimum `f(0) = 0` at the origin.

use std::f64::consts::{E, TAU};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::genome::Genome;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Function {
    Rastrigin,
    Sphere,
    Ackley,
}

impl Function {
    pub const ALL: [Function; 3] = [Function::Rastrigin, Function::Sphere, Function::Ackley];

    /// Half-width of the symmetric default search domain.
    pub fn default_bound(self) -> f64 {
        match self {
            Function::Rastrigin | Function::Sphere => 5.12,
            Function::Ackley => 32.768,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Function::Rastrigin => "rastrigin",
            Function::Sphere => "sphere",
            Function::Ackley => "ackley",
        }
    }
}

impl fmt::Display for Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Function {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "rastrigin" => Ok(Function::Rastrigin),
            "sphere" => Ok(Function::Sphere),
            "ackley" => Ok(Function::Ackley),
            other => Err(Error::Parse(format!(
                "unknown function '{other}' (expected rastrigin, sphere or ackley)"
            ))),
        }
    }
}

/// A test function together with its dimension and per-coordinate bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObjectiveSpec {
    pub function: Function,
    pub dimension: usize,
    pub lower: f64,
    pub upper: f64,
}

impl ObjectiveSpec {
    /// Builds a spec with the function's default domain.
    pub fn new(function: Function, dimension: usize) -> Result<Self> {
        let bound = function.default_bound();
        Self::with_bounds(function, dimension, -bound, bound)
    }

    pub fn with_bounds(function: Function, dimension: usize, lower: f64, upper: f64) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidConfig("dimension must be at least 1".into()));
        }
        if lower.is_nan() || upper.is_nan() || lower >= upper {
            return Err(Error::InvalidConfig(format!(
                "lower bound {lower} must be below upper bound {upper}"
            )));
        }
        Ok(Self { function, dimension, lower, upper })
    }

    fn check(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dimension {
            return Err(Error::DimensionMismatch { expected: self.dimension, actual: x.len() });
        }
        Ok(())
    }

    /// Evaluates the objective at `x`.
    ///
    /// Out-of-domain points are evaluated as-is; the engine never produces them.
    pub fn evaluate(&self, x: &Genome) -> Result<f64> {
        self.check(x.coords())?;
        Ok(evaluate_unchecked(self.function, x.coords()))
    }

    /// Clips every coordinate into `[lower, upper]`.
    pub fn clamp_to_domain(&self, x: &Genome) -> Result<Genome> {
        self.check(x.coords())?;
        Ok(Genome::new(x.coords().iter().map(|&v| self.clamp_coord(v)).collect()))
    }

    #[inline]
    pub(crate) fn clamp_coord(&self, v: f64) -> f64 {
        v.clamp(self.lower, self.upper)
    }

    pub fn contains(&self, x: &Genome) -> bool {
        x.len() == self.dimension && x.coords().iter().all(|&v| self.lower <= v && v <= self.upper)
    }
}

pub(crate) fn evaluate_unchecked(function: Function, x: &[f64]) -> f64 {
    match function {
        Function::Rastrigin => rastrigin(x),
        Function::Sphere => sphere(x),
        Function::Ackley => ackley(x),
    }
}

fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

fn rastrigin(x: &[f64]) -> f64 {
    let d = x.len() as f64;
    10.0 * d + x.iter().map(|&v| v * v - 10.0 * (TAU * v).cos()).sum::<f64>()
}

fn ackley(x: &[f64]) -> f64 {
    let d = x.len() as f64;
    let mean_sq = x.iter().map(|v| v * v).sum::<f64>() / d;
    let mean_cos = x.iter().map(|&v| (TAU * v).cos()).sum::<f64>() / d;
    -20.0 * (-0.2 * mean_sq.sqrt()).exp() - mean_cos.exp() + E + 20.0
}
