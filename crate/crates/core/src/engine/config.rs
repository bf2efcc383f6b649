use std::fmt;
use std::str::FromStr;

use crate::benchmarks::{Function, ObjectiveSpec};
use crate::error::{Error, Result};
use crate::netgraph::Topology;

/// How transformed fitness is normalised into selection probabilities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SelectionVariant {
    /// `f̂(i) / Σ f̂(j)`: standard roulette.
    #[default]
    LinearDenominator,
    /// `f̂(i) / Σ f̂(j)²`, renormalised to sum to one.
    SquaredDenominator,
}

impl fmt::Display for SelectionVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SelectionVariant::LinearDenominator => "linear",
            SelectionVariant::SquaredDenominator => "squared",
        })
    }
}

impl FromStr for SelectionVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "linear" => Ok(SelectionVariant::LinearDenominator),
            "squared" => Ok(SelectionVariant::SquaredDenominator),
            other => Err(Error::Parse(format!("unknown selection variant '{other}' (expected linear or squared)"))),
        }
    }
}

/// Which genes a mutation event touches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MutationScheme {
    /// Every gene independently, with probability `mu`.
    #[default]
    PerGene,
    /// With probability `mu` per individual, one uniformly chosen gene.
    PerIndividual,
}

impl fmt::Display for MutationScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MutationScheme::PerGene => "per_gene",
            MutationScheme::PerIndividual => "per_individual",
        })
    }
}

impl FromStr for MutationScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "per_gene" => Ok(MutationScheme::PerGene),
            "per_individual" => Ok(MutationScheme::PerIndividual),
            other => Err(Error::Parse(format!(
                "unknown mutation scheme '{other}' (expected per_gene or per_individual)"
            ))),
        }
    }
}

/// Parameters of one NGA run.
#[derive(Debug, Clone, PartialEq)]
pub struct GaConfig {
    /// Population size; also the node count of the network.
    pub n: usize,
    /// Crossover rate.
    pub rho: f64,
    /// Mutation rate; see [`MutationScheme`].
    pub mu: f64,
    /// Number of generations.
    pub tau: usize,
    pub objective: ObjectiveSpec,
    pub topology: Topology,
    pub seed: u64,
    pub selection: SelectionVariant,
    pub mutation: MutationScheme,
}

impl Default for GaConfig {
    fn default() -> Self {
        Self {
            n: 50,
            rho: 0.7,
            mu: 0.05,
            tau: 100,
            objective: ObjectiveSpec::new(Function::Rastrigin, 2).expect("default objective"),
            topology: Topology::Complete,
            seed: 0,
            selection: SelectionVariant::default(),
            mutation: MutationScheme::default(),
        }
    }
}

/// Keys accepted by [`GaConfig::set`], in serialisation order.
pub const CONFIG_KEYS: [&str; 10] =
    ["function", "dimension", "n", "rho", "mu", "tau", "topology", "seed", "selection_variant", "mutation"];

impl GaConfig {
    pub fn for_function(function: Function) -> Self {
        let mut config = Self::default();
        config.objective = ObjectiveSpec::new(function, config.objective.dimension).expect("default dimension");
        config
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 || !self.n.is_multiple_of(2) {
            return Err(Error::InvalidConfig(format!("population size must be even and at least 2, got {}", self.n)));
        }
        for (name, rate) in [("rho", self.rho), ("mu", self.mu)] {
            if !(0.0..=1.0).contains(&rate) {
                return Err(Error::InvalidConfig(format!("{name} = {rate} outside [0, 1]")));
            }
        }
        self.topology.validate(self.n)
    }

    /// Sets one key from its text form. Returns `Ok(false)` for keys this
    /// type does not own, so callers can layer their own keys on top.
    pub fn set(&mut self, key: &str, value: &str) -> Result<bool> {
        let value = value.trim();
        let num_err = |what: &str| Error::Parse(format!("{key}: expected {what}, got '{value}'"));
        match key.trim() {
            "function" => {
                self.objective = ObjectiveSpec::new(value.parse()?, self.objective.dimension)?;
            }
            "dimension" => {
                let d = value.parse().map_err(|_| num_err("a positive integer"))?;
                self.objective = ObjectiveSpec::new(self.objective.function, d)?;
            }
            "n" => self.n = value.parse().map_err(|_| num_err("an integer"))?,
            "rho" => self.rho = value.parse().map_err(|_| num_err("a real"))?,
            "mu" => self.mu = value.parse().map_err(|_| num_err("a real"))?,
            "tau" => self.tau = value.parse().map_err(|_| num_err("an integer"))?,
            "topology" => self.topology = value.parse()?,
            "seed" => self.seed = value.parse().map_err(|_| num_err("a 64-bit unsigned integer"))?,
            "selection_variant" => self.selection = value.parse()?,
            "mutation" => self.mutation = value.parse()?,
            _ => return Ok(false),
        }
        Ok(true)
    }

    pub fn get(&self, key: &str) -> Option<String> {
        Some(match key {
            "function" => self.objective.function.to_string(),
            "dimension" => self.objective.dimension.to_string(),
            "n" => self.n.to_string(),
            "rho" => self.rho.to_string(),
            "mu" => self.mu.to_string(),
            "tau" => self.tau.to_string(),
            "topology" => self.topology.to_string(),
            "seed" => self.seed.to_string(),
            "selection_variant" => self.selection.to_string(),
            "mutation" => self.mutation.to_string(),
            _ => return None,
        })
    }

    /// Flat `key = value` text, one key per line.
    pub fn to_kv(&self) -> String {
        CONFIG_KEYS
            .iter()
            .map(|k| format!("{k} = {}\n", self.get(k).expect("known key")))
            .collect()
    }

    /// Parses `key = value` text over the defaults. Unknown keys are errors.
    pub fn from_kv(text: &str) -> Result<Self> {
        let mut config = Self::default();
        for (key, value) in parse_kv(text)? {
            if !config.set(&key, &value)? {
                return Err(Error::Parse(format!("unknown config key '{key}'")));
            }
        }
        Ok(config)
    }
}

/// Splits `key = value` lines; blank lines and `#` comments are skipped.
pub fn parse_kv(text: &str) -> Result<Vec<(String, String)>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| Error::Parse(format!("expected key = value, got '{l}'")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let c = GaConfig::default();
        assert_eq!((c.n, c.rho, c.mu, c.tau), (50, 0.7, 0.05, 100));
        assert_eq!(c.selection, SelectionVariant::LinearDenominator);
        assert_eq!(c.mutation, MutationScheme::PerGene);
        c.validate().unwrap();
    }

    #[test]
    fn kv_round_trip() {
        let mut c = GaConfig::for_function(Function::Ackley);
        c.topology = Topology::ErdosRenyi(0.25);
        c.seed = u64::MAX;
        c.selection = SelectionVariant::SquaredDenominator;
        c.mutation = MutationScheme::PerIndividual;
        let text = c.to_kv();
        assert!(text.contains("topology = er:0.25\n"));
        assert_eq!(GaConfig::from_kv(&text).unwrap(), c);
    }

    #[test]
    fn kv_errors() {
        assert!(GaConfig::from_kv("colour = red").is_err());
        assert!(GaConfig::from_kv("n = fifty").is_err());
        assert!(GaConfig::from_kv("just words").is_err());
        assert!(GaConfig::from_kv("# comment\n\nn = 10\n").is_ok());
    }

    #[test]
    fn validation() {
        let mut c = GaConfig::default();
        c.n = 49;
        assert!(c.validate().is_err());
        c.n = 50;
        c.topology = Topology::BarabasiAlbert(50);
        assert!(c.validate().is_err());
        c.topology = Topology::Complete;
        c.mu = 1.5;
        assert!(c.validate().is_err());
    }
}
