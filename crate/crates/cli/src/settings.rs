//! Resolution of run settings from a config file, flags and the environment.
//!
//! Precedence: flags, then the `--config` file, then `NETGA_SEED` (seed
//! only), then defaults. A seed that is still missing is generated and
//! reported so the run can be replayed.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{bail, Context, Result};
use clap::Args;
use netga_core::engine::{parse_kv, CONFIG_KEYS};
use netga_core::seeding::mix64;
use netga_core::GaConfig;

pub const SEED_ENV: &str = "NETGA_SEED";

/// Keys that experiment commands read in addition to the run keys.
const EXPERIMENT_KEYS: [&str; 5] = ["axis", "reps", "snapshots", "topologies", "workers"];
/// Keys written into manifests that carry no settings.
const METADATA_KEYS: [&str; 5] = ["command", "version", "timestamp", "fit_basis", "outputs"];

#[derive(Debug, Clone, Default, Args)]
pub struct RunArgs {
    /// Flat `key = value` config file; a manifest from an earlier run works too
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// rastrigin | sphere | ackley
    #[arg(long)]
    pub function: Option<String>,
    #[arg(long)]
    pub dimension: Option<String>,
    /// Population size
    #[arg(long)]
    pub n: Option<String>,
    /// Crossover rate
    #[arg(long)]
    pub rho: Option<String>,
    /// Mutation rate
    #[arg(long)]
    pub mu: Option<String>,
    /// Generations
    #[arg(long)]
    pub tau: Option<String>,
    /// er:<p> | ba:<m> | complete | empty | star
    #[arg(long)]
    pub topology: Option<String>,
    /// Master seed; falls back to NETGA_SEED, then to a generated seed
    #[arg(long)]
    pub seed: Option<u64>,
    /// linear | squared
    #[arg(long)]
    pub selection_variant: Option<String>,
    /// per_gene | per_individual
    #[arg(long)]
    pub mutation: Option<String>,
}

/// Merged key-value settings plus the resolved GA config.
#[derive(Debug, Clone)]
pub struct Settings {
    pub config: GaConfig,
    pub extra: BTreeMap<String, String>,
    pub seed_generated: bool,
}

impl Settings {
    pub fn extra(&self, key: &str) -> Option<&str> {
        self.extra.get(key).map(String::as_str)
    }
}

/// Merges config file, `flags` and `overrides` (experiment flags given on
/// the command line) into a [`Settings`].
pub fn resolve(args: &RunArgs, overrides: &[(&str, Option<String>)]) -> Result<Settings> {
    let mut pairs: BTreeMap<String, String> = BTreeMap::new();
    if let Some(path) = &args.config {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        for (k, v) in parse_kv(&text)? {
            let known = CONFIG_KEYS.contains(&k.as_str())
                || EXPERIMENT_KEYS.contains(&k.as_str())
                || METADATA_KEYS.contains(&k.as_str());
            if !known {
                bail!("unknown key '{k}' in {}", path.display());
            }
            if !METADATA_KEYS.contains(&k.as_str()) {
                pairs.insert(k, v);
            }
        }
    }
    let flag_values = [
        ("function", args.function.clone()),
        ("dimension", args.dimension.clone()),
        ("n", args.n.clone()),
        ("rho", args.rho.clone()),
        ("mu", args.mu.clone()),
        ("tau", args.tau.clone()),
        ("topology", args.topology.clone()),
        ("seed", args.seed.map(|s| s.to_string())),
        ("selection_variant", args.selection_variant.clone()),
        ("mutation", args.mutation.clone()),
    ];
    for (k, v) in flag_values.into_iter().chain(overrides.iter().cloned()) {
        if let Some(v) = v {
            pairs.insert(k.to_string(), v);
        }
    }

    let mut seed_generated = false;
    if !pairs.contains_key("seed") {
        let seed = match std::env::var(SEED_ENV) {
            Ok(v) => v.trim().parse::<u64>().with_context(|| format!("{SEED_ENV} must be a u64, got '{v}'"))?,
            Err(_) => {
                seed_generated = true;
                fresh_seed()
            }
        };
        pairs.insert("seed".into(), seed.to_string());
    }

    let mut config = GaConfig::default();
    let mut extra = BTreeMap::new();
    // function and dimension each rebuild the objective, keeping the other
    for (k, v) in pairs {
        let all_functions = k == "function" && v == "all";
        if all_functions || !config.set(&k, &v)? {
            extra.insert(k, v);
        }
    }
    Ok(Settings { config, extra, seed_generated })
}

fn fresh_seed() -> u64 {
    let nanos = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_nanos()).unwrap_or_default();
    mix64(nanos as u64 ^ u64::from(std::process::id()).rotate_left(32))
}

pub fn unix_time() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or_default()
}

pub fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>>
where
    T::Err: std::fmt::Display,
{
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<T>().map_err(|e| anyhow::anyhow!("bad {what} '{s}': {e}")))
        .collect()
}
