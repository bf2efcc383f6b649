//! `netga`: runs, topology panels, parameter sweeps, the standard-GA
//! comparison and network statistics for networked genetic algorithms.

mod output;
mod settings;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use netga_core::harness::{
    self, compare, comparison_csv, netstats_csv, network_stats, panel_csv, render_comparison, run_topology_panel,
    standard_runs, SweepAxis, SweepSpec, DEFAULT_REPETITIONS, DEFAULT_SNAPSHOTS,
};
use netga_core::parallel::with_workers;
use netga_core::{run, Function, GaConfig, Topology};

use output::write_outputs;
use settings::{parse_list, resolve, unix_time, RunArgs, Settings};

const DEFAULT_PANEL: &str = "empty,complete,star,er:0.5,ba:25";

#[derive(Debug, Parser)]
#[command(name = "netga", version, about = "Networked genetic algorithm experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// One run; writes the per-generation trace
    Run(RunCmd),
    /// Repeated runs per topology; writes averaged traces
    Panel(PanelCmd),
    /// Sweep ER p or BA m; writes per-run snapshots and polynomial fits
    Sweep(SweepCmd),
    /// Standard GA against the best ER and BA networks
    Compare(CompareCmd),
    /// Density, connectivity and path length over an ER or BA grid
    Netstats(NetstatsCmd),
}

#[derive(Debug, Args)]
struct Common {
    /// Output directory
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Worker threads for independent runs
    #[arg(long)]
    workers: Option<usize>,
    /// Repetitions per grid value or topology
    #[arg(long)]
    reps: Option<String>,
}

#[derive(Debug, Args)]
struct RunCmd {
    #[command(flatten)]
    run: RunArgs,
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct PanelCmd {
    #[command(flatten)]
    run: RunArgs,
    #[command(flatten)]
    common: Common,
    /// Comma-separated topologies [default: empty,complete,star,er:0.5,ba:25]
    #[arg(long)]
    topologies: Option<String>,
}

#[derive(Debug, Args)]
struct SweepCmd {
    #[command(flatten)]
    run: RunArgs,
    #[command(flatten)]
    common: Common,
    /// p (Erdős–Rényi link probability) or m (Barabási–Albert attachment)
    #[arg(long)]
    axis: Option<String>,
    /// Comma-separated snapshot generations [default: 20,50,100]
    #[arg(long)]
    snapshots: Option<String>,
}

#[derive(Debug, Args)]
struct CompareCmd {
    #[command(flatten)]
    run: RunArgs,
    #[command(flatten)]
    common: Common,
    /// Comma-separated snapshot generations [default: 20,50,100]
    #[arg(long)]
    snapshots: Option<String>,
}

#[derive(Debug, Args)]
struct NetstatsCmd {
    #[command(flatten)]
    run: RunArgs,
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    axis: Option<String>,
}

/// Failures split by exit code: bad input (2) or failed execution (1).
enum Failure {
    Usage(anyhow::Error),
    Runtime(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Runtime(e)
    }
}

fn usage<T>(r: Result<T>) -> std::result::Result<T, Failure> {
    r.map_err(Failure::Usage)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(cmd) => cmd_run(cmd),
        Command::Panel(cmd) => cmd_panel(cmd),
        Command::Sweep(cmd) => cmd_sweep(cmd),
        Command::Compare(cmd) => cmd_compare(cmd),
        Command::Netstats(cmd) => cmd_netstats(cmd),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("usage error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

struct Manifest(String);

impl Manifest {
    fn new(command: &str) -> Self {
        let mut m = Manifest(String::new());
        m.push("command", command);
        m.push("version", env!("CARGO_PKG_VERSION"));
        m.push("timestamp", unix_time());
        m
    }

    fn push(&mut self, key: &str, value: impl std::fmt::Display) {
        writeln!(self.0, "{key} = {value}").expect("write to String");
    }

    fn config(&mut self, config: &GaConfig, skip: &[&str]) {
        for line in config.to_kv().lines() {
            if !skip.iter().any(|k| line.starts_with(&format!("{k} "))) {
                self.0.push_str(line);
                self.0.push('\n');
            }
        }
    }
}

fn announce_seed(settings: &Settings) {
    let note = if settings.seed_generated { " (generated)" } else { "" };
    println!("seed: {}{note}", settings.config.seed);
}

fn workers(common: &Common, settings: &Settings) -> Result<usize> {
    let from_file = settings.extra("workers").map(str::parse::<usize>).transpose().context("workers")?;
    let default = std::thread::available_parallelism().map(usize::from).unwrap_or(1);
    Ok(common.workers.or(from_file).unwrap_or(default).max(1))
}

fn repetitions(settings: &Settings) -> Result<usize> {
    let reps = settings.extra("reps").map(str::parse::<usize>).transpose().context("reps must be an integer")?;
    let reps = reps.unwrap_or(DEFAULT_REPETITIONS);
    if reps == 0 {
        bail!("reps must be at least 1");
    }
    Ok(reps)
}

fn axis_for(settings: &Settings) -> Result<SweepAxis> {
    match settings.extra("axis") {
        Some("p") => Ok(SweepAxis::default_p()),
        Some("m") => Ok(SweepAxis::default_m(settings.config.n)),
        Some(other) => bail!("unknown axis '{other}' (expected p or m)"),
        None => bail!("--axis is required (p or m)"),
    }
}

fn cmd_run(cmd: RunCmd) -> std::result::Result<(), Failure> {
    let settings = usage(resolve(&cmd.run, &[]))?;
    let config = &settings.config;
    usage(config.validate().map_err(anyhow::Error::from))?;
    announce_seed(&settings);
    let trace = run(config).context("run failed")?;

    let mut manifest = Manifest::new("run");
    manifest.config(config, &[]);
    manifest.push("outputs", "trace.csv");
    write_outputs(&cmd.out, &[("trace.csv", trace.to_csv()), ("manifest.txt", manifest.0)])?;

    let last = trace.final_record();
    println!(
        "function {} topology {} t {}: mean fitness {} best fitness {} seed {}",
        config.objective.function, config.topology, last.t, last.mean_fitness, last.best_fitness, config.seed
    );
    Ok(())
}

fn cmd_panel(cmd: PanelCmd) -> std::result::Result<(), Failure> {
    let overrides = [("reps", cmd.common.reps.clone()), ("topologies", cmd.topologies.clone())];
    let settings = usage(resolve(&cmd.run, &overrides))?;
    let (reps, workers, topologies) = usage((|| {
        let topologies: Vec<Topology> =
            parse_list(settings.extra("topologies").unwrap_or(DEFAULT_PANEL), "topology")?;
        if topologies.is_empty() {
            bail!("no topologies given");
        }
        for t in &topologies {
            t.validate(settings.config.n)?;
        }
        settings.config.validate()?;
        Ok((repetitions(&settings)?, workers(&cmd.common, &settings)?, topologies))
    })())?;
    announce_seed(&settings);
    let config = &settings.config;
    let panel = with_workers(workers, |exec| run_topology_panel(config, &topologies, reps, config.seed, exec))
        .context("panel failed")?;

    let mut manifest = Manifest::new("panel");
    manifest.config(config, &["topology"]);
    manifest.push("topologies", topologies.iter().map(Topology::to_string).collect::<Vec<_>>().join(","));
    manifest.push("reps", reps);
    manifest.push("outputs", "panel.csv");
    write_outputs(
        &cmd.common.out,
        &[("panel.csv", panel_csv(config.objective.function, &panel)), ("manifest.txt", manifest.0)],
    )?;
    for trace in &panel {
        println!("{:<10} final mean fitness {}", trace.topology.to_string(), trace.final_value());
    }
    Ok(())
}

fn sweep_spec(settings: &Settings, function: Function, axis: SweepAxis) -> Result<SweepSpec> {
    let snapshots = match settings.extra("snapshots") {
        Some(list) => parse_list(list, "snapshot")?,
        None => DEFAULT_SNAPSHOTS.to_vec(),
    };
    let base = GaConfig { objective: netga_core::ObjectiveSpec::new(function, settings.config.objective.dimension)?, ..settings.config.clone() };
    let spec = SweepSpec { base, axis, repetitions: repetitions(settings)?, snapshots, master_seed: settings.config.seed };
    spec.validate()?;
    Ok(spec)
}

fn cmd_sweep(cmd: SweepCmd) -> std::result::Result<(), Failure> {
    let overrides = [
        ("reps", cmd.common.reps.clone()),
        ("axis", cmd.axis.clone()),
        ("snapshots", cmd.snapshots.clone()),
    ];
    let settings = usage(resolve(&cmd.run, &overrides))?;
    let (spec, workers) = usage((|| {
        let spec = sweep_spec(&settings, settings.config.objective.function, axis_for(&settings)?)?;
        Ok((spec, workers(&cmd.common, &settings)?))
    })())?;
    announce_seed(&settings);
    let result = with_workers(workers, |exec| harness::sweep(&spec, exec)).context("sweep failed")?;

    let mut manifest = Manifest::new("sweep");
    manifest.config(&spec.base, &["topology"]);
    manifest.push("axis", spec.axis.label());
    manifest.push("reps", spec.repetitions);
    manifest.push("snapshots", spec.snapshots.iter().map(usize::to_string).collect::<Vec<_>>().join(","));
    manifest.push("fit_basis", "grid_means");
    manifest.push("outputs", "sweep.csv,fits.csv");
    write_outputs(
        &cmd.common.out,
        &[("sweep.csv", result.to_csv()), ("fits.csv", result.fits_csv()), ("manifest.txt", manifest.0)],
    )?;
    println!("{} runs written to {}", result.records.len(), cmd.common.out.join("sweep.csv").display());
    for (s, t) in result.snapshots.iter().enumerate() {
        let (arg, best) = result.best(s);
        println!("t {t}: best grid mean {best} at {} = {arg}", result.axis.label());
    }
    Ok(())
}

fn cmd_compare(cmd: CompareCmd) -> std::result::Result<(), Failure> {
    let mut args = cmd.run.clone();
    if args.function.is_none() && args.config.is_none() {
        args.function = Some("all".into());
    }
    let overrides = [("reps", cmd.common.reps.clone()), ("snapshots", cmd.snapshots.clone())];
    let settings = usage(resolve(&args, &overrides))?;
    let functions: Vec<Function> = match settings.extra("function") {
        Some("all") => Function::ALL.to_vec(),
        _ => vec![settings.config.objective.function],
    };
    let (jobs, workers) = usage((|| {
        let jobs = functions
            .iter()
            .map(|&f| {
                let er = sweep_spec(&settings, f, SweepAxis::default_p())?;
                let ba = sweep_spec(&settings, f, SweepAxis::default_m(settings.config.n))?;
                Ok((er, ba))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((jobs, workers(&cmd.common, &settings)?))
    })())?;
    announce_seed(&settings);

    let mut tables = Vec::new();
    let mut files: Vec<(String, String)> = Vec::new();
    for (er_spec, ba_spec) in &jobs {
        let function = er_spec.function();
        let (er, ba, ga) = with_workers(workers, |exec| -> Result<_> {
            let er = harness::sweep(er_spec, exec)?;
            let ba = harness::sweep(ba_spec, exec)?;
            let ga = standard_runs(&er_spec.base, er_spec.repetitions, &er_spec.snapshots, er_spec.master_seed, exec)?;
            Ok((er, ba, ga))
        })
        .with_context(|| format!("comparison runs for {function} failed"))?;
        tables.push(compare(&er, &ba, &ga).map_err(|e| anyhow!(e))?);
        files.push((format!("sweep_{function}_p.csv"), er.to_csv()));
        files.push((format!("sweep_{function}_m.csv"), ba.to_csv()));
    }

    let text = render_comparison(&tables);
    let spec = &jobs[0].0;
    let mut manifest = Manifest::new("compare");
    manifest.config(&spec.base, &["topology", "function"]);
    manifest.push("function", if functions.len() > 1 { "all".to_string() } else { functions[0].to_string() });
    manifest.push("reps", spec.repetitions);
    manifest.push("snapshots", spec.snapshots.iter().map(usize::to_string).collect::<Vec<_>>().join(","));
    let mut outputs = vec!["comparison.csv".to_string(), "comparison.txt".to_string()];
    outputs.extend(files.iter().map(|(n, _)| n.clone()));
    manifest.push("outputs", outputs.join(","));

    let mut all: Vec<(&str, String)> = vec![
        ("comparison.csv", comparison_csv(&tables)),
        ("comparison.txt", text.clone()),
        ("manifest.txt", manifest.0),
    ];
    all.extend(files.iter().map(|(n, c)| (n.as_str(), c.clone())));
    write_outputs(&cmd.common.out, &all)?;
    print!("{text}");
    Ok(())
}

fn cmd_netstats(cmd: NetstatsCmd) -> std::result::Result<(), Failure> {
    let overrides = [("reps", cmd.common.reps.clone()), ("axis", cmd.axis.clone())];
    let settings = usage(resolve(&cmd.run, &overrides))?;
    let n = settings.config.n;
    let (axis, reps, workers) =
        usage((|| Ok((axis_for(&settings)?, repetitions(&settings)?, workers(&cmd.common, &settings)?)))())?;
    announce_seed(&settings);
    let records = with_workers(workers, |exec| network_stats(&axis, n, reps, settings.config.seed, exec))
        .map_err(|e| Failure::Usage(anyhow!(e)))?;

    let mut manifest = Manifest::new("netstats");
    manifest.push("n", n);
    manifest.push("seed", settings.config.seed);
    manifest.push("axis", axis.label());
    manifest.push("reps", reps);
    manifest.push("outputs", "netstats.csv");
    write_outputs(&cmd.common.out, &[("netstats.csv", netstats_csv(&axis, &records)), ("manifest.txt", manifest.0)])?;
    println!("{} networks written to {}", records.len(), cmd.common.out.join("netstats.csv").display());
    Ok(())
}
