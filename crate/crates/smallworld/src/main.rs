//! Command-line driver: builds topologies for a scenario and writes CSVs.
//!
//! Exit codes: 0 on success, 2 for configuration or argument problems,
//! 3 when an output file cannot be written.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use smallworld::experiments::{
    build_topology, builtin_scenario, default_ratio_grid, run_scenario, sweep_channels,
    sweep_radii_ratio, ScenarioConfig,
};
use smallworld::geometry::{generate_nodes, LayoutParams};
use smallworld::metrics::MetricsReport;
use smallworld::output::{
    render_edges_csv, render_metrics_csv, render_nodes_csv, render_sweep_csv,
};

#[derive(Parser)]
#[command(
    name = "smallworld",
    version,
    about = "Small-world topology construction and measurement for multi-channel wireless networks"
)]
struct Cli {
    /// Worker threads for parallel seed runs (0 = one per core).
    #[arg(long, global = true, default_value_t = 0, value_name = "N")]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate node layouts; writes one nodes CSV per seed.
    Gen(JobArgs),
    /// Build topologies and measure them; writes metrics.csv.
    Run(JobArgs),
    /// Sweep the short-cut channel count; writes sweep_k.csv.
    #[command(name = "sweep-k")]
    SweepK {
        #[command(flatten)]
        job: JobArgs,
        /// Largest channel count to sweep to (default: the scenario's k).
        #[arg(long, value_name = "K")]
        k_max: Option<usize>,
    },
    /// Sweep the short-cut radius bound; writes sweep_ratio.csv.
    #[command(name = "sweep-ratio")]
    SweepRatio {
        #[command(flatten)]
        job: JobArgs,
        /// Comma-separated radius bounds, each > 1 (default: a standard grid
        /// ending at the area diagonal over r0).
        #[arg(long, value_name = "LIST")]
        ratios: Option<String>,
    },
    /// Build topologies and dump them; writes nodes and edges CSVs per seed.
    #[command(name = "dump-topology")]
    DumpTopology(JobArgs),
}

#[derive(Args)]
struct JobArgs {
    /// Scenario config file (`key = value` lines).
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Built-in scenario name, e.g. Random-40.
    #[arg(long, value_name = "NAME")]
    scenario: Option<String>,
    /// Output directory (created if missing).
    #[arg(long, default_value = "out", value_name = "DIR")]
    out: PathBuf,
    /// Override a config key, e.g. --set k=5 (repeatable).
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
}

enum CliError {
    /// Bad arguments, config, or environment — exit 2.
    Input(String),
    /// An output file could not be written — exit 3.
    Output(String),
}

impl From<smallworld::Error> for CliError {
    fn from(e: smallworld::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

fn main() {
    let cli = Cli::parse();
    if cli.threads > 0 {
        // Ignore failure: the global pool can only be set once.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global();
    }
    if let Err(e) = dispatch(cli.command) {
        let (code, msg) = match e {
            CliError::Input(m) => (2, m),
            CliError::Output(m) => (3, m),
        };
        eprintln!("error: {msg}");
        std::process::exit(code);
    }
}

fn dispatch(command: Command) -> Result<(), CliError> {
    match command {
        Command::Gen(job) => {
            let cfg = resolve_config(&job)?;
            ensure_dir(&job.out)?;
            for &seed in &cfg.seeds {
                let nodes = generate_nodes(
                    cfg.distribution,
                    cfg.n,
                    cfg.area_side,
                    seed,
                    LayoutParams::default(),
                )?;
                let path = job.out.join(format!("{}_s{seed}_nodes.csv", cfg.name));
                write_file(&path, &render_nodes_csv(&nodes))?;
            }
            Ok(())
        }
        Command::Run(job) => {
            let cfg = resolve_config(&job)?;
            ensure_dir(&job.out)?;
            let entries: Vec<(u64, MetricsReport)> = cfg
                .seeds
                .par_iter()
                .map(|&seed| run_scenario(&cfg, seed).map(|r| (seed, r)))
                .collect::<Result<_, _>>()?;
            let csv = render_metrics_csv(&cfg.name, cfg.k, cfg.radii_ratio, cfg.alpha, &entries);
            write_file(&job.out.join("metrics.csv"), &csv)
        }
        Command::SweepK { job, k_max } => {
            let cfg = resolve_config(&job)?;
            ensure_dir(&job.out)?;
            let series = sweep_channels(&cfg, k_max.unwrap_or(cfg.k))?;
            write_file(&job.out.join("sweep_k.csv"), &render_sweep_csv(&series))
        }
        Command::SweepRatio { job, ratios } => {
            let cfg = resolve_config(&job)?;
            ensure_dir(&job.out)?;
            let grid = match ratios {
                Some(list) => parse_ratio_list(&list)?,
                None => default_ratio_grid(cfg.r0, cfg.area_side),
            };
            let series = sweep_radii_ratio(&cfg, &grid)?;
            write_file(&job.out.join("sweep_ratio.csv"), &render_sweep_csv(&series))
        }
        Command::DumpTopology(job) => {
            let cfg = resolve_config(&job)?;
            ensure_dir(&job.out)?;
            for &seed in &cfg.seeds {
                let topology = build_topology(&cfg, seed, cfg.k, cfg.radii_ratio)?;
                let stem = format!("{}_s{seed}", cfg.name);
                write_file(
                    &job.out.join(format!("{stem}_nodes.csv")),
                    &render_nodes_csv(topology.nodes()),
                )?;
                write_file(
                    &job.out.join(format!("{stem}_edges.csv")),
                    &render_edges_csv(&topology),
                )?;
            }
            Ok(())
        }
    }
}

/// Loads the scenario (file or built-in), applies `--set` overrides, then the
/// `SMALLWORLD_SEED` environment variable (which narrows the run to exactly
/// that seed).
fn resolve_config(job: &JobArgs) -> Result<ScenarioConfig, CliError> {
    let mut cfg = match (&job.config, &job.scenario) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                CliError::Input(format!("cannot read config {}: {e}", path.display()))
            })?;
            ScenarioConfig::parse(&text)?
        }
        (None, Some(name)) => builtin_scenario(name).ok_or_else(|| {
            CliError::Input(format!(
                "unknown scenario `{name}`; built-ins: {}",
                smallworld::builtin_scenarios()
                    .iter()
                    .map(|c| c.name.as_str())
                    .collect::<Vec<_>>()
                    .join(", ")
            ))
        })?,
        _ => {
            return Err(CliError::Input(
                "use exactly one of --config or --scenario".into(),
            ))
        }
    };

    for pair in &job.set {
        let (key, value) = pair
            .split_once('=')
            .ok_or_else(|| CliError::Input(format!("--set expects KEY=VALUE, got `{pair}`")))?;
        cfg.apply_override(key.trim(), value.trim())?;
    }

    match std::env::var("SMALLWORLD_SEED") {
        Ok(raw) => {
            let seed: u64 = raw.trim().parse().map_err(|_| {
                CliError::Input(format!(
                    "SMALLWORLD_SEED must be an unsigned integer, got `{raw}`"
                ))
            })?;
            cfg.seeds = vec![seed];
        }
        Err(std::env::VarError::NotPresent) => {}
        Err(e) => return Err(CliError::Input(format!("SMALLWORLD_SEED: {e}"))),
    }

    cfg.validate()?;
    Ok(cfg)
}

fn parse_ratio_list(list: &str) -> Result<Vec<f64>, CliError> {
    let grid: Vec<f64> = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<f64>()
                .map_err(|e| CliError::Input(format!("--ratios entry `{s}`: {e}")))
        })
        .collect::<Result<_, _>>()?;
    if grid.is_empty() {
        return Err(CliError::Input("--ratios lists no values".into()));
    }
    Ok(grid)
}

fn ensure_dir(dir: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(dir)
        .map_err(|e| CliError::Output(format!("cannot create {}: {e}", dir.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents)
        .map_err(|e| CliError::Output(format!("cannot write {}: {e}", path.display())))?;
    println!("wrote {}", path.display());
    Ok(())
}
