use std::fs::File;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dmoea::harness::{
    emit_outputs, emit_snapshots, read_raw_csv, run_experiment, summarize, write_summary_csv, ExperimentConfig,
    ExperimentResult, Overrides,
};
use dmoea::strategies::StrategyKind;
use dmoea::{list_problems, Error};

#[derive(Parser)]
#[command(name = "dmoea", version, about = "Dynamic multi-objective experiment runner")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the configured grid and write raw, summary and manifest files.
    Run(GridArgs),
    /// Aggregate an existing raw CSV into a summary.
    Summarize {
        /// Raw CSV to read; defaults to OUT/raw.csv.
        #[arg(long)]
        raw: Option<PathBuf>,
        #[arg(long, default_value = "results")]
        out: PathBuf,
        #[arg(long, default_value = "FGERS-CPS")]
        focal: String,
    },
    /// Run the grid and dump population snapshots only.
    Snapshot(GridArgs),
    /// Print the benchmark and strategy registries.
    List,
}

#[derive(Args)]
struct GridArgs {
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_delimiter = ',')]
    problems: Option<Vec<String>>,
    #[arg(long, value_delimiter = ',')]
    strategies: Option<Vec<String>>,
    #[arg(long = "tau-t")]
    tau_t: Option<u64>,
    #[arg(long = "n-t")]
    n_t: Option<u64>,
    #[arg(long)]
    runs: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long = "snapshot-envs", value_delimiter = ',')]
    snapshot_envs: Option<Vec<usize>>,
}

impl GridArgs {
    fn config(&self) -> Result<ExperimentConfig, Error> {
        let mut cfg = match &self.config {
            Some(path) => ExperimentConfig::load(path)?,
            None => ExperimentConfig::default(),
        };
        cfg.apply(&Overrides {
            problems: self.problems.clone(),
            strategies: self.strategies.clone(),
            tau_t: self.tau_t,
            n_t: self.n_t,
            runs: self.runs,
            base_seed: self.seed,
            output_dir: self.out.clone(),
            snapshot_envs: self.snapshot_envs.clone(),
        });
        cfg.validate()?;
        Ok(cfg)
    }
}

fn is_config_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Config(_) | Error::Parameter(_) | Error::UnknownProblem(_) | Error::UnknownStrategy(_)
    )
}

fn report_failures(result: &ExperimentResult) -> bool {
    for f in &result.failures {
        eprintln!("cell {}/{}/seed {} failed: {}", f.problem, f.strategy, f.seed, f.message);
    }
    result.failures.is_empty()
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Run(args) => {
            let cfg = args.config()?;
            let result = run_experiment(&cfg)?;
            let summary = summarize(&result.records, &cfg.focal);
            let paths = emit_outputs(&result.records, &summary, &cfg)?;
            for row in &summary {
                println!(
                    "{:<8} {:<10} MIGD {:.4e}{} MHVD {:.4e} {}",
                    row.problem,
                    row.strategy,
                    row.migd_mean,
                    if row.best_migd { "*" } else { " " },
                    row.mhvd_mean,
                    row.significance_vs_focal
                );
            }
            println!("wrote {}", paths.raw.display());
            Ok(report_failures(&result))
        }
        Command::Snapshot(args) => {
            let cfg = args.config()?;
            if cfg.snapshot_envs.is_empty() {
                return Err(Error::Config("snapshot needs --snapshot-envs".into()));
            }
            let result = run_experiment(&cfg)?;
            for path in emit_snapshots(&result.records, &cfg.output_dir)? {
                println!("{}", path.display());
            }
            Ok(report_failures(&result))
        }
        Command::Summarize { raw, out, focal } => {
            focal.parse::<StrategyKind>()?;
            let raw = raw.unwrap_or_else(|| out.join("raw.csv"));
            let file = File::open(&raw).map_err(|e| Error::Io { path: raw.clone(), source: e })?;
            let records = read_raw_csv(file).map_err(|e| Error::Config(format!("{}: {e}", raw.display())))?;
            let summary = summarize(&records, &focal);
            std::fs::create_dir_all(&out).map_err(|e| Error::Io { path: out.clone(), source: e })?;
            let path = out.join("summary.csv");
            let file = File::create(&path).map_err(|e| Error::Io { path: path.clone(), source: e })?;
            write_summary_csv(file, &summary).map_err(|e| Error::Config(e.to_string()))?;
            println!("wrote {}", path.display());
            Ok(true)
        }
        Command::List => {
            println!("{:<8} {:<6} {:>2}  linearity", "problem", "type", "m");
            for p in list_problems() {
                let change = format!("{:?}", p.change_type);
                println!("{:<8} {:<6} {:>2}  {:?}", p.name(), change, p.m, p.linearity);
            }
            println!();
            for s in StrategyKind::ALL {
                println!("{s}");
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if is_config_error(&e) { 1 } else { 2 })
        }
    }
}
