//! A small experiment grid written to disk, then summarized with the
//! rank-sum markers against FGERS-CPS.
//!
//! cargo run --release --example experiment_grid -- /tmp/dmoea-grid

use std::path::PathBuf;

use dmoea::harness::{emit_outputs, run_experiment, summarize, ExperimentConfig};

fn main() -> dmoea::Result<()> {
    let out = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("dmoea-grid"));
    let config = ExperimentConfig {
        problems: vec!["FDA1".into(), "F5".into()],
        strategies: vec!["FGERS-CPS".into(), "CPS".into(), "RIS".into()],
        tau_t: 10,
        n_t: 10,
        n_changes: 10,
        runs: 3,
        output_dir: out,
        ..ExperimentConfig::default()
    };
    let result = run_experiment(&config)?;
    let summary = summarize(&result.records, &config.focal);
    let paths = emit_outputs(&result.records, &summary, &config)?;
    for row in &summary {
        println!(
            "{:<5} {:<10} MIGD {:.4} +- {:.4} {}{}",
            row.problem,
            row.strategy,
            row.migd_mean,
            row.migd_std.unwrap_or(f64::NAN),
            if row.best_migd { "best " } else { "" },
            row.significance_vs_focal
        );
    }
    println!("raw results in {}", paths.raw.display());
    Ok(())
}
