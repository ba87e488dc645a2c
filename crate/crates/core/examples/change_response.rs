//! A short dynamic run per strategy on dMOP2, printing the IGD at the end of
//! each environment.
//!
//! cargo run --release --example change_response

use dmoea::harness::{run_single, ExperimentConfig};
use dmoea::problems::ProblemKind;
use dmoea::strategies::StrategyKind;

fn main() -> dmoea::Result<()> {
    let config = ExperimentConfig {
        tau_t: 10,
        n_t: 10,
        n_changes: 12,
        ..ExperimentConfig::default()
    };
    for strategy in StrategyKind::ALL {
        let record = run_single(ProblemKind::Dmop2, strategy, &config, 7)?;
        let trace: Vec<String> = record.per_env.iter().map(|e| format!("{:.3}", e.igd)).collect();
        println!(
            "{:<10} MIGD {:.4} ({} ms)  {}",
            record.strategy,
            record.migd,
            record.wall_time_ms,
            trace.join(" ")
        );
    }
    Ok(())
}
