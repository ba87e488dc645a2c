//! Dynamic multi-objective evolutionary optimization: benchmarks, an NSGA-II
//! style inner optimizer, change-response strategies, performance indicators
//! and an experiment harness.
//!
//! ```
//! use dmoea::{ProblemSpec, RngStream, random_population, step, VariationConfig};
//!
//! let problem = ProblemSpec::by_name("FDA1")?;
//! let mut rng = RngStream::new(7);
//! let mut pop = random_population(&problem, 20, 0.0, &mut rng)?;
//! let cfg = VariationConfig::for_dimension(problem.n);
//! pop = step(&pop, &problem, 0.0, &cfg, &mut rng)?;
//! assert_eq!(pop.len(), 20);
//! # Ok::<(), dmoea::Error>(())
//! ```

pub mod error;
pub mod harness;
pub mod metrics;
pub mod optimizer;
pub mod pareto;
pub mod problems;
pub mod rng;
pub mod strategies;
pub mod time;
pub mod types;

pub use error::{Error, Result};
pub use harness::{run_experiment, run_single, summarize, ExperimentConfig, RunRecord};
pub use metrics::{hvd, hypervolume, igd, mhvd, migd, reference_point, wilcoxon_ranksum, MetricSeries};
pub use optimizer::{random_population, step, VariationConfig};
pub use pareto::{
    crowding_distance, dominates, environmental_select, fast_nondominated_sort, nondominated_set,
};
pub use problems::{list_problems, ProblemKind, ProblemSpec};
pub use rng::RngStream;
pub use strategies::{StrategyKind, StrategyParams, StrategyState};
pub use time::{time_of, TimeContext};
pub use types::{Bounds, Individual, Population};
