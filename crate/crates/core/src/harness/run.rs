use std::time::Instant;

use rayon::prelude::*;

use super::config::ExperimentConfig;
use crate::error::Result;
use crate::metrics::{hvd, igd, mhvd, migd, reference_point, MetricSeries};
use crate::optimizer::{random_population, step, VariationConfig};
use crate::pareto::nondominated_set;
use crate::problems::{ProblemKind, ProblemSpec};
use crate::rng::RngStream;
use crate::strategies::{
    detect_change, generational_response, respond_to_change, StrategyKind, StrategyState,
};
use crate::time::time_of;
use crate::types::Population;

/// Indicator values at the last generation of one environment.
#[derive(Debug, Clone, PartialEq)]
pub struct EnvMeasurement {
    pub env_index: usize,
    pub t: f64,
    pub igd: f64,
    pub hvd: f64,
}

/// Final population and true-front sample of one environment.
#[derive(Debug, Clone, PartialEq)]
pub struct SnapshotRecord {
    pub problem: String,
    pub strategy: String,
    pub seed: u64,
    pub env_index: usize,
    pub population: Vec<Vec<f64>>,
    pub pf: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub problem: String,
    pub strategy: String,
    pub seed: u64,
    pub tau_t: u64,
    pub n_t: u64,
    pub per_env: Vec<EnvMeasurement>,
    pub migd: f64,
    pub mhvd: f64,
    /// Generations at which a change was detected.
    pub change_generations: Vec<u64>,
    pub snapshots: Vec<SnapshotRecord>,
    pub wall_time_ms: u128,
}

impl RunRecord {
    /// Equality ignoring wall time.
    pub fn same_results(&self, other: &RunRecord) -> bool {
        RunRecord {
            wall_time_ms: 0,
            ..self.clone()
        } == RunRecord {
            wall_time_ms: 0,
            ..other.clone()
        }
    }
}

/// One run of `strategy` on `problem` from `seed`.
pub fn run_single(
    problem: ProblemKind,
    strategy: StrategyKind,
    config: &ExperimentConfig,
    seed: u64,
) -> Result<RunRecord> {
    config.validate()?;
    let started = Instant::now();
    let spec = ProblemSpec::new(problem, config.dimension)?.with_severity(config.n_t);
    let params = config.strategy_params();
    let variation = VariationConfig::for_dimension(spec.n);
    let (tau_t, n_t) = (config.tau_t, config.n_t);

    let root = RngStream::new(seed);
    let mut init_rng = root.substream("init");
    let mut variation_rng = root.substream("variation");
    let mut strategy_rng = root.substream("strategy");
    let mut detection_rng = root.substream("detection");

    let mut pop = random_population(&spec, config.npop, 0.0, &mut init_rng)?;
    let mut state = StrategyState::new();
    let mut per_env = Vec::with_capacity(config.n_changes as usize);
    let mut change_generations = Vec::new();
    let mut snapshots = Vec::new();
    let pf_size = match config.pf_sample_size {
        0 => spec.default_pf_size(),
        k => k,
    };

    for tau in 0..config.total_generations() {
        let t = time_of(tau, tau_t, n_t)?;
        let changed = tau > 0
            && detect_change(&pop, &spec, t, config.detection_fraction, &mut detection_rng)?;
        if changed {
            change_generations.push(tau);
            state.record_change(&pop)?;
            pop = respond_to_change(strategy, &state, &pop, &spec, t, &params, &mut strategy_rng)?;
        } else if strategy.uses_generational_response() {
            if let Some(prev) = state.generational_ready(params.gen.warmup_generations) {
                pop = generational_response(prev, &pop, &spec, t, &params.gen, &mut strategy_rng)?;
            }
        }
        state.remember_generation(&pop)?;
        pop = step(&pop, &spec, t, &variation, &mut variation_rng)?;

        if !(tau + 1).is_multiple_of(tau_t) {
            continue;
        }
        let env = (tau / tau_t) as usize;
        let measure = env >= 1 && env as u64 <= config.n_changes;
        let snapshot = config.snapshot_envs.contains(&env);
        if !(measure || snapshot) {
            continue;
        }
        let pf = spec.true_pf(t, pf_size)?;
        let front = front_objectives(&pop)?;
        if measure {
            per_env.push(EnvMeasurement {
                env_index: env,
                t,
                igd: igd(&pf.points, &front)?,
                hvd: hvd(&pf.points, &front, &reference_point(&pf.z))?,
            });
        }
        if snapshot {
            snapshots.push(SnapshotRecord {
                problem: spec.name().to_string(),
                strategy: strategy.name().to_string(),
                seed,
                env_index: env,
                population: pop.objectives(),
                pf: pf.points,
            });
        }
    }

    let igds: MetricSeries = per_env.iter().map(|e| e.igd).collect();
    let hvds: MetricSeries = per_env.iter().map(|e| e.hvd).collect();
    Ok(RunRecord {
        problem: spec.name().to_string(),
        strategy: strategy.name().to_string(),
        seed,
        tau_t,
        n_t,
        migd: migd(&igds)?,
        mhvd: mhvd(&hvds)?,
        per_env,
        change_generations,
        snapshots,
        wall_time_ms: started.elapsed().as_millis(),
    })
}

fn front_objectives(pop: &Population) -> Result<Vec<Vec<f64>>> {
    Ok(nondominated_set(&pop.members)?.into_iter().map(|i| i.f).collect())
}

/// A grid cell that failed at runtime.
#[derive(Debug, Clone, PartialEq)]
pub struct CellFailure {
    pub problem: String,
    pub strategy: String,
    pub seed: u64,
    pub message: String,
}

#[derive(Debug, Clone, Default)]
pub struct ExperimentResult {
    /// In grid order: problem, then strategy, then run.
    pub records: Vec<RunRecord>,
    pub failures: Vec<CellFailure>,
}

/// Every (problem, strategy, run) cell, in parallel. Run `r` uses seed
/// `base_seed + r` for every strategy.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentResult> {
    config.validate()?;
    let problems = config.problem_kinds()?;
    let strategies = config.strategy_kinds()?;
    let cells: Vec<(ProblemKind, StrategyKind, u64)> = problems
        .iter()
        .flat_map(|&p| {
            strategies.iter().flat_map(move |&s| {
                (0..config.runs).map(move |r| (p, s, config.base_seed.wrapping_add(r)))
            })
        })
        .collect();
    let outcomes: Vec<_> = cells
        .par_iter()
        .map(|&(p, s, seed)| (p, s, seed, run_single(p, s, config, seed)))
        .collect();

    let mut result = ExperimentResult::default();
    for (p, s, seed, outcome) in outcomes {
        match outcome {
            Ok(record) => result.records.push(record),
            Err(e) => result.failures.push(CellFailure {
                problem: p.name().to_string(),
                strategy: s.name().to_string(),
                seed,
                message: e.to_string(),
            }),
        }
    }
    Ok(result)
}
