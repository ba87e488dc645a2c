use nalgebra::{DMatrix, DVector};

use super::prediction::{center_point, predict_ndset, translate};
use super::StrategyState;
use crate::error::{Error, Result};
use crate::optimizer::{evaluate_all, random_population, uniform_vectors};
use crate::pareto::{environmental_select, fast_nondominated_sort, selection_order};
use crate::problems::ProblemSpec;
use crate::rng::RngStream;
use crate::types::Population;

/// Fresh uniform population.
pub fn ris_response(npop: usize, problem: &ProblemSpec, t_new: f64, rng: &mut RngStream) -> Result<Population> {
    random_population(problem, npop, t_new, rng)
}

/// Center-point prediction of the non-dominated set; the dominated part of
/// the current population fills the remaining slots.
pub fn cps_response(
    state: &StrategyState,
    pop: &Population,
    problem: &ProblemSpec,
    t_new: f64,
    npop: usize,
    d: f64,
    rng: &mut RngStream,
) -> Result<Population> {
    if state.ndset_curr.is_empty() {
        return Err(Error::EmptyInput("non-dominated set of the ended environment"));
    }
    let c_t = center_point(&state.ndset_curr)?;
    let c_prev = if state.ndset_prev.is_empty() {
        c_t.clone()
    } else {
        center_point(&state.ndset_prev)?
    };
    let mut predicted = predict_ndset(&state.ndset_curr, &c_t, &c_prev, d, &problem.bounds, rng)?;
    predicted.truncate(npop);
    let mut members = evaluate_all(problem, predicted, t_new)?;

    let rest = npop - members.len();
    if rest > 0 {
        let fronts = fast_nondominated_sort(&pop.members)?;
        let dominated: Vec<_> = fronts
            .iter()
            .skip(1)
            .flatten()
            .map(|&i| pop.members[i].x.clone())
            .collect();
        let mut pool = evaluate_all(problem, dominated, t_new)?;
        if pool.len() < rest {
            let xs = uniform_vectors(rest - pool.len(), &problem.bounds, rng);
            pool.extend(evaluate_all(problem, xs, t_new)?);
        }
        members.extend(environmental_select(pool, rest)?.members);
    }
    Population::new(members, npop)
}

/// Slot split of an FPS response.
pub(crate) fn fps_sizes(npop: usize, m: usize) -> (usize, usize, usize) {
    let predicted = (3 * (m + 1)).min(npop);
    let rest = npop - predicted;
    let inherited = (7 * rest).div_ceil(10);
    (predicted, inherited, rest - inherited)
}

/// Linear extrapolation of the anchor points (objective-wise minimizers and
/// the center), three individuals per anchor, plus the best of the current
/// population and a random share.
pub fn fps_response(
    state: &StrategyState,
    pop: &Population,
    problem: &ProblemSpec,
    t_new: f64,
    npop: usize,
    d: f64,
    rng: &mut RngStream,
) -> Result<Population> {
    let (n_pred, n_inherit, n_random) = fps_sizes(npop, problem.m);
    let history = &state.anchor_series;
    let predicted: Vec<Vec<f64>> = if history.len() >= 2 {
        let last = &history[history.len() - 1];
        let before = &history[history.len() - 2];
        let mut out = Vec::with_capacity(n_pred);
        for (a, b) in last.iter().zip(before) {
            let shift: Vec<f64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
            out.push(translate(a, &shift, 0.0, &problem.bounds, rng));
            for _ in 0..2 {
                out.push(translate(a, &shift, d, &problem.bounds, rng));
            }
        }
        out.truncate(n_pred);
        out
    } else {
        uniform_vectors(n_pred, &problem.bounds, rng)
    };

    let order = selection_order(&pop.members)?;
    let inherited: Vec<Vec<f64>> = order
        .into_iter()
        .take(n_inherit)
        .map(|i| pop.members[i].x.clone())
        .collect();
    let missing = n_inherit - inherited.len();

    let mut xs = predicted;
    xs.extend(inherited);
    xs.extend(uniform_vectors(n_random + missing, &problem.bounds, rng));
    Population::new(evaluate_all(problem, xs, t_new)?, npop)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PpsConfig {
    /// Autoregressive order.
    pub p: usize,
    /// Longest center history used in the fit.
    pub history: usize,
    pub d: f64,
}

impl Default for PpsConfig {
    fn default() -> Self {
        Self { p: 3, history: 23, d: 0.1 }
    }
}

impl PpsConfig {
    pub fn validate(&self) -> Result<()> {
        if self.p == 0 || self.history < self.p + 2 {
            return Err(Error::Parameter(format!(
                "AR order {} needs a history of at least {}",
                self.p,
                self.p + 2
            )));
        }
        if !(self.d.is_finite() && self.d >= 0.0) {
            return Err(Error::Parameter(format!("invalid perturbation variance {}", self.d)));
        }
        Ok(())
    }
}

const SINGULAR_RATIO: f64 = 1e-10;

/// Least-squares AR(`p`) one-step forecast without intercept. `None` when the
/// series is too short or the design matrix is rank deficient.
pub fn ar_forecast(series: &[f64], p: usize) -> Option<f64> {
    let len = series.len();
    if p == 0 || len < 2 * p + 1 {
        return None;
    }
    let rows = len - p;
    let design = DMatrix::from_fn(rows, p, |r, j| series[r + p - 1 - j]);
    let target = DVector::from_iterator(rows, series[p..].iter().copied());
    let svd = design.svd(true, true);
    let max = svd.singular_values.max();
    let min = svd.singular_values.min();
    if max.is_nan() || max <= 0.0 || min / max < SINGULAR_RATIO {
        return None;
    }
    let coef = svd.solve(&target, 0.0).ok()?;
    let next = (0..p).map(|j| coef[j] * series[len - 1 - j]).sum::<f64>();
    next.is_finite().then_some(next)
}

fn predict_center(series: &[Vec<f64>], cfg: &PpsConfig) -> Vec<f64> {
    let last = &series[series.len() - 1];
    let prev = &series[series.len() - 2];
    let use_ar = series.len() >= cfg.p + 2;
    let window = &series[series.len().saturating_sub(cfg.history)..];
    (0..last.len())
        .map(|k| {
            let differenced = 2.0 * last[k] - prev[k];
            if !use_ar {
                return differenced;
            }
            let column: Vec<f64> = window.iter().map(|c| c[k]).collect();
            ar_forecast(&column, cfg.p).unwrap_or(differenced)
        })
        .collect()
}

/// AR forecast of the center; the current population keeps its shape around
/// the new center.
pub fn pps_response(
    state: &StrategyState,
    pop: &Population,
    problem: &ProblemSpec,
    t_new: f64,
    cfg: &PpsConfig,
    rng: &mut RngStream,
) -> Result<Population> {
    cfg.validate()?;
    let series = &state.center_series;
    let shift = match series.len() {
        0 => return Err(Error::EmptyInput("center history")),
        1 => vec![0.0; problem.n],
        _ => {
            let next = predict_center(series, cfg);
            next.iter().zip(&series[series.len() - 1]).map(|(a, b)| a - b).collect()
        }
    };
    let xs: Vec<Vec<f64>> = pop
        .iter()
        .map(|ind| translate(&ind.x, &shift, cfg.d, &problem.bounds, rng))
        .collect();
    Population::new(evaluate_all(problem, xs, t_new)?, pop.capacity())
}
