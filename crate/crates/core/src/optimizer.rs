//! Static-stage optimizer: one generation is variation, evaluation at the
//! current time, then elitist environmental selection on parents + offspring.
//!
//! The default variation is simulated binary crossover followed by polynomial
//! mutation. Parents are paired sequentially after a random shuffle, with no
//! mating selection.

use crate::error::{Error, Result};
use crate::pareto::environmental_select;
use crate::problems::ProblemSpec;
use crate::rng::RngStream;
use crate::types::{Bounds, Individual, Population};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VariationConfig {
    pub crossover_prob: f64,
    pub crossover_index: f64,
    pub mutation_prob: f64,
    pub mutation_index: f64,
}

impl VariationConfig {
    /// SBX (index 20, probability 1) and polynomial mutation (index 20,
    /// probability `1/n`).
    pub fn for_dimension(n: usize) -> Self {
        Self {
            crossover_prob: 1.0,
            crossover_index: 20.0,
            mutation_prob: 1.0 / n.max(1) as f64,
            mutation_index: 20.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let prob_ok = |p: f64| (0.0..=1.0).contains(&p);
        if !prob_ok(self.crossover_prob) || !prob_ok(self.mutation_prob) {
            return Err(Error::Parameter(format!(
                "variation probabilities must lie in [0, 1]: {self:?}"
            )));
        }
        if !(self.crossover_index > 0.0 && self.mutation_index > 0.0) {
            return Err(Error::Parameter(format!(
                "distribution indices must be positive: {self:?}"
            )));
        }
        Ok(())
    }
}

/// Produces one offspring decision vector per parent.
pub fn vary(
    parents: &[Individual],
    bounds: &Bounds,
    cfg: &VariationConfig,
    rng: &mut RngStream,
) -> Result<Vec<Vec<f64>>> {
    cfg.validate()?;
    if parents.len() < 2 {
        return Err(Error::InsufficientParents(parents.len()));
    }
    let mut order: Vec<usize> = (0..parents.len()).collect();
    rng.shuffle(&mut order);

    let mut offspring = Vec::with_capacity(parents.len());
    for pair in order.chunks(2) {
        let (a, b) = match *pair {
            [a, b] => (a, b),
            // odd count: the leftover mates with a random partner and keeps one child
            [a] => {
                let mut b = rng.index(parents.len() - 1);
                if b >= a {
                    b += 1;
                }
                (a, b)
            }
            _ => unreachable!(),
        };
        let (mut c1, mut c2) = (parents[a].x.clone(), parents[b].x.clone());
        if rng.uniform() < cfg.crossover_prob {
            sbx(&mut c1, &mut c2, cfg.crossover_index, rng);
        }
        for child in [&mut c1, &mut c2] {
            polynomial_mutation(child, bounds, cfg, rng);
            bounds.clip(child);
        }
        offspring.push(c1);
        if pair.len() == 2 {
            offspring.push(c2);
        }
    }
    Ok(offspring)
}

fn sbx(c1: &mut [f64], c2: &mut [f64], eta: f64, rng: &mut RngStream) {
    for (y1, y2) in c1.iter_mut().zip(c2.iter_mut()) {
        if rng.uniform() > 0.5 || (*y1 - *y2).abs() <= 1e-14 {
            continue;
        }
        let u = rng.uniform();
        let beta = if u <= 0.5 {
            (2.0 * u).powf(1.0 / (eta + 1.0))
        } else {
            (1.0 / (2.0 * (1.0 - u))).powf(1.0 / (eta + 1.0))
        };
        let (p1, p2) = (*y1, *y2);
        *y1 = 0.5 * ((1.0 + beta) * p1 + (1.0 - beta) * p2);
        *y2 = 0.5 * ((1.0 - beta) * p1 + (1.0 + beta) * p2);
    }
}

fn polynomial_mutation(x: &mut [f64], bounds: &Bounds, cfg: &VariationConfig, rng: &mut RngStream) {
    let eta = cfg.mutation_index;
    let pow = 1.0 / (eta + 1.0);
    for (k, y) in x.iter_mut().enumerate() {
        if rng.uniform() >= cfg.mutation_prob {
            continue;
        }
        let (yl, yu) = (bounds.low()[k], bounds.up()[k]);
        let span = yu - yl;
        let v = y.clamp(yl, yu);
        let delta1 = (v - yl) / span;
        let delta2 = (yu - v) / span;
        let r = rng.uniform();
        let deltaq = if r <= 0.5 {
            let val = 2.0 * r + (1.0 - 2.0 * r) * (1.0 - delta1).powf(eta + 1.0);
            val.powf(pow) - 1.0
        } else {
            let val = 2.0 * (1.0 - r) + 2.0 * (r - 0.5) * (1.0 - delta2).powf(eta + 1.0);
            1.0 - val.powf(pow)
        };
        *y = v + deltaq * span;
    }
}

/// Evaluates decision vectors at `t`.
pub fn evaluate_all(problem: &ProblemSpec, xs: Vec<Vec<f64>>, t: f64) -> Result<Vec<Individual>> {
    xs.into_iter()
        .map(|x| {
            let f = problem.evaluate(&x, t)?;
            Ok(Individual::new(x, f, t))
        })
        .collect()
}

/// Uniform random population evaluated at `t`.
pub fn random_population(
    problem: &ProblemSpec,
    size: usize,
    t: f64,
    rng: &mut RngStream,
) -> Result<Population> {
    let xs = uniform_vectors(size, &problem.bounds, rng);
    Population::new(evaluate_all(problem, xs, t)?, size)
}

pub(crate) fn uniform_vectors(count: usize, bounds: &Bounds, rng: &mut RngStream) -> Vec<Vec<f64>> {
    (0..count)
        .map(|_| {
            bounds
                .low()
                .iter()
                .zip(bounds.up())
                .map(|(&l, &u)| rng.uniform_in(l, u))
                .collect()
        })
        .collect()
}

/// One generation at time `t`.
pub fn step(
    pop: &Population,
    problem: &ProblemSpec,
    t: f64,
    cfg: &VariationConfig,
    rng: &mut RngStream,
) -> Result<Population> {
    let offspring = vary(&pop.members, &problem.bounds, cfg, rng)?;
    let mut pool = pop.members.clone();
    pool.extend(evaluate_all(problem, offspring, t)?);
    environmental_select(pool, pop.capacity())
}
