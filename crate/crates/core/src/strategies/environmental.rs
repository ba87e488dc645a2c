use super::prediction::{center_point, predict_ndset};
use super::StrategyState;
use crate::error::{Error, Result};
use crate::optimizer::{evaluate_all, uniform_vectors};
use crate::problems::ProblemSpec;
use crate::rng::RngStream;
use crate::types::{Bounds, Individual, Population};

#[derive(Debug, Clone, PartialEq)]
pub struct EnvResponseConfig {
    /// Memory-set size.
    pub nmem: usize,
    /// Variance of the Gaussian perturbation.
    pub d: f64,
}

impl Default for EnvResponseConfig {
    fn default() -> Self {
        Self { nmem: 10, d: 0.1 }
    }
}

impl EnvResponseConfig {
    pub fn validate(&self, npop: usize) -> Result<()> {
        if self.nmem >= npop {
            return Err(Error::Parameter(format!(
                "Nmem ({}) must be smaller than Npop ({npop})",
                self.nmem
            )));
        }
        if !(self.d.is_finite() && self.d >= 0.0) {
            return Err(Error::Parameter(format!("invalid perturbation variance {}", self.d)));
        }
        Ok(())
    }
}

/// Slot allocation of one environmental response.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResponseSizes {
    pub nnd: usize,
    pub nmem: usize,
    pub ndiv: usize,
}

/// Caps the predicted set at `npop - nmem` and fills the rest with random
/// individuals.
pub fn plan_sizes(ndset_len: usize, nmem: usize, npop: usize) -> Result<ResponseSizes> {
    if nmem > npop {
        return Err(Error::Parameter(format!("Nmem ({nmem}) exceeds Npop ({npop})")));
    }
    let nnd = ndset_len.min(npop - nmem);
    Ok(ResponseSizes {
        nnd,
        nmem,
        ndiv: npop - nnd - nmem,
    })
}

/// `nmem` distinct members drawn without replacement.
pub fn memory_select(pop: &Population, nmem: usize, rng: &mut RngStream) -> Result<Vec<Individual>> {
    if nmem > pop.len() {
        return Err(Error::Parameter(format!(
            "cannot draw {nmem} memory individuals from {}",
            pop.len()
        )));
    }
    Ok(rng
        .sample_indices(pop.len(), nmem)
        .into_iter()
        .map(|i| pop.members[i].clone())
        .collect())
}

/// `ndiv` uniform random decision vectors.
pub fn diversity_fill(ndiv: usize, bounds: &Bounds, rng: &mut RngStream) -> Vec<Vec<f64>> {
    uniform_vectors(ndiv, bounds, rng)
}

/// Prediction of the non-dominated set, memory and uniform diversity, all
/// evaluated at `t_new`.
pub fn environmental_response(
    state: &StrategyState,
    pop: &Population,
    problem: &ProblemSpec,
    t_new: f64,
    npop: usize,
    cfg: &EnvResponseConfig,
    rng: &mut RngStream,
) -> Result<Population> {
    cfg.validate(npop)?;
    if state.ndset_curr.is_empty() {
        return Err(Error::EmptyInput("non-dominated set of the ended environment"));
    }
    let c_t = center_point(&state.ndset_curr)?;
    let c_prev = if state.ndset_prev.is_empty() {
        c_t.clone()
    } else {
        center_point(&state.ndset_prev)?
    };
    let mut predicted = predict_ndset(&state.ndset_curr, &c_t, &c_prev, cfg.d, &problem.bounds, rng)?;

    let nmem = cfg.nmem.min(pop.len());
    let sizes = plan_sizes(predicted.len(), nmem, npop)?;
    if predicted.len() > sizes.nnd {
        let keep = rng.sample_indices(predicted.len(), sizes.nnd);
        let mut slots: Vec<Option<Vec<f64>>> = predicted.into_iter().map(Some).collect();
        predicted = keep.into_iter().filter_map(|i| slots[i].take()).collect();
    }

    let mut xs = predicted;
    xs.extend(memory_select(pop, sizes.nmem, rng)?.into_iter().map(|ind| ind.x));
    xs.extend(diversity_fill(sizes.ndiv, &problem.bounds, rng));
    Population::new(evaluate_all(problem, xs, t_new)?, npop)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optimizer::random_population;
    use proptest::prelude::*;

    #[test]
    fn size_examples() {
        assert_eq!(
            plan_sizes(95, 10, 100).unwrap(),
            ResponseSizes { nnd: 90, nmem: 10, ndiv: 0 }
        );
        assert_eq!(
            plan_sizes(60, 10, 100).unwrap(),
            ResponseSizes { nnd: 60, nmem: 10, ndiv: 30 }
        );
    }

    #[test]
    fn memory_edge_cases() {
        let problem = ProblemSpec::by_name("FDA1").unwrap();
        let pop = random_population(&problem, 12, 0.0, &mut RngStream::new(0)).unwrap();
        assert!(memory_select(&pop, 0, &mut RngStream::new(1)).unwrap().is_empty());
        let mut all = memory_select(&pop, 12, &mut RngStream::new(1)).unwrap();
        all.sort_by(|a, b| a.x[0].total_cmp(&b.x[0]));
        let mut expected = pop.members.clone();
        expected.sort_by(|a, b| a.x[0].total_cmp(&b.x[0]));
        assert_eq!(all, expected);
        assert_eq!(
            memory_select(&pop, 5, &mut RngStream::new(9)).unwrap(),
            memory_select(&pop, 5, &mut RngStream::new(9)).unwrap()
        );
        assert!(memory_select(&pop, 13, &mut RngStream::new(1)).is_err());
    }

    #[test]
    fn diversity_statistics() {
        let b = Bounds::new(vec![0.0, -1.0], vec![1.0, 3.0]).unwrap();
        let mut rng = RngStream::new(10);
        assert!(diversity_fill(0, &b, &mut rng).is_empty());
        let draws = diversity_fill(10_000, &b, &mut rng);
        for k in 0..2 {
            let (lo, hi) = (b.low()[k], b.up()[k]);
            let mean = draws.iter().map(|x| x[k]).sum::<f64>() / 10_000.0;
            let sigma = (hi - lo) / 12f64.sqrt() / 100.0;
            assert!((mean - 0.5 * (lo + hi)).abs() < 3.0 * sigma);
            assert!(draws.iter().all(|x| x[k] >= lo && x[k] <= hi));
        }
    }

    #[test]
    fn first_change_uses_zero_translation() {
        let problem = ProblemSpec::by_name("FDA1").unwrap();
        let pop = random_population(&problem, 20, 0.0, &mut RngStream::new(2)).unwrap();
        let mut state = StrategyState::new();
        state.record_change(&pop).unwrap();
        let cfg = EnvResponseConfig { nmem: 0, d: 0.0 };
        let out = environmental_response(&state, &pop, &problem, 0.1, 20, &cfg, &mut RngStream::new(3)).unwrap();
        for nd in &state.ndset_curr {
            assert!(out.iter().any(|ind| ind.x == nd.x));
        }
    }

    proptest! {
        #[test]
        fn size_identity(ndset in 0usize..300, nmem in 0usize..100, extra in 0usize..200) {
            let npop = nmem + extra;
            let s = plan_sizes(ndset, nmem, npop).unwrap();
            prop_assert_eq!(s.nnd + s.nmem + s.ndiv, npop);
            prop_assert!(s.nnd <= ndset);
        }

        #[test]
        fn response_contract(seed in any::<u64>(), npop in 12usize..60, nmem in 0usize..12) {
            let problem = ProblemSpec::by_name("dMOP2").unwrap();
            let mut rng = RngStream::new(seed);
            let mut state = StrategyState::new();
            state.record_change(&random_population(&problem, npop, 0.0, &mut rng).unwrap()).unwrap();
            let pop = random_population(&problem, npop, 0.1, &mut rng).unwrap();
            state.record_change(&pop).unwrap();
            let cfg = EnvResponseConfig { nmem, d: 0.1 };
            let out = environmental_response(&state, &pop, &problem, 0.2, npop, &cfg, &mut rng).unwrap();
            prop_assert_eq!(out.len(), npop);
            for ind in &out {
                prop_assert!(problem.bounds.contains(&ind.x));
                prop_assert_eq!(ind.eval_time, 0.2);
            }
        }
    }
}
