use super::prediction::{center_point, translate};
use crate::error::{Error, Result};
use crate::optimizer::evaluate_all;
use crate::pareto::{environmental_select, nondominated_set};
use crate::problems::ProblemSpec;
use crate::rng::RngStream;
use crate::types::Population;

#[derive(Debug, Clone, PartialEq)]
pub struct GenResponseConfig {
    pub d: f64,
    pub step_size: usize,
    /// Post-change generations to wait before predicting again.
    pub warmup_generations: usize,
}

impl GenResponseConfig {
    pub fn new(d: f64) -> Self {
        Self {
            d,
            step_size: 1,
            warmup_generations: 2,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.step_size != 1 {
            return Err(Error::Parameter("generational step size must be 1".into()));
        }
        if !(self.d.is_finite() && self.d >= 0.0) {
            return Err(Error::Parameter(format!("invalid perturbation variance {}", self.d)));
        }
        Ok(())
    }
}

impl Default for GenResponseConfig {
    fn default() -> Self {
        Self::new(0.1)
    }
}

/// Moves every member of `pop_curr` along the drift of the non-dominated
/// center between consecutive generations, then selects from the union.
pub fn generational_response(
    pop_prev: &Population,
    pop_curr: &Population,
    problem: &ProblemSpec,
    t: f64,
    cfg: &GenResponseConfig,
    rng: &mut RngStream,
) -> Result<Population> {
    cfg.validate()?;
    let c_prev = center_point(&nondominated_set(&pop_prev.members)?)?;
    let c_curr = center_point(&nondominated_set(&pop_curr.members)?)?;
    if c_prev.len() != c_curr.len() || c_curr.len() != problem.n {
        return Err(Error::Dimension {
            expected: problem.n,
            actual: if c_curr.len() != problem.n { c_curr.len() } else { c_prev.len() },
        });
    }
    let shift: Vec<f64> = c_curr.iter().zip(&c_prev).map(|(a, b)| a - b).collect();
    let predicted: Vec<Vec<f64>> = pop_curr
        .iter()
        .map(|ind| translate(&ind.x, &shift, cfg.d, &problem.bounds, rng))
        .collect();
    let mut pool = evaluate_all(problem, predicted, t)?;
    pool.extend(pop_curr.members.iter().cloned());
    environmental_select(pool, pop_curr.capacity())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optimizer::random_population;
    use crate::pareto::{dominates_objectives, nondominated_set};

    fn front(pop: &Population) -> Vec<Vec<f64>> {
        let mut f: Vec<Vec<f64>> = nondominated_set(&pop.members)
            .unwrap()
            .into_iter()
            .map(|i| i.f)
            .collect();
        f.sort_by(|a, b| a.partial_cmp(b).unwrap());
        f.dedup();
        f
    }

    #[test]
    fn degenerate_translation_keeps_front() {
        let problem = ProblemSpec::by_name("FDA1").unwrap();
        let pop = random_population(&problem, 40, 0.0, &mut RngStream::new(6)).unwrap();
        let cfg = GenResponseConfig { d: 0.0, ..GenResponseConfig::default() };
        let out = generational_response(&pop, &pop, &problem, 0.0, &cfg, &mut RngStream::new(7)).unwrap();
        assert_eq!(out.len(), 40);
        assert_eq!(front(&out), front(&pop));
    }

    #[test]
    fn output_front_weakly_dominates_input_front() {
        let problem = ProblemSpec::by_name("dMOP2").unwrap();
        let mut rng = RngStream::new(8);
        for _ in 0..20 {
            let prev = random_population(&problem, 30, 0.3, &mut rng).unwrap();
            let curr = random_population(&problem, 30, 0.3, &mut rng).unwrap();
            let out = generational_response(&prev, &curr, &problem, 0.3, &GenResponseConfig::default(), &mut rng)
                .unwrap();
            assert_eq!(out.len(), 30);
            let new_front = front(&out);
            for old in front(&curr) {
                assert!(new_front
                    .iter()
                    .any(|f| f == &old || dominates_objectives(f, &old)));
            }
        }
    }

    #[test]
    fn rejects_other_step_sizes() {
        let cfg = GenResponseConfig { step_size: 2, ..GenResponseConfig::default() };
        assert!(cfg.validate().is_err());
    }
}
