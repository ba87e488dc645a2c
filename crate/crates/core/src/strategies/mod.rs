//! Change-response strategies: the FGERS environmental and generational
//! responses, boundary repair, and the RIS/CPS/FPS/PPS baselines.

mod baselines;
mod detect;
mod environmental;
mod generational;
mod prediction;

use std::fmt;
use std::str::FromStr;

pub use baselines::{ar_forecast, cps_response, fps_response, pps_response, ris_response, PpsConfig};
pub use detect::detect_change;
pub use environmental::{
    diversity_fill, environmental_response, memory_select, plan_sizes, EnvResponseConfig, ResponseSizes,
};
pub use generational::{generational_response, GenResponseConfig};
pub use prediction::{boundary_repair, center_point, predict_ndset};

use crate::error::{Error, Result};
use crate::pareto::nondominated_set;
use crate::problems::ProblemSpec;
use crate::rng::RngStream;
use crate::types::{Individual, Population};

/// History carried between generations and environments of one run.
#[derive(Debug, Clone, Default)]
pub struct StrategyState {
    pub ndset_prev: Vec<Individual>,
    pub ndset_curr: Vec<Individual>,
    /// One center per detected change.
    pub center_series: Vec<Vec<f64>>,
    /// Per-objective minimizers followed by the center, one entry per change.
    pub anchor_series: Vec<Vec<Vec<f64>>>,
    pub pop_prev_gen: Option<Population>,
    pub center_prev_gen: Option<Vec<f64>>,
    pub generations_since_change: usize,
}

impl StrategyState {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records the final population of the environment that just ended.
    pub fn record_change(&mut self, pop: &Population) -> Result<()> {
        if pop.is_empty() {
            return Err(Error::EmptyInput("population at change"));
        }
        let nd = nondominated_set(&pop.members)?;
        let center = center_point(&nd)?;
        let m = nd[0].m();
        let mut anchors: Vec<Vec<f64>> = (0..m)
            .map(|k| {
                nd.iter()
                    .min_by(|a, b| a.f[k].total_cmp(&b.f[k]))
                    .map(|ind| ind.x.clone())
                    .expect("non-empty front")
            })
            .collect();
        anchors.push(center.clone());
        self.ndset_prev = std::mem::replace(&mut self.ndset_curr, nd);
        self.center_series.push(center);
        self.anchor_series.push(anchors);
        self.pop_prev_gen = None;
        self.center_prev_gen = None;
        self.generations_since_change = 0;
        Ok(())
    }

    /// Remembers the population that entered the current generation's
    /// optimizer step.
    pub fn remember_generation(&mut self, pop: &Population) -> Result<()> {
        let nd = nondominated_set(&pop.members)?;
        self.center_prev_gen = Some(center_point(&nd)?);
        self.pop_prev_gen = Some(pop.clone());
        self.generations_since_change += 1;
        Ok(())
    }

    /// The previous generation's population if the generational response may
    /// run now.
    pub fn generational_ready(&self, warmup: usize) -> Option<&Population> {
        if self.generations_since_change >= warmup {
            self.pop_prev_gen.as_ref()
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StrategyKind {
    Ris,
    Cps,
    Fps,
    Pps,
    FgersCps,
    /// CPS environmental response plus the generational response.
    CpsGrs,
    FpsGrs,
}

impl StrategyKind {
    pub const ALL: [StrategyKind; 7] = [
        StrategyKind::Ris,
        StrategyKind::Cps,
        StrategyKind::Fps,
        StrategyKind::Pps,
        StrategyKind::FgersCps,
        StrategyKind::CpsGrs,
        StrategyKind::FpsGrs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StrategyKind::Ris => "RIS",
            StrategyKind::Cps => "CPS",
            StrategyKind::Fps => "FPS",
            StrategyKind::Pps => "PPS",
            StrategyKind::FgersCps => "FGERS-CPS",
            StrategyKind::CpsGrs => "CPS-GRS",
            StrategyKind::FpsGrs => "FPS-GRS",
        }
    }

    pub fn uses_generational_response(self) -> bool {
        matches!(
            self,
            StrategyKind::FgersCps | StrategyKind::CpsGrs | StrategyKind::FpsGrs
        )
    }
}

impl fmt::Display for StrategyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StrategyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StrategyKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownStrategy(s.to_string()))
    }
}

/// Parameters shared by all responses.
#[derive(Debug, Clone, PartialEq)]
pub struct StrategyParams {
    pub npop: usize,
    pub env: EnvResponseConfig,
    pub gen: GenResponseConfig,
    pub pps: PpsConfig,
}

impl StrategyParams {
    pub fn new(npop: usize, nmem: usize, d: f64) -> Self {
        Self {
            npop,
            env: EnvResponseConfig { nmem, d },
            gen: GenResponseConfig::new(d),
            pps: PpsConfig { d, ..PpsConfig::default() },
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.npop == 0 {
            return Err(Error::Parameter("Npop must be positive".into()));
        }
        self.env.validate(self.npop)?;
        self.gen.validate()?;
        self.pps.validate()
    }
}

/// Runs `kind`'s environmental response. `state` must already hold the
/// record of the environment that just ended.
pub fn respond_to_change(
    kind: StrategyKind,
    state: &StrategyState,
    pop: &Population,
    problem: &ProblemSpec,
    t_new: f64,
    params: &StrategyParams,
    rng: &mut RngStream,
) -> Result<Population> {
    let npop = params.npop;
    match kind {
        StrategyKind::Ris => ris_response(npop, problem, t_new, rng),
        StrategyKind::Cps | StrategyKind::CpsGrs => {
            cps_response(state, pop, problem, t_new, npop, params.env.d, rng)
        }
        StrategyKind::Fps | StrategyKind::FpsGrs => {
            fps_response(state, pop, problem, t_new, npop, params.env.d, rng)
        }
        StrategyKind::Pps => pps_response(state, pop, problem, t_new, &params.pps, rng),
        StrategyKind::FgersCps => {
            environmental_response(state, pop, problem, t_new, npop, &params.env, rng)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optimizer::random_population;

    #[test]
    fn names_round_trip() {
        for k in StrategyKind::ALL {
            assert_eq!(k.name().parse::<StrategyKind>().unwrap(), k);
        }
        assert_eq!("fgers-cps".parse::<StrategyKind>().unwrap(), StrategyKind::FgersCps);
        assert!("SPPS".parse::<StrategyKind>().is_err());
    }

    #[test]
    fn record_change_grows_series_by_one() {
        let problem = ProblemSpec::by_name("FDA1").unwrap();
        let mut rng = RngStream::new(3);
        let mut state = StrategyState::new();
        for i in 0..4 {
            let pop = random_population(&problem, 30, 0.0, &mut rng).unwrap();
            state.record_change(&pop).unwrap();
            assert_eq!(state.center_series.len(), i + 1);
            assert_eq!(state.anchor_series[i].len(), 3);
            assert!(state.center_series[i].len() == 20);
        }
        assert!(!state.ndset_prev.is_empty());
    }

    #[test]
    fn warmup_gate() {
        let problem = ProblemSpec::by_name("FDA1").unwrap();
        let mut rng = RngStream::new(4);
        let pop = random_population(&problem, 10, 0.0, &mut rng).unwrap();
        let mut state = StrategyState::new();
        state.record_change(&pop).unwrap();
        assert!(state.generational_ready(2).is_none());
        state.remember_generation(&pop).unwrap();
        assert!(state.generational_ready(2).is_none());
        state.remember_generation(&pop).unwrap();
        assert!(state.generational_ready(2).is_some());
    }

    #[test]
    fn every_response_keeps_size_bounds_and_time() {
        let mut rng = RngStream::new(5);
        for name in ["FDA1", "FDA4", "F8"] {
            let problem = ProblemSpec::by_name(name).unwrap();
            let params = StrategyParams::new(50, 5, 0.1);
            let mut state = StrategyState::new();
            let p0 = random_population(&problem, 50, 0.0, &mut rng).unwrap();
            state.record_change(&p0).unwrap();
            let p1 = random_population(&problem, 50, 0.1, &mut rng).unwrap();
            state.record_change(&p1).unwrap();
            for kind in StrategyKind::ALL {
                let out = respond_to_change(kind, &state, &p1, &problem, 0.2, &params, &mut rng).unwrap();
                assert_eq!(out.len(), 50, "{kind} on {name}");
                assert_eq!(out.capacity(), 50);
                for ind in &out {
                    assert!(problem.bounds.contains(&ind.x), "{kind} on {name}");
                    assert_eq!(ind.eval_time, 0.2);
                }
            }
        }
    }
}
