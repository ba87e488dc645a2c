use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problems::{ProblemKind, DEFAULT_DIMENSION};
use crate::strategies::{StrategyKind, StrategyParams};

/// One experiment grid. Files use flat `key = value` lines (TOML); unknown
/// keys are rejected.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub problems: Vec<String>,
    pub strategies: Vec<String>,
    pub tau_t: u64,
    pub n_t: u64,
    pub npop: usize,
    pub nmem: usize,
    pub d: f64,
    pub n_changes: u64,
    pub runs: u64,
    pub base_seed: u64,
    /// True-front sample size; 0 picks 1000 points for two objectives and
    /// 1089 for three.
    pub pf_sample_size: usize,
    pub output_dir: PathBuf,
    pub dimension: usize,
    pub detection_fraction: f64,
    pub focal: String,
    pub snapshot_envs: Vec<usize>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            problems: vec!["FDA1".into()],
            strategies: vec!["FGERS-CPS".into()],
            tau_t: 25,
            n_t: 10,
            npop: 100,
            nmem: 10,
            d: 0.1,
            n_changes: 100,
            runs: 20,
            base_seed: 1,
            pf_sample_size: 0,
            output_dir: PathBuf::from("results"),
            dimension: DEFAULT_DIMENSION,
            detection_fraction: 0.05,
            focal: "FGERS-CPS".into(),
            snapshot_envs: Vec::new(),
        }
    }
}

/// Command-line overrides; `None` keeps the file value.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub problems: Option<Vec<String>>,
    pub strategies: Option<Vec<String>>,
    pub tau_t: Option<u64>,
    pub n_t: Option<u64>,
    pub runs: Option<u64>,
    pub base_seed: Option<u64>,
    pub output_dir: Option<PathBuf>,
    pub snapshot_envs: Option<Vec<usize>>,
}

impl ExperimentConfig {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_toml_str(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }

    /// Seeds above `i64::MAX` cannot be written.
    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn apply(&mut self, o: &Overrides) {
        if let Some(v) = &o.problems {
            self.problems = v.clone();
        }
        if let Some(v) = &o.strategies {
            self.strategies = v.clone();
        }
        if let Some(v) = o.tau_t {
            self.tau_t = v;
        }
        if let Some(v) = o.n_t {
            self.n_t = v;
        }
        if let Some(v) = o.runs {
            self.runs = v;
        }
        if let Some(v) = o.base_seed {
            self.base_seed = v;
        }
        if let Some(v) = &o.output_dir {
            self.output_dir = v.clone();
        }
        if let Some(v) = &o.snapshot_envs {
            self.snapshot_envs = v.clone();
        }
    }

    pub fn total_generations(&self) -> u64 {
        (self.n_changes + 1) * self.tau_t
    }

    pub fn problem_kinds(&self) -> Result<Vec<ProblemKind>> {
        self.problems.iter().map(|p| ProblemKind::from_name(p)).collect()
    }

    pub fn strategy_kinds(&self) -> Result<Vec<StrategyKind>> {
        self.strategies.iter().map(|s| s.parse()).collect()
    }

    pub fn strategy_params(&self) -> StrategyParams {
        StrategyParams::new(self.npop, self.nmem, self.d)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(msg));
        if self.problems.is_empty() {
            return bad("no problems configured".into());
        }
        if self.strategies.is_empty() {
            return bad("no strategies configured".into());
        }
        self.problem_kinds()?;
        self.strategy_kinds()?;
        self.focal.parse::<StrategyKind>()?;
        for (name, v) in [
            ("tau_t", self.tau_t),
            ("n_t", self.n_t),
            ("n_changes", self.n_changes),
            ("runs", self.runs),
        ] {
            if v == 0 {
                return bad(format!("{name} must be positive"));
            }
        }
        if self.npop < 4 {
            return bad(format!("npop must be at least 4, got {}", self.npop));
        }
        if self.dimension < 3 {
            return bad(format!("dimension must be at least 3, got {}", self.dimension));
        }
        if !(self.detection_fraction > 0.0 && self.detection_fraction <= 1.0) {
            return bad(format!("detection_fraction {} outside (0, 1]", self.detection_fraction));
        }
        if self.pf_sample_size == 1 {
            return bad("pf_sample_size must be at least 2".into());
        }
        if let Some(&e) = self.snapshot_envs.iter().find(|&&e| e as u64 > self.n_changes) {
            return bad(format!("snapshot environment {e} exceeds n_changes {}", self.n_changes));
        }
        self.strategy_params()
            .validate()
            .map_err(|e| Error::Config(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_follow_protocol() {
        let c = ExperimentConfig::default();
        assert_eq!((c.npop, c.nmem, c.d), (100, 10, 0.1));
        assert_eq!(c.total_generations(), 2525);
        c.validate().unwrap();
    }

    #[test]
    fn parses_flat_keys_and_rejects_unknown() {
        let c = ExperimentConfig::from_toml_str(
            "# grid\nproblems = [\"FDA1\", \"dMOP2\"]\nstrategies = [\"RIS\"]\ntau_t = 10\nruns = 3\n",
        )
        .unwrap();
        assert_eq!(c.problems, ["FDA1", "dMOP2"]);
        assert_eq!((c.tau_t, c.runs, c.n_t), (10, 3, 10));
        assert!(matches!(
            ExperimentConfig::from_toml_str("tau = 10\n"),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn round_trips_through_text() {
        let c = ExperimentConfig {
            snapshot_envs: vec![1, 5],
            base_seed: u64::MAX >> 1,
            ..ExperimentConfig::default()
        };
        assert_eq!(ExperimentConfig::from_toml_str(&c.to_toml().unwrap()).unwrap(), c);
    }

    #[test]
    fn overrides_win() {
        let mut c = ExperimentConfig::default();
        c.apply(&Overrides {
            tau_t: Some(5),
            problems: Some(vec!["F10".into()]),
            ..Overrides::default()
        });
        assert_eq!(c.tau_t, 5);
        assert_eq!(c.problems, ["F10"]);
        assert_eq!(c.n_t, 10);
    }

    #[test]
    fn validation_errors() {
        let base = ExperimentConfig::default;
        let bad = [
            ExperimentConfig { strategies: vec!["SPPS".into()], ..base() },
            ExperimentConfig { nmem: 100, ..base() },
            ExperimentConfig { tau_t: 0, ..base() },
        ];
        for c in bad {
            assert!(c.validate().is_err());
        }
    }
}
