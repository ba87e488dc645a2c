//! Time-dependent benchmark problems: the FDA suite, the dMOP suite and F5-F10.
//!
//! All problems are minimized, use `n = 20` decision variables by default and
//! are pure functions of `(x, t)`. Each one has a closed-form Pareto front,
//! sampled by [`ProblemSpec::true_pf`].
//!
//! Variable bounds:
//!
//! | problem        | `x1`     | `x2`     | remaining  |
//! |----------------|----------|----------|------------|
//! | FDA1, FDA3     | [0, 1]   | [-1, 1]  | [-1, 1]    |
//! | FDA2           | [0, 1]   | [-1, 1]  | [-1, 1]    |
//! | FDA4           | [0, 1]   | [0, 1]   | [0, 1]     |
//! | dMOP1          | [0, 1]   | [0, 1]   | [0, 1]     |
//! | dMOP2, dMOP3   | [0, 1]   | [-1, 1]  | [-1, 1]    |
//! | F5-F7, F9, F10 | [0, 5]   | [0, 5]   | [0, 5]     |
//! | F8             | [0, 1]   | [0, 1]   | [-1, 2]    |

mod functions;
mod front;

use std::f64::consts::PI;
use std::fmt;

pub use front::{write_pf_csv, TruePfSample};

use crate::error::{Error, Result};
use crate::types::Bounds;

/// Decision-space dimension used by the standard protocol.
pub const DEFAULT_DIMENSION: usize = 20;

/// Farina's classification by what moves over time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChangeType {
    /// PS changes, PF static.
    Type1,
    /// Both change.
    Type2,
    /// PF changes, PS static.
    Type3,
    /// Neither changes.
    Type4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Linearity {
    Linear,
    NonLinear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProblemKind {
    Fda1,
    Fda2,
    Fda3,
    Fda4,
    Dmop1,
    Dmop2,
    Dmop3,
    F5,
    F6,
    F7,
    F8,
    F9,
    F10,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 13] = [
        ProblemKind::Fda1,
        ProblemKind::Fda2,
        ProblemKind::Fda3,
        ProblemKind::Fda4,
        ProblemKind::Dmop1,
        ProblemKind::Dmop2,
        ProblemKind::Dmop3,
        ProblemKind::F5,
        ProblemKind::F6,
        ProblemKind::F7,
        ProblemKind::F8,
        ProblemKind::F9,
        ProblemKind::F10,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProblemKind::Fda1 => "FDA1",
            ProblemKind::Fda2 => "FDA2",
            ProblemKind::Fda3 => "FDA3",
            ProblemKind::Fda4 => "FDA4",
            ProblemKind::Dmop1 => "dMOP1",
            ProblemKind::Dmop2 => "dMOP2",
            ProblemKind::Dmop3 => "dMOP3",
            ProblemKind::F5 => "F5",
            ProblemKind::F6 => "F6",
            ProblemKind::F7 => "F7",
            ProblemKind::F8 => "F8",
            ProblemKind::F9 => "F9",
            ProblemKind::F10 => "F10",
        }
    }

    /// Case-insensitive lookup by name.
    pub fn from_name(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(name.trim()))
            .ok_or_else(|| Error::UnknownProblem(name.to_string()))
    }

    fn table_row(self) -> (ChangeType, usize, Linearity) {
        use ChangeType::*;
        use Linearity::*;
        match self {
            ProblemKind::Fda1 => (Type1, 2, Linear),
            ProblemKind::Fda2 => (Type3, 2, Linear),
            ProblemKind::Fda3 => (Type2, 2, Linear),
            ProblemKind::Fda4 => (Type1, 3, Linear),
            ProblemKind::Dmop1 => (Type3, 2, Linear),
            ProblemKind::Dmop2 => (Type2, 2, Linear),
            ProblemKind::Dmop3 => (Type1, 2, Linear),
            ProblemKind::F5 => (Type2, 2, NonLinear),
            ProblemKind::F6 => (Type2, 2, NonLinear),
            ProblemKind::F7 => (Type2, 2, NonLinear),
            ProblemKind::F8 => (Type2, 3, NonLinear),
            ProblemKind::F9 => (Type2, 2, NonLinear),
            ProblemKind::F10 => (Type2, 2, NonLinear),
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An immutable benchmark instance.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec {
    pub kind: ProblemKind,
    pub m: usize,
    pub n: usize,
    pub bounds: Bounds,
    pub change_type: ChangeType,
    pub linearity: Linearity,
    /// Environments per unit of `t`. Only F10 reads it, to tell odd from even
    /// environments.
    pub severity: u64,
}

impl ProblemSpec {
    pub fn new(kind: ProblemKind, n: usize) -> Result<Self> {
        let (change_type, m, linearity) = kind.table_row();
        if n < m + 1 {
            return Err(Error::Parameter(format!(
                "{kind} needs at least {} decision variables, got {n}",
                m + 1
            )));
        }
        Ok(Self {
            kind,
            m,
            n,
            bounds: bounds_for(kind, n)?,
            change_type,
            linearity,
            severity: 10,
        })
    }

    pub fn by_name(name: &str) -> Result<Self> {
        Self::new(ProblemKind::from_name(name)?, DEFAULT_DIMENSION)
    }

    pub fn with_severity(mut self, n_t: u64) -> Self {
        self.severity = n_t.max(1);
        self
    }

    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    /// Objective vector of `x` at time `t`.
    pub fn evaluate(&self, x: &[f64], t: f64) -> Result<Vec<f64>> {
        if x.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                actual: x.len(),
            });
        }
        if !self.bounds.contains(x) {
            let k = x
                .iter()
                .enumerate()
                .find(|(k, v)| {
                    !(v.is_finite() && **v >= self.bounds.low()[*k] && **v <= self.bounds.up()[*k])
                })
                .map(|(k, _)| k)
                .unwrap_or(0);
            return Err(Error::Domain(format!(
                "{}: x[{k}] = {} not in [{}, {}]",
                self.name(),
                x[k],
                self.bounds.low()[k],
                self.bounds.up()[k]
            )));
        }
        if !(t.is_finite() && t >= 0.0) {
            return Err(Error::Parameter(format!("time must be finite and >= 0, got {t}")));
        }
        Ok(functions::evaluate(self, x, t))
    }

    /// Decision vector on the Pareto set at time `t` whose position variables
    /// are `position` (one value in `[0, 1]` per position variable: one for
    /// bi-objective problems, two for the three-objective ones).
    pub fn pareto_set_point(&self, position: &[f64], t: f64) -> Vec<f64> {
        functions::pareto_set_point(self, position, t)
    }
}

/// Registry of all 13 benchmarks at the default dimension.
pub fn list_problems() -> Vec<ProblemSpec> {
    ProblemKind::ALL
        .into_iter()
        .map(|k| ProblemSpec::new(k, DEFAULT_DIMENSION).expect("default dimension is valid"))
        .collect()
}

fn bounds_for(kind: ProblemKind, n: usize) -> Result<Bounds> {
    let mut low = vec![0.0; n];
    let mut up = vec![1.0; n];
    match kind {
        ProblemKind::Fda1
        | ProblemKind::Fda2
        | ProblemKind::Fda3
        | ProblemKind::Dmop2
        | ProblemKind::Dmop3 => {
            low[1..].fill(-1.0);
        }
        ProblemKind::Fda4 | ProblemKind::Dmop1 => {}
        ProblemKind::F5 | ProblemKind::F6 | ProblemKind::F7 | ProblemKind::F9 | ProblemKind::F10 => {
            up.fill(5.0);
        }
        ProblemKind::F8 => {
            low[2..].fill(-1.0);
            up[2..].fill(2.0);
        }
    }
    Bounds::new(low, up)
}

/// `sin(0.5 * pi * t)`, the drift used by the FDA and dMOP suites.
pub(crate) fn half_pi_sin(t: f64) -> f64 {
    (0.5 * PI * t).sin()
}
