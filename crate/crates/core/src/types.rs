//! Core data types shared by every module.

use crate::error::{Error, Result};

/// A decision vector paired with its objective vector and the time at which
/// the objectives were computed.
///
/// Objective values are only meaningful at `eval_time`; after an environment
/// change an individual must be re-evaluated (see [`Individual::reevaluated`]).
#[derive(Debug, Clone, PartialEq)]
pub struct Individual {
    pub x: Vec<f64>,
    pub f: Vec<f64>,
    pub eval_time: f64,
}

impl Individual {
    pub fn new(x: Vec<f64>, f: Vec<f64>, eval_time: f64) -> Self {
        Self { x, f, eval_time }
    }

    /// Builds an individual carrying objective values only. Handy for metric
    /// and sorting code that never looks at the decision vector.
    pub fn from_objectives(f: Vec<f64>) -> Self {
        Self {
            x: Vec::new(),
            f,
            eval_time: 0.0,
        }
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn m(&self) -> usize {
        self.f.len()
    }
}

/// Box constraints on the decision space.
#[derive(Debug, Clone, PartialEq)]
pub struct Bounds {
    low: Vec<f64>,
    up: Vec<f64>,
}

impl Bounds {
    pub fn new(low: Vec<f64>, up: Vec<f64>) -> Result<Self> {
        if low.len() != up.len() {
            return Err(Error::Dimension {
                expected: low.len(),
                actual: up.len(),
            });
        }
        if low.is_empty() {
            return Err(Error::EmptyInput("bounds"));
        }
        for (k, (l, u)) in low.iter().zip(&up).enumerate() {
            if !(l.is_finite() && u.is_finite() && l < u) {
                return Err(Error::Parameter(format!(
                    "bounds[{k}]: require finite low < up, got [{l}, {u}]"
                )));
            }
        }
        Ok(Self { low, up })
    }

    /// `n` copies of the interval `[low, up]`.
    pub fn uniform(n: usize, low: f64, up: f64) -> Result<Self> {
        Self::new(vec![low; n], vec![up; n])
    }

    pub fn low(&self) -> &[f64] {
        &self.low
    }

    pub fn up(&self) -> &[f64] {
        &self.up
    }

    pub fn dim(&self) -> usize {
        self.low.len()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x
                .iter()
                .zip(self.low.iter().zip(&self.up))
                .all(|(v, (l, u))| *v >= *l && *v <= *u)
    }

    /// Clips each component into its interval.
    pub fn clip(&self, x: &mut [f64]) {
        for (v, (l, u)) in x.iter_mut().zip(self.low.iter().zip(&self.up)) {
            *v = v.clamp(*l, *u);
        }
    }
}

/// A population of individuals with a nominal capacity (`Npop`).
#[derive(Debug, Clone, PartialEq)]
pub struct Population {
    pub members: Vec<Individual>,
    capacity: usize,
}

impl Population {
    pub fn new(members: Vec<Individual>, capacity: usize) -> Result<Self> {
        if capacity == 0 {
            return Err(Error::Parameter("population capacity must be positive".into()));
        }
        if let Some(first) = members.first() {
            let (n, m) = (first.n(), first.m());
            for ind in &members {
                if ind.m() != m {
                    return Err(Error::Dimension {
                        expected: m,
                        actual: ind.m(),
                    });
                }
                if ind.n() != n {
                    return Err(Error::Dimension {
                        expected: n,
                        actual: ind.n(),
                    });
                }
            }
        }
        Ok(Self { members, capacity })
    }

    /// A population whose capacity equals its current size.
    pub fn full(members: Vec<Individual>) -> Result<Self> {
        let cap = members.len();
        Self::new(members, cap)
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Individual> {
        self.members.iter()
    }

    pub fn objectives(&self) -> Vec<Vec<f64>> {
        self.members.iter().map(|i| i.f.clone()).collect()
    }
}

impl<'a> IntoIterator for &'a Population {
    type Item = &'a Individual;
    type IntoIter = std::slice::Iter<'a, Individual>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}
