//! Center points, feed-forward translation and boundary repair.

use crate::error::{Error, Result};
use crate::rng::RngStream;
use crate::types::{Bounds, Individual};

/// Component-wise mean of the decision vectors.
pub fn center_point(set: &[Individual]) -> Result<Vec<f64>> {
    let first = set.first().ok_or(Error::EmptyInput("center point of an empty set"))?;
    let n = first.n();
    let mut center = vec![0.0; n];
    for ind in set {
        if ind.n() != n {
            return Err(Error::Dimension {
                expected: n,
                actual: ind.n(),
            });
        }
        for (c, v) in center.iter_mut().zip(&ind.x) {
            *c += v;
        }
    }
    let count = set.len() as f64;
    center.iter_mut().for_each(|c| *c /= count);
    Ok(center)
}

/// Pulls out-of-range components of `predicted` back inside the box, halfway
/// between the source individual's value and the violated bound.
pub fn boundary_repair(orig: &[f64], predicted: &[f64], bounds: &Bounds) -> Vec<f64> {
    predicted
        .iter()
        .zip(orig)
        .zip(bounds.low().iter().zip(bounds.up()))
        .map(|((&p, &o), (&low, &up))| {
            if p > up {
                0.5 * (o + up)
            } else if p < low {
                0.5 * (o + low)
            } else {
                p
            }
        })
        .collect()
}

/// Moves `x` by `shift` plus `Gauss(0, variance)` noise drawn independently
/// per component, then repairs against `x`.
pub(crate) fn translate(
    x: &[f64],
    shift: &[f64],
    variance: f64,
    bounds: &Bounds,
    rng: &mut RngStream,
) -> Vec<f64> {
    let moved: Vec<f64> = x
        .iter()
        .zip(shift)
        .map(|(v, s)| v + s + rng.gauss_var(variance))
        .collect();
    let mut repaired = boundary_repair(x, &moved, bounds);
    // source individuals sitting on a bound repair onto it; clipping only
    // guards against rounding
    bounds.clip(&mut repaired);
    repaired
}

/// Feed-forward prediction of the next non-dominated set: every member moves
/// by `c_t - c_prev` plus Gaussian noise of variance `d`.
pub fn predict_ndset(
    ndset: &[Individual],
    c_t: &[f64],
    c_prev: &[f64],
    d: f64,
    bounds: &Bounds,
    rng: &mut RngStream,
) -> Result<Vec<Vec<f64>>> {
    if c_t.len() != c_prev.len() || c_t.len() != bounds.dim() {
        return Err(Error::Dimension {
            expected: bounds.dim(),
            actual: if c_t.len() != bounds.dim() { c_t.len() } else { c_prev.len() },
        });
    }
    let shift: Vec<f64> = c_t.iter().zip(c_prev).map(|(a, b)| a - b).collect();
    ndset
        .iter()
        .map(|ind| {
            if ind.n() != bounds.dim() {
                return Err(Error::Dimension {
                    expected: bounds.dim(),
                    actual: ind.n(),
                });
            }
            Ok(translate(&ind.x, &shift, d, bounds, rng))
        })
        .collect()
}
