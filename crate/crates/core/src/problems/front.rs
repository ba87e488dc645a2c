//! Closed-form Pareto fronts.

use std::io::Write;

use super::functions::{dmop_h, f_h, fda2_h};
use super::{half_pi_sin, ProblemKind, ProblemSpec};
use crate::error::{Error, Result};

/// Points spread over the true Pareto front at one time step.
#[derive(Debug, Clone, PartialEq)]
pub struct TruePfSample {
    pub t: f64,
    pub points: Vec<Vec<f64>>,
    /// Per-objective maxima over `points`.
    pub z: Vec<f64>,
}

/// Shape of a bi-objective front.
enum Curve {
    /// `f2 = 1 - f1^p` on `f1 in [0, 1]`.
    Power(f64),
    /// `f2 = c (1 - sqrt(f1 / c))` on `f1 in [0, 1]`.
    ScaledSqrt(f64),
    /// `(s^h, (1 - s)^h)` for `s in [0, 1]`.
    Lame(f64),
}

impl ProblemSpec {
    /// Default sample size: 1000 points for two objectives, a 33x33 grid for
    /// three.
    pub fn default_pf_size(&self) -> usize {
        if self.m == 3 {
            33 * 33
        } else {
            1000
        }
    }

    /// Samples the analytic front at time `t`.
    ///
    /// Bi-objective fronts get exactly `k` points. Three-objective fronts use a
    /// `side x side` angular grid with `side = ceil(sqrt(k))`.
    pub fn true_pf(&self, t: f64, k: usize) -> Result<TruePfSample> {
        if k < 2 {
            return Err(Error::Parameter(format!("front sample size must be >= 2, got {k}")));
        }
        let points = if self.m == 3 {
            sphere_grid(k)
        } else {
            let curve = self.curve(t);
            (0..k)
                .map(|i| curve.point(i as f64 / (k - 1) as f64))
                .collect()
        };
        let z = (0..self.m)
            .map(|j| points.iter().map(|p: &Vec<f64>| p[j]).fold(f64::NEG_INFINITY, f64::max))
            .collect();
        Ok(TruePfSample { t, points, z })
    }

    /// Per-objective maxima of the sampled front.
    pub fn max_objectives(&self, t: f64, k: usize) -> Result<Vec<f64>> {
        Ok(self.true_pf(t, k)?.z)
    }

    /// How far `f` is from satisfying the front's defining equation at `t`.
    /// Zero (up to rounding) for points on the front.
    pub fn pf_residual(&self, f: &[f64], t: f64) -> f64 {
        if self.m == 3 {
            return (f.iter().map(|v| v * v).sum::<f64>().sqrt() - 1.0).abs();
        }
        match self.curve(t) {
            Curve::Power(p) => (f[1] - (1.0 - f[0].powf(p))).abs(),
            Curve::ScaledSqrt(c) => (f[1] - c * (1.0 - (f[0] / c).sqrt())).abs(),
            Curve::Lame(h) => {
                let s = f[0].powf(1.0 / h);
                (f[1] - (1.0 - s).max(0.0).powf(h)).abs()
            }
        }
    }

    fn curve(&self, t: f64) -> Curve {
        match self.kind {
            ProblemKind::Fda1 | ProblemKind::Dmop3 => Curve::Power(0.5),
            ProblemKind::Fda2 => Curve::Power(1.0 / fda2_h(t)),
            ProblemKind::Dmop1 | ProblemKind::Dmop2 => Curve::Power(dmop_h(t)),
            ProblemKind::Fda3 => Curve::ScaledSqrt(1.0 + half_pi_sin(t).abs()),
            ProblemKind::F5 | ProblemKind::F6 | ProblemKind::F7 | ProblemKind::F9 | ProblemKind::F10 => {
                Curve::Lame(f_h(t))
            }
            ProblemKind::Fda4 | ProblemKind::F8 => unreachable!("three-objective front"),
        }
    }
}

impl Curve {
    fn point(&self, s: f64) -> Vec<f64> {
        match *self {
            // parameterize along the flatter axis so points stay spread out
            Curve::Power(p) if p <= 1.0 => vec![s.powf(1.0 / p), 1.0 - s],
            Curve::Power(p) => vec![s, 1.0 - s.powf(p)],
            Curve::ScaledSqrt(c) => vec![s * s, c * (1.0 - s / c.sqrt())],
            Curve::Lame(h) => vec![s.powf(h), (1.0 - s).powf(h)],
        }
    }
}

fn sphere_grid(k: usize) -> Vec<Vec<f64>> {
    use std::f64::consts::FRAC_PI_2;
    let side = (k as f64).sqrt().ceil() as usize;
    let side = if side * side < k { side + 1 } else { side };
    let mut points = Vec::with_capacity(side * side);
    for i in 0..side {
        let polar = FRAC_PI_2 * i as f64 / (side - 1) as f64;
        for j in 0..side {
            let azimuth = FRAC_PI_2 * j as f64 / (side - 1) as f64;
            points.push(vec![
                polar.cos() * azimuth.cos(),
                polar.cos() * azimuth.sin(),
                polar.sin(),
            ]);
        }
    }
    points
}

/// Writes samples as CSV with columns `t,f1..fm`.
pub fn write_pf_csv<W: Write>(mut out: W, samples: &[TruePfSample]) -> std::io::Result<()> {
    let m = samples.first().map_or(0, |s| s.z.len());
    let header: Vec<String> = std::iter::once("t".to_string())
        .chain((1..=m).map(|j| format!("f{j}")))
        .collect();
    writeln!(out, "{}", header.join(","))?;
    for s in samples {
        for p in &s.points {
            write!(out, "{}", s.t)?;
            for v in p {
                write!(out, ",{v}")?;
            }
            writeln!(out)?;
        }
    }
    Ok(())
}
