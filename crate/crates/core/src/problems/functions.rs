//! Objective functions. Indices are zero-based here (`x[0]` is the first
//! position variable).

use std::f64::consts::PI;

use super::{half_pi_sin, ProblemKind, ProblemSpec};

pub(super) fn evaluate(p: &ProblemSpec, x: &[f64], t: f64) -> Vec<f64> {
    match p.kind {
        ProblemKind::Fda1 | ProblemKind::Dmop3 => {
            let g_t = half_pi_sin(t);
            let f1 = x[0];
            let g = 1.0 + sq_dist(&x[1..], g_t);
            vec![f1, g * (1.0 - (f1 / g).sqrt())]
        }
        ProblemKind::Fda2 => {
            let h = fda2_h(t);
            let split = fda2_split(x.len());
            let f1 = x[0];
            let g = 1.0 + sq_dist(&x[1..split], 0.0);
            let exponent = 1.0 / h + sq_dist(&x[split..], 0.0);
            vec![f1, g * (1.0 - (f1 / g).powf(exponent))]
        }
        ProblemKind::Fda3 => {
            let s = half_pi_sin(t);
            let big_f = 10f64.powf(2.0 * s);
            let g_t = s.abs();
            let f1 = x[0].powf(big_f);
            let g = 1.0 + g_t + sq_dist(&x[1..], g_t);
            vec![f1, g * (1.0 - (f1 / g).sqrt())]
        }
        ProblemKind::Fda4 => {
            let g_t = half_pi_sin(t).abs();
            let g = sq_dist(&x[2..], g_t);
            sphere(1.0 + g, x[0], x[1], SphereOrder::Fda4)
        }
        ProblemKind::Dmop1 => {
            let h = dmop_h(t);
            let f1 = x[0];
            let g = 1.0 + 9.0 * sq_dist(&x[1..], 0.0);
            vec![f1, g * (1.0 - (f1 / g).powf(h))]
        }
        ProblemKind::Dmop2 => {
            let h = dmop_h(t);
            let g_t = half_pi_sin(t);
            let f1 = x[0];
            let g = 1.0 + sq_dist(&x[1..], g_t);
            vec![f1, g * (1.0 - (f1 / g).powf(h))]
        }
        ProblemKind::F8 => {
            let g_t = half_pi_sin(t);
            let h = f_h(t);
            let shift = ((x[0] + x[1]) / 2.0).powf(h) + g_t;
            let g = sq_dist(&x[2..], shift);
            sphere(1.0 + g, x[0], x[1], SphereOrder::F8)
        }
        ProblemKind::F5 | ProblemKind::F6 | ProblemKind::F7 | ProblemKind::F9 | ProblemKind::F10 => {
            let (a, b) = f_ab(p.kind, t);
            let h = f_h(t);
            let flipped = p.kind == ProblemKind::F10 && odd_environment(t, p.severity);
            let n = x.len() as f64;
            let d = (x[0] - a).abs();
            let mut f1 = d.powf(h);
            let mut f2 = (x[0] - a - 1.0).abs().powf(h);
            for (k, &xi) in x.iter().enumerate().skip(1) {
                let i = (k + 1) as f64;
                let bend = d.powf(h + i / n);
                let y = if flipped {
                    xi - b - bend
                } else {
                    xi - b - 1.0 + bend
                };
                // 1-based index i: odd i go to f1, even i to f2
                if (k + 1) % 2 == 1 {
                    f1 += y * y;
                } else {
                    f2 += y * y;
                }
            }
            vec![f1, f2]
        }
    }
}

pub(super) fn pareto_set_point(p: &ProblemSpec, position: &[f64], t: f64) -> Vec<f64> {
    let n = p.n;
    let s = position.first().copied().unwrap_or(0.0).clamp(0.0, 1.0);
    let mut x = vec![0.0; n];
    match p.kind {
        ProblemKind::Fda1 | ProblemKind::Dmop2 | ProblemKind::Dmop3 => {
            x[0] = s;
            x[1..].fill(half_pi_sin(t));
        }
        ProblemKind::Fda2 | ProblemKind::Dmop1 => {
            x[0] = s;
        }
        ProblemKind::Fda3 => {
            x[0] = s;
            x[1..].fill(half_pi_sin(t).abs());
        }
        ProblemKind::Fda4 => {
            x[0] = s;
            x[1] = position.get(1).copied().unwrap_or(0.0).clamp(0.0, 1.0);
            x[2..].fill(half_pi_sin(t).abs());
        }
        ProblemKind::F8 => {
            x[0] = s;
            x[1] = position.get(1).copied().unwrap_or(0.0).clamp(0.0, 1.0);
            let shift = ((x[0] + x[1]) / 2.0).powf(f_h(t)) + half_pi_sin(t);
            x[2..].fill(shift);
        }
        ProblemKind::F5 | ProblemKind::F6 | ProblemKind::F7 | ProblemKind::F9 | ProblemKind::F10 => {
            let (a, b) = f_ab(p.kind, t);
            let h = f_h(t);
            let flipped = p.kind == ProblemKind::F10 && odd_environment(t, p.severity);
            x[0] = a + s;
            for (k, xi) in x.iter_mut().enumerate().skip(1) {
                let bend = s.powf(h + (k + 1) as f64 / n as f64);
                *xi = if flipped { b + bend } else { b + 1.0 - bend };
            }
        }
    }
    x
}

/// Index where FDA2's third variable group starts.
pub(super) fn fda2_split(n: usize) -> usize {
    1 + (n - 1) / 2
}

pub(super) fn fda2_h(t: f64) -> f64 {
    0.75 + 0.7 * half_pi_sin(t)
}

pub(super) fn dmop_h(t: f64) -> f64 {
    0.75 * half_pi_sin(t) + 1.25
}

pub(super) fn f_h(t: f64) -> f64 {
    1.25 + 0.75 * (PI * t).sin()
}

fn f_ab(kind: ProblemKind, t: f64) -> (f64, f64) {
    match kind {
        ProblemKind::F5 | ProblemKind::F10 => (
            2.0 * (PI * t).cos() + 2.0,
            2.0 * (2.0 * PI * t).sin() + 2.0,
        ),
        ProblemKind::F6 => (
            2.0 * (1.5 * PI * t).cos() * (0.5 * PI * t).sin() + 2.0,
            2.0 * (1.5 * PI * t).cos() * (0.5 * PI * t).cos() + 2.0,
        ),
        ProblemKind::F7 => {
            let s = (PI * t).sin();
            (
                1.7 * (1.0 - s) * s + 3.4,
                1.4 * (1.0 - s) * (PI * t).cos() + 2.1,
            )
        }
        ProblemKind::F9 => {
            let frac = t - t.floor();
            (
                2.0 * (frac * PI).cos() + 2.0,
                2.0 * (2.0 * frac * PI).sin() + 2.0,
            )
        }
        _ => unreachable!("not an F5-F10 style problem"),
    }
}

fn odd_environment(t: f64, severity: u64) -> bool {
    ((t * severity as f64).round() as i64) % 2 == 1
}

fn sq_dist(xs: &[f64], target: f64) -> f64 {
    xs.iter().map(|v| (v - target) * (v - target)).sum()
}

enum SphereOrder {
    Fda4,
    F8,
}

fn sphere(scale: f64, u: f64, v: f64, order: SphereOrder) -> Vec<f64> {
    let (cu, su) = ((0.5 * PI * u).cos(), (0.5 * PI * u).sin());
    let (cv, sv) = ((0.5 * PI * v).cos(), (0.5 * PI * v).sin());
    match order {
        // u is the polar angle
        SphereOrder::Fda4 => vec![scale * cu * cv, scale * cu * sv, scale * su],
        // v is the polar angle
        SphereOrder::F8 => vec![scale * cv * cu, scale * cv * su, scale * sv],
    }
}
