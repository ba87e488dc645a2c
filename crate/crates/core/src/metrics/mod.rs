//! Quality indicators and the rank-sum significance test.

mod hypervolume;
mod wilcoxon;

pub use hypervolume::hypervolume;
pub use wilcoxon::{wilcoxon_ranksum, Direction, RankSumTest};

use crate::error::{Error, Result};

/// One indicator value per measured environment.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MetricSeries {
    pub per_environment: Vec<f64>,
    pub environments: Vec<usize>,
}

impl MetricSeries {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, environment: usize, value: f64) {
        self.environments.push(environment);
        self.per_environment.push(value);
    }

    pub fn len(&self) -> usize {
        self.per_environment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.per_environment.is_empty()
    }
}

impl FromIterator<f64> for MetricSeries {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let per_environment: Vec<f64> = iter.into_iter().collect();
        let environments = (0..per_environment.len()).collect();
        Self {
            per_environment,
            environments,
        }
    }
}

/// Inverted generational distance: mean Euclidean distance from each point of
/// `pf` to its nearest point of `approx`, in raw objective units.
pub fn igd(pf: &[Vec<f64>], approx: &[Vec<f64>]) -> Result<f64> {
    if pf.is_empty() {
        return Err(Error::EmptyInput("IGD reference front"));
    }
    if approx.is_empty() {
        return Err(Error::EmptyInput("IGD approximation set"));
    }
    let m = pf[0].len();
    if let Some(bad) = pf.iter().chain(approx).find(|p| p.len() != m) {
        return Err(Error::Dimension {
            expected: m,
            actual: bad.len(),
        });
    }
    let total: f64 = pf
        .iter()
        .map(|v| {
            approx
                .iter()
                .map(|u| v.iter().zip(u).map(|(a, b)| (a - b) * (a - b)).sum::<f64>())
                .fold(f64::INFINITY, f64::min)
                .sqrt()
        })
        .sum();
    Ok(total / pf.len() as f64)
}

fn mean_of(series: &MetricSeries) -> Result<f64> {
    if series.is_empty() {
        return Err(Error::EmptyInput("metric series"));
    }
    Ok(series.per_environment.iter().sum::<f64>() / series.len() as f64)
}

/// Mean IGD over the measured environments.
pub fn migd(series: &MetricSeries) -> Result<f64> {
    mean_of(series)
}

/// Mean hypervolume difference over the measured environments.
pub fn mhvd(series: &MetricSeries) -> Result<f64> {
    mean_of(series)
}

/// `HV(pf) - HV(approx)` against a shared reference point. Not clamped: a
/// finite front sample can be beaten slightly by a good approximation.
pub fn hvd(pf: &[Vec<f64>], approx: &[Vec<f64>], reference: &[f64]) -> Result<f64> {
    Ok(hypervolume(pf, reference)? - hypervolume(approx, reference)?)
}

/// Hypervolume reference point: the front's per-objective maxima plus 0.5.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferencePoint(Vec<f64>);

impl ReferencePoint {
    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

impl std::ops::Deref for ReferencePoint {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

pub fn reference_point(z: &[f64]) -> ReferencePoint {
    ReferencePoint(z.iter().map(|v| v + 0.5).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn igd_examples() {
        let pf = vec![vec![0.0, 1.0], vec![1.0, 0.0]];
        assert_eq!(igd(&pf, &pf).unwrap(), 0.0);
        let p = vec![vec![0.5, 0.5]];
        assert_abs_diff_eq!(igd(&pf, &p).unwrap(), std::f64::consts::FRAC_1_SQRT_2, epsilon = 1e-15);
        let mut wider = p.clone();
        wider.push(vec![10.0, 10.0]);
        assert!(igd(&pf, &wider).unwrap() <= igd(&pf, &p).unwrap());
        assert!(igd(&pf, &[]).is_err());
        assert!(igd(&[], &p).is_err());
        assert!(igd(&pf, &[vec![0.0, 0.0, 0.0]]).is_err());
    }

    #[test]
    fn igd_zero_iff_front_covered() {
        let pf = vec![vec![0.0, 1.0], vec![0.5, 0.5], vec![1.0, 0.0]];
        assert!(igd(&pf, &pf[..2]).unwrap() > 0.0);
        let mut p = pf.clone();
        p.push(vec![3.0, 3.0]);
        assert_eq!(igd(&pf, &p).unwrap(), 0.0);
    }

    #[test]
    fn mean_indicators() {
        let c: MetricSeries = vec![0.3; 7].into_iter().collect();
        assert_abs_diff_eq!(migd(&c).unwrap(), 0.3, epsilon = 1e-15);
        let s: MetricSeries = vec![0.1, 0.3].into_iter().collect();
        assert_abs_diff_eq!(migd(&s).unwrap(), 0.2, epsilon = 1e-15);
        let h: MetricSeries = vec![0.5, 0.0].into_iter().collect();
        assert_eq!(mhvd(&h).unwrap(), 0.25);
        assert_eq!(mhvd(&h).unwrap(), migd(&h).unwrap());
        assert!(migd(&MetricSeries::new()).is_err());
    }

    #[test]
    fn migd_matches_compensated_sum() {
        let values: Vec<f64> = (0..100).map(|i| ((i * 7919) % 1000) as f64 / 997.0 + 1e-9 * i as f64).collect();
        // Kahan summation oracle
        let (mut sum, mut comp) = (0.0f64, 0.0f64);
        for v in &values {
            let y = v - comp;
            let t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        let series: MetricSeries = values.into_iter().collect();
        assert_abs_diff_eq!(migd(&series).unwrap(), sum / 100.0, epsilon = 1e-12);
    }

    #[test]
    fn hvd_examples() {
        let pf = vec![vec![0.0, 1.0], vec![1.0, 0.0]];
        let r = [1.5, 1.5];
        assert_eq!(hvd(&pf, &pf, &r).unwrap(), 0.0);
        assert_abs_diff_eq!(hvd(&pf, &pf[..1], &r).unwrap(), 0.5, epsilon = 1e-15);
        assert!(hvd(&pf, &pf[1..], &r).unwrap() >= 0.0);
    }

    #[test]
    fn reference_point_adds_half() {
        assert_eq!(reference_point(&[1.0, 1.0]).as_slice(), &[1.5, 1.5]);
        assert_eq!(reference_point(&[0.0, 0.0, 0.0]).as_slice(), &[0.5, 0.5, 0.5]);
        let twice = reference_point(&reference_point(&[1.0]));
        assert_eq!(twice.as_slice(), &[2.0]);
    }
}
