//! Two-sided Wilcoxon rank-sum (Mann-Whitney) test with mid-ranks for ties.
//!
//! Exact null distribution when the pooled size is at most 20, normal
//! approximation with tie and continuity corrections above that.

use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{Error, Result};

const EXACT_LIMIT: usize = 20;

/// Which sample has the smaller mean rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    FirstSmaller,
    SecondSmaller,
    Equal,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankSumTest {
    pub p_value: f64,
    pub significant: bool,
    pub direction: Direction,
    /// Rank sum of the first sample.
    pub rank_sum: f64,
    pub exact: bool,
}

pub fn wilcoxon_ranksum(a: &[f64], b: &[f64], alpha: f64) -> Result<RankSumTest> {
    if a.len() < 3 || b.len() < 3 {
        return Err(Error::Parameter(format!(
            "rank-sum test needs at least 3 observations per sample, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    if a.iter().chain(b).any(|v| !v.is_finite()) {
        return Err(Error::Parameter("rank-sum test on non-finite values".into()));
    }
    let (n1, n2) = (a.len(), b.len());
    let n = n1 + n2;
    let ranks = mid_ranks(a.iter().chain(b).copied().collect());
    let rank_sum: f64 = ranks[..n1].iter().sum();

    let mean_a = rank_sum / n1 as f64;
    let mean_b = (ranks.iter().sum::<f64>() - rank_sum) / n2 as f64;
    let direction = if mean_a < mean_b {
        Direction::FirstSmaller
    } else if mean_b < mean_a {
        Direction::SecondSmaller
    } else {
        Direction::Equal
    };

    let all_equal = a.iter().chain(b).all(|v| *v == a[0]);
    let exact = n <= EXACT_LIMIT;
    let p_value = if all_equal {
        1.0
    } else if exact {
        exact_p(&ranks, n1)
    } else {
        normal_p(&ranks, n1, n2, rank_sum)
    };
    Ok(RankSumTest {
        p_value,
        significant: p_value < alpha,
        direction,
        rank_sum,
        exact,
    })
}

/// 1-based ranks, ties get the average of the positions they span.
fn mid_ranks(values: Vec<f64>) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        let rank = (i + j) as f64 / 2.0 + 1.0;
        for &k in &order[i..=j] {
            ranks[k] = rank;
        }
        i = j + 1;
    }
    ranks
}

/// Counts, over all size-`n1` subsets of the pooled ranks, those at least as
/// far from the null mean as the observed rank sum. Ranks are doubled so that
/// mid-ranks stay integral.
fn exact_p(ranks: &[f64], n1: usize) -> f64 {
    let doubled: Vec<usize> = ranks.iter().map(|r| (2.0 * r).round() as usize).collect();
    let max_sum: usize = doubled.iter().sum();
    // counts[k][s]: subsets of size k with doubled rank sum s
    let mut counts = vec![vec![0f64; max_sum + 1]; n1 + 1];
    counts[0][0] = 1.0;
    for &r in &doubled {
        for k in (1..=n1).rev() {
            for s in (r..=max_sum).rev() {
                let c = counts[k - 1][s - r];
                if c != 0.0 {
                    counts[k][s] += c;
                }
            }
        }
    }
    let observed: usize = doubled[..n1].iter().sum();
    let n = ranks.len();
    let centre = n1 * (n + 1); // null mean in doubled units
    let dev = |s: usize| s.abs_diff(centre);
    let observed_dev = dev(observed);
    let total: f64 = counts[n1].iter().sum();
    let extreme: f64 = counts[n1]
        .iter()
        .enumerate()
        .filter(|(s, _)| dev(*s) >= observed_dev)
        .map(|(_, c)| c)
        .sum();
    (extreme / total).min(1.0)
}

fn normal_p(ranks: &[f64], n1: usize, n2: usize, rank_sum: f64) -> f64 {
    let n = (n1 + n2) as f64;
    let (n1f, n2f) = (n1 as f64, n2 as f64);
    let mean = n1f * (n + 1.0) / 2.0;

    let mut sorted = ranks.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut tie_term = 0.0;
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j + 1 < sorted.len() && sorted[j + 1] == sorted[i] {
            j += 1;
        }
        let t = (j - i + 1) as f64;
        tie_term += t * t * t - t;
        i = j + 1;
    }
    let variance = n1f * n2f / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
    if variance <= 0.0 {
        return 1.0;
    }
    let z = ((rank_sum - mean).abs() - 0.5).max(0.0) / variance.sqrt();
    let normal = Normal::standard();
    (2.0 * (1.0 - normal.cdf(z))).min(1.0)
}
