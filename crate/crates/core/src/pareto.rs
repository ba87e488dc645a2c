//! Pareto dominance, non-dominated sorting, crowding distance and elitist
//! environmental selection (minimization throughout).

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::types::{Individual, Population};

/// `a` dominates `b`: no worse in every objective and strictly better in one.
///
/// Comparisons are exact; equal vectors never dominate each other.
pub fn dominates(a: &Individual, b: &Individual) -> Result<bool> {
    if a.m() != b.m() {
        return Err(Error::Dimension {
            expected: a.m(),
            actual: b.m(),
        });
    }
    Ok(dominates_objectives(&a.f, &b.f))
}

/// Dominance on raw objective vectors of equal length.
pub fn dominates_objectives(a: &[f64], b: &[f64]) -> bool {
    debug_assert_eq!(a.len(), b.len());
    let mut strictly_better = false;
    for (x, y) in a.iter().zip(b) {
        if x > y {
            return false;
        }
        if x < y {
            strictly_better = true;
        }
    }
    strictly_better
}

/// Fast non-dominated sort over the individuals' objective vectors.
///
/// Returns fronts of member indices; front 0 is the non-dominated set and the
/// fronts partition `0..pop.len()`. Indices inside a front are ascending.
pub fn fast_nondominated_sort(pop: &[Individual]) -> Result<Vec<Vec<usize>>> {
    if pop.is_empty() {
        return Err(Error::EmptyInput("non-dominated sort"));
    }
    let m = pop[0].m();
    if let Some(bad) = pop.iter().find(|i| i.m() != m) {
        return Err(Error::Dimension {
            expected: m,
            actual: bad.m(),
        });
    }
    let objs: Vec<&[f64]> = pop.iter().map(|i| i.f.as_slice()).collect();
    Ok(sort_objectives(&objs))
}

pub(crate) fn sort_objectives(objs: &[&[f64]]) -> Vec<Vec<usize>> {
    let n = objs.len();
    let mut dominated_by: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut domination_count = vec![0usize; n];

    for p in 0..n {
        for q in (p + 1)..n {
            if dominates_objectives(objs[p], objs[q]) {
                dominated_by[p].push(q);
                domination_count[q] += 1;
            } else if dominates_objectives(objs[q], objs[p]) {
                dominated_by[q].push(p);
                domination_count[p] += 1;
            }
        }
    }

    let mut fronts = Vec::new();
    let mut current: Vec<usize> = (0..n).filter(|&i| domination_count[i] == 0).collect();
    while !current.is_empty() {
        let mut next = Vec::new();
        for &p in &current {
            for &q in &dominated_by[p] {
                domination_count[q] -= 1;
                if domination_count[q] == 0 {
                    next.push(q);
                }
            }
        }
        next.sort_unstable();
        fronts.push(current);
        current = next;
    }
    fronts
}

/// Crowding distance of each member of a front.
///
/// Extremes of every objective get `+inf`; interior members accumulate the
/// side length of their neighbours' cuboid, normalized by the objective's range
/// over the front. A zero range contributes nothing.
pub fn crowding_distance(front: &[Individual]) -> Vec<f64> {
    let objs: Vec<&[f64]> = front.iter().map(|i| i.f.as_slice()).collect();
    crowding_of(&objs)
}

pub(crate) fn crowding_of(objs: &[&[f64]]) -> Vec<f64> {
    let n = objs.len();
    let mut dist = vec![0.0; n];
    if n == 0 {
        return dist;
    }
    if n <= 2 {
        return vec![f64::INFINITY; n];
    }
    let m = objs[0].len();
    let mut order: Vec<usize> = (0..n).collect();
    #[allow(clippy::needless_range_loop)]
    for j in 0..m {
        order.sort_by(|&a, &b| objs[a][j].total_cmp(&objs[b][j]).then(a.cmp(&b)));
        let lo = objs[order[0]][j];
        let hi = objs[order[n - 1]][j];
        dist[order[0]] = f64::INFINITY;
        dist[order[n - 1]] = f64::INFINITY;
        let range = hi - lo;
        if range <= 0.0 {
            continue;
        }
        for w in 1..n - 1 {
            let i = order[w];
            if dist[i].is_finite() {
                dist[i] += (objs[order[w + 1]][j] - objs[order[w - 1]][j]) / range;
            }
        }
    }
    dist
}

/// Orders `pool` by (front rank ascending, crowding distance descending, index
/// ascending). The first `N` entries are what environmental selection keeps.
pub fn selection_order(pool: &[Individual]) -> Result<Vec<usize>> {
    let fronts = fast_nondominated_sort(pool)?;
    let mut order = Vec::with_capacity(pool.len());
    for front in fronts {
        let objs: Vec<&[f64]> = front.iter().map(|&i| pool[i].f.as_slice()).collect();
        let cd = crowding_of(&objs);
        let mut ranked: Vec<(usize, f64)> = front.into_iter().zip(cd).collect();
        ranked.sort_by(|a, b| match b.1.total_cmp(&a.1) {
            Ordering::Equal => a.0.cmp(&b.0),
            o => o,
        });
        order.extend(ranked.into_iter().map(|(i, _)| i));
    }
    Ok(order)
}

/// Elitist truncation of `pool` to exactly `n` individuals.
pub fn environmental_select(pool: Vec<Individual>, n: usize) -> Result<Population> {
    if n == 0 {
        return Err(Error::Parameter("selection size must be positive".into()));
    }
    if pool.len() < n {
        return Err(Error::InsufficientPool {
            needed: n,
            available: pool.len(),
        });
    }
    let order = selection_order(&pool)?;
    let mut slots: Vec<Option<Individual>> = pool.into_iter().map(Some).collect();
    let members = order
        .into_iter()
        .take(n)
        .map(|i| slots[i].take().expect("each index selected once"))
        .collect();
    Population::new(members, n)
}

/// Front 0, in input order.
pub fn nondominated_set(pop: &[Individual]) -> Result<Vec<Individual>> {
    let fronts = fast_nondominated_sort(pop)?;
    Ok(fronts[0].iter().map(|&i| pop[i].clone()).collect())
}
