//! k-metric generators and the exact k-metric dimension by subset search.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::resolve::{dimensional_value, distinguishers, pair_masks};
use crate::{Method, SearchLimits};

/// Hard ceiling for the subset search, which packs vertex sets into `u64`.
pub const METRIC_SEARCH_CEILING: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricSolveResult {
    pub k: usize,
    pub value: usize,
    /// A k-metric basis, when the method produces one.
    pub basis: Option<Vec<usize>>,
    pub method: Method,
}

/// Number of vertices of `set` that distinguish `x` and `y`.
pub fn pair_support(g: &Graph, set: &[usize], x: usize, y: usize) -> Result<usize> {
    let dm = g.metric()?;
    if x == y || x >= g.order() || y >= g.order() {
        return Err(Error::InvalidPair(x, y));
    }
    Ok(set
        .iter()
        .filter(|&&z| dm.get(z, x) != dm.get(z, y))
        .count())
}

/// Whether every pair of distinct vertices is distinguished by at least `k`
/// vertices of `set`.
pub fn is_k_metric_generator(g: &Graph, set: &[usize], k: usize) -> Result<bool> {
    let dm = g.metric()?;
    let n = g.order();
    let mut member = vec![false; n];
    for &v in set {
        member[v] = true;
    }
    for x in 0..n {
        for y in x + 1..n {
            if distinguishers(dm, x, y)
                .filter(|&z| member[z])
                .take(k)
                .count()
                < k
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks `1 <= k <= max_level` and returns the largest feasible level.
pub(crate) fn feasible_level(g: &Graph, k: usize) -> Result<usize> {
    let max = dimensional_value(g)?;
    if k == 0 || k > max {
        Err(Error::InfeasibleK { k, max })
    } else {
        Ok(max)
    }
}

pub fn dim_k_bruteforce(g: &Graph, k: usize) -> Result<MetricSolveResult> {
    dim_k_bruteforce_with(g, k, &SearchLimits::default())
}

/// Minimum k-metric generator by exhaustive search.
///
/// Sizes are tried in ascending order and, within a size, subsets in
/// lexicographic order of their sorted vertex lists; the first generator
/// found is returned.
pub fn dim_k_bruteforce_with(
    g: &Graph,
    k: usize,
    limits: &SearchLimits,
) -> Result<MetricSolveResult> {
    feasible_level(g, k)?;
    let n = g.order();
    let limit = limits.metric_max_n.min(METRIC_SEARCH_CEILING);
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    let search = SubsetSearch {
        n,
        k: k as u32,
        masks: pair_masks(g.distances()?),
    };
    for size in k..=n {
        let mut chosen = Vec::with_capacity(size);
        if search.extend(0, size, 0, &mut chosen) {
            return Ok(MetricSolveResult {
                k,
                value: size,
                basis: Some(chosen),
                method: Method::BruteForce,
            });
        }
    }
    unreachable!("the whole vertex set is a k-metric generator for every feasible k")
}

struct SubsetSearch {
    n: usize,
    k: u32,
    masks: Vec<u64>,
}

impl SubsetSearch {
    fn extend(&self, start: usize, remaining: usize, set: u64, chosen: &mut Vec<usize>) -> bool {
        if remaining == 0 {
            return self.masks.iter().all(|m| (m & set).count_ones() >= self.k);
        }
        let suffix = u64::MAX.checked_shl(start as u32).unwrap_or(0);
        // each pair still short of k needs that many picks from its remaining distinguishers
        for m in &self.masks {
            let have = (m & set).count_ones();
            if have < self.k {
                let reachable = (m & suffix).count_ones().min(remaining as u32);
                if have + reachable < self.k {
                    return false;
                }
            }
        }
        for v in start..=self.n - remaining {
            chosen.push(v);
            if self.extend(v + 1, remaining - 1, set | 1 << v, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// Whether the exact `dim_k` is at most `n - max_level + k`.
pub fn check_dim_upper_bound(g: &Graph, k: usize) -> Result<bool> {
    let max = feasible_level(g, k)?;
    let dim = dim_k_bruteforce(g, k)?.value;
    Ok(dim <= g.order() - max + k)
}
