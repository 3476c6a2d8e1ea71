//! k-partition generators, the exact k-partition dimension by set-partition
//! enumeration, and the consecutive-block construction for paths.
//!
//! A block `S` distinguishes `x` and `y` when `d(x, S) != d(y, S)`. A partition
//! is a k-partition generator when every pair of distinct vertices is
//! distinguished by at least `k` of its blocks.

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::metric_dim::{dim_k_bruteforce_with, feasible_level};
use crate::resolve::dimensional_value_max;
use crate::vertex_partition::VertexPartition;
use crate::{BoundCheck, Method, SearchLimits};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionSolveResult {
    pub k: usize,
    pub value: usize,
    pub basis: VertexPartition,
    pub method: Method,
}

/// Set distance from every vertex to every block, row-major by vertex.
struct BlockDistances {
    blocks: usize,
    table: Vec<u32>,
}

impl BlockDistances {
    fn new(dm: &DistanceMatrix, labels: &[usize], blocks: usize) -> Self {
        let n = dm.order();
        let mut table = vec![u32::MAX; n * blocks];
        for v in 0..n {
            let row = &mut table[v * blocks..(v + 1) * blocks];
            for (u, &d) in dm.row(v).iter().enumerate() {
                let slot = &mut row[labels[u]];
                *slot = (*slot).min(d);
            }
        }
        Self { blocks, table }
    }

    fn row(&self, v: usize) -> &[u32] {
        &self.table[v * self.blocks..(v + 1) * self.blocks]
    }

    fn support(&self, x: usize, y: usize) -> usize {
        self.row(x)
            .iter()
            .zip(self.row(y))
            .filter(|(a, b)| a != b)
            .count()
    }
}

fn check_partition(g: &Graph, p: &VertexPartition) -> Result<()> {
    if p.order() != g.order() {
        return Err(Error::InvalidParams(format!(
            "partition covers {} vertices but the graph has {}",
            p.order(),
            g.order()
        )));
    }
    Ok(())
}

/// Number of blocks of `p` that distinguish `x` and `y`.
pub fn pair_block_support(g: &Graph, p: &VertexPartition, x: usize, y: usize) -> Result<usize> {
    let dm = g.metric()?;
    check_partition(g, p)?;
    if x == y || x >= g.order() || y >= g.order() {
        return Err(Error::InvalidPair(x, y));
    }
    Ok(BlockDistances::new(dm, p.labels(), p.len()).support(x, y))
}

/// Whether `p` is a k-partition generator. For `k <= 2` only pairs inside a
/// common block are examined: a pair split across two blocks is always
/// distinguished by both of them.
pub fn is_k_partition_generator(g: &Graph, p: &VertexPartition, k: usize) -> Result<bool> {
    let dm = g.metric()?;
    check_partition(g, p)?;
    Ok(generates(dm, p.labels(), p.len(), k))
}

/// [`is_k_partition_generator`] without the same-block shortcut.
pub fn is_k_partition_generator_full(g: &Graph, p: &VertexPartition, k: usize) -> Result<bool> {
    let dm = g.metric()?;
    check_partition(g, p)?;
    let bd = BlockDistances::new(dm, p.labels(), p.len());
    Ok(all_pairs(g.order()).all(|(x, y)| bd.support(x, y) >= k))
}

fn all_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (x + 1..n).map(move |y| (x, y)))
}

fn generates(dm: &DistanceMatrix, labels: &[usize], blocks: usize, k: usize) -> bool {
    let n = dm.order();
    let bd = BlockDistances::new(dm, labels, blocks);
    if k <= 2 {
        all_pairs(n)
            .filter(|&(x, y)| labels[x] == labels[y])
            .all(|(x, y)| bd.support(x, y) >= k)
    } else {
        all_pairs(n).all(|(x, y)| bd.support(x, y) >= k)
    }
}

/// The smallest block support over all pairs, with the first pair attaining it.
pub fn min_block_support(g: &Graph, p: &VertexPartition) -> Result<(usize, (usize, usize))> {
    let dm = g.metric()?;
    check_partition(g, p)?;
    let bd = BlockDistances::new(dm, p.labels(), p.len());
    let (pair, support) = all_pairs(g.order())
        .map(|pair| (pair, bd.support(pair.0, pair.1)))
        .min_by_key(|&(_, s)| s)
        .expect("order is at least 2");
    Ok((support, pair))
}

/// Calls `visit` on every restricted-growth string of length `n` with exactly
/// `blocks` distinct labels, in lexicographic order, until it returns `true`.
fn for_each_rgs(n: usize, blocks: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    fn step(
        labels: &mut [usize],
        pos: usize,
        used: usize,
        blocks: usize,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let n = labels.len();
        if pos == n {
            return used == blocks && visit(labels);
        }
        let remaining = n - pos;
        if blocks - used > remaining {
            return false;
        }
        if blocks - used < remaining {
            for b in 0..used {
                labels[pos] = b;
                if step(labels, pos + 1, used, blocks, visit) {
                    return true;
                }
            }
        }
        if used < blocks {
            labels[pos] = used;
            if step(labels, pos + 1, used + 1, blocks, visit) {
                return true;
            }
        }
        false
    }
    if blocks == 0 || blocks > n {
        return false;
    }
    let mut labels = vec![0; n];
    step(&mut labels, 0, 0, blocks, &mut visit)
}

pub fn pd_k_bruteforce(g: &Graph, k: usize) -> Result<PartitionSolveResult> {
    pd_k_bruteforce_with(g, k, &SearchLimits::default())
}

/// Minimum k-partition generator by exhaustive enumeration.
///
/// Block counts are tried in ascending order from `max(2, k)`; within a block
/// count, partitions are visited in lexicographic restricted-growth order and
/// the first generator is returned.
pub fn pd_k_bruteforce_with(
    g: &Graph,
    k: usize,
    limits: &SearchLimits,
) -> Result<PartitionSolveResult> {
    feasible_level(g, k)?;
    let n = g.order();
    if n > limits.partition_max_n {
        return Err(Error::TooLarge {
            n,
            limit: limits.partition_max_n,
        });
    }
    let dm = g.distances()?;
    for blocks in k.max(2)..=n {
        let mut found = None;
        for_each_rgs(n, blocks, |labels| {
            let hit = generates(dm, labels, blocks, k);
            if hit {
                found = Some(VertexPartition::from_labels(labels));
            }
            hit
        });
        if let Some(basis) = found {
            return Ok(PartitionSolveResult {
                k,
                value: blocks,
                basis,
                method: Method::BruteForce,
            });
        }
    }
    unreachable!("the singleton partition generates every feasible level")
}

/// The largest `k` such that some partition of `V` is a k-partition
/// generator, found by scanning every set partition, together with the first
/// partition attaining it.
pub fn max_partition_level(g: &Graph, limits: &SearchLimits) -> Result<(usize, VertexPartition)> {
    let dm = g.metric()?;
    let n = g.order();
    if n > limits.partition_max_n {
        return Err(Error::TooLarge {
            n,
            limit: limits.partition_max_n,
        });
    }
    let mut best: Option<(usize, Vec<usize>)> = None;
    for blocks in 1..=n {
        for_each_rgs(n, blocks, |labels| {
            let bd = BlockDistances::new(dm, labels, blocks);
            let level = all_pairs(n).map(|(x, y)| bd.support(x, y)).min().unwrap();
            if best.as_ref().is_none_or(|(b, _)| level > *b) {
                best = Some((level, labels.to_vec()));
            }
            false
        });
    }
    let (level, labels) = best.expect("at least one partition exists");
    Ok((level, VertexPartition::from_labels(&labels)))
}

/// `k + 1` consecutive blocks of the path `0 - 1 - ... - (n-1)`: writing
/// `n = (k+1) q + r` with `0 <= r <= k`, the first `r` blocks hold `q + 1`
/// vertices and the rest hold `q`.
pub fn path_partition_construction(n: usize, k: usize) -> Result<VertexPartition> {
    if n < 3 {
        return Err(Error::InvalidParams(format!(
            "path construction needs n >= 3, got {n}"
        )));
    }
    if k == 0 || k > n - 1 {
        return Err(Error::InfeasibleK { k, max: n - 1 });
    }
    let (q, r) = (n / (k + 1), n % (k + 1));
    let mut blocks = Vec::with_capacity(k + 1);
    let mut next = 0;
    for j in 0..=k {
        let len = if j < r { q + 1 } else { q };
        blocks.push((next..next + len).collect());
        next += len;
    }
    Ok(VertexPartition::new(n, blocks).expect("consecutive blocks cover the path"))
}

/// Whether the largest distinguishing set has at most `k + 1` vertices, which
/// forces every k-partition generator to be the singleton partition.
pub fn pd_equals_n_criterion(g: &Graph, k: usize) -> Result<bool> {
    feasible_level(g, k)?;
    Ok(dimensional_value_max(g)? <= k + 1)
}

/// Evaluates the general inequalities relating `pd_k`, `dim_k`, the order
/// and the distinguishing-set extremes, from exact brute-force values.
pub fn check_pd_bounds(g: &Graph, k: usize, limits: &SearchLimits) -> Result<Vec<BoundCheck>> {
    let max = feasible_level(g, k)?;
    let n = g.order();
    let d_max = dimensional_value_max(g)?;
    let pd = pd_k_bruteforce_with(g, k, limits)?.value;
    let dim = dim_k_bruteforce_with(g, k, limits)?.value;
    let is_k2 = n == 2;

    let mut checks = vec![
        if k == 1 {
            BoundCheck::le("pd_lower_bound", 2, pd)
        } else {
            BoundCheck::le("pd_lower_bound", k, pd)
        },
        BoundCheck::le("pd_at_most_order", pd, n),
        BoundCheck::new(
            "pd_equals_k_only_for_k2",
            (pd == k) == (k == 2 && is_k2),
            format!("pd_{k}={pd}, K_2={is_k2}"),
        ),
        BoundCheck::le("dim_upper_bound", dim, n - max + k),
    ];
    if k < max {
        let pd_next = pd_k_bruteforce_with(g, k + 1, limits)?.value;
        checks.push(BoundCheck::le("pd_monotone_in_k", pd, pd_next));
        checks.push(BoundCheck::le("pd_vs_dim", pd, dim + 1));
        checks.push(BoundCheck::le("pd_upper_bound", pd, n - max + k + 1));
    } else if dim < n {
        checks.push(BoundCheck::le("pd_vs_dim", pd, dim + 1));
    } else {
        checks.push(BoundCheck::le("pd_vs_dim", pd, dim));
    }
    if pd == n {
        checks.push(BoundCheck::new(
            "pd_full_only_near_top_level",
            k + 1 >= max,
            format!("pd_{k}=n with max level {max}"),
        ));
    }
    if d_max <= k + 1 {
        checks.push(BoundCheck::new(
            "pd_full_when_dmax_small",
            pd == n,
            format!("d*={d_max}, pd_{k}={pd}, n={n}"),
        ));
    }
    if k <= 2 {
        checks.push(BoundCheck::new(
            "pd_full_iff_dmax_small",
            (pd == n) == (d_max <= k + 1),
            format!("d*={d_max}, pd_{k}={pd}, n={n}"),
        ));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, path};
    use crate::resolve::dimensional_value;

    fn g(name: &str, params: &[usize]) -> Graph {
        generate(name, params, 0).unwrap()
    }

    fn part(n: usize, blocks: &[&[usize]]) -> VertexPartition {
        VertexPartition::new(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn rgs_counts_are_stirling_numbers() {
        // S(5, m) for m = 1..=5
        let expect = [1, 15, 25, 10, 1];
        for (m, &s) in (1..=5).zip(&expect) {
            let mut count = 0;
            for_each_rgs(5, m, |_| {
                count += 1;
                false
            });
            assert_eq!(count, s, "S(5,{m})");
        }
        let mut first = None;
        for_each_rgs(4, 2, |l| {
            first = Some(l.to_vec());
            true
        });
        assert_eq!(first, Some(vec![0, 0, 0, 1]));
    }

    #[test]
    fn block_supports() {
        let p3 = path(3);
        let singles = VertexPartition::singletons(3);
        assert_eq!(pair_block_support(&p3, &singles, 0, 1).unwrap(), 3);
        assert_eq!(pair_block_support(&p3, &singles, 0, 2).unwrap(), 2);
        let split = part(3, &[&[0], &[1, 2]]);
        // d(1,{0}) = 1, d(2,{0}) = 2; both are at distance 0 from {1,2}
        assert_eq!(pair_block_support(&p3, &split, 1, 2).unwrap(), 1);
        assert!(pair_block_support(&p3, &split, 0, 1).unwrap() >= 2);
        assert_eq!(
            pair_block_support(&p3, &split, 2, 2),
            Err(Error::InvalidPair(2, 2))
        );
    }

    #[test]
    fn generator_examples() {
        let k3 = g("complete", &[3]);
        assert!(!is_k_partition_generator(&k3, &part(3, &[&[0, 1], &[2]]), 2).unwrap());
        assert!(is_k_partition_generator(&k3, &VertexPartition::singletons(3), 2).unwrap());
        let c5 = g("cycle", &[5]);
        assert!(is_k_partition_generator(&c5, &VertexPartition::singletons(5), 4).unwrap());
        assert!(!is_k_partition_generator(&c5, &VertexPartition::singletons(5), 5).unwrap());
    }

    #[test]
    fn brute_force_values() {
        assert_eq!(pd_k_bruteforce(&path(5), 3).unwrap().value, 4);
        assert_eq!(
            pd_k_bruteforce(&g("complete_minus_edge", &[4]), 2)
                .unwrap()
                .value,
            4
        );
        assert_eq!(pd_k_bruteforce(&g("fan", &[4]), 3).unwrap().value, 5);
        assert_eq!(pd_k_bruteforce(&path(2), 2).unwrap().value, 2);
        let r = pd_k_bruteforce(&path(4), 1).unwrap();
        assert_eq!(r.basis, part(4, &[&[0, 1, 2], &[3]]));
        assert_eq!(
            pd_k_bruteforce(&path(5), 9),
            Err(Error::InfeasibleK { k: 9, max: 4 })
        );
        let tight = SearchLimits {
            partition_max_n: 4,
            ..SearchLimits::default()
        };
        assert_eq!(
            pd_k_bruteforce_with(&path(5), 1, &tight),
            Err(Error::TooLarge { n: 5, limit: 4 })
        );
    }

    #[test]
    fn max_level_matches_dimensional_value() {
        for graph in [path(5), g("cycle", &[6]), g("wheel", &[4]), g("star", &[3])] {
            let (level, witness) = max_partition_level(&graph, &SearchLimits::default()).unwrap();
            assert_eq!(level, dimensional_value(&graph).unwrap());
            assert!(is_k_partition_generator(&graph, &witness, level).unwrap());
        }
    }

    #[test]
    fn path_construction_sizes() {
        let sizes = |n, k| -> Vec<usize> {
            path_partition_construction(n, k)
                .unwrap()
                .blocks()
                .iter()
                .map(Vec::len)
                .collect()
        };
        assert_eq!(sizes(5, 3), vec![2, 1, 1, 1]);
        assert_eq!(sizes(6, 1), vec![3, 3]);
        assert_eq!(sizes(9, 2), vec![3, 3, 3]);
        assert_eq!(
            path_partition_construction(5, 5),
            Err(Error::InfeasibleK { k: 5, max: 4 })
        );
        assert!(matches!(
            path_partition_construction(2, 1),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn full_order_criterion() {
        for n in 2..7 {
            assert!(pd_equals_n_criterion(&g("complete", &[n]), 1).unwrap());
        }
        assert!(pd_equals_n_criterion(&g("complete_minus_edge", &[4]), 2).unwrap());
        assert!(!pd_equals_n_criterion(&path(5), 2).unwrap());
        assert!(matches!(
            pd_equals_n_criterion(&g("complete", &[4]), 3),
            Err(Error::InfeasibleK { .. })
        ));
    }

    #[test]
    fn bound_reports_pass() {
        let limits = SearchLimits::default();
        for (graph, k) in [
            (path(4), 1),
            (g("complete", &[5]), 2),
            (g("cycle", &[6]), 3),
        ] {
            for check in check_pd_bounds(&graph, k, &limits).unwrap() {
                assert!(check.holds, "{check:?}");
            }
        }
    }
}
