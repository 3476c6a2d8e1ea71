//! Exterior major vertices, the closed form for `dim_k` of trees, and the
//! leg-based k-partition generator for trees.
//!
//! A *major* vertex has degree at least 3. A leaf `u` is a *terminal* of the
//! major vertex `w` when `w` is strictly closer to `u` than every other major
//! vertex. Only major vertices with at least two terminals take part below;
//! for such a `w`, `l(w)` is the distance to its nearest terminal and
//! `varsigma(w)` the smallest sum of distances to two distinct terminals.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric_dim::{dim_k_bruteforce_with, MetricSolveResult};
use crate::partition_dim::{
    is_k_partition_generator, path_partition_construction, pd_k_bruteforce_with,
    PartitionSolveResult,
};
use crate::resolve::dimensional_value;
use crate::vertex_partition::VertexPartition;
use crate::{BoundCheck, Method, SearchLimits};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Terminal {
    pub distance: u32,
    pub leaf: usize,
}

/// A major vertex with at least two terminals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MajorVertexRecord {
    pub vertex: usize,
    /// Sorted by distance, then leaf id. The first entry realizes `l`.
    pub terminals: Vec<Terminal>,
}

impl MajorVertexRecord {
    fn new(vertex: usize, mut terminals: Vec<Terminal>) -> Self {
        terminals.sort_unstable();
        Self { vertex, terminals }
    }

    /// Terminal degree.
    pub fn ter(&self) -> usize {
        self.terminals.len()
    }

    /// Distance to the nearest terminal.
    pub fn l(&self) -> u32 {
        self.terminals[0].distance
    }

    /// Shortest walk between two distinct terminals through this vertex.
    pub fn varsigma(&self) -> u32 {
        self.terminals[0].distance + self.terminals[1].distance
    }

    /// Number of basis vertices this major vertex contributes to a k-metric
    /// basis of a tree.
    pub fn i_k(&self, k: usize) -> usize {
        let (ter, l) = (self.ter(), self.l() as usize);
        let (floor, ceil) = (k / 2, k.div_ceil(2));
        if l <= floor {
            (ter - 1) * (k - l) + l
        } else {
            (ter - 1) * ceil + floor
        }
    }
}

/// Major vertices of any connected graph having at least two terminals,
/// using the distance definition of terminals. Sorted by vertex id.
pub fn exterior_major_records(g: &Graph) -> Result<Vec<MajorVertexRecord>> {
    let dm = g.distances()?;
    let majors: Vec<usize> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
    let mut terminals: BTreeMap<usize, Vec<Terminal>> = BTreeMap::new();
    for leaf in g.vertices().filter(|&v| g.degree(v) == 1) {
        let Some(&nearest) = majors.iter().min_by_key(|&&w| dm.get(leaf, w)) else {
            break;
        };
        let distance = dm.get(leaf, nearest);
        if majors
            .iter()
            .all(|&w| w == nearest || dm.get(leaf, w) > distance)
        {
            terminals
                .entry(nearest)
                .or_default()
                .push(Terminal { distance, leaf });
        }
    }
    Ok(terminals
        .into_iter()
        .filter(|(_, t)| t.len() >= 2)
        .map(|(w, t)| MajorVertexRecord::new(w, t))
        .collect())
}

/// The minimum of `varsigma(w)` over all major vertices with two or more
/// terminals.
pub fn varsigma(g: &Graph) -> Result<u32> {
    exterior_major_records(g)?
        .iter()
        .map(MajorVertexRecord::varsigma)
        .min()
        .ok_or(Error::NoExteriorMajorVertex)
}

/// Major vertices sharing one value of `l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelClass {
    pub l: u32,
    pub members: Vec<usize>,
    /// Largest terminal degree in the class.
    pub t: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeMetricProfile {
    /// Sorted by vertex id.
    pub records: Vec<MajorVertexRecord>,
    pub varsigma: u32,
    /// Largest terminal degree.
    pub tau: usize,
    /// Ordered by strictly increasing `l`.
    pub levels: Vec<LevelClass>,
    /// `legs[i][j]`: the path from `records[i].vertex` out to its `j`-th
    /// terminal, excluding the major vertex itself.
    legs: Vec<Vec<Vec<usize>>>,
}

/// Walks from a leaf through degree-2 vertices. Returns the first major vertex
/// reached and the traversed leg ordered outward from it, or `None` when the
/// walk ends at another leaf.
fn walk_to_major(t: &Graph, leaf: usize) -> Option<(usize, Vec<usize>)> {
    let mut leg = vec![leaf];
    let (mut prev, mut cur) = (leaf, t.neighbors(leaf)[0]);
    loop {
        match t.degree(cur) {
            1 => return None,
            2 => {
                let next = t.neighbors(cur).iter().copied().find(|&v| v != prev)?;
                leg.push(cur);
                (prev, cur) = (cur, next);
            }
            _ => {
                leg.reverse();
                return Some((cur, leg));
            }
        }
    }
}

pub fn tree_profile(t: &Graph) -> Result<TreeMetricProfile> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.order() < 2 || t.is_path() {
        return Err(Error::PathHasNoProfile);
    }
    let mut by_major: BTreeMap<usize, Vec<(Terminal, Vec<usize>)>> = BTreeMap::new();
    for leaf in t.vertices().filter(|&v| t.degree(v) == 1) {
        let (w, leg) = walk_to_major(t, leaf).expect("a non-path tree has a major vertex");
        let terminal = Terminal {
            distance: leg.len() as u32,
            leaf,
        };
        by_major.entry(w).or_default().push((terminal, leg));
    }

    let mut records = Vec::new();
    let mut legs = Vec::new();
    for (w, mut entries) in by_major.into_iter().filter(|(_, e)| e.len() >= 2) {
        entries.sort_unstable_by_key(|(terminal, _)| *terminal);
        let (terminals, paths): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
        records.push(MajorVertexRecord::new(w, terminals));
        legs.push(paths);
    }
    debug_assert!(!records.is_empty());

    let mut classes: BTreeMap<u32, Vec<&MajorVertexRecord>> = BTreeMap::new();
    for r in &records {
        classes.entry(r.l()).or_default().push(r);
    }
    let levels = classes
        .into_iter()
        .map(|(l, members)| LevelClass {
            l,
            t: members.iter().map(|r| r.ter()).max().unwrap(),
            members: members.iter().map(|r| r.vertex).collect(),
        })
        .collect();

    Ok(TreeMetricProfile {
        varsigma: records
            .iter()
            .map(MajorVertexRecord::varsigma)
            .min()
            .unwrap(),
        tau: records.iter().map(MajorVertexRecord::ter).max().unwrap(),
        records,
        levels,
        legs,
    })
}

impl TreeMetricProfile {
    /// Number of major vertices with at least two terminals.
    pub fn kappa(&self) -> usize {
        self.records.len()
    }

    pub fn check_level(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.varsigma as usize {
            Err(Error::InfeasibleK {
                k,
                max: self.varsigma as usize,
            })
        } else {
            Ok(())
        }
    }

    /// One-based index of the last level class with `l <= floor(k/2)`, or 1
    /// when even the first class lies above it.
    pub fn s_k(&self, k: usize) -> usize {
        self.levels
            .iter()
            .rposition(|c| c.l as usize <= k / 2)
            .map_or(1, |i| i + 1)
    }

    pub fn dim_k(&self, k: usize) -> usize {
        self.records.iter().map(|r| r.i_k(k)).sum()
    }

    /// Number of merged leg blocks beyond the first two legs of each major
    /// vertex in [`tree_partition_construction`].
    pub fn script_i_k(&self, k: usize) -> usize {
        let ceil = k.div_ceil(2);
        let t: Vec<usize> = self.levels.iter().map(|c| c.t).collect();
        let l: Vec<usize> = self.levels.iter().map(|c| c.l as usize).collect();
        let s = self.s_k(k);

        let first = (t[0] - 2) * (k.saturating_sub(l[0])).max(ceil);
        let mut middle = 0;
        let mut running_max = t[0];
        for i in 1..s {
            middle += t[i].saturating_sub(running_max) * (k - l[i]);
            running_max = running_max.max(t[i]);
        }
        let upper = t[s..].iter().copied().max().unwrap_or(0);
        let lower = t[..s].iter().copied().max().unwrap();
        first + middle + upper.saturating_sub(lower) * ceil
    }

    /// Upper bound on `pd_k` from the leg construction.
    pub fn partition_bound(&self, k: usize) -> usize {
        k * self.kappa() + self.script_i_k(k) + 1
    }
}

/// `dim_k` of a tree that is not a path, as the sum of the per-vertex terms.
pub fn tree_dim_k(t: &Graph, k: usize) -> Result<MetricSolveResult> {
    let profile = tree_profile(t)?;
    profile.check_level(k)?;
    Ok(MetricSolveResult {
        k,
        value: profile.dim_k(k),
        basis: None,
        method: Method::Formula,
    })
}

pub fn script_i_k(t: &Graph, k: usize) -> Result<usize> {
    let profile = tree_profile(t)?;
    profile.check_level(k)?;
    Ok(profile.script_i_k(k))
}

/// A k-partition generator of a tree that is not a path, with at most
/// `k * kappa + script_i_k + 1` blocks.
///
/// For each major vertex `w` with terminals `u_1, u_2, ...` (nearest first),
/// the leg towards `u_1` is cut into `min(l(w), floor(k/2))` blocks and every
/// other leg into `max(k - l(w), ceil(k/2))` blocks: single vertices walking
/// outward from `w`, with the remainder of the leg as the last block. The
/// blocks of the first two legs are kept per vertex; the `l`-th block of the
/// `j`-th leg (`j >= 3`) is merged across all major vertices. Everything left
/// over forms one final block.
pub fn tree_partition_construction(t: &Graph, k: usize) -> Result<VertexPartition> {
    let profile = tree_profile(t)?;
    profile.check_level(k)?;
    let (floor, ceil) = (k / 2, k.div_ceil(2));

    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut merged: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    let mut assigned = vec![false; t.order()];
    for (record, legs) in profile.records.iter().zip(&profile.legs) {
        let l = record.l() as usize;
        let (first_cuts, other_cuts) = if l <= floor {
            (l, k - l)
        } else {
            (floor, ceil)
        };
        for (j, leg) in legs.iter().enumerate() {
            let cuts = if j == 0 { first_cuts } else { other_cuts };
            for (index, piece) in cut_leg(leg, cuts).into_iter().enumerate() {
                for &v in &piece {
                    assigned[v] = true;
                }
                if j < 2 {
                    blocks.push(piece);
                } else {
                    merged.entry((j, index)).or_default().extend(piece);
                }
            }
        }
    }
    blocks.extend(merged.into_values());
    let rest: Vec<usize> = t.vertices().filter(|&v| !assigned[v]).collect();
    if !rest.is_empty() {
        blocks.push(rest);
    }
    Ok(VertexPartition::new(t.order(), blocks).expect("leg blocks partition the tree"))
}

/// The first `cuts - 1` vertices as singletons, then the rest of the leg.
fn cut_leg(leg: &[usize], cuts: usize) -> Vec<Vec<usize>> {
    if cuts == 0 || leg.is_empty() {
        return Vec::new();
    }
    let singles = (cuts - 1).min(leg.len());
    let mut pieces: Vec<Vec<usize>> = leg[..singles].iter().map(|&v| vec![v]).collect();
    if singles < leg.len() {
        pieces.push(leg[singles..].to_vec());
    }
    pieces
}

/// A k-partition generator built without search: consecutive blocks for
/// paths, the leg construction for other trees.
pub fn construct_partition(g: &Graph, k: usize) -> Result<PartitionSolveResult> {
    let max = dimensional_value(g)?;
    if k == 0 || k > max {
        return Err(Error::InfeasibleK { k, max });
    }
    let basis = if let Some(order) = g.path_order() {
        if g.order() == 2 {
            VertexPartition::singletons(2)
        } else {
            let canonical = path_partition_construction(g.order(), k)?;
            let mut labels = vec![0; g.order()];
            for (position, &v) in order.iter().enumerate() {
                labels[v] = canonical.block_of(position);
            }
            VertexPartition::from_labels(&labels)
        }
    } else if g.is_tree() {
        tree_partition_construction(g, k)?
    } else {
        return Err(Error::UnsupportedConstruction);
    };
    Ok(PartitionSolveResult {
        k,
        value: basis.len(),
        basis,
        method: Method::Construction,
    })
}

/// Checks every bound relating the tree parameters to `dim_k` and `pd_k`.
/// Brute-force values are used only when the tree is within `limits`.
pub fn check_tree_bounds(t: &Graph, k: usize, limits: &SearchLimits) -> Result<Vec<BoundCheck>> {
    let profile = tree_profile(t)?;
    profile.check_level(k)?;
    let n = t.order();
    let max = dimensional_value(t)?;
    let varsigma = profile.varsigma as usize;
    let (kappa, tau) = (profile.kappa(), profile.tau);
    let dim = profile.dim_k(k);
    let bound = profile.partition_bound(k);
    let built = tree_partition_construction(t, k)?;

    let mut checks = vec![
        BoundCheck::le("max_level_at_most_varsigma", max, varsigma),
        BoundCheck::new(
            "max_level_equals_varsigma",
            max == varsigma,
            format!("{max} vs {varsigma}"),
        ),
        BoundCheck::new(
            "construction_generates",
            is_k_partition_generator(t, &built, k)?,
            format!("{} blocks at k={k}", built.len()),
        ),
        BoundCheck::le("construction_size", built.len(), bound),
    ];
    match k {
        1 => checks.push(BoundCheck::eq(
            "script_i_at_1",
            profile.script_i_k(1),
            tau - 2,
        )),
        2 => checks.push(BoundCheck::eq(
            "script_i_at_2",
            profile.script_i_k(2),
            tau - 2,
        )),
        3 => checks.push(BoundCheck::eq(
            "script_i_at_3",
            profile.script_i_k(3),
            2 * tau - 4,
        )),
        _ => {}
    }
    if n <= limits.metric_max_n {
        let searched = dim_k_bruteforce_with(t, k, limits)?.value;
        checks.push(BoundCheck::eq("dim_formula_matches_search", dim, searched));
    }
    if n <= limits.partition_max_n {
        let pd = pd_k_bruteforce_with(t, k, limits)?.value;
        checks.push(BoundCheck::le("pd_vs_tree_dim", pd, dim + 1));
        checks.push(BoundCheck::le("pd_vs_leg_bound", pd, bound));
        match k {
            1 => checks.push(BoundCheck::le("pd1_leg_bound", pd, kappa + tau - 1)),
            2 => checks.push(BoundCheck::le("pd2_leg_bound", pd, 2 * kappa + tau - 1)),
            3 => checks.push(BoundCheck::le("pd3_leg_bound", pd, 3 * kappa + 2 * tau - 3)),
            _ => {}
        }
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, random_tree};

    #[test]
    fn star_profile() {
        let star = generate("star", &[4], 0).unwrap();
        let p = tree_profile(&star).unwrap();
        assert_eq!(p.kappa(), 1);
        assert_eq!(
            (p.records[0].vertex, p.records[0].l(), p.varsigma, p.tau),
            (0, 1, 2, 4)
        );
        assert_eq!(varsigma(&generate("star", &[3], 0).unwrap()).unwrap(), 2);
    }

    #[test]
    fn profile_errors() {
        let path = generate("path", &[5], 0).unwrap();
        assert_eq!(tree_profile(&path), Err(Error::PathHasNoProfile));
        let cycle = generate("cycle", &[5], 0).unwrap();
        assert_eq!(tree_profile(&cycle), Err(Error::NotATree));
        assert_eq!(varsigma(&cycle), Err(Error::NoExteriorMajorVertex));
        let star = generate("star", &[3], 0).unwrap();
        assert_eq!(
            tree_dim_k(&star, 3).unwrap_err(),
            Error::InfeasibleK { k: 3, max: 2 }
        );
    }

    #[test]
    fn per_vertex_terms() {
        let record = |ter: usize, l: u32| {
            MajorVertexRecord::new(
                0,
                (0..ter)
                    .map(|i| Terminal {
                        distance: l + i as u32,
                        leaf: i + 1,
                    })
                    .collect(),
            )
        };
        assert_eq!(record(2, 1).i_k(2), 2);
        assert_eq!(record(2, 2).i_k(3), 3);
        assert_eq!(record(5, 3).i_k(6), 15);
        assert_eq!(record(3, 1).i_k(1), 2);
    }

    #[test]
    fn star_dimension_and_construction() {
        let star = generate("star", &[3], 0).unwrap();
        assert_eq!(tree_dim_k(&star, 2).unwrap().value, 3);
        assert_eq!(script_i_k(&star, 2).unwrap(), 1);
        let built = tree_partition_construction(&star, 2).unwrap();
        assert!(is_k_partition_generator(&star, &built, 2).unwrap());
        assert!(built.len() <= 4);
    }

    #[test]
    fn walk_and_distance_definitions_agree_on_trees() {
        for seed in 0..60 {
            let t = random_tree(12, seed);
            if t.is_path() {
                continue;
            }
            let profile = tree_profile(&t).unwrap();
            assert_eq!(
                profile.records,
                exterior_major_records(&t).unwrap(),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn construction_is_exactly_the_bound() {
        for seed in 0..80 {
            let t = random_tree(9 + (seed as usize % 20), seed);
            let Ok(profile) = tree_profile(&t) else {
                continue;
            };
            for k in 1..=profile.varsigma as usize {
                let built = tree_partition_construction(&t, k).unwrap();
                assert_eq!(built.len(), profile.partition_bound(k), "seed {seed} k {k}");
            }
        }
    }

    #[test]
    fn constructs_for_relabeled_paths() {
        let g = Graph::new(6, &[(3, 0), (0, 5), (5, 1), (1, 4), (4, 2)]).unwrap();
        for k in 1..=5 {
            let r = construct_partition(&g, k).unwrap();
            assert_eq!(r.value, k + 1);
            assert!(is_k_partition_generator(&g, &r.basis, k).unwrap());
        }
        let k2 = generate("path", &[2], 0).unwrap();
        assert_eq!(construct_partition(&k2, 2).unwrap().value, 2);
        let c4 = generate("cycle", &[4], 0).unwrap();
        assert_eq!(
            construct_partition(&c4, 1),
            Err(Error::UnsupportedConstruction)
        );
    }
}
