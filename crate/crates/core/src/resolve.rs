//! Distinguishing sets and the parameters derived from them.
//!
//! A vertex `z` distinguishes `x` and `y` when `d(z, x) != d(z, y)`. The set of
//! all such `z` always contains `x` and `y` themselves. Its minimum size over
//! all pairs is the largest `k` for which a k-metric (equivalently
//! k-partition) generator exists.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

fn check_pair(n: usize, x: usize, y: usize) -> Result<()> {
    if x == y || x >= n || y >= n {
        Err(Error::InvalidPair(x, y))
    } else {
        Ok(())
    }
}

/// Vertices distinguishing `x` and `y`, in ascending order.
pub fn distinguishing_set(g: &Graph, x: usize, y: usize) -> Result<Vec<usize>> {
    let dm = g.metric()?;
    check_pair(g.order(), x, y)?;
    Ok(distinguishers(dm, x, y).collect())
}

pub(crate) fn distinguishers(
    dm: &DistanceMatrix,
    x: usize,
    y: usize,
) -> impl Iterator<Item = usize> + '_ {
    let (rx, ry) = (dm.row(x), dm.row(y));
    (0..dm.order()).filter(move |&z| rx[z] != ry[z])
}

fn distinguisher_count(dm: &DistanceMatrix, x: usize, y: usize) -> usize {
    dm.row(x)
        .iter()
        .zip(dm.row(y))
        .filter(|(a, b)| a != b)
        .count()
}

/// Bitmask of the distinguishing set of every unordered pair `x < y`, in
/// lexicographic pair order. Requires `n <= 64`.
pub(crate) fn pair_masks(dm: &DistanceMatrix) -> Vec<u64> {
    let n = dm.order();
    debug_assert!(n <= 64);
    let mut masks = Vec::with_capacity(n * (n - 1) / 2);
    for x in 0..n {
        for y in x + 1..n {
            masks.push(distinguishers(dm, x, y).fold(0u64, |m, z| m | 1 << z));
        }
    }
    masks
}

fn pair_counts(dm: &DistanceMatrix) -> impl Iterator<Item = usize> + '_ {
    let n = dm.order();
    (0..n).flat_map(move |x| (x + 1..n).map(move |y| distinguisher_count(dm, x, y)))
}

/// The minimum size of a distinguishing set over all pairs of distinct vertices.
pub fn dimensional_value(g: &Graph) -> Result<usize> {
    Ok(pair_counts(g.metric()?).min().expect("order is at least 2"))
}

/// The maximum size of a distinguishing set over all pairs of distinct vertices.
pub fn dimensional_value_max(g: &Graph) -> Result<usize> {
    Ok(pair_counts(g.metric()?).max().expect("order is at least 2"))
}

/// Every pair's distinguishing set together with their minimum and maximum size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguishProfile {
    n: usize,
    pair_sets: Vec<Vec<usize>>,
    pub d_min: usize,
    pub d_max: usize,
}

impl DistinguishProfile {
    pub fn new(g: &Graph) -> Result<Self> {
        let dm = g.metric()?;
        let n = g.order();
        let mut pair_sets = Vec::with_capacity(n * (n - 1) / 2);
        for x in 0..n {
            for y in x + 1..n {
                pair_sets.push(distinguishers(dm, x, y).collect::<Vec<_>>());
            }
        }
        let d_min = pair_sets.iter().map(Vec::len).min().unwrap();
        let d_max = pair_sets.iter().map(Vec::len).max().unwrap();
        Ok(Self {
            n,
            pair_sets,
            d_min,
            d_max,
        })
    }

    fn pair_index(&self, x: usize, y: usize) -> usize {
        let (x, y) = if x < y { (x, y) } else { (y, x) };
        x * (2 * self.n - x - 1) / 2 + (y - x - 1)
    }

    pub fn set(&self, x: usize, y: usize) -> Result<&[usize]> {
        check_pair(self.n, x, y)?;
        Ok(&self.pair_sets[self.pair_index(x, y)])
    }

    /// `((x, y), set)` for every pair `x < y`.
    pub fn pairs(&self) -> impl Iterator<Item = ((usize, usize), &[usize])> + '_ {
        let n = self.n;
        (0..n)
            .flat_map(move |x| (x + 1..n).map(move |y| (x, y)))
            .zip(self.pair_sets.iter().map(Vec::as_slice))
    }
}

/// Twin equivalence classes: `x` and `y` are twins when their open or their
/// closed neighborhoods coincide. Classes are sorted, and ordered by smallest
/// member.
pub fn twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }

    let mut open: HashMap<&[usize], usize> = HashMap::new();
    let mut closed: HashMap<Vec<usize>, usize> = HashMap::new();
    for v in 0..n {
        let mut keys = vec![];
        if let Some(&u) = open.get(g.neighbors(v)) {
            keys.push(u);
        } else {
            open.insert(g.neighbors(v), v);
        }
        let mut shut = g.neighbors(v).to_vec();
        let at = shut.binary_search(&v).unwrap_err();
        shut.insert(at, v);
        match closed.get(&shut) {
            Some(&u) => keys.push(u),
            None => {
                closed.insert(shut, v);
            }
        }
        for u in keys {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a.max(b)] = a.min(b);
        }
    }

    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut slot = HashMap::new();
    for v in 0..n {
        let root = find(&mut parent, v);
        let next = classes.len();
        let i = *slot.entry(root).or_insert(next);
        if i == next {
            classes.push(Vec::new());
        }
        classes[i].push(v);
    }
    classes
}

pub fn has_nontrivial_twin(g: &Graph) -> bool {
    twin_classes(g).iter().any(|c| c.len() >= 2)
}

/// Exact clique number by branch and bound, pruning with greedy colorings.
pub fn clique_number(g: &Graph) -> usize {
    let mut best = 0;
    let candidates: Vec<usize> = g.vertices().collect();
    expand(g, 0, candidates, &mut best);
    best
}

fn expand(g: &Graph, size: usize, candidates: Vec<usize>, best: &mut usize) {
    let (order, colors) = color_sort(g, &candidates);
    for i in (0..order.len()).rev() {
        if size + colors[i] <= *best {
            return;
        }
        let v = order[i];
        let next: Vec<usize> = order[..i]
            .iter()
            .copied()
            .filter(|&u| g.has_edge(u, v))
            .collect();
        if next.is_empty() {
            *best = (*best).max(size + 1);
        } else {
            expand(g, size + 1, next, best);
        }
    }
}

/// Orders `candidates` by greedy color class; `colors[i]` bounds the clique
/// size within `order[..=i]`.
fn color_sort(g: &Graph, candidates: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in candidates {
        match classes
            .iter_mut()
            .find(|class| class.iter().all(|&u| !g.has_edge(u, v)))
        {
            Some(class) => class.push(v),
            None => classes.push(vec![v]),
        }
    }
    let mut order = Vec::with_capacity(candidates.len());
    let mut colors = Vec::with_capacity(candidates.len());
    for (c, class) in classes.into_iter().enumerate() {
        colors.extend(std::iter::repeat_n(c + 1, class.len()));
        order.extend(class);
    }
    (order, colors)
}

/// Distance from `u` to the nearest vertex of `set`.
pub fn set_distance(g: &Graph, u: usize, set: &[usize]) -> Result<u32> {
    let dm = g.distances()?;
    set.iter()
        .map(|&v| dm.get(u, v))
        .min()
        .ok_or(Error::InvalidSet)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::generate;

    fn g(name: &str, params: &[usize]) -> Graph {
        generate(name, params, 0).unwrap()
    }

    #[test]
    fn small_distinguishing_sets() {
        assert_eq!(
            distinguishing_set(&g("path", &[2]), 0, 1).unwrap(),
            vec![0, 1]
        );
        let p3 = g("path", &[3]);
        assert_eq!(distinguishing_set(&p3, 0, 2).unwrap(), vec![0, 2]);
        // d(.,0) = (0,1,2) and d(.,1) = (1,0,1) differ everywhere
        assert_eq!(distinguishing_set(&p3, 0, 1).unwrap(), vec![0, 1, 2]);
        assert_eq!(distinguishing_set(&p3, 1, 1), Err(Error::InvalidPair(1, 1)));
    }

    #[test]
    fn dimensional_values_of_families() {
        assert_eq!(dimensional_value(&g("complete", &[5])).unwrap(), 2);
        assert_eq!(dimensional_value(&g("cycle", &[6])).unwrap(), 4);
        assert_eq!(dimensional_value(&g("cycle", &[7])).unwrap(), 6);
        assert_eq!(dimensional_value(&g("path", &[6])).unwrap(), 5);
        assert_eq!(dimensional_value(&g("wheel", &[5])).unwrap(), 4);
        assert_eq!(
            dimensional_value_max(&g("complete_minus_edge", &[4])).unwrap(),
            3
        );
        assert_eq!(dimensional_value_max(&g("complete", &[5])).unwrap(), 2);
        assert_eq!(dimensional_value_max(&g("cycle", &[7])).unwrap(), 6);
        assert_eq!(dimensional_value(&g("path", &[2])).unwrap(), 2);
    }

    #[test]
    fn solver_entry_rejects_disconnected() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(dimensional_value(&g), Err(Error::Disconnected));
    }

    #[test]
    fn profile_matches_direct_sets() {
        let w = g("wheel", &[5]);
        let profile = DistinguishProfile::new(&w).unwrap();
        assert_eq!((profile.d_min, profile.d_max), (4, 4));
        for ((x, y), set) in profile.pairs() {
            assert_eq!(set, distinguishing_set(&w, x, y).unwrap());
            assert_eq!(profile.set(y, x).unwrap(), set);
        }
    }

    #[test]
    fn twins() {
        assert_eq!(twin_classes(&g("complete", &[4])), vec![vec![0, 1, 2, 3]]);
        assert_eq!(twin_classes(&g("path", &[4])).len(), 4);
        assert_eq!(twin_classes(&g("star", &[3])), vec![vec![0], vec![1, 2, 3]]);
        assert!(has_nontrivial_twin(&g("complete", &[2])));
        assert!(!has_nontrivial_twin(&g("path", &[5])));
        assert!(has_nontrivial_twin(&g("complete_bipartite", &[2, 3])));
        // P_3 ends share the open neighborhood {1}
        assert_eq!(twin_classes(&g("path", &[3])), vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(clique_number(&g("complete", &[6])), 6);
        assert_eq!(clique_number(&g("cycle", &[5])), 2);
        assert_eq!(clique_number(&g("wheel", &[5])), 3);
        assert_eq!(clique_number(&g("wheel", &[4])), 3);
        assert_eq!(clique_number(&Graph::empty(3)), 1);
    }

    #[test]
    fn set_distances() {
        let p4 = g("path", &[4]);
        assert_eq!(set_distance(&p4, 1, &[1, 3]).unwrap(), 0);
        assert_eq!(set_distance(&p4, 0, &[2, 3]).unwrap(), 2);
        assert_eq!(set_distance(&g("cycle", &[6]), 0, &[2, 4]).unwrap(), 2);
        assert_eq!(set_distance(&p4, 0, &[]), Err(Error::InvalidSet));
    }
}
