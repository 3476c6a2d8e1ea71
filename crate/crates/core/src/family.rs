//! Named graph families with fixed, documented vertex labelings.
//!
//! | family               | params  | labeling                                      |
//! |----------------------|---------|-----------------------------------------------|
//! | `path`               | n >= 2  | `0 - 1 - ... - (n-1)`                         |
//! | `cycle`              | n >= 3  | path plus the edge `(n-1, 0)`                 |
//! | `complete`           | n >= 1  |                                               |
//! | `complete_bipartite` | r, s >= 1 | sides `0..r` and `r..r+s`                   |
//! | `star`               | n >= 1  | `K_{1,n}`, center `0`                          |
//! | `wheel`              | n >= 3  | hub `0` joined to a cycle on `1..=n`          |
//! | `fan`                | n >= 3  | hub `0` joined to a path on `1..=n`           |
//! | `complete_minus_edge`| n >= 3  | `K_n` without the edge `(0, 1)`               |
//! | `random_tree`        | n >= 2  | decoded from a seeded uniform Prüfer sequence |

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Wheel(usize),
    Fan(usize),
    CompleteMinusEdge(usize),
    RandomTree { n: usize, seed: u64 },
}

impl Family {
    /// Parses a family name and its size parameters. `seed` is only used by
    /// `random_tree`.
    pub fn parse(name: &str, params: &[usize], seed: u64) -> Result<Self> {
        let one = |name: &str| -> Result<usize> {
            match params {
                [n] => Ok(*n),
                _ => Err(Error::InvalidParams(format!(
                    "{name} takes exactly one size parameter, got {}",
                    params.len()
                ))),
            }
        };
        let family = match name {
            "path" => Family::Path(one(name)?),
            "cycle" => Family::Cycle(one(name)?),
            "complete" => Family::Complete(one(name)?),
            "complete_bipartite" => match params {
                [r, s] => Family::CompleteBipartite(*r, *s),
                _ => {
                    return Err(Error::InvalidParams(
                        "complete_bipartite takes two side sizes".into(),
                    ))
                }
            },
            "star" => Family::Star(one(name)?),
            "wheel" => Family::Wheel(one(name)?),
            "fan" => Family::Fan(one(name)?),
            "complete_minus_edge" => Family::CompleteMinusEdge(one(name)?),
            "random_tree" => Family::RandomTree {
                n: one(name)?,
                seed,
            },
            other => return Err(Error::UnknownFamily(other.to_string())),
        };
        Ok(family)
    }

    pub fn build(self) -> Result<Graph> {
        let need = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                Err(Error::InvalidParams(format!("{self}: {what}")))
            }
        };
        match self {
            Family::Path(n) => {
                need(n >= 2, "path needs n >= 2")?;
                Ok(path(n))
            }
            Family::Cycle(n) => {
                need(n >= 3, "cycle needs n >= 3")?;
                let mut edges = path_edges(0, n);
                edges.push((n - 1, 0));
                Graph::new(n, &edges)
            }
            Family::Complete(n) => {
                need(n >= 1, "complete needs n >= 1")?;
                Ok(complete(n))
            }
            Family::CompleteBipartite(r, s) => {
                need(r >= 1 && s >= 1, "both sides need at least one vertex")?;
                let edges: Vec<_> = (0..r)
                    .flat_map(|u| (r..r + s).map(move |v| (u, v)))
                    .collect();
                Graph::new(r + s, &edges)
            }
            Family::Star(n) => {
                need(n >= 1, "star needs at least one leaf")?;
                let edges: Vec<_> = (1..=n).map(|v| (0, v)).collect();
                Graph::new(n + 1, &edges)
            }
            Family::Wheel(n) => {
                need(n >= 3, "wheel rim needs n >= 3")?;
                let mut edges = path_edges(1, n);
                edges.push((n, 1));
                edges.extend((1..=n).map(|v| (0, v)));
                Graph::new(n + 1, &edges)
            }
            Family::Fan(n) => {
                need(n >= 3, "fan spine needs n >= 3")?;
                let mut edges = path_edges(1, n);
                edges.extend((1..=n).map(|v| (0, v)));
                Graph::new(n + 1, &edges)
            }
            Family::CompleteMinusEdge(n) => {
                need(n >= 3, "complete_minus_edge needs n >= 3")?;
                let edges: Vec<_> = complete(n)
                    .edges()
                    .into_iter()
                    .filter(|&e| e != (0, 1))
                    .collect();
                Graph::new(n, &edges)
            }
            Family::RandomTree { n, seed } => {
                need(n >= 2, "random_tree needs n >= 2")?;
                Ok(random_tree(n, seed))
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path(n) => write!(f, "path {n}"),
            Family::Cycle(n) => write!(f, "cycle {n}"),
            Family::Complete(n) => write!(f, "complete {n}"),
            Family::CompleteBipartite(r, s) => write!(f, "complete_bipartite {r} {s}"),
            Family::Star(n) => write!(f, "star {n}"),
            Family::Wheel(n) => write!(f, "wheel {n}"),
            Family::Fan(n) => write!(f, "fan {n}"),
            Family::CompleteMinusEdge(n) => write!(f, "complete_minus_edge {n}"),
            Family::RandomTree { n, seed } => write!(f, "random_tree {n} seed={seed}"),
        }
    }
}

/// Builds a graph from a family name and parameters.
pub fn generate(name: &str, params: &[usize], seed: u64) -> Result<Graph> {
    Family::parse(name, params, seed)?.build()
}

fn path_edges(first: usize, n: usize) -> Vec<(usize, usize)> {
    (first + 1..first + n).map(|v| (v - 1, v)).collect()
}

pub(crate) fn path(n: usize) -> Graph {
    Graph::new(n, &path_edges(0, n)).expect("path edges are valid")
}

pub(crate) fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, &edges).expect("complete edges are valid")
}

/// A uniformly random labeled tree on `n >= 2` vertices.
///
/// The Prüfer sequence is `n - 2` draws of `gen_range(0..n)` from
/// `ChaCha8Rng::seed_from_u64(seed)`; it is decoded by repeatedly joining the
/// smallest current leaf to the next sequence entry.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    assert!(n >= 2, "a tree needs at least two vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Graph::new(n, &prufer_decode(n, &code)).expect("Prüfer decoding yields a tree")
}

fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &v in code {
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in code {
        let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_edge_counts() {
        assert_eq!(generate("complete", &[4], 0).unwrap().size(), 6);
        let w = generate("wheel", &[5], 0).unwrap();
        assert_eq!((w.order(), w.size(), w.degree(0)), (6, 10, 5));
        let kme = generate("complete_minus_edge", &[4], 0).unwrap();
        assert_eq!(kme.size(), 5);
        assert!(!kme.has_edge(0, 1));
        let fan = generate("fan", &[4], 0).unwrap();
        assert_eq!((fan.order(), fan.size()), (5, 7));
        let star = generate("star", &[3], 0).unwrap();
        assert_eq!((star.order(), star.degree(0)), (4, 3));
        let kb = generate("complete_bipartite", &[2, 3], 0).unwrap();
        assert_eq!(kb.size(), 6);
    }

    #[test]
    fn rejects_bad_requests() {
        assert!(matches!(
            generate("cycle", &[2], 0),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            generate("path", &[1], 0),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            generate("path", &[], 0),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            generate("petersen", &[10], 0),
            Err(Error::UnknownFamily(_))
        ));
    }

    #[test]
    fn cycle_is_walk_ordered() {
        let c = generate("cycle", &[5], 0).unwrap();
        assert!((0..5).all(|i| c.has_edge(i, (i + 1) % 5)));
    }

    #[test]
    fn prufer_decoding_known_code() {
        // the classic example: code [3, 3, 3, 4] on six vertices
        let mut edges = prufer_decode(6, &[3, 3, 3, 4]);
        edges.sort();
        assert_eq!(edges, vec![(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
    }

    #[test]
    fn random_trees_are_trees_and_reproducible() {
        for n in 2..30 {
            for seed in 0..5 {
                let t = random_tree(n, seed);
                assert!(t.is_tree());
                assert_eq!(t, random_tree(n, seed));
            }
        }
    }
}
