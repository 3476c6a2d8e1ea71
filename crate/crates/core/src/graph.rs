//! Simple undirected graphs over contiguous vertex ids and their hop-count metric.

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted and symmetric. Connectivity is not required at
/// construction; solvers ask for it through [`Graph::distances`], which fails
/// with [`Error::Disconnected`] when some pair of vertices is unreachable.
#[derive(Clone)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
    distances: OnceLock<Option<DistanceMatrix>>,
}

impl Graph {
    /// Builds a graph from an edge list. Parallel edges are merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(Error::InvalidEdge { u, v, n });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Self {
            adjacency,
            edge_count: edge_count / 2,
            distances: OnceLock::new(),
        })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
            distances: OnceLock::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::with_capacity(self.edge_count);
        for (u, list) in self.adjacency.iter().enumerate() {
            edges.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        edges
    }

    pub fn is_connected(&self) -> bool {
        self.distances().is_ok()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.edge_count + 1 == self.order() && self.is_connected()
    }

    /// Vertices of a path graph in walk order starting from the smaller end,
    /// or `None` when the graph is not a path.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        let n = self.order();
        if n < 2 || !self.is_tree() || self.adjacency.iter().any(|l| l.len() > 2) {
            return None;
        }
        let start = self.vertices().find(|&v| self.degree(v) == 1)?;
        let mut order = Vec::with_capacity(n);
        let (mut prev, mut cur) = (usize::MAX, start);
        loop {
            order.push(cur);
            match self.adjacency[cur].iter().find(|&&w| w != prev) {
                Some(&next) => (prev, cur) = (cur, next),
                None => break,
            }
        }
        Some(order)
    }

    pub fn is_path(&self) -> bool {
        self.path_order().is_some()
    }

    /// All-pairs hop distances, computed by BFS on first use and cached.
    pub fn distances(&self) -> Result<&DistanceMatrix> {
        self.distances
            .get_or_init(|| DistanceMatrix::compute(self))
            .as_ref()
            .ok_or(Error::Disconnected)
    }

    /// Distances for a graph that every resolvability computation accepts:
    /// connected and of order at least 2.
    pub(crate) fn metric(&self) -> Result<&DistanceMatrix> {
        if self.order() < 2 {
            return Err(Error::TrivialGraph(self.order()));
        }
        self.distances()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges())
            .finish()
    }
}

/// Hop counts between every ordered pair of vertices of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    fn compute(g: &Graph) -> Option<Self> {
        let n = g.order();
        let mut d = vec![u32::MAX; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            row[s] = 0;
            queue.push_back(s);
            let mut reached = 1;
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &v in g.neighbors(u) {
                    if row[v] == u32::MAX {
                        row[v] = du + 1;
                        reached += 1;
                        queue.push_back(v);
                    }
                }
            }
            if reached != n {
                return None;
            }
        }
        Some(Self { n, d })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

/// The Cartesian product `g □ h`. Vertex `(i, j)` is encoded as `i * |h| + j`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.order();
    let mut edges = Vec::with_capacity(g.order() * h.size() + nh * g.size());
    for i in g.vertices() {
        for (j, j2) in h.edges() {
            edges.push((i * nh + j, i * nh + j2));
        }
    }
    for (i, i2) in g.edges() {
        for j in h.vertices() {
            edges.push((i * nh + j, i2 * nh + j));
        }
    }
    Graph::new(g.order() * nh, &edges).expect("product edges are in range")
}
