//! Every connected graph of a small order, one per isomorphism class.
//!
//! Edge subsets of `K_n` are filtered for connectivity and reduced to a
//! canonical code: the smallest edge bitmask over all relabelings that keep
//! vertices sorted by (degree, sorted distance row). That invariant is
//! preserved by isomorphisms, so two graphs share a code exactly when they
//! are isomorphic.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ENUMERATION_ORDER: usize = 7;

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Connected graphs on `n` vertices, one per isomorphism class, ordered by
/// canonical code.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::InvalidParams(format!(
            "enumeration supports orders 1..={MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    let all = pairs(n);
    let codes: BTreeSet<u64> = (0u64..1 << all.len())
        .into_par_iter()
        .filter(|mask| mask.count_ones() as usize + 1 >= n)
        .filter_map(|mask| {
            let adj = adjacency(n, &all, mask);
            connected(&adj).then(|| canonical_code(&adj))
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    Ok(codes
        .into_iter()
        .map(|code| {
            let edges: Vec<_> = all
                .iter()
                .enumerate()
                .filter(|(i, _)| code >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::new(n, &edges).expect("decoded edges are valid")
        })
        .collect())
}

/// Connected graphs of every order in `2..=max_n`.
pub fn connected_graphs_up_to(max_n: usize) -> Result<Vec<Graph>> {
    let mut all = Vec::new();
    for n in 2..=max_n {
        all.extend(connected_graphs(n)?);
    }
    Ok(all)
}

fn adjacency(n: usize, all: &[(usize, usize)], mask: u64) -> Vec<u32> {
    let mut adj = vec![0u32; n];
    for (i, &(u, v)) in all.iter().enumerate() {
        if mask >> i & 1 == 1 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    adj
}

fn connected(adj: &[u32]) -> bool {
    let full = (1u32 << adj.len()) - 1;
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == full
}

fn distance_row(adj: &[u32], s: usize) -> Vec<u32> {
    let mut row = vec![0u32; adj.len()];
    let mut seen = 1u32 << s;
    let mut frontier = seen;
    let mut depth = 0;
    while frontier != 0 {
        depth += 1;
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        frontier = next & !seen;
        seen |= next;
        let mut f = frontier;
        while f != 0 {
            row[f.trailing_zeros() as usize] = depth;
            f &= f - 1;
        }
    }
    row
}

fn canonical_code(adj: &[u32]) -> u64 {
    let n = adj.len();
    let mut keyed: Vec<((u32, Vec<u32>), usize)> = (0..n)
        .map(|v| {
            let mut row = distance_row(adj, v);
            row.sort_unstable();
            ((adj[v].count_ones(), row), v)
        })
        .collect();
    keyed.sort();
    // cell_start[p]: first sorted position sharing p's invariant
    let mut cell_start = vec![0; n];
    for p in 1..n {
        cell_start[p] = if keyed[p].0 == keyed[p - 1].0 {
            cell_start[p - 1]
        } else {
            p
        };
    }
    let order: Vec<usize> = keyed.iter().map(|(_, v)| *v).collect();
    let edges: Vec<(usize, usize)> = pairs(n)
        .into_iter()
        .filter(|&(u, v)| adj[u] >> v & 1 == 1)
        .collect();

    let mut best = u64::MAX;
    let mut position = vec![usize::MAX; n];
    let mut used = vec![false; n];
    relabel(
        0,
        n,
        &order,
        &cell_start,
        &edges,
        &mut position,
        &mut used,
        &mut best,
    );
    best
}

#[allow(clippy::too_many_arguments)]
fn relabel(
    p: usize,
    n: usize,
    order: &[usize],
    cell_start: &[usize],
    edges: &[(usize, usize)],
    position: &mut [usize],
    used: &mut [bool],
    best: &mut u64,
) {
    if p == n {
        let code = edges.iter().fold(0u64, |c, &(u, v)| {
            c | 1 << pair_index(n, position[u], position[v])
        });
        *best = (*best).min(code);
        return;
    }
    let start = cell_start[p];
    let end = (p..n).find(|&q| cell_start[q] != start).unwrap_or(n);
    for slot in start..end {
        let v = order[slot];
        if !used[slot] {
            used[slot] = true;
            position[v] = p;
            relabel(p + 1, n, order, cell_start, edges, position, used, best);
            used[slot] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequence() {
        // connected graphs up to isomorphism on 1..=6 vertices
        let expected = [1, 1, 2, 6, 21, 112];
        for (n, &count) in (1..=6).zip(&expected) {
            let graphs = connected_graphs(n).unwrap();
            assert_eq!(graphs.len(), count, "n = {n}");
            assert!(graphs.iter().all(|g| g.is_connected() && g.order() == n));
        }
    }

    #[test]
    fn seven_vertices() {
        assert_eq!(connected_graphs(7).unwrap().len(), 853);
    }

    #[test]
    fn relabeled_graphs_share_a_code() {
        let mut a = vec![0b110u32, 0b101, 0b011, 0]; // triangle on 0,1,2 ...
        a[2] |= 1 << 3;
        a[3] |= 1 << 2; // ... with a pendant at 2
        let b = vec![0b1000u32 | 0b0100, 0b0100, 0b0011 | 0b1000, 0b0101];
        // b: pendant 1 on 2, triangle 0,2,3
        assert!(connected(&a) && connected(&b));
        assert_eq!(canonical_code(&a), canonical_code(&b));
    }

    #[test]
    fn rejects_large_orders() {
        assert!(connected_graphs(8).is_err());
        assert!(connected_graphs(0).is_err());
    }
}
