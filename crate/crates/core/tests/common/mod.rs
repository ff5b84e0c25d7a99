//! Brute-force oracles for cross-checking: deliberately simpler and slower
//! than the library code under test, sharing none of its search machinery.
//!
//! Shared across test targets; not every target uses every oracle.
#![allow(dead_code)]

use std::collections::BTreeSet;

use evencycles::Graph;
use itertools::Itertools;

/// Every labeled graph on n vertices, by edge-subset mask.
pub fn labeled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edge_list(n, &edges).unwrap()
        })
        .collect()
}

fn subset_has_spanning_cycle(g: &Graph, subset: &[usize]) -> bool {
    let k = subset.len();
    subset[1..].iter().copied().permutations(k - 1).any(|rest| {
        let mut order = vec![subset[0]];
        order.extend(rest);
        order.windows(2).all(|w| g.has_edge(w[0], w[1])) && g.has_edge(order[k - 1], order[0])
    })
}

/// Cycle lengths by exhaustion: length k is attained iff some k-subset of
/// vertices carries a spanning cycle, tried over raw permutations.
pub fn spectrum_oracle(g: &Graph) -> BTreeSet<usize> {
    let mut lengths = BTreeSet::new();
    for k in 3..=g.n() {
        if (0..g.n())
            .combinations(k)
            .any(|subset| subset_has_spanning_cycle(g, &subset))
        {
            lengths.insert(k);
        }
    }
    lengths
}

/// (x, y)-path lengths by exhaustion over vertex orderings.
pub fn path_spectrum_oracle(g: &Graph, x: usize, y: usize) -> BTreeSet<usize> {
    let mut lengths = BTreeSet::new();
    if g.has_edge(x, y) {
        lengths.insert(1);
    }
    let interior: Vec<usize> = (0..g.n()).filter(|&v| v != x && v != y).collect();
    for k in 1..=interior.len() {
        let found = interior.iter().copied().permutations(k).any(|middle| {
            let mut order = vec![x];
            order.extend(middle);
            order.push(y);
            order.windows(2).all(|w| g.has_edge(w[0], w[1]))
        });
        if found {
            lengths.insert(k + 1);
        }
    }
    lengths
}

pub fn component_count(g: &Graph) -> usize {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut count = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
    }
    count
}

pub fn brute_is_connected(g: &Graph) -> bool {
    component_count(g) <= 1
}

fn without_vertices(g: &Graph, drop: &[usize]) -> Graph {
    let keep: Vec<usize> = (0..g.n()).filter(|v| !drop.contains(v)).collect();
    g.induced_subgraph(&keep).unwrap()
}

/// Vertices whose removal increases the component count.
pub fn brute_cut_vertices(g: &Graph) -> Vec<usize> {
    let base = component_count(g);
    (0..g.n())
        .filter(|&v| g.n() > 1 && component_count(&without_vertices(g, &[v])) > base)
        .collect()
}

/// Unordered pairs whose removal disconnects a 2-connected graph.
pub fn brute_two_cuts(g: &Graph) -> Vec<(usize, usize)> {
    let mut cuts = Vec::new();
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            let rest = without_vertices(g, &[x, y]);
            if rest.n() >= 2 && component_count(&rest) > 1 {
                cuts.push((x, y));
            }
        }
    }
    cuts
}
