//! Spanning-subgraph embedding by backtracking.

use crate::graph::Graph;

/// Looks for a bijection of the vertices of `g` onto the vertices of `host`
/// carrying every edge of `g` to an edge of `host`; returns the map
/// `m[v of g] = vertex of host`. Deterministic: among all embeddings the one
/// found first in candidate-ascending order is returned.
pub fn spanning_embedding(g: &Graph, host: &Graph) -> Option<Vec<usize>> {
    if g.n() != host.n() || g.edge_count() > host.edge_count() {
        return None;
    }
    let n = g.n();
    // assign high-degree vertices first so dead branches die early
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut assignment = vec![usize::MAX; n];
    if place(g, host, &order, 0, 0, &mut assignment) {
        Some(assignment)
    } else {
        None
    }
}

fn place(
    g: &Graph,
    host: &Graph,
    order: &[usize],
    depth: usize,
    used: u64,
    assignment: &mut Vec<usize>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    'candidates: for c in 0..host.n() {
        if used & (1 << c) != 0 || host.degree(c) < g.degree(v) {
            continue;
        }
        for &u in &order[..depth] {
            if g.has_edge(v, u) && !host.has_edge(c, assignment[u]) {
                continue 'candidates;
            }
        }
        assignment[v] = c;
        if place(g, host, order, depth + 1, used | (1 << c), assignment) {
            return true;
        }
    }
    assignment[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle_graph, path_graph, petersen, Graph};

    fn check_embedding(g: &Graph, host: &Graph, m: &[usize]) {
        let mut seen = 0u64;
        for &c in m {
            assert!(seen & (1 << c) == 0, "not injective");
            seen |= 1 << c;
        }
        for (u, v) in g.edges() {
            assert!(host.has_edge(m[u], m[v]));
        }
    }

    #[test]
    fn embeds_spanning_structures() {
        let c5 = cycle_graph(5);
        let m = spanning_embedding(&c5, &petersen().induced_subgraph(&[0, 1, 2, 3, 4]).unwrap());
        check_embedding(&c5, &cycle_graph(5), &m.unwrap());

        let p10 = path_graph(10);
        let m = spanning_embedding(&p10, &petersen()).expect("hamiltonian path");
        check_embedding(&p10, &petersen(), &m);

        let m = spanning_embedding(&cycle_graph(6), &complete_bipartite(3, 3)).unwrap();
        check_embedding(&cycle_graph(6), &complete_bipartite(3, 3), &m);
    }

    #[test]
    fn rejects_impossible_embeddings() {
        // the Petersen graph has no 10-cycle
        assert_eq!(spanning_embedding(&cycle_graph(10), &petersen()), None);
        // K4 has more edges than C4
        assert_eq!(spanning_embedding(&complete(4), &cycle_graph(4)), None);
        // order mismatch
        assert_eq!(spanning_embedding(&complete(3), &complete(4)), None);
        // odd cycle into a bipartite host
        assert_eq!(spanning_embedding(&cycle_graph(5), &complete_bipartite(2, 3)), None);
    }

    #[test]
    fn everything_embeds_into_complete() {
        for n in 1..=6 {
            let host = complete(n);
            let m = spanning_embedding(&path_graph(n), &host).unwrap();
            check_embedding(&path_graph(n), &host, &m);
        }
    }
}
