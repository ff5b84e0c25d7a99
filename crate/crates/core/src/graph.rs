//! Undirected simple graphs on at most 62 vertices.
//!
//! Vertices are `0..n`. Adjacency is stored as one `u64` bitmask per vertex,
//! which keeps neighborhood tests and set operations cheap everywhere else in
//! the crate.

use std::fmt;

use crate::error::{Error, Result};

/// Hard cap chosen to match the single-byte graph6 header.
pub const MAX_VERTICES: usize = 62;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an explicit edge list. Rejects loops, endpoints
    /// outside `0..n`, and duplicate edges (in either orientation).
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop { v: u });
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge { u, v });
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut m = self.adj[u] >> (u + 1) << (u + 1);
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                out.push((u, v));
                m &= m - 1;
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mut m = self.adj[v];
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(w)
            }
        })
    }

    /// Neighborhood of `v` as a bitmask.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    /// Copy of this graph with the edge `uv` added; no-op if already present.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop { v: u });
        }
        let mut g = self.clone();
        g.add_edge_unchecked(u, v);
        Ok(g)
    }

    /// Copy of this graph with the edge `uv` removed; no-op if absent.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// Subgraph induced by `keep`, relabeled to `0..keep.len()` preserving
    /// the relative order of the kept vertices.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Self> {
        let mut kept = keep.to_vec();
        kept.sort_unstable();
        for w in kept.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge { u: w[0], v: w[1] });
            }
        }
        for &v in &kept {
            self.check_vertex(v)?;
        }
        let mut g = Graph::empty(kept.len())?;
        for (i, &u) in kept.iter().enumerate() {
            for (j, &v) in kept.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        Ok(g)
    }

    /// New graph with one extra vertex (index `n`) adjacent to `neighbors`.
    pub fn add_vertex_with_edges(&self, neighbors: &[usize]) -> Result<Self> {
        let mut g = Graph::empty(self.n + 1)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        for &v in neighbors {
            self.check_vertex(v)?;
            if g.has_edge(v, self.n) {
                return Err(Error::DuplicateEdge { u: v, v: self.n });
            }
            g.add_edge_unchecked(v, self.n);
        }
        Ok(g)
    }

    /// Relabels vertices by `perm`, where `perm[v]` is the new label of `v`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidConfiguration(format!(
                "permutation of length {} for a graph on {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            seen |= 1 << p;
        }
        if seen.count_ones() as usize != self.n {
            return Err(Error::InvalidConfiguration("not a permutation".into()));
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge_unchecked(perm[u], perm[v]);
        }
        Ok(g)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { v, n: self.n })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Complete graph K_n. Panics if `n` exceeds [`MAX_VERTICES`].
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n).expect("order within bounds");
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge_unchecked(u, v);
        }
    }
    g
}

/// Cycle C_n, `n >= 3`.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let mut g = Graph::empty(n).expect("order within bounds");
    for v in 0..n {
        g.add_edge_unchecked(v, (v + 1) % n);
    }
    g
}

/// Path on `n` vertices (n - 1 edges).
pub fn path_graph(n: usize) -> Graph {
    let mut g = Graph::empty(n).expect("order within bounds");
    for v in 1..n {
        g.add_edge_unchecked(v - 1, v);
    }
    g
}

/// Complete bipartite graph K_{a,b}; the first `a` vertices form one side.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b).expect("order within bounds");
    for u in 0..a {
        for v in a..a + b {
            g.add_edge_unchecked(u, v);
        }
    }
    g
}

/// The Petersen graph: outer 5-cycle 0..5, inner 5-star 5..10, spokes (i, i+5).
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edge_list(10, &edges).expect("valid by construction")
}

/// Disjoint union; `h`'s vertices are shifted up by `g.n()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let n = g.n() + h.n();
    let mut out = Graph::empty(n).expect("order within bounds");
    for (u, v) in g.edges() {
        out.add_edge_unchecked(u, v);
    }
    for (u, v) in h.edges() {
        out.add_edge_unchecked(u + g.n(), v + g.n());
    }
    out
}

/// Join g ∨ h: disjoint union plus all edges between the two parts.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let mut out = disjoint_union(g, h);
    for u in 0..g.n() {
        for v in g.n()..g.n() + h.n() {
            out.add_edge_unchecked(u, v);
        }
    }
    out
}

/// Parses the plain text edge-list format: a header line `n m` followed by
/// `m` lines `u v` with 0-based endpoints.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = text.split_whitespace();
    let mut next_num = |what: &str| -> Result<usize> {
        let tok = tokens
            .next()
            .ok_or_else(|| Error::MalformedEdgeList(format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| Error::MalformedEdgeList(format!("bad {what} {tok:?}")))
    };
    let n = next_num("vertex count")?;
    let m = next_num("edge count")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let u = next_num("edge endpoint")?;
        let v = next_num("edge endpoint")?;
        edges.push((u, v));
    }
    if tokens.next().is_some() {
        return Err(Error::MalformedEdgeList("trailing tokens after last edge".into()));
    }
    Graph::from_edge_list(n, &edges)
}

/// Writes the format read by [`parse_edge_list`].
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
