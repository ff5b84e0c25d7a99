//! Canonical forms for small graphs (n ≤ 12).
//!
//! The canonical form is the lexicographically maximal upper-triangle
//! adjacency bit string (column order, same as graph6) over the vertex
//! relabelings explored by an individualization–refinement search. Two
//! graphs get equal forms exactly when they are isomorphic.
//!
//! The search keeps an ordered partition of the vertices, refines it to an
//! equitable one (splitting cells by neighbor counts against every cell,
//! subcells ordered by count signature), and branches on the first
//! non-singleton cell. Automorphisms discovered from tying leaves prune
//! branches that fix the current individualization path.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const CANON_MAX_VERTICES: usize = 12;

const AUT_CAP: usize = 512;

/// Order plus packed upper-triangle bits of the canonically relabeled graph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    n: usize,
    bits: u128,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// Rebuilds the canonically labeled graph this form encodes.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("canonical forms stay within bounds");
        let total = self.n * (self.n - 1) / 2;
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.bits >> (total - 1 - k) & 1 == 1 {
                    g.add_edge_unchecked(i, j);
                }
                k += 1;
            }
        }
        g
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > CANON_MAX_VERTICES {
        return Err(Error::CanonicalBound { n, max: CANON_MAX_VERTICES });
    }
    if n == 0 {
        return Ok(CanonicalForm { n: 0, bits: 0 });
    }
    let mut adj = [0u16; CANON_MAX_VERTICES];
    for (v, slot) in adj.iter_mut().enumerate().take(n) {
        *slot = g.neighbor_mask(v) as u16;
    }
    let mut s = Searcher {
        n,
        adj,
        best_bits: 0,
        best_leaf: [0; CANON_MAX_VERTICES],
        have_best: false,
        auts: Vec::new(),
        path: Vec::new(),
    };
    let root = vec![((1u16 << n) - 1)];
    s.search(root);
    Ok(CanonicalForm { n, bits: s.best_bits })
}

/// The canonically labeled representative of `g`'s isomorphism class.
pub fn canonical_representative(g: &Graph) -> Result<Graph> {
    Ok(canonical_form(g)?.to_graph())
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(g.n() == h.n() && canonical_form(g)? == canonical_form(h)?)
}

struct Searcher {
    n: usize,
    adj: [u16; CANON_MAX_VERTICES],
    best_bits: u128,
    /// position -> vertex of the current best leaf
    best_leaf: [u8; CANON_MAX_VERTICES],
    have_best: bool,
    /// discovered automorphisms, as vertex -> vertex maps
    auts: Vec<[u8; CANON_MAX_VERTICES]>,
    /// vertices individualized along the current branch
    path: Vec<u8>,
}

impl Searcher {
    fn search(&mut self, mut cells: Vec<u16>) {
        self.refine(&mut cells);
        let target = cells.iter().position(|c| c.count_ones() > 1);
        let Some(ti) = target else {
            self.leaf(&cells);
            return;
        };
        let mut members = Vec::with_capacity(cells[ti].count_ones() as usize);
        let mut m = cells[ti];
        while m != 0 {
            members.push(m.trailing_zeros() as u8);
            m &= m - 1;
        }
        let mut tried: Vec<u8> = Vec::with_capacity(members.len());
        for &v in &members {
            // skip vertices equivalent to an already-explored sibling under
            // automorphisms that fix the whole individualization path
            if !tried.is_empty() {
                let orbit = self.orbits_fixing_path();
                if tried.iter().any(|&u| orbit[u as usize] == orbit[v as usize]) {
                    continue;
                }
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(1 << v);
            child.push(cells[ti] & !(1 << v));
            child.extend_from_slice(&cells[ti + 1..]);
            self.path.push(v);
            self.search(child);
            self.path.pop();
        }
    }

    /// Splits cells by the vector of neighbor counts against every cell
    /// until the partition is equitable. Count vectors are packed four bits
    /// per cell, which is enough for n ≤ 12.
    fn refine(&self, cells: &mut Vec<u16>) {
        'scan: loop {
            for ci in 0..cells.len() {
                if cells[ci].count_ones() <= 1 {
                    continue;
                }
                let mut keyed: Vec<(u64, u8)> = Vec::new();
                let mut m = cells[ci];
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    let mut key = 0u64;
                    for &c in cells.iter() {
                        key = key << 4 | (self.adj[v] & c).count_ones() as u64;
                    }
                    keyed.push((key, v as u8));
                }
                keyed.sort_unstable();
                if keyed.first().map(|k| k.0) == keyed.last().map(|k| k.0) {
                    continue;
                }
                let mut replacement: Vec<u16> = Vec::new();
                let mut current_key = keyed[0].0;
                let mut mask = 0u16;
                for (key, v) in keyed {
                    if key != current_key {
                        replacement.push(mask);
                        mask = 0;
                        current_key = key;
                    }
                    mask |= 1 << v;
                }
                replacement.push(mask);
                cells.splice(ci..=ci, replacement);
                continue 'scan;
            }
            return;
        }
    }

    fn leaf(&mut self, cells: &[u16]) {
        let mut perm = [0u8; CANON_MAX_VERTICES];
        for (i, c) in cells.iter().enumerate() {
            perm[i] = c.trailing_zeros() as u8;
        }
        let mut bits = 0u128;
        for q in 1..self.n {
            let aq = self.adj[perm[q] as usize];
            for &pv in &perm[..q] {
                bits = bits << 1 | (aq >> pv & 1) as u128;
            }
        }
        if !self.have_best || bits > self.best_bits {
            self.best_bits = bits;
            self.best_leaf = perm;
            self.have_best = true;
        } else if bits == self.best_bits && self.auts.len() < AUT_CAP {
            // equal strings: position p holds perm[p] here and best_leaf[p]
            // in the stored leaf, so mapping one onto the other is an
            // automorphism
            let mut alpha = [0u8; CANON_MAX_VERTICES];
            let mut identity = true;
            for p in 0..self.n {
                alpha[perm[p] as usize] = self.best_leaf[p];
                identity &= perm[p] == self.best_leaf[p];
            }
            if !identity {
                self.auts.push(alpha);
            }
        }
    }

    /// Union-find orbits under the discovered automorphisms that fix every
    /// vertex of the current path.
    fn orbits_fixing_path(&self) -> [u8; CANON_MAX_VERTICES] {
        let mut parent: [u8; CANON_MAX_VERTICES] = std::array::from_fn(|i| i as u8);
        fn find(parent: &mut [u8; CANON_MAX_VERTICES], mut v: u8) -> u8 {
            while parent[v as usize] != v {
                parent[v as usize] = parent[parent[v as usize] as usize];
                v = parent[v as usize];
            }
            v
        }
        'auts: for alpha in &self.auts {
            for &p in &self.path {
                if alpha[p as usize] != p {
                    continue 'auts;
                }
            }
            for v in 0..self.n as u8 {
                let (a, b) = (find(&mut parent, v), find(&mut parent, alpha[v as usize]));
                if a != b {
                    parent[a as usize] = b;
                }
            }
        }
        for v in 0..self.n as u8 {
            find(&mut parent, v);
        }
        parent
    }
}
