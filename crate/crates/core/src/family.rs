//! The extremal family: connected graphs all of whose blocks are K5, except
//! for one smaller remainder clique when 4 does not divide n - 1.
//!
//! Writing n - 1 = 4q + r with 0 <= r < 4, a member has q blocks K5 and,
//! iff r != 0, one block K_{r+1}. These graphs attain the maximum edge
//! count among n-vertex graphs with no cycle of length 2 mod 4.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use serde::Serialize;

use crate::canon::{canonical_form, canonical_representative, CanonicalForm};
use crate::connectivity::{block_decomposition, is_connected};
use crate::cycles::{canonical_rotation, find_consecutive_even_cycles, CycleWitness, SearchLimits};
use crate::error::{Error, Result};
use crate::graph::{complete, Graph};

/// Member enumeration is exact up to isomorphism, so it shares the
/// canonical-labeling vertex bound.
pub const FAMILY_MAX_VERTICES: usize = 12;

/// Writes n - 1 = 4q + r with 0 <= r < 4.
pub fn split_order(n: usize) -> Result<(usize, usize)> {
    if n == 0 {
        return Err(Error::InvalidConfiguration("order must be at least 1".into()));
    }
    Ok(((n - 1) / 4, (n - 1) % 4))
}

/// Maximum edge count of an n-vertex graph with no cycle of length 2 mod 4:
/// 10q + C(r+1, 2).
pub fn max_edges_no_two_mod_four(n: usize) -> Result<usize> {
    let (q, r) = split_order(n)?;
    Ok(10 * q + (r + 1) * r / 2)
}

/// The conjectured maximum edge count (2k+1)(n-1)/2 for n-vertex graphs with
/// no cycle of length 2k mod 4k, as an exact rational.
pub fn verstraete_bound(n: usize, k: usize) -> Result<Ratio<u64>> {
    if n == 0 {
        return Err(Error::InvalidConfiguration("order must be at least 1".into()));
    }
    if k == 0 {
        return Err(Error::InvalidConfiguration("need k >= 1".into()));
    }
    Ok(Ratio::new((2 * k as u64 + 1) * (n as u64 - 1), 2))
}

/// Closed form for the maximum edge count of an n-vertex graph with no cycle
/// of length `residue` mod 4, for each residue in 0..4.
pub fn turan_formula(n: usize, residue: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::InvalidConfiguration("order must be at least 1".into()));
    }
    match residue {
        0 => Ok(19 * (n - 1) / 12),
        1 => Ok(match n {
            1..=4 => n * (n - 1) / 2,
            5 => 7,
            _ => n * n / 4,
        }),
        2 => max_edges_no_two_mod_four(n),
        3 => Ok(n * n / 4),
        _ => Err(Error::InvalidConfiguration(format!("residue {residue} not in 0..4"))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FamilyBlockKind {
    K5,
    #[serde(rename = "Kr")]
    Remainder,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyBlock {
    #[serde(rename = "type")]
    pub kind: FamilyBlockKind,
    pub vertices: Vec<usize>,
}

/// Shape summary of a family member: block counts and the vertex set of
/// every block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyDescriptor {
    pub n: usize,
    pub q: usize,
    pub r: usize,
    pub blocks: Vec<FamilyBlock>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Membership {
    Member(FamilyDescriptor),
    NotMember { reason: String },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }
}

fn is_clique(g: &Graph, vertices: &[usize]) -> bool {
    vertices
        .iter()
        .enumerate()
        .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Decides membership in the family, with the block structure on success.
pub fn classify_member(g: &Graph) -> Membership {
    let n = g.n();
    let no = |reason: String| Membership::NotMember { reason };
    if n == 0 {
        return no("the family is defined for at least one vertex".into());
    }
    if n == 1 {
        return Membership::Member(FamilyDescriptor { n: 1, q: 0, r: 0, blocks: Vec::new() });
    }
    if !is_connected(g) {
        return no("not connected".into());
    }
    let (q, r) = split_order(n).expect("n >= 1");
    let mut blocks = Vec::new();
    let mut k5_count = 0;
    for block in block_decomposition(g).blocks {
        if !is_clique(g, &block) {
            return no(format!("block {block:?} is not a clique"));
        }
        let kind = match block.len() {
            5 => {
                k5_count += 1;
                FamilyBlockKind::K5
            }
            s if r != 0 && s == r + 1 => FamilyBlockKind::Remainder,
            s => return no(format!("a complete block of order {s} does not fit order {n}")),
        };
        blocks.push(FamilyBlock { kind, vertices: block });
    }
    if k5_count != q {
        return no(format!("expected {q} blocks of order 5, found {k5_count}"));
    }
    Membership::Member(FamilyDescriptor { n, q, r, blocks })
}

/// True iff `g` is connected and every block is a clique of order at most
/// 2k + 1.
pub fn is_clique_block_graph(g: &Graph, k: usize) -> bool {
    g.n() > 0
        && is_connected(g)
        && block_decomposition(g)
            .blocks
            .iter()
            .all(|b| b.len() <= 2 * k + 1 && is_clique(g, b))
}

/// Appends a new clique of order `s` sharing exactly the vertex `v`.
fn attach_clique(g: &Graph, v: usize, s: usize) -> Result<Graph> {
    debug_assert!(s >= 2);
    let base = g.n();
    let mut h = Graph::empty(base + s - 1)?;
    for (a, b) in g.edges() {
        h.add_edge_unchecked(a, b);
    }
    let mut verts = vec![v];
    verts.extend(base..base + s - 1);
    for (i, &a) in verts.iter().enumerate() {
        for &b in &verts[i + 1..] {
            h.add_edge_unchecked(a, b);
        }
    }
    Ok(h)
}

/// The path-shaped member: K5 blocks chained at shared cut vertices, the
/// remainder block attached at the end.
pub fn canonical_member(n: usize) -> Result<Graph> {
    let (q, r) = split_order(n)?;
    let mut g = Graph::empty(1)?;
    for _ in 0..q {
        g = attach_clique(&g, g.n() - 1, 5)?;
    }
    if r != 0 {
        g = attach_clique(&g, g.n() - 1, r + 1)?;
    }
    Ok(g)
}

/// All family members of order `n` up to isomorphism, as canonical
/// representatives sorted by canonical form.
pub fn enumerate_members(n: usize) -> Result<Vec<Graph>> {
    if n > FAMILY_MAX_VERTICES {
        return Err(Error::FamilyBound { n, max: FAMILY_MAX_VERTICES });
    }
    let (q, r) = split_order(n)?;
    if n == 1 {
        return Ok(vec![Graph::empty(1)?]);
    }
    let mut sizes = vec![5usize; q];
    if r != 0 {
        sizes.push(r + 1);
    }

    let remove_one = |sizes: &[usize], s: usize| -> Vec<usize> {
        let mut out = sizes.to_vec();
        let i = out.iter().position(|&t| t == s).expect("size present");
        out.remove(i);
        out
    };
    let distinct = |sizes: &[usize]| -> BTreeSet<usize> { sizes.iter().copied().collect() };

    // grow by gluing one block at a time, deduplicating partial graphs up to
    // isomorphism; the remaining block multiset is determined by the order
    let mut level: BTreeMap<CanonicalForm, (Graph, Vec<usize>)> = BTreeMap::new();
    for s in distinct(&sizes) {
        let g = complete(s);
        level.insert(canonical_form(&g)?, (g, remove_one(&sizes, s)));
    }
    while level.values().next().is_some_and(|(_, rem)| !rem.is_empty()) {
        let mut next = BTreeMap::new();
        for (g, rem) in level.values() {
            for s in distinct(rem) {
                for v in 0..g.n() {
                    let h = attach_clique(g, v, s)?;
                    let key = canonical_form(&h)?;
                    next.entry(key).or_insert_with(|| (h, remove_one(rem, s)));
                }
            }
        }
        level = next;
    }
    level.into_values().map(|(g, _)| canonical_representative(&g)).collect()
}

/// A clique plus externally attached vertices in one of the three
/// configurations that force a 4-cycle and a 6-cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CliqueAttachment {
    /// K4 plus adjacent x, y, each with two neighbors in the clique.
    AdjacentPairOnK4 { clique: [usize; 4], x: usize, y: usize },
    /// K4 plus x with three neighbors in the clique and y with two
    /// neighbors among the clique and x.
    TripleNeighborOnK4 { clique: [usize; 4], x: usize, y: usize },
    /// Triangle plus two adjacent pairs (x1, y1), (x2, y2), each attached
    /// vertex with two neighbors in the triangle.
    TwoPairsOnTriangle {
        clique: [usize; 3],
        x1: usize,
        y1: usize,
        x2: usize,
        y2: usize,
    },
}

fn invalid(msg: &str) -> Error {
    Error::InvalidConfiguration(msg.into())
}

fn check_roles(g: &Graph, clique: &[usize], outside: &[usize]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for &v in clique.iter().chain(outside) {
        g.check_vertex(v)?;
        if !seen.insert(v) {
            return Err(invalid("role vertices must be distinct"));
        }
    }
    if !is_clique(g, clique) {
        return Err(invalid("the designated vertices do not induce a clique"));
    }
    Ok(())
}

fn clique_neighbors(g: &Graph, v: usize, clique: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = clique.iter().copied().filter(|&u| g.has_edge(v, u)).collect();
    out.sort_unstable();
    out
}

/// Constructs an explicit 4-cycle and 6-cycle from a validated attachment
/// configuration, mirroring the case analysis rather than searching.
pub fn clique_attachment_cycles(g: &Graph, config: &CliqueAttachment) -> Result<CycleWitness> {
    let (four, six) = match *config {
        CliqueAttachment::AdjacentPairOnK4 { clique, x, y } => {
            check_roles(g, &clique, &[x, y])?;
            if !g.has_edge(x, y) {
                return Err(invalid("x and y must be adjacent"));
            }
            let nx = clique_neighbors(g, x, &clique);
            let ny = clique_neighbors(g, y, &clique);
            if nx.len() < 2 || ny.len() < 2 {
                return Err(invalid("x and y each need two neighbors in the clique"));
            }
            // two of the four attachment edges must avoid sharing an endpoint
            let (vi, vj) = nx
                .iter()
                .find_map(|&a| ny.iter().find(|&&b| b != a).map(|&b| (a, b)))
                .expect("two 2-subsets of a 4-set admit a disjoint pick");
            let mut rest: Vec<usize> =
                clique.iter().copied().filter(|&v| v != vi && v != vj).collect();
            rest.sort_unstable();
            (sorted(&clique), vec![vi, x, y, vj, rest[0], rest[1]])
        }
        CliqueAttachment::TripleNeighborOnK4 { clique, x, y } => {
            check_roles(g, &clique, &[x, y])?;
            let nx = clique_neighbors(g, x, &clique);
            if nx.len() < 3 {
                return Err(invalid("x needs three neighbors in the clique"));
            }
            let ny = clique_neighbors(g, y, &clique);
            if ny.len() + usize::from(g.has_edge(x, y)) < 2 {
                return Err(invalid("y needs two neighbors among the clique and x"));
            }
            let six = if g.has_edge(x, y) {
                let v1 = *ny.first().ok_or_else(|| {
                    invalid("y needs a clique neighbor when one of its two is x")
                })?;
                let v2 = *nx.iter().find(|&&v| v != v1).expect("x has three clique neighbors");
                let rest: Vec<usize> =
                    clique.iter().copied().filter(|&v| v != v1 && v != v2).collect();
                let (v3, v4) = (rest.iter().copied().min().unwrap(), rest.iter().copied().max().unwrap());
                vec![v1, y, x, v2, v3, v4]
            } else {
                let v1 = *nx
                    .iter()
                    .find(|v| ny.contains(v))
                    .expect("three plus two neighbors in a 4-set must meet");
                let v2 = *ny.iter().find(|&&v| v != v1).expect("y has two clique neighbors");
                let v3 = *nx.iter().find(|&&v| v != v1 && v != v2).expect("x has three");
                let v4 = clique
                    .iter()
                    .copied()
                    .find(|&v| v != v1 && v != v2 && v != v3)
                    .expect("fourth clique vertex");
                vec![v1, y, v2, v4, v3, x]
            };
            (sorted(&clique), six)
        }
        CliqueAttachment::TwoPairsOnTriangle { clique, x1, y1, x2, y2 } => {
            check_roles(g, &clique, &[x1, y1, x2, y2])?;
            if !g.has_edge(x1, y1) || !g.has_edge(x2, y2) {
                return Err(invalid("x1 y1 and x2 y2 must be edges"));
            }
            let nbrs: Vec<Vec<usize>> =
                [x1, y1, x2, y2].iter().map(|&v| clique_neighbors(g, v, &clique)).collect();
            if nbrs.iter().any(|nv| nv.len() < 2) {
                return Err(invalid("each attached vertex needs two neighbors in the triangle"));
            }
            let (nx1, ny1, _nx2, ny2) = (&nbrs[0], &nbrs[1], &nbrs[2], &nbrs[3]);
            let v1 = *nbrs[0]
                .iter()
                .find(|v| nbrs[2].contains(v))
                .expect("two 2-subsets of a 3-set must meet");
            let four = {
                let (a, b) = (nx1[0], nx1[1]);
                let c = clique.iter().copied().find(|&v| v != a && v != b).expect("third");
                vec![a, x1, b, c]
            };
            let common_y: Option<usize> =
                ny1.iter().copied().find(|&v| v != v1 && ny2.contains(&v));
            let six = if let Some(v2) = common_y {
                vec![v1, x1, y1, v2, y2, x2]
            } else {
                // both pairs of triangle neighbors intersect only in v1
                let v2 = *ny1.iter().find(|&&v| v != v1).expect("y1 has two neighbors");
                let v3 = *ny2.iter().find(|&&v| v != v1).expect("y2 has two neighbors");
                vec![v1, x1, y1, v2, v3, y2]
            };
            (four, six)
        }
    };
    let witness = CycleWitness {
        lengths: vec![4, 6],
        cycles: vec![canonical_rotation(&four), canonical_rotation(&six)],
    };
    debug_assert!(witness.validates_in(g));
    Ok(witness)
}

fn sorted(vertices: &[usize]) -> Vec<usize> {
    let mut out = vertices.to_vec();
    out.sort_unstable();
    out
}

/// How a graph relates to the extremal edge threshold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ExtremalVerdict {
    /// Fewer edges than the threshold; no conclusion.
    BelowThreshold,
    /// At or above the threshold, with two cycles of consecutive even
    /// lengths.
    HasWitness(CycleWitness),
    /// At or above the threshold with no such cycles, and a family member
    /// (forced to sit exactly at the threshold).
    ExtremalMember(FamilyDescriptor),
    /// At or above the threshold, no witness, not a member: would refute
    /// the classification.
    Counterexample,
}

/// Classifies `g` against the threshold 10q + C(r+1, 2).
pub fn extremal_verdict(g: &Graph, limits: &SearchLimits) -> Result<ExtremalVerdict> {
    let threshold = max_edges_no_two_mod_four(g.n())?;
    if g.edge_count() < threshold {
        return Ok(ExtremalVerdict::BelowThreshold);
    }
    if let Some(witness) = find_consecutive_even_cycles(g, 2, limits)? {
        return Ok(ExtremalVerdict::HasWitness(witness));
    }
    Ok(match classify_member(g) {
        Membership::Member(descriptor) => ExtremalVerdict::ExtremalMember(descriptor),
        Membership::NotMember { .. } => ExtremalVerdict::Counterexample,
    })
}
