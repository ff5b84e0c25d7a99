//! Cycle and path length spectra by exhaustive DFS.
//!
//! Every cycle is enumerated exactly once: the DFS anchors at the cycle's
//! smallest vertex, only walks through larger vertices, and accepts the
//! orientation whose second vertex is smaller than its last. That emission
//! order also means the first witness found for a length is the
//! lexicographically smallest vertex sequence for that length.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Caps for the exponential searches. `max_steps` counts every edge
/// traversal attempted by a DFS.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_vertices: usize,
    pub max_steps: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_vertices: 16, max_steps: 100_000_000 }
    }
}

impl SearchLimits {
    pub fn with_steps(max_steps: u64) -> Self {
        SearchLimits { max_steps, ..SearchLimits::default() }
    }
}

/// Sorted set of attained lengths.
pub type LengthSpectrum = BTreeSet<usize>;

/// One or more cycles, parallel to their lengths. Vertex sequences are
/// rotated so the smallest vertex comes first, followed by its smaller
/// neighbor on the cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleWitness {
    pub lengths: Vec<usize>,
    pub cycles: Vec<Vec<usize>>,
}

impl CycleWitness {
    /// True when every recorded cycle is a genuine cycle of `g` with the
    /// recorded length.
    pub fn validates_in(&self, g: &Graph) -> bool {
        self.lengths.len() == self.cycles.len()
            && self
                .cycles
                .iter()
                .zip(&self.lengths)
                .all(|(c, &l)| c.len() == l && is_cycle_of(g, c))
    }
}

/// Two paths between the same endpoints whose lengths differ by two.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathPair {
    pub lengths: (usize, usize),
    pub paths: (Vec<usize>, Vec<usize>),
}

/// Parity classification of the (x, y)-paths of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ParityPaths {
    Both { odd_path: Vec<usize>, even_path: Vec<usize> },
    OnlyOdd { odd_path: Vec<usize> },
    OnlyEven { even_path: Vec<usize> },
    Neither,
}

pub fn is_cycle_of(g: &Graph, cycle: &[usize]) -> bool {
    let l = cycle.len();
    if l < 3 || l > g.n() {
        return false;
    }
    let mut seen = 0u64;
    for &v in cycle {
        if v >= g.n() || seen & (1 << v) != 0 {
            return false;
        }
        seen |= 1 << v;
    }
    (0..l).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % l]))
}

pub fn is_path_of(g: &Graph, path: &[usize], x: usize, y: usize) -> bool {
    if path.len() < 2 || path.first() != Some(&x) || path.last() != Some(&y) {
        return false;
    }
    let mut seen = 0u64;
    for &v in path {
        if v >= g.n() || seen & (1 << v) != 0 {
            return false;
        }
        seen |= 1 << v;
    }
    path.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// Rotates/reflects a cycle into its canonical form: smallest vertex first,
/// then its smaller cycle-neighbor.
pub fn canonical_rotation(cycle: &[usize]) -> Vec<usize> {
    let l = cycle.len();
    let i = (0..l).min_by_key(|&i| cycle[i]).expect("nonempty cycle");
    let forward = cycle[(i + 1) % l];
    let backward = cycle[(i + l - 1) % l];
    let mut out = Vec::with_capacity(l);
    if forward <= backward {
        out.extend((0..l).map(|d| cycle[(i + d) % l]));
    } else {
        out.extend((0..l).map(|d| cycle[(i + l - d) % l]));
    }
    out
}

fn check_search_size(g: &Graph, limits: &SearchLimits) -> Result<()> {
    if g.n() > limits.max_vertices {
        return Err(Error::SearchVertexBound { n: g.n(), max: limits.max_vertices });
    }
    Ok(())
}

/// Calls `f` once per cycle, as the vertex sequence in canonical rotation.
/// Returns whether the search ran to completion (`f` never broke).
fn for_each_cycle<F>(g: &Graph, limits: &SearchLimits, mut f: F) -> Result<bool>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    check_search_size(g, limits)?;
    let mut steps = 0u64;
    let mut path = Vec::with_capacity(g.n());
    for anchor in 0..g.n() {
        path.clear();
        path.push(anchor);
        if cycle_dfs(g, limits, anchor, 1 << anchor, &mut path, &mut steps, &mut f)?.is_break() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn cycle_dfs<F>(
    g: &Graph,
    limits: &SearchLimits,
    anchor: usize,
    on_path: u64,
    path: &mut Vec<usize>,
    steps: &mut u64,
    f: &mut F,
) -> Result<ControlFlow<()>>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let v = *path.last().expect("path never empty");
    for w in g.neighbors(v) {
        *steps += 1;
        if *steps > limits.max_steps {
            return Err(Error::BudgetExhausted { budget: limits.max_steps });
        }
        if w == anchor {
            if path.len() >= 3 && path[1] < v && f(path).is_break() {
                return Ok(ControlFlow::Break(()));
            }
        } else if w > anchor && on_path & (1 << w) == 0 {
            path.push(w);
            let r = cycle_dfs(g, limits, anchor, on_path | (1 << w), path, steps, f)?;
            path.pop();
            if r.is_break() {
                return Ok(r);
            }
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// The set of cycle lengths attained in `g`.
pub fn cycle_spectrum(g: &Graph, limits: &SearchLimits) -> Result<LengthSpectrum> {
    let possible = g.n().saturating_sub(2);
    let mut spectrum = LengthSpectrum::new();
    for_each_cycle(g, limits, |cycle| {
        spectrum.insert(cycle.len());
        if spectrum.len() == possible {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(spectrum)
}

/// Spectrum plus, per length, the lexicographically smallest cycle of that
/// length.
pub fn cycle_spectrum_with_witnesses(
    g: &Graph,
    limits: &SearchLimits,
) -> Result<BTreeMap<usize, Vec<usize>>> {
    let possible = g.n().saturating_sub(2);
    let mut witnesses = BTreeMap::new();
    for_each_cycle(g, limits, |cycle| {
        witnesses.entry(cycle.len()).or_insert_with(|| cycle.to_vec());
        if witnesses.len() == possible {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(witnesses)
}

/// True as soon as some cycle length satisfies `pred`; early-exits.
pub fn has_cycle_length(
    g: &Graph,
    limits: &SearchLimits,
    mut pred: impl FnMut(usize) -> bool,
) -> Result<bool> {
    let completed = for_each_cycle(g, limits, |cycle| {
        if pred(cycle.len()) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(!completed)
}

/// Finds `k` cycles of consecutive even lengths 2m, 2m+2, ..., 2m+2(k-1),
/// minimizing 2m, with one witness cycle per length.
pub fn find_consecutive_even_cycles(
    g: &Graph,
    k: usize,
    limits: &SearchLimits,
) -> Result<Option<CycleWitness>> {
    if k == 0 {
        return Err(Error::InvalidConfiguration("need k >= 1 consecutive lengths".into()));
    }
    let witnesses = cycle_spectrum_with_witnesses(g, limits)?;
    let n = g.n();
    let mut start = 4;
    while start + 2 * (k - 1) <= n {
        let run: Vec<usize> = (0..k).map(|i| start + 2 * i).collect();
        if run.iter().all(|l| witnesses.contains_key(l)) {
            return Ok(Some(CycleWitness {
                cycles: run.iter().map(|l| witnesses[l].clone()).collect(),
                lengths: run,
            }));
        }
        start += 2;
    }
    Ok(None)
}

/// Smallest-length pair of cycles whose lengths differ by one or two,
/// preferring a difference of one on ties.
pub fn find_cycles_differing_by_one_or_two(
    g: &Graph,
    limits: &SearchLimits,
) -> Result<Option<CycleWitness>> {
    let witnesses = cycle_spectrum_with_witnesses(g, limits)?;
    for (&l, cycle) in &witnesses {
        for longer in [l + 1, l + 2] {
            if let Some(partner) = witnesses.get(&longer) {
                return Ok(Some(CycleWitness {
                    lengths: vec![l, longer],
                    cycles: vec![cycle.clone(), partner.clone()],
                }));
            }
        }
    }
    Ok(None)
}

/// Calls `f` once per simple (x, y)-path, in lexicographic order of the
/// vertex sequence.
fn for_each_path<F>(g: &Graph, x: usize, y: usize, limits: &SearchLimits, mut f: F) -> Result<bool>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    check_search_size(g, limits)?;
    for v in [x, y] {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { v, n: g.n() });
        }
    }
    if x == y {
        return Err(Error::IdenticalEndpoints { v: x });
    }
    let mut steps = 0u64;
    let mut path = vec![x];
    Ok(path_dfs(g, limits, y, 1 << x, &mut path, &mut steps, &mut f)?.is_continue())
}

fn path_dfs<F>(
    g: &Graph,
    limits: &SearchLimits,
    y: usize,
    on_path: u64,
    path: &mut Vec<usize>,
    steps: &mut u64,
    f: &mut F,
) -> Result<ControlFlow<()>>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let v = *path.last().expect("path never empty");
    for w in g.neighbors(v) {
        *steps += 1;
        if *steps > limits.max_steps {
            return Err(Error::BudgetExhausted { budget: limits.max_steps });
        }
        if w == y {
            path.push(y);
            let r = f(path);
            path.pop();
            if r.is_break() {
                return Ok(r);
            }
        } else if on_path & (1 << w) == 0 {
            path.push(w);
            let r = path_dfs(g, limits, y, on_path | (1 << w), path, steps, f)?;
            path.pop();
            if r.is_break() {
                return Ok(r);
            }
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// The set of lengths of simple (x, y)-paths.
pub fn path_length_spectrum(
    g: &Graph,
    x: usize,
    y: usize,
    limits: &SearchLimits,
) -> Result<LengthSpectrum> {
    Ok(path_witnesses(g, x, y, limits)?.into_keys().collect())
}

/// Per attainable length, the lexicographically smallest (x, y)-path.
pub fn path_witnesses(
    g: &Graph,
    x: usize,
    y: usize,
    limits: &SearchLimits,
) -> Result<BTreeMap<usize, Vec<usize>>> {
    let possible = g.n().saturating_sub(1);
    let mut witnesses = BTreeMap::new();
    for_each_path(g, x, y, limits, |path| {
        witnesses.entry(path.len() - 1).or_insert_with(|| path.to_vec());
        if witnesses.len() == possible {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(witnesses)
}

/// Reports whether both an odd and an even (x, y)-path exist, with the
/// smallest-length witness of each parity.
pub fn has_parity_paths(
    g: &Graph,
    x: usize,
    y: usize,
    limits: &SearchLimits,
) -> Result<ParityPaths> {
    let witnesses = path_witnesses(g, x, y, limits)?;
    let pick = |parity: usize| {
        witnesses
            .iter()
            .find(|(l, _)| *l % 2 == parity)
            .map(|(_, p)| p.clone())
    };
    Ok(match (pick(1), pick(0)) {
        (Some(odd_path), Some(even_path)) => ParityPaths::Both { odd_path, even_path },
        (Some(odd_path), None) => ParityPaths::OnlyOdd { odd_path },
        (None, Some(even_path)) => ParityPaths::OnlyEven { even_path },
        (None, None) => ParityPaths::Neither,
    })
}

/// Two (x, y)-paths with lengths l and l + 2, minimizing l.
pub fn find_two_paths_differing_by_two(
    g: &Graph,
    x: usize,
    y: usize,
    limits: &SearchLimits,
) -> Result<Option<PathPair>> {
    let witnesses = path_witnesses(g, x, y, limits)?;
    for (&l, shorter) in &witnesses {
        if let Some(longer) = witnesses.get(&(l + 2)) {
            return Ok(Some(PathPair {
                lengths: (l, l + 2),
                paths: (shorter.clone(), longer.clone()),
            }));
        }
    }
    Ok(None)
}

/// Given a 2-cut {x, y} splitting the rest of the graph into `side1` and
/// `side2`, looks for two (x, y)-paths through side1 whose lengths differ by
/// two (ignoring a direct xy edge) and a third parity-matched path through
/// side2; a match combines into two cycles of consecutive even lengths.
pub fn combine_cut_paths(
    g: &Graph,
    x: usize,
    y: usize,
    side1: &[usize],
    side2: &[usize],
    limits: &SearchLimits,
) -> Result<Option<CycleWitness>> {
    validate_separation(g, x, y, side1, side2)?;
    let paths_through = |side: &[usize], drop_xy: bool| -> Result<(Vec<usize>, Graph, usize, usize)> {
        let mut kept: Vec<usize> = side.to_vec();
        kept.extend([x, y]);
        kept.sort_unstable();
        let sub = g.induced_subgraph(&kept)?;
        let xi = kept.binary_search(&x).expect("x kept");
        let yi = kept.binary_search(&y).expect("y kept");
        let sub = if drop_xy { sub.without_edge(xi, yi)? } else { sub };
        Ok((kept, sub, xi, yi))
    };

    let (kept1, g1, x1, y1) = paths_through(side1, true)?;
    let Some(pair) = find_two_paths_differing_by_two(&g1, x1, y1, limits)? else {
        return Ok(None);
    };

    let (kept2, g2, x2, y2) = paths_through(side2, false)?;
    let parity = pair.lengths.0 % 2;
    let third = path_witnesses(&g2, x2, y2, limits)?
        .into_iter()
        .find(|(l, _)| l % 2 == parity);
    let Some((l3, p3)) = third else {
        return Ok(None);
    };

    let relabel = |path: &[usize], kept: &[usize]| -> Vec<usize> {
        path.iter().map(|&v| kept[v]).collect()
    };
    let p3 = relabel(&p3, &kept2);
    let mut lengths = Vec::new();
    let mut cycles = Vec::new();
    for (l, p) in [(pair.lengths.0, &pair.paths.0), (pair.lengths.1, &pair.paths.1)] {
        let mut cycle = relabel(p, &kept1);
        cycle.extend(p3[1..p3.len() - 1].iter().rev());
        let cycle = canonical_rotation(&cycle);
        debug_assert!(is_cycle_of(g, &cycle));
        lengths.push(l + l3);
        cycles.push(cycle);
    }
    Ok(Some(CycleWitness { lengths, cycles }))
}

fn validate_separation(
    g: &Graph,
    x: usize,
    y: usize,
    side1: &[usize],
    side2: &[usize],
) -> Result<()> {
    let n = g.n();
    for v in [x, y] {
        if v >= n {
            return Err(Error::VertexOutOfRange { v, n });
        }
    }
    if x == y {
        return Err(Error::IdenticalEndpoints { v: x });
    }
    let fail = |reason: &str| Error::NotASeparator { x, y, reason: reason.into() };
    let cut = (1u64 << x) | (1 << y);
    let mut mask = [0u64; 2];
    for (mi, side) in [side1, side2].into_iter().enumerate() {
        if side.is_empty() {
            return Err(fail("a side is empty"));
        }
        for &v in side {
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if cut & (1 << v) != 0 {
                return Err(fail("a side contains a cut vertex"));
            }
            if (mask[0] | mask[1]) & (1 << v) != 0 {
                return Err(fail("sides overlap"));
            }
            mask[mi] |= 1 << v;
        }
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    if mask[0] | mask[1] | cut != all {
        return Err(fail("sides do not cover the rest of the graph"));
    }
    for &u in side1 {
        if g.neighbor_mask(u) & mask[1] != 0 {
            return Err(fail("an edge crosses between the sides"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle_graph, disjoint_union, join, petersen, Graph};

    fn limits() -> SearchLimits {
        SearchLimits::default()
    }

    fn spec(items: &[usize]) -> LengthSpectrum {
        items.iter().copied().collect()
    }

    #[test]
    fn spectra_of_named_graphs() {
        assert_eq!(cycle_spectrum(&petersen(), &limits()).unwrap(), spec(&[5, 6, 8, 9]));
        assert_eq!(cycle_spectrum(&complete_bipartite(3, 3), &limits()).unwrap(), spec(&[4, 6]));
        assert_eq!(cycle_spectrum(&complete(5), &limits()).unwrap(), spec(&[3, 4, 5]));
        assert_eq!(cycle_spectrum(&cycle_graph(7), &limits()).unwrap(), spec(&[7]));
        assert_eq!(cycle_spectrum(&complete(2), &limits()).unwrap(), spec(&[]));
        assert_eq!(cycle_spectrum(&Graph::empty(0).unwrap(), &limits()).unwrap(), spec(&[]));
    }

    #[test]
    fn witnesses_are_canonical_and_genuine() {
        let g = petersen();
        let w = cycle_spectrum_with_witnesses(&g, &limits()).unwrap();
        assert_eq!(w.keys().copied().collect::<Vec<_>>(), vec![5, 6, 8, 9]);
        for (l, cycle) in &w {
            assert_eq!(cycle.len(), *l);
            assert!(is_cycle_of(&g, cycle));
            assert_eq!(&canonical_rotation(cycle), cycle);
        }
        // lexicographically smallest 5-cycle is the outer rim
        assert_eq!(w[&5], vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn consecutive_even_runs() {
        let w = find_consecutive_even_cycles(&petersen(), 2, &limits()).unwrap().unwrap();
        assert_eq!(w.lengths, vec![6, 8]);
        assert!(w.validates_in(&petersen()));

        // K5 has even lengths {4} only
        assert_eq!(find_consecutive_even_cycles(&complete(5), 2, &limits()).unwrap(), None);
        let k1 = find_consecutive_even_cycles(&complete(5), 1, &limits()).unwrap().unwrap();
        assert_eq!(k1.lengths, vec![4]);

        assert_eq!(
            find_consecutive_even_cycles(&complete_bipartite(3, 3), 2, &limits()).unwrap().unwrap().lengths,
            vec![4, 6]
        );
        assert!(find_consecutive_even_cycles(&complete(5), 0, &limits()).is_err());
    }

    #[test]
    fn cycles_differing_by_one_or_two() {
        let w = find_cycles_differing_by_one_or_two(&complete(4), &limits()).unwrap().unwrap();
        assert_eq!(w.lengths, vec![3, 4]);
        assert!(w.validates_in(&complete(4)));
        assert_eq!(find_cycles_differing_by_one_or_two(&cycle_graph(6), &limits()).unwrap(), None);
        // spectrum {5, 6, 8, 9}: 5 and 6 differ by one
        let w = find_cycles_differing_by_one_or_two(&petersen(), &limits()).unwrap().unwrap();
        assert_eq!(w.lengths, vec![5, 6]);
    }

    #[test]
    fn path_spectra() {
        assert_eq!(
            path_length_spectrum(&complete(5), 0, 4, &limits()).unwrap(),
            spec(&[1, 2, 3, 4])
        );
        // antipodal vertices of a hexagon
        assert_eq!(path_length_spectrum(&cycle_graph(6), 0, 3, &limits()).unwrap(), spec(&[3]));
        // distance-2 vertices of a hexagon
        assert_eq!(path_length_spectrum(&cycle_graph(6), 0, 2, &limits()).unwrap(), spec(&[2, 4]));
        assert!(path_length_spectrum(&complete(3), 0, 0, &limits()).is_err());
        assert!(path_length_spectrum(&complete(3), 0, 7, &limits()).is_err());
    }

    #[test]
    fn parity_path_verdicts() {
        match has_parity_paths(&complete(4), 0, 1, &limits()).unwrap() {
            ParityPaths::Both { odd_path, even_path } => {
                assert_eq!(odd_path, vec![0, 1]);
                assert_eq!(even_path, vec![0, 2, 1]);
            }
            other => panic!("expected both parities, got {other:?}"),
        }
        match has_parity_paths(&cycle_graph(6), 0, 3, &limits()).unwrap() {
            ParityPaths::OnlyOdd { odd_path } => assert_eq!(odd_path.len(), 4),
            other => panic!("expected odd only, got {other:?}"),
        }
        match has_parity_paths(&cycle_graph(6), 0, 2, &limits()).unwrap() {
            ParityPaths::OnlyEven { even_path } => assert_eq!(even_path, vec![0, 1, 2]),
            other => panic!("expected even only, got {other:?}"),
        }
        let split = disjoint_union(&complete(2), &complete(2));
        assert_eq!(has_parity_paths(&split, 0, 2, &limits()).unwrap(), ParityPaths::Neither);
    }

    #[test]
    fn paths_differing_by_two() {
        let pair = find_two_paths_differing_by_two(&complete(5), 0, 1, &limits()).unwrap().unwrap();
        assert_eq!(pair.lengths, (1, 3));
        assert!(is_path_of(&complete(5), &pair.paths.0, 0, 1));
        assert!(is_path_of(&complete(5), &pair.paths.1, 0, 1));
        assert_eq!(find_two_paths_differing_by_two(&cycle_graph(6), 0, 3, &limits()).unwrap(), None);
        assert!(
            find_two_paths_differing_by_two(&cycle_graph(6), 0, 2, &limits()).unwrap().is_some()
        );
    }

    #[test]
    fn combining_cut_paths() {
        // theta graph: x = 0, y = 1, branches 0-2-1, 0-3-1, 0-4-5-6-1
        let theta = Graph::from_edge_list(
            7,
            &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 5), (5, 6), (6, 1)],
        )
        .unwrap();
        let w = combine_cut_paths(&theta, 0, 1, &[2, 4, 5, 6], &[3], &limits()).unwrap().unwrap();
        assert_eq!(w.lengths, vec![4, 6]);
        assert!(w.validates_in(&theta));

        // K_{2,3} with the degree-3 side as the cut: all side paths have length 2
        let k23 = complete_bipartite(2, 3);
        assert_eq!(combine_cut_paths(&k23, 0, 1, &[2], &[3, 4], &limits()).unwrap(), None);

        // two K5 blocks glued on an edge {0, 1}
        let glued = {
            let mut edges = complete(5).edges();
            for (u, v) in complete(5).edges() {
                let map = |z: usize| if z < 2 { z } else { z + 3 };
                if (u, v) != (0, 1) {
                    edges.push((map(u), map(v)));
                }
            }
            Graph::from_edge_list(8, &edges).unwrap()
        };
        let w = combine_cut_paths(&glued, 0, 1, &[2, 3, 4], &[5, 6, 7], &limits()).unwrap().unwrap();
        assert_eq!(w.lengths, vec![4, 6]);
        assert!(w.validates_in(&glued));
    }

    #[test]
    fn separation_validation() {
        let k23 = complete_bipartite(2, 3);
        // overlap
        assert!(matches!(
            combine_cut_paths(&k23, 0, 1, &[2, 3], &[3, 4], &limits()),
            Err(Error::NotASeparator { .. })
        ));
        // missing vertex
        assert!(matches!(
            combine_cut_paths(&k23, 0, 1, &[2], &[3], &limits()),
            Err(Error::NotASeparator { .. })
        ));
        // genuine 2-cut of a 4-cycle, but no two side paths differ by two
        let c4 = cycle_graph(4);
        assert!(matches!(combine_cut_paths(&c4, 0, 2, &[1], &[3], &limits()), Ok(None)));
        // a chord between the sides breaks the separation
        let chorded = c4.with_edge(1, 3).unwrap();
        assert!(matches!(
            combine_cut_paths(&chorded, 0, 2, &[1], &[3], &limits()),
            Err(Error::NotASeparator { .. })
        ));
        let bad = join(&complete(1), &cycle_graph(4));
        // vertices 1..5 form the cycle; {1, 3}+apex 0 is not a separation of {2} | {4, 0}
        assert!(matches!(
            combine_cut_paths(&bad, 1, 3, &[2], &[4, 0], &limits()),
            Err(Error::NotASeparator { .. })
        ));
    }

    #[test]
    fn budget_is_enforced() {
        let tight = SearchLimits { max_vertices: 16, max_steps: 50 };
        // the spectrum of the Petersen graph misses some lengths, so the scan
        // cannot stop early and must instead run into the step cap
        assert_eq!(
            cycle_spectrum(&petersen(), &tight),
            Err(Error::BudgetExhausted { budget: 50 })
        );
        assert_eq!(
            has_cycle_length(&complete(8), &tight, |_| false),
            Err(Error::BudgetExhausted { budget: 50 })
        );
        let too_big = Graph::empty(17).unwrap();
        assert_eq!(
            cycle_spectrum(&too_big, &limits()),
            Err(Error::SearchVertexBound { n: 17, max: 16 })
        );
    }

    #[test]
    fn spectrum_monotone_under_subgraphs() {
        let g = petersen();
        let sub = g.induced_subgraph(&[0, 1, 2, 3, 4, 5, 6, 7]).unwrap();
        let s_sub = cycle_spectrum(&sub, &limits()).unwrap();
        let s_g = cycle_spectrum(&g, &limits()).unwrap();
        assert!(s_sub.is_subset(&s_g));
    }
}
