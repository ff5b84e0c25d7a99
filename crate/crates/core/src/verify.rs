//! Statement-level verification suites: each suite turns one
//! universally-quantified claim into an exhaustive check over all small
//! graphs, reporting counterexamples instead of asserting.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_form, CanonicalForm};
use crate::connectivity::{
    block_decomposition, connected_components, find_two_cuts, is_bipartite, is_connected,
    is_two_connected, vertex_connectivity_at_most, BipartiteVerdict, ConnectivityBound,
};
use crate::cycles::{
    find_consecutive_even_cycles, find_cycles_differing_by_one_or_two,
    find_two_paths_differing_by_two, has_cycle_length, has_parity_paths, is_path_of, ParityPaths,
    SearchLimits,
};
use crate::enumerate::enumerate_graphs;
use crate::error::{Error, Result};
use crate::family::{enumerate_members, extremal_verdict, max_edges_no_two_mod_four, ExtremalVerdict};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::subgraph::spanning_embedding;
use crate::turan::{is_family_free, ForbiddenFamily};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub detail: String,
}

/// Outcome of one suite: the universe description, how many instances were
/// checked, and every violation found (empty means the statement held).
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub statement_id: String,
    pub universe: String,
    pub checked: u64,
    pub violations: Vec<Violation>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn violation(g: &Graph, detail: impl Into<String>) -> Violation {
    Violation { graph6: to_graph6(g), detail: detail.into() }
}

/// Suites never abort on an exhausted search budget: the instance is
/// reported as a violation naming the budget, since the property could not
/// be established for it.
fn or_budget<T>(res: Result<T>) -> Result<std::result::Result<T, u64>> {
    match res {
        Ok(t) => Ok(Ok(t)),
        Err(Error::BudgetExhausted { budget }) => Ok(Err(budget)),
        Err(e) => Err(e),
    }
}

fn cap(n_max: usize, max: usize) -> Result<()> {
    if n_max > max {
        return Err(Error::EnumerationBound { n: n_max, max });
    }
    Ok(())
}

/// Runs `per_graph` over every isomorphism class of every order in
/// `orders`, merging per-graph instance counts and violations in
/// enumeration order.
fn run_suite(
    statement_id: &str,
    universe: String,
    orders: impl Iterator<Item = usize>,
    per_graph: impl Fn(&Graph) -> Result<(u64, Vec<Violation>)> + Sync,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut checked = 0;
    let mut violations = Vec::new();
    for n in orders {
        let graphs = enumerate_graphs(n)?;
        let outcomes: Vec<Result<(u64, Vec<Violation>)>> =
            graphs.par_iter().map(&per_graph).collect();
        for outcome in outcomes {
            let (c, v) = outcome?;
            checked += c;
            violations.extend(v);
        }
    }
    Ok(VerificationReport {
        statement_id: statement_id.into(),
        universe,
        checked,
        violations,
        elapsed: start.elapsed(),
    })
}

/// Every graph with at most two vertices of degree below three (other than
/// the one- and two-vertex graphs) has two cycles whose lengths differ by
/// one or two.
pub fn verify_bondy_vince(n_max: usize, limits: &SearchLimits) -> Result<VerificationReport> {
    cap(n_max, 8)?;
    run_suite(
        "bondy_vince",
        format!("graphs on 3..={n_max} vertices with at most two vertices of degree < 3"),
        3..=n_max,
        |g| {
            if g.degrees().iter().filter(|&&d| d < 3).count() > 2 {
                return Ok((0, Vec::new()));
            }
            let vs = match or_budget(find_cycles_differing_by_one_or_two(g, limits))? {
                Ok(Some(w)) => {
                    let d = w.lengths[1] - w.lengths[0];
                    if w.validates_in(g) && (d == 1 || d == 2) {
                        Vec::new()
                    } else {
                        vec![violation(g, "returned cycle pair failed revalidation")]
                    }
                }
                Ok(None) => vec![violation(g, "no two cycles with lengths differing by one or two")],
                Err(b) => vec![violation(g, format!("search budget of {b} steps exhausted"))],
            };
            Ok((1, vs))
        },
    )
}

/// Every graph at or above the extremal edge threshold either contains two
/// cycles of consecutive even lengths or is a family member; and the graphs
/// at exactly the threshold with no cycle of length 2 mod 4 are exactly the
/// family members.
pub fn verify_extremal_threshold(
    n_max: usize,
    limits: &SearchLimits,
) -> Result<VerificationReport> {
    cap(n_max, 9)?;
    let start = Instant::now();
    let mut checked = 0;
    let mut violations = Vec::new();
    let residue2 = ForbiddenFamily::CycleResidue { modulus: 4, residue: 2 };
    type Outcome = (u64, Vec<Violation>, Option<CanonicalForm>);
    for n in 1..=n_max {
        let threshold = max_edges_no_two_mod_four(n)?;
        let graphs = enumerate_graphs(n)?;
        let outcomes: Vec<Result<Outcome>> = graphs
            .par_iter()
            .map(|g| {
                if g.edge_count() < threshold {
                    return Ok((0, Vec::new(), None));
                }
                let mut vs = Vec::new();
                match or_budget(extremal_verdict(g, limits))? {
                    Ok(ExtremalVerdict::BelowThreshold) => unreachable!("filtered above"),
                    Ok(ExtremalVerdict::HasWitness(w)) => {
                        if !(w.validates_in(g)
                            && w.lengths.len() == 2
                            && w.lengths[0] % 2 == 0
                            && w.lengths[1] == w.lengths[0] + 2)
                        {
                            vs.push(violation(g, "witness failed revalidation"));
                        }
                    }
                    Ok(ExtremalVerdict::ExtremalMember(_)) => {}
                    Ok(ExtremalVerdict::Counterexample) => {
                        vs.push(violation(
                            g,
                            format!(
                                "at least {threshold} edges, no consecutive even cycles, \
                                 and not a family member"
                            ),
                        ));
                    }
                    Err(b) => vs.push(violation(g, format!("search budget of {b} steps exhausted"))),
                }
                // independently of the verdict, membership in the threshold
                // catalog uses the residue predicate
                let free_form = if g.edge_count() == threshold
                    && or_budget(is_family_free(g, residue2, limits))? == Ok(true)
                {
                    Some(canonical_form(g)?)
                } else {
                    None
                };
                Ok((1, vs, free_form))
            })
            .collect();
        let mut free_at_threshold = BTreeSet::new();
        for outcome in outcomes {
            let (c, vs, form) = outcome?;
            checked += c;
            violations.extend(vs);
            free_at_threshold.extend(form);
        }
        let members: BTreeSet<CanonicalForm> = enumerate_members(n)?
            .iter()
            .map(canonical_form)
            .collect::<Result<_>>()?;
        for missing in members.difference(&free_at_threshold) {
            violations.push(violation(
                &missing.to_graph(),
                "family member missing from the threshold catalog",
            ));
        }
        for extra in free_at_threshold.difference(&members) {
            violations.push(violation(
                &extra.to_graph(),
                "threshold-attaining graph without 2 mod 4 cycles is not a family member",
            ));
        }
    }
    Ok(VerificationReport {
        statement_id: "extremal_threshold".into(),
        universe: format!(
            "graphs on 1..={n_max} vertices with at least 10q + C(r+1,2) edges"
        ),
        checked,
        violations,
        elapsed: start.elapsed(),
    })
}

/// Every graph with at least ceil(3(n-1)/2) edges contains an even cycle,
/// unless every block holding an edge is a triangle.
pub fn verify_dean_even_cycle(n_max: usize, limits: &SearchLimits) -> Result<VerificationReport> {
    cap(n_max, 9)?;
    run_suite(
        "dean_even_cycle",
        format!("graphs on 1..={n_max} vertices with at least ceil(3(n-1)/2) edges"),
        1..=n_max,
        |g| {
            let n = g.n();
            if g.edge_count() < (3 * (n - 1)).div_ceil(2) {
                return Ok((0, Vec::new()));
            }
            let vs = match or_budget(has_cycle_length(g, limits, |l| l % 2 == 0))? {
                Ok(true) => Vec::new(),
                Ok(false) => {
                    // exempt iff every block with an edge is a triangle
                    if block_decomposition(g).blocks.iter().all(|b| b.len() == 1 || b.len() == 3) {
                        Vec::new()
                    } else {
                        vec![violation(g, "no even cycle, yet a block is not a triangle")]
                    }
                }
                Err(b) => vec![violation(g, format!("search budget of {b} steps exhausted"))],
            };
            Ok((1, vs))
        },
    )
}

fn is_three_connected(g: &Graph) -> Result<bool> {
    Ok(g.n() >= 4
        && is_connected(g)
        && vertex_connectivity_at_most(g, 2)? == ConnectivityBound::Exceeds)
}

/// Every 3-connected graph of order at least 6 contains two cycles of
/// consecutive even lengths.
pub fn verify_three_connected(n_max: usize, limits: &SearchLimits) -> Result<VerificationReport> {
    cap(n_max, 7)?;
    run_suite(
        "three_connected",
        format!("3-connected graphs on 6..={n_max} vertices"),
        6..=n_max,
        |g| {
            if !is_three_connected(g)? {
                return Ok((0, Vec::new()));
            }
            let vs = match or_budget(find_consecutive_even_cycles(g, 2, limits))? {
                Ok(Some(w)) if w.validates_in(g) => Vec::new(),
                Ok(Some(_)) => vec![violation(g, "witness failed revalidation")],
                Ok(None) => vec![violation(g, "no two cycles of consecutive even lengths")],
                Err(b) => vec![violation(g, format!("search budget of {b} steps exhausted"))],
            };
            Ok((1, vs))
        },
    )
}

/// For every non-bipartite graph H and nonadjacent pair x, y such that
/// H + xy is 2-connected, H has both an odd and an even (x, y)-path.
pub fn verify_parity_paths(n_max: usize, limits: &SearchLimits) -> Result<VerificationReport> {
    cap(n_max, 8)?;
    run_suite(
        "parity_paths",
        format!(
            "non-bipartite graphs H on 3..={n_max} vertices and pairs x, y with \
             xy outside H and H + xy 2-connected"
        ),
        3..=n_max,
        |h| {
            if matches!(is_bipartite(h), BipartiteVerdict::Bipartite { .. }) {
                return Ok((0, Vec::new()));
            }
            let mut checked = 0;
            let mut vs = Vec::new();
            for x in 0..h.n() {
                for y in x + 1..h.n() {
                    if h.has_edge(x, y) || !is_two_connected(&h.with_edge(x, y)?) {
                        continue;
                    }
                    checked += 1;
                    match or_budget(has_parity_paths(h, x, y, limits))? {
                        Ok(ParityPaths::Both { odd_path, even_path }) => {
                            if !(is_path_of(h, &odd_path, x, y)
                                && is_path_of(h, &even_path, x, y)
                                && odd_path.len() % 2 == 0
                                && even_path.len() % 2 == 1)
                            {
                                vs.push(violation(h, format!("bad parity witnesses for x={x} y={y}")));
                            }
                        }
                        Ok(_) => vs.push(violation(
                            h,
                            format!("missing an (x, y)-path parity for x={x} y={y}"),
                        )),
                        Err(b) => vs.push(violation(
                            h,
                            format!("search budget of {b} steps exhausted at x={x} y={y}"),
                        )),
                    }
                }
            }
            Ok((checked, vs))
        },
    )
}

/// For every G and pair x, y with G + xy 2-connected, all other vertices of
/// degree at least 3, and every edge avoiding x, y of degree sum at least 7:
/// G - xy has two (x, y)-paths with lengths differing by two.
pub fn verify_paths_differ_two(
    n_max: usize,
    limits: &SearchLimits,
) -> Result<VerificationReport> {
    cap(n_max, 8)?;
    run_suite(
        "paths_differ_two",
        format!(
            "graphs G on 3..={n_max} vertices and pairs x, y with G + xy 2-connected, \
             deg >= 3 off the pair, and degree sums >= 7 on edges avoiding it"
        ),
        3..=n_max,
        |g| {
            let degrees = g.degrees();
            let mut checked = 0;
            let mut vs = Vec::new();
            for x in 0..g.n() {
                'pairs: for y in x + 1..g.n() {
                    for (v, &d) in degrees.iter().enumerate() {
                        if v != x && v != y && d < 3 {
                            continue 'pairs;
                        }
                    }
                    for (u, v) in g.edges() {
                        if u != x && u != y && v != x && v != y && degrees[u] + degrees[v] < 7 {
                            continue 'pairs;
                        }
                    }
                    if !is_two_connected(&g.with_edge(x, y)?) {
                        continue;
                    }
                    checked += 1;
                    let h = g.without_edge(x, y)?;
                    match or_budget(find_two_paths_differing_by_two(&h, x, y, limits))? {
                        Ok(Some(pair)) => {
                            if !(is_path_of(&h, &pair.paths.0, x, y)
                                && is_path_of(&h, &pair.paths.1, x, y)
                                && pair.lengths.1 == pair.lengths.0 + 2)
                            {
                                vs.push(violation(g, format!("bad path pair for x={x} y={y}")));
                            }
                        }
                        Ok(None) => vs.push(violation(
                            g,
                            format!("no (x, y)-paths differing by two for x={x} y={y}"),
                        )),
                        Err(b) => vs.push(violation(
                            g,
                            format!("search budget of {b} steps exhausted at x={x} y={y}"),
                        )),
                    }
                }
            }
            Ok((checked, vs))
        },
    )
}

/// Extending a family member by one vertex with two edges, or by two
/// adjacent vertices with two edges each, either creates two cycles of
/// consecutive even lengths or stays a spanning subgraph of a one- or
/// two-orders-larger member.
pub fn verify_family_closure(
    n_max: usize,
    limits: &SearchLimits,
) -> Result<VerificationReport> {
    cap(n_max, 8)?;
    let start = Instant::now();
    let mut checked = 0;
    let mut violations = Vec::new();
    for n in 1..=n_max {
        let members = enumerate_members(n)?;
        let next = enumerate_members(n + 1)?;
        let nextnext = enumerate_members(n + 2)?;
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();

        let dichotomy = |g2: &Graph, hosts: &[Graph], ext: &str| -> Result<Vec<Violation>> {
            match or_budget(find_consecutive_even_cycles(g2, 2, limits))? {
                Ok(Some(w)) if w.validates_in(g2) => Ok(Vec::new()),
                Ok(Some(_)) => Ok(vec![violation(g2, "witness failed revalidation")]),
                Ok(None) => {
                    if hosts.iter().any(|h| spanning_embedding(g2, h).is_some()) {
                        Ok(Vec::new())
                    } else {
                        Ok(vec![violation(
                            g2,
                            format!(
                                "{ext}: no consecutive even cycles and not a spanning \
                                 subgraph of any larger member"
                            ),
                        )])
                    }
                }
                Err(b) => Ok(vec![violation(g2, format!("search budget of {b} steps exhausted"))]),
            }
        };

        for member in &members {
            let one_vertex: Vec<Result<Vec<Violation>>> = pairs
                .par_iter()
                .map(|&(u1, u2)| {
                    let g2 = member.add_vertex_with_edges(&[u1, u2])?;
                    dichotomy(&g2, &next, "one-vertex extension")
                })
                .collect();
            for vs in one_vertex {
                checked += 1;
                violations.extend(vs?);
            }
            let two_vertex: Vec<Result<Vec<Violation>>> = pairs
                .par_iter()
                .map(|&(u1, u2)| {
                    let with_x = member.add_vertex_with_edges(&[u1, u2])?;
                    let mut vs = Vec::new();
                    for &(v1, v2) in &pairs {
                        let g2 = with_x.add_vertex_with_edges(&[v1, v2, n])?;
                        vs.extend(dichotomy(&g2, &nextnext, "two-vertex extension")?);
                    }
                    Ok(vs)
                })
                .collect();
            for vs in two_vertex {
                checked += pairs.len() as u64;
                violations.extend(vs?);
            }
        }
    }
    Ok(VerificationReport {
        statement_id: "family_closure".into(),
        universe: format!(
            "all one-vertex/two-edge and two-vertex/five-edge extensions of family \
             members on 1..={n_max} vertices"
        ),
        checked,
        violations,
        elapsed: start.elapsed(),
    })
}

/// For every 2-connected graph with a 2-cut {x, y}, all other degrees at
/// least 3, and a component of G - {x, y} whose internal edges have degree
/// sum at least 7: the graph has two cycles of consecutive even lengths.
pub fn verify_cut_combination(
    n_max: usize,
    limits: &SearchLimits,
) -> Result<VerificationReport> {
    cap(n_max, 8)?;
    run_suite(
        "cut_combination",
        format!(
            "2-connected graphs on 4..={n_max} vertices with a 2-cut, degrees >= 3 \
             off the cut, and a side with internal degree sums >= 7"
        ),
        4..=n_max,
        |g| {
            if !is_two_connected(g) {
                return Ok((0, Vec::new()));
            }
            let degrees = g.degrees();
            let edges = g.edges();
            let mut checked = 0;
            let mut vs = Vec::new();
            // the conclusion is per graph; search at most once
            let mut conclusion: Option<bool> = None;
            for (x, y) in find_two_cuts(g)? {
                if (0..g.n()).any(|v| v != x && v != y && degrees[v] < 3) {
                    continue;
                }
                let keep: Vec<usize> = (0..g.n()).filter(|&v| v != x && v != y).collect();
                let rest = g.induced_subgraph(&keep)?;
                for component in connected_components(&rest) {
                    let side: u64 =
                        component.iter().map(|&i| 1u64 << keep[i]).fold(0, |m, b| m | b);
                    let heavy = edges
                        .iter()
                        .filter(|&&(u, v)| side & (1 << u) != 0 && side & (1 << v) != 0)
                        .all(|&(u, v)| degrees[u] + degrees[v] >= 7);
                    if !heavy {
                        continue;
                    }
                    checked += 1;
                    let found = match conclusion {
                        Some(f) => f,
                        None => {
                            let f = match or_budget(find_consecutive_even_cycles(g, 2, limits))? {
                                Ok(w) => w.is_some_and(|w| w.validates_in(g)),
                                Err(b) => {
                                    vs.push(violation(
                                        g,
                                        format!("search budget of {b} steps exhausted"),
                                    ));
                                    true // budget already reported; don't double-count
                                }
                            };
                            conclusion = Some(f);
                            f
                        }
                    };
                    if !found {
                        vs.push(violation(
                            g,
                            format!("no consecutive even cycles despite the 2-cut ({x}, {y})"),
                        ));
                    }
                }
            }
            Ok((checked, vs))
        },
    )
}
