//! The acceptance gate: one criterion per shipped claim, one printed
//! pass/fail line each, all evaluated even when an earlier one fails.
//!
//! Expected runtime is minutes: the heaviest criteria scan every
//! isomorphism class on up to nine vertices (274,668 of them).

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use common::{labeled_graphs, spectrum_oracle};
use evencycles::{
    canonical_form, clique_attachment_cycles, complete, complete_bipartite, compute_ex,
    cycle_spectrum, disjoint_union, enumerate_graphs, enumerate_members, from_graph6, join,
    to_graph6, verify_bondy_vince, verify_cut_combination, verify_dean_even_cycle,
    verify_extremal_threshold, verify_family_closure, verify_formula_table, verify_parity_paths,
    verify_paths_differ_two, verify_three_connected, CanonicalForm, CliqueAttachment, Error,
    ForbiddenFamily, Graph, GraphSource, SearchLimits, VerificationReport,
};

type Universes = BTreeMap<usize, Vec<Graph>>;
type Check = Result<(), String>;

fn limits() -> SearchLimits {
    SearchLimits::default()
}

fn err(e: impl ToString) -> String {
    e.to_string()
}

fn suite(report: Result<VerificationReport, Error>) -> Check {
    let report = report.map_err(err)?;
    if report.passed() {
        return Ok(());
    }
    let first = &report.violations[0];
    Err(format!(
        "suite {}: {} violations, first on {}: {}",
        report.statement_id,
        report.violations.len(),
        first.graph6,
        first.detail
    ))
}

fn table(
    universes: &Universes,
    residue: usize,
    expected: [usize; 7],
) -> Result<Vec<Vec<String>>, String> {
    let family = ForbiddenFamily::CycleResidue { modulus: 4, residue };
    let mut catalogs = Vec::new();
    for (i, want) in expected.iter().enumerate() {
        let n = i + 3;
        let record =
            compute_ex(n, family, GraphSource::Provided(&universes[&n]), &limits()).map_err(err)?;
        if record.max_edges != *want {
            return Err(format!(
                "ex({n}) residue {residue}: computed {} expected {want}",
                record.max_edges
            ));
        }
        if record.agrees != Some(true) {
            return Err(format!("ex({n}) residue {residue}: formula disagreement"));
        }
        catalogs.push(record.extremal_graph6);
    }
    Ok(catalogs)
}

fn forms_of(graphs: &[Graph]) -> Result<BTreeSet<CanonicalForm>, String> {
    graphs.iter().map(|g| canonical_form(g).map_err(err)).collect()
}

fn catalog_forms(catalog: &[String]) -> Result<BTreeSet<CanonicalForm>, String> {
    catalog
        .iter()
        .map(|s| canonical_form(&from_graph6(s).map_err(err)?).map_err(err))
        .collect()
}

fn residue_two_table(universes: &Universes) -> Check {
    let catalogs = table(universes, 2, [3, 6, 10, 11, 13, 16, 20])?;
    for (i, catalog) in catalogs.iter().enumerate() {
        let n = i + 3;
        let members = forms_of(&enumerate_members(n).map_err(err)?)?;
        let found = catalog_forms(catalog)?;
        if members != found {
            return Err(format!(
                "catalog at n={n} has {} classes, the structured family has {}",
                found.len(),
                members.len()
            ));
        }
    }
    Ok(())
}

fn residue_zero_table(universes: &Universes) -> Check {
    table(universes, 0, [3, 4, 6, 7, 9, 11, 12]).map(|_| ())
}

fn residue_three_table(universes: &Universes) -> Check {
    let catalogs = table(universes, 3, [2, 4, 6, 9, 12, 16, 20])?;
    for (i, catalog) in catalogs.iter().enumerate() {
        let n = i + 3;
        let balanced = canonical_form(&complete_bipartite(n.div_ceil(2), n / 2)).map_err(err)?;
        if !catalog_forms(catalog)?.contains(&balanced) {
            return Err(format!("balanced complete bipartite graph missing at n={n}"));
        }
    }
    Ok(())
}

fn residue_one_table(universes: &Universes) -> Check {
    let catalogs = table(universes, 1, [3, 6, 7, 9, 12, 16, 20])?;
    let k1 = || Graph::empty(1).unwrap();
    let expected: [(usize, Vec<Graph>); 3] = [
        (5, vec![
            join(&k1(), &disjoint_union(&k1(), &complete(3))),
            join(&Graph::empty(3).unwrap(), &complete(2)),
        ]),
        (6, vec![
            complete_bipartite(3, 3),
            join(&k1(), &disjoint_union(&complete(2), &complete(3))),
            join(&Graph::empty(4).unwrap(), &complete(2)),
        ]),
        (7, vec![
            complete_bipartite(3, 4),
            join(&k1(), &disjoint_union(&complete(3), &complete(3))),
        ]),
    ];
    for (n, graphs) in expected {
        let want = forms_of(&graphs)?;
        let found = catalog_forms(&catalogs[n - 3])?;
        if want != found {
            return Err(format!(
                "catalog at n={n}: got {} classes, the listed graphs make {}",
                found.len(),
                want.len()
            ));
        }
    }
    Ok(())
}

/// All k-subsets of `ground` with at least `min` elements.
fn subsets_at_least(ground: &[usize], min: usize) -> Vec<Vec<usize>> {
    (0u32..1 << ground.len())
        .filter(|m| m.count_ones() as usize >= min)
        .map(|m| {
            ground
                .iter()
                .enumerate()
                .filter(|(i, _)| m & (1 << i) != 0)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect()
}

fn clique_edges(vertices: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            out.push((u, v));
        }
    }
    out
}

fn k_subsets(ground: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << ground)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..ground).filter(|i| m & (1 << i) != 0).collect())
        .collect()
}

/// Exercises the explicit 4-cycle and 6-cycle construction on every labeled
/// instance of the three attachment configurations: every choice of clique
/// vertices, role assignment, and qualifying neighbor sets.
fn attachment_witnesses() -> Check {
    let mut checked = 0u64;
    let validate = |g: &Graph, att: &CliqueAttachment| -> Check {
        let w = clique_attachment_cycles(g, att).map_err(err)?;
        if w.lengths != [4, 6] || w.cycles[0].len() != 4 || w.cycles[1].len() != 6 {
            return Err(format!("wrong cycle lengths on {}", to_graph6(g)));
        }
        if !w.validates_in(g) {
            return Err(format!("witness cycles are not cycles of {}", to_graph6(g)));
        }
        Ok(())
    };

    // adjacent pair on K4: x, y adjacent, each with two clique neighbors
    for cl in k_subsets(6, 4) {
        let clique = [cl[0], cl[1], cl[2], cl[3]];
        let rest: Vec<usize> = (0..6).filter(|v| !cl.contains(v)).collect();
        for (x, y) in [(rest[0], rest[1]), (rest[1], rest[0])] {
            for sx in subsets_at_least(&cl, 2) {
                for sy in subsets_at_least(&cl, 2) {
                    let mut edges = clique_edges(&cl);
                    edges.push((x, y));
                    edges.extend(sx.iter().map(|&v| (x, v)));
                    edges.extend(sy.iter().map(|&v| (y, v)));
                    let g = Graph::from_edge_list(6, &edges).unwrap();
                    validate(&g, &CliqueAttachment::AdjacentPairOnK4 { clique, x, y })?;
                    checked += 1;
                }
            }
        }
    }

    // triple neighbor on K4: x sees three clique vertices, y sees two
    // vertices among the clique and x
    for cl in k_subsets(6, 4) {
        let clique = [cl[0], cl[1], cl[2], cl[3]];
        let rest: Vec<usize> = (0..6).filter(|v| !cl.contains(v)).collect();
        for (x, y) in [(rest[0], rest[1]), (rest[1], rest[0])] {
            let mut ground = cl.clone();
            ground.push(x);
            for sx in subsets_at_least(&cl, 3) {
                for sy in subsets_at_least(&ground, 2) {
                    let mut edges = clique_edges(&cl);
                    edges.extend(sx.iter().map(|&v| (x, v)));
                    edges.extend(sy.iter().map(|&v| (y, v)));
                    let g = Graph::from_edge_list(6, &edges).unwrap();
                    validate(&g, &CliqueAttachment::TripleNeighborOnK4 { clique, x, y })?;
                    checked += 1;
                }
            }
        }
    }

    // two pairs on a triangle: x1 y1 and x2 y2 adjacent, all four with two
    // triangle neighbors
    for tri in k_subsets(7, 3) {
        let clique = [tri[0], tri[1], tri[2]];
        let rest: Vec<usize> = (0..7).filter(|v| !tri.contains(v)).collect();
        for i in 0..4 {
            for j in 0..4 {
                if j == i {
                    continue;
                }
                for k in 0..4 {
                    if k == i || k == j {
                        continue;
                    }
                    let l = 6 - i - j - k;
                    let (x1, y1, x2, y2) = (rest[i], rest[j], rest[k], rest[l]);
                    for sx1 in subsets_at_least(&tri, 2) {
                        for sy1 in subsets_at_least(&tri, 2) {
                            for sx2 in subsets_at_least(&tri, 2) {
                                for sy2 in subsets_at_least(&tri, 2) {
                                    let mut edges = clique_edges(&tri);
                                    edges.push((x1, y1));
                                    edges.push((x2, y2));
                                    edges.extend(sx1.iter().map(|&v| (x1, v)));
                                    edges.extend(sy1.iter().map(|&v| (y1, v)));
                                    edges.extend(sx2.iter().map(|&v| (x2, v)));
                                    edges.extend(sy2.iter().map(|&v| (y2, v)));
                                    let g = Graph::from_edge_list(7, &edges).unwrap();
                                    let config = CliqueAttachment::TwoPairsOnTriangle {
                                        clique,
                                        x1,
                                        y1,
                                        x2,
                                        y2,
                                    };
                                    validate(&g, &config)?;
                                    checked += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    // 15 cliques x 2 roles x 11 x 11, 15 x 2 x 5 x 26, 35 x 24 x 4^4
    let want: u64 = 15 * 2 * 11 * 11 + 15 * 2 * 5 * 26 + 35 * 24 * 256;
    if checked != want {
        return Err(format!("exercised {checked} labeled instances, expected {want}"));
    }
    Ok(())
}

fn supporting_suites() -> Check {
    suite(verify_parity_paths(7, &limits()))?;
    suite(verify_paths_differ_two(7, &limits()))?;
    suite(verify_family_closure(8, &limits()))?;
    suite(verify_cut_combination(7, &limits()))?;
    attachment_witnesses()
}

fn property_checks(universes: &Universes) -> Check {
    // the search agrees with the permutation oracle on every class up to 7
    for n in 3..=7 {
        for g in &universes[&n] {
            let fast = cycle_spectrum(g, &limits()).map_err(err)?;
            if fast != spectrum_oracle(g) {
                return Err(format!("spectrum oracle disagreement on {}", to_graph6(g)));
            }
        }
    }
    // codec identity and canonical-form relabeling invariance, exhaustively
    // over labeled graphs (rotation and a transposition generate the whole
    // symmetric group, so invariance under these two implies invariance
    // under every relabeling)
    for n in 1..=6 {
        for g in labeled_graphs(n) {
            if from_graph6(&to_graph6(&g)).map_err(err)? != g {
                return Err(format!("codec round trip failed on {}", to_graph6(&g)));
            }
            let form = canonical_form(&g).map_err(err)?;
            let rot: Vec<usize> = (0..n).map(|v| (v + 1) % n).collect();
            let mut swap: Vec<usize> = (0..n).collect();
            if n >= 2 {
                swap.swap(0, 1);
            }
            for perm in [rot, swap] {
                let relabeled = g.relabel(&perm).unwrap();
                if canonical_form(&relabeled).map_err(err)? != form {
                    return Err(format!("labeling leak on {}", to_graph6(&g)));
                }
            }
        }
    }
    // byte-identical reports across worker pools
    let snapshot = || -> Result<Vec<String>, String> {
        Ok(vec![
            serde_json::to_string(&verify_formula_table(5, &limits()).map_err(err)?)
                .map_err(err)?,
            serde_json::to_string(&verify_dean_even_cycle(6, &limits()).map_err(err)?)
                .map_err(err)?,
            serde_json::to_string(
                &compute_ex(
                    6,
                    ForbiddenFamily::CycleResidue { modulus: 4, residue: 2 },
                    GraphSource::Internal,
                    &limits(),
                )
                .map_err(err)?,
            )
            .map_err(err)?,
        ])
    };
    let mut runs = Vec::new();
    for workers in [1usize, 2, 8] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(err)?;
        runs.push(pool.install(snapshot)?);
    }
    if runs[0] != runs[1] || runs[1] != runs[2] {
        return Err("worker count changed report bytes".into());
    }
    Ok(())
}

struct Gate {
    index: usize,
    failures: Vec<String>,
}

impl Gate {
    fn run(&mut self, name: &str, f: impl FnOnce() -> Check) {
        self.index += 1;
        let t = Instant::now();
        let outcome = f();
        println!(
            "criterion {:>2}: {:<48} {} ({:.1?})",
            self.index,
            name,
            if outcome.is_ok() { "PASS" } else { "FAIL" },
            t.elapsed()
        );
        if let Err(e) = outcome {
            println!("              {e}");
            self.failures.push(format!("criterion {}: {name}: {e}", self.index));
        }
    }
}

#[test]
fn acceptance_gate() {
    let start = Instant::now();
    let universes: Universes = (3..=9)
        .map(|n| (n, enumerate_graphs(n).expect("generator within bounds")))
        .collect();
    println!(
        "universes ready: {} classes in {:.1?}",
        universes.values().map(Vec::len).sum::<usize>(),
        start.elapsed()
    );

    let mut gate = Gate { index: 0, failures: Vec::new() };
    gate.run("turan table, residue 2, with member catalogs", || {
        residue_two_table(&universes)
    });
    gate.run("turan table, residue 0", || residue_zero_table(&universes));
    gate.run("turan table, residue 3, bipartite catalogs", || {
        residue_three_table(&universes)
    });
    gate.run("turan table, residue 1, exact catalogs", || {
        residue_one_table(&universes)
    });
    gate.run("extremal threshold exhaustive to nine vertices", || {
        suite(verify_extremal_threshold(9, &limits()))
    });
    gate.run("even cycle at the density threshold", || {
        suite(verify_dean_even_cycle(8, &limits()))
    });
    gate.run("cycles differing by one or two", || {
        suite(verify_bondy_vince(7, &limits()))
    });
    gate.run("three-connected consecutive even cycles", || {
        suite(verify_three_connected(7, &limits()))
    });
    gate.run("supporting statement suites", supporting_suites);
    gate.run("property checks and determinism", || property_checks(&universes));

    assert!(
        gate.failures.is_empty(),
        "failed criteria:\n{}",
        gate.failures.join("\n")
    );
}
