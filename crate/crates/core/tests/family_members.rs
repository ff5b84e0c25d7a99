//! Extremal family generation and recognition: structural invariants of
//! every enumerated member, and agreement between the three entry points.

mod common;

use evencycles::{
    are_isomorphic, block_decomposition, canonical_member, classify_member, cycle_spectrum,
    enumerate_members, is_clique_block_graph, is_connected, max_edges_no_two_mod_four,
    split_order, verstraete_bound, Membership, SearchLimits,
};

#[test]
fn members_have_the_advertised_structure() {
    // the one-vertex member is blockless; shape checks start at two vertices
    for n in 2..=11 {
        let (q, r) = split_order(n).unwrap();
        let threshold = max_edges_no_two_mod_four(n).unwrap();
        for g in enumerate_members(n).unwrap() {
            assert!(is_connected(&g));
            assert_eq!(g.edge_count(), threshold, "members attain the edge maximum");

            let d = block_decomposition(&g);
            let mut fives = 0;
            let mut rests = 0;
            for b in &d.blocks {
                match b.len() {
                    5 => fives += 1,
                    len => {
                        assert_eq!(len, r + 1, "non-K5 block must be the remainder clique");
                        rests += 1;
                    }
                }
            }
            assert_eq!(fives, q);
            assert_eq!(rests, if r == 0 { 0 } else { 1 });

            match classify_member(&g) {
                Membership::Member(desc) => {
                    assert_eq!(desc.n, n);
                    assert_eq!((desc.q, desc.r), (q, r));
                    assert_eq!(desc.blocks.len(), d.blocks.len());
                }
                Membership::NotMember { reason } => {
                    panic!("enumerated member rejected: {reason}")
                }
            }
            assert!(is_clique_block_graph(&g, 2));
        }
    }
}

#[test]
fn members_avoid_two_mod_four_lengths() {
    let limits = SearchLimits::default();
    for n in 1..=11 {
        for g in enumerate_members(n).unwrap() {
            for l in cycle_spectrum(&g, &limits).unwrap() {
                assert_ne!(l % 4, 2, "member has a forbidden cycle length {l}");
            }
        }
    }
}

#[test]
fn canonical_member_is_enumerated() {
    for n in 1..=11 {
        let chain = canonical_member(n).unwrap();
        let members = enumerate_members(n).unwrap();
        let hits = members
            .iter()
            .filter(|m| are_isomorphic(m, &chain).unwrap())
            .count();
        assert_eq!(hits, 1, "the chain member appears exactly once at n={n}");
    }
}

#[test]
fn member_counts_are_frozen() {
    // one member per order until two shapes fit, three at ten vertices
    let counts: Vec<usize> = (1..=10)
        .map(|n| enumerate_members(n).unwrap().len())
        .collect();
    assert_eq!(counts, [1, 1, 1, 1, 1, 1, 1, 1, 1, 3]);
}

#[test]
fn verstraete_bound_dominates_the_threshold() {
    for n in 2..=12 {
        let bound = verstraete_bound(n, 2).unwrap();
        let threshold = max_edges_no_two_mod_four(n).unwrap();
        let (_, r) = split_order(n).unwrap();
        let exact = bound.numer().is_multiple_of(*bound.denom())
            && threshold as u64 == *bound.numer() / *bound.denom();
        assert!(
            threshold as u64 * *bound.denom() <= *bound.numer(),
            "threshold exceeds the bound at n={n}"
        );
        assert_eq!(exact, r == 0, "equality holds exactly when 4 divides n-1");
    }
}
