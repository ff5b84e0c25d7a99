//! Cycle-length spectra, consecutive even cycles, and extremal graph
//! searches on small graphs.

pub mod canon;
pub mod connectivity;
pub mod cycles;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod subgraph;
pub mod turan;
pub mod verify;

pub use canon::{
    are_isomorphic, canonical_form, canonical_representative, CanonicalForm, CANON_MAX_VERTICES,
};
pub use connectivity::{
    block_decomposition, connected_components, find_two_cuts, is_bipartite, is_connected,
    is_two_connected, vertex_connectivity_at_most, BipartiteVerdict, BlockDecomposition,
    ConnectivityBound,
};
pub use cycles::{
    canonical_rotation, combine_cut_paths, cycle_spectrum, cycle_spectrum_with_witnesses,
    find_consecutive_even_cycles, find_cycles_differing_by_one_or_two,
    find_two_paths_differing_by_two, has_cycle_length, has_parity_paths, is_cycle_of, is_path_of,
    path_length_spectrum, path_witnesses, CycleWitness, LengthSpectrum, ParityPaths, PathPair,
    SearchLimits,
};
pub use enumerate::{count_graphs, enumerate_graphs, ENUMERATION_MAX_VERTICES};
pub use error::{Error, Result};
pub use family::{
    canonical_member, classify_member, clique_attachment_cycles, enumerate_members,
    extremal_verdict, is_clique_block_graph, max_edges_no_two_mod_four, split_order,
    turan_formula, verstraete_bound, CliqueAttachment, ExtremalVerdict, FamilyBlock,
    FamilyBlockKind, FamilyDescriptor, Membership, FAMILY_MAX_VERTICES,
};
pub use graph::{
    complete, complete_bipartite, cycle_graph, disjoint_union, format_edge_list, join,
    parse_edge_list, path_graph, petersen, Graph, MAX_VERTICES,
};
pub use graph6::{from_graph6, to_graph6};
pub use subgraph::spanning_embedding;
pub use turan::{
    compute_ex, extremal_catalog, is_family_free, verify_formula_table, ForbiddenFamily,
    FormulaMismatch, FormulaTable, GraphSource, TuranRecord,
};
pub use verify::{
    verify_bondy_vince, verify_cut_combination, verify_dean_even_cycle, verify_extremal_threshold,
    verify_family_closure, verify_parity_paths, verify_paths_differ_two, verify_three_connected,
    VerificationReport, Violation,
};
