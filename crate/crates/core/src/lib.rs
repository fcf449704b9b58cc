//! Hermitian adjacency spectra of partially oriented graphs.
//!
//! The crate builds Hermitian adjacency matrices of mixed graphs, computes
//! characteristic and matching polynomials exactly, and searches the tree of
//! partial orientations (signs on the edges outside a spanning tree) for one
//! whose largest eigenvalue does not exceed the largest matching-polynomial
//! root. All decisions are made with exact integer and rational arithmetic;
//! floating point only appears in `*_numeric` helpers and reports.

pub mod error;
pub mod explore;
pub mod family;
pub mod graph;
pub mod hermitian;
mod json_int;
pub mod limits;
pub mod matching;
pub mod poly;
pub mod switching;

pub use error::{Error, Result};
pub use graph::{
    bfs_spanning_tree, build_mixed, cotree_edges, encode_graph6, enumerate_spanning_trees,
    fundamental_cycle, parse_edge_list, parse_graph6, parse_mixed, tree_parity_bipartition,
    Edge, EdgeState, Graph, MixedGraph, SignVector, SpanningTree,
};
pub use limits::Limits;
pub use poly::{
    common_interlacing, compare_roots, interlaces, is_real_rooted, isolate_largest_root,
    real_roots, refine, roots_numeric, AlgebraicRoot, IntPoly,
};
pub use hermitian::{
    charpoly, eigenvalues_numeric, hermitian_adjacency, lambda_max, lambda_min, spectral_radius,
    verify_rank_one_identity, GaussInt, HermitianMatrix, RankOneOutcome,
};
pub use matching::{matching_counts, matching_polynomial, matching_radius, MatchingProfile};
pub use family::{
    audit_interlacing_family, conditional_sum_charpoly, conditional_sum_fast, expected_charpoly,
    greedy_orientation, verify_bound, AssignmentPrefix, AuditReport, OrientationCertificate,
    SumMethod, Verdict,
};
pub use switching::{
    apply_switching, classify_mixed, classify_partial_orientations, converse, equiv_to_oriented,
    equiv_to_unoriented, switching_equivalent, SwitchingCertificate, SwitchingMap,
};
pub use explore::{
    conjecture_report, generate_corpus, guo_mohar_sweep, min_rho_complete, min_rho_partial,
    ConjectureReport,
};
