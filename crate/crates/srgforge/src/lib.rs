//! # srgforge
//!
//! Exact machinery for strongly regular graph parameter theory and
//! orthogonal array completion:
//!
//! - **[`params`]** — the parameter calculus: eigenvalues and multiplicities
//!   from the quadruple `(v, k, lambda, mu)`, the classical triple
//!   `(b, alpha, beta)` and its inverse, both clique-number bounds, the
//!   partial-geometry parameter form, Metsch's conditions, the SPLS and
//!   geometricity thresholds, and the [`params::classify`] verdict that
//!   dispatches a quadruple to forced-Latin-square / forced-Steiner /
//!   within-bound / infeasible.
//! - **[`graph`]** — concrete graphs: strong-regularity verification with
//!   witnesses, maximal-clique enumeration (Bron-Kerbosch with pivoting,
//!   canonical output order), complement, and the graph text format.
//! - **[`lines`]** — line systems: Metsch threshold extraction, Delsarte
//!   clique extraction, partial-linear-space certification, the tau /
//!   Delsarte-vertex / incidence-rank audit, and the exhaustive
//!   partial-geometry axiom check.
//! - **[`oa`] / [`completion`]** — orthogonal arrays OA(m, n), MOLS
//!   conversions, cyclic MOLS of prime order, Latin square graphs, and the
//!   completion of a deficient array to a full OA(n+1, n) through parallel
//!   classes of complement cliques.
//! - **[`cli`]** — the `srgforge` binary's command surface (also usable
//!   in-process); all rational output is exact fraction strings.
//!
//! Everything is exact arithmetic; no floating point participates in any
//! comparison. Start with the `examples/` directory: each example is a
//! runnable tour of one capability (`cargo run --example classify_params`,
//! `... --example oa_completion`, and so on).

pub mod cli;
pub mod completion;
pub mod graph;
pub mod lines;
pub mod oa;
pub mod params;
pub mod rank;
pub mod rat;

pub use completion::{complete, completion_bound, CompletionOutcome, CompletionReport};
pub use graph::{maximal_cliques, verify_srg, Graph, GraphError};
pub use lines::{
    audit_lines, check_partial_geometry, delsarte_lines, extract_lines, is_partial_geometry,
    LineAudit, LineSystem,
};
pub use oa::{
    gen_mols_prime, latin_square_graph, mols_to_oa, oa_to_mols, validate_oa, LatinSquare, OaError,
    OrthogonalArray,
};
pub use params::{
    classify, classify_quadruple, eigendata, from_classical, geometric_threshold_ok,
    has_geometric_parameters, improved_bound, metsch_conditions, mu_upper_bound, neumaier_bound,
    pg_feasible, pg_point_graph_params, spls_threshold_ok, to_classical, ClassicalParams,
    Eigendata, Eigenvalue, ParamsError, PgParams, StandardParams, Verdict, VerdictKind,
};
pub use rat::Rat;
