//! Constructive realization of degree sequences by simple 3-uniform
//! hypergraphs.
//!
//! Two constructors cover sequences whose degrees lie in a dense middle band:
//! [`realize_tripartite`] for tripartite hypergraphs with equal class sizes
//! and [`realize_hypergraph`] for general ones on at least 45 vertices. Both
//! return a verified realization together with a description of how it was
//! built. [`oracle_tripartite`] and [`oracle_general`] decide small instances
//! by exhaustive search.

pub mod bipartite;
mod builder;
pub mod error;
pub mod flips;
pub mod format;
pub mod gen;
pub mod general;
pub mod oracle;
pub mod regular;
pub mod tripartite;
pub mod types;

pub use error::{Error, Result};
pub use flips::{FlipStep, FlipTrace};
pub use general::{degree_bounds, realize_hypergraph, EdgeKind, PhasePlan};
pub use oracle::{conjectured_constant, oracle_general, oracle_tripartite, Budget, OracleResult};
pub use regular::{almost_regular_tripartite, regular_tripartite, AlmostRegularSpec};
pub use tripartite::{
    classify, large_degree, realize_extreme, realize_tripartite, small_degree, CaseTag, ExtremeSpec,
};
pub use types::{
    complement_tripartite, degree_sequence_of, degree_sequence_of_tripartite, verify_realization,
    verify_tripartite_realization, BipartiteGraph, Class, DegreeSequence, Edge, Hypergraph,
    TripartiteDegreeSequence, TripartiteHypergraph, Verdict, VertexRef,
};
