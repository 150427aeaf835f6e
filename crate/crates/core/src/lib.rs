//! Spanning quasi-trees of ribbon graphs, counted and listed through
//! principal minors of a skew-adjacency matrix of a one-vertex ribbon graph.
//!
//! A connected ribbon graph `G` with a spanning quasi-tree `T` is turned into
//! the bouquet `G^T` by partial duality; the quasi-trees of `G` are then the
//! symmetric differences `T Δ X` with `det M[X] = 1` over GF(2), where `M` is
//! the adjacency matrix of `G^T`.

pub mod deltamatroid;
pub mod harness;
pub mod matrices;
pub mod quasitree;
pub mod random;
pub mod ribbon;
pub mod rotation;
pub mod subset;
pub mod topology;

pub use harness::{run_check, HarnessConfig, HarnessSummary, InstanceOutcome};
pub use deltamatroid::{delta_matroid_of, DeltaMatroidError, ExchangeViolation, RibbonInput, SetSystem};
pub use matrices::{
    adjacency, det_gf2, det_identity_plus, det_int, det_symbolic, pivot_gf2, symbolic_skew_adjacency,
    unsymbolic, unsymbolic_skew_adjacency, BinaryMatrix, DetBackend, IntegerSkewMatrix, MatrixError,
    SymbolicPolynomial, SymbolicSkewMatrix,
};
pub use quasitree::{
    quasi_tree_polynomial, quasi_trees_of, quasi_trees_via_partial_dual, reduce, tau, Method, PolyOptions,
    QuasiTreeError, QuasiTreeReport, RibbonReport, SubsetPolynomial, DEFAULT_ENUMERATION_CAP,
};
pub use ribbon::{RibbonError, RibbonGraph};
pub use rotation::{Bouquet, End, HalfEdgeLabel, Interlacement, LoopKind, RotationError, Sign, SignedRotation};
pub use subset::EdgeSubset;
pub use topology::{
    boundary_components, enumerate_quasi_trees_oracle, find_spanning_quasi_tree, is_quasi_tree,
    is_spanning_quasi_tree, partial_dual, quasi_trees_oracle, TopologyError,
};
