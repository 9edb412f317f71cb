//! Exact 3-domination, vertex connectivity and exhaustive extremal-graph
//! checking for small simple graphs.
//!
//! The [`verify`] module enumerates every connected graph up to a size bound,
//! computes γ₃(G) + κ(G) for each one and compares the graphs reaching
//! `2n - k` with the named graphs in [`catalog`].

pub mod catalog;
pub mod connectivity;
pub mod domination;
pub mod enumerate;
pub mod family;
pub mod graph;
pub mod iso;
pub mod verify;

pub use catalog::{Catalog, DiscrepancyNote, NoteKind, Theorem};
pub use connectivity::{brute_force_connectivity, vertex_connectivity, CutResult};
pub use domination::{
    gamma3, gamma_k, is_k_dominating, is_k_tuple_dominating, DominationResult, Variant,
};
pub use family::{build_family, parse_family, FamilyExpr};
pub use graph::{Graph, Matching, VertexSet};
pub use iso::{canonical_form, canonical_key, is_isomorphic, CanonicalForm};
pub use verify::{
    audit_small_theorems, characterize, check_theorem, verify_bound, Census, VerificationReport,
};
