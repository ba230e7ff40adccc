//! Degree polynomials of simple graphs: polynomial arithmetic and ordering,
//! graph construction and canonical forms, closed forms under graph
//! operations, and realizability of degree polynomial sequences.

pub mod dp;
pub mod graph;
pub mod poly;
pub mod realize;

/// Degree polynomial with `u64` coefficients, the default scalar.
pub type DegreePoly = poly::Poly<u64>;
/// Degree polynomial with `u128` coefficients for large products.
pub type WideDegreePoly = poly::Poly<u128>;

pub use dp::{degree_polynomial, dp_sequence, graph_degree_polynomial, PolySequence};
pub use graph::{canonical_form, CanonicalForm, Family, SimpleGraph};
pub use poly::{compare_pol, Poly};
pub use realize::{necessary_conditions, realize, RealizeOptions};
