//! Dynamic monopolies of graphs under irreversible threshold activation.
//!
//! A seed set is a *dynamo* for `(G, τ)` when repeatedly activating every
//! vertex with at least `τ(v)` active neighbours eventually activates the
//! whole graph. This crate provides the activation process, exact bounds on
//! the minimum dynamo size, a constructive strict-majority dynamo of at most
//! half the vertices, a greedy shrinking procedure meeting a degree-sequence
//! bound, and exact small-scale solvers to cross-check all of them.

pub mod bounds;
pub mod combinatorics;
pub mod corpus;
pub mod dynamics;
pub mod error;
pub mod generate;
pub mod graph;
pub mod minimize;
pub mod oracle;
pub mod rational;
pub mod strict_majority;
pub mod threshold;

pub use bounds::{bound_report, kn_witness, lower_bound_average, upper_bound_degree_sequence, BoundReport};
pub use combinatorics::{chromatic_number, maximum_matching, minimum_vertex_cover, Matching, VertexCover};
pub use dynamics::{is_dynamo, propagate, verify_trace, ActivationTrace};
pub use error::{Error, Result};
pub use generate::{generate, Family};
pub use graph::Graph;
pub use minimize::{exact_min_dynamo, greedy_shrink, is_minimal, Budget};
pub use rational::Rational;
pub use strict_majority::{
    build_ordering, dynamo_containing, f_values, half_dynamo, matching_bound_audit, OrderingCertificate,
};
pub use threshold::{ThresholdAssignment, ThresholdRule, ThresholdStats};
