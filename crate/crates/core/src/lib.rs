//! Zero-divisor graphs of inverse semigroups under the natural partial order.
//!
//! The crate works with two sources of inverse semigroups:
//!
//! * finite semigroups given by Cayley tables ([`semigroup`]), whose
//!   zero-divisor graph is built in [`zdg`] and, for semigroups without zero,
//!   described through the least group congruence in [`sigma`];
//! * graph inverse semigroups `I(G)` of directed graphs ([`graph_inverse`]),
//!   enumerated up to a path-length bound.
//!
//! [`verify`] runs the diameter and girth classifications against
//! brute-force computations over seeded corpora, and [`cli`] wraps
//! everything behind the `zdg` binary.

pub mod cli;
pub mod corpus;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph_inverse;
pub mod report;
pub mod semigroup;
pub mod sigma;
pub mod verify;
pub mod zdg;

pub use error::{Error, ParseError, Result, TheoremViolation};
pub use graph::{Metric, SimpleGraph};
pub use semigroup::FiniteSemigroup;
pub use zdg::ZdGraph;
