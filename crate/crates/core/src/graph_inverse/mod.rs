//! Graph inverse semigroups `I(G)` of finite directed graphs.
//!
//! Nonzero elements are pairs `pq⁻¹` of paths with a common range. `I(G)` is
//! finite exactly when `G` has no directed cycle, so elements are enumerated
//! up to a path-length bound and every result carries an exactness flag.

mod analysis;
mod digraph;
mod element;
mod path;

pub use analysis::{
    build_gamma_ig, check_adjacency_oracle, check_associativity, check_cayley_agreement, check_exact_theorems,
    check_inverse_laws, check_paths_pairwise_adjacent, classify_ig, idempotent_translate, ig_adjacent, ig_elements,
    translate_with, IgGamma, IgUniverse, Product, DEFAULT_MAX_LEN,
};
pub use digraph::{is_null_graph, parse_graph, render_graph, DirectedGraph, Edge};
pub use element::{ig_inverse, ig_leq, ig_multiply, IgElement};
pub use path::{count_paths, enumerate_paths, GPath, PathEnumeration};
