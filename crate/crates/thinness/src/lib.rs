//! Thinness machinery for graphs: the twelve thinness variants with a
//! certificate checker, constructive witness layouts for crown graphs,
//! grids and cographs, an exact brute-force solver for small graphs, and
//! the coloring applications (perfect-order greedy coloring and the
//! bounded-coloring reductions).
//!
//! A certificate is a [`Layout`]: a vertex order plus an ordered partition
//! into classes. [`verify`] decides whether a layout satisfies a
//! [`VariantSpec`] (consistency mode x precedence flag x class constraint),
//! reporting a breaking triple or other witness when it does not.

pub mod bits;
pub mod cograph;
pub mod coloring;
pub mod crown;
pub mod exact;
pub mod graph;
pub mod grid;
pub mod layout;

pub use graph::{
    complete, complete_bipartite, crown as crown_graph, grid as grid_graph, matching_nk2, path,
    CrownLabeling, Graph, GraphError, GridLabeling, Side,
};
pub use layout::{
    classes_complete, classes_independent, check_strong_via_neighborhoods, is_consistent,
    is_precedence, is_strongly_consistent, verify, BreakingTriple, ClassConstraint, Consistency,
    Layout, LayoutError, NeighborhoodGap, VariantSpec, Violation,
};
