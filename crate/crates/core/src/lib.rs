//! Distance-2 coloring of outerplanar graphs.
//!
//! The crate is organized around the square construction: `power::square`
//! builds G^2, `reduction::inductive_ordering_square` produces a certified
//! inductive ordering of G^2 by repeated edge contraction, and
//! `power::greedy_color` turns any such ordering into a proper coloring.
//! `outerplanar` recognizes outerplanar graphs and exposes their outer
//! embeddings and weak duals; `chordal` adds the sharper machinery available
//! when every bounded face is a triangle. `families` constructs the named
//! extremal graphs and the generators used by the verification harness, and
//! `oracle` holds small brute-force reference implementations that the exact
//! solvers are tested against.

pub mod canon;
pub mod chordal;
pub mod families;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod outerplanar;
pub mod power;
pub mod reduction;

pub use graph::{Graph, Vertex};
