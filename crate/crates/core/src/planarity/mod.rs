//! Framed planarity, genus and exact crossing numbers.
//!
//! A framed 4-graph is planar when it has a plane embedding in which the
//! two halves of every opposite pair are opposite in the cyclic order at
//! their vertex. That leaves two admissible rotations per vertex, which
//! [`genus_min`] enumerates exhaustively. [`is_planar_framed`] instead
//! replaces each vertex by a wheel whose rim fixes the cyclic order up to
//! mirror image and runs an ordinary planarity test, so it scales to the
//! graphs met in crossing searches.

mod crossing;
mod embed;
mod graph;
mod rotation;

pub use crossing::{
    cr_framed_exact, cr_graph_exact, vi_lower_bound, BoundKind, ChainLink, CrossingBound,
    CrossingWitness, Link, PathCheck, Witness, DEFAULT_BUDGET,
};
pub use embed::{framed_gadget, is_planar_framed, is_planar_graph};
pub use graph::Graph;
pub use rotation::{genus_min, genus_of, RotationSystem};
