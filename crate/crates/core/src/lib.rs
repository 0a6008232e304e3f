//! Free knots as chord diagrams and framed 4-graphs.
//!
//! The crate computes the parity bracket of a free knot, certifies
//! minimality of irreducibly odd diagrams, builds the odd-augmented
//! families obtained from trivalent graphs, and bounds crossing numbers
//! of framed 4-graphs by exhaustive crossing-insertion search.
//!
//! Module map:
//!
//! - [`diagram`]: double-occurrence words and their canonical form
//! - [`framed`]: framed 4-graphs, unicursal components, smoothing
//! - [`parity`]: linking, even/odd chords, irreducible oddness
//! - [`moves`]: Reidemeister moves on chord diagrams, R2 reduction
//! - [`bracket`]: the parity bracket, certificates, invariance fuzzing
//! - [`construct`]: quadratic-residue diagrams, trivalent inputs, the
//!   odd augmentation pipeline, Gauss code import
//! - [`planarity`]: framed genus, planarity, exact crossing numbers
//! - [`report`]: the end-to-end certified report
//! - [`dot`]: Graphviz export

pub mod bracket;
pub mod construct;
pub mod diagram;
pub mod dot;
pub mod error;
pub mod framed;
pub mod moves;
pub mod parity;
pub mod planarity;
pub mod report;

pub use bracket::{bracket, BracketValue, MinimalityCertificate};
pub use diagram::{canonical_word, parse_dow, ChordDiagram};
pub use error::{Error, Result};
pub use framed::{FramedFourGraph, Smoothing, SmoothingChoice};
pub use moves::MoveSite;
pub use parity::Parity;
