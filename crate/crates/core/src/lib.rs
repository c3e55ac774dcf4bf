//! Exact analysis of matroid bingo.
//!
//! Matroids are represented by their circuit families (the "bingo cards");
//! every probability is an exact `BigRational`. The main entry points:
//!
//! * [`Matroid`] — validation, rank/independence/bases oracles,
//!   constructions (uniform, graphic, direct sum, projective-geometry
//!   duals), minors, and duality.
//! * [`tutte`] — independent-set counts and the Tutte polynomial, each
//!   derivable from the other.
//! * [`prob`] — exact winning probabilities per card (two independent
//!   engines plus brute force), timed profiles, bounds, monotonicity and
//!   equitability analysis.
//! * [`scan`] — streaming corpus analysis with a deterministic,
//!   order-preserving worker pool.

pub mod auto;
pub mod bounds;
pub mod error;
pub mod format;
pub mod gen;
pub mod golden;
pub mod graph;
pub mod matroid;
pub mod perm;
pub mod prob;
pub mod pg;
pub mod ratio;
pub mod rng;
pub mod scan;
pub mod seq;
pub mod set;
pub mod threshold;
pub mod tutte;

pub use error::Error;
pub use matroid::{validate_circuits, Axiom, AxiomFailure, Matroid, Minor, ValidationReport};
pub use perm::Permutation;
pub use set::{ElementId, ElementSet, MAX_ELEMENTS};
