//! Exact workbench for induction theory on finite groups: twisted group
//! additive categories over integer structure-constant algebras, the
//! induction/restriction/conjugation functors with their Mackey axioms, the
//! lattice pairing with Frobenius reciprocity, abstract Mackey/Green functors
//! with the Dress induction engine, and the Burnside-ring/Artin test bench.
//!
//! All arithmetic is exact (arbitrary-precision integers); all representative
//! choices derive from one canonical element order, so every run is
//! deterministic given its seed.

pub mod error;
pub mod perm;
pub mod group;
pub mod classify;
pub mod intmat;
pub mod fgab;
pub mod zalgebra;
pub mod lattice;
pub mod twisted;
pub mod functors;
pub mod sampling;
pub mod checks;
pub mod mackey;
pub mod burnside;
pub mod suite;

pub use error::{Error, Result};
