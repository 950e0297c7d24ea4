//! Finite-dimensional Pegg-Barnett oscillator toolkit.
//!
//! The crate builds the truncated ladder operators of an oscillator with
//! maximum occupation number `s`, checks the commutator relations among the
//! generators they produce, computes the Lie algebra they close into, and
//! realizes a supersymmetric extension through the multiphoton
//! Jaynes-Cummings supercharges. A small module evaluates the associated
//! charged-lepton mass formula.
//!
//! Data-parallel inner loops (closure rounds, structure constants, random
//! group-element sampling, `verify_all`) run on rayon when the `parallel`
//! feature is enabled; every such entry point also accepts [`Exec`] so the
//! sequential path stays available at runtime.

pub mod closure;
pub mod combin;
pub mod error;
pub mod exec;
pub mod gellmann;
pub mod io;
pub mod mass;
pub mod matrix;
pub mod operators;
pub mod report;
pub mod susy;
pub mod verify;

pub use error::{PbError, Result};
pub use exec::Exec;
pub use matrix::{ComplexMatrix, ComplexVector, C64};

/// Default absolute comparison tolerance (Frobenius) for matrix identities.
pub const DEFAULT_TOL: f64 = 1e-10;
