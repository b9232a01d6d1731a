//! Exact Frobenius algebra objects over the rationals, their biprojection
//! lattices, and lattice analytics.
//!
//! Two backends carry Frobenius objects: plain vector spaces with a form
//! ([`frobvec`]) and modules over a Hopf algebra given by structure constants
//! ([`modcat`]). Everything is computed in exact rational arithmetic.

pub mod cli;
pub mod exact;
pub mod frobobj;
pub mod frobvec;
pub mod group;
pub mod lattice;
pub mod modcat;
pub mod report;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("degenerate: {0}")]
    Degenerate(String),
    #[error("not a Frobenius subalgebra: {}", .0.join("; "))]
    NotSubalgebra(Vec<String>),
    #[error("meet of {left} and {right} failed: {reason}")]
    MeetFailure { left: String, right: String, reason: String },
    #[error("m∘δ is not a scalar multiple of the identity")]
    NotSeparable,
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
