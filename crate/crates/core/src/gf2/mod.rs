//! Exact semantics of CNOT-only circuits as linear maps over GF(2).
//!
//! Wires are numbered from 1 in every user-facing format. A CNOT with
//! control `c` and target `t` maps a bit vector by `x[t] ^= x[c]`, i.e. it
//! is the matrix `I + E(t,c)` acting on column vectors. Circuits apply
//! left-to-right, so the matrix of `g1 g2 ... gk` is `Gk * ... * G1`.

mod circuit;
mod gate;
mod matrix;
mod perm;

pub use circuit::{format_bits, parse_bits, Circuit};
pub use gate::CnotGate;
pub use matrix::Gf2Matrix;
pub use perm::PermSpec;

pub(crate) use matrix::{code_apply_gate_left, code_apply_gate_right, identity_code};

use thiserror::Error;

/// Construction errors for gates, matrices, circuits, and permutations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Gf2Error {
    #[error("control and target must be distinct wires")]
    SameWire,
    #[error("wire {wire} out of range for {n} wires")]
    WireOutOfRange { wire: usize, n: usize },
    #[error("images are not a bijection on 1..={n}")]
    NotBijective { n: usize },
    #[error("wire count {n} unsupported (expected {min}..={max})")]
    UnsupportedWireCount { n: usize, min: usize, max: usize },
    #[error("wire count mismatch: expected {expected}, found {found}")]
    WireCountMismatch { expected: usize, found: usize },
}

/// A text-format error, pointing at the offending 1-based byte column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {message}")]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(column: usize, message: impl Into<String>) -> Self {
        ParseError { column, message: message.into() }
    }
}
