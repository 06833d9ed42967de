//! Error type shared across the crate.

use num_complex::Complex64;
use thiserror::Error;

/// A nonzero entry found outside the block sparsity pattern of the state
/// class, with its decoded coordinates.
#[derive(Debug, Clone)]
pub struct PatternEntry {
    /// Flat (row, col) index into the full matrix.
    pub row: usize,
    pub col: usize,
    /// Key coordinates of the row index: (A, B).
    pub key_bra: (usize, usize),
    /// Key coordinates of the column index: (A, B).
    pub key_ket: (usize, usize),
    /// Shield coordinates: ((A' row, B' row), (A' col, B' col)).
    pub shield: ((usize, usize), (usize, usize)),
    pub value: Complex64,
}

#[derive(Debug, Error)]
pub enum PditError {
    #[error("shape error: {0}")]
    Shape(String),

    #[error("subsystem index {index} out of range for {nfactors} tensor factors")]
    FactorIndex { index: usize, nfactors: usize },

    #[error("matrix is not Hermitian: max |M - M^dag| = {violation:.3e} exceeds tol {tol:.3e}")]
    NotHermitian { violation: f64, tol: f64 },

    #[error("matrix is not unitary: max |U^dag U - I| = {violation:.3e} exceeds tol {tol:.3e}")]
    NotUnitary { violation: f64, tol: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(
        "component {index} has trace {trace:.3e} but carries weight {weight:.3e}; \
         cannot normalize (enable renormalization to drop it)"
    )]
    NonNormalizable { index: usize, trace: f64, weight: f64 },

    #[error("{0}")]
    PatternViolation(#[from] PatternViolation),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

/// Support found outside the class sparsity pattern; lists the offending
/// entries so hand-built states can be debugged.
#[derive(Debug, Error)]
pub struct PatternViolation {
    pub entries: Vec<PatternEntry>,
}

impl std::fmt::Display for PatternViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let first = &self.entries[0];
        write!(
            f,
            "{} entr{} outside the pdit block pattern; first at flat ({}, {}) = \
             key bra ({}, {}), key ket ({}, {}), shield ({:?} -> {:?}), value {:.3e}{:+.3e}i",
            self.entries.len(),
            if self.entries.len() == 1 { "y" } else { "ies" },
            first.row,
            first.col,
            first.key_bra.0,
            first.key_bra.1,
            first.key_ket.0,
            first.key_ket.1,
            first.shield.0,
            first.shield.1,
            first.value.re,
            first.value.im,
        )
    }
}
