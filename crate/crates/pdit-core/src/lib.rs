//! Dense complex linear algebra and verification tools for a class of
//! four-partite private states (pdits).
//!
//! A pdit lives on key systems `A`, `B` (dimension `d_k` each) and shield
//! systems `A'`, `B'` (dimension `d_s` each). States in the class treated
//! here are sums of components supported on orthogonal key subspaces: one
//! "maximally entangled form" component built from a `d_k x d_k` grid of
//! shield operators, plus one component per key pair `i < j` built from a
//! `2 x 2` grid. This crate provides:
//!
//! - [`linalg`]: tensor products, subsystem-aware partial transpose,
//!   Hermitian spectra, singular values, trace norm and trace distance;
//! - [`model`]: assembly of the state class from shield blocks, block
//!   extraction, and blockwise positivity / PPT tests;
//! - [`catalog`]: the named example families (swap pbit, flower state,
//!   bound-entangled key state, X-form, XY-form, `lemma2`) and the
//!   flat-spectrum operator pair `X`, `Y`;
//! - [`analysis`]: closed-form distances, the eigenvalue constraint
//!   system, the separability lower bound, the epsilon scan, and
//!   spectral check reports;
//! - [`io`]: the JSON matrix / block-family file formats and the CSV
//!   scan schema used by the CLI;
//! - [`random`]: seeded random unitaries, PSD operators and block
//!   families for property tests.

pub mod analysis;
pub mod catalog;
pub mod error;
pub mod io;
pub mod linalg;
pub mod model;
pub mod random;

pub use error::PditError;
pub use linalg::{Operator, SystemShape, DEFAULT_TOL};
pub use model::{BlockFamily, BlockGrid, PairIndex, PditState};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, PditError>;
