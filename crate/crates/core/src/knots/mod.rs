//! Alexander polynomials as symmetric integer Laurent polynomials.
//!
//! Knots enter as data (a Seifert matrix or a family parameter), never as
//! diagrams. Every Alexander polynomial produced here is normalized to the
//! symmetric representative with value 1 at t = 1, which is the form the
//! knot-surgery product rule consumes.

mod families;
mod poly;
mod seifert;

pub use families::{alexander_family, torus_2q, twist, KnotFamily};
pub use poly::LaurentPoly;
pub use seifert::{alexander_from_seifert, SeifertMatrix};

/// Errors for polynomial and Seifert-matrix handling.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum KnotError {
    #[error("family parameter must satisfy k >= 1, got {0}")]
    BadFamilyParameter(i64),
    #[error("Seifert matrix must be square, got {rows}x{cols}")]
    NonSquareSeifert { rows: usize, cols: usize },
    #[error("V - V^T must be unimodular, got determinant {det}")]
    PairingNotUnimodular { det: String },
    #[error("polynomial is not symmetrizable: {0}")]
    NotSymmetrizable(String),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}
