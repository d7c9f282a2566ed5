//! Exact integer linear algebra.
//!
//! The carrier type is [`IntMatrix`], a dense matrix of arbitrary-precision
//! integers. On top of it this module provides exact determinants (Bareiss),
//! Smith normal form with unimodular transforms, cokernels as finitely
//! generated abelian groups, and invariants of symmetric bilinear forms via
//! congruence diagonalization over the rationals.

mod form;
mod matrix;
mod snf;

pub use form::{form_invariants, Definiteness, FormInvariants, Parity};
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SnfResult};

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Errors for the exact linear algebra layer.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ExactLinError {
    #[error("operation requires a square matrix, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("operation requires a symmetric matrix")]
    NotSymmetric,
    #[error("matrix dimensions do not match: {0}")]
    DimensionMismatch(String),
}

/// A finitely generated abelian group `Z^free ⊕ Z/t_1 ⊕ … ⊕ Z/t_k`.
///
/// Torsion orders are kept in divisibility order with every entry > 1, exactly
/// as they come out of the Smith normal form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    #[serde(with = "bigint_vec_string")]
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup { free_rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { free_rank: rank, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the torsion subgroup (product of the torsion coefficients).
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product::<BigInt>().max(BigInt::one())
    }

    /// Cokernel of the map `Z^cols -> Z^rows` given by the matrix.
    pub fn cokernel(m: &IntMatrix) -> Self {
        let snf = smith_normal_form(m);
        let torsion: Vec<BigInt> =
            snf.diagonal.iter().filter(|d| **d > BigInt::one()).cloned().collect();
        AbelianGroup { free_rank: m.rows() - snf.rank, torsion }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Serialize big integers as decimal strings so values survive JSON round
/// trips regardless of magnitude.
pub(crate) mod bigint_string {
    use num_bigint::BigInt;
    use serde::{de, Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let raw = String::deserialize(d)?;
        BigInt::from_str(&raw).map_err(de::Error::custom)
    }
}

pub(crate) mod bigint_vec_string {
    use num_bigint::BigInt;
    use serde::{de, Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter().map(|s| BigInt::from_str(s).map_err(de::Error::custom)).collect()
    }
}
