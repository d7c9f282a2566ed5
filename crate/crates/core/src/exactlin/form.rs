use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{ExactLinError, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Definiteness {
    Positive,
    Negative,
    Indefinite,
    Degenerate,
}

/// Invariants of an integral symmetric bilinear form.
///
/// `rank` is the rank of the form (positive plus negative inertia indices);
/// for a degenerate form the signature refers to the nondegenerate part. An
/// empty form counts as (vacuously) positive definite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormInvariants {
    pub rank: usize,
    pub signature: i64,
    pub parity: Parity,
    pub definiteness: Definiteness,
    pub n_plus: usize,
    pub n_minus: usize,
}

/// Signature, parity and definiteness of a symmetric integer matrix, by
/// congruence diagonalization with exact rational pivots. A zero pivot with a
/// nonzero off-diagonal entry is repaired by the usual 2x2 block move (add the
/// partner row and column), so no eigenvalue computation is ever needed.
pub fn form_invariants(m: &IntMatrix) -> Result<FormInvariants, ExactLinError> {
    if !m.is_square() {
        return Err(ExactLinError::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    if !m.is_symmetric() {
        return Err(ExactLinError::NotSymmetric);
    }
    let n = m.rows();

    // Q(x,x) = sum x_i^2 m_ii + 2 sum_{i<j} x_i x_j m_ij, so evenness is
    // exactly evenness of the diagonal.
    let parity = if (0..n).all(|i| m.at(i, i).is_even()) { Parity::Even } else { Parity::Odd };

    let mut a: Vec<Vec<BigRational>> =
        (0..n).map(|i| (0..n).map(|j| BigRational::from(m.at(i, j).clone())).collect()).collect();

    let (mut n_plus, mut n_minus, mut n_zero) = (0usize, 0usize, 0usize);
    for t in 0..n {
        if a[t][t].is_zero() {
            if let Some(j) = (t + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(t, j);
                for row in a.iter_mut() {
                    row.swap(t, j);
                }
            } else if let Some(j) = (t + 1..n).find(|&j| !a[t][j].is_zero()) {
                // all later diagonal entries vanish, so this lands 2*a[t][j]
                // on the pivot
                let row_j = a[j].clone();
                for (cell, src) in a[t].iter_mut().zip(&row_j) {
                    *cell = &*cell + src;
                }
                for row in a.iter_mut() {
                    let v = &row[t] + &row[j];
                    row[t] = v;
                }
            } else {
                // radical direction
                n_zero += 1;
                continue;
            }
        }
        let pivot = a[t][t].clone();
        if pivot.is_positive() {
            n_plus += 1;
        } else {
            n_minus += 1;
        }
        // clear below and right of the pivot as one congruence L A L^T:
        // all row operations first (row t is untouched by them), then the
        // matching column operations
        let ratios: Vec<(usize, BigRational)> =
            (t + 1..n).filter(|&i| !a[i][t].is_zero()).map(|i| (i, &a[i][t] / &pivot)).collect();
        let row_t = a[t].clone();
        for (i, r) in &ratios {
            for (cell, src) in a[*i].iter_mut().zip(&row_t) {
                *cell = &*cell - r * src;
            }
        }
        for (i, r) in &ratios {
            for row in a.iter_mut() {
                let v = &row[*i] - r * &row[t];
                row[*i] = v;
            }
        }
    }

    let definiteness = if n_zero > 0 {
        Definiteness::Degenerate
    } else if n_plus > 0 && n_minus > 0 {
        Definiteness::Indefinite
    } else if n_minus > 0 {
        Definiteness::Negative
    } else {
        Definiteness::Positive
    };

    Ok(FormInvariants {
        rank: n_plus + n_minus,
        signature: n_plus as i64 - n_minus as i64,
        parity,
        definiteness,
        n_plus,
        n_minus,
    })
}
