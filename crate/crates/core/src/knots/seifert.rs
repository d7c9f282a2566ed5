use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{KnotError, LaurentPoly};
use crate::exactlin::IntMatrix;

/// Seifert matrix of a knot: a square integer matrix `V` whose symplectic
/// pairing `V - V^T` is unimodular. The 0x0 matrix is the unknot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    matrix: IntMatrix,
}

impl SeifertMatrix {
    pub fn new(matrix: IntMatrix) -> Result<Self, KnotError> {
        if !matrix.is_square() {
            return Err(KnotError::NonSquareSeifert { rows: matrix.rows(), cols: matrix.cols() });
        }
        let mut pairing = matrix.clone();
        let t = matrix.transpose();
        for i in 0..matrix.rows() {
            for j in 0..matrix.cols() {
                pairing.set(i, j, matrix.at(i, j) - t.at(i, j));
            }
        }
        // an odd-size skew form has determinant 0, so odd sizes fail here too
        let det = pairing.determinant().expect("square by construction");
        if !det.clone().abs().is_one() {
            return Err(KnotError::PairingNotUnimodular { det: det.to_string() });
        }
        Ok(SeifertMatrix { matrix })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, KnotError> {
        Self::new(IntMatrix::from_i64_rows(rows))
    }

    pub fn size(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }
}

/// Alexander polynomial `det(V - t V^T)`, symmetrized and normalized so that
/// `P(t) = P(1/t)` and `P(1) = 1`.
pub fn alexander_from_seifert(v: &SeifertMatrix) -> LaurentPoly {
    let n = v.size();
    if n == 0 {
        return LaurentPoly::one();
    }
    let t = LaurentPoly::monomial(1, BigInt::one());
    let entries: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let a = LaurentPoly::monomial(0, v.matrix.at(i, j).clone());
                    let b = &t * &LaurentPoly::monomial(0, v.matrix.at(j, i).clone());
                    &a - &b
                })
                .collect()
        })
        .collect();
    let raw = poly_determinant(&entries);
    // det(V - V^T) = ±1 guarantees the normalization below cannot fail
    raw.normalize_symmetric().expect("pairing unimodular, so the determinant normalizes")
}

/// Determinant of a matrix of polynomials by subset dynamic programming
/// (no division, exponential in n but n is twice the genus, so tiny).
fn poly_determinant(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    assert!(n <= 24, "Seifert matrix too large for subset expansion");
    // d[mask] = determinant of the submatrix on rows in `mask` and the first
    // popcount(mask) columns
    let mut d = vec![LaurentPoly::zero(); 1 << n];
    d[0] = LaurentPoly::one();
    for mask in 1usize..(1 << n) {
        let col = mask.count_ones() as usize - 1;
        let mut acc = LaurentPoly::zero();
        let mut sign_flips = 0usize;
        for i in 0..n {
            if mask & (1 << i) == 0 {
                continue;
            }
            let entry = &m[i][col];
            if !entry.is_zero() {
                let sub = &d[mask & !(1 << i)];
                let term = entry * sub;
                acc = if sign_flips.is_multiple_of(2) { &acc + &term } else { &acc - &term };
            }
            sign_flips += 1;
        }
        d[mask] = acc;
    }
    d[(1 << n) - 1].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots::families::{torus_2q, twist};

    #[test]
    fn unknot_is_one() {
        let v = SeifertMatrix::new(IntMatrix::zeros(0, 0)).unwrap();
        assert_eq!(alexander_from_seifert(&v), LaurentPoly::one());
    }

    #[test]
    fn trefoil_from_seifert() {
        // det(V - tV^T) for [[-1,1],[0,-1]] is t^2 - t + 1, centered t - 1 + t^-1
        let v = SeifertMatrix::from_i64_rows(&[&[-1, 1], &[0, -1]]).unwrap();
        let delta = alexander_from_seifert(&v);
        assert_eq!(delta, LaurentPoly::from_i64_pairs(&[(1, 1), (0, -1), (-1, 1)]));
        assert_eq!(delta, torus_2q(1).unwrap());
    }

    #[test]
    fn figure_eight_from_seifert() {
        // det oracle: [[1,1],[0,-1]] gives -t^2 + 3t - 1, centered -t + 3 - t^-1
        let v = SeifertMatrix::from_i64_rows(&[&[1, 1], &[0, -1]]).unwrap();
        let delta = alexander_from_seifert(&v);
        assert_eq!(delta, LaurentPoly::from_i64_pairs(&[(1, -1), (0, 3), (-1, -1)]));
        assert_eq!(delta, twist(1).unwrap());
    }

    #[test]
    fn twist_family_seifert_fixture() {
        // [[-1,1],[0,1]] is the genus-one twist-knot form with one full twist
        let v = SeifertMatrix::from_i64_rows(&[&[-1, 1], &[0, 1]]).unwrap();
        assert_eq!(alexander_from_seifert(&v), twist(1).unwrap());
    }

    #[test]
    fn rejects_bad_pairing() {
        assert!(matches!(
            SeifertMatrix::from_i64_rows(&[&[1]]),
            Err(KnotError::PairingNotUnimodular { .. })
        ));
        assert!(matches!(
            SeifertMatrix::from_i64_rows(&[&[1, 0], &[0, 1]]),
            Err(KnotError::PairingNotUnimodular { .. })
        ));
        assert!(matches!(
            SeifertMatrix::new(IntMatrix::zeros(2, 3)),
            Err(KnotError::NonSquareSeifert { .. })
        ));
    }

    #[test]
    fn torus_knots_from_genus_k_seifert_matrices() {
        // band form of T(2, 2k+1): -1 on the diagonal, 1 on the first
        // superdiagonal of the upper triangle
        for k in 1..=4usize {
            let n = 2 * k;
            let mut m = IntMatrix::zeros(n, n);
            for i in 0..n {
                m.set(i, i, BigInt::from(-1));
                if i + 1 < n {
                    m.set(i, i + 1, BigInt::one());
                }
            }
            let v = SeifertMatrix::new(m).unwrap();
            assert_eq!(alexander_from_seifert(&v), torus_2q(k as i64).unwrap());
        }
    }
}
