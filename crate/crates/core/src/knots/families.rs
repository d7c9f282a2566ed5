use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{KnotError, LaurentPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KnotFamily {
    /// `T(2, 2k+1)` torus knots.
    Torus2q,
    /// Twist knots with `k` full twists (k = 1 is the figure eight).
    Twist,
}

/// Alexander polynomial of `T(2, 2k+1)`: the alternating sum
/// `sum_{j=-k..k} (-1)^(k-j) t^j`, with `2k+1` nonzero terms.
pub fn torus_2q(k: i64) -> Result<LaurentPoly, KnotError> {
    if k < 1 {
        return Err(KnotError::BadFamilyParameter(k));
    }
    Ok(LaurentPoly::from_pairs((-k..=k).map(|j| {
        let sign = if (k - j).rem_euclid(2) == 0 { 1 } else { -1 };
        (j, BigInt::from(sign))
    })))
}

/// Alexander polynomial of the k-twist knot, as the symmetric representative
/// with value 1 at t = 1: `-k t + (2k+1) - k t^-1`.
pub fn twist(k: i64) -> Result<LaurentPoly, KnotError> {
    if k < 1 {
        return Err(KnotError::BadFamilyParameter(k));
    }
    Ok(LaurentPoly::from_pairs([
        (1, BigInt::from(-k)),
        (0, BigInt::from(2 * k + 1)),
        (-1, BigInt::from(-k)),
    ]))
}

pub fn alexander_family(kind: KnotFamily, k: i64) -> Result<LaurentPoly, KnotError> {
    match kind {
        KnotFamily::Torus2q => torus_2q(k),
        KnotFamily::Twist => twist(k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn trefoil_is_smallest_torus_knot() {
        assert_eq!(torus_2q(1).unwrap(), LaurentPoly::from_i64_pairs(&[(1, 1), (0, -1), (-1, 1)]));
    }

    #[test]
    fn figure_eight_is_smallest_twist_knot() {
        assert_eq!(twist(1).unwrap(), LaurentPoly::from_i64_pairs(&[(1, -1), (0, 3), (-1, -1)]));
    }

    #[test]
    fn support_sizes_and_distinctness() {
        let polys: Vec<_> = (1..=5).map(|k| torus_2q(k).unwrap()).collect();
        for (i, p) in polys.iter().enumerate() {
            assert_eq!(p.support_size(), 2 * (i + 1) + 1);
        }
        for i in 0..polys.len() {
            for j in 0..i {
                assert_ne!(polys[i], polys[j]);
            }
        }
    }

    #[test]
    fn families_are_symmetric_and_unit_at_one() {
        for k in 1..=10 {
            for p in [torus_2q(k).unwrap(), twist(k).unwrap()] {
                assert!(p.is_symmetric(), "asymmetric at k={k}");
                assert!(p.evaluate_at_one().is_one(), "value != 1 at k={k}");
            }
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert_eq!(torus_2q(0).unwrap_err(), KnotError::BadFamilyParameter(0));
        assert_eq!(twist(-2).unwrap_err(), KnotError::BadFamilyParameter(-2));
    }
}
