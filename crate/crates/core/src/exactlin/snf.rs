use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Smith normal form `U * M * V = D` with unimodular `U`, `V`.
///
/// `diagonal` holds the full main diagonal of `D` (length `min(rows, cols)`,
/// zeros trailing), in a divisibility chain `d_1 | d_2 | …` of nonnegative
/// integers. `rank` counts the nonzero entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SnfResult {
    /// The diagonal embedded back into a `rows x cols` matrix.
    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> IntMatrix {
        let mut d = IntMatrix::zeros(rows, cols);
        for (i, v) in self.diagonal.iter().enumerate() {
            d.set(i, i, v.clone());
        }
        d
    }
}

/// Quotient minimizing the remainder, so repeated reduction is a gcd step.
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = a.div_rem(b);
    if r.abs() * 2 > b.abs() {
        if r.sign() == b.sign() {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

/// Pivot with the smallest nonzero absolute value in `a[t.., t..]`,
/// ties broken by row-major position. Deterministic on purpose.
fn select_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let v = a.at(i, j);
            if v.is_zero() {
                continue;
            }
            let abs = v.abs();
            match &best {
                Some((b, _, _)) if *b <= abs => {}
                _ => best = Some((abs, i, j)),
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Smith normal form over the integers. Total on all integer matrices,
/// including the 0x0 one.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let rows = m.rows();
    let cols = m.cols();
    let dim = rows.min(cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let mut t = 0;
    while t < dim {
        let Some((pi, pj)) = select_pivot(&a, t) else { break };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        'reduce: loop {
            // clear column t below the pivot (Euclid on the way down)
            let mut i = t + 1;
            while i < rows {
                if a.at(i, t).is_zero() {
                    i += 1;
                    continue;
                }
                let q = -div_nearest(a.at(i, t), a.at(t, t));
                if !q.is_zero() {
                    a.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                }
                if !a.at(i, t).is_zero() {
                    // remainder became the smaller pivot
                    a.swap_rows(t, i);
                    u.swap_rows(t, i);
                }
            }
            // clear row t right of the pivot
            let mut j = t + 1;
            let mut row_swapped_column_dirty = false;
            while j < cols {
                if a.at(t, j).is_zero() {
                    j += 1;
                    continue;
                }
                let q = -div_nearest(a.at(t, j), a.at(t, t));
                if !q.is_zero() {
                    a.add_col_multiple(j, t, &q);
                    v.add_col_multiple(j, t, &q);
                }
                if !a.at(t, j).is_zero() {
                    a.swap_cols(t, j);
                    v.swap_cols(t, j);
                    // the incoming column may have nonzero entries below row t
                    row_swapped_column_dirty = true;
                }
            }
            if row_swapped_column_dirty || (t + 1..rows).any(|i| !a.at(i, t).is_zero()) {
                continue 'reduce;
            }
            break;
        }

        // pivot must divide the remaining submatrix before we move on
        let offending = (t + 1..rows)
            .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
            .find(|&(i, j)| !(a.at(i, j) % a.at(t, t)).is_zero());
        if let Some((i, _)) = offending {
            let one = BigInt::from(1);
            a.add_row_multiple(t, i, &one);
            u.add_row_multiple(t, i, &one);
            continue;
        }
        t += 1;
    }

    for i in 0..dim {
        if a.at(i, i).is_negative() {
            a.negate_row(i);
            u.negate_row(i);
        }
    }

    let diagonal: Vec<BigInt> = (0..dim).map(|i| a.at(i, i).clone()).collect();
    let rank = diagonal.iter().filter(|d| !d.is_zero()).count();
    debug_assert!(diagonal.windows(2).all(|w| w[1].is_zero() || (&w[1] % &w[0]).is_zero()));
    SnfResult { diagonal, rank, left: u, right: v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn check_reconstruction(m: &IntMatrix) {
        let snf = smith_normal_form(m);
        let umv = snf.left.mul(m).mul(&snf.right);
        assert_eq!(umv, snf.diagonal_matrix(m.rows(), m.cols()), "U*M*V != D for {m:?}");
        for w in snf.diagonal.windows(2) {
            assert!(
                w[1].is_zero() || (&w[1] % &w[0]).is_zero(),
                "chain broken: {:?}",
                snf.diagonal
            );
        }
        for d in &snf.diagonal {
            assert!(!d.is_negative());
        }
        let du = snf.left.determinant().unwrap();
        let dv = snf.right.determinant().unwrap();
        assert!(du.clone().abs().is_one(), "U not unimodular: det {du}");
        assert!(dv.clone().abs().is_one(), "V not unimodular: det {dv}");
    }

    #[test]
    fn identity_and_empty() {
        let snf = smith_normal_form(&IntMatrix::identity(2));
        assert_eq!(snf.diagonal, vec![BigInt::one(), BigInt::one()]);
        assert_eq!(snf.rank, 2);

        let snf = smith_normal_form(&IntMatrix::zeros(0, 0));
        assert!(snf.diagonal.is_empty());
        assert_eq!(snf.rank, 0);
    }

    #[test]
    fn diag_2_3_becomes_1_6() {
        // hand oracle: gcd step row/col reduction turns diag(2,3) into diag(1,6)
        let m = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diagonal, vec![BigInt::one(), BigInt::from(6)]);
        check_reconstruction(&m);
    }

    #[test]
    fn zero_and_rectangular() {
        let m = IntMatrix::zeros(2, 3);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.rank, 0);
        assert_eq!(snf.diagonal, vec![BigInt::zero(), BigInt::zero()]);
        check_reconstruction(&m);

        let m = IntMatrix::from_i64_rows(&[&[4, 6, 8]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diagonal, vec![BigInt::from(2)]);
        check_reconstruction(&m);
    }

    #[test]
    fn reconstruction_on_random_matrices() {
        let mut rng = StdRng::seed_from_u64(0xf00d);
        for _ in 0..1500 {
            let r = rng.random_range(0..=4);
            let c = rng.random_range(0..=4);
            let mut m = IntMatrix::zeros(r, c);
            for i in 0..r {
                for j in 0..c {
                    m.set(i, j, BigInt::from(rng.random_range(-6i64..=6)));
                }
            }
            check_reconstruction(&m);
        }
    }

    #[test]
    fn determinant_is_plus_minus_product_of_diagonal() {
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..800 {
            let n = rng.random_range(1..=4);
            let mut m = IntMatrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    m.set(i, j, BigInt::from(rng.random_range(-3i64..=3)));
                }
            }
            let det = m.determinant().unwrap();
            let snf = smith_normal_form(&m);
            let prod: BigInt = snf.diagonal.iter().product();
            assert_eq!(det.abs(), prod.abs());
        }
    }
}
