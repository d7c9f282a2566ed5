//! Cross-module property tests: congruence invariance of everything a Kirby
//! move must preserve, involutions, and reconstruction identities.

use num_bigint::BigInt;
use proptest::prelude::*;

use corkcalc_core::exactlin::{form_invariants, smith_normal_form, IntMatrix};
use corkcalc_core::handlebody::{self, homology, HandlePresentation};
use corkcalc_core::knots::LaurentPoly;

fn small_matrix(max_dim: usize, span: i64) -> impl Strategy<Value = IntMatrix> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(-span..=span, r * c).prop_map(move |vals| {
            let rows: Vec<Vec<BigInt>> =
                (0..r).map(|i| (0..c).map(|j| BigInt::from(vals[i * c + j])).collect()).collect();
            if r == 0 || c == 0 {
                IntMatrix::zeros(r, c)
            } else {
                IntMatrix::from_rows(rows)
            }
        })
    })
}

fn symmetric_matrix(max_dim: usize, span: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim).prop_flat_map(move |n| {
        proptest::collection::vec(-span..=span, n * n).prop_map(move |vals| {
            let mut m = IntMatrix::zeros(n, n);
            for i in 0..n {
                for j in 0..=i {
                    let v = BigInt::from(vals[i * n + j]);
                    m.set(i, j, v.clone());
                    m.set(j, i, v);
                }
            }
            m
        })
    })
}

fn small_poly() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((-4i64..=4, -5i64..=5), 0..=8)
        .prop_map(|pairs| LaurentPoly::from_i64_pairs(&pairs))
}

/// Any of the swappable preset shapes plus a few blow-ups, with the location
/// of a valid dot/handle pair.
fn swappable_preset() -> impl Strategy<Value = (HandlePresentation, usize, usize)> {
    (1i64..=6, 0usize..=2, prop_oneof![Just(0u8), Just(1), Just(2)]).prop_map(
        |(param, blowups, shape)| {
            let (pres, dot, handle) = match shape {
                0 => (handlebody::wn(param).unwrap(), 0, 0),
                1 => {
                    let ks: Vec<i64> = (1..=param.min(3)).collect();
                    (handlebody::wfamily(&ks).unwrap(), 0, 0)
                }
                _ => (handlebody::wmn(param, 2).unwrap(), 1, 1),
            };
            let mut pres = pres;
            for _ in 0..blowups {
                pres = pres.blowup();
            }
            (pres, dot, handle)
        },
    )
}

proptest! {
    #[test]
    fn snf_reconstructs_exactly(m in small_matrix(4, 4)) {
        let snf = smith_normal_form(&m);
        let umv = snf.left.mul(&m).mul(&snf.right);
        prop_assert_eq!(umv, snf.diagonal_matrix(m.rows(), m.cols()));
        for w in snf.diagonal.windows(2) {
            prop_assert!(w[1] == BigInt::from(0) || (&w[1] % &w[0]) == BigInt::from(0));
        }
    }

    #[test]
    fn snf_diagonal_product_matches_determinant(m in symmetric_matrix(4, 3)) {
        let det = m.determinant().unwrap();
        let snf = smith_normal_form(&m);
        let prod: BigInt = snf.diagonal.iter().product();
        prop_assert_eq!(num_traits::Signed::abs(&det), prod);
    }

    #[test]
    fn signature_is_a_congruence_invariant(
        m in symmetric_matrix(4, 3),
        ops in proptest::collection::vec((0usize..4, 0usize..4, -2i64..=2), 0..6),
    ) {
        let n = m.rows();
        let mut p = IntMatrix::identity(n);
        for (i, j, c) in ops {
            if i < n && j < n && i != j {
                p.add_row_multiple(i, j, &BigInt::from(c));
            }
        }
        let congruent = p.transpose().mul(&m).mul(&p);
        let a = form_invariants(&m).unwrap();
        let b = form_invariants(&congruent).unwrap();
        prop_assert_eq!(a.signature, b.signature);
        prop_assert_eq!(a.rank, b.rank);
        prop_assert_eq!(a.parity, b.parity);
    }

    #[test]
    fn signature_matches_the_leading_minor_oracle(m in symmetric_matrix(5, 4)) {
        // Jacobi: with all leading principal minors nonzero, the negative
        // inertia index is the number of sign changes in 1, D_1, …, D_n
        let n = m.rows();
        let mut minors = vec![BigInt::from(1)];
        let mut all_nonzero = true;
        for k in 1..=n {
            let mut sub = IntMatrix::zeros(k, k);
            for i in 0..k {
                for j in 0..k {
                    sub.set(i, j, m.at(i, j).clone());
                }
            }
            let d = sub.determinant().unwrap();
            if d == BigInt::from(0) {
                all_nonzero = false;
                break;
            }
            minors.push(d);
        }
        prop_assume!(all_nonzero);
        let sign_changes = minors
            .windows(2)
            .filter(|w| (w[0] < BigInt::from(0)) != (w[1] < BigInt::from(0)))
            .count();
        let inv = form_invariants(&m).unwrap();
        prop_assert_eq!(inv.n_minus, sign_changes);
        prop_assert_eq!(inv.n_plus, n - sign_changes);
        prop_assert_eq!(inv.signature, n as i64 - 2 * sign_changes as i64);
    }

    #[test]
    fn poly_multiplication_commutes_and_associates(
        a in small_poly(), b in small_poly(), c in small_poly(),
    ) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        // evaluation at 1 is a ring map
        prop_assert_eq!((&a * &b).evaluate_at_one(), a.evaluate_at_one() * b.evaluate_at_one());
    }

    #[test]
    fn handle_slides_preserve_form_and_boundary(
        p in prop_oneof![2i64..=6],
        slides in proptest::collection::vec((0usize..5, 0usize..5, prop_oneof![Just(1i64), Just(-1)]), 1..10),
    ) {
        let start = handlebody::cp(p).unwrap();
        let before = homology(&start);
        let mut pres = start;
        for (i, j, sign) in slides {
            let n = pres.two_handles.len();
            let (i, j) = (i % n, j % n);
            if i != j {
                pres = pres.handle_slide(i, j, sign).unwrap();
            }
        }
        let after = homology(&pres);
        prop_assert_eq!(before.intersection_form, after.intersection_form);
        prop_assert_eq!(before.boundary_h1, after.boundary_h1);
        prop_assert_eq!(before.h1, after.h1);
        prop_assert_eq!(before.h2, after.h2);
        prop_assert_eq!(before.euler, after.euler);
    }

    #[test]
    fn dot_zero_swap_is_an_involution((pres, dot, handle) in swappable_preset()) {
        let once = pres.dot_zero_swap(dot, handle).unwrap();
        let twice = once.dot_zero_swap(dot, handle).unwrap();
        prop_assert_eq!(&twice, &pres);
        prop_assert_eq!(twice.normalized(), pres.normalized());
        // the swap preserves boundary homology and the Euler characteristic
        prop_assert_eq!(homology(&once).boundary_h1, homology(&pres).boundary_h1);
        prop_assert_eq!(once.euler(), pres.euler());
    }
}
