use num_bigint::BigInt;
use num_traits::One;

use super::{Ambient, BasicClass, BasicClassSet, BasicClassVector, ParityConvention, SwError};
use crate::knots::LaurentPoly;

/// Euler characteristic and signature of the relatively minimal elliptic
/// surface without multiple fibers, blown up m times.
fn elliptic_ambient(n: i64, m: usize) -> Ambient {
    Ambient { e: 12 * n + m as i64, sigma: -8 * n - m as i64 }
}

/// Fiber coefficients admitted by the chosen convention: |k| <= n-2 with k
/// even (`paper`) or k ≡ n mod 2 (`standard`).
fn fiber_range(n: i64, convention: ParityConvention) -> Vec<i64> {
    let bound = n - 2;
    let wanted = match convention {
        ParityConvention::Paper => 0,
        ParityConvention::Standard => n.rem_euclid(2),
    };
    (-bound..=bound).filter(|k| k.rem_euclid(2) == wanted).collect()
}

/// Basic classes of the elliptic surface with m blow-ups:
/// `k·PD(T) ± E_1 ± … ± E_m` over the convention's fiber range. Values under
/// the standard convention are the coefficients of `(t - 1/t)^(n-2)`; under
/// the paper convention the value is a placeholder 1 (only membership and
/// counts are consumed there).
pub fn beta_elliptic(
    n: i64,
    m: usize,
    convention: ParityConvention,
) -> Result<BasicClassSet, SwError> {
    if n < 2 {
        return Err(SwError::BadFiberSum(n));
    }
    if m > 16 {
        return Err(SwError::BadBlowupCount(m as i64));
    }
    let fiber_poly = fiber_factor(n);
    let mut classes = Vec::new();
    for k in fiber_range(n, convention) {
        let value = match convention {
            ParityConvention::Paper => BigInt::one(),
            ParityConvention::Standard => fiber_poly.coeff(k),
        };
        for signs in 0..(1usize << m) {
            let e_coeffs: Vec<i64> =
                (0..m).map(|i| if signs & (1 << i) == 0 { 1 } else { -1 }).collect();
            classes.push(BasicClass {
                vector: BasicClassVector::new(k, e_coeffs),
                value: value.clone(),
            });
        }
    }
    let set = BasicClassSet::new(elliptic_ambient(n, m), classes)?;
    debug_assert!(set.degrees().unwrap().iter().all(|&d| d == 0));
    Ok(set)
}

/// `(t - 1/t)^(n-2)`, the fiber-direction invariant polynomial.
fn fiber_factor(n: i64) -> LaurentPoly {
    LaurentPoly::from_i64_pairs(&[(1, 1), (-1, -1)]).pow((n - 2) as u32)
}

/// Blow-up formula: every class doubles into `K ± E_new` with unchanged
/// value; the ambient gains e += 1, σ -= 1.
pub fn blowup_formula(beta: &BasicClassSet) -> BasicClassSet {
    let ambient = Ambient { e: beta.ambient.e + 1, sigma: beta.ambient.sigma - 1 };
    let mut classes = Vec::with_capacity(2 * beta.count());
    for c in beta.classes() {
        for sign in [1i64, -1] {
            let mut v = c.vector.clone();
            v.e_coeffs.push(sign);
            classes.push(BasicClass { vector: v, value: c.value.clone() });
        }
    }
    BasicClassSet::new(ambient, classes).expect("doubling preserves distinctness")
}

/// Knot-surgery product rule: the invariant polynomial in the fiber variable
/// becomes `Δ(t^2) · (t - 1/t)^(n-2)`, one class `k·PD(T)` per nonzero
/// coefficient of `t^k`, the coefficient being its value. The ambient
/// invariants are unchanged by the surgery. `Δ` must be the symmetric
/// representative with `Δ(1) = 1`.
pub fn knot_surgery_beta(
    n: i64,
    alexander: &LaurentPoly,
    _convention: ParityConvention,
) -> Result<BasicClassSet, SwError> {
    if n < 2 {
        return Err(SwError::BadFiberSum(n));
    }
    if !alexander.is_symmetric() {
        return Err(SwError::UnnormalizedAlexander(format!("{alexander} is not symmetric")));
    }
    if !alexander.evaluate_at_one().is_one() {
        return Err(SwError::UnnormalizedAlexander(format!(
            "{alexander} has value {} at t = 1",
            alexander.evaluate_at_one()
        )));
    }
    let product = &alexander.substitute_squared() * &fiber_factor(n);
    let classes = product
        .terms()
        .map(|(k, coeff)| BasicClass { vector: BasicClassVector::fiber(k), value: coeff.clone() })
        .collect();
    BasicClassSet::new(elliptic_ambient(n, 0), classes)
}
