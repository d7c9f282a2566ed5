//! Shared fixtures for the criterion benches.

use num_bigint::BigInt;

use corkcalc_core::exactlin::IntMatrix;

/// Deterministic pseudo-random integer matrix (no RNG dependency in the lib,
/// a simple linear congruence is plenty for bench fixtures).
pub fn dense_matrix(n: usize, seed: u64, span: i64) -> IntMatrix {
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let v = (state >> 33) as i64 % (2 * span + 1) - span;
            m.set(i, j, BigInt::from(v));
        }
    }
    m
}

pub fn symmetric_matrix(n: usize, seed: u64, span: i64) -> IntMatrix {
    let base = dense_matrix(n, seed, span);
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            m.set(i, j, base.at(i, j).clone());
            m.set(j, i, base.at(i, j).clone());
        }
    }
    m
}
