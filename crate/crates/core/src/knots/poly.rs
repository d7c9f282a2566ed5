use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::KnotError;

/// One-variable integer Laurent polynomial with finite support.
///
/// Zero coefficients are never stored, so structural equality is semantic
/// equality. The external text form is a sparse list of
/// `(exponent, coefficient)` pairs.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: i64, coeff: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        LaurentPoly { coeffs }
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, BigInt)>>(pairs: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in pairs {
            p.accumulate(e, c);
        }
        p
    }

    pub fn from_i64_pairs(pairs: &[(i64, i64)]) -> Self {
        Self::from_pairs(pairs.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    fn accumulate(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn evaluate_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn evaluate_at_minus_one(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|(e, c)| if e.rem_euclid(2) == 0 { c.clone() } else { -c.clone() })
            .sum()
    }

    /// Substitute t -> t^2 (doubles every exponent).
    pub fn substitute_squared(&self) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (2 * e, c.clone())).collect() }
    }

    /// Multiply by t^shift.
    pub fn shifted(&self, shift: i64) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (e + shift, c.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// P(t) == P(1/t)?
    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(&e, c)| self.coeff(-e) == *c)
    }

    /// The symmetric representative `±t^m * P` with value 1 at t = 1.
    ///
    /// Fails when the support cannot be centered on integer exponents, when
    /// the centered polynomial is not symmetric, or when `P(1)` is not a unit.
    pub fn normalize_symmetric(&self) -> Result<LaurentPoly, KnotError> {
        if self.is_zero() {
            return Err(KnotError::NotSymmetrizable("zero polynomial".into()));
        }
        let lo = self.min_exp().unwrap();
        let hi = self.max_exp().unwrap();
        if (lo + hi) % 2 != 0 {
            return Err(KnotError::NotSymmetrizable(format!(
                "support [{lo}, {hi}] has no integer center"
            )));
        }
        let centered = self.shifted(-(lo + hi) / 2);
        let at_one = centered.evaluate_at_one();
        if !at_one.clone().abs().is_one() {
            return Err(KnotError::NotSymmetrizable(format!("value {at_one} at t = 1 is no unit")));
        }
        let result = if at_one.is_negative() { -&centered } else { centered };
        if !result.is_symmetric() {
            return Err(KnotError::NotSymmetrizable("centered polynomial is asymmetric".into()));
        }
        Ok(result)
    }

    /// Sparse pair notation, e.g. `(-1,1),(0,-1),(1,1)`.
    pub fn to_pair_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs.iter().map(|(e, c)| format!("({e},{c})")).collect::<Vec<_>>().join(",")
    }

    pub fn parse_pairs(s: &str) -> Result<LaurentPoly, KnotError> {
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(LaurentPoly::zero());
        }
        let mut p = LaurentPoly::zero();
        for chunk in s.split("),") {
            let chunk = chunk.trim().trim_start_matches('(').trim_end_matches(')');
            let (e, c) = chunk
                .split_once(',')
                .ok_or_else(|| KnotError::Parse(format!("expected (exp,coeff), got {chunk:?}")))?;
            let exp: i64 =
                e.trim().parse().map_err(|_| KnotError::Parse(format!("bad exponent {e:?}")))?;
            let coeff = BigInt::from_str(c.trim())
                .map_err(|_| KnotError::Parse(format!("bad coefficient {c:?}")))?;
            p.accumulate(exp, coeff);
        }
        Ok(p)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.accumulate(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.accumulate(e, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in &rhs.coeffs {
                out.accumulate(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.coeffs.iter().rev() {
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let show_coeff = !mag.is_one() || e == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|(e, c)| (*e, c.to_string())))
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pairs = Vec::<(i64, String)>::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for (e, c) in pairs {
            let coeff = BigInt::from_str(&c).map_err(D::Error::custom)?;
            p.accumulate(e, coeff);
        }
        Ok(p)
    }
}
