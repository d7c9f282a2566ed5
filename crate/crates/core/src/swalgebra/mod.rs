//! Formal Seiberg-Witten basic-class bookkeeping.
//!
//! Basic classes of the elliptic family live on the lattice spanned by the
//! fiber direction `PD(T)` and the exceptional directions `E_1 … E_m`; a
//! class is `k·PD(T) ± E_1 ± … ± E_m` together with an integer invariant
//! value. The operations here are the transfer rules the record layer
//! composes: the family sets themselves, the blow-up doubling, the
//! knot-surgery product rule, and the rational-blowdown lift filter and
//! transfer. No gauge theory: the rules are formal and exact.
//!
//! Two parity conventions for the fiber coefficient are carried side by side.
//! Under `paper` the coefficient is even for every `n`; under `standard` it
//! has the parity of `n`, which is what the product rule produces. The two
//! agree exactly when `n` is even, and every consumer is expected to surface
//! the convention whenever an odd `n` is involved.

mod elliptic;
mod rbd;

pub use elliptic::{beta_elliptic, blowup_formula, knot_surgery_beta};
pub use rbd::{rbd_lift_filter, rbd_transfer, EmbeddingProfile, LiftPartition, ProfileRow};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::exactlin::bigint_string;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SwError {
    #[error("elliptic family needs n >= 2, got {0}")]
    BadFiberSum(i64),
    #[error("blow-up count {0} out of supported range")]
    BadBlowupCount(i64),
    #[error("Alexander polynomial must be symmetric with value 1 at t = 1: {0}")]
    UnnormalizedAlexander(String),
    #[error("d-degree is not integral: K^2 - 2e - 3sigma = {0} is not divisible by 4")]
    NonIntegralDegree(i64),
    #[error("profile has {profile} exceptional columns, class set has {set}")]
    ProfileDimensionMismatch { profile: usize, set: usize },
    #[error("profile does not single out one consumed exceptional direction")]
    AmbiguousConsumedDirection,
    #[error("{failed} of {total} classes are not lifts (first failure: {first})")]
    LiftFilterFailed { failed: usize, total: usize, first: String },
    #[error("transfer produced colliding restrictions: {0}")]
    RestrictionCollision(String),
    #[error("class set is inconsistent: {0}")]
    InconsistentSet(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParityConvention {
    /// Fiber coefficient even for every n.
    #[default]
    Paper,
    /// Fiber coefficient congruent to n mod 2 (the product-rule parity).
    Standard,
}

impl fmt::Display for ParityConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParityConvention::Paper => write!(f, "paper"),
            ParityConvention::Standard => write!(f, "standard"),
        }
    }
}

impl std::str::FromStr for ParityConvention {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper" => Ok(ParityConvention::Paper),
            "standard" => Ok(ParityConvention::Standard),
            other => Err(format!("unknown parity convention {other:?} (use paper|standard)")),
        }
    }
}

/// Euler characteristic and signature of the ambient manifold a class set
/// lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ambient {
    pub e: i64,
    pub sigma: i64,
}

/// Record of one rational blowdown a class has been carried through: the
/// consumed exceptional direction is replaced by this opaque tag. The sign is
/// the coefficient the class had on the consumed direction; together with `p`
/// it pins the restriction, which is what keeps transferred classes distinct.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TransferTag {
    pub p: i64,
    pub epsilon: i8,
}

impl fmt::Display for TransferTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rbd(p={},{}{})",
            self.p,
            if self.epsilon >= 0 { "+" } else { "-" },
            self.epsilon.abs()
        )
    }
}

/// Lattice vector `t·PD(T) + Σ e_i·E_i` plus the opaque tags of past
/// blowdowns.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasicClassVector {
    #[serde(rename = "t")]
    pub t_coeff: i64,
    #[serde(rename = "k_e")]
    pub e_coeffs: Vec<i64>,
    #[serde(rename = "tag", default, skip_serializing_if = "Vec::is_empty")]
    pub tags: Vec<TransferTag>,
}

impl BasicClassVector {
    pub fn fiber(t_coeff: i64) -> Self {
        BasicClassVector { t_coeff, e_coeffs: Vec::new(), tags: Vec::new() }
    }

    pub fn new(t_coeff: i64, e_coeffs: Vec<i64>) -> Self {
        BasicClassVector { t_coeff, e_coeffs, tags: Vec::new() }
    }

    /// Self-intersection: the fiber direction is null, each exceptional
    /// coordinate contributes -e_i^2, and each blowdown a class was carried
    /// through raised the square by p-1 while removing one -1 contribution.
    pub fn square(&self) -> i64 {
        let e_part: i64 = self.e_coeffs.iter().map(|c| -(c * c)).sum();
        let tag_part: i64 = self.tags.iter().map(|t| t.p - 2).sum();
        e_part + tag_part
    }

    /// Characteristic parity on the modeled directions: odd pairing against
    /// every exceptional class (the fiber pairing is even for free, since the
    /// fiber is null).
    pub fn is_characteristic(&self) -> bool {
        self.e_coeffs.iter().all(|c| c.rem_euclid(2) == 1)
    }
}

impl fmt::Display for BasicClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}T", self.t_coeff)?;
        for (i, c) in self.e_coeffs.iter().enumerate() {
            write!(f, "{}{}E{}", if *c >= 0 { "+" } else { "-" }, c.abs(), i + 1)?;
        }
        for t in &self.tags {
            write!(f, "[{t}]")?;
        }
        Ok(())
    }
}

/// A basic class with its integer invariant value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicClass {
    #[serde(flatten)]
    pub vector: BasicClassVector,
    #[serde(with = "bigint_string")]
    pub value: BigInt,
}

/// The set of basic classes of one manifold, kept canonically sorted with no
/// duplicate vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicClassSet {
    pub ambient: Ambient,
    classes: Vec<BasicClass>,
}

impl BasicClassSet {
    pub fn new(ambient: Ambient, mut classes: Vec<BasicClass>) -> Result<Self, SwError> {
        classes.sort_by(|a, b| a.vector.cmp(&b.vector));
        for w in classes.windows(2) {
            if w[0].vector == w[1].vector {
                return Err(SwError::InconsistentSet(format!(
                    "duplicate class vector {}",
                    w[0].vector
                )));
            }
        }
        if let Some(first) = classes.first() {
            let dim = first.vector.e_coeffs.len();
            if classes.iter().any(|c| c.vector.e_coeffs.len() != dim) {
                return Err(SwError::InconsistentSet(
                    "classes with mixed exceptional dimensions".into(),
                ));
            }
        }
        Ok(BasicClassSet { ambient, classes })
    }

    pub fn classes(&self) -> &[BasicClass] {
        &self.classes
    }

    pub fn count(&self) -> usize {
        self.classes.len()
    }

    /// Number of exceptional coordinates (None for the empty set).
    pub fn e_dim(&self) -> Option<usize> {
        self.classes.first().map(|c| c.vector.e_coeffs.len())
    }

    /// d-degree of every class; all zero is the simple-type condition the
    /// elliptic family satisfies.
    pub fn degrees(&self) -> Result<Vec<i64>, SwError> {
        self.classes.iter().map(|c| d_degree(&c.vector, self.ambient)).collect()
    }
}

/// The even integer `(K^2 - 2e - 3σ)/4`; an error signals a vector that is
/// not characteristic for the stated ambient invariants.
pub fn d_degree(class: &BasicClassVector, ambient: Ambient) -> Result<i64, SwError> {
    let num = class.square() - 2 * ambient.e - 3 * ambient.sigma;
    if num.rem_euclid(4) != 0 {
        return Err(SwError::NonIntegralDegree(num));
    }
    Ok(num / 4)
}

/// Verdict of comparing two basic-class sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SwComparison {
    Equal,
    DistinctByCount,
    DistinctByValues,
}

impl fmt::Display for SwComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SwComparison::Equal => write!(f, "equal"),
            SwComparison::DistinctByCount => write!(f, "distinct_by_count"),
            SwComparison::DistinctByValues => write!(f, "distinct_by_values"),
        }
    }
}

/// Compare two class sets as invariants: cardinality first, then the sorted
/// `(vector, value)` lists after identical-ambient alignment. Opaque tags
/// compare by their `(p, sign)` content, so sets that differ only in which
/// coordinate a blowdown consumed are indistinguishable, as they should be.
pub fn sw_compare(a: &BasicClassSet, b: &BasicClassSet) -> SwComparison {
    if a.count() != b.count() {
        return SwComparison::DistinctByCount;
    }
    if a.ambient != b.ambient {
        return SwComparison::DistinctByValues;
    }
    if a.classes == b.classes {
        SwComparison::Equal
    } else {
        SwComparison::DistinctByValues
    }
}
