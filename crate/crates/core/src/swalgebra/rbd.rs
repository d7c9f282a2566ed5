use serde::{Deserialize, Serialize};

use super::{Ambient, BasicClass, BasicClassSet, BasicClassVector, SwError, TransferTag};

/// How the classes of the ambient manifold pair against the plumbing chain
/// classes `u_1 … u_{p-1}` of an embedded `C_p`: row `j` (0-based, for
/// `u_{j+1}`) gives the pairing per unit fiber coefficient and per unit of
/// each exceptional coordinate. The last row is the distinguished `-p-2` end
/// of the chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingProfile {
    pub p: i64,
    pub rows: Vec<ProfileRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileRow {
    pub eval_t: i64,
    pub eval_e: Vec<i64>,
}

impl EmbeddingProfile {
    /// The profile of the standard embedding: `u_1 … u_{p-2}` pair with
    /// nothing, `u_{p-1}` pairs with the single exceptional class `E_(index)`
    /// at weight p. This is the unique shape (up to sign) under which every
    /// class of the blown-up elliptic family is a lift.
    pub fn canonical(p: i64, e_dim: usize, consumed: usize) -> Self {
        assert!(p >= 2, "profile needs p >= 2");
        assert!(consumed < e_dim, "consumed index out of range");
        let mut rows = vec![ProfileRow { eval_t: 0, eval_e: vec![0; e_dim] }; (p - 1) as usize];
        rows.last_mut().unwrap().eval_e[consumed] = p;
        EmbeddingProfile { p, rows }
    }

    pub fn e_dim(&self) -> usize {
        self.rows.first().map_or(0, |r| r.eval_e.len())
    }

    /// The exceptional direction the blowdown consumes: the unique nonzero
    /// column of the distinguished row (whose fiber weight must vanish).
    pub fn consumed_index(&self) -> Result<usize, SwError> {
        let last = self.rows.last().ok_or(SwError::AmbiguousConsumedDirection)?;
        if last.eval_t != 0 {
            return Err(SwError::AmbiguousConsumedDirection);
        }
        let nonzero: Vec<usize> = (0..last.eval_e.len()).filter(|&i| last.eval_e[i] != 0).collect();
        match nonzero.as_slice() {
            [i] => Ok(*i),
            _ => Err(SwError::AmbiguousConsumedDirection),
        }
    }

    fn evaluate(&self, class: &BasicClassVector, row: usize) -> i64 {
        let r = &self.rows[row];
        class.t_coeff * r.eval_t
            + class.e_coeffs.iter().zip(&r.eval_e).map(|(c, w)| c * w).sum::<i64>()
    }
}

/// Lift condition for a class: pairing 0 against `u_1 … u_{p-2}` and ±p
/// against `u_{p-1}`.
fn is_lift(profile: &EmbeddingProfile, class: &BasicClassVector) -> Result<bool, String> {
    let p = profile.p;
    for j in 0..profile.rows.len() {
        let v = profile.evaluate(class, j);
        let last = j + 1 == profile.rows.len();
        if last {
            if v.abs() != p {
                return Err(format!("{class} pairs {v} with u_{}, need ±{p}", j + 1));
            }
        } else if v != 0 {
            return Err(format!("{class} pairs {v} with u_{}, need 0", j + 1));
        }
    }
    Ok(true)
}

/// Passing classes, and failing classes with the reason each one fails.
pub type LiftPartition = (Vec<BasicClass>, Vec<(BasicClass, String)>);

/// Partition of a class set by the lift condition; the failure side carries
/// the reason per class.
pub fn rbd_lift_filter(
    beta: &BasicClassSet,
    profile: &EmbeddingProfile,
) -> Result<LiftPartition, SwError> {
    let set_dim = beta.e_dim().unwrap_or(profile.e_dim());
    if profile.e_dim() != set_dim {
        return Err(SwError::ProfileDimensionMismatch { profile: profile.e_dim(), set: set_dim });
    }
    let mut pass = Vec::new();
    let mut fail = Vec::new();
    for c in beta.classes() {
        match is_lift(profile, &c.vector) {
            Ok(_) => pass.push(c.clone()),
            Err(reason) => fail.push((c.clone(), reason)),
        }
    }
    Ok((pass, fail))
}

/// Carry a class set through a rational blowdown. Every class must pass the
/// lift filter (the count arguments break otherwise, so a failure is an
/// error, not a silent drop). Passing classes keep their values and their
/// d-degrees; the consumed exceptional coordinate is replaced by an opaque
/// tag recording `(p, sign)`, and the ambient loses p-1 from e while gaining
/// p-1 on σ. Distinct classes must stay distinct after restriction.
pub fn rbd_transfer(
    beta: &BasicClassSet,
    profile: &EmbeddingProfile,
) -> Result<BasicClassSet, SwError> {
    let (pass, fail) = rbd_lift_filter(beta, profile)?;
    if !fail.is_empty() {
        return Err(SwError::LiftFilterFailed {
            failed: fail.len(),
            total: beta.count(),
            first: fail[0].1.clone(),
        });
    }
    let consumed = profile.consumed_index()?;
    let p = profile.p;
    let ambient = Ambient { e: beta.ambient.e - (p - 1), sigma: beta.ambient.sigma + (p - 1) };
    let mut classes = Vec::with_capacity(pass.len());
    for c in pass {
        let mut v = c.vector.clone();
        let eps = v.e_coeffs.remove(consumed);
        v.tags.push(TransferTag { p, epsilon: eps.signum() as i8 });
        classes.push(BasicClass { vector: v, value: c.value });
    }
    let expected = classes.len();
    let set = BasicClassSet::new(ambient, classes).map_err(|e| match e {
        SwError::InconsistentSet(msg) => SwError::RestrictionCollision(msg),
        other => other,
    })?;
    debug_assert_eq!(set.count(), expected);
    Ok(set)
}
