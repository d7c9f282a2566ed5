use serde::{Deserialize, Serialize};

use super::RecordError;
use crate::exactlin::Parity;
use crate::swalgebra::{
    beta_elliptic, blowup_formula, BasicClassSet, EmbeddingProfile, ParityConvention,
};

/// Formal Seiberg-Witten state of a record: a concrete basic-class set, a
/// certified vanishing, or no information.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "state", content = "beta", rename_all = "lowercase")]
pub enum SwState {
    Zero,
    Unknown,
    Set(BasicClassSet),
}

impl SwState {
    /// Number of basic classes, when known.
    pub fn count(&self) -> Option<u64> {
        match self {
            SwState::Zero => Some(0),
            SwState::Unknown => None,
            SwState::Set(beta) => Some(beta.count() as u64),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, SwState::Zero)
    }
}

/// What an embedded piece is, at the level the record layer needs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PieceKind {
    CorkWn { n: i64 },
    CorkFamily { ks: Vec<i64>, involution: usize },
    PlugWmn { m: i64, n: i64 },
    PlugFamily { ks: Vec<i64>, involution: usize },
    RbdCp { p: i64 },
    RbdDp { p: i64 },
}

impl PieceKind {
    pub fn is_cork(&self) -> bool {
        matches!(self, PieceKind::CorkWn { .. } | PieceKind::CorkFamily { .. })
    }

    pub fn is_plug(&self) -> bool {
        matches!(self, PieceKind::PlugWmn { .. } | PieceKind::PlugFamily { .. })
    }

    pub fn blowdown_order(&self) -> Option<i64> {
        match self {
            PieceKind::RbdCp { p } | PieceKind::RbdDp { p } => Some(*p),
            _ => None,
        }
    }
}

/// The state on the far side of a boundary twist: the Seiberg-Witten state
/// and split marker the record acquires when the piece is cut out and
/// reglued by its involution. Twisting swaps this data with the record's
/// current state, which is what makes the operation an involution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistPartner {
    pub sw: SwState,
    pub s2xs2: bool,
}

/// An embedded piece a record knows about, with the data its operations
/// need: a pairing profile for rational blowdown pieces, twist data for cork
/// and plug pieces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddedPiece {
    pub id: String,
    #[serde(flatten)]
    pub kind: PieceKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<EmbeddingProfile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<TwistPartner>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

/// Structural markers carried alongside the numerical invariants.
///
/// `cp2_summands` / `cp2bar_summands` count tracked projective summands;
/// `core_odd` is the parity of the record with all tracked summands removed,
/// when known; it is what licenses the stabilization rewrite.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Markers {
    pub cusp: bool,
    pub fiber_class_t: bool,
    pub s2xs2_summand: bool,
    pub cp2_summands: i64,
    pub cp2bar_summands: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub core_odd: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub embedded: Vec<EmbeddedPiece>,
}

/// A closed simply connected smooth 4-manifold as exact invariants plus
/// markers and a formal Seiberg-Witten state.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedRecord {
    pub e: i64,
    pub sigma: i64,
    pub b2_plus: i64,
    pub b2_minus: i64,
    pub parity: Parity,
    pub simply_connected: bool,
    pub spin: bool,
    pub markers: Markers,
    pub sw: SwState,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub handle_count_meta: Option<i64>,
}

/// Numerical summary used when two routes to the same manifold are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordSummary {
    pub e: i64,
    pub sigma: i64,
    pub b2_plus: i64,
    pub b2_minus: i64,
    pub parity: Parity,
    pub sw_count: Option<u64>,
}

impl ClosedRecord {
    pub fn validate(&self) -> Result<(), RecordError> {
        if !self.simply_connected {
            return Err(RecordError::NotSimplyConnected);
        }
        let fail = |msg: String| Err(RecordError::InvariantViolation(msg));
        if self.b2_plus < 0 || self.b2_minus < 0 {
            return fail(format!("negative b2: ({}, {})", self.b2_plus, self.b2_minus));
        }
        if self.e != 2 + self.b2_plus + self.b2_minus {
            return fail(format!(
                "e = {} but 2 + b2+ + b2- = {}",
                self.e,
                2 + self.b2_plus + self.b2_minus
            ));
        }
        if self.sigma != self.b2_plus - self.b2_minus {
            return fail(format!(
                "sigma = {} but b2+ - b2- = {}",
                self.sigma,
                self.b2_plus - self.b2_minus
            ));
        }
        if self.spin && self.parity != Parity::Even {
            return fail("spin record with odd intersection form".into());
        }
        if (self.markers.cp2bar_summands > 0 || self.markers.cp2_summands > 0)
            && self.parity != Parity::Odd
        {
            return fail("projective summand forces an odd form".into());
        }
        if self.markers.s2xs2_summand && !self.sw.is_zero() {
            return fail("a split S2xS2 summand forces a vanishing SW state".into());
        }
        Ok(())
    }

    pub fn rank(&self) -> i64 {
        self.b2_plus + self.b2_minus
    }

    pub fn is_definite(&self) -> bool {
        self.b2_plus == 0 || self.b2_minus == 0
    }

    pub fn summary(&self) -> RecordSummary {
        RecordSummary {
            e: self.e,
            sigma: self.sigma,
            b2_plus: self.b2_plus,
            b2_minus: self.b2_minus,
            parity: self.parity,
            sw_count: self.sw.count(),
        }
    }

    pub fn piece(&self, id: &str) -> Option<&EmbeddedPiece> {
        self.markers.embedded.iter().find(|p| p.id == id)
    }

    pub fn with_piece(mut self, piece: EmbeddedPiece) -> Self {
        self.markers.embedded.push(piece);
        self
    }

    /// The relatively minimal elliptic surface without multiple fibers:
    /// e = 12n, σ = -8n, spin exactly when n is even, with a cusp
    /// neighborhood and a fiber class. Its basic classes are attached for
    /// n >= 2 (for n = 1 the state is unknown: b2+ = 1 is out of scope).
    pub fn elliptic(n: i64, convention: ParityConvention) -> Result<Self, RecordError> {
        if n < 1 {
            return Err(RecordError::BadParameter(format!("E(n) needs n >= 1, got {n}")));
        }
        let sw =
            if n >= 2 { SwState::Set(beta_elliptic(n, 0, convention)?) } else { SwState::Unknown };
        let rec = ClosedRecord {
            e: 12 * n,
            sigma: -8 * n,
            b2_plus: 2 * n - 1,
            b2_minus: 10 * n - 1,
            parity: if n % 2 == 0 { Parity::Even } else { Parity::Odd },
            simply_connected: true,
            spin: n % 2 == 0,
            markers: Markers {
                cusp: true,
                fiber_class_t: true,
                core_odd: Some(n % 2 != 0),
                ..Markers::default()
            },
            sw,
            handle_count_meta: None,
        };
        rec.validate()?;
        Ok(rec)
    }

    /// `E(p_1 + … + p_k)` built from a fiber-sum partition; the handle count
    /// of that decomposition, `9 Σp - 5k - 4`, is carried as metadata.
    pub fn elliptic_with_partition(
        parts: &[i64],
        convention: ParityConvention,
    ) -> Result<Self, RecordError> {
        if parts.is_empty() || parts.iter().any(|&p| p < 2) {
            return Err(RecordError::BadParameter(format!(
                "partition entries must all be >= 2, got {parts:?}"
            )));
        }
        let n: i64 = parts.iter().sum();
        let k = parts.len() as i64;
        let mut rec = Self::elliptic(n, convention)?;
        rec.handle_count_meta = Some(9 * n - 5 * k - 4);
        Ok(rec)
    }

    /// Connected sum of n copies of CP^2 and m copies of its reverse; for
    /// n >= 2 the decomposition certifies a vanishing SW state, otherwise
    /// nothing is claimed.
    pub fn projective_sums(n: i64, m: i64) -> Result<Self, RecordError> {
        if n < 0 || m < 0 {
            return Err(RecordError::BadParameter(format!("negative summand counts ({n}, {m})")));
        }
        let sw = if n >= 2 { SwState::Zero } else { SwState::Unknown };
        let rec = ClosedRecord {
            e: 2 + n + m,
            sigma: n - m,
            b2_plus: n,
            b2_minus: m,
            parity: if n + m > 0 { Parity::Odd } else { Parity::Even },
            simply_connected: true,
            spin: n + m == 0,
            markers: Markers {
                cp2_summands: n,
                cp2bar_summands: m,
                core_odd: Some(false),
                ..Markers::default()
            },
            sw,
            handle_count_meta: None,
        };
        rec.validate()?;
        Ok(rec)
    }

    pub fn cp2() -> Self {
        Self::projective_sums(1, 0).expect("valid by construction")
    }

    pub fn cp2bar() -> Self {
        Self::projective_sums(0, 1).expect("valid by construction")
    }

    pub fn s2xs2() -> Self {
        ClosedRecord {
            e: 4,
            sigma: 0,
            b2_plus: 1,
            b2_minus: 1,
            parity: Parity::Even,
            simply_connected: true,
            spin: true,
            markers: Markers { s2xs2_summand: true, core_odd: Some(false), ..Markers::default() },
            sw: SwState::Zero,
            handle_count_meta: None,
        }
    }
}

/// Is `other` exactly a connected sum of tracked reversed projective planes
/// (so a sum with it is a sequence of blow-ups)?
fn is_pure_cp2bar_sum(rec: &ClosedRecord) -> Option<u32> {
    let m = rec.markers.cp2bar_summands;
    (rec.b2_plus == 0
        && m > 0
        && rec.b2_minus == m
        && rec.markers.cp2_summands == 0
        && !rec.markers.s2xs2_summand)
        .then_some(m as u32)
}

fn is_standard_sphere(rec: &ClosedRecord) -> bool {
    rec.b2_plus == 0 && rec.b2_minus == 0 && rec.markers.core_odd == Some(false)
}

/// Connected sum of records. Invariants add (with e losing 2 for the shared
/// sphere); the SW state follows the attached rules: summing reversed
/// projective planes is a blow-up, two positive-definite-direction pieces
/// kill the state, and a certified vanishing absorbs. Afterwards the
/// stabilization rewrite trades a CP^2/CP^2bar pair for a split S^2 x S^2
/// whenever the rest of the record is certified odd.
pub fn connected_sum(a: &ClosedRecord, b: &ClosedRecord) -> Result<ClosedRecord, RecordError> {
    if !a.simply_connected || !b.simply_connected {
        return Err(RecordError::NotSimplyConnected);
    }
    let sw = if let Some(m) = is_pure_cp2bar_sum(b) {
        blown_up(&a.sw, m)
    } else if let Some(m) = is_pure_cp2bar_sum(a) {
        blown_up(&b.sw, m)
    } else if is_standard_sphere(b) {
        a.sw.clone()
    } else if is_standard_sphere(a) {
        b.sw.clone()
    } else if (a.b2_plus > 0 && b.b2_plus > 0)
        || (a.sw.is_zero() && b.b2_plus > 0)
        || (b.sw.is_zero() && a.b2_plus > 0)
    {
        SwState::Zero
    } else {
        SwState::Unknown
    };

    let mut out = ClosedRecord {
        e: a.e + b.e - 2,
        sigma: a.sigma + b.sigma,
        b2_plus: a.b2_plus + b.b2_plus,
        b2_minus: a.b2_minus + b.b2_minus,
        parity: if a.parity == Parity::Odd || b.parity == Parity::Odd {
            Parity::Odd
        } else {
            Parity::Even
        },
        simply_connected: true,
        spin: a.spin && b.spin,
        markers: Markers {
            cusp: a.markers.cusp || b.markers.cusp,
            fiber_class_t: a.markers.fiber_class_t || b.markers.fiber_class_t,
            s2xs2_summand: a.markers.s2xs2_summand || b.markers.s2xs2_summand,
            cp2_summands: a.markers.cp2_summands + b.markers.cp2_summands,
            cp2bar_summands: a.markers.cp2bar_summands + b.markers.cp2bar_summands,
            core_odd: match (a.markers.core_odd, b.markers.core_odd) {
                (Some(x), Some(y)) => Some(x || y),
                _ => None,
            },
            embedded: a.markers.embedded.iter().chain(&b.markers.embedded).cloned().collect(),
        },
        sw,
        handle_count_meta: None,
    };
    normalize_stabilization(&mut out);
    out.validate()?;
    Ok(out)
}

fn blown_up(sw: &SwState, times: u32) -> SwState {
    match sw {
        SwState::Set(beta) => {
            let mut beta = beta.clone();
            for _ in 0..times {
                beta = blowup_formula(&beta);
            }
            SwState::Set(beta)
        }
        other => other.clone(),
    }
}

/// For a nonspin rest, a CP^2/CP^2bar pair is a split S^2 x S^2. The rest is
/// certified odd when the untracked core is odd or another projective
/// summand remains after consuming the pair.
fn normalize_stabilization(rec: &mut ClosedRecord) {
    let m = &mut rec.markers;
    while m.cp2_summands >= 1 && m.cp2bar_summands >= 1 {
        let rest_odd = m.core_odd == Some(true) || m.cp2_summands >= 2 || m.cp2bar_summands >= 2;
        if !rest_odd {
            break;
        }
        m.cp2_summands -= 1;
        m.cp2bar_summands -= 1;
        m.s2xs2_summand = true;
    }
    if rec.markers.s2xs2_summand {
        rec.sw = SwState::Zero;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::swalgebra::sw_compare;

    #[test]
    fn elliptic_invariants() {
        let e2 = ClosedRecord::elliptic(2, ParityConvention::Paper).unwrap();
        assert_eq!((e2.e, e2.sigma, e2.b2_plus), (24, -16, 3));
        assert!(e2.spin);
        assert_eq!(e2.parity, Parity::Even);
        assert_eq!(e2.sw.count(), Some(1));

        let e3 = ClosedRecord::elliptic(3, ParityConvention::Paper).unwrap();
        assert_eq!(e3.parity, Parity::Odd);
        assert!(!e3.spin);

        let e1 = ClosedRecord::elliptic(1, ParityConvention::Paper).unwrap();
        assert_eq!(e1.sw, SwState::Unknown);
    }

    #[test]
    fn partition_meta() {
        let rec = ClosedRecord::elliptic_with_partition(&[2, 4], ParityConvention::Paper).unwrap();
        assert_eq!(rec.e, 72);
        assert_eq!(rec.handle_count_meta, Some(9 * 6 - 5 * 2 - 4));
        assert!(ClosedRecord::elliptic_with_partition(&[1, 4], ParityConvention::Paper).is_err());
    }

    #[test]
    fn projective_targets() {
        let t = ClosedRecord::projective_sums(3, 20).unwrap();
        assert_eq!((t.e, t.sigma), (25, -17));
        assert_eq!(t.parity, Parity::Odd);
        assert!(t.sw.is_zero());

        let s4 = ClosedRecord::projective_sums(0, 0).unwrap();
        assert_eq!(s4.parity, Parity::Even);
        assert_eq!(s4.e, 2);
    }

    #[test]
    fn connected_sum_additivity() {
        let e2 = ClosedRecord::elliptic(2, ParityConvention::Paper).unwrap();
        let x = connected_sum(&e2, &ClosedRecord::cp2bar()).unwrap();
        assert_eq!((x.e, x.sigma), (25, -17));
        assert_eq!(x.parity, Parity::Odd);
        // summing one reversed plane is the blow-up formula
        assert_eq!(x.sw.count(), Some(2));
        match (&x.sw, &e2.sw) {
            (SwState::Set(after), SwState::Set(before)) => {
                assert_eq!(
                    sw_compare(after, &crate::swalgebra::blowup_formula(before)),
                    crate::swalgebra::SwComparison::Equal
                );
            }
            _ => panic!("expected class sets"),
        }
    }

    #[test]
    fn sum_with_s2xs2_kills_sw() {
        let e2 = ClosedRecord::elliptic(2, ParityConvention::Paper).unwrap();
        let x = connected_sum(&e2, &ClosedRecord::s2xs2()).unwrap();
        assert!(x.sw.is_zero());
        assert!(x.markers.s2xs2_summand);
    }

    #[test]
    fn two_positive_directions_kill_sw() {
        let e2 = ClosedRecord::elliptic(2, ParityConvention::Paper).unwrap();
        let x = connected_sum(&e2, &e2).unwrap();
        assert!(x.sw.is_zero());
    }

    #[test]
    fn zero_state_absorbs_under_positive_direction_sums() {
        let mut x = connected_sum(
            &ClosedRecord::elliptic(2, ParityConvention::Paper).unwrap(),
            &ClosedRecord::cp2bar(),
        )
        .unwrap();
        x.markers.s2xs2_summand = true;
        x.sw = SwState::Zero;
        // summing anything with a positive direction keeps the state at zero
        for other in [
            ClosedRecord::elliptic(3, ParityConvention::Paper).unwrap(),
            ClosedRecord::s2xs2(),
            ClosedRecord::cp2(),
        ] {
            assert!(connected_sum(&x, &other).unwrap().sw.is_zero());
        }
        // and so do further blow-ups
        assert!(connected_sum(&x, &ClosedRecord::cp2bar()).unwrap().sw.is_zero());
    }

    #[test]
    fn stabilization_rewrite_on_odd_rest() {
        // nonspin Y: E(3); Y # CP2 # CP2bar normalizes to Y # S2xS2
        let y = ClosedRecord::elliptic(3, ParityConvention::Paper).unwrap();
        let lhs = connected_sum(
            &connected_sum(&y, &ClosedRecord::cp2()).unwrap(),
            &ClosedRecord::cp2bar(),
        )
        .unwrap();
        let rhs = connected_sum(&y, &ClosedRecord::s2xs2()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn stabilization_needs_an_odd_rest() {
        // E(2) is spin: K3 # CP2 # CP2bar must NOT rewrite to K3 # S2xS2
        let y = ClosedRecord::elliptic(2, ParityConvention::Paper).unwrap();
        let lhs = connected_sum(
            &connected_sum(&y, &ClosedRecord::cp2()).unwrap(),
            &ClosedRecord::cp2bar(),
        )
        .unwrap();
        assert!(!lhs.markers.s2xs2_summand);
        assert_eq!(lhs.markers.cp2_summands, 1);
    }

    #[test]
    fn validation_catches_broken_records() {
        let mut rec = ClosedRecord::cp2();
        rec.e = 5;
        assert!(matches!(rec.validate(), Err(RecordError::InvariantViolation(_))));
        let mut rec = ClosedRecord::s2xs2();
        rec.sw = SwState::Unknown;
        assert!(matches!(rec.validate(), Err(RecordError::InvariantViolation(_))));
    }

    #[test]
    fn record_serde_round_trip() {
        let e2 = ClosedRecord::elliptic(2, ParityConvention::Paper).unwrap();
        let json = serde_json::to_string_pretty(&e2).unwrap();
        let back: ClosedRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, e2);
    }

    #[test]
    fn record_serde_round_trip_with_embedded_pieces() {
        use crate::swalgebra::EmbeddingProfile;
        // flattened piece kinds plus profiles and twist data all survive
        let rec = ClosedRecord::elliptic(2, ParityConvention::Paper)
            .unwrap()
            .with_piece(EmbeddedPiece {
                id: "C2@E1".into(),
                kind: PieceKind::RbdCp { p: 2 },
                profile: Some(EmbeddingProfile::canonical(2, 2, 0)),
                twist: None,
                note: "plumbing".into(),
            })
            .with_piece(EmbeddedPiece {
                id: "W(1,3):f^2".into(),
                kind: PieceKind::CorkFamily { ks: vec![1, 3], involution: 2 },
                profile: None,
                twist: Some(TwistPartner { sw: SwState::Zero, s2xs2: true }),
                note: String::new(),
            });
        let json = serde_json::to_string_pretty(&rec).unwrap();
        let back: ClosedRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rec);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["markers"]["embedded"][0]["kind"], "rbd_cp");
        assert_eq!(value["markers"]["embedded"][1]["involution"], 2);
    }
}
