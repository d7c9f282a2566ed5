use serde::{Deserialize, Serialize};

use super::record::{connected_sum, ClosedRecord, PieceKind, RecordSummary, SwState, TwistPartner};
use super::RecordError;
use crate::exactlin::Parity;
use crate::knots::LaurentPoly;
use crate::swalgebra::{blowup_formula, knot_surgery_beta, rbd_transfer, ParityConvention};

fn piece_index(rec: &ClosedRecord, id: &str) -> Result<usize, RecordError> {
    rec.markers
        .embedded
        .iter()
        .position(|p| p.id == id)
        .ok_or_else(|| RecordError::MissingPiece(id.to_string()))
}

fn twist_record(
    rec: &ClosedRecord,
    piece_id: &str,
    want_cork: bool,
) -> Result<ClosedRecord, RecordError> {
    let idx = piece_index(rec, piece_id)?;
    let piece = &rec.markers.embedded[idx];
    let kind_ok = if want_cork { piece.kind.is_cork() } else { piece.kind.is_plug() };
    if !kind_ok {
        return Err(RecordError::PieceKindMismatch {
            id: piece_id.to_string(),
            expected: if want_cork { "cork" } else { "plug" },
        });
    }
    let partner =
        piece.twist.clone().ok_or_else(|| RecordError::MissingTwistData(piece_id.to_string()))?;

    // regluing a compact piece along its boundary changes none of e, σ, b2±,
    // parity; only the smooth data (SW state, split marker) trades places
    let mut out = rec.clone();
    out.sw = partner.sw;
    out.markers.s2xs2_summand = partner.s2xs2;
    out.markers.embedded[idx].twist =
        Some(TwistPartner { sw: rec.sw.clone(), s2xs2: rec.markers.s2xs2_summand });
    out.validate()?;
    Ok(out)
}

/// Cut out the named cork and reglue it by its boundary involution.
pub fn cork_twist_record(rec: &ClosedRecord, piece_id: &str) -> Result<ClosedRecord, RecordError> {
    twist_record(rec, piece_id, true)
}

/// Cut out the named plug and reglue it by its boundary involution.
pub fn plug_twist_record(rec: &ClosedRecord, piece_id: &str) -> Result<ClosedRecord, RecordError> {
    twist_record(rec, piece_id, false)
}

/// Knot surgery in the cusp neighborhood.
///
/// In a record that splits off `S^2 x S^2` the surgery does not change the
/// smooth type (the stabilization theorem), so the record comes back
/// untouched. On an elliptic-family record the fiber-direction state is
/// replaced through the product rule and re-blown-up; a vanishing or unknown
/// state stays what it was.
pub fn knot_surgery_record(
    rec: &ClosedRecord,
    alexander: &LaurentPoly,
    convention: ParityConvention,
) -> Result<ClosedRecord, RecordError> {
    if !rec.markers.cusp {
        return Err(RecordError::MissingCusp);
    }
    if rec.markers.s2xs2_summand {
        return Ok(rec.clone());
    }
    match &rec.sw {
        SwState::Zero | SwState::Unknown => Ok(rec.clone()),
        SwState::Set(beta) => {
            if !rec.markers.fiber_class_t {
                return Err(RecordError::NotEllipticFamily(
                    "no fiber class marker to surger along".into(),
                ));
            }
            // e = 12n + m and σ = -8n - m pin the elliptic base and the
            // number of blow-ups
            let n = (rec.e + rec.sigma) / 4;
            let m = rec.e - 12 * n;
            if rec.e + rec.sigma != 4 * n || m < 0 || rec.sigma != -8 * n - m || n < 2 {
                return Err(RecordError::NotEllipticFamily(format!(
                    "(e, sigma) = ({}, {}) is not E(n) # m CP2bar with n >= 2",
                    rec.e, rec.sigma
                )));
            }
            if beta.e_dim() != Some(m as usize) && !(beta.e_dim().is_none() && m == 0) {
                return Err(RecordError::NotEllipticFamily(format!(
                    "class set has {:?} exceptional directions, record implies {m}",
                    beta.e_dim()
                )));
            }
            let mut surgered = knot_surgery_beta(n, alexander, convention)?;
            for _ in 0..m {
                surgered = blowup_formula(&surgered);
            }
            let mut out = rec.clone();
            out.sw = SwState::Set(surgered);
            out.handle_count_meta = None;
            out.validate()?;
            Ok(out)
        }
    }
}

fn transfer_sw(rec: &ClosedRecord, piece_idx: usize) -> Result<(i64, SwState), RecordError> {
    let piece = &rec.markers.embedded[piece_idx];
    let p = piece.kind.blowdown_order().ok_or_else(|| RecordError::PieceKindMismatch {
        id: piece.id.clone(),
        expected: "rational blowdown",
    })?;
    let profile =
        piece.profile.as_ref().ok_or_else(|| RecordError::MissingProfile(piece.id.clone()))?;
    let sw = match &rec.sw {
        SwState::Set(beta) => SwState::Set(rbd_transfer(beta, profile)?),
        other => other.clone(),
    };
    Ok((p, sw))
}

/// Replace the plumbing piece by the rational ball: e drops by p-1, σ rises
/// by p-1, `b_2^+` is preserved and `b_2^-` drops, and the class set is
/// carried through the lift/transfer rule. Simple connectivity of the result
/// is an assertion mirrored from the construction, not a computation.
///
/// The parity of the result is certified by a surviving odd summand or by a
/// signature not divisible by 8; without a certificate this errors rather
/// than guessing (the fused blowdown-then-blowups variant never needs one).
pub fn rational_blowdown_record(
    rec: &ClosedRecord,
    piece_id: &str,
) -> Result<ClosedRecord, RecordError> {
    let idx = piece_index(rec, piece_id)?;
    let (p, sw) = transfer_sw(rec, idx)?;
    let mut out = rec.clone();
    out.e -= p - 1;
    out.sigma += p - 1;
    out.b2_minus -= p - 1;
    if out.b2_minus < 0 {
        return Err(RecordError::InvariantViolation(format!(
            "blowdown of order {p} needs b2- >= {}, record has {}",
            p - 1,
            rec.b2_minus
        )));
    }
    out.sw = sw;
    out.markers.embedded.remove(idx);
    // the consumed exceptional direction was a tracked summand if any were
    out.markers.cp2bar_summands = (rec.markers.cp2bar_summands - 1).max(0);
    out.handle_count_meta = None;

    let odd_certificate = out.markers.cp2bar_summands > 0
        || out.markers.cp2_summands > 0
        || out.markers.core_odd == Some(true)
        || (out.sigma.rem_euclid(8) != 0 && out.b2_plus > 0 && out.b2_minus > 0);
    if !odd_certificate {
        return Err(RecordError::ParityUncertified);
    }
    out.parity = Parity::Odd;
    out.spin = false;
    out.validate()?;
    Ok(out)
}

/// Rational blowdown followed by p-1 blow-ups, as one step. The composite
/// restores (e, σ, b2±) and is certified odd by the fresh summands, so it
/// stays total even where the standalone blowdown cannot certify parity.
pub fn rational_blowdown_then_blowups(
    rec: &ClosedRecord,
    piece_id: &str,
) -> Result<ClosedRecord, RecordError> {
    let idx = piece_index(rec, piece_id)?;
    let (p, sw) = transfer_sw(rec, idx)?;
    let mut out = rec.clone();
    out.sw = match sw {
        SwState::Set(beta) => {
            let mut beta = beta;
            for _ in 0..(p - 1) {
                beta = blowup_formula(&beta);
            }
            SwState::Set(beta)
        }
        other => other,
    };
    out.markers.embedded.remove(idx);
    out.markers.cp2bar_summands = (rec.markers.cp2bar_summands - 1).max(0) + (p - 1);
    out.parity = Parity::Odd;
    out.spin = false;
    out.handle_count_meta = None;
    out.validate()?;
    Ok(out)
}

/// One route of the two-path check, as numbers plus how they were obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSummary {
    pub label: String,
    pub summary: RecordSummary,
}

/// Result of running the blowdown route against the twist routes on a record
/// containing the augmented plumbing piece.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoPathReport {
    pub p: i64,
    pub rbd_path: PathSummary,
    pub cork_path: PathSummary,
    pub plug_path: PathSummary,
    pub rbd_record: ClosedRecord,
    pub rbd_intermediate: Option<ClosedRecord>,
    pub consistent: bool,
}

/// Two-path consistency: the rational blowdown composed with p-1 blow-ups
/// must agree with cutting out the cork the piece contains (or its plug
/// companion) and regluing by the involution. The twist routes are computed
/// independently: a boundary twist preserves every numerical invariant, and
/// the class count follows the doubling law `N -> 2^(p-1) N`.
pub fn blowdown_twist_consistency(
    rec: &ClosedRecord,
    piece_id: &str,
) -> Result<TwoPathReport, RecordError> {
    let idx = piece_index(rec, piece_id)?;
    let piece = &rec.markers.embedded[idx];
    let p = match piece.kind {
        PieceKind::RbdDp { p } => p,
        _ => {
            return Err(RecordError::PieceKindMismatch {
                id: piece_id.to_string(),
                expected: "augmented plumbing (D_p)",
            })
        }
    };

    // route (a): explicit transfer arithmetic
    let (rbd_intermediate, rbd_record) = match rational_blowdown_record(rec, piece_id) {
        Ok(intermediate) => {
            let mut final_rec = intermediate.clone();
            for _ in 0..(p - 1) {
                final_rec = connected_sum(&final_rec, &ClosedRecord::cp2bar())?;
            }
            (Some(intermediate), final_rec)
        }
        Err(RecordError::ParityUncertified) => {
            (None, rational_blowdown_then_blowups(rec, piece_id)?)
        }
        Err(other) => return Err(other),
    };

    // routes (b), (c): twist invariance plus the counting law
    let twisted_count = rec.sw.count().map(|n| n * (1u64 << (p - 1)));
    let twist_summary = RecordSummary { sw_count: twisted_count, ..rec.summary() };

    let rbd_path = PathSummary {
        label: format!("rational blowdown along C_{p} then {} blow-ups", p - 1),
        summary: rbd_record.summary(),
    };
    let cork_path = PathSummary {
        label: format!("remove W_{} and reglue via f_{}", p - 1, p - 1),
        summary: twist_summary,
    };
    let plug_path = PathSummary {
        label: format!("remove W_{{1,{p}}} and reglue via f_{{1,{p}}}"),
        summary: twist_summary,
    };
    let consistent = rbd_path.summary == cork_path.summary && rbd_path.summary == plug_path.summary;

    Ok(TwoPathReport {
        p,
        rbd_path,
        cork_path,
        plug_path,
        rbd_record,
        rbd_intermediate,
        consistent,
    })
}
