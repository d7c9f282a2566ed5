//! Closed simply connected 4-manifolds as exact invariant records.
//!
//! A [`ClosedRecord`] stores what the calculus can certify: Euler
//! characteristic, signature, `b_2^±`, parity, spin, a formal Seiberg-Witten
//! state, and markers for the structure the constructions rely on (a cusp
//! neighborhood, a fiber class, split summands, embedded pieces with their
//! pairing profiles or twist data). Records identify manifolds only up to the
//! stored invariants; "diffeomorphic" is concluded exclusively through the
//! explicit rewrite rules (stabilization, trivializing surgery in a manifold
//! that splits off `S^2 x S^2`), and homeomorphism verdicts come from the
//! rank/signature/parity classification of indefinite forms.

mod classify;
mod ops;
mod record;

pub use classify::{homeo_classify, HomeoVerdict, Verdict};
pub use ops::{
    blowdown_twist_consistency, cork_twist_record, knot_surgery_record, plug_twist_record,
    rational_blowdown_record, rational_blowdown_then_blowups, PathSummary, TwoPathReport,
};
pub use record::{
    connected_sum, ClosedRecord, EmbeddedPiece, Markers, PieceKind, RecordSummary, SwState,
    TwistPartner,
};

use crate::swalgebra::SwError;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum RecordError {
    #[error("record is not simply connected")]
    NotSimplyConnected,
    #[error("record carries no cusp neighborhood marker")]
    MissingCusp,
    #[error("record carries no embedded piece {0:?}")]
    MissingPiece(String),
    #[error("embedded piece {id:?} is not a {expected} piece")]
    PieceKindMismatch { id: String, expected: &'static str },
    #[error("embedded piece {0:?} has no twist data attached")]
    MissingTwistData(String),
    #[error("embedded piece {0:?} has no pairing profile attached")]
    MissingProfile(String),
    #[error("record is not elliptic-family based: {0}")]
    NotEllipticFamily(String),
    #[error("parity of the blowdown is not certified by the record (no spare summand or signature certificate); use the fused blowdown-then-blowups operation")]
    ParityUncertified,
    #[error("record invariant violated: {0}")]
    InvariantViolation(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Sw(#[from] SwError),
}
