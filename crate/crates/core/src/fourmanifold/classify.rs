use serde::{Deserialize, Serialize};

use super::record::ClosedRecord;
use super::RecordError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Homeomorphic,
    NotHomeomorphic,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Homeomorphic => write!(f, "homeomorphic"),
            Verdict::NotHomeomorphic => write!(f, "not_homeomorphic"),
            Verdict::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// Outcome of the topological comparison of two records.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomeoVerdict {
    pub same_rank: bool,
    pub same_signature: bool,
    pub same_parity: bool,
    pub verdict: Verdict,
    pub reasons: Vec<String>,
}

/// Classify two simply connected closed records up to homeomorphism.
///
/// Indefinite intersection forms are determined by rank, signature and
/// parity, and rank <= 1 forms by rank and signature alone, so matching
/// invariants give a homeomorphism there. Matching invariants on definite
/// forms of rank >= 2 stay inconclusive: deciding those is out of scope.
/// Any mismatch refutes the homeomorphism for all form types.
pub fn homeo_classify(a: &ClosedRecord, b: &ClosedRecord) -> Result<HomeoVerdict, RecordError> {
    if !a.simply_connected || !b.simply_connected {
        return Err(RecordError::NotSimplyConnected);
    }
    let same_rank = a.rank() == b.rank();
    let same_signature = a.sigma == b.sigma;
    let same_parity = a.parity == b.parity;
    let mut reasons = Vec::new();
    if !same_rank {
        reasons.push(format!("rank {} vs {}", a.rank(), b.rank()));
    }
    if !same_signature {
        reasons.push(format!("signature {} vs {}", a.sigma, b.sigma));
    }
    if !same_parity {
        reasons.push(format!("parity {} vs {}", a.parity, b.parity));
    }
    let verdict = if !reasons.is_empty() {
        Verdict::NotHomeomorphic
    } else if a.is_definite() && a.rank() >= 2 {
        reasons.push(format!(
            "definite forms of rank {} are not classified by these invariants",
            a.rank()
        ));
        Verdict::Inconclusive
    } else {
        reasons.push(format!(
            "(rank, signature, parity) = ({}, {}, {}) and the forms are {}",
            a.rank(),
            a.sigma,
            a.parity,
            if a.rank() <= 1 { "small" } else { "indefinite" }
        ));
        Verdict::Homeomorphic
    };
    Ok(HomeoVerdict { same_rank, same_signature, same_parity, verdict, reasons })
}
