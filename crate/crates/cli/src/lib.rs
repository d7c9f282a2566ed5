//! Scenario runner for the cork calculus: builds the exotic manifold
//! families the surgery constructions produce, collects every intermediate
//! record, and emits a deterministic report (text or JSON) with one
//! pass/fail clause per claim.

pub mod cli;
pub mod knot_input;
pub mod report;
pub mod scenario;

use corkcalc_core::fourmanifold::RecordError;
use corkcalc_core::handlebody::HandleError;
use corkcalc_core::knots::KnotError;
use corkcalc_core::swalgebra::SwError;

#[derive(Debug, thiserror::Error)]
pub enum ScenarioError {
    #[error("bad scenario parameters: {0}")]
    BadParameters(String),
    #[error("cannot parse knot specification: {0}")]
    KnotSpec(String),
    #[error(transparent)]
    Record(#[from] RecordError),
    #[error(transparent)]
    Handle(#[from] HandleError),
    #[error(transparent)]
    Knot(#[from] KnotError),
    #[error(transparent)]
    Sw(#[from] SwError),
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
