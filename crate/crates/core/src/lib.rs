//! Exact calculus for simply connected smooth 4-manifolds presented by handles.
//!
//! Everything in this crate is exact integer (or integer Laurent polynomial)
//! arithmetic; there is no floating point anywhere. The crate is organized in
//! layers:
//!
//! * [`exactlin`]: integer matrices, Smith normal form, determinants, and
//!   invariants of symmetric bilinear forms.
//! * [`knots`]: one-variable integer Laurent polynomials and Alexander
//!   polynomials from Seifert matrices or parametric families.
//! * [`handlebody`]: algebraic handle presentations (dotted circles, framed
//!   2-handles, linking data), Kirby-level moves, and homology of the manifold
//!   and its boundary.
//! * [`swalgebra`]: formal Seiberg-Witten basic-class sets for the elliptic
//!   family, the blow-up and knot-surgery product rules, and the rational
//!   blowdown lift/transfer rules.
//! * [`fourmanifold`]: closed-manifold records, surgery operations at record
//!   level, and the homeomorphism classification of indefinite forms.
//!
//! All values are immutable; operations return new values and are safe to call
//! from many threads.

pub mod exactlin;
pub mod fourmanifold;
pub mod handlebody;
pub mod knots;
pub mod swalgebra;

pub use exactlin::{AbelianGroup, Definiteness, FormInvariants, IntMatrix, Parity, SnfResult};
pub use fourmanifold::{ClosedRecord, HomeoVerdict, SwState};
pub use handlebody::{HandlePresentation, HomologyReport, LegendrianData, TwoHandle};
pub use knots::{LaurentPoly, SeifertMatrix};
pub use swalgebra::{
    Ambient, BasicClass, BasicClassSet, BasicClassVector, EmbeddingProfile, ParityConvention,
    SwComparison,
};
