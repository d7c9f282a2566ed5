//! Algebraic handle presentations of compact 4-manifolds.
//!
//! A presentation records dotted circles (1-handles), framed 2-handles with
//! pairwise linking numbers and algebraic run-over counts across the dotted
//! circles, and a count of 3-handles. This is the diagram of a handlebody at
//! the level of its linking data; planar isotopy is out of scope. Everything
//! homological (H_1 and H_2 of the 4-manifold, H_1 of its boundary, the
//! intersection form) is a function of the extended matrix
//! `[framings/linkings | run-over counts]`.
//!
//! Dotted circles always form an unlink and never link each other; that is
//! the usual 1-handle convention and it is what makes the dot-zero swap a
//! plain exchange of roles.

mod homology;
mod presentation;
mod presets;

pub use homology::{homology, HomologyReport};
pub use presentation::{boundary_sum, HandlePresentation, LegendrianData, TwoHandle};
pub use presets::{bp, cp, dp, wfamily, wmn, wn, wn_with_framing};

/// Errors for presentation construction and moves.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum HandleError {
    #[error("invalid presentation: {0}")]
    Invalid(String),
    #[error("handle index {index} out of range ({kind} count {count})")]
    IndexOutOfRange { kind: &'static str, index: usize, count: usize },
    #[error("cannot slide a handle over itself")]
    SelfSlide,
    #[error("blowdown needs an unlinked ±1-framed 2-handle, but {0}")]
    NotBlowdownable(String),
    #[error("dot-zero swap requires {0}")]
    NotSwappable(String),
    #[error("preset parameter out of range: {0}")]
    BadParameter(String),
    #[error("Thurston-Bennequin data has {got} entries, presentation has {want} 2-handles")]
    LegendrianMismatch { got: usize, want: usize },
}
