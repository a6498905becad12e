//! Generator/relation realisations of the algebra tower.
//!
//! A [`Presentation`] lists generator families (such as `e` and `s`) with
//! one generator per strand index, together with relations written as
//! formal linear combinations of words that vanish.  Relations are
//! oriented into rewrite rules by the graded lexicographic word order and
//! closed under critical-pair completion; irreducible words then form a
//! spanning set whose count is certified against the closed-form dimension
//! of the algebra.  On top of the certified basis the [`BasisTable`]
//! provides products, traces, involutions, Gram matrices and regular
//! representations, all with exact rational-function coefficients.

mod word;
mod rewrite;
mod presentation;
mod table;
mod quotient;
mod ybr;

#[cfg(test)]
mod tests;

pub use presentation::{GenFamily, Presentation, StarKind, FAM_E, FAM_S};
pub use quotient::QuotientMap;
pub use rewrite::{AlgElem, Rule, RuleSet};
pub use table::{AlgebraTower, BasisTable};
pub use word::{GenSym, Word};
pub use ybr::{ps2_idempotents, ybr_span_test, Ps2Idempotents, YbrSpanOutcome};

use thiserror::Error;

/// Errors raised by the presented-algebra layer.
#[derive(Debug, Error)]
pub enum PresentedError {
    #[error("word length cap {cap} exceeded while enumerating the basis; the algebra may be infinite-dimensional at this cap")]
    BasisCapExceeded { cap: usize },
    #[error("completion did not terminate within {max_rules} rules")]
    CompletionOverflow { max_rules: usize },
    #[error("basis size {found} does not match the expected dimension {expected}")]
    DimensionMismatch { found: usize, expected: usize },
    #[error("word contains more than one top-index generator and cannot be trace-normalised")]
    NotNormalisable,
    #[error("generator index {idx} out of range for n = {n}")]
    GeneratorOutOfRange { idx: usize, n: usize },
    #[error("scalar error: {0}")]
    Scalar(#[from] crate::scalar::ScalarError),
    #[error("relation does not vanish under the quotient map: {0}")]
    RelationNotSatisfied(String),
}
