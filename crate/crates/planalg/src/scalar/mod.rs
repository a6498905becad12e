//! Exact scalar arithmetic.
//!
//! The coefficient tower is `Q(i)` (Gaussian rationals) at the bottom,
//! sparse multivariate polynomials over `Q(i)` in the middle, and reduced
//! rational functions at the top.  Indeterminates live in an [`Alphabet`]
//! shared by all values taking part in a computation; an alphabet entry may
//! additionally be a *root symbol*, i.e. a formal square root of a fixed
//! polynomial in the other symbols, in which case polynomial multiplication
//! keeps every exponent of that symbol below two.

mod alphabet;
mod gaussian;
pub mod linalg;
mod poly;
mod ratfn;

pub use alphabet::{Alphabet, Reality, VarId};
pub use gaussian::GaussianRational;
pub use poly::{Monomial, MultiPoly};
pub use ratfn::RationalFn;

use thiserror::Error;

/// Errors raised by scalar arithmetic.
#[derive(Debug, Error)]
pub enum ScalarError {
    #[error("division by zero rational function")]
    DivisionByZero,
    #[error("values belong to different alphabets")]
    AlphabetMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("denominator vanishes at the requested evaluation point")]
    PoleAtPoint,
    #[error("cannot evaluate a root symbol at a numeric point")]
    RootEvaluation,
    #[error("conjugation needs a declared reality class for `{0}`")]
    UnknownReality(String),
}
