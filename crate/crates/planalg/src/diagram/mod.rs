//! Planar diagram calculus for the Temperley–Lieb and two-colour
//! Fuss–Catalan algebras.
//!
//! Boundary points of an `n`-box are numbered clockwise starting from the
//! marked interval on the left edge: `0..n` along the bottom (left to
//! right), then `n..2n` along the top (right to left).  A diagram is a
//! noncrossing perfect matching of the boundary points; products stack the
//! second factor on top of the first and convert every closed loop into a
//! factor of the loop weight.
//!
//! The Fuss–Catalan algebra uses the same machinery on `4n` points with a
//! two-colour constraint on which points may be matched; both colours carry
//! the same loop weight `γ`, so the Temperley–Lieb loop weight is `δ = γ²`.

mod pairing;
mod algebra;

pub use algebra::{chebyshev, jones_wenzl, DiagAlgebra, DiagElement, DiagramKind};
pub use pairing::PlanarPairing;

use thiserror::Error;

/// Errors raised by the diagram layer.
#[derive(Debug, Error)]
pub enum DiagramError {
    #[error("pairing is not a perfect matching of {0} points")]
    NotPerfectMatching(usize),
    #[error("pairing has crossing pairs ({0},{1}) and ({2},{3})")]
    Crossing(usize, usize, usize, usize),
    #[error("pair ({0},{1}) joins points of different colours")]
    ColourMismatch(usize, usize),
    #[error("generator index {idx} out of range for n = {n}")]
    GeneratorOutOfRange { idx: usize, n: usize },
    #[error("boxes of different sizes: {0} vs {1}")]
    SizeMismatch(usize, usize),
}
