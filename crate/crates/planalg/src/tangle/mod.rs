//! Planar-network compilation: turns networks of 4-leg boxes into
//! elements of the presented algebras.

mod compile;
mod net;
mod text;
#[cfg(test)]
mod tests;

pub use compile::{rotation_tangle, trace_tangle, TangleCompiler};
pub use net::{build_transfer_net, build_transfer_net_open, Port, TangleBox, TangleNet};
pub use text::parse_net;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum TangleError {
    #[error("port {0:?} appears {1} times in the strand list (expected exactly once)")]
    PortMultiplicity(Port, usize),
    #[error("box id {0} out of range")]
    BoxIdRange(usize),
    #[error("the network admits no planar embedding with the given boundary order")]
    NonPlanar,
    #[error("a surviving box could not be swept onto adjacent strands")]
    SweepUnsupported,
    #[error("a box payload uses the third generator but the target algebra has none")]
    NoThirdGenerator,
    #[error("strand closes an opposite-leg pair of a braid box")]
    OppositeClosure,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Presented(#[from] crate::presented::PresentedError),
    #[error(transparent)]
    Diagram(#[from] crate::diagram::DiagramError),
    #[error(transparent)]
    Scalar(#[from] crate::scalar::ScalarError),
}
