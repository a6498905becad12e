//! Baxterised R-operators, Y-operator families, and the exact local
//! relations of the integrable structure they generate.

mod checks;
mod rop;

pub use checks::{
    check_braid_limits, check_bybe, check_crossing, check_inversion, check_unit, check_ybe,
    liu_crossing_inconsistent, specious_test, ybe_defect_expansion, BaxterError, BraidLimits,
    DefectExpansion, YbeVerdict,
};
pub use rop::{BaxterAlgebra, ROperator, TwoBox, TwoBoxCtx, YFamily};

#[cfg(test)]
mod tests;
