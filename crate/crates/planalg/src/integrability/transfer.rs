//! Homogeneous double-row transfer operators and their commutation,
//! self-adjointness, and speciousness checks.

use super::IntegrabilityError;
use crate::baxter::{BaxterAlgebra, ROperator};
use crate::presented::{AlgElem, BasisTable};
use crate::scalar::{GaussianRational, RationalFn, ScalarError};
use crate::tangle::{build_transfer_net_open, TangleCompiler};
use num_bigint::BigInt;
use num_rational::Ratio;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Leg offset of the bottom-row boxes in the transfer network, in
/// counterclockwise quarter turns against the `[W, S, E, N]` side cycle.
/// Calibrated so that the compiled transfer operators commute in the
/// spectral parameter for all three Baxterisations (see the calibration
/// probes in the test module).
pub const TRANSFER_OFFSET_BOTTOM: u8 = 0;
/// Leg offset of the top-row boxes; see [`TRANSFER_OFFSET_BOTTOM`].
pub const TRANSFER_OFFSET_TOP: u8 = 0;

/// A compiled homogeneous transfer operator `T_n(u)`.
#[derive(Clone)]
pub struct TransferFamily {
    pub alg: BaxterAlgebra,
    pub n: usize,
    /// `T_n(u)` over the level-`n` basis, coefficients rational in `u` and
    /// the algebra parameters.
    pub t: AlgElem,
    /// Spectral-parameter values excluded by poles of the R-operator.
    pub excluded: Vec<RationalFn>,
}

/// Compile `T_n(u)` for the R-operator `rop`, where `lower` is the
/// level-`n` table and `upper` the level-`n+1` table over the same
/// alphabet: the cut-open double-row network is compiled at level `n+1`
/// and the auxiliary strand is closed by the partial trace.
pub fn transfer_operator(
    upper: &BasisTable,
    lower: &BasisTable,
    rop: &ROperator,
) -> Result<TransferFamily, IntegrabilityError> {
    transfer_with_offsets(upper, lower, rop, TRANSFER_OFFSET_BOTTOM, TRANSFER_OFFSET_TOP)
}

pub(crate) fn transfer_with_offsets(
    upper: &BasisTable,
    lower: &BasisTable,
    rop: &ROperator,
    rb: u8,
    rt: u8,
) -> Result<TransferFamily, IntegrabilityError> {
    let n = lower.pres.n;
    if upper.pres.n != n + 1 {
        return Err(IntegrabilityError::LevelMismatch { upper: upper.pres.n, lower: n });
    }
    let net = build_transfer_net_open(n, &rop.r, rb, rt)?;
    let compiler = TangleCompiler::new(upper, rop.alg.clone())?;
    let open = compiler.compile(&net)?;
    let t = upper.partial_trace(&open, lower)?;
    Ok(TransferFamily { alg: rop.alg.clone(), n, t, excluded: excluded_points(rop) })
}

/// Spectral-parameter values at which the R-operator has a pole.
fn excluded_points(rop: &ROperator) -> Vec<RationalFn> {
    let alph = rop.r.c_one.alphabet();
    let var = |name: &str| RationalFn::var(alph, name).expect("parameter in alphabet");
    let one = RationalFn::one(alph);
    match &rop.alg {
        BaxterAlgebra::TemperleyLieb => {
            let q = var("q");
            vec![q.mul(&q)]
        }
        BaxterAlgebra::FussCatalan { gamma } => {
            vec![gamma.mul(gamma).sub(&one)]
        }
        BaxterAlgebra::Bmw { .. } => {
            let q = var("q");
            let omega = ROperator::bmw_omega(alph, rop.omega_is_negative());
            vec![q.mul(&q), omega]
        }
        BaxterAlgebra::SinglyGenerated { .. } => {
            vec![ROperator::liu_delta_point(alph).neg()]
        }
    }
}

/// Outcome of a commutation check.
#[derive(Clone, Debug)]
pub struct CommutationReport {
    pub symbolic: bool,
    pub samples: usize,
    pub commutes: bool,
}

/// Verify `[T(u), T(v)] = 0` as an identity of rational functions in the
/// two spectral symbols.
pub fn check_commutation_symbolic(
    lower: &BasisTable,
    fam: &TransferFamily,
) -> Result<CommutationReport, IntegrabilityError> {
    let alph = lower.pres.loop_factor.alphabet();
    let v = RationalFn::var(alph, "v").map_err(IntegrabilityError::Scalar)?;
    let tv = fam.t.subst("u", &v)?;
    let c = lower.mul(&fam.t, &tv).sub(&lower.mul(&tv, &fam.t));
    Ok(CommutationReport { symbolic: true, samples: 0, commutes: c.is_zero() })
}

/// Verify `[T(u), T(v)] = 0` at `samples` random admissible rational
/// spectral points; parameters stay symbolic.  Points at poles of the
/// compiled coefficients are resampled.
pub fn check_commutation_randomized(
    lower: &BasisTable,
    fam: &TransferFamily,
    samples: usize,
    seed: u64,
) -> Result<CommutationReport, IntegrabilityError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    let mut attempts = 0;
    while done < samples {
        attempts += 1;
        if attempts > 40 * samples + 40 {
            return Err(IntegrabilityError::SamplingExhausted);
        }
        let pu = random_rational(&mut rng);
        let pv = random_rational(&mut rng);
        if pu == pv {
            continue;
        }
        let (tu, tv) = match (
            fam.t.subst("u", &constant(lower, &pu)),
            fam.t.subst("u", &constant(lower, &pv)),
        ) {
            (Ok(a), Ok(b)) => (a, b),
            // A pole of some coefficient: the point is inadmissible.
            (Err(ScalarError::DivisionByZero | ScalarError::PoleAtPoint), _)
            | (_, Err(ScalarError::DivisionByZero | ScalarError::PoleAtPoint)) => continue,
            (Err(e), _) | (_, Err(e)) => return Err(IntegrabilityError::Scalar(e)),
        };
        let c = lower.mul(&tu, &tv).sub(&lower.mul(&tv, &tu));
        if !c.is_zero() {
            return Ok(CommutationReport { symbolic: false, samples: done + 1, commutes: false });
        }
        done += 1;
    }
    Ok(CommutationReport { symbolic: false, samples, commutes: true })
}

fn constant(table: &BasisTable, c: &GaussianRational) -> RationalFn {
    RationalFn::constant(table.pres.loop_factor.alphabet(), c.clone())
}

fn random_rational(rng: &mut ChaCha8Rng) -> GaussianRational {
    let num: i64 = rng.gen_range(-12..=12);
    let den: i64 = rng.gen_range(1..=9);
    GaussianRational::new(
        Ratio::new(BigInt::from(num), BigInt::from(den)),
        Ratio::new(BigInt::from(0), BigInt::from(1)),
    )
}

/// Whether a spectral value lies in the self-adjointness domain of the
/// algebra's transfer operator: real for the Temperley–Lieb and
/// Fuss–Catalan families, on the unit circle for the singly generated
/// one.
pub fn selfadjoint_domain(alg: &BaxterAlgebra, u: &GaussianRational) -> bool {
    match alg {
        BaxterAlgebra::TemperleyLieb
        | BaxterAlgebra::FussCatalan { .. }
        | BaxterAlgebra::Bmw { .. } => u.is_real(),
        BaxterAlgebra::SinglyGenerated { .. } => {
            let m = u.clone() * u.conj();
            m.is_one()
        }
    }
}

/// Verify `T(u)* = T(u)` exactly after substituting the given variable
/// assignment, which must set the spectral variable `u` to a value in the
/// operator's self-adjointness domain.
pub fn check_selfadjoint(
    lower: &BasisTable,
    fam: &TransferFamily,
    point: &[(&str, GaussianRational)],
) -> Result<bool, IntegrabilityError> {
    let u = point
        .iter()
        .find(|(n, _)| *n == "u")
        .map(|(_, v)| v.clone())
        .ok_or_else(|| IntegrabilityError::NotInDomain("no value given for u".into()))?;
    if !selfadjoint_domain(&fam.alg, &u) {
        return Err(IntegrabilityError::NotInDomain(format!(
            "u = {u:?} lies outside the self-adjointness domain"
        )));
    }
    let mut t = fam.t.clone();
    for (name, value) in point {
        t = t.subst(name, &constant(lower, value))?;
    }
    let star = lower.star(&t)?;
    Ok(star.sub(&t).is_zero())
}

/// For a specious R-operator the transfer operator is a scalar function
/// times a fixed element: check that all coefficient ratios of `T(u)` are
/// independent of `u`.
pub fn transfer_is_specious(fam: &TransferFamily) -> bool {
    let Some((_, c0)) = fam.t.terms.iter().find(|(_, c)| !c.is_zero()) else {
        return true;
    };
    let Ok(c0_inv) = c0.inv() else { return true };
    fam.t
        .terms
        .values()
        .all(|c| !c.mul(&c0_inv).depends_on("u"))
}
