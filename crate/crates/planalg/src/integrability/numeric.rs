//! Exact minimal-polynomial diagonalizability checks and the
//! floating-point polynomialisability witness.
//!
//! Floating-point arithmetic is confined to this file: eigenvalues come
//! from Durand–Kerner iteration on the exact minimal polynomial,
//! eigenvectors and change-of-basis solves use complex Gaussian
//! elimination, and symmetric spectra (for Gram positivity spot checks)
//! use cyclic Jacobi rotations.

use super::IntegrabilityError;
use crate::presented::{AlgElem, BasisTable};
use crate::scalar::{linalg, GaussianRational, RationalFn};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

type CMatrix = Vec<Vec<Complex64>>;

/// True iff the regular-representation matrix of `x`, after substituting
/// the given assignment, has a squarefree minimal polynomial.  Both the
/// minimal polynomial and the squarefreeness test are exact; unassigned
/// parameters stay symbolic.
pub fn diagonalizability_check(
    table: &BasisTable,
    x: &AlgElem,
    point: &[(&str, GaussianRational)],
) -> Result<bool, IntegrabilityError> {
    let alph = table.pres.loop_factor.alphabet().clone();
    let mut xs = x.clone();
    for (name, value) in point {
        xs = xs.subst(name, &RationalFn::constant(&alph, value.clone()))?;
    }
    let m = table.regular_representation(&xs)?;
    let minp = minimal_polynomial(&m)?;
    Ok(squarefree(&minp))
}

fn mat_mul(a: &[Vec<RationalFn>], b: &[Vec<RationalFn>]) -> Vec<Vec<RationalFn>> {
    let d = a.len();
    let zero = RationalFn::zero(a[0][0].alphabet());
    let mut out = vec![vec![zero; d]; d];
    for i in 0..d {
        for k in 0..d {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..d {
                if b[k][j].is_zero() {
                    continue;
                }
                out[i][j] = out[i][j].add(&a[i][k].mul(&b[k][j]));
            }
        }
    }
    out
}

/// Monic minimal polynomial of a square matrix over the rational-function
/// field, as coefficients in increasing degree.
pub(crate) fn minimal_polynomial(
    m: &[Vec<RationalFn>],
) -> Result<Vec<RationalFn>, IntegrabilityError> {
    let d = m.len();
    let alph = m[0][0].alphabet().clone();
    let zero = RationalFn::zero(&alph);
    let one = RationalFn::one(&alph);
    let mut ident = vec![vec![zero.clone(); d]; d];
    for (i, row) in ident.iter_mut().enumerate() {
        row[i] = one.clone();
    }
    let flat = |p: &[Vec<RationalFn>]| -> Vec<RationalFn> {
        p.iter().flatten().cloned().collect()
    };
    let mut powers: Vec<Vec<Vec<RationalFn>>> = vec![ident];
    loop {
        let next = mat_mul(m, powers.last().unwrap());
        // Is `next` a linear combination of the previous powers?
        let k = powers.len();
        let target = flat(&next);
        let rows: Vec<Vec<RationalFn>> = (0..d * d)
            .map(|r| (0..k).map(|c| flat(&powers[c])[r].clone()).collect())
            .collect();
        if let Some(coefs) = linalg::solve(&rows, &target) {
            let mut p: Vec<RationalFn> = coefs.iter().map(|c| c.neg()).collect();
            p.push(one);
            return Ok(p);
        }
        assert!(k <= d, "Cayley–Hamilton bounds the minimal polynomial degree");
        powers.push(next);
    }
}

fn poly_trim(p: &mut Vec<RationalFn>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_rem(a: &[RationalFn], b: &[RationalFn]) -> Vec<RationalFn> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("nonzero leading coefficient");
    while r.len() > db {
        let factor = r.last().unwrap().mul(&lead_inv);
        let shift = r.len() - 1 - db;
        for k in 0..=db {
            let t = b[k].mul(&factor);
            r[shift + k] = r[shift + k].sub(&t);
        }
        r.pop();
        poly_trim(&mut r);
    }
    r
}

/// Squarefreeness over the rational-function field: `gcd(p, p')` is a
/// nonzero constant.
pub(crate) fn squarefree(p: &[RationalFn]) -> bool {
    if p.len() <= 2 {
        return true;
    }
    let alph = p[0].alphabet().clone();
    let deriv: Vec<RationalFn> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c.mul(&RationalFn::from_int(&alph, k as i64)))
        .collect();
    let mut a = p.to_vec();
    let mut b = deriv;
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    a.len() == 1
}

pub(crate) fn to_c64(c: &GaussianRational) -> Complex64 {
    Complex64::new(
        c.re.to_f64().expect("rational fits in f64"),
        c.im.to_f64().expect("rational fits in f64"),
    )
}

/// Roots of a monic complex polynomial (coefficients in increasing
/// degree) by Durand–Kerner iteration.
pub(crate) fn polynomial_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let deg = coeffs.len() - 1;
    if deg == 0 {
        return Vec::new();
    }
    let eval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    let radius = 1.0
        + coeffs[..deg]
            .iter()
            .map(|c| c.norm())
            .fold(0.0f64, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| radius * seed.powu(k as u32 + 1))
        .collect();
    for _ in 0..400 {
        let mut moved = 0.0f64;
        for i in 0..deg {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-14 * radius {
            break;
        }
    }
    z
}

fn max_abs(m: &CMatrix) -> f64 {
    m.iter()
        .flatten()
        .map(|c| c.norm())
        .fold(0.0f64, f64::max)
}

fn cmat_mul(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let d = a.len();
    let mut out = vec![vec![Complex64::new(0.0, 0.0); d]; d];
    for i in 0..d {
        for k in 0..d {
            let aik = a[i][k];
            for j in 0..d {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

/// Solve `A X = B` by Gaussian elimination with partial pivoting; `None`
/// when `A` is numerically singular.
fn solve_multi(a: &CMatrix, b: &CMatrix) -> Option<CMatrix> {
    let d = a.len();
    let cols = b[0].len();
    let mut aug: CMatrix = (0..d)
        .map(|i| {
            let mut row = a[i].clone();
            row.extend(b[i].iter().copied());
            row
        })
        .collect();
    let scale = max_abs(a).max(1e-300);
    for c in 0..d {
        let (p, mag) = (c..d)
            .map(|r| (r, aug[r][c].norm()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if mag < 1e-12 * scale {
            return None;
        }
        aug.swap(c, p);
        let inv = 1.0 / aug[c][c];
        for j in c..d + cols {
            aug[c][j] *= inv;
        }
        for r in 0..d {
            if r != c && aug[r][c].norm() > 0.0 {
                let f = aug[r][c];
                for j in c..d + cols {
                    let t = f * aug[c][j];
                    aug[r][j] -= t;
                }
            }
        }
    }
    Some((0..d).map(|i| aug[i][d..].to_vec()).collect())
}

/// Orthonormal-ish basis of the numeric null space of `A`.
fn null_space(a: &CMatrix, tol: f64) -> Vec<Vec<Complex64>> {
    let rows = a.len();
    let cols = a[0].len();
    let mut m = a.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let (p, mag) = (r..rows)
            .map(|i| (i, m[i][c].norm()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap_or((r, 0.0));
        if mag < tol {
            continue;
        }
        m.swap(r, p);
        let inv = 1.0 / m[r][c];
        for j in 0..cols {
            m[r][j] *= inv;
        }
        for i in 0..rows {
            if i != r {
                let f = m[i][c];
                if f.norm() > 0.0 {
                    for j in 0..cols {
                        let t = f * m[r][j];
                        m[i][j] -= t;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Complex64::new(0.0, 0.0); cols];
        v[free] = Complex64::new(1.0, 0.0);
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[row][free];
        }
        basis.push(v);
    }
    basis
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
pub fn symmetric_eigenvalues(m: &[Vec<f64>]) -> Vec<f64> {
    let d = m.len();
    let mut a: Vec<Vec<f64>> = m.to_vec();
    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..d {
            for j in i + 1..d {
                off += a[i][j] * a[i][j];
            }
        }
        if off.sqrt() < 1e-13 * (1.0 + max_abs_f64(&a)) {
            break;
        }
        for p in 0..d {
            for q in p + 1..d {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..d {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..d {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..d).map(|i| a[i][i]).collect()
}

fn max_abs_f64(m: &[Vec<f64>]) -> f64 {
    m.iter().flatten().map(|x| x.abs()).fold(0.0, f64::max)
}

/// A numeric witness that a commuting family lies in the polynomial ring
/// generated by one element.
pub struct PolyGenerator {
    /// The generator, exact, as a regular-representation matrix.
    pub b: Vec<Vec<GaussianRational>>,
    /// Exact spectral scale divisor applied before fitting: the fitted
    /// polynomials are in the variable `b/scale`.
    pub scale: f64,
    /// Power-basis coefficients fitted for each input sample.
    pub fitted: Vec<Vec<Complex64>>,
    /// Largest entrywise deviation `max_j ‖p_j(b) − T_j‖_max`.
    pub residual: f64,
}

fn constant_matrix(
    table: &BasisTable,
    t: &AlgElem,
) -> Result<Vec<Vec<GaussianRational>>, IntegrabilityError> {
    let m = table.regular_representation(t)?;
    m.iter()
        .map(|row| {
            row.iter()
                .map(|c| {
                    c.constant_value().ok_or_else(|| {
                        IntegrabilityError::NonConstantCoefficient(format!("{c}"))
                    })
                })
                .collect()
        })
        .collect()
}

/// Form a random rational-coefficient combination `b` of the sampled
/// operators, compute its eigenbasis numerically (eigenvalues from the
/// exact minimal polynomial, eigenvectors by elimination), and fit each
/// sample as a polynomial in `b` by interpolation on `b`'s spectrum.
pub fn find_polynomial_generator(
    table: &BasisTable,
    samples: &[AlgElem],
    seed: u64,
) -> Result<PolyGenerator, IntegrabilityError> {
    assert!(!samples.is_empty(), "at least one sample required");
    let alph = table.pres.loop_factor.alphabet().clone();
    let mats: Vec<Vec<Vec<GaussianRational>>> = samples
        .iter()
        .map(|t| constant_matrix(table, t))
        .collect::<Result<_, _>>()?;
    let d = mats[0].len();
    let cmats: Vec<CMatrix> = mats
        .iter()
        .map(|m| m.iter().map(|r| r.iter().map(to_c64).collect()).collect())
        .collect();
    // The inputs must commute pairwise for a common eigenbasis to exist.
    let scale_in = cmats.iter().map(max_abs).fold(1.0f64, f64::max);
    for i in 0..cmats.len() {
        for j in i + 1..cmats.len() {
            let ab = cmat_mul(&cmats[i], &cmats[j]);
            let ba = cmat_mul(&cmats[j], &cmats[i]);
            let dev = ab
                .iter()
                .flatten()
                .zip(ba.iter().flatten())
                .map(|(x, y)| (x - y).norm())
                .fold(0.0f64, f64::max);
            if dev > 1e-9 * scale_in * scale_in {
                return Err(IntegrabilityError::NonCommutingSamples);
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..8 {
        // Exact random combination.
        let mut b = vec![vec![GaussianRational::zero(); d]; d];
        for m in &mats {
            let w = GaussianRational::from_int(rng.gen_range(1..=16));
            for i in 0..d {
                for j in 0..d {
                    let mut term = m[i][j].clone();
                    term *= &w;
                    b[i][j] += &term;
                }
            }
        }
        // Exact minimal polynomial; its roots are the distinct
        // eigenvalues.
        let b_rf: Vec<Vec<RationalFn>> = b
            .iter()
            .map(|row| row.iter().map(|c| RationalFn::constant(&alph, c.clone())).collect())
            .collect();
        let minp = minimal_polynomial(&b_rf)?;
        if !squarefree(&minp) {
            continue; // combination not diagonalisable: resample
        }
        let coeffs: Vec<Complex64> = minp
            .iter()
            .map(|c| {
                c.constant_value()
                    .map(|g| to_c64(&g))
                    .ok_or_else(|| IntegrabilityError::NonConstantCoefficient(format!("{c}")))
            })
            .collect::<Result<_, _>>()?;
        let roots = polynomial_roots(&coeffs);

        // Work with the spectrally rescaled generator to keep the
        // interpolation well conditioned.
        let scale = roots.iter().map(|r| r.norm()).fold(1.0f64, f64::max);
        let bc: CMatrix = b
            .iter()
            .map(|row| row.iter().map(|c| to_c64(c) / scale).collect())
            .collect();
        let nodes: Vec<Complex64> = roots.iter().map(|r| r / scale).collect();

        // Eigenbasis: null spaces of b − λ𝟙.
        let tol = 1e-8 * max_abs(&bc).max(1.0);
        let mut columns: Vec<Vec<Complex64>> = Vec::new();
        let mut owner: Vec<usize> = Vec::new();
        for (k, lam) in nodes.iter().enumerate() {
            let mut shifted = bc.clone();
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] -= lam;
            }
            for v in null_space(&shifted, tol) {
                columns.push(v);
                owner.push(k);
            }
        }
        if columns.len() != d {
            continue 'attempt;
        }
        let vmat: CMatrix = (0..d)
            .map(|i| (0..d).map(|c| columns[c][i]).collect())
            .collect();
        let mut ident = vec![vec![Complex64::new(0.0, 0.0); d]; d];
        for (i, row) in ident.iter_mut().enumerate() {
            row[i] = Complex64::new(1.0, 0.0);
        }
        let Some(vinv) = solve_multi(&vmat, &ident) else {
            continue 'attempt;
        };

        let mut fitted = Vec::new();
        let mut residual = 0.0f64;
        for tmat in &cmats {
            let diag = cmat_mul(&vinv, &cmat_mul(tmat, &vmat));
            // Interpolation values: eigenspace averages of the diagonal.
            let mut vals = vec![Complex64::new(0.0, 0.0); nodes.len()];
            let mut counts = vec![0usize; nodes.len()];
            for (c, &k) in owner.iter().enumerate() {
                vals[k] += diag[c][c];
                counts[k] += 1;
            }
            for (v, &c) in vals.iter_mut().zip(&counts) {
                *v /= c as f64;
            }
            let poly = newton_fit(&nodes, &vals);
            // Residual in the original operator, entrywise max-norm.
            let p = horner_matrix(&bc, &poly);
            let dev = p
                .iter()
                .flatten()
                .zip(tmat.iter().flatten())
                .map(|(x, y)| (x - y).norm())
                .fold(0.0f64, f64::max);
            residual = residual.max(dev);
            fitted.push(poly);
        }
        return Ok(PolyGenerator { b, scale, fitted, residual });
    }
    Err(IntegrabilityError::DegenerateSpectrum)
}

/// Newton interpolation on distinct nodes, expanded to power-basis
/// coefficients.
fn newton_fit(nodes: &[Complex64], vals: &[Complex64]) -> Vec<Complex64> {
    let n = nodes.len();
    // Divided differences.
    let mut dd = vals.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
        }
    }
    // Expand ∑ dd[k]·∏_{j<k}(x − node_j).
    let mut poly = vec![Complex64::new(0.0, 0.0); n];
    let mut basis = vec![Complex64::new(0.0, 0.0); n];
    basis[0] = Complex64::new(1.0, 0.0);
    let mut basis_len = 1;
    for k in 0..n {
        for j in 0..basis_len {
            poly[j] += dd[k] * basis[j];
        }
        if k + 1 < n {
            // basis *= (x − nodes[k])
            for j in (0..basis_len).rev() {
                basis[j + 1] += basis[j];
                basis[j] *= -nodes[k];
            }
            basis_len += 1;
        }
    }
    poly
}

fn horner_matrix(b: &CMatrix, poly: &[Complex64]) -> CMatrix {
    let d = b.len();
    let mut acc = vec![vec![Complex64::new(0.0, 0.0); d]; d];
    for &c in poly.iter().rev() {
        acc = cmat_mul(&acc, b);
        for (i, row) in acc.iter_mut().enumerate() {
            row[i] += c;
        }
    }
    acc
}
