//! Span tests for Yang–Baxter-type relations and the two-strand
//! idempotent decomposition.

use super::presentation::{FAM_E, FAM_S};
use super::rewrite::{AlgElem, RuleSet};
use super::table::BasisTable;
use super::word::{GenSym, Word};
use super::PresentedError;
use crate::scalar::{linalg, GaussianRational, RationalFn, ScalarError};
use std::collections::{BTreeSet, HashMap};

/// Shift every generator index of `e` by `offset` (e.g. embed a 2-box
/// element written at index 1 so that it acts at index `1 + offset`).
pub fn shift_elem(e: &AlgElem, offset: u8) -> AlgElem {
    AlgElem {
        terms: e
            .terms
            .iter()
            .map(|(w, c)| {
                let shifted = Word(w.0.iter().map(|g| GenSym::new(g.fam, g.idx + offset)).collect());
                (shifted, c.clone())
            })
            .collect(),
    }
}

/// Result of the span test: for each ordered triple of two-box basis
/// elements `(x, y, z)`, either the coefficients expressing `x₁y₂z₁` over
/// the products `{a₂b₁c₂}`, or `None` if that triple is insoluble.
pub struct YbrSpanOutcome {
    pub tables: Vec<Option<Vec<RationalFn>>>,
    pub failing: Vec<(usize, usize, usize)>,
}

impl YbrSpanOutcome {
    pub fn solvable(&self) -> bool {
        self.failing.is_empty()
    }
}

/// For every triple `(x, y, z)` from `two_box` (elements written at strand
/// index 1), test whether `x₁ y₂ z₁` lies in the span of all products
/// `a₂ b₁ c₂`, working in normal forms of the given rewriting system.
pub fn ybr_span_test(rules: &RuleSet, two_box: &[AlgElem]) -> YbrSpanOutcome {
    let mut cache = HashMap::new();
    let k = two_box.len();
    let at1: Vec<AlgElem> = two_box.to_vec();
    let at2: Vec<AlgElem> = two_box.iter().map(|e| shift_elem(e, 1)).collect();

    let mul = |a: &AlgElem, b: &AlgElem, cache: &mut HashMap<Word, AlgElem>| -> AlgElem {
        let mut acc = AlgElem::zero();
        for (wa, ca) in &a.terms {
            for (wb, cb) in &b.terms {
                let red = rules.reduce_word(&wa.concat(wb), cache);
                let c = ca.mul(cb);
                for (rw, rc) in &red.terms {
                    acc.add_term(rw.clone(), rc.mul(&c));
                }
            }
        }
        acc
    };

    let mut span = Vec::with_capacity(k * k * k);
    let mut lhs = Vec::with_capacity(k * k * k);
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                let ab = mul(&at2[a], &at1[b], &mut cache);
                span.push(mul(&ab, &at2[c], &mut cache));
                let xy = mul(&at1[a], &at2[b], &mut cache);
                lhs.push(mul(&xy, &at1[c], &mut cache));
            }
        }
    }

    // Shared word coordinates.
    let mut words: BTreeSet<Word> = BTreeSet::new();
    for e in span.iter().chain(lhs.iter()) {
        words.extend(e.terms.keys().cloned());
    }
    let words: Vec<Word> = words.into_iter().collect();
    let widx: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let zero = RationalFn::zero(&rules.alph);
    let to_vec = |e: &AlgElem| -> Vec<RationalFn> {
        let mut v = vec![zero.clone(); words.len()];
        for (w, c) in &e.terms {
            v[widx[w]] = c.clone();
        }
        v
    };

    // Matrix with one row per word coordinate, one column per span element.
    let span_vecs: Vec<Vec<RationalFn>> = span.iter().map(to_vec).collect();
    let mat: Vec<Vec<RationalFn>> = (0..words.len())
        .map(|r| span_vecs.iter().map(|col| col[r].clone()).collect())
        .collect();

    let mut tables = Vec::with_capacity(lhs.len());
    let mut failing = Vec::new();
    for (t, e) in lhs.iter().enumerate() {
        let sol = linalg::solve(&mat, &to_vec(e));
        if sol.is_none() {
            failing.push((t / (k * k), (t / k) % k, t % k));
        }
        tables.push(sol);
    }
    YbrSpanOutcome { tables, failing }
}

/// The eigenvalues and spectral idempotents of the second generator on two
/// strands: `s = p₁𝕡₁ + p₂𝕡₂` with `𝕡₀ = e/δ` completing the resolution
/// of the identity.
pub struct Ps2Idempotents {
    pub p1: GaussianRational,
    pub p2: GaussianRational,
    pub proj0: AlgElem,
    pub proj1: AlgElem,
    pub proj2: AlgElem,
}

/// Decompose the two-strand algebra with parameters `α` (a concrete
/// Gaussian rational such that `α² + 4` has an exact square root) and `δ`
/// (possibly symbolic).  Verifies completeness, mutual orthogonality, and
/// the spectral decomposition of `s` before returning.
pub fn ps2_idempotents(
    table: &BasisTable,
    alpha: &GaussianRational,
    delta: &RationalFn,
) -> Result<Ps2Idempotents, PresentedError> {
    let alph = &table.pres.alph;
    let disc = alpha.clone() * alpha.clone() + GaussianRational::from_int(4);
    let root = disc.sqrt_exact().ok_or(ScalarError::RootEvaluation)?;
    if root.is_zero() {
        // α = ±2i: the two eigenvalues collide.
        return Err(ScalarError::DivisionByZero.into());
    }
    let half = GaussianRational::from_ratio(1, 2);
    let p1 = (alpha.clone() + root.clone()) * half.clone();
    let p2 = (alpha.clone() - root) * half;

    let one = table.one();
    let e = table.gen_elem(FAM_E, 1);
    let s = table.gen_elem(FAM_S, 1);
    let inv_d = RationalFn::one(alph).div(delta)?;
    let proj0 = e.scale(&inv_d);
    // On the complement of 𝕡₀, s has eigenvalues p₁ and p₂:
    // 𝕡ᵢ = (s − pⱼ(𝟙 − 𝕡₀)) / (pᵢ − pⱼ).
    let top = one.sub(&proj0);
    let gap = RationalFn::constant(alph, p1.clone() - p2.clone());
    let gap_inv = RationalFn::one(alph).div(&gap)?;
    let proj1 = s
        .sub(&top.scale(&RationalFn::constant(alph, p2.clone())))
        .scale(&gap_inv);
    let proj2 = s
        .sub(&top.scale(&RationalFn::constant(alph, p1.clone())))
        .scale(&gap_inv.neg());

    // Certify the decomposition inside the table.
    let projs = [&proj0, &proj1, &proj2];
    for (i, a) in projs.iter().enumerate() {
        for (j, b) in projs.iter().enumerate() {
            let prod = table.mul(a, b);
            let expect = if i == j { (*a).clone() } else { AlgElem::zero() };
            if !table.reduce(&prod.sub(&expect)).is_zero() {
                return Err(PresentedError::RelationNotSatisfied(format!(
                    "idempotent orthogonality p{i}·p{j}"
                )));
            }
        }
    }
    let total = proj0.add(&proj1).add(&proj2);
    if !table.reduce(&total.sub(&one)).is_zero() {
        return Err(PresentedError::RelationNotSatisfied("idempotent completeness".into()));
    }
    let spectral = proj1
        .scale(&RationalFn::constant(alph, p1.clone()))
        .add(&proj2.scale(&RationalFn::constant(alph, p2.clone())));
    if !table.reduce(&spectral.sub(&s)).is_zero() {
        return Err(PresentedError::RelationNotSatisfied("spectral decomposition of s".into()));
    }
    Ok(Ps2Idempotents { p1, p2, proj0, proj1, proj2 })
}
