//! Sparse multivariate polynomials over the Gaussian rationals.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors under the
//! graded lexicographic order, so the "last" entry is the leading term.
//! Root symbols of the alphabet (formal square roots) are kept reduced:
//! multiplication rewrites `r^2` to its defining polynomial, so canonical
//! representatives are at most linear in every root symbol.

use super::alphabet::{Alphabet, VarId};
use super::gaussian::GaussianRational;
use super::ScalarError;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;
use std::sync::Arc;

/// An exponent vector, ordered by total degree first and lexicographically
/// within a degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Box<[u16]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0u16; nvars].into_boxed_slice())
    }

    pub fn var(nvars: usize, id: VarId) -> Self {
        let mut e = vec![0u16; nvars];
        e[id] = 1;
        Monomial(e.into_boxed_slice())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Componentwise division; `None` when some exponent of `other` exceeds
    /// the corresponding exponent of `self`.
    fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            if a < b {
                return None;
            }
            e.push(a - b);
        }
        Some(Monomial(e.into_boxed_slice()))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse multivariate polynomial with Gaussian-rational coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly {
    pub alph: Arc<Alphabet>,
    pub terms: BTreeMap<Monomial, GaussianRational>,
}

impl MultiPoly {
    pub fn zero(alph: &Arc<Alphabet>) -> Self {
        MultiPoly { alph: alph.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(alph: &Arc<Alphabet>, c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(alph.len()), c);
        }
        MultiPoly { alph: alph.clone(), terms }
    }

    pub fn one(alph: &Arc<Alphabet>) -> Self {
        Self::constant(alph, GaussianRational::one())
    }

    pub fn var(alph: &Arc<Alphabet>, name: &str) -> Result<Self, ScalarError> {
        let id = alph
            .index_of(name)
            .ok_or_else(|| ScalarError::UnknownVariable(name.to_string()))?;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(alph.len(), id), GaussianRational::one());
        Ok(MultiPoly { alph: alph.clone(), terms })
    }

    pub fn from_terms(
        alph: &Arc<Alphabet>,
        terms: impl IntoIterator<Item = (Monomial, GaussianRational)>,
    ) -> Self {
        let mut p = Self::zero(alph);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p.reduce_roots();
        p
    }

    fn add_term(&mut self, m: Monomial, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    /// The constant value, when constant.
    pub fn constant_value(&self) -> Option<GaussianRational> {
        if self.is_zero() {
            Some(GaussianRational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading (graded-lex largest) term.
    pub fn leading(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    pub fn degree_in(&self, v: VarId) -> u16 {
        self.terms.keys().map(|m| m.0[v]).max().unwrap_or(0)
    }

    pub fn involves(&self, v: VarId) -> bool {
        self.terms.keys().any(|m| m.0[v] > 0)
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            alph: self.alph.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    /// Exchange two variables in every monomial (a simultaneous renaming,
    /// unlike sequential substitution which would collapse them).
    pub fn swap_vars(&self, a: VarId, b: VarId) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.to_vec();
                e.swap(a, b);
                (Monomial(e.into_boxed_slice()), c.clone())
            })
            .collect::<Vec<_>>();
        MultiPoly::from_terms(&self.alph, terms)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.alph, other.alph, "alphabet mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.alph);
        }
        MultiPoly {
            alph: self.alph.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.alph, other.alph, "alphabet mismatch");
        let mut out = Self::zero(&self.alph);
        if self.is_zero() || other.is_zero() {
            return out;
        }
        // Multiply the smaller support into the larger one.
        let (a, b) = if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out.reduce_roots();
        out
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.alph);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Rewrite `r^2 -> square(r)` for every root symbol until all exponents
    /// of root symbols are below two.
    fn reduce_roots(&mut self) {
        let roots: Vec<VarId> =
            (0..self.alph.len()).filter(|&v| self.alph.is_root(v)).collect();
        if roots.is_empty() {
            return;
        }
        loop {
            let mut offending: Option<(Monomial, VarId)> = None;
            'scan: for m in self.terms.keys() {
                for &r in &roots {
                    if m.0[r] >= 2 {
                        offending = Some((m.clone(), r));
                        break 'scan;
                    }
                }
            }
            let Some((m, r)) = offending else { break };
            let c = self.terms.remove(&m).unwrap();
            let mut e = m.0.to_vec();
            e[r] -= 2;
            let reduced = Monomial(e.into_boxed_slice());
            let square = self.alph.square_of(r).unwrap().clone();
            for (se, sc) in square {
                let sm = Monomial(se.clone().into_boxed_slice());
                self.add_term(reduced.mul(&sm), (&c).mul(&sc));
            }
        }
    }

    /// Exact multivariate division.  Returns `None` when `other` does not
    /// divide `self` in the (root-reduced) polynomial ring.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        assert!(!other.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.alph);
        let (lm, lc) = {
            let (m, c) = other.leading().unwrap();
            (m.clone(), c.clone())
        };
        let lc_inv = lc.inv();
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading().unwrap();
                (m.clone(), c.clone())
            };
            let q = rm.div(&lm)?;
            let qc = (&rc).mul(&lc_inv);
            let mut t = Self::zero(&self.alph);
            t.add_term(q, qc);
            // t may contain root symbols only linearly; products reduce.
            rem = rem.sub(&t.mul(other));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Evaluate at a full assignment (one value per variable).  Root symbols
    /// cannot be evaluated.
    pub fn eval(&self, point: &[GaussianRational]) -> Result<GaussianRational, ScalarError> {
        assert_eq!(point.len(), self.alph.len());
        for v in 0..self.alph.len() {
            if self.alph.is_root(v) && self.involves(v) {
                return Err(ScalarError::RootEvaluation);
            }
        }
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[v];
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Greatest common divisor, normalised to leading coefficient one.
    ///
    /// Uses the primitive pseudo-remainder sequence recursively: the main
    /// variable is the lowest-index variable present, coefficients are
    /// polynomials in the remaining variables, and contents are split off at
    /// every step.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let g = Self::gcd_inner(a, b);
        g.monic()
    }

    fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    fn gcd_inner(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        if a.is_constant() || b.is_constant() {
            return Self::one(&a.alph);
        }
        // Main variable: lowest-index variable occurring in either operand.
        let v = (0..a.alph.len())
            .find(|&v| a.involves(v) || b.involves(v))
            .expect("nonconstant polynomial with no variables");
        if !a.involves(v) {
            // gcd divides a, hence divides the content of b with respect to v.
            let (cb, _) = b.content_primitive(v);
            return Self::gcd_inner(a, &cb);
        }
        if !b.involves(v) {
            let (ca, _) = a.content_primitive(v);
            return Self::gcd_inner(&ca, b);
        }
        let (ca, pa) = a.content_primitive(v);
        let (cb, pb) = b.content_primitive(v);
        let cg = Self::gcd_inner(&ca, &cb);
        // Fast path: a gcd of evaluated univariate images bounds the gcd
        // degree from above (at points where a leading coefficient
        // survives), so a constant image certifies coprime primitive parts
        // and the pseudo-remainder sequence can be skipped entirely.
        if Self::coprime_by_evaluation(&pa, &pb, v) {
            return cg;
        }
        // Fast path: evaluation-interpolation gcd with trial-division
        // verification; falls back to the pseudo-remainder sequence when
        // inconclusive.
        if let Some(g) = Self::gcd_by_interpolation(&pa, &pb, v) {
            return cg.mul(&g);
        }
        // Primitive PRS on the primitive parts.
        let (mut f, mut g) = if pa.degree_in(v) >= pb.degree_in(v) { (pa, pb) } else { (pb, pa) };
        loop {
            let r = Self::pseudo_rem(&f, &g, v);
            if r.is_zero() {
                let (_, pg) = g.content_primitive(v);
                return cg.mul(&pg);
            }
            let (_, pr) = r.content_primitive(v);
            f = g;
            g = pr;
            if !g.involves(v) {
                // Degree dropped to zero: the gcd w.r.t. v is trivial.
                return cg;
            }
        }
    }

    /// Certify that two polynomials, primitive with respect to `v`, are
    /// coprime, by evaluating every other variable at sample points and
    /// taking a univariate gcd over the Gaussian rationals.  If the leading
    /// coefficients of both operands survive the evaluation and the image
    /// gcd is constant, the true gcd has `v`-degree zero; being primitive,
    /// the operands are then coprime.  Returns `false` (inconclusive) when
    /// no conclusive sample is found or a root symbol is involved.
    fn coprime_by_evaluation(a: &Self, b: &Self, v: VarId) -> bool {
        let n = a.alph.len();
        for w in 0..n {
            if a.alph.is_root(w) && (a.involves(w) || b.involves(w)) {
                return false;
            }
        }
        let da = a.degree_in(v) as usize;
        let db = b.degree_in(v) as usize;
        // A handful of deterministic sample offsets; any conclusive one
        // suffices.
        'samples: for base in [2i64, 3, 5, 11, 17] {
            let point: Vec<GaussianRational> = (0..n)
                .map(|w| GaussianRational::from_int(base + w as i64))
                .collect();
            let eval_uni = |p: &Self, deg: usize| -> Option<Vec<GaussianRational>> {
                let mut out = vec![GaussianRational::from_int(0); deg + 1];
                for (m, c) in &p.terms {
                    let mut val = c.clone();
                    for w in 0..n {
                        if w != v {
                            for _ in 0..m.0[w] {
                                val *= &point[w];
                            }
                        }
                    }
                    let k = m.0[v] as usize;
                    out[k] += &val;
                }
                if out[deg].is_zero() {
                    None // leading coefficient vanished: inconclusive point
                } else {
                    Some(out)
                }
            };
            let Some(ua) = eval_uni(a, da) else { continue 'samples };
            let Some(ub) = eval_uni(b, db) else { continue 'samples };
            if univariate_gcd_degree(ua, ub) == 0 {
                return true;
            }
        }
        false
    }

    /// Dense-interpolation gcd of two polynomials primitive with respect to
    /// the main variable `v`: evaluate the other variables one at a time,
    /// interpolate the images of the leading-coefficient-corrected gcd, and
    /// certify the candidate by exact trial division.  Returns `None`
    /// (inconclusive) when root symbols are involved or the sampling fails,
    /// in which case the caller falls back to the pseudo-remainder sequence.
    fn gcd_by_interpolation(pa: &Self, pb: &Self, v: VarId) -> Option<Self> {
        let n = pa.alph.len();
        for w in 0..n {
            if pa.alph.is_root(w) && (pa.involves(w) || pb.involves(w)) {
                return None;
            }
        }
        if !(0..n).any(|w| w != v && (pa.involves(w) || pb.involves(w))) {
            // Univariate: a direct Euclidean gcd.
            let ua = Self::dense_uni_coeffs(pa, v)?;
            let ub = Self::dense_uni_coeffs(pb, v)?;
            let g = univariate_gcd(ua, ub);
            let mut t = Self::zero(&pa.alph);
            for (deg, c) in g.into_iter().enumerate() {
                let mut e = vec![0u16; n];
                e[v] = deg as u16;
                t.add_term(Monomial(e.into_boxed_slice()), c);
            }
            return Some(t);
        }
        // Correction factor: any gcd of the leading coefficients is a
        // multiple of the gcd's leading coefficient, so imposing it on every
        // image makes the images interpolate to a polynomial.
        let lca = pa.coeffs_wrt(v).pop().unwrap();
        let lcb = pb.coeffs_wrt(v).pop().unwrap();
        let gamma = Self::gcd_inner(&lca, &lcb).monic();
        let h = Self::gcd_interp_norm(pa, pb, v, &gamma)?;
        if h.is_zero() {
            return None;
        }
        let (_, hp) = h.content_primitive(v);
        if pa.div_exact(&hp).is_some() && pb.div_exact(&hp).is_some() {
            Some(hp)
        } else {
            None
        }
    }

    /// Recursive worker for [`Self::gcd_by_interpolation`]: returns the gcd
    /// of `a` and `b` with respect to `v`, normalised to have `v`-leading
    /// coefficient `gamma` (all three evaluated consistently down the
    /// recursion).  Unlucky sample points are filtered by keeping only the
    /// minimal image degree seen; correctness is restored by the caller's
    /// trial division.
    fn gcd_interp_norm(a: &Self, b: &Self, v: VarId, gamma: &Self) -> Option<Self> {
        let n = a.alph.len();
        // Pick the evaluation variable with the smallest degree, to
        // minimise the number of interpolation points.
        let w = (0..n)
            .filter(|&w| w != v && (a.involves(w) || b.involves(w) || gamma.involves(w)))
            .min_by_key(|&w| a.degree_in(w).max(b.degree_in(w)))?
            ;
        let bound = (gamma.degree_in(w) + a.degree_in(w).min(b.degree_in(w))) as usize;
        let others_remain = (0..n)
            .any(|x| x != v && x != w && (a.involves(x) || b.involves(x) || gamma.involves(x)));

        let da = a.degree_in(v);
        let db = b.degree_in(v);
        let mut best_deg = usize::MAX;
        let mut points: Vec<GaussianRational> = Vec::new();
        let mut images: Vec<Self> = Vec::new();
        let mut k: i64 = 0;
        let mut attempts = 0usize;
        while images.len() <= bound {
            attempts += 1;
            if attempts > 8 * bound + 64 {
                return None;
            }
            // 0, 1, -1, 2, -2, ...
            let p = GaussianRational::from_int(k);
            k = if k > 0 { -k } else { 1 - k };
            let ap = a.eval_var(w, &p);
            let bp = b.eval_var(w, &p);
            if ap.degree_in(v) != da || bp.degree_in(v) != db {
                continue; // a leading coefficient vanished
            }
            let gp = gamma.eval_var(w, &p);
            if gp.is_zero() {
                continue;
            }
            let img = if others_remain {
                Self::gcd_interp_norm(&ap, &bp, v, &gp)?
            } else {
                // Univariate base case over the Gaussian rationals.
                let ua = Self::dense_uni_coeffs(&ap, v)?;
                let ub = Self::dense_uni_coeffs(&bp, v)?;
                let g = univariate_gcd(ua, ub);
                let gc = gp.constant_value()?;
                let mut t = Self::zero(&a.alph);
                for (deg, c) in g.into_iter().enumerate() {
                    let mut e = vec![0u16; n];
                    e[v] = deg as u16;
                    t.add_term(Monomial(e.into_boxed_slice()), &c * &gc);
                }
                t
            };
            let d = img.degree_in(v) as usize;
            if d == 0 {
                // The primitive parts are coprime on a good point, so the
                // gcd is the correction factor itself; the caller strips it
                // off as content.
                return Some(gamma.clone());
            }
            if d < best_deg {
                best_deg = d;
                points.clear();
                images.clear();
            }
            if d == best_deg {
                points.push(p);
                images.push(img);
            }
        }

        // Newton interpolation in `w` with polynomial values.
        let mut h = Self::zero(&a.alph);
        let mut basis = Self::one(&a.alph);
        let wpoly = {
            let mut t = Self::zero(&a.alph);
            t.add_term(Monomial::var(n, w), GaussianRational::one());
            t
        };
        for (p, f) in points.iter().zip(images.iter()) {
            let diff = f.sub(&h.eval_var(w, p));
            if !diff.is_zero() {
                let bv = basis.eval_var(w, p).constant_value()?;
                if bv.is_zero() {
                    return None;
                }
                h = h.add(&diff.scale(&bv.inv()).mul(&basis));
            }
            basis = basis.mul(&wpoly.sub(&Self::constant(&a.alph, p.clone())));
        }
        Some(h)
    }

    /// Dense univariate coefficient vector when only `v` occurs.
    fn dense_uni_coeffs(p: &Self, v: VarId) -> Option<Vec<GaussianRational>> {
        let d = p.degree_in(v) as usize;
        let mut out = vec![GaussianRational::zero(); d + 1];
        for (m, c) in &p.terms {
            for (w, &e) in m.0.iter().enumerate() {
                if w != v && e > 0 {
                    return None;
                }
            }
            out[m.0[v] as usize] += c;
        }
        Some(out)
    }

    /// Substitute a constant for one variable.
    pub fn eval_var(&self, w: VarId, val: &GaussianRational) -> Self {
        let mut out = Self::zero(&self.alph);
        for (m, c) in &self.terms {
            let e = m.0[w];
            let mut coeff = c.clone();
            for _ in 0..e {
                coeff *= val;
            }
            let mut exps = m.0.to_vec();
            exps[w] = 0;
            out.add_term(Monomial(exps.into_boxed_slice()), coeff);
        }
        out
    }

    /// Split into (content, primitive part) with respect to variable `v`:
    /// content = gcd of the coefficient polynomials of powers of `v`.
    fn content_primitive(&self, v: VarId) -> (Self, Self) {
        let coeffs = self.coeffs_wrt(v);
        let mut content = Self::zero(&self.alph);
        for c in coeffs.iter().filter(|c| !c.is_zero()) {
            content = Self::gcd_inner(&content, c);
            if content.is_constant() {
                content = Self::one(&self.alph);
                break;
            }
        }
        let content = content.monic();
        let prim = self
            .div_exact(&content)
            .expect("content must divide the polynomial");
        (content, prim)
    }

    /// Dense coefficient list with respect to `v`: entry `k` is the
    /// coefficient of `v^k`, a polynomial not involving `v`.
    fn coeffs_wrt(&self, v: VarId) -> Vec<Self> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![Self::zero(&self.alph); d + 1];
        for (m, c) in &self.terms {
            let k = m.0[v] as usize;
            let mut e = m.0.to_vec();
            e[v] = 0;
            out[k].add_term(Monomial(e.into_boxed_slice()), c.clone());
        }
        out
    }

    /// Pseudo-remainder of `f` by `g` with respect to variable `v`:
    /// `lc(g)^(deg f - deg g + 1) * f = q*g + r` with `deg_v r < deg_v g`.
    fn pseudo_rem(f: &Self, g: &Self, v: VarId) -> Self {
        let dg = g.degree_in(v);
        let gc = g.coeffs_wrt(v);
        let lcg = gc[dg as usize].clone();
        let mut r = f.clone();
        while !r.is_zero() && r.degree_in(v) >= dg {
            let dr = r.degree_in(v);
            let rc = r.coeffs_wrt(v);
            let lead = rc[dr as usize].clone();
            // r <- lc(g)*r - lead * v^(dr-dg) * g
            let mut shift = Self::zero(&f.alph);
            shift.add_term(Monomial::var(f.alph.len(), v), GaussianRational::one());
            let shift = shift.pow((dr - dg) as u32);
            r = r.mul(&lcg).sub(&lead.mul(&shift).mul(g));
        }
        r
    }

    /// Complex conjugation of the coefficient and every symbol, under the
    /// alphabet's reality classes.  Because unit-modulus symbols conjugate
    /// to their inverses, the result is a pair `(p, m)` representing the
    /// rational function `p / m` with `m` a monomial in the unit-modulus
    /// symbols.
    pub fn conj(&self) -> Result<(Self, Monomial), ScalarError> {
        use super::alphabet::Reality;
        let n = self.alph.len();
        // Highest power of each unit-modulus symbol, used to clear inverses.
        let mut maxdeg = vec![0u16; n];
        for m in self.terms.keys() {
            for v in 0..n {
                if self.alph.reality(v) == Reality::UnitModulus && m.0[v] > maxdeg[v] {
                    maxdeg[v] = m.0[v];
                }
            }
        }
        for v in 0..n {
            if self.alph.is_root(v) && self.involves(v) {
                // A root symbol conjugates to itself only when declared Real.
                if self.alph.reality(v) != Reality::Real {
                    return Err(ScalarError::UnknownReality(self.alph.name(v).to_string()));
                }
            }
        }
        let mut out = Self::zero(&self.alph);
        for (m, c) in &self.terms {
            let mut e = m.0.to_vec();
            for v in 0..n {
                if self.alph.reality(v) == Reality::UnitModulus {
                    e[v] = maxdeg[v] - e[v];
                }
            }
            out.add_term(Monomial(e.into_boxed_slice()), c.conj());
        }
        Ok((out, Monomial(maxdeg.into_boxed_slice())))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{}", c)?;
            } else {
                if !c.is_one() {
                    write!(f, "{}*", c)?;
                }
                let mut firstv = true;
                for (v, &e) in m.0.iter().enumerate() {
                    if e > 0 {
                        if !firstv {
                            write!(f, "*")?;
                        }
                        firstv = false;
                        if e == 1 {
                            write!(f, "{}", self.alph.name(v))?;
                        } else {
                            write!(f, "{}^{}", self.alph.name(v), e)?;
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Monic gcd of two dense univariate polynomials over the Gaussian
/// rationals (coefficient vectors in increasing degree order), computed with
/// the Euclidean algorithm.  An empty vector is the zero polynomial.
fn univariate_gcd(a: Vec<GaussianRational>, b: Vec<GaussianRational>) -> Vec<GaussianRational> {
    fn trim(v: &mut Vec<GaussianRational>) {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    }
    let (mut f, mut g) = (a, b);
    trim(&mut f);
    trim(&mut g);
    loop {
        if g.is_empty() {
            if let Some(lead) = f.last().cloned() {
                let inv = lead.inv();
                for c in &mut f {
                    *c *= &inv;
                }
            }
            return f;
        }
        if f.len() < g.len() {
            std::mem::swap(&mut f, &mut g);
            continue;
        }
        let lead_inv = g.last().unwrap().clone().inv();
        while f.len() >= g.len() {
            let factor = f.last().unwrap().clone() * lead_inv.clone();
            let shift = f.len() - g.len();
            for (k, c) in g.iter().enumerate() {
                let t = factor.clone() * c.clone();
                f[shift + k] -= &t;
            }
            trim(&mut f);
        }
        std::mem::swap(&mut f, &mut g);
    }
}

/// Degree of the univariate gcd; zero-degree means coprime.
fn univariate_gcd_degree(a: Vec<GaussianRational>, b: Vec<GaussianRational>) -> usize {
    univariate_gcd(a, b).len().saturating_sub(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Reality;

    fn ab() -> Arc<Alphabet> {
        Alphabet::real(&["x", "y"])
    }

    #[test]
    fn arithmetic_and_exact_division() {
        let a = ab();
        let x = MultiPoly::var(&a, "x").unwrap();
        let y = MultiPoly::var(&a, "y").unwrap();
        let p = x.add(&y); // x + y
        let q = x.sub(&y); // x - y
        let prod = p.mul(&q); // x^2 - y^2
        assert_eq!(prod, x.mul(&x).sub(&y.mul(&y)));
        assert_eq!(prod.div_exact(&p), Some(q.clone()));
        assert_eq!(prod.div_exact(&q), Some(p.clone()));
        assert!(prod.add(&MultiPoly::one(&a)).div_exact(&p).is_none());
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = ab();
        let x = MultiPoly::var(&a, "x").unwrap();
        let y = MultiPoly::var(&a, "y").unwrap();
        let f = x.add(&y).pow(2).mul(&x.sub(&y)); // (x+y)^2 (x-y)
        let g = x.add(&y).mul(&x.mul(&x)); // (x+y) x^2
        let d = MultiPoly::gcd(&f, &g);
        assert_eq!(d, x.add(&y));
    }

    #[test]
    fn gcd_coprime_is_one() {
        let a = ab();
        let x = MultiPoly::var(&a, "x").unwrap();
        let y = MultiPoly::var(&a, "y").unwrap();
        let d = MultiPoly::gcd(&x.add(&MultiPoly::one(&a)), &y.mul(&y).add(&x));
        assert!(d.is_constant());
    }

    #[test]
    fn root_symbol_reduction() {
        // r^2 -> x^2 + 1, so (r + x)(r - x) = 1 + x^2 - x^2 = 1.
        let base = Alphabet::real(&["x"]);
        let x_sq_plus_1 = vec![
            (vec![2u16], GaussianRational::one()),
            (vec![0u16], GaussianRational::one()),
        ];
        let a = base.with_root("r", Reality::Real, x_sq_plus_1);
        let x = MultiPoly::var(&a, "x").unwrap();
        let r = MultiPoly::var(&a, "r").unwrap();
        let prod = r.add(&x).mul(&r.sub(&x));
        assert_eq!(prod, MultiPoly::one(&a));
        // r^3 reduces to (x^2+1) r.
        let r3 = r.pow(3);
        let expect = r.mul(&x.mul(&x).add(&MultiPoly::one(&a)));
        assert_eq!(r3, expect);
    }

    #[test]
    fn conjugation_with_unit_modulus_symbols() {
        // conj(q + 1) = 1/q + 1 = (1 + q)/q.
        let a = Alphabet::new(&[("q", Reality::UnitModulus)]);
        let q = MultiPoly::var(&a, "q").unwrap();
        let p = q.add(&MultiPoly::one(&a));
        let (num, den) = p.conj().unwrap();
        assert_eq!(num, p);
        assert_eq!(den, Monomial(vec![1u16].into_boxed_slice()));
    }
}
