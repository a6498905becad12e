//! Reduced multivariate rational functions.
//!
//! A [`RationalFn`] is a quotient of two [`MultiPoly`]s kept in canonical
//! form: the denominator is nonzero, free of root symbols (root symbols in
//! a denominator are cleared by conjugate rationalisation), coprime to the
//! numerator, and normalised to leading coefficient one.  Equality of
//! canonical forms is therefore structural equality.

use super::alphabet::Alphabet;
use super::gaussian::GaussianRational;
use super::poly::{Monomial, MultiPoly};
use super::{ScalarError, VarId};
use std::fmt;
use std::ops::Div;
use std::sync::Arc;

#[derive(Clone, PartialEq, Debug)]
pub struct RationalFn {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFn {
    /// Build and canonicalise `num/den`.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if num.alph != den.alph {
            return Err(ScalarError::AlphabetMismatch);
        }
        let mut f = RationalFn { num, den };
        f.rationalise_roots();
        f.reduce();
        Ok(f)
    }

    pub fn zero(alph: &Arc<Alphabet>) -> Self {
        RationalFn { num: MultiPoly::zero(alph), den: MultiPoly::one(alph) }
    }

    pub fn one(alph: &Arc<Alphabet>) -> Self {
        RationalFn { num: MultiPoly::one(alph), den: MultiPoly::one(alph) }
    }

    pub fn constant(alph: &Arc<Alphabet>, c: GaussianRational) -> Self {
        RationalFn { num: MultiPoly::constant(alph, c), den: MultiPoly::one(alph) }
    }

    pub fn from_int(alph: &Arc<Alphabet>, n: i64) -> Self {
        Self::constant(alph, GaussianRational::from_int(n))
    }

    pub fn from_ratio(alph: &Arc<Alphabet>, p: i64, q: i64) -> Self {
        Self::constant(alph, GaussianRational::from_ratio(p, q))
    }

    pub fn var(alph: &Arc<Alphabet>, name: &str) -> Result<Self, ScalarError> {
        Ok(RationalFn { num: MultiPoly::var(alph, name)?, den: MultiPoly::one(alph) })
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let den = MultiPoly::one(&p.alph);
        RationalFn { num: p, den }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.num.alph
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_constant() && self.num == self.den
    }

    /// The constant value when the function is constant.
    pub fn constant_value(&self) -> Option<GaussianRational> {
        let n = self.num.constant_value()?;
        let d = self.den.constant_value()?;
        Some(n.div(d))
    }

    /// Clear root symbols out of the denominator by multiplying numerator
    /// and denominator with the conjugate `A - B r` for `den = A + B r`.
    fn rationalise_roots(&mut self) {
        let alph = self.num.alph.clone();
        for v in 0..alph.len() {
            if alph.is_root(v) && self.den.involves(v) {
                // Split den = A + B*r with A, B free of r (den is reduced,
                // so the exponent of r is at most one).
                let mut a = MultiPoly::zero(&alph);
                let mut b = MultiPoly::zero(&alph);
                for (m, c) in &self.den.terms {
                    let mut e = m.0.to_vec();
                    if e[v] == 1 {
                        e[v] = 0;
                        b = b.add(&MultiPoly::from_terms(
                            &alph,
                            [(Monomial(e.into_boxed_slice()), c.clone())],
                        ));
                    } else {
                        a = a.add(&MultiPoly::from_terms(
                            &alph,
                            [(Monomial(e.into_boxed_slice()), c.clone())],
                        ));
                    }
                }
                let r = MultiPoly::var(&alph, alph.name(v)).unwrap();
                let conj = a.sub(&b.mul(&r));
                self.num = self.num.mul(&conj);
                self.den = self.den.mul(&conj);
                debug_assert!(!self.den.involves(v));
            }
        }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = MultiPoly::one(&self.num.alph);
            return;
        }
        if !self.den.is_constant() {
            let g = MultiPoly::gcd(&self.num, &self.den);
            if !g.is_constant() {
                if let (Some(n), Some(d)) = (self.num.div_exact(&g), self.den.div_exact(&g)) {
                    self.num = n;
                    self.den = d;
                }
            }
        }
        self.normalise_monic();
    }

    /// Make the denominator leading coefficient one.
    fn normalise_monic(&mut self) {
        let lc = self.den.leading().unwrap().1.clone();
        if !lc.is_one() {
            let inv = lc.inv();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn neg(&self) -> Self {
        RationalFn { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (num, den) = if self.den == other.den {
            (self.num.add(&other.num), self.den.clone())
        } else {
            // Use gcd of denominators to keep the common denominator small.
            let g = MultiPoly::gcd(&self.den, &other.den);
            if g.is_constant() {
                (
                    self.num.mul(&other.den).add(&other.num.mul(&self.den)),
                    self.den.mul(&other.den),
                )
            } else {
                let da = self.den.div_exact(&g).unwrap();
                let db = other.den.div_exact(&g).unwrap();
                (
                    self.num.mul(&db).add(&other.num.mul(&da)),
                    self.den.mul(&db),
                )
            }
        };
        let mut f = RationalFn { num, den };
        f.reduce();
        f
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.num.alph);
        }
        // Cross-cancel before multiplying to keep degrees down.
        let mut fully_cancelled = true;
        let g1 = MultiPoly::gcd(&self.num, &other.den);
        let g2 = MultiPoly::gcd(&other.num, &self.den);
        let (na, db) = if g1.is_constant() {
            (self.num.clone(), other.den.clone())
        } else {
            match (self.num.div_exact(&g1), other.den.div_exact(&g1)) {
                (Some(n), Some(d)) => (n, d),
                _ => {
                    fully_cancelled = false;
                    (self.num.clone(), other.den.clone())
                }
            }
        };
        let (nb, da) = if g2.is_constant() {
            (other.num.clone(), self.den.clone())
        } else {
            match (other.num.div_exact(&g2), self.den.div_exact(&g2)) {
                (Some(n), Some(d)) => (n, d),
                _ => {
                    fully_cancelled = false;
                    (other.num.clone(), self.den.clone())
                }
            }
        };
        let mut f = RationalFn { num: na.mul(&nb), den: da.mul(&db) };
        let alph = f.num.alph.clone();
        let den_has_roots = (0..alph.len()).any(|v| alph.is_root(v) && f.den.involves(v));
        if den_has_roots || !fully_cancelled {
            f.rationalise_roots();
            f.reduce();
        } else {
            // Both operands were canonical and all four cross pairs were
            // cancelled, so numerator and denominator of the product share
            // no factor; only the monic normalisation remains.
            f.normalise_monic();
        }
        f
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        RationalFn { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, n: i32) -> Result<Self, ScalarError> {
        if n < 0 {
            return self.inv()?.pow(-n);
        }
        let mut acc = Self::one(&self.num.alph);
        let mut base = self.clone();
        let mut k = n as u32;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// Substitute a variable by another rational function over the same
    /// alphabet.
    pub fn subst(&self, name: &str, value: &Self) -> Result<Self, ScalarError> {
        let v = self
            .alphabet()
            .index_of(name)
            .ok_or_else(|| ScalarError::UnknownVariable(name.to_string()))?;
        let n = subst_poly(&self.num, v, value)?;
        let d = subst_poly(&self.den, v, value)?;
        n.div(&d)
    }

    /// Exchange two plain variables simultaneously.
    pub fn swap_vars(&self, a: &str, b: &str) -> Result<Self, ScalarError> {
        let alph = self.alphabet();
        let va = alph.index_of(a).ok_or_else(|| ScalarError::UnknownVariable(a.to_string()))?;
        let vb = alph.index_of(b).ok_or_else(|| ScalarError::UnknownVariable(b.to_string()))?;
        Self::new(self.num.swap_vars(va, vb), self.den.swap_vars(va, vb))
    }

    /// Substitute a variable by an exact numeric value; the remaining
    /// variables stay symbolic.
    pub fn subst_const(&self, name: &str, value: &GaussianRational) -> Result<Self, ScalarError> {
        let c = Self::constant(self.alphabet(), value.clone());
        self.subst(name, &c)
    }

    /// Evaluate at a full assignment.  Fails on a vanishing denominator.
    pub fn eval(&self, point: &[GaussianRational]) -> Result<GaussianRational, ScalarError> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(ScalarError::PoleAtPoint);
        }
        Ok(self.num.eval(point)?.div(d))
    }

    /// Complex conjugation under the alphabet's reality classes.
    pub fn conj(&self) -> Result<Self, ScalarError> {
        let (pn, mn) = self.num.conj()?;
        let (pd, md) = self.den.conj()?;
        let alph = self.alphabet();
        let mnum = MultiPoly::from_terms(alph, [(md, GaussianRational::one())]);
        let mden = MultiPoly::from_terms(alph, [(mn, GaussianRational::one())]);
        Self::new(pn.mul(&mnum), pd.mul(&mden))
    }

    /// Whether the reduced function involves the named variable.
    pub fn depends_on(&self, name: &str) -> bool {
        match self.alphabet().index_of(name) {
            Some(v) => self.num.involves(v) || self.den.involves(v),
            None => false,
        }
    }

    /// Degree-based size measure used in tests and diagnostics.
    pub fn complexity(&self) -> usize {
        self.num.num_terms() + self.den.num_terms()
    }
}

fn subst_poly(p: &MultiPoly, v: VarId, value: &RationalFn) -> Result<RationalFn, ScalarError> {
    let alph = &p.alph;
    let mut acc = RationalFn::zero(alph);
    // Cache powers of the substituted value.
    let mut powers: Vec<RationalFn> = vec![RationalFn::one(alph)];
    for (m, c) in &p.terms {
        let e = m.0[v] as usize;
        while powers.len() <= e {
            let next = powers.last().unwrap().mul(value);
            powers.push(next);
        }
        let mut rest = m.0.to_vec();
        rest[v] = 0;
        let base = MultiPoly::from_terms(alph, [(Monomial(rest.into_boxed_slice()), c.clone())]);
        acc = acc.add(&RationalFn::from_poly(base).mul(&powers[e]));
    }
    Ok(acc)
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.constant_value().map(|c| c.is_one()).unwrap_or(false) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Arc<Alphabet> {
        Alphabet::real(&["x", "y"])
    }

    fn x(a: &Arc<Alphabet>) -> RationalFn {
        RationalFn::var(a, "x").unwrap()
    }

    fn y(a: &Arc<Alphabet>) -> RationalFn {
        RationalFn::var(a, "y").unwrap()
    }

    #[test]
    fn canonical_reduction() {
        let a = ab();
        // (x^2 - y^2)/(x + y) reduces to x - y.
        let num = x(&a).mul(&x(&a)).sub(&y(&a).mul(&y(&a)));
        let f = num.div(&x(&a).add(&y(&a))).unwrap();
        assert_eq!(f, x(&a).sub(&y(&a)));
    }

    #[test]
    fn field_identities() {
        let a = ab();
        let f = x(&a).add(&RationalFn::one(&a)).div(&y(&a)).unwrap();
        let g = y(&a).sub(&x(&a));
        assert_eq!(f.mul(&f.inv().unwrap()), RationalFn::one(&a));
        assert_eq!(f.add(&g).sub(&g), f);
        assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn substitution() {
        let a = ab();
        // f = 1/(1 - x); f(x -> x*y) = 1/(1 - x*y).
        let f = RationalFn::one(&a)
            .div(&RationalFn::one(&a).sub(&x(&a)))
            .unwrap();
        let xy = x(&a).mul(&y(&a));
        let g = f.subst("x", &xy).unwrap();
        let expect = RationalFn::one(&a).div(&RationalFn::one(&a).sub(&xy)).unwrap();
        assert_eq!(g, expect);
    }

    #[test]
    fn evaluation_and_poles() {
        let a = ab();
        let f = x(&a).div(&x(&a).sub(&y(&a))).unwrap();
        let two = GaussianRational::from_int(2);
        let one = GaussianRational::one();
        assert_eq!(f.eval(&[two.clone(), one.clone()]).unwrap(), two);
        assert!(matches!(
            f.eval(&[one.clone(), one]),
            Err(ScalarError::PoleAtPoint)
        ));
    }

    #[test]
    fn conjugation_mixed_reality() {
        use crate::scalar::Reality;
        // x real, q unit-modulus: conj(x + i*q) = x - i/q = (x*q - i)/q.
        let a = Alphabet::new(&[("x", Reality::Real), ("q", Reality::UnitModulus)]);
        let x = RationalFn::var(&a, "x").unwrap();
        let q = RationalFn::var(&a, "q").unwrap();
        let i = RationalFn::constant(&a, GaussianRational::i());
        let f = x.add(&i.mul(&q));
        let c = f.conj().unwrap();
        let expect = x.sub(&i.div(&q).unwrap());
        assert_eq!(c, expect);
        // Conjugation is an involution here.
        assert_eq!(c.conj().unwrap(), f);
    }
}
