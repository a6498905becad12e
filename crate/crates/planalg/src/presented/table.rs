//! Certified bases, products, traces and involutions for presented algebras.

use super::presentation::{Presentation, StarKind, FAM_E};
use super::rewrite::{AlgElem, RuleSet};
use super::word::{GenSym, Word};
use super::PresentedError;
use crate::scalar::RationalFn;
use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};

/// A presented algebra with a completed rewriting system and an enumerated
/// basis of irreducible words, certified against the expected dimension.
pub struct BasisTable {
    pub pres: Presentation,
    pub rules: RuleSet,
    pub basis: Vec<Word>,
    index: HashMap<Word, usize>,
    cache: RefCell<HashMap<Word, AlgElem>>,
}

/// Tuning knobs for completion and basis enumeration.
#[derive(Clone, Copy, Debug)]
pub struct BuildLimits {
    /// Longest superposition word resolved during completion.
    pub overlap_cap: usize,
    /// Abort completion beyond this many rules.
    pub max_rules: usize,
    /// Abort basis enumeration if irreducible words keep appearing at this
    /// length (the algebra is then infinite-dimensional at the cap).
    pub word_cap: usize,
}

impl BuildLimits {
    pub fn for_strands(n: usize) -> Self {
        BuildLimits {
            overlap_cap: 9,
            max_rules: 40_000,
            word_cap: n * n + 2,
        }
    }
}

impl BasisTable {
    /// Complete the presentation's rewriting system and enumerate the
    /// irreducible words, checking the count against the closed-form
    /// dimension when one is known.
    pub fn build(pres: Presentation, limits: BuildLimits) -> Result<Self, PresentedError> {
        let mut rules = RuleSet::from_relations(&pres.alph, &pres.relations);
        rules.complete(limits.overlap_cap, limits.max_rules)?;
        let basis = enumerate_basis(&pres, &rules, limits.word_cap)?;
        if let Some(expected) = &pres.expected_dim {
            let found = basis.len();
            if num_bigint::BigUint::from(found) != *expected {
                return Err(PresentedError::DimensionMismatch {
                    found,
                    expected: expected.try_into().unwrap_or(usize::MAX),
                });
            }
        }
        let index = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        Ok(BasisTable { pres, rules, basis, index, cache: RefCell::new(HashMap::new()) })
    }

    pub fn build_default(pres: Presentation) -> Result<Self, PresentedError> {
        let n = pres.n;
        Self::build(pres, BuildLimits::for_strands(n))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn one(&self) -> AlgElem {
        AlgElem::single(Word::one(), RationalFn::one(&self.pres.alph))
    }

    /// The generator `fam_idx` as an element.
    pub fn gen_elem(&self, fam: u8, idx: usize) -> AlgElem {
        AlgElem::single(Word::single(self.pres.gen(fam, idx)), RationalFn::one(&self.pres.alph))
    }

    /// Reduce an element to its normal form on the basis.
    pub fn reduce(&self, e: &AlgElem) -> AlgElem {
        let mut cache = self.cache.borrow_mut();
        self.rules.reduce_elem(e, &mut cache)
    }

    pub fn mul(&self, a: &AlgElem, b: &AlgElem) -> AlgElem {
        let mut cache = self.cache.borrow_mut();
        let mut acc = AlgElem::zero();
        for (wa, ca) in &a.terms {
            for (wb, cb) in &b.terms {
                let red = self.rules.reduce_word(&wa.concat(wb), &mut cache);
                let c = ca.mul(cb);
                for (rw, rc) in &red.terms {
                    acc.add_term(rw.clone(), rc.mul(&c));
                }
            }
        }
        acc
    }

    /// Product of a list of factors, left to right.
    pub fn product(&self, factors: &[&AlgElem]) -> AlgElem {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// Coefficient vector of a reduced element over the basis.
    pub fn coeffs(&self, e: &AlgElem) -> Result<Vec<RationalFn>, PresentedError> {
        let red = self.reduce(e);
        let mut out = vec![RationalFn::zero(&self.pres.alph); self.basis.len()];
        for (w, c) in &red.terms {
            let i = *self
                .index
                .get(w)
                .ok_or(PresentedError::BasisCapExceeded { cap: self.basis.len() })?;
            out[i] = c.clone();
        }
        Ok(out)
    }

    /// The `*`-involution: reverse words, conjugate coefficients, and map
    /// each generator by its family's star rule.
    pub fn star(&self, e: &AlgElem) -> Result<AlgElem, PresentedError> {
        let mut acc = AlgElem::zero();
        for (w, c) in &e.terms {
            let mut prod = AlgElem::single(Word::one(), c.conj()?);
            for g in w.0.iter().rev() {
                let letter = self.star_letter(*g);
                prod = self.mul(&prod, &letter);
            }
            acc = acc.add(&prod);
        }
        Ok(acc)
    }

    fn star_letter(&self, g: GenSym) -> AlgElem {
        let one = RationalFn::one(&self.pres.alph);
        match &self.pres.families[g.fam as usize].star {
            StarKind::SelfAdjoint => AlgElem::single(Word::single(g), one),
            StarKind::BraidInverse { q_minus_qinv } => {
                // g* = g^{-1} = g - Q·1 + Q·e at the same index.
                let mut out = AlgElem::single(Word::single(g), one);
                out.add_term(Word::one(), q_minus_qinv.neg());
                out.add_term(Word::single(GenSym::new(FAM_E, g.idx)), q_minus_qinv.clone());
                out
            }
        }
    }

    /// Close the top strand: a conditional expectation onto the algebra one
    /// level down.  Every basis word must contain at most one generator at
    /// the top index.
    pub fn partial_trace(&self, e: &AlgElem, lower: &BasisTable) -> Result<AlgElem, PresentedError> {
        let top = (self.pres.n - 1) as u8;
        let red = self.reduce(e);
        let mut acc = AlgElem::zero();
        for (w, c) in &red.terms {
            match w.count_index(top) {
                0 => {
                    let term = lower.reduce(&AlgElem::single(w.clone(), c.mul(&self.pres.loop_factor)));
                    acc = acc.add(&term);
                }
                1 => {
                    let pos = w.0.iter().position(|g| g.idx == top).unwrap();
                    let fam = w.0[pos].fam as usize;
                    let weight = c.mul(&self.pres.families[fam].closure);
                    let stripped = w.splice(pos, 1, &Word::one());
                    let term = lower.reduce(&AlgElem::single(stripped, weight));
                    acc = acc.add(&term);
                }
                _ => return Err(PresentedError::NotNormalisable),
            }
        }
        Ok(acc)
    }

    /// Matrix of left multiplication by `e` on the basis (column `j` holds
    /// the coefficients of `e · basis[j]`).
    pub fn regular_representation(&self, e: &AlgElem) -> Result<Vec<Vec<RationalFn>>, PresentedError> {
        let mut cols = Vec::with_capacity(self.basis.len());
        for w in &self.basis {
            let b = AlgElem::single(w.clone(), RationalFn::one(&self.pres.alph));
            cols.push(self.coeffs(&self.mul(e, &b))?);
        }
        // Transpose to rows-first.
        let d = self.basis.len();
        Ok((0..d).map(|r| (0..d).map(|c| cols[c][r].clone()).collect()).collect())
    }
}

/// Enumerate irreducible words by length; the set is prefix-closed, so
/// breadth-first extension by single generators is exhaustive.
fn enumerate_basis(
    pres: &Presentation,
    rules: &RuleSet,
    word_cap: usize,
) -> Result<Vec<Word>, PresentedError> {
    let mut gens = Vec::new();
    for fam in 0..pres.families.len() as u8 {
        for idx in 1..pres.n {
            gens.push(GenSym::new(fam, idx as u8));
        }
    }
    let mut out: BTreeSet<Word> = BTreeSet::new();
    out.insert(Word::one());
    let mut frontier = vec![Word::one()];
    let mut len = 0;
    while !frontier.is_empty() {
        len += 1;
        if len > word_cap {
            return Err(PresentedError::BasisCapExceeded { cap: word_cap });
        }
        let mut next = Vec::new();
        for w in &frontier {
            for g in &gens {
                let mut cand = w.clone();
                cand.push(*g);
                if rules.is_irreducible(&cand) {
                    next.push(cand);
                }
            }
        }
        for w in &next {
            out.insert(w.clone());
        }
        frontier = next;
    }
    Ok(out.into_iter().collect())
}

/// A tower of basis tables for strand counts `1..=n`, providing the Markov
/// trace by iterated closure of the top strand.
pub struct AlgebraTower {
    /// `levels[k]` is the table on `k + 1` strands.
    pub levels: Vec<BasisTable>,
}

impl AlgebraTower {
    pub fn build(
        n: usize,
        make: impl Fn(usize) -> Presentation,
        limits: impl Fn(usize) -> BuildLimits,
    ) -> Result<Self, PresentedError> {
        let mut levels = Vec::with_capacity(n);
        for k in 1..=n {
            levels.push(BasisTable::build(make(k), limits(k))?);
        }
        Ok(AlgebraTower { levels })
    }

    pub fn build_default(n: usize, make: impl Fn(usize) -> Presentation) -> Result<Self, PresentedError> {
        Self::build(n, make, BuildLimits::for_strands)
    }

    pub fn top(&self) -> &BasisTable {
        self.levels.last().expect("tower is nonempty")
    }

    /// Markov trace of an element at level `level` (0-based, i.e. on
    /// `level + 1` strands), closing every strand.
    pub fn trace(&self, level: usize, e: &AlgElem) -> Result<RationalFn, PresentedError> {
        let mut cur = self.levels[level].reduce(e);
        let mut k = level;
        while k > 0 {
            cur = self.levels[k].partial_trace(&cur, &self.levels[k - 1])?;
            k -= 1;
        }
        // One strand left: the identity closes to the loop factor.
        let table = &self.levels[0];
        let red = table.reduce(&cur);
        let mut val = RationalFn::zero(&table.pres.alph);
        for (w, c) in &red.terms {
            debug_assert!(w.is_empty());
            val = val.add(&c.mul(&table.pres.loop_factor));
        }
        Ok(val)
    }

    /// Gram matrix `tr(a* · b)` of the trace inner product, over a list of
    /// elements of the top level (pass basis words for the full matrix).
    pub fn gram_matrix(&self, elems: &[AlgElem]) -> Result<Vec<Vec<RationalFn>>, PresentedError> {
        let level = self.levels.len() - 1;
        let table = self.top();
        let d = elems.len();
        let stars = elems.iter().map(|e| table.star(e)).collect::<Result<Vec<_>, _>>()?;
        let mut out = vec![vec![RationalFn::zero(&table.pres.alph); d]; d];
        for a in 0..d {
            for b in 0..d {
                out[a][b] = self.trace(level, &table.mul(&stars[a], &elems[b]))?;
            }
        }
        Ok(out)
    }

    /// The top level's basis as elements.
    pub fn basis_elems(&self) -> Vec<AlgElem> {
        let table = self.top();
        table
            .basis
            .iter()
            .map(|w| AlgElem::single(w.clone(), RationalFn::one(&table.pres.alph)))
            .collect()
    }
}
