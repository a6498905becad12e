//! Linear noncommutative rewriting with critical-pair completion.

use super::word::{GenSym, Word};
use super::PresentedError;
use crate::scalar::{Alphabet, RationalFn};
use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap};
use std::sync::Arc;

/// A formal linear combination of words.
#[derive(Clone, PartialEq, Debug)]
pub struct AlgElem {
    pub terms: BTreeMap<Word, RationalFn>,
}

impl AlgElem {
    pub fn zero() -> Self {
        AlgElem { terms: BTreeMap::new() }
    }

    pub fn single(w: Word, c: RationalFn) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        AlgElem { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: RationalFn) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, c: &RationalFn) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlgElem {
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k.mul(c))).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        AlgElem {
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k.neg())).collect(),
        }
    }

    /// Largest word (graded lex) with its coefficient.
    pub fn leading(&self) -> Option<(&Word, &RationalFn)> {
        self.terms.iter().next_back()
    }

    /// Substitute a scalar variable in every coefficient.
    pub fn subst(
        &self,
        name: &str,
        value: &RationalFn,
    ) -> Result<Self, crate::scalar::ScalarError> {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.subst(name, value)?);
        }
        Ok(out)
    }

    /// Whether any coefficient involves the named variable.
    pub fn depends_on(&self, name: &str) -> bool {
        self.terms.values().any(|c| c.depends_on(name))
    }
}

/// A rewrite rule `lhs -> rhs`; every word in `rhs` is strictly smaller
/// than `lhs` in the graded lexicographic order, so rewriting terminates.
/// Rules superseded during completion are kept but deactivated.
#[derive(Clone, Debug)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: AlgElem,
    pub active: bool,
}

/// An oriented rule system over a fixed coefficient alphabet, indexed by
/// the first letter of each rule's left-hand side.
#[derive(Clone, Debug)]
pub struct RuleSet {
    pub alph: Arc<Alphabet>,
    pub rules: Vec<Rule>,
    index: HashMap<GenSym, Vec<usize>>,
}

impl RuleSet {
    /// Orient a vanishing linear combination into a rule by its leading
    /// word.  `None` when the combination is identically zero.
    pub fn orient(rel: &AlgElem) -> Option<Rule> {
        let (lhs, c) = rel.leading()?;
        let lhs = lhs.clone();
        let inv = c.inv().expect("leading coefficient is nonzero");
        let mut rhs = AlgElem::zero();
        for (w, k) in &rel.terms {
            if *w != lhs {
                rhs.add_term(w.clone(), k.mul(&inv).neg());
            }
        }
        Some(Rule { lhs, rhs, active: true })
    }

    pub fn from_relations(alph: &Arc<Alphabet>, rels: &[AlgElem]) -> Self {
        let mut set = RuleSet { alph: alph.clone(), rules: Vec::new(), index: HashMap::new() };
        for rel in rels {
            if let Some(rule) = Self::orient(rel) {
                set.push_rule(rule);
            }
        }
        set
    }

    pub fn active_count(&self) -> usize {
        self.rules.iter().filter(|r| r.active).count()
    }

    fn push_rule(&mut self, rule: Rule) -> usize {
        let id = self.rules.len();
        debug_assert!(!rule.lhs.is_empty());
        self.index.entry(rule.lhs.0[0]).or_default().push(id);
        self.rules.push(rule);
        id
    }

    /// Leftmost match of any active rule: `(position, rule id)`.
    fn find_match(&self, w: &Word) -> Option<(usize, usize)> {
        for p in 0..w.len() {
            if let Some(cands) = self.index.get(&w.0[p]) {
                for &ri in cands {
                    let r = &self.rules[ri];
                    if r.active {
                        let l = r.lhs.len();
                        if p + l <= w.len() && w.0[p..p + l] == r.lhs.0[..] {
                            return Some((p, ri));
                        }
                    }
                }
            }
        }
        None
    }

    /// Is the word free of active rule left-hand sides?
    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.find_match(w).is_none()
    }

    /// Fully reduce a word, memoising intermediate words.
    pub fn reduce_word(&self, w: &Word, cache: &mut HashMap<Word, AlgElem>) -> AlgElem {
        if let Some(hit) = cache.get(w) {
            return hit.clone();
        }
        let result = match self.find_match(w) {
            None => AlgElem::single(w.clone(), RationalFn::one(&self.alph)),
            Some((p, ri)) => {
                let rule = self.rules[ri].clone();
                let mut acc = AlgElem::zero();
                for (mid, c) in &rule.rhs.terms {
                    let spliced = w.splice(p, rule.lhs.len(), mid);
                    let red = self.reduce_word(&spliced, cache);
                    for (rw, rc) in &red.terms {
                        acc.add_term(rw.clone(), rc.mul(c));
                    }
                }
                acc
            }
        };
        cache.insert(w.clone(), result.clone());
        result
    }

    /// Fully reduce a linear combination.
    pub fn reduce_elem(&self, e: &AlgElem, cache: &mut HashMap<Word, AlgElem>) -> AlgElem {
        let mut acc = AlgElem::zero();
        for (w, c) in &e.terms {
            let red = self.reduce_word(w, cache);
            for (rw, rc) in &red.terms {
                acc.add_term(rw.clone(), rc.mul(c));
            }
        }
        acc
    }

    /// Critical-pair completion with interreduction: resolve overlap
    /// ambiguities (smallest superpositions first, up to `overlap_cap`),
    /// orienting unresolved differences into new rules; rules whose
    /// left-hand side becomes reducible are deactivated and their content
    /// re-oriented.  Errors out beyond `max_rules` rules.
    pub fn complete(&mut self, overlap_cap: usize, max_rules: usize) -> Result<(), PresentedError> {
        // Min-heap of (combined lhs length, i, j) over active rule pairs.
        let mut heap: BinaryHeap<Reverse<(usize, usize, usize)>> = BinaryHeap::new();
        let mut cache: HashMap<Word, AlgElem> = HashMap::new();
        for i in 0..self.rules.len() {
            for j in 0..self.rules.len() {
                let key = self.rules[i].lhs.len() + self.rules[j].lhs.len();
                heap.push(Reverse((key, i, j)));
            }
        }
        while let Some(Reverse((_, i, j))) = heap.pop() {
            if !self.rules[i].active || !self.rules[j].active {
                continue;
            }
            let sups = superpositions(&self.rules[i].lhs, &self.rules[j].lhs, overlap_cap);
            for sup in sups {
                if !self.rules[i].active || !self.rules[j].active {
                    break;
                }
                let a = self.apply_at(&sup.word, sup.pos_i, i, &mut cache);
                let b = self.apply_at(&sup.word, sup.pos_j, j, &mut cache);
                let diff = a.sub(&b);
                if !diff.is_zero() {
                    self.absorb(diff, &mut heap, &mut cache, max_rules)?;
                }
            }
        }
        Ok(())
    }

    /// Add the oriented form of a vanishing element, deactivating and
    /// reprocessing any rule whose left-hand side it now reduces.
    fn absorb(
        &mut self,
        elem: AlgElem,
        heap: &mut BinaryHeap<Reverse<(usize, usize, usize)>>,
        cache: &mut HashMap<Word, AlgElem>,
        max_rules: usize,
    ) -> Result<(), PresentedError> {
        let mut work = vec![elem];
        while let Some(e) = work.pop() {
            let red = self.reduce_elem(&e, cache);
            let Some(rule) = Self::orient(&red) else { continue };
            if std::env::var_os("PLANALG_TRACE_COMPLETION").is_some() {
                eprintln!(
                    "rule {}: {} (len {}, rhs {} terms, active {})",
                    self.rules.len(),
                    rule.lhs,
                    rule.lhs.len(),
                    rule.rhs.terms.len(),
                    self.active_count()
                );
            }
            let lhs = rule.lhs.clone();
            let id = self.push_rule(rule);
            if self.rules.len() > max_rules {
                return Err(PresentedError::CompletionOverflow { max_rules });
            }
            cache.clear();
            // Supersede any older rule whose lhs contains the new lhs.
            for k in 0..id {
                if self.rules[k].active && k != id && self.rules[k].lhs.find(&lhs).is_some() {
                    self.rules[k].active = false;
                    let dead = &self.rules[k];
                    let mut content = dead.rhs.neg();
                    content.add_term(dead.lhs.clone(), RationalFn::one(&self.alph));
                    work.push(content);
                }
            }
            for k in 0..self.rules.len() {
                if self.rules[k].active {
                    let key = self.rules[k].lhs.len() + lhs.len();
                    heap.push(Reverse((key, k, id)));
                    if k != id {
                        heap.push(Reverse((key, id, k)));
                    }
                }
            }
        }
        Ok(())
    }

    /// Apply rule `ri` at position `pos` of `w`, then reduce fully.
    fn apply_at(&self, w: &Word, pos: usize, ri: usize, cache: &mut HashMap<Word, AlgElem>) -> AlgElem {
        let rule = &self.rules[ri];
        let mut acc = AlgElem::zero();
        for (mid, c) in &rule.rhs.terms {
            let spliced = w.splice(pos, rule.lhs.len(), mid);
            let red = self.reduce_word(&spliced, cache);
            for (rw, rc) in &red.terms {
                acc.add_term(rw.clone(), rc.mul(c));
            }
        }
        acc
    }
}

struct Superposition {
    word: Word,
    pos_i: usize,
    pos_j: usize,
}

/// All superposition words of two left-hand sides up to the length cap:
/// proper overlaps (a suffix of `a` equals a prefix of `b`) and inclusions
/// (`b` occurring inside `a`).
fn superpositions(a: &Word, b: &Word, cap: usize) -> Vec<Superposition> {
    let mut out = Vec::new();
    // Proper overlaps: last k letters of a == first k letters of b.
    for k in 1..a.len().min(b.len()) {
        if a.0[a.len() - k..] == b.0[..k] {
            let word = a.concat(&b.slice(k, b.len()));
            if word.len() <= cap {
                out.push(Superposition { word, pos_i: 0, pos_j: a.len() - k });
            }
        }
    }
    // Inclusion: b a proper subword of a.
    if b.len() < a.len() && a.len() <= cap {
        for p in 0..=a.len() - b.len() {
            if a.0[p..p + b.len()] == b.0[..] {
                out.push(Superposition { word: a.clone(), pos_i: 0, pos_j: p });
            }
        }
    }
    out
}
