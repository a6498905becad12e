//! Words in the free monoid over indexed generator families.

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;

/// One generator symbol: family (position in the presentation's family
/// list, which also fixes the precedence used by the word order) and
/// 1-based strand index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct GenSym {
    pub fam: u8,
    pub idx: u8,
}

impl GenSym {
    pub fn new(fam: u8, idx: u8) -> Self {
        GenSym { fam, idx }
    }
}

/// A word in the free monoid; the empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Word(pub SmallVec<[GenSym; 12]>);

impl Word {
    pub fn one() -> Self {
        Word(SmallVec::new())
    }

    pub fn single(g: GenSym) -> Self {
        let mut v = SmallVec::new();
        v.push(g);
        Word(v)
    }

    pub fn from_slice(gens: &[GenSym]) -> Self {
        Word(SmallVec::from_slice(gens))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, g: GenSym) {
        self.0.push(g);
    }

    /// Subword `self[a..b]`.
    pub fn slice(&self, a: usize, b: usize) -> Word {
        Word(SmallVec::from_slice(&self.0[a..b]))
    }

    /// Replace `self[pos..pos+len]` by `mid`.
    pub fn splice(&self, pos: usize, len: usize, mid: &Word) -> Word {
        let mut v = SmallVec::with_capacity(self.0.len() - len + mid.len());
        v.extend_from_slice(&self.0[..pos]);
        v.extend_from_slice(&mid.0);
        v.extend_from_slice(&self.0[pos + len..]);
        Word(v)
    }

    /// First position at which `pat` occurs as a subword, if any.
    pub fn find(&self, pat: &Word) -> Option<usize> {
        if pat.len() > self.len() {
            return None;
        }
        (0..=self.len() - pat.len()).find(|&p| self.0[p..p + pat.len()] == pat.0[..])
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Number of occurrences of generators at strand index `idx`.
    pub fn count_index(&self, idx: u8) -> usize {
        self.0.iter().filter(|g| g.idx == idx).count()
    }
}

/// Graded lexicographic order: shorter words first, ties broken letterwise
/// by `(family, index)`.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Render a word given the family names of its presentation.
pub fn format_word(w: &Word, fam_names: &[String]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    w.0.iter()
        .map(|g| format!("{}{}", fam_names[g.fam as usize], g.idx))
        .collect::<Vec<_>>()
        .join(".")
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "f{}_{}", g.fam, g.idx)?;
        }
        Ok(())
    }
}
