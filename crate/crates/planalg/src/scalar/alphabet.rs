//! Ordered sets of named indeterminates.

use super::gaussian::GaussianRational;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// How an indeterminate behaves under complex conjugation.
///
/// A `Real` symbol is fixed by conjugation; a `UnitModulus` symbol `q`
/// satisfies `conj(q) = 1/q`.  Conjugation of a polynomial containing
/// unit-modulus symbols therefore produces a rational function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reality {
    Real,
    UnitModulus,
}

/// Index of a variable inside its alphabet.
pub type VarId = usize;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub(crate) struct VarInfo {
    pub name: String,
    pub reality: Reality,
    /// For a root symbol `r`: the terms of the polynomial `r^2` rewrites to,
    /// stored as raw (exponent vector, coefficient) pairs over this alphabet.
    pub square: Option<Vec<(Vec<u16>, GaussianRational)>>,
}

/// An ordered list of indeterminates shared by all polynomials and rational
/// functions taking part in one computation.
///
/// Alphabets are compared by value; two values may be combined exactly when
/// their alphabets agree.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Alphabet {
    pub(crate) vars: Vec<VarInfo>,
}

impl Alphabet {
    /// An alphabet of ordinary (non-root) symbols.
    pub fn new(names: &[(&str, Reality)]) -> Arc<Self> {
        let vars = names
            .iter()
            .map(|(n, r)| VarInfo { name: (*n).to_string(), reality: *r, square: None })
            .collect();
        Arc::new(Alphabet { vars })
    }

    /// All-real convenience constructor.
    pub fn real(names: &[&str]) -> Arc<Self> {
        let pairs: Vec<(&str, Reality)> = names.iter().map(|n| (*n, Reality::Real)).collect();
        Self::new(&pairs)
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn name(&self, id: VarId) -> &str {
        &self.vars[id].name
    }

    pub fn reality(&self, id: VarId) -> Reality {
        self.vars[id].reality
    }

    pub fn index_of(&self, name: &str) -> Option<VarId> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub(crate) fn square_of(&self, id: VarId) -> Option<&Vec<(Vec<u16>, GaussianRational)>> {
        self.vars[id].square.as_ref()
    }

    pub fn is_root(&self, id: VarId) -> bool {
        self.vars[id].square.is_some()
    }

    /// Extend an alphabet by a root symbol `name` whose square rewrites to
    /// the polynomial with the given terms (exponent vectors refer to the
    /// *extended* alphabet, so they have length `self.len() + 1` with the
    /// last entry zero, or length `self.len()` which is padded).
    pub fn with_root(
        self: &Arc<Self>,
        name: &str,
        reality: Reality,
        square_terms: Vec<(Vec<u16>, GaussianRational)>,
    ) -> Arc<Self> {
        let n = self.vars.len() + 1;
        let square = square_terms
            .into_iter()
            .map(|(mut e, c)| {
                e.resize(n, 0);
                assert!(e[n - 1] < 2, "root square must not involve the root symbol");
                (e, c)
            })
            .collect();
        let mut vars = self.vars.clone();
        vars.push(VarInfo { name: name.to_string(), reality, square: Some(square) });
        Arc::new(Alphabet { vars })
    }
}
