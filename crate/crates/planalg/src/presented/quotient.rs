//! Substitution-based verification of algebra quotient maps.

use super::presentation::Presentation;
use super::rewrite::AlgElem;
use super::table::BasisTable;
use super::word::format_word;
use super::PresentedError;

/// A candidate homomorphism from a presented algebra into a basis table,
/// given by images of the generators.
pub struct QuotientMap<'a> {
    pub source: &'a Presentation,
    pub target: &'a BasisTable,
    /// `images[fam][idx - 1]` is the image of generator `fam_idx`.
    pub images: Vec<Vec<AlgElem>>,
}

impl<'a> QuotientMap<'a> {
    pub fn new(source: &'a Presentation, target: &'a BasisTable, images: Vec<Vec<AlgElem>>) -> Self {
        assert_eq!(images.len(), source.families.len());
        for fam in &images {
            assert_eq!(fam.len(), source.n - 1);
        }
        QuotientMap { source, target, images }
    }

    /// Push a source element through the map and reduce in the target.
    pub fn apply(&self, e: &AlgElem) -> AlgElem {
        let mut acc = AlgElem::zero();
        for (w, c) in &e.terms {
            let mut prod = self.target.one().scale(c);
            for g in w.0.iter() {
                let img = &self.images[g.fam as usize][g.idx as usize - 1];
                prod = self.target.mul(&prod, img);
            }
            acc = acc.add(&prod);
        }
        self.target.reduce(&acc)
    }

    /// Check every source relation; returns `(rendered relation, passed)`.
    pub fn verify(&self) -> Vec<(String, bool)> {
        let names: Vec<String> = self.source.families.iter().map(|f| f.name.clone()).collect();
        self.source
            .relations
            .iter()
            .map(|rel| {
                let rendered = rel
                    .terms
                    .keys()
                    .map(|w| format_word(w, &names))
                    .collect::<Vec<_>>()
                    .join(" + ");
                (rendered, self.apply(rel).is_zero())
            })
            .collect()
    }

    /// Error with the first failing relation, if any.
    pub fn verify_all(&self) -> Result<(), PresentedError> {
        for (rendered, ok) in self.verify() {
            if !ok {
                return Err(PresentedError::RelationNotSatisfied(rendered));
            }
        }
        Ok(())
    }
}
