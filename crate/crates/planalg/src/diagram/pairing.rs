//! Noncrossing perfect matchings of boundary points.

use super::DiagramError;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A noncrossing perfect matching of `2m` boundary points, stored as sorted
/// `(min, max)` pairs in increasing order of the first entry.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct PlanarPairing {
    pairs: Vec<(usize, usize)>,
}

impl PlanarPairing {
    /// Validate and canonicalise a list of pairs over `points` boundary
    /// points (`points` must be even and every point covered once).
    pub fn new(points: usize, pairs: &[(usize, usize)]) -> Result<Self, DiagramError> {
        if points % 2 != 0 || pairs.len() != points / 2 {
            return Err(DiagramError::NotPerfectMatching(points));
        }
        let mut seen = vec![false; points];
        let mut canon: Vec<(usize, usize)> = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a >= points || b >= points || a == b || seen[a] || seen[b] {
                return Err(DiagramError::NotPerfectMatching(points));
            }
            seen[a] = true;
            seen[b] = true;
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        for i in 0..canon.len() {
            for j in (i + 1)..canon.len() {
                let (a, b) = canon[i];
                let (c, d) = canon[j];
                if a < c && c < b && b < d {
                    return Err(DiagramError::Crossing(a, b, c, d));
                }
            }
        }
        Ok(PlanarPairing { pairs: canon })
    }

    pub fn points(&self) -> usize {
        self.pairs.len() * 2
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// The partner of a boundary point.
    pub fn partner(&self, p: usize) -> usize {
        for &(a, b) in &self.pairs {
            if a == p {
                return b;
            }
            if b == p {
                return a;
            }
        }
        unreachable!("point out of range")
    }

    /// Cyclic relabelling `p -> (p + clicks) mod points`; one positive click
    /// moves the marked interval past one boundary point.
    pub fn rotated(&self, clicks: i64) -> Self {
        let m = self.points() as i64;
        let shift = clicks.rem_euclid(m) as usize;
        let pairs: Vec<(usize, usize)> = self
            .pairs
            .iter()
            .map(|&(a, b)| ((a + shift) % self.points(), (b + shift) % self.points()))
            .collect();
        PlanarPairing::new(self.points(), &pairs).expect("rotation preserves planarity")
    }

    /// Vertical flip (the diagram involution): `p -> points - 1 - p`.
    pub fn flipped(&self) -> Self {
        let m = self.points();
        let pairs: Vec<(usize, usize)> = self.pairs.iter().map(|&(a, b)| (m - 1 - a, m - 1 - b)).collect();
        PlanarPairing::new(m, &pairs).expect("flip preserves planarity")
    }

    /// All noncrossing perfect matchings of `points` boundary points that
    /// satisfy the given admissibility predicate on pairs (used for the
    /// colour constraint; pass `|_, _| true` for the uncoloured case).
    pub fn enumerate(points: usize, admissible: &dyn Fn(usize, usize) -> bool) -> Vec<Self> {
        let idx: Vec<usize> = (0..points).collect();
        enumerate_rec(&idx, admissible)
            .into_iter()
            .map(|pairs| PlanarPairing::new(points, &pairs).expect("enumeration yields planar pairings"))
            .collect()
    }
}

/// All admissible noncrossing matchings of the listed points: the first
/// point pairs with an odd-offset partner, whose arc splits the remainder
/// into independent inside and outside parts.
fn enumerate_rec(points: &[usize], admissible: &dyn Fn(usize, usize) -> bool) -> Vec<Vec<(usize, usize)>> {
    if points.is_empty() {
        return vec![Vec::new()];
    }
    let first = points[0];
    let mut out = Vec::new();
    for k in (1..points.len()).step_by(2) {
        let p = points[k];
        if !admissible(first, p) {
            continue;
        }
        for inside in enumerate_rec(&points[1..k], admissible) {
            for outside in enumerate_rec(&points[k + 1..], admissible) {
                let mut m = Vec::with_capacity(points.len() / 2);
                m.push((first, p));
                m.extend_from_slice(&inside);
                m.extend_from_slice(&outside);
                out.push(m);
            }
        }
    }
    out
}

impl fmt::Display for PlanarPairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "({},{})", a, b)?;
        }
        write!(f, "}}")
    }
}
