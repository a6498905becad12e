//! Linear combinations of planar diagrams and their algebra operations.

use super::pairing::PlanarPairing;
use super::DiagramError;
use crate::scalar::RationalFn;
use num_bigint::BigUint;
use std::collections::BTreeMap;
use std::fmt;

/// Which diagram algebra a box belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DiagramKind {
    /// Uncoloured: one strand per column, loop weight `δ`.
    TemperleyLieb,
    /// Two-colour Fuss–Catalan: two strands (one block) per index, loop
    /// weight `γ` for either colour.
    FussCatalan,
}

impl DiagramKind {
    /// Boundary columns per algebra index.
    pub fn block(&self) -> usize {
        match self {
            DiagramKind::TemperleyLieb => 1,
            DiagramKind::FussCatalan => 2,
        }
    }

    /// Colour of a boundary column (always 0 for Temperley–Lieb; the
    /// Fuss–Catalan colour sequence alternates blockwise, `c1 c2 | c2 c1 |
    /// c1 c2 | ...`).
    pub fn colour(&self, col: usize) -> u8 {
        match self {
            DiagramKind::TemperleyLieb => 0,
            DiagramKind::FussCatalan => (((col / 2) + col % 2) % 2) as u8,
        }
    }
}

/// A formal linear combination of `n`-box diagrams with rational-function
/// coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct DiagElement {
    /// Number of algebra strands (indices), not boundary columns.
    pub n: usize,
    pub terms: BTreeMap<PlanarPairing, RationalFn>,
}

impl DiagElement {
    pub fn zero(n: usize) -> Self {
        DiagElement { n, terms: BTreeMap::new() }
    }

    pub fn single(n: usize, d: PlanarPairing, c: RationalFn) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(d, c);
        }
        DiagElement { n, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, d: PlanarPairing, c: RationalFn) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(d) {
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
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale_neg())
    }

    fn scale_neg(&self) -> Self {
        DiagElement {
            n: self.n,
            terms: self.terms.iter().map(|(d, c)| (d.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &RationalFn) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        DiagElement {
            n: self.n,
            terms: self.terms.iter().map(|(d, k)| (d.clone(), k.mul(c))).collect(),
        }
    }
}

/// The ambient algebra: strand count, kind and loop weight.
#[derive(Clone, Debug)]
pub struct DiagAlgebra {
    pub n: usize,
    pub kind: DiagramKind,
    /// Loop weight: `δ` for Temperley–Lieb, `γ` for Fuss–Catalan.
    pub weight: RationalFn,
}

impl DiagAlgebra {
    pub fn new(n: usize, kind: DiagramKind, weight: RationalFn) -> Self {
        DiagAlgebra { n, kind, weight }
    }

    fn cols(&self) -> usize {
        self.n * self.kind.block()
    }

    /// Validate the colour constraint of a pairing for this algebra.
    pub fn check_colours(&self, d: &PlanarPairing) -> Result<(), DiagramError> {
        let cols = self.cols();
        for &(a, b) in d.pairs() {
            let ca = self.kind.colour(point_col(a, cols));
            let cb = self.kind.colour(point_col(b, cols));
            if ca != cb {
                return Err(DiagramError::ColourMismatch(a, b));
            }
        }
        Ok(())
    }

    /// The identity diagram: every bottom column joined to the top column
    /// directly above it.
    pub fn identity_pairing(&self) -> PlanarPairing {
        let cols = self.cols();
        let pairs: Vec<(usize, usize)> = (0..cols).map(|j| (j, 2 * cols - 1 - j)).collect();
        PlanarPairing::new(2 * cols, &pairs).unwrap()
    }

    pub fn one(&self) -> DiagElement {
        DiagElement::single(
            self.n,
            self.identity_pairing(),
            RationalFn::one(self.weight.alphabet()),
        )
    }

    /// Temperley–Lieb generator `e_i` (1-based, `1 <= i < n`).
    pub fn tl_e(&self, i: usize) -> Result<DiagElement, DiagramError> {
        assert_eq!(self.kind, DiagramKind::TemperleyLieb);
        self.cup_cap(i, &[(0, 1)])
    }

    /// Fuss–Catalan generator `E_i`: nested cups over both columns of
    /// blocks `i` and `i+1`.
    pub fn fc_e(&self, i: usize) -> Result<DiagElement, DiagramError> {
        assert_eq!(self.kind, DiagramKind::FussCatalan);
        self.cup_cap(i, &[(1, 2), (0, 3)])
    }

    /// Fuss–Catalan generator `P_i`: a cup over the inner columns of blocks
    /// `i` and `i+1`, outer columns passing through.
    pub fn fc_p(&self, i: usize) -> Result<DiagElement, DiagramError> {
        assert_eq!(self.kind, DiagramKind::FussCatalan);
        self.cup_cap(i, &[(1, 2)])
    }

    /// Build a generator at index `i`: the listed local column pairs become
    /// bottom cups (and mirrored top caps); all other columns are vertical.
    fn cup_cap(&self, i: usize, local_cups: &[(usize, usize)]) -> Result<DiagElement, DiagramError> {
        if i == 0 || i + 1 >= self.n + 1 || i >= self.n {
            return Err(DiagramError::GeneratorOutOfRange { idx: i, n: self.n });
        }
        let blk = self.kind.block();
        let cols = self.cols();
        let off = (i - 1) * blk;
        let width = 2 * blk;
        let mut cupped = vec![false; width];
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for &(a, b) in local_cups {
            cupped[a] = true;
            cupped[b] = true;
            // bottom cup
            pairs.push((off + a, off + b));
            // top cap at the mirrored positions
            pairs.push((2 * cols - 1 - (off + a), 2 * cols - 1 - (off + b)));
        }
        for c in 0..cols {
            let local = c.checked_sub(off).filter(|&l| l < width);
            let vertical = match local {
                Some(l) => !cupped[l],
                None => true,
            };
            if vertical {
                pairs.push((c, 2 * cols - 1 - c));
            }
        }
        let d = PlanarPairing::new(2 * cols, &pairs)?;
        self.check_colours(&d)?;
        Ok(DiagElement::single(
            self.n,
            d,
            RationalFn::one(self.weight.alphabet()),
        ))
    }

    /// Product `a · b`, drawn with `b` stacked on top of `a`; closed loops
    /// contribute the loop weight.
    pub fn mul(&self, a: &DiagElement, b: &DiagElement) -> DiagElement {
        assert_eq!(a.n, b.n);
        let cols = self.cols();
        let mut out = DiagElement::zero(self.n);
        for (da, ca) in &a.terms {
            for (db, cb) in &b.terms {
                let (d, loops) = stack(da, db, cols);
                let mut c = ca.mul(cb);
                for _ in 0..loops {
                    c = c.mul(&self.weight);
                }
                out.add_term(d, c);
            }
        }
        out
    }

    /// Markov trace: close every bottom column onto the top column above
    /// it; each term contributes `weight^loops`.
    pub fn trace(&self, a: &DiagElement) -> RationalFn {
        let cols = self.cols();
        let mut out = RationalFn::zero(self.weight.alphabet());
        for (d, c) in &a.terms {
            let loops = closure_loops(d, cols, cols);
            let mut t = c.clone();
            for _ in 0..loops {
                t = t.mul(&self.weight);
            }
            out = out.add(&t);
        }
        out
    }

    /// Partial trace closing the last strand (one column for Temperley–
    /// Lieb, one block of two columns for Fuss–Catalan), landing in the
    /// `(n-1)`-box algebra.
    pub fn partial_trace(&self, a: &DiagElement) -> DiagElement {
        let cols = self.cols();
        let k = self.kind.block();
        let mut out = DiagElement::zero(self.n - 1);
        for (d, c) in &a.terms {
            let (nd, loops) = partial_close(d, cols, k);
            let mut t = c.clone();
            for _ in 0..loops {
                t = t.mul(&self.weight);
            }
            out.add_term(nd, t);
        }
        out
    }

    /// The diagram involution: flip every diagram upside down and
    /// conjugate every coefficient.
    pub fn star(&self, a: &DiagElement) -> Result<DiagElement, crate::scalar::ScalarError> {
        let mut out = DiagElement::zero(a.n);
        for (d, c) in &a.terms {
            out.add_term(d.flipped(), c.conj()?);
        }
        Ok(out)
    }

    /// Rotation by `clicks` marked-interval clicks; one click moves past
    /// one boundary point (Temperley–Lieb) or one two-point block
    /// (Fuss–Catalan).
    pub fn rotate(&self, a: &DiagElement, clicks: i64) -> DiagElement {
        let step = self.kind.block() as i64;
        let mut out = DiagElement::zero(a.n);
        for (d, c) in &a.terms {
            out.add_term(d.rotated(clicks * step), c.clone());
        }
        out
    }

    /// Embed a 2-box element at strand position `i` (acting on strands
    /// `i, i+1`) inside this `n`-box algebra.
    pub fn embed_two_box(&self, x: &DiagElement, i: usize) -> Result<DiagElement, DiagramError> {
        assert_eq!(x.n, 2, "embed_two_box takes a 2-box argument");
        if i == 0 || i >= self.n {
            return Err(DiagramError::GeneratorOutOfRange { idx: i, n: self.n });
        }
        let blk = self.kind.block();
        let cols = self.cols();
        let small_cols = 2 * blk;
        let off = (i - 1) * blk;
        let mut out = DiagElement::zero(self.n);
        for (d, c) in &x.terms {
            let mut pairs: Vec<(usize, usize)> = Vec::new();
            for &(a, b) in d.pairs() {
                let map = |p: usize| -> usize {
                    if p < small_cols {
                        off + p
                    } else {
                        let j = 2 * small_cols - 1 - p;
                        2 * cols - 1 - (off + j)
                    }
                };
                pairs.push((map(a), map(b)));
            }
            for c2 in 0..cols {
                if !(off..off + small_cols).contains(&c2) {
                    pairs.push((c2, 2 * cols - 1 - c2));
                }
            }
            let nd = PlanarPairing::new(2 * cols, &pairs)?;
            out.add_term(nd, c.clone());
        }
        Ok(out)
    }

    /// Basis of all admissible diagrams, in canonical (sorted) order.
    pub fn basis(&self) -> Vec<PlanarPairing> {
        let cols = self.cols();
        let kind = self.kind;
        let adm = move |a: usize, b: usize| kind.colour(point_col(a, cols)) == kind.colour(point_col(b, cols));
        let mut v = PlanarPairing::enumerate(2 * cols, &adm);
        v.sort();
        v
    }

    /// Gram matrix `G[a][b] = trace(star(a) · b)` over the diagram basis.
    pub fn gram_matrix(&self) -> Vec<Vec<RationalFn>> {
        let basis = self.basis();
        let one = RationalFn::one(self.weight.alphabet());
        let els: Vec<DiagElement> = basis
            .iter()
            .map(|d| DiagElement::single(self.n, d.clone(), one.clone()))
            .collect();
        let mut g = Vec::with_capacity(basis.len());
        for a in &basis {
            let astar = DiagElement::single(self.n, a.flipped(), one.clone());
            let row: Vec<RationalFn> = els.iter().map(|b| self.trace(&self.mul(&astar, b))).collect();
            g.push(row);
        }
        g
    }

    /// Inclusion into the `(n+1)`-box algebra by a vertical strand (one
    /// block) on the right.
    pub fn include_right(&self, a: &DiagElement) -> DiagElement {
        let blk = self.kind.block();
        let cols = self.cols();
        let new_cols = cols + blk;
        let mut out = DiagElement::zero(self.n + 1);
        for (d, c) in &a.terms {
            let map = |p: usize| -> usize {
                if p < cols {
                    p
                } else {
                    let j = 2 * cols - 1 - p;
                    2 * new_cols - 1 - j
                }
            };
            let mut pairs: Vec<(usize, usize)> =
                d.pairs().iter().map(|&(x, y)| (map(x), map(y))).collect();
            for j in cols..new_cols {
                pairs.push((j, 2 * new_cols - 1 - j));
            }
            out.add_term(
                PlanarPairing::new(2 * new_cols, &pairs).expect("inclusion preserves planarity"),
                c.clone(),
            );
        }
        out
    }

    /// Closed-form dimension of the diagram algebra.
    pub fn dimension(n: usize, kind: DiagramKind) -> BigUint {
        match kind {
            // Catalan number C(2n, n)/(n+1).
            DiagramKind::TemperleyLieb => binom(2 * n, n) / BigUint::from(n + 1),
            // Fuss–Catalan number C(3n, n)/(2n+1).
            DiagramKind::FussCatalan => binom(3 * n, n) / BigUint::from(2 * n + 1),
        }
    }
}

fn binom(n: usize, k: usize) -> BigUint {
    let mut r = BigUint::from(1u32);
    for i in 0..k {
        r = r * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    r
}

/// Column (horizontal position) of a boundary point.
fn point_col(p: usize, cols: usize) -> usize {
    if p < cols {
        p
    } else {
        2 * cols - 1 - p
    }
}

/// Resolve a strand graph: nodes are endpoints, `edges` are strand
/// segments, open nodes have degree one and everything else degree two.
/// Returns the pairing induced on open nodes plus the closed-loop count.
fn resolve_strands(
    total_nodes: usize,
    edges: &[(usize, usize)],
    is_open: impl Fn(usize) -> bool,
) -> (Vec<(usize, usize)>, usize) {
    let mut incidence: Vec<Vec<usize>> = vec![Vec::new(); total_nodes];
    for (id, &(u, v)) in edges.iter().enumerate() {
        incidence[u].push(id);
        incidence[v].push(id);
    }
    let mut used = vec![false; edges.len()];
    let mut pairs = Vec::new();
    for start in (0..total_nodes).filter(|&n| is_open(n)) {
        if incidence[start].iter().all(|&e| used[e]) {
            continue;
        }
        let mut cur = start;
        loop {
            let e = *incidence[cur]
                .iter()
                .find(|&&e| !used[e])
                .expect("open path must continue");
            used[e] = true;
            let (u, v) = edges[e];
            cur = if u == cur { v } else { u };
            if is_open(cur) {
                break;
            }
        }
        pairs.push((start, cur));
    }
    let mut loops = 0;
    for e0 in 0..edges.len() {
        if used[e0] {
            continue;
        }
        loops += 1;
        used[e0] = true;
        let (start, mut cur) = edges[e0];
        while cur != start {
            let e = *incidence[cur]
                .iter()
                .find(|&&e| !used[e])
                .expect("loop must close");
            used[e] = true;
            let (u, v) = edges[e];
            cur = if u == cur { v } else { u };
        }
    }
    (pairs, loops)
}

/// Stack `b` on top of `a` (both boxes with `cols` columns), returning the
/// composite pairing and the number of closed loops.
fn stack(a: &PlanarPairing, b: &PlanarPairing, cols: usize) -> (PlanarPairing, usize) {
    // Nodes: 0..cols result bottom; cols..2*cols the glued middle (column
    // j of a's top = column j of b's bottom); 2*cols..3*cols result top by
    // column.
    let map_a = |p: usize| -> usize {
        if p < cols {
            p
        } else {
            cols + (2 * cols - 1 - p)
        }
    };
    let map_b = |p: usize| -> usize {
        if p < cols {
            cols + p
        } else {
            2 * cols + (2 * cols - 1 - p)
        }
    };
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(2 * cols);
    for &(x, y) in a.pairs() {
        edges.push((map_a(x), map_a(y)));
    }
    for &(x, y) in b.pairs() {
        edges.push((map_b(x), map_b(y)));
    }
    let (node_pairs, loops) = resolve_strands(3 * cols, &edges, |n| n < cols || n >= 2 * cols);
    let to_point = |node: usize| -> usize {
        if node < cols {
            node
        } else {
            2 * cols - 1 - (node - 2 * cols)
        }
    };
    let pairs: Vec<(usize, usize)> = node_pairs.iter().map(|&(u, v)| (to_point(u), to_point(v))).collect();
    (
        PlanarPairing::new(2 * cols, &pairs).expect("stacking preserves planarity"),
        loops,
    )
}

/// Number of loops formed when the last `close` columns are closed; with
/// `close == cols` this is the full Markov closure.
fn closure_loops(d: &PlanarPairing, cols: usize, close: usize) -> usize {
    partial_close_impl(d, cols, close).1
}

fn partial_close(d: &PlanarPairing, cols: usize, close: usize) -> (PlanarPairing, usize) {
    let (pairs, loops) = partial_close_impl(d, cols, close);
    let new_cols = cols - close;
    (
        PlanarPairing::new(2 * new_cols, &pairs).expect("closure preserves planarity"),
        loops,
    )
}

/// Close the last `close` columns (join bottom column j with top column j
/// for `j >= cols - close`), returning the renumbered open pairs and the
/// loop count.
fn partial_close_impl(d: &PlanarPairing, cols: usize, close: usize) -> (Vec<(usize, usize)>, usize) {
    let total = 2 * cols;
    let mut edges: Vec<(usize, usize)> = d.pairs().to_vec();
    for j in (cols - close)..cols {
        edges.push((j, 2 * cols - 1 - j));
    }
    let open = |p: usize| -> bool { point_col(p, cols) < cols - close };
    let (node_pairs, loops) = resolve_strands(total, &edges, open);
    let new_cols = cols - close;
    let renumber = |p: usize| -> usize {
        if p < cols {
            p
        } else {
            let j = 2 * cols - 1 - p;
            2 * new_cols - 1 - j
        }
    };
    let pairs: Vec<(usize, usize)> = node_pairs.iter().map(|&(u, v)| (renumber(u), renumber(v))).collect();
    (pairs, loops)
}

/// Chebyshev-type loop polynomials: `U_0 = 1`, `U_1 = δ`,
/// `U_k = δ U_{k-1} - U_{k-2}`.  `U_n` is the Markov trace of the `n`-th
/// Jones–Wenzl idempotent.
pub fn chebyshev(k: usize, delta: &RationalFn) -> RationalFn {
    let one = RationalFn::one(delta.alphabet());
    let mut prev = one.clone();
    let mut cur = delta.clone();
    if k == 0 {
        return one;
    }
    for _ in 1..k {
        let next = delta.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// The `n`-th Jones–Wenzl idempotent in the Temperley–Lieb `n`-box algebra
/// with symbolic loop weight, by the standard recursion
/// `wj_{k+1} = ι(wj_k) - (U_{k-1}/U_k) ι(wj_k) e_k ι(wj_k)`.
pub fn jones_wenzl(n: usize, delta: &RationalFn) -> Result<DiagElement, DiagramError> {
    assert!(n >= 1);
    let alg1 = DiagAlgebra::new(1, DiagramKind::TemperleyLieb, delta.clone());
    let mut jw = alg1.one();
    for k in 1..n {
        let small = DiagAlgebra::new(k, DiagramKind::TemperleyLieb, delta.clone());
        let big = DiagAlgebra::new(k + 1, DiagramKind::TemperleyLieb, delta.clone());
        let incl = small.include_right(&jw);
        let ek = big.tl_e(k)?;
        let ratio = chebyshev(k - 1, delta)
            .div(&chebyshev(k, delta))
            .expect("Chebyshev denominator is nonzero symbolically");
        let corr = big.mul(&big.mul(&incl, &ek), &incl).scale(&ratio);
        jw = incl.sub(&corr);
    }
    Ok(jw)
}

impl fmt::Display for DiagElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{}] {}", c, d)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Alphabet;

    fn tl(n: usize) -> (DiagAlgebra, RationalFn) {
        let a = Alphabet::real(&["delta"]);
        let d = RationalFn::var(&a, "delta").unwrap();
        (DiagAlgebra::new(n, DiagramKind::TemperleyLieb, d.clone()), d)
    }

    fn fc(n: usize) -> (DiagAlgebra, RationalFn) {
        let a = Alphabet::real(&["gamma"]);
        let g = RationalFn::var(&a, "gamma").unwrap();
        (DiagAlgebra::new(n, DiagramKind::FussCatalan, g.clone()), g)
    }

    #[test]
    fn tl_dimensions_match_catalan() {
        for (n, want) in [(1usize, 1u32), (2, 2), (3, 5), (4, 14), (5, 42)] {
            let (alg, _) = tl(n);
            assert_eq!(alg.basis().len(), want as usize);
            assert_eq!(
                DiagAlgebra::dimension(n, DiagramKind::TemperleyLieb),
                BigUint::from(want)
            );
        }
    }

    #[test]
    fn fc_dimensions() {
        for (n, want) in [(1usize, 1u32), (2, 3), (3, 12), (4, 55)] {
            let (alg, _) = fc(n);
            assert_eq!(alg.basis().len(), want as usize);
            assert_eq!(
                DiagAlgebra::dimension(n, DiagramKind::FussCatalan),
                BigUint::from(want)
            );
        }
    }

    #[test]
    fn tl_relations() {
        let (alg, d) = tl(3);
        let e1 = alg.tl_e(1).unwrap();
        let e2 = alg.tl_e(2).unwrap();
        assert_eq!(alg.mul(&e1, &e1), e1.scale(&d));
        assert_eq!(alg.mul(&alg.mul(&e1, &e2), &e1), e1);
        assert_eq!(alg.mul(&alg.mul(&e2, &e1), &e2), e2);
        let (alg4, _) = tl(4);
        let f1 = alg4.tl_e(1).unwrap();
        let f3 = alg4.tl_e(3).unwrap();
        assert_eq!(alg4.mul(&f1, &f3), alg4.mul(&f3, &f1));
    }

    #[test]
    fn fc_relations() {
        let (alg, g) = fc(3);
        let g2 = g.mul(&g);
        let e1 = alg.fc_e(1).unwrap();
        let e2 = alg.fc_e(2).unwrap();
        let p1 = alg.fc_p(1).unwrap();
        let p2 = alg.fc_p(2).unwrap();
        assert_eq!(alg.mul(&e1, &e1), e1.scale(&g2));
        assert_eq!(alg.mul(&p1, &p1), p1.scale(&g));
        assert_eq!(alg.mul(&p1, &e1), e1.scale(&g));
        assert_eq!(alg.mul(&e1, &p1), e1.scale(&g));
        assert_eq!(alg.mul(&alg.mul(&e1, &e2), &e1), e1);
        assert_eq!(alg.mul(&alg.mul(&e1, &p2), &e1), e1.scale(&g));
        assert_eq!(alg.mul(&alg.mul(&p1, &e2), &p1), alg.mul(&p1, &p2));
        assert_eq!(alg.mul(&p1, &p2), alg.mul(&p2, &p1));
    }

    #[test]
    fn rotation_on_two_boxes() {
        let (alg, _) = tl(2);
        let e = alg.tl_e(1).unwrap();
        let one = alg.one();
        assert_eq!(alg.rotate(&one, 1), e);
        assert_eq!(alg.rotate(&e, 1), one);
        assert_eq!(alg.rotate(&e, 4), e);
        // Fuss–Catalan: one click swaps identity and E, fixes P.
        let (algf, _) = fc(2);
        let ef = algf.fc_e(1).unwrap();
        let pf = algf.fc_p(1).unwrap();
        assert_eq!(algf.rotate(&algf.one(), 1), ef);
        assert_eq!(algf.rotate(&pf, 1), pf);
        assert_eq!(algf.rotate(&pf, -1), pf);
    }

    #[test]
    fn traces_and_partial_traces() {
        let (alg, d) = tl(3);
        let d3 = d.mul(&d).mul(&d);
        assert_eq!(alg.trace(&alg.one()), d3);
        let e2 = alg.tl_e(2).unwrap();
        let (alg2, _) = tl(2);
        // Closing the top strand of e_2 gives the 2-box identity; closing
        // the identity multiplies by the loop weight.
        assert_eq!(alg.partial_trace(&e2), alg2.one());
        assert_eq!(alg.partial_trace(&alg.one()), alg2.one().scale(&d));
        // Trace of e_1 in the 3-box algebra: two loops.
        let e1 = alg.tl_e(1).unwrap();
        assert_eq!(alg.trace(&e1), d.mul(&d));
        // Fuss–Catalan partial closures: E -> 1, P -> γ, identity -> γ².
        let (algf, g) = fc(2);
        let (algf1, _) = fc(1);
        assert_eq!(algf.partial_trace(&algf.fc_e(1).unwrap()), algf1.one());
        assert_eq!(algf.partial_trace(&algf.fc_p(1).unwrap()), algf1.one().scale(&g));
        assert_eq!(algf.partial_trace(&algf.one()), algf1.one().scale(&g.mul(&g)));
    }

    #[test]
    fn gram_matrix_tl2() {
        let (alg, d) = tl(2);
        let g = alg.gram_matrix();
        let d2 = d.mul(&d);
        // Basis order: e = {(0,1),(2,3)} sorts before identity {(0,3),(1,2)}.
        assert_eq!(g[0][0], d2);
        assert_eq!(g[0][1], d);
        assert_eq!(g[1][0], d);
        assert_eq!(g[1][1], d2);
    }

    #[test]
    fn jones_wenzl_small() {
        let a = Alphabet::real(&["delta"]);
        let d = RationalFn::var(&a, "delta").unwrap();
        let jw2 = jones_wenzl(2, &d).unwrap();
        let (alg, _) = tl(2);
        let inv_d = RationalFn::one(&a).div(&d).unwrap();
        let expect = alg.one().sub(&alg.tl_e(1).unwrap().scale(&inv_d));
        assert_eq!(jw2, expect);
        // Idempotent, annihilated by e_1, trace U_2 = δ² - 1.
        assert_eq!(alg.mul(&jw2, &jw2), jw2);
        assert!(alg.mul(&alg.tl_e(1).unwrap(), &jw2).is_zero());
        assert_eq!(alg.trace(&jw2), chebyshev(2, &d));
    }

    #[test]
    fn embedding_matches_generators() {
        let (alg, _) = tl(4);
        let (alg2, _) = tl(2);
        let e = alg2.tl_e(1).unwrap();
        for i in 1..4 {
            assert_eq!(alg.embed_two_box(&e, i).unwrap(), alg.tl_e(i).unwrap());
        }
        let (algf, _) = fc(3);
        let (algf2, _) = fc(2);
        for i in 1..3 {
            assert_eq!(
                algf.embed_two_box(&algf2.fc_e(1).unwrap(), i).unwrap(),
                algf.fc_e(i).unwrap()
            );
            assert_eq!(
                algf.embed_two_box(&algf2.fc_p(1).unwrap(), i).unwrap(),
                algf.fc_p(i).unwrap()
            );
        }
    }
}
