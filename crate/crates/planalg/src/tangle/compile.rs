//! Compilation of planar networks into presented-algebra elements.
//!
//! Each summand of the expanded network is normalised in three moves:
//! boxes standing directly on adjacent bottom strands are peeled off into
//! embedded 2-box factors, identity- and `e`-payload boxes dissolve into
//! their internal pairings (closed loops contributing the loop weight),
//! and a box with two legs joined by a strand is closed with the algebra's
//! closure weight (zero for the `s` generator, the twist weights for the
//! braid generator).  What remains must be a pure noncrossing pairing of
//! the boundary, which is mapped to its reduced word through the diagram
//! realisation of the `e`-generated subalgebra.

use super::net::{Port, TangleNet};
use super::TangleError;
use crate::baxter::{BaxterAlgebra, TwoBox, TwoBoxCtx};
use crate::diagram::{DiagAlgebra, DiagramKind, PlanarPairing};
use crate::presented::{AlgebraTower, AlgElem, BasisTable, Presentation, Word};
use crate::scalar::RationalFn;
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// Rotation direction assigned to one counterclockwise click of a box
/// against the 2-box rotation action.  Calibrated (together with the
/// transfer-network leg offsets) so that compiled transfer operators
/// commute; only algebras whose rotation action distinguishes a direction
/// are sensitive to it.
const ROTATION_SIGN: i8 = 1;

/// Closure behaviour of the third 2-box basis element.
enum ThirdClosure {
    /// The algebra has no third generator.
    None,
    /// Any capping annihilates (the `s` generator).
    Zero,
    /// Top/bottom and side closures contribute fixed weights (the braid
    /// generator and the half-normalised Fuss–Catalan cup element).
    Weights { top_bottom: RationalFn, side: RationalFn },
}

pub struct TangleCompiler<'a> {
    ctx: TwoBoxCtx<'a>,
    pair_words: HashMap<PlanarPairing, Word>,
    loop_weight: RationalFn,
    third: ThirdClosure,
    n: usize,
    rot_sign: i8,
}

#[derive(Clone)]
struct State {
    adj: HashMap<Port, Port>,
    /// Boxes whose payload has not been expanded yet.
    full: BTreeMap<usize, TwoBox>,
    /// Boxes committed to their third-generator component (the component's
    /// coefficient already folded into `coeff`).
    live: BTreeSet<usize>,
    coeff: RationalFn,
    factors: Vec<AlgElem>,
}

impl State {
    fn connect(&mut self, a: Port, b: Port) {
        self.adj.insert(a, b);
        self.adj.insert(b, a);
    }

    fn disconnect(&mut self, p: Port) -> Port {
        let q = self.adj.remove(&p).expect("port is connected");
        self.adj.remove(&q);
        q
    }

    /// Remove two ports (an internal pairing of a dissolving box, or the
    /// surviving legs of a closed box) and join their outside partners;
    /// returns `true` when this closes a loop.
    fn splice(&mut self, a: Port, b: Port) -> bool {
        let pa = self.disconnect(a);
        if pa == b {
            return true;
        }
        let pb = self.disconnect(b);
        self.connect(pa, pb);
        false
    }
}

impl<'a> TangleCompiler<'a> {
    pub fn new(table: &'a BasisTable, alg: BaxterAlgebra) -> Result<Self, TangleError> {
        let n = table.pres.n;
        let loop_weight = table.pres.loop_factor.clone();
        let third = match &alg {
            BaxterAlgebra::TemperleyLieb => ThirdClosure::None,
            BaxterAlgebra::SinglyGenerated { .. } => ThirdClosure::Zero,
            BaxterAlgebra::FussCatalan { gamma } => {
                let w = table.pres.families[1].closure.div(gamma)?;
                ThirdClosure::Weights { top_bottom: w.clone(), side: w }
            }
            BaxterAlgebra::Bmw { .. } => {
                let w = table.pres.families[1].closure.clone();
                ThirdClosure::Weights { top_bottom: w.clone(), side: w.inv()? }
            }
        };

        // Words for the noncrossing pairings, through the diagrammatic
        // realisation of the subalgebra generated by the `e` family.
        let tl = BasisTable::build_default(Presentation::temperley_lieb(n, &loop_weight))?;
        let diag = DiagAlgebra::new(n, DiagramKind::TemperleyLieb, loop_weight.clone());
        let mut pair_words = HashMap::new();
        for w in &tl.basis {
            let mut img = diag.one();
            for g in &w.0 {
                img = diag.mul(&img, &diag.tl_e(g.idx as usize)?);
            }
            assert_eq!(img.terms.len(), 1, "reduced word must be a single diagram");
            let (d, c) = img.terms.iter().next().unwrap();
            assert!(c.is_one(), "reduced word must carry unit coefficient");
            pair_words.insert(d.clone(), w.clone());
        }
        assert_eq!(pair_words.len(), tl.dim(), "word/diagram map must be bijective");

        Ok(TangleCompiler {
            ctx: TwoBoxCtx::new(table, alg),
            pair_words,
            loop_weight,
            third,
            n,
            rot_sign: ROTATION_SIGN,
        })
    }

    /// Override the calibrated rotation direction (used by the
    /// calibration probes).
    #[cfg(test)]
    pub(crate) fn set_rotation_sign(&mut self, sign: i8) {
        self.rot_sign = sign;
    }

    pub fn compile(&self, net: &TangleNet) -> Result<AlgElem, TangleError> {
        assert_eq!(net.n, self.n, "network arity must match the target table");
        if matches!(self.third, ThirdClosure::None)
            && net.boxes.iter().any(|b| !b.payload.c_x.is_zero())
        {
            return Err(TangleError::NoThirdGenerator);
        }
        let mut adj = HashMap::new();
        for &(a, b) in &net.strands {
            adj.insert(a, b);
            adj.insert(b, a);
        }
        let mut coeff = RationalFn::one(self.loop_weight.alphabet());
        for _ in 0..net.free_loops {
            coeff = coeff.mul(&self.loop_weight);
        }
        let full = net
            .boxes
            .iter()
            .enumerate()
            .map(|(i, b)| (i, b.payload.clone()))
            .collect();
        let state = State { adj, full, live: BTreeSet::new(), coeff, factors: Vec::new() };
        self.eval(state)
    }

    /// Strand position (1-based) and box rotation (in clicks) when some
    /// counterclockwise-adjacent leg pair `(r, r+1)` of the box stands
    /// directly on two adjacent bottom frontier points.
    fn standing_position(&self, st: &State, b: usize) -> Option<(usize, u8)> {
        for r in 0..4u8 {
            let p0 = st.adj.get(&Port::Leg { box_id: b, leg: r });
            let p1 = st.adj.get(&Port::Leg { box_id: b, leg: (r + 1) % 4 });
            if let (Some(Port::Bottom(i)), Some(Port::Bottom(j))) = (p0, p1) {
                if *j == *i + 1 {
                    return Some((*i + 1, r));
                }
            }
        }
        None
    }

    /// Peel off a box standing at position `i` with leg `r` in the
    /// bottom-left corner: its embedded payload, carried through `r`
    /// rotation clicks, becomes the next vertical factor and its upper
    /// legs become the new bottom frontier at that position.
    fn peel(&self, st: &mut State, b: usize, i: usize, r: u8, payload: &TwoBox) {
        let mut p = payload.clone();
        for _ in 0..r {
            p = p.rotate(&self.ctx.alg, self.rot_sign);
        }
        st.factors.push(self.ctx.embed(&p, i));
        let leg = |l: u8| Port::Leg { box_id: b, leg: (l + r) % 4 };
        st.disconnect(leg(0));
        st.disconnect(leg(1));
        let p3 = st.disconnect(leg(3));
        if p3 == leg(2) {
            st.connect(Port::Bottom(i - 1), Port::Bottom(i));
        } else {
            let p2 = st.disconnect(leg(2));
            st.connect(Port::Bottom(i - 1), p3);
            st.connect(Port::Bottom(i), p2);
        }
    }

    fn eval(&self, mut st: State) -> Result<AlgElem, TangleError> {
        // Peel standing boxes until none is left in standard position.
        loop {
            let hit = st
                .full
                .keys()
                .chain(st.live.iter())
                .find_map(|&b| self.standing_position(&st, b).map(|(i, r)| (b, i, r)));
            let Some((b, i, r)) = hit else { break };
            if let Some(payload) = st.full.remove(&b) {
                self.peel(&mut st, b, i, r, &payload);
            } else {
                st.live.remove(&b);
                let alph = self.loop_weight.alphabet();
                let pure_x = TwoBox::new(
                    RationalFn::zero(alph),
                    RationalFn::zero(alph),
                    RationalFn::one(alph),
                );
                self.peel(&mut st, b, i, r, &pure_x);
            }
        }

        // Expand the payload of one remaining undetermined box.
        if let Some((&b, _)) = st.full.iter().next() {
            let payload = st.full.remove(&b).unwrap();
            let mut out = AlgElem::zero();
            for (c, kind) in [(&payload.c_one, 0u8), (&payload.c_e, 1), (&payload.c_x, 2)] {
                if c.is_zero() {
                    continue;
                }
                let mut child = st.clone();
                child.coeff = child.coeff.mul(c);
                match kind {
                    0 | 1 => {
                        // 𝟙 pairs the legs vertically, e horizontally.
                        let pairs: [(u8, u8); 2] = if kind == 0 { [(0, 3), (1, 2)] } else { [(0, 1), (2, 3)] };
                        for (x, y) in pairs {
                            let looped = child.splice(
                                Port::Leg { box_id: b, leg: x },
                                Port::Leg { box_id: b, leg: y },
                            );
                            if looped {
                                child.coeff = child.coeff.mul(&self.loop_weight);
                            }
                        }
                    }
                    _ => {
                        child.live.insert(b);
                    }
                }
                out = out.add(&self.eval(child)?);
            }
            return Ok(out);
        }

        // Close any live box with two legs joined by a strand.
        let closure = st.live.iter().find_map(|&b| {
            for x in 0..4u8 {
                for y in x + 1..4 {
                    let px = st.adj.get(&Port::Leg { box_id: b, leg: x });
                    if px == Some(&Port::Leg { box_id: b, leg: y }) {
                        return Some((b, x, y));
                    }
                }
            }
            None
        });
        if let Some((b, x, y)) = closure {
            match &self.third {
                ThirdClosure::None => unreachable!("validated in compile"),
                ThirdClosure::Zero => return Ok(AlgElem::zero()),
                ThirdClosure::Weights { top_bottom, side } => {
                    let w = match (x, y) {
                        (0, 1) | (2, 3) => top_bottom,
                        (1, 2) | (0, 3) => side,
                        _ => return Err(TangleError::OppositeClosure),
                    };
                    st.live.remove(&b);
                    st.coeff = st.coeff.mul(w);
                    st.disconnect(Port::Leg { box_id: b, leg: x });
                    let rest: Vec<u8> = (0..4).filter(|l| *l != x && *l != y).collect();
                    let looped = st.splice(
                        Port::Leg { box_id: b, leg: rest[0] },
                        Port::Leg { box_id: b, leg: rest[1] },
                    );
                    if looped {
                        st.coeff = st.coeff.mul(&self.loop_weight);
                    }
                    return self.eval(st);
                }
            }
        }
        if !st.live.is_empty() {
            return Err(TangleError::SweepUnsupported);
        }

        // Pure boundary pairing: map to its reduced word.
        if st.coeff.is_zero() {
            return Ok(AlgElem::zero());
        }
        let point = |p: Port| -> usize {
            match p {
                Port::Bottom(i) => i,
                Port::Top(i) => 2 * self.n - 1 - i,
                Port::Leg { .. } => unreachable!("no boxes remain"),
            }
        };
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (&a, &b) in &st.adj {
            if a < b {
                pairs.push((point(a), point(b)));
            }
        }
        let d = PlanarPairing::new(2 * self.n, &pairs)?;
        let word = self
            .pair_words
            .get(&d)
            .expect("planar pairing has a reduced word")
            .clone();
        let mut refs: Vec<&AlgElem> = st.factors.iter().collect();
        let top = AlgElem::single(word, st.coeff);
        refs.push(&top);
        Ok(self.ctx.table.product(&refs))
    }
}

/// Rotation of a 2-box element by marked-interval clicks, through the
/// coefficient-triple action.
pub fn rotation_tangle(
    x: &AlgElem,
    clicks: i64,
    table: &BasisTable,
    alg: &BaxterAlgebra,
) -> Result<AlgElem, TangleError> {
    let ctx = TwoBoxCtx::new(table, alg.clone());
    let mut b = ctx.to_twobox(x).ok_or(TangleError::SweepUnsupported)?;
    let dir: i8 = if clicks >= 0 { 1 } else { -1 };
    for _ in 0..clicks.unsigned_abs() {
        b = b.rotate(alg, dir);
    }
    Ok(ctx.elem(&b))
}

/// The trace tangle: iterated strand closure down the tower.
pub fn trace_tangle(
    tower: &AlgebraTower,
    level: usize,
    x: &AlgElem,
) -> Result<RationalFn, TangleError> {
    Ok(tower.trace(level, x)?)
}
