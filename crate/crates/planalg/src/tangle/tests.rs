use super::*;
use crate::baxter::{BaxterAlgebra, TwoBox};
use crate::presented::{BasisTable, Presentation};
use crate::scalar::{Alphabet, GaussianRational, RationalFn, Reality};
use std::sync::Arc;

fn v(alph: &Arc<Alphabet>, name: &str) -> RationalFn {
    RationalFn::var(alph, name).unwrap()
}

fn tl_table(n: usize, alph: &Arc<Alphabet>) -> BasisTable {
    BasisTable::build_default(Presentation::temperley_lieb(n, &v(alph, "d"))).unwrap()
}

fn tl_alph() -> Arc<Alphabet> {
    Alphabet::new(&[("d", Reality::Real), ("a", Reality::Real), ("b", Reality::Real)])
}

fn pure(alph: &Arc<Alphabet>, which: u8) -> TwoBox {
    let z = RationalFn::zero(alph);
    let o = RationalFn::one(alph);
    match which {
        0 => TwoBox::new(o, z.clone(), z),
        1 => TwoBox::new(z.clone(), o, z),
        _ => TwoBox::new(z.clone(), z, o),
    }
}

/// A single box standing on the bottom boundary compiles to the embedded
/// 2-box element at that position.
#[test]
fn single_box_compiles_to_embedded_generator() {
    let alph = tl_alph();
    let table = tl_table(2, &alph);
    let payload = TwoBox::new(v(&alph, "a"), v(&alph, "b"), RationalFn::zero(&alph));
    let net = TangleNet::new(
        2,
        vec![TangleBox { payload }],
        vec![
            (Port::Leg { box_id: 0, leg: 0 }, Port::Bottom(0)),
            (Port::Leg { box_id: 0, leg: 1 }, Port::Bottom(1)),
            (Port::Leg { box_id: 0, leg: 3 }, Port::Top(0)),
            (Port::Leg { box_id: 0, leg: 2 }, Port::Top(1)),
        ],
        0,
    )
    .unwrap();
    let compiler = TangleCompiler::new(&table, BaxterAlgebra::TemperleyLieb).unwrap();
    let got = compiler.compile(&net).unwrap();
    let want = table.pres.elem(&[
        (&[], v(&alph, "a")),
        (&[(0, 1)], v(&alph, "b")),
    ]);
    assert!(got.sub(&want).is_zero(), "got {got:?}");
}

/// Two boxes stacked left to right multiply bottom-up: the lower factor is
/// applied first.
#[test]
fn stacked_boxes_multiply_in_order() {
    let alph = tl_alph();
    let table = tl_table(3, &alph);
    let (a, b) = (v(&alph, "a"), v(&alph, "b"));
    let payload = TwoBox::new(a.clone(), b.clone(), RationalFn::zero(&alph));
    let leg = |box_id: usize, leg: u8| Port::Leg { box_id, leg };
    // Box 0 stands on strands (1,2); box 1 stands on box 0's right output
    // and strand 3.
    let net = TangleNet::new(
        3,
        vec![TangleBox { payload: payload.clone() }, TangleBox { payload }],
        vec![
            (leg(0, 0), Port::Bottom(0)),
            (leg(0, 1), Port::Bottom(1)),
            (leg(1, 0), leg(0, 2)),
            (leg(1, 1), Port::Bottom(2)),
            (leg(0, 3), Port::Top(0)),
            (leg(1, 3), Port::Top(1)),
            (leg(1, 2), Port::Top(2)),
        ],
        0,
    )
    .unwrap();
    let compiler = TangleCompiler::new(&table, BaxterAlgebra::TemperleyLieb).unwrap();
    let got = compiler.compile(&net).unwrap();
    // (a + b e₁)(a + b e₂) expanded in the reduced-word basis.
    let ab = a.mul(&b);
    let want = table.pres.elem(&[
        (&[], a.mul(&a)),
        (&[(0, 1)], ab.clone()),
        (&[(0, 2)], ab),
        (&[(0, 1), (0, 2)], b.mul(&b)),
    ]);
    assert!(got.sub(&want).is_zero(), "got {got:?}");
}

/// Capping any pair of legs of the `s` generator annihilates it.
#[test]
fn capped_s_box_vanishes() {
    let alph = Alphabet::new(&[("d", Reality::Real)]);
    let table =
        BasisTable::build_default(Presentation::liu(2, &v(&alph, "d"), &GaussianRational::i()))
            .unwrap();
    let leg = |l: u8| Port::Leg { box_id: 0, leg: l };
    // A fully self-capped box floating next to two identity strands.
    let net = TangleNet::new(
        2,
        vec![TangleBox { payload: pure(&alph, 2) }],
        vec![
            (leg(0), leg(1)),
            (leg(2), leg(3)),
            (Port::Bottom(0), Port::Top(0)),
            (Port::Bottom(1), Port::Top(1)),
        ],
        0,
    )
    .unwrap();
    let alg = BaxterAlgebra::SinglyGenerated { eps: GaussianRational::i() };
    let compiler = TangleCompiler::new(&table, alg).unwrap();
    assert!(compiler.compile(&net).unwrap().is_zero());
}

/// A fully self-capped braid box evaluates to the twist weight times the
/// loop weight, matching `e·g·e = τ⁻¹·e` and `e² = δ·e` in the presented
/// algebra.
#[test]
fn capped_braid_box_matches_twist_relation() {
    let alph = Alphabet::new(&[("t", Reality::UnitModulus), ("q", Reality::UnitModulus)]);
    let (tau, q) = (v(&alph, "t"), v(&alph, "q"));
    let pres = Presentation::bmw(1, &tau, &q, false);
    let delta = pres.loop_factor.clone();
    let table = BasisTable::build_default(pres).unwrap();
    let leg = |l: u8| Port::Leg { box_id: 0, leg: l };
    let net = TangleNet::new(
        1,
        vec![TangleBox { payload: pure(&alph, 2) }],
        vec![
            (leg(0), leg(1)),
            (leg(2), leg(3)),
            (Port::Bottom(0), Port::Top(0)),
        ],
        0,
    )
    .unwrap();
    let compiler = TangleCompiler::new(&table, BaxterAlgebra::Bmw { big_q: q }).unwrap();
    let got = compiler.compile(&net).unwrap();
    let want_coeff = tau.inv().unwrap().mul(&delta);
    let want = table.pres.elem(&[(&[], want_coeff)]);
    assert!(got.sub(&want).is_zero(), "got {got:?}");
}

/// A fully self-capped half-normalised Fuss–Catalan cup box evaluates to
/// `γ²`, matching `E·P̂·E = γ²·E`.
#[test]
fn capped_fuss_catalan_box_matches_block_relation() {
    let alph = Alphabet::new(&[("g", Reality::Real)]);
    let gamma = v(&alph, "g");
    let pres = Presentation::fuss_catalan(1, &gamma);
    let table = BasisTable::build_default(pres).unwrap();
    let leg = |l: u8| Port::Leg { box_id: 0, leg: l };
    let net = TangleNet::new(
        1,
        vec![TangleBox { payload: pure(&alph, 2) }],
        vec![
            (leg(0), leg(1)),
            (leg(2), leg(3)),
            (Port::Bottom(0), Port::Top(0)),
        ],
        0,
    )
    .unwrap();
    let compiler =
        TangleCompiler::new(&table, BaxterAlgebra::FussCatalan { gamma: gamma.clone() }).unwrap();
    let got = compiler.compile(&net).unwrap();
    let want = table.pres.elem(&[(&[], gamma.mul(&gamma))]);
    assert!(got.sub(&want).is_zero(), "got {got:?}");
}

/// Free closed loops each contribute the loop weight.
#[test]
fn free_loops_multiply_by_loop_weight() {
    let alph = tl_alph();
    let table = tl_table(1, &alph);
    let net =
        TangleNet::new(1, vec![], vec![(Port::Bottom(0), Port::Top(0))], 2).unwrap();
    let compiler = TangleCompiler::new(&table, BaxterAlgebra::TemperleyLieb).unwrap();
    let got = compiler.compile(&net).unwrap();
    let d = v(&alph, "d");
    let want = table.pres.elem(&[(&[], d.mul(&d))]);
    assert!(got.sub(&want).is_zero());
}

/// A crossing of boundary strands admits no planar embedding.
#[test]
fn crossing_net_rejected() {
    let err = TangleNet::new(
        2,
        vec![],
        vec![(Port::Bottom(0), Port::Top(1)), (Port::Bottom(1), Port::Top(0))],
        0,
    );
    assert!(matches!(err, Err(TangleError::NonPlanar)));
    // The uncrossed variants are accepted.
    TangleNet::new(
        2,
        vec![],
        vec![(Port::Bottom(0), Port::Top(0)), (Port::Bottom(1), Port::Top(1))],
        0,
    )
    .unwrap();
    TangleNet::new(
        2,
        vec![],
        vec![(Port::Bottom(0), Port::Bottom(1)), (Port::Top(0), Port::Top(1))],
        0,
    )
    .unwrap();
}

/// Missing or duplicated ports are reported.
#[test]
fn matching_errors_reported() {
    let err = TangleNet::new(1, vec![], vec![], 0);
    assert!(matches!(err, Err(TangleError::PortMultiplicity(_, 0))));
    let err = TangleNet::new(
        1,
        vec![],
        vec![(Port::Bottom(0), Port::Top(0)), (Port::Bottom(0), Port::Top(0))],
        0,
    );
    assert!(matches!(err, Err(TangleError::PortMultiplicity(_, 2))));
}

/// The double-row transfer network is planar for every leg-offset choice.
#[test]
fn transfer_net_builds_planar() {
    let alph = tl_alph();
    let payload = TwoBox::new(v(&alph, "a"), v(&alph, "b"), RationalFn::zero(&alph));
    for n in 1..=3 {
        for rb in 0..4 {
            for rt in 0..4 {
                build_transfer_net(n, &payload, rb, rt).unwrap();
            }
        }
    }
}

/// An identity payload makes the transfer network a pure wiring diagram;
/// with unrotated legs it compiles to the identity.
#[test]
fn transfer_of_identity_payload() {
    let alph = tl_alph();
    let table = tl_table(2, &alph);
    let compiler = TangleCompiler::new(&table, BaxterAlgebra::TemperleyLieb).unwrap();
    let net = build_transfer_net(2, &pure(&alph, 0), 0, 0).unwrap();
    let got = compiler.compile(&net).unwrap();
    // A pure wiring diagram compiles to a single reduced word.
    assert_eq!(got.terms.len(), 1, "got {got:?}");
}

/// A box attached with its legs rotated by one click compiles to the
/// rotated payload: the peel and the branch expansion agree on it.
#[test]
fn rotated_box_compiles_to_rotated_payload() {
    let alph = tl_alph();
    let table = tl_table(2, &alph);
    let (a, b) = (v(&alph, "a"), v(&alph, "b"));
    let payload = TwoBox::new(a.clone(), b.clone(), RationalFn::zero(&alph));
    // Legs 1,2 on the bottom, legs 3,0 on the top: one click of rotation.
    let net = TangleNet::new(
        2,
        vec![TangleBox { payload }],
        vec![
            (Port::Leg { box_id: 0, leg: 1 }, Port::Bottom(0)),
            (Port::Leg { box_id: 0, leg: 2 }, Port::Bottom(1)),
            (Port::Leg { box_id: 0, leg: 0 }, Port::Top(0)),
            (Port::Leg { box_id: 0, leg: 3 }, Port::Top(1)),
        ],
        0,
    )
    .unwrap();
    let compiler = TangleCompiler::new(&table, BaxterAlgebra::TemperleyLieb).unwrap();
    let got = compiler.compile(&net).unwrap();
    // The Temperley–Lieb rotation action swaps the two coefficients.
    let want = table.pres.elem(&[(&[], b), (&[(0, 1)], a)]);
    assert!(got.sub(&want).is_zero(), "got {got:?}");
}

/// Compiling the cut-open transfer network and closing the extra strand
/// with the partial trace agrees with compiling the closed network, for
/// every leg-offset convention.
#[test]
fn open_transfer_net_closes_to_closed_net() {
    let alph = tl_alph();
    let payload = TwoBox::new(v(&alph, "a"), v(&alph, "b"), RationalFn::zero(&alph));
    for n in 1..=2usize {
        let lower = tl_table(n, &alph);
        let upper = tl_table(n + 1, &alph);
        let closed_compiler = TangleCompiler::new(&lower, BaxterAlgebra::TemperleyLieb).unwrap();
        let open_compiler = TangleCompiler::new(&upper, BaxterAlgebra::TemperleyLieb).unwrap();
        for rb in 0..4 {
            for rt in 0..4 {
                let closed = closed_compiler
                    .compile(&build_transfer_net(n, &payload, rb, rt).unwrap())
                    .unwrap();
                let open = open_compiler
                    .compile(&build_transfer_net_open(n, &payload, rb, rt).unwrap())
                    .unwrap();
                let traced = upper.partial_trace(&open, &lower).unwrap();
                assert!(
                    traced.sub(&closed).is_zero(),
                    "n={n} rb={rb} rt={rt}: open {traced:?} closed {closed:?}"
                );
            }
        }
    }
}

/// A full turn of the marked interval is the identity on 2-box elements.
#[test]
fn rotation_full_turn_is_identity() {
    let alph = Alphabet::new(&[("d", Reality::Real), ("a", Reality::Real), ("b", Reality::Real), ("c", Reality::Real)]);
    let table =
        BasisTable::build_default(Presentation::liu(2, &v(&alph, "d"), &GaussianRational::i()))
            .unwrap();
    let alg = BaxterAlgebra::SinglyGenerated { eps: GaussianRational::i() };
    let x = table.pres.elem(&[
        (&[], v(&alph, "a")),
        (&[(0, 1)], v(&alph, "b")),
        (&[(1, 1)], v(&alph, "c")),
    ]);
    let turned = rotation_tangle(&x, 4, &table, &alg).unwrap();
    assert!(turned.sub(&x).is_zero());
    let half = rotation_tangle(&x, 2, &table, &alg).unwrap();
    assert!(!half.sub(&x).is_zero(), "ε = i flips the s coefficient under a half turn");
    let back = rotation_tangle(&half, -2, &table, &alg).unwrap();
    assert!(back.sub(&x).is_zero());
}

/// The textual format parses to the same network as the programmatic
/// construction.
#[test]
fn parse_net_round_trip() {
    let alph = tl_alph();
    let table = tl_table(2, &alph);
    let src = "
        # a single cup-cap box on two strands
        boundary 2
        box a e
        strand b0 a.0
        strand b1 a.1
        strand a.3 t0
        strand a.2 t1
    ";
    let net = parse_net(src, &alph).unwrap();
    let compiler = TangleCompiler::new(&table, BaxterAlgebra::TemperleyLieb).unwrap();
    let got = compiler.compile(&net).unwrap();
    let want = table.pres.elem(&[(&[(0, 1)], RationalFn::one(&alph))]);
    assert!(got.sub(&want).is_zero());

    assert!(matches!(
        parse_net("boundary 1\nstrand b0 q0", &alph),
        Err(TangleError::Parse { line: 2, .. })
    ));
    assert!(matches!(parse_net("strand b0 t0", &alph), Err(TangleError::Parse { .. })));
}

/// Temperley–Lieb payloads reject any use of a third generator.
#[test]
fn third_generator_rejected_for_temperley_lieb() {
    let alph = tl_alph();
    let table = tl_table(1, &alph);
    let leg = |l: u8| Port::Leg { box_id: 0, leg: l };
    let net = TangleNet::new(
        1,
        vec![TangleBox { payload: pure(&alph, 2) }],
        vec![
            (leg(0), leg(1)),
            (leg(2), leg(3)),
            (Port::Bottom(0), Port::Top(0)),
        ],
        0,
    )
    .unwrap();
    let compiler = TangleCompiler::new(&table, BaxterAlgebra::TemperleyLieb).unwrap();
    assert!(matches!(compiler.compile(&net), Err(TangleError::NoThirdGenerator)));
}
