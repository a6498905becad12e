use super::presentation::{Presentation, FAM_E, FAM_S};
use super::table::{AlgebraTower, BasisTable, BuildLimits};
use super::ybr::{ps2_idempotents, ybr_span_test};
use super::{PresentedError, RuleSet};
use crate::diagram::{DiagAlgebra, DiagramKind};
use crate::scalar::{Alphabet, GaussianRational, RationalFn};

fn v(alph: &std::sync::Arc<Alphabet>, name: &str) -> RationalFn {
    RationalFn::var(alph, name).unwrap()
}

#[test]
fn temperley_lieb_dimensions() {
    let alph = Alphabet::real(&["d"]);
    let d = v(&alph, "d");
    for (n, dim) in [(1, 1), (2, 2), (3, 5), (4, 14), (5, 42)] {
        let t = BasisTable::build_default(Presentation::temperley_lieb(n, &d)).unwrap();
        assert_eq!(t.dim(), dim, "TL_{n}");
    }
}

#[test]
fn fuss_catalan_dimensions() {
    let alph = Alphabet::real(&["g"]);
    let g = v(&alph, "g");
    for (n, dim) in [(1, 1), (2, 3), (3, 12)] {
        let t = BasisTable::build_default(Presentation::fuss_catalan(n, &g)).unwrap();
        assert_eq!(t.dim(), dim, "FC_{n}");
    }
}

#[test]
fn liu_dimensions() {
    let alph = Alphabet::real(&["d"]);
    let d = v(&alph, "d");
    for (n, dim) in [(1, 1), (2, 3), (3, 15), (4, 105)] {
        let t = BasisTable::build_default(Presentation::liu(n, &d, &GaussianRational::i())).unwrap();
        assert_eq!(t.dim(), dim, "L_{n}");
    }
    // The opposite imaginary unit gives the same dimensions.
    let t = BasisTable::build_default(Presentation::liu(3, &d, &GaussianRational::i().conj())).unwrap();
    assert_eq!(t.dim(), 15);
}

#[test]
fn bmw_dimensions() {
    let alph = Alphabet::new(&[
        ("t", crate::scalar::Reality::UnitModulus),
        ("q", crate::scalar::Reality::UnitModulus),
    ]);
    let (t, q) = (v(&alph, "t"), v(&alph, "q"));
    for (n, dim) in [(1, 1), (2, 3), (3, 15), (4, 105)] {
        let tab = BasisTable::build_default(Presentation::bmw(n, &t, &q, false)).unwrap();
        assert_eq!(tab.dim(), dim, "W_{n}");
    }
}

#[test]
fn ambient_algebra_is_infinite_on_three_strands() {
    let alph = Alphabet::real(&["d", "a"]);
    let (d, a) = (v(&alph, "d"), v(&alph, "a"));
    let pres = Presentation::proto(3, &d, &a, &GaussianRational::one());
    let limits = BuildLimits { overlap_cap: 6, max_rules: 5_000, word_cap: 8 };
    match BasisTable::build(pres, limits) {
        Err(PresentedError::BasisCapExceeded { .. }) => {}
        other => panic!("expected basis cap overflow, got {:?}", other.map(|t| t.dim())),
    }
}

#[test]
fn two_strand_gram_and_traces() {
    let alph = Alphabet::real(&["d", "a"]);
    let (d, a) = (v(&alph, "d"), v(&alph, "a"));
    let tower = AlgebraTower::build_default(2, |n| Presentation::proto(n, &d, &a, &GaussianRational::one())).unwrap();
    let table = tower.top();
    assert_eq!(table.dim(), 3);
    // Basis order is (1, e, s) under the graded word order.
    let gram = tower.gram_matrix(&tower.basis_elems()).unwrap();
    let d2 = d.mul(&d);
    let want = [
        [d2.clone(), d.clone(), RationalFn::zero(&alph)],
        [d.clone(), d2.clone(), RationalFn::zero(&alph)],
        [RationalFn::zero(&alph), RationalFn::zero(&alph), d2.sub(&RationalFn::one(&alph))],
    ];
    for r in 0..3 {
        for c in 0..3 {
            assert!(gram[r][c].sub(&want[r][c]).is_zero(), "gram[{r}][{c}] = {}", gram[r][c]);
        }
    }
    // tr(s) = 0 and all partial closures of s vanish.
    let s = table.gen_elem(FAM_S, 1);
    assert!(tower.trace(1, &s).unwrap().is_zero());
    assert!(table.partial_trace(&s, &tower.levels[0]).unwrap().is_zero());
}

#[test]
fn tl_regular_representation() {
    let alph = Alphabet::real(&["d"]);
    let d = v(&alph, "d");
    let t = BasisTable::build_default(Presentation::temperley_lieb(2, &d)).unwrap();
    let rho = t.regular_representation(&t.gen_elem(FAM_E, 1)).unwrap();
    assert!(rho[0][0].is_zero() && rho[0][1].is_zero());
    assert!(rho[1][0].is_one());
    assert!(rho[1][1].sub(&d).is_zero());
    // Homomorphism property on e1·e1 = δ e1 via matrices.
    let e_sq = t.mul(&t.gen_elem(FAM_E, 1), &t.gen_elem(FAM_E, 1));
    let rho_sq = t.regular_representation(&e_sq).unwrap();
    for r in 0..2 {
        for c in 0..2 {
            let prod: RationalFn = (0..2).fold(RationalFn::zero(&alph), |acc, k| {
                acc.add(&rho[r][k].mul(&rho[k][c]))
            });
            assert!(prod.sub(&rho_sq[r][c]).is_zero());
        }
    }
}

#[test]
fn liu_minimal_polynomial_and_triple_relation() {
    let alph = Alphabet::real(&["d"]);
    let d = v(&alph, "d");
    let t = BasisTable::build_default(Presentation::liu(3, &d, &GaussianRational::i())).unwrap();
    for i in 1..3 {
        let s = t.gen_elem(FAM_S, i);
        let cube = t.product(&[&s, &s, &s]);
        assert!(t.reduce(&cube.sub(&s)).is_zero(), "s_{i}^3 = s_{i}");
    }
    // Trace symmetry on a pair of generators.
    let tower = AlgebraTower::build_default(3, |n| Presentation::liu(n, &d, &GaussianRational::i())).unwrap();
    let x = tower.top().gen_elem(FAM_S, 1);
    let y = tower.top().gen_elem(FAM_E, 2);
    let xy = tower.top().mul(&x, &y);
    let yx = tower.top().mul(&y, &x);
    assert!(tower.trace(2, &xy).unwrap().sub(&tower.trace(2, &yx).unwrap()).is_zero());
}

#[test]
fn bmw_star_is_braid_inverse() {
    let alph = Alphabet::new(&[
        ("t", crate::scalar::Reality::UnitModulus),
        ("q", crate::scalar::Reality::UnitModulus),
    ]);
    let (tau, q) = (v(&alph, "t"), v(&alph, "q"));
    let t = BasisTable::build_default(Presentation::bmw(3, &tau, &q, false)).unwrap();
    let g = t.gen_elem(FAM_S, 1);
    let gs = t.star(&g).unwrap();
    // g · g* = 1.
    assert!(t.reduce(&t.mul(&g, &gs).sub(&t.one())).is_zero());
    // Anti-homomorphism: (g1 g2)* = g2* g1*.
    let g2 = t.gen_elem(FAM_S, 2);
    let lhs = t.star(&t.mul(&g, &g2)).unwrap();
    let rhs = t.mul(&t.star(&g2).unwrap(), &t.star(&g).unwrap());
    assert!(t.reduce(&lhs.sub(&rhs)).is_zero());
}

#[test]
fn bmw_markov_trace_of_braid_generator() {
    let alph = Alphabet::new(&[
        ("t", crate::scalar::Reality::UnitModulus),
        ("q", crate::scalar::Reality::UnitModulus),
    ]);
    let (tau, q) = (v(&alph, "t"), v(&alph, "q"));
    let tower = AlgebraTower::build_default(2, |n| Presentation::bmw(n, &tau, &q, false)).unwrap();
    let table = tower.top();
    let delta = table.pres.loop_factor.clone();
    // tr(g_1) on two strands closes to τ⁻¹ · δ.
    let got = tower.trace(1, &table.gen_elem(FAM_S, 1)).unwrap();
    let want = tau.inv().unwrap().mul(&delta);
    assert!(got.sub(&want).is_zero());
    assert!(tower.trace(1, &table.one()).unwrap().sub(&delta.mul(&delta)).is_zero());
}

/// Structure constants of the presented engine agree with the diagram
/// engine under the generator dictionary.
fn cross_engine_check(n: usize, kind: DiagramKind) {
    let alph = Alphabet::real(&["g"]);
    let g = v(&alph, "g");
    let (pres, diag) = match kind {
        DiagramKind::TemperleyLieb => {
            let d = g.clone();
            (Presentation::temperley_lieb(n, &d), DiagAlgebra::new(n, kind, d))
        }
        DiagramKind::FussCatalan => {
            // The diagram engine counts per-strand loops, weight γ each.
            (Presentation::fuss_catalan(n, &g), DiagAlgebra::new(n, kind, g.clone()))
        }
    };
    let table = BasisTable::build_default(pres).unwrap();
    // Image of every basis word as a diagram element.
    let images: Vec<_> = table
        .basis
        .iter()
        .map(|w| {
            let mut acc = diag.one();
            for gsym in w.0.iter() {
                let gen = match (kind, gsym.fam) {
                    (DiagramKind::TemperleyLieb, FAM_E) => diag.tl_e(gsym.idx as usize).unwrap(),
                    (DiagramKind::FussCatalan, FAM_E) => diag.fc_e(gsym.idx as usize).unwrap(),
                    (DiagramKind::FussCatalan, FAM_S) => diag.fc_p(gsym.idx as usize).unwrap(),
                    _ => unreachable!(),
                };
                acc = diag.mul(&acc, &gen);
            }
            acc
        })
        .collect();
    // The images must be a basis: as many independent diagrams as words.
    let pairings = diag.basis();
    assert_eq!(pairings.len(), table.dim());
    let mat: Vec<Vec<RationalFn>> = pairings
        .iter()
        .map(|p| {
            images
                .iter()
                .map(|im| im.terms.get(p).cloned().unwrap_or_else(|| RationalFn::zero(&alph)))
                .collect()
        })
        .collect();
    assert_eq!(crate::scalar::linalg::rank(&mat), table.dim());
    // Structure constants: D(w_a · w_b) = D(w_a) · D(w_b) for all pairs.
    for (a, wa) in table.basis.iter().enumerate() {
        for (b, wb) in table.basis.iter().enumerate() {
            let ea = crate::presented::AlgElem::single(wa.clone(), RationalFn::one(&alph));
            let eb = crate::presented::AlgElem::single(wb.clone(), RationalFn::one(&alph));
            let coeffs = table.coeffs(&table.mul(&ea, &eb)).unwrap();
            let mut lhs = crate::diagram::DiagElement::zero(n);
            for (k, c) in coeffs.iter().enumerate() {
                lhs = lhs.add(&images[k].scale(c));
            }
            let rhs = diag.mul(&images[a], &images[b]);
            assert!(lhs.sub(&rhs).is_zero(), "pair ({a}, {b})");
        }
    }
}

#[test]
fn cross_engine_temperley_lieb() {
    for n in 1..=4 {
        cross_engine_check(n, DiagramKind::TemperleyLieb);
    }
}

#[test]
fn cross_engine_fuss_catalan() {
    for n in 1..=3 {
        cross_engine_check(n, DiagramKind::FussCatalan);
    }
}

#[test]
fn two_strand_idempotents() {
    let alph = Alphabet::real(&["d"]);
    let d = v(&alph, "d");
    // α = 0: eigenvalues ±1.
    let zero = RationalFn::zero(&alph);
    let t0 = BasisTable::build_default(Presentation::proto(2, &d, &zero, &GaussianRational::one())).unwrap();
    let dec = ps2_idempotents(&t0, &GaussianRational::zero(), &d).unwrap();
    assert_eq!(dec.p1, GaussianRational::one());
    assert_eq!(dec.p2, -GaussianRational::one());
    // α = 3/2: eigenvalues 2 and −1/2.
    let a = RationalFn::from_ratio(&alph, 3, 2);
    let t1 = BasisTable::build_default(Presentation::proto(2, &d, &a, &GaussianRational::one())).unwrap();
    let dec = ps2_idempotents(&t1, &GaussianRational::from_ratio(3, 2), &d).unwrap();
    assert_eq!(dec.p1, GaussianRational::from_int(2));
    assert_eq!(dec.p2, GaussianRational::from_ratio(-1, 2));
}

#[test]
fn span_test_solvable_for_liu_insoluble_for_ambient() {
    let alph = Alphabet::real(&["d"]);
    let d = v(&alph, "d");
    let liu = BasisTable::build_default(Presentation::liu(3, &d, &GaussianRational::i())).unwrap();
    let one = liu.one();
    let e = liu.gen_elem(FAM_E, 1);
    let s = liu.gen_elem(FAM_S, 1);
    let out = ybr_span_test(&liu.rules, &[one.clone(), e.clone(), s.clone()]);
    assert!(out.solvable(), "failing: {:?}", out.failing);

    // The ambient three-strand algebra: the span test must fail, with the
    // all-s triple among the failures.
    let zero = RationalFn::zero(&alph);
    let pres = Presentation::proto(3, &d, &zero, &GaussianRational::i());
    let mut rules = RuleSet::from_relations(&pres.alph, &pres.relations);
    rules.complete(9, 40_000).unwrap();
    let out = ybr_span_test(&rules, &[one, e, s]);
    assert!(!out.solvable());
    assert!(out.failing.contains(&(2, 2, 2)), "failing: {:?}", out.failing);
}
