//! Development probe: narrow down the slow step in the 2-strand checks.

use planalg::baxter::*;
use planalg::presented::{BasisTable, Presentation};
use planalg::scalar::{Alphabet, RationalFn};
use std::time::Instant;

fn main() {
    let alph = Alphabet::real(&["g", "u", "v"]);
    let g = RationalFn::var(&alph, "g").unwrap();
    let t2 = BasisTable::build_default(Presentation::fuss_catalan(2, &g)).unwrap();
    let r = ROperator::fuss_catalan(&alph);
    let fam = r.y_family();
    let ctx = TwoBoxCtx::new(&t2, r.alg.clone());

    let t = Instant::now();
    let a = fam.y[1].rotate(&r.alg, 1);
    eprintln!("rotate: {:?} cplx {} {} {}", t.elapsed(), a.c_one.complexity(), a.c_e.complexity(), a.c_x.complexity());

    let t = Instant::now();
    let lhs = ctx.mul(&a, &fam.y[0]);
    eprintln!("mul lhs: {:?} cplx {} {} {}", t.elapsed(), lhs.c_one.complexity(), lhs.c_e.complexity(), lhs.c_x.complexity());

    let t = Instant::now();
    let y1_swapped = TwoBox::new(
        fam.y[0].c_one.swap_vars("u", "v").unwrap(),
        fam.y[0].c_e.swap_vars("u", "v").unwrap(),
        fam.y[0].c_x.swap_vars("u", "v").unwrap(),
    );
    eprintln!("swap: {:?}", t.elapsed());

    let t = Instant::now();
    let b = fam.y[2].rotate(&r.alg, -1);
    let rhs = ctx.mul(&y1_swapped, &b);
    eprintln!("mul rhs: {:?} cplx {} {} {}", t.elapsed(), rhs.c_one.complexity(), rhs.c_e.complexity(), rhs.c_x.complexity());

    let t = Instant::now();
    let diff = lhs.sub(&rhs);
    eprintln!("sub: {:?} zero {}", t.elapsed(), diff.is_zero());

    eprintln!(
        "ybar1 cplx {} {} {}",
        fam.ybar[0].c_one.complexity(),
        fam.ybar[0].c_e.complexity(),
        fam.ybar[0].c_x.complexity()
    );
    let t = Instant::now();
    let ab = fam.ybar[1].rotate(&r.alg, -1);
    let lhs_b = ctx.mul(&ab, &fam.ybar[0]);
    eprintln!("mul lhs_b: {:?} cplx {} {} {}", t.elapsed(), lhs_b.c_one.complexity(), lhs_b.c_e.complexity(), lhs_b.c_x.complexity());

    let t = Instant::now();
    let yb1_swapped = TwoBox::new(
        fam.ybar[0].c_one.swap_vars("u", "v").unwrap(),
        fam.ybar[0].c_e.swap_vars("u", "v").unwrap(),
        fam.ybar[0].c_x.swap_vars("u", "v").unwrap(),
    );
    let bb = fam.ybar[2].rotate(&r.alg, 1);
    let rhs_b = ctx.mul(&yb1_swapped, &bb);
    eprintln!("mul rhs_b: {:?} cplx {} {} {}", t.elapsed(), rhs_b.c_one.complexity(), rhs_b.c_e.complexity(), rhs_b.c_x.complexity());

    let t = Instant::now();
    let diff_b = lhs_b.sub(&rhs_b);
    eprintln!("sub_b: {:?} zero {}", t.elapsed(), diff_b.is_zero());
}
