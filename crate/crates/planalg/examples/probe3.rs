//! Development probe: step timings for the BMW checks.

use planalg::baxter::*;
use planalg::presented::{BasisTable, Presentation};
use planalg::scalar::{Alphabet, RationalFn, Reality};
use std::time::Instant;

fn main() {
    let alph = Alphabet::new(&[
        ("t", Reality::UnitModulus),
        ("q", Reality::UnitModulus),
        ("u", Reality::Real),
        ("v", Reality::Real),
    ]);
    let t = RationalFn::var(&alph, "t").unwrap();
    let q = RationalFn::var(&alph, "q").unwrap();

    let clock = Instant::now();
    let t2 = BasisTable::build_default(Presentation::bmw(2, &t, &q, false)).unwrap();
    eprintln!("t2: {:?} dim {}", clock.elapsed(), t2.dim());
    let clock = Instant::now();
    let t3 = BasisTable::build_default(Presentation::bmw(3, &t, &q, false)).unwrap();
    eprintln!("t3: {:?} dim {}", clock.elapsed(), t3.dim());

    for omega_negative in [false, true] {
        let r = ROperator::bmw(&alph, omega_negative);
        let clock = Instant::now();
        eprintln!("unit {} {:?}", check_unit(&r), clock.elapsed());

        let clock = Instant::now();
        let fam = r.y_family();
        eprintln!("y_family {:?}", clock.elapsed());
        for k in 0..3 {
            eprintln!(
                "  y[{k}] cplx {} {} {} | ybar[{k}] cplx {} {} {}",
                fam.y[k].c_one.complexity(),
                fam.y[k].c_e.complexity(),
                fam.y[k].c_x.complexity(),
                fam.ybar[k].c_one.complexity(),
                fam.ybar[k].c_e.complexity(),
                fam.ybar[k].c_x.complexity()
            );
        }

        let ctx = TwoBoxCtx::new(&t2, r.alg.clone());
        let clock = Instant::now();
        let scalars = check_inversion(&ctx, &fam);
        eprintln!("inversion {:?} ok {}", clock.elapsed(), scalars.is_ok());

        let clock = Instant::now();
        let (a, b) = check_bybe(&ctx, &fam);
        eprintln!("bybe {a} {b} {:?}", clock.elapsed());

        let clock = Instant::now();
        let verdict = check_ybe(&t3, &r);
        eprintln!(
            "ybe {} {} {} {:?}",
            verdict.ybe1, verdict.ybe2_unrotates, verdict.ybe3_unrotates,
            clock.elapsed()
        );
    }
}
