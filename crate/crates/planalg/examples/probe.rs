//! Development probe: timings for the Baxterisation checks.

use planalg::baxter::*;
use planalg::presented::{BasisTable, Presentation};
use planalg::scalar::{Alphabet, RationalFn};
use std::time::Instant;

fn main() {
    let alph = Alphabet::real(&["g", "u", "v"]);
    let g = RationalFn::var(&alph, "g").unwrap();
    let t = Instant::now();
    let t2 = BasisTable::build_default(Presentation::fuss_catalan(2, &g)).unwrap();
    let t3 = BasisTable::build_default(Presentation::fuss_catalan(3, &g)).unwrap();
    eprintln!("tables: {:?}", t.elapsed());

    let r = ROperator::fuss_catalan(&alph);
    let t = Instant::now();
    eprintln!("unit {} {:?}", check_unit(&r), t.elapsed());

    let t = Instant::now();
    let fam = r.y_family();
    eprintln!("y_family {:?}", t.elapsed());

    let ctx = TwoBoxCtx::new(&t2, r.alg.clone());
    let t = Instant::now();
    let scalars = check_inversion(&ctx, &fam);
    eprintln!("inversion {:?} {:?}", scalars.map(|s| s.iter().map(|x| x.complexity()).collect::<Vec<_>>()), t.elapsed());

    let t = Instant::now();
    let (a, b) = check_bybe(&ctx, &fam);
    eprintln!("bybe {a} {b} {:?}", t.elapsed());

    let t = Instant::now();
    let verdict = check_ybe(&t3, &r);
    eprintln!("ybe {} {} {} {:?}", verdict.ybe1, verdict.ybe2_unrotates, verdict.ybe3_unrotates, t.elapsed());
}
