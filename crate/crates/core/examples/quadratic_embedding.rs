//! Every real quadratic field Q(sqrt d) sits inside some K_t: solve
//! t^2 - d s^2 = 4 and take f(x;t).

use exunits::families::make_family;
use exunits::numberfield::NFContext;
use exunits::quadsub::{embed_quadratic, squarefree_part};
use num_bigint::BigInt;

fn main() -> exunits::Result<()> {
    let ds: Vec<i64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let ds = if ds.is_empty() { vec![2, 3, 5, 6, 7, 13, 61, 97] } else { ds };
    for d in ds {
        let d = BigInt::from(d);
        if squarefree_part(&d)? != d {
            println!("d = {d}: not squarefree, skipped");
            continue;
        }
        let e = embed_quadratic(&d)?;
        let t = &e.solution.t;
        let ctx = NFContext::new(make_family(&e.spec)?)?;
        let w = ctx.subfield_witness(t)?;
        println!(
            "d = {d:>3}: t = {t}, s = {} ({:?}){}; beta = {} has minpoly {}",
            e.solution.s,
            e.solution.method,
            if e.in_range { "" } else { ", below t = 4" },
            w.beta,
            w.beta_minpoly,
        );
    }
    Ok(())
}
