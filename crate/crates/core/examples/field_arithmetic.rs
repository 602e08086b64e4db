//! Arithmetic in Q(a) with a a root of f(x;4): inverses, norms, minimal
//! polynomials and the Graeffe shortcut for a^2.

use exunits::families::{make_family, FamilyId, FamilySpec};
use exunits::numberfield::{graeffe_square_minpoly, NFContext};
use exunits::IntPoly;

fn main() -> exunits::Result<()> {
    let f = make_family(&FamilySpec::from_i64s(FamilyId::F, &[4])?)?;
    let k = NFContext::new(f.clone())?;
    println!("K = Q[a]/({f}), certified by {:?}", k.evidence());
    let a = k.generator();
    println!("1/a       = {}", k.inv(&a)?);
    println!("1/(1-a)   = {}", k.inv(&k.sub(&k.from_int(1), &a)?)?);
    for expr in ["x^2", "1-x", "x^2-1", "x^3-4x^2+4"] {
        let p: IntPoly = expr.parse()?;
        let x = k.from_poly(&p);
        let mp = k.minpoly(&x)?;
        println!(
            "{expr:<11} norm {:<4} unit {:<5} exceptional {:<5} minpoly {}",
            k.norm(&x)?.to_string(),
            k.is_unit(&x)?,
            k.is_exceptional(&x)?,
            mp.rational
        );
    }
    println!("graeffe   : {}", graeffe_square_minpoly(&f)?);
    Ok(())
}
