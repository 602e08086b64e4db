//! Discriminant of h(x;t) as a polynomial in t, its reduced form, and the
//! two König conditions that give infinitely many monogenic members.

use exunits::families::FamilyId;
use exunits::monodisc::{disc_in_t_for, konig_check, reduced_disc};
use exunits::IntPoly;

fn main() -> exunits::Result<()> {
    let dt = disc_in_t_for(FamilyId::H)?;
    let red = reduced_disc(&dt)?;
    println!("disc h(x;t)     = {}", dt.poly.display_var("t"));
    println!("reduced         = {}", red.display_var("t"));
    println!("checked at t in {:?}", dt.verification_points.iter().map(|t| t.to_string()).collect::<Vec<_>>());

    let factors: Vec<IntPoly> = ["4t^2+25", "t^2+4"].iter().map(|s| s.parse().unwrap()).collect();
    let report = konig_check(&red, &factors, 3)?;
    println!("condition (i)   : {:?}", report.condition_i);
    for note in &report.factors {
        println!("  {:<8} degree {} irreducible {:?}", note.factor.display_var("t"), note.degree, note.irreducible);
    }
    println!("condition (ii)  : {:?} (gcd of values on 0..={} is {})", report.condition_ii, report.sample_range, report.values_gcd);
    println!("values at t = 0 and 3: {} and {}", report.values[0], report.values[3]);
    Ok(())
}
