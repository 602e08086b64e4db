//! The eighteen exceptional units obtained from the orbits of a, a^2 and
//! -1/a under x -> 1/x and x -> 1 - x.

use exunits::families::{make_family, FamilyId, FamilySpec};
use exunits::numberfield::NFContext;

fn main() -> exunits::Result<()> {
    let id = match std::env::args().nth(1).as_deref() {
        Some("h") => FamilyId::H,
        _ => FamilyId::F,
    };
    let t: i64 = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(if id == FamilyId::H { 7 } else { 4 });
    let ctx = NFContext::new(make_family(&FamilySpec::from_i64s(id, &[t])?)?)?;
    println!("field Q[a]/({})", ctx.modulus());
    let units = ctx.eighteen_units()?;
    for (i, u) in units.units.iter().enumerate() {
        let mp = ctx.minpoly(u)?;
        println!("{:>2}. {:<32} minpoly {}", i + 1, u.to_string(), mp.integral.map(|p| p.to_string()).unwrap_or_default());
    }
    println!("{} distinct, all exceptional: {}", units.count_distinct, units.all_exceptional);
    Ok(())
}
