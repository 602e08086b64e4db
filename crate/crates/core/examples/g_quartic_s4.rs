//! g_4(x;t) = x^4 - (t+3) x^3 + t x + 1: Perron's criterion, the resolvent
//! cubic, reduction mod 2 and the sign of the discriminant.

use exunits::families::{make_family, FamilySpec, FamilyId};
use exunits::galois4::{classify_quartic, frobenius_profile, DEFAULT_PRIME_BOUND};
use exunits::irreducibility::{irreducible_mod_p, perron_check};
use exunits::monodisc::disc_in_t_for;
use exunits::realroots::signature;

fn main() -> exunits::Result<()> {
    let dt = disc_in_t_for(FamilyId::G)?;
    println!("disc g_4(x;t) = {}\n", dt.poly.display_var("t"));
    for t in [4, 5, 6, 7, 10, 25, 100] {
        let p = make_family(&FamilySpec::from_i64s(FamilyId::G, &[4, t])?)?;
        let g = classify_quartic(&p)?;
        let profile = frobenius_profile(&p, DEFAULT_PRIME_BOUND)?;
        println!(
            "t = {t:>3}: {p:<22} perron {:?}, real roots {}, mod 2 irreducible {}, resolvent {}, group {}, frobenius ok {}",
            perron_check(&p)?,
            signature(&p)?.r1,
            irreducible_mod_p(&p, 2)?,
            g.resolvent,
            g.class,
            profile.consistent_with(g.class),
        );
    }
    Ok(())
}
