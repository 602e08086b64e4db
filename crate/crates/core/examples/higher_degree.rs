//! Higher-degree families: g_n(x;t) for n = 5..8 and the multi-parameter
//! F(x; t_1, ..., t_{n-2}) under every ordering of its parameters.

use exunits::families::{verify, CheckStatus, Claim, FamilyId, FamilySpec};

fn main() -> exunits::Result<()> {
    for n in 5..=8 {
        for t in [4, 9] {
            let r = verify(&FamilySpec::from_i64s(FamilyId::G, &[n, t])?);
            println!(
                "g_{n}(x;{t}) = {:<28} perron {:?}, all pass {}",
                r.polynomial.to_string(),
                r.witnesses.perron,
                r.all_pass()
            );
        }
    }
    for params in [&[1, 2][..], &[3, 1, 4], &[2, 7, 1, 8]] {
        let r = verify(&FamilySpec::from_i64s(FamilyId::MultiParam, params)?);
        println!(
            "F{params:?} = {:<32} irreducible {:?}, every ordering exceptional {}",
            r.polynomial.to_string(),
            r.status(Claim::Irreducible).unwrap_or(CheckStatus::NotApplicable),
            r.status(Claim::NagellAllPermutations) == Some(CheckStatus::Pass),
        );
    }
    Ok(())
}
