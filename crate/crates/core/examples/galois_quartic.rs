//! Classifies quartics given on the command line (or a few standard ones)
//! and compares against the Frobenius cycle types mod small primes.

use exunits::galois4::{classify_by_frobenius, classify_quartic, frobenius_profile, DEFAULT_PRIME_BOUND};
use exunits::IntPoly;

fn main() {
    let inputs: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if inputs.is_empty() {
        ["x^4+8x+12", "x^4+1", "x^4+x^3+x^2+x+1", "x^4-4x^3-x^2+4x+1", "x^4-3x^3-x^2+3x+1", "x^4-7x^3+4x+1", "x^4-1"]
            .map(String::from)
            .to_vec()
    } else {
        inputs
    };
    for s in inputs {
        let p: IntPoly = match s.parse() {
            Ok(p) => p,
            Err(e) => {
                println!("{s}: {e}");
                continue;
            }
        };
        match classify_quartic(&p) {
            Ok(g) => {
                let profile = frobenius_profile(&p, DEFAULT_PRIME_BOUND).expect("prime bound");
                let types: Vec<String> = profile.observed.iter().map(|(t, n)| format!("{t}:{n}")).collect();
                println!(
                    "{p:<24} {:<3} disc {:<10} resolvent root {:<5} frobenius [{}] -> {:?}",
                    g.class.to_string(),
                    g.discriminant.to_string(),
                    g.resolvent_root.map(|r| r.to_string()).unwrap_or_else(|| "-".into()),
                    types.join(" "),
                    classify_by_frobenius(&profile).ok().flatten(),
                );
            }
            Err(e) => println!("{p:<24} {e}"),
        }
    }
}
