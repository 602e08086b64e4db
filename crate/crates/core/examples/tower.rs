//! t -> t^2 - 2 keeps the quadratic subfield: (T^2 - 4) = t^2 (t^2 - 4).

use exunits::quadsub::tower_step;
use num_bigint::BigInt;

fn main() -> exunits::Result<()> {
    for start in [3, 4, 5, 6] {
        let mut t = BigInt::from(start);
        let mut chain = vec![t.to_string()];
        let mut d = BigInt::from(0);
        for _ in 0..4 {
            let step = tower_step(&t)?;
            d = step.d;
            t = step.next;
            chain.push(t.to_string());
        }
        println!("Q(sqrt {d}): {}", chain.join(" -> "));
    }
    Ok(())
}
