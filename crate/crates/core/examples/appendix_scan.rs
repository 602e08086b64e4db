//! Searches for t with (t^2 - 4)(4t^2 + 9) a perfect square. The only
//! solution with t >= 3 is t = 3, which is why f(x;3) is cyclic rather
//! than dihedral.

use std::time::Instant;

use exunits::quadsub::appendix_scan;

fn main() -> exunits::Result<()> {
    let bound = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1_000_000);
    let start = Instant::now();
    let scan = appendix_scan(bound)?;
    println!("scanned 3..={bound} in {:.2?}", start.elapsed());
    for h in &scan.hits {
        println!("  t = {}: {} = {}^2", h.t, h.value, h.root);
    }
    for h in &scan.small_hits {
        println!("  (|t| < 3) t = {}: {} = {}^2", h.t, h.value, h.root);
    }
    Ok(())
}
