//! Runs the full claim checklist for f(x;t) = x^4 - t x^3 - x^2 + t x + 1
//! over a range of t and prints a compact table.
//!
//!     cargo run --example f_family -- 4 30

use exunits::families::{verify_sweep, CheckStatus, FamilyId};

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (lo, hi) = match args[..] {
        [a, b, ..] => (a, b),
        [a] => (a, a),
        [] => (2, 20),
    };
    let reports = verify_sweep(FamilyId::F, &[], lo..=hi).expect("valid range");
    println!("{:>4}  {:<28} {:>6} {:>5} {:>3}  failures", "t", "polynomial", "group", "d", "18");
    for r in &reports {
        let w = &r.witnesses;
        let failed: Vec<String> = r
            .checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .map(|c| c.claim.to_string())
            .collect();
        println!(
            "{:>4}  {:<28} {:>6} {:>5} {:>3}  {}",
            r.spec.params[0].to_string(),
            r.polynomial.to_string(),
            w.galois.map(|g| g.to_string()).unwrap_or_else(|| "-".into()),
            w.subfield_d.as_ref().map(|d| d.to_string()).unwrap_or_else(|| "-".into()),
            w.eighteen_count.map(|n| n.to_string()).unwrap_or_else(|| "-".into()),
            if failed.is_empty() { "none".to_string() } else { failed.join(", ") },
        );
    }
}
