//! Runs the full theorem suite on one ring, all of its filters.

use sigma_noether::noether::ring_suite;
use sigma_noether::{FiniteRing, RingTerm};

fn main() -> sigma_noether::Result<()> {
    let term = std::env::args().nth(1).map_or(Ok(RingTerm::zmod(12)), |n| n.parse().map(RingTerm::zmod)).expect("ring size");
    let r = FiniteRing::build(&term)?;
    for report in ring_suite(&r)? {
        println!("{} under {}: {}", report.ring, report.filter, if report.passed() { "pass" } else { "FAIL" });
        for t in &report.theorems {
            println!("  {:<26} {:>8} {}", t.name, t.instances_checked, t.counterexample.as_deref().unwrap_or(""));
        }
    }
    Ok(())
}
