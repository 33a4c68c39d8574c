//! Ideals, spectrum and local decomposition of a few finite rings.

use sigma_noether::{FiniteRing, RingTerm};

fn main() -> sigma_noether::Result<()> {
    let terms = [
        RingTerm::zmod(12),
        RingTerm::product(RingTerm::zmod(4), RingTerm::zmod(3)),
        RingTerm::polyquot(2, &[1, 1, 1]),
        RingTerm::truncated(2, 2, 2),
    ];
    for t in &terms {
        let r = FiniteRing::build(t)?;
        println!("{} ({} elements)", r.name(), r.size());
        let ideals: Vec<String> = r.ideals().iter().map(ToString::to_string).collect();
        println!("  ideals: {}", ideals.join(" "));
        let spec: Vec<String> = r.spec().iter().map(ToString::to_string).collect();
        println!("  spec:   {}", spec.join(" "));
        for f in r.local_decomposition() {
            println!("  local factor at {} via e = {}: {} elements", f.prime(), r.label(f.idempotent), f.ring().size());
        }
    }
    Ok(())
}
