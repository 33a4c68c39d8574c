//! Counts Gabriel filters on every catalogue ring and compares with 2^|Spec|.

use sigma_noether::ring::catalogue;
use sigma_noether::torsion::all_gabriel_filters;
use sigma_noether::FiniteRing;

fn main() -> sigma_noether::Result<()> {
    for t in catalogue(12) {
        let r = FiniteRing::build(&t)?;
        let filters = all_gabriel_filters(&r);
        let primes = r.spec().len();
        println!("{:<28} ideals {:>2}  primes {}  filters {:>2}  2^|Spec| {:>2}", r.name(), r.ideal_count(), primes, filters.len(), 1 << primes);
        assert_eq!(filters.len(), 1 << primes);
    }
    let z30 = FiniteRing::zmod(30)?;
    for f in all_gabriel_filters(&z30) {
        println!("Z/30: {f} (least {})", f.least());
    }
    Ok(())
}
