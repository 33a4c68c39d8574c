//! The K / Z / C partition, meet decomposition and jansian status for every
//! filter on Z/12.

use sigma_noether::torsion::{all_gabriel_filters, finite_type_basis, jansian_status, meet_decomposition, spec_partition};
use sigma_noether::FiniteRing;

fn show(ideals: &[sigma_noether::Ideal]) -> String {
    ideals.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn main() -> sigma_noether::Result<()> {
    let r = FiniteRing::zmod(12)?;
    for sigma in all_gabriel_filters(&r) {
        let p = spec_partition(&sigma);
        let j = jansian_status(&sigma);
        println!("{sigma}");
        println!("  K = [{}]  Z = [{}]  C = [{}]", show(&p.k), show(&p.z), show(&p.c));
        println!("  meet of prime complements equals σ: {}", meet_decomposition(&sigma) == sigma);
        println!("  jansian {}  almost jansian {}  basis generators {:?}", j.is_jansian, j.is_almost_jansian, finite_type_basis(&sigma));
    }
    Ok(())
}
