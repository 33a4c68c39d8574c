//! Torsion radical, σ-closure and density in A² over Z/12.

use sigma_noether::torsion::{closure, filter_from_prime, is_closed, is_dense, is_torsion, is_totally_torsion, torsion_submodule};
use sigma_noether::{FiniteModule, FiniteRing, Ideal};

fn main() -> sigma_noether::Result<()> {
    let r = FiniteRing::zmod(12)?;
    let sigma = filter_from_prime(&Ideal::generated(&r, &[2])?)?;
    let m = FiniteModule::free(&r, 2)?;
    println!("σ = {sigma}");
    println!("σ(A²) = {}", m.label_submodule(&torsion_submodule(&m, &sigma)?));
    for gens in [vec![vec![4, 0], vec![0, 3]], vec![vec![3, 0]], vec![vec![1, 1]]] {
        let n = m.span_coords(&gens)?;
        let cl = closure(&m, &n, &sigma)?;
        println!(
            "N = {}: Cl(N) = {}, closed {}, dense {}",
            m.label_submodule(&n),
            m.label_submodule(&cl),
            is_closed(&m, &n, &sigma)?,
            is_dense(&m, &n, &sigma)?
        );
        let q = m.quotient(&n);
        let total = is_totally_torsion(&q, &sigma)?;
        println!("  A²/N torsion {}, totally torsion {} (Ann = {})", is_torsion(&q, &sigma)?, total.holds, total.annihilator);
    }
    Ok(())
}
