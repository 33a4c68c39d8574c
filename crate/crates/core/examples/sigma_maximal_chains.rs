//! σ-maximal members, σ-upper closures, chain stability and the transfer
//! lemma in A over Z/8.

use sigma_noether::noether::{chain_stability, is_upper_closed, quotient_transfer_check, sigma_maximal, unique_maximal_check, upper_closure};
use sigma_noether::torsion::all_gabriel_filters;
use sigma_noether::{FiniteModule, FiniteRing};

fn main() -> sigma_noether::Result<()> {
    let r = FiniteRing::zmod(8)?;
    let m = FiniteModule::regular(&r);
    let subs = m.submodules();
    let family = vec![subs[0].clone(), subs[1].clone()];
    let labels = |v: &[sigma_noether::Submodule]| v.iter().map(|s| m.label_submodule(s)).collect::<Vec<_>>().join(" ");
    for sigma in all_gabriel_filters(&r) {
        println!("{sigma}");
        let max = sigma_maximal(&m, &family, &sigma)?;
        for (n, h) in &max {
            println!("  σ-maximal {} with h = {h}", m.label_submodule(n));
        }
        println!("  upper closure of [{}]: [{}], closed {}", labels(&family), labels(&upper_closure(&m, &family, &sigma)?), is_upper_closed(&m, &family, &sigma)?);
        let chain: Vec<_> = subs.clone();
        let st = chain_stability(&m, &chain, &sigma)?;
        println!("  chain [{}] stabilises at m = {} with h = {}", labels(&chain), st.stable_index, st.h);
        let u = unique_maximal_check(&m, &subs[1], &sigma)?;
        println!("  unique maximal above {}: {}", m.label_submodule(&subs[1]), u.is_unique());
        let t = quotient_transfer_check(&m, &subs[1], &sigma);
        match t {
            Ok(rep) => println!("  transfer through {}: {} chains, holds {}", m.label_submodule(&subs[1]), rep.chains_checked, rep.holds()),
            Err(e) => println!("  transfer through {}: {e}", m.label_submodule(&subs[1])),
        }
    }
    Ok(())
}
