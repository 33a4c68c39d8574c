//! Totally σ-finitely generated certificates and σ-principal status.

use sigma_noether::noether::{sigma_principal_status, tfg_certificate, verify_certificate};
use sigma_noether::torsion::all_gabriel_filters;
use sigma_noether::{FiniteModule, FiniteRing, RingTerm};

fn main() -> sigma_noether::Result<()> {
    let r = FiniteRing::build(&RingTerm::product(RingTerm::zmod(4), RingTerm::zmod(3)))?;
    let m = FiniteModule::free(&r, 2)?;
    let n = m.whole();
    for sigma in all_gabriel_filters(&r) {
        let cert = tfg_certificate(&m, &n, &sigma)?;
        let check = verify_certificate(&m, &n, &sigma, &cert)?;
        let gens: Vec<String> = cert.generators.iter().map(|&g| m.ambient().label(g)).collect();
        println!("{sigma}: {:?} with h = {}, H = ⟨{}⟩, {check}", cert.kind, cert.filter_ideal, gens.join(", "));
        for a in r.ideals() {
            let s = sigma_principal_status(&a, &sigma)?;
            let principal = s.sigma_principal.map(|x| r.label(x).to_string()).unwrap_or_else(|| "-".into());
            println!("  {a}: σ-principal by {principal}, totally principal {}", s.is_totally_principal());
        }
    }
    Ok(())
}
