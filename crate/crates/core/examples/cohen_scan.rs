//! Scans a list of primes for S-finiteness and reports the Cohen verdict.

use sigma_noether::monomial::{almost_jansian_principal, cohen_scan, Budget, Monomial, PrincipalMultSet, VarPattern};

fn main() -> sigma_noether::Result<()> {
    let s = PrincipalMultSet::new(Monomial::var(1));
    let primes = [VarPattern::finite([1]), VarPattern::finite([2, 3]), VarPattern::tail(2)];
    let report = cohen_scan(&s, &primes, Budget::default())?;
    for e in &report.entries {
        let d = e.decision.as_ref().map_or("skipped", |d| d.label());
        println!("p_{} ({}): {:?}, {d}", e.prime, e.prime.ideal(), e.class);
    }
    println!("verdict: {}", serde_json::to_string(&report.verdict).expect("plain data"));
    if let Some(x) = &report.cross_check {
        println!("cross-check on {}: {}, agrees {}", x.ideal, x.decision.label(), x.agrees);
    }
    let aj = almost_jansian_principal(&s);
    println!("almost jansian: {} (witness {:?})", aj.holds, aj.witness.map(|w| w.to_string()));
    Ok(())
}
