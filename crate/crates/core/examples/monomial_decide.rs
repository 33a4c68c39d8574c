//! S-finiteness decisions and saturation for monomial ideals with tails.

use sigma_noether::monomial::{in_filter, s_finite_decide, saturation, Budget, Decision, Monomial, MonomialIdeal, PrincipalMultSet, TailFamily};

fn main() -> sigma_noether::Result<()> {
    let m = |s: &str| Monomial::parse(s);
    let s = PrincipalMultSet::new(m("x1")?);
    let ideals = [
        MonomialIdeal::family(TailFamily::new(Monomial::one(), 1, 1, 1)?)?,
        MonomialIdeal::family(TailFamily::new(Monomial::one(), 2, 1, 1)?)?,
        MonomialIdeal::new(vec![m("x1^3")?], vec![TailFamily::new(Monomial::one(), 2, 2, 1)?])?,
        MonomialIdeal::family(TailFamily::new(m("x1^2")?, 2, 1, 1)?)?,
        MonomialIdeal::finitely_generated(vec![m("x1^2*x2")?, m("x1*x2^3")?]),
    ];
    for i in &ideals {
        println!("I = {i}, s = {}", s.s);
        println!("  sⁿ ∈ I for n = {:?}", in_filter(i, &s));
        println!("  I : s^∞ = {}", saturation(i, &s));
        match s_finite_decide(i, &s, Budget::default())? {
            Decision::Certified { n, prefix } => {
                let p: Vec<String> = prefix.iter().map(ToString::to_string).collect();
                println!("  certified: I·s^{n} ⊆ ⟨{}⟩ ⊆ I", p.join(", "));
            }
            Decision::Refuted { reason, witnesses, .. } => {
                println!("  refuted: {reason}");
                for w in witnesses.iter().take(3) {
                    println!("    n = {}: {} escapes a prefix of {} generators", w.n, w.instance, w.prefix_len);
                }
            }
            Decision::Exhausted { budget } => println!("  exhausted at {budget:?}"),
        }
    }
    let y = PrincipalMultSet::new(m("x2")?);
    println!("⟨x1^2*x2, x1*x2^3⟩ : x2^∞ = {}", saturation(&ideals[4], &y));
    Ok(())
}
