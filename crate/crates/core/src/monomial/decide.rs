use serde::{Deserialize, Serialize};

use super::ideal::{minimalize, saturate, MonomialIdeal, TailFamily};
use super::term::Monomial;
use crate::error::{Error, Result};

/// The multiplicative set `S = {sⁿ : n ≥ 0}` generated by one monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrincipalMultSet {
    pub s: Monomial,
}

impl PrincipalMultSet {
    pub fn new(s: Monomial) -> Self {
        PrincipalMultSet { s }
    }

    pub fn power(&self, n: u32) -> Monomial {
        self.s.pow(n)
    }

    /// `S = {1}`, whose filter is the trivial one.
    pub fn is_trivial(&self) -> bool {
        self.s.is_one()
    }
}

/// Limits beyond which [`s_finite_decide`] reports `Exhausted`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Budget {
    pub max_n: u32,
    pub max_prefix: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_n: 8, max_prefix: 32 }
    }
}

/// One instance `base·sⁿ·x_v^e` outside a finite candidate prefix of `I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RefutationWitness {
    pub n: u32,
    pub prefix_len: usize,
    pub instance: Monomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Decision {
    /// `I·sⁿ ⊆ ⟨prefix⟩ ⊆ I`.
    Certified { n: u32, prefix: Vec<Monomial> },
    /// No power of `s` pushes `family`'s base into `I`.
    Refuted { reason: String, family: TailFamily, witnesses: Vec<RefutationWitness> },
    Exhausted { budget: Budget },
}

impl Decision {
    pub fn is_certified(&self) -> bool {
        matches!(self, Decision::Certified { .. })
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, Decision::Refuted { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Decision::Certified { .. } => "certified",
            Decision::Refuted { .. } => "refuted",
            Decision::Exhausted { .. } => "exhausted",
        }
    }
}

/// Least `n` with `sⁿ ∈ I`, i.e. whether `I ∈ L(σ_S)`.
pub fn in_filter(ideal: &MonomialIdeal, s: &PrincipalMultSet) -> Option<u32> {
    absorbing_power(ideal, &Monomial::one(), &s.s).map(|(n, _)| n)
}

/// Least `n` with `base·sⁿ ∈ I` together with the generator of `I` that
/// divides it. Only instances on variables of `base` or `s` can divide a
/// power of `s` times `base`.
pub(crate) fn absorbing_power(ideal: &MonomialIdeal, base: &Monomial, s: &Monomial) -> Option<(u32, Monomial)> {
    let mut candidates: Vec<Monomial> = ideal.gens().to_vec();
    let vars: Vec<u32> = base.support().union(&s.support()).copied().collect();
    for f in ideal.families() {
        candidates.extend(vars.iter().filter(|&&v| f.has_var(v)).map(|&v| f.instance_at_var(v)));
    }
    candidates
        .into_iter()
        .filter_map(|g| g.min_power_into(base, s).map(|n| (n, g)))
        .min_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.canonical_cmp(&b.1)))
}

/// The σ_S-closure `I : s^∞`.
pub fn saturation(ideal: &MonomialIdeal, s: &PrincipalMultSet) -> MonomialIdeal {
    saturate(ideal, &s.s)
}

/// Decides whether `I` is S-finite (totally σ_S-finitely generated).
///
/// A family `base·x_v^e` is absorbed by a finite prefix after scaling by
/// `sⁿ` exactly when `base·sⁿ ∈ I`, since a finite prefix cannot involve
/// the far tail variables. So `I` is S-finite iff every family base has a
/// power of `s` pushing it into `I`; the least such `n` over all families
/// is the certificate exponent.
pub fn s_finite_decide(ideal: &MonomialIdeal, s: &PrincipalMultSet, budget: Budget) -> Result<Decision> {
    let mut n = 0;
    let mut prefix: Vec<Monomial> = ideal.gens().to_vec();
    for f in ideal.families() {
        match absorbing_power(ideal, &f.base, &s.s) {
            Some((k, g)) => {
                n = n.max(k);
                prefix.push(g);
            }
            None => {
                let witnesses = refutation_witnesses(ideal, s, f, 6, budget.max_prefix);
                let reason = format!("no power of {} moves {} into the ideal, so the instances of {f} escape every finite prefix", s.s, f.base);
                return Ok(Decision::Refuted { reason, family: f.clone(), witnesses });
            }
        }
    }
    let prefix = minimalize(prefix);
    if n > budget.max_n || prefix.len() > budget.max_prefix {
        return Ok(Decision::Exhausted { budget });
    }
    let decision = Decision::Certified { n, prefix };
    verify_decision(ideal, s, &decision)?;
    Ok(decision)
}

/// For `n = 0..count`, the first instance of `family·sⁿ` beyond the
/// candidate prefix made of the finite generators and the first
/// `prefix_instances` instances of each family.
pub fn refutation_witnesses(
    ideal: &MonomialIdeal,
    s: &PrincipalMultSet,
    family: &TailFamily,
    count: u32,
    prefix_instances: usize,
) -> Vec<RefutationWitness> {
    let mut prefix = ideal.gens().to_vec();
    for f in ideal.families() {
        prefix.extend((0..prefix_instances as u32).map(|i| f.instance(i)));
    }
    let prefix_len = prefix.len();
    let candidate = MonomialIdeal::finitely_generated(prefix);
    (0..count)
        .map(|n| {
            let scaled = family.base.mul(&s.power(n));
            let bound = candidate.fixed_max_var().max(scaled.max_var().unwrap_or(0));
            let v = family.first_var_above(bound);
            let instance = scaled.mul(&Monomial::var_pow(v, family.e));
            debug_assert!(!candidate.member(&instance));
            RefutationWitness { n, prefix_len, instance }
        })
        .collect()
}

/// Re-checks a decision: `I·sⁿ ⊆ ⟨prefix⟩ ⊆ I` for a certificate, and that
/// every witness lies in `I·sⁿ` but outside its candidate prefix for a
/// refutation.
pub fn verify_decision(ideal: &MonomialIdeal, s: &PrincipalMultSet, decision: &Decision) -> Result<()> {
    match decision {
        Decision::Certified { n, prefix } => {
            let p = MonomialIdeal::finitely_generated(prefix.clone());
            if !ideal.contains(&p) {
                return Err(Error::TheoremViolation(format!("prefix {p} is not inside {ideal}")));
            }
            if !p.contains(&ideal.scale(&s.power(*n))) {
                return Err(Error::TheoremViolation(format!("{ideal}·({})^{n} is not inside {p}", s.s)));
            }
        }
        Decision::Refuted { family, witnesses, .. } => {
            if absorbing_power(ideal, &family.base, &s.s).is_some() {
                return Err(Error::TheoremViolation(format!("{} reaches the ideal", family.base)));
            }
            let mut prefix = ideal.gens().to_vec();
            let per_family = witnesses.first().map_or(0, |w| w.prefix_len.saturating_sub(prefix.len()) / ideal.families().len().max(1));
            for f in ideal.families() {
                prefix.extend((0..per_family as u32).map(|i| f.instance(i)));
            }
            let candidate = MonomialIdeal::finitely_generated(prefix);
            for w in witnesses {
                let scaled = ideal.scale(&s.power(w.n));
                if !scaled.member(&w.instance) || candidate.member(&w.instance) {
                    return Err(Error::TheoremViolation(format!("witness {} does not separate", w.instance)));
                }
            }
        }
        Decision::Exhausted { .. } => {}
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Monomial {
        Monomial::parse(s).unwrap()
    }

    fn tail(start: u32) -> MonomialIdeal {
        MonomialIdeal::family(TailFamily::new(Monomial::one(), start, 1, 1).unwrap()).unwrap()
    }

    fn set(s: &str) -> PrincipalMultSet {
        PrincipalMultSet::new(m(s))
    }

    #[test]
    fn in_filter_examples() {
        let i = MonomialIdeal::finitely_generated(vec![m("x1^2*x2")]);
        assert_eq!(in_filter(&i, &set("x1*x2")), Some(2));
        assert_eq!(in_filter(&i, &set("x1")), None);
        assert_eq!(in_filter(&MonomialIdeal::unit(), &set("x3")), Some(0));
        assert_eq!(in_filter(&MonomialIdeal::zero(), &set("x3")), None);
        assert_eq!(in_filter(&tail(2), &set("x1*x5^2")), Some(1));
    }

    #[test]
    fn decide_examples() {
        let b = Budget::default();
        let d = s_finite_decide(&tail(1), &set("x1"), b).unwrap();
        assert_eq!(d, Decision::Certified { n: 1, prefix: vec![m("x1")] });
        let d = s_finite_decide(&tail(2), &set("x1"), b).unwrap();
        assert!(d.is_refuted());
        verify_decision(&tail(2), &set("x1"), &d).unwrap();
        if let Decision::Refuted { witnesses, .. } = &d {
            assert_eq!(witnesses.len(), 6);
            assert_eq!(witnesses[0].instance, m("x34"));
            assert_eq!(witnesses[2].instance, m("x1^2*x34"));
        }
        let fg = MonomialIdeal::finitely_generated(vec![m("x1*x2"), m("x3^4")]);
        let d = s_finite_decide(&fg, &set("x9"), b).unwrap();
        assert_eq!(d, Decision::Certified { n: 0, prefix: fg.gens().to_vec() });
    }

    #[test]
    fn budget_exhaustion_and_monotonicity() {
        // the family base 1 reaches ⟨x1^9⟩ only after multiplying by x1^9
        let i = MonomialIdeal::new(vec![m("x1^9")], vec![TailFamily::new(Monomial::one(), 2, 1, 1).unwrap()]).unwrap();
        let tight = Budget { max_n: 8, max_prefix: 32 };
        assert_eq!(s_finite_decide(&i, &set("x1"), tight).unwrap(), Decision::Exhausted { budget: tight });
        let loose = Budget { max_n: 9, max_prefix: 32 };
        assert_eq!(s_finite_decide(&i, &set("x1"), loose).unwrap(), Decision::Certified { n: 9, prefix: vec![m("x1^9")] });
    }
}
