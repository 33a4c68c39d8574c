use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::decide::{s_finite_decide, Budget, Decision, PrincipalMultSet};
use super::ideal::{MonomialIdeal, TailFamily};
use super::term::Monomial;
use crate::error::{Error, Result};

/// An arithmetic tail `{start, start + step, …}` of variable indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tail {
    pub start: u32,
    pub step: u32,
}

/// A set of variable indices: a finite set plus an optional tail. It names
/// the prime `p_T = ⟨x_i : i ∈ T⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VarPattern {
    #[serde(default)]
    pub vars: BTreeSet<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tail: Option<Tail>,
}

impl VarPattern {
    pub fn finite(vars: impl IntoIterator<Item = u32>) -> Self {
        VarPattern { vars: vars.into_iter().collect(), tail: None }
    }

    /// All indices `≥ start`.
    pub fn tail(start: u32) -> Self {
        VarPattern { vars: BTreeSet::new(), tail: Some(Tail { start, step: 1 }) }
    }

    pub fn validate(&self) -> Result<()> {
        if self.vars.contains(&0) {
            return Err(Error::Validation("variable indices start at 1".into()));
        }
        match self.tail {
            Some(t) if t.start == 0 || t.step == 0 => Err(Error::Validation("tail start and step must be positive".into())),
            None if self.vars.is_empty() => Err(Error::Validation("empty variable pattern".into())),
            _ => Ok(()),
        }
    }

    pub fn contains(&self, v: u32) -> bool {
        self.vars.contains(&v) || self.tail.is_some_and(|t| v >= t.start && (v - t.start).is_multiple_of(t.step))
    }

    /// The prime `p_T`.
    pub fn ideal(&self) -> MonomialIdeal {
        let gens = self.vars.iter().map(|&v| Monomial::var(v)).collect();
        let families = self
            .tail
            .iter()
            .map(|t| TailFamily { base: Monomial::one(), start: t.start, step: t.step, e: 1 })
            .collect();
        MonomialIdeal::normalized(gens, families)
    }

    /// `⟨x_i² : i in the tail⟩`, which is not prime.
    pub fn squares(&self) -> Option<MonomialIdeal> {
        self.tail.map(|t| {
            MonomialIdeal::normalized(Vec::new(), vec![TailFamily { base: Monomial::one(), start: t.start, step: t.step, e: 2 }])
        })
    }
}

impl fmt::Display for VarPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.vars.iter().map(u32::to_string).collect();
        if let Some(t) = self.tail {
            parts.push(if t.step == 1 { format!("{}+k", t.start) } else { format!("{}+{}k", t.start, t.step) });
        }
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PrimeClass {
    K,
    Z,
}

/// `Z` iff `supp(s)` meets `T`, so that a power of `s` lies in `p_T`.
pub fn classify_prime(pattern: &VarPattern, s: &PrincipalMultSet) -> PrimeClass {
    if s.s.support().iter().any(|&v| pattern.contains(v)) {
        PrimeClass::Z
    } else {
        PrimeClass::K
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohenEntry {
    pub prime: VarPattern,
    pub class: PrimeClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decision: Option<Decision>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum CohenVerdict {
    /// A refuted prime in `K`: the ring is not totally σ_S-noetherian.
    NotTotallyNoetherian { prime: VarPattern },
    /// Every scanned `K`-prime has a certificate.
    NoCounterexample,
    /// Some `K`-prime ran out of budget and none was refuted.
    Inconclusive,
    /// No `K`-primes were supplied.
    Vacuous,
}

/// An ideal outside the prime list refuted independently, which must agree
/// with a `NotTotallyNoetherian` verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub ideal: MonomialIdeal,
    pub decision: Decision,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohenReport {
    pub s: Monomial,
    pub entries: Vec<CohenEntry>,
    pub uncertified: Vec<VarPattern>,
    pub verdict: CohenVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_check: Option<CrossCheck>,
}

/// Runs [`s_finite_decide`] on every `K`-prime of the list.
pub fn cohen_scan(s: &PrincipalMultSet, primes: &[VarPattern], budget: Budget) -> Result<CohenReport> {
    let mut entries = Vec::with_capacity(primes.len());
    for p in primes {
        p.validate()?;
        let class = classify_prime(p, s);
        let decision = match class {
            PrimeClass::K => Some(s_finite_decide(&p.ideal(), s, budget)?),
            PrimeClass::Z => None,
        };
        entries.push(CohenEntry { prime: p.clone(), class, decision });
    }
    let k: Vec<&CohenEntry> = entries.iter().filter(|e| e.class == PrimeClass::K).collect();
    let uncertified: Vec<VarPattern> = k
        .iter()
        .filter(|e| !e.decision.as_ref().is_some_and(Decision::is_certified))
        .map(|e| e.prime.clone())
        .collect();
    let refuted = k.iter().find(|e| e.decision.as_ref().is_some_and(Decision::is_refuted));
    let verdict = match refuted {
        Some(e) => CohenVerdict::NotTotallyNoetherian { prime: e.prime.clone() },
        None if k.is_empty() => CohenVerdict::Vacuous,
        None if uncertified.is_empty() => CohenVerdict::NoCounterexample,
        None => CohenVerdict::Inconclusive,
    };
    let cross_check = match refuted.and_then(|e| e.prime.squares()) {
        Some(ideal) => {
            let decision = s_finite_decide(&ideal, s, budget)?;
            let agrees = decision.is_refuted();
            Some(CrossCheck { ideal, decision, agrees })
        }
        None => None,
    };
    Ok(CohenReport { s: s.s.clone(), entries, uncertified, verdict, cross_check })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlmostJansian {
    pub holds: bool,
    /// A basis ideal `⟨s⟩` whose powers meet in `⟨0⟩ ∉ L(σ_S)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<MonomialIdeal>,
}

/// The filter of `S = {sⁿ}` is almost jansian iff `s = 1`: otherwise
/// `∩ₙ ⟨sⁿ⟩ = ⟨0⟩`, which contains no power of `s`.
pub fn almost_jansian_principal(s: &PrincipalMultSet) -> AlmostJansian {
    if s.is_trivial() {
        AlmostJansian { holds: true, witness: None }
    } else {
        AlmostJansian { holds: false, witness: Some(MonomialIdeal::finitely_generated(vec![s.s.clone()])) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::decide::in_filter;

    fn set(s: &str) -> PrincipalMultSet {
        PrincipalMultSet::new(Monomial::parse(s).unwrap())
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_prime(&VarPattern::finite([1]), &set("x1")), PrimeClass::Z);
        assert_eq!(classify_prime(&VarPattern::finite([2]), &set("x1")), PrimeClass::K);
        assert_eq!(classify_prime(&VarPattern::tail(2), &set("x1")), PrimeClass::K);
        assert_eq!(classify_prime(&VarPattern::tail(2), &set("x1*x9")), PrimeClass::Z);
        for p in [VarPattern::finite([1]), VarPattern::finite([2, 3]), VarPattern::tail(2)] {
            let z = classify_prime(&p, &set("x1*x3")) == PrimeClass::Z;
            assert_eq!(z, in_filter(&p.ideal(), &set("x1*x3")).is_some());
        }
    }

    #[test]
    fn cohen_examples() {
        let b = Budget::default();
        let primes = [VarPattern::finite([1]), VarPattern::finite([2]), VarPattern::tail(2)];
        let r = cohen_scan(&set("x1"), &primes, b).unwrap();
        assert_eq!(r.entries[0].class, PrimeClass::Z);
        assert!(r.entries[1].decision.as_ref().unwrap().is_certified());
        assert!(r.entries[2].decision.as_ref().unwrap().is_refuted());
        assert_eq!(r.verdict, CohenVerdict::NotTotallyNoetherian { prime: VarPattern::tail(2) });
        assert_eq!(r.uncertified, vec![VarPattern::tail(2)]);
        assert!(r.cross_check.unwrap().agrees);

        let r = cohen_scan(&set("1"), &[VarPattern::tail(1)], b).unwrap();
        assert_eq!(r.verdict, CohenVerdict::NotTotallyNoetherian { prime: VarPattern::tail(1) });
        assert_eq!(cohen_scan(&set("x1"), &[], b).unwrap().verdict, CohenVerdict::Vacuous);
        assert_eq!(cohen_scan(&set("x1"), &[VarPattern::finite([1])], b).unwrap().verdict, CohenVerdict::Vacuous);
        assert_eq!(cohen_scan(&set("x1"), &[VarPattern::finite([2])], b).unwrap().verdict, CohenVerdict::NoCounterexample);
    }

    #[test]
    fn pattern_ideal_respects_tail_discipline() {
        let p = VarPattern { vars: [1, 5].into(), tail: Some(Tail { start: 2, step: 2 }) };
        let i = p.ideal();
        // x2 and x4 are peeled off below x5
        assert_eq!(i.gens().len(), 4);
        assert_eq!(i.families()[0].start, 6);
        assert_eq!(p.to_string(), "{1, 5, 2+2k}");
        assert!(VarPattern::finite([]).validate().is_err());
    }

    #[test]
    fn almost_jansian_examples() {
        let r = almost_jansian_principal(&set("x1"));
        assert!(!r.holds);
        assert_eq!(r.witness.unwrap().to_string(), "⟨x1⟩");
        assert!(almost_jansian_principal(&set("1")).holds);
        assert!(!almost_jansian_principal(&set("x1^2*x2")).holds);
    }
}
