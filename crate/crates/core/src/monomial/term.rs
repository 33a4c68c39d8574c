use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial `x_{i₁}^{e₁} ⋯ x_{i_k}^{e_k}` in the variables `x₁, x₂, …`.
///
/// Every stored exponent is at least 1; the empty map is the unit 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MonomialRepr", into = "MonomialRepr")]
pub struct Monomial {
    exps: BTreeMap<u32, u32>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MonomialRepr {
    vars: BTreeMap<u32, u32>,
}

impl TryFrom<MonomialRepr> for Monomial {
    type Error = Error;

    fn try_from(r: MonomialRepr) -> Result<Self> {
        Monomial::from_exponents(r.vars)
    }
}

impl From<Monomial> for MonomialRepr {
    fn from(m: Monomial) -> Self {
        MonomialRepr { vars: m.exps }
    }
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    /// The variable `x_i`.
    ///
    /// # Panics
    /// If `i == 0`; variables are numbered from 1.
    pub fn var(i: u32) -> Self {
        Monomial::var_pow(i, 1)
    }

    pub fn var_pow(i: u32, e: u32) -> Self {
        assert!(i >= 1, "variables are numbered from 1");
        let mut exps = BTreeMap::new();
        if e > 0 {
            exps.insert(i, e);
        }
        Monomial { exps }
    }

    /// Builds a monomial from `(variable, exponent)` pairs. Variable 0 and
    /// zero exponents are rejected.
    pub fn from_exponents(exps: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (v, e) in exps {
            if v == 0 {
                return Err(Error::Validation("variable indices start at 1".into()));
            }
            if e == 0 {
                return Err(Error::Validation(format!("exponent of x{v} must be positive")));
            }
            *out.entry(v).or_insert(0) += e;
        }
        Ok(Monomial { exps: out })
    }

    /// Parses `1`, `x3`, `x1^2*x3`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::one());
        }
        let mut pairs = Vec::new();
        for factor in s.split('*') {
            let bad = || Error::Parse(format!("bad monomial factor {factor:?}"));
            let rest = factor.trim().strip_prefix('x').ok_or_else(bad)?;
            let (v, e) = match rest.split_once('^') {
                Some((v, e)) => (v, e.parse().map_err(|_| bad())?),
                None => (rest, 1),
            };
            pairs.push((v.parse().map_err(|_| bad())?, e));
        }
        Monomial::from_exponents(pairs)
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: u32) -> u32 {
        self.exps.get(&v).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.exps.iter().map(|(&v, &e)| (v, e))
    }

    pub fn support(&self) -> BTreeSet<u32> {
        self.exps.keys().copied().collect()
    }

    pub fn max_var(&self) -> Option<u32> {
        self.exps.keys().next_back().copied()
    }

    pub fn degree(&self) -> u64 {
        self.exps.values().map(|&e| e as u64).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|(v, &e)| other.exponent(*v) >= e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            *exps.entry(v).or_insert(0) += e;
        }
        Monomial { exps }
    }

    pub fn pow(&self, n: u32) -> Monomial {
        if n == 0 {
            return Monomial::one();
        }
        Monomial { exps: self.exps.iter().map(|(&v, &e)| (v, e * n)).collect() }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            let slot = exps.entry(v).or_insert(0);
            *slot = (*slot).max(e);
        }
        Monomial { exps }
    }

    /// The monomial with every exponent on `vars` set to zero.
    pub fn without(&self, vars: &BTreeSet<u32>) -> Monomial {
        Monomial { exps: self.exps.iter().filter(|(v, _)| !vars.contains(v)).map(|(&v, &e)| (v, e)).collect() }
    }

    /// Least `n` with `self | base·sⁿ`, if any.
    pub fn min_power_into(&self, base: &Monomial, s: &Monomial) -> Option<u32> {
        let mut n = 0;
        for (&v, &e) in &self.exps {
            let have = base.exponent(v);
            if e <= have {
                continue;
            }
            let step = s.exponent(v);
            if step == 0 {
                return None;
            }
            n = n.max((e - have).div_ceil(step));
        }
        Some(n)
    }

    /// Canonical order: degree first, then exponent lists.
    pub fn canonical_cmp(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.exps.iter().cmp(other.exps.iter()))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|(v, e)| if *e == 1 { format!("x{v}") } else { format!("x{v}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}
