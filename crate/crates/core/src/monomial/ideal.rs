use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::term::Monomial;
use crate::error::{Error, Result};

/// The generators `base · x_{start + i·step}^e` for all `i ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TailFamily {
    pub base: Monomial,
    pub start: u32,
    pub step: u32,
    pub e: u32,
}

impl TailFamily {
    pub fn new(base: Monomial, start: u32, step: u32, e: u32) -> Result<Self> {
        let f = TailFamily { base, start, step, e };
        f.validate()?;
        Ok(f)
    }

    fn validate(&self) -> Result<()> {
        if self.start == 0 || self.step == 0 || self.e == 0 {
            return Err(Error::Validation(format!("family {self}: start, step and e must be positive")));
        }
        Ok(())
    }

    /// Whether `x_v` is one of the family's variables.
    pub fn has_var(&self, v: u32) -> bool {
        v >= self.start && (v - self.start).is_multiple_of(self.step)
    }

    /// Variable index of instance `i`.
    pub fn var_at(&self, i: u32) -> u32 {
        self.start + i * self.step
    }

    pub fn instance_at_var(&self, v: u32) -> Monomial {
        self.base.mul(&Monomial::var_pow(v, self.e))
    }

    pub fn instance(&self, i: u32) -> Monomial {
        self.instance_at_var(self.var_at(i))
    }

    /// Instances whose variable index is at most `bound`.
    pub fn instances_upto(&self, bound: u32) -> impl Iterator<Item = Monomial> + '_ {
        (self.start..=bound).step_by(self.step as usize).map(|v| self.instance_at_var(v))
    }

    /// Least family variable strictly above `bound`.
    pub fn first_var_above(&self, bound: u32) -> u32 {
        if bound < self.start {
            self.start
        } else {
            self.start + ((bound - self.start) / self.step + 1) * self.step
        }
    }
}

impl fmt::Display for TailFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx = if self.step == 1 { format!("{}+k", self.start) } else { format!("{}+{}k", self.start, self.step) };
        let var = if self.e == 1 { format!("x_({idx})") } else { format!("x_({idx})^{}", self.e) };
        if self.base.is_one() {
            write!(f, "{var}")
        } else {
            write!(f, "{}*{var}", self.base)
        }
    }
}

/// A monomial ideal with finitely many generators plus tail families.
///
/// Tail discipline: every family's variables lie strictly above every
/// variable of its base and of the finite generators. Stored ideals are
/// normalized: finite generators are minimal and sorted, and families
/// made redundant by a finite generator are dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealRepr", into = "IdealRepr")]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
    families: Vec<TailFamily>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealRepr {
    #[serde(default)]
    gens: Vec<Monomial>,
    #[serde(default)]
    families: Vec<TailFamily>,
}

impl TryFrom<IdealRepr> for MonomialIdeal {
    type Error = Error;

    fn try_from(r: IdealRepr) -> Result<Self> {
        MonomialIdeal::new(r.gens, r.families)
    }
}

impl From<MonomialIdeal> for IdealRepr {
    fn from(i: MonomialIdeal) -> Self {
        IdealRepr { gens: i.gens, families: i.families }
    }
}

fn max_var<'a>(ms: impl IntoIterator<Item = &'a Monomial>) -> u32 {
    ms.into_iter().filter_map(Monomial::max_var).max().unwrap_or(0)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Sorts, dedups and drops generators divisible by another generator.
pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(Monomial::canonical_cmp);
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // canonical order is degree-first, so divisors come earlier
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

impl MonomialIdeal {
    /// Validates the tail discipline and normalizes.
    pub fn new(gens: Vec<Monomial>, families: Vec<TailFamily>) -> Result<Self> {
        let gens_max = max_var(&gens);
        for f in &families {
            f.validate()?;
            let bound = gens_max.max(f.base.max_var().unwrap_or(0));
            if f.start <= bound {
                return Err(Error::TailDisciplineViolation(format!(
                    "family {f} starts at x{} but the base and finite generators use x{bound}",
                    f.start
                )));
            }
        }
        Ok(MonomialIdeal::normalized(gens, families))
    }

    pub fn finitely_generated(gens: Vec<Monomial>) -> Self {
        MonomialIdeal::normalized(gens, Vec::new())
    }

    pub fn family(f: TailFamily) -> Result<Self> {
        MonomialIdeal::new(Vec::new(), vec![f])
    }

    pub fn zero() -> Self {
        MonomialIdeal { gens: Vec::new(), families: Vec::new() }
    }

    pub fn unit() -> Self {
        MonomialIdeal { gens: vec![Monomial::one()], families: Vec::new() }
    }

    /// Brings an arbitrary presentation into tail discipline by moving
    /// family instances at or below the largest fixed variable into the
    /// finite generators.
    pub(crate) fn normalized(gens: Vec<Monomial>, families: Vec<TailFamily>) -> Self {
        let fixed = max_var(gens.iter().chain(families.iter().map(|f| &f.base)));
        let mut gens = gens;
        let mut tails = Vec::with_capacity(families.len());
        for f in families {
            gens.extend(f.instances_upto(fixed));
            tails.push(TailFamily { start: f.first_var_above(fixed), ..f });
        }
        let gens = minimalize(gens);
        let mut families: Vec<TailFamily> = Vec::new();
        for f in tails {
            if gens.iter().any(|g| g.divides(&f.base)) || families.contains(&f) {
                continue;
            }
            families.push(f);
        }
        MonomialIdeal { gens, families }
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn families(&self) -> &[TailFamily] {
        &self.families
    }

    pub fn is_finitely_generated(&self) -> bool {
        self.families.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty() && self.families.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_one)
    }

    /// Largest variable in a finite generator or family base.
    pub fn fixed_max_var(&self) -> u32 {
        max_var(self.gens.iter().chain(self.families.iter().map(|f| &f.base)))
    }

    /// Finite generators followed by the family instances with variable
    /// index at most `bound`.
    pub fn generators_upto(&self, bound: u32) -> Vec<Monomial> {
        let mut out = self.gens.clone();
        for f in &self.families {
            out.extend(f.instances_upto(bound));
        }
        out
    }

    /// Whether `m ∈ I`: some finite generator or some family instance
    /// divides `m`. Only instances on variables of `m` can divide it.
    pub fn member(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
            || self.families.iter().any(|f| {
                m.exponents()
                    .any(|(v, e)| f.has_var(v) && e >= f.e && f.instance_at_var(v).divides(m))
            })
    }

    /// A generator of `I` dividing `m`, if any: finite generators first,
    /// then family instances by variable index.
    pub fn divisor_of(&self, m: &Monomial) -> Option<Monomial> {
        if let Some(g) = self.gens.iter().find(|g| g.divides(m)) {
            return Some(g.clone());
        }
        let mut best: Option<Monomial> = None;
        for f in &self.families {
            for (v, _) in m.exponents() {
                if f.has_var(v) {
                    let inst = f.instance_at_var(v);
                    if inst.divides(m) && best.as_ref().is_none_or(|b| inst.canonical_cmp(b).is_lt()) {
                        best = Some(inst);
                    }
                }
            }
        }
        best
    }

    /// Whether `J ⊆ I`.
    ///
    /// Beyond the horizon `H` (the largest variable used by `I` or by the
    /// family's base, and every family start of `I`), membership of an
    /// instance of a family of `J` depends only on its variable index
    /// modulo the lcm of the steps involved, so one period past `H`
    /// decides the whole family.
    pub fn contains(&self, other: &MonomialIdeal) -> bool {
        if !other.gens.iter().all(|g| self.member(g)) {
            return false;
        }
        other.families.iter().all(|g| {
            let horizon = self
                .fixed_max_var()
                .max(g.base.max_var().unwrap_or(0))
                .max(self.families.iter().map(|f| f.start).max().unwrap_or(0));
            let period = self.families.iter().fold(g.step as u64, |l, f| l / gcd(l, f.step as u64) * f.step as u64);
            let from = horizon.max(g.start - 1) as u64;
            let bound = u32::try_from(from + period).expect("family period fits in u32");
            g.instances_upto(bound).all(|m| self.member(&m))
        })
    }

    pub fn same_ideal(&self, other: &MonomialIdeal) -> bool {
        self.contains(other) && other.contains(self)
    }

    /// `I·m`: every finite generator and family base multiplied by `m`.
    pub fn scale(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.mul(m)).collect();
        let families = self.families.iter().map(|f| TailFamily { base: f.base.mul(m), ..f.clone() }).collect();
        MonomialIdeal::normalized(gens, families)
    }

    /// `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        let families = self.families.iter().chain(&other.families).cloned().collect();
        MonomialIdeal::normalized(gens, families)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "⟨0⟩");
        }
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(ToString::to_string)
            .chain(self.families.iter().map(|t| format!("{t} (k ≥ 0)")))
            .collect();
        write!(f, "⟨{}⟩", parts.join(", "))
    }
}

/// `I : s^∞`: every exponent on `supp(s)` set to zero in the finite
/// generators and family bases. A family with a variable in `supp(s)`
/// contributes its reduced base as a finite generator, which absorbs the
/// whole family.
pub fn saturate(ideal: &MonomialIdeal, s: &Monomial) -> MonomialIdeal {
    let supp: BTreeSet<u32> = s.support();
    let mut gens: Vec<Monomial> = ideal.gens.iter().map(|g| g.without(&supp)).collect();
    let mut families = Vec::new();
    for f in &ideal.families {
        let base = f.base.without(&supp);
        if supp.iter().any(|&v| f.has_var(v)) {
            gens.push(base);
        } else {
            families.push(TailFamily { base, ..f.clone() });
        }
    }
    MonomialIdeal::normalized(gens, families)
}
