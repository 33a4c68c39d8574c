use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Budget, MonomialIdeal, PrincipalMultSet, VarPattern};
use crate::ring::{FiniteModule, FiniteRing, Ideal, RingTerm, Submodule};
use crate::torsion::{filter_from_mult_set, filter_from_prime, gabriel_closure, lambda_filter, GabrielFilter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TaskKind {
    #[serde(alias = "inspect")]
    Enumerate,
    Partition,
    Closure,
    Certify,
    Suite,
    #[serde(alias = "monomial")]
    MonomialDecide,
    Census,
}

impl TaskKind {
    pub fn name(self) -> &'static str {
        match self {
            TaskKind::Enumerate => "enumerate",
            TaskKind::Partition => "partition",
            TaskKind::Closure => "closure",
            TaskKind::Certify => "certify",
            TaskKind::Suite => "suite",
            TaskKind::MonomialDecide => "monomial-decide",
            TaskKind::Census => "census",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// A ring element given by index or by label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRef {
    Index(usize),
    Label(String),
}

impl ElementRef {
    pub fn resolve(&self, ring: &FiniteRing) -> Result<usize> {
        match self {
            ElementRef::Index(i) => {
                ring.check_element(*i)?;
                Ok(*i)
            }
            ElementRef::Label(s) => ring
                .elements()
                .find(|&a| ring.label(a) == s)
                .ok_or_else(|| Error::Validation(format!("no element labelled {s:?} in {ring}"))),
        }
    }
}

fn resolve_all(ring: &FiniteRing, refs: &[ElementRef]) -> Result<Vec<usize>> {
    refs.iter().map(|r| r.resolve(ring)).collect()
}

fn ideal_of(ring: &FiniteRing, gens: &[ElementRef]) -> Result<Ideal> {
    Ideal::generated(ring, &resolve_all(ring, gens)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum FilterSpec {
    Trivial,
    Improper,
    Lambda,
    /// `{a : a ∩ S ≠ ∅}` for a multiplicative set `S`.
    MultSet(Vec<ElementRef>),
    /// The filter of `A ∖ p`.
    PrimeComplement { ideal_gens: Vec<ElementRef> },
    /// The least Gabriel filter containing the given ideals.
    Seeds(Vec<Vec<ElementRef>>),
    /// An explicit member list, checked against the Gabriel axioms.
    Members(Vec<Vec<ElementRef>>),
}

impl FilterSpec {
    pub fn build(&self, ring: &FiniteRing) -> Result<GabrielFilter> {
        match self {
            FilterSpec::Trivial => Ok(GabrielFilter::trivial(ring)),
            FilterSpec::Improper => Ok(GabrielFilter::improper(ring)),
            FilterSpec::Lambda => Ok(lambda_filter(ring)),
            FilterSpec::MultSet(s) => filter_from_mult_set(ring, &resolve_all(ring, s)?),
            FilterSpec::PrimeComplement { ideal_gens } => filter_from_prime(&ideal_of(ring, ideal_gens)?),
            FilterSpec::Seeds(seeds) => {
                let ideals: Vec<Ideal> = seeds.iter().map(|g| ideal_of(ring, g)).collect::<Result<_>>()?;
                gabriel_closure(ring, &ideals)
            }
            FilterSpec::Members(ms) => {
                let ideals: Vec<Ideal> = ms.iter().map(|g| ideal_of(ring, g)).collect::<Result<_>>()?;
                GabrielFilter::from_members(ring, &ideals)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ModuleSpec {
    /// `A` itself.
    #[default]
    Regular,
    /// `A^k`.
    Free(usize),
    /// `A^rank / ⟨relations⟩`.
    Quotient { rank: usize, relations: Vec<Vec<ElementRef>> },
    /// An ideal viewed as a submodule of `A`.
    Ideal(Vec<ElementRef>),
}

impl ModuleSpec {
    pub fn build(&self, ring: &FiniteRing) -> Result<FiniteModule> {
        match self {
            ModuleSpec::Regular => Ok(FiniteModule::regular(ring)),
            ModuleSpec::Free(k) => FiniteModule::free(ring, *k),
            ModuleSpec::Quotient { rank, relations } => {
                let whole: Vec<Vec<usize>> = (0..*rank)
                    .map(|i| (0..*rank).map(|j| if i == j { ring.one() } else { ring.zero() }).collect())
                    .collect();
                let rels: Vec<Vec<usize>> = relations.iter().map(|v| resolve_all(ring, v)).collect::<Result<_>>()?;
                FiniteModule::from_generators(ring, *rank, &whole, &rels)
            }
            ModuleSpec::Ideal(gens) => Ok(FiniteModule::ideal(&ideal_of(ring, gens)?)),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            ModuleSpec::Regular | ModuleSpec::Ideal(_) => 1,
            ModuleSpec::Free(k) => *k,
            ModuleSpec::Quotient { rank, .. } => *rank,
        }
    }
}

/// A declarative workbench document. Exactly one task; parameters that
/// the task does not use are rejected.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkbenchSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub task: Option<TaskKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<RingTerm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub filter: Option<FilterSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
    /// closure / certify: the ambient module (default `A`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleSpec>,
    /// closure / certify: generators of `N` as coordinate vectors.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub submodule: Option<Vec<Vec<ElementRef>>>,
    /// suite: sweep every catalogue ring up to this size instead of `ring`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub catalogue: Option<usize>,
    /// monomial-decide parameters.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<MonomialIdeal>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult_set: Option<PrincipalMultSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub primes: Option<Vec<VarPattern>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<Budget>,
}

/// Parses a spec document; errors carry the line and column.
pub fn parse_spec(text: &str) -> Result<WorkbenchSpec> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

impl WorkbenchSpec {
    /// Settles the task from the document and an optional command-line
    /// choice, and rejects parameters the task does not use.
    pub fn resolve_task(&self, requested: Option<TaskKind>) -> Result<TaskKind> {
        let task = match (self.task, requested) {
            (Some(a), Some(b)) if a != b => {
                return Err(Error::Validation(format!("spec asks for {} but the command is {}", a.name(), b.name())))
            }
            (Some(t), _) | (None, Some(t)) => t,
            (None, None) => return Err(Error::Validation("no task given".into())),
        };
        let present = [
            ("ring", self.ring.is_some()),
            ("filter", self.filter.is_some()),
            ("module", self.module.is_some()),
            ("submodule", self.submodule.is_some()),
            ("catalogue", self.catalogue.is_some()),
            ("ideal", self.ideal.is_some()),
            ("mult_set", self.mult_set.is_some()),
            ("primes", self.primes.is_some()),
            ("budget", self.budget.is_some()),
        ];
        let (allowed, required): (&[&str], &[&str]) = match task {
            TaskKind::Enumerate => (&["ring", "filter"], &["ring"]),
            TaskKind::Partition => (&["ring", "filter"], &["ring", "filter"]),
            TaskKind::Closure | TaskKind::Certify => {
                (&["ring", "filter", "module", "submodule"], &["ring", "filter", "submodule"])
            }
            TaskKind::Suite => (&["ring", "filter", "catalogue"], &[]),
            TaskKind::MonomialDecide => (&["ideal", "mult_set", "primes", "budget"], &["ideal", "mult_set"]),
            TaskKind::Census => (&["ring"], &["ring"]),
        };
        for (name, is_set) in present {
            if is_set && !allowed.contains(&name) {
                return Err(Error::Validation(format!("field {name:?} is not used by task {}", task.name())));
            }
            if !is_set && required.contains(&name) {
                return Err(Error::Validation(format!("task {} needs field {name:?}", task.name())));
            }
        }
        if task == TaskKind::Suite {
            match (&self.ring, self.catalogue) {
                (Some(_), Some(_)) => return Err(Error::Validation("give either ring or catalogue, not both".into())),
                (None, None) => return Err(Error::Validation("suite needs ring or catalogue".into())),
                (None, Some(_)) if self.filter.is_some() => {
                    return Err(Error::Validation("a catalogue sweep runs every filter; drop \"filter\"".into()))
                }
                _ => {}
            }
        }
        Ok(task)
    }

    pub(crate) fn submodule_in(&self, m: &FiniteModule, rank: usize) -> Result<Submodule> {
        let gens = self.submodule.as_deref().unwrap_or_default();
        let coords: Vec<Vec<usize>> = gens
            .iter()
            .map(|v| {
                if v.len() != rank {
                    return Err(Error::Validation(format!("vector of length {} in a module of rank {rank}", v.len())));
                }
                resolve_all(m.ring(), v)
            })
            .collect::<Result<_>>()?;
        m.span_coords(&coords)
    }
}
