//! Gabriel filters stored extensionally as sets of ideals.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{ElemSet, FiniteRing, FreeModule, Ideal};

/// A Gabriel filter `L(σ)` on a finite ring; equivalently a hereditary
/// torsion theory `σ`.
#[derive(Clone)]
pub struct GabrielFilter {
    ring: FiniteRing,
    members: FixedBitSet,
}

impl PartialEq for GabrielFilter {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.members == other.members
    }
}

impl Eq for GabrielFilter {}

impl fmt::Debug for GabrielFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GabrielFilter{self}")
    }
}

impl fmt::Display for GabrielFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GabrielAxiom {
    ContainsUnit,
    UpwardClosed,
    IntersectionClosed,
    GabrielCondition,
    ProductClosed,
}

/// One failed axiom with the ideals that witness the failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: GabrielAxiom,
    pub witnesses: Vec<Ideal>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.witnesses.iter().map(|i| i.to_string()).collect();
        write!(f, "{:?}: {}", self.axiom, w.join(", "))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GabrielReport {
    pub violations: Vec<Violation>,
}

impl GabrielReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self, axiom: GabrielAxiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }
}

/// Indexed view of the ideal lattice used by the axiom checks.
struct Lattice<'a> {
    ring: &'a FiniteRing,
    sets: &'a [ElemSet],
    free: FreeModule,
}

impl<'a> Lattice<'a> {
    fn new(ring: &'a FiniteRing) -> Self {
        Lattice { ring, sets: &ring.ideal_table().sets, free: FreeModule::new_unchecked(ring.clone(), 1) }
    }

    fn len(&self) -> usize {
        self.sets.len()
    }

    fn top(&self) -> usize {
        self.sets.len() - 1
    }

    fn ideal(&self, i: usize) -> Ideal {
        self.ring.ideal_at(i)
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.sets[a].is_subset(&self.sets[b])
    }

    fn meet(&self, a: usize, b: usize) -> usize {
        let mut s = self.sets[a].clone();
        s.intersect_with(&self.sets[b]);
        self.ring.ideal_index_of_set(&s)
    }

    fn product(&self, a: usize, b: usize) -> usize {
        self.ring.ideal_index_of_set(&self.free.ideal_product(&self.sets[a], &self.sets[b]))
    }

    fn colon_element(&self, b: usize, x: usize) -> usize {
        self.ring.ideal_index_of_set(&self.free.colon_element(&self.sets[b], x))
    }

    /// `(b : x) ∈ L` for every `x ∈ a`.
    fn gabriel_premise(&self, members: &FixedBitSet, b: usize, a: usize) -> bool {
        self.sets[a].ones().all(|x| members.contains(self.colon_element(b, x)))
    }
}

fn index_members(ring: &FiniteRing, members: &[Ideal]) -> Result<FixedBitSet> {
    let mut set = FixedBitSet::with_capacity(ring.ideal_count());
    for m in members {
        let i = ring.ideal_index(m).ok_or(Error::RingMismatch)?;
        set.insert(i);
    }
    Ok(set)
}

/// Lists every axiom violation of `members`; empty iff it is a Gabriel filter.
pub fn gabriel_check(ring: &FiniteRing, members: &[Ideal]) -> Result<GabrielReport> {
    let set = index_members(ring, members)?;
    Ok(check_indexed(ring, &set))
}

fn check_indexed(ring: &FiniteRing, set: &FixedBitSet) -> GabrielReport {
    let lat = Lattice::new(ring);
    let mut violations = Vec::new();
    let mut push = |axiom, idx: &[usize]| {
        violations.push(Violation { axiom, witnesses: idx.iter().map(|&i| lat.ideal(i)).collect() });
    };
    if !set.contains(lat.top()) {
        push(GabrielAxiom::ContainsUnit, &[]);
    }
    for a in set.ones() {
        for b in 0..lat.len() {
            if !set.contains(b) && lat.leq(a, b) {
                push(GabrielAxiom::UpwardClosed, &[a, b]);
            }
        }
    }
    for a in set.ones() {
        for b in set.ones().filter(|&b| b > a) {
            let m = lat.meet(a, b);
            if !set.contains(m) {
                push(GabrielAxiom::IntersectionClosed, &[a, b, m]);
            }
        }
    }
    for b in (0..lat.len()).filter(|&b| !set.contains(b)) {
        if let Some(a) = set.ones().find(|&a| lat.gabriel_premise(set, b, a)) {
            push(GabrielAxiom::GabrielCondition, &[b, a]);
        }
    }
    for a in set.ones() {
        for b in set.ones().filter(|&b| b >= a) {
            let p = lat.product(a, b);
            if !set.contains(p) {
                push(GabrielAxiom::ProductClosed, &[a, b, p]);
            }
        }
    }
    GabrielReport { violations }
}

impl GabrielFilter {
    pub(crate) fn from_index_set(ring: &FiniteRing, members: FixedBitSet) -> Self {
        GabrielFilter { ring: ring.clone(), members }
    }

    /// Validates `members` against the Gabriel axioms.
    pub fn from_members(ring: &FiniteRing, members: &[Ideal]) -> Result<Self> {
        let set = index_members(ring, members)?;
        let report = check_indexed(ring, &set);
        if let Some(v) = report.violations.first() {
            return Err(Error::NotGabriel(v.to_string()));
        }
        Ok(GabrielFilter { ring: ring.clone(), members: set })
    }

    /// `{A}`: the zero torsion theory.
    pub fn trivial(ring: &FiniteRing) -> Self {
        let mut set = FixedBitSet::with_capacity(ring.ideal_count());
        set.insert(ring.ideal_count() - 1);
        GabrielFilter { ring: ring.clone(), members: set }
    }

    /// All ideals: every module is torsion.
    pub fn improper(ring: &FiniteRing) -> Self {
        let mut set = FixedBitSet::with_capacity(ring.ideal_count());
        set.insert_range(..);
        GabrielFilter { ring: ring.clone(), members: set }
    }

    /// `{a : a ⊇ b}`.
    pub fn principal_upset(base: &Ideal) -> Self {
        let ring = base.ring();
        let mut set = FixedBitSet::with_capacity(ring.ideal_count());
        for (i, s) in ring.ideal_table().sets.iter().enumerate() {
            if base.set().is_subset(s) {
                set.insert(i);
            }
        }
        GabrielFilter { ring: ring.clone(), members: set }
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn contains(&self, ideal: &Ideal) -> bool {
        self.ring.ideal_index(ideal).is_some_and(|i| self.members.contains(i))
    }

    pub(crate) fn contains_set(&self, set: &ElemSet) -> bool {
        self.members.contains(self.ring.ideal_index_of_set(set))
    }

    pub(crate) fn contains_index(&self, i: usize) -> bool {
        self.members.contains(i)
    }

    pub(crate) fn index_set(&self) -> &FixedBitSet {
        &self.members
    }

    /// Members in the canonical ideal order.
    pub fn members(&self) -> Vec<Ideal> {
        self.members.ones().map(|i| self.ring.ideal_at(i)).collect()
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.len() == 1
    }

    pub fn is_improper(&self) -> bool {
        self.members.contains(0)
    }

    /// Minimal members under inclusion.
    pub fn basis(&self) -> Vec<Ideal> {
        let sets = &self.ring.ideal_table().sets;
        self.members
            .ones()
            .filter(|&a| !self.members.ones().any(|b| b != a && sets[b].is_subset(&sets[a])))
            .map(|i| self.ring.ideal_at(i))
            .collect()
    }

    /// Intersection of all members; itself a member.
    pub fn least(&self) -> Ideal {
        let mut s = self.ring.ideal_table().sets.last().expect("A is an ideal").clone();
        for i in self.members.ones() {
            s.intersect_with(&self.ring.ideal_table().sets[i]);
        }
        self.ring.ideal_at(self.ring.ideal_index_of_set(&s))
    }

    /// Members listed from the largest down, the order used when a search
    /// prefers coarse filter ideals.
    pub(crate) fn members_descending(&self) -> Vec<Ideal> {
        let mut m = self.members();
        m.reverse();
        m
    }

    /// `L(σ) ⊆ L(τ)`, i.e. `σ ≤ τ`.
    pub fn is_coarser_than(&self, other: &GabrielFilter) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn check(&self) -> GabrielReport {
        check_indexed(&self.ring, &self.members)
    }
}

/// Least Gabriel filter containing `seeds`.
///
/// Iterates upward closure, intersection closure and the Gabriel step
/// until nothing changes.
pub fn gabriel_closure(ring: &FiniteRing, seeds: &[Ideal]) -> Result<GabrielFilter> {
    let mut set = index_members(ring, seeds)?;
    let lat = Lattice::new(ring);
    set.insert(lat.top());
    loop {
        let before = set.clone();
        for a in before.ones() {
            for b in 0..lat.len() {
                if lat.leq(a, b) {
                    set.insert(b);
                }
            }
        }
        let snapshot: Vec<usize> = set.ones().collect();
        for &a in &snapshot {
            for &b in &snapshot {
                set.insert(lat.meet(a, b));
            }
        }
        for b in 0..lat.len() {
            if !set.contains(b) && set.ones().any(|a| lat.gabriel_premise(&set, b, a)) {
                set.insert(b);
            }
        }
        if set == before {
            return Ok(GabrielFilter::from_index_set(ring, set));
        }
    }
}

/// `L(σ_Σ) = {a : a ∩ Σ ≠ ∅}` for a multiplicatively closed `Σ ∋ 1`.
pub fn filter_from_mult_set(ring: &FiniteRing, sigma: &[usize]) -> Result<GabrielFilter> {
    for &s in sigma {
        ring.check_element(s)?;
    }
    if !sigma.contains(&ring.one()) {
        return Err(Error::MissingUnit);
    }
    for &a in sigma {
        for &b in sigma {
            let p = ring.mul(a, b);
            if !sigma.contains(&p) {
                return Err(Error::NotMultiplicativelyClosed {
                    a: ring.label(a).into(),
                    b: ring.label(b).into(),
                    product: ring.label(p).into(),
                });
            }
        }
    }
    let mut set = FixedBitSet::with_capacity(ring.ideal_count());
    for (i, s) in ring.ideal_table().sets.iter().enumerate() {
        if sigma.iter().any(|&x| s.contains(x)) {
            set.insert(i);
        }
    }
    Ok(GabrielFilter::from_index_set(ring, set))
}

/// `{a : Ann(a) = 0}`.
pub fn lambda_filter(ring: &FiniteRing) -> GabrielFilter {
    let mut set = FixedBitSet::with_capacity(ring.ideal_count());
    for (i, ideal) in ring.ideals().iter().enumerate() {
        if ideal.annihilator().is_zero() {
            set.insert(i);
        }
    }
    GabrielFilter::from_index_set(ring, set)
}

/// `L(σ_{A∖p}) = {a : a ⊄ p}`.
pub fn filter_from_prime(p: &Ideal) -> Result<GabrielFilter> {
    if !p.is_prime() {
        return Err(Error::NotPrime(p.to_string()));
    }
    let ring = p.ring();
    let mut set = FixedBitSet::with_capacity(ring.ideal_count());
    for (i, s) in ring.ideal_table().sets.iter().enumerate() {
        if !s.is_subset(p.set()) {
            set.insert(i);
        }
    }
    Ok(GabrielFilter::from_index_set(ring, set))
}

/// Intersection of the member sets.
pub fn meet_filters(filters: &[GabrielFilter]) -> Result<GabrielFilter> {
    let first = filters.first().ok_or(Error::EmptyMeet)?;
    let mut set = first.members.clone();
    for f in &filters[1..] {
        if f.ring != first.ring {
            return Err(Error::RingMismatch);
        }
        set.intersect_with(&f.members);
    }
    Ok(GabrielFilter::from_index_set(&first.ring, set))
}

/// Every Gabriel filter of `ring`, in the order of their least members.
///
/// A filter on a finite lattice is the up-set of its least member, so the
/// candidates are the `|ideals|` principal up-sets, each run through the
/// axiom check.
pub fn all_gabriel_filters(ring: &FiniteRing) -> Vec<GabrielFilter> {
    ring.ideals()
        .iter()
        .map(GabrielFilter::principal_upset)
        .filter(|f| f.check().is_empty())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z12() -> FiniteRing {
        FiniteRing::zmod(12).unwrap()
    }

    fn ideals(ring: &FiniteRing, gens: &[usize]) -> Vec<Ideal> {
        gens.iter().map(|&g| Ideal::generated(ring, &[g]).unwrap()).collect()
    }

    fn labels(f: &GabrielFilter) -> String {
        f.to_string()
    }

    #[test]
    fn check_accepts_the_mult_set_filter() {
        let r = z12();
        assert!(gabriel_check(&r, &ideals(&r, &[3, 1])).unwrap().is_empty());
        assert!(gabriel_check(&r, &ideals(&r, &[1])).unwrap().is_empty());
    }

    #[test]
    fn check_names_the_gabriel_witness() {
        let r = z12();
        let report = gabriel_check(&r, &ideals(&r, &[6, 2, 3, 1])).unwrap();
        let v = report.first(GabrielAxiom::GabrielCondition).unwrap();
        assert_eq!(v.witnesses, vec![Ideal::zero(&r), Ideal::generated(&r, &[6]).unwrap()]);
    }

    #[test]
    fn check_reports_missing_unit_and_upward_failures() {
        let r = z12();
        let report = gabriel_check(&r, &ideals(&r, &[4])).unwrap();
        assert!(report.first(GabrielAxiom::ContainsUnit).is_some());
        assert!(report.first(GabrielAxiom::UpwardClosed).is_some());
    }

    #[test]
    fn closure_examples() {
        let r = z12();
        assert_eq!(labels(&gabriel_closure(&r, &ideals(&r, &[4])).unwrap()), "{(4),(2),(1)}");
        assert_eq!(gabriel_closure(&r, &ideals(&r, &[6])).unwrap(), GabrielFilter::improper(&r));
        assert_eq!(gabriel_closure(&r, &[]).unwrap(), GabrielFilter::trivial(&r));
    }

    #[test]
    fn mult_set_examples() {
        let r = z12();
        assert_eq!(labels(&filter_from_mult_set(&r, &[1, 3, 9]).unwrap()), "{(3),(1)}");
        assert_eq!(labels(&filter_from_mult_set(&r, &[1, 5]).unwrap()), "{(1)}");
        assert_eq!(filter_from_mult_set(&r, &[1]).unwrap(), GabrielFilter::trivial(&r));
        assert!(matches!(filter_from_mult_set(&r, &[1, 3]), Err(Error::NotMultiplicativelyClosed { .. })));
        assert_eq!(filter_from_mult_set(&r, &[3, 9]), Err(Error::MissingUnit));
        let basis = filter_from_mult_set(&r, &[1, 3, 9]).unwrap().basis();
        assert_eq!(basis, ideals(&r, &[3]));
    }

    #[test]
    fn lambda_examples() {
        assert!(lambda_filter(&z12()).is_trivial());
        assert!(lambda_filter(&FiniteRing::zmod(7).unwrap()).is_trivial());
        assert!(lambda_filter(&FiniteRing::zmod(4).unwrap()).is_trivial());
    }

    #[test]
    fn prime_examples() {
        let r = z12();
        let two = Ideal::generated(&r, &[2]).unwrap();
        let three = Ideal::generated(&r, &[3]).unwrap();
        assert_eq!(labels(&filter_from_prime(&two).unwrap()), "{(3),(1)}");
        assert_eq!(labels(&filter_from_prime(&three).unwrap()), "{(4),(2),(1)}");
        assert!(matches!(filter_from_prime(&Ideal::generated(&r, &[4]).unwrap()), Err(Error::NotPrime(_))));
        let f5 = FiniteRing::zmod(5).unwrap();
        assert!(filter_from_prime(&Ideal::zero(&f5)).unwrap().is_trivial());
    }

    #[test]
    fn meet_examples() {
        let r = z12();
        let a = filter_from_prime(&Ideal::generated(&r, &[2]).unwrap()).unwrap();
        let b = filter_from_prime(&Ideal::generated(&r, &[3]).unwrap()).unwrap();
        assert!(meet_filters(&[a.clone(), b]).unwrap().is_trivial());
        assert_eq!(meet_filters(std::slice::from_ref(&a)).unwrap(), a);
        assert_eq!(meet_filters(&[a.clone(), GabrielFilter::improper(&r)]).unwrap(), a);
        assert_eq!(meet_filters(&[]), Err(Error::EmptyMeet));
        let other = GabrielFilter::trivial(&FiniteRing::zmod(6).unwrap());
        assert_eq!(meet_filters(&[a, other]), Err(Error::RingMismatch));
    }

    #[test]
    fn z12_has_four_filters() {
        let all = all_gabriel_filters(&z12());
        let names: Vec<String> = all.iter().map(labels).collect();
        assert_eq!(names, vec!["{(0),(6),(4),(3),(2),(1)}", "{(4),(2),(1)}", "{(3),(1)}", "{(1)}"]);
    }
}
