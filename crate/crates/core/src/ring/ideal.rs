use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use super::module::{FreeModule, SpanBuilder};
use super::{canonical_cmp, ElemSet, FiniteRing};
use crate::error::{Error, Result};

/// An ideal of a finite ring, stored as its element set.
#[derive(Clone)]
pub struct Ideal {
    ring: FiniteRing,
    set: ElemSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealOp {
    Sum,
    Product,
    Intersect,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.set == other.set && self.ring == other.ring
    }
}

impl Eq for Ideal {}

impl Hash for Ideal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.set.hash(state);
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        canonical_cmp(&self.set, &other.set)
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.generators();
        if gens.is_empty() {
            return f.write_str("(0)");
        }
        let labels: Vec<&str> = gens.iter().map(|&g| self.ring.label(g)).collect();
        write!(f, "({})", labels.join(","))
    }
}

impl Ideal {
    pub(crate) fn from_set_unchecked(ring: FiniteRing, set: ElemSet) -> Self {
        Ideal { ring, set }
    }

    fn free(&self) -> FreeModule {
        FreeModule::new_unchecked(self.ring.clone(), 1)
    }

    /// Smallest ideal containing `gens`; the empty list gives `(0)`.
    pub fn generated(ring: &FiniteRing, gens: &[usize]) -> Result<Self> {
        for &g in gens {
            ring.check_element(g)?;
        }
        let free = FreeModule::new_unchecked(ring.clone(), 1);
        Ok(Ideal { ring: ring.clone(), set: free.span(gens.iter().copied()) })
    }

    /// Wraps an element set, checking that it is an ideal.
    pub fn from_elements(ring: &FiniteRing, elems: &[usize]) -> Result<Self> {
        let mut set = FixedBitSet::with_capacity(ring.size());
        for &e in elems {
            ring.check_element(e)?;
            set.insert(e);
        }
        let free = FreeModule::new_unchecked(ring.clone(), 1);
        if !free.is_submodule(&set) {
            return Err(Error::NotASubmodule(format!("{elems:?} is not an ideal")));
        }
        Ok(Ideal { ring: ring.clone(), set })
    }

    pub fn zero(ring: &FiniteRing) -> Self {
        let free = FreeModule::new_unchecked(ring.clone(), 1);
        Ideal { ring: ring.clone(), set: free.zero_set() }
    }

    pub fn unit(ring: &FiniteRing) -> Self {
        let free = FreeModule::new_unchecked(ring.clone(), 1);
        Ideal { ring: ring.clone(), set: free.full_set() }
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn set(&self) -> &ElemSet {
        &self.set
    }

    pub fn contains(&self, a: usize) -> bool {
        self.set.contains(a)
    }

    pub fn elements(&self) -> Vec<usize> {
        self.set.ones().collect()
    }

    pub fn len(&self) -> usize {
        self.set.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1
    }

    pub fn is_unit(&self) -> bool {
        self.contains(self.ring.one())
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.set.is_subset(&other.set)
    }

    /// Greedy generator list: repeatedly add the element whose generated
    /// ideal grows the current span most, ties to the smallest index.
    pub fn generators(&self) -> Vec<usize> {
        let free = self.free();
        let mut current = SpanBuilder::zero(&free);
        let mut gens = Vec::new();
        while current.set != self.set {
            let mut best: Option<(usize, usize, SpanBuilder<'_>)> = None;
            for x in self.set.ones() {
                if current.set.contains(x) {
                    continue;
                }
                let mut b = current.clone();
                b.add_module_gen(x);
                let size = b.set.count_ones(..);
                if best.as_ref().is_none_or(|(_, s, _)| size > *s) {
                    best = Some((x, size, b));
                }
            }
            let (x, _, b) = best.expect("span is a proper subset");
            gens.push(x);
            current = b;
        }
        gens
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn combine(&self, op: IdealOp, other: &Ideal) -> Result<Ideal> {
        match op {
            IdealOp::Sum => self.sum(other),
            IdealOp::Product => self.product(other),
            IdealOp::Intersect => self.intersect(other),
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        Ok(Ideal { ring: self.ring.clone(), set: self.free().sum(&self.set, &other.set) })
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        Ok(Ideal { ring: self.ring.clone(), set: self.free().ideal_product(&self.set, &other.set) })
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut set = self.set.clone();
        set.intersect_with(&other.set);
        Ok(Ideal { ring: self.ring.clone(), set })
    }

    /// `(self : other) = {a : a·other ⊆ self}`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        Ok(Ideal { ring: self.ring.clone(), set: self.free().colon_ideal(&self.set, &other.set) })
    }

    /// `(self : b) = {a : a·b ∈ self}`.
    pub fn colon_element(&self, b: usize) -> Result<Ideal> {
        self.ring.check_element(b)?;
        Ok(Ideal { ring: self.ring.clone(), set: self.free().colon_element(&self.set, b) })
    }

    /// `Ann(self) = ((0) : self)`.
    pub fn annihilator(&self) -> Ideal {
        Ideal::zero(&self.ring).colon(self).expect("same ring")
    }

    /// The stable power `a^∞`: iterate `a^(n+1) = a·a^n` until it repeats.
    pub fn stable_power(&self) -> Ideal {
        let mut current = self.clone();
        loop {
            let next = self.product(&current).expect("same ring");
            if next == current {
                return current;
            }
            current = next;
        }
    }

    /// Proper, and `ab ∉ p` whenever `a, b ∉ p`.
    pub fn is_prime(&self) -> bool {
        if self.is_unit() {
            return false;
        }
        let outside: Vec<usize> = self.ring.elements().filter(|&a| !self.contains(a)).collect();
        outside
            .iter()
            .all(|&a| outside.iter().all(|&b| !self.contains(self.ring.mul(a, b))))
    }

    /// Image of this ideal under a surjection, i.e. the extended ideal `f(a)B`.
    pub(crate) fn map_to(&self, target: &FiniteRing, images: &[usize]) -> Ideal {
        let gens: Vec<usize> = self.set.ones().map(|a| images[a]).collect();
        Ideal::generated(target, &gens).expect("images are in range")
    }
}
