//! Free modules `A^k` and their subquotients `U/V`.
//!
//! A vector of `A^k` is an index `sum c_i n^i` where `n = |A|` and
//! coordinate 0 is least significant. Submodules of a subquotient `U/V`
//! are represented by their preimages `W` with `V ⊆ W ⊆ U`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;

use super::{canonical_cmp, ElemSet, FiniteRing, Ideal};
use crate::error::{Error, Result};

/// Default bound on `|A|^k` for free module carriers.
pub const DEFAULT_MODULE_CAP: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    ring: FiniteRing,
    rank: usize,
    size: usize,
}

impl FreeModule {
    pub fn new(ring: FiniteRing, rank: usize) -> Result<Self> {
        let size = (ring.size() as u128).checked_pow(rank as u32).unwrap_or(u128::MAX);
        if rank == 0 || size > DEFAULT_MODULE_CAP as u128 {
            return Err(Error::SizeCapExceeded { size, cap: DEFAULT_MODULE_CAP });
        }
        Ok(Self::new_unchecked(ring, rank))
    }

    pub(crate) fn new_unchecked(ring: FiniteRing, rank: usize) -> Self {
        let size = ring.size().pow(rank as u32);
        FreeModule { ring, rank, size }
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn coords(&self, mut v: usize) -> Vec<usize> {
        let n = self.ring.size();
        (0..self.rank)
            .map(|_| {
                let c = v % n;
                v /= n;
                c
            })
            .collect()
    }

    pub fn vector(&self, coords: &[usize]) -> Result<usize> {
        if coords.len() != self.rank {
            return Err(Error::Validation(format!(
                "vector of length {} in a module of rank {}",
                coords.len(),
                self.rank
            )));
        }
        let n = self.ring.size();
        let mut v = 0;
        for &c in coords.iter().rev() {
            self.ring.check_element(c)?;
            v = v * n + c;
        }
        Ok(v)
    }

    #[inline]
    pub fn add(&self, u: usize, v: usize) -> usize {
        if self.rank == 1 {
            return self.ring.add(u, v);
        }
        let n = self.ring.size();
        let (mut u, mut v) = (u, v);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.rank {
            out += self.ring.add(u % n, v % n) * place;
            u /= n;
            v /= n;
            place *= n;
        }
        out
    }

    #[inline]
    pub fn scale(&self, a: usize, v: usize) -> usize {
        if self.rank == 1 {
            return self.ring.mul(a, v);
        }
        let n = self.ring.size();
        let mut v = v;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.rank {
            out += self.ring.mul(a, v % n) * place;
            v /= n;
            place *= n;
        }
        out
    }

    pub fn label(&self, v: usize) -> String {
        if self.rank == 1 {
            return self.ring.label(v).to_string();
        }
        let parts: Vec<&str> = self.coords(v).into_iter().map(|c| self.ring.label(c)).collect();
        format!("[{}]", parts.join(","))
    }

    pub(crate) fn zero_set(&self) -> ElemSet {
        let mut s = FixedBitSet::with_capacity(self.size);
        s.insert(0);
        s
    }

    pub(crate) fn full_set(&self) -> ElemSet {
        let mut s = FixedBitSet::with_capacity(self.size);
        s.insert_range(..);
        s
    }

    /// Submodule generated by `gens`.
    pub(crate) fn span(&self, gens: impl IntoIterator<Item = usize>) -> ElemSet {
        let mut b = SpanBuilder::zero(self);
        for g in gens {
            b.add_module_gen(g);
        }
        b.set
    }

    /// `W + Av` for a submodule `W`.
    pub(crate) fn extend(&self, w: &ElemSet, gens: impl IntoIterator<Item = usize>) -> ElemSet {
        let mut b = SpanBuilder::from_set(self, w);
        for g in gens {
            b.add_module_gen(g);
        }
        b.set
    }

    /// A small generating set: scan in ascending order and keep every
    /// element not yet in the span of the kept ones.
    pub(crate) fn generating_set(&self, set: &ElemSet) -> Vec<usize> {
        let mut b = SpanBuilder::zero(self);
        let mut gens = Vec::new();
        for v in set.ones() {
            if !b.set.contains(v) {
                b.add_module_gen(v);
                gens.push(v);
            }
        }
        gens
    }

    pub(crate) fn is_submodule(&self, set: &ElemSet) -> bool {
        if !set.contains(0) {
            return false;
        }
        let elems: Vec<usize> = set.ones().collect();
        for &u in &elems {
            for &a in self.ring.additive_generators().iter().chain(std::iter::once(&self.ring.one())) {
                if !set.contains(self.scale(a, u)) {
                    return false;
                }
            }
            for &v in &elems {
                if !set.contains(self.add(u, v)) {
                    return false;
                }
            }
        }
        // closure under all scalars follows from closure under the additive
        // generators of A together with additive closure
        true
    }

    pub(crate) fn sum(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        if a.is_subset(b) {
            return b.clone();
        }
        if b.is_subset(a) {
            return a.clone();
        }
        self.extend(a, self.generating_set(b))
    }

    /// `h·N` for an ideal `h` given as a set of ring elements.
    pub(crate) fn ideal_product(&self, h: &ElemSet, n: &ElemSet) -> ElemSet {
        let ring_free = FreeModule::new_unchecked(self.ring.clone(), 1);
        let hg = ring_free.generating_set(h);
        let ng = self.generating_set(n);
        let mut b = SpanBuilder::zero(self);
        for &a in &hg {
            for &v in &ng {
                b.add_module_gen(self.scale(a, v));
            }
        }
        b.set
    }

    /// `{a in A : a·x in N}`.
    pub(crate) fn colon_element(&self, n: &ElemSet, x: usize) -> ElemSet {
        let mut out = FixedBitSet::with_capacity(self.ring.size());
        for a in self.ring.elements() {
            if n.contains(self.scale(a, x)) {
                out.insert(a);
            }
        }
        out
    }

    /// `{a in A : a·H ⊆ N}`.
    pub(crate) fn colon_ideal(&self, n: &ElemSet, h: &ElemSet) -> ElemSet {
        let gens = self.generating_set(h);
        let mut out = FixedBitSet::with_capacity(self.ring.size());
        for a in self.ring.elements() {
            if gens.iter().all(|&g| n.contains(self.scale(a, g))) {
                out.insert(a);
            }
        }
        out
    }

    /// `{m in U : m·h ⊆ N}`.
    pub(crate) fn colon_by_ideal(&self, n: &ElemSet, h: &ElemSet, upper: &ElemSet) -> ElemSet {
        let ring_free = FreeModule::new_unchecked(self.ring.clone(), 1);
        let hg = ring_free.generating_set(h);
        let mut out = FixedBitSet::with_capacity(self.size);
        for m in upper.ones() {
            if hg.iter().all(|&a| n.contains(self.scale(a, m))) {
                out.insert(m);
            }
        }
        out
    }

    /// All submodules `W` with `lower ⊆ W ⊆ upper`, in canonical order.
    pub(crate) fn submodules_between(&self, lower: &ElemSet, upper: &ElemSet) -> Vec<ElemSet> {
        // distinct cyclic extensions, one representative vector each
        let mut cyclic: Vec<(usize, ElemSet)> = Vec::new();
        let mut seen = HashSet::new();
        for u in upper.ones() {
            if lower.contains(u) {
                continue;
            }
            let c = self.extend(lower, [u]);
            if seen.insert(c.clone()) {
                cyclic.push((u, c));
            }
        }
        let mut found: HashSet<ElemSet> = HashSet::new();
        found.insert(lower.clone());
        let mut queue = VecDeque::from([lower.clone()]);
        while let Some(w) = queue.pop_front() {
            let base = SpanBuilder::from_set(self, &w);
            for (u, c) in &cyclic {
                if c.is_subset(&w) {
                    continue;
                }
                let mut b = base.clone();
                b.add_module_gen(*u);
                if !found.contains(&b.set) {
                    found.insert(b.set.clone());
                    queue.push_back(b.set);
                }
            }
        }
        let mut out: Vec<ElemSet> = found.into_iter().collect();
        out.sort_by(canonical_cmp);
        out
    }
}

/// Incrementally grows an additive subgroup that is kept closed under
/// the ring action.
#[derive(Clone)]
pub(crate) struct SpanBuilder<'a> {
    module: &'a FreeModule,
    pub(crate) set: ElemSet,
    list: Vec<usize>,
}

impl<'a> SpanBuilder<'a> {
    pub(crate) fn zero(module: &'a FreeModule) -> Self {
        SpanBuilder { module, set: module.zero_set(), list: vec![0] }
    }

    pub(crate) fn from_set(module: &'a FreeModule, set: &ElemSet) -> Self {
        SpanBuilder { module, set: set.clone(), list: set.ones().collect() }
    }

    fn add_additive(&mut self, g: usize) {
        if self.set.contains(g) {
            return;
        }
        let base = self.list.clone();
        let mut t = g;
        while !self.set.contains(t) {
            for &x in &base {
                let y = self.module.add(x, t);
                self.set.insert(y);
                self.list.push(y);
            }
            t = self.module.add(t, g);
        }
    }

    /// Adds the cyclic submodule `Av`.
    pub(crate) fn add_module_gen(&mut self, v: usize) {
        if self.set.contains(v) {
            return;
        }
        let ring = self.module.ring.clone();
        for &a in ring.additive_generators() {
            self.add_additive(self.module.scale(a, v));
        }
    }
}

/// A submodule of a [`FiniteModule`], stored as its preimage in `A^k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Submodule {
    pub(crate) set: ElemSet,
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.set.ones()).finish()
    }
}

impl PartialOrd for Submodule {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Submodule {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        canonical_cmp(&self.set, &other.set)
    }
}

impl Submodule {
    pub(crate) fn from_set(set: ElemSet) -> Self {
        Submodule { set }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.set.contains(v)
    }

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.set.is_subset(&other.set)
    }

    pub fn elements(&self) -> Vec<usize> {
        self.set.ones().collect()
    }

    pub fn len(&self) -> usize {
        self.set.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn set(&self) -> &ElemSet {
        &self.set
    }
}

/// The subquotient `U/V` of a free module `A^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteModule {
    ambient: FreeModule,
    upper: ElemSet,
    lower: ElemSet,
}

impl FiniteModule {
    /// `A^k` itself.
    pub fn free(ring: &FiniteRing, rank: usize) -> Result<Self> {
        let ambient = FreeModule::new(ring.clone(), rank)?;
        Ok(FiniteModule { upper: ambient.full_set(), lower: ambient.zero_set(), ambient })
    }

    /// The ring as a module over itself.
    pub fn regular(ring: &FiniteRing) -> Self {
        let ambient = FreeModule::new_unchecked(ring.clone(), 1);
        FiniteModule { upper: ambient.full_set(), lower: ambient.zero_set(), ambient }
    }

    /// `U/V` where `U` and `V` are generated by the given vectors of `A^k`.
    pub fn from_generators(ring: &FiniteRing, rank: usize, upper: &[Vec<usize>], lower: &[Vec<usize>]) -> Result<Self> {
        let ambient = FreeModule::new(ring.clone(), rank)?;
        let to_idx = |vs: &[Vec<usize>]| -> Result<Vec<usize>> { vs.iter().map(|v| ambient.vector(v)).collect() };
        let u = ambient.span(to_idx(upper)?);
        let l = ambient.span(to_idx(lower)?);
        if !l.is_subset(&u) {
            return Err(Error::NotASubmodule("relations are not contained in the carrier".into()));
        }
        Ok(FiniteModule { ambient, upper: u, lower: l })
    }

    /// The subquotient with the given preimages.
    pub fn subquotient(ambient: &FreeModule, upper: &ElemSet, lower: &ElemSet) -> Result<Self> {
        if !ambient.is_submodule(upper) || !ambient.is_submodule(lower) {
            return Err(Error::NotASubmodule("carrier or relations are not submodules".into()));
        }
        if !lower.is_subset(upper) {
            return Err(Error::NotASubmodule("relations are not contained in the carrier".into()));
        }
        Ok(FiniteModule { ambient: ambient.clone(), upper: upper.clone(), lower: lower.clone() })
    }

    /// An ideal viewed as a submodule of `A`.
    pub fn ideal(ideal: &Ideal) -> Self {
        let ambient = FreeModule::new_unchecked(ideal.ring().clone(), 1);
        FiniteModule { upper: ideal.set().clone(), lower: ambient.zero_set(), ambient }
    }

    pub fn ring(&self) -> &FiniteRing {
        self.ambient.ring()
    }

    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }

    pub fn rank(&self) -> usize {
        self.ambient.rank()
    }

    pub fn upper(&self) -> &ElemSet {
        &self.upper
    }

    pub fn lower(&self) -> &ElemSet {
        &self.lower
    }

    /// Number of cosets `|U| / |V|`.
    pub fn order(&self) -> usize {
        self.upper.count_ones(..) / self.lower.count_ones(..)
    }

    pub fn is_zero(&self) -> bool {
        self.upper == self.lower
    }

    pub fn zero_submodule(&self) -> Submodule {
        Submodule::from_set(self.lower.clone())
    }

    pub fn whole(&self) -> Submodule {
        Submodule::from_set(self.upper.clone())
    }

    /// `V + span(gens)`; every generator must lie in `U`.
    pub fn span(&self, gens: &[usize]) -> Result<Submodule> {
        for &g in gens {
            if !self.upper.contains(g) {
                return Err(Error::NotASubmodule(format!("vector {} is outside the carrier", self.ambient.label(g))));
            }
        }
        Ok(Submodule::from_set(self.ambient.extend(&self.lower, gens.iter().copied())))
    }

    /// Like [`FiniteModule::span`] with vectors given by coordinates.
    pub fn span_coords(&self, gens: &[Vec<usize>]) -> Result<Submodule> {
        let idx: Vec<usize> = gens.iter().map(|v| self.ambient.vector(v)).collect::<Result<_>>()?;
        self.span(&idx)
    }

    /// Checks that `n` is a submodule of this module.
    pub fn check_submodule(&self, n: &Submodule) -> Result<()> {
        if n.set.len() != self.ambient.size() {
            return Err(Error::RingMismatch);
        }
        if !self.lower.is_subset(&n.set) || !n.set.is_subset(&self.upper) {
            return Err(Error::NotASubmodule("not between relations and carrier".into()));
        }
        if !self.ambient.is_submodule(&n.set) {
            return Err(Error::NotASubmodule("not closed under addition and scalars".into()));
        }
        Ok(())
    }

    /// All submodules in canonical order.
    pub fn submodules(&self) -> Vec<Submodule> {
        self.ambient
            .submodules_between(&self.lower, &self.upper)
            .into_iter()
            .map(Submodule::from_set)
            .collect()
    }

    /// `N` as a module in its own right (`N/V`).
    pub fn submodule_as_module(&self, n: &Submodule) -> FiniteModule {
        FiniteModule { ambient: self.ambient.clone(), upper: n.set.clone(), lower: self.lower.clone() }
    }

    /// `M/N`.
    pub fn quotient(&self, n: &Submodule) -> FiniteModule {
        FiniteModule { ambient: self.ambient.clone(), upper: self.upper.clone(), lower: n.set.clone() }
    }

    pub fn sum(&self, a: &Submodule, b: &Submodule) -> Submodule {
        Submodule::from_set(self.ambient.sum(&a.set, &b.set))
    }

    pub fn intersect(&self, a: &Submodule, b: &Submodule) -> Submodule {
        let mut s = a.set.clone();
        s.intersect_with(&b.set);
        Submodule::from_set(s)
    }

    /// `N·h` computed inside `M`, i.e. `N·h + V`.
    pub fn mul_ideal(&self, n: &Submodule, h: &Ideal) -> Submodule {
        let prod = self.ambient.ideal_product(h.set(), &n.set);
        Submodule::from_set(self.ambient.sum(&prod, &self.lower))
    }

    /// `(N : x) = {a : a·x ∈ N}`.
    pub fn colon_element(&self, n: &Submodule, x: usize) -> Ideal {
        Ideal::from_set_unchecked(self.ring().clone(), self.ambient.colon_element(&n.set, x))
    }

    /// `(N : H) = {a : a·H ⊆ N}`.
    pub fn colon(&self, n: &Submodule, h: &Submodule) -> Ideal {
        Ideal::from_set_unchecked(self.ring().clone(), self.ambient.colon_ideal(&n.set, &h.set))
    }

    /// `(N : h) = {m ∈ M : m·h ⊆ N}`.
    pub fn colon_by_ideal(&self, n: &Submodule, h: &Ideal) -> Submodule {
        Submodule::from_set(self.ambient.colon_by_ideal(&n.set, h.set(), &self.upper))
    }

    /// Annihilator of the coset `x + V`.
    pub fn annihilator_of(&self, x: usize) -> Ideal {
        Ideal::from_set_unchecked(self.ring().clone(), self.ambient.colon_element(&self.lower, x))
    }

    /// `Ann(M) = (V : U)`.
    pub fn annihilator(&self) -> Ideal {
        Ideal::from_set_unchecked(self.ring().clone(), self.ambient.colon_ideal(&self.lower, &self.upper))
    }

    /// Generating vectors of `N` modulo the relations.
    pub fn generators_of(&self, n: &Submodule) -> Vec<usize> {
        let mut b = SpanBuilder::from_set(&self.ambient, &self.lower);
        let mut gens = Vec::new();
        for v in n.set.ones() {
            if !b.set.contains(v) {
                b.add_module_gen(v);
                gens.push(v);
            }
        }
        gens
    }

    pub fn label_submodule(&self, n: &Submodule) -> String {
        let gens = self.generators_of(n);
        let parts: Vec<String> = gens.iter().map(|&g| self.ambient.label(g)).collect();
        if parts.is_empty() {
            "(0)".into()
        } else {
            format!("({})", parts.join(","))
        }
    }

    /// External direct sum, carried in `A^(k1+k2)`.
    pub fn direct_sum(&self, other: &FiniteModule) -> Result<FiniteModule> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch);
        }
        let ambient = FreeModule::new(self.ring().clone(), self.rank() + other.rank())?;
        let shift = self.ambient.size();
        let pair = |a: &ElemSet, b: &ElemSet| -> ElemSet {
            let mut s = FixedBitSet::with_capacity(ambient.size());
            for y in b.ones() {
                for x in a.ones() {
                    s.insert(x + shift * y);
                }
            }
            s
        };
        Ok(FiniteModule {
            upper: pair(&self.upper, &other.upper),
            lower: pair(&self.lower, &other.lower),
            ambient,
        })
    }
}
