//! Precomputed submodule-lattice tables for exhaustive sweeps.
//!
//! Everything here is keyed by dense indices: submodules of one
//! [`FiniteModule`] in canonical order, and ideals of its ring in the
//! ring's canonical order.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::ring::{ElemSet, FiniteModule, FiniteRing, Ideal, Submodule};
use crate::torsion::GabrielFilter;

/// Filter-independent tables for the submodule lattice of a module `M`.
pub struct LatticeContext {
    module: FiniteModule,
    subs: Vec<ElemSet>,
    index: HashMap<ElemSet, usize>,
    /// `up[i]` = indices `j` with `subs[i] ⊆ subs[j]`.
    up: Vec<FixedBitSet>,
    /// `down[i]` = indices `j` with `subs[j] ⊆ subs[i]`.
    down: Vec<FixedBitSet>,
    gens: Vec<Vec<usize>>,
    /// `colon_elem[i][x]` = ideal index of `(N_i : x)` for `x` in the carrier.
    colon_elem: Vec<Vec<u32>>,
    /// `mul[i][h]` = index of `N_i·h` (computed in `M`, so `+ V`).
    mul: Vec<Vec<u32>>,
    /// `colon_ideal[i][h]` = index of `(N_i : h) = {m ∈ M : m·h ⊆ N_i}`.
    colon_ideal: Vec<Vec<u32>>,
}

impl LatticeContext {
    pub fn new(module: &FiniteModule) -> Self {
        let ring = module.ring().clone();
        let ambient = module.ambient().clone();
        let subs: Vec<ElemSet> = module.submodules().into_iter().map(|s| s.set().clone()).collect();
        let index: HashMap<ElemSet, usize> = subs.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let n = subs.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for i in 0..n {
            for j in 0..n {
                if subs[i].is_subset(&subs[j]) {
                    up[i].insert(j);
                    down[j].insert(i);
                }
            }
        }
        let gens = subs.iter().map(|s| module.generators_of(&Submodule::from_set(s.clone()))).collect();
        let carrier: Vec<usize> = module.upper().ones().collect();
        let colon_elem = subs
            .iter()
            .map(|s| {
                let mut row = vec![u32::MAX; ambient.size()];
                for &x in &carrier {
                    row[x] = ring.ideal_index_of_set(&ambient.colon_element(s, x)) as u32;
                }
                row
            })
            .collect();
        let ideals = &ring.ideal_table().sets;
        let lower = module.lower();
        let mul = subs
            .iter()
            .map(|s| {
                ideals
                    .iter()
                    .map(|h| {
                        let prod = ambient.ideal_product(h, s);
                        index[&ambient.sum(&prod, lower)] as u32
                    })
                    .collect()
            })
            .collect();
        let colon_ideal = subs
            .iter()
            .map(|s| ideals.iter().map(|h| index[&ambient.colon_by_ideal(s, h, module.upper())] as u32).collect())
            .collect();
        LatticeContext { module: module.clone(), subs, index, up, down, gens, colon_elem, mul, colon_ideal }
    }

    pub fn module(&self) -> &FiniteModule {
        &self.module
    }

    pub fn ring(&self) -> &FiniteRing {
        self.module.ring()
    }

    pub fn len(&self) -> usize {
        self.subs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subs.is_empty()
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.subs.len() - 1
    }

    pub fn submodule(&self, i: usize) -> Submodule {
        Submodule::from_set(self.subs[i].clone())
    }

    pub(crate) fn set(&self, i: usize) -> &ElemSet {
        &self.subs[i]
    }

    pub fn index_of(&self, n: &Submodule) -> Option<usize> {
        self.index.get(n.set()).copied()
    }

    pub(crate) fn index_of_set(&self, s: &ElemSet) -> usize {
        self.index[s]
    }

    pub fn label(&self, i: usize) -> String {
        self.module.label_submodule(&self.submodule(i))
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub(crate) fn up(&self, i: usize) -> &FixedBitSet {
        &self.up[i]
    }

    pub(crate) fn down(&self, i: usize) -> &FixedBitSet {
        &self.down[i]
    }

    pub(crate) fn gens(&self, i: usize) -> &[usize] {
        &self.gens[i]
    }

    /// Ideal index of `(N_i : x)`.
    pub(crate) fn colon_elem(&self, i: usize, x: usize) -> usize {
        self.colon_elem[i][x] as usize
    }

    /// Index of `N_i · h`.
    pub(crate) fn mul(&self, i: usize, h: usize) -> usize {
        self.mul[i][h] as usize
    }

    /// Index of `(N_i : h)`.
    pub(crate) fn colon_ideal(&self, i: usize, h: usize) -> usize {
        self.colon_ideal[i][h] as usize
    }

    /// Ideal index of `(N_i : N_j) = {a : a·N_j ⊆ N_i}`, the intersection of
    /// `(N_i : g)` over the generators `g` of `N_j`.
    pub(crate) fn colon_sub(&self, i: usize, j: usize) -> usize {
        let ring = self.ring();
        let sets = &ring.ideal_table().sets;
        let mut acc = sets[ring.ideal_count() - 1].clone();
        for &g in &self.gens[j] {
            acc.intersect_with(&sets[self.colon_elem(i, g)]);
        }
        ring.ideal_index_of_set(&acc)
    }

    /// Index of `N_i + N_j`: the least common upper bound, which is the
    /// first one in canonical (cardinality-first) order.
    pub(crate) fn join(&self, i: usize, j: usize) -> usize {
        let mut both = self.up[i].clone();
        both.intersect_with(&self.up[j]);
        both.ones().next().expect("M is an upper bound")
    }

    /// Index of `N_i ∩ N_j`: the last common lower bound.
    pub(crate) fn meet(&self, i: usize, j: usize) -> usize {
        let mut both = self.down[i].clone();
        both.intersect_with(&self.down[j]);
        both.ones().next_back().expect("the zero submodule is a lower bound")
    }

    /// Indices `j` covering `i` (`N_i ⊊ N_j` with nothing strictly between).
    pub(crate) fn covers(&self, i: usize) -> Vec<usize> {
        let mut above = self.up[i].clone();
        above.set(i, false);
        above
            .ones()
            .filter(|&j| {
                let mut between = self.down[j].clone();
                between.intersect_with(&above);
                between.count_ones(..) == 1
            })
            .collect()
    }

    /// Maximal chains `0 = N_1 ⊊ … ⊊ N_r = M`, depth-first in index order,
    /// stopping after `cap` chains.
    pub fn maximal_chains(&self, cap: usize) -> Vec<Vec<usize>> {
        let covers: Vec<Vec<usize>> = (0..self.len()).map(|i| self.covers(i)).collect();
        let mut out = Vec::new();
        let mut path = vec![self.zero()];
        fn walk(covers: &[Vec<usize>], top: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, cap: usize) {
            if out.len() >= cap {
                return;
            }
            let last = *path.last().expect("path starts at zero");
            if last == top {
                out.push(path.clone());
                return;
            }
            for &j in &covers[last] {
                path.push(j);
                walk(covers, top, path, out, cap);
                path.pop();
            }
        }
        walk(&covers, self.top(), &mut path, &mut out, cap);
        out
    }

    /// Every strictly ascending chain of length at least one, when the lattice
    /// has at most `limit` elements; `None` otherwise.
    pub fn all_chains(&self, limit: usize) -> Option<Vec<Vec<usize>>> {
        if self.len() > limit {
            return None;
        }
        let mut out = Vec::new();
        let mut path = Vec::new();
        fn walk(ctx: &LatticeContext, start: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            for j in start..ctx.len() {
                if path.last().is_none_or(|&l| l != j && ctx.leq(l, j)) {
                    path.push(j);
                    out.push(path.clone());
                    walk(ctx, j + 1, path, out);
                    path.pop();
                }
            }
        }
        walk(self, 0, &mut path, &mut out);
        Some(out)
    }

    pub fn with_filter<'a>(&'a self, sigma: &'a GabrielFilter) -> FilteredLattice<'a> {
        FilteredLattice::new(self, sigma)
    }
}

/// A [`LatticeContext`] together with the σ-closure of every submodule.
pub struct FilteredLattice<'a> {
    pub ctx: &'a LatticeContext,
    pub sigma: &'a GabrielFilter,
    /// `closure[i]` = index of `Cl_σ(N_i)`.
    closure: Vec<usize>,
    /// Members of `L(σ)` as ideal indices, largest first.
    members_desc: Vec<usize>,
}

impl<'a> FilteredLattice<'a> {
    fn new(ctx: &'a LatticeContext, sigma: &'a GabrielFilter) -> Self {
        let closure = (0..ctx.len())
            .map(|i| {
                let mut s = ctx.subs[i].clone();
                for x in ctx.module.upper().ones() {
                    if sigma.contains_index(ctx.colon_elem(i, x)) {
                        s.insert(x);
                    }
                }
                ctx.index_of_set(&s)
            })
            .collect();
        let mut members_desc: Vec<usize> = sigma.index_set().ones().collect();
        members_desc.reverse();
        FilteredLattice { ctx, sigma, closure, members_desc }
    }

    pub fn closure(&self, i: usize) -> usize {
        self.closure[i]
    }

    pub(crate) fn members_desc(&self) -> &[usize] {
        &self.members_desc
    }

    pub fn in_filter(&self, h: usize) -> bool {
        self.sigma.contains_index(h)
    }

    /// `N_j / N_i` is σ-torsion.
    pub fn is_torsion(&self, i: usize, j: usize) -> bool {
        self.ctx.leq(j, self.closure[i])
    }

    /// `N_j / N_i` is σ-torsionfree.
    pub fn is_torsionfree(&self, i: usize, j: usize) -> bool {
        self.ctx.meet(j, self.closure[i]) == i
    }

    /// Largest `h` with `N_j·h ⊆ N_i`, if it lies in `L(σ)`.
    pub fn certificate_ideal(&self, i: usize, j: usize) -> Option<usize> {
        let h = self.ctx.colon_sub(i, j);
        self.in_filter(h).then_some(h)
    }

    pub fn ideal(&self, h: usize) -> Ideal {
        self.ctx.ring().ideal_at(h)
    }
}
