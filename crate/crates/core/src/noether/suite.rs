//! Exhaustive theorem suites over `A` and `A²` for one ring and filter.
//!
//! Every biconditional is evaluated with both sides computed separately;
//! a failing theorem records its first counterexample.

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::ring::{FiniteModule, FiniteRing, Ideal, MapKind, RingMap, RingTerm, Submodule};
use crate::torsion::{
    all_gabriel_filters, filter_from_prime, finite_type_basis, induced_filter, jansian_status, meet_decomposition,
    spec_partition, GabrielFilter,
};

use super::certificate::{sigma_principal_status, tfg_certificate, verify_certificate};
use super::lattice::{FilteredLattice, LatticeContext};
use super::maximal::{stability_indexed, sweep_chains, transfer_on_chain, MAX_CHAINS};

/// Outcome of one theorem over all of its instances.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremResult {
    pub name: String,
    pub instances_checked: u64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub ring: String,
    pub filter: String,
    pub theorems: Vec<TheoremResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.theorems.iter().all(|t| t.passed)
    }

    pub fn theorem(&self, name: &str) -> Option<&TheoremResult> {
        self.theorems.iter().find(|t| t.name == name)
    }

    pub fn first_failure(&self) -> Option<&TheoremResult> {
        self.theorems.iter().find(|t| !t.passed)
    }
}

/// Names of the theorems in the order they are reported.
pub const THEOREMS: &[&str] = &[
    "gabriel_axioms",
    "torsion_class",
    "torsionfree_class",
    "torsion_radical_formulas",
    "closure_operator_laws",
    "spec_partition",
    "meet_decomposition",
    "almost_jansian",
    "finite_type",
    "induced_filters",
    "closure_colon_witness",
    "sigma_max_triangle",
    "unique_maximal_lemma",
    "quotient_transfer",
    "stability_proposition",
    "cohen_corollary",
    "closed_maximal_prime",
    "local_property",
    "kaplansky",
    "certificates_verify",
];

/// Counts instances and keeps the first failure.
pub(crate) struct Tally {
    name: &'static str,
    count: u64,
    failure: Option<String>,
}

impl Tally {
    pub(crate) fn new(name: &'static str) -> Self {
        Tally { name, count: 0, failure: None }
    }

    pub(crate) fn check(&mut self, ok: bool, why: impl FnOnce() -> String) {
        self.count += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(why());
        }
    }

    pub(crate) fn add(&mut self, n: u64) {
        self.count += n;
    }

    pub(crate) fn finish(self) -> TheoremResult {
        TheoremResult {
            name: self.name.to_string(),
            instances_checked: self.count,
            passed: self.failure.is_none(),
            counterexample: self.failure,
        }
    }
}

/// The filter-independent tables of a ring: the lattices of `A` and `A²`.
pub struct RingContext {
    pub ring: FiniteRing,
    pub regular: LatticeContext,
    pub square: LatticeContext,
}

impl RingContext {
    pub fn new(ring: &FiniteRing) -> Result<Self> {
        let square = FiniteModule::free(ring, 2)?;
        Ok(RingContext {
            ring: ring.clone(),
            regular: LatticeContext::new(&FiniteModule::regular(ring)),
            square: LatticeContext::new(&square),
        })
    }

    fn contexts(&self) -> [(&'static str, &LatticeContext); 2] {
        [("A", &self.regular), ("A²", &self.square)]
    }
}

/// Runs every theorem for `(ring, σ)` over `A` and `A²`.
pub fn theorem_suite(ring: &FiniteRing, sigma: &GabrielFilter) -> Result<SuiteReport> {
    let ctx = RingContext::new(ring)?;
    Ok(run_suite(&ctx, sigma))
}

/// Runs [`theorem_suite`] for every Gabriel filter of `ring`.
pub fn ring_suite(ring: &FiniteRing) -> Result<Vec<SuiteReport>> {
    let ctx = RingContext::new(ring)?;
    Ok(all_gabriel_filters(ring).iter().map(|s| run_suite(&ctx, s)).collect())
}

/// [`ring_suite`] over a list of rings, in parallel; the output order
/// follows the input order.
pub fn sweep_suite(terms: &[RingTerm]) -> Result<Vec<SuiteReport>> {
    let per_ring: Vec<Result<Vec<SuiteReport>>> = terms
        .par_iter()
        .map(|t| FiniteRing::build(t).and_then(|r| ring_suite(&r)))
        .collect();
    let mut out = Vec::new();
    for r in per_ring {
        out.extend(r?);
    }
    Ok(out)
}

pub fn run_suite(ctx: &RingContext, sigma: &GabrielFilter) -> SuiteReport {
    let fls: Vec<(&'static str, FilteredLattice<'_>)> =
        ctx.contexts().into_iter().map(|(name, c)| (name, c.with_filter(sigma))).collect();
    let theorems = vec![
        gabriel_axioms(sigma),
        torsion_class(ctx, sigma, &fls),
        torsionfree_class(ctx, sigma, &fls),
        torsion_radical_formulas(&fls),
        closure_operator_laws(&fls),
        partition_theorem(sigma),
        meet_theorem(sigma),
        almost_jansian(sigma),
        finite_type(sigma),
        induced_filters(sigma),
        closure_colon(&fls),
        sigma_max_triangle(&fls),
        unique_maximal(&fls),
        quotient_transfer(&fls),
        stability_proposition(ctx, sigma, &fls),
        cohen_corollary(sigma, &fls),
        closed_maximal_prime(&fls),
        local_property(sigma, &fls),
        kaplansky(sigma),
        certificates_verify(sigma, &fls),
    ];
    debug_assert_eq!(theorems.len(), THEOREMS.len());
    SuiteReport { ring: ctx.ring.name(), filter: sigma.to_string(), theorems }
}

fn gabriel_axioms(sigma: &GabrielFilter) -> TheoremResult {
    let mut t = Tally::new("gabriel_axioms");
    let report = sigma.check();
    t.check(report.is_empty(), || format!("{}", report.violations[0]));
    let members = sigma.members();
    for a in &members {
        for b in &members {
            let p = a.product(b).expect("same ring");
            t.check(sigma.contains(&p), || format!("{a}·{b} = {p} ∉ L"));
        }
    }
    t.finish()
}

/// `{U ⊇ V : U/V torsion}` and `{U ⊇ V : U/V torsionfree}` per `V`.
fn class_rows(fl: &FilteredLattice<'_>) -> (Vec<FixedBitSet>, Vec<FixedBitSet>) {
    let ctx = fl.ctx;
    let n = ctx.len();
    let mut tors = Vec::with_capacity(n);
    let mut tf = Vec::with_capacity(n);
    for v in 0..n {
        let mut t = ctx.up(v).clone();
        t.intersect_with(ctx.down(fl.closure(v)));
        tors.push(t);
        let mut f = FixedBitSet::with_capacity(n);
        for u in ctx.up(v).ones() {
            if fl.is_torsionfree(v, u) {
                f.insert(u);
            }
        }
        tf.push(f);
    }
    (tors, tf)
}

fn interval(ctx: &LatticeContext, v: usize, u: usize) -> FixedBitSet {
    let mut s = ctx.up(v).clone();
    s.intersect_with(ctx.down(u));
    s
}

/// Index in the `A²` lattice of `(X ⊕ Y)` for ideals given by `A` lattice indices.
fn pair_index(ctx: &RingContext, x: usize, y: usize) -> usize {
    let size = ctx.ring.size();
    let mut s = FixedBitSet::with_capacity(size * size);
    for b in ctx.regular.set(y).ones() {
        for a in ctx.regular.set(x).ones() {
            s.insert(a + size * b);
        }
    }
    ctx.square.index_of_set(&s)
}

fn subquotients(ctx: &LatticeContext) -> Vec<(usize, usize)> {
    (0..ctx.len()).flat_map(|v| ctx.up(v).ones().map(move |u| (v, u))).collect()
}

fn torsion_class(ctx: &RingContext, sigma: &GabrielFilter, fls: &[(&str, FilteredLattice<'_>)]) -> TheoremResult {
    let mut t = Tally::new("torsion_class");
    for (name, fl) in fls {
        let c = fl.ctx;
        let (tors, _) = class_rows(fl);
        for v in 0..c.len() {
            for u in tors[v].ones() {
                // submodules N/V ⊆ U/V
                let below = interval(c, v, u);
                t.add(below.count_ones(..) as u64);
                if let Some(w) = below.difference(&tors[v]).next() {
                    t.check(false, || format!("{name}: {}/{} torsion but submodule {}/{} is not", c.label(u), c.label(v), c.label(w), c.label(v)));
                }
                // quotients U/W for V ⊆ W ⊆ U
                for w in below.ones() {
                    t.check(tors[w].contains(u), || {
                        format!("{name}: {}/{} torsion but quotient {}/{} is not", c.label(u), c.label(v), c.label(u), c.label(w))
                    });
                }
            }
            // extensions: W/V and U/W torsion imply U/V torsion
            for w in tors[v].ones() {
                t.add(tors[w].count_ones(..) as u64);
                if let Some(u) = tors[w].difference(&tors[v]).next() {
                    t.check(false, || format!("{name}: extension {}/{}/{} not torsion", c.label(u), c.label(w), c.label(v)));
                }
            }
        }
    }
    // finite direct sums: (U1/V1) ⊕ (U2/V2) inside A²
    let reg = &fls[0].1;
    let sq = &fls[1].1;
    let pairs = subquotients(&ctx.regular);
    for &(v1, u1) in &pairs {
        for &(v2, u2) in &pairs {
            let (v, u) = (pair_index(ctx, v1, v2), pair_index(ctx, u1, u2));
            let lhs = reg.is_torsion(v1, u1) && reg.is_torsion(v2, u2);
            t.check(lhs == sq.is_torsion(v, u), || {
                format!("direct sum of {}/{} and {}/{} under {sigma}", ctx.regular.label(u1), ctx.regular.label(v1), ctx.regular.label(u2), ctx.regular.label(v2))
            });
        }
    }
    t.finish()
}

fn torsionfree_class(ctx: &RingContext, sigma: &GabrielFilter, fls: &[(&str, FilteredLattice<'_>)]) -> TheoremResult {
    let mut t = Tally::new("torsionfree_class");
    for (name, fl) in fls {
        let c = fl.ctx;
        let (_, tf) = class_rows(fl);
        for v in 0..c.len() {
            for u in tf[v].ones() {
                let below = interval(c, v, u);
                t.add(below.count_ones(..) as u64);
                if let Some(w) = below.difference(&tf[v]).next() {
                    t.check(false, || format!("{name}: {}/{} torsionfree but submodule {}/{} is not", c.label(u), c.label(v), c.label(w), c.label(v)));
                }
                // σM = 0 for torsionfree M
                t.check(fl.ctx.meet(u, fl.closure(v)) == v, || format!("{name}: σ({}/{}) ≠ 0", c.label(u), c.label(v)));
            }
            for w in tf[v].ones() {
                t.add(tf[w].count_ones(..) as u64);
                if let Some(u) = tf[w].difference(&tf[v]).next() {
                    t.check(false, || format!("{name}: extension {}/{}/{} not torsionfree", c.label(u), c.label(w), c.label(v)));
                }
            }
        }
    }
    let reg = &fls[0].1;
    let sq = &fls[1].1;
    let pairs = subquotients(&ctx.regular);
    for &(v1, u1) in &pairs {
        for &(v2, u2) in &pairs {
            let (v, u) = (pair_index(ctx, v1, v2), pair_index(ctx, u1, u2));
            let lhs = reg.is_torsionfree(v1, u1) && reg.is_torsionfree(v2, u2);
            t.check(lhs == sq.is_torsionfree(v, u), || {
                format!("product of {}/{} and {}/{} under {sigma}", ctx.regular.label(u1), ctx.regular.label(v1), ctx.regular.label(u2), ctx.regular.label(v2))
            });
        }
    }
    t.finish()
}

/// `σ(U/V)` as the sum of the submodules `W/V` whose generators all have
/// annihilators in `L(σ)`.
fn radical_by_sum(fl: &FilteredLattice<'_>, v: usize, u: usize) -> usize {
    let ctx = fl.ctx;
    let mut acc = v;
    for w in interval(ctx, v, u).ones() {
        if ctx.gens(w).iter().all(|&g| fl.in_filter(ctx.colon_elem(v, g))) {
            acc = ctx.join(acc, w);
        }
    }
    acc
}

fn torsion_radical_formulas(fls: &[(&str, FilteredLattice<'_>)]) -> TheoremResult {
    let mut t = Tally::new("torsion_radical_formulas");
    for (name, fl) in fls {
        let c = fl.ctx;
        for (v, u) in subquotients(c) {
            let by_elements = c.meet(u, fl.closure(v));
            let by_sum = radical_by_sum(fl, v, u);
            t.check(by_elements == by_sum, || {
                format!("{name}: σ({}/{}) is {} by elements but {} by sums", c.label(u), c.label(v), c.label(by_elements), c.label(by_sum))
            });
            // M/σM is torsionfree
            t.check(fl.is_torsionfree(by_elements, u), || format!("{name}: M/σM not torsionfree for {}/{}", c.label(u), c.label(v)));
        }
    }
    t.finish()
}

fn closure_operator_laws(fls: &[(&str, FilteredLattice<'_>)]) -> TheoremResult {
    let mut t = Tally::new("closure_operator_laws");
    for (name, fl) in fls {
        let c = fl.ctx;
        let mut closed = FixedBitSet::with_capacity(c.len());
        for n in 0..c.len() {
            let cl = fl.closure(n);
            t.check(c.leq(n, cl), || format!("{name}: N ⊄ Cl(N) for {}", c.label(n)));
            t.check(fl.closure(cl) == cl, || format!("{name}: Cl not idempotent at {}", c.label(n)));
            t.check(fl.is_torsion(n, cl) && fl.is_torsionfree(cl, c.top()), || {
                format!("{name}: Cl({}) / N not torsion or M / Cl(N) not torsionfree", c.label(n))
            });
            for m in c.up(n).ones() {
                t.check(c.leq(cl, fl.closure(m)), || format!("{name}: Cl not monotone on {} ⊆ {}", c.label(n), c.label(m)));
            }
            if cl == n {
                closed.insert(n);
            }
        }
        let closed_list: Vec<usize> = closed.ones().collect();
        for (i, &a) in closed_list.iter().enumerate() {
            for &b in &closed_list[i..] {
                let m = c.meet(a, b);
                t.check(closed.contains(m), || format!("{name}: {} ∩ {} not closed", c.label(a), c.label(b)));
                let j = fl.closure(c.join(a, b));
                let mut bounds = c.up(a).clone();
                bounds.intersect_with(c.up(b));
                bounds.intersect_with(&closed);
                t.check(bounds.contains(j) && bounds.is_subset(c.up(j)), || {
                    format!("{name}: Cl({} + {}) is not the least closed upper bound", c.label(a), c.label(b))
                });
            }
        }
    }
    t.finish()
}

fn partition_theorem(sigma: &GabrielFilter) -> TheoremResult {
    let mut t = Tally::new("spec_partition");
    let part = spec_partition(sigma);
    let verdict = part.verify(sigma);
    t.check(verdict.is_ok(), || verdict.clone().unwrap_err());
    t.add(sigma.ring().spec().len() as u64);
    t.finish()
}

fn meet_theorem(sigma: &GabrielFilter) -> TheoremResult {
    let mut t = Tally::new("meet_decomposition");
    let met = meet_decomposition(sigma);
    t.check(&met == sigma, || format!("∧ σ_(A∖p) over K is {met}, not {sigma}"));
    t.finish()
}

fn almost_jansian(sigma: &GabrielFilter) -> TheoremResult {
    let mut t = Tally::new("almost_jansian");
    let s = jansian_status(sigma);
    t.add(s.stable_powers.len() as u64);
    t.check(s.is_almost_jansian, || format!("a^∞ ∉ L for a = {:?}", s.almost_jansian_failure));
    t.check(s.is_jansian, || format!("least member {} is not an idempotent basis", sigma.least()));
    t.finish()
}

fn finite_type(sigma: &GabrielFilter) -> TheoremResult {
    let mut t = Tally::new("finite_type");
    let basis = finite_type_basis(sigma);
    t.check(!basis.is_empty(), || "empty basis".into());
    for gens in &basis {
        let g = Ideal::generated(sigma.ring(), gens).expect("generators in range");
        t.check(sigma.contains(&g), || format!("basis ideal {g} ∉ L"));
        t.check(sigma.members().iter().all(|a| !a.is_subset(&g) || a == &g || !sigma.contains(a)), || {
            format!("basis ideal {g} is not minimal")
        });
    }
    t.finish()
}

fn totally_noetherian_ring(sigma: &GabrielFilter) -> bool {
    let m = FiniteModule::regular(sigma.ring());
    sigma.ring().ideals().iter().all(|i| {
        let n = Submodule::from_set(i.set().clone());
        tfg_certificate(&m, &n, sigma).is_ok_and(|c| verify_certificate(&m, &n, sigma, &c).is_ok_and(|v| v.is_valid()))
    })
}

fn induced_filters(sigma: &GabrielFilter) -> TheoremResult {
    let mut t = Tally::new("induced_filters");
    let ring = sigma.ring();
    let mut maps: Vec<RingMap> = ring.local_decomposition().into_iter().map(|f| f.projection).collect();
    maps.extend(ring.ideals().iter().map(RingMap::quotient));
    for f in &maps {
        match induced_filter(f, sigma) {
            Ok(induced) => {
                let kind = if f.kind() == MapKind::Projection { "localization" } else { "quotient" };
                t.check(totally_noetherian_ring(&induced), || format!("{} is not totally f(σ)-noetherian via {kind}", f.target()));
            }
            Err(e) => t.check(false, || format!("map to {}: {e}", f.target())),
        }
    }
    t.finish()
}

fn closure_colon(fls: &[(&str, FilteredLattice<'_>)]) -> TheoremResult {
    let mut t = Tally::new("closure_colon_witness");
    for (name, fl) in fls {
        let c = fl.ctx;
        for h_sub in 0..c.len() {
            let target = fl.closure(h_sub);
            let found = fl.members_desc().iter().any(|&h| c.colon_ideal(h_sub, h) == target);
            t.check(found, || format!("{name}: no h with (H:h) = Cl(H) for H = {}", c.label(h_sub)));
        }
    }
    t.finish()
}

/// Families swept by the σ-MAX triangle: singletons, pairs, capped maximal
/// chains and the whole lattice.
fn triangle_families(ctx: &LatticeContext) -> Vec<Vec<usize>> {
    let n = ctx.len();
    let mut out: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    if n <= 40 {
        for i in 0..n {
            for j in i + 1..n {
                out.push(vec![i, j]);
            }
        }
    } else {
        for i in 0..n {
            for j in ctx.covers(i) {
                out.push(vec![i, j]);
            }
        }
    }
    out.extend(ctx.maximal_chains(MAX_CHAINS));
    out.push((0..n).collect());
    out
}

fn sigma_maximal_indexed(fl: &FilteredLattice<'_>, family: &[usize]) -> Vec<usize> {
    let ctx = fl.ctx;
    let ring = ctx.ring();
    let sets = &ring.ideal_table().sets;
    family
        .iter()
        .copied()
        .filter(|&n| {
            let mut acc = sets[ring.ideal_count() - 1].clone();
            for &b in family.iter().filter(|&&b| ctx.leq(n, b)) {
                acc.intersect_with(&sets[ctx.colon_sub(n, b)]);
            }
            fl.in_filter(ring.ideal_index_of_set(&acc))
        })
        .collect()
}

fn upper_closure_indexed(fl: &FilteredLattice<'_>, family: &[usize]) -> FixedBitSet {
    let ctx = fl.ctx;
    let mut out = FixedBitSet::with_capacity(ctx.len());
    for &n in family {
        for &h in fl.members_desc() {
            out.union_with(ctx.down(ctx.colon_ideal(n, h)));
        }
    }
    out
}

fn maximal_in(ctx: &LatticeContext, set: &FixedBitSet) -> Vec<usize> {
    set.ones()
        .filter(|&i| {
            let mut above = ctx.up(i).clone();
            above.intersect_with(set);
            above.count_ones(..) == 1
        })
        .collect()
}

fn sigma_max_triangle(fls: &[(&str, FilteredLattice<'_>)]) -> TheoremResult {
    let mut t = Tally::new("sigma_max_triangle");
    for (name, fl) in fls {
        let c = fl.ctx;
        // (a) every chain is totally σ-stable
        let chains = sweep_chains(c);
        let side_a = chains.iter().all(|ch| stability_indexed(fl, ch).is_some());
        t.add(chains.len() as u64);
        let families = triangle_families(c);
        let mut side_b = true;
        let mut side_c = true;
        for fam in &families {
            // (c) every family has σ-maximal elements
            let sigma_max = sigma_maximal_indexed(fl, fam);
            side_c &= !sigma_max.is_empty();
            // (b) the σ-upper closure is σ-upper closed and has maximal elements
            let closure = upper_closure_indexed(fl, fam);
            let upper_closed = closure
                .ones()
                .all(|hs| fl.members_desc().iter().all(|&h| c.down(c.colon_ideal(hs, h)).is_subset(&closure)));
            t.check(upper_closed, || format!("{name}: upper closure of {fam:?} is not σ-upper closed"));
            let maximal = maximal_in(c, &closure);
            side_b &= !maximal.is_empty();
            // a maximal element of the closure lies over a σ-maximal member
            for &h in &maximal {
                t.check(sigma_max.iter().any(|&n| c.leq(n, h)), || {
                    format!("{name}: maximal {} of the closure of {fam:?} is over no σ-maximal member", c.label(h))
                });
            }
        }
        t.check(side_a && side_b && side_c, || {
            format!("{name}: chain stability {side_a}, upper-closed maximality {side_b}, σ-maximal existence {side_c}")
        });
    }
    t.finish()
}

fn unique_maximal(fls: &[(&str, FilteredLattice<'_>)]) -> TheoremResult {
    let mut t = Tally::new("unique_maximal_lemma");
    for (name, fl) in fls {
        let c = fl.ctx;
        for n in 0..c.len() {
            let mut fam = FixedBitSet::with_capacity(c.len());
            for &h in fl.members_desc() {
                fam.union_with(&interval(c, n, c.colon_ideal(n, h)));
            }
            let unique = maximal_in(c, &fam).len() == 1;
            let member = fam.contains(fl.closure(n));
            t.check(unique == member, || format!("{name}: N = {}: unique {unique}, Cl(N) member {member}", c.label(n)));
        }
    }
    t.finish()
}

fn quotient_transfer(fls: &[(&str, FilteredLattice<'_>)]) -> TheoremResult {
    let mut t = Tally::new("quotient_transfer");
    for (name, fl) in fls {
        let c = fl.ctx;
        let chains = sweep_chains(c);
        for tt in 0..c.len() {
            let ann = c.colon_sub(c.zero(), tt);
            if !fl.in_filter(ann) {
                continue;
            }
            for ch in &chains {
                let r = transfer_on_chain(fl, tt, ann, ch);
                t.check(r.is_ok(), || format!("{name}: T = {}: {}", c.label(tt), r.clone().unwrap_err()));
            }
        }
    }
    t.finish()
}

/// `tfg[v]` = `{W ⊇ V : W/V is totally σ-finitely generated}`, by search
/// for a submodule `H` in `[V, W]` with `(H : W) ∈ L(σ)`.
fn tfg_rows(fl: &FilteredLattice<'_>) -> Vec<FixedBitSet> {
    let c = fl.ctx;
    (0..c.len())
        .map(|v| {
            let mut row = FixedBitSet::with_capacity(c.len());
            for w in c.up(v).ones() {
                if interval(c, v, w).ones().any(|h| fl.in_filter(c.colon_sub(h, w))) {
                    row.insert(w);
                }
            }
            row
        })
        .collect()
}

/// `U/V` is totally σ-noetherian: every `W/V ⊆ U/V` is totally σ-fg.
fn tn(c: &LatticeContext, tfg: &[FixedBitSet], v: usize, u: usize) -> bool {
    interval(c, v, u).is_subset(&tfg[v])
}

fn stability_proposition(ctx: &RingContext, sigma: &GabrielFilter, fls: &[(&str, FilteredLattice<'_>)]) -> TheoremResult {
    let mut t = Tally::new("stability_proposition");
    let rows: Vec<Vec<FixedBitSet>> = fls.iter().map(|(_, fl)| tfg_rows(fl)).collect();
    for ((name, fl), tfg) in fls.iter().zip(&rows) {
        let c = fl.ctx;
        for (v, u) in subquotients(c) {
            let whole = tn(c, tfg, v, u);
            for n in interval(c, v, u).ones() {
                let parts = tn(c, tfg, v, n) && tn(c, tfg, n, u);
                t.check(whole == parts, || format!("{name}: {}/{} vs N = {}", c.label(u), c.label(v), c.label(n)));
            }
            // homomorphic images of totally σ-fg modules
            if tfg[v].contains(u) {
                for w in interval(c, v, u).ones() {
                    t.check(tfg[w].contains(u), || format!("{name}: image {}/{} not totally σ-fg", c.label(u), c.label(w)));
                }
            }
        }
    }
    let pairs = subquotients(&ctx.regular);
    for &(v1, u1) in &pairs {
        for &(v2, u2) in &pairs {
            let both = tn(&ctx.regular, &rows[0], v1, u1) && tn(&ctx.regular, &rows[0], v2, u2);
            let sum = tn(&ctx.square, &rows[1], pair_index(ctx, v1, v2), pair_index(ctx, u1, u2));
            t.check(!both || sum, || format!("direct sum of A-subquotients under {sigma} not totally σ-noetherian"));
        }
    }
    t.finish()
}

fn cohen_corollary(sigma: &GabrielFilter, fls: &[(&str, FilteredLattice<'_>)]) -> TheoremResult {
    let mut t = Tally::new("cohen_corollary");
    let part = spec_partition(sigma);
    for (name, fl) in fls {
        let c = fl.ctx;
        let tfg = tfg_rows(fl);
        let lhs = tn(c, &tfg, c.zero(), c.top());
        // M·p for p ∈ K, as lattice indices
        let rhs = part.k.iter().all(|p| {
            let pi = c.ring().ideal_index(p).expect("prime is an ideal");
            tfg[c.zero()].contains(c.mul(c.top(), pi))
        });
        t.check(lhs == rhs, || format!("{name}: totally σ-noetherian {lhs}, every M·p totally σ-fg {rhs}"));
        // no submodule is maximal among non totally σ-fg ones
        let non_tfg = (0..c.len()).filter(|&w| !tfg[c.zero()].contains(w)).count();
        t.check(non_tfg == 0, || format!("{name}: {non_tfg} submodules are not totally σ-fg"));
    }
    t.finish()
}

fn is_prime_submodule(c: &LatticeContext, n: usize) -> bool {
    if n == c.top() {
        return false;
    }
    let ring = c.ring();
    let ann = &ring.ideal_table().sets[c.colon_sub(n, c.top())];
    let amb = c.module().ambient();
    c.set(c.top()).ones().filter(|&x| !c.set(n).contains(x)).all(|x| {
        ring.elements().all(|a| !c.set(n).contains(amb.scale(a, x)) || ann.contains(a))
    })
}

fn closed_maximal_prime(fls: &[(&str, FilteredLattice<'_>)]) -> TheoremResult {
    let mut t = Tally::new("closed_maximal_prime");
    for (name, fl) in fls {
        let c = fl.ctx;
        let closed: Vec<usize> = (0..c.len()).filter(|&n| fl.closure(n) == n && n != c.top()).collect();
        for &l in &closed {
            let mut gamma = FixedBitSet::with_capacity(c.len());
            for &n in closed.iter().filter(|&&n| c.leq(l, n)) {
                gamma.insert(n);
            }
            for n in maximal_in(c, &gamma) {
                t.check(is_prime_submodule(c, n), || format!("{name}: {} maximal over {} but not prime", c.label(n), c.label(l)));
            }
        }
    }
    t.finish()
}

fn local_property(sigma: &GabrielFilter, fls: &[(&str, FilteredLattice<'_>)]) -> TheoremResult {
    let mut t = Tally::new("local_property");
    let part = spec_partition(sigma);
    let locals: Vec<GabrielFilter> = part.c.iter().map(|p| filter_from_prime(p).expect("prime")).collect();
    for (name, fl) in fls {
        let c = fl.ctx;
        let lhs = tn(c, &tfg_rows(fl), c.zero(), c.top());
        let rhs = locals.iter().all(|tau| {
            let other = c.with_filter(tau);
            tn(c, &tfg_rows(&other), c.zero(), c.top())
        });
        t.check(lhs == rhs, || format!("{name}: totally σ-noetherian {lhs}, locally {rhs}"));
        // σ ≤ σ_(A∖p) for p ∈ C
        for tau in &locals {
            t.check(sigma.is_coarser_than(tau), || format!("{sigma} is not below {tau}"));
        }
    }
    t.finish()
}

fn kaplansky(sigma: &GabrielFilter) -> TheoremResult {
    let mut t = Tally::new("kaplansky");
    let ring = sigma.ring();
    let statuses: Vec<(Ideal, bool, bool)> = ring
        .ideals()
        .into_iter()
        .map(|i| {
            let s = sigma_principal_status(&i, sigma).expect("same ring");
            (i, s.is_sigma_principal(), s.is_totally_principal())
        })
        .collect();
    t.add(statuses.len() as u64);
    let totally_pir = statuses.iter().all(|(_, _, tp)| *tp);
    let part = spec_partition(sigma);
    let k_principal = part
        .k
        .iter()
        .all(|p| sigma_principal_status(p, sigma).expect("same ring").is_totally_principal());
    t.check(totally_pir == k_principal, || {
        format!("totally σ-PIR {totally_pir}, every p ∈ K totally σ-principal {k_principal}")
    });
    let sigma_pir = statuses.iter().all(|(_, sp, _)| *sp);
    let noetherian = totally_noetherian_ring(sigma);
    t.check(totally_pir == (sigma_pir && noetherian), || {
        format!("totally σ-PIR {totally_pir}, σ-PIR {sigma_pir}, totally σ-noetherian {noetherian}")
    });
    t.finish()
}

fn certificates_verify(sigma: &GabrielFilter, fls: &[(&str, FilteredLattice<'_>)]) -> TheoremResult {
    let mut t = Tally::new("certificates_verify");
    for (name, fl) in fls {
        let c = fl.ctx;
        let m = c.module();
        for i in 0..c.len() {
            let n = c.submodule(i);
            match tfg_certificate(m, &n, sigma) {
                Ok(cert) => {
                    let v = verify_certificate(m, &n, sigma, &cert).expect("inputs were checked");
                    t.check(v.is_valid(), || format!("{name}: certificate for {} rejected: {v}", c.label(i)));
                }
                Err(e) => t.check(false, || format!("{name}: {}: {e}", c.label(i))),
            }
        }
    }
    t.finish()
}
