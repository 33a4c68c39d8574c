//! σ-maximal elements, σ-upper closures, chain stability and the transfer
//! of stability data along `M → M/T` for totally torsion `T`.

use crate::error::{Error, Result};
use crate::ring::{FiniteModule, FreeModule, Ideal, Submodule};
use crate::torsion::{closure, is_totally_torsion, GabrielFilter};

use super::lattice::{FilteredLattice, LatticeContext};

/// Chains longer than this many lattice elements are not enumerated
/// exhaustively; pairs and capped maximal chains are used instead.
pub const EXHAUSTIVE_CHAIN_LIMIT: usize = 16;
/// Cap on the number of maximal chains drawn from a large lattice.
pub const MAX_CHAINS: usize = 64;

fn check_inputs(m: &FiniteModule, sigma: &GabrielFilter, subs: &[Submodule]) -> Result<()> {
    if m.ring() != sigma.ring() {
        return Err(Error::RingMismatch);
    }
    for s in subs {
        m.check_submodule(s)?;
    }
    Ok(())
}

/// Members `N` of `family` for which one `h ∈ L(σ)` satisfies `H·h ⊆ N`
/// for every `H ∈ family` containing `N`, each with the largest such `h`.
pub fn sigma_maximal(m: &FiniteModule, family: &[Submodule], sigma: &GabrielFilter) -> Result<Vec<(Submodule, Ideal)>> {
    check_inputs(m, sigma, family)?;
    if family.is_empty() {
        return Err(Error::PreconditionFailed("family is empty".into()));
    }
    let mut out = Vec::new();
    for n in family {
        let mut h = Ideal::unit(m.ring());
        for bigger in family.iter().filter(|b| n.is_subset(b)) {
            h = h.intersect(&m.colon(n, bigger))?;
        }
        if sigma.contains(&h) {
            out.push((n.clone(), h));
        }
    }
    Ok(out)
}

/// `{H ⊆ M : H·h ⊆ N for some N ∈ family and h ∈ L(σ)}`, in canonical order.
pub fn upper_closure(m: &FiniteModule, family: &[Submodule], sigma: &GabrielFilter) -> Result<Vec<Submodule>> {
    check_inputs(m, sigma, family)?;
    let members = sigma.members();
    Ok(m.submodules()
        .into_iter()
        .filter(|h_sub| family.iter().any(|n| members.iter().any(|h| m.mul_ideal(h_sub, h).is_subset(n))))
        .collect())
}

pub fn is_upper_closed(m: &FiniteModule, family: &[Submodule], sigma: &GabrielFilter) -> Result<bool> {
    let closure = upper_closure(m, family, sigma)?;
    Ok(closure.iter().all(|h| family.contains(h)))
}

/// The two sides of the unique-maximal lemma for `{H : N ⊆ H ⊆ (N : h), h ∈ L(σ)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniqueMaximal {
    pub maximal: Vec<Submodule>,
    pub closure: Submodule,
    pub closure_in_family: bool,
}

impl UniqueMaximal {
    pub fn is_unique(&self) -> bool {
        self.maximal.len() == 1
    }
}

/// Evaluates both sides of "the upper closure of `{N}` has exactly one
/// maximal element iff it contains `Cl_σ(N)`"; a disagreement is a
/// [`Error::TheoremViolation`].
pub fn unique_maximal_check(m: &FiniteModule, n: &Submodule, sigma: &GabrielFilter) -> Result<UniqueMaximal> {
    check_inputs(m, sigma, std::slice::from_ref(n))?;
    let members = sigma.members();
    let family: Vec<Submodule> = m
        .submodules()
        .into_iter()
        .filter(|h_sub| n.is_subset(h_sub) && members.iter().any(|h| h_sub.is_subset(&m.colon_by_ideal(n, h))))
        .collect();
    let maximal: Vec<Submodule> = family
        .iter()
        .filter(|a| !family.iter().any(|b| b != *a && a.is_subset(b)))
        .cloned()
        .collect();
    let cl = closure(m, n, sigma)?;
    let result = UniqueMaximal { closure_in_family: family.contains(&cl), closure: cl, maximal };
    if result.is_unique() != result.closure_in_family {
        let labels: Vec<String> = result.maximal.iter().map(|x| m.label_submodule(x)).collect();
        return Err(Error::TheoremViolation(format!(
            "N = {}: maximal elements [{}], Cl(N) = {} in family: {}",
            m.label_submodule(n),
            labels.join(", "),
            m.label_submodule(&result.closure),
            result.closure_in_family
        )));
    }
    Ok(result)
}

/// Stability data of a finite ascending chain: `N_s·h ⊆ N_m` for all `s ≥ m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStability {
    /// One-based index `m`.
    pub stable_index: usize,
    pub h: Ideal,
}

/// The smallest `m`, then the largest `h`, with `N_s·h ⊆ N_m` for all `s ≥ m`.
pub fn chain_stability(m: &FiniteModule, chain: &[Submodule], sigma: &GabrielFilter) -> Result<ChainStability> {
    check_inputs(m, sigma, chain)?;
    if chain.is_empty() {
        return Err(Error::PreconditionFailed("chain is empty".into()));
    }
    for (i, pair) in chain.windows(2).enumerate() {
        if !pair[0].is_subset(&pair[1]) {
            return Err(Error::NotAscending { position: i + 2 });
        }
    }
    for (idx, n_m) in chain.iter().enumerate() {
        let mut h = Ideal::unit(m.ring());
        for n_s in &chain[idx..] {
            h = h.intersect(&m.colon(n_m, n_s))?;
        }
        if sigma.contains(&h) {
            return Ok(ChainStability { stable_index: idx + 1, h });
        }
    }
    Err(Error::TheoremViolation("the last element of a chain is always stable".into()))
}

/// Table version of [`chain_stability`]: `(m, h)` with a zero-based `m`.
pub(crate) fn stability_indexed(fl: &FilteredLattice<'_>, chain: &[usize]) -> Option<(usize, usize)> {
    let ctx = fl.ctx;
    let ring = ctx.ring();
    let sets = &ring.ideal_table().sets;
    for (idx, &n_m) in chain.iter().enumerate() {
        let mut acc = sets[ring.ideal_count() - 1].clone();
        for &n_s in &chain[idx..] {
            acc.intersect_with(&sets[ctx.colon_sub(n_m, n_s)]);
        }
        let h = ring.ideal_index_of_set(&acc);
        if fl.in_filter(h) {
            return Some((idx, h));
        }
    }
    None
}

pub(crate) fn ideal_product_index(ctx: &LatticeContext, a: usize, b: usize) -> usize {
    let ring = ctx.ring();
    let sets = &ring.ideal_table().sets;
    let free = FreeModule::new_unchecked(ring.clone(), 1);
    ring.ideal_index_of_set(&free.ideal_product(&sets[a], &sets[b]))
}

/// Chains used by the transfer and stability sweeps: all of them on small
/// lattices, otherwise comparable pairs plus capped maximal chains.
pub(crate) fn sweep_chains(ctx: &LatticeContext) -> Vec<Vec<usize>> {
    if let Some(all) = ctx.all_chains(EXHAUSTIVE_CHAIN_LIMIT) {
        return all;
    }
    let mut out = Vec::new();
    for i in 0..ctx.len() {
        for j in ctx.up(i).ones() {
            out.push(if i == j { vec![i] } else { vec![i, j] });
        }
    }
    out.extend(ctx.maximal_chains(MAX_CHAINS));
    out
}

/// Transfers stability data for one chain between `M` and `M/T`, where
/// `T` is the submodule with index `t` and `h_t = Ann(T) ∈ L(σ)`.
pub(crate) fn transfer_on_chain(fl: &FilteredLattice<'_>, t: usize, h_t: usize, chain: &[usize]) -> Result<(), String> {
    let ctx = fl.ctx;
    let pushed: Vec<usize> = chain.iter().map(|&n| ctx.join(n, t)).collect();
    let (m, h) = stability_indexed(fl, &pushed).ok_or("pushed chain has no stability data")?;
    // M -> M/T: (N'_s·h + T)/T ⊆ N'_m/T
    for &p_s in &pushed[m..] {
        if !ctx.leq(ctx.join(ctx.mul(p_s, h), t), pushed[m]) {
            return Err(format!("(N_s h + T)/T ⊄ N_m/T for N_s = {}", ctx.label(p_s)));
        }
    }
    // M/T -> M: N_s·h·h_t ⊆ N_m
    let hh = ideal_product_index(ctx, h, h_t);
    if !fl.in_filter(hh) {
        return Err("h·h' left the filter".into());
    }
    for &n_s in &chain[m..] {
        if !ctx.leq(ctx.mul(n_s, hh), chain[m]) {
            return Err(format!("N_s h h' ⊄ N_m for N_s = {}, N_m = {}", ctx.label(n_s), ctx.label(chain[m])));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferReport {
    pub chains_checked: usize,
    pub failure: Option<String>,
}

impl TransferReport {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// For a totally σ-torsion `T ⊆ M`, moves the stability data of every swept
/// chain to `M/T` and back, verifying both directions.
pub fn quotient_transfer_check(m: &FiniteModule, t: &Submodule, sigma: &GabrielFilter) -> Result<TransferReport> {
    check_inputs(m, sigma, std::slice::from_ref(t))?;
    let tt = is_totally_torsion(&m.submodule_as_module(t), sigma)?;
    if !tt.holds {
        return Err(Error::PreconditionFailed(format!(
            "T = {} is not totally σ-torsion: Ann(T) = {} ∉ L(σ)",
            m.label_submodule(t),
            tt.annihilator
        )));
    }
    let ctx = LatticeContext::new(m);
    let fl = ctx.with_filter(sigma);
    let t_idx = ctx.index_of(t).expect("T is a submodule of M");
    let h_t = m.ring().ideal_index(&tt.annihilator).expect("annihilator is an ideal");
    let chains = sweep_chains(&ctx);
    let failure = chains.iter().find_map(|c| transfer_on_chain(&fl, t_idx, h_t, c).err());
    Ok(TransferReport { chains_checked: chains.len(), failure })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteRing;
    use crate::torsion::filter_from_mult_set;

    fn setup() -> (FiniteRing, FiniteModule, GabrielFilter) {
        let r = FiniteRing::zmod(12).unwrap();
        let m = FiniteModule::regular(&r);
        let sigma = filter_from_mult_set(&r, &[1, 3, 9]).unwrap();
        (r, m, sigma)
    }

    fn sub(m: &FiniteModule, g: usize) -> Submodule {
        m.span(&[g]).unwrap()
    }

    #[test]
    fn sigma_maximal_examples() {
        let (r, m, sigma) = setup();
        let fam = vec![sub(&m, 0), sub(&m, 6)];
        assert_eq!(sigma_maximal(&m, &fam, &sigma).unwrap(), vec![(sub(&m, 6), Ideal::unit(&r))]);
        let single = vec![sub(&m, 4)];
        assert_eq!(sigma_maximal(&m, &single, &sigma).unwrap(), vec![(sub(&m, 4), Ideal::unit(&r))]);
        let all = m.submodules();
        let improper = GabrielFilter::improper(&r);
        let res = sigma_maximal(&m, &all, &improper).unwrap();
        assert_eq!(res.len(), all.len());
        for (n, h) in res {
            assert_eq!(h.set(), n.set());
        }
        assert!(matches!(sigma_maximal(&m, &[], &sigma), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn upper_closure_examples() {
        let (_, m, sigma) = setup();
        let cl = upper_closure(&m, &[sub(&m, 6)], &sigma).unwrap();
        assert_eq!(cl, vec![sub(&m, 0), sub(&m, 6), sub(&m, 4), sub(&m, 2)]);
        assert!(is_upper_closed(&m, &cl, &sigma).unwrap());
        assert!(!is_upper_closed(&m, &[sub(&m, 6)], &sigma).unwrap());
        assert_eq!(upper_closure(&m, &[m.whole()], &sigma).unwrap(), m.submodules());
    }

    #[test]
    fn unique_maximal_examples() {
        let (_, m, sigma) = setup();
        let u = unique_maximal_check(&m, &sub(&m, 6), &sigma).unwrap();
        assert_eq!(u.maximal, vec![sub(&m, 2)]);
        assert!(u.closure_in_family);
        let u = unique_maximal_check(&m, &sub(&m, 2), &sigma).unwrap();
        assert_eq!(u.maximal, vec![sub(&m, 2)]);
    }

    #[test]
    fn chain_stability_examples() {
        let (r, m, sigma) = setup();
        let constant = vec![sub(&m, 4); 3];
        let s = chain_stability(&m, &constant, &sigma).unwrap();
        assert_eq!((s.stable_index, s.h), (1, Ideal::unit(&r)));
        let trivial = GabrielFilter::trivial(&r);
        let chain = vec![sub(&m, 0), sub(&m, 6), sub(&m, 2), sub(&m, 2)];
        let s = chain_stability(&m, &chain, &trivial).unwrap();
        assert_eq!((s.stable_index, s.h), (3, Ideal::unit(&r)));
        let s = chain_stability(&m, &[sub(&m, 4), sub(&m, 2)], &sigma).unwrap();
        assert_eq!((s.stable_index, s.h), (2, Ideal::unit(&r)));
        assert_eq!(
            chain_stability(&m, &[sub(&m, 2), sub(&m, 4)], &sigma),
            Err(Error::NotAscending { position: 2 })
        );
    }

    #[test]
    fn transfer_examples() {
        let (_, m, sigma) = setup();
        let rep = quotient_transfer_check(&m, &sub(&m, 4), &sigma).unwrap();
        assert!(rep.holds());
        assert!(rep.chains_checked > 0);
        assert!(quotient_transfer_check(&m, &m.zero_submodule(), &sigma).unwrap().holds());
        assert!(matches!(quotient_transfer_check(&m, &sub(&m, 6), &sigma), Err(Error::PreconditionFailed(_))));
    }
}
