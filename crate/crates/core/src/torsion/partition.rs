//! Prime spectrum partition, jansian detection and filters induced along
//! surjective ring maps.

use crate::error::{Error, Result};
use crate::ring::{FiniteModule, Ideal, MapKind, RingMap};

use super::filter::{filter_from_prime, meet_filters, GabrielFilter};
use super::radical::is_torsionfree;

/// `Spec(A) = K(σ) ⊔ Z(σ)`, with `C(σ) = Max K(σ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecPartition {
    /// Primes `p` with `A/p` σ-torsionfree.
    pub k: Vec<Ideal>,
    /// Primes in `L(σ)`.
    pub z: Vec<Ideal>,
    /// Maximal elements of `K` under inclusion.
    pub c: Vec<Ideal>,
}

pub fn spec_partition(sigma: &GabrielFilter) -> SpecPartition {
    let (z, k): (Vec<Ideal>, Vec<Ideal>) = sigma.ring().spec().into_iter().partition(|p| sigma.contains(p));
    let c = k
        .iter()
        .filter(|p| !k.iter().any(|q| q != *p && p.is_subset(q)))
        .cloned()
        .collect();
    SpecPartition { k, z, c }
}

impl SpecPartition {
    /// Checks disjointness and coverage of `Spec`, that `A/p` is
    /// σ-torsionfree for `p ∈ K`, that `Z` is upward closed, and that
    /// `C = Max K`.
    pub fn verify(&self, sigma: &GabrielFilter) -> Result<(), String> {
        let ring = sigma.ring();
        let spec = ring.spec();
        for p in &spec {
            let in_k = self.k.contains(p);
            let in_z = self.z.contains(p);
            if in_k == in_z {
                return Err(format!("prime {p} is in {} parts", if in_k { "both" } else { "neither" }));
            }
        }
        if self.k.len() + self.z.len() != spec.len() {
            return Err("partition lists a non-prime".into());
        }
        let a = FiniteModule::regular(ring);
        for p in &self.k {
            let quotient = a.quotient(&a.span(&p.generators()).expect("ideal generators lie in A"));
            if !is_torsionfree(&quotient, sigma).expect("same ring") {
                return Err(format!("A/{p} is not σ-torsionfree"));
            }
        }
        for p in &self.z {
            for q in &spec {
                if p.is_subset(q) && !self.z.contains(q) {
                    return Err(format!("{p} ∈ Z but {q} ⊇ {p} is not"));
                }
            }
        }
        for p in &self.c {
            if !self.k.contains(p) || self.k.iter().any(|q| q != p && p.is_subset(q)) {
                return Err(format!("{p} is not a maximal element of K"));
            }
        }
        if self.k.iter().any(|p| !self.c.iter().any(|c| p.is_subset(c))) {
            return Err("C does not contain every maximal element of K".into());
        }
        Ok(())
    }
}

/// `L(σ) = ∩_{p ∈ K(σ)} L(σ_{A∖p})`; an empty `K` yields the improper filter.
pub fn meet_decomposition(sigma: &GabrielFilter) -> GabrielFilter {
    let part = spec_partition(sigma);
    let mut pieces: Vec<GabrielFilter> =
        part.k.iter().map(|p| filter_from_prime(p).expect("spectrum members are prime")).collect();
    pieces.push(GabrielFilter::improper(sigma.ring()));
    meet_filters(&pieces).expect("filters share the ring")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JansianStatus {
    pub is_jansian: bool,
    /// The least member, when it is a basis and idempotent.
    pub idempotent_basis_ideal: Option<Ideal>,
    pub is_almost_jansian: bool,
    /// `(a, a^∞)` for every member `a`.
    pub stable_powers: Vec<(Ideal, Ideal)>,
    /// A member whose stable power falls outside the filter.
    pub almost_jansian_failure: Option<Ideal>,
}

pub fn jansian_status(sigma: &GabrielFilter) -> JansianStatus {
    let least = sigma.least();
    let members = sigma.members();
    let principal = members.iter().all(|a| least.is_subset(a))
        && sigma.ring().ideals().iter().all(|a| !least.is_subset(a) || sigma.contains(a));
    let idempotent = least.product(&least).expect("same ring") == least;
    let is_jansian = principal && idempotent;
    let stable_powers: Vec<(Ideal, Ideal)> = members.iter().map(|a| (a.clone(), a.stable_power())).collect();
    let almost_jansian_failure = stable_powers.iter().find(|(_, s)| !sigma.contains(s)).map(|(a, _)| a.clone());
    JansianStatus {
        is_jansian,
        idempotent_basis_ideal: is_jansian.then_some(least),
        is_almost_jansian: almost_jansian_failure.is_none(),
        stable_powers,
        almost_jansian_failure,
    }
}

/// A basis of finitely generated ideals: the generator lists of the
/// minimal members. Always present on a finite ring.
pub fn finite_type_basis(sigma: &GabrielFilter) -> Vec<Vec<usize>> {
    sigma.basis().iter().map(Ideal::generators).collect()
}

/// `f(σ)` on the target of a surjective map `f`: `{b : f⁻¹(b) ∈ L(σ)}`.
///
/// Also verifies that the result equals `{f(a)B : a ∈ L(σ)}`, passes the
/// axiom check and has a finitely generated basis.
pub fn induced_filter(f: &RingMap, sigma: &GabrielFilter) -> Result<GabrielFilter> {
    if f.source() != sigma.ring() {
        return Err(Error::RingMismatch);
    }
    match f.kind() {
        MapKind::Identity | MapKind::Quotient | MapKind::Projection => {}
        MapKind::Other => {
            f.check_homomorphism()?;
            if !f.is_surjective() {
                return Err(Error::UnsupportedMap("map is not surjective".into()));
            }
        }
    }
    let target = f.target();
    let members: Vec<Ideal> = target.ideals().into_iter().filter(|b| sigma.contains(&f.preimage(b))).collect();
    let mut extended: Vec<Ideal> = sigma.members().iter().map(|a| f.extend(a)).collect();
    extended.sort();
    extended.dedup();
    if extended != members {
        return Err(Error::TheoremViolation(format!(
            "induced filter {members:?} differs from the extended ideals {extended:?}"
        )));
    }
    let induced = GabrielFilter::from_members(target, &members)
        .map_err(|e| Error::TheoremViolation(format!("induced filter is not Gabriel: {e}")))?;
    if finite_type_basis(&induced).is_empty() {
        return Err(Error::TheoremViolation("induced filter has no finite basis".into()));
    }
    Ok(induced)
}
