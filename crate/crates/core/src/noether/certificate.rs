//! Certificates `(H, h)` with `N·h ⊆ H ⊆ N`, closure witnesses and the
//! σ-principal tests.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{ElemSet, FiniteModule, Ideal, SpanBuilder, Submodule};
use crate::torsion::{closure, GabrielFilter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    /// `N·h ⊆ H ⊆ N` with `H` finitely generated.
    TotallyFg,
    /// `N·h ⊆ aA ⊆ N` for a single generator `a`.
    TotallyPrincipal,
    /// `N·h = 0`.
    TotallyTorsion,
}

/// Evidence that `N` is totally σ-finitely generated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// Vectors of the ambient free module generating `H` modulo the relations.
    pub generators: Vec<usize>,
    pub filter_ideal: Ideal,
    pub kind: CertificateKind,
}

impl Certificate {
    /// The submodule `H` spanned by the generators.
    pub fn submodule(&self, m: &FiniteModule) -> Result<Submodule> {
        m.span(&self.generators)
    }
}

/// Result of [`verify_certificate`]: the first failing condition, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateCheck {
    Valid,
    Invalid(String),
}

impl CertificateCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, CertificateCheck::Valid)
    }
}

impl fmt::Display for CertificateCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateCheck::Valid => f.write_str("valid"),
            CertificateCheck::Invalid(reason) => f.write_str(reason),
        }
    }
}

fn check_inputs(m: &FiniteModule, n: &Submodule, sigma: &GabrielFilter) -> Result<()> {
    if m.ring() != sigma.ring() {
        return Err(Error::RingMismatch);
    }
    m.check_submodule(n)
}

/// A certificate for `N` with the fewest generators for `H`; ties go to the
/// largest `h = (H : N)`, then to the lexicographically smallest generator
/// list.
///
/// Candidates are explored level by level: level `k` holds every distinct
/// submodule spanned by `k` vectors of `N`, each with its lexicographically
/// smallest generating tuple.
pub fn tfg_certificate(m: &FiniteModule, n: &Submodule, sigma: &GabrielFilter) -> Result<Certificate> {
    check_inputs(m, n, sigma)?;
    let ambient = m.ambient();
    // one representative (the smallest vector) per cyclic submodule of N
    let mut reps = Vec::new();
    let mut cyclic_seen = HashSet::new();
    for x in n.set().ones() {
        if m.lower().contains(x) {
            continue;
        }
        let c = ambient.extend(m.lower(), [x]);
        if cyclic_seen.insert(c) {
            reps.push(x);
        }
    }
    let mut seen: HashSet<ElemSet> = HashSet::new();
    seen.insert(m.lower().clone());
    let mut level: Vec<(Vec<usize>, ElemSet)> = vec![(Vec::new(), m.lower().clone())];
    loop {
        let mut best: Option<(usize, Vec<usize>, Ideal)> = None;
        for (gens, set) in &level {
            let h = m.colon(&Submodule::from_set(set.clone()), n);
            if !sigma.contains(&h) {
                continue;
            }
            let size = h.len();
            if best.as_ref().is_none_or(|(s, g, _)| size > *s || (size == *s && gens < g)) {
                best = Some((size, gens.clone(), h));
            }
        }
        if let Some((_, generators, filter_ideal)) = best {
            let kind = if generators.is_empty() { CertificateKind::TotallyTorsion } else { CertificateKind::TotallyFg };
            return Ok(Certificate { generators, filter_ideal, kind });
        }
        let mut next = Vec::new();
        for (gens, set) in &level {
            let base = SpanBuilder::from_set(ambient, set);
            for &x in &reps {
                if set.contains(x) {
                    continue;
                }
                let mut b = base.clone();
                b.add_module_gen(x);
                if seen.insert(b.set.clone()) {
                    let mut g = gens.clone();
                    g.push(x);
                    next.push((g, b.set));
                }
            }
        }
        if next.is_empty() {
            return Err(Error::TheoremViolation(format!(
                "no certificate for {} although N itself is reachable",
                m.label_submodule(n)
            )));
        }
        level = next;
    }
}

/// Checks `h ∈ L(σ)`, `H ⊆ N` and `N·h ⊆ H`, in that order.
pub fn verify_certificate(
    m: &FiniteModule,
    n: &Submodule,
    sigma: &GabrielFilter,
    cert: &Certificate,
) -> Result<CertificateCheck> {
    check_inputs(m, n, sigma)?;
    if !sigma.contains(&cert.filter_ideal) {
        return Ok(CertificateCheck::Invalid(format!("h = {} ∉ L(σ)", cert.filter_ideal)));
    }
    let h_sub = match m.span(&cert.generators) {
        Ok(s) => s,
        Err(_) => return Ok(CertificateCheck::Invalid("H ⊄ N".into())),
    };
    if !h_sub.is_subset(n) {
        return Ok(CertificateCheck::Invalid("H ⊄ N".into()));
    }
    match cert.kind {
        CertificateKind::TotallyPrincipal if cert.generators.len() != 1 => {
            return Ok(CertificateCheck::Invalid("a principal certificate needs exactly one generator".into()));
        }
        CertificateKind::TotallyTorsion if !cert.generators.is_empty() => {
            return Ok(CertificateCheck::Invalid("a torsion certificate has no generators".into()));
        }
        _ => {}
    }
    if !m.mul_ideal(n, &cert.filter_ideal).is_subset(&h_sub) {
        return Ok(CertificateCheck::Invalid("N·h ⊄ H".into()));
    }
    Ok(CertificateCheck::Valid)
}

/// Some `h ∈ L(σ)` with `(H : h) = Cl_σ(H)`, trying members from the
/// largest down.
pub fn closure_colon_witness(m: &FiniteModule, h_sub: &Submodule, sigma: &GabrielFilter) -> Result<Ideal> {
    check_inputs(m, h_sub, sigma)?;
    let cl = closure(m, h_sub, sigma)?;
    for h in sigma.members_descending() {
        if m.colon_by_ideal(h_sub, &h) == cl {
            return Ok(h);
        }
    }
    let tried: Vec<String> = sigma
        .members_descending()
        .iter()
        .map(|h| format!("(H:{h}) = {}", m.label_submodule(&m.colon_by_ideal(h_sub, h))))
        .collect();
    Err(Error::TheoremViolation(format!(
        "no h ∈ L(σ) with (H:h) = Cl(H) for H = {}, Cl(H) = {}; tried {}",
        m.label_submodule(h_sub),
        m.label_submodule(&cl),
        tried.join("; ")
    )))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalStatus {
    /// Some `a ∈ I` with `Cl(aA) = Cl(I)`.
    pub sigma_principal: Option<usize>,
    /// `a ∈ I` and `h ∈ L(σ)` with `I·h ⊆ aA ⊆ I`.
    pub totally_principal: Option<Certificate>,
}

impl PrincipalStatus {
    pub fn is_sigma_principal(&self) -> bool {
        self.sigma_principal.is_some()
    }

    pub fn is_totally_principal(&self) -> bool {
        self.totally_principal.is_some()
    }
}

/// Candidate generators of `I` ordered by decreasing `|aA|`, then index.
fn principal_candidates(ideal: &Ideal) -> Vec<(usize, Ideal)> {
    let mut cands: Vec<(usize, Ideal)> = ideal
        .elements()
        .into_iter()
        .map(|a| (a, Ideal::generated(ideal.ring(), &[a]).expect("a is in range")))
        .collect();
    cands.sort_by(|(a, x), (b, y)| y.len().cmp(&x.len()).then(a.cmp(b)));
    cands
}

pub fn sigma_principal_status(ideal: &Ideal, sigma: &GabrielFilter) -> Result<PrincipalStatus> {
    if ideal.ring() != sigma.ring() {
        return Err(Error::RingMismatch);
    }
    let a_mod = FiniteModule::regular(ideal.ring());
    let as_sub = |i: &Ideal| Submodule::from_set(i.set().clone());
    let cl_i = closure(&a_mod, &as_sub(ideal), sigma)?;
    let cands = principal_candidates(ideal);
    let sigma_principal = cands
        .iter()
        .find(|(_, aa)| closure(&a_mod, &as_sub(aa), sigma).is_ok_and(|c| c == cl_i))
        .map(|(a, _)| *a);
    let totally_principal = cands.iter().find_map(|(a, aa)| {
        let h = aa.colon(ideal).expect("same ring");
        sigma.contains(&h).then(|| Certificate {
            generators: vec![*a],
            filter_ideal: h,
            kind: CertificateKind::TotallyPrincipal,
        })
    });
    Ok(PrincipalStatus { sigma_principal, totally_principal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{FiniteRing, RingTerm};
    use crate::torsion::filter_from_mult_set;

    fn setup() -> (FiniteRing, FiniteModule, GabrielFilter) {
        let r = FiniteRing::zmod(12).unwrap();
        let m = FiniteModule::regular(&r);
        let sigma = filter_from_mult_set(&r, &[1, 3, 9]).unwrap();
        (r, m, sigma)
    }

    #[test]
    fn tfg_examples() {
        let (r, m, sigma) = setup();
        let c = tfg_certificate(&m, &m.span(&[2]).unwrap(), &sigma).unwrap();
        assert_eq!(c.generators, vec![2]);
        assert_eq!(c.filter_ideal, Ideal::unit(&r));
        let c = tfg_certificate(&m, &m.zero_submodule(), &sigma).unwrap();
        assert!(c.generators.is_empty());
        assert_eq!(c.filter_ideal, Ideal::unit(&r));
        let c = tfg_certificate(&m, &m.whole(), &sigma).unwrap();
        assert_eq!(c.generators, vec![1]);
        // (4) is killed by (3) ∈ L, so no generators are needed
        let c = tfg_certificate(&m, &m.span(&[4]).unwrap(), &sigma).unwrap();
        assert_eq!(c.kind, CertificateKind::TotallyTorsion);
        assert_eq!(c.filter_ideal, Ideal::generated(&r, &[3]).unwrap());
    }

    #[test]
    fn verify_examples() {
        let (r, m, sigma) = setup();
        let n = m.span(&[2]).unwrap();
        let good = Certificate {
            generators: vec![6],
            filter_ideal: Ideal::generated(&r, &[3]).unwrap(),
            kind: CertificateKind::TotallyFg,
        };
        assert!(verify_certificate(&m, &n, &sigma, &good).unwrap().is_valid());
        let bad = Certificate { filter_ideal: Ideal::unit(&r), ..good };
        assert_eq!(verify_certificate(&m, &n, &sigma, &bad).unwrap(), CertificateCheck::Invalid("N·h ⊄ H".into()));
        let c = tfg_certificate(&m, &n, &sigma).unwrap();
        assert!(verify_certificate(&m, &n, &sigma, &c).unwrap().is_valid());
    }

    #[test]
    fn closure_witness_examples() {
        let (r, m, sigma) = setup();
        let h = closure_colon_witness(&m, &m.span(&[6]).unwrap(), &sigma).unwrap();
        assert_eq!(h, Ideal::generated(&r, &[3]).unwrap());
        assert_eq!(closure_colon_witness(&m, &m.whole(), &sigma).unwrap(), Ideal::unit(&r));
        assert_eq!(closure_colon_witness(&m, &m.span(&[4]).unwrap(), &sigma).unwrap(), Ideal::unit(&r));
    }

    #[test]
    fn principal_examples() {
        let r = FiniteRing::build(&RingTerm::truncated(2, 2, 2)).unwrap();
        let max = r.spec().remove(0);
        let trivial = GabrielFilter::trivial(&r);
        let s = sigma_principal_status(&max, &trivial).unwrap();
        assert!(!s.is_sigma_principal() && !s.is_totally_principal());
        let s = sigma_principal_status(&max, &GabrielFilter::improper(&r)).unwrap();
        assert!(s.is_sigma_principal() && s.is_totally_principal());

        let z12 = FiniteRing::zmod(12).unwrap();
        let two = Ideal::generated(&z12, &[2]).unwrap();
        let s = sigma_principal_status(&two, &GabrielFilter::trivial(&z12)).unwrap();
        assert_eq!(s.sigma_principal, Some(2));
        assert_eq!(s.totally_principal.unwrap().generators, vec![2]);
    }
}
