//! The torsion radical `σM`, the σ-closure of submodules, and the
//! torsion / torsionfree / totally torsion predicates.

use crate::error::{Error, Result};
use crate::ring::{FiniteModule, Ideal, Submodule};

use super::GabrielFilter;

fn same_ring(m: &FiniteModule, sigma: &GabrielFilter) -> Result<()> {
    if m.ring() == sigma.ring() {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// `σM = {m : Ann(m) ∈ L(σ)}`.
pub fn torsion_submodule(m: &FiniteModule, sigma: &GabrielFilter) -> Result<Submodule> {
    same_ring(m, sigma)?;
    closure_set(m, &m.zero_submodule(), sigma)
}

/// `σM` computed as the sum of every submodule all of whose generators
/// have annihilator in `L(σ)`. Agrees with [`torsion_submodule`].
pub fn torsion_submodule_by_sum(m: &FiniteModule, sigma: &GabrielFilter) -> Result<Submodule> {
    same_ring(m, sigma)?;
    let mut total = m.zero_submodule();
    for n in m.submodules() {
        let gens = m.generators_of(&n);
        if gens.iter().all(|&g| sigma.contains(&m.annihilator_of(g))) {
            total = m.sum(&total, &n);
        }
    }
    Ok(total)
}

/// [`torsion_submodule`] cross-checked against [`torsion_submodule_by_sum`].
pub fn torsion_submodule_checked(m: &FiniteModule, sigma: &GabrielFilter) -> Result<Submodule> {
    let a = torsion_submodule(m, sigma)?;
    let b = torsion_submodule_by_sum(m, sigma)?;
    if a != b {
        return Err(Error::TheoremViolation(format!(
            "torsion radical formulas disagree: {} vs {}",
            m.label_submodule(&a),
            m.label_submodule(&b)
        )));
    }
    Ok(a)
}

fn closure_set(m: &FiniteModule, n: &Submodule, sigma: &GabrielFilter) -> Result<Submodule> {
    let ambient = m.ambient();
    let mut out = n.set().clone();
    for x in m.upper().ones() {
        if !out.contains(x) && sigma.contains_set(&ambient.colon_element(n.set(), x)) {
            out.insert(x);
        }
    }
    Ok(Submodule::from_set(out))
}

/// `Cl_σ(N) = {m : (N : m) ∈ L(σ)}`, the preimage of `σ(M/N)`.
pub fn closure(m: &FiniteModule, n: &Submodule, sigma: &GabrielFilter) -> Result<Submodule> {
    same_ring(m, sigma)?;
    m.check_submodule(n)?;
    closure_set(m, n, sigma)
}

/// `Cl_σ(N) = M`.
pub fn is_dense(m: &FiniteModule, n: &Submodule, sigma: &GabrielFilter) -> Result<bool> {
    Ok(closure(m, n, sigma)?.set() == m.upper())
}

/// `Cl_σ(N) = N`.
pub fn is_closed(m: &FiniteModule, n: &Submodule, sigma: &GabrielFilter) -> Result<bool> {
    Ok(&closure(m, n, sigma)? == n)
}

/// `σM = M`.
pub fn is_torsion(m: &FiniteModule, sigma: &GabrielFilter) -> Result<bool> {
    Ok(torsion_submodule(m, sigma)?.set() == m.upper())
}

/// `σM = 0`.
pub fn is_torsionfree(m: &FiniteModule, sigma: &GabrielFilter) -> Result<bool> {
    Ok(torsion_submodule(m, sigma)?.set() == m.lower())
}

/// Outcome of the totally σ-torsion test: `Ann(M) ∈ L(σ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalTorsion {
    pub holds: bool,
    /// `Ann(M)`: the witness `h` with `Mh = 0` when `holds`, the refuting
    /// ideal otherwise.
    pub annihilator: Ideal,
}

pub fn is_totally_torsion(m: &FiniteModule, sigma: &GabrielFilter) -> Result<TotalTorsion> {
    same_ring(m, sigma)?;
    let annihilator = m.annihilator();
    Ok(TotalTorsion { holds: sigma.contains(&annihilator), annihilator })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteRing;
    use crate::torsion::{filter_from_mult_set, filter_from_prime};

    fn z12() -> FiniteRing {
        FiniteRing::zmod(12).unwrap()
    }

    fn sub(m: &FiniteModule, gens: &[usize]) -> Submodule {
        m.span(gens).unwrap()
    }

    #[test]
    fn radical_examples() {
        let r = z12();
        let a = FiniteModule::regular(&r);
        let sigma = filter_from_mult_set(&r, &[1, 3, 9]).unwrap();
        assert_eq!(torsion_submodule_checked(&a, &sigma).unwrap(), sub(&a, &[4]));
        let improper = GabrielFilter::improper(&r);
        assert_eq!(torsion_submodule(&a, &improper).unwrap(), a.whole());
        let trivial = GabrielFilter::trivial(&r);
        assert_eq!(torsion_submodule(&a, &trivial).unwrap(), a.zero_submodule());
        let z6 = FiniteRing::zmod(6).unwrap();
        assert_eq!(torsion_submodule(&FiniteModule::regular(&z6), &sigma), Err(Error::RingMismatch));
    }

    #[test]
    fn closure_examples() {
        let r = z12();
        let a = FiniteModule::regular(&r);
        let sigma = filter_from_mult_set(&r, &[1, 3, 9]).unwrap();
        assert_eq!(closure(&a, &sub(&a, &[6]), &sigma).unwrap(), sub(&a, &[2]));
        assert_eq!(closure(&a, &sub(&a, &[4]), &sigma).unwrap(), sub(&a, &[4]));
        assert!(is_closed(&a, &sub(&a, &[4]), &sigma).unwrap());
        assert!(is_dense(&a, &sub(&a, &[3]), &sigma).unwrap());
        assert_eq!(closure(&a, &sub(&a, &[1]), &sigma).unwrap(), a.whole());
        assert!(!is_closed(&a, &sub(&a, &[6]), &sigma).unwrap());
    }

    #[test]
    fn torsion_and_torsionfree_quotients() {
        let r = z12();
        let a = FiniteModule::regular(&r);
        let two = Ideal::generated(&r, &[2]).unwrap();
        let sigma = filter_from_prime(&two).unwrap();
        assert!(is_torsionfree(&a.quotient(&sub(&a, &[2])), &sigma).unwrap());
        assert!(is_torsion(&a.quotient(&sub(&a, &[3])), &sigma).unwrap());
    }

    #[test]
    fn totally_torsion_examples() {
        let r = z12();
        let a = FiniteModule::regular(&r);
        let sigma = filter_from_mult_set(&r, &[1, 3, 9]).unwrap();
        let t = is_totally_torsion(&a.submodule_as_module(&sub(&a, &[4])), &sigma).unwrap();
        assert!(t.holds);
        assert_eq!(t.annihilator, Ideal::generated(&r, &[3]).unwrap());
        let t = is_totally_torsion(&a, &sigma).unwrap();
        assert!(!t.holds);
        assert!(t.annihilator.is_zero());
    }
}
