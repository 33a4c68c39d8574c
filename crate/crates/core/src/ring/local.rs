//! Quotient maps and the decomposition of a finite ring into local factors.

use std::collections::BTreeMap;

use super::{FiniteRing, Ideal};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    Identity,
    /// `A -> A/a`.
    Quotient,
    /// `A -> eA` for a primitive idempotent `e`; this is the localization
    /// at the prime pulled back from the maximal ideal of `eA`.
    Projection,
    Other,
}

/// A ring homomorphism given by the image of every element.
#[derive(Debug, Clone)]
pub struct RingMap {
    source: FiniteRing,
    target: FiniteRing,
    images: Vec<usize>,
    kind: MapKind,
}

impl RingMap {
    pub fn identity(ring: &FiniteRing) -> Self {
        RingMap { source: ring.clone(), target: ring.clone(), images: ring.elements().collect(), kind: MapKind::Identity }
    }

    /// An arbitrary map; nothing is checked until it is used.
    pub fn from_images(source: &FiniteRing, target: &FiniteRing, images: Vec<usize>) -> Self {
        RingMap { source: source.clone(), target: target.clone(), images, kind: MapKind::Other }
    }

    /// The canonical surjection `A -> A/a`. Cosets are indexed by their
    /// smallest representative in increasing order.
    pub fn quotient(ideal: &Ideal) -> Self {
        let ring = ideal.ring();
        let n = ring.size();
        let mut rep_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for a in ring.elements() {
            if rep_of[a] != usize::MAX {
                continue;
            }
            let class = reps.len();
            reps.push(a);
            for i in ideal.set().ones() {
                rep_of[ring.add(a, i)] = class;
            }
        }
        let m = reps.len();
        let mut add = vec![0u32; m * m];
        let mut mul = vec![0u32; m * m];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                add[i * m + j] = rep_of[ring.add(a, b)] as u32;
                mul[i * m + j] = rep_of[ring.mul(a, b)] as u32;
            }
        }
        let labels = reps.iter().map(|&a| format!("[{}]", ring.label(a))).collect();
        let name = format!("{}/{}", ring.name(), ideal);
        let target = FiniteRing::derived(name, m, rep_of[ring.one()], add, mul, labels);
        RingMap { source: ring.clone(), target, images: rep_of, kind: MapKind::Quotient }
    }

    pub fn source(&self) -> &FiniteRing {
        &self.source
    }

    pub fn target(&self) -> &FiniteRing {
        &self.target
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn apply(&self, a: usize) -> usize {
        self.images[a]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Checks the unital ring homomorphism laws on all pairs.
    pub fn check_homomorphism(&self) -> Result<()> {
        if self.images.len() != self.source.size() || self.images.iter().any(|&b| b >= self.target.size()) {
            return Err(Error::UnsupportedMap("image table does not match the rings".into()));
        }
        if self.apply(self.source.one()) != self.target.one() {
            return Err(Error::UnsupportedMap("1 is not sent to 1".into()));
        }
        let (s, t) = (&self.source, &self.target);
        for a in s.elements() {
            for b in s.elements() {
                if self.apply(s.add(a, b)) != t.add(self.apply(a), self.apply(b))
                    || self.apply(s.mul(a, b)) != t.mul(self.apply(a), self.apply(b))
                {
                    return Err(Error::UnsupportedMap(format!("not a homomorphism on ({a}, {b})")));
                }
            }
        }
        Ok(())
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.size()];
        for &b in &self.images {
            hit[b] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// `f^{-1}(b)`.
    pub fn preimage(&self, ideal: &Ideal) -> Ideal {
        let elems: Vec<usize> = self.source.elements().filter(|&a| ideal.contains(self.apply(a))).collect();
        Ideal::from_elements(&self.source, &elems).expect("preimage of an ideal is an ideal")
    }

    /// The extended ideal `f(a)B`.
    pub fn extend(&self, ideal: &Ideal) -> Ideal {
        ideal.map_to(&self.target, &self.images)
    }
}

/// One local factor `eA` of a finite ring.
#[derive(Debug, Clone)]
pub struct LocalFactor {
    pub idempotent: usize,
    pub projection: RingMap,
}

impl LocalFactor {
    pub fn ring(&self) -> &FiniteRing {
        self.projection.target()
    }

    /// The prime of the source ring at which this factor is the localization.
    pub fn prime(&self) -> Ideal {
        let m = self.ring().spec().into_iter().next().expect("a local ring has a maximal ideal");
        self.projection.preimage(&m)
    }
}

impl FiniteRing {
    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&e| self.is_idempotent(e)).collect()
    }

    fn primitive_idempotents(&self) -> Vec<usize> {
        let idem = self.idempotents();
        idem.iter()
            .copied()
            .filter(|&e| e != 0 && idem.iter().all(|&f| f == 0 || f == e || self.mul(f, e) != f))
            .collect()
    }

    /// `A ≅ ∏ eA` over the primitive idempotents `e`, in increasing order
    /// of `e`. Each factor is local.
    pub fn local_decomposition(&self) -> Vec<LocalFactor> {
        self.primitive_idempotents()
            .into_iter()
            .map(|e| LocalFactor { idempotent: e, projection: self.corner(e) })
            .collect()
    }

    /// The factor that is the localization at `p`.
    pub fn localize_at_prime(&self, p: &Ideal) -> Result<LocalFactor> {
        if !p.is_prime() {
            return Err(Error::NotPrime(p.to_string()));
        }
        self.local_decomposition()
            .into_iter()
            .find(|f| &f.prime() == p)
            .ok_or_else(|| Error::TheoremViolation(format!("no local factor above {p}")))
    }

    fn corner(&self, e: usize) -> RingMap {
        let elems: BTreeMap<usize, usize> = self
            .elements()
            .map(|r| self.mul(e, r))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, a)| (a, i))
            .collect();
        let reps: Vec<usize> = elems.keys().copied().collect();
        let m = reps.len();
        let mut add = vec![0u32; m * m];
        let mut mul = vec![0u32; m * m];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                add[i * m + j] = elems[&self.add(a, b)] as u32;
                mul[i * m + j] = elems[&self.mul(a, b)] as u32;
            }
        }
        let labels = reps.iter().map(|&a| self.label(a).to_string()).collect();
        let name = format!("{}·{}", self.label(e), self.name());
        let target = FiniteRing::derived(name, m, elems[&e], add, mul, labels);
        let images = self.elements().map(|r| elems[&self.mul(e, r)]).collect();
        RingMap { source: self.clone(), target, images, kind: MapKind::Projection }
    }
}

/// `A -> ∏ eA` as a single map onto tuples, checked to be a ring isomorphism.
#[cfg(test)]
pub(crate) fn check_decomposition(ring: &FiniteRing, factors: &[LocalFactor]) -> Result<(), String> {
    let product: usize = factors.iter().map(|f| f.ring().size()).product();
    if product != ring.size() {
        return Err(format!("factor sizes multiply to {product}, ring has {}", ring.size()));
    }
    let tuple = |a: usize| -> Vec<usize> { factors.iter().map(|f| f.projection.apply(a)).collect() };
    let mut seen = std::collections::HashSet::new();
    for a in ring.elements() {
        if !seen.insert(tuple(a)) {
            return Err(format!("element {} is not separated by the factors", ring.label(a)));
        }
    }
    for f in factors {
        f.projection.check_homomorphism().map_err(|e| e.to_string())?;
        if f.ring().spec().len() != 1 {
            return Err(format!("factor {} is not local", f.ring()));
        }
    }
    Ok(())
}
