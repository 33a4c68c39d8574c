//! Finite commutative rings with canonical element indices.
//!
//! A [`FiniteRing`] is a cheap handle over precomputed addition and
//! multiplication tables. Elements are the indices `0..size`, with `0` the
//! additive identity. Rings come from the [`RingTerm`] grammar, or are
//! derived internally (quotients `R/a`, corner rings `eR`).

mod catalogue;
mod ideal;
mod local;
mod module;

pub use catalogue::catalogue;
pub use ideal::{Ideal, IdealOp};
pub use local::{LocalFactor, MapKind, RingMap};
pub use module::{FiniteModule, FreeModule, Submodule};

pub(crate) use module::SpanBuilder;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default bound on the number of ring elements.
pub const DEFAULT_SIZE_CAP: usize = 256;

/// Subsets of a finite carrier are stored as bitsets over element indices.
pub type ElemSet = FixedBitSet;

/// Constructor grammar for finite rings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum RingTerm {
    /// `Z/n`.
    Zmod(u64),
    /// Direct product of two rings.
    Product(Box<RingTerm>, Box<RingTerm>),
    /// `F_p[x]/(f)` with `f` monic, coefficients listed low to high.
    Polyquot { p: u64, f: Vec<u64> },
    /// `F_p[x_1..x_vars]` modulo all monomials of total degree `degree`.
    Truncated { p: u64, vars: u32, degree: u32 },
}

impl RingTerm {
    pub fn zmod(n: u64) -> Self {
        RingTerm::Zmod(n)
    }

    pub fn product(left: RingTerm, right: RingTerm) -> Self {
        RingTerm::Product(Box::new(left), Box::new(right))
    }

    pub fn polyquot(p: u64, f: &[u64]) -> Self {
        RingTerm::Polyquot { p, f: f.to_vec() }
    }

    pub fn truncated(p: u64, vars: u32, degree: u32) -> Self {
        RingTerm::Truncated { p, vars, degree }
    }

    /// Number of elements, or `None` on overflow. Does not validate.
    fn declared_size(&self) -> Option<u128> {
        match self {
            RingTerm::Zmod(n) => Some(*n as u128),
            RingTerm::Product(l, r) => l.declared_size()?.checked_mul(r.declared_size()?),
            RingTerm::Polyquot { p, f } => {
                let deg = f.len().checked_sub(1)? as u32;
                (*p as u128).checked_pow(deg)
            }
            RingTerm::Truncated { p, vars, degree } => {
                let count = truncated_monomials(*vars, *degree).len() as u32;
                (*p as u128).checked_pow(count)
            }
        }
    }
}

impl fmt::Display for RingTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingTerm::Zmod(n) => write!(f, "Z/{n}"),
            RingTerm::Product(l, r) => write!(f, "({l} x {r})"),
            RingTerm::Polyquot { p, f: poly } => {
                write!(f, "F{p}[x]/({})", poly_label(poly, *p, "x"))
            }
            RingTerm::Truncated { p, vars, degree } => {
                let names: Vec<String> = (0..*vars).map(|i| var_name(i as usize, *vars as usize)).collect();
                write!(f, "F{p}[{}]/(deg {degree})", names.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Origin {
    Term(RingTerm),
    Derived(String),
}

pub(crate) struct IdealTable {
    pub(crate) sets: Vec<ElemSet>,
    pub(crate) index: HashMap<ElemSet, usize>,
}

struct RingData {
    origin: Origin,
    size: usize,
    one: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    labels: Vec<String>,
    additive_gens: Vec<usize>,
    ideals: OnceLock<IdealTable>,
}

/// A finite commutative unital ring.
///
/// Cloning is cheap. Two handles compare equal when their tables agree.
#[derive(Clone)]
pub struct FiniteRing(Arc<RingData>);

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, size {})", self.name(), self.size())
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.size == other.0.size
                && self.0.one == other.0.one
                && self.0.add == other.0.add
                && self.0.mul == other.0.mul)
    }
}

impl Eq for FiniteRing {}

impl FiniteRing {
    /// Builds a ring with the default size cap.
    pub fn build(term: &RingTerm) -> Result<Self> {
        Self::build_with_cap(term, DEFAULT_SIZE_CAP)
    }

    pub fn build_with_cap(term: &RingTerm, cap: usize) -> Result<Self> {
        validate(term)?;
        let size = term.declared_size().unwrap_or(u128::MAX);
        if size > cap as u128 {
            return Err(Error::SizeCapExceeded { size, cap });
        }
        let raw = raw_tables(term);
        Ok(Self::from_raw(Origin::Term(term.clone()), raw))
    }

    pub fn zmod(n: u64) -> Result<Self> {
        Self::build(&RingTerm::Zmod(n))
    }

    fn from_raw(origin: Origin, raw: RawTables) -> Self {
        let RawTables { size, one, add, mul, labels } = raw;
        let mut neg = vec![0u32; size];
        for a in 0..size {
            for b in 0..size {
                if add[a * size + b] == 0 {
                    neg[a] = b as u32;
                    break;
                }
            }
        }
        let additive_gens = additive_generators(size, &add);
        FiniteRing(Arc::new(RingData {
            origin,
            size,
            one,
            add,
            mul,
            neg,
            labels,
            additive_gens,
            ideals: OnceLock::new(),
        }))
    }

    /// Builds a ring from explicit tables; used for quotients and factors.
    pub(crate) fn derived(name: String, size: usize, one: usize, add: Vec<u32>, mul: Vec<u32>, labels: Vec<String>) -> Self {
        Self::from_raw(Origin::Derived(name), RawTables { size, one, add, mul, labels })
    }

    pub fn term(&self) -> Option<&RingTerm> {
        match &self.0.origin {
            Origin::Term(t) => Some(t),
            Origin::Derived(_) => None,
        }
    }

    pub fn name(&self) -> String {
        match &self.0.origin {
            Origin::Term(t) => t.to_string(),
            Origin::Derived(s) => s.clone(),
        }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.0.size
    }

    #[inline]
    pub fn zero(&self) -> usize {
        0
    }

    #[inline]
    pub fn one(&self) -> usize {
        self.0.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.0.add[a * self.0.size + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.mul[a * self.0.size + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.0.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.0.size
    }

    pub fn label(&self, a: usize) -> &str {
        &self.0.labels[a]
    }

    /// A generating set of the additive group, found greedily.
    pub fn additive_generators(&self) -> &[usize] {
        &self.0.additive_gens
    }

    pub fn check_element(&self, a: usize) -> Result<()> {
        if a < self.size() {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { element: a, size: self.size() })
        }
    }

    pub fn is_unit(&self, a: usize) -> bool {
        self.elements().any(|b| self.mul(a, b) == self.one())
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    /// Exhaustively verifies the commutative unital ring axioms.
    ///
    /// Returns a description of the first failing instance.
    pub fn check_axioms(&self) -> Result<(), String> {
        let n = self.size();
        for a in 0..n {
            if self.add(a, 0) != a {
                return Err(format!("{a} + 0 != {a}"));
            }
            if self.mul(a, self.one()) != a {
                return Err(format!("{a} * 1 != {a}"));
            }
            if self.add(a, self.neg(a)) != 0 {
                return Err(format!("{a} has no additive inverse"));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(format!("addition not commutative on ({a}, {b})"));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return Err(format!("multiplication not commutative on ({a}, {b})"));
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return Err(format!("addition not associative on ({a}, {b}, {c})"));
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(format!("multiplication not associative on ({a}, {b}, {c})"));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Err(format!("distributivity fails on ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(())
    }

    pub(crate) fn ideal_table(&self) -> &IdealTable {
        self.0.ideals.get_or_init(|| {
            let free = FreeModule::new_unchecked(self.clone(), 1);
            let zero = free.zero_set();
            let full = free.full_set();
            let sets = free.submodules_between(&zero, &full);
            let index = sets.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
            IdealTable { sets, index }
        })
    }

    /// All ideals, sorted by cardinality and then by their sorted element
    /// lists. The order is fixed so reports are reproducible.
    pub fn ideals(&self) -> Vec<Ideal> {
        self.ideal_table()
            .sets
            .iter()
            .map(|s| Ideal::from_set_unchecked(self.clone(), s.clone()))
            .collect()
    }

    pub fn ideal_count(&self) -> usize {
        self.ideal_table().sets.len()
    }

    /// Position of an ideal in [`FiniteRing::ideals`].
    pub fn ideal_index(&self, ideal: &Ideal) -> Option<usize> {
        if ideal.ring() != self {
            return None;
        }
        self.ideal_table().index.get(ideal.set()).copied()
    }

    pub(crate) fn ideal_index_of_set(&self, set: &ElemSet) -> usize {
        self.ideal_table().index[set]
    }

    pub(crate) fn ideal_at(&self, index: usize) -> Ideal {
        Ideal::from_set_unchecked(self.clone(), self.ideal_table().sets[index].clone())
    }

    /// The prime spectrum. On a finite ring every prime is maximal.
    pub fn spec(&self) -> Vec<Ideal> {
        self.ideals().into_iter().filter(|p| p.is_prime()).collect()
    }
}

/// Builds a ring from a construction term with the default cap.
pub fn build_ring(term: &RingTerm) -> Result<FiniteRing> {
    FiniteRing::build(term)
}

/// Canonical order on element sets: cardinality, then sorted element lists.
pub(crate) fn canonical_cmp(a: &ElemSet, b: &ElemSet) -> std::cmp::Ordering {
    a.count_ones(..)
        .cmp(&b.count_ones(..))
        .then_with(|| a.ones().cmp(b.ones()))
}

fn additive_generators(size: usize, add: &[u32]) -> Vec<usize> {
    let mut set = FixedBitSet::with_capacity(size);
    set.insert(0);
    let mut list = vec![0usize];
    let mut gens = Vec::new();
    for g in 1..size {
        if set.contains(g) {
            continue;
        }
        gens.push(g);
        let base = list.clone();
        let mut t = g;
        while !set.contains(t) {
            for &x in &base {
                let y = add[x * size + t] as usize;
                set.insert(y);
                list.push(y);
            }
            t = add[t * size + g] as usize;
        }
    }
    gens
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn validate(term: &RingTerm) -> Result<()> {
    match term {
        RingTerm::Zmod(n) => {
            if *n < 2 {
                return Err(Error::InvalidModulus(*n));
            }
        }
        RingTerm::Product(l, r) => {
            validate(l)?;
            validate(r)?;
        }
        RingTerm::Polyquot { p, f } => {
            if !is_prime(*p) {
                return Err(Error::InvalidModulus(*p));
            }
            if f.len() < 2 || f.last().map(|c| c % p) != Some(1) {
                return Err(Error::NonMonicPolynomial(f.clone()));
            }
        }
        RingTerm::Truncated { p, vars, degree } => {
            if !is_prime(*p) {
                return Err(Error::InvalidModulus(*p));
            }
            if *vars == 0 || *degree == 0 {
                return Err(Error::Validation("truncated ring needs vars >= 1 and degree >= 1".into()));
            }
        }
    }
    Ok(())
}

struct RawTables {
    size: usize,
    one: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    labels: Vec<String>,
}

fn raw_tables(term: &RingTerm) -> RawTables {
    match term {
        RingTerm::Zmod(n) => {
            let n = *n as usize;
            let mut add = vec![0u32; n * n];
            let mut mul = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    add[a * n + b] = ((a + b) % n) as u32;
                    mul[a * n + b] = ((a * b) % n) as u32;
                }
            }
            RawTables { size: n, one: 1 % n, add, mul, labels: (0..n).map(|a| a.to_string()).collect() }
        }
        RingTerm::Product(l, r) => {
            let l = raw_tables(l);
            let r = raw_tables(r);
            let (nl, nr) = (l.size, r.size);
            let n = nl * nr;
            let mut add = vec![0u32; n * n];
            let mut mul = vec![0u32; n * n];
            for a in 0..n {
                let (a1, a2) = (a / nr, a % nr);
                for b in 0..n {
                    let (b1, b2) = (b / nr, b % nr);
                    add[a * n + b] = (l.add[a1 * nl + b1] * nr as u32) + r.add[a2 * nr + b2];
                    mul[a * n + b] = (l.mul[a1 * nl + b1] * nr as u32) + r.mul[a2 * nr + b2];
                }
            }
            let labels = (0..n)
                .map(|a| format!("({},{})", l.labels[a / nr], r.labels[a % nr]))
                .collect();
            RawTables { size: n, one: l.one * nr + r.one, add, mul, labels }
        }
        RingTerm::Polyquot { p, f } => {
            let p = *p as usize;
            let f: Vec<usize> = f.iter().map(|&c| c as usize % p).collect();
            let d = f.len() - 1;
            let basis_mul = |x: &[usize], y: &[usize]| -> Vec<usize> {
                let mut prod = vec![0usize; 2 * d - 1];
                for (i, &xi) in x.iter().enumerate() {
                    for (j, &yj) in y.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + xi * yj) % p;
                    }
                }
                for i in (d..prod.len()).rev() {
                    let c = prod[i];
                    if c != 0 {
                        for (j, &fj) in f.iter().enumerate().take(d) {
                            let k = i - d + j;
                            prod[k] = (prod[k] + (p - c) * fj % p) % p;
                        }
                        prod[i] = 0;
                    }
                }
                prod.truncate(d);
                prod
            };
            coefficient_ring(p, d, basis_mul, |c| poly_label_usize(c, p, "x"))
        }
        RingTerm::Truncated { p, vars, degree } => {
            let p = *p as usize;
            let monos = truncated_monomials(*vars, *degree);
            let k = monos.len();
            let index: HashMap<Vec<u32>, usize> =
                monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
            let basis_mul = |x: &[usize], y: &[usize]| -> Vec<usize> {
                let mut out = vec![0usize; k];
                for (i, &xi) in x.iter().enumerate() {
                    if xi == 0 {
                        continue;
                    }
                    for (j, &yj) in y.iter().enumerate() {
                        if yj == 0 {
                            continue;
                        }
                        let m: Vec<u32> = monos[i].iter().zip(&monos[j]).map(|(a, b)| a + b).collect();
                        if let Some(&t) = index.get(&m) {
                            out[t] = (out[t] + xi * yj) % p;
                        }
                    }
                }
                out
            };
            let nv = *vars as usize;
            let label = |c: &[usize]| -> String {
                let mut terms = Vec::new();
                for (i, &ci) in c.iter().enumerate().rev() {
                    if ci == 0 {
                        continue;
                    }
                    let mono: String = monos[i]
                        .iter()
                        .enumerate()
                        .filter(|(_, &e)| e > 0)
                        .map(|(v, &e)| {
                            if e == 1 {
                                var_name(v, nv)
                            } else {
                                format!("{}^{e}", var_name(v, nv))
                            }
                        })
                        .collect();
                    terms.push(match (ci, mono.is_empty()) {
                        (_, true) => ci.to_string(),
                        (1, false) => mono,
                        (_, false) => format!("{ci}{mono}"),
                    });
                }
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join("+")
                }
            };
            coefficient_ring(p, k, basis_mul, label)
        }
    }
}

/// Ring whose elements are coefficient vectors of length `dim` over `F_p`,
/// indexed base `p` with coordinate 0 least significant.
fn coefficient_ring(
    p: usize,
    dim: usize,
    vec_mul: impl Fn(&[usize], &[usize]) -> Vec<usize>,
    label: impl Fn(&[usize]) -> String,
) -> RawTables {
    let n = p.pow(dim as u32);
    let decode = |mut a: usize| -> Vec<usize> {
        let mut c = vec![0usize; dim];
        for slot in c.iter_mut() {
            *slot = a % p;
            a /= p;
        }
        c
    };
    let encode = |c: &[usize]| -> usize { c.iter().rev().fold(0, |acc, &ci| acc * p + ci) };
    let coords: Vec<Vec<usize>> = (0..n).map(decode).collect();
    let mut add = vec![0u32; n * n];
    let mut mul = vec![0u32; n * n];
    for a in 0..n {
        for b in a..n {
            let s: Vec<usize> = coords[a].iter().zip(&coords[b]).map(|(x, y)| (x + y) % p).collect();
            let s = encode(&s) as u32;
            let m = encode(&vec_mul(&coords[a], &coords[b])) as u32;
            add[a * n + b] = s;
            add[b * n + a] = s;
            mul[a * n + b] = m;
            mul[b * n + a] = m;
        }
    }
    let labels = coords.iter().map(|c| label(c)).collect();
    RawTables { size: n, one: 1, add, mul, labels }
}

/// Monomials of total degree `< degree` in `vars` variables, ordered by
/// degree and then reverse-lexicographically on exponent vectors.
fn truncated_monomials(vars: u32, degree: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for total in 0..degree {
        let mut level = Vec::new();
        compositions(vars as usize, total, &mut Vec::new(), &mut level);
        level.sort_by(|a, b| b.cmp(a));
        out.extend(level);
    }
    out
}

fn compositions(parts: usize, total: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if parts == 1 {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for first in 0..=total {
        prefix.push(first);
        compositions(parts - 1, total - first, prefix, out);
        prefix.pop();
    }
}

fn var_name(i: usize, count: usize) -> String {
    const NAMES: [&str; 4] = ["x", "y", "z", "w"];
    if count <= NAMES.len() {
        NAMES[i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

fn poly_label(coeffs: &[u64], p: u64, var: &str) -> String {
    let c: Vec<usize> = coeffs.iter().map(|&c| (c % p) as usize).collect();
    poly_label_usize(&c, p as usize, var)
}

fn poly_label_usize(coeffs: &[usize], _p: usize, var: &str) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        terms.push(match (c, mono.is_empty()) {
            (_, true) => c.to_string(),
            (1, false) => mono,
            (_, false) => format!("{c}{mono}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zmod_sizes_and_axioms() {
        let r = FiniteRing::zmod(12).unwrap();
        assert_eq!(r.size(), 12);
        assert_eq!(r.mul(3, 4), 0);
        assert_eq!(r.neg(5), 7);
        r.check_axioms().unwrap();
    }

    #[test]
    fn product_is_componentwise() {
        let r = FiniteRing::build(&RingTerm::product(RingTerm::zmod(2), RingTerm::zmod(2))).unwrap();
        assert_eq!(r.size(), 4);
        assert_eq!(r.one(), 3);
        // (1,0) * (0,1) = 0
        assert_eq!(r.mul(2, 1), 0);
        assert_eq!(r.label(2), "(1,0)");
        r.check_axioms().unwrap();
    }

    #[test]
    fn dual_numbers_have_square_zero_x() {
        let r = FiniteRing::build(&RingTerm::polyquot(2, &[0, 0, 1])).unwrap();
        assert_eq!(r.size(), 4);
        let x = 2;
        assert_eq!(r.label(x), "x");
        assert_eq!(r.mul(x, x), 0);
        r.check_axioms().unwrap();
    }

    #[test]
    fn field_of_four_elements() {
        let r = FiniteRing::build(&RingTerm::polyquot(2, &[1, 1, 1])).unwrap();
        r.check_axioms().unwrap();
        assert!((1..4).all(|a| r.is_unit(a)));
    }

    #[test]
    fn truncated_square_zero_ring() {
        let r = FiniteRing::build(&RingTerm::truncated(2, 2, 2)).unwrap();
        assert_eq!(r.size(), 8);
        r.check_axioms().unwrap();
        let x = r.elements().find(|&a| r.label(a) == "x").unwrap();
        let y = r.elements().find(|&a| r.label(a) == "y").unwrap();
        assert_eq!(r.mul(x, y), 0);
        assert_eq!(r.mul(x, x), 0);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FiniteRing::zmod(1).unwrap_err(), Error::InvalidModulus(1));
        assert!(matches!(
            FiniteRing::build(&RingTerm::polyquot(2, &[1, 1, 0])),
            Err(Error::NonMonicPolynomial(_))
        ));
        assert!(matches!(FiniteRing::zmod(300), Err(Error::SizeCapExceeded { size: 300, cap: 256 })));
        assert!(FiniteRing::build_with_cap(&RingTerm::zmod(300), 512).is_ok());
    }

    #[test]
    fn ideals_of_z12() {
        let r = FiniteRing::zmod(12).unwrap();
        let gens: Vec<Vec<usize>> = r.ideals().iter().map(|i| i.generators()).collect();
        assert_eq!(gens, vec![vec![], vec![6], vec![4], vec![3], vec![2], vec![1]]);
    }

    #[test]
    fn spec_examples() {
        let r = FiniteRing::zmod(12).unwrap();
        let spec: Vec<String> = r.spec().iter().map(|p| p.to_string()).collect();
        assert_eq!(spec, vec!["(3)", "(2)"]);
        let d = FiniteRing::build(&RingTerm::polyquot(2, &[0, 0, 1])).unwrap();
        let spec: Vec<String> = d.spec().iter().map(|p| p.to_string()).collect();
        assert_eq!(spec, vec!["(x)"]);
        let f5 = FiniteRing::zmod(5).unwrap();
        assert_eq!(f5.spec().len(), 1);
        assert!(f5.spec()[0].is_zero());
    }
}
