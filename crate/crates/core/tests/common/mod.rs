//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's algorithms; the inputs are only read through plain data.

#![allow(dead_code)]

use std::collections::BTreeMap;

use sigma_noether::monomial::{Monomial, MonomialIdeal};

/// Variables and degrees of the truncated monomial universe.
pub const MAX_VAR: u32 = 30;
pub const MAX_DEGREE: u32 = 10;

/// Dense exponent vector indexed by variable, `0..=MAX_VAR`.
pub type Exps = [u32; MAX_VAR as usize + 1];

pub fn exps(m: &Monomial) -> Exps {
    let mut out = [0; MAX_VAR as usize + 1];
    for (v, e) in m.exponents() {
        assert!(v <= MAX_VAR, "oracle works below x{MAX_VAR}");
        out[v as usize] = e;
    }
    out
}

pub fn divides(a: &Exps, b: &Exps) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn times(a: &Exps, b: &Exps) -> Exps {
    let mut out = *a;
    for (o, y) in out.iter_mut().zip(b) {
        *o += y;
    }
    out
}

pub fn power(a: &Exps, n: u32) -> Exps {
    a.map(|e| e * n)
}

/// Generators of `I` with every family expanded up to `MAX_VAR`.
pub fn expand(i: &MonomialIdeal) -> Vec<Exps> {
    let mut out: Vec<Exps> = i.gens().iter().map(exps).collect();
    for f in i.families() {
        let mut v = f.start;
        while v <= MAX_VAR {
            let mut g = exps(&f.base);
            g[v as usize] += f.e;
            out.push(g);
            v += f.step;
        }
    }
    out
}

/// Family instances only, up to `MAX_VAR`, tagged with their variable.
pub fn family_instances(i: &MonomialIdeal, family: usize) -> Vec<(u32, Exps)> {
    let f = &i.families()[family];
    let mut out = Vec::new();
    let mut v = f.start;
    while v <= MAX_VAR {
        let mut g = exps(&f.base);
        g[v as usize] += f.e;
        out.push((v, g));
        v += f.step;
    }
    out
}

pub fn member(gens: &[Exps], m: &Exps) -> bool {
    gens.iter().any(|g| divides(g, m))
}

/// Every monomial of degree at most `deg` in the given variables.
pub fn monomials_in(vars: &[u32], deg: u32) -> Vec<Exps> {
    let mut out = vec![[0; MAX_VAR as usize + 1]];
    for &v in vars {
        let mut next = Vec::new();
        for m in &out {
            let used: u32 = m.iter().sum();
            for e in 0..=(deg - used) {
                let mut n = *m;
                n[v as usize] = e;
                next.push(n);
            }
        }
        out = next;
    }
    out
}

pub fn to_monomial(e: &Exps) -> Monomial {
    Monomial::from_exponents(e.iter().enumerate().filter(|(_, &x)| x > 0).map(|(v, &x)| (v as u32, x))).unwrap()
}

/// Truncated S-finiteness check for a certificate `(n, prefix)`: the prefix
/// lies in `I` and every expanded generator of `I·sⁿ` is divisible by it.
pub fn certificate_holds(i: &MonomialIdeal, s: &Monomial, n: u32, prefix: &[Monomial]) -> bool {
    let gens = expand(i);
    let p: Vec<Exps> = prefix.iter().map(exps).collect();
    let sn = power(&exps(s), n);
    p.iter().all(|q| member(&gens, q)) && gens.iter().all(|g| member(&p, &times(g, &sn)))
}

/// Truncated refutation for one `n`: the candidate prefix made of every
/// expanded generator on variables `≤ cut` misses some instance of
/// `I·sⁿ` on a variable in `(cut, MAX_VAR]`.
pub fn refuted_at(i: &MonomialIdeal, s: &Monomial, n: u32, cut: u32) -> bool {
    let sn = power(&exps(s), n);
    let prefix: Vec<Exps> = expand(i).into_iter().filter(|g| g.iter().skip(cut as usize + 1).all(|&e| e == 0)).collect();
    (0..i.families().len()).any(|k| {
        family_instances(i, k)
            .into_iter()
            .filter(|(v, _)| *v > cut)
            .any(|(_, g)| !member(&prefix, &times(&g, &sn)))
    })
}

/// Ideals of `Z/n` are `(d)` for divisors `d` of `n`.
pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Number of Gabriel filters on `Z/n` by scanning every set of ideals.
///
/// The ideal `(d)` is named by the divisor `d = gcd(d, n)`, so `(0)` is `n`.
/// `(d) ⊆ (e)` iff `e | d`, `(d) ∩ (e) = (lcm(d, e))` and
/// `((b) : x) = (b / gcd(b, x))`.
pub fn gabriel_filter_count_zmod(n: u64) -> usize {
    let ds = divisors(n);
    let lcm = |a: u64, b: u64| a / gcd(a, b) * b;
    let colon = |b: u64, x: u64| b / gcd(b, x);
    let elements = |a: u64| (0..n / a).map(move |k| k * a);
    let mut count = 0;
    for mask in 1u64..(1 << ds.len()) {
        let l: Vec<u64> = ds.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &d)| d).collect();
        let has = |d: u64| l.contains(&d);
        let upward = l.iter().all(|&d| ds.iter().all(|&e| d % e != 0 || has(e)));
        let meets = l.iter().all(|&a| l.iter().all(|&b| has(lcm(a, b))));
        let colons = l.iter().all(|&a| (0..n).all(|x| has(colon(a, x))));
        let gabriel = ds
            .iter()
            .all(|&b| has(b) || !l.iter().any(|&a| elements(a).all(|x| has(colon(b, x)))));
        if upward && meets && colons && gabriel {
            count += 1;
        }
    }
    count
}

pub fn distinct_prime_divisors(mut n: u64) -> u32 {
    let mut count = 0;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            count += 1;
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    count + u32::from(n > 1)
}

/// Prints a criterion line and records failures.
pub struct Criteria {
    failures: Vec<String>,
}

impl Criteria {
    pub fn new() -> Self {
        Criteria { failures: Vec::new() }
    }

    pub fn report(&mut self, id: &str, ok: bool, detail: impl AsRef<str>) {
        println!("{} {id}: {}", if ok { "PASS" } else { "FAIL" }, detail.as_ref());
        if !ok {
            self.failures.push(id.to_string());
        }
    }

    pub fn finish(self) {
        assert!(self.failures.is_empty(), "failing criteria: {:?}", self.failures);
    }
}

pub fn exponent_map(m: &Monomial) -> BTreeMap<u32, u32> {
    m.exponents().collect()
}
