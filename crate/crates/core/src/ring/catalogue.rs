use super::RingTerm;

/// The rings swept by the exhaustive suites, all of size `<= max_size`:
///
/// - `Z/n` for `2 <= n <= max_size`;
/// - `Z/a x Z/b` for `2 <= a <= b`, `ab <= max_size`;
/// - `F_p[x]/(f)` for every monic `f` of degree `>= 2` with `p^deg f <= max_size`;
/// - `F_2[x,y]/(x,y)^2` when `max_size >= 8`.
///
/// Several entries are isomorphic to each other; the duplication is kept
/// because the presentations exercise different table constructions.
pub fn catalogue(max_size: usize) -> Vec<RingTerm> {
    let mut out = Vec::new();
    for n in 2..=max_size as u64 {
        out.push(RingTerm::zmod(n));
    }
    for a in 2..=max_size as u64 {
        for b in a..=max_size as u64 {
            if a * b <= max_size as u64 {
                out.push(RingTerm::product(RingTerm::zmod(a), RingTerm::zmod(b)));
            }
        }
    }
    for p in [2u64, 3, 5, 7, 11, 13] {
        let mut deg = 2u32;
        while (p as u128).pow(deg) <= max_size as u128 {
            let count = p.pow(deg);
            for code in 0..count {
                let mut f = Vec::with_capacity(deg as usize + 1);
                let mut c = code;
                for _ in 0..deg {
                    f.push(c % p);
                    c /= p;
                }
                f.push(1);
                out.push(RingTerm::Polyquot { p, f });
            }
            deg += 1;
        }
    }
    if max_size >= 8 {
        out.push(RingTerm::truncated(2, 2, 2));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteRing;

    #[test]
    fn catalogue_rings_are_within_bounds_and_valid() {
        let cat = catalogue(12);
        assert!(cat.contains(&RingTerm::zmod(12)));
        assert!(cat.contains(&RingTerm::truncated(2, 2, 2)));
        for t in &cat {
            let r = FiniteRing::build(t).unwrap();
            assert!(r.size() <= 12, "{t}");
        }
        assert_eq!(catalogue(4).len(), 3 + 1 + 4);
    }
}
