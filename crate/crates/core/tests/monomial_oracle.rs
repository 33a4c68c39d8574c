//! Monomial ideal operations against brute-force expansion below x30.

mod common;

use common::*;
use proptest::prelude::*;
use sigma_noether::monomial::{
    in_filter, s_finite_decide, saturation, Budget, Decision, Monomial, MonomialIdeal, PrincipalMultSet, TailFamily,
};

fn m(s: &str) -> Monomial {
    Monomial::parse(s).unwrap()
}

fn small_monomial(max_var: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::btree_map(1..=max_var, 1..=3u32, 0..=2)
        .prop_map(|e| Monomial::from_exponents(e).unwrap())
}

/// Fixed variables in 1..=4, family starts in 5..=8, steps 1..=3.
fn ideal_strategy() -> impl Strategy<Value = MonomialIdeal> {
    let gens = prop::collection::vec(small_monomial(4), 0..=3);
    let fam = (small_monomial(4), 5..=8u32, 1..=3u32, 1..=2u32);
    let fams = prop::collection::vec(fam, 0..=2);
    (gens, fams).prop_map(|(g, fs)| {
        let families = fs.into_iter().map(|(b, s, st, e)| TailFamily::new(b, s, st, e).unwrap()).collect();
        MonomialIdeal::new(g, families).unwrap()
    })
}

/// Monomials of degree ≤ 10 on a scattered variable set, including far
/// tail variables.
fn probe_strategy() -> impl Strategy<Value = Monomial> {
    prop::collection::btree_map(prop::sample::select(vec![1u32, 2, 3, 4, 5, 6, 7, 9, 12, 17, 23, 29, 30]), 1..=3u32, 0..=4)
        .prop_filter("degree", |e| e.values().sum::<u32>() <= MAX_DEGREE)
        .prop_map(|e| Monomial::from_exponents(e).unwrap())
}

fn unit_s() -> impl Strategy<Value = Monomial> {
    prop::collection::btree_map(1..=6u32, 1..=2u32, 1..=2).prop_map(|e| Monomial::from_exponents(e).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn member_matches_expansion(i in ideal_strategy(), probe in probe_strategy()) {
        prop_assert_eq!(i.member(&probe), member(&expand(&i), &exps(&probe)));
    }

    #[test]
    fn contains_matches_expansion(i in ideal_strategy(), j in ideal_strategy()) {
        let gi = expand(&i);
        let oracle = expand(&j).iter().all(|g| member(&gi, g));
        prop_assert_eq!(i.contains(&j), oracle);
    }

    #[test]
    fn saturation_matches_expansion(i in ideal_strategy(), s in unit_s(), probe in probe_strategy()) {
        let sat = saturation(&i, &PrincipalMultSet::new(s.clone()));
        let gi = expand(&i);
        let p = exps(&probe);
        let se = exps(&s);
        let oracle = (0..=MAX_DEGREE).any(|n| member(&gi, &times(&p, &power(&se, n))));
        prop_assert_eq!(sat.member(&probe), oracle);
    }

    #[test]
    fn in_filter_matches_expansion(i in ideal_strategy(), s in unit_s()) {
        let gi = expand(&i);
        let se = exps(&s);
        let oracle = (0..=MAX_DEGREE).find(|&n| member(&gi, &power(&se, n)));
        prop_assert_eq!(in_filter(&i, &PrincipalMultSet::new(s)), oracle);
    }

    #[test]
    fn decisions_match_truncated_oracle(i in ideal_strategy(), s in unit_s()) {
        let set = PrincipalMultSet::new(s.clone());
        match s_finite_decide(&i, &set, Budget { max_n: 12, max_prefix: 64 }).unwrap() {
            Decision::Certified { n, prefix } => {
                prop_assert!(certificate_holds(&i, &s, n, &prefix));
                if n > 0 {
                    prop_assert!(refuted_at(&i, &s, n - 1, 20), "exponent {} is not minimal", n);
                }
            }
            Decision::Refuted { .. } => {
                for n in 0..=5 {
                    prop_assert!(refuted_at(&i, &s, n, 20));
                }
            }
            Decision::Exhausted { .. } => prop_assert!(false, "budget too small for generated ideals"),
        }
    }
}

#[test]
fn golden_decisions() {
    let x1 = PrincipalMultSet::new(m("x1"));
    let all = MonomialIdeal::family(TailFamily::new(Monomial::one(), 1, 1, 1).unwrap()).unwrap();
    let d = s_finite_decide(&all, &x1, Budget::default()).unwrap();
    assert_eq!(d, Decision::Certified { n: 1, prefix: vec![m("x1")] });
    assert!(certificate_holds(&all, &m("x1"), 1, &[m("x1")]));

    let from2 = MonomialIdeal::family(TailFamily::new(Monomial::one(), 2, 1, 1).unwrap()).unwrap();
    assert!(s_finite_decide(&from2, &x1, Budget::default()).unwrap().is_refuted());
    assert!((0..=5).all(|n| refuted_at(&from2, &m("x1"), n, 20)));
}

#[test]
fn golden_saturation() {
    let i = MonomialIdeal::finitely_generated(vec![m("x1^2*x2"), m("x1*x2^3")]);
    let sat = saturation(&i, &PrincipalMultSet::new(m("x2")));
    assert!(sat.same_ideal(&MonomialIdeal::finitely_generated(vec![m("x1")])));
    // the oracle agrees on every monomial of degree ≤ 6 in x1, x2, x3
    let gi = expand(&i);
    let y = exps(&m("x2"));
    for p in monomials_in(&[1, 2, 3], 6) {
        let oracle = (0..=MAX_DEGREE).any(|n| member(&gi, &times(&p, &power(&y, n))));
        assert_eq!(sat.member(&to_monomial(&p)), oracle);
    }
}
