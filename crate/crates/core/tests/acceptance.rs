//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the
//! process exits non-zero at the end if any criterion failed. Runs without
//! the test harness so the lines are never captured.

mod common;

use std::time::Instant;

use common::*;
use sigma_noether::monomial::{
    cohen_scan, s_finite_decide, saturation, Budget, CohenVerdict, Decision, Monomial, MonomialIdeal,
    PrincipalMultSet, TailFamily, VarPattern,
};
use sigma_noether::noether::{closure_colon_witness, ring_suite, sigma_principal_status, LatticeContext, SuiteReport};
use sigma_noether::ring::catalogue;
use sigma_noether::torsion::{all_gabriel_filters, gabriel_check, spec_partition, GabrielFilter};
use sigma_noether::workbench::{execute, parse_spec, Options};
use sigma_noether::{FiniteModule, FiniteRing, RingTerm};

struct RingRun {
    ring: FiniteRing,
    filters: Vec<GabrielFilter>,
    reports: Vec<SuiteReport>,
}

fn theorem_holds(runs: &[&RingRun], name: &str) -> (bool, u64, usize, Option<String>) {
    let mut instances = 0;
    let mut pairs = 0;
    let mut failure = None;
    for run in runs {
        for rep in &run.reports {
            let t = rep.theorem(name).expect("theorem present");
            instances += t.instances_checked;
            pairs += 1;
            if !t.passed && failure.is_none() {
                failure = Some(format!("{} under {}: {}", rep.ring, rep.filter, t.counterexample.clone().unwrap_or_default()));
            }
        }
    }
    (failure.is_none(), instances, pairs, failure)
}

fn census(c: &mut Criteria) {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in [4u64, 6, 8, 12, 30] {
        let ring = FiniteRing::zmod(n).unwrap();
        let ideals = ring.ideals();
        // every subset of the ideal lattice, judged by gabriel_check
        let mut scanned = 0;
        for mask in 1u64..(1 << ideals.len()) {
            let members: Vec<_> =
                ideals.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, a)| a.clone()).collect();
            if gabriel_check(&ring, &members).unwrap().is_empty() {
                scanned += 1;
            }
        }
        let enumerated = all_gabriel_filters(&ring).len();
        let oracle = gabriel_filter_count_zmod(n);
        let expected = 1usize << distinct_prime_divisors(n);
        ok &= scanned == expected && enumerated == expected && oracle == expected;
        parts.push(format!("Z/{n}: {scanned}/{enumerated}/{oracle} (2^ω = {expected})"));
    }
    ok &= all_gabriel_filters(&FiniteRing::zmod(12).unwrap()).len() == 4;
    c.report("C1 gabriel census", ok, parts.join(", "));
}

fn meet_oracle(runs: &[RingRun]) -> (bool, usize) {
    let mut checked = 0;
    for run in runs {
        let spec = run.ring.spec();
        for sigma in &run.filters {
            let k: Vec<_> = spec.iter().filter(|p| !sigma.contains(p)).collect();
            for a in run.ring.ideals() {
                let in_meet = k.iter().all(|p| !a.is_subset(p));
                if in_meet != sigma.contains(&a) {
                    return (false, checked);
                }
            }
            checked += 1;
        }
    }
    (true, checked)
}

fn closure_witness_direct(runs: &[&RingRun]) -> (bool, usize, Option<String>) {
    let mut count = 0;
    for run in runs {
        let modules = [FiniteModule::regular(&run.ring), FiniteModule::free(&run.ring, 2).unwrap()];
        for m in &modules {
            let lattice = LatticeContext::new(m);
            for sigma in &run.filters {
                for i in 0..lattice.len() {
                    let n = lattice.submodule(i);
                    if let Err(e) = closure_colon_witness(m, &n, sigma) {
                        return (false, count, Some(format!("{} under {sigma}: {e}", run.ring.name())));
                    }
                    count += 1;
                }
            }
        }
    }
    (true, count, None)
}

fn monomial_golden(c: &mut Criteria) {
    let m = |s: &str| Monomial::parse(s).unwrap();
    let x1 = PrincipalMultSet::new(m("x1"));
    let all = MonomialIdeal::family(TailFamily::new(Monomial::one(), 1, 1, 1).unwrap()).unwrap();
    let from2 = MonomialIdeal::family(TailFamily::new(Monomial::one(), 2, 1, 1).unwrap()).unwrap();
    let d1 = s_finite_decide(&all, &x1, Budget::default()).unwrap();
    let d2 = s_finite_decide(&from2, &x1, Budget::default()).unwrap();
    let ok1 = d1 == Decision::Certified { n: 1, prefix: vec![m("x1")] }
        && certificate_holds(&all, &m("x1"), 1, &[m("x1")])
        && refuted_at(&all, &m("x1"), 0, 20);
    let ok2 = d2.is_refuted() && (0..=5).all(|n| refuted_at(&from2, &m("x1"), n, 20));

    let i = MonomialIdeal::finitely_generated(vec![m("x1^2*x2"), m("x1*x2^3")]);
    let sat = saturation(&i, &PrincipalMultSet::new(m("x2")));
    let gi = expand(&i);
    let y = exps(&m("x2"));
    let ok3 = sat.same_ideal(&MonomialIdeal::finitely_generated(vec![m("x1")]))
        && monomials_in(&[1, 2, 3, 30], MAX_DEGREE).iter().all(|p| {
            let oracle = (0..=MAX_DEGREE).any(|n| member(&gi, &times(p, &power(&y, n))));
            sat.member(&to_monomial(p)) == oracle
        });
    c.report(
        "C7 monomial golden decisions",
        ok1 && ok2 && ok3,
        format!("⟨x1,x2,…⟩: {}, ⟨x2,x3,…⟩: {}, saturation: {sat}", d1.label(), d2.label()),
    );
}

fn cohen(c: &mut Criteria) {
    let x1 = PrincipalMultSet::new(Monomial::var(1));
    let primes = [VarPattern::finite([1]), VarPattern::finite([2]), VarPattern::tail(2)];
    let report = cohen_scan(&x1, &primes, Budget::default()).unwrap();
    let verdict_ok = report.verdict == CohenVerdict::NotTotallyNoetherian { prime: VarPattern::tail(2) };
    // ⟨x_i² : i ≥ 2⟩ is not prime and is refuted on its own
    let squares = MonomialIdeal::family(TailFamily::new(Monomial::one(), 2, 1, 2).unwrap()).unwrap();
    let independent = s_finite_decide(&squares, &x1, Budget::default()).unwrap().is_refuted()
        && (0..=5).all(|n| refuted_at(&squares, &Monomial::var(1), n, 20));
    let cross = report.cross_check.as_ref().is_some_and(|x| x.agrees && x.ideal.same_ideal(&squares));
    c.report(
        "C8 cohen consistency",
        verdict_ok && independent && cross,
        format!("verdict {}, independent refutation of {squares}: {independent}", verdict_label(&report.verdict)),
    );
}

fn verdict_label(v: &CohenVerdict) -> String {
    match v {
        CohenVerdict::NotTotallyNoetherian { prime } => format!("not totally noetherian via {prime}"),
        other => format!("{other:?}"),
    }
}

fn kaplansky(c: &mut Criteria) {
    let ring = FiniteRing::build(&RingTerm::truncated(2, 2, 2)).unwrap();
    let mut ok = ring.size() == 8;
    let mut lines = Vec::new();
    for sigma in all_gabriel_filters(&ring) {
        let pir = ring.ideals().iter().all(|a| sigma_principal_status(a, &sigma).unwrap().is_totally_principal());
        let k = spec_partition(&sigma).k;
        let primes = k.iter().all(|p| sigma_principal_status(p, &sigma).unwrap().is_totally_principal());
        ok &= pir == primes;
        lines.push(format!("{sigma}: {pir}⇔{primes}"));
    }
    let suite_ok = ring_suite(&ring).unwrap().iter().all(|r| r.theorem("kaplansky").unwrap().passed);
    c.report("C9 kaplansky", ok && suite_ok, format!("{} on {} elements; {}", ring.name(), ring.size(), lines.join(", ")));
}

fn determinism(c: &mut Criteria) {
    let spec = parse_spec(r#"{"task": "suite", "catalogue": 12}"#).unwrap();
    let a = execute(&spec, &Options::default()).unwrap();
    let b = execute(&spec, &Options::default()).unwrap();
    let (ja, jb) = (a.report.to_json(), b.report.to_json());
    c.report(
        "C10 determinism",
        ja == jb && a.exit_code == 0,
        format!("{} bytes, identical: {}", ja.len(), ja == jb),
    );
}

fn main() {
    let started = Instant::now();
    let mut c = Criteria::new();

    census(&mut c);

    let runs: Vec<RingRun> = catalogue(16)
        .iter()
        .map(|t| {
            let ring = FiniteRing::build(t).unwrap();
            let filters = all_gabriel_filters(&ring);
            let reports = ring_suite(&ring).unwrap();
            RingRun { ring, filters, reports }
        })
        .collect();
    let all: Vec<&RingRun> = runs.iter().collect();
    let small: Vec<&RingRun> = runs.iter().filter(|r| r.ring.size() <= 12).collect();

    let (t_ok, t_n, pairs, t_fail) = theorem_holds(&all, "torsion_class");
    let (f_ok, f_n, _, f_fail) = theorem_holds(&all, "torsionfree_class");
    c.report(
        "C2 torsion and torsionfree classes",
        t_ok && f_ok,
        format!("{} rings, {pairs} filters, {t_n}+{f_n} instances{}", runs.len(), t_fail.or(f_fail).map(|f| format!("; {f}")).unwrap_or_default()),
    );

    let (m_ok, m_n, _, m_fail) = theorem_holds(&all, "meet_decomposition");
    let (o_ok, o_n) = meet_oracle(&runs);
    c.report(
        "C3 meet decomposition",
        m_ok && o_ok,
        format!("{m_n} suite instances, {o_n} filters against the direct intersection{}", m_fail.map(|f| format!("; {f}")).unwrap_or_default()),
    );

    let (w_ok, w_n, _, w_fail) = theorem_holds(&small, "closure_colon_witness");
    let (d_ok, d_n, d_fail) = closure_witness_direct(&small);
    c.report(
        "C4 closure colon witness",
        w_ok && d_ok,
        format!("{} rings, {d_n} direct searches, {w_n} suite instances{}", small.len(), w_fail.or(d_fail).map(|f| format!("; {f}")).unwrap_or_default()),
    );

    let (s_ok, s_n, _, s_fail) = theorem_holds(&small, "sigma_max_triangle");
    c.report("C5 equivalence triangle", s_ok, format!("{s_n} instances{}", s_fail.map(|f| format!("; {f}")).unwrap_or_default()));

    let (q_ok, q_n, _, q_fail) = theorem_holds(&small, "quotient_transfer");
    c.report("C6 quotient transfer", q_ok, format!("{q_n} instances{}", q_fail.map(|f| format!("; {f}")).unwrap_or_default()));

    monomial_golden(&mut c);
    cohen(&mut c);
    kaplansky(&mut c);
    determinism(&mut c);

    println!("elapsed: {:.1}s", started.elapsed().as_secs_f64());
    c.finish();
}
