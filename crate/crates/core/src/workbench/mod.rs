//! Declarative spec files, task dispatch and reports.
//!
//! A [`WorkbenchSpec`] names one task; [`execute`] runs it and returns a
//! [`Report`] together with the process exit code: 0 on success, 1 on a
//! theorem-suite counterexample (or a refuted or exhausted decision when
//! `expect_pass` is set), 2 on any input error.

mod render;
mod spec;

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

pub use render::render_text;
pub use spec::{parse_spec, ElementRef, FilterSpec, Format, ModuleSpec, TaskKind, WorkbenchSpec};

use crate::error::{Error, Result};
use crate::monomial::{
    almost_jansian_principal, cohen_scan, in_filter, s_finite_decide, saturation, verify_decision,
};
use crate::noether::{closure_colon_witness, sigma_principal_status, sweep_suite, tfg_certificate, verify_certificate};
use crate::ring::{catalogue, FiniteRing, Ideal, DEFAULT_SIZE_CAP};
use crate::torsion::{
    all_gabriel_filters, closure, is_closed, is_dense, jansian_status, meet_decomposition, spec_partition,
    torsion_submodule, GabrielFilter,
};

/// Largest ring the theorem suite accepts unless `--cap` says otherwise;
/// the suite builds the submodule lattice of `A²`.
pub const SUITE_DEFAULT_CAP: usize = 16;

pub const TOOL: &str = "sigma-noether";

/// Settings that the command line may override.
#[derive(Debug, Clone, Default)]
pub struct Options {
    pub task: Option<TaskKind>,
    pub cap: Option<usize>,
    /// Overrides the `max_n` part of the monomial budget.
    pub budget: Option<u32>,
    pub expect_pass: bool,
    /// Adds wall-clock time to the report, which makes it nondeterministic.
    pub timing: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub task: &'static str,
    pub results: Value,
    pub counterexamples: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Report {
    /// Pretty JSON with keys sorted at every level, so that parsing and
    /// re-printing gives the same bytes.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("reports are plain data");
        serde_json::to_string_pretty(&value).expect("values always print")
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub exit_code: i32,
}

/// Exit code for an error: every error the workbench can raise is an input
/// problem.
pub fn error_exit_code(_: &Error) -> i32 {
    2
}

struct TaskOutput {
    results: Value,
    counterexamples: Vec<String>,
    /// A negative but well-formed outcome, which fails only under
    /// `expect_pass`.
    negative: bool,
}

impl TaskOutput {
    fn plain(results: Value) -> Self {
        TaskOutput { results, counterexamples: Vec::new(), negative: false }
    }
}

/// Runs the spec's task.
pub fn execute(spec: &WorkbenchSpec, opts: &Options) -> Result<Outcome> {
    let task = spec.resolve_task(opts.task)?;
    let started = Instant::now();
    let out = match task {
        TaskKind::Enumerate => enumerate(spec, opts)?,
        TaskKind::Partition => partition(spec, opts)?,
        TaskKind::Closure => closure_task(spec, opts)?,
        TaskKind::Certify => certify(spec, opts)?,
        TaskKind::Suite => suite(spec, opts)?,
        TaskKind::MonomialDecide => monomial(spec, opts)?,
        TaskKind::Census => census(spec, opts)?,
    };
    let exit_code = if !out.counterexamples.is_empty() || (opts.expect_pass && out.negative) { 1 } else { 0 };
    let report = Report {
        tool: TOOL,
        version: crate::VERSION,
        task: task.name(),
        results: out.results,
        counterexamples: out.counterexamples,
        timing_ms: opts.timing.then(|| started.elapsed().as_millis()),
    };
    Ok(Outcome { report, exit_code })
}

fn cap(spec: &WorkbenchSpec, opts: &Options, default: usize) -> usize {
    opts.cap.or(spec.cap).unwrap_or(default)
}

fn ring(spec: &WorkbenchSpec, opts: &Options) -> Result<FiniteRing> {
    let term = spec.ring.as_ref().ok_or_else(|| Error::Validation("no ring given".into()))?;
    FiniteRing::build_with_cap(term, cap(spec, opts, DEFAULT_SIZE_CAP))
}

fn filter(spec: &WorkbenchSpec, ring: &FiniteRing) -> Result<GabrielFilter> {
    spec.filter.as_ref().ok_or_else(|| Error::Validation("no filter given".into()))?.build(ring)
}

fn labels(ideals: &[Ideal]) -> Vec<String> {
    ideals.iter().map(ToString::to_string).collect()
}

fn filter_summary(sigma: &GabrielFilter) -> Value {
    let j = jansian_status(sigma);
    json!({
        "members": labels(&sigma.members()),
        "least": sigma.least().to_string(),
        "jansian": j.is_jansian,
        "almost_jansian": j.is_almost_jansian,
    })
}

fn enumerate(spec: &WorkbenchSpec, opts: &Options) -> Result<TaskOutput> {
    let r = ring(spec, opts)?;
    let factors: Vec<Value> = r
        .local_decomposition()
        .iter()
        .map(|f| json!({"idempotent": r.label(f.idempotent), "prime": f.prime().to_string(), "size": f.ring().size()}))
        .collect();
    let mut results = json!({
        "ring": r.name(),
        "size": r.size(),
        "ideals": labels(&r.ideals()),
        "spec": labels(&r.spec()),
        "local_factors": factors,
    });
    if spec.filter.is_some() {
        results["filter"] = filter_summary(&filter(spec, &r)?);
    }
    Ok(TaskOutput::plain(results))
}

fn partition(spec: &WorkbenchSpec, opts: &Options) -> Result<TaskOutput> {
    let r = ring(spec, opts)?;
    let sigma = filter(spec, &r)?;
    let part = spec_partition(&sigma);
    let mut counterexamples = Vec::new();
    if let Err(e) = part.verify(&sigma) {
        counterexamples.push(format!("partition: {e}"));
    }
    let meet = meet_decomposition(&sigma);
    if meet != sigma {
        counterexamples.push(format!("meet decomposition gives {meet}"));
    }
    let results = json!({
        "ring": r.name(),
        "filter": sigma.to_string(),
        "K": labels(&part.k),
        "Z": labels(&part.z),
        "C": labels(&part.c),
        "meet_decomposition": meet.to_string(),
    });
    Ok(TaskOutput { results, counterexamples, negative: false })
}

fn closure_task(spec: &WorkbenchSpec, opts: &Options) -> Result<TaskOutput> {
    let r = ring(spec, opts)?;
    let sigma = filter(spec, &r)?;
    let mspec = spec.module.clone().unwrap_or_default();
    let m = mspec.build(&r)?;
    let n = spec.submodule_in(&m, mspec.rank())?;
    let cl = closure(&m, &n, &sigma)?;
    let h = closure_colon_witness(&m, &n, &sigma)?;
    let results = json!({
        "ring": r.name(),
        "filter": sigma.to_string(),
        "submodule": m.label_submodule(&n),
        "torsion_submodule": m.label_submodule(&torsion_submodule(&m, &sigma)?),
        "closure": m.label_submodule(&cl),
        "dense": is_dense(&m, &n, &sigma)?,
        "closed": is_closed(&m, &n, &sigma)?,
        "colon_witness": h.to_string(),
    });
    Ok(TaskOutput::plain(results))
}

fn certify(spec: &WorkbenchSpec, opts: &Options) -> Result<TaskOutput> {
    let r = ring(spec, opts)?;
    let sigma = filter(spec, &r)?;
    let mspec = spec.module.clone().unwrap_or_default();
    let m = mspec.build(&r)?;
    let n = spec.submodule_in(&m, mspec.rank())?;
    let cert = tfg_certificate(&m, &n, &sigma)?;
    let check = verify_certificate(&m, &n, &sigma, &cert)?;
    let mut results = json!({
        "ring": r.name(),
        "filter": sigma.to_string(),
        "submodule": m.label_submodule(&n),
        "certificate": {
            "generators": cert.generators.iter().map(|&g| m.ambient().label(g)).collect::<Vec<_>>(),
            "h": cert.filter_ideal.to_string(),
            "kind": cert.kind,
        },
        "verified": check.to_string(),
    });
    if mspec == ModuleSpec::Regular {
        let ideal = Ideal::from_elements(&r, &n.set().ones().collect::<Vec<_>>())?;
        let p = sigma_principal_status(&ideal, &sigma)?;
        results["sigma_principal"] = json!(p.sigma_principal.map(|a| r.label(a).to_string()));
        results["totally_principal"] = json!(p.totally_principal.map(|c| r.label(c.generators[0]).to_string()));
    }
    let counterexamples = if check.is_valid() { Vec::new() } else { vec![format!("certificate rejected: {check}")] };
    Ok(TaskOutput { results, counterexamples, negative: false })
}

fn suite(spec: &WorkbenchSpec, opts: &Options) -> Result<TaskOutput> {
    let limit = cap(spec, opts, SUITE_DEFAULT_CAP);
    let reports = match (&spec.ring, spec.catalogue) {
        (_, Some(max)) => {
            if max > limit {
                return Err(Error::SizeCapExceeded { size: max as u128, cap: limit });
            }
            sweep_suite(&catalogue(max))?
        }
        (Some(term), None) => {
            let r = FiniteRing::build_with_cap(term, limit)?;
            match &spec.filter {
                Some(_) => vec![crate::noether::theorem_suite(&r, &filter(spec, &r)?)?],
                None => crate::noether::ring_suite(&r)?,
            }
        }
        (None, None) => unreachable!("resolve_task requires ring or catalogue"),
    };
    let counterexamples: Vec<String> = reports
        .iter()
        .flat_map(|rep| {
            rep.theorems.iter().filter(|t| !t.passed).map(move |t| {
                format!("{} under {}: {}: {}", rep.ring, rep.filter, t.name, t.counterexample.as_deref().unwrap_or(""))
            })
        })
        .collect();
    let instances: u64 = reports.iter().flat_map(|r| &r.theorems).map(|t| t.instances_checked).sum();
    let results = json!({
        "pairs": reports.len(),
        "instances_checked": instances,
        "passed": counterexamples.is_empty(),
        "reports": reports,
    });
    Ok(TaskOutput { results, counterexamples, negative: false })
}

fn monomial(spec: &WorkbenchSpec, opts: &Options) -> Result<TaskOutput> {
    let ideal = spec.ideal.as_ref().ok_or_else(|| Error::Validation("no ideal given".into()))?;
    let s = spec.mult_set.as_ref().ok_or_else(|| Error::Validation("no mult_set given".into()))?;
    let mut budget = spec.budget.unwrap_or_default();
    if let Some(n) = opts.budget {
        budget.max_n = n;
    }
    let decision = s_finite_decide(ideal, s, budget)?;
    verify_decision(ideal, s, &decision)?;
    let mut negative = !decision.is_certified();
    let mut results = json!({
        "ideal": ideal.to_string(),
        "s": s.s.to_string(),
        "decision": decision,
        "in_filter": in_filter(ideal, s),
        "saturation": saturation(ideal, s).to_string(),
        "almost_jansian": almost_jansian_principal(s).holds,
    });
    if let Some(primes) = &spec.primes {
        let scan = cohen_scan(s, primes, budget)?;
        negative |= !scan.uncertified.is_empty();
        results["cohen"] = serde_json::to_value(&scan).expect("plain data");
    }
    Ok(TaskOutput { results, counterexamples: Vec::new(), negative })
}

fn census(spec: &WorkbenchSpec, opts: &Options) -> Result<TaskOutput> {
    let r = ring(spec, opts)?;
    let filters = all_gabriel_filters(&r);
    let results = json!({
        "ring": r.name(),
        "ideals": r.ideal_count(),
        "primes": r.spec().len(),
        "gabriel_filters": filters.len(),
        "filters": filters.iter().map(ToString::to_string).collect::<Vec<_>>(),
    });
    Ok(TaskOutput::plain(results))
}
