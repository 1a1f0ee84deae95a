//! Runs named checks on a graph, or on a connection set and its Cayley
//! graph, and turns each into a [`CheckOutcome`].

use std::time::{Duration, Instant};

use rayon::prelude::*;
use scsrg_core::algebra::{self, verify_mixed_product, verify_pds, verify_schur_partition, verify_srg_equation};
use scsrg_core::iso::{is_self_complementary, Fingerprint, IsoError, IsoOptions};
use scsrg_core::{ConnectionSet, DenseGraph, GroupAlgebraElement, SrgParams};
use serde_json::json;

use crate::report::{self, CheckOutcome, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Check {
    Srg,
    Dr,
    Pds,
    Schur,
    Selfcomp,
    Invariants,
}

impl Check {
    pub const ALL: [Check; 6] = [Check::Srg, Check::Dr, Check::Pds, Check::Schur, Check::Selfcomp, Check::Invariants];

    pub fn name(self) -> &'static str {
        match self {
            Check::Srg => "srg",
            Check::Dr => "dr",
            Check::Pds => "pds",
            Check::Schur => "schur",
            Check::Selfcomp => "selfcomp",
            Check::Invariants => "invariants",
        }
    }

    /// Group-algebra checks need the connection set, not just the graph.
    pub fn needs_connection_set(self) -> bool {
        matches!(self, Check::Pds | Check::Schur)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub max_nodes: u64,
    pub time_limit: Option<Duration>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_nodes: IsoOptions::default().max_nodes, time_limit: None }
    }
}

/// Runs `checks` (in parallel on the current rayon pool) and returns the
/// outcomes in the order given.
pub fn run_checks(checks: &[Check], graph: &DenseGraph, set: Option<&ConnectionSet>, limits: Limits) -> Vec<CheckOutcome> {
    checks.par_iter().map(|&c| run_check(c, graph, set, limits)).collect()
}

pub fn run_check(check: Check, graph: &DenseGraph, set: Option<&ConnectionSet>, limits: Limits) -> CheckOutcome {
    let start = Instant::now();
    let (status, summary, details) = match check {
        Check::Srg => srg(graph),
        Check::Dr => dr(graph),
        Check::Pds => pds(set.expect("pds needs a connection set")),
        Check::Schur => schur(set.expect("schur needs a connection set")),
        Check::Selfcomp => selfcomp(graph, set, limits),
        Check::Invariants => invariants(graph),
    };
    CheckOutcome { name: check.name().into(), status, summary, details, elapsed: start.elapsed() }
}

type Parts = (Status, String, serde_json::Value);

fn srg(g: &DenseGraph) -> Parts {
    match g.check_srg() {
        Ok(p) => {
            let e = p.eigenvalues();
            let details = json!({
                "parameters": report::srg_params(&p),
                "adjacency_identity": g.check_adjacency_identity(&p),
                "conference_t": p.conference_t(),
                "eigenvalue_data": { "k": e.k, "beta": e.beta, "delta": e.delta, "sqrt_delta": e.sqrt_delta },
                "diameter": report::diameter(g.diameter()),
            });
            (Status::Pass, format!("strongly regular {p}"), details)
        }
        Err(e) => (Status::Fail, e.to_string(), report::not_srg(&e)),
    }
}

fn dr(g: &DenseGraph) -> Parts {
    match g.intersection_array() {
        Ok(ia) => (Status::Pass, format!("distance-regular {ia}"), report::intersection_array(&ia)),
        Err(e) => (Status::Fail, e.to_string(), report::not_dr(&e)),
    }
}

/// Reads `λ` and `μ` off `S̄²` at the first element of `S` and the first
/// non-identity element outside it, then checks every identity that applies.
fn pds(s: &ConnectionSet) -> Parts {
    let group = s.group();
    let n = group.order();
    let sq = match GroupAlgebraElement::from_connection_set(s).mul(&GroupAlgebraElement::from_connection_set(s)) {
        Ok(x) => x,
        Err(e) => return (Status::Fail, e.to_string(), json!({ "error": e.to_string() })),
    };
    let lambda = s.indices().first().map_or(0, |&i| sq.coeff(i));
    let mu = (1..n).find(|&i| !s.contains_index(i)).map_or(0, |i| sq.coeff(i));
    let mut checks: Vec<(bool, &str, serde_json::Value)> = Vec::new();
    let mut run = |r: Result<algebra::IdentityCheck, algebra::AlgebraError>| match r {
        Ok(c) => checks.push((c.holds, c.identity, report::identity(&c))),
        Err(e) => checks.push((false, "error", json!({ "error": e.to_string() }))),
    };
    run(verify_pds(group, s.indices(), lambda, mu));
    let params = SrgParams::new(n, s.len(), lambda.max(0) as usize, mu.max(0) as usize);
    run(verify_srg_equation(s, &params));
    if n % 4 == 1 && 2 * s.len() + 1 == n {
        let t = (n - 1) / 4;
        run(verify_mixed_product(s, t));
        run(verify_srg_equation(&s.complement(), &SrgParams::conference(t)));
    }
    let holds = checks.iter().all(|c| c.0);
    let summary = if holds {
        format!("partial difference set with (lambda, mu) = ({lambda}, {mu})")
    } else {
        let failed: Vec<&str> = checks.iter().filter(|c| !c.0).map(|c| c.1).collect();
        format!("fails: {}", failed.join("; "))
    };
    let details = json!({
        "lambda": lambda,
        "mu": mu,
        "identities": checks.into_iter().map(|c| c.2).collect::<Vec<_>>(),
    });
    (if holds { Status::Pass } else { Status::Fail }, summary, details)
}

fn schur(s: &ConnectionSet) -> Parts {
    match verify_schur_partition(s) {
        Ok(c) if c.check.holds => (Status::Pass, "{e, S, N} spans a Schur ring".into(), report::schur(&c)),
        Ok(c) => (Status::Fail, "{e, S, N} is not closed under multiplication".into(), report::schur(&c)),
        Err(e) => (Status::Fail, e.to_string(), json!({ "error": e.to_string() })),
    }
}

fn selfcomp(g: &DenseGraph, set: Option<&ConnectionSet>, limits: Limits) -> Parts {
    let start = Instant::now();
    let expired = move || limits.time_limit.is_some_and(|t| start.elapsed() > t);
    let opts = IsoOptions { max_nodes: limits.max_nodes, interrupt: Some(&expired), ..IsoOptions::default() };
    match is_self_complementary(g, set, &opts) {
        Ok(r) => {
            let d = &r.decision;
            let scan = r.scan.as_ref().map(|s| match s {
                Ok(scan) => report::scan(scan),
                Err(e) => json!({ "error": e.to_string() }),
            });
            let details = json!({
                "self_complementary": d.isomorphic,
                "certificate": report::certificate(&d.certificate),
                "search": report::stats(&d.stats),
                "automorphism_scan": scan,
            });
            let summary = if d.isomorphic {
                format!("self-complementary ({})", d.certificate.kind())
            } else {
                format!("not self-complementary ({})", d.certificate.kind())
            };
            (if d.isomorphic { Status::Pass } else { Status::Fail }, summary, details)
        }
        Err(IsoError::Undecided(stats)) => (
            Status::Undecided,
            format!("undecided within budget after {} search nodes", stats.nodes),
            json!({ "self_complementary": null, "search": report::stats(&stats) }),
        ),
        Err(e) => (Status::Fail, e.to_string(), json!({ "error": e.to_string() })),
    }
}

fn invariants(g: &DenseGraph) -> Parts {
    let f = Fingerprint::of(g);
    let summary = format!("{} vertices, {} triangles, {} 4-cliques", f.n, f.triangles, f.four_cliques);
    let mut details = report::fingerprint(&f);
    details["edges"] = json!(g.edge_count());
    details["diameter"] = report::diameter(g.diameter());
    (Status::Pass, summary, details)
}
