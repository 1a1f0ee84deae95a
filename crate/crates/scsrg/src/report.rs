//! JSON renderings of core results and the run report envelope.
//!
//! Objects are `serde_json` maps, which keep keys sorted, so identical runs
//! produce identical bytes. Timings appear only when asked for.

use std::time::Duration;

use scsrg_core::algebra::{IdentityCheck, SchurCheck};
use scsrg_core::constructions::ConstructionReport;
use scsrg_core::graph::{Diameter, IntersectionArray, NotDistanceRegular, NotSrgReason, NotStronglyRegular};
use scsrg_core::iso::{AutomorphismScan, Fingerprint, IsoCertificate, SearchStats};
use scsrg_core::{ConnectionSet, GroupAutomorphism, SrgParams};
use serde_json::{json, Value};

pub const TOOL: &str = "scsrg";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Budget ran out; counts as not passing.
    Undecided,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Undecided => "undecided",
        }
    }
}

/// One named check that ran, with its evidence.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub status: Status,
    /// One line for the human-readable table.
    pub summary: String,
    pub details: Value,
    pub elapsed: Duration,
}

impl CheckOutcome {
    pub fn to_json(&self, timings: bool) -> Value {
        let mut v = json!({
            "check": self.name,
            "status": self.status.as_str(),
            "passed": self.status == Status::Pass,
            "summary": self.summary,
            "details": self.details,
        });
        if timings {
            v["elapsed_ms"] = json!(self.elapsed.as_secs_f64() * 1e3);
        }
        v
    }
}

/// The single JSON document a command prints.
pub fn run_report(command: &str, parameters: Value, extra: Vec<(&str, Value)>, checks: &[CheckOutcome], timings: bool) -> Value {
    let mut v = json!({
        "tool": TOOL,
        "version": VERSION,
        "command": command,
        "parameters": parameters,
        "passed": checks.iter().all(|c| c.status == Status::Pass),
    });
    for (k, x) in extra {
        v[k] = x;
    }
    if !checks.is_empty() {
        v["checks"] = Value::Array(checks.iter().map(|c| c.to_json(timings)).collect());
    }
    v
}

/// Aligned table for standard error.
pub fn table(checks: &[CheckOutcome]) -> String {
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(5).max(5);
    let mut out = format!("{:<width$}  {:<9}  {:>10}  summary\n", "check", "status", "time");
    for c in checks {
        out.push_str(&format!(
            "{:<width$}  {:<9}  {:>8.1}ms  {}\n",
            c.name,
            c.status.as_str().to_uppercase(),
            c.elapsed.as_secs_f64() * 1e3,
            c.summary
        ));
    }
    out
}

pub fn srg_params(p: &SrgParams) -> Value {
    json!({ "n": p.n, "k": p.k, "lambda": p.lambda, "mu": p.mu })
}

pub fn not_srg(e: &NotStronglyRegular) -> Value {
    let witness = match e.reason {
        NotSrgReason::Empty => json!({ "kind": "empty" }),
        NotSrgReason::Complete => json!({ "kind": "complete" }),
        NotSrgReason::Disconnected => json!({ "kind": "disconnected" }),
        NotSrgReason::Irregular { u, degree_u, v, degree_v } => json!({
            "kind": "irregular",
            "vertices": [u, v],
            "degrees": [degree_u, degree_v],
        }),
        NotSrgReason::CommonNeighbors { adjacent, first, first_count, second, second_count } => json!({
            "kind": "common-neighbors",
            "adjacent": adjacent,
            "pairs": [[first.0, first.1], [second.0, second.1]],
            "counts": [first_count, second_count],
        }),
    };
    json!({ "message": e.to_string(), "witness": witness })
}

pub fn intersection_array(ia: &IntersectionArray) -> Value {
    json!({ "b": ia.b, "c": ia.c, "text": ia.to_string(), "diameter": ia.diameter() })
}

pub fn not_dr(e: &NotDistanceRegular) -> Value {
    let witness = match *e {
        NotDistanceRegular::Disconnected => json!({ "kind": "disconnected" }),
        NotDistanceRegular::Eccentricity { vertex, eccentricity, expected } => json!({
            "kind": "eccentricity",
            "vertex": vertex,
            "found": eccentricity,
            "expected": expected,
        }),
        NotDistanceRegular::NonConstant { is_b, distance, pair, found, expected } => json!({
            "kind": if is_b { "b" } else { "c" },
            "distance": distance,
            "pair": [pair.0, pair.1],
            "found": found,
            "expected": expected,
        }),
    };
    json!({ "message": e.to_string(), "witness": witness })
}

pub fn diameter(d: Diameter) -> Value {
    match d {
        Diameter::Finite(x) => json!(x),
        Diameter::Disconnected => json!("infinite"),
    }
}

pub fn identity(c: &IdentityCheck) -> Value {
    json!({
        "identity": c.identity,
        "holds": c.holds,
        "witness": c.witness.as_ref().map(|w| json!({
            "index": w.index,
            "element": w.element.residues(),
            "found": w.found,
            "expected": w.expected,
        })),
        "precondition": c.precondition,
    })
}

pub fn schur(c: &SchurCheck) -> Value {
    let mut v = identity(&c.check);
    v["structure_constants"] = json!(c.constants);
    v["failing_product"] = json!(c.failing_product.map(|(a, b)| [a, b]));
    v
}

pub fn automorphism(a: &GroupAutomorphism) -> Value {
    json!(a.images().iter().map(|g| g.residues().to_vec()).collect::<Vec<_>>())
}

pub fn certificate(c: &IsoCertificate) -> Value {
    match c {
        IsoCertificate::GroupAutomorphism { automorphism: a, permutation } => json!({
            "kind": c.kind(),
            "generator_images": automorphism(a),
            "permutation": permutation,
        }),
        IsoCertificate::VertexBijection { permutation } => json!({ "kind": c.kind(), "permutation": permutation }),
        IsoCertificate::InvariantRefutation { invariant, left, right } => json!({
            "kind": c.kind(),
            "invariant": invariant,
            "graph": left,
            "complement": right,
        }),
        IsoCertificate::SearchExhausted => json!({ "kind": c.kind() }),
    }
}

pub fn stats(s: &SearchStats) -> Value {
    json!({ "nodes": s.nodes, "leaves": s.leaves, "refinements": s.refinements, "max_depth": s.max_depth })
}

pub fn scan(s: &AutomorphismScan) -> Value {
    json!({ "scanned": s.scanned, "found": s.found.as_ref().map(automorphism) })
}

pub fn fingerprint(f: &Fingerprint) -> Value {
    json!({
        "n": f.n,
        "degrees": f.degrees.iter().map(|&(d, m)| json!({ "degree": d, "count": m })).collect::<Vec<_>>(),
        "srg": f.srg.as_ref().map(srg_params),
        "triangles": f.triangles,
        "four_cliques": f.four_cliques,
        "ranks": f.ranks.iter().map(|&(p, a, b)| json!({ "p": p, "rank_a": a, "rank_a_plus_i": b })).collect::<Vec<_>>(),
        "distance_distribution": f.distances.iter().map(|(d, m)| json!({ "counts": d, "vertices": m })).collect::<Vec<_>>(),
    })
}

pub fn connection_set(s: &ConnectionSet) -> Value {
    json!({
        "group": s.group().to_string(),
        "size": s.len(),
        "elements": s.elements().map(|g| g.residues().to_vec()).collect::<Vec<_>>(),
    })
}

pub fn construction(r: &ConstructionReport) -> Value {
    let mut v = json!({
        "family": r.family.name(),
        "p": r.p,
        "r": r.r,
        "order": r.q,
        "t": r.t,
        "connection_set": connection_set(&r.connection_set),
    });
    if let Some(f) = &r.field {
        v["field"] = json!({
            "characteristic": f.p,
            "degree": f.r,
            "modulus": f.modulus,
            "primitive": f.primitive.as_ref().map(|e| e.coeffs().to_vec()),
        });
    }
    if let Some(d) = &r.davis {
        let gens = |g: &[scsrg_core::GroupElement]| g.iter().map(|x| x.residues().to_vec()).collect::<Vec<_>>();
        v["davis"] = json!({
            "c_generators": gens(&d.c_generators),
            "d_generators": gens(&d.d_generators),
            "d_trailing_range": [d.d_literal_range.0, d.d_literal_range.1],
            "d_trailing_required": d.d_trailing_required,
            "c_size": d.c_size,
            "d_size": d.d_size,
        });
    }
    v
}
