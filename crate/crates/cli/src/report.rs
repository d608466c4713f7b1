//! JSON report documents: `{command, parameters, results, failures}`.

use num_complex::Complex64;
use psdiag::order::{Relation, RelationVerdict, Setting};
use psdiag::verify::{
    AuditFailure, AuditFailureKind, AuditSummary, Law, PosetReport, RelationName,
};
use psdiag::{DiagonalValue, Permutation};
use serde_json::{json, Value};

pub fn envelope(command: &str, parameters: Value, results: Value, failures: Vec<Value>) -> Value {
    json!({
        "command": command,
        "parameters": parameters,
        "results": results,
        "failures": failures,
    })
}

/// Finite numbers as JSON numbers; infinities and NaN as strings.
pub fn number(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        json!(x.to_string())
    }
}

fn complex(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

pub fn setting_name(s: Setting) -> &'static str {
    match s {
        Setting::ComplexAbs => "abs",
        Setting::ComplexPlain => "complex",
        Setting::RealPlain => "real",
    }
}

pub fn relation_name(r: Relation) -> &'static str {
    match r {
        Relation::AlwaysEqual => "AlwaysEqual",
        Relation::SigmaLeqTau => "SigmaLeqTau",
        Relation::TauLeqSigma => "TauLeqSigma",
        Relation::Incomparable => "Incomparable",
        Relation::Undefined => "Undefined",
    }
}

/// The verdict spelled out as an inequality.
pub fn meaning(r: Relation, s: Setting) -> String {
    let (a, b) = match s {
        Setting::ComplexAbs => ("|X_sigma|", "|X_tau|"),
        _ => ("X_sigma", "X_tau"),
    };
    let scope = match s {
        Setting::RealPlain => "every real PSD X",
        _ => "every complex PSD X",
    };
    match r {
        Relation::AlwaysEqual => format!("{a} = {b} for {scope}"),
        Relation::SigmaLeqTau => format!("{a} <= {b} for {scope}"),
        Relation::TauLeqSigma => format!("{b} <= {a} for {scope}"),
        Relation::Incomparable => {
            format!("{a} and {b} are unordered: each side is larger for some PSD X")
        }
        Relation::Undefined => format!("{a} or {b} can be non-real, so they are not ordered"),
    }
}

pub fn classify_results(
    verdict: &RelationVerdict,
    setting: Setting,
    bruhat: (bool, bool),
) -> Value {
    json!({
        "verdict": relation_name(verdict.relation),
        "meaning": meaning(verdict.relation, setting),
        "witness": verdict.witness.as_ref().map(|w| json!({
            "lower": w.lower.to_string(),
            "upper": w.upper.to_string(),
        })),
        "bruhat": { "sigma_leq_tau": bruhat.0, "tau_leq_sigma": bruhat.1 },
    })
}

pub fn diag_results(v: &DiagonalValue) -> Value {
    json!({
        "value": complex(v.to_complex()),
        "magnitude": v.magnitude(),
        "log_magnitude": number(v.log_magnitude),
        "phase": v.phase.map(complex),
        "is_real": v.is_real,
        "sign": if v.is_zero() { Some(0) } else { v.sign },
    })
}

fn relation_label(r: RelationName) -> &'static str {
    match r {
        RelationName::CycleLeq => "cycle_leq",
        RelationName::CycleEquiv => "cycle_equiv",
        RelationName::ClassLeq => "class_leq",
    }
}

fn law_label(l: Law) -> &'static str {
    match l {
        Law::Reflexive => "reflexive",
        Law::Symmetric => "symmetric",
        Law::Antisymmetric => "antisymmetric",
        Law::Transitive => "transitive",
        Law::RepresentativeMismatch => "representative_mismatch",
        Law::ClassOrderMismatch => "class_order_mismatch",
        Law::MemberWise => "member_wise",
    }
}

fn labels(perms: &[Permutation]) -> Vec<String> {
    perms.iter().map(ToString::to_string).collect()
}

pub fn poset_results(r: &PosetReport) -> Value {
    let classes: Vec<Value> = r
        .classes
        .iter()
        .map(|c| json!({ "rep": c.to_string(), "size": c.class_size() }))
        .collect();
    let order: Vec<Value> = r
        .relation
        .iter()
        .filter(|(a, b)| a != b)
        .map(|&(a, b)| json!([r.classes[a].to_string(), r.classes[b].to_string()]))
        .collect();
    json!({
        "n": r.n,
        "permutation_count": r.permutation_count,
        "class_count": r.class_count,
        "cycle_leq_pairs": r.cycle_leq_pairs,
        "class_leq_pairs": r.relation.len(),
        "classes": classes,
        "strict_class_order": order,
    })
}

pub fn poset_failures(r: &PosetReport) -> Vec<Value> {
    let axioms = r.axiom_failures.iter().map(|f| {
        json!({
            "kind": "axiom",
            "relation": relation_label(f.relation),
            "law": law_label(f.law),
            "members": labels(&f.members),
        })
    });
    let bruhat = r.bruhat_containment_failures.iter().map(|(lower, upper)| {
        json!({
            "kind": "bruhat_containment",
            "lower": lower.to_string(),
            "upper": upper.to_string(),
        })
    });
    axioms.chain(bruhat).collect()
}

pub fn audit_results(s: &AuditSummary) -> Value {
    json!({
        "pairs": s.pairs,
        "equal_pairs": s.equal_pairs,
        "comparable_pairs": s.comparable_pairs,
        "incomparable_pairs": s.incomparable_pairs,
        "witnesses_found": s.witnesses_found,
        "strict_gaps_found": s.strict_gaps_found,
        "monte_carlo_trials": s.monte_carlo_trials,
        "monte_carlo_violations": s.monte_carlo_violations,
        "max_slack_used": number(s.max_slack_used),
        "max_halvings": s.max_halvings,
    })
}

pub fn audit_failure(f: &AuditFailure) -> Value {
    let mut v = json!({ "sigma": f.sigma.to_string(), "tau": f.tau.to_string() });
    let extra = match &f.kind {
        AuditFailureKind::MonteCarlo { violations, trials } => {
            json!({ "kind": "monte_carlo", "violations": violations, "trials": trials })
        }
        AuditFailureKind::MissingWitness(e) => {
            json!({ "kind": "missing_witness", "error": e.to_string() })
        }
        AuditFailureKind::MissingStrictGap(e) => {
            json!({ "kind": "missing_strict_gap", "error": e.to_string() })
        }
        AuditFailureKind::WitnessNotPd { pq, epsilon } => {
            json!({ "kind": "witness_not_pd", "p": pq.0, "q": pq.1, "epsilon": epsilon })
        }
    };
    if let (Value::Object(map), Value::Object(more)) = (&mut v, extra) {
        map.extend(more);
    }
    v
}
