use serde_json::{json, Value};
use sesqui_core::invariants::FVector;
use sesqui_core::pipeline::{Outcome, PipelineReport};
use sesqui_core::search::TopologyVerdict;
use sesqui_core::{Dyadic, Face};

pub fn dyadic_json(x: &Dyadic) -> Value {
    json!({ "exact": x.to_string(), "decimal": x.to_decimal_string() })
}

/// Exact value first, decimal annotation second.
pub fn dyadic_text(x: &Dyadic) -> String {
    format!("{x} ({})", x.to_decimal_string())
}

pub fn f_vector_json(f: &FVector) -> Value {
    json!(f.entries())
}

pub fn face_json(f: &Face) -> Value {
    json!(f.vertices().iter().map(|v| v.as_str()).collect::<Vec<_>>())
}

pub fn topology_json(t: &TopologyVerdict) -> Value {
    json!({ "verdict": t.name(), "reason": t.reason() })
}

pub fn outcome_name(o: &Outcome) -> &'static str {
    match o {
        Outcome::Confirmed => "confirmed",
        Outcome::HypothesisFailed { .. } => "hypothesis-failed",
        Outcome::NotEstablished { .. } => "hypothesis-not-established",
        Outcome::Violated => "violated",
    }
}

fn or_not_reached(s: Option<String>) -> String {
    s.unwrap_or_else(|| "not reached".to_string())
}

pub fn report_text(r: &PipelineReport) -> String {
    let mut lines = Vec::new();
    lines.push(format!(
        "input: dimension {}, f-vector {}",
        r.input_dim,
        or_not_reached(r.input_f_vector.as_ref().map(ToString::to_string))
    ));
    lines.push(format!(
        "certificate: {}",
        or_not_reached(r.certificate.as_ref().map(|c| format!(
            "{}, {}, {}, {} nodes",
            c.kind,
            if c.searched { "found by search" } else { "supplied" },
            if c.verified { "verified" } else { "rejected" },
            c.nodes
        )))
    ));
    lines.push(format!(
        "topology: {}",
        or_not_reached(r.topology.as_ref().map(|t| format!("{} ({})", t.name(), t.reason())))
    ));
    lines.push(format!(
        "schedule: {}, {}",
        if r.barycentric { "barycentric" } else { "explicit" },
        or_not_reached(r.schedule_len.map(|n| format!("{n} faces")))
    ));
    lines.push(format!(
        "subdivision: f-vector {}",
        or_not_reached(r.subdivision_f_vector.as_ref().map(ToString::to_string))
    ));
    lines.push(format!("kappa: {}", or_not_reached(r.kappa.as_ref().map(dyadic_text))));
    lines.push(format!("flag: {}", or_not_reached(r.flag.map(|f| if f { "yes" } else { "no" }.to_string()))));
    lines.push(format!(
        "sign rule: {}",
        match &r.verdict {
            Some(v) => format!(
                "d = {}, requires kappa {} 0: {}",
                v.d,
                if v.expects_nonnegative { ">=" } else { "<=" },
                if v.sign_rule_holds { "pass" } else { "fail" }
            ),
            None => "no verdict (hypotheses not established)".to_string(),
        }
    ));
    lines.push(match &r.outcome {
        Outcome::Confirmed => "outcome: confirmed".to_string(),
        Outcome::HypothesisFailed { hypothesis, detail } => {
            format!("outcome: hypothesis failed: {}: {detail}", hypothesis.name())
        }
        Outcome::NotEstablished { hypothesis, detail } => {
            format!("outcome: hypothesis not established: {}: {detail}", hypothesis.name())
        }
        Outcome::Violated => "outcome: VIOLATED: every hypothesis holds and the sign rule fails".to_string(),
    });
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

pub fn report_json(r: &PipelineReport) -> Value {
    let (hypothesis, detail) = match &r.outcome {
        Outcome::HypothesisFailed { hypothesis, detail } | Outcome::NotEstablished { hypothesis, detail } => {
            (Some(hypothesis.name()), Some(detail.clone()))
        }
        _ => (None, None),
    };
    json!({
        "input": {
            "dimension": r.input_dim.finite(),
            "f_vector": r.input_f_vector.as_ref().map(f_vector_json),
        },
        "certificate": r.certificate.as_ref().map(|c| json!({
            "kind": c.kind.name(),
            "searched": c.searched,
            "verified": c.verified,
            "nodes": c.nodes,
        })),
        "topology": r.topology.as_ref().map(topology_json),
        "schedule": {
            "barycentric": r.barycentric,
            "length": r.schedule_len,
        },
        "subdivision": {
            "f_vector": r.subdivision_f_vector.as_ref().map(f_vector_json),
            "kappa": r.kappa.as_ref().map(dyadic_json),
            "flag": r.flag,
        },
        "verdict": r.verdict.as_ref().map(|v| json!({
            "d": v.d,
            "expects_nonnegative": v.expects_nonnegative,
            "sign_rule_holds": v.sign_rule_holds,
        })),
        "outcome": outcome_name(&r.outcome),
        "hypothesis": hypothesis,
        "detail": detail,
    })
}
