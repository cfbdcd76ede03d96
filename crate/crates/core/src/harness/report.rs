//! Verdict serialization: a JSON array, a CSV summary and plain text.
//!
//! Runtimes are included only on request so that repeated runs with the same
//! seed produce byte-identical reports.

use serde_json::Value;

use super::Verdict;

fn prepared(verdicts: &[Verdict], timings: bool) -> Vec<Verdict> {
    verdicts
        .iter()
        .cloned()
        .map(|mut v| {
            if !timings {
                v.runtime_ms = None;
            }
            v
        })
        .collect()
}

fn value_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn observables(v: &Verdict) -> String {
    v.observed
        .iter()
        .map(|(k, x)| format!("{k}={}", value_text(x)))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn to_json(verdicts: &[Verdict], timings: bool) -> String {
    let mut out = serde_json::to_string_pretty(&prepared(verdicts, timings)).expect("verdicts serialize");
    out.push('\n');
    out
}

/// Columns: `scenario, pass, observed, runtime_ms` (empty without timings).
pub fn to_csv(verdicts: &[Verdict], timings: bool) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["scenario", "pass", "observed", "runtime_ms"]).expect("in-memory write");
    for v in verdicts {
        let runtime = match (timings, v.runtime_ms) {
            (true, Some(ms)) => format!("{ms:.1}"),
            _ => String::new(),
        };
        w.write_record([v.scenario.as_str(), if v.pass { "true" } else { "false" }, &observables(v), &runtime])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn to_text(verdicts: &[Verdict], timings: bool) -> String {
    let mut out = String::new();
    for v in verdicts {
        let status = if v.pass { "PASS" } else { "FAIL" };
        out.push_str(&format!("{status} {} {}", v.scenario, observables(v)));
        if let (true, Some(ms)) = (timings, v.runtime_ms) {
            out.push_str(&format!(" ({ms:.1} ms)"));
        }
        out.push('\n');
        if let Some(w) = &v.witness {
            out.push_str(&format!("  witness: {} [{}]\n", w.detail, w.graphs.join(", ")));
        }
    }
    out
}
