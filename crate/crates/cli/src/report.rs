//! Rendering of check reports: versioned JSON, a markdown table, and plain
//! lines for terminals.

use serde::Serialize;

use crate::checks::{CheckReport, Verdict};

#[derive(Serialize)]
struct Envelope<'a> {
    schema: u32,
    checks: &'a [CheckReport],
    passed: usize,
    failed: usize,
}

/// JSON with stable key order. With `stable` set, runtimes are zeroed so
/// that identical inputs yield byte-identical output.
pub fn to_json(reports: &[CheckReport], stable: bool) -> String {
    let owned: Vec<CheckReport>;
    let view: &[CheckReport] = if stable {
        owned = reports
            .iter()
            .cloned()
            .map(|mut r| {
                r.runtime_ms = 0;
                r
            })
            .collect();
        &owned
    } else {
        reports
    };
    let envelope = Envelope {
        schema: 1,
        checks: view,
        passed: count(reports, Verdict::Pass),
        failed: count(reports, Verdict::Fail),
    };
    serde_json::to_string_pretty(&envelope).expect("serializable report")
}

pub fn to_markdown(reports: &[CheckReport]) -> String {
    let mut out = String::from("| claim | verdict | expected | computed | ms |\n|---|---|---|---|---|\n");
    for r in reports {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} |\n",
            r.claim_id,
            verdict_str(r.verdict),
            r.expected.replace('|', "\\|"),
            r.computed.replace('|', "\\|"),
            r.runtime_ms
        ));
    }
    out
}

pub fn to_human(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&format!(
            "{} {} ({} ms)\n    {}\n",
            verdict_str(r.verdict),
            r.claim_id,
            r.runtime_ms,
            r.computed
        ));
    }
    out.push_str(&format!(
        "{} passed, {} failed\n",
        count(reports, Verdict::Pass),
        count(reports, Verdict::Fail)
    ));
    out
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "PASS",
        Verdict::Fail => "FAIL",
    }
}

fn count(reports: &[CheckReport], v: Verdict) -> usize {
    reports.iter().filter(|r| r.verdict == v).count()
}
