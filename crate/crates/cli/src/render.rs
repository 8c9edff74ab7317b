//! JSON and text rendering. Output depends only on the query, never on scheduling.

use cuspfam::combinatorics::Bipartition;
use cuspfam::cuspidal::{LeafPoset, RigidMode};
use cuspfam::exactalg::{CherednikParameter, CoxeterGroup};
use cuspfam::families::{Family, FamilyPartition, Method};
use cuspfam::symbols::BSymbol;
use cuspfam::verify::CriterionReport;
use cuspfam::IrrLabel;
use serde_json::{json, Value};

use crate::query::FamiliesOutput;
use crate::Format;

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn header(group: &CoxeterGroup, param: &CherednikParameter) -> serde_json::Map<String, Value> {
    let mut obj = group.json_fields();
    obj.insert("param".into(), param.to_json());
    obj
}

fn family_line(f: &Family) -> String {
    let mut line = f.to_string();
    if let Some(k) = f.k_invariant {
        line.push_str(&format!("  k={k}"));
    }
    if let Some(leaf) = &f.leaf_label {
        line.push_str(&format!("  leaf={leaf}"));
    }
    if f.cuspidal == Some(true) {
        line.push_str("  cuspidal");
    }
    line
}

fn partition_json(fp: &FamilyPartition, generic: bool) -> Value {
    let mut v = fp.to_json();
    if generic {
        v["param"] = json!("generic");
    }
    v
}

pub fn families(out: &FamiliesOutput, format: Format) -> String {
    match format {
        Format::Json => match (out.partitions.as_slice(), out.equal()) {
            ([fp], _) => pretty(&partition_json(fp, out.generic)),
            (all, equal) => {
                let mut obj = serde_json::Map::new();
                for fp in all {
                    obj.insert(fp.method.to_string(), partition_json(fp, out.generic));
                }
                obj.insert("equal".into(), json!(equal));
                pretty(&Value::Object(obj))
            }
        },
        Format::Text => {
            let mut lines = Vec::new();
            for fp in &out.partitions {
                let param = if out.generic { "generic".to_string() } else { fp.parameter.to_string() };
                lines.push(format!("{} families of {} at {}: {}", fp.method, fp.group, param, fp.len()));
                lines.extend(fp.families().iter().map(|f| format!("  {}", family_line(f))));
            }
            if let Some(equal) = out.equal() {
                lines.push(format!("equal: {equal}"));
            }
            lines.join("\n")
        }
    }
}

pub fn cuspidal(out: &[(Method, Vec<Family>)], group: &CoxeterGroup, param: &CherednikParameter, format: Format) -> String {
    match format {
        Format::Json => {
            let mut obj = header(group, param);
            for (method, fams) in out {
                obj.insert(method.to_string(), Value::Array(fams.iter().map(Family::to_json).collect()));
            }
            if let [(_, x), (_, y)] = out {
                let members = |fs: &[Family]| fs.iter().map(|f| f.members().to_vec()).collect::<Vec<_>>();
                obj.insert("equal".into(), json!(members(x) == members(y)));
            }
            pretty(&Value::Object(obj))
        }
        Format::Text => {
            let mut lines = Vec::new();
            for (method, fams) in out {
                lines.push(format!("{method} cuspidal families of {group} at {param}: {}", fams.len()));
                lines.extend(fams.iter().map(|f| format!("  {}", family_line(f))));
            }
            lines.join("\n")
        }
    }
}

pub fn rigid(
    group: &CoxeterGroup,
    param: &CherednikParameter,
    mode: RigidMode,
    labels: &[IrrLabel],
    format: Format,
) -> String {
    match format {
        Format::Json => {
            let mut obj = header(group, param);
            obj.insert("mode".into(), json!(mode.to_string()));
            obj.insert("rigid".into(), serde_json::to_value(labels).expect("labels serialize"));
            pretty(&Value::Object(obj))
        }
        Format::Text => {
            let mut lines = vec![format!("rigid labels of {group} at {param} ({mode}): {}", labels.len())];
            lines.extend(labels.iter().map(|l| format!("  {l}")));
            lines.join("\n")
        }
    }
}

pub fn leaves(poset: &LeafPoset, format: Format) -> String {
    match format {
        Format::Json => pretty(&poset.to_json()),
        Format::Text => poset
            .leaves()
            .iter()
            .enumerate()
            .map(|(j, leaf)| {
                let below: Vec<String> = (0..poset.len())
                    .filter(|&i| poset.less(i, j))
                    .map(|i| poset.leaves()[i].parabolic.to_string())
                    .collect();
                format!("{}  dim={}  below=[{}]", leaf.parabolic, leaf.dimension, below.join(", "))
            })
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

pub fn symbols(rows: &[(Bipartition, BSymbol)], format: Format) -> String {
    match format {
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|(bp, s)| json!({ "label": bp, "symbol": s.to_json() }))
                .collect();
            pretty(&Value::Array(items))
        }
        Format::Text => rows.iter().map(|(bp, s)| format!("{bp}  {s}")).collect::<Vec<_>>().join("\n"),
    }
}

fn report_json(r: &CriterionReport, timings: bool) -> Value {
    let mut v = json!({
        "id": r.id,
        "title": r.title,
        "passed": r.passed,
        "checks": r.checks,
        "failures": r.failures,
    });
    if timings {
        v["elapsed_ms"] = json!(r.elapsed_ms);
        v["runtime_target_s"] = json!(r.runtime_target_s);
    }
    v
}

fn report_line(r: &CriterionReport, timings: bool) -> String {
    let status = if r.passed { "PASS" } else { "FAIL" };
    let mut line = format!("[{status}] criterion {}: {} ({} checks", r.id, r.title, r.checks);
    if timings {
        line.push_str(&format!(", {} ms", r.elapsed_ms));
    }
    line.push(')');
    for f in &r.failures {
        line.push_str(&format!("\n    {f}"));
    }
    line
}

pub fn verify(reports: &[CriterionReport], timings: bool, format: Format) -> String {
    match format {
        Format::Json => {
            let passed = reports.iter().all(|r| r.passed);
            let criteria: Vec<Value> = reports.iter().map(|r| report_json(r, timings)).collect();
            pretty(&json!({ "passed": passed, "criteria": criteria }))
        }
        Format::Text => reports.iter().map(|r| report_line(r, timings)).collect::<Vec<_>>().join("\n"),
    }
}
