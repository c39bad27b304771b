//! Report rendering: human summary lines, the JSON document, and the
//! per-instance CSV, plus atomic file output.
//!
//! Exact values are serialized as their canonical exact strings (rationals
//! as `num/den`, constant-field monomials tagged `sqrtpi^a` / `ln2`), never
//! as floats, so reports round-trip faithfully and byte-identical runs stay
//! byte-identical.

use std::fs;
use std::io::Write as _;
use std::path::Path;

use serde_json::{json, Value};
use touchard::identities::{Outcome, VerificationReport};

pub struct RunMeta {
    pub timestamp: String,
    pub backend: String,
    pub precision: u32,
    pub n_max: Option<i64>,
    pub r_values: Option<Vec<String>>,
    pub s_values: Option<Vec<String>>,
}

/// Wall-clock seconds since the epoch, overridable through
/// `SOURCE_DATE_EPOCH` for reproducible report bytes.
pub fn timestamp() -> String {
    if let Ok(v) = std::env::var("SOURCE_DATE_EPOCH") {
        return v;
    }
    let secs = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    secs.to_string()
}

fn grids_json(meta: &RunMeta) -> Value {
    json!({
        "n_max": meta.n_max.map(Value::from).unwrap_or_else(|| Value::String("default".into())),
        "r_values": meta.r_values.clone().map(Value::from).unwrap_or_else(|| Value::String("default".into())),
        "s_values": meta.s_values.clone().map(Value::from).unwrap_or_else(|| Value::String("default".into())),
    })
}

pub fn to_json(meta: &RunMeta, reports: &[VerificationReport]) -> Value {
    let identities: Vec<Value> = reports
        .iter()
        .map(|r| {
            let failures: Vec<Value> = r
                .verdicts
                .iter()
                .filter_map(|v| match &v.outcome {
                    Outcome::Unequal { lhs, rhs, diff } => Some(json!({
                        "params": params_json(&v.params),
                        "lhs": lhs,
                        "rhs": rhs,
                        "diff": diff,
                    })),
                    Outcome::Skipped {
                        reason,
                        predicate_gap: true,
                    } => Some(json!({
                        "params": params_json(&v.params),
                        "predicate_gap": reason,
                    })),
                    _ => None,
                })
                .collect();
            json!({
                "id": r.id,
                "anchor": r.anchor,
                "counts": {
                    "equal": r.counts.equal,
                    "unequal": r.counts.unequal,
                    "skipped": r.counts.skipped,
                    "predicate_gap": r.counts.predicate_gap,
                },
                "failures": failures,
            })
        })
        .collect();
    json!({
        "run_meta": {
            "timestamp": meta.timestamp,
            "backend": meta.backend,
            "precision": meta.precision,
            "grids": grids_json(meta),
        },
        "identities": identities,
    })
}

fn params_json(params: &[(String, String)]) -> Value {
    let map: serde_json::Map<String, Value> = params
        .iter()
        .map(|(k, v)| (k.clone(), Value::String(v.clone())))
        .collect();
    Value::Object(map)
}

fn params_csv(params: &[(String, String)]) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One row per instance, equal instances included.
pub fn to_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from("id,params,outcome,lhs,rhs,diff,reason\n");
    for r in reports {
        for v in &r.verdicts {
            let (outcome, lhs, rhs, diff, reason) = match &v.outcome {
                Outcome::Equal => ("equal", "", "", "", String::new()),
                Outcome::Unequal { lhs, rhs, diff } => {
                    ("unequal", lhs.as_str(), rhs.as_str(), diff.as_str(), String::new())
                }
                Outcome::Skipped {
                    reason,
                    predicate_gap,
                } => (
                    if *predicate_gap {
                        "predicate-gap"
                    } else {
                        "skipped"
                    },
                    "",
                    "",
                    "",
                    reason.clone(),
                ),
            };
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                csv_escape(&r.id),
                csv_escape(&params_csv(&v.params)),
                outcome,
                csv_escape(lhs),
                csv_escape(rhs),
                csv_escape(diff),
                csv_escape(&reason),
            ));
        }
    }
    out
}

pub fn human_summary(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let total = r.counts.total();
        let mut line = format!("{}: {}/{} Equal", r.id, r.counts.equal, total);
        if r.counts.skipped > 0 {
            line.push_str(&format!(", {} skipped", r.counts.skipped));
        }
        if r.counts.unequal > 0 {
            line.push_str(&format!(", {} UNEQUAL", r.counts.unequal));
        }
        if r.counts.predicate_gap > 0 {
            line.push_str(&format!(", {} PREDICATE-GAP", r.counts.predicate_gap));
        }
        line.push_str(&format!("  [{} ms]", r.elapsed.as_millis()));
        out.push_str(&line);
        out.push('\n');
        for v in r.verdicts.iter().filter(|v| v.is_failure()) {
            match &v.outcome {
                Outcome::Unequal { lhs, rhs, diff } => {
                    out.push_str(&format!(
                        "  FAIL {}: lhs = {lhs}, rhs = {rhs}, diff = {diff}\n",
                        params_csv(&v.params)
                    ));
                }
                Outcome::Skipped { reason, .. } => {
                    out.push_str(&format!(
                        "  PREDICATE-GAP {}: {reason}\n",
                        params_csv(&v.params)
                    ));
                }
                Outcome::Equal => {}
            }
        }
    }
    out
}

/// Write via a temporary file in the target directory, then rename, so a
/// report path never holds a half-written document.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let tmp = match dir {
        Some(d) => d.join(format!(
            ".{}.tmp-{}",
            path.file_name().and_then(|s| s.to_str()).unwrap_or("report"),
            std::process::id()
        )),
        None => std::path::PathBuf::from(format!(".report.tmp-{}", std::process::id())),
    };
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn meta() -> RunMeta {
        RunMeta {
            timestamp: "0".to_string(),
            backend: "exact".to_string(),
            precision: 256,
            n_max: None,
            r_values: None,
            s_values: None,
        }
    }

    #[test]
    fn empty_report_is_valid_json() {
        let doc = to_json(&meta(), &[]);
        assert_eq!(doc["identities"].as_array().unwrap().len(), 0);
        assert_eq!(doc["run_meta"]["backend"], "exact");
        serde_json::to_string(&doc).unwrap();
    }

    #[test]
    fn csv_escapes_commas_and_quotes() {
        assert_eq!(csv_escape("plain"), "plain");
        assert_eq!(csv_escape("a,b"), "\"a,b\"");
        assert_eq!(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
    }
}
