use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use serde_json::{json, Value};
use twistpres::abelianize::AbelianInvariants;
use twistpres::Presentation;

pub fn timestamp(no_timestamp: bool) -> Option<String> {
    (!no_timestamp).then(|| chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true))
}

/// Attach `generated_at` to a JSON report object.
pub fn stamp_json(mut v: Value, ts: &Option<String>) -> Value {
    if let (Some(ts), Some(obj)) = (ts, v.as_object_mut()) {
        obj.insert("generated_at".into(), Value::String(ts.clone()));
    }
    v
}

pub fn stamp_text(body: String, ts: &Option<String>) -> String {
    match ts {
        Some(ts) => format!("# generated {ts}\n{body}"),
        None => body,
    }
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

/// Write a report to `out`, or to stdout.
pub fn emit(out: Option<&Path>, content: &str) -> Result<()> {
    match out {
        Some(path) => {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            }
            fs::write(path, content).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

pub fn invariants_json(inv: &AbelianInvariants) -> Value {
    let torsion: Vec<Value> = inv
        .torsion
        .iter()
        .map(|d| {
            let s = d.to_string();
            s.parse::<u64>().map_or(Value::String(s), Value::from)
        })
        .collect();
    json!({ "free_rank": inv.free_rank, "torsion": torsion, "text": inv.to_string() })
}

/// Plain listing: header, generators, then one `label: word` line per relator.
pub fn presentation_text(p: &Presentation) -> String {
    let m = p.meta;
    let mut out = format!(
        "# kind={} g={} s={} variant={}\n",
        m.kind, m.g, m.s, m.variant
    );
    let gens: Vec<String> = p.generators().iter().map(|g| g.to_string()).collect();
    out.push_str(&format!("generators: {}\n", gens.join(" ")));
    for r in p.relators() {
        out.push_str(&format!("{}: {}\n", r.label, r.word));
    }
    out
}
