use serde_json::Value;

use super::Report;

/// Plain-text form of a report: one `key: value` line per scalar, nested
/// records indented, and lists of scalars kept on one line.
pub fn render_text(report: &Report) -> String {
    let mut out = format!("{} {} / {}\n", report.tool, report.version, report.task);
    render_value(&report.results, 0, &mut out);
    if report.counterexamples.is_empty() {
        out.push_str("counterexamples: none\n");
    } else {
        out.push_str("counterexamples:\n");
        for c in &report.counterexamples {
            out.push_str(&format!("  - {c}\n"));
        }
    }
    if let Some(ms) = report.timing_ms {
        out.push_str(&format!("timing_ms: {ms}\n"));
    }
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let parts: Vec<String> = items.iter().filter_map(scalar).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        _ => None,
    }
}

fn render_value(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_value(item, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render_value(item, indent + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}
