//! Plain-text rendering of the JSON reports.

use serde_json::Value;

/// Scalars as `key: value` lines, arrays of flat objects as aligned tables, nested
/// objects as indented sections.
pub fn render(v: &Value) -> String {
    let mut out = String::new();
    section(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        Value::Array(a) => format!("[{}]", a.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        Value::Object(_) => serde_json::to_string(v).unwrap_or_default(),
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Object(m) => m.values().all(|x| !x.is_object() && !is_table(x)),
        _ => false,
    }
}

fn is_table(v: &Value) -> bool {
    matches!(v, Value::Array(a) if !a.is_empty() && a.iter().all(is_flat))
}

fn section(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    let Value::Object(m) = v else {
        out.push_str(&format!("{pad}{}\n", scalar(v)));
        return;
    };
    for (k, x) in m {
        if x.is_object() {
            out.push_str(&format!("{pad}{k}:\n"));
            section(x, indent + 2, out);
        } else if is_table(x) {
            out.push_str(&format!("{pad}{k}:\n"));
            table(x.as_array().expect("table"), indent + 2, out);
        } else if let Value::String(s) = x {
            if s.contains('\n') {
                out.push_str(&format!("{pad}{k}:\n"));
                for line in s.lines() {
                    out.push_str(&format!("{pad}  {line}\n"));
                }
            } else {
                out.push_str(&format!("{pad}{k}: {s}\n"));
            }
        } else {
            out.push_str(&format!("{pad}{k}: {}\n", scalar(x)));
        }
    }
}

fn table(rows: &[Value], indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    let mut cols: Vec<String> = Vec::new();
    for r in rows {
        for k in r.as_object().expect("flat object").keys() {
            if !cols.contains(k) {
                cols.push(k.clone());
            }
        }
    }
    let cells: Vec<Vec<String>> =
        rows.iter().map(|r| cols.iter().map(|c| r.get(c).map(scalar).unwrap_or_default()).collect()).collect();
    let widths: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(i, c)| cells.iter().map(|r| r[i].chars().count()).chain([c.chars().count()]).max().unwrap_or(0))
        .collect();
    let line = |items: &[String]| {
        let parts: Vec<String> =
            items.iter().zip(&widths).map(|(s, w)| format!("{s}{}", " ".repeat(w - s.chars().count()))).collect();
        format!("{pad}{}\n", parts.join("  ").trim_end())
    };
    out.push_str(&line(&cols));
    for r in &cells {
        out.push_str(&line(r));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn renders_tables_and_sections() {
        let v = json!({"name": "x", "rows": [{"a": 1, "b": "yy"}, {"a": 22, "b": "z"}], "sub": {"k": true}});
        let s = render(&v);
        assert!(s.contains("name: x"));
        assert!(s.contains("a   b"));
        assert!(s.contains("22  z"));
        assert!(s.contains("sub:\n  k: true"));
    }
}
