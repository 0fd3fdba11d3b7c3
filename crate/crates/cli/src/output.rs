use serde_json::Value;

/// Canonical JSON: sorted keys, two-space indentation, trailing newline.
pub fn json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("value serializes");
    s.push('\n');
    s
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.replace(['\t', '\n'], " "),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                flatten(&key(k), x, out);
            }
        }
        Value::Array(xs) if !xs.is_empty() && xs.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in xs.iter().enumerate() {
                flatten(&key(&i.to_string()), x, out);
            }
        }
        Value::Array(xs) => out.push((prefix.to_string(), xs.iter().map(scalar).collect::<Vec<_>>().join(","))),
        other => out.push((prefix.to_string(), scalar(other))),
    }
}

/// `key<TAB>value` lines with dotted paths.
pub fn tsv_pairs(v: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", v, &mut rows);
    rows.iter().map(|(k, x)| format!("{k}\t{x}\n")).collect()
}

/// Header plus one line per row object; columns follow the first row.
pub fn tsv_table(rows: &[Value]) -> String {
    let Some(Value::Object(first)) = rows.first() else {
        return String::new();
    };
    let cols: Vec<&String> = first.keys().collect();
    let mut s = cols.iter().map(|c| c.as_str()).collect::<Vec<_>>().join("\t");
    s.push('\n');
    for r in rows {
        let line: Vec<String> = cols.iter().map(|c| scalar(&r[c.as_str()])).collect();
        s.push_str(&line.join("\t"));
        s.push('\n');
    }
    s
}
