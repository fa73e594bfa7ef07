//! Deterministic text emission: 12-significant-digit numbers, CSV with LF
//! line endings, and a small JSON renderer that prints floats through the
//! same formatter so the two formats agree to the last digit.

/// Canonical 12-significant-digit rendering of a float. Negative zero is
/// normalized so byte-identical output never depends on sign tricks.
pub fn fmt12(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.11e}")
}

/// `v` quantized to the 12-significant-digit grid: the exact f64 a reader
/// of the emitted text reconstructs. Reports store these so that emitted
/// text, reparsed values, and in-memory state are all bit-consistent.
pub fn round12(v: f64) -> f64 {
    if !v.is_finite() {
        return v;
    }
    fmt12(v).parse().expect("fmt12 output always reparses")
}

/// JSON document tree. Floats render through [`fmt12`] (valid JSON number
/// syntax), so a JSON file and a CSV file of the same data carry the same
/// digit strings.
#[derive(Debug, Clone)]
pub enum JsonValue {
    Null,
    Bool(bool),
    Int(u64),
    Num(f64),
    Str(String),
    Arr(Vec<JsonValue>),
    Obj(Vec<(&'static str, JsonValue)>),
}

impl JsonValue {
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write(&mut out, 0);
        out.push('\n');
        out
    }

    fn write(&self, out: &mut String, indent: usize) {
        match self {
            JsonValue::Null => out.push_str("null"),
            JsonValue::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            JsonValue::Int(i) => out.push_str(&i.to_string()),
            JsonValue::Num(v) => {
                if v.is_finite() {
                    out.push_str(&fmt12(*v));
                } else {
                    // Non-finite values have no JSON representation and
                    // never belong in a report; degrade to null loudly.
                    out.push_str("null");
                }
            }
            JsonValue::Str(s) => write_json_string(out, s),
            JsonValue::Arr(items) => {
                if items.is_empty() {
                    out.push_str("[]");
                    return;
                }
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push('\n');
                    push_indent(out, indent + 1);
                    item.write(out, indent + 1);
                }
                out.push('\n');
                push_indent(out, indent);
                out.push(']');
            }
            JsonValue::Obj(fields) => {
                if fields.is_empty() {
                    out.push_str("{}");
                    return;
                }
                out.push('{');
                for (i, (key, value)) in fields.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push('\n');
                    push_indent(out, indent + 1);
                    write_json_string(out, key);
                    out.push_str(": ");
                    value.write(out, indent + 1);
                }
                out.push('\n');
                push_indent(out, indent);
                out.push('}');
            }
        }
    }
}

fn push_indent(out: &mut String, level: usize) {
    for _ in 0..level {
        out.push_str("  ");
    }
}

fn write_json_string(out: &mut String, s: &str) {
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
}

/// Helper for optional float fields: null when absent.
pub fn json_opt(v: Option<f64>) -> JsonValue {
    match v {
        Some(v) => JsonValue::Num(v),
        None => JsonValue::Null,
    }
}

/// One CSV table: header plus rows, rendered with comma separators and LF
/// endings. Cells are pre-rendered strings; numeric cells go through
/// [`fmt12`] at construction.
pub struct CsvTable {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl CsvTable {
    pub fn new(header: Vec<&'static str>) -> Self {
        Self {
            header,
            rows: Vec::new(),
        }
    }

    /// Append a row; must match the header width.
    pub fn push(&mut self, row: Vec<String>) {
        assert_eq!(row.len(), self.header.len(), "ragged CSV row");
        self.rows.push(row);
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Float cell for CSV.
pub fn cell(v: f64) -> String {
    fmt12(v)
}

/// Optional float cell: empty when absent (documented schema behavior).
pub fn cell_opt(v: Option<f64>) -> String {
    v.map(fmt12).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_digit_format_is_stable() {
        let s = fmt12(2.0 / (std::f64::consts::PI - 2.0));
        assert_eq!(s, "1.75193839388e0");
        assert_eq!(fmt12(-0.0), "0.00000000000e0");
        assert_eq!(fmt12(0.0263213712837), "2.63213712837e-2");
        // Quantize, reformat: same string; reparse: same bits.
        let q = round12(std::f64::consts::PI);
        assert_eq!(fmt12(q), fmt12(std::f64::consts::PI));
        assert_eq!(fmt12(q).parse::<f64>().unwrap().to_bits(), q.to_bits());
    }

    #[test]
    fn json_renders_and_reparses() {
        let doc = JsonValue::Obj(vec![
            ("name", JsonValue::Str("a \"quoted\" name\n".into())),
            ("value", JsonValue::Num(0.1618)),
            ("count", JsonValue::Int(6)),
            ("missing", JsonValue::Null),
            ("flags", JsonValue::Arr(vec![JsonValue::Bool(true), JsonValue::Bool(false)])),
            ("empty", JsonValue::Arr(vec![])),
        ]);
        let text = doc.render();
        println!("{text}");
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed["name"], "a \"quoted\" name\n");
        assert_eq!(parsed["count"], 6);
        assert!(parsed["missing"].is_null());
        let v = parsed["value"].as_f64().unwrap();
        assert_eq!(v.to_bits(), round12(0.1618).to_bits());
    }

    #[test]
    fn csv_is_lf_terminated() {
        let mut t = CsvTable::new(vec!["a", "b"]);
        t.push(vec![cell(1.0), cell_opt(None)]);
        let text = t.render();
        assert_eq!(text, "a,b\n1.00000000000e0,\n");
        assert!(!text.contains('\r'));
    }
}
