//! Report model and the three renderers.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{Map, Number, Value};

#[derive(Debug, Clone)]
pub enum Field {
    Num(f64),
    Int(i64),
    Text(String),
    Flag(bool),
}

impl From<f64> for Field {
    fn from(v: f64) -> Self {
        Field::Num(v)
    }
}

impl From<u32> for Field {
    fn from(v: u32) -> Self {
        Field::Int(v as i64)
    }
}

impl From<usize> for Field {
    fn from(v: usize) -> Self {
        Field::Int(v as i64)
    }
}

impl From<bool> for Field {
    fn from(v: bool) -> Self {
        Field::Flag(v)
    }
}

impl From<&str> for Field {
    fn from(v: &str) -> Self {
        Field::Text(v.to_string())
    }
}

impl From<String> for Field {
    fn from(v: String) -> Self {
        Field::Text(v)
    }
}

/// 17 significant digits.
pub fn machine(v: f64) -> String {
    format!("{v:.16e}")
}

/// 4 significant digits.
pub fn human(v: f64) -> String {
    format!("{v:.3e}")
}

impl Field {
    fn machine(&self) -> String {
        match self {
            Field::Num(v) => machine(*v),
            Field::Int(v) => v.to_string(),
            Field::Text(s) => s.clone(),
            Field::Flag(b) => b.to_string(),
        }
    }

    fn human(&self) -> String {
        match self {
            Field::Num(v) => human(*v),
            other => other.machine(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Field::Num(v) if v.is_finite() => Value::Number(
                Number::from_str(&machine(*v)).expect("formatted float is a JSON number"),
            ),
            Field::Num(_) => Value::Null,
            Field::Int(v) => Value::from(*v),
            Field::Text(s) => Value::from(s.as_str()),
            Field::Flag(b) => Value::from(*b),
        }
    }
}

pub type Entries = Vec<(String, Field)>;

#[derive(Debug, Clone)]
pub enum Body {
    Record(Entries),
    Table {
        columns: Vec<String>,
        rows: Vec<Vec<Field>>,
    },
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub body: Body,
    /// Extra context: shown in text, carried under `diagnostics` in JSON, dropped from CSV.
    pub diagnostics: Entries,
    /// Preformatted lines for text mode only.
    pub text_lines: Vec<String>,
}

impl Report {
    pub fn record(command: &'static str, entries: Entries) -> Self {
        Report {
            command,
            body: Body::Record(entries),
            diagnostics: Vec::new(),
            text_lines: Vec::new(),
        }
    }

    pub fn table(command: &'static str, columns: &[&str], rows: Vec<Vec<Field>>) -> Self {
        Report {
            command,
            body: Body::Table {
                columns: columns.iter().map(|c| c.to_string()).collect(),
                rows,
            },
            diagnostics: Vec::new(),
            text_lines: Vec::new(),
        }
    }

    pub fn with_diagnostics(mut self, d: Entries) -> Self {
        self.diagnostics = d;
        self
    }

    pub fn with_text(mut self, lines: Vec<String>) -> Self {
        self.text_lines = lines;
        self
    }

    pub fn to_json(&self, meta: Value) -> String {
        let mut obj = Map::new();
        match &self.body {
            Body::Record(entries) => {
                for (k, v) in entries {
                    obj.insert(k.clone(), v.json());
                }
            }
            Body::Table { columns, rows } => {
                obj.insert(
                    "columns".into(),
                    Value::Array(columns.iter().map(|c| Value::from(c.as_str())).collect()),
                );
                obj.insert(
                    "rows".into(),
                    Value::Array(
                        rows.iter()
                            .map(|r| Value::Array(r.iter().map(Field::json).collect()))
                            .collect(),
                    ),
                );
            }
        }
        if !self.diagnostics.is_empty() {
            let d: Map<String, Value> = self
                .diagnostics
                .iter()
                .map(|(k, v)| (k.clone(), v.json()))
                .collect();
            obj.insert("diagnostics".into(), Value::Object(d));
        }
        obj.insert("meta".into(), meta);
        let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        match &self.body {
            Body::Record(entries) => {
                out.push_str("key,value\n");
                for (k, v) in entries {
                    let _ = writeln!(out, "{k},{}", v.machine());
                }
            }
            Body::Table { columns, rows } => {
                let _ = writeln!(out, "{}", columns.join(","));
                for r in rows {
                    let cells: Vec<String> = r.iter().map(Field::machine).collect();
                    let _ = writeln!(out, "{}", cells.join(","));
                }
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let pad = |entries: &Entries| entries.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        match &self.body {
            Body::Record(entries) => {
                let w = pad(entries).max(pad(&self.diagnostics));
                for (k, v) in entries {
                    let _ = writeln!(out, "{k:<w$}  {}", v.human());
                }
                for (k, v) in &self.diagnostics {
                    let _ = writeln!(out, "{k:<w$}  {}", v.human());
                }
            }
            Body::Table { columns, rows } => {
                let cells: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| r.iter().map(Field::human).collect())
                    .collect();
                let widths: Vec<usize> = (0..columns.len())
                    .map(|i| {
                        cells
                            .iter()
                            .map(|r| r[i].len())
                            .chain(std::iter::once(columns[i].len()))
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |row: Vec<&str>| {
                    row.iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:>w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                };
                let _ = writeln!(
                    out,
                    "{}",
                    line(columns.iter().map(String::as_str).collect())
                );
                for r in &cells {
                    let _ = writeln!(out, "{}", line(r.iter().map(String::as_str).collect()));
                }
                for (k, v) in &self.diagnostics {
                    let _ = writeln!(out, "{k}: {}", v.human());
                }
            }
        }
        for l in &self.text_lines {
            let _ = writeln!(out, "{l}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digits() {
        assert_eq!(human(0.991_234e-34), "9.912e-35");
        assert_eq!(machine(1.0).len(), "1.0000000000000000e0".len());
        assert_eq!(machine(0.1).parse::<f64>().unwrap(), 0.1);
    }

    #[test]
    fn json_is_one_object() {
        let r = Report::record(
            "t",
            vec![("a".into(), 1.5.into()), ("n".into(), 3u32.into())],
        );
        let v: Value = serde_json::from_str(&r.to_json(Value::Null)).unwrap();
        assert_eq!(v["a"].as_f64(), Some(1.5));
        assert_eq!(v["n"].as_i64(), Some(3));
        assert!(v.get("meta").is_some());
    }

    #[test]
    fn non_finite_becomes_null() {
        let r = Report::record("t", vec![("x".into(), f64::NAN.into())]);
        let v: Value = serde_json::from_str(&r.to_json(Value::Null)).unwrap();
        assert!(v["x"].is_null());
    }

    #[test]
    fn csv_table() {
        let r = Report::table("t", &["a", "b"], vec![vec![1.0.into(), 2.0.into()]]);
        let csv = r.to_csv();
        assert_eq!(csv.lines().count(), 2);
        assert_eq!(csv.lines().next(), Some("a,b"));
    }
}
