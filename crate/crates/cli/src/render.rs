//! Table, CSV and JSON renderings of command results.
//!
//! Every result is one or more flat rows. Big integers are carried as
//! decimal strings so JSON consumers never see a lossy number.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Table,
    Csv,
    Json,
}

pub type Row = Map<String, Value>;

#[derive(Debug, Clone, PartialEq)]
pub enum Rendered {
    /// A single row whose table form is just the value under `primary`.
    Scalar { row: Row, primary: &'static str },
    /// A single row shown as `key value` lines in table form.
    Record(Row),
    /// Several rows with a shared header.
    Rows(Vec<Row>),
}

impl Rendered {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Table => self.table(),
            OutputFormat::Csv => self.csv(),
            OutputFormat::Json => self.json(),
        }
    }

    fn rows(&self) -> Vec<&Row> {
        match self {
            Rendered::Scalar { row, .. } | Rendered::Record(row) => vec![row],
            Rendered::Rows(rows) => rows.iter().collect(),
        }
    }

    fn table(&self) -> String {
        match self {
            Rendered::Scalar { row, primary } => {
                format!("{}\n", cell(row.get(*primary).unwrap_or(&Value::Null)))
            }
            Rendered::Record(row) => {
                let width = row.keys().map(String::len).max().unwrap_or(0);
                let mut out = String::new();
                for (k, v) in row {
                    let _ = writeln!(out, "{k:<width$}  {}", cell(v));
                }
                out
            }
            Rendered::Rows(rows) => {
                let Some(first) = rows.first() else {
                    return String::new();
                };
                let header: Vec<&String> = first.keys().collect();
                let body: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| header.iter().map(|k| cell(r.get(*k).unwrap_or(&Value::Null))).collect())
                    .collect();
                let widths: Vec<usize> = header
                    .iter()
                    .enumerate()
                    .map(|(i, h)| body.iter().map(|r| r[i].len()).chain([h.len()]).max().unwrap())
                    .collect();
                let mut out = String::new();
                let line = |cells: Vec<&str>| {
                    cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:>w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                };
                let _ = writeln!(out, "{}", line(header.iter().map(|h| h.as_str()).collect()));
                for r in &body {
                    let _ = writeln!(out, "{}", line(r.iter().map(String::as_str).collect()));
                }
                out
            }
        }
    }

    fn csv(&self) -> String {
        let rows = self.rows();
        let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
        if let Some(first) = rows.first() {
            w.write_record(first.keys()).expect("in-memory write");
            for r in &rows {
                w.write_record(first.keys().map(|k| cell(r.get(k).unwrap_or(&Value::Null))))
                    .expect("in-memory write");
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
    }

    fn json(&self) -> String {
        let value = match self {
            Rendered::Scalar { row, .. } | Rendered::Record(row) => Value::Object(row.clone()),
            Rendered::Rows(rows) => Value::Array(rows.iter().cloned().map(Value::Object).collect()),
        };
        let mut s = serde_json::to_string_pretty(&value).expect("plain values");
        s.push('\n');
        s
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Flattens any serializable struct into a row, keeping field order.
pub fn to_row<T: Serialize>(value: &T) -> Row {
    match serde_json::to_value(value).expect("serializable") {
        Value::Object(map) => map,
        other => panic!("expected a struct, got {other}"),
    }
}

/// Builder for hand-assembled rows.
#[derive(Default)]
pub struct RowBuilder(Row);

impl RowBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn int(mut self, key: &str, v: impl Into<i64>) -> Self {
        self.0.insert(key.into(), Value::from(v.into()));
        self
    }

    /// Arbitrary-precision value, stored as its decimal string.
    pub fn big(mut self, key: &str, v: &impl std::fmt::Display) -> Self {
        self.0.insert(key.into(), Value::String(v.to_string()));
        self
    }

    pub fn text(mut self, key: &str, v: impl Into<String>) -> Self {
        self.0.insert(key.into(), Value::String(v.into()));
        self
    }

    pub fn bool(mut self, key: &str, v: bool) -> Self {
        self.0.insert(key.into(), Value::Bool(v));
        self
    }

    pub fn build(self) -> Row {
        self.0
    }
}
