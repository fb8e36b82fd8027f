use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use contrakernel::tables::format_value;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(i64),
    Num(f64),
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<i32> for Cell {
    fn from(v: i32) -> Self {
        Cell::Int(v.into())
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl Cell {
    fn csv(&self, digits: Option<usize>) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(v) => v.to_string(),
            Cell::Num(v) => format_value(*v, digits),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Text(s) => json!(s),
            Cell::Int(v) => json!(v),
            // Non-finite values have no JSON literal.
            Cell::Num(v) if v.is_finite() => json!(v),
            Cell::Num(v) => json!(v.to_string()),
        }
    }
}

/// A rectangular report with optional summary values.
#[derive(Debug, Default)]
pub struct Report {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub summary: Vec<(String, Cell)>,
}

impl Report {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Self {
            columns: columns.into_iter().map(Into::into).collect(),
            ..Self::default()
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn summarize(&mut self, key: &str, value: impl Into<Cell>) {
        self.summary.push((key.to_string(), value.into()));
    }

    pub fn to_csv(&self, digits: Option<usize>) -> String {
        let mut s = self.columns.join(",");
        s.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| c.csv(digits)).collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| Value::Array(r.iter().map(Cell::json).collect()))
            .collect();
        let mut obj = Map::new();
        obj.insert("columns".into(), json!(self.columns));
        obj.insert("rows".into(), Value::Array(rows));
        if !self.summary.is_empty() {
            let summary: Map<String, Value> = self
                .summary
                .iter()
                .map(|(k, v)| (k.clone(), v.json()))
                .collect();
            obj.insert("summary".into(), Value::Object(summary));
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("serializable");
        s.push('\n');
        s
    }

    /// Summary as `key = value` lines for stderr.
    pub fn summary_text(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.summary {
            let _ = writeln!(s, "{k} = {}", v.csv(None));
        }
        s
    }
}

pub fn write(text: &str, path: Option<&Path>) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}
