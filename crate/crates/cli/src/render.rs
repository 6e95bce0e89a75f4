use std::fmt::Write;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    #[value(alias = "structured")]
    Json,
}

/// One command's output in every supported format.
pub struct Rendered {
    plain: String,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    json: Value,
}

impl Rendered {
    pub fn new(plain: impl Into<String>, json: impl Serialize) -> Self {
        Rendered {
            plain: plain.into(),
            header: Vec::new(),
            rows: Vec::new(),
            json: serde_json::to_value(json).expect("report serializes"),
        }
    }

    pub fn table(mut self, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        self.header = header;
        self.rows = rows;
        self
    }

    pub fn to_string(&self, format: Format) -> String {
        match format {
            Format::Plain => ensure_newline(self.plain.clone()),
            Format::Json => ensure_newline(serde_json::to_string_pretty(&self.json).unwrap()),
            Format::Csv => {
                let mut out = String::new();
                if self.header.is_empty() {
                    // single-value reports: the plain text, one field per line
                    for line in self.plain.lines() {
                        writeln!(out, "{}", csv_field(line)).unwrap();
                    }
                    return out;
                }
                writeln!(out, "{}", self.header.join(",")).unwrap();
                for row in &self.rows {
                    let fields: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
                    writeln!(out, "{}", fields.join(",")).unwrap();
                }
                out
            }
        }
    }
}

fn ensure_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

pub fn set<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    format!("{{{}}}", join(items, ","))
}

pub fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}
