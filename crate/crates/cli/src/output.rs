//! One result, three renderings.

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// A finished command result. `json` follows the
/// `{command, params, rows|verdicts, totals, version}` layout; serde_json's
/// default map keeps keys sorted, so serialization is canonical.
pub struct Rendered {
    pub json: Value,
    pub text: String,
    pub csv_header: Vec<String>,
    pub csv_rows: Vec<Vec<String>>,
    /// Set when a verification ran and something failed.
    pub failed: bool,
}

pub fn envelope(
    command: &str,
    params: Value,
    body_key: &str,
    body: Vec<Value>,
    totals: Value,
) -> Value {
    let mut top = Map::new();
    top.insert("command".into(), Value::from(command));
    top.insert("params".into(), params);
    top.insert(body_key.into(), Value::Array(body));
    top.insert("totals".into(), totals);
    top.insert("version".into(), Value::from(env!("CARGO_PKG_VERSION")));
    Value::Object(top)
}

impl Rendered {
    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Text => {
                let mut s = self.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                Ok(s)
            }
            Format::Json => to_canonical_json(&self.json),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                let err = |e: csv::Error| e.to_string();
                w.write_record(&self.csv_header).map_err(err)?;
                for row in &self.csv_rows {
                    w.write_record(row).map_err(err)?;
                }
                let bytes = w.into_inner().map_err(|e| e.to_string())?;
                String::from_utf8(bytes).map_err(|e| e.to_string())
            }
        }
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_canonical_json(v: &Value) -> Result<String, String> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| e.to_string())?;
    s.push('\n');
    Ok(s)
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut width = vec![0; cols];
    for r in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        for (i, cell) in r.iter().enumerate() {
            width[i] = width[i].max(cell.chars().count());
        }
    }
    let line = |r: &[String]| {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{c:<w$}", w = width[i]))
            .collect();
        cells.join("  ").trim_end().to_string()
    };
    let mut out = vec![line(header)];
    out.extend(rows.iter().map(|r| line(r)));
    out.join("\n")
}

pub fn strings<I, T>(items: I) -> Vec<String>
where
    I: IntoIterator<Item = T>,
    T: ToString,
{
    items.into_iter().map(|x| x.to_string()).collect()
}
