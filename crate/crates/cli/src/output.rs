//! Record formatting and b-file reading.

use std::fmt::Write;

use serde::Serialize;

use parkpat::Error;

/// One computed term.
#[derive(Clone, Debug, Serialize)]
pub struct OutputRecord {
    pub n: usize,
    /// Full decimal; kept as a string so large values survive JSON readers.
    pub value: String,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Bfile,
    Csv,
    Json,
}

pub fn render(records: &[OutputRecord], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Bfile => {
            for r in records {
                writeln!(out, "{} {}", r.n, r.value).unwrap();
            }
        }
        Format::Csv => {
            let with_m = records.iter().any(|r| r.m.is_some());
            out.push_str(if with_m { "n,m,value,method\n" } else { "n,value,method\n" });
            for r in records {
                match r.m {
                    Some(m) => writeln!(out, "{},{},{},{}", r.n, m, r.value, r.method).unwrap(),
                    None => writeln!(out, "{},{},{}", r.n, r.value, r.method).unwrap(),
                }
            }
        }
        Format::Json => {
            out.push_str(&serde_json::to_string_pretty(records).expect("records serialize"));
            out.push('\n');
        }
    }
    out
}

/// Reads `n a(n)` lines; blank lines and lines starting with `#` are skipped.
pub fn parse_bfile(text: &str) -> Result<Vec<(usize, String)>, Error> {
    let mut terms = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let indent = raw.len() - trimmed.len();
        let mut fields = trimmed.split_whitespace();
        let index = fields.next().unwrap();
        let n = index.parse::<usize>().map_err(|_| parse_error(line, indent + 1, format!("bad index {index:?}")))?;
        let Some(value) = fields.next() else {
            return Err(parse_error(line, raw.trim_end().len() + 1, "missing value".into()));
        };
        let col = raw.find(value).unwrap_or(0) + 1;
        let digits = value.strip_prefix('-').unwrap_or(value);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(parse_error(line, col, format!("bad value {value:?}")));
        }
        if let Some(extra) = fields.next() {
            let col = raw.rfind(extra).unwrap_or(0) + 1;
            return Err(parse_error(line, col, format!("unexpected {extra:?}")));
        }
        terms.push((n, value.to_string()));
    }
    Ok(terms)
}

fn parse_error(line: usize, column: usize, message: String) -> Error {
    Error::Parse { line, column, message }
}
