//! Design files.
//!
//! CSV: one sample per line, `P` comma-separated decimals. Blank lines and
//! lines starting with `#` are skipped. Coordinates are written with 17
//! significant digits so a write/read cycle is bit-exact.
//!
//! JSON: `{"p": P, "n": N, "samples": [[...], ...], "meta": {...}}`.

use std::fmt;
use std::fs;
use std::path::Path;

use elhs_core::SampleSet;
use serde::{Deserialize, Serialize};

use crate::format::sig17;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DesignFormat {
    Csv,
    Json,
}

impl DesignFormat {
    /// `.json` means JSON, anything else CSV.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => DesignFormat::Json,
            _ => DesignFormat::Csv,
        }
    }
}

#[derive(Debug)]
pub enum DesignError {
    /// Problem on a 1-based input line.
    Parse { line: usize, msg: String },
    Json(serde_json::Error),
    Invalid(elhs_core::Error),
    Io(std::io::Error),
}

impl fmt::Display for DesignError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DesignError::Parse { line, msg } => write!(f, "line {line}: {msg}"),
            DesignError::Json(e) => write!(f, "invalid JSON design: {e}"),
            DesignError::Invalid(e) => write!(f, "invalid design: {e}"),
            DesignError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for DesignError {}

impl From<std::io::Error> for DesignError {
    fn from(e: std::io::Error) -> Self {
        DesignError::Io(e)
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonDesign {
    p: usize,
    n: usize,
    samples: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "serde_json::Value::is_null")]
    meta: serde_json::Value,
}

pub fn parse_csv(text: &str) -> Result<SampleSet, DesignError> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut width = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut row = Vec::new();
        for (col, field) in trimmed.split(',').enumerate() {
            let field = field.trim();
            let x: f64 = field.parse().map_err(|_| DesignError::Parse {
                line,
                msg: format!("column {col}: cannot parse {field:?} as a number"),
            })?;
            if !(0.0..1.0).contains(&x) {
                return Err(DesignError::Parse {
                    line,
                    msg: format!("column {col}: value {x} is outside [0, 1)"),
                });
            }
            row.push(x);
        }
        match width {
            None => width = Some(row.len()),
            Some(w) if w != row.len() => {
                return Err(DesignError::Parse {
                    line,
                    msg: format!("expected {w} values, found {}", row.len()),
                })
            }
            _ => {}
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(DesignError::Invalid(elhs_core::Error::Empty));
    }
    SampleSet::from_rows(&rows).map_err(DesignError::Invalid)
}

pub fn parse_json(text: &str) -> Result<SampleSet, DesignError> {
    let doc: JsonDesign = serde_json::from_str(text).map_err(DesignError::Json)?;
    if doc.samples.len() != doc.n {
        return Err(DesignError::Invalid(elhs_core::Error::ShapeMismatch {
            n: doc.n,
            p: doc.p,
            len: doc.samples.len(),
        }));
    }
    if let Some((row, r)) = doc.samples.iter().enumerate().find(|(_, r)| r.len() != doc.p) {
        return Err(DesignError::Invalid(elhs_core::Error::Ragged {
            row,
            expected: doc.p,
            found: r.len(),
        }));
    }
    SampleSet::from_rows(&doc.samples).map_err(DesignError::Invalid)
}

/// Parses `text`, picking JSON when it starts with `{`.
pub fn parse_design(text: &str) -> Result<SampleSet, DesignError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_csv(text)
    }
}

pub fn read_design(path: &Path) -> Result<SampleSet, DesignError> {
    parse_design(&fs::read_to_string(path)?)
}

/// CSV text; each `comments` entry becomes a leading `# ` line.
pub fn to_csv(set: &SampleSet, comments: &[String]) -> String {
    let mut out = String::with_capacity(set.n() * set.p() * 21 + 64);
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    for row in set.rows() {
        let fields: Vec<String> = row.iter().map(|&x| sig17(x)).collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

pub fn to_json(set: &SampleSet, meta: serde_json::Value) -> String {
    let doc = JsonDesign {
        p: set.p(),
        n: set.n(),
        samples: set.to_rows(),
        meta,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("design serializes");
    s.push('\n');
    s
}

pub fn render(
    set: &SampleSet,
    format: DesignFormat,
    comments: &[String],
    meta: serde_json::Value,
) -> String {
    match format {
        DesignFormat::Csv => to_csv(set, comments),
        DesignFormat::Json => to_json(set, meta),
    }
}
