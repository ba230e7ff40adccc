//! Reading degree polynomial sequences from text.
//!
//! Two layouts are accepted. A JSON array whose items are either
//! polynomial strings (`"2x^2+x"`) or term lists (`[[2, 2], [1, 1]]`), or
//! plain text with polynomials separated by commas and/or newlines. In
//! plain text `#` starts a comment and blank lines are skipped.

use std::fmt;

use serde_json::Value;

use crate::DegreePoly;

/// Where and why reading failed. `line` and `column` are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqParseError {
    pub line: usize,
    pub column: usize,
    pub msg: String,
}

impl fmt::Display for SeqParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.msg)
    }
}

impl std::error::Error for SeqParseError {}

pub fn parse_sequence(text: &str) -> Result<Vec<DegreePoly>, SeqParseError> {
    if text.trim_start().starts_with('[') {
        parse_json(text)
    } else {
        parse_plain(text)
    }
}

fn parse_json(text: &str) -> Result<Vec<DegreePoly>, SeqParseError> {
    let err = |e: serde_json::Error| SeqParseError { line: e.line(), column: e.column(), msg: e.to_string() };
    let items: Vec<Value> = serde_json::from_str(text).map_err(err)?;
    items
        .into_iter()
        .enumerate()
        .map(|(i, item)| {
            let fail = |msg: String| SeqParseError { line: 1, column: 1, msg: format!("item {}: {msg}", i + 1) };
            match item {
                Value::String(s) => s.parse::<DegreePoly>().map_err(|e| fail(e.to_string())),
                other => serde_json::from_value(other).map_err(|e| fail(e.to_string())),
            }
        })
        .collect()
}

fn parse_plain(text: &str) -> Result<Vec<DegreePoly>, SeqParseError> {
    let mut out = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut start = 0;
        for piece in line.split(',') {
            let lead = piece.len() - piece.trim_start().len();
            if !piece.trim().is_empty() {
                let p = piece.parse::<DegreePoly>().map_err(|e| SeqParseError {
                    line: ln + 1,
                    column: start + e.position().min(piece.len()) + 1,
                    msg: e.reason().to_string(),
                })?;
                out.push(p);
            } else if line.contains(',') {
                return Err(SeqParseError { line: ln + 1, column: start + lead + 1, msg: "empty entry".into() });
            }
            start += piece.len() + 1;
        }
    }
    if out.is_empty() {
        return Err(SeqParseError { line: 1, column: 1, msg: "no polynomials found".into() });
    }
    Ok(out)
}
