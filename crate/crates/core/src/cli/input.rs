//! Parsers for command-line values.

use std::io::Read;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::exact::rational::{parse_rational, Rational};
use crate::exact::Poly;

pub fn rational(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// A list of sizes given as `"5"`, `"2..8"` (inclusive) or `"1,3,4"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sizes(pub Vec<usize>);

pub fn sizes(s: &str) -> std::result::Result<Sizes, String> {
    size_list(s).map(Sizes)
}

pub fn size_list(s: &str) -> std::result::Result<Vec<usize>, String> {
    let s = s.trim();
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("invalid size `{t}`"));
    if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let (a, b) = (num(a)?, num(b)?);
        if a > b {
            return Err(format!("empty range `{s}`"));
        }
        return Ok((a..=b).collect());
    }
    s.split(',').map(num).collect()
}

/// Comma-separated rationals, or a JSON array of `"p/q"` strings and integers.
pub fn poly_text(text: &str) -> Result<Poly> {
    let text = text.trim();
    if !text.starts_with('[') {
        return Poly::parse_csv(text);
    }
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON polynomial: {e}")))?;
    let items = value
        .as_array()
        .ok_or_else(|| Error::Parse("JSON polynomial must be an array".into()))?;
    if items.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    items
        .iter()
        .map(|v| match v {
            Value::String(s) => parse_rational(s),
            Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
            other => Err(Error::Parse(format!("invalid coefficient {other}"))),
        })
        .collect::<Result<Vec<_>>>()
        .map(Poly::from_coeffs)
}

/// Literal text, `@path` for a file, or `-` for stdin.
pub fn poly_argument(arg: &str) -> Result<Poly> {
    if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
        return poly_text(&buf);
    }
    if let Some(path) = arg.strip_prefix('@') {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
        return poly_text(&text);
    }
    poly_text(arg)
}
