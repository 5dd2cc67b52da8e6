//! Line-oriented `key = value` configuration files.
//!
//! ```text
//! # first Weyl algebra
//! name = weyl1
//! n = 1
//! b = 1
//! t1 = roots(0)
//! ```

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;
use crate::gwa::GwaSpec;

/// A parsed spec plus optional metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GwaConfig {
    pub spec: GwaSpec,
    pub name: Option<String>,
    pub description: Option<String>,
}

/// A value together with where it started in the source.
struct Located<'a> {
    line: usize,
    column: usize,
    text: &'a str,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_config(text: &str) -> Result<GwaConfig> {
    let mut entries: BTreeMap<String, Located> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let Some(eq) = content.find('=') else {
            let column = content.len() - content.trim_start().len() + 1;
            return Err(err(line, column, "expected `key = value`"));
        };
        let key = content[..eq].trim();
        if key.is_empty() {
            return Err(err(line, eq + 1, "missing key before `=`"));
        }
        let value_part = &content[eq + 1..];
        let value = value_part.trim();
        let column = eq + 2 + (value_part.len() - value_part.trim_start().len());
        let key_column = content.len() - content.trim_start().len() + 1;
        if !is_known_key(key) {
            return Err(err(line, key_column, format!("unknown key `{key}`")));
        }
        if entries.contains_key(key) {
            return Err(err(line, key_column, format!("duplicate key `{key}`")));
        }
        entries.insert(
            key.to_string(),
            Located {
                line,
                column,
                text: value,
            },
        );
    }

    let b_entry = entries
        .get("b")
        .ok_or_else(|| err(1, 1, "missing key `b`"))?;
    let steps = parse_list(b_entry, b_entry.text, b_entry.column)?;
    if let Some(i) = steps.iter().position(|b| b.is_zero()) {
        return Err(err(
            b_entry.line,
            b_entry.column,
            format!("b_i must be nonzero, but b_{} = 0", i + 1),
        ));
    }

    let n_entry = entries
        .get("n")
        .ok_or_else(|| err(1, 1, "missing key `n`"))?;
    let n: usize = n_entry
        .text
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| {
            err(
                n_entry.line,
                n_entry.column,
                "`n` must be a positive integer",
            )
        })?;

    if steps.len() != n {
        return Err(err(
            b_entry.line,
            b_entry.column,
            format!("`b` has {} entries but n = {n}", steps.len()),
        ));
    }

    let mut roots = Vec::with_capacity(n);
    for i in 1..=n {
        let key = format!("t{i}");
        let entry = entries
            .get(&key)
            .ok_or_else(|| err(1, 1, format!("missing key `{key}`")))?;
        roots.push(parse_roots(entry, i)?);
    }
    if let Some(extra) = entries.iter().find(|(k, _)| {
        k.starts_with('t') && k[1..].parse::<usize>().map_or(true, |i| i == 0 || i > n)
    }) {
        return Err(err(
            extra.1.line,
            1,
            format!("key `{}` does not match n = {n}", extra.0),
        ));
    }

    let spec = GwaSpec::from_roots(steps, roots)?;
    let meta = |k: &str| entries.get(k).map(|e| e.text.to_string());
    Ok(GwaConfig {
        spec,
        name: meta("name"),
        description: meta("description"),
    })
}

fn is_known_key(key: &str) -> bool {
    matches!(key, "n" | "b" | "name" | "description")
        || (key.len() > 1 && key.starts_with('t') && key[1..].bytes().all(|c| c.is_ascii_digit()))
}

fn parse_roots(entry: &Located, i: usize) -> Result<Vec<GaussianRational>> {
    let text = entry.text;
    let inner = text
        .strip_prefix("roots")
        .map(str::trim_start)
        .and_then(|s| s.strip_prefix('('))
        .and_then(|s| s.trim_end().strip_suffix(')'))
        .ok_or_else(|| {
            err(
                entry.line,
                entry.column,
                format!("expected `t{i} = roots(...)`"),
            )
        })?;
    let offset = text.find('(').map_or(0, |p| p + 1);
    if inner.trim().is_empty() {
        return Err(err(
            entry.line,
            entry.column,
            format!("t_{i} must be nonconstant, but roots() is empty"),
        ));
    }
    parse_list(entry, inner, entry.column + offset)
}

fn parse_list(entry: &Located, list: &str, start_column: usize) -> Result<Vec<GaussianRational>> {
    let mut out = Vec::new();
    let mut column = start_column;
    for piece in list.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let literal = piece.trim();
        let value = literal
            .parse::<GaussianRational>()
            .map_err(|e| err(entry.line, column + lead, e.to_string()))?;
        out.push(value);
        column += piece.len() + 1;
    }
    Ok(out)
}
