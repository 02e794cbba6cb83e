//! The line-oriented `.sgp` table format.
//!
//! ```text
//! # comment
//! elements: 0 e f a b
//! zero: 0
//! table:
//! 0 0 0 0 0
//! ...
//! ```

use super::{FiniteSemigroup, DEFAULT_MAX_ORDER};
use crate::error::ParseError;

pub fn parse_semigroup(text: &str) -> Result<FiniteSemigroup, ParseError> {
    parse_semigroup_with_limit(text, DEFAULT_MAX_ORDER)
}

pub fn parse_semigroup_with_limit(text: &str, max_order: usize) -> Result<FiniteSemigroup, ParseError> {
    let mut elements: Option<Vec<String>> = None;
    let mut zero: Option<(usize, String)> = None;
    let mut rows: Vec<(usize, Vec<String>)> = Vec::new();
    let mut in_table = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if in_table {
            rows.push((line_no, line.split_whitespace().map(str::to_string).collect()));
            continue;
        }
        let Some((key, value)) = line.split_once(':') else {
            return Err(syntax(line_no, format!("expected `key: value`, found `{line}`")));
        };
        match key.trim() {
            "elements" => {
                if elements.is_some() {
                    return Err(syntax(line_no, "`elements` declared twice"));
                }
                let names: Vec<String> = value.split_whitespace().map(str::to_string).collect();
                if names.is_empty() {
                    return Err(syntax(line_no, "no elements declared"));
                }
                if names.len() > max_order {
                    return Err(ParseError::TooLarge {
                        order: names.len(),
                        max: max_order,
                    });
                }
                elements = Some(names);
            }
            "zero" => {
                let name = value.trim();
                if name.is_empty() || name.contains(char::is_whitespace) {
                    return Err(syntax(line_no, "`zero` takes exactly one element name"));
                }
                zero = Some((line_no, name.to_string()));
            }
            "table" => {
                if !value.trim().is_empty() {
                    return Err(syntax(line_no, "`table:` must be followed by rows on later lines"));
                }
                in_table = true;
            }
            other => return Err(syntax(line_no, format!("unknown key `{other}`"))),
        }
    }

    let elements = elements.ok_or_else(|| syntax(0, "missing `elements:` line"))?;
    if !in_table {
        return Err(syntax(0, "missing `table:` section"));
    }
    let n = elements.len();
    if rows.len() != n {
        return Err(ParseError::RowCount {
            found: rows.len(),
            expected: n,
        });
    }
    let lookup = |line: usize, name: &str| {
        elements
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| ParseError::UnknownElement {
                line,
                name: name.to_string(),
            })
    };
    let mut table = Vec::with_capacity(n);
    for (row_idx, (line_no, cells)) in rows.iter().enumerate() {
        if cells.len() != n {
            return Err(ParseError::RowLength {
                row: row_idx,
                found: cells.len(),
                expected: n,
            });
        }
        table.push(cells.iter().map(|c| lookup(*line_no, c)).collect::<Result<Vec<_>, _>>()?);
    }
    let declared_zero = zero.map(|(line, name)| lookup(line, &name)).transpose()?;
    let s = FiniteSemigroup::from_rows(elements, table)?;
    if let Some(z) = declared_zero {
        if s.zero() != Some(z) {
            return Err(ParseError::BadZero(s.name(z).to_string()));
        }
    }
    Ok(s)
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// Serializes a semigroup in `.sgp` form. The `zero:` line is written only
/// for semigroups with a zero and at least two elements.
pub fn render_semigroup(s: &FiniteSemigroup, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            out.push_str("# ");
            out.push_str(line);
            out.push('\n');
        }
    }
    out.push_str("elements: ");
    out.push_str(&s.names().join(" "));
    out.push('\n');
    if let Some(z) = s.proper_zero() {
        out.push_str("zero: ");
        out.push_str(s.name(z));
        out.push('\n');
    }
    out.push_str("table:\n");
    for a in 0..s.order() {
        let row: Vec<&str> = s.row(a).iter().map(|&x| s.name(x)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
