//! Plain-text formats for diagrams, landscapes and finite metrics.
//!
//! Diagrams: one pair per line, `birth death [multiplicity]`.
//! Landscapes: one curve per line, `k t:h t:h ...`, `k` starting at 1.
//! Metrics: the size `n` on the first line, then `n` rows of `n` entries.
//!
//! Values are integers, `p/q` fractions or decimals. `#` starts a comment;
//! blank lines are ignored.

use std::fmt;

use crate::diagram::{BirthDeathPair, PersistenceDiagram};
use crate::landscape::LandscapeSequence;
use crate::metrics::FiniteMetric;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// Non-blank lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn scalar(line: usize, token: &str) -> Result<Scalar, ParseError> {
    token.parse().map_err(|e| err(line, format!("{e}")))
}

pub fn parse_diagram(text: &str) -> Result<PersistenceDiagram, ParseError> {
    let mut entries = Vec::new();
    for (n, line) in content_lines(text) {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let (b, d, m) = match fields.as_slice() {
            [b, d] => (*b, *d, 1usize),
            [b, d, m] => {
                let m: usize = m
                    .parse()
                    .map_err(|_| err(n, format!("invalid multiplicity `{m}`")))?;
                if m == 0 {
                    return Err(err(n, "multiplicity must be at least 1"));
                }
                (*b, *d, m)
            }
            _ => return Err(err(n, "expected `birth death [multiplicity]`")),
        };
        let pair = BirthDeathPair::new(scalar(n, b)?, scalar(n, d)?)
            .map_err(|e| err(n, e.to_string()))?;
        entries.push((pair, m));
    }
    Ok(PersistenceDiagram::from_entries(entries))
}

/// Canonical text form: sorted pairs, multiplicity written when above 1.
pub fn format_diagram(y: &PersistenceDiagram) -> String {
    y.to_string()
}

impl fmt::Display for PersistenceDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, m) in self.entries() {
            if *m == 1 {
                writeln!(f, "{} {}", p.birth(), p.death())?;
            } else {
                writeln!(f, "{} {} {}", p.birth(), p.death(), m)?;
            }
        }
        Ok(())
    }
}

/// Raw curves indexed from depth 1; depths that are not listed are zero.
/// No landscape properties are checked.
pub fn parse_landscape_curves(text: &str) -> Result<Vec<Vec<(Scalar, Scalar)>>, ParseError> {
    let mut curves: Vec<Option<Vec<(Scalar, Scalar)>>> = Vec::new();
    for (n, line) in content_lines(text) {
        let mut fields = line.split_whitespace();
        let k: usize = fields
            .next()
            .and_then(|k| k.parse().ok())
            .filter(|&k| k >= 1)
            .ok_or_else(|| err(n, "expected a curve index k >= 1"))?;
        let mut points = Vec::new();
        for token in fields {
            let (t, h) = token
                .split_once(':')
                .ok_or_else(|| err(n, format!("expected `t:h`, got `{token}`")))?;
            points.push((scalar(n, t)?, scalar(n, h)?));
        }
        if curves.len() < k {
            curves.resize(k, None);
        }
        if curves[k - 1].is_some() {
            return Err(err(n, format!("curve {k} listed twice")));
        }
        curves[k - 1] = Some(points);
    }
    Ok(curves.into_iter().map(Option::unwrap_or_default).collect())
}

/// Parses and validates a landscape sequence. Property violations are
/// reported against the line of the offending curve where possible, else the
/// last line.
pub fn parse_landscape(text: &str) -> Result<LandscapeSequence, ParseError> {
    let curves = parse_landscape_curves(text)?;
    let last_line = text.lines().count().max(1);
    LandscapeSequence::from_curves(curves).map_err(|e| err(last_line, e.to_string()))
}

pub fn format_landscape(lambda: &LandscapeSequence) -> String {
    lambda.to_string()
}

pub fn parse_metric(text: &str) -> Result<FiniteMetric, ParseError> {
    let mut lines = content_lines(text);
    let (first, header) = lines.next().ok_or_else(|| err(1, "missing size line"))?;
    let n: usize = header
        .parse()
        .map_err(|_| err(first, format!("invalid size `{header}`")))?;
    let mut rows = Vec::with_capacity(n);
    let mut last = first;
    for (line, content) in lines {
        last = line;
        if rows.len() == n {
            return Err(err(line, format!("more than {n} rows")));
        }
        let row = content
            .split_whitespace()
            .map(|t| scalar(line, t))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(err(line, format!("expected {n} entries, got {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(err(last, format!("expected {n} rows, got {}", rows.len())));
    }
    FiniteMetric::new(rows).map_err(|e| err(last, e.to_string()))
}
