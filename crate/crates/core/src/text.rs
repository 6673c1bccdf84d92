//! Plain-text formats for Cayley tables and pair masks.
//!
//! A table file holds the order on its first line and then one row per line,
//! entries separated by whitespace:
//!
//! ```text
//! # Example: a, b, c are 0, 1, 2
//! 3
//! 0 0 2
//! 1 1 1
//! 0 2 2
//! ```
//!
//! Blank lines and lines starting with `#` are skipped. A mask is written
//! `n:` followed by its `L`/`R` flags in canonical pair order, e.g. `3:LRL`.

use std::fmt::Write;

use thiserror::Error;

use crate::center::{pair_count, PairMask};
use crate::groupoid::Groupoid;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
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

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_table(text: &str) -> Result<Groupoid, ParseError> {
    let mut lines = content_lines(text);
    let (first, header) = lines.next().ok_or_else(|| err(1, "missing order line"))?;
    let order: usize = header
        .parse()
        .map_err(|_| err(first, format!("expected the order, found {header:?}")))?;
    if order == 0 || order > crate::MAX_ORDER {
        return Err(err(
            first,
            format!("order must be between 1 and {}", crate::MAX_ORDER),
        ));
    }
    let mut entries = Vec::with_capacity(order * order);
    let mut last = first;
    for row in 0..order {
        let (line, content) = lines
            .next()
            .ok_or_else(|| err(last + 1, format!("missing row {row} of {order}")))?;
        last = line;
        let values = content
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| err(line, format!("invalid entry {tok:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if values.len() != order {
            return Err(err(
                line,
                format!("expected {order} entries, found {}", values.len()),
            ));
        }
        if let Some(v) = values.iter().find(|&&v| v >= order) {
            return Err(err(
                line,
                format!("entry {v} is out of range for order {order}"),
            ));
        }
        entries.extend(values);
    }
    if let Some((line, _)) = lines.next() {
        return Err(err(line, "unexpected content after the last row"));
    }
    Groupoid::new(order, &entries).map_err(|e| err(first, e.to_string()))
}

/// Order line, then rows with single-space separators; ends with a newline.
pub fn render_table(g: &Groupoid) -> String {
    let n = g.order();
    let mut out = format!("{n}\n");
    for x in 0..n {
        for y in 0..n {
            if y > 0 {
                out.push(' ');
            }
            write!(out, "{}", g.get(x, y)).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_mask(text: &str) -> Result<PairMask, ParseError> {
    let mut lines = content_lines(text);
    let (line, content) = lines.next().ok_or_else(|| err(1, "missing mask"))?;
    if let Some((extra, _)) = lines.next() {
        return Err(err(extra, "unexpected content after the mask"));
    }
    let (order, flags) = content
        .split_once(':')
        .ok_or_else(|| err(line, "expected n:FLAGS"))?;
    let order: usize = order
        .trim()
        .parse()
        .map_err(|_| err(line, format!("invalid order {order:?}")))?;
    if order == 0 || order > crate::MAX_ORDER {
        return Err(err(
            line,
            format!("order must be between 1 and {}", crate::MAX_ORDER),
        ));
    }
    let flags = flags.trim();
    if flags.chars().count() != pair_count(order) {
        return Err(err(
            line,
            format!(
                "order {order} needs {} flags, found {}",
                pair_count(order),
                flags.chars().count()
            ),
        ));
    }
    PairMask::parse(order, flags).map_err(|e| err(line, e.to_string()))
}

/// `n:FLAGS`, without a trailing newline.
pub fn render_mask(m: &PairMask) -> String {
    format!("{}:{}", m.order(), m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_blank_lines() {
        let g = parse_table("# a comment\n\n3\n0 0 2\n1 1 1\n\n0 2 2\n").unwrap();
        assert_eq!(g, Groupoid::new(3, &[0, 0, 2, 1, 1, 1, 0, 2, 2]).unwrap());
        assert_eq!(render_table(&g), "3\n0 0 2\n1 1 1\n0 2 2\n");
    }

    #[test]
    fn reports_line_numbers() {
        assert_eq!(parse_table("2\n0 0\n1\n").unwrap_err().line, 3);
        assert_eq!(parse_table("2\n0 0\n1 2\n").unwrap_err().line, 3);
        assert_eq!(parse_table("# c\n2\n0 x\n1 1\n").unwrap_err().line, 3);
        assert_eq!(parse_table("2\n0 0\n").unwrap_err().line, 3);
        assert_eq!(parse_table("2\n0 0\n1 1\n1 1\n").unwrap_err().line, 4);
        assert_eq!(parse_table("zero\n").unwrap_err().line, 1);
        assert_eq!(parse_table("0\n").unwrap_err().line, 1);
        assert_eq!(parse_table("").unwrap_err().line, 1);
        let msg = parse_table("2\n0 0\n1 2\n").unwrap_err().to_string();
        assert_eq!(msg, "line 3: entry 2 is out of range for order 2");
    }

    #[test]
    fn mask_text() {
        let m = parse_mask("3:LRL\n").unwrap();
        assert_eq!(render_mask(&m), "3:LRL");
        assert_eq!(render_mask(&parse_mask("1:").unwrap()), "1:");
        assert!(parse_mask("3:LR").is_err());
        assert!(parse_mask("3:LRX").is_err());
        assert!(parse_mask("LRL").is_err());
        assert!(parse_mask("3:LRL\n2:L").is_err());
    }
}
