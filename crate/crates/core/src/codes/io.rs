//! Plain-text matrix files.
//!
//! ```text
//! # comment
//! gamma=2 delta=3
//! 10 | 123
//! 01 | 202
//! ```

use std::fmt::Write as _;

use super::GeneratorMatrix;
use crate::alphabet::MixedVector;
use crate::error::{Error, Result};

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn parse_header(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut gamma = None;
    let mut delta = None;
    for field in line.split_whitespace() {
        let (key, value) = field.split_once('=').ok_or_else(|| Error::Parse {
            line: lineno,
            message: format!("expected key=value, found `{field}`"),
        })?;
        let value: usize = value.parse().map_err(|_| Error::Parse {
            line: lineno,
            message: format!("`{value}` is not a nonnegative integer"),
        })?;
        match key {
            "gamma" => gamma = Some(value),
            "delta" => delta = Some(value),
            other => {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("unknown header key `{other}`"),
                })
            }
        }
    }
    match (gamma, delta) {
        (Some(g), Some(d)) => Ok((g, d)),
        _ => Err(Error::Parse {
            line: lineno,
            message: "header must be `gamma=<g> delta=<d>`".into(),
        }),
    }
}

pub fn parse_matrix(text: &str) -> Result<GeneratorMatrix> {
    let mut shape = None;
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        match shape {
            None => shape = Some(parse_header(line, lineno)?),
            Some((gamma, delta)) => {
                let row: MixedVector = line.parse().map_err(|e| match e {
                    Error::Parse { message, .. } => Error::Parse { line: lineno, message },
                    other => Error::Parse {
                        line: lineno,
                        message: other.to_string(),
                    },
                })?;
                if row.shape() != (gamma, delta) {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!(
                            "row has gamma={} delta={}, header says gamma={gamma} delta={delta}",
                            row.gamma(),
                            row.delta()
                        ),
                    });
                }
                rows.push(row);
            }
        }
    }
    let (gamma, delta) = shape.ok_or(Error::Parse {
        line: 0,
        message: "missing `gamma=<g> delta=<d>` header".into(),
    })?;
    GeneratorMatrix::new(gamma, delta, rows)
}

pub fn write_matrix(g: &GeneratorMatrix) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "gamma={} delta={}", g.gamma(), g.delta());
    for r in g.rows() {
        let _ = writeln!(out, "{r}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_with_comments() {
        let text = "# repetition\ngamma=2 delta=2\n\n11 | 11  # generator\n00|02\n";
        let g = parse_matrix(text).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(write_matrix(&g), "gamma=2 delta=2\n11 | 11\n00 | 02\n");
        assert_eq!(parse_matrix(&write_matrix(&g)).unwrap(), g);
    }

    #[test]
    fn zero_matrix() {
        let g = parse_matrix("gamma=3 delta=1\n").unwrap();
        assert!(g.is_empty());
        assert_eq!(g.shape(), (3, 1));
    }

    #[test]
    fn errors_carry_line_numbers() {
        match parse_matrix("gamma=1 delta=1\n1 | 1\n1 | 11\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        match parse_matrix("gamma=1 delta=1\n1 | 5\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_matrix("gamma=1\n").is_err());
        assert!(parse_matrix("").is_err());
    }
}
