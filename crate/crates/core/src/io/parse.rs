use crate::error::{Error, Result};
use crate::polytope::LatticePolytope;

/// Longest accepted integer literal, sign excluded.
pub const MAX_DIGITS: usize = 15;

/// How to read a square `r x r` matrix, where the shape does not tell
/// coordinates from points.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SquareLayout {
    #[default]
    ColumnsArePoints,
    RowsArePoints,
}

/// One record of a vertex-matrix file.
#[derive(Clone, Debug)]
pub struct ParsedRecord {
    /// Line of the header, counted from 1.
    pub line: usize,
    pub polytope: Result<LatticePolytope>,
    /// Input points that were duplicates or not vertices.
    pub dropped: usize,
    /// Text after the two header numbers.
    pub comment: String,
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn next_nonblank(&mut self) -> Option<(usize, &'a str)> {
        for (i, l) in self.inner.by_ref() {
            self.last = i + 1;
            if !l.trim().is_empty() {
                return Some((i + 1, l));
            }
        }
        None
    }
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.char_indices()
        .filter(move |&(i, c)| {
            !c.is_whitespace()
                && line[..i]
                    .chars()
                    .next_back()
                    .is_none_or(char::is_whitespace)
        })
        .map(move |(i, _)| {
            let rest = &line[i..];
            let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
            (line[..i].chars().count() + 1, &rest[..end])
        })
}

fn parse_int(tok: &str, line: usize, column: usize) -> Result<i64> {
    let digits = tok.strip_prefix(['-', '+']).unwrap_or(tok);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(line, column, format!("not an integer: {tok:?}")));
    }
    if digits.len() > MAX_DIGITS {
        return Err(parse_err(
            line,
            column,
            format!("integer longer than {MAX_DIGITS} digits"),
        ));
    }
    tok.parse()
        .map_err(|_| parse_err(line, column, format!("not an integer: {tok:?}")))
}

/// Reads the body of one record; the lines are consumed even when the
/// record turns out malformed, so the next record starts in the right place.
fn read_matrix(lines: &mut Lines<'_>, rows: usize, cols: usize) -> Result<Vec<Vec<i64>>> {
    let mut out = Vec::with_capacity(rows);
    let mut first_err = None;
    for _ in 0..rows {
        let Some((ln, text)) = lines.next_nonblank() else {
            return Err(first_err.unwrap_or_else(|| {
                parse_err(
                    lines.last + 1,
                    1,
                    format!("expected {rows} rows, input ended"),
                )
            }));
        };
        if first_err.is_some() {
            continue;
        }
        let toks: Vec<(usize, &str)> = tokens(text).collect();
        if toks.len() != cols {
            let column = toks.get(cols).map_or(text.len() + 1, |t| t.0);
            first_err = Some(parse_err(
                ln,
                column,
                format!("expected {cols} integers, found {}", toks.len()),
            ));
            continue;
        }
        match toks
            .iter()
            .map(|&(c, t)| parse_int(t, ln, c))
            .collect::<Result<Vec<_>>>()
        {
            Ok(row) => out.push(row),
            Err(e) => first_err = Some(e),
        }
    }
    match first_err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Parses every record of a vertex-matrix file. Each record is a header
/// line `r c [comment]` followed by `r` lines of `c` integers. With `r < c`
/// the columns are points, with `r > c` the rows are; a square matrix
/// follows `layout`. A malformed record yields an error for that record
/// only; a malformed header ends the input.
pub fn parse_vertex_matrix(text: &str, layout: SquareLayout) -> Vec<ParsedRecord> {
    let mut lines = Lines {
        inner: text.lines().enumerate(),
        last: 0,
    };
    let mut out = Vec::new();
    while let Some((line, header)) = lines.next_nonblank() {
        let toks: Vec<(usize, &str)> = tokens(header).collect();
        let dims = match toks.as_slice() {
            [(c1, r), (c2, c), ..] => {
                parse_int(r, line, *c1).and_then(|r| parse_int(c, line, *c2).map(|c| (r, c)))
            }
            _ => Err(parse_err(line, 1, "header must start with two integers")),
        };
        let (r, c) = match dims {
            Ok((r, c)) if r > 0 && c > 0 => (r as usize, c as usize),
            Ok(_) => {
                out.push(ParsedRecord {
                    line,
                    polytope: Err(parse_err(line, 1, "zero-dimensional data")),
                    dropped: 0,
                    comment: String::new(),
                });
                continue;
            }
            Err(e) => {
                out.push(ParsedRecord {
                    line,
                    polytope: Err(e),
                    dropped: 0,
                    comment: String::new(),
                });
                break;
            }
        };
        let comment = toks
            .get(2)
            .map_or("", |&(col, _)| {
                let start = header.char_indices().nth(col - 1).map_or(0, |(i, _)| i);
                header[start..].trim_end()
            })
            .to_string();
        let (polytope, dropped) = match read_matrix(&mut lines, r, c) {
            Ok(m) => {
                let rows_are_points = r > c || (r == c && layout == SquareLayout::RowsArePoints);
                let points = if rows_are_points {
                    m
                } else {
                    (0..c)
                        .map(|j| m.iter().map(|row| row[j]).collect())
                        .collect()
                };
                match LatticePolytope::hull_of(points) {
                    Ok((p, dropped)) => (Ok(p), dropped),
                    Err(e) => (Err(e), 0),
                }
            }
            Err(e) => (Err(e), 0),
        };
        out.push(ParsedRecord {
            line,
            polytope,
            dropped,
            comment,
        });
    }
    out
}
