//! Text formats for relations.
//!
//! Matrix form: an optional `elements: a b c` header, then `n` rows of `n`
//! space-separated `0`/`1` tokens. Pairs form: a required `elements:` header,
//! then one `a b` pair per line. In both, lines starting with `#` and blank
//! lines are ignored. Output is canonical: single spaces, every line
//! newline-terminated, and the matrix header is written only when the labels
//! are not the default `1..n`.

use std::fmt::Write;

use super::{IndexSet, Relation};
use crate::bits::BitSet;
use crate::error::{Error, Result};

const HEADER: &str = "elements:";

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Content lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn header_labels(line: &str) -> Option<Vec<String>> {
    line.strip_prefix(HEADER)
        .map(|rest| rest.split_whitespace().map(str::to_string).collect())
}

pub fn parse_matrix(text: &str) -> Result<Relation> {
    let mut lines = content_lines(text).peekable();
    let mut labels = None;
    if let Some(&(line_no, line)) = lines.peek() {
        if let Some(l) = header_labels(line) {
            IndexSet::new(l.clone()).map_err(|e| parse_err(line_no, e.to_string()))?;
            labels = Some(l);
            lines.next();
        }
    }
    let body: Vec<(usize, &str)> = lines.collect();
    let n = labels.as_ref().map_or(body.len(), Vec::len);
    if body.len() != n {
        let line = body.last().map_or(0, |&(l, _)| l);
        return Err(parse_err(
            line,
            format!("expected {n} matrix rows, found {}", body.len()),
        ));
    }
    let mut rows = Vec::with_capacity(n);
    for &(line_no, line) in &body {
        let mut row = BitSet::new(n);
        let mut width = 0;
        for (j, tok) in line.split_whitespace().enumerate() {
            width += 1;
            match tok {
                "0" => {}
                "1" if j < n => row.insert(j),
                "1" => {}
                other => return Err(parse_err(line_no, format!("non-binary entry `{other}`"))),
            }
        }
        if width != n {
            return Err(parse_err(
                line_no,
                format!("matrix is not square: row has {width} entries, expected {n}"),
            ));
        }
        rows.push(row);
    }
    let index = match labels {
        Some(l) => IndexSet::new(l).expect("checked above"),
        None => IndexSet::numbered(n),
    };
    Ok(Relation::from_rows(index, rows))
}

pub fn parse_pairs(text: &str) -> Result<Relation> {
    let mut lines = content_lines(text);
    let (line_no, first) = lines
        .next()
        .ok_or_else(|| parse_err(0, "missing `elements:` header"))?;
    let labels =
        header_labels(first).ok_or_else(|| parse_err(line_no, "missing `elements:` header"))?;
    let index = IndexSet::new(labels).map_err(|e| parse_err(line_no, e.to_string()))?;
    let n = index.size();
    let mut rows = vec![BitSet::new(n); n];
    for (line_no, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = toks[..] else {
            return Err(parse_err(
                line_no,
                format!("expected a pair, found `{line}`"),
            ));
        };
        let i = index
            .position(a)
            .map_err(|e| parse_err(line_no, e.to_string()))?;
        let j = index
            .position(b)
            .map_err(|e| parse_err(line_no, e.to_string()))?;
        rows[i].insert(j);
    }
    Ok(Relation::from_rows(index, rows))
}

pub fn write_matrix(rel: &Relation) -> String {
    let mut out = String::new();
    if !rel.index_set().is_numbered() {
        write_header(&mut out, rel);
    }
    for row in rel.rows() {
        for j in 0..rel.size() {
            if j > 0 {
                out.push(' ');
            }
            out.push(if row.contains(j) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

pub fn write_pairs(rel: &Relation) -> String {
    let mut out = String::new();
    write_header(&mut out, rel);
    for (a, b) in rel.to_pairs() {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

fn write_header(out: &mut String, rel: &Relation) {
    out.push_str(HEADER);
    for l in rel.index_set().labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
}
