//! Text formats for degree sequences and hypergraphs.
//!
//! Degree files hold whitespace-separated non-negative integers, `#` starts a
//! comment. A general sequence is one line; a tripartite sequence is three
//! lines prefixed `A:`, `B:` and `C:`.
//!
//! Hypergraph files start with `hypergraph <n> <m>` or
//! `tripartite <a> <b> <c> <m>`, followed by one edge per line, vertices in
//! increasing order and lines in increasing numeric order.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::types::{DegreeSequence, Hypergraph, TripartiteDegreeSequence, TripartiteHypergraph};

/// A parsed degree file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceInput {
    General(DegreeSequence),
    Tripartite(TripartiteDegreeSequence),
}

/// A parsed hypergraph file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HypergraphInput {
    General(Hypergraph),
    Tripartite(TripartiteHypergraph),
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// A non-empty line with the comment stripped, plus its 1-based number.
struct Logical<'a> {
    number: usize,
    text: &'a str,
}

fn logical_lines(text: &str) -> Vec<Logical<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let text = raw.split('#').next().unwrap_or("");
            (!text.trim().is_empty()).then_some(Logical {
                number: i + 1,
                text,
            })
        })
        .collect()
}

/// Whitespace-separated tokens of `text` with their 1-based character column,
/// `offset` characters already consumed before `text`.
fn tokens(text: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    let mut col = offset;
    for (byte, ch) in text.char_indices() {
        col += 1;
        if ch.is_whitespace() {
            if let Some((b, c)) = start.take() {
                out.push((c, &text[b..byte]));
            }
        } else if start.is_none() {
            start = Some((byte, col));
        }
    }
    if let Some((b, c)) = start {
        out.push((c, &text[b..]));
    }
    out
}

fn parse_degree(line: usize, column: usize, token: &str) -> Result<u32> {
    if let Some(rest) = token.strip_prefix('-') {
        if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(parse_error(
                line,
                column,
                format!("negative value `{token}`"),
            ));
        }
    }
    if !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_error(
            line,
            column,
            format!("malformed token `{token}`"),
        ));
    }
    token
        .parse()
        .map_err(|_| parse_error(line, column, format!("value `{token}` is out of range")))
}

fn parse_degrees(line: usize, text: &str, offset: usize) -> Result<Vec<u32>> {
    tokens(text, offset)
        .into_iter()
        .map(|(col, tok)| parse_degree(line, col, tok))
        .collect()
}

/// Parses a degree file into a general or a tripartite sequence.
pub fn parse_degree_text(text: &str) -> Result<SequenceInput> {
    let lines = logical_lines(text);
    let Some(first) = lines.first() else {
        return Err(parse_error(1, 1, "no degrees found"));
    };
    let labelled = first
        .text
        .trim_start()
        .starts_with(|c: char| c.is_ascii_alphabetic());

    if !labelled {
        if let Some(extra) = lines.get(1) {
            return Err(parse_error(
                extra.number,
                1,
                "a general sequence takes exactly one line",
            ));
        }
        let degrees = parse_degrees(first.number, first.text, 0)?;
        return Ok(SequenceInput::General(DegreeSequence::new(degrees)?));
    }

    let mut classes: Vec<Vec<u32>> = Vec::with_capacity(3);
    for (slot, label) in ["A:", "B:", "C:"].iter().enumerate() {
        let Some(line) = lines.get(slot) else {
            let after = lines.last().map_or(1, |l| l.number + 1);
            return Err(parse_error(
                after,
                1,
                format!(
                    "expected three lines labelled A:, B:, C:, found {}",
                    lines.len()
                ),
            ));
        };
        let lead = line.text.len() - line.text.trim_start().len();
        let body = &line.text[lead..];
        let lead_cols = line.text[..lead].chars().count();
        let Some(rest) = body.strip_prefix(label) else {
            let got = body.split_whitespace().next().unwrap_or("");
            return Err(parse_error(
                line.number,
                lead_cols + 1,
                format!("expected label `{label}`, found `{got}`"),
            ));
        };
        let degrees = parse_degrees(line.number, rest, lead_cols + label.len())?;
        if degrees.is_empty() {
            return Err(parse_error(
                line.number,
                lead_cols + 1,
                format!("class {} has no degrees", &label[..1]),
            ));
        }
        classes.push(degrees);
    }
    if let Some(extra) = lines.get(3) {
        return Err(parse_error(
            extra.number,
            1,
            "a tripartite sequence takes exactly three lines",
        ));
    }
    let [a, b, c]: [Vec<u32>; 3] = classes.try_into().expect("three classes");
    Ok(SequenceInput::Tripartite(
        TripartiteDegreeSequence::from_vecs(a, b, c)?,
    ))
}

pub fn format_degree_sequence(d: &DegreeSequence) -> String {
    format!("{d}\n")
}

pub fn format_tripartite_sequence(d: &TripartiteDegreeSequence) -> String {
    let [a, b, c] = d.classes();
    format!("A: {a}\nB: {b}\nC: {c}\n")
}

pub fn format_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("hypergraph {} {}\n", h.vertex_count(), h.edge_count());
    for [u, v, w] in h.edges() {
        writeln!(out, "v{u} v{v} v{w}").expect("writing to a String");
    }
    out
}

pub fn format_tripartite(h: &TripartiteHypergraph) -> String {
    let [a, b, c] = h.sizes();
    let mut out = format!("tripartite {a} {b} {c} {}\n", h.edge_count());
    for (i, j, l) in h.edges() {
        writeln!(out, "A{i} B{j} C{l}").expect("writing to a String");
    }
    out
}

fn parse_count(line: usize, column: usize, token: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_error(line, column, format!("malformed count `{token}`")))
}

fn parse_label(line: usize, column: usize, token: &str, prefix: char) -> Result<usize> {
    token
        .strip_prefix(prefix)
        .filter(|rest| !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()))
        .and_then(|rest| rest.parse().ok())
        .ok_or_else(|| {
            parse_error(
                line,
                column,
                format!("expected a vertex label `{prefix}<i>`, found `{token}`"),
            )
        })
}

/// Parses the output of [`format_hypergraph`] or [`format_tripartite`].
pub fn parse_hypergraph_text(text: &str) -> Result<HypergraphInput> {
    let lines = logical_lines(text);
    let Some(header) = lines.first() else {
        return Err(parse_error(1, 1, "missing header line"));
    };
    let head = tokens(header.text, 0);
    let kind = head.first().map(|t| t.1).unwrap_or("");
    let arity = match kind {
        "hypergraph" => 2,
        "tripartite" => 4,
        _ => {
            return Err(parse_error(
                header.number,
                head.first().map_or(1, |t| t.0),
                format!("unknown header `{kind}`"),
            ))
        }
    };
    if head.len() != arity + 1 {
        return Err(parse_error(
            header.number,
            1,
            format!("`{kind}` header takes {arity} numbers"),
        ));
    }
    let counts = head[1..]
        .iter()
        .map(|&(col, tok)| parse_count(header.number, col, tok))
        .collect::<Result<Vec<_>>>()?;
    let declared = counts[arity - 1];
    let body = &lines[1..];
    if body.len() != declared {
        let at = body.get(declared).map_or(header.number, |l| l.number);
        return Err(parse_error(
            at,
            1,
            format!("header declares {declared} edges, found {}", body.len()),
        ));
    }

    let locate = |line: &Logical<'_>, e: Error| match e {
        Error::Parse { .. } => e,
        other => parse_error(line.number, 1, other.to_string()),
    };
    if kind == "hypergraph" {
        let mut h = Hypergraph::new(counts[0]);
        for line in body {
            let toks = tokens(line.text, 0);
            if toks.len() != 3 {
                return Err(parse_error(line.number, 1, "an edge has three vertices"));
            }
            let mut e = [0usize; 3];
            for (slot, &(col, tok)) in toks.iter().enumerate() {
                e[slot] = parse_label(line.number, col, tok, 'v')?;
            }
            let fresh = h
                .insert(e[0], e[1], e[2])
                .map_err(|err| locate(line, err))?;
            if !fresh {
                return Err(parse_error(line.number, 1, "duplicate edge"));
            }
        }
        Ok(HypergraphInput::General(h))
    } else {
        let mut h = TripartiteHypergraph::new(counts[0], counts[1], counts[2]);
        for line in body {
            let toks = tokens(line.text, 0);
            if toks.len() != 3 {
                return Err(parse_error(line.number, 1, "an edge has three vertices"));
            }
            let mut e = [0usize; 3];
            for (slot, (&(col, tok), prefix)) in toks.iter().zip(['A', 'B', 'C']).enumerate() {
                e[slot] = parse_label(line.number, col, tok, prefix)?;
                if e[slot] >= counts[slot] {
                    return Err(parse_error(
                        line.number,
                        col,
                        format!("`{tok}` is outside a class of {}", counts[slot]),
                    ));
                }
            }
            if !h.insert(e[0], e[1], e[2]) {
                return Err(parse_error(line.number, 1, "duplicate edge"));
            }
        }
        Ok(HypergraphInput::Tripartite(h))
    }
}
