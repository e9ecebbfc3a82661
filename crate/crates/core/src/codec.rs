//! Text encodings: a plain edge list and short-form graph6.
//!
//! Edge list:
//!
//! ```text
//! # optional comments
//! n m
//! u v      (exactly m lines, 0 <= u, v < n, u != v)
//! ```
//!
//! graph6 (n <= 62): one header byte `63 + n`, then the upper triangle of
//! the adjacency matrix in column order `(0,1), (0,2), (1,2), (0,3), ...`
//! packed six bits per byte, most significant first, each byte offset by 63.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order expressible in the short graph6 form.
pub const GRAPH6_MAX_N: usize = 62;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Format {
    EdgeList,
    Graph6,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(Format::EdgeList),
            "graph6" => Ok(Format::Graph6),
            other => Err(Error::InvalidParameter(format!("unknown format {other:?}"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::EdgeList => "edgelist",
            Format::Graph6 => "graph6",
        })
    }
}

pub fn parse_graph(text: &[u8], format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edgelist(text),
        Format::Graph6 => parse_graph6(text),
    }
}

/// File contents in `format`; both end with a newline.
pub fn serialize_graph(g: &Graph, format: Format) -> Result<Vec<u8>> {
    match format {
        Format::EdgeList => Ok(to_edgelist(g).into_bytes()),
        Format::Graph6 => to_graph6(g).map(|s| format!("{s}\n").into_bytes()),
    }
}

/// Guesses the format: an edge list header contains whitespace, a graph6
/// string never does.
pub fn detect_format(text: &[u8]) -> Format {
    let first = text
        .split(|&b| b == b'\n')
        .map(|line| line.trim_ascii())
        .find(|line| !line.is_empty() && !line.starts_with(b"#"));
    match first {
        Some(line) if line.iter().any(u8::is_ascii_whitespace) => Format::EdgeList,
        Some(_) => Format::Graph6,
        None => Format::EdgeList,
    }
}

pub fn parse_edgelist(text: &[u8]) -> Result<Graph> {
    let text = std::str::from_utf8(text).map_err(|e| Error::EdgeList {
        line: 0,
        msg: format!("not UTF-8: {e}"),
    })?;
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::EdgeList {
        line: 1,
        msg: "missing \"n m\" header".into(),
    })?;
    let (n, m) = parse_pair(header_line, header, "header")?;
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::EdgeList {
            line: header_line,
            msg: format!("n = {n} exceeds {}", crate::graph::MAX_VERTICES),
        });
    }

    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, body) = lines.next().ok_or(Error::EdgeList {
            line: text.lines().count() + 1,
            msg: format!("expected {m} edges, found {}", edges.len()),
        })?;
        let (u, v) = parse_pair(line, body, "edge")?;
        if u >= n || v >= n {
            return Err(Error::EdgeList {
                line,
                msg: format!("vertex index out of range 0..{n} in \"{body}\""),
            });
        }
        if u == v {
            return Err(Error::EdgeList {
                line,
                msg: format!("self-loop at vertex {u}"),
            });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::EdgeList {
                line,
                msg: format!("duplicate edge {u} {v}"),
            });
        }
        edges.push((u, v));
    }
    if let Some((line, body)) = lines.next() {
        return Err(Error::EdgeList {
            line,
            msg: format!("unexpected content after {m} edges: \"{body}\""),
        });
    }
    Graph::from_edges(n, edges)
}

fn parse_pair(line: usize, body: &str, what: &str) -> Result<(usize, usize)> {
    let mut fields = body.split_whitespace();
    let mut next = || -> Result<usize> {
        let field = fields.next().ok_or_else(|| Error::EdgeList {
            line,
            msg: format!("malformed {what}: expected two integers in \"{body}\""),
        })?;
        field.parse().map_err(|_| Error::EdgeList {
            line,
            msg: format!("malformed {what}: \"{field}\" is not a non-negative integer"),
        })
    };
    let pair = (next()?, next()?);
    if fields.next().is_some() {
        return Err(Error::EdgeList {
            line,
            msg: format!("malformed {what}: trailing fields in \"{body}\""),
        });
    }
    Ok(pair)
}

pub fn to_edgelist(g: &Graph) -> String {
    use fmt::Write;
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let body = text.trim_ascii_end();
    let Some(&header) = body.first() else {
        return Err(Error::Graph6 {
            offset: 0,
            msg: "empty input".into(),
        });
    };
    if header == 126 {
        return Err(Error::Graph6 {
            offset: 0,
            msg: "long-form header (n > 62) is not supported".into(),
        });
    }
    if !(63..=125).contains(&header) {
        return Err(Error::Graph6 {
            offset: 0,
            msg: format!("illegal header byte {header:#04x}"),
        });
    }
    let n = (header - 63) as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    let data = &body[1..];
    if let Some(pos) = data.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::Graph6 {
            offset: pos + 1,
            msg: format!("illegal graph6 character {:#04x}", data[pos]),
        });
    }
    if data.len() != expected {
        return Err(Error::Graph6 {
            offset: 1 + data.len().min(expected),
            msg: format!("expected {expected} data bytes for n = {n}, found {}", data.len()),
        });
    }

    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    for pad in bit_count..expected * 6 {
        if bit(pad) {
            return Err(Error::Graph6 {
                offset: 1 + pad / 6,
                msg: "non-zero padding bits".into(),
            });
        }
    }
    Graph::from_edges(n, edges)
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::TooLarge {
            n,
            max: GRAPH6_MAX_N,
            context: "short-form graph6",
        });
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((63 + n as u8) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}
