//! graph6, JSON and DOT encodings for graphs.
//!
//! graph6 follows the usual convention: `N(n)` followed by the upper triangle
//! read column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits
//! per byte big-endian, each byte offset by 63.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn parse_err(line: usize, byte: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position: format!("line {line}, byte {byte}"),
        message: message.into(),
    }
}

/// Encodes `g` as a graph6 line (no trailing newline, no header).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes a single graph6 string. `line` is only used in error positions.
pub fn from_graph6_line(s: &str, line: usize) -> Result<Graph> {
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(
                line,
                i,
                format!("byte {b:#04x} outside graph6 range 63..=126"),
            ));
        }
    }
    let val = |i: usize| -> Result<usize> {
        bytes
            .get(i)
            .map(|&b| (b - 63) as usize)
            .ok_or_else(|| parse_err(line, i, "truncated vertex count"))
    };
    let (n, mut pos) = match bytes.first() {
        None => return Err(parse_err(line, 0, "empty graph6 string")),
        Some(&126) if bytes.get(1) == Some(&126) => {
            let mut n = 0;
            for i in 2..8 {
                n = (n << 6) | val(i)?;
            }
            (n, 8)
        }
        Some(&126) => {
            let mut n = 0;
            for i in 1..4 {
                n = (n << 6) | val(i)?;
            }
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if bytes.len() != pos + need {
        return Err(parse_err(
            line,
            bytes.len().min(pos + need),
            format!("expected {} bytes for {n} vertices, found {}", pos + need, bytes.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut current = 0u8;
    for v in 1..n {
        for u in 0..v {
            if bit.is_multiple_of(6) {
                current = bytes[pos] - 63;
                pos += 1;
            }
            if current & (1 << (5 - bit % 6)) != 0 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Decodes every non-empty line of a graph6 file.
pub fn from_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| from_graph6_line(l, i))
        .collect()
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(g).expect("graph serializes")
}

pub fn from_json(text: &str) -> Result<Graph> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        position: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    })
}

/// Reads a single graph written either as JSON (`{...}`) or graph6.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        return from_json(text);
    }
    if trimmed.starts_with("graph") {
        return from_dot(text);
    }
    let mut graphs = from_graph6_lines(text)?;
    match graphs.len() {
        1 => Ok(graphs.pop().expect("one graph")),
        0 => Err(parse_err(1, 0, "no graph found")),
        k => Err(parse_err(2, 0, format!("expected one graph, found {k}"))),
    }
}

/// Graphviz export with vertex ids as labels.
pub fn to_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        let _ = writeln!(s, "  {v} [label=\"{v}\"];");
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}

/// Reads the DOT subset written by [`to_dot`]: one statement per line, vertex
/// statements `v [...];` and edge statements `u -- v;`.
pub fn from_dot(text: &str) -> Result<Graph> {
    let mut n = 0;
    let mut edges = Vec::new();
    let mut opened = false;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let err = |m: &str| parse_err(i + 1, 0, format!("{m}: {line:?}"));
        if line.is_empty() || line == "}" {
            continue;
        }
        if !opened {
            if !(line.starts_with("graph") && line.ends_with('{')) {
                return Err(err("expected `graph NAME {`"));
            }
            opened = true;
            continue;
        }
        let stmt = line.strip_suffix(';').ok_or_else(|| err("missing `;`"))?;
        if let Some((u, v)) = stmt.split_once("--") {
            let u: usize = u.trim().parse().map_err(|_| err("bad vertex"))?;
            let v: usize = v.trim().parse().map_err(|_| err("bad vertex"))?;
            n = n.max(u + 1).max(v + 1);
            edges.push((u, v));
        } else {
            let id = stmt.split_whitespace().next().unwrap_or("");
            let v: usize = id.parse().map_err(|_| err("bad vertex"))?;
            n = n.max(v + 1);
        }
    }
    if !opened {
        return Err(parse_err(1, 0, "no graph found"));
    }
    Graph::from_edges(n, edges)
}
