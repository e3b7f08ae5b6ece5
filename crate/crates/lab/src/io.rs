//! Edge-list and graph6 readers and writers.
//!
//! Edge lists: the first non-comment line is `n <count>`, then one `u v`
//! pair per line; `#` starts a comment; vertices are 0-indexed.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use rek_core::Graph;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("edge list has no `n <count>` header")]
    MissingHeader,
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("cannot infer the format of {0}; use --format el|g6")]
    UnknownFormat(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    #[value(name = "el", alias = "edge-list")]
    EdgeList,
    #[value(name = "g6", alias = "graph6")]
    Graph6,
}

impl Format {
    /// `.el` or `.g6`, unless an explicit format is given.
    pub fn detect(path: &Path, explicit: Option<Format>) -> Result<Format, IoError> {
        if let Some(f) = explicit {
            return Ok(f);
        }
        match path.extension().and_then(|e| e.to_str()) {
            Some("el") => Ok(Format::EdgeList),
            Some("g6") => Ok(Format::Graph6),
            _ => Err(IoError::UnknownFormat(path.display().to_string())),
        }
    }
}

pub fn read_graph(path: &Path, explicit: Option<Format>) -> Result<Graph, IoError> {
    let format = Format::detect(path, explicit)?;
    let text = fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text, format)
}

pub fn parse(text: &str, format: Format) -> Result<Graph, IoError> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => parse_graph6(text),
    }
}

pub fn render(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => write_edge_list(g),
        Format::Graph6 => {
            let mut s = write_graph6(g);
            s.push('\n');
            s
        }
    }
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), IoError> {
    fs::write(path, contents).map_err(|source| IoError::Write {
        path: path.display().to_string(),
        source,
    })
}

fn line_error(line: usize, message: impl Into<String>) -> IoError {
    IoError::EdgeList {
        line,
        message: message.into(),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, IoError> {
    let mut order = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let Some(n) = order else {
            match fields.as_slice() {
                ["n", count] => {
                    let n = count
                        .parse::<usize>()
                        .map_err(|_| line_error(line, format!("bad vertex count {count:?}")))?;
                    order = Some(n);
                    continue;
                }
                _ => return Err(line_error(line, "expected header `n <count>`")),
            }
        };
        let [u, v] = fields.as_slice() else {
            return Err(line_error(line, format!("expected `u v`, got {content:?}")));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| line_error(line, format!("bad vertex id {s:?}")))
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u >= n || v >= n {
            return Err(line_error(line, format!("edge ({u}, {v}) outside 0..{n}")));
        }
        if u == v {
            return Err(line_error(line, format!("self-loop at {u}")));
        }
        edges.push((u, v));
    }
    let n = order.ok_or(IoError::MissingHeader)?;
    Ok(Graph::from_edge_list(n, &edges).expect("edges validated per line"))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

const GRAPH6_HEADER: &str = ">>graph6<<";

fn g6_err(message: impl Into<String>) -> IoError {
    IoError::Graph6(message.into())
}

/// Reads one graph in graph6. A leading `>>graph6<<` header is accepted;
/// sparse6 (`:`) and digraph6 (`&`) are rejected.
pub fn parse_graph6(text: &str) -> Result<Graph, IoError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let line = lines.next().ok_or_else(|| g6_err("empty input"))?;
    if lines.next().is_some() {
        return Err(g6_err("more than one graph in input"));
    }
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    match bytes.first() {
        Some(b':') => return Err(g6_err("sparse6 is not supported")),
        Some(b'&') => return Err(g6_err("digraph6 is not supported")),
        None => return Err(g6_err("empty input")),
        _ => {}
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(g6_err(format!(
            "byte {b} outside the printable range 63..=126"
        )));
    }
    let (n, body) = decode_order(bytes)?;
    let bits = n
        .checked_mul(n.saturating_sub(1))
        .ok_or_else(|| g6_err(format!("order {n} is too large")))?
        / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(g6_err(format!(
            "expected {} data bytes for {n} vertices, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..body.len() * 6).any(bit) {
        return Err(g6_err("non-zero padding bits"));
    }
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
    Ok(Graph::from_edge_list(n, &edges).expect("graph6 edges are in range"))
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8]), IoError> {
    let take = |len: usize| -> Result<usize, IoError> {
        let group = bytes
            .get(..len)
            .ok_or_else(|| g6_err("truncated vertex count"))?;
        Ok(group
            .iter()
            .fold(0, |acc, &b| acc << 6 | usize::from(b - 63)))
    };
    if bytes[0] != 126 {
        return Ok((usize::from(bytes[0] - 63), &bytes[1..]));
    }
    if bytes.get(1) == Some(&126) {
        let n = take(8)? & ((1 << 36) - 1);
        if n < 258_048 {
            return Err(g6_err("non-canonical 8-byte vertex count"));
        }
        return Ok((n, &bytes[8..]));
    }
    let n = take(4)? & ((1 << 18) - 1);
    if n < 63 {
        return Err(g6_err("non-canonical 4-byte vertex count"));
    }
    Ok((n, &bytes[4..]))
}

/// graph6 without header or trailing newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
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
    String::from_utf8(out).expect("graph6 is ASCII")
}
