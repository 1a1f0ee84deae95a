//! Text formats: graph6, edge lists and connection-set files.
//!
//! Edge lists hold one `u v` pair per line. `#` starts a comment; a
//! `# vertices N` comment fixes the vertex count, which otherwise is one
//! more than the largest endpoint.
//!
//! Connection-set files start with `group Z9xZ9` and list one element per
//! line as comma-separated residues (`1,4`). Inline sets on the command line
//! use `Z9xZ9:1,0;0,1;...`.

use std::fs;
use std::path::Path;

use scsrg_core::graph::MAX_VERTICES;
use scsrg_core::{AbelianGroup, ConnectionSet, DenseGraph, GroupElement};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("connection set line {line}: {message}")]
    SetFile { line: usize, message: String },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("cannot tell the format of {0}; use a .g6, .edges or .set extension or pass --format")]
    UnknownFormat(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
    SetFile,
}

impl Format {
    pub fn from_path(path: &Path) -> Option<Format> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "g6" | "graph6" => Some(Format::Graph6),
            "edges" | "edgelist" | "el" | "txt" => Some(Format::EdgeList),
            "set" => Some(Format::SetFile),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Format::Graph6 => "graph6",
            Format::EdgeList => "edge-list",
            Format::SetFile => "connection-set",
        }
    }
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edge-list" | "edges" => Ok(Format::EdgeList),
            "connection-set" | "set" => Ok(Format::SetFile),
            _ => Err(format!("unknown format {s:?} (graph6, edge-list, connection-set)")),
        }
    }
}

/// A parsed input: either a bare graph or a connection set, which also
/// determines its Cayley graph.
#[derive(Debug, Clone)]
pub enum Input {
    Graph(DenseGraph),
    Set(ConnectionSet),
}

impl Input {
    pub fn graph(&self) -> DenseGraph {
        match self {
            Input::Graph(g) => g.clone(),
            Input::Set(s) => s.cayley_graph(),
        }
    }

    pub fn connection_set(&self) -> Option<&ConnectionSet> {
        match self {
            Input::Set(s) => Some(s),
            Input::Graph(_) => None,
        }
    }
}

pub fn read_input(path: &Path, format: Option<Format>) -> Result<(Format, Input), FormatError> {
    let format = format
        .or_else(|| Format::from_path(path))
        .ok_or_else(|| FormatError::UnknownFormat(path.display().to_string()))?;
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.display().to_string(), source })?;
    let input = match format {
        Format::Graph6 => Input::Graph(from_graph6(&text)?),
        Format::EdgeList => Input::Graph(from_edge_list(&text)?),
        Format::SetFile => Input::Set(from_set_file(&text)?),
    };
    Ok((format, input))
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), FormatError> {
    fs::write(path, contents).map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}

fn graph6_size(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        let mut out = vec![126];
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
        out
    } else {
        let mut out = vec![126, 126];
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
        out
    }
}

/// graph6 encoding, without header or trailing newline.
pub fn to_graph6(g: &DenseGraph) -> String {
    let n = g.n();
    let mut out = graph6_size(n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses a single graph6 line; an optional `>>graph6<<` header is skipped.
pub fn from_graph6(text: &str) -> Result<DenseGraph, FormatError> {
    let err = |m: String| FormatError::Graph6(m);
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let line = lines.next().ok_or_else(|| err("empty input".into()))?;
    if lines.next().is_some() {
        return Err(err("more than one graph in input".into()));
    }
    let bytes = line.strip_prefix(">>graph6<<").unwrap_or(line).as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(err(format!("byte {b} outside 63..=126")));
    }
    let value = |s: &[u8]| s.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
    let (n, body) = match bytes {
        [] => return Err(err("empty input".into())),
        [126, 126, rest @ ..] if rest.len() >= 6 => (value(&rest[..6]), &rest[6..]),
        [126, rest @ ..] if rest.len() >= 3 && rest[0] != 126 => (value(&rest[..3]), &rest[3..]),
        [126, ..] => return Err(err("truncated size header".into())),
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(err(format!("vertex count {n} outside 1..={MAX_VERTICES}")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(err(format!("expected {} data bytes for {n} vertices, found {}", bits.div_ceil(6), body.len())));
    }
    let mut g = DenseGraph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 && (body[body.len() - 1] - 63) & ((1 << (6 - bits % 6)) - 1) != 0 {
        return Err(err("nonzero padding bits".into()));
    }
    Ok(g)
}

/// Edge list with a `# vertices N` header and edges `u < v` in order.
pub fn to_edge_list(g: &DenseGraph) -> String {
    let mut out = format!("# vertices {}\n", g.n());
    for u in 0..g.n() {
        for v in g.neighbors(u).filter(|&v| v > u) {
            out.push_str(&format!("{u} {v}\n"));
        }
    }
    out
}

pub fn from_edge_list(text: &str) -> Result<DenseGraph, FormatError> {
    let mut declared = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |message: String| FormatError::EdgeList { line, message };
        let (content, comment) = raw.split_once('#').unwrap_or((raw, ""));
        if let Some(rest) = comment.trim().strip_prefix("vertices") {
            if declared.is_some() || !edges.is_empty() {
                return Err(err("vertex count must come first and only once".into()));
            }
            let n: usize = rest.trim().parse().map_err(|_| err(format!("bad vertex count {:?}", rest.trim())))?;
            declared = Some(n);
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [a, b] => {
                let parse = |t: &str| t.parse::<usize>().map_err(|_| err(format!("bad vertex {t:?}")));
                let (u, v) = (parse(a)?, parse(b)?);
                if u == v {
                    return Err(err(format!("loop at vertex {u}")));
                }
                edges.push((u, v, line));
            }
            _ => return Err(err(format!("expected two vertices, found {:?}", content.trim()))),
        }
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0));
    if n == 0 || n > MAX_VERTICES {
        return Err(FormatError::EdgeList { line: 1, message: format!("vertex count {n} outside 1..={MAX_VERTICES}") });
    }
    let mut g = DenseGraph::empty(n);
    for (u, v, line) in edges {
        if u >= n || v >= n {
            return Err(FormatError::EdgeList { line, message: format!("vertex out of range for {n} vertices") });
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

pub fn to_set_file(s: &ConnectionSet) -> String {
    let mut out = format!("group {}\n", s.group());
    for g in s.elements() {
        out.push_str(&format!("{g}\n"));
    }
    out
}

fn parse_tuple(group: &AbelianGroup, text: &str) -> Result<GroupElement, String> {
    let residues = text
        .split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| format!("bad residue {:?}", t.trim())))
        .collect::<Result<Vec<u32>, String>>()?;
    group.element(&residues).map_err(|e| e.to_string())
}

pub fn from_set_file(text: &str) -> Result<ConnectionSet, FormatError> {
    let mut group: Option<AbelianGroup> = None;
    let mut elements = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |message: String| FormatError::SetFile { line, message };
        let content = raw.split_once('#').map_or(raw, |(c, _)| c).trim();
        if content.is_empty() {
            continue;
        }
        match &group {
            None => {
                let spec = content.strip_prefix("group").ok_or_else(|| err("expected a `group` header".into()))?;
                group = Some(spec.trim().parse().map_err(|e: scsrg_core::group::GroupError| err(e.to_string()))?);
            }
            Some(g) => elements.push(parse_tuple(g, content).map_err(err)?),
        }
    }
    let group = group.ok_or(FormatError::SetFile { line: 1, message: "missing `group` header".into() })?;
    check_order(&group).map_err(|message| FormatError::SetFile { line: 1, message })?;
    ConnectionSet::new(&group, elements).map_err(|e| FormatError::SetFile { line: 0, message: e.to_string() })
}

/// `GROUP:TUPLE;TUPLE;...`, for example `Z5:1;4`.
pub fn parse_inline_set(text: &str) -> Result<ConnectionSet, FormatError> {
    let err = |message: String| FormatError::SetFile { line: 1, message };
    let (spec, body) = text.split_once(':').ok_or_else(|| err("expected GROUP:ELEMENTS".into()))?;
    let group: AbelianGroup = spec.trim().parse().map_err(|e: scsrg_core::group::GroupError| err(e.to_string()))?;
    check_order(&group).map_err(err)?;
    let elements = body
        .split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| parse_tuple(&group, t))
        .collect::<Result<Vec<_>, String>>()
        .map_err(err)?;
    ConnectionSet::new(&group, elements).map_err(|e| err(e.to_string()))
}

fn check_order(group: &AbelianGroup) -> Result<(), String> {
    if group.order() > MAX_VERTICES {
        return Err(format!("group order {} exceeds the limit of {MAX_VERTICES}", group.order()));
    }
    Ok(())
}
