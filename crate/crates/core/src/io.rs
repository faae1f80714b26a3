//! Edge-list and graph6 formats, plus the JSON report document.

use std::fmt::Write as _;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::classifier::{Diagnosis, FPartition};
use crate::error::{Error, Result};
use crate::graph::{Distance, Graph, VertexSet};
use crate::packing::PackingReport;

/// Largest order representable in graph6.
pub const GRAPH6_LIMIT: usize = 258_047;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    EdgeList,
    Graph6,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_pair(line: usize, text: &str, what: &str) -> Result<(usize, usize)> {
    let mut fields = text.split_whitespace();
    let mut next = |name: &str| -> Result<usize> {
        let field = fields.next().ok_or_else(|| parse_error(line, format!("missing {name}")))?;
        field.parse().map_err(|_| parse_error(line, format!("{name} is not a nonnegative integer: {field:?}")))
    };
    let pair = (next(what)?, next(what)?);
    if let Some(extra) = fields.next() {
        return Err(parse_error(line, format!("unexpected field {extra:?}")));
    }
    Ok(pair)
}

/// Reads `n m` followed by `m` lines `u v`. Blank lines and lines starting with `#` are skipped.
/// Line numbers in errors are 1-based and count every line of `text`.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = lines.next().ok_or_else(|| parse_error(1, "missing header \"n m\""))?;
    let (n, m) = parse_pair(header_line, header, "header value")?;

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut last_line = header_line;
    for (line, text) in lines {
        last_line = line;
        if edges.len() == m {
            return Err(parse_error(line, format!("more than the {m} declared edges")));
        }
        let (u, v) = parse_pair(line, text, "endpoint")?;
        let at = |source| Error::AtLine { line, source: Box::new(source) };
        for w in [u, v] {
            if w >= n {
                return Err(at(Error::Range { vertex: w, n }));
            }
        }
        if u == v {
            return Err(at(Error::Loop { vertex: u }));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_error(line, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_error(last_line, format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::new(n, &edges)
}

/// Header line then one edge per line, sorted, smaller endpoint first.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses one graph6 line. An optional `>>graph6<<` prefix is accepted.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let text = line.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(parse_error(1, format!("invalid graph6 byte at offset {pos}")));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, body) = match bytes {
        [] => return Err(parse_error(1, "empty graph6 string")),
        [126, 126, ..] => return Err(parse_error(1, "graph6 orders above 258047 are not supported")),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(parse_error(1, "truncated graph6 order"));
            }
            let n = six(rest[0]) << 12 | six(rest[1]) << 6 | six(rest[2]);
            (n, &rest[3..])
        }
        [first, rest @ ..] => (six(*first), rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(parse_error(
            1,
            format!("expected {} data bytes for order {n}, found {}", bits.div_ceil(6), body.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if six(body[k / 6]) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if k % 6 != 0 && six(body[k / 6]) & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(parse_error(1, "nonzero padding bits"));
    }
    Graph::new(n, &edges)
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_LIMIT {
        return Err(Error::CapExceeded { n, cap: GRAPH6_LIMIT });
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.extend([126, (n >> 12) as u8 + 63, (n >> 6 & 63) as u8 + 63, (n & 63) as u8 + 63]);
    }
    let (mut acc, mut filled) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                (acc, filled) = (0, 0);
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => {
            let line = text.lines().find(|l| !l.trim().is_empty()).ok_or_else(|| parse_error(1, "empty input"))?;
            parse_graph6(line)
        }
    }
}

pub fn write_graph(g: &Graph, format: Format) -> Result<String> {
    match format {
        Format::EdgeList => Ok(write_edge_list(g)),
        Format::Graph6 => write_graph6(g).map(|s| s + "\n"),
    }
}

/// SHA-256 of the canonical edge list, hex encoded.
pub fn digest(g: &Graph) -> String {
    Sha256::digest(write_edge_list(g).as_bytes()).iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: u32,
    pub digest: String,
    pub n: usize,
    pub m: usize,
    pub girth: Distance,
    pub min_degree: usize,
    pub max_degree: usize,
    pub leaves: VertexSet,
    pub supports: VertexSet,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub packing: Option<PackingReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub diagnosis: Option<Diagnosis>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub partition: Option<FPartition>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing_ms: Option<f64>,
}

impl ReportDocument {
    pub fn new(g: &Graph) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            digest: digest(g),
            n: g.order(),
            m: g.size(),
            girth: g.girth(),
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
            leaves: g.leaves(),
            supports: g.supports(),
            packing: None,
            diagnosis: None,
            partition: None,
            timing_ms: None,
        }
    }

    pub fn with_packing(mut self, report: PackingReport) -> Self {
        self.packing = Some(report);
        self
    }

    /// Stores the diagnosis and lifts its partition to the top level.
    pub fn with_diagnosis(mut self, diagnosis: Diagnosis) -> Self {
        self.partition = diagnosis.partition.clone();
        self.diagnosis = Some(diagnosis);
        self
    }

    pub fn with_timing(mut self, elapsed: Duration) -> Self {
        self.timing_ms = Some(elapsed.as_secs_f64() * 1e3);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
