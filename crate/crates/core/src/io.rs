//! Instance files and JSON output.
//!
//! The edge-list format is a header line `n m`, then `m` lines `u v` with
//! 0-indexed endpoints, then optionally a line `X: v1 v2 ...` naming a twin
//! cover and a line `k: <int>`. Blank lines and lines starting with `#` are
//! ignored. In graph6 mode the header and edge lines are replaced by a single
//! graph6 string.

use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::kernel::KernelReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    EdgeList,
    Graph6,
}

/// A parsed instance file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub cover: Option<Vec<usize>>,
    pub k: Option<usize>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_usize(token: &str, line: usize, what: &str) -> Result<usize> {
    token.parse().map_err(|_| parse_err(line, format!("expected {what}, found {token:?}")))
}

/// Parses an instance file. Connectivity is not checked here.
pub fn parse_instance(text: &str, format: Format) -> Result<Instance> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let graph = match format {
        Format::EdgeList => {
            let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header line `n m`"))?;
            let fields: Vec<&str> = header.split_whitespace().collect();
            let [n, m] = fields[..] else {
                return Err(parse_err(hline, "header must be `n m`"));
            };
            let n = parse_usize(n, hline, "vertex count")?;
            let m = parse_usize(m, hline, "edge count")?;
            if n == 0 {
                return Err(parse_err(hline, "the graph must have at least one vertex"));
            }
            let mut edges = Vec::with_capacity(m);
            let mut seen = std::collections::BTreeSet::new();
            for i in 0..m {
                let (eline, edge) =
                    lines.next().ok_or_else(|| parse_err(hline, format!("expected {m} edges, found {i}")))?;
                let fields: Vec<&str> = edge.split_whitespace().collect();
                let [u, v] = fields[..] else {
                    return Err(parse_err(eline, "edge lines must be `u v`"));
                };
                let (u, v) = (parse_usize(u, eline, "vertex")?, parse_usize(v, eline, "vertex")?);
                if u >= n || v >= n {
                    return Err(parse_err(eline, format!("edge {u} {v} out of range 0..{n}")));
                }
                if u == v {
                    return Err(parse_err(eline, format!("self-loop at {u}")));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(parse_err(eline, format!("duplicate edge {u} {v}")));
                }
                edges.push((u, v));
            }
            Graph::from_edges(n, &edges)?
        }
        Format::Graph6 => {
            let (gline, body) = lines.next().ok_or_else(|| parse_err(1, "missing graph6 line"))?;
            let body = body.strip_prefix(">>graph6<<").unwrap_or(body);
            let g = parse_graph6(body).map_err(|e| parse_err(gline, e.to_string()))?;
            if g.n() == 0 {
                return Err(parse_err(gline, "the graph must have at least one vertex"));
            }
            g
        }
    };

    let mut cover = None;
    let mut k = None;
    for (line, rest) in lines {
        if let Some(list) = rest.strip_prefix("X:") {
            if cover.is_some() {
                return Err(parse_err(line, "repeated `X:` line"));
            }
            let mut xs = Vec::new();
            for tok in list.split_whitespace() {
                let v = parse_usize(tok, line, "cover vertex")?;
                if v >= graph.n() {
                    return Err(parse_err(line, format!("cover vertex {v} out of range")));
                }
                if xs.contains(&v) {
                    return Err(parse_err(line, format!("cover vertex {v} repeated")));
                }
                xs.push(v);
            }
            cover = Some(xs);
        } else if let Some(val) = rest.strip_prefix("k:") {
            if k.is_some() {
                return Err(parse_err(line, "repeated `k:` line"));
            }
            k = Some(parse_usize(val.trim(), line, "integer k")?);
        } else {
            return Err(parse_err(line, format!("unexpected line {rest:?}")));
        }
    }
    Ok(Instance { graph, cover, k })
}

/// Writes an instance in edge-list form; [`parse_instance`] reads it back unchanged.
pub fn write_instance(inst: &Instance) -> String {
    let g = &inst.graph;
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    if let Some(x) = &inst.cover {
        out.push_str("X:");
        for v in x {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    if let Some(k) = inst.k {
        let _ = writeln!(out, "k: {k}");
    }
    out
}

/// Decodes one graph6 string.
/// Reference: <https://users.cecs.anu.edu.au/~bdm/data/formats.txt>
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let bytes: Vec<u8> = s
        .trim()
        .bytes()
        .map(|b| {
            if (63..=126).contains(&b) {
                Ok(b - 63)
            } else {
                Err(Error::Input(format!("byte {b} is not valid graph6")))
            }
        })
        .collect::<Result<_>>()?;
    let short = || Error::Input("graph6 string too short".into());
    let (n, header) = match bytes.first() {
        None => return Err(short()),
        Some(&b) if b < 63 => (b as usize, 1),
        Some(_) if bytes.get(1) != Some(&63) => {
            let h = bytes.get(1..4).ok_or_else(short)?;
            (h.iter().fold(0usize, |acc, &b| acc << 6 | b as usize), 4)
        }
        Some(_) => {
            let h = bytes.get(2..8).ok_or_else(short)?;
            (h.iter().fold(0usize, |acc, &b| acc << 6 | b as usize), 8)
        }
    };
    let body = &bytes[header..];
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != needed {
        return Err(Error::Input(format!("graph6 body has {} bytes, expected {needed}", body.len())));
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if body[bit / 6] >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = if n <= 62 {
        vec![n as u8]
    } else if n <= 258_047 {
        vec![63, (n >> 12) as u8 & 63, (n >> 6) as u8 & 63, n as u8 & 63]
    } else {
        let mut h = vec![63, 63];
        h.extend((0..6).rev().map(|i| (n >> (6 * i)) as u8 & 63));
        h
    };
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(acc << (6 - bits));
    }
    out.into_iter().map(|b| (b + 63) as char).collect()
}

pub fn edges_json(g: &Graph) -> Value {
    Value::Array(g.edges().map(|(u, v)| json!([u, v])).collect())
}

/// Integers too wide for a JSON number become decimal strings.
pub fn big_json(x: &BigUint) -> Value {
    match u64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

#[derive(Serialize)]
struct DeletionJson<'a> {
    #[serde(rename = "S")]
    neighborhood: &'a [usize],
    s: usize,
    vertices: &'a [usize],
}

/// Fields: `n_before`, `n_after`, `bound`, `k_out`, `x_out`, `deletions`,
/// `shortcut`, and the kernel's `edges`.
pub fn kernel_report_json(report: &KernelReport) -> Value {
    let deletions: Vec<DeletionJson> = report
        .deletions
        .iter()
        .map(|d| DeletionJson { neighborhood: &d.clique_type.neighborhood, s: d.clique_type.size, vertices: &d.vertices })
        .collect();
    json!({
        "n_before": report.n_before,
        "n_after": report.realized,
        "bound": big_json(&report.bound),
        "k_out": report.reduced.k(),
        "x_out": report.reduced.cover().vertices(),
        "deletions": deletions,
        "shortcut": report.no_instance_shortcut,
        "edges": edges_json(report.reduced.graph()),
    })
}
