//! Plain-text edge lists: one `u v` pair per line.

use super::Graph;
use crate::error::{Error, Result};

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::EdgeList { line, message: message.into() }
}

fn parse_id(tok: &str, line: usize) -> Result<usize> {
    let value: i64 = tok.parse().map_err(|_| err(line, format!("not an integer: {tok:?}")))?;
    usize::try_from(value).map_err(|_| err(line, format!("negative vertex id {value}")))
}

/// Parses an edge list. Lines are numbered from 1 in errors.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut first = true;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if first {
            first = false;
            if let Some(rest) = line.strip_prefix("n=") {
                let n = parse_id(rest.trim(), lineno)?;
                declared = Some(n);
                continue;
            }
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(err(lineno, format!("expected two vertex ids, found {}", toks.len())));
        }
        let u = parse_id(toks[0], lineno)?;
        let v = parse_id(toks[1], lineno)?;
        if u == v {
            return Err(err(lineno, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(lineno, format!("duplicate edge {u}-{v}")));
        }
        if let Some(n) = declared {
            if u >= n || v >= n {
                return Err(err(lineno, format!("vertex id out of range for n={n}")));
            }
        }
        edges.push((u, v));
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::from_edges(n, &edges)
}
