//! The short form (at most 62 vertices) of the graph6 encoding.

use super::Graph;
use crate::error::{Error, Graph6ErrorKind, Result};

const MAX_SHORT: usize = 62;

fn err(offset: usize, kind: Graph6ErrorKind) -> Error {
    Error::Graph6 { offset, kind }
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(err(0, Graph6ErrorKind::EmptyInput));
    };
    if !(63..=126).contains(&first) {
        return Err(err(0, Graph6ErrorKind::CharOutOfRange(first)));
    }
    if first == 126 {
        // Long-form size prefixes are not supported.
        return Err(err(0, Graph6ErrorKind::MalformedLength));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = 1 + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(err(
            bytes.len().min(expected),
            Graph6ErrorKind::WrongLength { expected, found: bytes.len() },
        ));
    }
    let mut values = Vec::with_capacity(expected - 1);
    for (i, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(err(i, Graph6ErrorKind::CharOutOfRange(b)));
        }
        values.push(b - 63);
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if values[k / 6] >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = values[values.len() - 1];
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(expected - 1, Graph6ErrorKind::TrailingBitsNonzero));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Encodes `g`; panics if `g` has more than 62 vertices.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_SHORT, "graph6 short form holds at most {MAX_SHORT} vertices");
    let bits = n * n.saturating_sub(1) / 2;
    let mut values = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                values[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(1 + values.len());
    out.push((n as u8 + 63) as char);
    out.extend(values.into_iter().map(|v| (v + 63) as char));
    out
}
