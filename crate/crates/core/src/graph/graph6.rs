//! The graph6 text format: six bits per printable byte (offset 63), the
//! upper triangle of the adjacency matrix in column-major order, zero padded.

use super::Graph;
use crate::error::{Error, Result};

const OFFSET: u8 = 63;
const MAX_SHORT: usize = 62;
const MAX_MEDIUM: usize = 258_047;

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], at: usize) -> Result<u8> {
    match bytes.get(at) {
        Some(&b) if (OFFSET..=126).contains(&b) => Ok(b - OFFSET),
        Some(&b) => Err(err(at, format!("byte 0x{b:02x} is outside the graph6 range"))),
        None => Err(err(at, "unexpected end of input")),
    }
}

/// Decodes a graph6 string. Leading/trailing whitespace and an optional
/// `>>graph6<<` header are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    let body = trimmed.strip_prefix(">>graph6<<").unwrap_or(trimmed);
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }

    let (n, start) = if bytes[0] != 126 {
        (sextet(bytes, 0)? as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0usize;
        for i in 1..4 {
            n = (n << 6) | sextet(bytes, i)? as usize;
        }
        if n <= MAX_SHORT {
            return Err(err(1, format!("non-canonical long header for n = {n}")));
        }
        (n, 4)
    } else {
        return Err(err(0, "8-byte headers (n > 258047) are not supported"));
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let actual = bytes.len() - start;
    if actual != expected {
        let at = start + actual.min(expected);
        return Err(err(
            at,
            format!("body has {actual} bytes, expected {expected} for n = {n}"),
        ));
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = sextet(bytes, start + k / 6)?;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = start + expected - 1;
        let pad_mask = (1u8 << (6 - bits % 6)) - 1;
        if sextet(bytes, last)? & pad_mask != 0 {
            return Err(err(last, "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

/// Encodes a graph as graph6 (no header, no newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(
        n <= MAX_MEDIUM,
        "graph6 encoding supports at most {MAX_MEDIUM} vertices"
    );
    let mut out = Vec::new();
    if n <= MAX_SHORT {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
