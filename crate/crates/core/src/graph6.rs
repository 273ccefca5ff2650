//! graph6 encoding and decoding (short form, `1 <= n <= 62`).
//!
//! The encoding is the de facto interchange format emitted by standard graph
//! generators: one header byte `63 + n`, then the upper adjacency triangle in
//! column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed big-endian six
//! bits per byte with an offset of 63 and zero padding in the final byte.

use crate::graph::Graph;
use thiserror::Error;

/// Largest order representable in the short graph6 form.
pub const MAX_GRAPH6_ORDER: usize = 62;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    Empty,
    #[error("graph6 order {0} outside the supported range 1..=62")]
    OrderOutOfRange(usize),
    #[error("graph6 payload length mismatch: expected {expected} bytes, found {actual}")]
    PayloadLength { expected: usize, actual: usize },
    #[error("graph6 padding bits are not zero")]
    NonzeroPadding,
    #[error("byte {byte:#04x} at position {position} outside the graph6 alphabet 63..=126")]
    InvalidByte { byte: u8, position: usize },
}

/// Upper-triangle bit count for order `n`.
#[inline]
fn triangle_bits(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Decodes one graph6 line into a [`Graph`].
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (position, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { byte, position });
        }
    }
    // 126 opens the long forms; 63 encodes n = 0. Neither is supported here.
    let n = (bytes[0] - 63) as usize;
    if bytes[0] == 126 || n == 0 {
        return Err(Graph6Error::OrderOutOfRange(n));
    }
    let bits = triangle_bits(n);
    let expected = bits.div_ceil(6);
    let payload = &bytes[1..];
    if payload.len() != expected {
        return Err(Graph6Error::PayloadLength {
            expected,
            actual: payload.len(),
        });
    }

    let mut adj = vec![0u64; n];
    let mut index = 0usize;
    for v in 1..n {
        for u in 0..v {
            let value = payload[index / 6] - 63;
            if value >> (5 - index % 6) & 1 != 0 {
                adj[u] |= 1u64 << v;
                adj[v] |= 1u64 << u;
            }
            index += 1;
        }
    }
    // Remaining bits of the final byte must be zero padding.
    for t in bits..expected * 6 {
        let value = payload[t / 6] - 63;
        if value >> (5 - t % 6) & 1 != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    let g = Graph::from_adjacency(adj).expect("decoded adjacency is symmetric by construction");
    Ok(g)
}

/// Encodes a graph in graph6, the exact inverse of [`parse_graph6`].
pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Graph6Error::OrderOutOfRange(n));
    }
    let bits = triangle_bits(n);
    let mut out = vec![63 + n as u8];
    out.resize(1 + bits.div_ceil(6), 63);
    let mut index = 0usize;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                out[1 + index / 6] += 1 << (5 - index % 6);
            }
            index += 1;
        }
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Parses a newline-separated graph6 file body. Blank lines and lines starting
/// with `#` are ignored. Line numbers in errors are 1-based.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, Graph6LineError> {
    let mut graphs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g = parse_graph6(line).map_err(|source| Graph6LineError {
            line: i + 1,
            source,
        })?;
        graphs.push(g);
    }
    Ok(graphs)
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {source}")]
pub struct Graph6LineError {
    pub line: usize,
    #[source]
    pub source: Graph6Error,
}
