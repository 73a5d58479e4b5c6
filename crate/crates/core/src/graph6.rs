//! graph6 interchange format, short form only (n <= 62).
//!
//! Layout: one header byte `63 + n`, then ceil(n(n-1)/2 / 6) bytes, each
//! carrying six bits (most significant first) of the upper-triangular
//! adjacency matrix read in column order (0,1), (0,2), (1,2), (0,3), ...,
//! each byte offset by 63. Trailing padding bits must be zero.

use crate::bitset::MAX_VERTICES;
use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("long-form graph6 (leading '~') is not supported")]
    LongForm,
    #[error("byte 0x{byte:02x} at offset {pos} is outside the graph6 range 63..=126")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("graph on {n} vertices exceeds the {} vertex limit", MAX_VERTICES)]
    TooManyVertices { n: usize },
    #[error("expected {expected} adjacency bytes after the header, found {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("nonzero padding bits in final byte at offset {pos}")]
    PaddingBits { pos: usize },
}

/// Number of data bytes for an n-vertex graph.
fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    debug_assert!(n <= 62);
    let mut out = String::new();
    out.push((63 + n as u8) as char);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push((63 + acc) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((63 + (acc << (6 - nbits))) as char);
    }
    debug_assert_eq!(out.len(), 1 + data_len(n));
    out
}

pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let bytes = s.as_bytes();
    let &header = bytes.first().ok_or(Graph6Error::Empty)?;
    if header == b'~' {
        return Err(Graph6Error::LongForm);
    }
    if !(63..=125).contains(&header) {
        return Err(Graph6Error::InvalidByte { pos: 0, byte: header });
    }
    let n = (header - 63) as usize;
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices { n });
    }
    let expected = data_len(n);
    let data = &bytes[1..];
    if data.len() != expected {
        return Err(Graph6Error::WrongLength { expected, got: data.len() });
    }
    for (k, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { pos: 1 + k, byte: b });
        }
    }

    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    for j in 1..n {
        for i in 0..j {
            let b = data[bit_index / 6] - 63;
            if b & (1 << (5 - bit_index % 6)) != 0 {
                edges.push((i, j));
            }
            bit_index += 1;
        }
    }
    // Anything after the n(n-1)/2 payload bits must be zero.
    if !bit_index.is_multiple_of(6) {
        let last = data[bit_index / 6] - 63;
        let pad_mask = (1u8 << (6 - bit_index % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(Graph6Error::PaddingBits { pos: bytes.len() - 1 });
        }
    }
    Ok(Graph::from_edges(n, &edges))
}
