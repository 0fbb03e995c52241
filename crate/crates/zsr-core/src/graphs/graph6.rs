//! graph6 interchange. The format stores the strict upper triangle of the
//! adjacency matrix column by column, `(0,1), (0,2), (1,2), (0,3), ...`,
//! packed big-endian into 6-bit groups, each group offset by 63.

use thiserror::Error;

use super::graph::Graph;

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at position {pos} outside graph6 range 63..=126")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("graph too large for this encoder (order {0} > 258047)")]
    TooLarge(usize),
    #[error("expected {expected} data bytes for order {order}, got {got}")]
    LengthMismatch {
        order: usize,
        expected: usize,
        got: usize,
    },
    #[error("truncated size prefix")]
    TruncatedSize,
}

/// Encodes a graph as a canonical graph6 line (no trailing newline).
pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(b'~');
        out.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        out.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        out.push((n & 0x3f) as u8 + OFFSET);
    } else {
        return Err(Graph6Error::TooLarge(n));
    }

    let mut group = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            group <<= 1;
            if g.has_edge(u, v) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + OFFSET);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses one graph6 line. A leading `>>graph6<<` header is accepted.
pub fn parse_graph6(s: &str) -> Result<Graph, Graph6Error> {
    let s = s.strip_prefix(HEADER).unwrap_or(s).trim_end_matches(['\n', '\r']);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { pos, byte: b });
        }
    }

    let (n, data) = if bytes[0] != b'~' {
        ((bytes[0] - OFFSET) as usize, &bytes[1..])
    } else {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            // 8-byte order prefix: beyond anything this library handles.
            return Err(Graph6Error::TooLarge(usize::MAX));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::TruncatedSize);
        }
        let n = ((bytes[1] - OFFSET) as usize) << 12
            | ((bytes[2] - OFFSET) as usize) << 6
            | (bytes[3] - OFFSET) as usize;
        (n, &bytes[4..])
    };

    let bit_count = n * (n - 1) / 2;
    let expected = bit_count.div_ceil(6);
    if data.len() != expected {
        return Err(Graph6Error::LengthMismatch {
            order: n,
            expected,
            got: data.len(),
        });
    }

    let mut g = Graph::empty(n);
    let mut idx = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = data[idx / 6] - OFFSET;
            if byte >> (5 - idx % 6) & 1 == 1 {
                g.add_edge(u, v).expect("decoded edge is valid");
            }
            idx += 1;
        }
    }
    Ok(g)
}
