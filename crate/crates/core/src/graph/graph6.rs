//! The graph6 text format.
//!
//! Layout: optional `>>graph6<<` header, then the order `N(n)`, then the
//! upper triangle of the adjacency matrix in column order
//! `x(0,1) x(0,2) x(1,2) x(0,3) ...`, six bits per byte, most significant
//! bit first, zero padded. Every byte carries an offset of 63.
//!
//! `N(n)` is one byte for `n <= 62`, `126` plus three bytes (18 bits) for
//! `n <= 258047`, and `126 126` plus six bytes (36 bits) above that.

use thiserror::Error;

use super::Graph;

pub const GRAPH6_HEADER: &[u8] = b">>graph6<<";

const SMALL_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LARGE_MAX: u64 = (1 << 36) - 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {byte} at offset {offset} is outside 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("payload holds {got} bits but the order needs {needed}")]
    TruncatedPayload { needed: usize, got: usize },
    #[error("padding bits in the last payload byte are not zero")]
    NonzeroPadding,
    #[error("{extra} unexpected trailing byte(s) after the adjacency payload")]
    TrailingBytes { extra: usize },
    #[error("order {0} is beyond the 36-bit graph6 range")]
    OrderOverflow(u64),
    #[error("{0} input is not supported, only graph6")]
    UnsupportedFormat(&'static str),
}

fn detect_other_format(line: &[u8]) -> Option<&'static str> {
    if line.starts_with(b">>sparse6<<") || line.first() == Some(&b':') {
        Some("sparse6")
    } else if line.starts_with(b">>digraph6<<") || line.first() == Some(&b'&') {
        Some("digraph6")
    } else {
        None
    }
}

fn check_byte(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    let byte = bytes[offset];
    if !(63..=126).contains(&byte) {
        return Err(Graph6Error::ByteOutOfRange { offset, byte });
    }
    Ok(u64::from(byte - 63))
}

/// Decodes `N(n)`; returns the order and the number of bytes consumed.
fn decode_order(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    if first != 126 {
        return Ok((check_byte(bytes, 0)? as usize, 1));
    }
    let (start, digits) = if bytes.get(1) == Some(&126) { (2, 6) } else { (1, 3) };
    if bytes.len() < start + digits {
        return Err(Graph6Error::TruncatedPayload { needed: 6 * digits, got: 6 * (bytes.len() - start) });
    }
    let mut n = 0u64;
    for offset in start..start + digits {
        n = (n << 6) | check_byte(bytes, offset)?;
    }
    let n = usize::try_from(n).map_err(|_| Graph6Error::OrderOverflow(n))?;
    Ok((n, start + digits))
}

/// Parses one graph6 line. A trailing `\n` or `\r\n` is ignored.
pub fn parse_graph6(text: &[u8]) -> Result<Graph, Graph6Error> {
    let mut line = text;
    while let Some((&last, rest)) = line.split_last() {
        if last == b'\n' || last == b'\r' {
            line = rest;
        } else {
            break;
        }
    }
    if let Some(fmt) = detect_other_format(line) {
        return Err(Graph6Error::UnsupportedFormat(fmt));
    }
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    if line.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, used) = decode_order(line)?;
    let payload = &line[used..];
    let needed_bits = n * n.saturating_sub(1) / 2;
    let needed_bytes = needed_bits.div_ceil(6);
    if payload.len() < needed_bytes {
        return Err(Graph6Error::TruncatedPayload { needed: needed_bits, got: 6 * payload.len() });
    }
    if payload.len() > needed_bytes {
        return Err(Graph6Error::TrailingBytes { extra: payload.len() - needed_bytes });
    }
    let mut values = Vec::with_capacity(payload.len());
    for offset in 0..payload.len() {
        values.push(check_byte(line, used + offset)? as u8);
    }
    let pad = needed_bytes * 6 - needed_bits;
    if pad > 0 && values.last().is_some_and(|&b| b & ((1 << pad) - 1) != 0) {
        return Err(Graph6Error::NonzeroPadding);
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
    Ok(Graph::from_edges(n, edges).expect("graph6 payload encodes a simple graph"))
}

/// Encodes a graph as graph6 without header or newline.
pub fn write_graph6(g: &Graph) -> Result<Vec<u8>, Graph6Error> {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= SMALL_MAX {
        out.push(n as u8 + 63);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else if n as u64 <= LARGE_MAX {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        return Err(Graph6Error::OrderOverflow(n as u64));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    Ok(out)
}
