//! graph6 encoding for graphs with 1..=62 vertices.
//!
//! A line is one size byte (`n + 63`) followed by the upper triangle of the
//! adjacency matrix in column order, `x(0,1) x(0,2) x(1,2) x(0,3) ...`,
//! packed big-endian into 6-bit groups, each offset by 63.

use alloc::string::String;
use alloc::vec::Vec;

use crate::{Error, Graph, Graph6Error, MAX_VERTICES};

/// Optional header that may prefix a graph6 line.
pub const HEADER: &str = ">>graph6<<";

fn payload_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes one line. A trailing `\n` or `\r\n` and a leading
/// [`HEADER`] are accepted.
pub fn decode(line: &str) -> Result<Graph, Error> {
    let line = line.strip_suffix('\n').unwrap_or(line);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    decode_bytes(line.as_bytes()).map_err(Error::from)
}

fn decode_bytes(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    let (&size, payload) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if !(63..=126).contains(&size) {
        return Err(Graph6Error::BadByte { byte: size, offset: 0 });
    }
    if size == 126 {
        return Err(Graph6Error::TooLarge);
    }
    let n = (size - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::ZeroVertices);
    }
    debug_assert!(n <= MAX_VERTICES);
    let expected = payload_len(n);
    if let Some(pos) = payload.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::BadByte { byte: payload[pos], offset: pos + 1 });
    }
    if payload.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: payload.len(),
            offset: 1 + payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(Graph6Error::TrailingData { offset: 1 + expected });
    }

    let total = n * (n - 1) / 2;
    let pad = expected * 6 - total;
    if pad > 0 {
        let last = payload[expected - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding { offset: expected });
        }
    }

    let mut rows = [0u64; MAX_VERTICES];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = payload[k / 6] - 63;
            if group >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(&rows[..n]))
}
