//! The nauty graph6 text format.
//!
//! A record is a vertex-count header followed by the upper triangle of the
//! adjacency matrix, read column by column (`x(0,1), x(0,2), x(1,2), ...`),
//! packed six bits per byte big-endian and biased by 63.

use crate::error::{Graph6Error, Graph6ErrorKind};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

pub const HEADER: &str = ">>graph6<<";

const BIAS: u8 = 63;

fn err(offset: usize, kind: Graph6ErrorKind) -> Graph6Error {
    Graph6Error { offset, kind }
}

fn edge_bytes(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 record. A leading `>>graph6<<` header and a trailing
/// line terminator are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let mut bytes = line.as_bytes();
    let mut base = 0;
    if let Some(rest) = bytes.strip_prefix(HEADER.as_bytes()) {
        bytes = rest;
        base = HEADER.len();
    }
    if let Some(rest) = bytes.strip_suffix(b"\n") {
        bytes = rest.strip_suffix(b"\r").unwrap_or(rest);
    }
    if bytes.is_empty() {
        return Err(err(base, Graph6ErrorKind::Empty));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(base + i, Graph6ErrorKind::InvalidByte(b)));
        }
    }

    let (n, header_len) = if bytes[0] != 126 {
        ((bytes[0] - BIAS) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(err(base + bytes.len(), Graph6ErrorKind::BadHeader));
        }
        (read_word(&bytes[2..8]), 8)
    } else {
        if bytes.len() < 4 {
            return Err(err(base + bytes.len(), Graph6ErrorKind::BadHeader));
        }
        let n = read_word(&bytes[1..4]);
        if n < 63 {
            return Err(err(base, Graph6ErrorKind::BadHeader));
        }
        (n, 4)
    };
    if n == 0 {
        return Err(err(base, Graph6ErrorKind::NoVertices));
    }
    if n > MAX_VERTICES {
        return Err(err(base, Graph6ErrorKind::TooManyVertices(n)));
    }

    let body = &bytes[header_len..];
    let expected = edge_bytes(n);
    if body.len() < expected {
        return Err(err(
            base + bytes.len(),
            Graph6ErrorKind::WrongLength {
                expected,
                got: body.len(),
            },
        ));
    }
    if body.len() > expected {
        return Err(err(
            base + header_len + expected,
            Graph6ErrorKind::TrailingGarbage,
        ));
    }

    let mut rows = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                rows[i].insert(j);
                rows[j].insert(i);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = body[expected - 1] - BIAS;
        let pad = 6 - k % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(
                base + header_len + expected - 1,
                Graph6ErrorKind::NonzeroPadding,
            ));
        }
    }
    Ok(Graph::from_rows(rows).expect("decoded rows are symmetric"))
}

fn read_word(b: &[u8]) -> usize {
    b.iter().fold(0usize, |acc, &x| (acc << 6) | (x - BIAS) as usize)
}

/// Encodes `g` as a graph6 record without header or newline.
///
/// # Panics
/// If `g` has no vertices.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n >= 1, "graph6 records need at least one vertex");
    let mut out = Vec::with_capacity(1 + edge_bytes(n));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + BIAS);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
