//! graph6 for graphs on at most 62 vertices (single-byte size prefix).
//!
//! Bit order is the upper triangle column by column:
//! (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...; bits are packed six to a
//! byte, most significant first, and each group is offset by 63.

use super::{Graph, GraphError, MAX_VERTICES};

const BIAS: u8 = 63;

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.n();
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(BIAS + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(BIAS + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(BIAS + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn graph6_decode(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.as_bytes();
    let err = |m: String| GraphError::Graph6(m);
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| err("empty input".into()))?;
    if !(BIAS..=126).contains(&first) {
        return Err(err(format!("size byte {first} out of range")));
    }
    let n = (first - BIAS) as usize;
    if n > MAX_VERTICES {
        return Err(err(format!(
            "{n} vertices exceeds the single-byte size form"
        )));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(err(format!(
            "expected {expected} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut rows = vec![0u64; n];
    let mut bit = 0usize;
    let (mut i, mut j) = (0usize, 1usize);
    for &b in body {
        if !(BIAS..=126).contains(&b) {
            return Err(err(format!("data byte {b} out of range")));
        }
        let v = b - BIAS;
        for k in (0..6).rev() {
            let set = v >> k & 1 == 1;
            if bit >= nbits {
                if set {
                    return Err(err("nonzero padding bits".into()));
                }
                continue;
            }
            if set {
                rows[i] |= 1u64 << j;
                rows[j] |= 1u64 << i;
            }
            bit += 1;
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Graph::from_adjacency(rows)
}
