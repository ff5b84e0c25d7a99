//! graph6 codec for graphs on up to 62 vertices (single-byte header form).
//!
//! The order byte is `n + 63`. The upper triangle of the adjacency matrix is
//! then read in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed
//! big-endian into 6-bit groups, zero-padded, each group stored as one
//! printable byte after adding 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    debug_assert!(n <= MAX_VERTICES);
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((group << (6 - filled)) + 63) as char);
    }
    out
}

pub fn from_graph6(s: &str) -> Result<Graph> {
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedGraph6("empty string".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::MalformedGraph6(format!("byte {b} outside printable range 63..=126")));
        }
    }
    if bytes[0] == 126 {
        return Err(Error::MalformedGraph6(
            "multi-byte order header means n > 62, which is unsupported".into(),
        ));
    }
    let n = (bytes[0] - 63) as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = 1 + bit_count.div_ceil(6);
    if bytes.len() < expected {
        return Err(Error::MalformedGraph6(format!(
            "payload too short: need {} bytes for n = {n}, got {}",
            expected,
            bytes.len()
        )));
    }
    if bytes.len() > expected {
        return Err(Error::MalformedGraph6(format!(
            "trailing garbage: expected {} bytes for n = {n}, got {}",
            expected,
            bytes.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            let group = bytes[1 + pos / 6] - 63;
            if group >> (5 - pos % 6) & 1 == 1 {
                g.add_edge_unchecked(i, j);
            }
            pos += 1;
        }
    }
    // padding bits must be zero
    while pos % 6 != 0 {
        let group = bytes[1 + pos / 6] - 63;
        if group >> (5 - pos % 6) & 1 == 1 {
            return Err(Error::MalformedGraph6("nonzero padding bits".into()));
        }
        pos += 1;
    }
    Ok(g)
}
