//! graph6 encoding, short form only (at most 62 vertices).
//!
//! Layout: one byte `n + 63`, then the upper triangle `x(i,j)` for
//! `j = 1..n-1`, `i = 0..j-1` packed big-endian in 6-bit groups, each group
//! offset by 63, final group zero-padded.

use super::Graph;
use crate::error::{Error, Result};

pub const GRAPH6_HEADER: &str = ">>graph6<<";
pub const MAX_GRAPH6_ORDER: usize = 62;

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decodes one graph6 line. A trailing newline and a leading `>>graph6<<`
/// header are tolerated. Error offsets index into `text`.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let start = if bytes.starts_with(GRAPH6_HEADER.as_bytes()) {
        GRAPH6_HEADER.len()
    } else {
        0
    };
    let body = &bytes[start..];

    let Some(&first) = body.first() else {
        return Err(parse_err(start, "missing length byte"));
    };
    if first == b'~' {
        return Err(parse_err(
            start,
            "long-form length prefix is not supported (n > 62)",
        ));
    }
    if !(63..=125).contains(&first) {
        return Err(parse_err(
            start,
            format!("illegal length byte 0x{first:02x}"),
        ));
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let data = &body[1..];

    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(
                start + 1 + i,
                format!("illegal character 0x{b:02x}"),
            ));
        }
    }
    if data.len() < nbytes {
        return Err(parse_err(
            start + 1 + data.len(),
            format!(
                "truncated: {n} vertices need {nbytes} data bytes, found {}",
                data.len()
            ),
        ));
    }
    if data.len() > nbytes {
        return Err(parse_err(
            start + 1 + nbytes,
            format!("{} unexpected trailing bytes", data.len() - nbytes),
        ));
    }
    if !nbits.is_multiple_of(6) {
        let pad = 6 - nbits % 6;
        let last = data[nbytes - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            return Err(parse_err(start + nbytes, "nonzero padding bits"));
        }
    }

    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = data[k / 6] - 63;
            if group >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes `g` as graph6 without header or newline.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::UnsupportedSize {
            n,
            limit: MAX_GRAPH6_ORDER,
        });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(group + 63);
                group = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((group << (6 - k % 6)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}
