//! graph6 small format (orders 0..=62).
//!
//! Byte 0 is `63 + n`. The upper-triangle bits x(0,1), x(0,2), x(1,2),
//! x(0,3), ... follow column by column, packed six to a byte with the most
//! significant bit first, each byte offset by 63 and the last one zero-padded.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ORDER: usize = 62;

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(err(
            0,
            format!("order {n} needs the large format, which is not supported"),
        ));
    }
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

pub fn from_graph6(text: &[u8]) -> Result<Graph> {
    let (&first, body) = text.split_first().ok_or_else(|| err(0, "empty input"))?;
    let n = match first {
        63..=125 => (first - 63) as usize,
        126 => return Err(err(0, "large-format orders (n >= 63) are not supported")),
        _ => return Err(err(0, format!("byte {first} is outside 63..=126"))),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if body.len() < needed {
        return Err(err(
            text.len(),
            format!(
                "truncated: expected {needed} adjacency bytes, found {}",
                body.len()
            ),
        ));
    }
    if body.len() > needed {
        return Err(err(1 + needed, "unexpected trailing bytes"));
    }
    let mut values = Vec::with_capacity(needed);
    for (k, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(1 + k, format!("byte {b} is outside 63..=126")));
        }
        values.push(b - 63);
    }
    let mut g = Graph::empty(n);
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if values[bit / 6] >> (5 - bit % 6) & 1 == 1 {
                g.link(i, j);
            }
            bit += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = values[needed - 1];
        let pad = 6 - pairs % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(needed, "non-zero padding bits"));
        }
    }
    Ok(g)
}
