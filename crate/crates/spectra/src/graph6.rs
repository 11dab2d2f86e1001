//! graph6: upper triangle read column by column, six bits per byte, each
//! byte offset by 63.

use spectra_core::Graph;

pub const MAX_ORDER: usize = 258_047;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("graph6 parse error at byte {offset}: {message}")]
pub struct Graph6Error {
    pub offset: usize,
    pub message: String,
}

fn err(offset: usize, message: impl Into<String>) -> Graph6Error {
    Graph6Error { offset, message: message.into() }
}

fn sixbits(bytes: &[u8], at: usize) -> Result<u32, Graph6Error> {
    match bytes.get(at) {
        None => Err(err(at, "unexpected end of input")),
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u32),
        Some(&b) => Err(err(at, format!("byte {:#04x} outside 63..=126", b))),
    }
}

/// One graph, with an optional `>>graph6<<` header and trailing newline.
pub fn load_graph6(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    let mut start = 0;
    if bytes.starts_with(b">>graph6<<") {
        start = 10;
    }
    let mut end = bytes.len();
    while end > start && matches!(bytes[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let body = &bytes[..end];
    if body.len() == start {
        return Err(err(start, "empty input"));
    }
    let (n, mut pos) = if body[start] != 126 {
        (sixbits(body, start)? as usize, start + 1)
    } else if body.get(start + 1) != Some(&126) {
        let mut n = 0usize;
        for k in 0..3 {
            n = n << 6 | sixbits(body, start + 1 + k)? as usize;
        }
        if n < 63 {
            return Err(err(start, format!("order {} uses the long form", n)));
        }
        (n, start + 4)
    } else {
        let mut n = 0usize;
        for k in 0..6 {
            n = n << 6 | sixbits(body, start + 2 + k)? as usize;
        }
        if n > MAX_ORDER {
            return Err(err(start, format!("order {} exceeds {}", n, MAX_ORDER)));
        }
        (n, start + 8)
    };
    for at in pos..body.len() {
        sixbits(body, at)?;
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() - pos != need {
        let at = if body.len() - pos < need { body.len() } else { pos + need };
        return Err(err(at, format!("expected {} data bytes for {} vertices, found {}", need, n, body.len() - pos)));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    let mut chunk = 0;
    for v in 1..n {
        for u in 0..v {
            if k % 6 == 0 {
                chunk = sixbits(body, pos)?;
                pos += 1;
            }
            if chunk >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    // padding bits must be zero
    if k % 6 != 0 && chunk & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(err(pos - 1, "nonzero padding bits"));
    }
    Graph::new(n, edges).map_err(|e| err(start, e.to_string()))
}

/// Every non-empty line of a multi-graph file.
pub fn load_graph6_lines(bytes: &[u8]) -> Result<Vec<Graph>, Graph6Error> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in bytes.split(|&b| b == b'\n') {
        if !line.iter().all(|b| b.is_ascii_whitespace()) {
            out.push(load_graph6(line).map_err(|e| err(offset + e.offset, e.message))?);
        }
        offset += line.len() + 1;
    }
    Ok(out)
}

/// Without header or newline.
pub fn save_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    assert!(n <= MAX_ORDER, "graph6 order {} exceeds {}", n, MAX_ORDER);
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    for &(u, v) in g.edges() {
        // position of (u, v), u < v, in column-major upper-triangle order
        let k = v * (v - 1) / 2 + u;
        data[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(data.into_iter().map(|b| b + 63));
    out
}
