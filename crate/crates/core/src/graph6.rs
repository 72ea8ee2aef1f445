//! graph6 encoding (size prefix plus upper-triangle bits, column-major,
//! six bits per printable byte offset by 63).

use crate::error::GraphError;
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_ORDER};

const BIAS: u8 = 63;

/// Decodes one graph6 line. A trailing newline is ignored; headers are not
/// accepted here.
pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Empty);
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(GraphError::BadChar(bytes[pos] as char, pos));
    }
    let (n, data) = decode_size(bytes)?;
    if n > MAX_ORDER {
        return Err(GraphError::OrderTooLarge(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if data.len() != expected {
        return Err(GraphError::BadLength {
            expected,
            found: data.len(),
        });
    }

    let mut rows = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = data[k / 6] - BIAS;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                rows[u].insert(v);
                rows[v].insert(u);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = data[expected - 1] - BIAS;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(GraphError::TrailingBits);
        }
    }
    Ok(Graph::from_rows(n, rows))
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8]), GraphError> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - BIAS) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        // 36-bit form: ~~ followed by six bytes
        if bytes.len() < 8 {
            return Err(GraphError::BadSize);
        }
        let n = bytes[2..8]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        return Ok((n, &bytes[8..]));
    }
    if bytes.len() < 4 {
        return Err(GraphError::BadSize);
    }
    let n = bytes[1..4]
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
    if n < 63 {
        return Err(GraphError::BadSize);
    }
    Ok((n, &bytes[4..]))
}

/// Encodes `g` in canonical graph6 form (no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, path, star};

    #[test]
    fn smallest_codes() {
        let k1 = from_graph6("@").unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.edge_count(), 0);
        assert_eq!(to_graph6(&k1), "@");
        assert_eq!(from_graph6("A_").unwrap(), complete(2).unwrap());
        assert_eq!(to_graph6(&complete(2).unwrap()), "A_");
        assert_eq!(from_graph6("?").unwrap().order(), 0);
    }

    #[test]
    fn hand_decoded_star() {
        // '?' = 000000 and '{' = 111100: only x(0,4)..x(3,4) set
        let g = from_graph6("D?{\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(g, star(5).unwrap());
        let g = from_graph6("D@{").unwrap();
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 3), (2, 4), (3, 4)]);
        // networkx: to_graph6_bytes(path_graph(3)) == b"Bg"
        assert_eq!(to_graph6(&path(3).unwrap()), "Bg");
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(from_graph6(""), Err(GraphError::Empty));
        assert_eq!(from_graph6("A "), Err(GraphError::BadChar(' ', 1)));
        assert_eq!(
            from_graph6("A"),
            Err(GraphError::BadLength {
                expected: 1,
                found: 0
            })
        );
        assert_eq!(
            from_graph6("A__"),
            Err(GraphError::BadLength {
                expected: 1,
                found: 2
            })
        );
        // K2 has one data bit; 'A' + '@' sets a padding bit
        assert_eq!(from_graph6("A@"), Err(GraphError::TrailingBits));
        assert_eq!(from_graph6("~?"), Err(GraphError::BadSize));
        assert_eq!(from_graph6("~???"), Err(GraphError::BadSize));
    }

    #[test]
    fn large_size_prefix() {
        let g = crate::generators::cycle(64).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with("~?@"));
        assert_eq!(from_graph6(&s).unwrap(), g);
        let too_big = format!("~?@@{}", "?".repeat(65 * 64 / 12 + 1));
        assert_eq!(from_graph6(&too_big), Err(GraphError::OrderTooLarge(65)));
    }
}
