//! graph6 text encoding (short form, no `>>graph6<<` header).

use super::{LabelledGraph, MAX_ORDER};
use crate::error::{Error, Result};

pub fn encode_graph6(g: &LabelledGraph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

pub fn decode_graph6(s: &str) -> Result<LabelledGraph> {
    let bad = |why| Error::Graph6(s.to_string(), why);
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    let (&first, body) = bytes.split_first().ok_or_else(|| bad("empty string"))?;
    if !(63..=126).contains(&first) {
        return Err(bad("invalid order byte"));
    }
    if first == 126 {
        return Err(bad("long-form orders are not supported"));
    }
    let n = (first - 63) as usize;
    if n > MAX_ORDER {
        return Err(Error::CapExceeded(n));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    if body.len() != pairs.div_ceil(6) {
        return Err(bad("wrong length for the stated order"));
    }
    let mut bits = Vec::with_capacity(body.len() * 6);
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(bad("byte outside the graph6 range"));
        }
        let v = b - 63;
        for k in (0..6).rev() {
            bits.push(v >> k & 1 == 1);
        }
    }
    if bits[pairs..].iter().any(|&b| b) {
        return Err(bad("non-zero padding bits"));
    }
    let mut g = LabelledGraph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                g.set_edge(i, j, true);
            }
            k += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        // a-c, a-e, b-d, d-e on five vertices
        let g = LabelledGraph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g), "DQc");
        assert_eq!(decode_graph6("DQc").unwrap(), g);
        assert_eq!(encode_graph6(&LabelledGraph::new(0).unwrap()), "?");
        assert_eq!(encode_graph6(&LabelledGraph::new(1).unwrap()), "@");
        let k2 = LabelledGraph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(encode_graph6(&k2), "A_");
        assert_eq!(encode_graph6(&LabelledGraph::new(2).unwrap()), "A?");
    }

    #[test]
    fn malformed_input() {
        assert!(decode_graph6("").is_err());
        assert!(decode_graph6("D").is_err());
        assert!(decode_graph6("A@").is_err());
        assert!(matches!(decode_graph6("Q????????????????????"), Err(Error::CapExceeded(18))));
        assert!(decode_graph6("~?@A").is_err());
    }
}
