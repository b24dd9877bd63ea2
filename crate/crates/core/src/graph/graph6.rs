//! graph6 encoding.
//!
//! Header byte `n + 63` (orders up to 62; larger orders use the `~` escape,
//! which we recognise only to report a capacity error), followed by the
//! upper triangle in column-major order `x(0,1) x(0,2) x(1,2) x(0,3) ...`,
//! packed big-endian into 6-bit groups with zero padding, each group + 63.

use super::{Graph, GraphError, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let first = *bytes.first().ok_or(GraphError::Graph6Header)?;
    if !(63..=126).contains(&first) {
        return Err(GraphError::Graph6Header);
    }
    if first == 126 {
        // 126 escapes a multi-byte order, necessarily at least 63.
        let order = decode_long_order(&bytes[1..])?;
        return Err(GraphError::Capacity { order, max: MAX_ORDER });
    }
    let order = (first - 63) as usize;
    if order > MAX_ORDER {
        return Err(GraphError::Capacity { order, max: MAX_ORDER });
    }

    let body = &bytes[1..];
    let bits = order * order.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(GraphError::Graph6Truncated { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(GraphError::Graph6Trailing);
    }
    if let Some(&b) = body.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(GraphError::Graph6Byte(b));
    }

    let mut g = Graph::empty(order)?;
    let mut k = 0;
    for v in 1..order {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.add_edge(u, v)?;
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[expected - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(GraphError::Graph6Trailing);
        }
    }
    Ok(g)
}

fn decode_long_order(rest: &[u8]) -> Result<usize, GraphError> {
    let (groups, rest) = if rest.first() == Some(&126) { (6, &rest[1..]) } else { (3, rest) };
    if rest.len() < groups {
        return Err(GraphError::Graph6Header);
    }
    let mut n = 0usize;
    for &b in &rest[..groups] {
        if !(63..=126).contains(&b) {
            return Err(GraphError::Graph6Header);
        }
        n = (n << 6) | (b - 63) as usize;
    }
    Ok(n)
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc <<= 1;
            if g.has_edge(u, v) {
                acc |= 1;
            }
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        acc <<= 6 - k % 6;
        out.push(acc + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent bit-string reference: lays out the upper triangle as
    /// characters and packs them six at a time.
    fn reference_encode(g: &Graph) -> String {
        let n = g.order();
        let mut bits = String::new();
        for v in 1..n {
            for u in 0..v {
                bits.push(if g.has_edge(u, v) { '1' } else { '0' });
            }
        }
        while bits.len() % 6 != 0 {
            bits.push('0');
        }
        let mut s = String::new();
        s.push((n as u8 + 63) as char);
        for chunk in bits.as_bytes().chunks(6) {
            let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
            s.push((v + 63) as char);
        }
        s
    }

    #[test]
    fn small_known_encodings() {
        let k2 = Graph::complete(2).unwrap();
        let k3 = Graph::complete(3).unwrap();
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(reference_encode(&k2), "A_");
        assert_eq!(reference_encode(&k3), "Bw");
        assert_eq!(encode_graph6(&k2), "A_");
        assert_eq!(encode_graph6(&k3), "Bw");
        assert_eq!(encode_graph6(&k1), "@");
        assert_eq!(parse_graph6("A_").unwrap(), k2);
        assert_eq!(parse_graph6("Bw").unwrap(), k3);
        assert_eq!(parse_graph6("@").unwrap(), k1);
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap(), k3);
        assert_eq!(encode_graph6(&Graph::empty(0).unwrap()), "?");
    }

    #[test]
    fn five_vertex_graphs_use_two_body_bytes() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let s = encode_graph6(&c5);
        assert_eq!(s.len(), 3);
        assert_eq!(s, reference_encode(&c5));
    }

    #[test]
    fn full_sweep_up_to_five_vertices() {
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                let s = encode_graph6(&g);
                assert_eq!(s, reference_encode(&g));
                assert_eq!(parse_graph6(&s).unwrap(), g);
            }
        }
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(parse_graph6(""), Err(GraphError::Graph6Header));
        assert_eq!(parse_graph6("\u{1}"), Err(GraphError::Graph6Header));
        assert_eq!(parse_graph6("D"), Err(GraphError::Graph6Truncated { expected: 2, found: 0 }));
        assert_eq!(parse_graph6("A_?"), Err(GraphError::Graph6Trailing));
        // one edge bit followed by a set padding bit
        assert_eq!(parse_graph6("A`"), Err(GraphError::Graph6Trailing));
        // Order 33 is still a one-byte header but beyond capacity.
        assert!(matches!(parse_graph6("`"), Err(GraphError::Capacity { order: 33, .. })));
        assert!(matches!(parse_graph6("~?A?"), Err(GraphError::Capacity { order: 128, .. })));
    }
}
