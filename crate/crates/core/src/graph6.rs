//! graph6 codec.
//!
//! Size prefix, then the upper triangle of the adjacency matrix read column
//! by column (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits per byte
//! with a bias of 63. Only orders up to 64 are representable by [`Graph`].

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n / 12) + 1);
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + BIAS);
        out.push(((n >> 6) & 63) as u8 + BIAS);
        out.push((n & 63) as u8 + BIAS);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn decode(text: &str) -> Result<Graph> {
    let mut start = 0;
    let mut body = text;
    if let Some(rest) = body.strip_prefix(HEADER) {
        start = HEADER.len();
        body = rest;
    }
    let body = body.trim_end_matches(['\n', '\r']);
    let bytes = body.as_bytes();
    let err = |pos: usize, reason: String| Error::Graph6 {
        offset: start + pos,
        reason,
    };

    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, format!("byte {b:#04x} outside the range 63..=126")));
        }
    }
    if bytes.is_empty() {
        return Err(err(0, "missing size prefix".into()));
    }

    let (n, header_len) = if bytes[0] != 126 {
        ((bytes[0] - BIAS) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        return Err(err(
            1,
            "eight-byte size prefix exceeds the supported order".into(),
        ));
    } else if bytes.len() < 4 {
        return Err(err(bytes.len(), "truncated three-byte size prefix".into()));
    } else {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - BIAS) as usize);
        (n, 4)
    };
    if n > MAX_ORDER {
        return Err(err(
            0,
            format!("order {n} exceeds the supported maximum {MAX_ORDER}"),
        ));
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let payload = &bytes[header_len..];
    if payload.len() != expected {
        return Err(err(
            header_len + payload.len().min(expected),
            format!(
                "expected {expected} payload bytes for order {n}, found {}",
                payload.len()
            ),
        ));
    }

    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = payload[bit / 6] - BIAS;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.set_edge(i, j, true);
            }
            bit += 1;
            if bit == nbits {
                break 'outer;
            }
        }
    }
    if nbits % 6 != 0 {
        let last = payload[expected - 1] - BIAS;
        let pad = 6 - nbits % 6;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(err(
                header_len + expected - 1,
                "padding bits are set".into(),
            ));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent bit-by-bit reference encoder: builds the bit vector first,
    /// then chunks it.
    fn reference_encode(n: usize, edges: &[(usize, usize)]) -> String {
        let mut bits = Vec::new();
        for j in 1..n {
            for i in 0..j {
                bits.push(
                    edges
                        .iter()
                        .any(|&(a, b)| (a, b) == (i, j) || (a, b) == (j, i)),
                );
            }
        }
        while bits.len() % 6 != 0 {
            bits.push(false);
        }
        let mut s = String::new();
        s.push((n as u8 + 63) as char);
        for chunk in bits.chunks(6) {
            let v = chunk.iter().fold(0u8, |a, &b| a << 1 | b as u8);
            s.push((v + 63) as char);
        }
        s
    }

    #[test]
    fn fig1a_first_graph_round_trip() {
        let edges = [(0, 3), (0, 4), (1, 4), (3, 4)];
        let reference = reference_encode(5, &edges);
        assert_eq!(reference, "DCs");
        let g = decode(&reference).unwrap();
        assert_eq!(g, Graph::from_edges(5, &edges).unwrap());
        assert_eq!(encode(&g), reference);
    }

    #[test]
    fn star_k14_encoding() {
        let star = Graph::from_edges(5, &[(0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert_eq!(decode("D?{").unwrap(), star);
        assert_eq!(
            reference_encode(5, &[(0, 4), (1, 4), (2, 4), (3, 4)]),
            "D?{"
        );
    }

    #[test]
    fn small_fixed_values() {
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(decode("?").unwrap(), Graph::empty(0));
        assert_eq!(encode(&Graph::complete(2)), "A_");
        assert_eq!(encode(&Graph::empty(1)), "@");
        let g = decode("DQc").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(encode(&g), "DQc");
    }

    #[test]
    fn header_and_newline_accepted() {
        assert_eq!(decode(">>graph6<<A_\n").unwrap(), Graph::complete(2));
        assert_eq!(decode("A_\r\n").unwrap(), Graph::complete(2));
    }

    #[test]
    fn large_prefix() {
        let g = Graph::cycle(63);
        let s = encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), g);
        let g = Graph::path(64);
        assert_eq!(decode(&encode(&g)).unwrap(), g);
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        match decode("A ") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
        // 'A' + '`' sets a padding bit (payload 0b100001)
        match decode("A`") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
        assert!(decode("D?").is_err());
        assert!(decode("D?{?").is_err());
        assert!(decode("").is_err());
        assert!(decode("~?").is_err());
        assert!(decode("~~??????").is_err());
        match decode(">>graph6<<A\x7f") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 11),
            other => panic!("unexpected {other:?}"),
        }
    }
}
