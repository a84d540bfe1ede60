//! graph6 codec: `N(n)` size header followed by the upper triangle of the
//! adjacency matrix, column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed six bits per printable byte (`value + 63`).
//!
//! Only the one-byte (`n <= 62`) and four-byte (`n <= 258047`) size headers
//! are supported.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_ORDER: usize = 258_047;

fn bad(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if let Some(&c) = bytes.iter().find(|&&c| !(63..=126).contains(&c)) {
        return Err(bad(format!("byte {c} outside 63..=126")));
    }
    let (n, body) = match bytes.first() {
        None => return Err(bad("empty string")),
        Some(&126) => {
            if bytes.get(1) == Some(&126) {
                return Err(bad("eight-byte size header not supported"));
            }
            if bytes.len() < 4 {
                return Err(bad("truncated size header"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &c| (acc << 6) | (c - 63) as usize);
            if n < 63 {
                return Err(bad("non-minimal size header"));
            }
            (n, &bytes[4..])
        }
        Some(&c) => ((c - 63) as usize, &bytes[1..]),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() != need {
        return Err(bad(format!(
            "expected {need} edge bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    for pad in nbits..need * 6 {
        if bit(pad) {
            return Err(bad("nonzero padding bits"));
        }
    }
    Ok(g)
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER, "graph6 encoding limited to n <= {MAX_ORDER}");
    let mut out = Vec::with_capacity(4 + n * n / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut fill = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            fill += 1;
            if fill == 6 {
                out.push(acc + 63);
                acc = 0;
                fill = 0;
            }
        }
    }
    if fill > 0 {
        out.push((acc << (6 - fill)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Reads one graph per non-empty line.
pub fn read_lines<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        out.push(decode(line).map_err(|e| bad(format!("line {}: {e}", lineno + 1)))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn triangle() {
        let g = decode("Bw").unwrap();
        assert_eq!((g.order(), g.size()), (3, 3));
        assert_eq!(encode(&Graph::complete(3)), "Bw");
    }

    #[test]
    fn single_vertex_and_null() {
        assert_eq!(encode(&Graph::empty(1)), "@");
        assert_eq!(encode(&Graph::null()), "?");
        assert_eq!(decode("?").unwrap().order(), 0);
    }

    #[test]
    fn paper_strings() {
        let g = decode("ECZo").unwrap();
        assert_eq!((g.order(), g.size()), (6, 7));
        assert_eq!(g.degree_sequence().0, vec![4, 2, 2, 2, 2, 2]);
        let g = decode("F?zPw").unwrap();
        assert_eq!((g.order(), g.size()), (7, 10));
        for s in ["K??CA?_FEcdk", "HheadXZ", "Hhf@eS|", "J?BD?oX[F[?", "J?`CP``LE{?"] {
            assert_eq!(encode(&decode(s).unwrap()), s);
        }
    }

    #[test]
    fn malformed() {
        assert!(decode("").is_err());
        assert!(decode("Bww").is_err());
        assert!(decode("C").is_err());
        assert!(decode("B\x7f").is_err());
        assert!(decode("Bx").is_err()); // padding bit set
        assert!(decode("~~??????????").is_err());
        assert!(decode("~?").is_err());
    }

    #[test]
    fn four_byte_header() {
        let g = Graph::cycle(100);
        let s = encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), g);
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..=62, seed in any::<u64>()) {
            let mut g = Graph::empty(n);
            let mut x = seed | 1;
            for i in 0..n {
                for j in i + 1..n {
                    x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                    if x & 1 == 1 { g.add_edge(i, j); }
                }
            }
            let s = encode(&g);
            prop_assert_eq!(decode(&s).unwrap(), g);
        }
    }
}
