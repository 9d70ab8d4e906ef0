//! graph6 text encoding, short form (`n ≤ 62`) only.
//!
//! The first byte is `63 + n`. The upper triangle is then read column by
//! column, `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six bits per byte
//! with the most significant bit first, zero-padded and offset by 63.

use thiserror::Error;

use crate::graph::{Graph, GraphBuilder};

/// Largest order the short form can express.
pub const GRAPH6_MAX_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("long-form graph6 (n > {GRAPH6_MAX_ORDER}) is not supported")]
    LongForm,
    #[error("byte {byte:#04x} at position {position} is outside 63..=126")]
    InvalidByte { position: usize, byte: u8 },
    #[error("expected {expected} bytes for {n} vertices, found {found}")]
    WrongLength {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("padding bits in the final byte are not zero")]
    NonzeroPadding,
    #[error("graph has {n} vertices; graph6 short form allows at most {GRAPH6_MAX_ORDER}")]
    TooLarge { n: usize },
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 string. A trailing line ending is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (&first, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (position, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { position, byte });
        }
    }
    if first == 126 {
        return Err(Graph6Error::LongForm);
    }
    let n = (first - 63) as usize;
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            n,
            expected,
            found: body.len(),
        });
    }
    let total = n * n.saturating_sub(1) / 2;
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (total..expected * 6).any(bit) {
        return Err(Graph6Error::NonzeroPadding);
    }
    let mut b = GraphBuilder::new(n).expect("n <= 62");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                b.add_edge(i, j).expect("distinct in-range vertices");
            }
            k += 1;
        }
    }
    Ok(b.build())
}

/// Encodes `g` without relabelling.
pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Graph6Error::TooLarge { n });
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(63 + n as u8);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + chunk);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (chunk << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, petersen};
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        assert_eq!(emit_graph6(&complete(1)).unwrap(), "@");
        assert_eq!(parse_graph6("D??").unwrap(), Graph::empty(5).unwrap());
        assert_eq!(parse_graph6("D??\n").unwrap(), Graph::empty(5).unwrap());
        // Reference encodings produced by standard tools.
        assert_eq!(emit_graph6(&cycle(5)).unwrap(), "Dhc");
        assert_eq!(emit_graph6(&complete(4)).unwrap(), "C~");
        assert_eq!(emit_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
        assert_eq!(
            parse_graph6(&emit_graph6(&cycle(5)).unwrap()).unwrap(),
            cycle(5)
        );
        assert_eq!(
            parse_graph6(&emit_graph6(&petersen()).unwrap()).unwrap(),
            petersen()
        );
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("~?@??"), Err(Graph6Error::LongForm));
        assert_eq!(
            parse_graph6("D?"),
            Err(Graph6Error::WrongLength {
                n: 5,
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            parse_graph6("D? ?"),
            Err(Graph6Error::InvalidByte {
                position: 2,
                byte: b' '
            })
        );
        // n = 2 has one edge bit; the low five bits are padding.
        assert_eq!(parse_graph6("A_").unwrap(), complete(2));
        assert_eq!(parse_graph6("A@"), Err(Graph6Error::NonzeroPadding));
        let big = Graph::empty(63).unwrap();
        assert_eq!(emit_graph6(&big), Err(Graph6Error::TooLarge { n: 63 }));
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_graph(40)) {
            let s = emit_graph6(&g).unwrap();
            prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }
}
