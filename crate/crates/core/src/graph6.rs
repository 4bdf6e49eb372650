//! graph6 encoding: a size header `N(n)` followed by the upper triangle of
//! the adjacency matrix, read column by column (`x(0,1), x(0,2), x(1,2),
//! x(0,3), ...`), packed six bits per printable byte with offset 63.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";
/// Largest order the format can express (36-bit size field).
pub const MAX_ORDER: usize = 68_719_476_735;

fn push_size(out: &mut String, n: usize) {
    let push6 = |out: &mut String, v: usize| out.push(char::from(OFFSET + (v & 0x3f) as u8));
    if n <= 62 {
        push6(out, n);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            push6(out, n >> shift);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            push6(out, n >> shift);
        }
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER, "graph too large for graph6");
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = String::with_capacity(8 + bits.div_ceil(6));
    push_size(&mut out, n);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(char::from(chunk + OFFSET));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(char::from((chunk << (6 - filled)) + OFFSET));
    }
    out
}

/// Decodes a single graph6 line. An optional `>>graph6<<` header and a
/// trailing newline are accepted; error offsets are relative to `input`.
pub fn decode_graph6(input: &str) -> Result<Graph> {
    let trimmed = input.trim_end_matches(['\n', '\r']);
    let (bytes, base) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (trimmed.as_bytes(), 0),
    };
    let err = |offset: usize, message: &'static str| Error::Graph6 {
        offset: base + offset,
        message,
    };
    let sextet = |pos: usize| -> Result<usize> {
        match bytes.get(pos) {
            None => Err(err(pos, "unexpected end of input")),
            Some(&b) if !(63..=126).contains(&b) => {
                Err(err(pos, "byte outside printable range 63..=126"))
            }
            Some(&b) => Ok(usize::from(b - OFFSET)),
        }
    };

    let (n, mut pos) = match bytes.first() {
        None => return Err(err(0, "empty input")),
        Some(b'~') if bytes.get(1) == Some(&b'~') => {
            let n = (2..8).try_fold(0usize, |acc, p| Ok::<_, Error>((acc << 6) | sextet(p)?))?;
            (n, 8)
        }
        Some(b'~') => {
            let n = (1..4).try_fold(0usize, |acc, p| Ok::<_, Error>((acc << 6) | sextet(p)?))?;
            (n, 4)
        }
        Some(_) => (sextet(0)?, 1),
    };

    let bits = n
        .checked_mul(n.saturating_sub(1))
        .map(|x| x / 2)
        .ok_or(err(0, "order overflow"))?;
    let expected_len = pos + bits.div_ceil(6);
    if bytes.len() > expected_len {
        return Err(err(expected_len, "trailing bytes after adjacency data"));
    }
    if bytes.len() < expected_len {
        return Err(err(bytes.len(), "unexpected end of input"));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut current = 0usize;
    for j in 1..n {
        for i in 0..j {
            if bit.is_multiple_of(6) {
                current = sextet(pos)?;
                pos += 1;
            }
            if (current >> (5 - bit % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) && current & ((1 << (6 - bit % 6)) - 1) != 0 {
        return Err(err(pos - 1, "nonzero padding bits"));
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, k2};

    #[test]
    fn small_known_encodings() {
        assert_eq!(encode_graph6(&k2()), "A_");
        assert_eq!(encode_graph6(&Graph::empty(1)), "@");
        assert_eq!(encode_graph6(&Graph::empty(0)), "?");
        // 5 vertices, edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g), "DQc");
    }

    #[test]
    fn large_order_header() {
        let g = Graph::empty(63);
        let s = encode_graph6(&g);
        assert_eq!(&s[..4], "~??~");
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn decode_accepts_header_and_newline() {
        assert_eq!(decode_graph6(">>graph6<<A_\n").unwrap(), k2());
        let c4 = cycle_graph(4).unwrap();
        assert_eq!(decode_graph6(&encode_graph6(&c4)).unwrap(), c4);
    }

    #[test]
    fn decode_errors_carry_offsets() {
        assert_eq!(
            decode_graph6(""),
            Err(Error::Graph6 {
                offset: 0,
                message: "empty input"
            })
        );
        assert!(matches!(
            decode_graph6("A"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            decode_graph6("A_?"),
            Err(Error::Graph6 { offset: 2, .. })
        ));
        assert!(matches!(
            decode_graph6("A "),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        // 'A' then bits 100001: padding bit set.
        assert!(matches!(
            decode_graph6("A`"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            decode_graph6(">>graph6<<A"),
            Err(Error::Graph6 { offset: 11, .. })
        ));
    }
}
