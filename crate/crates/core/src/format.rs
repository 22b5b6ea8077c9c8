//! Text encodings: graph6, sorted edge lists, and Graphviz DOT.
//!
//! graph6 (single-byte header only): the first byte is `order + 63`, followed
//! by the upper triangle read column by column, `x(0,1) x(0,2) x(1,2) x(0,3)
//! ..`, packed big-endian into 6-bit groups, zero padded, each group `+ 63`.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Graph, DEFAULT_ORDER_CAP};

const GRAPH6_HEADER: &[u8] = b">>graph6<<";
const BIAS: u8 = 63;

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        reason: reason.into(),
    }
}

/// Upper-triangle bits in column order.
pub(crate) fn column_bits(g: &Graph) -> impl Iterator<Item = bool> + '_ {
    (1..g.order()).flat_map(move |j| (0..j).map(move |i| g.has_edge(i, j)))
}

/// Encodes `g` as graph6 without a header prefix or trailing newline.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > DEFAULT_ORDER_CAP {
        return Err(Error::Capacity {
            order: n,
            cap: DEFAULT_ORDER_CAP,
        });
    }
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push(n as u8 + BIAS);
    let mut group = 0u8;
    let mut filled = 0;
    for bit in column_bits(g) {
        group = group << 1 | bit as u8;
        filled += 1;
        if filled == 6 {
            out.push(group + BIAS);
            group = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Decodes one graph6 record. A leading `>>graph6<<` and a trailing line
/// terminator are accepted and ignored.
pub fn from_graph6(text: &[u8]) -> Result<Graph> {
    let (skip, body) = match text.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest),
        None => (0, text),
    };
    let body = body.strip_suffix(b"\n").unwrap_or(body);
    let body = body.strip_suffix(b"\r").unwrap_or(body);

    let Some(&head) = body.first() else {
        return Err(parse_err(skip, "empty input"));
    };
    if !(BIAS..=126).contains(&head) {
        return Err(parse_err(
            skip,
            format!("byte {head:#04x} is not a graph6 character"),
        ));
    }
    if head == 126 {
        return Err(parse_err(
            skip,
            "multi-byte order headers (order > 62) are not supported",
        ));
    }
    let n = (head - BIAS) as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    let data = &body[1..];
    if data.len() != expected {
        let offset = skip + 1 + data.len().min(expected);
        return Err(parse_err(
            offset,
            format!(
                "expected {expected} data bytes for order {n}, found {}",
                data.len()
            ),
        ));
    }
    for (i, &b) in data.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(parse_err(
                skip + 1 + i,
                format!("byte {b:#04x} is not a graph6 character"),
            ));
        }
    }
    if let Some(&last) = data.last() {
        let pad = expected * 6 - bit_count;
        if (last - BIAS) & ((1u8 << pad) - 1) != 0 {
            return Err(parse_err(skip + data.len(), "non-zero padding bits"));
        }
    }

    let mut g = Graph::empty(n)?;
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            let group = data[pos / 6] - BIAS;
            if group >> (5 - pos % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            pos += 1;
        }
    }
    Ok(g)
}

/// One `u v` line per edge, `u < v`, lexicographic order, no trailing newline.
pub fn to_edge_list(g: &Graph) -> String {
    g.edges()
        .iter()
        .map(|(u, v)| format!("{u} {v}"))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Graphviz DOT with every vertex declared, then the sorted edges.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        writeln!(out, "  {v};").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push('}');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_graph6_vectors() {
        let k2 = Graph::complete(2).unwrap();
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(to_graph6(&k2).unwrap(), "A_");
        assert_eq!(to_graph6(&k3).unwrap(), "Bw");
        assert_eq!(from_graph6(b"A_").unwrap(), k2);
        assert_eq!(from_graph6(b">>graph6<<Bw\n").unwrap(), k3);
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        // P4 0-1-2-3: bits x01 x02 x12 x03 x13 x23 = 1 0 1 0 0 1
        assert_eq!(to_graph6(&Graph::path(4).unwrap()).unwrap(), "Ch");
    }

    #[test]
    fn malformed_graph6() {
        assert!(matches!(
            from_graph6(b""),
            Err(Error::Parse { offset: 0, .. })
        ));
        assert!(matches!(
            from_graph6(b"B"),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(from_graph6(b"Bww"), Err(Error::Parse { .. })));
        // K2 with a padding bit set
        assert!(matches!(
            from_graph6(b"A`"),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(
            from_graph6(b"A "),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(
            from_graph6(b"~?@"),
            Err(Error::Parse { offset: 0, .. })
        ));
        assert!(matches!(
            from_graph6(b">>graph6<<B"),
            Err(Error::Parse { offset: 11, .. })
        ));
    }

    #[test]
    fn text_formats() {
        assert_eq!(to_edge_list(&Graph::complete(2).unwrap()), "0 1");
        let empty = Graph::empty(3).unwrap();
        assert_eq!(to_edge_list(&empty), "");
        assert_eq!(to_dot(&empty), "graph G {\n  0;\n  1;\n  2;\n}");
        let p3 = Graph::path(3).unwrap();
        assert_eq!(
            to_dot(&p3),
            "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}"
        );
    }

    proptest! {
        #[test]
        fn graph6_round_trip(n in 0usize..=12, mask in any::<u64>()) {
            let mut g = Graph::empty(n).unwrap();
            let mut bit = 0;
            for j in 1..n {
                for i in 0..j {
                    if mask >> (bit % 64) & 1 == 1 {
                        g.add_edge(i, j).unwrap();
                    }
                    bit += 1;
                }
            }
            let text = to_graph6(&g).unwrap();
            prop_assert_eq!(from_graph6(text.as_bytes()).unwrap(), g);
        }
    }
}
