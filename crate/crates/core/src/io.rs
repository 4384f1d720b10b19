//! Text formats: graph6 and a plain edge list.
//!
//! graph6 follows the standard definition: a size header (one byte `n + 63`
//! for `n ≤ 62`, otherwise `~` and three 6-bit bytes, or `~~` and six for
//! `n > 258047`), then the upper triangle of the adjacency matrix in column
//! order (`(0,1), (0,2), (1,2), (0,3), …`), six bits per byte, most significant
//! bit first, zero-padded, each byte offset by 63.
//!
//! The edge list has the vertex count on its first line and one `u v` pair per
//! following line, 0-based. `#` starts a comment; blank lines are ignored.

use crate::error::{Error, Result};
use crate::graph::Graph;

const GRAPH6_HEADER: &str = ">>graph6<<";

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match trimmed.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    for (k, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse_at_byte(skip + k, format!("byte {b:#04x} is outside the graph6 range")));
        }
    }
    let take = |from: usize, count: usize| -> Result<usize> {
        if body.len() < from + count {
            return Err(Error::parse_at_byte(skip + body.len(), "truncated size header"));
        }
        Ok(body[from..from + count].iter().fold(0, |a, &b| a << 6 | (b - 63) as usize))
    };
    let (n, mut pos) = match body {
        [] => return Err(Error::parse_at_byte(skip, "empty graph6 string")),
        [126, 126, ..] => (take(2, 6)?, 8),
        [126, ..] => (take(1, 3)?, 4),
        [b, ..] => ((b - 63) as usize, 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = pos + bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::parse_at_byte(
            skip + body.len().min(expected),
            format!("expected {expected} bytes for {n} vertices, found {}", body.len()),
        ));
    }
    let mut g_edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g_edges.push((i, j));
            }
            k += 1;
        }
    }
    pos += bits.div_ceil(6);
    debug_assert_eq!(pos, body.len());
    if bits % 6 != 0 {
        let last = body[body.len() - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(Error::parse_at_byte(skip + body.len() - 1, "nonzero padding bits"));
        }
    }
    Graph::from_edge_list(n, g_edges)
}

pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::parse_at_line(line_no, format!("`{s}` is not a vertex number")))
        };
        match (n, fields.as_slice()) {
            (None, [count]) => n = Some(num(count)?),
            (None, _) => {
                return Err(Error::parse_at_line(line_no, "first line must hold the vertex count"));
            }
            (Some(count), [a, b]) => {
                let (a, b) = (num(a)?, num(b)?);
                if a >= count || b >= count {
                    return Err(Error::parse_at_line(
                        line_no,
                        format!("endpoint out of range: {a} {b} with {count} vertices"),
                    ));
                }
                if a == b {
                    return Err(Error::Input(format!("self-loop at vertex {a} on line {line_no}")));
                }
                edges.push((a, b));
            }
            (Some(_), _) => return Err(Error::parse_at_line(line_no, "expected `u v`")),
        }
    }
    let n = n.ok_or_else(|| Error::parse_at_line(1, "missing vertex count"))?;
    Graph::from_edge_list(n, edges)
}

/// One graph per non-empty line of graph6, or a single edge list when the
/// first meaningful line is a bare vertex count.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    let first = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty());
    match first {
        None => Ok(Vec::new()),
        Some(l) if l.chars().all(|c| c.is_ascii_digit()) => Ok(vec![parse_edge_list(text)?]),
        Some(_) => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                decode_graph6(l.trim()).map_err(|e| match e {
                    Error::Parse { location, message } => {
                        Error::Parse { location: format!("line {}, {location}", i + 1), message }
                    }
                    other => other,
                })
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn net() -> Graph {
        Graph::from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 0), (4, 1), (5, 2)]).unwrap()
    }

    #[test]
    fn graph6_literals() {
        assert_eq!(encode_graph6(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(encode_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(encode_graph6(&Graph::empty(0).unwrap()), "?");
        let p3 = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(encode_graph6(&p3), "Bg");
        // K_4: six bits all set -> 63 + 63
        assert_eq!(encode_graph6(&Graph::complete(4).unwrap()), "C~");
    }

    #[test]
    fn graph6_round_trips() {
        assert_eq!(decode_graph6(&encode_graph6(&net())).unwrap(), net());
        let big = Graph::from_edge_list(100, (1..100).map(|i| (i - 1, i))).unwrap();
        let text = encode_graph6(&big);
        assert!(text.starts_with('~'));
        assert_eq!(decode_graph6(&text).unwrap(), big);
        assert_eq!(decode_graph6(&format!(">>graph6<<{}\n", encode_graph6(&net()))).unwrap(), net());
    }

    #[test]
    fn graph6_errors_carry_offsets() {
        assert!(matches!(decode_graph6(""), Err(Error::Parse { .. })));
        let err = decode_graph6("A_x").unwrap_err();
        assert_eq!(
            err,
            Error::Parse { location: "byte 2".into(), message: "expected 2 bytes for 2 vertices, found 3".into() }
        );
        let err = decode_graph6("A\u{1}").unwrap_err();
        assert!(matches!(err, Error::Parse { ref location, .. } if location == "byte 1"));
        assert!(decode_graph6("~?").is_err());
        // padding bit set: K_2 has one data bit, "A`" sets the second
        assert!(decode_graph6("A`").is_err());
    }

    #[test]
    fn edge_list_examples() {
        let p3 = parse_edge_list("3\n0 1\n1 2").unwrap();
        assert_eq!(p3, Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap());
        assert_eq!(parse_edge_list("2\n0 1\n1 0").unwrap(), Graph::complete(2).unwrap());
        let err = parse_edge_list("3\n0 3").unwrap_err();
        assert!(matches!(err, Error::Parse { ref location, .. } if location == "line 2"));
        assert!(matches!(parse_edge_list("3\n1 1"), Err(Error::Input(_))));
        assert!(matches!(parse_edge_list("3\n0 x"), Err(Error::Parse { .. })));
        let with_comments = "# net graph\n6\n0 1 # triangle\n1 2\n0 2\n\n3 0\n4 1\n5 2\n";
        assert_eq!(parse_edge_list(with_comments).unwrap(), net());
        assert_eq!(parse_edge_list(&encode_edge_list(&net())).unwrap(), net());
    }

    #[test]
    fn parse_graphs_detects_format() {
        assert_eq!(parse_graphs("3\n0 1\n").unwrap().len(), 1);
        let gs = parse_graphs("A_\nBg\n\n@\n").unwrap();
        assert_eq!(gs.len(), 3);
        let err = parse_graphs("A_\nA_x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { ref location, .. } if location.starts_with("line 2")));
    }
}
