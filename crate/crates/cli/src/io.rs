//! Text formats: graph6 (short form) and a plain edge list.

use genpos::Graph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("malformed graph6 header or payload")]
    MalformedHeader,
    #[error("graph6 payload has trailing data or nonzero padding bits")]
    TrailingBits,
    #[error("bad token {0:?} in edge list")]
    BadToken(String),
    #[error("vertex {vertex} out of range for declared order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("graph of order {0} too large for short graph6 (max 62)")]
    TooLarge(usize),
}

/// Decodes one short-form graph6 line: offset-63 bytes, six bits per byte,
/// the upper triangle column by column.
pub fn parse_graph6(line: &str) -> Result<Graph, FormatError> {
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::MalformedHeader);
    }
    let head = bytes[0];
    if !(63..=125).contains(&head) {
        // 126 opens the long form, which this reader does not accept.
        return Err(FormatError::MalformedHeader);
    }
    let n = (head - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let payload = &bytes[1..];
    if payload.len() < expected {
        return Err(FormatError::MalformedHeader);
    }
    if payload.len() > expected {
        return Err(FormatError::TrailingBits);
    }
    let mut g = Graph::new(n);
    let mut pos = 0usize;
    let bit = |idx: usize| -> Result<bool, FormatError> {
        let byte = payload[idx / 6];
        if !(63..=126).contains(&byte) {
            return Err(FormatError::MalformedHeader);
        }
        Ok((byte - 63) >> (5 - idx % 6) & 1 == 1)
    };
    for j in 1..n {
        for i in 0..j {
            if bit(pos)? {
                g.add_edge(i, j);
            }
            pos += 1;
        }
    }
    // Padding up to the byte boundary must be zero.
    for idx in nbits..expected * 6 {
        if bit(idx)? {
            return Err(FormatError::TrailingBits);
        }
    }
    Ok(g)
}

/// Encodes a graph of order at most 62 as one graph6 line.
pub fn emit_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.n();
    if n > 62 {
        return Err(FormatError::TooLarge(n));
    }
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("printable range"))
}

/// Parses the edge-list format: a header line `n <order>` followed by one
/// `u v` pair per line, 0-based. Duplicate edges are tolerated and merged;
/// self-loops are rejected.
pub fn parse_edgelist(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or(FormatError::MalformedHeader)?;
    let mut toks = header.split_whitespace();
    match toks.next() {
        Some("n") => {}
        Some(other) => return Err(FormatError::BadToken(other.to_string())),
        None => return Err(FormatError::MalformedHeader),
    }
    let order_tok = toks.next().ok_or(FormatError::MalformedHeader)?;
    let n: usize = order_tok
        .parse()
        .map_err(|_| FormatError::BadToken(order_tok.to_string()))?;
    if let Some(extra) = toks.next() {
        return Err(FormatError::BadToken(extra.to_string()));
    }
    let mut g = Graph::new(n);
    for line in lines {
        let mut toks = line.split_whitespace();
        let next_vertex = |t: Option<&str>| -> Result<usize, FormatError> {
            let tok = t.ok_or(FormatError::MalformedHeader)?;
            let v: usize = tok
                .parse()
                .map_err(|_| FormatError::BadToken(tok.to_string()))?;
            if v >= n {
                return Err(FormatError::VertexOutOfRange { vertex: v, order: n });
            }
            Ok(v)
        };
        let u = next_vertex(toks.next())?;
        let v = next_vertex(toks.next())?;
        if let Some(extra) = toks.next() {
            return Err(FormatError::BadToken(extra.to_string()));
        }
        if u == v {
            return Err(FormatError::SelfLoop(u));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

pub fn emit_edgelist(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use genpos::families;

    #[test]
    fn known_graph6_line_is_a_star() {
        // "D?{": five vertices, the last adjacent to all others.
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(emit_graph6(&g).unwrap(), "D?{");
    }

    #[test]
    fn known_small_encodings() {
        assert_eq!(emit_graph6(&families::complete(4).unwrap()).unwrap(), "C~");
        assert_eq!(emit_graph6(&families::path(4).unwrap()).unwrap(), "Ch");
        assert_eq!(emit_graph6(&Graph::new(1)).unwrap(), "@");
        assert_eq!(parse_graph6("@").unwrap().n(), 1);
    }

    #[test]
    fn graph6_error_paths() {
        assert_eq!(parse_graph6(""), Err(FormatError::MalformedHeader));
        assert_eq!(parse_graph6("D?"), Err(FormatError::MalformedHeader));
        assert_eq!(parse_graph6("D?{?"), Err(FormatError::TrailingBits));
        // Three vertices use three bits; the last three must stay zero.
        assert_eq!(parse_graph6("B@"), Err(FormatError::TrailingBits));
        assert_eq!(parse_graph6("~??"), Err(FormatError::MalformedHeader));
        assert_eq!(
            emit_graph6(&Graph::new(63)),
            Err(FormatError::TooLarge(63))
        );
    }

    #[test]
    fn edgelist_roundtrip_and_errors() {
        let g = parse_edgelist("n 3\n0 1\n1 2\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(emit_edgelist(&g), "n 3\n0 1\n1 2\n");

        // Duplicates merge silently.
        let g = parse_edgelist("n 3\n0 1\n1 0\n0 1\n").unwrap();
        assert_eq!(g.edge_count(), 1);

        assert_eq!(
            parse_edgelist("n 3\n1 1\n"),
            Err(FormatError::SelfLoop(1))
        );
        assert_eq!(
            parse_edgelist("n 3\n0 7\n"),
            Err(FormatError::VertexOutOfRange { vertex: 7, order: 3 })
        );
        assert_eq!(
            parse_edgelist("m 3\n"),
            Err(FormatError::BadToken("m".into()))
        );
        assert_eq!(
            parse_edgelist("n 3\n0 x\n"),
            Err(FormatError::BadToken("x".into()))
        );
    }
}
