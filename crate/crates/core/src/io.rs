//! Text formats for graphs.
//!
//! Two formats are supported:
//!
//! * **edge-list**: first line the vertex count, then one `u v` pair per
//!   line, 0-based, whitespace separated. Blank lines and `#` comments are
//!   ignored.
//! * **graph6**: the standard public byte encoding for graphs on up to 62
//!   vertices (single-byte order only, which is all this crate handles).
//!
//! Both serializations round-trip bit-exactly.

use crate::error::Error;
use crate::graph::Graph;

/// Input format selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

/// Parses a graph in the named format.
pub fn parse_graph(text: &str, format: Format) -> Result<Graph, Error> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => parse_graph6(text.trim()),
    }
}

/// Parses the edge-list format, reporting the offending line on failure.
pub fn parse_edge_list(text: &str) -> Result<Graph, Error> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::parse("line 1", "empty input, expected a vertex count"))?;
    let n: usize = header.parse().map_err(|_| {
        Error::parse(
            format!("line {line_no}"),
            format!("expected a vertex count, found {header:?}"),
        )
    })?;
    let mut edges = Vec::new();
    for (line_no, line) in lines {
        let mut it = line.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(Error::parse(
                    format!("line {line_no}"),
                    format!("expected `u v`, found {line:?}"),
                ))
            }
        };
        let parse_endpoint = |s: &str| {
            s.parse::<usize>().map_err(|_| {
                Error::parse(
                    format!("line {line_no}"),
                    format!("bad vertex index {s:?}"),
                )
            })
        };
        edges.push((parse_endpoint(u)?, parse_endpoint(v)?));
    }
    Graph::from_edges(n, &edges).map_err(|e| Error::parse("edge list", e.to_string()))
}

/// Writes the edge-list format.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Decodes a graph6 string (order up to 62).
pub fn parse_graph6(s: &str) -> Result<Graph, Error> {
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse("byte 0", "empty graph6 string"));
    }
    let mut pos = 0;
    if bytes[0] == b'>' {
        // optional ">>graph6<<" header
        let header = b">>graph6<<";
        if bytes.len() >= header.len() && &bytes[..header.len()] == header {
            pos = header.len();
        } else {
            return Err(Error::parse("byte 0", "malformed graph6 header"));
        }
    }
    if pos >= bytes.len() {
        return Err(Error::parse(format!("byte {pos}"), "missing graph6 order byte"));
    }
    let first = bytes[pos];
    if first == 126 {
        return Err(Error::parse(
            format!("byte {pos}"),
            "multi-byte graph6 orders (n > 62) are not supported",
        ));
    }
    if !(63..=125).contains(&first) {
        return Err(Error::parse(
            format!("byte {pos}"),
            format!("invalid graph6 order byte {first}"),
        ));
    }
    let n = (first - 63) as usize;
    pos += 1;
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    if bytes.len() - pos != need {
        return Err(Error::parse(
            format!("byte {pos}"),
            format!(
                "graph6 body for {n} vertices needs {need} bytes, found {}",
                bytes.len() - pos
            ),
        ));
    }
    let mut bits = Vec::with_capacity(need * 6);
    for (i, &b) in bytes[pos..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(
                format!("byte {}", pos + i),
                format!("invalid graph6 data byte {b}"),
            ));
        }
        let x = b - 63;
        for shift in (0..6).rev() {
            bits.push((x >> shift) & 1 == 1);
        }
    }
    let mut g = Graph::empty(n);
    let mut idx = 0;
    // column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for v in 1..n {
        for u in 0..v {
            if bits[idx] {
                g.add_edge_mut(u, v);
            }
            idx += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph as graph6 (order up to 62).
pub fn write_graph6(g: &Graph) -> Result<String, Error> {
    let n = g.order();
    if n > 62 {
        return Err(Error::Domain(format!(
            "graph6 single-byte encoding handles at most 62 vertices, got {n}"
        )));
    }
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2 + 6);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut out = String::new();
    out.push((63 + n as u8) as char);
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for &b in chunk {
            x = (x << 1) | u8::from(b);
        }
        out.push((63 + x) as char);
    }
    Ok(out)
}
