//! Text encodings for graphs: the compact graph6 format and a
//! human-editable edge-list format.
//!
//! graph6 packs the upper triangle of the adjacency matrix, column by
//! column, into printable bytes `63..=126` (six bits per byte, most
//! significant bit first), after a one- or four-byte order header. Orders
//! 1 through 512 are supported; the 36-bit extended header is rejected
//! because it only arises for orders far beyond that cap.
//!
//! The edge-list format is line oriented: an optional `n <count>` header
//! line fixes the order, then one `u v` pair per line. `#` starts a
//! comment, blank lines are skipped, and when the header is absent the
//! order is inferred as the largest endpoint plus one.

use crate::bits::MAX_VERTICES;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Optional prefix some tools place before a graph6 value.
pub const GRAPH6_HEADER: &str = ">>graph6<<";

/// The two text formats understood by [`parse_as`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TextFormat {
    Graph6,
    EdgeList,
}

/// Guess the format of `text`.
///
/// graph6 bytes all lie in `63..=126`, a range that contains neither
/// digits nor whitespace, so a single line made of such bytes (or the
/// explicit `>>graph6<<` prefix) is graph6 and everything else is treated
/// as an edge list.
pub fn sniff_format(text: &str) -> TextFormat {
    let t = text.trim();
    if t.starts_with(GRAPH6_HEADER) {
        return TextFormat::Graph6;
    }
    if !t.is_empty() && t.bytes().all(|b| (63..=126).contains(&b)) {
        return TextFormat::Graph6;
    }
    TextFormat::EdgeList
}

/// Parse `text` in the given format, or sniff the format when `fmt` is
/// `None`.
pub fn parse_as(text: &str, fmt: Option<TextFormat>) -> Result<Graph> {
    match fmt.unwrap_or_else(|| sniff_format(text)) {
        TextFormat::Graph6 => parse_graph6(text),
        TextFormat::EdgeList => parse_edge_list(text),
    }
}

// ----------------------------------------------------------------------
// graph6
// ----------------------------------------------------------------------

/// Encode a graph as a graph6 string.
///
/// This is total: every graph of order up to 512 (including the
/// vertexless graph, which encodes as `"?"`) has an encoding. The
/// encoding is canonical for the given labeling: orders up to 62 use the
/// short header and padding bits are zero.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        out.push((((n >> 12) & 0x3f) as u8 + 63) as char);
        out.push((((n >> 6) & 0x3f) as u8 + 63) as char);
        out.push(((n & 0x3f) as u8 + 63) as char);
    }
    let mut acc = 0u8;
    let mut nbits = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    out
}

/// Decode a graph6 string (with or without the `>>graph6<<` prefix).
///
/// Strict by design: every byte must be in range, the data length must
/// match the order exactly, and all padding bits must be zero. Order 0 is
/// rejected — a vertexless graph is never a meaningful input here.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let t = text.trim();
    let t = t.strip_prefix(GRAPH6_HEADER).unwrap_or(t);
    let bytes = t.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::Graph6(format!(
            "invalid byte 0x{:02x} at position {pos} (expected 63..=126)",
            bytes[pos]
        )));
    }
    let (n, data_start) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(Error::Graph6(
                "36-bit order header implies an order beyond the supported maximum".into(),
            ));
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated 18-bit order header".into()));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n == 0 {
        return Err(Error::Graph6("order 0 is not supported".into()));
    }
    if n > MAX_VERTICES {
        return Err(Error::NOutOfRange { n, max: MAX_VERTICES });
    }
    let nbits = n * (n - 1) / 2;
    let ngroups = nbits.div_ceil(6);
    let data = &bytes[data_start..];
    if data.len() != ngroups {
        return Err(Error::Graph6(format!(
            "order {n} requires {ngroups} data bytes, found {}",
            data.len()
        )));
    }
    let bit_at = |i: usize| (data[i / 6] - 63) >> (5 - i % 6) & 1 == 1;
    let mut g = Graph::empty(n)?;
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bit_at(i) {
                g.add_edge(u, v);
            }
            i += 1;
        }
    }
    for pad in nbits..6 * ngroups {
        if bit_at(pad) {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

// ----------------------------------------------------------------------
// Edge list
// ----------------------------------------------------------------------

/// Parse the line-oriented edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_endpoint: Option<usize> = None;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "n" {
            if declared.is_some() {
                return Err(Error::EdgeList(format!(
                    "line {lineno}: duplicate 'n' header"
                )));
            }
            if !edges.is_empty() {
                return Err(Error::EdgeList(format!(
                    "line {lineno}: 'n' header must precede all edges"
                )));
            }
            if tokens.len() != 2 {
                return Err(Error::EdgeList(format!(
                    "line {lineno}: expected 'n <count>'"
                )));
            }
            let n: usize = tokens[1].parse().map_err(|_| {
                Error::EdgeList(format!(
                    "line {lineno}: invalid vertex count {:?}",
                    tokens[1]
                ))
            })?;
            if n > MAX_VERTICES {
                return Err(Error::NOutOfRange { n, max: MAX_VERTICES });
            }
            declared = Some(n);
            continue;
        }
        if tokens.len() != 2 {
            return Err(Error::EdgeList(format!(
                "line {lineno}: expected 'u v', found {} token(s)",
                tokens.len()
            )));
        }
        let parse_vertex = |tok: &str| -> Result<usize> {
            tok.parse().map_err(|_| {
                Error::EdgeList(format!("line {lineno}: invalid vertex {tok:?}"))
            })
        };
        let u = parse_vertex(tokens[0])?;
        let v = parse_vertex(tokens[1])?;
        max_endpoint = Some(max_endpoint.unwrap_or(0).max(u).max(v));
        edges.push((u, v));
    }

    let n = match (declared, max_endpoint) {
        (Some(n), _) => n,
        (None, Some(m)) => m + 1,
        (None, None) => {
            return Err(Error::EdgeList(
                "cannot infer order from an empty edge list; add an 'n <count>' header"
                    .into(),
            ))
        }
    };
    if n > MAX_VERTICES {
        return Err(Error::NOutOfRange { n, max: MAX_VERTICES });
    }
    Graph::from_edges(n, &edges)
}

/// Encode a graph in the edge-list format, header line included.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
