//! Edge-list text and graph6 encodings.
//!
//! Edge list: the first non-comment line is the vertex count, followed by one
//! `u v` pair per line. Blank lines and `#` comments are ignored.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Parse("edge list is empty".into()))?
        .parse()
        .map_err(|_| Error::Parse("first line of an edge list must be the vertex count".into()))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
            _ => return Err(Error::Parse(format!("bad edge line `{line}`"))),
        }
    }
    Graph::from_edges(n, edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Parses one graph6 string; a leading `>>graph6<<` header is accepted.
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes: Vec<u8> = s.bytes().collect();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse("graph6 byte outside 63..=126".into()));
    }
    let (n, body) = match bytes.as_slice() {
        [] => return Err(Error::Parse("empty graph6 string".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Parse("truncated graph6 size".into()));
            }
            (sextets(&rest[..6]), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Parse("truncated graph6 size".into()));
            }
            (sextets(&rest[..3]), &rest[3..])
        }
        [b, rest @ ..] => ((*b - 63) as usize, rest),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    if body.len() != pairs.div_ceil(6) {
        return Err(Error::Parse(format!("graph6 body has {} bytes, expected {}", body.len(), pairs.div_ceil(6))));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

fn sextets(b: &[u8]) -> usize {
    b.iter().fold(0usize, |acc, &x| (acc << 6) | (x - 63) as usize)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        // at most 64 vertices, so the 18-bit form always suffices
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
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
    String::from_utf8(out).expect("graph6 is ASCII")
}
