//! Graph serialization: a plain edge-list text format and graph6.
//!
//! Edge list: first line "n m", then m lines "u v" with zero-indexed
//! endpoints.  graph6 follows the format used by nauty and friends; both
//! directions round-trip bit-exactly.

use crate::graph::Graph;
use crate::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad header line {header:?}")))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad header line {header:?}")))?;
    if it.next().is_some() {
        return Err(Error::Parse(format!("trailing tokens in header {header:?}")));
    }
    let mut g = Graph::new(n);
    let mut count = 0;
    for line in lines {
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad edge line {line:?}")))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad edge line {line:?}")))?;
        if it.next().is_some() {
            return Err(Error::Parse(format!("trailing tokens in edge line {line:?}")));
        }
        if g.has_edge(u, v) {
            return Err(Error::Parse(format!("duplicate edge ({u},{v})")));
        }
        g.add_edge(u, v)?;
        count += 1;
    }
    if count != m {
        return Err(Error::Parse(format!(
            "header announced {m} edges but {count} were given"
        )));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn graph6_size(bytes: &[u8]) -> Result<(usize, usize)> {
    // Returns (n, bytes consumed by the size field).
    match bytes {
        [] => Err(Error::Parse("empty graph6 string".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Parse("truncated graph6 size".into()));
            }
            let mut n = 0usize;
            for &b in &rest[..6] {
                n = n << 6 | decode6(b)? as usize;
            }
            Ok((n, 8))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Parse("truncated graph6 size".into()));
            }
            let mut n = 0usize;
            for &b in &rest[..3] {
                n = n << 6 | decode6(b)? as usize;
            }
            Ok((n, 4))
        }
        [b, ..] => Ok((decode6(*b)? as usize, 1)),
    }
}

fn decode6(b: u8) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(Error::Parse(format!("invalid graph6 byte {b}")))
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    let (n, skip) = graph6_size(bytes)?;
    let body = &bytes[skip..];
    let nbits = n * (n - 1) / 2;
    if body.len() != (nbits + 5) / 6 {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {}",
            body.len(),
            (nbits + 5) / 6
        )));
    }
    let mut g = Graph::new(n);
    let mut bit = 0usize;
    for &b in body {
        let v = decode6(b)?;
        for k in 0..6 {
            if bit >= nbits {
                if v & (0x20 >> k) != 0 {
                    return Err(Error::Parse("nonzero padding in graph6".into()));
                }
                continue;
            }
            if v & (0x20 >> k) != 0 {
                let (i, j) = triangle_coords(bit);
                g.add_edge(i, j)?;
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Inverse of the column-major upper-triangle bit order: bit index -> (i, j).
fn triangle_coords(bit: usize) -> (usize, usize) {
    let mut j = 1usize;
    let mut base = 0usize;
    while base + j <= bit {
        base += j;
        j += 1;
    }
    (bit - base, j)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else if n <= 258047 {
        bytes.push(126);
        for shift in [12, 6, 0] {
            bytes.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        bytes.push(126);
        bytes.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            bytes.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                bytes.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        bytes.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(bytes).unwrap()
}

/// Guess the format of a graph file: an edge list starts with an ASCII
/// digit (the vertex count), anything else is treated as graph6.
pub fn parse_auto(text: &str) -> Result<Graph> {
    let trimmed = text.trim_start();
    match trimmed.as_bytes().first() {
        Some(b'0'..=b'9') => parse_edge_list(text),
        Some(_) => parse_graph6(text.trim()),
        // An empty file is the empty graph.
        None => Ok(Graph::new(0)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete_bipartite, make_gamma, petersen};

    #[test]
    fn edge_list_round_trip() {
        for g in [
            petersen(),
            make_complete_bipartite(3, 4).unwrap(),
            make_gamma(3).unwrap().graph().clone(),
            Graph::new(0),
            Graph::new(4),
        ] {
            let text = write_edge_list(&g);
            assert_eq!(parse_edge_list(&text).unwrap(), g);
        }
    }

    #[test]
    fn edge_list_rejects_garbage() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3 1\n0 0\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 1\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 5\n").is_err());
    }

    #[test]
    fn graph6_known_strings() {
        // C5 in its pentagon labelling.
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(write_graph6(&c5), "Dhc");
        assert_eq!(parse_graph6("Dhc").unwrap(), c5);
        assert_eq!(parse_graph6(">>graph6<<Dhc").unwrap(), c5);
        let k23 = make_complete_bipartite(2, 3).unwrap();
        assert_eq!(write_graph6(&k23), "D]o");
        // K4.
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(write_graph6(&k4), "C~");
    }

    #[test]
    fn graph6_round_trip() {
        for g in [
            petersen(),
            make_complete_bipartite(5, 6).unwrap(),
            make_gamma(5).unwrap().graph().clone(),
            Graph::new(1),
        ] {
            let s = write_graph6(&g);
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
        // A size beyond the one-byte range.
        let mut big = Graph::new(70);
        big.add_edge(0, 69).unwrap();
        let s = write_graph6(&big);
        assert_eq!(parse_graph6(&s).unwrap(), big);
    }

    #[test]
    fn auto_detection() {
        let g = make_complete_bipartite(2, 3).unwrap();
        assert_eq!(parse_auto(&write_edge_list(&g)).unwrap(), g);
        assert_eq!(parse_auto(&write_graph6(&g)).unwrap(), g);
    }
}
