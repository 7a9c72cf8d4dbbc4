//! Edge-list text and graph6 encodings.

use super::Graph;
use crate::error::{Error, Result};

/// Parses the edge-list format: the vertex count on the first line, then
/// one `i j` pair per line (0-based). Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (first_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing vertex count".into(),
    })?;
    let n = parse_index(header, first_line)?;
    if n == 0 {
        return Err(Error::Parse { line: first_line, message: "vertex count must be positive".into() });
    }
    let mut edges = Vec::new();
    for (line, content) in lines {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let [a, b] = tokens[..] else {
            return Err(Error::Parse {
                line,
                message: format!("expected two vertex indices, found {} tokens", tokens.len()),
            });
        };
        let (a, b) = (parse_index(a, line)?, parse_index(b, line)?);
        for v in [a, b] {
            if v >= n {
                return Err(Error::Parse { line, message: format!("vertex {v} out of range for n = {n}") });
            }
        }
        if a == b {
            return Err(Error::Parse { line, message: format!("self-loop at vertex {a}") });
        }
        edges.push((a, b));
    }
    Graph::new(n, edges)
}

fn parse_index(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a non-negative integer, found {token:?}"),
    })
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for &(i, j) in g.edges() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}

/// Decodes a graph6 string (optionally with the `>>graph6<<` header).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("invalid character {:?}", b as char)));
    }
    let (n, rest) = decode_n(bytes)?;
    if n == 0 {
        return Err(Error::NoVertices);
    }
    let bits_needed = n * (n - 1) / 2;
    let expected = bits_needed.div_ceil(6);
    if rest.len() != expected {
        return Err(Error::Graph6(format!(
            "length mismatch: {} data bytes for n = {n}, expected {expected}",
            rest.len()
        )));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

fn decode_n(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let value = |chunk: &[u8]| chunk.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    match bytes {
        [] => Err(Error::Graph6("empty input".into())),
        [126, 126, rest @ ..] if rest.len() >= 6 => Ok((value(&rest[..6]), &rest[6..])),
        [126, rest @ ..] if rest.len() >= 3 && rest[0] != 126 => Ok((value(&rest[..3]), &rest[3..])),
        [126, ..] => Err(Error::Graph6("truncated vertex count".into())),
        [b, rest @ ..] => Ok(((b - 63) as usize, rest)),
    }
}

pub fn to_graph6(g: &Graph) -> String {
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
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use proptest::prelude::*;

    #[test]
    fn edge_list_examples() {
        let g = parse_edge_list("3\n0 1\n0 2\n").unwrap();
        assert_eq!(g, Family::Star(3).build().unwrap());
        let g = parse_edge_list("2\n0 1\n").unwrap();
        assert_eq!(g, Family::Complete(2).build().unwrap());
        let g = parse_edge_list("# header\n4\n\n0 1 # first\n2 3\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (2, 3)]);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        assert_eq!(
            parse_edge_list("3\n0 1\n0 x\n"),
            Err(Error::Parse { line: 3, message: "expected a non-negative integer, found \"x\"".into() })
        );
        assert!(matches!(parse_edge_list("3\n0 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("3\n0 1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("3\n1 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("-3\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn graph6_known_strings() {
        // 5 vertices, vertex 4 adjacent to all others
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.edges(), &[(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(to_graph6(&g), "D?{");
        // (0,2),(0,4),(1,3),(3,4)
        let g = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(parse_graph6(">>graph6<<DQc\n").unwrap(), g);
        assert_eq!(to_graph6(&Family::Complete(1).build().unwrap()), "@");
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6("D?"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("D?{{"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("D ?{"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6(""), Err(Error::Graph6(_))));
    }

    #[test]
    fn graph6_large_header() {
        let g = Family::Path(70).build().unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    proptest! {
        #[test]
        fn graph6_round_trip(g in crate::graph::tests::arb_graph(12)) {
            prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
        }

        #[test]
        fn edge_list_round_trip(g in crate::graph::tests::arb_graph(12)) {
            prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        }
    }
}
