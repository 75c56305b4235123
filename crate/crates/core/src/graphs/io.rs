//! Edge-list files: a header line `n m`, then `m` lines `u v`.
//! `#` starts a comment; blank lines are skipped.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last = 0;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last = lineno;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let nums = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::parse(lineno, format!("invalid integer `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        let [a, b] = nums[..] else {
            return Err(Error::parse(lineno, format!("expected two integers, found {}", nums.len())));
        };
        match header {
            None => header = Some((a, b)),
            Some((n, _)) => {
                if a >= n || b >= n {
                    return Err(Error::parse(lineno, format!("vertex out of range 0..{n}")));
                }
                if a == b {
                    return Err(Error::parse(lineno, format!("loop at vertex {a}")));
                }
                edges.push((lineno, a, b));
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(Error::parse(last.max(1), "missing `n m` header"));
    };
    if edges.len() != m {
        return Err(Error::parse(last.max(1), format!("header declares {m} edges, found {}", edges.len())));
    }
    let mut seen = std::collections::BTreeSet::new();
    for &(lineno, a, b) in &edges {
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(Error::parse(lineno, format!("repeated edge {a} {b}")));
        }
    }
    Graph::new(n, edges.into_iter().map(|(_, a, b)| (a, b)))
}

/// Writes the graph with edges sorted lexicographically.
pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_write() {
        let g = parse_graph("# triangle\n3 3\n0 1\n\n2 1\n0 2 # last\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(write_graph(&g), "3 3\n0 1\n0 2\n1 2\n");
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        assert_eq!(parse_graph("1 0\n").unwrap().vertex_count(), 1);
    }

    #[test]
    fn parse_errors_carry_lines() {
        let cases = [
            ("3 1\n0 3\n", 2),
            ("3 1\n1 1\n", 2),
            ("3 2\n0 1\n1 0\n", 3),
            ("3 2\n0 1\n", 2),
            ("3 1\n0 x\n", 2),
            ("3\n", 1),
        ];
        for (text, line) in cases {
            match parse_graph(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }
}
