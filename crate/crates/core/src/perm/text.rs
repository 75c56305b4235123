//! Plain-text generator files.
//!
//! ```text
//! # D_15 acting on 3 + 5 points
//! degree 8
//! (0 1 2)(3 4 5 6 7)
//! 1 0 2 6 5 4 3 7
//! ```
//!
//! The first meaningful line declares the degree. Every later line is one
//! generator, written either in cycle notation with 0-based points or as a
//! whitespace-separated image list of length `degree`.

use super::{Permutation, PermutationGroup};
use crate::error::{Error, Result};

pub fn parse_generators(text: &str) -> Result<PermutationGroup> {
    let mut degree: Option<usize> = None;
    let mut generators = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some(n) = degree else {
            degree = Some(parse_degree(line, lineno)?);
            continue;
        };
        let perm = if line.starts_with('(') { parse_cycles(n, line, lineno)? } else { parse_images(n, line, lineno)? };
        generators.push(perm);
    }
    let Some(n) = degree else {
        return Err(Error::parse(last_line.max(1), "missing `degree n` line"));
    };
    if generators.is_empty() {
        generators.push(Permutation::identity(n));
    }
    PermutationGroup::new(n, generators)
}

/// Writes a group's generators in image-list form.
pub fn write_generators(group: &PermutationGroup) -> String {
    let mut out = format!("degree {}\n", group.degree());
    for g in group.generators() {
        let line: Vec<String> = g.images().map(|x| x.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

fn parse_degree(line: &str, lineno: usize) -> Result<usize> {
    let mut parts = line.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some("degree"), Some(n), None) => match n.parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(Error::parse(lineno, format!("invalid degree `{n}`"))),
        },
        _ => Err(Error::parse(lineno, "expected `degree n`")),
    }
}

fn parse_images(n: usize, line: &str, lineno: usize) -> Result<Permutation> {
    let images = line
        .split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| Error::parse(lineno, format!("invalid point `{t}`"))))
        .collect::<Result<Vec<_>>>()?;
    if images.len() != n {
        return Err(Error::parse(lineno, format!("expected {n} images, found {}", images.len())));
    }
    Permutation::from_images(images).map_err(|e| Error::parse(lineno, e.to_string()))
}

fn parse_cycles(n: usize, line: &str, lineno: usize) -> Result<Permutation> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = line;
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(Error::parse(lineno, format!("unexpected text `{rest}`")));
        };
        let Some(end) = body.find(')') else {
            return Err(Error::parse(lineno, "unclosed `(`"));
        };
        let cycle = body[..end]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::parse(lineno, format!("invalid point `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = body[end + 1..].trim_start();
    }
    Permutation::from_cycles(n, &cycles).map_err(|e| Error::parse(lineno, e.to_string()))
}
