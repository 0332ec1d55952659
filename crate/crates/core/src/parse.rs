//! Text formats: posets, group tables, homomorphism specs and edge lists.
//!
//! Poset file:
//!
//! ```text
//! # the four-point circle
//! points: a b c d
//! a < c
//! a < d
//! b < c
//! b < d
//! ```
//!
//! The relation lines need not be closed under transitivity; the parser
//! takes the reflexive-transitive closure. A line may chain several
//! relations (`a < c < e`). A point may be declared equivalent to another
//! by writing both `a < b` and `b < a`.
//!
//! Group table file (row `x` lists `x * y` for each `y` in order):
//!
//! ```text
//! elements: e r
//! e r
//! r e
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::groupoid::Presentation;
use crate::space::{Arrow, FiniteSpace};

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(head, _)| head).trim()
}

/// Lines with comments removed, paired with their 1-based line numbers;
/// blank lines are skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.is_empty())
}

/// Splits on any of `seps` outside brackets and parentheses. Pieces are
/// trimmed; empty pieces are dropped.
pub fn split_top_level<'a>(s: &'a str, seps: &[char]) -> Vec<&'a str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ if depth == 0 && seps.contains(&c) => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out.into_iter()
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .collect()
}

fn parse_err(e: Error, line: usize) -> Error {
    match e {
        Error::Parse { .. } => e,
        other => Error::parse(line, other.to_string()),
    }
}

/// Parses the poset format.
pub fn parse_poset(text: &str) -> Result<FiniteSpace> {
    let mut lines = content_lines(text);
    let (first, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `points:` line"))?;
    let points = header
        .strip_prefix("points:")
        .ok_or_else(|| Error::parse(first, "first line must start with `points:`"))?;
    let labels: Vec<String> = points.split_whitespace().map(str::to_string).collect();
    if labels.is_empty() {
        return Err(Error::parse(first, "no points declared"));
    }
    let mut pairs: Vec<(String, String, usize)> = Vec::new();
    for (n, line) in lines {
        let parts: Vec<&str> = line.split('<').map(str::trim).collect();
        if parts.len() < 2
            || parts
                .iter()
                .any(|p| p.is_empty() || p.contains(char::is_whitespace))
        {
            return Err(Error::parse(n, format!("expected `x < y`, found `{line}`")));
        }
        for w in parts.windows(2) {
            pairs.push((w[0].to_string(), w[1].to_string(), n));
        }
    }
    // Resolve labels here so unknown points report their line.
    let space = FiniteSpace::from_relations(&labels, std::iter::empty::<(&str, &str)>())
        .map_err(|e| parse_err(e, first))?;
    let mut idx = Vec::with_capacity(pairs.len());
    for (a, b, n) in &pairs {
        let x = space.index_of(a).map_err(|e| parse_err(e, *n))?;
        let y = space.index_of(b).map_err(|e| parse_err(e, *n))?;
        idx.push((x, y));
    }
    FiniteSpace::from_index_pairs(labels, &idx)
}

pub fn read_poset(path: impl AsRef<Path>) -> Result<FiniteSpace> {
    parse_poset(&read(path.as_ref())?)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::parse(0, format!("cannot read {}: {e}", path.display())))
}

/// Writes a space in the poset format. Only generating relations are
/// written: the Hasse covers between class representatives, plus a cycle
/// through each class of equivalent points.
pub fn write_poset(space: &FiniteSpace) -> String {
    let mut out = format!("points: {}\n", space.labels().join(" "));
    let q = space.kolmogorov_quotient();
    for class in q.classes.iter().filter(|c| c.len() > 1) {
        for w in class.windows(2) {
            out.push_str(&format!("{} < {}\n", space.label(w[0]), space.label(w[1])));
        }
        let (first, last) = (class[0], class[class.len() - 1]);
        out.push_str(&format!("{} < {}\n", space.label(last), space.label(first)));
    }
    for a in q.space.hasse_covers() {
        let (x, y) = (q.section.apply(a.src), q.section.apply(a.dst));
        out.push_str(&format!("{} < {}\n", space.label(x), space.label(y)));
    }
    out
}

/// Parses `a<c, b<c` (also `;` or newline separated) into arrows of `space`.
pub fn parse_edges(space: &FiniteSpace, spec: &str) -> Result<Vec<Arrow>> {
    split_top_level(spec, &[',', ';', '\n'])
        .into_iter()
        .map(|e| {
            let (lo, hi) = e
                .split_once('<')
                .ok_or_else(|| Error::parse(1, format!("expected `x<y`, found `{e}`")))?;
            space.arrow(lo.trim(), hi.trim())
        })
        .collect()
}

/// Parses a group table file.
pub fn parse_group_table(text: &str) -> Result<FiniteGroup> {
    let mut lines = content_lines(text);
    let (first, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `elements:` line"))?;
    let elements = header
        .strip_prefix("elements:")
        .ok_or_else(|| Error::parse(first, "first line must start with `elements:`"))?;
    let labels: Vec<String> = elements.split_whitespace().map(str::to_string).collect();
    let rows: Vec<Vec<String>> = lines
        .map(|(_, l)| l.split_whitespace().map(str::to_string).collect())
        .collect();
    FiniteGroup::from_label_table(labels, &rows)
}

/// `Zn` for the cyclic group of order `n`, or `table:<path>`.
pub fn parse_group_spec(spec: &str) -> Result<FiniteGroup> {
    let spec = spec.trim();
    if let Some(path) = spec.strip_prefix("table:") {
        return parse_group_table(&read(Path::new(path))?);
    }
    let n = spec
        .strip_prefix('Z')
        .and_then(|n| n.parse::<usize>().ok())
        .ok_or_else(|| {
            Error::parse(
                1,
                format!("group spec must be `Zn` or `table:<path>`, found `{spec}`"),
            )
        })?;
    FiniteGroup::cyclic(n)
}

/// Parses `g[a<d] -> 2` assignments separated by newlines, `;` or `,`.
/// Generators not mentioned are left out; the caller decides whether that
/// is an error.
pub fn parse_hom_spec(
    p: &Presentation,
    g: &FiniteGroup,
    spec: &str,
) -> Result<BTreeMap<Arrow, usize>> {
    let mut images = BTreeMap::new();
    for (n, line) in content_lines(spec) {
        for item in split_top_level(line, &[',', ';']) {
            let (lhs, rhs) = item.split_once("->").ok_or_else(|| {
                Error::parse(n, format!("expected `g[x<y] -> element`, found `{item}`"))
            })?;
            let a = p.parse_generator(lhs)?;
            let v = g.index_of(rhs.trim())?;
            if images.insert(a, v).is_some() {
                return Err(Error::parse(
                    n,
                    format!("generator `{}` assigned twice", lhs.trim()),
                ));
            }
        }
    }
    Ok(images)
}
