//! Plain-text formats.
//!
//! Bi-filtration file:
//!
//! ```text
//! bifiltration
//! <number of simplices>
//! <v0> <v1> ... ; <x1> <y1> [<x2> <y2> ...]
//! ```
//!
//! Lower-star file:
//!
//! ```text
//! lowerstar
//! <number of vertices> <number of simplices>
//! <x> <y>                  (one line per vertex)
//! <v0> <v1> ...            (one line per simplex)
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::complex::{lower_star, validate_bifiltration, BiFiltration, Point2};
use crate::error::{Error, Result};

/// Content lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_num<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    tok.parse().map_err(|_| Error::parse(line, format!("bad {what} `{tok}`")))
}

fn parse_vertices(tokens: &str, line: usize) -> Result<Vec<u32>> {
    let v: Vec<u32> = tokens
        .split_whitespace()
        .map(|t| parse_num(t, line, "vertex"))
        .collect::<Result<_>>()?;
    if v.is_empty() {
        return Err(Error::parse(line, "simplex without vertices"));
    }
    Ok(v)
}

fn parse_coords(tokens: &str, line: usize) -> Result<Vec<f64>> {
    tokens.split_whitespace().map(|t| parse_num(t, line, "coordinate")).collect()
}

/// Parses either format, dispatching on the header line.
pub fn parse_filtration(text: &str) -> Result<BiFiltration> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, "bifiltration")) => parse_bifiltration_body(lines),
        Some((_, "lowerstar")) => parse_lower_star_body(lines),
        Some((n, other)) => Err(Error::parse(n, format!("unknown header `{other}`"))),
        None => Err(Error::parse(1, "empty input")),
    }
}

fn parse_bifiltration_body<'a>(mut lines: impl Iterator<Item = (usize, &'a str)>) -> Result<BiFiltration> {
    let (n, count) = lines.next().ok_or_else(|| Error::parse(2, "missing simplex count"))?;
    let count: usize = parse_num(count, n, "simplex count")?;
    let mut raw = Vec::with_capacity(count);
    for (n, line) in lines {
        let (verts, coords) =
            line.split_once(';').ok_or_else(|| Error::parse(n, "expected `vertices ; coordinates`"))?;
        let vertices = parse_vertices(verts, n)?;
        let coords = parse_coords(coords, n)?;
        if coords.is_empty() || coords.len() % 2 != 0 {
            return Err(Error::parse(n, "expected a positive, even number of coordinates"));
        }
        let points = coords.chunks(2).map(|c| Point2::new(c[0], c[1])).collect();
        raw.push((vertices, points));
    }
    if raw.len() != count {
        return Err(Error::parse(0, format!("expected {count} simplices, found {}", raw.len())));
    }
    validate_bifiltration(raw)
}

fn parse_lower_star_body<'a>(mut lines: impl Iterator<Item = (usize, &'a str)>) -> Result<BiFiltration> {
    let (n, counts) = lines.next().ok_or_else(|| Error::parse(2, "missing counts"))?;
    let counts: Vec<usize> =
        counts.split_whitespace().map(|t| parse_num(t, n, "count")).collect::<Result<_>>()?;
    let [nv, ns] = counts[..] else {
        return Err(Error::parse(n, "expected `<vertices> <simplices>`"));
    };
    let mut values = Vec::with_capacity(nv);
    let mut simplices = Vec::with_capacity(ns);
    for (n, line) in lines {
        if values.len() < nv {
            let c = parse_coords(line, n)?;
            let [x, y] = c[..] else {
                return Err(Error::parse(n, "expected `x y`"));
            };
            values.push(Point2::new(x, y));
        } else {
            simplices.push(parse_vertices(line, n)?);
        }
    }
    if values.len() != nv || simplices.len() != ns {
        return Err(Error::parse(
            0,
            format!("expected {nv} vertices and {ns} simplices, found {} and {}", values.len(), simplices.len()),
        ));
    }
    lower_star(simplices, &values)
}

/// Serializes in the bi-filtration format. Parsing the output gives back
/// the same filtration.
pub fn write_bifiltration(f: &BiFiltration) -> String {
    let mut out = format!("bifiltration\n{}\n", f.len());
    for (s, c) in f.entries() {
        let verts: Vec<String> = s.vertices().iter().map(u32::to_string).collect();
        let _ = write!(out, "{} ;", verts.join(" "));
        for p in c.points() {
            let _ = write!(out, " {} {}", p.x, p.y);
        }
        out.push('\n');
    }
    out
}

pub fn read_filtration(path: &Path) -> Result<BiFiltration> {
    parse_filtration(&fs::read_to_string(path)?)
}

pub fn write_filtration(path: &Path, f: &BiFiltration) -> Result<()> {
    fs::write(path, write_bifiltration(f))?;
    Ok(())
}

/// Regular files in `dir` with a `.txt` extension, sorted by name.
pub fn dataset_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|e| e == "txt"))
        .collect();
    files.sort();
    Ok(files)
}
