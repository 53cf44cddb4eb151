//! Plain-text STS format: a header line `n b`, then `b` lines with three
//! ascending point labels each, triples in lexicographic order. Blank lines
//! and `#` comments are ignored on input.

use std::fmt::Write as _;
use std::path::Path;

use super::{validate_sts, Point, SteinerTripleSystem};
use crate::error::{Error, Result};

pub fn format_sts(sts: &SteinerTripleSystem) -> String {
    let mut out = format!("{} {}\n", sts.order(), sts.block_count());
    for t in sts.blocks() {
        let [a, b, c] = t.0;
        let _ = writeln!(out, "{a} {b} {c}");
    }
    out
}

pub fn parse_sts(text: &str) -> Result<SteinerTripleSystem> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(Error::Parse { line: 0, msg: "empty file".into() })?;
    let nums = parse_ints(header, hline)?;
    let [n, b] = nums[..] else {
        return Err(Error::Parse { line: hline, msg: format!("header must be `n b`, got {header:?}") });
    };
    let mut triples: Vec<[Point; 3]> = Vec::with_capacity(b as usize);
    for (lno, line) in lines {
        let v = parse_ints(line, lno)?;
        let [x, y, z] = v[..] else {
            return Err(Error::Parse { line: lno, msg: format!("expected three labels, got {line:?}") });
        };
        if [x, y, z].iter().any(|&p| p == 0 || p > n) {
            return Err(Error::Parse { line: lno, msg: format!("triple out of range 1..{n}") });
        }
        triples.push([x, y, z]);
    }
    if triples.len() != b as usize {
        return Err(Error::Parse {
            line: hline,
            msg: format!("header announces {b} triples but file has {}", triples.len()),
        });
    }
    validate_sts(n, &triples)
}

fn parse_ints(line: &str, lno: usize) -> Result<Vec<u32>> {
    line.split_whitespace()
        .map(|tok| tok.parse::<u32>().map_err(|_| Error::Parse { line: lno, msg: format!("bad integer {tok:?}") }))
        .collect()
}

pub fn read_sts(path: impl AsRef<Path>) -> Result<SteinerTripleSystem> {
    parse_sts(&std::fs::read_to_string(path)?)
}

pub fn write_sts(sts: &SteinerTripleSystem, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, format_sts(sts))?;
    Ok(())
}
