//! Steiner triple systems: the core type, validation, constructions and I/O.
//!
//! Points are always labelled `1..=n` and blocks are kept sorted
//! lexicographically, each triple sorted ascending. Every constructor returns
//! systems in this canonical form, so block indices are reproducible.

mod construct;
mod gf2;
mod io;
mod resolution;
mod subsystems;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use construct::{am_quadruple, assmuss_mattson, bose, hamming_sts};
pub use gf2::{binary_rank, BitRow};
pub use io::{format_sts, parse_sts, read_sts, write_sts};
pub use resolution::{find_parallel_class, find_resolution};
pub use subsystems::{find_subsystems, is_admissible_order};

pub type Point = u32;

/// A 3-subset of points, stored ascending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triple(pub [Point; 3]);

impl Triple {
    pub fn new(a: Point, b: Point, c: Point) -> Self {
        let mut t = [a, b, c];
        t.sort_unstable();
        Triple(t)
    }

    pub fn points(&self) -> [Point; 3] {
        self.0
    }

    pub fn contains(&self, p: Point) -> bool {
        self.0.contains(&p)
    }

    pub fn meets(&self, other: &Triple) -> bool {
        self.0.iter().any(|p| other.contains(*p))
    }

    pub fn is_distinct(&self) -> bool {
        self.0[0] != self.0[1] && self.0[1] != self.0[2]
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.0[0], self.0[1], self.0[2])
    }
}

/// Everything wrong with a candidate triple list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub n: u32,
    pub bad_order: bool,
    pub block_count: Option<(usize, usize)>,
    pub out_of_range: Vec<[Point; 3]>,
    pub degenerate: Vec<[Point; 3]>,
    pub duplicates: Vec<Triple>,
    pub uncovered: Vec<(Point, Point)>,
    pub multiply_covered: Vec<((Point, Point), usize)>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        !self.bad_order
            && self.block_count.is_none()
            && self.out_of_range.is_empty()
            && self.degenerate.is_empty()
            && self.duplicates.is_empty()
            && self.uncovered.is_empty()
            && self.multiply_covered.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.bad_order {
            parts.push(format!("order {} is not 1 or 3 mod 6", self.n));
        }
        if let Some((want, got)) = self.block_count {
            parts.push(format!("wrong block count: expected {want}, got {got}"));
        }
        for t in &self.out_of_range {
            parts.push(format!("triple {t:?} has a point outside 1..{}", self.n));
        }
        for t in &self.degenerate {
            parts.push(format!("triple {t:?} repeats a point"));
        }
        for t in &self.duplicates {
            parts.push(format!("duplicate triple {t}"));
        }
        for (a, b) in &self.uncovered {
            parts.push(format!("pair {{{a},{b}}} uncovered"));
        }
        for ((a, b), c) in &self.multiply_covered {
            let times = if *c == 2 { "twice".to_string() } else { format!("{c} times") };
            parts.push(format!("pair {{{a},{b}}} covered {times}"));
        }
        write!(f, "{}", parts.join("; "))
    }
}

/// A Steiner triple system on points `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SteinerTripleSystem {
    n: u32,
    blocks: Vec<Triple>,
}

/// Checks every STS invariant and returns the system in canonical block order.
pub fn validate_sts(n: u32, triples: &[[Point; 3]]) -> Result<SteinerTripleSystem> {
    let mut report = ValidationReport { n, ..Default::default() };
    if n == 0 || !matches!(n % 6, 1 | 3) {
        report.bad_order = true;
    }
    let expected = (n as usize) * (n as usize).saturating_sub(1) / 6;
    if triples.len() != expected {
        report.block_count = Some((expected, triples.len()));
    }
    let mut blocks = Vec::with_capacity(triples.len());
    for t in triples {
        if t.iter().any(|&p| p == 0 || p > n) {
            report.out_of_range.push(*t);
            continue;
        }
        let tr = Triple::new(t[0], t[1], t[2]);
        if !tr.is_distinct() {
            report.degenerate.push(*t);
            continue;
        }
        blocks.push(tr);
    }
    blocks.sort_unstable();
    for w in blocks.windows(2) {
        if w[0] == w[1] && report.duplicates.last() != Some(&w[0]) {
            report.duplicates.push(w[0]);
        }
    }
    let nn = n as usize;
    let mut cover = vec![0usize; (nn + 1) * (nn + 1)];
    for t in &blocks {
        let [a, b, c] = t.0;
        for (x, y) in [(a, b), (a, c), (b, c)] {
            cover[x as usize * (nn + 1) + y as usize] += 1;
        }
    }
    for a in 1..=n {
        for b in a + 1..=n {
            match cover[a as usize * (nn + 1) + b as usize] {
                1 => {}
                0 => report.uncovered.push((a, b)),
                c => report.multiply_covered.push(((a, b), c)),
            }
        }
    }
    if report.is_ok() {
        Ok(SteinerTripleSystem { n, blocks })
    } else {
        Err(Error::Validation(Box::new(report)))
    }
}

impl SteinerTripleSystem {
    pub fn new(n: u32, triples: &[[Point; 3]]) -> Result<Self> {
        validate_sts(n, triples)
    }

    pub fn from_triples(n: u32, triples: &[Triple]) -> Result<Self> {
        let raw: Vec<[Point; 3]> = triples.iter().map(|t| t.0).collect();
        validate_sts(n, &raw)
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn blocks(&self) -> &[Triple] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn replication(&self) -> usize {
        (self.n as usize - 1) / 2
    }

    /// Indices of the blocks through `p`, ascending.
    pub fn pencil(&self, p: Point) -> Vec<usize> {
        (0..self.blocks.len()).filter(|&i| self.blocks[i].contains(p)).collect()
    }

    /// For every point, the indices of the blocks containing it (index 0 unused).
    pub fn point_blocks(&self) -> Vec<Vec<usize>> {
        let mut pb = vec![Vec::with_capacity(self.replication()); self.n as usize + 1];
        for (i, t) in self.blocks.iter().enumerate() {
            for p in t.0 {
                pb[p as usize].push(i);
            }
        }
        pb
    }

    /// `third[a][b]` is the third point of the block through `a` and `b`.
    pub fn third_point_table(&self) -> Vec<Vec<Point>> {
        let n = self.n as usize;
        let mut third = vec![vec![0; n + 1]; n + 1];
        for t in &self.blocks {
            let [a, b, c] = t.0;
            for (x, y, z) in [(a, b, c), (a, c, b), (b, c, a)] {
                third[x as usize][y as usize] = z;
                third[y as usize][x as usize] = z;
            }
        }
        third
    }

    pub fn index_map(&self) -> HashMap<Triple, usize> {
        self.blocks.iter().enumerate().map(|(i, t)| (*t, i)).collect()
    }

    pub fn index_of(&self, t: &Triple) -> Option<usize> {
        self.blocks.binary_search(t).ok()
    }

    /// Applies a point permutation given as `perm[old] = new` (index 0 unused).
    pub fn relabel(&self, perm: &[Point]) -> Result<Self> {
        if perm.len() != self.n as usize + 1 {
            return Err(Error::Dimension { expected: self.n as usize + 1, actual: perm.len() });
        }
        let triples: Vec<[Point; 3]> = self.blocks.iter().map(|t| t.0.map(|p| perm[p as usize])).collect();
        validate_sts(self.n, &triples)
    }

    /// Point sets of the system as a list of raw triples.
    pub fn raw_blocks(&self) -> Vec<[Point; 3]> {
        self.blocks.iter().map(|t| t.0).collect()
    }
}

/// The two-coloring `τ` of base blocks used by the Assmus–Mattson doubling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauAssignment(pub Vec<bool>);

impl TauAssignment {
    pub fn constant(block_count: usize, value: bool) -> Self {
        TauAssignment(vec![value; block_count])
    }

    /// Seeded random assignment (ChaCha8, so stable across platforms).
    pub fn seeded(block_count: usize, seed: u64) -> Self {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        TauAssignment((0..block_count).map(|_| rng.gen::<bool>()).collect())
    }

    /// Parses `zero`, `one` or `seed:N`.
    pub fn parse(spec: &str, block_count: usize) -> Result<Self> {
        match spec {
            "zero" | "0" => Ok(Self::constant(block_count, false)),
            "one" | "1" => Ok(Self::constant(block_count, true)),
            s => {
                let seed = s
                    .strip_prefix("seed:")
                    .and_then(|x| x.parse::<u64>().ok())
                    .ok_or_else(|| Error::Precondition(format!("bad tau spec {s:?}")))?;
                Ok(Self::seeded(block_count, seed))
            }
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, block: usize) -> bool {
        self.0[block]
    }
}

/// A partition of the blocks into parallel classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Resolution {
    pub classes: Vec<Vec<usize>>,
}

impl Resolution {
    /// Checks that every class is a parallel class and the classes partition the blocks.
    pub fn check(&self, sts: &SteinerTripleSystem) -> Result<()> {
        let n = sts.order() as usize;
        if !n.is_multiple_of(3) {
            return Err(Error::Precondition(format!("order {n} is not divisible by 3")));
        }
        let mut seen = vec![false; sts.block_count()];
        for (c, class) in self.classes.iter().enumerate() {
            if class.len() != n / 3 {
                return Err(Error::Invariant(format!("class {c} has {} blocks", class.len())));
            }
            let mut pts = vec![false; n + 1];
            for &b in class {
                if b >= seen.len() || seen[b] {
                    return Err(Error::Invariant(format!("block {b} used twice or out of range")));
                }
                seen[b] = true;
                for p in sts.blocks()[b].0 {
                    if pts[p as usize] {
                        return Err(Error::Invariant(format!("class {c} is not parallel at point {p}")));
                    }
                    pts[p as usize] = true;
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Invariant("classes do not cover every block".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn fano_raw() -> Vec<[Point; 3]> {
        vec![[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 5, 6]]
    }

    #[test]
    fn fano_is_valid() {
        let s = validate_sts(7, &fano_raw()).unwrap();
        assert_eq!(s.block_count(), 7);
        assert_eq!(s.replication(), 3);
    }

    #[test]
    fn repeated_triple_is_reported() {
        let mut raw = fano_raw();
        raw.push([1, 2, 3]);
        let Err(Error::Validation(rep)) = validate_sts(7, &raw) else { panic!() };
        assert_eq!(rep.duplicates, vec![Triple::new(1, 2, 3)]);
        assert_eq!(rep.block_count, Some((7, 8)));
        assert!(rep.to_string().contains("pair {1,2} covered twice"));
    }

    #[test]
    fn affine_plane_of_order_three() {
        // AG(2,3): points (x,y) -> 3x+y+1, lines by brute force over directions.
        let mut lines = Vec::new();
        let pt = |x: u32, y: u32| 3 * (x % 3) + (y % 3) + 1;
        for (dx, dy) in [(0, 1), (1, 0), (1, 1), (1, 2)] {
            let mut seen = std::collections::BTreeSet::new();
            for x in 0..3 {
                for y in 0..3 {
                    let t = Triple::new(pt(x, y), pt(x + dx, y + dy), pt(x + 2 * dx, y + 2 * dy));
                    seen.insert(t);
                }
            }
            lines.extend(seen);
        }
        assert_eq!(lines.len(), 12);
        let s = SteinerTripleSystem::from_triples(9, &lines).unwrap();
        assert_eq!(s.block_count(), 12);
    }

    #[test]
    fn bad_order_and_range() {
        let Err(Error::Validation(rep)) = validate_sts(8, &[[1, 2, 9]]) else { panic!() };
        assert!(rep.bad_order);
        assert_eq!(rep.out_of_range.len(), 1);
    }

    #[test]
    fn tau_specs() {
        assert!(TauAssignment::parse("zero", 3).unwrap().0.iter().all(|t| !t));
        assert!(TauAssignment::parse("one", 3).unwrap().0.iter().all(|t| *t));
        assert_eq!(TauAssignment::parse("seed:7", 50).unwrap(), TauAssignment::parse("seed:7", 50).unwrap());
        assert!(TauAssignment::parse("seed:x", 3).is_err());
    }
}
