use serde::{Deserialize, Serialize};

use super::{check_crc, is_one_design, Code, CrcReport};
use crate::designs::{find_parallel_class, find_subsystems, Point, SteinerTripleSystem};
use crate::error::{Error, Result};
use crate::spectra::{block_graph, block_graph_eigenvalues};

/// The five explicit families of completely regular codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ConstructionKind {
    /// All blocks through a point.
    C1,
    /// A subsystem of order `(n−1)/2`.
    C2,
    /// A point pencil together with a half-order subsystem avoiding the point.
    C3,
    /// A 1-subdesign.
    C4,
    /// A subsystem of order below `(n−1)/2`.
    C5,
}

impl ConstructionKind {
    pub fn from_index(k: u8) -> Result<Self> {
        Ok(match k {
            1 => Self::C1,
            2 => Self::C2,
            3 => Self::C3,
            4 => Self::C4,
            5 => Self::C5,
            _ => return Err(Error::Precondition(format!("construction {k} not in 1..=5"))),
        })
    }
}

/// A construction matched by a code or by its complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ConstructionTag {
    pub kind: ConstructionKind,
    pub complement: bool,
}

/// A code built by one of the constructions, with its verified report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constructed {
    pub kind: ConstructionKind,
    pub code: Code,
    pub report: CrcReport,
}

/// Blocks lying inside `points`.
fn blocks_within(sts: &SteinerTripleSystem, points: &[Point]) -> Vec<usize> {
    let mut inside = vec![false; sts.order() as usize + 1];
    for &p in points {
        inside[p as usize] = true;
    }
    (0..sts.block_count()).filter(|&b| sts.blocks()[b].0.iter().all(|&p| inside[p as usize])).collect()
}

fn points_of(sts: &SteinerTripleSystem, code: &[usize]) -> Vec<Point> {
    let mut pts: Vec<Point> = code.iter().flat_map(|&b| sts.blocks()[b].0).collect();
    pts.sort_unstable();
    pts.dedup();
    pts
}

/// Order of the subsystem formed by `code`, if the blocks form one.
pub fn is_subsystem(sts: &SteinerTripleSystem, code: &[usize]) -> Option<u32> {
    let pts = points_of(sts, code);
    let m = pts.len();
    if m < 3 || code.len() != m * (m - 1) / 6 {
        return None;
    }
    let mut within = blocks_within(sts, &pts);
    within.sort_unstable();
    let mut c = code.to_vec();
    c.sort_unstable();
    // pairs inside the point set are each covered once by S, so the
    // induced blocks form a subsystem exactly when they number m(m−1)/6
    (within == c).then_some(m as u32)
}

fn half_order(sts: &SteinerTripleSystem) -> u32 {
    (sts.order() - 1) / 2
}

/// A 1-subdesign in which every point lies in exactly `lambda` blocks.
pub fn find_one_subdesign(sts: &SteinerTripleSystem, lambda: usize) -> Option<Vec<usize>> {
    let n = sts.order() as usize;
    if lambda == 0 || lambda >= sts.replication() || !(n * lambda).is_multiple_of(3) {
        return None;
    }
    if lambda == 1 {
        return find_parallel_class(sts);
    }
    let pb = sts.point_blocks();
    let mut state = SubdesignSearch {
        blocks: sts.blocks().iter().map(|t| t.0.map(|p| p as usize)).collect(),
        pb,
        deg: vec![0; n + 1],
        banned: vec![false; sts.block_count()],
        chosen: Vec::new(),
        lambda,
    };
    state.rec().then(|| {
        let mut c = state.chosen.clone();
        c.sort_unstable();
        c
    })
}

struct SubdesignSearch {
    blocks: Vec<[usize; 3]>,
    pb: Vec<Vec<usize>>,
    deg: Vec<usize>,
    banned: Vec<bool>,
    chosen: Vec<usize>,
    lambda: usize,
}

impl SubdesignSearch {
    fn usable(&self, b: usize) -> bool {
        !self.banned[b] && self.blocks[b].iter().all(|&p| self.deg[p] < self.lambda)
    }

    fn rec(&mut self) -> bool {
        let Some(p) = (1..self.deg.len()).find(|&p| self.deg[p] < self.lambda) else {
            return true;
        };
        let options: Vec<usize> = self.pb[p].iter().copied().filter(|&b| self.usable(b)).collect();
        if options.len() < self.lambda - self.deg[p] {
            return false;
        }
        let mut banned_here = Vec::new();
        let mut found = false;
        for b in options {
            if !self.usable(b) {
                continue;
            }
            for q in self.blocks[b] {
                self.deg[q] += 1;
            }
            self.chosen.push(b);
            self.banned[b] = true;
            if self.rec() {
                found = true;
                break;
            }
            self.chosen.pop();
            for q in self.blocks[b] {
                self.deg[q] -= 1;
            }
            banned_here.push(b);
        }
        if !found {
            for b in banned_here {
                self.banned[b] = false;
            }
        }
        found
    }
}

/// Builds and verifies a code of the given kind.
///
/// `point` selects the pencil for `C1` and `C3`; `param` is `λ` for `C4`
/// (default 1 when `n ≡ 3 (mod 6)`, else 3) and the subsystem order for `C5`
/// (default 3).
pub fn construction(
    sts: &SteinerTripleSystem,
    kind: ConstructionKind,
    point: Option<Point>,
    param: Option<u32>,
) -> Result<Constructed> {
    let n = sts.order();
    let need_point = || -> Result<Point> {
        let p = point.unwrap_or(1);
        if p == 0 || p > n {
            return Err(Error::Precondition(format!("point {p} not in 1..={n}")));
        }
        Ok(p)
    };
    let absent = |what: String| Error::SubstructureAbsent(what);
    let members = match kind {
        ConstructionKind::C1 => sts.pencil(need_point()?),
        ConstructionKind::C2 => {
            let subs = find_subsystems(sts, half_order(sts));
            let pts = subs.first().ok_or_else(|| absent(format!("no subsystem of order {}", half_order(sts))))?;
            blocks_within(sts, pts)
        }
        ConstructionKind::C3 => {
            let p = need_point()?;
            let subs = find_subsystems(sts, half_order(sts));
            let pts = subs
                .iter()
                .find(|s| !s.contains(&p))
                .ok_or_else(|| absent(format!("no subsystem of order {} avoiding point {p}", half_order(sts))))?;
            let mut m = sts.pencil(p);
            m.extend(blocks_within(sts, pts));
            m
        }
        ConstructionKind::C4 => {
            let lambda = param.map(|x| x as usize).unwrap_or(if n % 6 == 3 { 1 } else { 3 });
            find_one_subdesign(sts, lambda).ok_or_else(|| absent(format!("no 1-subdesign with lambda {lambda}")))?
        }
        ConstructionKind::C5 => {
            let m = param.unwrap_or(3);
            if m >= half_order(sts) {
                return Err(Error::Precondition(format!("construction 5 needs order below {}", half_order(sts))));
            }
            let subs = find_subsystems(sts, m);
            let pts = subs.first().ok_or_else(|| absent(format!("no subsystem of order {m}")))?;
            blocks_within(sts, pts)
        }
    };
    let code = Code::new(members, sts.block_count())?;
    let report = check_crc(&block_graph(sts), &code)?;
    let spectrum = block_graph_eigenvalues(n)?;
    let ok = match kind {
        ConstructionKind::C1 | ConstructionKind::C2 | ConstructionKind::C3 => {
            report.eigenvalue() == Some(spectrum.theta1)
        }
        ConstructionKind::C4 => report.eigenvalue() == Some(spectrum.theta2),
        ConstructionKind::C5 => report.rho == 2,
    };
    if !ok {
        return Err(Error::Invariant(format!(
            "{kind:?} code has covering radius {} and eigenvalues {:?}",
            report.rho, report.eigenvalues
        )));
    }
    Ok(Constructed { kind, code, report })
}

fn direct_kinds(sts: &SteinerTripleSystem, code: &[usize]) -> Vec<ConstructionKind> {
    let n = sts.order();
    let half = half_order(sts);
    let mut kinds = Vec::new();
    let pencil_point = (1..=n).find(|&p| sts.pencil(p) == code);
    if pencil_point.is_some() {
        kinds.push(ConstructionKind::C1);
    }
    match is_subsystem(sts, code) {
        Some(m) if m == half => kinds.push(ConstructionKind::C2),
        Some(m) if m < half => kinds.push(ConstructionKind::C5),
        _ => {}
    }
    // pencil of p plus the blocks inside a half-order point set avoiding p
    for p in 1..=n {
        let pencil = sts.pencil(p);
        if pencil.len() >= code.len() || !pencil.iter().all(|b| code.binary_search(b).is_ok()) {
            continue;
        }
        let rest: Vec<usize> = code.iter().copied().filter(|b| pencil.binary_search(b).is_err()).collect();
        if is_subsystem(sts, &rest) == Some(half) && !points_of(sts, &rest).contains(&p) {
            kinds.push(ConstructionKind::C3);
            break;
        }
    }
    if is_one_design(sts, code).is_some() {
        kinds.push(ConstructionKind::C4);
    }
    kinds
}

/// Constructions matched by `code` (sorted block indices) or its complement.
pub fn classify_code(sts: &SteinerTripleSystem, code: &Code) -> Result<Vec<ConstructionTag>> {
    let comp = code.complement(sts.block_count())?;
    let mut tags: Vec<ConstructionTag> =
        direct_kinds(sts, code.members()).into_iter().map(|kind| ConstructionTag { kind, complement: false }).collect();
    tags.extend(direct_kinds(sts, comp.members()).into_iter().map(|kind| ConstructionTag { kind, complement: true }));
    Ok(tags)
}
