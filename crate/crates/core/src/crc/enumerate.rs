use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::{check_crc, classify_code, Code, ConstructionTag, CrcReport};
use crate::designs::SteinerTripleSystem;
use crate::error::{Error, Result};
use crate::spectra::{block_graph, BlockGraph};

/// One equitable bipartition, represented by its side containing vertex 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionRecord {
    pub side: Code,
    pub report: CrcReport,
    pub tags: Vec<ConstructionTag>,
}

/// Outcome of [`enumerate_equitable_bipartitions`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enumeration {
    pub theta: i64,
    pub partitions: Vec<PartitionRecord>,
    /// False when the time budget ran out before the search finished.
    pub complete: bool,
    pub nodes: u64,
}

impl Enumeration {
    /// Both sides of every partition are codes.
    pub fn code_count(&self) -> usize {
        2 * self.partitions.len()
    }
}

/// All bipartitions `{C, V∖C}` of the block graph that are equitable with
/// non-principal quotient eigenvalue `theta`, each given once by its side
/// containing vertex 0.
///
/// In such a partition every vertex has exactly `γ_1 + θ·[x ∈ C]` neighbours
/// in `C`, where `γ_1 = |C|(k − θ)/|V|`. The search two-colours vertices
/// with unit propagation on these counts.
pub fn enumerate_equitable_bipartitions(
    sts: &SteinerTripleSystem,
    theta: i64,
    budget: Option<Duration>,
) -> Result<Enumeration> {
    let graph = block_graph(sts);
    let nv = graph.vertex_count();
    if nv > 64 {
        return Err(Error::Precondition(format!("enumeration is limited to 64 blocks, got {nv}")));
    }
    let k = graph.regular_degree().ok_or_else(|| Error::Invariant("block graph is not regular".into()))? as i64;
    let deadline = budget.map(|b| Instant::now() + b);
    let mut sides = Vec::new();
    let mut nodes = 0;
    let mut complete = true;
    for c in 1..nv as i64 {
        if (c * (k - theta)) % nv as i64 != 0 {
            continue;
        }
        let gamma1 = c * (k - theta) / nv as i64;
        let alpha0 = gamma1 + theta;
        if gamma1 < 1 || alpha0 < 0 || alpha0 > k - 1 || gamma1 > k {
            continue;
        }
        let mut st = Colouring::new(&graph, c as usize, gamma1, theta, deadline);
        let ok = st.assign(0, 1) && st.propagate();
        if ok {
            st.search(&mut sides);
        }
        nodes += st.nodes;
        if st.timed_out {
            complete = false;
            break;
        }
    }
    sides.sort();
    let mut partitions = Vec::with_capacity(sides.len());
    for side in sides {
        let code = Code::new(side, nv)?;
        let report = check_crc(&graph, &code)?;
        if report.eigenvalue() != Some(theta) {
            return Err(Error::Invariant(format!("enumerated code has report {report:?}")));
        }
        let tags = classify_code(sts, &code)?;
        partitions.push(PartitionRecord { side: code, report, tags });
    }
    Ok(Enumeration { theta, partitions, complete, nodes })
}

const UNKNOWN: i8 = -1;

struct Colouring<'a> {
    graph: &'a BlockGraph,
    size: usize,
    gamma1: i64,
    theta: i64,
    x: Vec<i8>,
    inside: Vec<i64>,
    open: Vec<i64>,
    n_in: usize,
    n_open: usize,
    trail: Vec<usize>,
    queue: Vec<usize>,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl<'a> Colouring<'a> {
    fn new(graph: &'a BlockGraph, size: usize, gamma1: i64, theta: i64, deadline: Option<Instant>) -> Self {
        let nv = graph.vertex_count();
        Colouring {
            graph,
            size,
            gamma1,
            theta,
            x: vec![UNKNOWN; nv],
            inside: vec![0; nv],
            open: (0..nv).map(|v| graph.degree(v) as i64).collect(),
            n_in: 0,
            n_open: nv,
            trail: Vec::new(),
            queue: Vec::new(),
            nodes: 0,
            deadline,
            timed_out: false,
        }
    }

    fn target(&self, colour: i8) -> i64 {
        self.gamma1 + if colour == 1 { self.theta } else { 0 }
    }

    fn fits(&self, v: usize, colour: i8) -> bool {
        let t = self.target(colour);
        self.inside[v] <= t && t <= self.inside[v] + self.open[v]
    }

    /// Colours `v`; returns false if `v` was already coloured differently.
    fn assign(&mut self, v: usize, colour: i8) -> bool {
        if self.x[v] != UNKNOWN {
            return self.x[v] == colour;
        }
        self.x[v] = colour;
        self.n_open -= 1;
        if colour == 1 {
            self.n_in += 1;
        }
        for &y in self.graph.neighbors(v) {
            self.open[y] -= 1;
            if colour == 1 {
                self.inside[y] += 1;
            }
            self.queue.push(y);
        }
        self.queue.push(v);
        self.trail.push(v);
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().expect("trail entry");
            let colour = self.x[v];
            self.x[v] = UNKNOWN;
            self.n_open += 1;
            if colour == 1 {
                self.n_in -= 1;
            }
            for &y in self.graph.neighbors(v) {
                self.open[y] += 1;
                if colour == 1 {
                    self.inside[y] -= 1;
                }
            }
        }
        self.queue.clear();
    }

    fn fill_open(&mut self, v: Option<usize>, colour: i8) -> bool {
        let targets: Vec<usize> = match v {
            Some(v) => self.graph.neighbors(v).iter().copied().filter(|&y| self.x[y] == UNKNOWN).collect(),
            None => (0..self.x.len()).filter(|&y| self.x[y] == UNKNOWN).collect(),
        };
        targets.into_iter().all(|y| self.assign(y, colour))
    }

    fn propagate(&mut self) -> bool {
        loop {
            if self.n_in > self.size || self.n_in + self.n_open < self.size {
                return false;
            }
            if self.n_open > 0 {
                if self.n_in == self.size {
                    if !self.fill_open(None, 0) {
                        return false;
                    }
                    continue;
                }
                if self.n_in + self.n_open == self.size {
                    if !self.fill_open(None, 1) {
                        return false;
                    }
                    continue;
                }
            }
            let Some(v) = self.queue.pop() else { return true };
            match self.x[v] {
                UNKNOWN => match (self.fits(v, 0), self.fits(v, 1)) {
                    (false, false) => return false,
                    (true, false) => {
                        self.assign(v, 0);
                    }
                    (false, true) => {
                        self.assign(v, 1);
                    }
                    (true, true) => {}
                },
                colour => {
                    let t = self.target(colour);
                    let (inside, open) = (self.inside[v], self.open[v]);
                    if inside > t || inside + open < t {
                        return false;
                    }
                    if open > 0 && inside == t && !self.fill_open(Some(v), 0) {
                        return false;
                    }
                    if open > 0 && inside + open == t && !self.fill_open(Some(v), 1) {
                        return false;
                    }
                }
            }
        }
    }

    fn search(&mut self, out: &mut Vec<Vec<usize>>) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    self.timed_out = true;
                }
            }
        }
        if self.timed_out {
            return;
        }
        // branch on the open vertex with the fewest open neighbours
        let Some(v) = (0..self.x.len()).filter(|&v| self.x[v] == UNKNOWN).min_by_key(|&v| self.open[v]) else {
            out.push((0..self.x.len()).filter(|&v| self.x[v] == 1).collect());
            return;
        };
        for colour in [1, 0] {
            let mark = self.trail.len();
            if self.assign(v, colour) && self.propagate() {
                self.search(out);
            }
            self.undo_to(mark);
            if self.timed_out {
                return;
            }
        }
    }
}
