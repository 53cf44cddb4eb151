use serde::{Deserialize, Serialize};

use super::cert::{FlowCertificate, FlowKind};
use crate::designs::{Point, SteinerTripleSystem, Triple};
use crate::error::{Error, Result};
use crate::spectra::PointVector;

/// A nowhere-zero first eigenvector `v = W_Sᵀu` of the block graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FirstEigVector {
    pub u: Vec<i64>,
    pub v: Vec<i64>,
    pub norm: i64,
}

impl FirstEigVector {
    pub fn point_vector(&self) -> PointVector {
        PointVector::from_ints(&self.u)
    }

    pub fn certificate(&self, sts: &SteinerTripleSystem) -> Result<FlowCertificate> {
        FlowCertificate::new(sts, self.v.clone(), FlowKind::Firsteig)
    }
}

/// Explicit small-norm nowhere-zero first eigenvector, `n > 7`.
///
/// Norm 3 for `n ≡ 1 (mod 4)` and 4 for `n ≡ 3 (mod 4)`; the result is
/// verified exactly against the block graph.
pub fn first_eig_nzi(sts: &SteinerTripleSystem) -> Result<FirstEigVector> {
    let n = sts.order();
    if n <= 7 {
        return Err(Error::Precondition(format!("needs n > 7, got {n}")));
    }
    let u = if n % 4 == 1 { pencil_vector(sts) } else { auxiliary_cycle_vector(sts)? };
    let v: Vec<i64> = sts.blocks().iter().map(|t| t.0.iter().map(|&p| u[p as usize - 1]).sum()).collect();
    let norm = v.iter().map(|x| x.abs()).max().unwrap_or(0);
    let out = FirstEigVector { u, v, norm };
    out.certificate(sts)?;
    Ok(out)
}

/// `u = 0` at point 1, `+1` on the first half of its pencil, `−1` on the rest.
fn pencil_vector(sts: &SteinerTripleSystem) -> Vec<i64> {
    let n = sts.order() as usize;
    let mut u = vec![0i64; n];
    let pencil = sts.pencil(1);
    let half = pencil.len() / 2;
    for (i, &b) in pencil.iter().enumerate() {
        for p in sts.blocks()[b].0 {
            if p != 1 {
                u[p as usize - 1] = if i < half { 1 } else { -1 };
            }
        }
    }
    u
}

/// Labelled auxiliary graph on the points outside the block `{a,b,c}`:
/// `x ~ y` whenever `{x,y,b}` or `{x,y,c}` is a block. Returns, per point,
/// its neighbour along the `b` edge and along the `c` edge.
pub fn auxiliary_graph(sts: &SteinerTripleSystem, block: &Triple) -> Result<Vec<Option<(Point, Point)>>> {
    let [a, b, c] = block.0;
    let n = sts.order() as usize;
    let third = sts.third_point_table();
    let mut nb = vec![None; n + 1];
    for x in 1..=n as Point {
        if x == a || x == b || x == c {
            continue;
        }
        let (yb, yc) = (third[x as usize][b as usize], third[x as usize][c as usize]);
        if yb == 0 || yc == 0 || block.contains(yb) || block.contains(yc) {
            return Err(Error::Invariant(format!("point {x} has a malformed auxiliary neighbourhood")));
        }
        nb[x as usize] = Some((yb, yc));
    }
    Ok(nb)
}

/// Decomposes the auxiliary graph into cycles, each starting at its smallest
/// point and leaving along the `b` edge. Edge labels alternate, so every
/// cycle has even length at least 4.
pub fn auxiliary_cycles(nb: &[Option<(Point, Point)>]) -> Result<Vec<Vec<Point>>> {
    let mut seen = vec![false; nb.len()];
    let mut cycles = Vec::new();
    for start in 1..nb.len() {
        if nb[start].is_none() || seen[start] {
            continue;
        }
        let mut cycle = vec![start as Point];
        seen[start] = true;
        let mut cur = start;
        let mut use_b = true;
        loop {
            let (yb, yc) = nb[cur].expect("auxiliary vertex");
            let next = if use_b { yb } else { yc } as usize;
            use_b = !use_b;
            if next == start {
                break;
            }
            if seen[next] {
                return Err(Error::Invariant(format!("auxiliary walk from {start} revisits {next}")));
            }
            seen[next] = true;
            cycle.push(next as Point);
            cur = next;
        }
        if cycle.len() % 2 != 0 || cycle.len() < 4 {
            return Err(Error::Invariant(format!("auxiliary cycle of length {}", cycle.len())));
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

/// `u = (−1, 2, −3)` on the least block, `±1` around auxiliary cycles with
/// three consecutive `+1` on the cycle through the smallest remaining point.
fn auxiliary_cycle_vector(sts: &SteinerTripleSystem) -> Result<Vec<i64>> {
    let block = sts.blocks()[0];
    let [a, b, c] = block.0;
    let mut u = vec![0i64; sts.order() as usize];
    u[a as usize - 1] = -1;
    u[b as usize - 1] = 2;
    u[c as usize - 1] = -3;
    let cycles = auxiliary_cycles(&auxiliary_graph(sts, &block)?)?;
    for (ci, cycle) in cycles.iter().enumerate() {
        for (pos, &p) in cycle.iter().enumerate() {
            let val = if ci == 0 {
                if pos < 3 || pos % 2 == 0 {
                    1
                } else {
                    -1
                }
            } else if pos % 2 == 0 {
                1
            } else {
                -1
            };
            u[p as usize - 1] = val;
        }
    }
    Ok(u)
}
