use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::cert::{FlowCertificate, FlowKind};
use crate::designs::{am_quadruple, assmuss_mattson, Point, SteinerTripleSystem, TauAssignment, Triple};
use crate::error::{Error, Result};
use crate::maxflow::FlowNetwork;

/// A base block with a distinguished point, a `τ` bit and a scale factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GBlock {
    pub triple: Triple,
    pub anchor: Point,
    pub tau: bool,
    pub scale: i64,
}

/// The four values on the doubled blocks of `gb.triple`: `+scale` on the two
/// blocks containing the anchor itself, `−scale` on the two containing its
/// copy. Point sums are `2·scale` at the anchor, `−2·scale` at its copy and
/// 0 at the other four points.
pub fn g_values(gb: &GBlock, n: Point) -> Result<[(Triple, i64); 4]> {
    if !gb.triple.is_distinct() || gb.triple.0.iter().any(|&p| p == 0 || p > n) {
        return Err(Error::Precondition(format!("bad base triple {}", gb.triple)));
    }
    if !gb.triple.contains(gb.anchor) {
        return Err(Error::Precondition(format!("anchor {} not in {}", gb.anchor, gb.triple)));
    }
    let quad = am_quadruple(&gb.triple, gb.tau, n);
    Ok(quad.map(|t| (t, if t.contains(gb.anchor) { gb.scale } else { -gb.scale })))
}

/// Point sums of [`g_values`], keyed by point of the doubled system.
pub fn g_point_sums(gb: &GBlock, n: Point) -> Result<BTreeMap<Point, i64>> {
    let mut sums = BTreeMap::new();
    for (t, x) in g_values(gb, n)? {
        for p in t.0 {
            *sums.entry(p).or_insert(0) += x;
        }
    }
    Ok(sums)
}

/// Assignment of each block to one of its points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringFunction {
    pub h: Vec<Point>,
}

impl CoveringFunction {
    /// Number of blocks assigned to each point (index 0 unused).
    pub fn loads(&self, n: Point) -> Vec<usize> {
        let mut c = vec![0; n as usize + 1];
        for &p in &self.h {
            c[p as usize] += 1;
        }
        c
    }

    pub fn check(&self, sts: &SteinerTripleSystem, floor: usize) -> Result<()> {
        if self.h.len() != sts.block_count() {
            return Err(Error::Dimension { expected: sts.block_count(), actual: self.h.len() });
        }
        for (t, &p) in sts.blocks().iter().zip(&self.h) {
            if !t.contains(p) {
                return Err(Error::Invariant(format!("h maps {t} to {p}")));
            }
        }
        let loads = self.loads(sts.order());
        if let Some(p) = (1..loads.len()).find(|&p| loads[p] < floor) {
            return Err(Error::SmallCoveringClass { point: p as Point, size: loads[p] });
        }
        Ok(())
    }
}

/// Least load every point must receive.
pub const COVERING_FLOOR: usize = 4;

/// Decides by max-flow whether blocks can be assigned to their points with
/// every point receiving at least four blocks. `None` proves infeasibility.
pub fn find_h(sts: &SteinerTripleSystem) -> Option<CoveringFunction> {
    let b = sts.block_count();
    let n = sts.order() as usize;
    if b < COVERING_FLOOR * n {
        return None;
    }
    let (src, sink) = (0, b + n + 1);
    let mut g = FlowNetwork::new(b + n + 2);
    let mut arcs = Vec::with_capacity(3 * b);
    for (i, t) in sts.blocks().iter().enumerate() {
        g.add_edge(src, 1 + i, 1);
        for p in t.0 {
            arcs.push((i, p, g.add_edge(1 + i, b + p as usize, 1)));
        }
    }
    for p in 1..=n {
        g.add_edge(b + p, sink, COVERING_FLOOR as i64);
    }
    if g.max_flow(src, sink) < (COVERING_FLOOR * n) as i64 {
        return None;
    }
    let mut h: Vec<Point> = sts.blocks().iter().map(|t| t.0[0]).collect();
    for (i, p, e) in arcs {
        if g.flow(e) > 0 {
            h[i] = p;
        }
    }
    Some(CoveringFunction { h })
}

/// Weights on the pencil of point 1 and on `T0 = {2,4,6}` for a system whose
/// pencil is `{1,2i,2i+1}`. Entry `i−1` is the weight of `{1,2i,2i+1}`;
/// `T0` always gets `−2`.
pub fn am_w_values(n: Point) -> Result<Vec<i64>> {
    if n < 9 || !matches!(n % 6, 1 | 3) {
        return Err(Error::Precondition(format!("pencil weights need an admissible n >= 9, got {n}")));
    }
    let m = (n - 1) / 2;
    Ok((1..=m)
        .map(|i| {
            if m.is_multiple_of(2) {
                if i <= (n - 1) / 4 + 1 {
                    1
                } else {
                    -1
                }
            } else if i <= (n - 3) / 4 {
                1
            } else if i < m {
                -1
            } else {
                2
            }
        })
        .collect())
}

/// Weight of `T0`.
pub const T0_WEIGHT: i64 = -2;

/// [`am_w_values`] keyed by block, for a normalized system.
pub fn am_w(sts: &SteinerTripleSystem, t0: &Triple) -> Result<BTreeMap<Triple, i64>> {
    if t0.contains(1) {
        return Err(Error::Precondition(format!("T0 = {t0} contains point 1")));
    }
    if *t0 != Triple::new(2, 4, 6) {
        return Err(Error::Precondition(format!("T0 must be {{2,4,6}} after relabelling, got {t0}")));
    }
    let n = sts.order();
    let w = am_w_values(n)?;
    let mut out = BTreeMap::new();
    for (i, &x) in (1..=(n - 1) / 2).zip(&w) {
        let t = Triple::new(1, 2 * i, 2 * i + 1);
        if sts.index_of(&t).is_none() {
            return Err(Error::Precondition(format!("pencil of 1 is not normalized: {t} missing")));
        }
        out.insert(t, x);
    }
    if sts.index_of(t0).is_none() {
        return Err(Error::Precondition(format!("{t0} is not a block")));
    }
    out.insert(*t0, T0_WEIGHT);
    Ok(out)
}

/// Relabelling `perm[old] = new` that fixes 1, sends the least block avoiding
/// 1 to `{2,4,6}` and the pencil of 1 to `{1,2i,2i+1}`.
pub fn am_normalizing_perm(sts: &SteinerTripleSystem) -> Result<Vec<Point>> {
    let n = sts.order();
    if n < 9 {
        return Err(Error::Precondition(format!("needs n >= 9, got {n}")));
    }
    let t0 = *sts
        .blocks()
        .iter()
        .find(|t| !t.contains(1))
        .ok_or_else(|| Error::Precondition("every block contains point 1".into()))?;
    let third = sts.third_point_table();
    let mut perm = vec![0; n as usize + 1];
    perm[1] = 1;
    let mut next = 2;
    for p in t0.0 {
        let q = third[1][p as usize];
        if perm[p as usize] != 0 || perm[q as usize] != 0 {
            return Err(Error::Invariant(format!("two points of {t0} share a block with 1")));
        }
        perm[p as usize] = next;
        perm[q as usize] = next + 1;
        next += 2;
    }
    for &bi in &sts.pencil(1) {
        let [_, x, y] = sts.blocks()[bi].0;
        if perm[x as usize] == 0 {
            perm[x as usize] = next;
            perm[y as usize] = next + 1;
            next += 2;
        }
    }
    Ok(perm)
}

/// Quantities checked along the way.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmDiagnostics {
    /// `perm[old] = new` applied to the base before the construction.
    pub perm: Vec<Point>,
    pub t0: Triple,
    pub w_sum: i64,
    /// `α_i` for `i = 1..n` in normalized labels.
    pub alphas: Vec<i64>,
    pub alpha_sum: i64,
    /// `|M_j|` for `j = 2..n` in normalized labels.
    pub m_sizes: Vec<usize>,
}

/// A verified flow with its diagnostics.
#[derive(Clone, Debug)]
pub struct AmFlow {
    pub certificate: FlowCertificate,
    pub diagnostics: AmDiagnostics,
}

fn invariant(msg: String) -> Error {
    Error::Invariant(msg)
}

/// Zero-sum 5-flow on `assmuss_mattson(base, tau)`.
///
/// Works whenever a covering function exists for the base; this is
/// guaranteed for base order at least 49.
pub fn am_five_flow(base: &SteinerTripleSystem, tau: &TauAssignment) -> Result<AmFlow> {
    let n = base.order();
    if tau.len() != base.block_count() {
        return Err(Error::Dimension { expected: base.block_count(), actual: tau.len() });
    }
    let perm = am_normalizing_perm(base)?;
    let mut inv = vec![0; perm.len()];
    for (old, &new) in perm.iter().enumerate().skip(1) {
        inv[new as usize] = old as Point;
    }
    let s = base.relabel(&perm)?;
    let s_tau: Vec<bool> = s
        .blocks()
        .iter()
        .map(|t| {
            let orig = Triple::new(inv[t.0[0] as usize], inv[t.0[1] as usize], inv[t.0[2] as usize]);
            tau.get(base.index_of(&orig).expect("relabelled block exists"))
        })
        .collect();
    let s_tau = TauAssignment(s_tau);
    let doubled = assmuss_mattson(&s, &s_tau)?;
    let nn = n as usize;
    let mut v = vec![0i64; doubled.block_count()];
    let set = |v: &mut Vec<i64>, t: &Triple, x: i64| -> Result<()> {
        let i = doubled.index_of(t).ok_or_else(|| invariant(format!("{t} missing from doubled system")))?;
        if v[i] != 0 {
            return Err(invariant(format!("{t} assigned twice")));
        }
        v[i] = x;
        Ok(())
    };

    let t0 = Triple::new(2, 4, 6);
    let w = am_w(&s, &t0)?;
    let w_sum: i64 = w.values().sum();
    if w_sum != 0 {
        return Err(invariant(format!("w sums to {w_sum}")));
    }
    for (t, &x) in &w {
        let bi = s.index_of(t).expect("weighted block exists");
        for q in am_quadruple(t, s_tau.get(bi), n) {
            set(&mut v, &q, x)?;
        }
    }
    let mut alphas = vec![0i64; 2 * nn + 1];
    for (t, x) in doubled.blocks().iter().zip(&v) {
        for p in t.0 {
            alphas[p as usize - 1] += x;
        }
    }
    for i in 0..nn {
        if alphas[i] != alphas[i + nn] {
            return Err(invariant(format!("alpha differs at {} and its copy", i + 1)));
        }
        if ![-4, -2, 2, 4].contains(&alphas[i]) {
            return Err(invariant(format!("alpha_{} = {}", i + 1, alphas[i])));
        }
    }
    let alphas: Vec<i64> = alphas[..nn].to_vec();
    let alpha_sum: i64 = alphas.iter().sum();
    if alpha_sum != 0 {
        return Err(invariant(format!("alphas sum to {alpha_sum}")));
    }

    let h = find_h(&s).ok_or(Error::CoveringInfeasible { floor: COVERING_FLOOR })?;
    let mut m: Vec<Vec<usize>> = vec![Vec::new(); nn + 1];
    for (i, t) in s.blocks().iter().enumerate() {
        if !t.contains(1) && *t != t0 {
            m[h.h[i] as usize].push(i);
        }
    }
    let mut rest_sums = vec![0i64; 2 * nn + 1];
    let mut m_sizes = Vec::with_capacity(nn - 1);
    for j in 2..=n {
        let mj = &m[j as usize];
        m_sizes.push(mj.len());
        if mj.len() < 2 {
            return Err(Error::SmallCoveringClass { point: j, size: mj.len() });
        }
        let size = mj.len();
        let (plus, minus) =
            if size.is_multiple_of(2) { (size / 2, size / 2) } else { (size.div_ceil(2), (size - 3) / 2) };
        for (pos, &bi) in mj.iter().enumerate() {
            let scale = if pos < plus {
                1
            } else if pos < plus + minus {
                -1
            } else {
                -2
            };
            let gb = GBlock { triple: s.blocks()[bi], anchor: j, tau: s_tau.get(bi), scale };
            for (t, x) in g_values(&gb, n)? {
                set(&mut v, &t, x)?;
                for p in t.0 {
                    rest_sums[p as usize - 1] += x;
                }
            }
        }
    }
    if let Some(p) = rest_sums.iter().position(|&x| x != 0) {
        return Err(invariant(format!("g-block sums do not cancel at point {}", p + 1)));
    }
    for i in 1..=n {
        set(&mut v, &Triple::new(i, i + n, 2 * n + 1), -alphas[i as usize - 1])?;
    }

    // back to the original labels
    let orig_doubled = assmuss_mattson(base, tau)?;
    let map = |p: Point| -> Point {
        if p <= n {
            inv[p as usize]
        } else if p <= 2 * n {
            inv[(p - n) as usize] + n
        } else {
            p
        }
    };
    let mut out = vec![0i64; v.len()];
    for (t, &x) in doubled.blocks().iter().zip(&v) {
        let back = Triple::new(map(t.0[0]), map(t.0[1]), map(t.0[2]));
        let i = orig_doubled.index_of(&back).ok_or_else(|| invariant(format!("{back} missing after relabelling")))?;
        out[i] = x;
    }
    let certificate = FlowCertificate::new(&orig_doubled, out, FlowKind::Am5)?;
    if certificate.value() > 5 {
        return Err(invariant(format!("flow value {}", certificate.value())));
    }
    Ok(AmFlow { certificate, diagnostics: AmDiagnostics { perm, t0, w_sum, alphas, alpha_sum, m_sizes } })
}
