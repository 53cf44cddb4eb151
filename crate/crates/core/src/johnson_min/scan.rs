use num_traits::{Signed, Zero};

use crate::rational::Q;

/// Summary of all `k`-subset sums of a point vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftScan {
    /// Largest absolute `k`-subset sum.
    pub norm: Q,
    /// Every `k`-subset sum is a nonzero integer.
    pub nzi: bool,
    /// Number of distinct value combinations examined.
    pub combinations: u64,
}

/// Scans `Wᵀu` on `J(n,k)` through value multiplicities.
///
/// Sums only depend on how many entries of each distinct value are chosen, so
/// the work is the number of bounded `k`-multisets of distinct values rather
/// than `C(n,k)`.
pub fn lift_scan(u: &[Q], k: usize) -> LiftScan {
    let mut sorted = u.to_vec();
    sorted.sort();
    let mut groups: Vec<(Q, usize)> = Vec::new();
    for x in sorted {
        match groups.last_mut() {
            Some((v, c)) if *v == x => *c += 1,
            _ => groups.push((x, 1)),
        }
    }
    let mut out = LiftScan { norm: Q::zero(), nzi: true, combinations: 0 };
    if k == 0 || k > u.len() {
        out.nzi = false;
        return out;
    }
    // suffix capacity lets the recursion stop when too few entries remain
    let mut tail = vec![0usize; groups.len() + 1];
    for i in (0..groups.len()).rev() {
        tail[i] = tail[i + 1] + groups[i].1;
    }
    walk(&groups, &tail, 0, k, Q::zero(), &mut out);
    out
}

fn walk(groups: &[(Q, usize)], tail: &[usize], i: usize, left: usize, sum: Q, out: &mut LiftScan) {
    if left == 0 {
        out.combinations += 1;
        if sum.is_zero() || !sum.is_integer() {
            out.nzi = false;
        }
        let a = sum.abs();
        if a > out.norm {
            out.norm = a;
        }
        return;
    }
    if i == groups.len() || tail[i] < left {
        return;
    }
    let (v, c) = &groups[i];
    let mut s = sum;
    for t in 0..=(*c).min(left) {
        if tail[i + 1] + t >= left {
            walk(groups, tail, i + 1, left - t, s.clone(), out);
        }
        s += v;
    }
}

/// Integer convenience wrapper.
pub fn lift_scan_int(u: &[i64], k: usize) -> LiftScan {
    let q: Vec<Q> = u.iter().map(|&x| crate::rational::q(x)).collect();
    lift_scan(&q, k)
}
