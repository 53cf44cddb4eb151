use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::q_frac;
use crate::spectra::PointVector;

/// Result of the bounded exhaustive minimization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteMin {
    pub n: u64,
    pub k: u64,
    /// Bound on `|u_i|` for every entry searched.
    pub cap: u64,
    /// Least `‖Wᵀu‖∞ + 1` among vectors within the cap, if any exists.
    pub min: Option<u64>,
    pub witness: Option<PointVector>,
    /// Common fractional part `r/s` of the witness.
    pub fraction: Option<(u64, u64)>,
    /// Always `"exact within cap"`.
    pub scope: String,
    pub nodes: u64,
}

struct Search {
    k: usize,
    /// Scaled bound `s·L` on every `k`-sum.
    bound: i64,
    values: Vec<i64>,
    lo: i64,
    offset: i64,
    chosen: Vec<i64>,
    nodes: u64,
}

/// Exhaustive search for the minimum lift norm with `|u_i| ≤ cap`.
///
/// All entries of an optimal vector share one fractional part `r/s` with
/// `s | gcd(n,k)`. Entries are scaled by `s` and assigned in descending
/// order; the norm bound is raised one step at a time so the first hit is
/// optimal.
pub fn brute_min(n: u64, k: u64, cap: u64) -> Result<BruteMin> {
    if k == 0 || n < 2 * k {
        return Err(Error::Precondition(format!("need n >= 2k >= 2, got n={n} k={k}")));
    }
    if n > 40 || cap > 64 {
        return Err(Error::Precondition(format!(
            "brute force is limited to n <= 40 and cap <= 64, got n={n} cap={cap}"
        )));
    }
    let g = n.gcd(&k);
    let mut fracs: Vec<(u64, u64)> = Vec::new();
    for s in (1..=g).filter(|s| g.is_multiple_of(*s)) {
        for r in (0..s).filter(|r| r.gcd(&s) == 1) {
            fracs.push((r, s));
        }
    }
    let mut nodes = 0;
    for l in 1..=(k * cap) as i64 {
        for &(r, s) in &fracs {
            let (r, s) = (r as i64, s as i64);
            let top = cap as i64 * s;
            let values: Vec<i64> = (-top..=top).rev().filter(|x| x.rem_euclid(s) == r).collect();
            let Some(&lo) = values.last() else { continue };
            let mut st = Search {
                k: k as usize,
                bound: s * l,
                offset: k as i64 * top,
                values,
                lo,
                chosen: Vec::with_capacity(n as usize),
                nodes: 0,
            };
            let width = (2 * st.offset + 1) as usize;
            let mut reach = vec![vec![false; width]; st.k + 1];
            reach[0][st.offset as usize] = true;
            let found = st.rec(0, n as usize, 0, &reach);
            nodes += st.nodes;
            if found {
                let u: Vec<_> = st.chosen.iter().map(|&x| q_frac(x, s)).collect();
                return Ok(BruteMin {
                    n,
                    k,
                    cap,
                    min: Some(l as u64 + 1),
                    witness: Some(PointVector(u)),
                    fraction: Some((r as u64, s as u64)),
                    scope: "exact within cap".into(),
                    nodes,
                });
            }
        }
    }
    Ok(BruteMin { n, k, cap, min: None, witness: None, fraction: None, scope: "exact within cap".into(), nodes })
}

impl Search {
    /// Assigns counts to `values[i..]`; `m` entries remain, `p` is the sum so far.
    fn rec(&mut self, i: usize, m: usize, p: i64, reach: &[Vec<bool>]) -> bool {
        self.nodes += 1;
        if m == 0 {
            return p == 0;
        }
        if i == self.values.len() {
            return false;
        }
        let v = self.values[i];
        let m_i = m as i64;
        // the remaining entries lie in [lo, v]
        if -p > m_i * v || -p < m_i * self.lo {
            return false;
        }
        let max_c = if v == 0 { m.min(self.k - 1) } else { m };
        for c in (0..=max_c).rev() {
            if c == 0 {
                return self.rec(i + 1, m, p, reach);
            }
            let Some(next) = self.extend(reach, v, c) else { continue };
            let before = self.chosen.len();
            self.chosen.extend(std::iter::repeat_n(v, c));
            let ok =
                self.admissible(before, m - c, p + v * c as i64) && self.rec(i + 1, m - c, p + v * c as i64, &next);
            if ok {
                return true;
            }
            self.chosen.truncate(before);
        }
        false
    }

    /// Adds `c` copies of `v` to the reachable `(size, sum)` table, or `None`
    /// when some `k`-subset would sum to zero.
    fn extend(&self, reach: &[Vec<bool>], v: i64, c: usize) -> Option<Vec<Vec<bool>>> {
        let k = self.k;
        let mut next = reach.to_vec();
        for j in 0..k {
            for (idx, _) in reach[j].iter().enumerate().filter(|(_, &b)| b) {
                let base = idx as i64 - self.offset;
                for t in 1..=c.min(k - j) {
                    let s = base + v * t as i64;
                    if j + t == k && s == 0 {
                        return None;
                    }
                    let pos = s + self.offset;
                    if pos >= 0 && (pos as usize) < next[j + t].len() {
                        next[j + t][pos as usize] = true;
                    }
                }
            }
        }
        Some(next)
    }

    /// Norm checks that become decidable once entries are fixed.
    fn admissible(&self, before: usize, m: usize, p: i64) -> bool {
        let k = self.k;
        let len = self.chosen.len();
        if before < k && len >= k && self.chosen[..k].iter().sum::<i64>() > self.bound {
            return false;
        }
        if m >= k {
            // the k smallest remaining entries average at most −p/m
            k as i64 * p <= self.bound * m as i64
        } else if len + m >= k {
            let smallest: i64 = self.chosen[len - (k - m)..].iter().sum();
            smallest - p >= -self.bound
        } else {
            true
        }
    }
}
