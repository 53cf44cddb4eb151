use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::bounds::gamma;
use super::scan::lift_scan;
use crate::error::{Error, Result};
use crate::rational::{q, q_frac, to_i64, Q};
use crate::spectra::PointVector;

/// Which explicit vector produced an upper bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UpperTag {
    /// `n−1` entries `1/g` and one `−(n−1)/g`, `g = gcd(n,k)`.
    SameCoefficient,
    /// `k` odd, `n` even: half `+1`, half `−1`.
    OddKEvenN,
    /// `k` odd, `n` odd: `(k+1, −1, …, −1, 1, …, 1)`.
    OddKOddN,
    /// `k` even, `γ | n`: zero-sum blocks of `γ` entries.
    GammaBlocks,
    /// `k` even, `γ ∤ n`: blocks plus one large negative entry.
    GammaBlocksRemainder,
    /// Entries `5/3` and `−4/3` (and possibly one `2/3`) for `k = 3`.
    Thirds,
}

/// A zero-sum point vector with verified lift norm.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpperWitness {
    pub n: u64,
    pub k: u64,
    pub u: PointVector,
    /// `‖Wᵀu‖∞` as recomputed by the scan.
    pub norm: u64,
    /// The norm promised by the construction.
    pub stated: u64,
    pub tag: UpperTag,
}

impl UpperWitness {
    /// `norm + 1`, the corresponding bound on the minimum.
    pub fn value(&self) -> u64 {
        self.norm + 1
    }
}

fn fill(parts: &[(Q, u64)]) -> Vec<Q> {
    let mut u = Vec::new();
    for (v, c) in parts {
        u.extend(std::iter::repeat_n(v.clone(), *c as usize));
    }
    u
}

fn same_coefficient(n: u64, k: u64) -> (Vec<Q>, u64) {
    let g = n.gcd(&k) as i64;
    let u = fill(&[(q_frac(1, g), n - 1), (q_frac(-(n as i64 - 1), g), 1)]);
    (u, (n - k) / g as u64)
}

fn odd_k(n: u64, k: u64) -> (Vec<Q>, u64, UpperTag) {
    if n.is_multiple_of(2) {
        (fill(&[(q(1), n / 2), (q(-1), n / 2)]), k, UpperTag::OddKEvenN)
    } else {
        let u = fill(&[(q(k as i64 + 1), 1), (q(-1), (n + k) / 2), (q(1), (n - k - 2) / 2)]);
        (u, 2 * k, UpperTag::OddKOddN)
    }
}

fn gamma_blocks(n: u64, k: u64) -> (Vec<Q>, u64, UpperTag) {
    let g = gamma(k);
    let l = g / 2;
    let (hi, lo, c_hi, c_lo) =
        if g % 2 == 1 { (l as i64 + 1, -(l as i64), l, l + 1) } else { (l as i64 + 1, 1 - l as i64, l - 1, l + 1) };
    if n.is_multiple_of(g) {
        let blocks = n / g;
        let u = fill(&[(q(hi), blocks * c_hi), (q(lo), blocks * c_lo)]);
        return (u, (l + 1) * k, UpperTag::GammaBlocks);
    }
    let beta = (n - k - 1) % g;
    let blocks = (n - k - 1 - beta) / g;
    let big = -(((k + beta) * (l + 1)) as i64);
    let u = fill(&[(q(hi), blocks * c_hi + k + beta), (q(lo), blocks * c_lo), (q(big), 1)]);
    (u, (l + 1) * (2 * k + beta - 1), UpperTag::GammaBlocksRemainder)
}

fn verify(n: u64, k: u64, u: Vec<Q>, stated: u64, tag: UpperTag) -> Result<UpperWitness> {
    if u.len() as u64 != n {
        return Err(Error::Invariant(format!("{tag:?} vector has length {} for n={n}", u.len())));
    }
    if u.iter().sum::<Q>() != q(0) {
        return Err(Error::Invariant(format!("{tag:?} vector does not sum to zero")));
    }
    let scan = lift_scan(&u, k as usize);
    if !scan.nzi {
        return Err(Error::Invariant(format!("{tag:?} lift is not nowhere-zero integral for n={n} k={k}")));
    }
    let norm = to_i64(&scan.norm).expect("integral norm") as u64;
    Ok(UpperWitness { n, k, u: PointVector(u), norm, stated, tag })
}

/// Every applicable explicit construction, each verified by scan.
pub fn upper_candidates(n: u64, k: u64) -> Result<Vec<UpperWitness>> {
    if k == 0 || n < 2 * k {
        return Err(Error::Precondition(format!("need n >= 2k >= 2, got n={n} k={k}")));
    }
    let mut out = Vec::new();
    if k % 2 == 1 {
        let (u, stated, tag) = odd_k(n, k);
        out.push(verify(n, k, u, stated, tag)?);
    } else {
        let (u, stated, tag) = gamma_blocks(n, k);
        out.push(verify(n, k, u, stated, tag)?);
    }
    let (u, stated) = same_coefficient(n, k);
    out.push(verify(n, k, u, stated, UpperTag::SameCoefficient)?);
    Ok(out)
}

/// The best verified explicit upper-bound vector for `J(n,k)`.
pub fn upper_vector(n: u64, k: u64) -> Result<UpperWitness> {
    let mut best: Option<UpperWitness> = None;
    for c in upper_candidates(n, k)? {
        if best.as_ref().is_none_or(|b| c.norm < b.norm) {
            best = Some(c);
        }
    }
    Ok(best.expect("at least one construction applies"))
}

fn check_large(n: u64) -> Result<()> {
    if n <= 63 {
        return Err(Error::Precondition(format!("closed form for k = 3 needs n > 63, got {n}")));
    }
    Ok(())
}

/// Minimum of `‖Wᵀu‖∞ + 1` over first eigenvectors of `J(n,3)`, `n > 63`.
pub fn m1_jn3(n: u64) -> Result<u64> {
    check_large(n)?;
    Ok(if n.is_multiple_of(2) {
        4
    } else if n.is_multiple_of(9) || n % 9 == 6 {
        6
    } else {
        7
    })
}

/// A vector attaining [`m1_jn3`].
pub fn jn3_witness(n: u64) -> Result<UpperWitness> {
    check_large(n)?;
    let (u, stated, tag) = if n.is_multiple_of(2) || (!n.is_multiple_of(9) && n % 9 != 6) {
        odd_k(n, 3)
    } else if n.is_multiple_of(9) {
        (fill(&[(q_frac(5, 3), 4 * n / 9), (q_frac(-4, 3), 5 * n / 9)]), 5, UpperTag::Thirds)
    } else {
        let u = fill(&[(q_frac(5, 3), (4 * n - 6) / 9), (q_frac(2, 3), 1), (q_frac(-4, 3), (5 * n - 3) / 9)]);
        (u, 5, UpperTag::Thirds)
    };
    let w = verify(n, 3, u, stated, tag)?;
    if w.norm + 1 != m1_jn3(n)? {
        return Err(Error::Invariant(format!("witness for n={n} has norm {}", w.norm)));
    }
    Ok(w)
}
