use num_traits::Zero;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use super::vectors::{BlockVector, PointVector};
use crate::error::{Error, Result};
use crate::rational::Q;

/// `θ_i(J(n,k)) = (k−i)(n−k−i) − i`.
pub fn johnson_eigenvalue(n: u32, k: u32, i: u32) -> Result<i64> {
    if i > k || k > n {
        return Err(Error::Precondition(format!("need 0 <= i <= k <= n, got (n,k,i) = ({n},{k},{i})")));
    }
    let (n, k, i) = (n as i64, k as i64, i as i64);
    Ok((k - i) * (n - k - i) - i)
}

/// The three eigenvalues of the block graph of an STS(n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BlockGraphSpectrum {
    pub theta0: i64,
    pub theta1: i64,
    pub theta2: i64,
    /// Order 7: the block graph is `K7` and `θ2` has multiplicity zero.
    pub degenerate: bool,
}

impl BlockGraphSpectrum {
    /// `θ_1` or `θ_2`, refused on the degenerate order.
    pub fn nontrivial(&self, index: usize) -> Result<i64> {
        if self.degenerate {
            return Err(Error::Degenerate);
        }
        match index {
            1 => Ok(self.theta1),
            2 => Ok(self.theta2),
            _ => Err(Error::Precondition(format!("eigenvalue index {index} not in {{1, 2}}"))),
        }
    }

    /// Multiplicities `(1, n−1, b−n)` of `θ0, θ1, θ2`.
    pub fn multiplicities(n: u32) -> (usize, usize, usize) {
        let n = n as usize;
        (1, n - 1, n * (n - 1) / 6 - n)
    }
}

pub fn block_graph_eigenvalues(n: u32) -> Result<BlockGraphSpectrum> {
    if n < 7 || !matches!(n % 6, 1 | 3) {
        return Err(Error::Precondition(format!("block graph eigenvalues need an STS order >= 7, got {n}")));
    }
    let n = n as i64;
    Ok(BlockGraphSpectrum { theta0: 3 * (n - 3) / 2, theta1: (n - 1) / 2 - 4, theta2: -3, degenerate: n == 7 })
}

/// The `k`-subsets of `{1..n}` in lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KSubsets {
    pub n: u32,
    pub k: u32,
}

pub(crate) fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

impl KSubsets {
    pub fn new(n: u32, k: u32) -> Self {
        KSubsets { n, k }
    }

    pub fn count(&self) -> usize {
        binom(self.n as u64, self.k as u64) as usize
    }

    /// Position of a sorted subset in lexicographic order.
    pub fn rank(&self, subset: &[u32]) -> usize {
        let (n, k) = (self.n as u64, self.k as u64);
        let mut r = 0u64;
        let mut prev = 0u64;
        for (i, &c) in subset.iter().enumerate() {
            let c = c as u64;
            for j in prev + 1..c {
                r += binom(n - j, k - i as u64 - 1);
            }
            prev = c;
        }
        r as usize
    }

    pub fn iter(&self) -> impl Iterator<Item = Vec<u32>> {
        let (n, k) = (self.n, self.k as usize);
        let mut cur: Option<Vec<u32>> = if k as u32 <= n { Some((1..=k as u32).collect()) } else { None };
        std::iter::from_fn(move || {
            let out = cur.clone()?;
            let c = cur.as_mut().unwrap();
            let mut i = k;
            loop {
                if i == 0 {
                    cur = None;
                    break;
                }
                i -= 1;
                if c[i] < n - (k - 1 - i) as u32 {
                    c[i] += 1;
                    for j in i + 1..k {
                        c[j] = c[j - 1] + 1;
                    }
                    break;
                }
            }
            Some(out)
        })
    }
}

fn neighbor_sum(space: &KSubsets, v: &[Q], subset: &[u32]) -> Q {
    let mut acc = Q::zero();
    let mut member = vec![false; space.n as usize + 1];
    for &x in subset {
        member[x as usize] = true;
    }
    let mut buf = subset.to_vec();
    for pos in 0..subset.len() {
        for y in 1..=space.n {
            if member[y as usize] {
                continue;
            }
            buf.copy_from_slice(subset);
            buf[pos] = y;
            buf.sort_unstable();
            acc += &v[space.rank(&buf)];
        }
    }
    acc
}

/// Recovers the zero-sum `u` with `Wᵀu = v`, if there is one.
pub fn first_eigen_preimage(n: u32, k: u32, v: &BlockVector) -> Option<PointVector> {
    let space = KSubsets::new(n, k);
    if v.len() != space.count() || k == 0 || n < k + 1 {
        return None;
    }
    // u_1 − u_j from two k-sets that differ only in 1 ↔ j
    let mut diffs = vec![Q::zero(); n as usize + 1];
    for j in 2..=n {
        let rest: Vec<u32> = (2..=n).filter(|&x| x != j).take(k as usize - 1).collect();
        let mut a = rest.clone();
        a.push(1);
        a.sort_unstable();
        let mut b = rest;
        b.push(j);
        b.sort_unstable();
        diffs[j as usize] = &v.0[space.rank(&a)] - &v.0[space.rank(&b)];
    }
    let total: Q = diffs.iter().sum();
    let u1 = total / Q::from_integer((n as i64).into());
    let mut u = vec![u1.clone()];
    for j in 2..=n {
        u.push(&u1 - &diffs[j as usize]);
    }
    let u = PointVector(u);
    let lifted = super::vectors::lift(&u, super::vectors::LiftTarget::Johnson { n, k }).ok()?;
    (lifted == *v).then_some(u)
}

/// Exact check of `A v = θ v` on `J(n,k)`.
///
/// For `n ≤ 14` every vertex is checked. Larger graphs are never
/// materialised: a first-eigenvalue claim is checked through the preimage
/// `v = Wᵀu`, and `A v = θ v` is verified on 1000 seeded sample vertices.
pub fn is_johnson_eigenvector(n: u32, k: u32, v: &BlockVector, theta: i64) -> Result<bool> {
    let space = KSubsets::new(n, k);
    if v.len() != space.count() {
        return Err(Error::Dimension { expected: space.count(), actual: v.len() });
    }
    if v.0.iter().all(Zero::is_zero) {
        return Ok(false);
    }
    let th = Q::from_integer(theta.into());
    let check = |s: &[u32]| neighbor_sum(&space, &v.0, s) == &th * &v.0[space.rank(s)];
    if n <= 14 {
        return Ok(space.iter().all(|s| check(&s)));
    }
    if theta == johnson_eigenvalue(n, k, 1)? && first_eigen_preimage(n, k, v).is_none() {
        return Ok(false);
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let mut s: Vec<u32> = Vec::with_capacity(k as usize);
        while s.len() < k as usize {
            let x = rng.gen_range(1..=n);
            if !s.contains(&x) {
                s.push(x);
            }
        }
        s.sort_unstable();
        if !check(&s) {
            return Ok(false);
        }
    }
    Ok(true)
}
