//! Completely regular codes in block graphs.
//!
//! A vertex set `C` is completely regular when every vertex at distance `i`
//! from `C` has the same numbers `γ_i, α_i, β_i` of neighbours at distances
//! `i−1, i, i+1`. Covering radius 1 codes correspond to two-valued
//! eigenvectors of the graph.

mod constructions;
mod enumerate;

use serde::{Deserialize, Serialize};

use crate::designs::SteinerTripleSystem;
use crate::error::{Error, Result};
use crate::spectra::{distance_partition, is_eigenvector_int, BlockGraph};

pub use constructions::{
    classify_code, construction, find_one_subdesign, is_subsystem, Constructed, ConstructionKind, ConstructionTag,
};
pub use enumerate::{enumerate_equitable_bipartitions, Enumeration, PartitionRecord};

/// A nonempty proper set of block indices, sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Code(Vec<usize>);

impl Code {
    pub fn new(mut members: Vec<usize>, vertex_count: usize) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.is_empty() || members.len() >= vertex_count {
            return Err(Error::Precondition(format!(
                "code must be a nonempty proper subset, got {} of {vertex_count}",
                members.len()
            )));
        }
        if let Some(&x) = members.iter().find(|&&x| x >= vertex_count) {
            return Err(Error::Precondition(format!("vertex {x} out of range")));
        }
        Ok(Code(members))
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn complement(&self, vertex_count: usize) -> Result<Code> {
        let mut inside = vec![false; vertex_count];
        for &x in &self.0 {
            inside[x] = true;
        }
        Code::new((0..vertex_count).filter(|&x| !inside[x]).collect(), vertex_count)
    }
}

/// Distance partition and intersection numbers of a completely regular code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrcReport {
    pub rho: usize,
    pub layer_sizes: Vec<usize>,
    pub alphas: Vec<i64>,
    pub betas: Vec<i64>,
    pub gammas: Vec<i64>,
    /// Eigenvalues of the tridiagonal intersection matrix, descending.
    pub eigenvalues: Vec<i64>,
}

impl CrcReport {
    /// The non-principal eigenvalue `α_0 − γ_1` of a covering radius 1 code.
    pub fn eigenvalue(&self) -> Option<i64> {
        (self.rho == 1).then(|| self.alphas[0] - self.gammas[1])
    }

    /// `{β_0, …; γ_1, …}`.
    pub fn intersection_array(&self) -> (Vec<i64>, Vec<i64>) {
        (self.betas[..self.rho].to_vec(), self.gammas[1..].to_vec())
    }
}

/// Verifies complete regularity and computes the intersection numbers.
pub fn check_crc(graph: &BlockGraph, code: &Code) -> Result<CrcReport> {
    let dp = distance_partition(graph, code.members())?;
    let rho = dp.covering_radius();
    let mut alphas = vec![0i64; rho + 1];
    let mut betas = vec![0i64; rho + 1];
    let mut gammas = vec![0i64; rho + 1];
    for (i, cell) in dp.cells.iter().enumerate() {
        for (pos, &x) in cell.iter().enumerate() {
            let mut cnt = [0i64; 3];
            for &y in graph.neighbors(x) {
                let ly = dp.layer_of[y];
                cnt[ly + 1 - i] += 1;
            }
            let [g, a, b] = cnt;
            if pos == 0 {
                (gammas[i], alphas[i], betas[i]) = (g, a, b);
            } else if (g, a, b) != (gammas[i], alphas[i], betas[i]) {
                return Err(Error::NotCompletelyRegular { vertex: x, layer: i });
            }
        }
    }
    let eigenvalues = tridiagonal_integer_eigenvalues(&alphas, &betas, &gammas)?;
    Ok(CrcReport { rho, layer_sizes: dp.cells.iter().map(Vec::len).collect(), alphas, betas, gammas, eigenvalues })
}

/// Characteristic polynomial `det(xI − M)` of the tridiagonal matrix, lowest
/// degree first.
pub fn intersection_char_poly(alphas: &[i64], betas: &[i64], gammas: &[i64]) -> Vec<i128> {
    // p_{i+1} = (x − α_i) p_i − β_{i−1} γ_i p_{i−1}
    let mut prev: Vec<i128> = vec![1];
    let mut cur: Vec<i128> = vec![-(alphas[0] as i128), 1];
    for i in 1..alphas.len() {
        let mut next = vec![0i128; cur.len() + 1];
        for (d, &c) in cur.iter().enumerate() {
            next[d + 1] += c;
            next[d] -= alphas[i] as i128 * c;
        }
        let bg = betas[i - 1] as i128 * gammas[i] as i128;
        for (d, &c) in prev.iter().enumerate() {
            next[d] -= bg * c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

fn tridiagonal_integer_eigenvalues(alphas: &[i64], betas: &[i64], gammas: &[i64]) -> Result<Vec<i64>> {
    let mut poly = intersection_char_poly(alphas, betas, gammas);
    let bound = alphas.iter().chain(betas).chain(gammas).map(|x| x.abs()).sum::<i64>() + 1;
    let mut roots = Vec::new();
    for x in (-bound..=bound).rev() {
        while poly.len() > 1 && eval(&poly, x) == 0 {
            poly = deflate(&poly, x);
            roots.push(x);
        }
    }
    if poly.len() > 1 {
        return Err(Error::Invariant("intersection matrix has non-integral eigenvalues".into()));
    }
    Ok(roots)
}

fn eval(p: &[i128], x: i64) -> i128 {
    p.iter().rev().fold(0i128, |acc, &c| acc * x as i128 + c)
}

/// Divides by `(t − x)`; the remainder is known to be zero.
fn deflate(p: &[i128], x: i64) -> Vec<i128> {
    let d = p.len() - 1;
    let mut q = vec![0i128; d];
    let mut carry = 0i128;
    for k in (0..d).rev() {
        carry = p[k + 1] + carry * x as i128;
        q[k] = carry;
    }
    q
}

/// `β_0 χ_C − γ_1 χ_{V∖C}`, checked to be an eigenvector for `α_0 − γ_1`.
pub fn two_valued_vector(graph: &BlockGraph, code: &Code, report: &CrcReport) -> Result<Vec<i64>> {
    let theta = report
        .eigenvalue()
        .ok_or_else(|| Error::Precondition(format!("two-valued vectors need covering radius 1, got {}", report.rho)))?;
    let mut v = vec![-report.gammas[1]; graph.vertex_count()];
    for &x in code.members() {
        v[x] = report.betas[0];
    }
    if !is_eigenvector_int(graph, &v, theta)? {
        return Err(Error::Invariant(format!("two-valued vector is not a {theta} eigenvector")));
    }
    Ok(v)
}

/// `λ` when every point lies in exactly `λ` blocks of the code.
pub fn is_one_design(sts: &SteinerTripleSystem, code: &[usize]) -> Option<usize> {
    let mut deg = vec![0usize; sts.order() as usize + 1];
    for &b in code {
        for p in sts.blocks().get(b)?.0 {
            deg[p as usize] += 1;
        }
    }
    let lambda = deg[1];
    deg[1..].iter().all(|&d| d == lambda).then_some(lambda)
}

/// Number of codes from the pencil, half-order subsystem and pencil plus
/// subsystem constructions: `n + (2^{n−r} − 1)(n + 3)/2`.
pub fn expected_count(n: u32, rank: u32) -> Result<u64> {
    if !matches!(n % 6, 1 | 3) || rank > n {
        return Err(Error::Precondition(format!("need admissible n and rank <= n, got n={n} r={rank}")));
    }
    let subs = (1u64 << (n - rank)) - 1;
    Ok(n as u64 + subs * (n as u64 + 3) / 2)
}
