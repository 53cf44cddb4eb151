//! Nowhere-zero integer first eigenvectors of Johnson graphs `J(n,k)`.
//!
//! A first eigenvector is a lift `Wᵀu` of a zero-sum point vector `u`. This
//! module gives explicit small-norm constructions, the lower-bound
//! machinery based on `γ(k)`, `T(k)` and `N(n,k)`, the closed form for
//! `k = 3`, and an exhaustive search for small `n`.

mod bounds;
mod brute;
mod scan;
mod upper;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::rational::format_q;

pub use bounds::{exceeds_t, gamma, in_b, lower_bound, n_of, t_j, t_of, ExactReason, LowerBound, ParamTuple};
pub use brute::{brute_min, BruteMin};
pub use scan::{lift_scan, lift_scan_int, LiftScan};
pub use upper::{jn3_witness, m1_jn3, upper_candidates, upper_vector, UpperTag, UpperWitness};

/// Everything known about the minimum for one `(n,k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: u64,
    pub k: u64,
    pub gamma: u64,
    /// `T(k)` as `"p"` or `"p/q"`.
    pub t_k: String,
    pub n_nk: Option<u64>,
    pub witnesses: Vec<ParamTuple>,
    pub upper: u64,
    pub upper_tag: UpperTag,
    pub lower: Option<u64>,
    pub exact: Option<u64>,
    pub exact_reasons: Vec<ExactReason>,
    pub note: Option<String>,
}

/// The best upper witness, using the closed form for `k = 3, n > 63`.
pub fn best_upper(n: u64, k: u64) -> Result<UpperWitness> {
    if k == 3 && n > 63 {
        let w = jn3_witness(n)?;
        let general = upper_vector(n, k)?;
        return Ok(if general.norm <= w.norm { general } else { w });
    }
    upper_vector(n, k)
}

pub fn bound_report(n: u64, k: u64) -> Result<BoundReport> {
    let up = best_upper(n, k)?;
    let t_k = t_of(k.max(2))?;
    let lb = lower_bound(n, k)?;
    let (n_nk, witnesses) = match &lb {
        Some(l) => (Some(l.n_nk), l.witnesses.clone()),
        None if n >= 2 * k => {
            let (nn, w) = n_of(n, k)?;
            (Some(nn), w)
        }
        None => (None, Vec::new()),
    };
    let mut exact = lb.as_ref().and_then(|l| l.exact);
    let mut reasons = lb.as_ref().map(|l| l.exact_reasons.clone()).unwrap_or_default();
    if k == 3 && n > 63 && exact.is_none() {
        exact = Some(m1_jn3(n)?);
        reasons.push(ExactReason::ClosedFormK3);
    }
    let lower = lb.as_ref().map(|l| l.value);
    let note = match (lower, exact) {
        (Some(lo), Some(ex)) if lo < ex => Some(format!("lower bound {lo} is not tight; exact value is {ex}")),
        (None, _) => Some("lower bound needs n > T(k)".to_string()),
        _ => None,
    };
    Ok(BoundReport {
        n,
        k,
        gamma: gamma(k),
        t_k: format_q(&t_k),
        n_nk,
        witnesses,
        upper: up.value(),
        upper_tag: up.tag,
        lower,
        exact,
        exact_reasons: reasons,
        note,
    })
}
