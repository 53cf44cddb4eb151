use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Q;

/// Least `γ ≥ 2` that does not divide `k`.
pub fn gamma(k: u64) -> u64 {
    (2..).find(|g| !k.is_multiple_of(*g)).expect("some integer does not divide k")
}

/// The auxiliary `j` used by the threshold `T(k)`.
pub fn t_j(k: u64) -> u64 {
    if k % 2 == 1 {
        2 * k
    } else {
        let g = gamma(k);
        (g / 2 + 1) * (2 * k + g)
    }
}

/// Threshold `T(k) = j² + 2kj + 3k − j − j²/k`, kept exact.
pub fn t_of(k: u64) -> Result<Q> {
    if k < 2 {
        return Err(Error::Precondition(format!("T(k) needs k >= 2, got {k}")));
    }
    let j = i128::from(t_j(k));
    let k = i128::from(k);
    let whole = j * j + 2 * k * j + 3 * k - j;
    let r = Q::new((whole * k - j * j).into(), k.into());
    Ok(r)
}

/// `n > T(k)`, compared exactly.
pub fn exceeds_t(n: u64, k: u64) -> Result<bool> {
    Ok(Q::from_integer(n.into()) > t_of(k)?)
}

/// Parameters `(a, b, r, s)` describing a positive value `a + r/s` and a
/// negative value `−b + r/s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ParamTuple {
    pub a: u64,
    pub b: u64,
    pub r: u64,
    pub s: u64,
}

impl ParamTuple {
    pub fn new(a: u64, b: u64, r: u64, s: u64) -> Self {
        ParamTuple { a, b, r, s }
    }

    pub fn check(&self, n: u64, k: u64) -> Result<()> {
        let bad = |why: &str| Err(Error::Invariant(format!("tuple {self:?} for (n,k)=({n},{k}): {why}")));
        if self.b == 0 {
            return bad("b must be positive");
        }
        if self.s == 0 || self.r >= self.s {
            return bad("need 0 <= r < s");
        }
        if self.r.gcd(&self.s) != 1 {
            return bad("r and s must be coprime");
        }
        if !n.gcd(&k).is_multiple_of(self.s) {
            return bad("s must divide gcd(n,k)");
        }
        Ok(())
    }

    /// `max{k(a + r/s), k(b − r/s)}`; integral because `s | k`.
    pub fn objective(&self, k: u64) -> u64 {
        let unit = k / self.s;
        (unit * (self.a * self.s + self.r)).max(unit * (self.b * self.s - self.r))
    }

    /// Number of positive entries in the balanced two-valued vector of
    /// length `n`, when integral.
    pub fn balanced_positive_count(&self, n: u64) -> Option<u64> {
        let num = (self.b * self.s - self.r) * n;
        let den = self.s * (self.a + self.b);
        num.is_multiple_of(den).then_some(num / den)
    }
}

/// Membership in `B(n,k)`: `k(bs − r) / (s(a + b))` is not an integer.
pub fn in_b(n: u64, k: u64, t: &ParamTuple) -> Result<bool> {
    t.check(n, k)?;
    Ok(!(k * (t.b * t.s - t.r)).is_multiple_of(t.s * (t.a + t.b)))
}

fn divisors(m: u64) -> Vec<u64> {
    (1..=m).filter(|d| m.is_multiple_of(*d)).collect()
}

/// `N(n,k)` and the sorted minimizer set `M(n,k)`, by complete enumeration.
pub fn n_of(n: u64, k: u64) -> Result<(u64, Vec<ParamTuple>)> {
    if k == 0 || n < 2 * k {
        return Err(Error::Precondition(format!("N(n,k) needs n >= 2k >= 2, got n={n} k={k}")));
    }
    let g = n.gcd(&k);
    let mut best = u64::MAX;
    let mut arg: Vec<ParamTuple> = Vec::new();
    let mut m = 0u64;
    // every tuple with max(a,b) = m has objective > k(m − 1)
    while m == 0 || k * (m - 1) <= best {
        for s in divisors(g) {
            for r in (0..s).filter(|r| r.gcd(&s) == 1) {
                for (a, b) in pairs_with_max(m) {
                    let t = ParamTuple::new(a, b, r, s);
                    if !in_b(n, k, &t)? {
                        continue;
                    }
                    let f = t.objective(k);
                    if f < best {
                        best = f;
                        arg.clear();
                    }
                    if f == best {
                        arg.push(t);
                    }
                }
            }
        }
        m += 1;
    }
    arg.sort();
    arg.dedup();
    Ok((best, arg))
}

fn pairs_with_max(m: u64) -> Vec<(u64, u64)> {
    let mut v = Vec::new();
    for a in 0..=m {
        for b in 1..=m {
            if a.max(b) == m {
                v.push((a, b));
            }
        }
    }
    v
}

/// Why an exact value is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExactReason {
    /// A minimizing tuple admits a balanced two-valued vector of length `n`.
    BalancedWitness,
    /// `gcd(n,k) = 1` and `γ | n`.
    Coprime,
    /// `n` even and `k` odd.
    EvenNOddK,
    /// The closed form for `k = 3`.
    ClosedFormK3,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBound {
    /// `N(n,k) + 1`.
    pub value: u64,
    pub n_nk: u64,
    pub witnesses: Vec<ParamTuple>,
    pub exact: Option<u64>,
    pub exact_reasons: Vec<ExactReason>,
}

/// `N(n,k) + 1` when `n > T(k)`, with the cases in which it is attained.
pub fn lower_bound(n: u64, k: u64) -> Result<Option<LowerBound>> {
    if k < 2 || n < 2 * k || !exceeds_t(n, k)? {
        return Ok(None);
    }
    let (nn, witnesses) = n_of(n, k)?;
    let value = nn + 1;
    let mut reasons = Vec::new();
    if witnesses.iter().any(|t| t.balanced_positive_count(n).is_some()) {
        reasons.push(ExactReason::BalancedWitness);
    }
    let g = gamma(k);
    if n.gcd(&k) == 1 && n.is_multiple_of(g) {
        reasons.push(ExactReason::Coprime);
    }
    if n.is_multiple_of(2) && k % 2 == 1 {
        reasons.push(ExactReason::EvenNOddK);
    }
    let exact = (!reasons.is_empty()).then_some(value);
    Ok(Some(LowerBound { value, n_nk: nn, witnesses, exact, exact_reasons: reasons }))
}
