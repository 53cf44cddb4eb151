use super::cert::{FlowCertificate, FlowKind};
use crate::designs::{Resolution, SteinerTripleSystem};
use crate::error::{Error, Result};

/// Flow that is constant on each parallel class of a resolution.
///
/// With `c = (n−1)/2` classes: for `n ≡ 1 (mod 4)` the first `c/2` classes
/// get `+1` and the rest `−1` (a 2-flow); for `n ≡ 3 (mod 4)` the classes are
/// grouped as `(n−7)/4`, `(n−3)/4`, `2` with values `2, −2, 1` (a 3-flow).
pub fn resolvable_flow(sts: &SteinerTripleSystem, res: &Resolution) -> Result<FlowCertificate> {
    let n = sts.order() as usize;
    if n % 6 != 3 {
        return Err(Error::Precondition(format!("resolvable systems have n = 3 mod 6, got {n}")));
    }
    res.check(sts)?;
    let c = res.classes.len();
    let class_values: Vec<i64> = if n % 4 == 1 {
        (0..c).map(|i| if i < c / 2 { 1 } else { -1 }).collect()
    } else {
        if n < 7 {
            return Err(Error::Precondition(format!("order {n} has too few parallel classes")));
        }
        let (a, b) = ((n - 7) / 4, (n - 3) / 4);
        (0..c)
            .map(|i| {
                if i < a {
                    2
                } else if i < a + b {
                    -2
                } else {
                    1
                }
            })
            .collect()
    };
    let mut v = vec![0i64; sts.block_count()];
    for (class, &x) in res.classes.iter().zip(&class_values) {
        for &t in class {
            v[t] = x;
        }
    }
    FlowCertificate::new(sts, v, FlowKind::Resolvable)
}
