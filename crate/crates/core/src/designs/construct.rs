use super::{validate_sts, Point, SteinerTripleSystem, TauAssignment, Triple};
use crate::error::{Error, Result};

/// Bose construction on `Z_m × {0,1,2}` for odd `m ≥ 3`.
///
/// Point `(x, i)` gets label `i·m + x + 1`. Blocks are the vertical triples
/// `{(x,0),(x,1),(x,2)}` and, for `x ≠ y`, `{(x,i),(y,i),((x+y)/2, i+1)}`.
pub fn bose(m: u32) -> Result<SteinerTripleSystem> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::Precondition(format!("Bose construction needs odd m >= 3, got {m}")));
    }
    let label = |x: u32, i: u32| (i % 3) * m + (x % m) + 1;
    // (x + y)/2 mod m, with 2^{-1} = (m+1)/2
    let half = m.div_ceil(2);
    let mut triples = Vec::with_capacity((3 * m * m - m) as usize / 2);
    for x in 0..m {
        triples.push([label(x, 0), label(x, 1), label(x, 2)]);
    }
    for i in 0..3 {
        for x in 0..m {
            for y in x + 1..m {
                let z = ((x + y) as u64 * half as u64 % m as u64) as u32;
                triples.push([label(x, i), label(y, i), label(z, i + 1)]);
            }
        }
    }
    validate_sts(3 * m, &triples)
}

/// Supports of the weight-3 codewords of the binary Hamming code of length
/// `2^r - 1`: triples `{a, b, a xor b}` of nonzero `r`-bit vectors, labelled by
/// their integer value.
pub fn hamming_sts(r: u32) -> Result<SteinerTripleSystem> {
    if !(3..=12).contains(&r) {
        return Err(Error::Precondition(format!("Hamming system needs 3 <= r <= 12, got {r}")));
    }
    let n: Point = (1 << r) - 1;
    let mut triples = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            let c = a ^ b;
            if c > b {
                triples.push([a, b, c]);
            }
        }
    }
    validate_sts(n, &triples)
}

/// The four triples replacing base block `t` in the doubled system.
///
/// With `ī = i + n`: for `τ = 0` these are the triples over `t` with an even
/// number of barred points, for `τ = 1` those with an odd number. Both lists
/// are symmetric in the three points of `t`.
pub fn am_quadruple(t: &Triple, tau: bool, n: Point) -> [Triple; 4] {
    let [i, j, k] = t.0;
    let (bi, bj, bk) = (i + n, j + n, k + n);
    if !tau {
        [Triple::new(i, j, k), Triple::new(i, bj, bk), Triple::new(bi, j, bk), Triple::new(bi, bj, k)]
    } else {
        [Triple::new(bi, j, k), Triple::new(bi, bj, bk), Triple::new(i, j, bk), Triple::new(i, bj, k)]
    }
}

/// Assmus–Mattson doubling: an STS(2n+1) on `{1..n, 1̄..n̄, 2n+1}` with
/// `ī = i + n`.
pub fn assmuss_mattson(base: &SteinerTripleSystem, tau: &TauAssignment) -> Result<SteinerTripleSystem> {
    if tau.len() != base.block_count() {
        return Err(Error::Dimension { expected: base.block_count(), actual: tau.len() });
    }
    let n = base.order();
    let mut triples = Vec::with_capacity(4 * base.block_count() + n as usize);
    for (idx, t) in base.blocks().iter().enumerate() {
        triples.extend(am_quadruple(t, tau.get(idx), n).iter().map(|x| x.0));
    }
    for i in 1..=n {
        triples.push([i, i + n, 2 * n + 1]);
    }
    validate_sts(2 * n + 1, &triples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::tests::fano_raw;

    #[test]
    fn bose_small_orders() {
        assert_eq!(bose(3).unwrap().block_count(), 12);
        assert_eq!(bose(5).unwrap().order(), 15);
        assert_eq!(bose(17).unwrap().block_count(), 425);
        assert!(bose(4).is_err());
        assert!(bose(1).is_err());
    }

    #[test]
    fn hamming_orders() {
        let fano = validate_sts(7, &fano_raw()).unwrap();
        let h3 = hamming_sts(3).unwrap();
        assert_eq!(h3.block_count(), 7);
        // with binary labels the Hamming system is exactly this Fano labelling
        assert_eq!(h3, fano);
        assert_eq!(hamming_sts(4).unwrap().block_count(), 35);
        assert_eq!(hamming_sts(5).unwrap().block_count(), 155);
        assert!(hamming_sts(2).is_err());
    }

    #[test]
    fn doubling_block_counts() {
        let fano = validate_sts(7, &fano_raw()).unwrap();
        let s = assmuss_mattson(&fano, &TauAssignment::constant(7, false)).unwrap();
        assert_eq!((s.order(), s.block_count()), (15, 35));
        let s9 = bose(3).unwrap();
        let s19 = assmuss_mattson(&s9, &TauAssignment::constant(12, true)).unwrap();
        assert_eq!(s19.order(), 19);
        assert!(assmuss_mattson(&fano, &TauAssignment::constant(6, false)).is_err());
    }

    #[test]
    fn doubling_keeps_untwisted_base_blocks() {
        let s9 = bose(3).unwrap();
        for seed in 0..5 {
            let tau = TauAssignment::seeded(12, seed);
            let big = assmuss_mattson(&s9, &tau).unwrap();
            let low: Vec<Triple> = big.blocks().iter().filter(|t| t.0[2] <= 9).copied().collect();
            let want: Vec<Triple> =
                s9.blocks().iter().enumerate().filter(|(i, _)| !tau.get(*i)).map(|(_, t)| *t).collect();
            assert_eq!(low, want);
        }
    }
}
