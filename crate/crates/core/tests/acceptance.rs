//! Acceptance run: one line per criterion, with runtime limits.
//!
//! Run with `cargo test --test acceptance -- --nocapture` for the report; the
//! lines are also written unbuffered so they appear in normal runs.

use std::collections::BTreeMap;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stsflow::crc::{enumerate_equitable_bipartitions, expected_count};
use stsflow::designs::{assmuss_mattson, binary_rank, bose, find_resolution, hamming_sts, read_sts};
use stsflow::flows::{am_five_flow, first_eig_nzi, min_flow_search, resolvable_flow, FlowCertificate};
use stsflow::johnson_min::{in_b, jn3_witness, lower_bound, m1_jn3, n_of, t_of, upper_vector};
use stsflow::rational::{q, q_frac, Q};
use stsflow::spectra::{
    block_graph_eigenvalues, incidence_matrix, lift, null_space_basis, restrict, BlockVector, LiftTarget, PointVector,
};
use stsflow::{SteinerTripleSystem, TauAssignment};

fn fixture(name: &str) -> SteinerTripleSystem {
    read_sts(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn fano() -> SteinerTripleSystem {
    hamming_sts(3).unwrap()
}

/// All `k`-subset sums of `u` through value multiplicities: (all nonzero integers, max |sum|).
fn subset_sums(u: &[Q], k: usize) -> (bool, Q) {
    let mut counts: BTreeMap<Q, usize> = BTreeMap::new();
    for x in u {
        *counts.entry(x.clone()).or_default() += 1;
    }
    let groups: Vec<(Q, usize)> = counts.into_iter().collect();
    fn rec(groups: &[(Q, usize)], left: usize, acc: Q, nzi: &mut bool, max: &mut Q) {
        if left == 0 {
            *nzi &= acc.is_integer() && !acc.is_zero();
            if acc.abs() > *max {
                *max = acc.abs();
            }
            return;
        }
        let Some(((v, c), rest)) = groups.split_first() else { return };
        for take in 0..=(*c).min(left) {
            rec(rest, left - take, acc.clone() + v * q(take as i64), nzi, max);
        }
    }
    let (mut nzi, mut max) = (true, q(0));
    rec(&groups, k, q(0), &mut nzi, &mut max);
    (nzi, max)
}

/// `A v` on the block graph, adjacency taken from block intersections.
fn adjacency_apply(sts: &SteinerTripleSystem, v: &[Q]) -> Vec<Q> {
    let b = sts.blocks();
    (0..b.len()).map(|i| (0..b.len()).filter(|&j| j != i && b[i].meets(&b[j])).map(|j| v[j].clone()).sum()).collect()
}

fn is_eigen(sts: &SteinerTripleSystem, v: &[Q], theta: i64) -> bool {
    adjacency_apply(sts, v).iter().zip(v).all(|(a, x)| *a == x * q(theta))
}

fn ints(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

/// Independent flow check on a certificate.
fn check_flow(c: &FlowCertificate, value: i64) {
    let s = c.sts();
    let v = c.v();
    assert!(v.iter().all(|&x| x != 0));
    let mut sums = vec![0i64; s.order() as usize + 1];
    for (t, x) in s.blocks().iter().zip(v) {
        for p in t.points() {
            sums[p as usize] += x;
        }
    }
    assert!(sums.iter().all(|&x| x == 0));
    assert!(is_eigen(s, &ints(v), -3));
    assert_eq!(v.iter().map(|x| x.abs()).max().unwrap() + 1, value);
}

fn c1_jn3_closed_form() {
    for n in 64..=100u64 {
        let m = m1_jn3(n).unwrap();
        let want = if n % 2 == 0 {
            4
        } else if n % 9 == 0 || n % 9 == 6 {
            6
        } else {
            7
        };
        assert_eq!(m, want, "n={n}");
        let w = jn3_witness(n).unwrap();
        let (nzi, norm) = subset_sums(&w.u.0, 3);
        assert!(nzi, "n={n}");
        assert_eq!(norm, q(m as i64 - 1), "n={n}");
        assert_eq!(w.u.sum(), q(0));
        if n % 2 == 0 {
            assert_eq!(lower_bound(n, 3).unwrap().unwrap().exact, Some(4), "n={n}");
        }
    }
}

fn c2_bound_machinery() {
    assert_eq!(t_of(3).unwrap(), q(63));
    let (n64, m64) = n_of(64, 3).unwrap();
    let (n63, m63) = n_of(63, 3).unwrap();
    for (n, m) in [(64, &m64), (63, &m63)] {
        assert!(!m.is_empty());
        assert!(m.iter().all(|t| in_b(n, 3, t).unwrap()));
    }
    assert_eq!(n64, 3);
    assert_eq!(n63, 5, "N(63,3) witnesses {m63:?}");
}

fn c3_upper_constructions() {
    for k in 3..=5u64 {
        for n in 2 * k..=60 {
            let w = upper_vector(n, k).unwrap();
            assert_eq!(w.u.len() as u64, n);
            assert_eq!(w.u.sum(), q(0));
            let (nzi, norm) = subset_sums(&w.u.0, k as usize);
            assert!(nzi, "n={n} k={k}");
            assert_eq!(norm, q(w.norm as i64));
            assert!(w.norm <= w.stated, "n={n} k={k} {:?}: {} > {}", w.tag, w.norm, w.stated);
        }
    }
}

fn c4_order_15_flows() {
    let s = assmuss_mattson(&fano(), &TauAssignment::constant(7, false)).unwrap();
    assert_eq!(s.order(), 15);
    assert!(min_flow_search(&s, 2).unwrap().is_none());
    let c = min_flow_search(&s, 3).unwrap().expect("a 3-flow");
    check_flow(&c, 3);
}

fn c5_fano() {
    let f = fano();
    assert!(null_space_basis(&incidence_matrix(&f)).is_empty());
    assert!(min_flow_search(&f, 5).unwrap().is_none());
}

fn c6_resolvable() {
    let s9 = bose(3).unwrap();
    let c = resolvable_flow(&s9, &find_resolution(&s9).unwrap()).unwrap();
    check_flow(&c, 2);
    let h = hamming_sts(4).unwrap();
    let res = find_resolution(&h).expect("a resolution");
    res.check(&h).unwrap();
    let c = resolvable_flow(&h, &res).unwrap();
    check_flow(&c, 3);
}

fn c7_am_five_flow() {
    let base = bose(17).unwrap();
    assert_eq!(base.order(), 51);
    for tau in [TauAssignment::constant(base.block_count(), false), TauAssignment::parse("seed:7", 425).unwrap()] {
        let r = am_five_flow(&base, &tau).unwrap();
        let c = &r.certificate;
        assert_eq!(c.sts().order(), 103);
        assert_eq!(c.sts(), &assmuss_mattson(&base, &tau).unwrap());
        assert!(c.value() <= 5);
        check_flow(c, c.value());
        let d = &r.diagnostics;
        assert!(d.alphas.iter().all(|a| matches!(a, -4 | -2 | 2 | 4)));
        assert_eq!(d.alphas.iter().sum::<i64>(), 0);
        assert_eq!(d.alpha_sum, 0);
        assert_eq!(d.w_sum, 0);
    }
}

fn c8_first_eigenvectors() {
    for (s, bound) in [
        (bose(3).unwrap(), 3),
        (hamming_sts(4).unwrap(), 4),
        (fixture("sts15_pg32.txt"), 4),
        (fixture("sts15_switch2.txt"), 4),
    ] {
        let n = s.order();
        let r = first_eig_nzi(&s).unwrap();
        let theta1 = block_graph_eigenvalues(n).unwrap().theta1;
        assert_eq!(theta1, (n as i64 - 9) / 2);
        assert_eq!(r.u.iter().sum::<i64>(), 0);
        assert!(r.v.iter().all(|&x| x != 0));
        assert!(is_eigen(&s, &ints(&r.v), theta1), "n={n}");
        assert_eq!(lift(&r.point_vector(), LiftTarget::Sts(&s)).unwrap(), BlockVector::from_ints(&r.v));
        let norm = r.v.iter().map(|x| x.abs()).max().unwrap();
        assert_eq!(norm, r.norm);
        assert!(norm <= bound, "n={n}: norm {norm}");
    }
}

fn c9_crc_order_13() {
    for name in ["sts13a.txt", "sts13b.txt"] {
        let s = fixture(name);
        let e = enumerate_equitable_bipartitions(&s, 2, None).unwrap();
        assert!(e.complete);
        assert_eq!(e.partitions.len(), 13, "{name}");
        let rank = binary_rank(&s) as u32;
        assert_eq!(rank, 13);
        assert_eq!(expected_count(13, rank).unwrap(), 13);
        let pencils: Vec<Vec<usize>> = (1..=13).map(|p| s.pencil(p)).collect();
        for part in &e.partitions {
            let side = part.side.members();
            let rest: Vec<usize> = (0..s.block_count()).filter(|b| !side.contains(b)).collect();
            assert!(pencils.iter().any(|p| *p == side || *p == rest), "{name}: {side:?}");
        }
    }
}

fn random_zero_sum(rng: &mut ChaCha8Rng, n: usize) -> PointVector {
    let mut u: Vec<Q> = (0..n - 1).map(|_| q_frac(rng.gen_range(-20..=20), rng.gen_range(1..=6))).collect();
    let s: Q = u.iter().sum();
    u.push(-s);
    PointVector(u)
}

fn c10_eigenspaces() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let systems = [fixture("sts13a.txt"), fixture("sts13b.txt"), hamming_sts(4).unwrap(), fixture("sts15_pg32.txt")];
    for i in 0..100 {
        let s = &systems[i % systems.len()];
        let n = s.order();
        let theta1 = (n as i64 - 9) / 2;
        let u = random_zero_sum(&mut rng, n as usize);
        let v = lift(&u, LiftTarget::Sts(s)).unwrap();
        assert!(is_eigen(s, &v.0, theta1), "sample {i}");
        let full = lift(&u, LiftTarget::Johnson { n, k: 3 }).unwrap();
        assert_eq!(restrict(&full, s).unwrap(), v, "sample {i}");
    }
    let bases: Vec<(&SteinerTripleSystem, Vec<BlockVector>)> =
        systems.iter().map(|s| (s, null_space_basis(&incidence_matrix(s)))).collect();
    for i in 0..100 {
        let (s, basis) = &bases[i % bases.len()];
        assert!(!basis.is_empty());
        let mut v = vec![q(0); s.block_count()];
        for b in basis {
            let c = q(rng.gen_range(-9..=9));
            for (x, y) in v.iter_mut().zip(&b.0) {
                *x += &c * y;
            }
        }
        assert!(is_eigen(s, &v, -3), "sample {i}");
    }
}

#[test]
fn acceptance() {
    let criteria: [(&str, u64, fn()); 10] = [
        ("1 closed form for J(n,3), n in 64..=100", 10, c1_jn3_closed_form),
        ("2 T(3), N(64,3), N(63,3) and witnesses", 1, c2_bound_machinery),
        ("3 upper constructions, k in 3..=5, n <= 60", 30, c3_upper_constructions),
        ("4 order-15 doubled Fano: no 2-flow, a 3-flow", 60, c4_order_15_flows),
        ("5 Fano has no flow", 1, c5_fano),
        ("6 resolvable flows on STS(9) and STS(15)", 120, c6_resolvable),
        ("7 5-flows on doubled bose(17)", 60, c7_am_five_flow),
        ("8 first eigenvectors of norm <= 3 / <= 4", 30, c8_first_eigenvectors),
        ("9 equitable bipartitions of both STS(13)", 300, c9_crc_order_13),
        ("10 eigenspace correspondences", 30, c10_eigenspaces),
    ];
    let mut failed = Vec::new();
    for (name, limit, f) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f));
        let elapsed = start.elapsed();
        let line = match (&outcome, elapsed <= Duration::from_secs(limit)) {
            (Ok(()), true) => format!("PASS  {name}  ({:.2}s, limit {limit}s)", elapsed.as_secs_f64()),
            (Ok(()), false) => format!("FAIL  {name}  (too slow: {:.2}s, limit {limit}s)", elapsed.as_secs_f64()),
            (Err(e), _) => {
                let msg = e.downcast_ref::<String>().map(String::as_str).or(e.downcast_ref::<&str>().copied());
                let first = msg.unwrap_or("panic").lines().next().unwrap_or_default().to_string();
                format!("FAIL  {name}  ({:.2}s): {first}", elapsed.as_secs_f64())
            }
        };
        if !line.starts_with("PASS") {
            failed.push(name);
        }
        let _ = writeln!(std::io::stdout().lock(), "acceptance: {line}");
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
