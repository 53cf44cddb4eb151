use std::collections::BTreeMap;

use proptest::prelude::*;
use stsflow::designs::{assmuss_mattson, bose, find_resolution, hamming_sts, read_sts};
use stsflow::flows::{
    am_five_flow, am_w, am_w_values, auxiliary_cycles, auxiliary_graph, find_h, first_eig_nzi, g_point_sums, g_values,
    is_flow, min_flow_search, resolvable_flow, search_value, FlowCertificate, FlowKind, GBlock, COVERING_FLOOR,
    T0_WEIGHT,
};
use stsflow::spectra::{block_graph_eigenvalues, lift, LiftTarget, PointVector};
use stsflow::{Error, SteinerTripleSystem, TauAssignment, Triple};

fn fixture(name: &str) -> SteinerTripleSystem {
    read_sts(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn fano() -> SteinerTripleSystem {
    hamming_sts(3).unwrap()
}

fn point_sums(sts: &SteinerTripleSystem, v: &[i64]) -> Vec<i64> {
    let mut s = vec![0; sts.order() as usize + 1];
    for (t, x) in sts.blocks().iter().zip(v) {
        for p in t.points() {
            s[p as usize] += x;
        }
    }
    s
}

/// `A v` with adjacency taken from block intersections.
fn adjacency_apply(sts: &SteinerTripleSystem, v: &[i64]) -> Vec<i64> {
    let b = sts.blocks();
    (0..b.len()).map(|i| (0..b.len()).filter(|&j| j != i && b[i].meets(&b[j])).map(|j| v[j]).sum()).collect()
}

/// Independent flow check: nowhere-zero, point sums zero, `A v = −3 v`.
fn assert_flow(sts: &SteinerTripleSystem, v: &[i64], value: i64) {
    assert_eq!(v.len(), sts.block_count());
    assert!(v.iter().all(|&x| x != 0));
    assert!(point_sums(sts, v).iter().all(|&x| x == 0));
    let av = adjacency_apply(sts, v);
    assert!(av.iter().zip(v).all(|(a, x)| *a == -3 * x));
    assert_eq!(v.iter().map(|x| x.abs()).max().unwrap() + 1, value);
}

#[test]
fn is_flow_examples() {
    let s9 = bose(3).unwrap();
    let res = find_resolution(&s9).unwrap();
    let mut v = vec![0i64; 12];
    for (ci, class) in res.classes.iter().enumerate() {
        for &b in class {
            v[b] = if ci < 2 { 1 } else { -1 };
        }
    }
    let c = is_flow(&s9, &v).unwrap();
    assert_eq!(c.value(), 2);
    assert_eq!(c.kind(), FlowKind::Verified);
    match is_flow(&fano(), &[1; 7]) {
        Err(Error::NonzeroPointSum { sum, .. }) => assert_eq!(sum, 3),
        other => panic!("{other:?}"),
    }
    let mut z = v.clone();
    z[4] = 0;
    assert!(matches!(is_flow(&s9, &z), Err(Error::ZeroEntry { index: 4 })));
    assert!(matches!(is_flow(&s9, &v[..3]), Err(Error::Dimension { .. })));
    let doubled: Vec<i64> = v.iter().map(|x| 2 * x).collect();
    assert_eq!(is_flow(&s9, &doubled).unwrap().value(), 2 + 1);
}

#[test]
fn resolvable_flows() {
    let s9 = bose(3).unwrap();
    let c = resolvable_flow(&s9, &find_resolution(&s9).unwrap()).unwrap();
    assert_eq!(c.value(), 2);
    assert_eq!(c.kind(), FlowKind::Resolvable);
    assert_flow(&s9, c.v(), 2);
    let h4 = hamming_sts(4).unwrap();
    let c = resolvable_flow(&h4, &find_resolution(&h4).unwrap()).unwrap();
    assert_eq!(c.value(), 3);
    assert_flow(&h4, c.v(), 3);
    let s21 = bose(7).unwrap();
    if let Some(res) = find_resolution(&s21) {
        let c = resolvable_flow(&s21, &res).unwrap();
        assert_flow(&s21, c.v(), c.value());
        assert_eq!(c.value(), 2);
    }
}

#[test]
fn g_value_identities() {
    let n = 9;
    let base = bose(3).unwrap();
    for (bi, t) in base.blocks().iter().enumerate() {
        for tau in [false, true] {
            let tau_all = TauAssignment::constant(base.block_count(), tau);
            let doubled = assmuss_mattson(&base, &tau_all).unwrap();
            // the four doubled triples lie in the doubled system
            for anchor in t.points() {
                for scale in [1, -1, -2, 2] {
                    let gb = GBlock { triple: *t, anchor, tau, scale };
                    let vals = g_values(&gb, n).unwrap();
                    for (q, _) in &vals {
                        assert!(doubled.index_of(q).is_some(), "block {bi}");
                    }
                    assert_eq!(vals.iter().filter(|(_, x)| *x == scale).count(), 2);
                    assert_eq!(vals.iter().filter(|(_, x)| *x == -scale).count(), 2);
                    let mut sums: BTreeMap<u32, i64> = BTreeMap::new();
                    for (q, x) in &vals {
                        for p in q.points() {
                            *sums.entry(p).or_default() += x;
                        }
                    }
                    assert_eq!(sums, g_point_sums(&gb, n).unwrap());
                    for (p, s) in sums {
                        let expect = if p == anchor {
                            2 * scale
                        } else if p == anchor + n {
                            -2 * scale
                        } else {
                            0
                        };
                        assert_eq!(s, expect, "anchor {anchor} tau {tau} scale {scale} point {p}");
                    }
                }
            }
        }
    }
    let bad = GBlock { triple: Triple([1, 1, 2]), anchor: 1, tau: false, scale: 1 };
    assert!(g_values(&bad, 9).is_err());
}

#[test]
fn w_sums_vanish() {
    for n in 13..=201u32 {
        if !matches!(n % 6, 1 | 3) {
            continue;
        }
        let w = am_w_values(n).unwrap();
        assert_eq!(w.len() as u32, (n - 1) / 2);
        assert_eq!(w.iter().sum::<i64>() + T0_WEIGHT, 0, "n={n}");
        assert!(w.iter().all(|x| matches!(x.abs(), 1 | 2)));
        if ((n - 1) / 2) % 2 == 1 {
            assert_eq!(w.iter().filter(|&&x| x == 2).count(), 1);
            assert_eq!(*w.last().unwrap(), 2);
        } else {
            assert!(w.iter().all(|&x| x != 2));
        }
    }
    let w49 = am_w_values(49).unwrap();
    assert_eq!(w49.iter().filter(|&&x| x == 1).count(), 13);
    assert_eq!(w49.iter().filter(|&&x| x == -1).count(), 11);
    assert!(am_w_values(51).unwrap().contains(&2));
}

#[test]
fn am_w_requires_normalized_t0() {
    let s = bose(3).unwrap();
    let t0 = s.blocks().iter().find(|t| t.contains(1)).copied().unwrap();
    assert!(am_w(&s, &t0).is_err());
}

#[test]
fn covering_functions() {
    assert!(find_h(&fano()).is_none());
    // fewer blocks than 4n: infeasible by counting
    for s in [bose(3).unwrap(), hamming_sts(4).unwrap(), bose(7).unwrap()] {
        assert!(s.block_count() < 4 * s.order() as usize);
        assert!(find_h(&s).is_none());
    }
    for s in [bose(9).unwrap(), bose(17).unwrap(), hamming_sts(5).unwrap()] {
        let h = find_h(&s).expect("covering function");
        assert_eq!(h.h.len(), s.block_count());
        let mut load = vec![0; s.order() as usize + 1];
        for (t, &p) in s.blocks().iter().zip(&h.h) {
            assert!(t.contains(p));
            load[p as usize] += 1;
        }
        assert!(load[1..].iter().all(|&l| l >= COVERING_FLOOR));
        h.check(&s, COVERING_FLOOR).unwrap();
    }
}

#[test]
fn am_five_flow_on_order_27_base() {
    let base = bose(9).unwrap();
    for tau in [TauAssignment::constant(base.block_count(), false), TauAssignment::seeded(base.block_count(), 11)] {
        let r = am_five_flow(&base, &tau).unwrap();
        let s = assmuss_mattson(&base, &tau).unwrap();
        assert_eq!(r.certificate.sts(), &s);
        assert!(r.certificate.value() <= 5);
        assert_flow(&s, r.certificate.v(), r.certificate.value());
        let d = &r.diagnostics;
        assert_eq!(d.w_sum, 0);
        assert_eq!(d.alpha_sum, 0);
        assert!(d.alphas.iter().all(|a| matches!(a.abs(), 2 | 4)));
        assert!(d.m_sizes.iter().all(|&m| m >= 2));
        assert_eq!(d.t0, Triple::new(2, 4, 6));
    }
    assert!(am_five_flow(&fano(), &TauAssignment::constant(7, false)).is_err());
}

#[test]
fn first_eigenvectors() {
    for s in [bose(3).unwrap(), fixture("sts13a.txt"), fixture("sts13b.txt"), bose(7).unwrap(), bose(11).unwrap()] {
        let r = first_eig_nzi(&s).unwrap();
        let n = s.order();
        assert!(r.v.iter().all(|&x| x != 0));
        assert_eq!(r.u.iter().sum::<i64>(), 0);
        let th1 = block_graph_eigenvalues(n).unwrap().theta1;
        let av = adjacency_apply(&s, &r.v);
        assert!(av.iter().zip(&r.v).all(|(a, x)| *a == th1 * x));
        let lifted = lift(&r.point_vector(), LiftTarget::Sts(&s)).unwrap();
        assert_eq!(lifted, stsflow::spectra::BlockVector::from_ints(&r.v));
        if n % 4 == 1 {
            assert!(r.norm <= 3, "n={n}");
        } else {
            assert!(r.norm <= 4, "n={n}");
        }
        let c = r.certificate(&s).unwrap();
        assert_eq!(c.kind(), FlowKind::Firsteig);
        assert_eq!(c.value(), r.norm + 1);
    }
    for s in [hamming_sts(4).unwrap(), fixture("sts15_switch2.txt"), bose(5).unwrap()] {
        let r = first_eig_nzi(&s).unwrap();
        assert_eq!(r.norm, 4, "order {}", s.order());
    }
    assert!(first_eig_nzi(&fano()).is_err());
}

#[test]
fn auxiliary_graph_cycles_alternate() {
    for s in [hamming_sts(4).unwrap(), bose(5).unwrap(), bose(9).unwrap(), fixture("sts15_switch2.txt")] {
        let block = s.blocks()[0];
        let [_, b, c] = block.points();
        let nb = auxiliary_graph(&s, &block).unwrap();
        let cycles = auxiliary_cycles(&nb).unwrap();
        let covered: usize = cycles.iter().map(Vec::len).sum();
        assert_eq!(covered, s.order() as usize - 3);
        for cyc in &cycles {
            assert!(cyc.len() % 2 == 0 && cyc.len() >= 4);
            for (i, &x) in cyc.iter().enumerate() {
                let y = cyc[(i + 1) % cyc.len()];
                let via = if i % 2 == 0 { b } else { c };
                assert!(s.index_of(&Triple::new(x, y, via)).is_some(), "edge {x}-{y} via {via}");
            }
        }
    }
}

#[test]
fn first_eig_other_sign_reading_fails() {
    // setting the first point of the least block to +1 instead of −1
    let s = hamming_sts(4).unwrap();
    let r = first_eig_nzi(&s).unwrap();
    let a = s.blocks()[0].points()[0] as usize;
    assert_eq!(r.u[a - 1], -1);
    let mut u = r.u.clone();
    u[a - 1] = 1;
    assert!(matches!(lift(&PointVector::from_ints(&u), LiftTarget::Sts(&s)), Err(Error::NonzeroSum(_))));
    let v: Vec<i64> = s.blocks().iter().map(|t| t.points().iter().map(|&p| u[p as usize - 1]).sum()).collect();
    let av = adjacency_apply(&s, &v);
    assert!(!av.iter().zip(&v).all(|(x, y)| *x == 3 * y));
}

#[test]
fn search_small_systems() {
    assert!(min_flow_search(&fano(), 5).unwrap().is_none());
    let s9 = bose(3).unwrap();
    let c = min_flow_search(&s9, 4).unwrap().unwrap();
    assert_eq!(c.value(), 2);
    assert_eq!(c.kind(), FlowKind::Search);
    assert_flow(&s9, c.v(), 2);
    // replication 7 is odd: ±1 entries cannot cancel at a point
    for s in [hamming_sts(4).unwrap(), fixture("sts15_switch2.txt")] {
        assert!(search_value(&s, 2).is_none());
    }
}

/// All `±1` vectors on the 12 blocks of STS(9) that are flows.
fn two_flow_count_oracle(s: &SteinerTripleSystem) -> usize {
    let b = s.block_count();
    (0u32..(1 << b))
        .filter(|mask| {
            let v: Vec<i64> = (0..b).map(|i| if mask >> i & 1 == 1 { 1 } else { -1 }).collect();
            point_sums(s, &v)[1..].iter().all(|&x| x == 0)
        })
        .count()
}

#[test]
fn search_agrees_with_exhaustive_two_flows() {
    let s9 = bose(3).unwrap();
    assert!(two_flow_count_oracle(&s9) > 0);
    assert!(search_value(&s9, 2).is_some());
    let s13 = fixture("sts13a.txt");
    let found = search_value(&s13, 2);
    if let Some(v) = &found {
        assert_flow(&s13, v, 2);
    }
}

#[test]
fn search_is_monotone() {
    let s13 = fixture("sts13a.txt");
    let m = min_flow_search(&s13, 5).unwrap().expect("order 13 has a small flow");
    assert_flow(&s13, m.v(), m.value());
    for k in m.value()..=5 {
        let c = min_flow_search(&s13, k).unwrap().unwrap();
        assert_eq!(c.value(), m.value());
    }
    if m.value() > 2 {
        assert!(min_flow_search(&s13, m.value() - 1).unwrap().is_none());
    }
}

#[test]
fn certificate_round_trip() {
    let s9 = bose(3).unwrap();
    let c = resolvable_flow(&s9, &find_resolution(&s9).unwrap()).unwrap();
    let text = c.to_json();
    let back = FlowCertificate::from_json(&text).unwrap();
    assert_eq!(back, c);
    assert_eq!(back.to_json(), text);
    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    doc["value"] = serde_json::json!(5);
    assert!(FlowCertificate::from_json(&doc.to_string()).is_err());
    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    doc["v"][0] = serde_json::json!(0);
    assert!(FlowCertificate::from_json(&doc.to_string()).is_err());
    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    let b0 = doc["blocks"][0].clone();
    doc["blocks"][0] = doc["blocks"][1].clone();
    doc["blocks"][1] = b0;
    assert!(FlowCertificate::from_json(&doc.to_string()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn scaled_flows_stay_flows(scale in 1i64..6, which in 0usize..3) {
        let (s, c) = match which {
            0 => {
                let s = bose(3).unwrap();
                let c = resolvable_flow(&s, &find_resolution(&s).unwrap()).unwrap();
                (s, c)
            }
            1 => {
                let s = hamming_sts(4).unwrap();
                let c = resolvable_flow(&s, &find_resolution(&s).unwrap()).unwrap();
                (s, c)
            }
            _ => {
                let base = bose(9).unwrap();
                let tau = TauAssignment::seeded(base.block_count(), scale as u64);
                let r = am_five_flow(&base, &tau).unwrap();
                (r.certificate.sts().clone(), r.certificate)
            }
        };
        let scaled: Vec<i64> = c.v().iter().map(|x| scale * x).collect();
        let d = is_flow(&s, &scaled).unwrap();
        prop_assert_eq!(d.value(), scale * (c.value() - 1) + 1);
        let negated: Vec<i64> = c.v().iter().map(|x| -x).collect();
        prop_assert_eq!(is_flow(&s, &negated).unwrap().value(), c.value());
    }

    #[test]
    fn am_flows_for_random_tau(seed in any::<u64>()) {
        let base = bose(9).unwrap();
        let tau = TauAssignment::seeded(base.block_count(), seed);
        let r = am_five_flow(&base, &tau).unwrap();
        prop_assert!(r.certificate.value() <= 5);
        let s = assmuss_mattson(&base, &tau).unwrap();
        prop_assert!(point_sums(&s, r.certificate.v()).iter().all(|&x| x == 0));
    }
}
