use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::graph::BlockGraph;
use super::johnson::KSubsets;
use crate::designs::SteinerTripleSystem;
use crate::error::{Error, Result};
use crate::rational::{format_q, parse_q, Q};

macro_rules! exact_vector {
    ($name:ident, $what:literal) => {
        #[doc = concat!("Exact rational vector indexed by ", $what, ".")]
        #[derive(Clone, Debug, PartialEq, Eq, Hash)]
        pub struct $name(pub Vec<Q>);

        impl $name {
            pub fn from_ints(xs: &[i64]) -> Self {
                $name(xs.iter().map(|&x| Q::from_integer(x.into())).collect())
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn sum(&self) -> Q {
                self.0.iter().sum()
            }

            pub fn norm_inf(&self) -> Q {
                self.0.iter().map(|x| x.abs()).max().unwrap_or_else(Q::zero)
            }

            /// Every entry a nonzero integer.
            pub fn is_nzi(&self) -> bool {
                crate::rational::is_nzi(&self.0)
            }

            pub fn to_ints(&self) -> Option<Vec<i64>> {
                self.0.iter().map(crate::rational::to_i64).collect()
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_seq(self.0.iter().map(format_q))
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let raw = Vec::<String>::deserialize(d)?;
                raw.iter().map(|s| parse_q(s)).collect::<Result<Vec<_>>>().map($name).map_err(serde::de::Error::custom)
            }
        }
    };
}

exact_vector!(PointVector, "points `1..=n` (position `i−1` holds point `i`)");
exact_vector!(BlockVector, "blocks or `k`-subsets");

/// Where a point vector is lifted to.
#[derive(Clone, Copy, Debug)]
pub enum LiftTarget<'a> {
    Sts(&'a SteinerTripleSystem),
    Johnson { n: u32, k: u32 },
}

/// `Wᵀu`: the entry at a block (or `k`-subset) is the sum of `u` over its points.
pub fn lift(u: &PointVector, target: LiftTarget<'_>) -> Result<BlockVector> {
    let sum = u.sum();
    if !sum.is_zero() {
        return Err(Error::NonzeroSum(format_q(&sum)));
    }
    match target {
        LiftTarget::Sts(sts) => {
            if u.len() != sts.order() as usize {
                return Err(Error::Dimension { expected: sts.order() as usize, actual: u.len() });
            }
            Ok(BlockVector(sts.blocks().iter().map(|t| t.0.iter().map(|&p| &u.0[p as usize - 1]).sum()).collect()))
        }
        LiftTarget::Johnson { n, k } => {
            if u.len() != n as usize {
                return Err(Error::Dimension { expected: n as usize, actual: u.len() });
            }
            Ok(BlockVector(KSubsets::new(n, k).iter().map(|s| s.iter().map(|&p| &u.0[p as usize - 1]).sum()).collect()))
        }
    }
}

/// Keeps the entries of a `J(n,3)` vector that sit on blocks of `sts`.
pub fn restrict(v: &BlockVector, sts: &SteinerTripleSystem) -> Result<BlockVector> {
    let space = KSubsets::new(sts.order(), 3);
    if v.len() != space.count() {
        return Err(Error::Dimension { expected: space.count(), actual: v.len() });
    }
    Ok(BlockVector(sts.blocks().iter().map(|t| v.0[space.rank(&t.0)].clone()).collect()))
}

/// Exact `A v = θ v` for a nonzero `v`.
pub fn is_eigenvector(graph: &BlockGraph, v: &BlockVector, theta: i64) -> Result<bool> {
    if v.len() != graph.vertex_count() {
        return Err(Error::Dimension { expected: graph.vertex_count(), actual: v.len() });
    }
    if v.0.iter().all(Zero::is_zero) {
        return Ok(false);
    }
    let th = Q::from_integer(theta.into());
    Ok((0..v.len()).all(|x| {
        let s: Q = graph.neighbors(x).iter().map(|&y| &v.0[y]).sum();
        s == &th * &v.0[x]
    }))
}

pub fn is_eigenvector_int(graph: &BlockGraph, v: &[i64], theta: i64) -> Result<bool> {
    if v.len() != graph.vertex_count() {
        return Err(Error::Dimension { expected: graph.vertex_count(), actual: v.len() });
    }
    if v.iter().all(|&x| x == 0) {
        return Ok(false);
    }
    Ok(graph.apply_int(v).iter().zip(v).all(|(&av, &x)| av == theta * x))
}
