use serde::{Deserialize, Serialize};

use crate::designs::{Point, SteinerTripleSystem};
use crate::error::{Error, Result};
use crate::spectra::{block_graph, block_graph_eigenvalues, is_eigenvector_int};

/// How a certificate was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FlowKind {
    Resolvable,
    Am5,
    Search,
    /// A nowhere-zero first eigenvector rather than a flow.
    Firsteig,
    /// Checked but not produced by one of the constructions.
    Verified,
}

/// A verified nowhere-zero integer block vector.
///
/// For every kind except [`FlowKind::Firsteig`] the point sums vanish, so `v`
/// is a flow of value `‖v‖∞ + 1`. For `Firsteig` the vector is an eigenvector
/// of the block graph for the first nontrivial eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowCertificate {
    sts: SteinerTripleSystem,
    v: Vec<i64>,
    value: i64,
    kind: FlowKind,
}

#[derive(Serialize, Deserialize)]
struct CertJson {
    order: u32,
    blocks: Vec<[Point; 3]>,
    v: Vec<i64>,
    value: i64,
    kind: FlowKind,
}

impl FlowCertificate {
    /// Verifies `v` against `sts` and wraps it.
    pub fn new(sts: &SteinerTripleSystem, v: Vec<i64>, kind: FlowKind) -> Result<Self> {
        let value = match kind {
            FlowKind::Firsteig => check_first_eigen(sts, &v)?,
            _ => check_flow(sts, &v)?,
        };
        Ok(FlowCertificate { sts: sts.clone(), v, value, kind })
    }

    pub fn sts(&self) -> &SteinerTripleSystem {
        &self.sts
    }

    pub fn v(&self) -> &[i64] {
        &self.v
    }

    /// `‖v‖∞ + 1`.
    pub fn value(&self) -> i64 {
        self.value
    }

    pub fn kind(&self) -> FlowKind {
        self.kind
    }

    pub fn to_json(&self) -> String {
        let doc = CertJson {
            order: self.sts.order(),
            blocks: self.sts.raw_blocks(),
            v: self.v.clone(),
            value: self.value,
            kind: self.kind,
        };
        serde_json::to_string(&doc).expect("certificate serializes")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::from_str(&self.to_json()).expect("certificate serializes")
    }

    /// Parses and re-verifies a certificate.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: CertJson = serde_json::from_str(text)?;
        let sts = SteinerTripleSystem::new(doc.order, &doc.blocks)?;
        if sts.raw_blocks() != doc.blocks {
            return Err(Error::Precondition("certificate blocks are not in canonical order".into()));
        }
        let cert = FlowCertificate::new(&sts, doc.v, doc.kind)?;
        if cert.value != doc.value {
            return Err(Error::Invariant(format!("stated value {} but vector gives {}", doc.value, cert.value)));
        }
        Ok(cert)
    }
}

fn norm_value(v: &[i64]) -> i64 {
    v.iter().map(|x| x.abs()).max().unwrap_or(0) + 1
}

fn check_dims(sts: &SteinerTripleSystem, v: &[i64]) -> Result<()> {
    if v.len() != sts.block_count() {
        return Err(Error::Dimension { expected: sts.block_count(), actual: v.len() });
    }
    if let Some(index) = v.iter().position(|&x| x == 0) {
        return Err(Error::ZeroEntry { index });
    }
    Ok(())
}

fn check_flow(sts: &SteinerTripleSystem, v: &[i64]) -> Result<i64> {
    check_dims(sts, v)?;
    let mut sums = vec![0i64; sts.order() as usize + 1];
    for (t, &x) in sts.blocks().iter().zip(v) {
        for p in t.0 {
            sums[p as usize] += x;
        }
    }
    if let Some(p) = (1..sums.len()).find(|&p| sums[p] != 0) {
        return Err(Error::NonzeroPointSum { point: p as u32, sum: sums[p] });
    }
    if sts.order() > 7 {
        let g = block_graph(sts);
        if !is_eigenvector_int(&g, v, -3)? {
            return Err(Error::Invariant("flow is not a -3 eigenvector of the block graph".into()));
        }
    }
    Ok(norm_value(v))
}

fn check_first_eigen(sts: &SteinerTripleSystem, v: &[i64]) -> Result<i64> {
    check_dims(sts, v)?;
    let theta = block_graph_eigenvalues(sts.order())?.theta1;
    if !is_eigenvector_int(&block_graph(sts), v, theta)? {
        return Err(Error::Precondition(format!("vector is not a {theta} eigenvector of the block graph")));
    }
    Ok(norm_value(v))
}

/// Checks that `v` is a nowhere-zero flow of `sts`.
pub fn is_flow(sts: &SteinerTripleSystem, v: &[i64]) -> Result<FlowCertificate> {
    FlowCertificate::new(sts, v.to_vec(), FlowKind::Verified)
}
