use super::cert::{FlowCertificate, FlowKind};
use crate::designs::SteinerTripleSystem;
use crate::error::Result;

/// Smallest-value flow with value at most `max_value`, by exhaustive search.
///
/// Values `K = 2, 3, …` are tried in turn with entries in `±{1..K−1}`, so
/// `None` proves that no flow of value `≤ max_value` exists.
pub fn min_flow_search(sts: &SteinerTripleSystem, max_value: i64) -> Result<Option<FlowCertificate>> {
    for k in 2..=max_value {
        if let Some(v) = search_value(sts, k) {
            return FlowCertificate::new(sts, v, FlowKind::Search).map(Some);
        }
    }
    Ok(None)
}

/// A flow with entries in `±{1..k−1}`, if one exists.
pub fn search_value(sts: &SteinerTripleSystem, k: i64) -> Option<Vec<i64>> {
    let n = sts.order() as usize;
    let pb = sts.point_blocks();
    let mut st = State {
        blocks: sts.blocks().iter().map(|t| t.0.map(|p| p as usize)).collect(),
        pb,
        v: vec![0; sts.block_count()],
        partial: vec![0; n + 1],
        open: vec![sts.replication(); n + 1],
        top: k - 1,
        symmetric: true,
    };
    st.open[0] = 0;
    st.rec().then_some(st.v)
}

struct State {
    blocks: Vec<[usize; 3]>,
    pb: Vec<Vec<usize>>,
    v: Vec<i64>,
    partial: Vec<i64>,
    open: Vec<usize>,
    top: i64,
    /// No free choice made yet, so the sign of the next one may be fixed.
    symmetric: bool,
}

impl State {
    fn feasible(&self, p: usize) -> bool {
        let (m, s) = (self.open[p] as i64, self.partial[p]);
        match m {
            0 => s == 0,
            1 => s != 0 && s.abs() <= self.top,
            _ => s.abs() <= m * self.top && (self.top > 1 || (s + m) % 2 == 0),
        }
    }

    fn assign(&mut self, t: usize, x: i64) -> bool {
        self.v[t] = x;
        let mut ok = true;
        for p in self.blocks[t] {
            self.partial[p] += x;
            self.open[p] -= 1;
            ok &= self.feasible(p);
        }
        ok
    }

    fn unassign(&mut self, t: usize) {
        let x = self.v[t];
        self.v[t] = 0;
        for p in self.blocks[t] {
            self.partial[p] -= x;
            self.open[p] += 1;
        }
    }

    fn rec(&mut self) -> bool {
        // most constrained point: fewest unassigned blocks
        let Some(p) = (1..self.open.len()).filter(|&p| self.open[p] > 0).min_by_key(|&p| self.open[p]) else {
            return true;
        };
        let t = *self.pb[p].iter().find(|&&t| self.v[t] == 0).expect("open block");
        let candidates: Vec<i64> = if self.open[p] == 1 {
            vec![-self.partial[p]]
        } else {
            let mut c = Vec::with_capacity(2 * self.top as usize);
            for a in 1..=self.top {
                c.push(a);
                if !self.symmetric {
                    c.push(-a);
                }
            }
            c
        };
        let was_symmetric = self.symmetric;
        if self.open[p] > 1 {
            self.symmetric = false;
        }
        for x in candidates {
            if x == 0 || x.abs() > self.top {
                continue;
            }
            if self.assign(t, x) && self.rec() {
                return true;
            }
            self.unassign(t);
        }
        self.symmetric = was_symmetric;
        false
    }
}
