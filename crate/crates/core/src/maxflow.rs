//! Dinic's maximum flow on small integer networks.

use std::collections::VecDeque;

#[derive(Clone, Debug)]
struct Edge {
    to: usize,
    cap: i64,
}

/// A directed network with integer capacities.
#[derive(Clone, Debug, Default)]
pub struct FlowNetwork {
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
    original: Vec<i64>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork { edges: Vec::new(), adj: vec![Vec::new(); nodes], original: Vec::new() }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    /// Adds `from → to` and returns its id.
    pub fn add_edge(&mut self, from: usize, to: usize, cap: i64) -> usize {
        let id = self.edges.len();
        self.edges.push(Edge { to, cap });
        self.edges.push(Edge { to: from, cap: 0 });
        self.adj[from].push(id);
        self.adj[to].push(id + 1);
        self.original.push(cap);
        id
    }

    /// Flow currently routed through edge `id`.
    pub fn flow(&self, id: usize) -> i64 {
        self.original[id / 2] - self.edges[id].cap
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let n = self.adj.len();
        let mut total = 0;
        loop {
            let mut level = vec![usize::MAX; n];
            level[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &e in &self.adj[x] {
                    let y = self.edges[e].to;
                    if self.edges[e].cap > 0 && level[y] == usize::MAX {
                        level[y] = level[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            if level[t] == usize::MAX {
                return total;
            }
            let mut next = vec![0usize; n];
            loop {
                let pushed = self.augment(s, t, i64::MAX, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }

    fn augment(&mut self, x: usize, t: usize, limit: i64, level: &[usize], next: &mut [usize]) -> i64 {
        if x == t {
            return limit;
        }
        while next[x] < self.adj[x].len() {
            let e = self.adj[x][next[x]];
            let y = self.edges[e].to;
            if self.edges[e].cap > 0 && level[y] == level[x] + 1 {
                let got = self.augment(y, t, limit.min(self.edges[e].cap), level, next);
                if got > 0 {
                    self.edges[e].cap -= got;
                    self.edges[e ^ 1].cap += got;
                    return got;
                }
            }
            next[x] += 1;
        }
        0
    }
}
