use std::collections::VecDeque;

use crate::designs::{BitRow, SteinerTripleSystem};
use crate::error::{Error, Result};

/// Block intersection graph: one vertex per block, edges between blocks that
/// share a point.
#[derive(Clone, Debug)]
pub struct BlockGraph {
    adj: Vec<BitRow>,
    neighbors: Vec<Vec<usize>>,
}

pub fn block_graph(sts: &SteinerTripleSystem) -> BlockGraph {
    let b = sts.block_count();
    let mut adj = vec![BitRow::zeros(b); b];
    for blocks in sts.point_blocks().iter().skip(1) {
        for &x in blocks {
            for &y in blocks {
                if x != y {
                    adj[x].set(y);
                }
            }
        }
    }
    BlockGraph::from_rows(adj)
}

impl BlockGraph {
    pub fn from_rows(adj: Vec<BitRow>) -> Self {
        let neighbors = adj.iter().map(|r| r.iter_ones().collect()).collect();
        BlockGraph { adj, neighbors }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn is_adjacent(&self, x: usize, y: usize) -> bool {
        self.adj[x].get(y)
    }

    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.neighbors[x]
    }

    pub fn row(&self, x: usize) -> &BitRow {
        &self.adj[x]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.neighbors[x].len()
    }

    /// `Some(k)` if every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        (0..self.vertex_count()).all(|x| self.degree(x) == k).then_some(k)
    }

    /// `(k, λ, μ)` when the graph is strongly regular.
    pub fn srg_parameters(&self) -> Option<(usize, usize, usize)> {
        let k = self.regular_degree()?;
        let (mut lambda, mut mu) = (None, None);
        for x in 0..self.vertex_count() {
            for y in x + 1..self.vertex_count() {
                let common = self.adj[x].and_count(&self.adj[y]);
                let slot = if self.is_adjacent(x, y) { &mut lambda } else { &mut mu };
                match *slot {
                    None => *slot = Some(common),
                    Some(c) if c != common => return None,
                    _ => {}
                }
            }
        }
        Some((k, lambda.unwrap_or(0), mu.unwrap_or(0)))
    }

    /// Exact integer matrix-vector product.
    pub fn apply_int(&self, v: &[i64]) -> Vec<i64> {
        self.neighbors.iter().map(|ns| ns.iter().map(|&y| v[y]).sum()).collect()
    }
}

/// BFS layers `C_0 = C, C_1, …, C_ρ` around a vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistancePartition {
    pub cells: Vec<Vec<usize>>,
    pub layer_of: Vec<usize>,
}

impl DistancePartition {
    pub fn covering_radius(&self) -> usize {
        self.cells.len() - 1
    }
}

pub fn distance_partition(graph: &BlockGraph, code: &[usize]) -> Result<DistancePartition> {
    let v = graph.vertex_count();
    let mut layer = vec![usize::MAX; v];
    let mut queue = VecDeque::new();
    for &c in code {
        if c >= v {
            return Err(Error::Precondition(format!("vertex {c} out of range")));
        }
        if layer[c] == usize::MAX {
            layer[c] = 0;
            queue.push_back(c);
        }
    }
    if queue.is_empty() || queue.len() == v {
        return Err(Error::Precondition("code must be a nonempty proper vertex subset".into()));
    }
    while let Some(x) = queue.pop_front() {
        for &y in graph.neighbors(x) {
            if layer[y] == usize::MAX {
                layer[y] = layer[x] + 1;
                queue.push_back(y);
            }
        }
    }
    if layer.contains(&usize::MAX) {
        return Err(Error::Precondition("graph is disconnected".into()));
    }
    let rho = *layer.iter().max().unwrap_or(&0);
    let mut cells = vec![Vec::new(); rho + 1];
    for (x, &l) in layer.iter().enumerate() {
        cells[l].push(x);
    }
    Ok(DistancePartition { cells, layer_of: layer })
}
