//! Simple undirected graphs on at most 64 vertices, stored as per-vertex
//! neighbour bitsets.

mod catalog;
mod format;
mod generators;
mod spec;
mod vertex_set;

pub use catalog::{all_graphs, canonical_form};
pub use format::{encode_graph6, parse_dimacs, parse_edge_list, parse_graph6, read_graph};
pub use generators::{
    complete, cycle, empty, hypercube, path, random_connected, random_graph, random_regular, star,
    RESAMPLE_BUDGET,
};
pub use spec::{mix_seed, parse_mix, GeneratorSpec, SpecError};
pub use vertex_set::VertexSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hard representation limit: one `u64` word per adjacency row.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("{n} vertices exceeds the representation limit of {MAX_VERTICES}")]
    TooManyVertices { n: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("{0}")]
    InvalidParameter(String),
    #[error("no simple graph found after {attempts} attempts")]
    ResampleBudgetExhausted { attempts: usize },
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    m: usize,
    degrees: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSummary {
    pub min_degree: usize,
    pub max_degree: usize,
    pub is_regular: bool,
    /// Non-increasing.
    pub degree_sequence: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one; self-loops are rejected.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { v: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { v: u });
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Self::from_rows(adj))
    }

    /// `rows` must already be symmetric and loop-free.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        let degrees: Vec<usize> = adj.iter().map(|r| r.count_ones() as usize).collect();
        let m = degrees.iter().sum::<usize>() / 2;
        let g = Self {
            n: adj.len(),
            adj,
            m,
            degrees,
        };
        debug_assert!(g.check_invariants());
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Neighbour bitset of `v`.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            let mut higher = self.adj[u] & !low_mask(u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                out.push((u, v));
                higher &= higher - 1;
            }
        }
        out
    }

    /// Bitmask with one bit per vertex.
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.degrees.windows(2).all(|w| w[0] == w[1])
    }

    pub fn degree_summary(&self) -> DegreeSummary {
        let mut degree_sequence = self.degrees.clone();
        degree_sequence.sort_unstable_by(|a, b| b.cmp(a));
        let max_degree = degree_sequence.first().copied().unwrap_or(0);
        let min_degree = degree_sequence.last().copied().unwrap_or(0);
        DegreeSummary {
            min_degree,
            max_degree,
            is_regular: min_degree == max_degree,
            degree_sequence,
        }
    }

    pub fn complement(&self) -> Self {
        let all = self.vertex_mask();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & all & !(1u64 << v))
            .collect();
        Self::from_rows(adj)
    }

    /// Breadth-first search from vertex 0.
    pub fn is_connected(&self) -> bool {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                next |= self.adj[v];
                f &= f - 1;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.vertex_mask()
    }

    /// Applies `perm` (old label -> new label).
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Self::from_rows(adj)
    }

    /// Symmetric adjacency, no loops, cached counts agree with the rows.
    pub fn check_invariants(&self) -> bool {
        let all = self.vertex_mask();
        let rows_ok = (0..self.n).all(|v| {
            let row = self.adj[v];
            row & !all == 0
                && row >> v & 1 == 0
                && (0..self.n).all(|u| (row >> u & 1) == (self.adj[u] >> v & 1))
                && self.degrees[v] == row.count_ones() as usize
        });
        let degree_sum: usize = self.degrees.iter().sum();
        rows_ok && degree_sum.is_multiple_of(2) && self.m * 2 == degree_sum
    }
}

pub(crate) fn check_order(n: usize) -> Result<(), GraphError> {
    if n == 0 {
        Err(GraphError::NoVertices)
    } else if n > MAX_VERTICES {
        Err(GraphError::TooManyVertices { n })
    } else {
        Ok(())
    }
}

pub(crate) fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}
