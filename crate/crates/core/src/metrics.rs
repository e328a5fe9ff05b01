//! Per-subset edge counters: induced, covered and cut edges.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("vertex set over {set} vertices used with a graph on {graph} vertices")]
pub struct SizeMismatch {
    pub set: usize,
    pub graph: usize,
}

/// All three counters of one subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetMetrics {
    /// Edges with both endpoints in the set.
    pub induced: i64,
    /// Edges with at least one endpoint in the set.
    pub covered: i64,
    /// Edges with exactly one endpoint in the set.
    pub cut: i64,
    pub size: usize,
}

impl SubsetMetrics {
    pub fn of(g: &Graph, s: &VertexSet) -> Result<Self, SizeMismatch> {
        if s.ambient() != g.n() {
            return Err(SizeMismatch {
                set: s.ambient(),
                graph: g.n(),
            });
        }
        Ok(Self::of_bits(g, s.bits()))
    }

    /// Single scan over the members' adjacency rows. `bits` must lie
    /// within the vertex range of `g`.
    #[inline]
    pub(crate) fn of_bits(g: &Graph, bits: u64) -> Self {
        let mut inside = 0i64;
        let mut degree_sum = 0i64;
        let mut rest = bits;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let row = g.neighbors(v);
            inside += (row & bits).count_ones() as i64;
            degree_sum += row.count_ones() as i64;
            rest &= rest - 1;
        }
        let induced = inside / 2;
        Self {
            induced,
            covered: degree_sum - induced,
            cut: degree_sum - inside,
            size: bits.count_ones() as usize,
        }
    }
}

pub fn induced_edges(g: &Graph, s: &VertexSet) -> Result<i64, SizeMismatch> {
    SubsetMetrics::of(g, s).map(|x| x.induced)
}

pub fn covered_edges(g: &Graph, s: &VertexSet) -> Result<i64, SizeMismatch> {
    SubsetMetrics::of(g, s).map(|x| x.covered)
}

pub fn cut_edges(g: &Graph, s: &VertexSet) -> Result<i64, SizeMismatch> {
    SubsetMetrics::of(g, s).map(|x| x.cut)
}
