//! Exhaustive catalogs of small graphs up to isomorphism.
//!
//! Used to build test corpora ("every graph on at most 7 vertices"). The
//! canonical form is a plain search over vertex orderings, restricted to
//! orderings that respect a degree-based refinement and pruned on the
//! adjacency-code prefix. Fine for n <= 8, hopeless much beyond that.

use std::collections::BTreeMap;

use super::{Graph, GraphError};

/// Largest order whose upper triangle fits in one `u64` code.
const MAX_CANONICAL_ORDER: usize = 11;
/// Largest order `all_graphs` will enumerate.
pub const MAX_CATALOG_ORDER: usize = 8;

struct Search<'a> {
    g: &'a Graph,
    total_bits: u32,
    class_of_position: Vec<u64>,
    class_of_vertex: Vec<u64>,
    at: Vec<usize>,
    best: Option<u64>,
}

impl Search<'_> {
    fn prefix(&self, code: u64, placed: usize) -> u64 {
        let k = (placed * placed.saturating_sub(1) / 2) as u32;
        if k == 0 {
            0
        } else {
            code >> (self.total_bits - k)
        }
    }

    fn place(&mut self, pos: usize, used: u64, code: u64) {
        let n = self.g.n();
        if pos == n {
            if self.best.is_none_or(|b| code > b) {
                self.best = Some(code);
            }
            return;
        }
        let base = (pos * pos.saturating_sub(1) / 2) as u32;
        for v in 0..n {
            if used >> v & 1 == 1 || self.class_of_vertex[v] != self.class_of_position[pos] {
                continue;
            }
            let mut next = code;
            for i in 0..pos {
                if self.g.has_edge(self.at[i], v) {
                    next |= 1 << (self.total_bits - 1 - (base + i as u32));
                }
            }
            if let Some(best) = self.best {
                if self.prefix(next, pos + 1) < self.prefix(best, pos + 1) {
                    continue;
                }
            }
            self.at[pos] = v;
            self.place(pos + 1, used | 1 << v, next);
        }
    }
}

fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    let invariant: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = (0..n)
                .filter(|&u| g.has_edge(u, v))
                .map(|u| g.degree(u))
                .collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    let mut distinct = invariant.clone();
    distinct.sort();
    distinct.dedup();
    let class_of_vertex: Vec<u64> = invariant
        .iter()
        .map(|inv| distinct.binary_search(inv).unwrap() as u64)
        .collect();
    let mut class_of_position = class_of_vertex.clone();
    class_of_position.sort_unstable();

    let mut search = Search {
        g,
        total_bits: (n * (n - 1) / 2) as u32,
        class_of_position,
        class_of_vertex,
        at: vec![0; n],
        best: None,
    };
    search.place(0, 0, 0);
    search.best.expect("at least one ordering exists")
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = n * (n - 1) / 2;
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Graph::from_rows(adj)
}

/// A relabelling of `g` that is identical for all graphs isomorphic to `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph, GraphError> {
    if g.n() > MAX_CANONICAL_ORDER {
        return Err(GraphError::InvalidParameter(format!(
            "canonical form supports at most {MAX_CANONICAL_ORDER} vertices, got {}",
            g.n()
        )));
    }
    Ok(graph_from_code(g.n(), canonical_code(g)))
}

/// One representative of every isomorphism class of graphs on `n`
/// vertices, in a fixed order.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n == 0 || n > MAX_CATALOG_ORDER {
        return Err(GraphError::InvalidParameter(format!(
            "catalog order must be in 1..={MAX_CATALOG_ORDER}, got {n}"
        )));
    }
    let mut level: BTreeMap<u64, Graph> = BTreeMap::new();
    level.insert(0, Graph::from_rows(vec![0]));
    for k in 1..n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for nbrs in 0u64..1 << k {
                let mut adj: Vec<u64> = (0..k)
                    .map(|v| g.neighbors(v) | (nbrs >> v & 1) << k)
                    .collect();
                adj.push(nbrs);
                let h = Graph::from_rows(adj);
                let code = canonical_code(&h);
                next.entry(code)
                    .or_insert_with(|| graph_from_code(k + 1, code));
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}
