//! Depth-first subset extension with degree-prefix bounds.
//!
//! For a partial set `S`, remaining budget `r` and candidate pool `C`, let
//! `a(v) = |N(v) ∩ S|` and `b(v) = |N(v) ∩ C|`. Adding a set `R ⊆ C` of
//! size `r` changes the counters by
//!
//! ```text
//! e:  Σ_R a(v)            + e(R)
//! vc: Σ_R (deg v - a(v))  - e(R)
//! c:  Σ_R (deg v - 2a(v)) - 2 e(R)
//! ```
//!
//! with `0 <= 2 e(R) <= Σ_R min(b(v), r - 1)`. Each bound takes the `r`
//! best per-vertex scores, computed in doubled units so the halves stay
//! integral.

use rayon::prelude::*;

use super::{
    mirror_upper_half, searched_sizes, Counter, MetricKind, Profile, Provenance, Sense,
    SolverConfig, SolverError,
};
use crate::graph::{Graph, VertexSet};

struct Search<'a> {
    g: &'a Graph,
    kind: MetricKind,
    size: usize,
    /// Branching order.
    order: Vec<usize>,
    best: i64,
    best_bits: u64,
    scores: Vec<i64>,
}

impl Search<'_> {
    /// Doubled optimistic gain of adding `v` to the partial set.
    fn score(&self, v: usize, inside: u64, pool: u64, r: usize) -> i64 {
        let deg = self.g.degree(v) as i64;
        let a = (self.g.neighbors(v) & inside).count_ones() as i64;
        let slack = ((self.g.neighbors(v) & pool).count_ones() as i64).min(r as i64 - 1);
        match (self.kind.counter, self.kind.sense) {
            (Counter::Induced, Sense::Max) => 2 * a + slack,
            (Counter::Induced, Sense::Min) => 2 * a,
            (Counter::Covered, Sense::Max) => 2 * (deg - a),
            (Counter::Covered, Sense::Min) => 2 * (deg - a) - slack,
            (Counter::Cut, Sense::Max) => 2 * (deg - 2 * a),
            (Counter::Cut, Sense::Min) => 2 * (deg - 2 * a) - 2 * slack,
        }
    }

    /// Whether some completion could strictly beat the incumbent.
    fn promising(&mut self, inside: u64, pool: u64, r: usize, current: i64) -> bool {
        let mut scores = std::mem::take(&mut self.scores);
        scores.clear();
        let mut rest = pool;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            scores.push(self.score(v, inside, pool, r));
            rest &= rest - 1;
        }
        match self.kind.sense {
            Sense::Max => scores.select_nth_unstable_by(r - 1, |a, b| b.cmp(a)),
            Sense::Min => scores.select_nth_unstable(r - 1),
        };
        let optimistic = 2 * current + scores[..r].iter().sum::<i64>();
        self.scores = scores;
        self.kind.sense.improves(optimistic, 2 * self.best)
    }

    fn descend(&mut self, pos: usize, inside: u64, count: usize) {
        let r = self.size - count;
        if r == 0 {
            let value = self.kind.evaluate_bits(self.g, inside);
            if self.kind.sense.improves(value, self.best) {
                self.best = value;
                self.best_bits = inside;
            }
            return;
        }
        let pool = self.order[pos..].iter().fold(0u64, |m, &v| m | 1 << v);
        if (pool.count_ones() as usize) < r {
            return;
        }
        let current = self.kind.evaluate_bits(self.g, inside);
        if !self.promising(inside, pool, r, current) {
            return;
        }
        let v = self.order[pos];
        self.descend(pos + 1, inside | 1 << v, count + 1);
        self.descend(pos + 1, inside, count);
    }

    /// Incumbent from adding the best marginal vertex one at a time.
    fn greedy(&mut self) {
        let all = self.g.vertex_mask();
        let mut bits = 0u64;
        for _ in 0..self.size {
            let mut pick: Option<(i64, usize)> = None;
            let mut rest = all & !bits;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                let value = self.kind.evaluate_bits(self.g, bits | 1 << v);
                if pick.is_none_or(|(best, _)| self.kind.sense.improves(value, best)) {
                    pick = Some((value, v));
                }
                rest &= rest - 1;
            }
            bits |= 1 << pick.expect("size <= n").1;
        }
        self.best = self.kind.evaluate_bits(self.g, bits);
        self.best_bits = bits;
    }
}

fn solve(g: &Graph, kind: MetricKind, size: usize) -> (i64, u64) {
    let mut order: Vec<usize> = (0..g.n()).collect();
    match kind.sense {
        Sense::Max => order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v))),
        Sense::Min => order.sort_by_key(|&v| g.degree(v)),
    }
    let mut search = Search {
        g,
        kind,
        size,
        order,
        best: 0,
        best_bits: 0,
        scores: Vec::with_capacity(g.n()),
    };
    search.greedy();
    search.descend(0, 0, 0);
    (search.best, search.best_bits)
}

/// Same values as the exhaustive oracle; witnesses are whatever the search
/// found first.
pub fn profile_branch_bound(
    g: &Graph,
    kind: MetricKind,
    config: &SolverConfig,
) -> Result<Profile, SolverError> {
    config.admit(g)?;
    let n = g.n();
    let solved: Vec<(i64, VertexSet)> = searched_sizes(kind, n)
        .into_par_iter()
        .map(|i| {
            let (value, bits) = solve(g, kind, i);
            (value, VertexSet::from_bits_unchecked(n, bits))
        })
        .collect();
    let mut values = vec![0; n + 1];
    let mut witnesses = vec![VertexSet::empty(n); n + 1];
    for (i, (value, w)) in solved.into_iter().enumerate() {
        values[i] = value;
        witnesses[i] = w;
    }
    if kind.is_cut() {
        mirror_upper_half(&mut values, &mut witnesses);
    }
    Ok(Profile {
        kind,
        values,
        witnesses: Some(witnesses),
        provenance: Provenance::BranchBound,
    })
}
