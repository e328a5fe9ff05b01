//! Profiles derived from other profiles.
//!
//! * T(i) = m - Σ(n-i): complement of a sparsest `(n-i)`-set.
//! * Υ(i) = m - Δ(n-i): complement of a densest `(n-i)`-set.
//! * Δ_G(i) = C(i,2) - Σ_Ḡ(i), and symmetrically for Σ_G.
//! * Θ(i) = Θ(n-i), Φ(i) = Φ(n-i): a cut and its complement coincide.

use super::{mirror_upper_half, MetricKind, Profile, Provenance, SolverError};
use crate::graph::{Graph, VertexSet};

/// Already-computed profiles of `G` and of its complement graph.
#[derive(Debug, Clone, Copy)]
pub struct BaseProfiles<'a> {
    pub own: &'a [Profile],
    pub complement: &'a [Profile],
}

impl<'a> BaseProfiles<'a> {
    pub fn new(own: &'a [Profile], complement: &'a [Profile]) -> Self {
        Self { own, complement }
    }

    fn find(
        &self,
        kind: MetricKind,
        needed: MetricKind,
        of_complement: bool,
        n: usize,
    ) -> Result<&'a Profile, SolverError> {
        let pool = if of_complement {
            self.complement
        } else {
            self.own
        };
        let p = pool
            .iter()
            .find(|p| p.kind == needed)
            .ok_or(SolverError::MissingBase {
                kind,
                needed,
                graph: if of_complement {
                    "the complement graph"
                } else {
                    "the graph"
                },
            })?;
        if p.values.len() != n + 1 {
            return Err(SolverError::BaseLength {
                kind: needed,
                len: p.values.len(),
                expected: n + 1,
            });
        }
        Ok(p)
    }
}

fn binomial2(i: usize) -> i64 {
    (i * i.saturating_sub(1) / 2) as i64
}

/// Derives the `kind` profile of `g` from `bases`.
///
/// | target | needs |
/// |---|---|
/// | Δ | Σ of the complement graph |
/// | Σ | Δ of the complement graph |
/// | T | Σ of `g` |
/// | Υ | Δ of `g` |
/// | Θ, Φ | the same kind of `g`; only `i <= n/2` is read |
pub fn profile_by_reduction(
    g: &Graph,
    kind: MetricKind,
    bases: &BaseProfiles<'_>,
) -> Result<Profile, SolverError> {
    let n = g.n();
    let m = g.m() as i64;
    let (base, complement_graph) = match kind {
        k if k == MetricKind::DENSEST => (MetricKind::SPARSEST, true),
        k if k == MetricKind::SPARSEST => (MetricKind::DENSEST, true),
        k if k == MetricKind::MAX_COVER => (MetricKind::SPARSEST, false),
        k if k == MetricKind::MIN_COVER => (MetricKind::DENSEST, false),
        k => (k, false),
    };
    let source = bases.find(kind, base, complement_graph, n)?;
    let source_witness = |i: usize| {
        source
            .witness(i)
            .copied()
            .filter(|w| w.ambient() == n)
            .unwrap_or(VertexSet::empty(n))
    };
    let has_witnesses = source.witnesses.is_some();

    let mut values = vec![0i64; n + 1];
    let mut witnesses = vec![VertexSet::empty(n); n + 1];
    if complement_graph {
        for i in 0..=n {
            values[i] = binomial2(i) - source.values[i];
            witnesses[i] = source_witness(i);
        }
    } else if kind.is_cut() {
        for i in 0..=n / 2 {
            values[i] = source.values[i];
            witnesses[i] = source_witness(i);
        }
        mirror_upper_half(&mut values, &mut witnesses);
    } else {
        for i in 0..=n {
            values[i] = m - source.values[n - i];
            witnesses[i] = source_witness(n - i).complement();
        }
    }
    Ok(Profile {
        kind,
        values,
        witnesses: has_witnesses.then_some(witnesses),
        provenance: Provenance::Reduction {
            from: base,
            complement_graph,
        },
    })
}
