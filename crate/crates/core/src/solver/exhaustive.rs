use rayon::prelude::*;

use super::{MetricKind, Profile, Provenance, SolverConfig, SolverError};
use crate::graph::{Graph, VertexSet};

/// The `k`-subsets of `{0, .., n-1}` as bitmasks, in lexicographic order of
/// their sorted member lists: `{0,1,2}, {0,1,3}, .., {n-3,n-2,n-1}`.
pub struct LexSubsets {
    n: usize,
    members: Vec<usize>,
    done: bool,
}

impl LexSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            members: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for LexSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let mask = self.members.iter().fold(0u64, |m, &v| m | 1 << v);
        let k = self.members.len();
        // advance the rightmost member that still has room
        match (0..k).rev().find(|&j| self.members[j] < self.n - k + j) {
            Some(j) => {
                self.members[j] += 1;
                for t in j + 1..k {
                    self.members[t] = self.members[t - 1] + 1;
                }
            }
            None => self.done = true,
        }
        Some(mask)
    }
}

fn scan(g: &Graph, kind: MetricKind, i: usize) -> (i64, u64) {
    let mut subsets = LexSubsets::new(g.n(), i);
    let first = subsets.next().expect("i <= n");
    let mut best = (kind.evaluate_bits(g, first), first);
    for bits in subsets {
        let value = kind.evaluate_bits(g, bits);
        if kind.sense.improves(value, best.0) {
            best = (value, bits);
        }
    }
    best
}

/// Optimum of `kind` over all `i`-subsets, with the first optimal subset in
/// lexicographic order.
pub fn extremal_exhaustive(
    g: &Graph,
    kind: MetricKind,
    i: usize,
    config: &SolverConfig,
) -> Result<(i64, VertexSet), SolverError> {
    config.admit(g)?;
    if i > g.n() {
        return Err(SolverError::SizeOutOfRange { i, n: g.n() });
    }
    let (value, bits) = scan(g, kind, i);
    Ok((value, VertexSet::from_bits_unchecked(g.n(), bits)))
}

/// Ground-truth profile: every size is searched directly, cut kinds
/// included, so the oracle never leans on a mirrored value.
pub fn profile_exhaustive(
    g: &Graph,
    kind: MetricKind,
    config: &SolverConfig,
) -> Result<Profile, SolverError> {
    config.admit(g)?;
    let (values, witnesses): (Vec<i64>, Vec<VertexSet>) = (0..=g.n())
        .into_par_iter()
        .map(|i| {
            let (value, bits) = scan(g, kind, i);
            (value, VertexSet::from_bits_unchecked(g.n(), bits))
        })
        .unzip();
    Ok(Profile {
        kind,
        values,
        witnesses: Some(witnesses),
        provenance: Provenance::Exhaustive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, hypercube, random_graph, star};

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn lex_order() {
        let listed: Vec<Vec<usize>> = LexSubsets::new(4, 2)
            .map(|b| VertexSet::from_bits(4, b).unwrap().to_vec())
            .collect();
        assert_eq!(
            listed,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(LexSubsets::new(5, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(LexSubsets::new(3, 3).collect::<Vec<_>>(), vec![0b111]);
        assert_eq!(LexSubsets::new(2, 3).count(), 0);
        for n in 0..=10 {
            let total: usize = (0..=n).map(|k| LexSubsets::new(n, k).count()).sum();
            assert_eq!(total, 1 << n);
        }
    }

    #[test]
    fn single_size_examples() {
        let cfg = SolverConfig::default();
        let c4 = cycle(4).unwrap();
        assert_eq!(
            extremal_exhaustive(&c4, MetricKind::DENSEST, 2, &cfg).unwrap(),
            (1, set(4, &[0, 1]))
        );
        let g = random_graph(7, 0.5, 3).unwrap();
        assert_eq!(
            extremal_exhaustive(&g, MetricKind::DENSEST, 0, &cfg).unwrap(),
            (0, VertexSet::empty(7))
        );
        // a leaf touches one edge, the centre three
        let s4 = star(4).unwrap();
        assert_eq!(
            extremal_exhaustive(&s4, MetricKind::MIN_COVER, 1, &cfg).unwrap(),
            (1, set(4, &[1]))
        );
        assert_eq!(
            extremal_exhaustive(&s4, MetricKind::DENSEST, 5, &cfg).unwrap_err(),
            SolverError::SizeOutOfRange { i: 5, n: 4 }
        );
    }

    #[test]
    fn profile_examples() {
        let cfg = SolverConfig::default();
        let values = |g: &Graph, k| profile_exhaustive(g, k, &cfg).unwrap().values;
        assert_eq!(
            values(&cycle(4).unwrap(), MetricKind::DENSEST),
            vec![0, 0, 1, 2, 4]
        );
        assert_eq!(
            values(&star(4).unwrap(), MetricKind::DENSEST),
            vec![0, 0, 1, 2, 3]
        );
        assert_eq!(
            values(&complete(3).unwrap(), MetricKind::MAX_CUT),
            vec![0, 2, 2, 0]
        );
        assert_eq!(
            values(&cycle(4).unwrap(), MetricKind::SPARSEST),
            vec![0, 0, 0, 2, 4]
        );
        let q3_phi = values(&hypercube(3).unwrap(), MetricKind::MIN_CUT);
        assert_eq!(q3_phi, vec![0, 3, 4, 5, 4, 5, 4, 3, 0]);
    }

    #[test]
    fn witnesses_are_first_optimal() {
        let cfg = SolverConfig::default();
        let g = random_graph(8, 0.5, 11).unwrap();
        for kind in MetricKind::ALL {
            let p = profile_exhaustive(&g, kind, &cfg).unwrap();
            assert!(p.witnesses_valid(&g));
            for i in 0..=8 {
                let first = LexSubsets::new(8, i)
                    .find(|&b| kind.evaluate_bits(&g, b) == p.values[i])
                    .unwrap();
                assert_eq!(p.witness(i).unwrap().bits(), first);
            }
        }
    }
}
