//! Exact extremal profiles: for each subset size `i`, the best value of one
//! edge counter over all `i`-vertex subsets.
//!
//! Three independent routes produce the same numbers:
//!
//! * [`profile_exhaustive`] enumerates every subset and is the ground truth;
//! * [`profile_branch_bound`] searches depth-first with degree-prefix bounds;
//! * [`profile_by_reduction`] derives one profile from another through the
//!   complement-set and complement-graph identities.
//!
//! [`all_profiles`] runs one of them, or all three against each other.

mod branch_bound;
mod exhaustive;
mod reduction;

pub use branch_bound::profile_branch_bound;
pub use exhaustive::{extremal_exhaustive, profile_exhaustive, LexSubsets};
pub use reduction::{profile_by_reduction, BaseProfiles};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::metrics::SubsetMetrics;

/// Largest graph the solvers accept unless configured otherwise.
pub const DEFAULT_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("graph has {n} vertices, above the solver cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("subset size {i} out of range 0..={n}")]
    SizeOutOfRange { i: usize, n: usize },
    #[error("reducing to {kind} needs the {needed} profile of {graph}")]
    MissingBase {
        kind: MetricKind,
        needed: MetricKind,
        graph: &'static str,
    },
    #[error("base {kind} profile has {len} entries, expected {expected}")]
    BaseLength {
        kind: MetricKind,
        len: usize,
        expected: usize,
    },
    #[error("{kind}({i}): exhaustive search gives {oracle} but {path} gives {other}")]
    PathsDisagree {
        kind: MetricKind,
        i: usize,
        oracle: i64,
        other: i64,
        path: Provenance,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub cap: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP }
    }
}

impl SolverConfig {
    pub fn with_cap(cap: usize) -> Self {
        Self { cap }
    }

    pub(crate) fn admit(&self, g: &Graph) -> Result<(), SolverError> {
        let cap = self.cap.min(crate::graph::MAX_VERTICES);
        if g.n() > cap {
            Err(SolverError::CapExceeded { n: g.n(), cap })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Counter {
    Induced,
    Covered,
    Cut,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Max,
    Min,
}

impl Sense {
    /// Whether `candidate` strictly beats `incumbent`.
    #[inline]
    pub fn improves(self, candidate: i64, incumbent: i64) -> bool {
        match self {
            Sense::Max => candidate > incumbent,
            Sense::Min => candidate < incumbent,
        }
    }
}

/// One of the six (counter, sense) pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MetricKind {
    pub counter: Counter,
    pub sense: Sense,
}

impl MetricKind {
    /// Δ: densest `i`-subgraph.
    pub const DENSEST: Self = Self::new(Counter::Induced, Sense::Max);
    /// Σ: sparsest `i`-subgraph.
    pub const SPARSEST: Self = Self::new(Counter::Induced, Sense::Min);
    /// T: maximum `i`-vertex cover.
    pub const MAX_COVER: Self = Self::new(Counter::Covered, Sense::Max);
    /// Υ: minimum `i`-vertex cover.
    pub const MIN_COVER: Self = Self::new(Counter::Covered, Sense::Min);
    /// Θ: maximum `(i, n-i)`-cut.
    pub const MAX_CUT: Self = Self::new(Counter::Cut, Sense::Max);
    /// Φ: minimum `(i, n-i)`-cut.
    pub const MIN_CUT: Self = Self::new(Counter::Cut, Sense::Min);

    pub const ALL: [Self; 6] = [
        Self::DENSEST,
        Self::SPARSEST,
        Self::MAX_COVER,
        Self::MIN_COVER,
        Self::MAX_CUT,
        Self::MIN_CUT,
    ];

    pub const fn new(counter: Counter, sense: Sense) -> Self {
        Self { counter, sense }
    }

    /// Position in [`MetricKind::ALL`].
    pub fn index(self) -> usize {
        let c = match self.counter {
            Counter::Induced => 0,
            Counter::Covered => 2,
            Counter::Cut => 4,
        };
        c + (self.sense == Sense::Min) as usize
    }

    #[inline]
    pub fn evaluate(self, x: &SubsetMetrics) -> i64 {
        match self.counter {
            Counter::Induced => x.induced,
            Counter::Covered => x.covered,
            Counter::Cut => x.cut,
        }
    }

    #[inline]
    pub(crate) fn evaluate_bits(self, g: &Graph, bits: u64) -> i64 {
        self.evaluate(&SubsetMetrics::of_bits(g, bits))
    }

    /// Upper-case Greek letter of the profile.
    pub fn symbol(self) -> &'static str {
        ["Δ", "Σ", "T", "Υ", "Θ", "Φ"][self.index()]
    }

    /// Lower-case Greek letter of the difference sequence.
    pub fn diff_symbol(self) -> &'static str {
        ["δ", "σ", "τ", "υ", "θ", "φ"][self.index()]
    }

    /// ASCII name of the profile, e.g. `Delta`.
    pub fn name(self) -> &'static str {
        ["Delta", "Sigma", "T", "Upsilon", "Theta", "Phi"][self.index()]
    }

    /// ASCII name of the difference sequence, e.g. `delta`.
    pub fn diff_name(self) -> &'static str {
        ["delta", "sigma", "tau", "upsilon", "theta", "phi"][self.index()]
    }

    pub fn is_cut(self) -> bool {
        self.counter == Counter::Cut
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "path")]
pub enum Provenance {
    Exhaustive,
    BranchBound,
    Reduction {
        from: MetricKind,
        complement_graph: bool,
    },
    CrossChecked,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Exhaustive => f.write_str("exhaustive"),
            Provenance::BranchBound => f.write_str("branch-and-bound"),
            Provenance::Reduction {
                from,
                complement_graph: false,
            } => write!(f, "reduction from {from}"),
            Provenance::Reduction { from, .. } => write!(f, "reduction from complement {from}"),
            Provenance::CrossChecked => f.write_str("cross-checked"),
        }
    }
}

/// Extremal values of one kind for `i = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profile {
    pub kind: MetricKind,
    pub values: Vec<i64>,
    pub witnesses: Option<Vec<VertexSet>>,
    pub provenance: Provenance,
}

impl Profile {
    /// Vertex count of the underlying graph.
    pub fn n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn value(&self, i: usize) -> i64 {
        self.values[i]
    }

    pub fn witness(&self, i: usize) -> Option<&VertexSet> {
        self.witnesses.as_ref().map(|w| &w[i])
    }

    /// Every witness has size `i` and evaluates to `values[i]` on `g`.
    pub fn witnesses_valid(&self, g: &Graph) -> bool {
        let Some(ws) = &self.witnesses else {
            return true;
        };
        ws.len() == self.values.len()
            && ws.iter().enumerate().all(|(i, w)| {
                w.len() == i
                    && SubsetMetrics::of(g, w)
                        .is_ok_and(|x| self.kind.evaluate(&x) == self.values[i])
            })
    }
}

/// Fills `i > n/2` from `n - i` for the cut kinds.
pub(crate) fn mirror_upper_half(values: &mut [i64], witnesses: &mut [VertexSet]) {
    let n = values.len() - 1;
    for i in n / 2 + 1..=n {
        values[i] = values[n - i];
        witnesses[i] = witnesses[n - i].complement();
    }
}

/// Sizes a solver must actually search for `kind`.
pub(crate) fn searched_sizes(kind: MetricKind, n: usize) -> std::ops::RangeInclusive<usize> {
    if kind.is_cut() {
        0..=n / 2
    } else {
        0..=n
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    Oracle,
    BranchBound,
    Reduced,
    CrossChecked,
}

impl Strategy {
    /// Cross-checked where exhaustive search is cheap, reductions over
    /// branch-and-bound above that.
    pub fn default_for(n: usize) -> Self {
        if n <= 8 {
            Strategy::CrossChecked
        } else {
            Strategy::Reduced
        }
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "oracle" => Ok(Strategy::Oracle),
            "bb" | "branch-bound" => Ok(Strategy::BranchBound),
            "reduced" => Ok(Strategy::Reduced),
            "checked" | "cross-checked" => Ok(Strategy::CrossChecked),
            _ => Err(format!(
                "unknown strategy `{s}` (expected oracle, bb, reduced or checked)"
            )),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Oracle => "oracle",
            Strategy::BranchBound => "bb",
            Strategy::Reduced => "reduced",
            Strategy::CrossChecked => "checked",
        })
    }
}

/// The six profiles of one graph, in [`MetricKind::ALL`] order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SixProfiles {
    pub strategy: Strategy,
    pub profiles: Vec<Profile>,
}

impl SixProfiles {
    pub fn get(&self, kind: MetricKind) -> &Profile {
        &self.profiles[kind.index()]
    }

    pub fn n(&self) -> usize {
        self.profiles[0].n()
    }
}

fn reduced_profiles(g: &Graph, config: &SolverConfig) -> Result<Vec<Profile>, SolverError> {
    let complement = g.complement();
    let own = [
        profile_branch_bound(g, MetricKind::SPARSEST, config)?,
        profile_branch_bound(g, MetricKind::MAX_CUT, config)?,
        profile_branch_bound(g, MetricKind::MIN_CUT, config)?,
    ];
    let complement_sparsest = [profile_branch_bound(
        &complement,
        MetricKind::SPARSEST,
        config,
    )?];
    let densest = profile_by_reduction(
        g,
        MetricKind::DENSEST,
        &BaseProfiles::new(&own, &complement_sparsest),
    )?;
    let mut own = own.to_vec();
    own.push(densest);
    let bases = BaseProfiles::new(&own, &complement_sparsest);
    MetricKind::ALL
        .iter()
        .map(|&kind| match kind {
            k if k == MetricKind::SPARSEST => Ok(own[0].clone()),
            k if k == MetricKind::DENSEST => Ok(own[3].clone()),
            k => profile_by_reduction(g, k, &bases),
        })
        .collect()
}

fn agree(oracle: &Profile, other: &Profile) -> Result<(), SolverError> {
    match oracle
        .values
        .iter()
        .zip(&other.values)
        .position(|(a, b)| a != b)
    {
        None => Ok(()),
        Some(i) => Err(SolverError::PathsDisagree {
            kind: oracle.kind,
            i,
            oracle: oracle.values[i],
            other: other.values[i],
            path: other.provenance,
        }),
    }
}

/// All six profiles of `g` under `strategy`.
pub fn all_profiles(
    g: &Graph,
    strategy: Strategy,
    config: &SolverConfig,
) -> Result<SixProfiles, SolverError> {
    config.admit(g)?;
    let direct = |f: fn(&Graph, MetricKind, &SolverConfig) -> Result<Profile, SolverError>| {
        MetricKind::ALL
            .iter()
            .map(|&k| f(g, k, config))
            .collect::<Result<Vec<_>, _>>()
    };
    let profiles = match strategy {
        Strategy::Oracle => direct(profile_exhaustive)?,
        Strategy::BranchBound => direct(profile_branch_bound)?,
        Strategy::Reduced => reduced_profiles(g, config)?,
        Strategy::CrossChecked => {
            let mut oracle = direct(profile_exhaustive)?;
            let bb = direct(profile_branch_bound)?;
            let reduced = reduced_profiles(g, config)?;
            for (k, p) in oracle.iter_mut().enumerate() {
                agree(p, &bb[k])?;
                agree(p, &reduced[k])?;
                p.provenance = Provenance::CrossChecked;
            }
            oracle
        }
    };
    Ok(SixProfiles { strategy, profiles })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, empty, random_graph, star};

    #[test]
    fn kind_table() {
        for (k, kind) in MetricKind::ALL.iter().enumerate() {
            assert_eq!(kind.index(), k);
        }
        assert_eq!(MetricKind::DENSEST.symbol(), "Δ");
        assert_eq!(MetricKind::MIN_CUT.diff_symbol(), "φ");
        assert_eq!(MetricKind::MAX_COVER.diff_name(), "tau");
    }

    #[test]
    fn single_edge_profiles() {
        let k2 = complete(2).unwrap();
        let six = all_profiles(&k2, Strategy::CrossChecked, &SolverConfig::default()).unwrap();
        let values: Vec<Vec<i64>> = six.profiles.iter().map(|p| p.values.clone()).collect();
        assert_eq!(
            values,
            vec![
                vec![0, 0, 1],
                vec![0, 0, 1],
                vec![0, 1, 1],
                vec![0, 1, 1],
                vec![0, 1, 0],
                vec![0, 1, 0],
            ]
        );
    }

    #[test]
    fn edgeless_profiles_are_zero() {
        let g = empty(3).unwrap();
        for strategy in [
            Strategy::Oracle,
            Strategy::BranchBound,
            Strategy::Reduced,
            Strategy::CrossChecked,
        ] {
            let six = all_profiles(&g, strategy, &SolverConfig::default()).unwrap();
            assert!(six.profiles.iter().all(|p| p.values == vec![0; 4]));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = empty(25).unwrap();
        assert_eq!(
            all_profiles(&g, Strategy::BranchBound, &SolverConfig::default()).unwrap_err(),
            SolverError::CapExceeded { n: 25, cap: 24 }
        );
        let small = SolverConfig::with_cap(3);
        assert!(profile_exhaustive(&star(4).unwrap(), MetricKind::DENSEST, &small).is_err());
    }

    #[test]
    fn strategies_agree_and_witnesses_check_out() {
        let config = SolverConfig::default();
        for seed in 0..10 {
            let g = random_graph(9, 0.45, seed).unwrap();
            let oracle = all_profiles(&g, Strategy::Oracle, &config).unwrap();
            for strategy in [Strategy::BranchBound, Strategy::Reduced] {
                let other = all_profiles(&g, strategy, &config).unwrap();
                for (a, b) in oracle.profiles.iter().zip(&other.profiles) {
                    assert_eq!(a.values, b.values, "{strategy} {}", a.kind);
                    assert!(b.witnesses_valid(&g));
                }
            }
        }
    }

    #[test]
    fn strategy_parsing() {
        for s in ["oracle", "bb", "reduced", "checked"] {
            assert_eq!(s.parse::<Strategy>().unwrap().to_string(), s);
        }
        assert!("fast".parse::<Strategy>().is_err());
        assert_eq!(Strategy::default_for(8), Strategy::CrossChecked);
        assert_eq!(Strategy::default_for(9), Strategy::Reduced);
    }
}
