use serde::{Deserialize, Serialize};

use crate::solver::{MetricKind, Profile};

/// Consecutive differences `s(i) = P(i) - P(i-1)` for `i = 1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffSequence {
    pub kind: MetricKind,
    /// `values[k]` holds `s(k + 1)`.
    pub values: Vec<i64>,
}

impl DiffSequence {
    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `s(i)`, 1-based.
    pub fn at(&self, i: usize) -> i64 {
        self.values[i - 1]
    }

    /// `s(i) + s(n - i + 1)`.
    pub fn pair_sum(&self, i: usize) -> i64 {
        self.at(i) + self.at(self.n() + 1 - i)
    }
}

pub fn diff_sequence(p: &Profile) -> DiffSequence {
    DiffSequence {
        kind: p.kind,
        values: p.values.windows(2).map(|w| w[1] - w[0]).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryVerdict {
    pub symmetric: bool,
    /// `s(1) + s(n)`.
    pub target: i64,
    /// `(i, s(i) + s(n-i+1))` for every `i` missing the target.
    pub violations: Vec<(usize, i64)>,
}

/// Exact test of `s(i) + s(n-i+1) = s(1) + s(n)` over `i = 1..=n`.
pub fn check_symmetry(s: &DiffSequence) -> SymmetryVerdict {
    let n = s.n();
    assert!(n >= 1, "symmetry needs a non-empty sequence");
    let target = s.pair_sum(1);
    let violations: Vec<(usize, i64)> = (1..=n)
        .map(|i| (i, s.pair_sum(i)))
        .filter(|&(_, sum)| sum != target)
        .collect();
    SymmetryVerdict {
        symmetric: violations.is_empty(),
        target,
        violations,
    }
}
