use std::fmt;

use serde::{Deserialize, Serialize};

use super::identities::{identity_suite, IdentityResult, Outcome, Scope};
use super::sequence::{check_symmetry, diff_sequence, SymmetryVerdict};
use crate::graph::{encode_graph6, DegreeSummary, Graph};
use crate::solver::{all_profiles, MetricKind, SolverConfig, SolverError, Strategy};

/// Sequences the regularity characterisation covers: δ, σ, τ, υ.
pub const THEOREM_KINDS: [MetricKind; 4] = [
    MetricKind::DENSEST,
    MetricKind::SPARSEST,
    MetricKind::MAX_COVER,
    MetricKind::MIN_COVER,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub strategy: Strategy,
    pub solver: SolverConfig,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            strategy: Strategy::CrossChecked,
            solver: SolverConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub graph6: String,
    pub degrees: DegreeSummary,
    pub connected: bool,
}

impl GraphSummary {
    pub fn of(g: &Graph) -> Self {
        Self {
            n: g.n(),
            m: g.m(),
            graph6: encode_graph6(g),
            degrees: g.degree_summary(),
            connected: g.is_connected(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceReport {
    pub kind: MetricKind,
    pub name: String,
    /// Profile values for `i = 0..=n`.
    pub profile: Vec<i64>,
    /// Differences for `i = 1..=n`.
    pub differences: Vec<i64>,
    pub verdict: SymmetryVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub sequence: MetricKind,
    pub name: String,
    pub regular: bool,
    pub symmetric: bool,
    pub consistent: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Hypothesis {
    /// Connected graph, as the characterisation is usually stated.
    Connected,
    /// Disconnected graph: verdicts are computed but fall outside the
    /// stated hypothesis.
    OutsideStatedHypothesis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportStatus {
    Consistent,
    /// Regularity and symmetry disagree for one of δ, σ, τ, υ.
    Counterexample,
    /// θ/φ asymmetric or an unconditional identity failed: a solver bug.
    InternalInconsistency,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub graph: GraphSummary,
    pub strategy: Strategy,
    pub hypothesis: Hypothesis,
    pub sequences: Vec<SequenceReport>,
    pub theorem: Vec<TheoremCheck>,
    pub identities: Vec<IdentityResult>,
    pub status: ReportStatus,
}

impl VerificationReport {
    pub fn sequence(&self, kind: MetricKind) -> &SequenceReport {
        &self.sequences[kind.index()]
    }

    pub fn is_consistent(&self) -> bool {
        self.status == ReportStatus::Consistent
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// Computes all six profiles of `g` (and of its complement for the
/// complement identities), their difference sequences and symmetry
/// verdicts, the regularity biconditional for δ, σ, τ, υ and the identity
/// suite. Disagreeing solver paths abort with an error.
pub fn verify_theorem(
    g: &Graph,
    options: &VerifyOptions,
) -> Result<VerificationReport, SolverError> {
    options.solver.admit(g)?;
    let own = all_profiles(g, options.strategy, &options.solver)?;
    let complement = all_profiles(&g.complement(), options.strategy, &options.solver)?;
    let regular = g.is_regular();

    let sequences: Vec<SequenceReport> = own
        .profiles
        .iter()
        .map(|p| {
            let diffs = diff_sequence(p);
            SequenceReport {
                kind: p.kind,
                name: p.kind.diff_name().to_string(),
                profile: p.values.clone(),
                verdict: check_symmetry(&diffs),
                differences: diffs.values,
            }
        })
        .collect();
    let theorem: Vec<TheoremCheck> = THEOREM_KINDS
        .iter()
        .map(|&k| {
            let symmetric = sequences[k.index()].verdict.symmetric;
            TheoremCheck {
                sequence: k,
                name: k.diff_name().to_string(),
                regular,
                symmetric,
                consistent: regular == symmetric,
            }
        })
        .collect();
    let identities = identity_suite(g, &own, &complement);

    let cut_broken = [MetricKind::MAX_CUT, MetricKind::MIN_CUT].iter().any(|k| {
        let v = &sequences[k.index()].verdict;
        !v.symmetric || v.target != 0
    });
    let identity_broken = identities.iter().any(IdentityResult::failed);
    let status = if cut_broken || identity_broken {
        ReportStatus::InternalInconsistency
    } else if theorem.iter().any(|t| !t.consistent) {
        ReportStatus::Counterexample
    } else {
        ReportStatus::Consistent
    };

    Ok(VerificationReport {
        graph: GraphSummary::of(g),
        strategy: options.strategy,
        hypothesis: if g.is_connected() {
            Hypothesis::Connected
        } else {
            Hypothesis::OutsideStatedHypothesis
        },
        sequences,
        theorem,
        identities,
        status,
    })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join(values: &[i64]) -> String {
    values
        .iter()
        .map(|v| format!("{v:>3}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Indented text tree for reading; not a parse target.
impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = &self.graph;
        writeln!(f, "graph {}", g.graph6)?;
        writeln!(
            f,
            "├─ n = {}, m = {}, connected: {}",
            g.n,
            g.m,
            yes(g.connected)
        )?;
        writeln!(
            f,
            "├─ degrees: min {} max {} regular: {} {:?}",
            g.degrees.min_degree,
            g.degrees.max_degree,
            yes(g.degrees.is_regular),
            g.degrees.degree_sequence
        )?;
        if self.hypothesis == Hypothesis::OutsideStatedHypothesis {
            writeln!(
                f,
                "├─ note: disconnected graph, outside the stated hypothesis"
            )?;
        }
        writeln!(f, "├─ strategy: {}", self.strategy)?;
        writeln!(f, "├─ sequences (i = 1..n)")?;
        for s in &self.sequences {
            let v = &s.verdict;
            let verdict = if v.symmetric {
                format!("symmetric, target {}", v.target)
            } else {
                let (i, sum) = v.violations[0];
                format!(
                    "ASYMMETRIC, target {}, first violation i={i} sum={sum} ({} total)",
                    v.target,
                    v.violations.len()
                )
            };
            writeln!(
                f,
                "│  {} [{}]  {}",
                s.kind.diff_symbol(),
                join(&s.differences),
                verdict
            )?;
        }
        writeln!(f, "├─ regular ⟺ symmetric")?;
        for t in &self.theorem {
            writeln!(
                f,
                "│  {} regular: {} symmetric: {} -> {}",
                t.sequence.diff_symbol(),
                yes(t.regular),
                yes(t.symmetric),
                if t.consistent {
                    "consistent"
                } else {
                    "INCONSISTENT"
                }
            )?;
        }
        writeln!(f, "├─ identities")?;
        for r in &self.identities {
            let outcome = match (&r.outcome, r.scope) {
                (Outcome::Pass { checked }, _) => format!("pass ({checked} checked)"),
                (Outcome::Fail { i, lhs, rhs }, _) => format!("FAIL at i={i}: {lhs} ≠ {rhs}"),
                (Outcome::NotApplicable, Scope::RegularOnly) => "n/a (irregular)".to_string(),
                (Outcome::NotApplicable, _) => "n/a".to_string(),
            };
            writeln!(f, "│  {:<52} {}", r.statement, outcome)?;
        }
        let status = match self.status {
            ReportStatus::Consistent => "consistent",
            ReportStatus::Counterexample => "COUNTEREXAMPLE",
            ReportStatus::InternalInconsistency => "INTERNAL INCONSISTENCY",
        };
        writeln!(f, "└─ status: {status}")
    }
}
