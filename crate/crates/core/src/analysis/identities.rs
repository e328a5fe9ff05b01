//! Exact integer identities relating the six profiles of a graph and of its
//! complement. Each identity is evaluated at every applicable `i`; the first
//! violation, if any, is recorded.

use serde::{Deserialize, Serialize};

use super::sequence::{diff_sequence, DiffSequence};
use crate::graph::Graph;
use crate::solver::{MetricKind, SixProfiles};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    AllGraphs,
    RegularOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "outcome")]
pub enum Outcome {
    Pass { checked: usize },
    Fail { i: usize, lhs: i64, rhs: i64 },
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityResult {
    pub id: String,
    pub statement: String,
    pub scope: Scope,
    #[serde(flatten)]
    pub outcome: Outcome,
}

impl IdentityResult {
    pub fn failed(&self) -> bool {
        matches!(self.outcome, Outcome::Fail { .. })
    }
}

struct Checker {
    regular: bool,
    out: Vec<IdentityResult>,
}

impl Checker {
    fn check<R, F>(&mut self, id: &str, statement: &str, scope: Scope, range: R, sides: F)
    where
        R: IntoIterator<Item = usize>,
        F: Fn(usize) -> (i64, i64),
    {
        let outcome = if scope == Scope::RegularOnly && !self.regular {
            Outcome::NotApplicable
        } else {
            let mut checked = 0;
            let mut failure = None;
            for i in range {
                let (lhs, rhs) = sides(i);
                checked += 1;
                if lhs != rhs {
                    failure = Some(Outcome::Fail { i, lhs, rhs });
                    break;
                }
            }
            failure.unwrap_or(Outcome::Pass { checked })
        };
        self.out.push(IdentityResult {
            id: id.to_string(),
            statement: statement.to_string(),
            scope,
            outcome,
        });
    }
}

/// Runs every identity on `g`, given its profiles and those of its
/// complement graph. Identities scoped to regular graphs are reported as
/// not applicable otherwise.
pub fn identity_suite(
    g: &Graph,
    own: &SixProfiles,
    complement: &SixProfiles,
) -> Vec<IdentityResult> {
    use MetricKind as K;
    use Scope::{AllGraphs, RegularOnly};

    let n = g.n();
    let m = g.m() as i64;
    let d = g.min_degree() as i64;
    let p = |k: K| &own.get(k).values;
    let diff = |six: &SixProfiles, k: K| -> DiffSequence { diff_sequence(six.get(k)) };
    let (delta, sigma) = (p(K::DENSEST), p(K::SPARSEST));
    let (t, upsilon) = (p(K::MAX_COVER), p(K::MIN_COVER));
    let (theta, phi) = (p(K::MAX_CUT), p(K::MIN_CUT));
    let sigma_bar = &complement.get(K::SPARSEST).values;
    let (dd, ds, dt, du) = (
        diff(own, K::DENSEST),
        diff(own, K::SPARSEST),
        diff(own, K::MAX_COVER),
        diff(own, K::MIN_COVER),
    );
    let ds_bar = diff(complement, K::SPARSEST);
    let ii = |i: usize| i as i64;

    let mut c = Checker {
        regular: g.is_regular(),
        out: Vec::new(),
    };
    c.check("densest-all", "Δ(n) = m", AllGraphs, [n], |i| {
        (delta[i], m)
    });
    c.check(
        "densest-all-but-one",
        "Δ(n−1) = m − d",
        AllGraphs,
        [n - 1],
        |i| (delta[i], m - d),
    );
    c.check("delta-first", "δ(1) = 0", AllGraphs, [1], |i| {
        (dd.at(i), 0)
    });
    c.check("delta-last", "δ(n) = d", AllGraphs, [n], |i| (dd.at(i), d));
    c.check(
        "max-cover-sparsest",
        "T(i) + Σ(n−i) = m",
        AllGraphs,
        0..=n,
        |i| (t[i] + sigma[n - i], m),
    );
    c.check(
        "min-cover-densest",
        "Υ(i) + Δ(n−i) = m",
        AllGraphs,
        0..=n,
        |i| (upsilon[i] + delta[n - i], m),
    );
    c.check(
        "densest-complement-sparsest",
        "Δ_G(i) = C(i,2) − Σ_Ḡ(i)",
        AllGraphs,
        0..=n,
        |i| (delta[i], ii(i) * (ii(i) - 1) / 2 - sigma_bar[i]),
    );
    c.check(
        "max-cut-mirror",
        "Θ(i) = Θ(n−i)",
        AllGraphs,
        0..=n,
        |i| (theta[i], theta[n - i]),
    );
    c.check(
        "min-cut-mirror",
        "Φ(i) = Φ(n−i)",
        AllGraphs,
        0..=n,
        |i| (phi[i], phi[n - i]),
    );
    c.check(
        "delta-sigma-complement-pairs",
        "δ_G(i) + δ_G(n−i+1) + σ_Ḡ(i) + σ_Ḡ(n−i+1) = n − 1",
        AllGraphs,
        1..=n,
        |i| (dd.pair_sum(i) + ds_bar.pair_sum(i), ii(n) - 1),
    );
    c.check(
        "tau-sigma-pairs",
        "τ(i) + τ(n−i+1) = σ(i) + σ(n−i+1)",
        AllGraphs,
        1..=n,
        |i| (dt.pair_sum(i), ds.pair_sum(i)),
    );
    c.check(
        "upsilon-delta-pairs",
        "υ(i) + υ(n−i+1) = δ(i) + δ(n−i+1)",
        AllGraphs,
        1..=n,
        |i| (du.pair_sum(i), dd.pair_sum(i)),
    );
    c.check(
        "regular-densest-min-cut",
        "2Δ(i) + Φ(i) = i·d",
        RegularOnly,
        0..=n,
        |i| (2 * delta[i] + phi[i], ii(i) * d),
    );
    c.check(
        "regular-densest-reflection",
        "Δ(n−i) = m − i·d + Δ(i)",
        RegularOnly,
        0..=n,
        |i| (delta[n - i], m - ii(i) * d + delta[i]),
    );
    c.check("regular-edge-count", "2m = n·d", RegularOnly, [n], |i| {
        (2 * m, ii(i) * d)
    });
    c.out
}
