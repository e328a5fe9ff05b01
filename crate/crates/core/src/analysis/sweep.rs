//! Runs [`verify_theorem`] over a seeded stream of generated graphs.

use std::io::{self, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::report::{verify_theorem, ReportStatus, VerificationReport, VerifyOptions};
use super::AnalysisError;
use crate::graph::{mix_seed, GeneratorSpec};
use crate::solver::{SolverConfig, Strategy};

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    /// Graph `k` comes from `mix[k % mix.len()]`.
    pub mix: Vec<GeneratorSpec>,
    pub count: usize,
    pub seed: u64,
    /// `None` picks [`Strategy::default_for`] per graph.
    pub strategy: Option<Strategy>,
    pub solver: SolverConfig,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub index: usize,
    pub spec: String,
    pub graph6: String,
    pub report: VerificationReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub seed: u64,
    pub count: usize,
    pub mix: Vec<String>,
    pub consistent: usize,
    pub counterexamples: usize,
    pub internal_inconsistencies: usize,
    pub regular: usize,
    pub connected: usize,
    /// Non-consistent reports, in stream order.
    pub findings: Vec<Finding>,
}

impl SweepSummary {
    pub fn is_clean(&self) -> bool {
        self.findings.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }
}

fn run(config: &SweepConfig) -> Result<Vec<(usize, VerificationReport)>, AnalysisError> {
    (0..config.count)
        .into_par_iter()
        .map(|k| {
            let spec = config.mix[k % config.mix.len()];
            let g = spec.generate(mix_seed(config.seed, k as u64))?;
            let options = VerifyOptions {
                strategy: config.strategy.unwrap_or(Strategy::default_for(g.n())),
                solver: config.solver,
            };
            Ok((k, verify_theorem(&g, &options)?))
        })
        .collect()
}

/// Deterministic for a fixed config regardless of `workers`: every graph's
/// seed depends only on `(seed, index)` and results are kept in index order.
pub fn counterexample_sweep(config: &SweepConfig) -> Result<SweepSummary, AnalysisError> {
    if config.count > 0 && config.mix.is_empty() {
        return Err(AnalysisError::EmptyMix);
    }
    for spec in &config.mix {
        spec.check()?;
    }
    let reports = match config.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .map_err(|e| AnalysisError::Workers(e.to_string()))?
            .install(|| run(config))?,
        None => run(config)?,
    };

    let mut summary = SweepSummary {
        seed: config.seed,
        count: config.count,
        mix: config.mix.iter().map(ToString::to_string).collect(),
        consistent: 0,
        counterexamples: 0,
        internal_inconsistencies: 0,
        regular: 0,
        connected: 0,
        findings: Vec::new(),
    };
    for (k, report) in reports {
        summary.regular += report.graph.degrees.is_regular as usize;
        summary.connected += report.graph.connected as usize;
        match report.status {
            ReportStatus::Consistent => {
                summary.consistent += 1;
                continue;
            }
            ReportStatus::Counterexample => summary.counterexamples += 1,
            ReportStatus::InternalInconsistency => summary.internal_inconsistencies += 1,
        }
        summary.findings.push(Finding {
            index: k,
            spec: config.mix[k % config.mix.len()].to_string(),
            graph6: report.graph.graph6.clone(),
            report,
        });
    }
    Ok(summary)
}

/// One graph6 line followed by one JSON report line per finding.
pub fn write_findings<W: Write>(summary: &SweepSummary, mut out: W) -> io::Result<()> {
    for f in &summary.findings {
        writeln!(out, "{}", f.graph6)?;
        writeln!(out, "{}", f.report.to_json())?;
    }
    Ok(())
}
