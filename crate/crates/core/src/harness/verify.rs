//! Desk-scale checks of the two theorems: filter by Ore-degree and mad, compute
//! the strong chromatic index, and cross-check the configuration catalog and
//! discharging rules on each admitted graph.

use std::path::Path;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::chi_s_exact;
use crate::configurations::find_configurations;
use crate::discharging::{apply_rules, builtin_ruleset};
use crate::error::{Error, Result};
use crate::graph::{ConflictGraph, Graph};
use crate::metrics::{classify, mad_exact, ore_degree, Scheme};
use crate::rational::Rational;

pub const REPORT_SCHEMA: &str = "strongedge-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Theorem {
    /// θ ≤ 7 and mad < 34/11 imply χ′ₛ ≤ 13.
    #[serde(rename = "1")]
    One,
    /// θ ≤ 8 and mad < 113/31 imply χ′ₛ ≤ 20.
    #[serde(rename = "2")]
    Two,
}

impl Theorem {
    pub fn from_number(n: u8) -> Result<Self> {
        match n {
            1 => Ok(Theorem::One),
            2 => Ok(Theorem::Two),
            _ => Err(Error::Config(format!("theorem must be 1 or 2, got {n}"))),
        }
    }

    pub fn scheme(self) -> Scheme {
        match self {
            Theorem::One => Scheme::Theta7,
            Theorem::Two => Scheme::Theta8,
        }
    }

    pub fn max_theta(self) -> usize {
        self.scheme().theta()
    }

    pub fn mad_threshold(self) -> Rational {
        self.scheme().target()
    }

    pub fn bound(self) -> usize {
        self.scheme().palette() as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RecordStatus {
    Pass,
    Fail,
}

/// One admitted graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub theta: usize,
    pub mad: Rational,
    pub chi_s: usize,
    pub bound: usize,
    pub pass: bool,
    pub status: RecordStatus,
    /// Distinct catalog pattern ids present in the graph.
    pub configurations_found: Vec<String>,
    /// Vertices whose final charge is negative under the built-in rules.
    pub discharge_negatives: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FilteredRecord {
    pub graph6: String,
    pub theta: Option<usize>,
    pub mad: Option<Rational>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TimeoutRecord {
    pub graph6: String,
    pub theta: usize,
    pub mad: Rational,
    pub lower_bound: usize,
    pub upper_bound: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub corpus_size: usize,
    pub rejected_disconnected: usize,
    pub filtered: usize,
    pub admitted: usize,
    pub passed: usize,
    pub failed: usize,
    pub timeouts: usize,
    /// Admitted graphs containing no catalog configuration.
    pub unavoidability_exceptions: usize,
    /// Admitted graphs where discharging left no negative vertex.
    pub discharge_exceptions: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub theorem: Theorem,
    pub corpus: String,
    pub budget_secs: Option<f64>,
    pub records: Vec<GraphRecord>,
    pub filtered: Vec<FilteredRecord>,
    pub timeouts: Vec<TimeoutRecord>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub budget: Option<Duration>,
    /// Worker threads; `None` uses the available parallelism.
    pub jobs: Option<usize>,
    pub record_wall_time: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { budget: Some(crate::coloring::DEFAULT_BUDGET), jobs: None, record_wall_time: true }
    }
}

enum Outcome {
    Disconnected,
    Filtered(FilteredRecord),
    Timeout(TimeoutRecord),
    Record(GraphRecord),
}

fn process(theorem: Theorem, g: &Graph, budget: Option<Duration>) -> Outcome {
    let graph6 = g.to_graph6();
    if !g.is_connected() {
        return Outcome::Disconnected;
    }
    let filtered = |theta, mad, reason: &str| {
        Outcome::Filtered(FilteredRecord { graph6: graph6.clone(), theta, mad, reason: reason.to_string() })
    };
    let Ok(theta) = ore_degree(g) else {
        return filtered(None, None, "edgeless: Ore-degree undefined");
    };
    let mad = mad_exact(g).expect("graph has edges").mad;
    if theta > theorem.max_theta() {
        return filtered(Some(theta), Some(mad), "Ore-degree above the theorem's limit");
    }
    if mad >= theorem.mad_threshold() {
        return filtered(Some(theta), Some(mad), "mad not below the theorem's threshold");
    }
    let cg = ConflictGraph::new(g);
    let chi = match chi_s_exact(&cg, budget) {
        Ok(r) => r,
        Err(Error::Timeout { lb, ub }) => {
            return Outcome::Timeout(TimeoutRecord { graph6, theta, mad, lower_bound: lb, upper_bound: ub })
        }
        Err(e) => panic!("unexpected solver error: {e}"),
    };
    let scheme = theorem.scheme();
    let labels = classify(g, scheme);
    let mut configurations_found: Vec<String> =
        find_configurations(g, scheme, &labels).into_iter().map(|m| m.pattern.to_string()).collect();
    configurations_found.dedup();
    let ledger = apply_rules(g, &labels, &builtin_ruleset(scheme), &scheme.target()).expect("built-in rules are valid");
    let discharge_negatives = (0..g.n()).filter(|&v| ledger.final_charges[v].is_negative()).collect();
    let pass = chi.chi_s <= theorem.bound();
    Outcome::Record(GraphRecord {
        graph6,
        n: g.n(),
        m: g.m(),
        theta,
        mad,
        chi_s: chi.chi_s,
        bound: theorem.bound(),
        pass,
        status: if pass { RecordStatus::Pass } else { RecordStatus::Fail },
        configurations_found,
        discharge_negatives,
    })
}

/// Runs the pipeline over `corpus` on a worker pool and merges results in graph6 order.
pub fn verify_theorem(
    theorem: Theorem,
    corpus: &[Graph],
    descriptor: &str,
    options: &VerifyOptions,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = options.jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder.build().map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    let outcomes: Vec<Outcome> =
        pool.install(|| corpus.par_iter().map(|g| process(theorem, g, options.budget)).collect());

    let mut summary = Summary { corpus_size: corpus.len(), ..Default::default() };
    let (mut records, mut filtered, mut timeouts) = (Vec::new(), Vec::new(), Vec::new());
    for o in outcomes {
        match o {
            Outcome::Disconnected => summary.rejected_disconnected += 1,
            Outcome::Filtered(f) => filtered.push(f),
            Outcome::Timeout(t) => timeouts.push(t),
            Outcome::Record(r) => records.push(r),
        }
    }
    records.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    filtered.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    timeouts.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    summary.filtered = filtered.len();
    summary.timeouts = timeouts.len();
    summary.admitted = records.len() + timeouts.len();
    summary.passed = records.iter().filter(|r| r.pass).count();
    summary.failed = records.len() - summary.passed;
    summary.unavoidability_exceptions = records.iter().filter(|r| r.configurations_found.is_empty()).count();
    summary.discharge_exceptions = records.iter().filter(|r| r.discharge_negatives.is_empty()).count();

    Ok(VerificationReport {
        schema: REPORT_SCHEMA,
        tool_version: crate::VERSION,
        theorem,
        corpus: descriptor.to_string(),
        budget_secs: options.budget.map(|b| b.as_secs_f64()),
        records,
        filtered,
        timeouts,
        summary,
        wall_time_ms: options.record_wall_time.then(|| start.elapsed().as_millis() as u64),
    })
}

/// Writes the report as pretty JSON with a trailing newline.
pub fn emit_report(report: &VerificationReport, path: &Path) -> Result<()> {
    let mut text = serde_json::to_string_pretty(report)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}
