//! Batch orchestration behind the `egt` command line: ingest or enumerate
//! graphs, solve and certify each one, and emit reports or a sweep summary.
//!
//! Work is parallel over graphs only; results are merged back in input order
//! so output is byte-identical for any number of worker threads.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{BoundReport, Check, CheckName, JoinProfile};
use crate::enumerate::{enumerate_levels, enumerate_stream, EnumerateError};
use crate::graph::{complete, complete_bipartite, cycle, EdgeSet, Graph, GraphError};
use crate::graph6::{self, Graph6Error};
use crate::solvers::{self, SolverError};

/// Largest `n` swept with the built-in enumerator; larger inputs must come
/// from an external graph6 stream.
pub const MAX_BUILTIN_SWEEP: usize = 8;

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("theorem check failed on {graph6}: {}", .failures.join("; "))]
    TheoremViolation { graph6: String, failures: Vec<String> },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// Process exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExitStatus {
    Success,
    Failure,
    Counterexample,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        match self {
            ExitStatus::Success => 0,
            ExitStatus::Failure => 1,
            ExitStatus::Counterexample => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Solve,
    Verify,
    Enumerate,
    Construct,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputSource {
    /// Built-in enumeration of every graph with `min_n <= n <= max_n`.
    Enumerate { min_n: usize, max_n: usize },
    /// Line-delimited graph6 file; `-` reads standard input.
    Stream(PathBuf),
    /// One graph6 record.
    Single(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Jsonl,
    Csv,
    Summary,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub input: InputSource,
    /// Checks tallied in sweeps; theorem failures abort regardless.
    pub checks: Vec<CheckName>,
    pub format: OutputFormat,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    pub seed: u64,
    /// Randomized bipartization trials per graph in `solve`; 0 disables.
    pub trials: u64,
    pub fail_fast: bool,
}

impl RunConfig {
    pub fn new(command: Command, input: InputSource) -> Self {
        Self {
            command,
            input,
            checks: CheckName::ALL.to_vec(),
            format: OutputFormat::Summary,
            jobs: None,
            seed: 0,
            trials: 0,
            fail_fast: false,
        }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if let InputSource::Enumerate { min_n, max_n } = self.input {
            if min_n == 0 || min_n > max_n {
                return Err(HarnessError::Config(format!("bad vertex range {min_n}..{max_n}")));
            }
            if self.command == Command::Verify && max_n > MAX_BUILTIN_SWEEP {
                return Err(HarnessError::Config(format!(
                    "built-in sweeps stop at n = {MAX_BUILTIN_SWEEP}; pass a graph6 stream for larger n"
                )));
            }
        }
        if self.jobs == Some(0) {
            return Err(HarnessError::Config("--jobs must be at least 1".into()));
        }
        if self.checks.is_empty() {
            return Err(HarnessError::Config("no checks selected".into()));
        }
        Ok(())
    }

    fn pool(&self) -> Result<Option<rayon::ThreadPool>, HarnessError> {
        match self.jobs {
            Some(k) => Ok(Some(rayon::ThreadPoolBuilder::new().num_threads(k).build()?)),
            None => Ok(None),
        }
    }
}

fn install<T: Send>(pool: &Option<rayon::ThreadPool>, f: impl FnOnce() -> T + Send) -> T {
    match pool {
        Some(p) => p.install(f),
        None => f(),
    }
}

/// Parsed input: `(line number, graph or decode error)` in input order.
pub type InputBatch = Vec<(usize, Result<Graph, Graph6Error>)>;

/// Reads the configured input in batches (one per enumeration level, or the
/// whole stream) and hands each batch to `visit`. `visit` returns `false` to stop.
fn for_each_batch<F>(input: &InputSource, mut visit: F) -> Result<(), HarnessError>
where
    F: FnMut(InputBatch) -> Result<bool, HarnessError>,
{
    match input {
        InputSource::Enumerate { min_n, max_n } => {
            for level in enumerate_levels(*max_n)?.into_iter().filter(|l| l.n >= *min_n) {
                let batch = level.graphs.into_iter().enumerate().map(|(i, g)| (i + 1, Ok(g))).collect();
                if !visit(batch)? {
                    break;
                }
            }
        }
        InputSource::Stream(path) => {
            let batch = if path.as_os_str() == "-" {
                graph6::read_stream(io::stdin().lock()).collect()
            } else {
                graph6::read_stream(BufReader::new(File::open(path)?)).collect()
            };
            visit(batch)?;
        }
        InputSource::Single(record) => {
            let parsed = graph6::decode(record.trim())
                .map_err(|e| Graph6Error::Line { line: 1, source: Box::new(e) });
            visit(vec![(1, parsed)])?;
        }
    }
    Ok(())
}

/// Randomized and derandomized bipartization around an optimal induced
/// bipartite set, attached to `solve` output on request.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BipartizationSummary {
    pub trials: u64,
    pub seed: u64,
    pub mean_deleted: f64,
    pub std_error: f64,
    pub best_deleted: usize,
    pub derandomized_deleted: usize,
    /// `|E(G) \ E(G[B])|`; both procedures are measured against half of it.
    pub outside_edges: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveRecord {
    #[serde(flatten)]
    pub report: BoundReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bipartization: Option<BipartizationSummary>,
}

fn bipartization_summary(g: &Graph, trials: u64, seed: u64) -> Result<BipartizationSummary, SolverError> {
    let b = solvers::max_induced_bipartite(g).witness;
    let stats = solvers::randomized_bipartization(g, &b, trials, seed)?;
    let greedy = solvers::derandomized_bipartization(g, &b)?;
    Ok(BipartizationSummary {
        trials,
        seed,
        mean_deleted: stats.mean,
        std_error: stats.std_error(),
        best_deleted: stats.best.len(),
        derandomized_deleted: greedy.len(),
        outside_edges: stats.outside_edges,
    })
}

fn write_record(
    format: OutputFormat,
    record: &SolveRecord,
    out: &mut dyn Write,
    csv_header_written: &mut bool,
) -> Result<(), HarnessError> {
    match format {
        OutputFormat::Jsonl => writeln!(out, "{}", serde_json::to_string(record).expect("serialisable"))?,
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            if !*csv_header_written {
                w.write_record(BoundReport::csv_header())?;
                *csv_header_written = true;
            }
            w.write_record(record.report.csv_record())?;
            out.write_all(&w.into_inner().map_err(|e| e.into_error())?)?;
        }
        OutputFormat::Summary => {
            let r = &record.report;
            writeln!(
                out,
                "{} n={} m={} alpha1={} tau={} tau_b={} b={}",
                r.graph6, r.n, r.m, r.alpha1, r.tau, r.tau_b, r.b
            )?;
        }
    }
    Ok(())
}

/// Solves every input graph and writes one record per graph, in input order.
/// Malformed records are reported on `err` with their line number; with
/// `fail_fast` the first one aborts the run.
pub fn run_solve(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<ExitStatus, HarnessError> {
    config.validate()?;
    let pool = config.pool()?;
    let mut status = ExitStatus::Success;
    let mut csv_header = false;
    let mut pending_error = None;
    for_each_batch(&config.input, |mut batch| {
        if config.fail_fast {
            if let Some(pos) = batch.iter().position(|(_, r)| r.is_err()) {
                let (_, bad) = batch.swap_remove(pos);
                pending_error = bad.err();
                batch.truncate(pos);
            }
        }
        let records: Vec<Result<SolveRecord, (usize, Graph6Error)>> = install(&pool, || {
            batch
                .into_par_iter()
                .map(|(line, parsed)| {
                    let g = parsed.map_err(|e| (line, e))?;
                    let bipartization = (config.trials > 0).then(|| {
                        bipartization_summary(&g, config.trials, config.seed)
                            .expect("an optimal induced bipartite set is bipartite")
                    });
                    Ok(SolveRecord { report: BoundReport::evaluate(&g), bipartization })
                })
                .collect()
        });
        for record in records {
            match record {
                Ok(r) => write_record(config.format, &r, out, &mut csv_header)?,
                Err((_, e)) => {
                    writeln!(err, "warning: skipping malformed record: {e}")?;
                    status = ExitStatus::Failure;
                }
            }
        }
        Ok(pending_error.is_none())
    })?;
    if let Some(e) = pending_error {
        return Err(e.into());
    }
    Ok(status)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub holds: usize,
    pub tight: usize,
    pub fails: usize,
}

/// Everything needed to re-verify a conjecture counterexample by hand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub alpha1: usize,
    pub tau: usize,
    pub tau_b: usize,
    pub b: usize,
    pub check: CheckName,
    pub lhs: i64,
    pub rhs: i64,
}

impl Certificate {
    fn new(r: &BoundReport, check: CheckName, c: Check) -> Self {
        Self {
            graph6: r.graph6.clone(),
            n: r.n,
            m: r.m,
            alpha1: r.alpha1,
            tau: r.tau,
            tau_b: r.tau_b,
            b: r.b,
            check,
            lhs: c.lhs,
            rhs: c.rhs,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub graphs_processed: usize,
    /// Graph counts per vertex count.
    pub per_n: BTreeMap<usize, usize>,
    pub checks: BTreeMap<CheckName, CheckTally>,
    /// Graphs accepted by the join recogniser.
    pub join_accepted: usize,
    pub counterexamples: Vec<Certificate>,
    #[serde(with = "duration_secs")]
    pub wall_time: Duration,
}

mod duration_secs {
    use serde::{Deserialize, Deserializer, Serializer};
    use std::time::Duration;

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        Ok(Duration::from_secs_f64(f64::deserialize(d)?))
    }
}

impl SweepSummary {
    pub fn status(&self) -> ExitStatus {
        if self.counterexamples.is_empty() {
            ExitStatus::Success
        } else {
            ExitStatus::Counterexample
        }
    }

    fn record(&mut self, report: &BoundReport, checks: &[CheckName]) {
        self.graphs_processed += 1;
        *self.per_n.entry(report.n).or_default() += 1;
        self.join_accepted += report.join_profile.is_some() as usize;
        for &name in checks {
            let c = report.check(name);
            let tally = self.checks.entry(name).or_default();
            if c.holds {
                tally.holds += 1;
            } else {
                tally.fails += 1;
                self.counterexamples.push(Certificate::new(report, name, c));
            }
            tally.tight += c.tight as usize;
        }
    }
}

/// Table of counts; wall time is left out so the text is reproducible.
impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graphs processed: {}", self.graphs_processed)?;
        for (n, count) in &self.per_n {
            writeln!(f, "  n = {n}: {count}")?;
        }
        writeln!(f, "join recogniser accepted: {}", self.join_accepted)?;
        writeln!(f, "{:<12} {:>8} {:>8} {:>8}", "check", "holds", "tight", "fails")?;
        for (name, t) in &self.checks {
            writeln!(f, "{:<12} {:>8} {:>8} {:>8}", name.as_str(), t.holds, t.tight, t.fails)?;
        }
        writeln!(f, "counterexamples: {}", self.counterexamples.len())
    }
}

/// Sweeps every input graph through all solvers and checks. A failed theorem
/// check (or witness invariant) aborts with [`HarnessError::TheoremViolation`];
/// conjecture failures become certificates in the summary. With `jsonl` or
/// `csv` output, per-graph reports are also written to `out`.
pub fn run_verify(config: &RunConfig, out: &mut dyn Write) -> Result<SweepSummary, HarnessError> {
    config.validate()?;
    let pool = config.pool()?;
    let start = Instant::now();
    let mut summary = SweepSummary::default();
    let mut csv_header = false;
    for_each_batch(&config.input, |batch| {
        let graphs = batch
            .into_iter()
            .map(|(_, parsed)| parsed)
            .collect::<Result<Vec<Graph>, _>>()?;
        let reports: Vec<BoundReport> = install(&pool, || graphs.par_iter().map(BoundReport::evaluate).collect());
        for report in reports {
            let failures = report.theorem_failures();
            if !failures.is_empty() {
                return Err(HarnessError::TheoremViolation { graph6: report.graph6.clone(), failures });
            }
            if config.format != OutputFormat::Summary {
                let record = SolveRecord { report, bipartization: None };
                write_record(config.format, &record, out, &mut csv_header)?;
                summary.record(&record.report, &config.checks);
            } else {
                summary.record(&report, &config.checks);
            }
            if config.fail_fast && !summary.counterexamples.is_empty() {
                return Ok(false);
            }
        }
        Ok(true)
    })?;
    summary.wall_time = start.elapsed();
    debug_assert!(summary.checks.values().all(|t| t.holds + t.fails == summary.graphs_processed));
    Ok(summary)
}

/// Named graph families for `construct`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Biclique(usize, usize),
    Join(Vec<usize>),
    Cycle(usize),
}

impl Family {
    /// Parses `family` with comma- or space-separated `params`.
    pub fn parse(family: &str, params: &str) -> Result<Self, HarnessError> {
        let nums = params
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| HarnessError::Config(format!("bad parameter `{s}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        let arity = |k: usize| {
            if nums.len() == k {
                Ok(())
            } else {
                Err(HarnessError::Config(format!("family `{family}` takes {k} parameter(s), got {}", nums.len())))
            }
        };
        match family {
            "complete" => arity(1).map(|_| Family::Complete(nums[0])),
            "biclique" => arity(2).map(|_| Family::Biclique(nums[0], nums[1])),
            "cycle" => arity(1).map(|_| Family::Cycle(nums[0])),
            "join" if !nums.is_empty() => Ok(Family::Join(nums)),
            "join" => Err(HarnessError::Config("family `join` needs at least one part".into())),
            other => Err(HarnessError::Config(format!("unknown family `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub graph: Graph,
    /// For joins: the triangle-independent set of size `Σ rᵢ²`.
    pub certified: Option<EdgeSet>,
}

impl Construction {
    /// Writes the graph6 record, then for joins a line `A <size>: <ids…>`.
    pub fn write(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "{}", graph6::encode(&self.graph))?;
        if let Some(a) = &self.certified {
            let ids: Vec<String> = a.ids().map(|id| id.to_string()).collect();
            writeln!(out, "A {}: {}", a.len(), ids.join(" "))?;
        }
        Ok(())
    }
}

pub fn run_construct(family: &Family) -> Result<Construction, HarnessError> {
    let (graph, certified) = match family {
        Family::Complete(n) => (complete(*n)?, None),
        Family::Biclique(a, b) => (complete_bipartite(*a, *b)?, None),
        Family::Cycle(n) => (cycle(*n)?, None),
        Family::Join(parts) => {
            let (g, a) = JoinProfile::new(parts.clone())?.certified_set();
            if !crate::graph::is_triangle_independent(&g, &a) {
                return Err(HarnessError::TheoremViolation {
                    graph6: graph6::encode(&g),
                    failures: vec!["join construction is not triangle-independent".into()],
                });
            }
            (g, Some(a))
        }
    };
    Ok(Construction { graph, certified })
}

/// Writes every graph on `n` vertices as graph6 lines; returns the count.
pub fn run_enumerate(n: usize, out: &mut dyn Write) -> Result<usize, HarnessError> {
    let mut io_err = None;
    let count = enumerate_stream(n, |g| {
        if io_err.is_none() {
            if let Err(e) = writeln!(out, "{}", graph6::encode(g)) {
                io_err = Some(e);
            }
        }
    })?;
    match io_err {
        Some(e) => Err(e.into()),
        None => Ok(count),
    }
}
