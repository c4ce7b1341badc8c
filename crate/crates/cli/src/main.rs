use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use egt_core::harness::{
    run_construct, run_enumerate, run_solve, run_verify, Command, ExitStatus, Family, HarnessError,
    InputSource, OutputFormat, RunConfig,
};
use egt_core::CheckName;

#[derive(Parser)]
#[command(name = "egt", version, about = "Exact α₁/τ/τ_B/b solvers and exhaustive bound verification")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Jsonl,
    Csv,
    Summary,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Jsonl => OutputFormat::Jsonl,
            Format::Csv => OutputFormat::Csv,
            Format::Summary => OutputFormat::Summary,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve every graph of a graph6 stream and print one report per graph.
    Solve {
        /// graph6 file, or `-` for standard input.
        #[arg(long, default_value = "-", conflicts_with = "graph")]
        input: PathBuf,
        /// A single graph6 record.
        #[arg(long)]
        graph: Option<String>,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: Format,
        #[arg(long)]
        jobs: Option<usize>,
        /// Stop at the first malformed record.
        #[arg(long)]
        fail_fast: bool,
        /// Randomized bipartization trials per graph (0 = off).
        #[arg(long, default_value_t = 0)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Sweep all graphs in a vertex range (or a graph6 stream) through every check.
    Verify {
        /// Vertex range `A..B` (inclusive) or a single `K`.
        #[arg(long, required_unless_present = "input")]
        n: Option<String>,
        /// graph6 file (or `-`) instead of the built-in enumerator.
        #[arg(long, conflicts_with = "n")]
        input: Option<PathBuf>,
        /// Checks to tally: egt, bip, cor516, lemma-nb4, lemma-taub, thm-match or all.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        check: Vec<String>,
        #[arg(long, value_enum, default_value = "summary")]
        format: Format,
        #[arg(long)]
        jobs: Option<usize>,
        /// Stop at the first counterexample.
        #[arg(long)]
        fail_fast: bool,
    },
    /// Write every non-isomorphic graph on K vertices as graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a named graph: complete N | biclique A B | join R1,..,Rt | cycle N.
    Construct {
        #[arg(long)]
        family: String,
        #[arg(long, num_args = 1.., allow_hyphen_values = true)]
        params: Vec<String>,
    },
}

fn parse_range(s: &str) -> Result<(usize, usize)> {
    let parse = |t: &str| t.trim().parse::<usize>().with_context(|| format!("bad vertex count `{t}`"));
    if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        Ok((parse(a)?, parse(b)?))
    } else {
        let k = parse(s)?;
        Ok((k, k))
    }
}

fn parse_checks(names: &[String]) -> Result<Vec<CheckName>> {
    if names.iter().any(|c| c == "all") {
        return Ok(CheckName::ALL.to_vec());
    }
    let mut checks = names.iter().map(|c| c.parse::<CheckName>()).collect::<Result<Vec<_>, _>>()?;
    checks.sort();
    checks.dedup();
    Ok(checks)
}

fn run(cli: Cli) -> Result<ExitStatus> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let status = match cli.command {
        Cmd::Solve { input, graph, format, jobs, fail_fast, trials, seed } => {
            let source = match graph {
                Some(g) => InputSource::Single(g),
                None => InputSource::Stream(input),
            };
            let mut config = RunConfig::new(Command::Solve, source);
            config.format = format.into();
            config.jobs = jobs;
            config.fail_fast = fail_fast;
            config.trials = trials;
            config.seed = seed;
            run_solve(&config, &mut out, &mut io::stderr())?
        }
        Cmd::Verify { n, input, check, format, jobs, fail_fast } => {
            let source = match (n, input) {
                (Some(range), _) => {
                    let (min_n, max_n) = parse_range(&range)?;
                    InputSource::Enumerate { min_n, max_n }
                }
                (None, Some(path)) => InputSource::Stream(path),
                (None, None) => bail!("either --n or --input is required"),
            };
            let mut config = RunConfig::new(Command::Verify, source);
            config.checks = parse_checks(&check)?;
            config.format = format.into();
            config.jobs = jobs;
            config.fail_fast = fail_fast;
            let summary = run_verify(&config, &mut out)?;
            let certs: Vec<String> = summary
                .counterexamples
                .iter()
                .map(|c| format!("counterexample {}", serde_json::to_string(c).expect("serialisable")))
                .collect();
            if config.format == OutputFormat::Summary {
                write!(out, "{summary}")?;
                for c in &certs {
                    writeln!(out, "{c}")?;
                }
            } else {
                out.flush()?;
                eprint!("{summary}");
                for c in &certs {
                    eprintln!("{c}");
                }
            }
            eprintln!("wall time: {:.3}s", summary.wall_time.as_secs_f64());
            summary.status()
        }
        Cmd::Enumerate { n, out: path } => {
            let count = match path {
                Some(p) => {
                    let mut f = BufWriter::new(File::create(&p).with_context(|| format!("creating {}", p.display()))?);
                    let count = run_enumerate(n, &mut f)?;
                    f.flush()?;
                    count
                }
                None => run_enumerate(n, &mut out)?,
            };
            eprintln!("{count} graphs on {n} vertices");
            ExitStatus::Success
        }
        Cmd::Construct { family, params } => {
            let family = Family::parse(&family, &params.join(" "))?;
            run_construct(&family)?.write(&mut out)?;
            ExitStatus::Success
        }
    };
    out.flush()?;
    Ok(status)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(status) => ExitCode::from(status.code() as u8),
        Err(e) => {
            if let Some(HarnessError::TheoremViolation { .. }) = e.downcast_ref::<HarnessError>() {
                eprintln!("internal error (theorem check failed): {e}");
            } else {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(ExitStatus::Failure.code() as u8)
        }
    }
}
