use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use gammatheta_core::criticality::ReportOptions;
use gammatheta_core::eternal::{evaluate_strategy, find_winning_attack, safe_family, AttackSequence, DEFAULT_ATTACK_BUDGET};
use gammatheta_core::invariants::DEFAULT_MCP_CAP;
use gammatheta_core::{parse_graph6, VertexSet};
use gammatheta_harness::{
    classify, run_jsonl, run_jsonl_resumable, ClassifyTask, Filter, HuntMode, HuntTask, ObstructTask, RunError, RunOptions,
    Summary, Task,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "gammatheta", version, about = "Domination, eternal domination and clique cover numbers of graph6 corpora")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every invariant, with witnesses, for one graph6 record (or each line of stdin with `-`).
    Invariants { graph6: String },
    /// Classify every graph of a stream to JSONL.
    Classify {
        #[command(flatten)]
        run: RunArgs,
        /// Attach witness sets to each record.
        #[arg(long)]
        certificates: bool,
    },
    /// Classify the graphs of a stream that pass the filters.
    Scan {
        #[command(flatten)]
        run: RunArgs,
        /// `planar`, `theta<=K` or `n<=K`; repeatable.
        #[arg(long = "filter")]
        filters: Vec<Filter>,
        #[arg(long)]
        certificates: bool,
    },
    /// Search a stream for counterexamples with prefiltering.
    Hunt {
        #[command(flatten)]
        run: RunArgs,
        /// `planar-gamma-theta` or `max-demand`.
        #[arg(long)]
        mode: HuntMode,
    },
    /// Report the obstructions to being a minimal planar counterexample.
    Obstruct {
        #[command(flatten)]
        run: RunArgs,
        /// Check every independent set, not only those of size at most 2.
        #[arg(long)]
        full_depth: bool,
        /// Cap on minimum clique partitions enumerated per search.
        #[arg(long, default_value_t = DEFAULT_MCP_CAP)]
        cap_mcp: usize,
    },
    /// Evaluate attack strategies against a guard configuration.
    Strategy {
        #[command(subcommand)]
        command: StrategyCommand,
    },
    /// Run the interactive game server.
    Game {
        #[command(subcommand)]
        command: GameCommand,
    },
}

#[derive(Subcommand)]
enum StrategyCommand {
    /// Play a fixed attack sequence (or search for a winning one) against `--guards`.
    Eval {
        graph6: String,
        /// Comma-separated 0-based guard positions.
        #[arg(long, value_delimiter = ',', required = true)]
        guards: Vec<usize>,
        /// Comma-separated attacked vertices.
        #[arg(long, value_delimiter = ',', conflicts_with = "find")]
        attacks: Vec<usize>,
        /// Search for a shortest winning attack sequence instead.
        #[arg(long)]
        find: bool,
    },
}

#[derive(Subcommand)]
enum GameCommand {
    Serve {
        #[arg(long, default_value = "127.0.0.1:8080")]
        addr: String,
        /// Idle seconds before a session is evicted.
        #[arg(long, default_value_t = 3600)]
        ttl_secs: u64,
    },
}

#[derive(Args)]
struct RunArgs {
    /// graph6 file, or `-` for stdin.
    #[arg(default_value = "-")]
    input: String,
    /// Output file; stdout when omitted.
    #[arg(long, short)]
    out: Option<PathBuf>,
    /// Resume from and periodically save to this file. Requires `--out`.
    #[arg(long, requires = "out")]
    checkpoint: Option<PathBuf>,
    /// Abort on the first malformed record.
    #[arg(long)]
    strict: bool,
    /// Worker threads; all cores when omitted.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, default_value_t = gammatheta_harness::runner::DEFAULT_BATCH_SIZE)]
    batch_size: usize,
    /// Stop after this many input lines.
    #[arg(long)]
    limit: Option<u64>,
}

impl RunArgs {
    fn options(&self) -> RunOptions {
        RunOptions {
            batch_size: self.batch_size,
            jobs: self.jobs,
            strict: self.strict,
            limit: self.limit,
        }
    }

    fn input(&self) -> Result<Box<dyn BufRead>> {
        if self.input == "-" {
            return Ok(Box::new(BufReader::new(io::stdin())));
        }
        let file = File::open(&self.input).with_context(|| format!("opening {}", self.input))?;
        Ok(Box::new(BufReader::new(file)))
    }

    fn execute<T: Task>(&self, task: &T) -> Result<Summary, RunError> {
        let input = self.input().map_err(|e| RunError::Io(io::Error::other(e)))?;
        let opts = self.options();
        match (&self.out, &self.checkpoint) {
            (Some(out), Some(cp)) => run_jsonl_resumable(task, input, out, cp, &opts),
            (Some(out), None) => run_jsonl(task, input, &mut BufWriter::new(File::create(out)?), &opts),
            (None, _) => run_jsonl(task, input, &mut BufWriter::new(io::stdout().lock()), &opts),
        }
    }
}

/// Exit status 1 when any of `counters` is nonzero, 2 on strict-mode input
/// errors.
fn finish(result: Result<Summary, RunError>, counters: &[&str]) -> Result<ExitCode> {
    match result {
        Ok(summary) => {
            eprintln!("{}", serde_json::to_string(&summary)?);
            let dirty = counters.iter().any(|c| summary.count(c) > 0);
            Ok(ExitCode::from(u8::from(dirty)))
        }
        Err(e @ RunError::Malformed { .. }) => {
            eprintln!("error: {e}");
            Ok(ExitCode::from(2))
        }
        Err(e) => Err(e.into()),
    }
}

fn invariants(arg: &str) -> Result<ExitCode> {
    let lines: Vec<String> = if arg == "-" {
        io::stdin().lock().lines().collect::<io::Result<_>>()?
    } else {
        vec![arg.to_string()]
    };
    let mut out = io::stdout().lock();
    for line in lines.iter().filter(|l| !l.trim().is_empty()) {
        let g = parse_graph6(line.trim()).with_context(|| format!("parsing {line:?}"))?;
        let mut record = classify(&g, true);
        record.timings = Default::default();
        serde_json::to_writer_pretty(&mut out, &record)?;
        writeln!(out)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn strategy_eval(graph6: &str, guards: &[usize], attacks: Vec<usize>, find: bool) -> Result<ExitCode> {
    let g = parse_graph6(graph6)?;
    for &v in guards {
        g.check_vertex(v)?;
    }
    let d: VertexSet = guards.iter().collect();
    if d.len() != guards.len() {
        bail!("guards must be distinct");
    }
    let out = if find {
        let family = safe_family(&g, d.len())?;
        match find_winning_attack(&family, d, DEFAULT_ATTACK_BUDGET)? {
            None => json!({ "eternal": true, "winning_attack": null }),
            Some(w) => {
                let outcome = evaluate_strategy(&g, d, w.attacks()).ok();
                json!({ "eternal": false, "winning_attack": w, "outcome": outcome })
            }
        }
    } else {
        let a = AttackSequence::new(attacks).context("pass --attacks or --find")?;
        json!(evaluate_strategy(&g, d, &a)?)
    };
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Invariants { graph6 } => invariants(&graph6),
        Command::Classify { run, certificates } => finish(
            run.execute(&ClassifyTask {
                filters: vec![],
                certificates,
            }),
            &["gamma_theta_failures", "chain_violations", "solver_failures"],
        ),
        Command::Scan {
            run,
            filters,
            certificates,
        } => finish(
            run.execute(&ClassifyTask { filters, certificates }),
            &["gamma_theta_failures", "chain_violations", "solver_failures"],
        ),
        Command::Hunt { run, mode } => finish(run.execute(&HuntTask { mode }), &["counterexamples"]),
        Command::Obstruct {
            run,
            full_depth,
            cap_mcp,
        } => finish(
            run.execute(&ObstructTask {
                options: ReportOptions {
                    full_depth,
                    mcp_cap: cap_mcp,
                },
            }),
            &["unobstructed"],
        ),
        Command::Strategy {
            command: StrategyCommand::Eval {
                graph6,
                guards,
                attacks,
                find,
            },
        } => strategy_eval(&graph6, &guards, attacks, find),
        Command::Game {
            command: GameCommand::Serve { addr, ttl_secs },
        } => serve(&addr, ttl_secs),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(2)
    })
}

fn serve(addr: &str, ttl_secs: u64) -> Result<ExitCode> {
    let runtime = tokio::runtime::Runtime::new()?;
    runtime.block_on(async {
        let listener = tokio::net::TcpListener::bind(addr)
            .await
            .with_context(|| format!("binding {addr}"))?;
        eprintln!("listening on http://{}", listener.local_addr()?);
        gammatheta_server::serve(listener, std::time::Duration::from_secs(ttl_secs)).await?;
        Ok(ExitCode::SUCCESS)
    })
}
