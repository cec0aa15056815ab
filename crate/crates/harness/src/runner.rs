//! Ordered batch processing of graph6 streams.
//!
//! Input lines are read in chunks of `batch_size * workers`, each chunk is
//! split into batches processed concurrently, and results are written in
//! input order by a single writer. A checkpoint, when requested, is saved
//! after every chunk.

use std::collections::BTreeMap;
use std::fs::OpenOptions;
use std::io::{self, BufRead, BufWriter, Seek, SeekFrom, Write};
use std::path::Path;

use gammatheta_core::{parse_graph6, Graph, Graph6Error};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::checkpoint::Checkpoint;
use crate::pool::Pool;
use crate::record::SCHEMA_VERSION;

pub const DEFAULT_BATCH_SIZE: usize = 256;

/// The result of processing one graph.
pub struct Processed<R> {
    pub record: Option<R>,
    /// Counter names to increment by one.
    pub counts: Vec<&'static str>,
}

pub trait Task: Sync {
    type Record: Serialize + Send;

    /// A stable description; a checkpoint written by one task is not resumed
    /// by another.
    fn describe(&self) -> String;

    fn process(&self, g: &Graph) -> Processed<Self::Record>;
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    /// Input lines consumed, including blank and malformed ones.
    pub lines: u64,
    pub graphs: u64,
    pub malformed: u64,
    pub emitted: u64,
    pub counts: BTreeMap<String, u64>,
}

impl Summary {
    pub fn count(&self, name: &str) -> u64 {
        self.counts.get(name).copied().unwrap_or(0)
    }
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub batch_size: usize,
    /// Worker threads; `None` uses every core.
    pub jobs: Option<usize>,
    /// Abort on the first malformed record.
    pub strict: bool,
    /// Stop after consuming this many input lines in total.
    pub limit: Option<u64>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            batch_size: DEFAULT_BATCH_SIZE,
            jobs: None,
            strict: false,
            limit: None,
        }
    }
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {error}")]
    Malformed { line: u64, error: Graph6Error },
    #[error("checkpoint belongs to task {found:?}, not {expected:?}")]
    CheckpointMismatch { expected: String, found: String },
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

enum Parsed {
    Blank,
    Graph(Graph),
    Malformed(Graph6Error),
}

fn parse_line(line: &str) -> Parsed {
    let trimmed = line.trim_end_matches(['\n', '\r']);
    if trimmed.trim().is_empty() {
        return Parsed::Blank;
    }
    match parse_graph6(trimmed) {
        Ok(g) => Parsed::Graph(g),
        Err(e) => Parsed::Malformed(e),
    }
}

/// Processes `input` from the cursor in `start`, calling `emit` for every
/// record in input order and `on_chunk` after every chunk.
pub fn run<T: Task>(
    task: &T,
    mut input: impl BufRead,
    opts: &RunOptions,
    start: Summary,
    mut emit: impl FnMut(&T::Record) -> io::Result<()>,
    mut on_chunk: impl FnMut(&Summary) -> Result<(), RunError>,
) -> Result<Summary, RunError> {
    let pool = Pool::new(opts.jobs)?;
    let batch_size = opts.batch_size.max(1);
    let chunk_lines = batch_size * pool.workers() * 4;
    let mut summary = start;

    let mut line = String::new();
    for _ in 0..summary.lines {
        line.clear();
        if input.read_line(&mut line)? == 0 {
            break;
        }
    }

    loop {
        let mut chunk = Vec::with_capacity(chunk_lines);
        let first_line = summary.lines + 1;
        while chunk.len() < chunk_lines && opts.limit.is_none_or(|l| summary.lines + (chunk.len() as u64) < l) {
            line.clear();
            if input.read_line(&mut line)? == 0 {
                break;
            }
            chunk.push(line.clone());
        }
        if chunk.is_empty() {
            break;
        }
        let batches: Vec<&[String]> = chunk.chunks(batch_size).collect();
        let results = pool.map(&batches, |batch| {
            batch
                .iter()
                .map(|l| match parse_line(l) {
                    Parsed::Graph(g) => Ok(Some(task.process(&g))),
                    Parsed::Blank => Ok(None),
                    Parsed::Malformed(e) => Err(e),
                })
                .collect::<Vec<_>>()
        });
        for (offset, result) in results.into_iter().flatten().enumerate() {
            let line_no = first_line + offset as u64;
            match result {
                Ok(None) => {}
                Ok(Some(p)) => {
                    summary.graphs += 1;
                    for name in p.counts {
                        *summary.counts.entry(name.to_string()).or_default() += 1;
                    }
                    if let Some(r) = p.record {
                        emit(&r)?;
                        summary.emitted += 1;
                    }
                }
                Err(error) => {
                    if opts.strict {
                        return Err(RunError::Malformed { line: line_no, error });
                    }
                    eprintln!("line {line_no}: {error}");
                    summary.malformed += 1;
                }
            }
            summary.lines = line_no;
        }
        on_chunk(&summary)?;
    }
    Ok(summary)
}

/// Runs `task` and collects the records in memory.
pub fn collect<T: Task>(task: &T, input: impl BufRead, opts: &RunOptions) -> Result<(Vec<T::Record>, Summary), RunError>
where
    T::Record: Clone,
{
    let mut records = Vec::new();
    let summary = run(
        task,
        input,
        opts,
        Summary::default(),
        |r| {
            records.push(r.clone());
            Ok(())
        },
        |_| Ok(()),
    )?;
    Ok((records, summary))
}

fn write_jsonl<R: Serialize, W: Write + ?Sized>(w: &mut W, r: &R) -> io::Result<()> {
    serde_json::to_writer(&mut *w, r)?;
    w.write_all(b"\n")
}

/// Runs `task`, writing one JSON line per record to `out`.
pub fn run_jsonl<T: Task>(task: &T, input: impl BufRead, out: &mut dyn Write, opts: &RunOptions) -> Result<Summary, RunError> {
    let summary = run(task, input, opts, Summary::default(), |r| write_jsonl(out, r), |_| Ok(()))?;
    out.flush()?;
    Ok(summary)
}

struct CountingWriter<W> {
    inner: W,
    bytes: u64,
}

impl<W: Write> Write for CountingWriter<W> {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        let n = self.inner.write(buf)?;
        self.bytes += n as u64;
        Ok(n)
    }

    fn flush(&mut self) -> io::Result<()> {
        self.inner.flush()
    }
}

/// Runs `task` writing JSONL to the file `out`, resuming from `checkpoint`
/// if it exists. On resume the output file is cut back to the length the
/// checkpoint recorded, so records written after the last checkpoint are not
/// duplicated.
pub fn run_jsonl_resumable<T: Task>(
    task: &T,
    input: impl BufRead,
    out: &Path,
    checkpoint: &Path,
    opts: &RunOptions,
) -> Result<Summary, RunError> {
    let description = task.describe();
    let previous = Checkpoint::load(checkpoint)?;
    if let Some(cp) = &previous {
        if cp.task != description {
            return Err(RunError::CheckpointMismatch {
                expected: description,
                found: cp.task.clone(),
            });
        }
    }
    let (start, bytes) = previous.map(|cp| (cp.summary, cp.output_bytes)).unwrap_or_default();

    let mut file = OpenOptions::new().create(true).write(true).truncate(false).open(out)?;
    file.set_len(bytes)?;
    file.seek(SeekFrom::End(0))?;
    let mut writer = CountingWriter {
        inner: BufWriter::new(file),
        bytes,
    };

    let save = |writer: &mut CountingWriter<BufWriter<std::fs::File>>, summary: &Summary, complete: bool| -> Result<(), RunError> {
        writer.flush()?;
        writer.inner.get_ref().sync_data()?;
        Checkpoint {
            schema_version: SCHEMA_VERSION,
            task: description.clone(),
            output_bytes: writer.bytes,
            complete,
            summary: summary.clone(),
        }
        .save(checkpoint)?;
        Ok(())
    };

    // `emit` and `on_chunk` both need the writer; route through a cell.
    let writer = std::cell::RefCell::new(&mut writer);
    let summary = run(
        task,
        input,
        opts,
        start,
        |r| write_jsonl(&mut **writer.borrow_mut(), r),
        |s| save(&mut writer.borrow_mut(), s, false),
    )?;
    save(&mut writer.borrow_mut(), &summary, opts.limit.is_none_or(|l| summary.lines < l))?;
    Ok(summary)
}
