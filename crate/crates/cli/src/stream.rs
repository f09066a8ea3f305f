//! Line-oriented graph6 input with optional parallel, order-preserving
//! processing.

use std::fmt;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use clap::Args;
use rayon::prelude::*;

use nutkit::graph::{parse_graph6, Graph};

/// Failure of a subcommand, mapped to the process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments: exit 2.
    Usage(String),
    /// Malformed or unsuitable input: exit 1.
    Input(String),
    /// A verification check failed: exit 1.
    Failed(String),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Input(_) | CliError::Failed(_) | CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Input(m) | CliError::Failed(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

#[derive(Debug, Clone, Args)]
pub struct StreamArgs {
    /// graph6 file, one graph per line; stdin when absent
    pub path: Option<PathBuf>,
    /// Skip malformed lines with a warning instead of failing
    #[arg(long)]
    pub lenient: bool,
    /// Worker threads; output stays in input order
    #[arg(long, env = "NUTKIT_JOBS", default_value_t = 1)]
    pub jobs: usize,
}

/// One parsed input line.
pub struct Item {
    pub line: usize,
    pub text: String,
    pub graph: Graph,
}

fn open(path: Option<&Path>) -> Result<Box<dyn BufRead>, CliError> {
    Ok(match path {
        None => Box::new(BufReader::new(io::stdin().lock())),
        Some(p) => {
            let f = File::open(p).map_err(|e| CliError::Usage(format!("cannot open {}: {e}", p.display())))?;
            Box::new(BufReader::new(f))
        }
    })
}

pub fn thread_pool(jobs: usize) -> Result<rayon::ThreadPool, CliError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {jobs} worker threads: {e}")))
}

/// Parses the input line by line, evaluates `f` on batches of graphs in
/// parallel and hands the results to `emit` in input order. Memory is
/// bounded by the batch size, not the input length.
pub fn for_each<T, F, E>(args: &StreamArgs, f: F, mut emit: E) -> Result<(), CliError>
where
    T: Send,
    F: Fn(&Item) -> T + Sync,
    E: FnMut(&Item, T) -> Result<(), CliError>,
{
    let reader = open(args.path.as_deref())?;
    let pool = thread_pool(args.jobs)?;
    let batch_size = 64 * args.jobs.max(1);
    let mut batch: Vec<Item> = Vec::with_capacity(batch_size);
    let mut flush = |batch: &mut Vec<Item>| -> Result<(), CliError> {
        let results: Vec<T> = pool.install(|| batch.par_iter().map(&f).collect());
        for (item, r) in batch.iter().zip(results) {
            emit(item, r)?;
        }
        batch.clear();
        Ok(())
    };
    for (k, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        match parse_graph6(text.as_bytes()) {
            Ok(graph) => batch.push(Item { line: k + 1, text: text.to_string(), graph }),
            Err(e) if args.lenient => eprintln!("warning: line {}: {e}; skipped", k + 1),
            Err(e) => {
                flush(&mut batch)?;
                return Err(CliError::Input(format!("line {}: {e}", k + 1)));
            }
        }
        if batch.len() == batch_size {
            flush(&mut batch)?;
        }
    }
    flush(&mut batch)
}

pub fn json_line<W: Write, T: serde::Serialize>(out: &mut W, value: &T) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value).map_err(|e| CliError::Io(e.into()))?;
    out.write_all(b"\n")?;
    Ok(())
}
