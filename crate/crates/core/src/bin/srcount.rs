use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use srcount::{
    oracle, AlignedIndex, BuildConfig, GapSpec, GappedIndex, IntervalIndex, IntervalSet,
    LabeledText, PositionIndex, SrcIndex, SrcQuery,
};

#[derive(Parser)]
#[command(name = "srcount", version)]
#[command(about = "Count pattern occurrences whose first character's label falls in a range")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BuildOpts {
    /// Override the string-depth cutoff between descent and 2D counting.
    #[arg(long)]
    tau: Option<usize>,
    /// Answer with the brute-force scan instead of the index.
    #[arg(long, hide = true)]
    oracle: bool,
}

impl BuildOpts {
    fn config(&self) -> BuildConfig {
        BuildConfig {
            threshold: self.tau,
            self_check: false,
        }
    }
}

#[derive(Args)]
struct Corpus {
    /// Text file, read as raw bytes.
    #[arg(long)]
    text: PathBuf,
    /// Whitespace-separated integer labels, one per text byte.
    #[arg(long)]
    labels: PathBuf,
    /// Largest admissible label (defaults to the full 64-bit range).
    #[arg(long)]
    universe: Option<u64>,
    /// Bytes the text may contain; others are rejected.
    #[arg(long)]
    alphabet: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Count one pattern over a label range.
    Count {
        #[command(flatten)]
        corpus: Corpus,
        #[arg(long)]
        pattern: String,
        #[arg(long, num_args = 2, required = true, value_names = ["A", "B"])]
        range: Vec<u64>,
        #[command(flatten)]
        build: BuildOpts,
    },
    /// Answer "PATTERN A B" lines from a file, one count per line.
    Batch {
        #[command(flatten)]
        corpus: Corpus,
        #[arg(long)]
        queries: PathBuf,
        #[command(flatten)]
        build: BuildOpts,
    },
    /// Count occurrences starting in positions [i, j].
    Prsc {
        #[arg(long)]
        text: PathBuf,
        #[arg(long)]
        pattern: String,
        #[arg(long = "i")]
        i: usize,
        #[arg(long = "j")]
        j: usize,
        #[command(flatten)]
        build: BuildOpts,
    },
    /// Count occurrences starting in [i, j] and inside one of the listed intervals.
    Intervals {
        #[arg(long)]
        text: PathBuf,
        /// File of "START END" lines.
        #[arg(long)]
        intervals: PathBuf,
        #[arg(long)]
        pattern: String,
        #[arg(long = "i")]
        i: usize,
        #[arg(long = "j")]
        j: usize,
        #[command(flatten)]
        build: BuildOpts,
    },
    /// Count P1 followed by exactly d characters and then P2.
    Gaps {
        #[arg(long)]
        text: PathBuf,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p1: String,
        #[arg(long)]
        p2: String,
        #[command(flatten)]
        build: BuildOpts,
    },
    /// Count positions where P1 occurs in the first text and P2 in the second.
    Aligned {
        #[arg(long)]
        text: PathBuf,
        #[arg(long)]
        text2: PathBuf,
        #[arg(long)]
        p1: String,
        #[arg(long)]
        p2: String,
        #[command(flatten)]
        build: BuildOpts,
    },
}

/// Input validation failure; exits with status 3.
struct InputError(String);

impl From<srcount::Error> for InputError {
    fn from(e: srcount::Error) -> Self {
        InputError(e.to_string())
    }
}

impl From<io::Error> for InputError {
    fn from(e: io::Error) -> Self {
        InputError(e.to_string())
    }
}

type CliResult<T> = Result<T, InputError>;

fn read_bytes(path: &Path) -> CliResult<Vec<u8>> {
    fs::read(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn read_string(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn load_corpus(c: &Corpus) -> CliResult<LabeledText> {
    let text = read_bytes(&c.text)?;
    if let Some(alpha) = &c.alphabet {
        let allowed = srcount::Alphabet::from_bytes(alpha.as_bytes());
        if let Some(p) = text.iter().position(|&b| !allowed.contains(b)) {
            return Err(InputError(format!(
                "byte 0x{:02x} at position {} is outside the declared alphabet",
                text[p],
                p + 1
            )));
        }
    }
    let labels = read_string(&c.labels)?
        .split_whitespace()
        .enumerate()
        .map(|(k, tok)| {
            tok.parse::<u64>()
                .map_err(|_| InputError(format!("label {}: cannot parse {tok:?}", k + 1)))
        })
        .collect::<CliResult<Vec<u64>>>()?;
    Ok(LabeledText::new(
        text,
        labels,
        c.universe.unwrap_or(u64::MAX),
    )?)
}

fn parse_query_line(line: &str, lineno: usize) -> CliResult<(String, u64, u64)> {
    let bad = || {
        InputError(format!(
            "queries line {lineno}: expected \"PATTERN A B\", got {line:?}"
        ))
    };
    let fields: Vec<&str> = line.split_whitespace().collect();
    let [p, a, b] = fields[..] else {
        return Err(bad());
    };
    Ok((
        p.to_string(),
        a.parse().map_err(|_| bad())?,
        b.parse().map_err(|_| bad())?,
    ))
}

// Counts one query either with the index or the oracle, validating the same way.
fn answer(
    lt: &LabeledText,
    idx: Option<&SrcIndex>,
    pattern: &[u8],
    a: u64,
    b: u64,
) -> srcount::Result<usize> {
    let q = SrcQuery::new(pattern, a, b)?;
    match idx {
        Some(idx) => idx.count(&q),
        None => {
            if a > lt.universe() || b > lt.universe() {
                return Err(srcount::Error::InvalidInput(format!(
                    "label range [{a}, {b}] exceeds universe {}",
                    lt.universe()
                )));
            }
            Ok(oracle::naive_count(lt, pattern, a, b))
        }
    }
}

fn build_index(lt: &LabeledText, opts: &BuildOpts) -> CliResult<Option<SrcIndex>> {
    if opts.oracle {
        if lt.is_empty() {
            return Err(InputError("text must be non-empty".into()));
        }
        return Ok(None);
    }
    Ok(Some(SrcIndex::build(lt, &opts.config())?))
}

fn parse_intervals(path: &Path) -> CliResult<IntervalSet> {
    let mut out = Vec::new();
    for (k, line) in read_string(path)?.lines().enumerate() {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parsed = match fields[..] {
            [s, e] => s.parse::<usize>().ok().zip(e.parse::<usize>().ok()),
            _ => None,
        };
        let Some(pair) = parsed else {
            return Err(InputError(format!(
                "intervals line {}: expected \"START END\"",
                k + 1
            )));
        };
        out.push(pair);
    }
    Ok(IntervalSet::new(out)?)
}

fn run(cmd: Command, out: &mut impl Write) -> CliResult<()> {
    match cmd {
        Command::Count {
            corpus,
            pattern,
            range,
            build,
        } => {
            let lt = load_corpus(&corpus)?;
            let idx = build_index(&lt, &build)?;
            let n = answer(&lt, idx.as_ref(), pattern.as_bytes(), range[0], range[1])?;
            writeln!(out, "{n}")?;
        }
        Command::Batch {
            corpus,
            queries,
            build,
        } => {
            let lt = load_corpus(&corpus)?;
            let parsed = read_string(&queries)?
                .lines()
                .enumerate()
                .map(|(k, line)| parse_query_line(line, k + 1))
                .collect::<CliResult<Vec<_>>>()?;
            let idx = build_index(&lt, &build)?;
            let counts: Vec<CliResult<usize>> = parsed
                .par_iter()
                .enumerate()
                .map(|(k, (p, a, b))| {
                    answer(&lt, idx.as_ref(), p.as_bytes(), *a, *b)
                        .map_err(|e| InputError(format!("queries line {}: {e}", k + 1)))
                })
                .collect();
            for c in counts {
                writeln!(out, "{}", c?)?;
            }
        }
        Command::Prsc {
            text,
            pattern,
            i,
            j,
            build,
        } => {
            let s = read_bytes(&text)?;
            let n = if build.oracle {
                if i == 0 || i > j || j > s.len() {
                    return Err(InputError(format!(
                        "position range [{i}, {j}] not within [1, {}]",
                        s.len()
                    )));
                }
                oracle::naive_prsc(&s, pattern.as_bytes(), i, j)
            } else {
                PositionIndex::build(&s, &build.config())?.count(pattern.as_bytes(), i, j)?
            };
            writeln!(out, "{n}")?;
        }
        Command::Intervals {
            text,
            intervals,
            pattern,
            i,
            j,
            build,
        } => {
            let s = read_bytes(&text)?;
            let pi = parse_intervals(&intervals)?;
            let n = if build.oracle {
                if i == 0 || j > s.len() || pi.intervals().iter().any(|&(_, e)| e > s.len()) {
                    return Err(InputError(
                        "interval or position range outside the text".into(),
                    ));
                }
                oracle::naive_intervals(&s, pi.intervals(), pattern.as_bytes(), i, j)
            } else {
                IntervalIndex::build(&s, &pi, &build.config())?.count(pattern.as_bytes(), i, j)?
            };
            writeln!(out, "{n}")?;
        }
        Command::Gaps {
            text,
            d,
            p1,
            p2,
            build,
        } => {
            let s = read_bytes(&text)?;
            if p1.is_empty() || p2.is_empty() || s.is_empty() {
                return Err(InputError("text and patterns must be non-empty".into()));
            }
            let n = if build.oracle {
                oracle::naive_gaps(&s, d, p1.as_bytes(), p2.as_bytes())
            } else {
                GappedIndex::build(&s, GapSpec { d }, &build.config())?
                    .count(p1.as_bytes(), p2.as_bytes())?
            };
            writeln!(out, "{n}")?;
        }
        Command::Aligned {
            text,
            text2,
            p1,
            p2,
            build,
        } => {
            let s1 = read_bytes(&text)?;
            let s2 = read_bytes(&text2)?;
            if p1.is_empty() || p2.is_empty() || s1.is_empty() || s2.is_empty() {
                return Err(InputError("texts and patterns must be non-empty".into()));
            }
            let n = if build.oracle {
                oracle::naive_aligned(&s1, &s2, p1.as_bytes(), p2.as_bytes())
            } else {
                AlignedIndex::build(&s1, &s2, &build.config())?
                    .count(p1.as_bytes(), p2.as_bytes())?
            };
            writeln!(out, "{n}")?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(InputError::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(InputError(msg)) => {
            eprintln!("srcount: {msg}");
            ExitCode::from(3)
        }
    }
}
