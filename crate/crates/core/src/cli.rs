//! Command-line front end. [`run`] is pure apart from reading `--file`
//! inputs, so the binary and the tests share one code path.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::conjugacy::{
    conjugacy_class, enumerate_conjugation, enumerate_prefix_conjugates, special_conjugate2d,
};
use crate::dawg::{
    build_grid_dawg, build_line_dawg, enumerate_dawg, export_dot, to_json, Orientation,
    ProductOrder,
};
use crate::error::{Error, Result};
use crate::frames::enumerate_extension;
use crate::letter::Alphabet1D;
use crate::locator::locate;
use crate::oracle::{stable_oracle, verify};
use crate::word1d::fib_prefix;
use crate::word2d::{fib_array, mu_prefix, Seeds2D, Word2D};

#[derive(Debug, Parser)]
#[command(
    name = "fib2d",
    version,
    about = "Subwords and occurrences of the 2D Fibonacci word"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Prefix of the infinite 1D Fibonacci word
    Gen1d {
        /// Two letters, the first one leading, e.g. `ab` or `dc`
        #[arg(long, default_value = "ab")]
        alphabet: Alphabet1D,
        #[arg(long)]
        len: usize,
    },
    /// Top-left block of the infinite 2D Fibonacci word
    Gen2d {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        json: bool,
    },
    /// All subwords of size (k, l)
    Enum {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, value_enum, default_value_t = Method::Dawg)]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Occurrences of a subword
    Locate {
        /// File holding the block, one row per line
        #[arg(long, conflicts_with = "word", required_unless_present = "word")]
        file: Option<String>,
        /// The block inline, rows separated by `/`, e.g. `ddc/ddc/bba`
        #[arg(long)]
        word: Option<String>,
        #[arg(long, default_value_t = 100)]
        row_bound: u64,
        #[arg(long, default_value_t = 100)]
        col_bound: u64,
    },
    /// Conjugacy class of f_{m,n}, or its special conjugate
    Conjugates {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        special: bool,
        #[arg(long)]
        json: bool,
    },
    /// Word graph in DOT (or JSON) form
    DawgDot {
        #[arg(long, value_enum, default_value_t = GraphKind::Rows)]
        orientation: GraphKind,
        /// Longest path the graph must carry (both directions for `product`)
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check every enumeration method against the brute-force oracle
    Verify {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Dawg,
    Extend,
    Conjugate,
    Prefix,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphKind {
    Rows,
    Cols,
    Product,
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

pub const USAGE_ERROR: i32 = 2;
pub const VERIFY_FAILED: i32 = 1;

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: USAGE_ERROR,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match execute(cli.command) {
        Ok(out) => out,
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

pub fn enumerate(k: usize, l: usize, method: Method) -> Result<BTreeSet<Word2D>> {
    match method {
        Method::Dawg => enumerate_dawg(k, l),
        Method::Extend => enumerate_extension(k, l),
        Method::Conjugate => enumerate_conjugation(k, l),
        Method::Prefix => enumerate_prefix_conjugates(k, l),
        Method::Oracle => {
            if k == 0 || l == 0 {
                return Err(Error::OutOfRange(format!(
                    "subword size ({k},{l}) must be positive"
                )));
            }
            stable_oracle(k, l).map(|(set, _)| set)
        }
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

/// Blank-line separated blocks.
fn blocks<'a>(words: impl IntoIterator<Item = &'a Word2D>) -> String {
    words
        .into_iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

fn read_word(file: Option<String>, word: Option<String>) -> Result<Word2D> {
    let text = match (file, word) {
        (Some(path), _) => std::fs::read_to_string(&path)
            .map_err(|e| Error::Parse(format!("cannot read `{path}`: {e}")))?,
        (None, Some(inline)) => inline.replace('/', "\n"),
        (None, None) => return Err(Error::Parse("no input word".into())),
    };
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))
    } else {
        text.parse()
    }
}

fn execute(command: Command) -> Result<Outcome> {
    let out = match command {
        Command::Gen1d { alphabet, len } => format!("{}\n", fib_prefix(alphabet, len)),
        Command::Gen2d {
            rows,
            cols,
            json: as_json,
        } => {
            let w = mu_prefix(rows, cols)?;
            if as_json {
                json(&w)
            } else {
                w.to_string()
            }
        }
        Command::Enum {
            k,
            l,
            method,
            json: as_json,
        } => {
            let set = enumerate(k, l, method)?;
            if as_json {
                json(&set)
            } else {
                blocks(&set)
            }
        }
        Command::Locate {
            file,
            word,
            row_bound,
            col_bound,
        } => {
            let w = read_word(file, word)?;
            json(&locate(&w, row_bound, col_bound)?)
        }
        Command::Conjugates {
            m,
            n,
            special,
            json: as_json,
        } => {
            if special {
                let q = special_conjugate2d(m, n)?;
                if as_json {
                    json(&q)
                } else {
                    q.to_string()
                }
            } else {
                let class = conjugacy_class(&fib_array(m, n, Seeds2D::default()));
                if as_json {
                    json(&class)
                } else {
                    blocks(&class)
                }
            }
        }
        Command::DawgDot {
            orientation,
            max_len,
            json: as_json,
        } => {
            if max_len == 0 {
                return Err(Error::OutOfRange("--max-len must be positive".into()));
            }
            match orientation {
                GraphKind::Rows | GraphKind::Cols => {
                    let o = if orientation == GraphKind::Rows {
                        Orientation::Rows
                    } else {
                        Orientation::Cols
                    };
                    let g = build_line_dawg(o, max_len);
                    if as_json {
                        json(&to_json(&g))
                    } else {
                        export_dot(&g)
                    }
                }
                GraphKind::Product => {
                    let g = build_grid_dawg(max_len, max_len, ProductOrder::RowsThenCols, true);
                    if as_json {
                        json(&to_json(&g))
                    } else {
                        export_dot(&g)
                    }
                }
            }
        }
        Command::Verify {
            k,
            l,
            json: as_json,
        } => {
            let report = verify(k, l)?;
            let code = if report.all_pass { 0 } else { VERIFY_FAILED };
            let stdout = if as_json {
                json(&report)
            } else {
                report.to_string()
            };
            return Ok(Outcome {
                code,
                stdout,
                stderr: String::new(),
            });
        }
    };
    let mut stdout = String::new();
    write!(stdout, "{out}").unwrap();
    Ok(Outcome::ok(stdout))
}
