//! The `olps` command: read a program, solve it, print the answer sets.
//!
//! Exit status is 0 when at least one answer set was found, 1 when there
//! are none, and 2 on any input error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use olp_core::semantics::{enumerate_extended_answer_sets_limited, AnswerSetKind, AnswerSetReport};
use olp_core::prefsolve::{preferred_answer_sets, SolveOptions};
use olp_core::{elaborate, elaborate_repair, oracle, syntax, Dialect, Elaborated, Interpretation};
use serde::Serialize;
use thiserror::Error;

pub const EXIT_FOUND: i32 = 0;
pub const EXIT_NONE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Extended,
    Preferred,
    Proper,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum DialectArg {
    Olp,
    Lpod,
    Cr,
    Repair,
}

impl From<DialectArg> for Dialect {
    fn from(d: DialectArg) -> Dialect {
        match d {
            DialectArg::Olp => Dialect::Olp,
            DialectArg::Lpod => Dialect::Lpod,
            DialectArg::Cr => Dialect::Cr,
            DialectArg::Repair => Dialect::Repair,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Compute answer sets of ordered logic programs.
#[derive(Parser, Debug)]
#[command(name = "olps", version)]
pub struct Args {
    /// Program file (`-` for standard input). The repair dialect takes the
    /// database file followed by the constraint file.
    #[arg(required = true, num_args = 1..=2)]
    pub files: Vec<PathBuf>,

    /// Which answer sets to report.
    #[arg(long, value_enum, default_value = "proper")]
    pub mode: Mode,

    /// Input dialect; defaults to the document's `#dialect` directive, else olp.
    #[arg(long, value_enum)]
    pub dialect: Option<DialectArg>,

    /// Report at most N answer sets.
    #[arg(long, value_name = "N")]
    pub max: Option<usize>,

    /// Use exhaustive enumeration instead of the solver.
    #[arg(long)]
    pub oracle: bool,

    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,

    /// Print the parsed document in canonical form and exit.
    #[arg(long)]
    pub print: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}: {1}")]
    Io(String, std::io::Error),
    #[error("{0}")]
    Core(#[from] olp_core::Error),
    #[error("{0}")]
    Usage(String),
}

/// One reported answer set.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Record {
    /// Literals, projected onto the input's atoms for translated dialects.
    pub literals: Vec<String>,
    /// Labels of the rules of the solved program the answer set satisfies.
    pub reduct: Vec<String>,
    /// Labels of the rules it leaves unsatisfied; each one is defeated.
    pub defeated: Vec<String>,
}

/// Everything one run reports.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Output {
    pub dialect: String,
    pub mode: String,
    pub solver: String,
    pub count: usize,
    pub answer_sets: Vec<Record>,
}

impl Output {
    pub fn text(&self) -> String {
        self.answer_sets
            .iter()
            .map(|r| format!("{{ {} }}\n", r.literals.join(", ")).replace("{  }", "{ }"))
            .collect()
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    let name = path.display().to_string();
    if name == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(|e| CliError::Io(name, e))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Io(name, e))
    }
}

/// Parses, elaborates and, unless `--print` was given, solves.
pub fn load(args: &Args) -> Result<Elaborated, CliError> {
    let first = read(&args.files[0])?;
    let requested = args.dialect.map(Dialect::from);
    if requested == Some(Dialect::Repair) {
        let [_, cons] = args.files.as_slice() else {
            return Err(CliError::Usage("the repair dialect needs a database file and a constraint file".into()));
        };
        return Ok(elaborate_repair(&first, &read(cons)?)?);
    }
    if args.files.len() > 1 {
        return Err(CliError::Usage("only the repair dialect takes two files".into()));
    }
    let mut doc = syntax::parse(&first).map_err(olp_core::Error::from)?;
    if let Some(d) = requested {
        doc.dialect = d;
    }
    Ok(elaborate(&doc)?)
}

fn kind(mode: Mode) -> AnswerSetKind {
    match mode {
        Mode::Extended => AnswerSetKind::Extended,
        Mode::Preferred => AnswerSetKind::Preferred,
        Mode::Proper => AnswerSetKind::ProperPreferred,
    }
}

/// Answer sets of the elaborated program, projected, deduplicated and
/// sorted, as full interpretations of the solved program.
pub fn solve(e: &Elaborated, mode: Mode, use_oracle: bool, max: Option<usize>) -> Result<Vec<AnswerSetReport>, CliError> {
    let op = &e.target;
    let p = op.program();
    let found: Vec<Interpretation> = match (mode, use_oracle) {
        (Mode::Extended, false) => enumerate_extended_answer_sets_limited(p, None),
        (Mode::Extended, true) => oracle::extended_answer_sets(p)?,
        (Mode::Preferred, true) => oracle::brute_force_preferred(op)?,
        (Mode::Proper, true) => oracle::brute_force_proper_preferred(op)?,
        (m, false) => {
            let opts = SolveOptions { proper: m == Mode::Proper, prune: true, max: None };
            preferred_answer_sets(op, opts).into_iter().map(|r| r.interpretation).collect()
        }
    };
    let mut seen = std::collections::BTreeSet::new();
    let mut out: Vec<AnswerSetReport> = Vec::new();
    let mut keyed: Vec<(Interpretation, Interpretation)> = found.into_iter().map(|m| (e.project(&m), m)).collect();
    keyed.sort();
    for (shown, full) in keyed {
        if seen.insert(shown) {
            out.push(AnswerSetReport::new(p, full, kind(mode)));
        }
    }
    if let Some(n) = max {
        out.truncate(n);
    }
    Ok(out)
}

/// Runs the command with already parsed arguments.
pub fn execute(args: &Args) -> Result<Output, CliError> {
    let e = load(args)?;
    let reports = solve(&e, args.mode, args.oracle, args.max)?;
    let p = e.target.program();
    let answer_sets: Vec<Record> = reports
        .iter()
        .map(|r| Record {
            literals: e.project(&r.interpretation).iter().map(|l| l.to_string()).collect(),
            reduct: r.reduct_labels.clone(),
            defeated: r.defeated_labels(p).into_iter().map(str::to_string).collect(),
        })
        .collect();
    Ok(Output {
        dialect: e.dialect.name().to_string(),
        mode: kind(args.mode).name().to_string(),
        solver: if args.oracle { "oracle" } else { "aset" }.to_string(),
        count: answer_sets.len(),
        answer_sets,
    })
}

/// Entry point shared by the binary and the tests.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_INPUT;
            }
            let _ = write!(out, "{e}");
            return EXIT_FOUND;
        }
    };
    if args.print {
        return match read(&args.files[0]).and_then(|t| syntax::parse(&t).map_err(|e| olp_core::Error::from(e).into())) {
            Ok(doc) => {
                let _ = write!(out, "{}", doc.print());
                EXIT_FOUND
            }
            Err(e) => {
                let _ = writeln!(err, "olps: {e}");
                EXIT_INPUT
            }
        };
    }
    match execute(&args) {
        Ok(o) => {
            let text = match args.format {
                Format::Text => o.text(),
                Format::Json => serde_json::to_string_pretty(&o).expect("output serializes") + "\n",
            };
            let _ = out.write_all(text.as_bytes());
            if o.count > 0 {
                EXIT_FOUND
            } else {
                EXIT_NONE
            }
        }
        Err(e) => {
            let _ = writeln!(err, "olps: {e}");
            EXIT_INPUT
        }
    }
}
