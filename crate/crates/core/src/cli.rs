//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 for
//! usage and configuration errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::encoding::{make_encoding, Encoding, Scheme};
use crate::forest::Forest;
use crate::gf2::BitMatrix;
use crate::oracle::{
    check_car_strings, check_car_symplectic, dense_suite, VerificationReport, DEFAULT_DENSE_LIMIT,
    MAX_DENSE_LIMIT,
};
use crate::pauli::PauliString;
use crate::polynomial::PauliPolynomial;
use crate::stats::{compare_table, render_csv, render_text};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "fermion-trees", version, about = "Fermion-to-qubit encodings from prefix-sum trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the operators, index sets, matrix or tree of an encoding.
    Emit(EmitArgs),
    /// Tabulate Pauli weights across schemes and mode counts.
    Stats(StatsArgs),
    /// Check the anticommutation relations and operator identities.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct EncodingArgs {
    #[arg(long, value_parser = parse_scheme)]
    scheme: Scheme,
    #[arg(long, value_parser = parse_positive)]
    n: usize,
    /// Forest for `--scheme custom`, one `parent child` edge per line.
    #[arg(long)]
    tree_file: Option<PathBuf>,
    /// Matrix for `--scheme custom`, one row of 0/1 characters per line.
    #[arg(long)]
    matrix_file: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum What {
    Majoranas,
    Sets,
    Matrix,
    Tree,
    Creation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct EmitArgs {
    #[command(flatten)]
    encoding: EncodingArgs,
    #[arg(long, value_enum, default_value = "majoranas")]
    what: What,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct StatsArgs {
    #[arg(long, value_parser = parse_scheme, value_delimiter = ',', required = true)]
    schemes: Vec<Scheme>,
    #[arg(long, value_parser = parse_positive)]
    n_min: usize,
    #[arg(long, value_parser = parse_positive)]
    n_max: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Same as `--format csv`.
    #[arg(long)]
    csv: bool,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Level {
    Auto,
    Dense,
    Symplectic,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    encoding: EncodingArgs,
    #[arg(long, value_enum, default_value = "auto")]
    level: Level,
    #[arg(long, default_value_t = DEFAULT_DENSE_LIMIT)]
    dense_limit: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Check these Majorana strings (dense form, one per line) instead of
    /// the ones the scheme generates.
    #[arg(long)]
    majorana_file: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
}

fn parse_scheme(s: &str) -> Result<Scheme, String> {
    s.parse().map_err(|e: crate::error::Error| e.to_string())
}

fn parse_positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

/// A failure that maps to exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, UsageError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(UsageError(msg.into()))
}

fn read_file(path: &PathBuf) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))
}

fn build_encoding(args: &EncodingArgs) -> CliResult<Encoding> {
    if args.scheme != Scheme::Custom {
        if args.tree_file.is_some() || args.matrix_file.is_some() {
            return usage("--tree-file and --matrix-file only apply to --scheme custom");
        }
        return Ok(make_encoding(args.scheme, args.n)?);
    }
    match (&args.tree_file, &args.matrix_file) {
        (Some(path), None) => {
            let forest = Forest::parse_text(args.n, &read_file(path)?)?;
            Ok(Encoding::from_forest(forest)?)
        }
        (None, Some(path)) => {
            let g = BitMatrix::parse_text(&read_file(path)?)?;
            if g.rows() != args.n {
                return usage(format!("matrix has {} rows but --n is {}", g.rows(), args.n));
            }
            Ok(Encoding::from_matrix(g)?)
        }
        _ => usage("--scheme custom needs exactly one of --tree-file or --matrix-file"),
    }
}

#[derive(Serialize)]
struct JsonMajorana {
    k: usize,
    phase: String,
    string: String,
}

#[derive(Serialize)]
struct JsonTerm {
    re_num: i64,
    im_num: i64,
    log2_den: u32,
    string: String,
}

#[derive(Serialize)]
struct JsonLadder {
    j: usize,
    terms: Vec<JsonTerm>,
}

#[derive(Serialize)]
struct JsonEncoding {
    n: usize,
    scheme: String,
    #[serde(rename = "G", skip_serializing_if = "Option::is_none")]
    g: Option<Vec<String>>,
    majoranas: Vec<JsonMajorana>,
    #[serde(skip_serializing_if = "Option::is_none")]
    creation: Option<Vec<JsonLadder>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    annihilation: Option<Vec<JsonLadder>>,
}

fn json_ladder(j: usize, p: &PauliPolynomial) -> JsonLadder {
    JsonLadder {
        j,
        terms: p
            .terms()
            .iter()
            .map(|(c, s)| JsonTerm {
                re_num: c.re_num,
                im_num: c.im_num,
                log2_den: c.log2_den,
                string: s.letters_string(),
            })
            .collect(),
    }
}

fn emit_json(e: &Encoding, with_ladders: bool) -> CliResult<String> {
    let ladders = |create: bool| -> CliResult<Vec<JsonLadder>> {
        (0..e.n())
            .map(|j| {
                let p = if create { e.creation(j)? } else { e.annihilation(j)? };
                Ok(json_ladder(j, &p))
            })
            .collect()
    };
    let doc = JsonEncoding {
        n: e.n(),
        scheme: e.scheme().to_string(),
        g: e.matrix().map(|g| g.row_vectors().iter().map(|r| r.to_string()).collect()),
        majoranas: e
            .majoranas()
            .iter()
            .enumerate()
            .map(|(k, m)| JsonMajorana {
                k,
                phase: m.phase().prefix().to_string(),
                string: m.letters_string(),
            })
            .collect(),
        creation: if with_ladders { Some(ladders(true)?) } else { None },
        annihilation: if with_ladders { Some(ladders(false)?) } else { None },
    };
    let mut out = serde_json::to_string_pretty(&doc)?;
    out.push('\n');
    Ok(out)
}

fn unsupported(e: &Encoding, what: &str) -> UsageError {
    UsageError(format!("scheme `{}` has no {what}", e.scheme()))
}

fn emit_text(e: &Encoding, what: What) -> CliResult<String> {
    let mut out = String::new();
    match what {
        What::Majoranas => {
            for (k, m) in e.majoranas().iter().enumerate() {
                writeln!(out, "k={k} {}", m.to_sparse())?;
            }
        }
        What::Sets => {
            for q in e.sets().ok_or_else(|| unsupported(e, "index sets"))? {
                writeln!(out, "{q}")?;
            }
        }
        What::Matrix => {
            out = e.matrix().ok_or_else(|| unsupported(e, "matrix"))?.to_text();
        }
        What::Tree => {
            if let Some(f) = e.forest() {
                out = f.to_text();
            } else if let Some(t) = e.ternary_tree() {
                for (p, c) in t.edges() {
                    writeln!(out, "{p} {c}")?;
                }
            } else {
                return Err(unsupported(e, "tree"));
            }
        }
        What::Creation => {
            for j in 0..e.n() {
                let p = e.creation(j).map_err(|_| unsupported(e, "creation operators"))?;
                writeln!(out, "j={j} {p}")?;
            }
        }
    }
    Ok(out)
}

fn cmd_emit(args: &EmitArgs) -> CliResult<(String, i32)> {
    let e = build_encoding(&args.encoding)?;
    let out = match args.format {
        Format::Text => emit_text(&e, args.what)?,
        Format::Json => match args.what {
            What::Majoranas => emit_json(&e, false)?,
            What::Creation => {
                if !e.scheme().is_matrix_based() {
                    return Err(unsupported(&e, "creation operators"));
                }
                emit_json(&e, true)?
            }
            _ => return usage("--format json is available for --what majoranas and --what creation"),
        },
        Format::Csv => return usage("--format csv only applies to stats"),
    };
    Ok((out, EXIT_OK))
}

fn cmd_stats(args: &StatsArgs) -> CliResult<(String, i32)> {
    if args.n_min > args.n_max {
        return usage(format!("empty range: --n-min {} > --n-max {}", args.n_min, args.n_max));
    }
    if args.schemes.contains(&Scheme::Custom) {
        return usage("stats covers the built-in schemes only");
    }
    let reports = compare_table(&args.schemes, args.n_min..=args.n_max)?;
    let format = if args.csv { Format::Csv } else { args.format };
    let out = match format {
        Format::Text => render_text(&reports),
        Format::Csv => render_csv(&reports),
        Format::Json => return usage("stats supports --format text and csv"),
    };
    Ok((out, EXIT_OK))
}

fn parse_majorana_file(text: &str, n: usize) -> CliResult<Vec<PauliString>> {
    let mut out = Vec::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let s: PauliString = line.parse()?;
        if s.num_qubits() != n {
            return usage(format!("`{line}` acts on {} qubits, expected {n}", s.num_qubits()));
        }
        out.push(s);
    }
    if out.len() != 2 * n {
        return usage(format!("expected {} Majorana strings, found {}", 2 * n, out.len()));
    }
    Ok(out)
}

fn symplectic_reports(e: &Encoding, label: &str, strings: &[PauliString]) -> Vec<VerificationReport> {
    let mut out = vec![check_car_symplectic(label, strings)];
    if let Some(sets) = e.sets() {
        let bad = sets.iter().find(|q| !q.satisfies_intersection_parities());
        out.push(VerificationReport {
            check: "check_set_parities".into(),
            scheme: label.into(),
            n: e.n(),
            pass: bad.is_none(),
            first_violation: bad.map(|q| crate::oracle::Violation {
                k: q.mode.to_string(),
                detail: format!("{q}"),
            }),
        });
    }
    out
}

fn cmd_verify(args: &VerifyArgs) -> CliResult<(String, i32)> {
    if args.dense_limit > MAX_DENSE_LIMIT {
        return usage(format!("--dense-limit is capped at {MAX_DENSE_LIMIT}"));
    }
    let e = build_encoding(&args.encoding)?;
    let n = e.n();
    let dense = match args.level {
        Level::Auto => n <= args.dense_limit,
        Level::Dense => {
            if n > args.dense_limit {
                return usage(format!("n = {n} exceeds the dense limit {}", args.dense_limit));
            }
            true
        }
        Level::Symplectic => false,
    };
    let reports = match &args.majorana_file {
        Some(path) => {
            let strings = parse_majorana_file(&read_file(path)?, n)?;
            if dense {
                vec![check_car_strings("file", &strings, args.dense_limit)?]
            } else {
                vec![check_car_symplectic("file", &strings)]
            }
        }
        None if dense => dense_suite(&e, args.dense_limit)?,
        None => symplectic_reports(&e, e.scheme().name(), e.majoranas()),
    };
    let out = match args.format {
        Format::Text => reports.iter().map(|r| format!("{r}\n")).collect(),
        Format::Json => format!("{}\n", serde_json::to_string(&reports)?),
        Format::Csv => return usage("verify supports --format text and json"),
    };
    let code = if reports.iter().all(|r| r.pass) { EXIT_OK } else { EXIT_FAILED };
    Ok((out, code))
}

fn write_output(out: &str, path: Option<&PathBuf>, stdout: &mut dyn Write) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, out).map_err(|e| UsageError(format!("cannot write {}: {e}", p.display()))),
        None => stdout.write_all(out.as_bytes()).map_err(UsageError::from),
    }
}

/// Parses `args` (program name first) and runs the command, returning the
/// exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(text.as_bytes());
            } else {
                let _ = stderr.write_all(text.as_bytes());
            }
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let (result, output) = match &cli.command {
        Command::Emit(a) => (cmd_emit(a), a.output.as_ref()),
        Command::Stats(a) => (cmd_stats(a), a.output.as_ref()),
        Command::Verify(a) => (cmd_verify(a), a.output.as_ref()),
    };
    match result.and_then(|(out, code)| write_output(&out, output, stdout).map(|_| code)) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}
