//! The `akivis` command line.
//!
//! Exit codes: 0 when every check passes, 1 when an identity or
//! verification fails, 2 for usage, parse and truncation errors.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::akivis::AkivisSpec;
use crate::algebra::Algebra;
use crate::basis::GradedBasis;
use crate::catalog::{build_example, catalog};
use crate::envelope::{graded_dims, Envelope, TruncationPolicy, MAX_DEGREE_ENV};
use crate::expr::{parse_expr, Mode};
use crate::format::{emit, AlgebraFile};
use crate::identity::{
    check_akivis_identity_with, check_lie_with, check_malcev_ternary_with,
    check_superanticommutative_with, classify, CheckOptions, CheckReport, DEFAULT_MAX_WITNESSES,
};
use crate::report::{AlgebraSummary, CheckRecord, RunReport};
use crate::scalar::Scalar;
use crate::vector::Vector;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "akivis",
    version,
    about = "Exact computations with Akivis superalgebras and their enveloping algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check an identity on every basis tuple
    Check(CheckArgs),
    /// Print lie, malcev-presented, proper-akivis or not-akivis
    Classify {
        file: PathBuf,
    },
    /// Print a structure table, rows indexed by the left factor
    Table {
        file: PathBuf,
        #[arg(long, value_enum)]
        op: Option<TableOp>,
    },
    /// Built-in example algebras
    #[command(subcommand)]
    Example(ExampleCmd),
    /// The enveloping superalgebra
    #[command(subcommand)]
    Envelope(EnvelopeCmd),
}

#[derive(Args, Debug)]
struct CheckArgs {
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = IdentityName::Akivis)]
    identity: IdentityName,
    /// Write a JSON report to this path
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_MAX_WITNESSES)]
    max_witnesses: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum IdentityName {
    Akivis,
    Superanticomm,
    Lie,
    MalcevTernary,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum TableOp {
    Bracket,
    Ternary,
    Product,
}

#[derive(Subcommand, Debug)]
enum ExampleCmd {
    /// Write a catalog algebra in the algebra file format
    Emit {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the catalog
    List,
}

#[derive(Args, Debug)]
struct DegreeArg {
    /// Truncation degree
    #[arg(long, env = MAX_DEGREE_ENV, default_value_t = 4)]
    max_degree: usize,
}

#[derive(Subcommand, Debug)]
enum EnvelopeCmd {
    /// Graded dimensions of degrees 0 through the truncation degree
    Dims {
        file: PathBuf,
        #[command(flatten)]
        degree: DegreeArg,
    },
    /// Evaluate an expression; `*` and juxtaposition are the product
    Eval {
        file: PathBuf,
        #[arg(long)]
        expr: String,
        #[command(flatten)]
        degree: DegreeArg,
    },
    /// Check the embedding relations, leading terms and the embedding of M
    Verify {
        file: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
        #[command(flatten)]
        degree: DegreeArg,
    },
}

/// An error that ends the run with exit code 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type CmdResult = Result<i32, Usage>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match dispatch(cli.command, &mut out) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    };
    let _ = out.flush();
    code
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Check(args) => cmd_check(args, out),
        Command::Classify { file } => {
            let (_, algebra) = load(&file)?;
            let spec = algebra.to_akivis()?;
            writeln!(out, "{}", classify(&spec))?;
            Ok(EXIT_PASS)
        }
        Command::Table { file, op } => cmd_table(&file, op, out),
        Command::Example(ExampleCmd::List) => {
            for d in catalog() {
                let alg = d.build()?;
                writeln!(
                    out,
                    "{:<18} ({}|{})  {:<14} {}",
                    d.name,
                    d.dims.0,
                    d.dims.1,
                    alg.kind(),
                    d.expected
                )?;
            }
            Ok(EXIT_PASS)
        }
        Command::Example(ExampleCmd::Emit { name, out: path }) => {
            let algebra = build_example(&name)?;
            let text = emit(&name, &algebra);
            match path {
                Some(p) => fs::write(&p, text).map_err(|e| Usage(format!("{}: {e}", p.display())))?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_PASS)
        }
        Command::Envelope(cmd) => cmd_envelope(cmd, out),
    }
}

fn load(path: &Path) -> Result<(String, Algebra), Usage> {
    let src =
        fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    let file = AlgebraFile::parse(&src).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    Ok((file.name, file.algebra))
}

fn write_report(path: &Path, report: &RunReport) -> Result<(), Usage> {
    fs::write(path, report.to_json()).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn cmd_check(args: CheckArgs, out: &mut dyn Write) -> CmdResult {
    let (name, algebra) = load(&args.file)?;
    let spec = algebra.to_akivis()?;
    let opts = CheckOptions {
        max_witnesses: args.max_witnesses,
    };
    let report = run_identity(&spec, args.identity, &opts);
    out.write_all(report.to_text(spec.basis()).as_bytes())?;
    if let Some(path) = &args.report {
        let run = RunReport::new(
            "check",
            AlgebraSummary::of(&name, &algebra),
            vec![CheckRecord::from_report(&report, spec.basis())],
        );
        write_report(path, &run)?;
    }
    Ok(if report.passed() { EXIT_PASS } else { EXIT_FAIL })
}

fn run_identity(spec: &AkivisSpec, which: IdentityName, opts: &CheckOptions) -> CheckReport {
    match which {
        IdentityName::Akivis => check_akivis_identity_with(spec, opts),
        IdentityName::Superanticomm => check_superanticommutative_with(spec, opts),
        IdentityName::Lie => check_lie_with(spec, opts),
        IdentityName::MalcevTernary => check_malcev_ternary_with(spec, opts),
    }
}

/// Right-aligned grid with a header row and a label column.
fn grid(corner: &str, cols: &[String], rows: &[(String, Vec<String>)]) -> String {
    let label_w = rows
        .iter()
        .map(|(l, _)| l.len())
        .chain([corner.len()])
        .max()
        .unwrap_or(0);
    let widths: Vec<usize> = (0..cols.len())
        .map(|j| {
            rows.iter()
                .map(|(_, cells)| cells[j].len())
                .chain([cols[j].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut s = format!("{corner:<label_w$} |");
    for (c, w) in cols.iter().zip(&widths) {
        s.push_str(&format!(" {c:>w$}"));
    }
    s.push('\n');
    s.push_str(&"-".repeat(label_w + 1));
    s.push('+');
    for w in &widths {
        s.push_str(&"-".repeat(w + 1));
    }
    s.push('\n');
    for (label, cells) in rows {
        s.push_str(&format!("{label:<label_w$} |"));
        for (c, w) in cells.iter().zip(&widths) {
            s.push_str(&format!(" {c:>w$}"));
        }
        s.push('\n');
    }
    s
}

fn table_text(
    basis: &GradedBasis,
    corner: &str,
    cell: impl Fn(usize, usize) -> Vector,
) -> String {
    let cols: Vec<String> = basis.names().to_vec();
    let rows: Vec<(String, Vec<String>)> = basis
        .indices()
        .map(|a| {
            (
                basis.name(a).to_string(),
                basis
                    .indices()
                    .map(|b| basis.format_compact(&cell(a, b)))
                    .collect(),
            )
        })
        .collect();
    grid(corner, &cols, &rows)
}

fn cmd_table(file: &Path, op: Option<TableOp>, out: &mut dyn Write) -> CmdResult {
    let (_, algebra) = load(file)?;
    let op = op.unwrap_or(match algebra {
        Algebra::Table(_) => TableOp::Product,
        Algebra::Akivis(_) => TableOp::Bracket,
    });
    let basis = algebra.basis().clone();
    let text = match op {
        TableOp::Product => {
            let table = algebra.as_table().ok_or_else(|| {
                Usage("`--op product` needs a product-table file".to_string())
            })?;
            table_text(&basis, "*", |a, b| table.product(a, b).clone())
        }
        TableOp::Bracket => {
            let spec = algebra.to_akivis()?;
            table_text(&basis, "[,]", |a, b| spec.bracket(a, b).clone())
        }
        TableOp::Ternary => {
            let spec = algebra.to_akivis()?;
            let mut s = String::new();
            for a in basis.indices() {
                if a > 0 {
                    s.push('\n');
                }
                let corner = format!("A({}, -, -)", basis.name(a));
                s.push_str(&table_text(&basis, &corner, |b, c| {
                    spec.ternary(a, b, c).clone()
                }));
            }
            s
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(EXIT_PASS)
}

/// Fixed rational vectors used as extra inputs for the embedding round
/// trip, so that `envelope verify` is reproducible.
pub fn sample_vectors(dim: usize, count: usize) -> Vec<Vector> {
    (0..count)
        .map(|k| {
            Vector::from_terms((0..dim).map(|i| {
                let num = ((k * 7 + i * 3) % 11) as i64 - 5;
                let den = ((k + 2 * i) % 5 + 1) as i64;
                (i, Scalar::new(num, den))
            }))
        })
        .collect()
}

fn cmd_envelope(cmd: EnvelopeCmd, out: &mut dyn Write) -> CmdResult {
    match cmd {
        EnvelopeCmd::Dims { file, degree } => {
            let (_, algebra) = load(&file)?;
            let basis = algebra.basis();
            let dims = graded_dims(basis.even_dim(), basis.odd_dim(), degree.max_degree)
                .ok_or_else(|| Usage("graded dimension overflows 128 bits".to_string()))?;
            for (n, d) in dims.iter().enumerate() {
                writeln!(out, "{n} {d}")?;
            }
            Ok(EXIT_PASS)
        }
        EnvelopeCmd::Eval { file, expr, degree } => {
            let (_, algebra) = load(&file)?;
            let spec = algebra.to_akivis()?;
            let env = Envelope::with_policy(&spec, TruncationPolicy::with_max_degree(degree.max_degree));
            let parsed = parse_expr(&expr, spec.basis(), Mode::Envelope)
                .map_err(|e| Usage(e.annotate(&expr)))?;
            let value = parsed
                .eval_envelope(&env)
                .map_err(|e| Usage(e.annotate(&expr)))?;
            writeln!(out, "{}", value.render(spec.basis()))?;
            Ok(EXIT_PASS)
        }
        EnvelopeCmd::Verify {
            file,
            report,
            degree,
        } => {
            let (name, algebra) = load(&file)?;
            let spec = algebra.to_akivis()?;
            let env = Envelope::with_policy(&spec, TruncationPolicy::with_max_degree(degree.max_degree));
            let basis = spec.basis();
            let mut records = Vec::new();
            let embed = env.verify_embedding_relations()?;
            out.write_all(embed.to_text(basis).as_bytes())?;
            records.push(CheckRecord::from_report(&embed, basis));
            for lead in env.verify_leading_terms(degree.max_degree)? {
                out.write_all(lead.to_text(basis).as_bytes())?;
                records.push(CheckRecord::from_report(&lead, basis));
            }
            let iota = env.verify_iota(&sample_vectors(spec.dim(), 32))?;
            out.write_all(iota.to_text(basis).as_bytes())?;
            records.push(CheckRecord::from_report(&iota, basis));
            let run = RunReport::new("envelope verify", AlgebraSummary::of(&name, &algebra), records);
            if let Some(path) = report {
                write_report(&path, &run)?;
            }
            Ok(if run.checks.iter().all(|c| c.failures == 0) {
                EXIT_PASS
            } else {
                EXIT_FAIL
            })
        }
    }
}

