//! The `vincmean` command line. The binary forwards to [`run`].

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::character::{char7, slot_shape, MnEvaluator};
use crate::error::Error;
use crate::expectation::{expected_series, expected_value, WalkSpec};
use crate::mset::{mean_vector7, HClass};
use crate::oracle::{mc_expected, verify_suite, Fault, OracleConfig, VerifyConfig, VerifyMode};
use crate::output::{Cell, Format, OutputRecord, RecordKind};
use crate::partition::{partitions, IntegerPartition};
use crate::pattern::{all_patterns, VincularPattern};
use crate::rational::big;
use crate::statistic::CompositeStatistic;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "vincmean",
    version,
    about = "Exact means of vincular 3-pattern statistics over conjugacy classes of S_n",
    after_help = "Exit status: 0 success, 1 usage error, 2 verification failure."
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Character coefficients a_λ of the class-wise mean of a statistic.
    #[command(after_help = "Columns: kind, statistic, n, partition, coefficient[, coefficient_approx].")]
    Coeffs(CoeffsArgs),
    /// Exact expected value after t steps drawn uniformly from a conjugacy class.
    #[command(after_help = "Columns: kind, statistic, n, gamma, t, value[, value_approx][, mc_mean, mc_stderr, mc_samples, mc_seed].\n\
With --t-max, one row per t from 0 to t-max.")]
    Expect(ExpectArgs),
    /// Mean coefficient vectors for every vincular 3-pattern.
    #[command(after_help = "Columns: kind, n, pattern, pair, k, e1, ..., e7, reduced.\n\
e1..e7 multiply the characters of shapes (n), (n-1,1), (n-2,2), (n-2,1,1), (n-3,3), (n-3,2,1), (n-3,1,1,1) before \
degenerate shapes are folded for small n; reduced is the expansion into irreducibles, written λ=a;λ'=b in CSV/TSV.")]
    Table(TableArgs),
    /// Run every built-in consistency check against enumeration and sampling.
    #[command(after_help = "Columns: kind, n_max, mode, seed, passed, check, ok, cases, counterexample.")]
    Verify(VerifyArgs),
    /// Irreducible character values χ^λ(μ).
    #[command(after_help = "Columns: kind, n, lambda, mu, value[, value_approx].\n\
With --char7, only the seven low shapes are listed and a slot column (1..7) precedes lambda.")]
    Characters(CharactersArgs),
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Output format: json, csv or tsv.
    #[arg(long, default_value = "json")]
    format: Format,
    /// Write to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
    /// Add a decimal column next to every exact rational column.
    #[arg(long)]
    approx: bool,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct StatArgs {
    /// A vincular 3-pattern such as "(1-23]".
    #[arg(long)]
    pattern: Option<String>,
    /// A statistic: peak, des, asc, a pattern, or a sum such as "2*(1-2-3);-1/2*des".
    #[arg(long)]
    stat: Option<String>,
}

impl StatArgs {
    fn resolve(&self) -> Result<CompositeStatistic, Error> {
        match (&self.pattern, &self.stat) {
            (Some(p), _) => Ok(CompositeStatistic::from(p.parse::<VincularPattern>()?)),
            (None, Some(s)) => s.parse(),
            (None, None) => unreachable!("clap enforces the group"),
        }
    }
}

#[derive(Debug, Args)]
struct CoeffsArgs {
    #[command(flatten)]
    stat: StatArgs,
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("steps").required(true).args(["t", "t_max"])))]
struct ExpectArgs {
    #[command(flatten)]
    stat: StatArgs,
    #[arg(long)]
    n: usize,
    /// Conjugacy class of the steps, e.g. "2,1^6".
    #[arg(long)]
    gamma: String,
    /// Number of steps.
    #[arg(long)]
    t: Option<u32>,
    /// Emit the series for t = 0..=T.
    #[arg(long, value_name = "T")]
    t_max: Option<u32>,
    /// Also report a Monte Carlo estimate from this many samples.
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Brute,
    Mc,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 6)]
    n_max: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Brute)]
    mode: ModeArg,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Samples per Monte Carlo check.
    #[arg(long, default_value_t = 20_000)]
    samples: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Perturb the H row of class "j,ell" before checking.
    #[arg(long, hide = true, value_name = "J,ELL")]
    inject_fault: Option<String>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct CharactersArgs {
    #[arg(long)]
    n: usize,
    /// Restrict to one conjugacy class.
    #[arg(long)]
    gamma: Option<String>,
    /// Only the seven shapes (n), (n-1,1), ..., (n-3,1,1,1).
    #[arg(long)]
    char7: bool,
    #[command(flatten)]
    out: OutputArgs,
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn parse_gamma(text: &str, n: usize) -> Result<IntegerPartition, Failure> {
    let gamma: IntegerPartition = text.parse()?;
    if gamma.n() != n {
        return Err(Failure::Usage(format!("--gamma {text} is a partition of {}, but --n is {n}", gamma.n())));
    }
    Ok(gamma)
}

fn emit(record: OutputRecord, out: &OutputArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let record = if out.approx { record.with_approx() } else { record };
    match &out.output {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            record.write(&mut w, out.format)?;
            w.flush()?;
        }
        None => record.write(&mut *stdout, out.format)?,
    }
    Ok(())
}

fn coeffs(args: &CoeffsArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let stat = args.stat.resolve()?;
    let comb = stat.mean(args.n)?;
    let mut rec = OutputRecord::new(RecordKind::Coeffs, &["partition", "coefficient"])
        .meta("statistic", Cell::Text(stat.to_string()))
        .meta("n", Cell::Int(args.n as i64));
    for (lambda, a) in comb.iter() {
        rec.push(vec![Cell::Partition(lambda.clone()), Cell::Rational(a.clone())]);
    }
    emit(rec, &args.out, stdout)?;
    Ok(EXIT_OK)
}

fn expect(args: &ExpectArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let stat = args.stat.resolve()?;
    let gamma = parse_gamma(&args.gamma, args.n)?;
    let comb = stat.mean(args.n)?;
    let (kind, values): (RecordKind, Vec<(u32, _)>) = match (args.t, args.t_max) {
        (Some(t), _) => (RecordKind::Expectation, vec![(t, expected_value(&comb, &WalkSpec::new(gamma.clone(), t))?)]),
        (None, Some(t_max)) => {
            (RecordKind::Series, expected_series(&comb, &gamma, t_max)?.into_iter().enumerate().map(|(t, v)| (t as u32, v)).collect())
        }
        (None, None) => unreachable!("clap enforces the group"),
    };
    let mut columns = vec!["t", "value"];
    if args.samples.is_some() {
        columns.extend(["mc_mean", "mc_stderr", "mc_samples", "mc_seed"]);
    }
    let mut rec = OutputRecord::new(kind, &columns)
        .meta("statistic", Cell::Text(stat.to_string()))
        .meta("n", Cell::Int(args.n as i64))
        .meta("gamma", Cell::Partition(gamma.clone()));
    for (t, v) in values {
        let mut row = vec![Cell::Int(t.into()), Cell::Rational(v)];
        if let Some(samples) = args.samples {
            let est = mc_expected(&stat, &gamma, t, samples, args.seed, args.workers)?;
            row.extend([
                Cell::Float(est.mean),
                Cell::Float(est.stderr),
                Cell::Int(est.samples as i64),
                Cell::Text(est.seed.to_string()),
            ]);
        }
        rec.push(row);
    }
    emit(rec, &args.out, stdout)?;
    Ok(EXIT_OK)
}

fn table(args: &TableArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let n = args.n;
    let mut rec = OutputRecord::new(
        RecordKind::Table,
        &["pattern", "pair", "k", "e1", "e2", "e3", "e4", "e5", "e6", "e7", "reduced"],
    )
    .meta("n", Cell::Int(n as i64));
    for phi in all_patterns() {
        let v = mean_vector7(&phi, n)?;
        let reduced = crate::character::reduce_basis(&v, n)?;
        let mut row = vec![
            Cell::Text(phi.to_string()),
            Cell::Text(phi.pattern_pair().to_string()),
            Cell::Int(phi.k() as i64),
        ];
        row.extend(v.into_iter().map(Cell::Rational));
        row.push(Cell::Expansion(reduced.iter().map(|(l, a)| (l.clone(), a.clone())).collect()));
        rec.push(row);
    }
    emit(rec, &args.out, stdout)?;
    Ok(EXIT_OK)
}

fn parse_fault(text: &str) -> Result<Fault, Failure> {
    let bad = || Failure::Usage(format!("--inject-fault expects \"j,ell\", got {text:?}"));
    let (j, ell) = text.split_once(',').ok_or_else(bad)?;
    let j: usize = j.parse().map_err(|_| bad())?;
    let ell: usize = ell.parse().map_err(|_| bad())?;
    Ok(Fault::PerturbHRow(HClass::try_new(j, ell)?))
}

fn verify(args: &VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    if args.n_max < 3 {
        return Err(Error::TooSmall { n: args.n_max, min: 3 }.into());
    }
    let fault = args.inject_fault.as_deref().map(parse_fault).transpose()?;
    let config = VerifyConfig {
        n_max: args.n_max,
        mode: match args.mode {
            ModeArg::Brute => VerifyMode::Brute,
            ModeArg::Mc => VerifyMode::MonteCarlo,
        },
        seed: args.seed,
        samples: args.samples,
        oracle: OracleConfig { workers: args.workers, ..OracleConfig::default() },
        fault,
    };
    let report = verify_suite(&config);
    let mode = match args.mode {
        ModeArg::Brute => "brute",
        ModeArg::Mc => "mc",
    };
    let mut rec = OutputRecord::new(RecordKind::Verify, &["check", "ok", "cases", "counterexample"])
        .meta("n_max", Cell::Int(args.n_max as i64))
        .meta("mode", Cell::Text(mode.into()))
        .meta("seed", Cell::Text(args.seed.to_string()))
        .meta("passed", Cell::Bool(report.passed()));
    for c in &report.checks {
        rec.push(vec![
            Cell::Text(c.name.into()),
            Cell::Bool(c.passed),
            Cell::Int(c.cases as i64),
            c.counterexample.clone().map(Cell::Text).unwrap_or(Cell::Empty),
        ]);
    }
    emit(rec, &args.out, stdout)?;
    let failed: Vec<&str> = report.failures().map(|c| c.name).collect();
    if failed.is_empty() {
        writeln!(stderr, "verify: all {} checks passed", report.checks.len())?;
        Ok(EXIT_OK)
    } else {
        for c in report.failures() {
            writeln!(stderr, "verify: FAIL {}: {}", c.name, c.counterexample.as_deref().unwrap_or(""))?;
        }
        Ok(EXIT_VERIFY_FAILED)
    }
}

fn characters(args: &CharactersArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let n = args.n;
    let mus = match &args.gamma {
        Some(g) => vec![parse_gamma(g, n)?],
        None => partitions(n),
    };
    let mut mn = MnEvaluator::new();
    let rec = if args.char7 {
        let mut rec = OutputRecord::new(RecordKind::Characters, &["slot", "lambda", "mu", "value"]).meta("n", Cell::Int(n as i64));
        for mu in &mus {
            let v = char7(mu)?;
            for (slot, x) in v.into_iter().enumerate() {
                let shape = slot_shape(n, slot).map(Cell::Partition).unwrap_or(Cell::Empty);
                rec.push(vec![Cell::Int(slot as i64 + 1), shape, Cell::Partition(mu.clone()), Cell::Rational(big(x))]);
            }
        }
        rec
    } else {
        let mut rec = OutputRecord::new(RecordKind::Characters, &["lambda", "mu", "value"]).meta("n", Cell::Int(n as i64));
        for lambda in partitions(n) {
            for mu in &mus {
                let x = mn.character(&lambda, mu)?;
                rec.push(vec![Cell::Partition(lambda.clone()), Cell::Partition(mu.clone()), Cell::Rational(big(x))]);
            }
        }
        rec
    };
    emit(rec, &args.out, stdout)?;
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let text = e.render().to_string();
            if informational {
                let _ = write!(stdout, "{text}");
                return EXIT_OK;
            }
            let _ = write!(stderr, "{text}");
            return EXIT_USAGE;
        }
    };
    let result = match &cli.command {
        Command::Coeffs(a) => coeffs(a, stdout),
        Command::Expect(a) => expect(a, stdout),
        Command::Table(a) => table(a, stdout),
        Command::Verify(a) => verify(a, stdout, stderr),
        Command::Characters(a) => characters(a, stdout),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Convenience for tests: runs the CLI and captures both streams.
pub fn run_captured(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("vincmean").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8_lossy(&out).into_owned(), String::from_utf8_lossy(&err).into_owned())
}
