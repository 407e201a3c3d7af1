//! Command line front end.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use crate::crystal::{crystal_dot, energy_h, highest_weight_words, one_dim_sum_x, CrystalType};
use crate::error::{Error, Result};
use crate::kostka::{kostka_a, kostka_full, kostka_tilde};
use crate::lrbranch::{branch_alt_shifted, branch_stable, lr_coeff, stable_shift};
use crate::qmult;
use crate::qpoly::LaurentPoly;
use crate::table::{emit_table, Family, Format};
use crate::verify::{run_suite, Suite, SuiteParams, VerifySuiteReport};
use crate::weyl::{check_decreasing, parse_int_list, Partition, RootSystem};

/// Largest rank accepted by any command.
pub const MAX_RANK: usize = 8;
/// Largest rank for which a whole crystal graph is drawn.
pub const MAX_DOT_RANK: usize = 4;

#[derive(Debug, Parser)]
#[command(name = "kfpoly", version, about = "Kostka-Foulkes polynomials and q-multiplicities for classical root systems")]
pub struct Cli {
    /// Print results as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    /// Refuse a computation whose estimated q-degree exceeds this bound.
    #[arg(long, global = true, default_value_t = 1000)]
    pub max_q_degree: i64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kostka-Foulkes polynomial K^phi(lambda, mu), or the tilde version.
    Kostka(KostkaArgs),
    /// q-multiplicities u, U and the families V, K1, K11, K2.
    Qmult(QmultArgs),
    /// Littlewood-Richardson coefficient c^nu_{lambda, gamma}.
    Lr(LrArgs),
    /// Multiplicity of V^A(lambda) in the restriction of V^phi(nu) to GL_n.
    Branch(BranchArgs),
    /// Highest weight words and crystal graphs of words of length n.
    Crystal(CrystalArgs),
    /// One dimension sum X(lambda, 1^n).
    X(XArgs),
    /// Run an identity sweep.
    Verify(VerifyArgs),
    /// Emit a table of a polynomial family.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SystemArg {
    A,
    B,
    C,
    D,
}

impl From<SystemArg> for RootSystem {
    fn from(s: SystemArg) -> Self {
        match s {
            SystemArg::A => RootSystem::A,
            SystemArg::B => RootSystem::B,
            SystemArg::C => RootSystem::C,
            SystemArg::D => RootSystem::D,
        }
    }
}

#[derive(Debug, Args)]
pub struct KostkaArgs {
    #[arg(long = "type", value_enum, ignore_case = true)]
    pub system: SystemArg,
    /// Comma separated, e.g. 2,1,0.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: String,
    /// Use the symmetric-group variant, which accepts any decreasing vectors.
    #[arg(long)]
    pub tilde: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum QmultFamily {
    #[value(name = "u")]
    SmallU,
    #[value(name = "U")]
    BigU,
    #[value(name = "V")]
    V,
    #[value(name = "K1")]
    K1,
    #[value(name = "K11")]
    K11,
    #[value(name = "K2")]
    K2,
}

#[derive(Debug, Args)]
pub struct QmultArgs {
    #[arg(long, value_enum)]
    pub family: QmultFamily,
    #[arg(long)]
    pub lambda: String,
    #[arg(long)]
    pub mu: String,
}

#[derive(Debug, Args)]
pub struct LrArgs {
    #[arg(long)]
    pub nu: String,
    #[arg(long)]
    pub lambda: String,
    #[arg(long)]
    pub gamma: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Method {
    Alt,
    Stable,
}

#[derive(Debug, Args)]
pub struct BranchArgs {
    #[arg(long = "type", value_enum, ignore_case = true)]
    pub system: SystemArg,
    /// GL_n highest weight.
    #[arg(long)]
    pub lambda: String,
    /// Type B, C or D highest weight.
    #[arg(long)]
    pub nu: String,
    #[arg(long, value_enum, default_value = "stable")]
    pub method: Method,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CrystalArg {
    A,
    C,
}

#[derive(Debug, Args)]
pub struct CrystalArgs {
    /// Rank; words have length n.
    #[arg(long)]
    pub n: usize,
    #[arg(long = "type", value_enum, ignore_case = true, default_value = "c")]
    pub crystal: CrystalArg,
    /// Restrict to highest weight words of this weight.
    #[arg(long, allow_hyphen_values = true)]
    pub weight: Option<String>,
    /// List the highest weight words with weight and energy.
    #[arg(long)]
    pub list_hw: bool,
    /// Print the crystal graph in DOT format.
    #[arg(long, conflicts_with = "list_hw")]
    pub dot: bool,
}

#[derive(Debug, Args)]
pub struct XArgs {
    /// Rank; defaults to the length of lambda.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub lambda: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite name, or "all".
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub max_size: Option<i64>,
    /// Largest part for box sweeps.
    #[arg(long)]
    pub max_entry: Option<i64>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub min_size: i64,
    #[arg(long)]
    pub max_size: i64,
    #[arg(long, default_value = "csv")]
    pub format: String,
    /// Write to a file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Outcome of a successful command.
pub enum Outcome {
    Ok,
    IdentityFailure,
}

fn partition(s: &str) -> Result<Partition> {
    Partition::new(parse_int_list(s)?)
}

/// Two partitions of the same rank; trailing zeros are never added.
fn partition_pair(a: &str, b: &str) -> Result<(Partition, Partition)> {
    let (a, b) = (partition(a)?, partition(b)?);
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    Ok((a, b))
}

fn decreasing(s: &str) -> Result<Vec<i64>> {
    let v = parse_int_list(s)?;
    check_decreasing(&v)?;
    Ok(v)
}

fn check_rank(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if n > MAX_RANK {
        return Err(Error::CapExceeded(format!("rank {n} exceeds {MAX_RANK}")));
    }
    Ok(())
}

/// Coarse upper bound on the q-degree of a polynomial indexed by two weights of
/// rank `n`; every root has height at least one.
pub fn degree_estimate(lambda: &[i64], mu: &[i64]) -> i64 {
    let n = lambda.len().max(mu.len()) as i64;
    let norm: i64 = lambda.iter().chain(mu).map(|x| x.abs()).sum();
    n * norm + n * n * (n + 1)
}

fn guard(cli: &Cli, lambda: &[i64], mu: &[i64]) -> Result<()> {
    check_rank(lambda.len().max(mu.len()))?;
    let d = degree_estimate(lambda, mu);
    if d > cli.max_q_degree {
        return Err(Error::CapExceeded(format!(
            "estimated q-degree {d} exceeds --max-q-degree {}",
            cli.max_q_degree
        )));
    }
    Ok(())
}

fn print_poly(out: &mut impl Write, json: bool, p: &LaurentPoly) -> Result<()> {
    if json {
        let at_one: serde_json::Number = p.eval_one().to_string().parse().map_err(|e| Error::Parse(format!("{e}")))?;
        emit_json(out, &json!({ "polynomial": p, "at_one": at_one }))
    } else {
        writeln!(out, "{p}").map_err(io_err)
    }
}

fn print_int(out: &mut impl Write, json: bool, x: &BigInt) -> Result<()> {
    if json {
        let n: serde_json::Number = x.to_string().parse().map_err(|e| Error::Parse(format!("{e}")))?;
        emit_json(out, &json!({ "value": n }))
    } else {
        writeln!(out, "{x}").map_err(io_err)
    }
}

fn emit_json(out: &mut impl Write, v: &impl Serialize) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, v).map_err(|e| Error::Parse(e.to_string()))?;
    writeln!(out).map_err(io_err)
}

fn io_err(e: io::Error) -> Error {
    Error::Parse(e.to_string())
}

pub fn run(cli: &Cli, out: &mut impl Write) -> Result<Outcome> {
    match &cli.command {
        Command::Kostka(a) => {
            let sys = RootSystem::from(a.system);
            let p = if a.tilde {
                let (l, m) = (decreasing(&a.lambda)?, decreasing(&a.mu)?);
                guard(cli, &l, &m)?;
                kostka_tilde(sys, &l, &m)?
            } else {
                let (l, m) = partition_pair(&a.lambda, &a.mu)?;
                guard(cli, l.parts(), m.parts())?;
                match sys {
                    RootSystem::A => kostka_a(l.parts(), m.parts())?,
                    _ => kostka_full(sys, &l, &m)?,
                }
            };
            print_poly(out, cli.json, &p)?;
        }
        Command::Qmult(a) => {
            let (l, m) = partition_pair(&a.lambda, &a.mu)?;
            guard(cli, l.parts(), m.parts())?;
            let p = match a.family {
                QmultFamily::SmallU => qmult::u(l.parts(), m.parts())?,
                QmultFamily::BigU => qmult::U(l.parts(), m.parts())?,
                QmultFamily::V => qmult::V(&l, &m)?,
                QmultFamily::K1 => qmult::K1(&l, &m)?,
                QmultFamily::K11 => qmult::K11(l.parts(), m.parts())?,
                QmultFamily::K2 => qmult::K2(l.parts(), m.parts())?,
            };
            print_poly(out, cli.json, &p)?;
        }
        Command::Lr(a) => {
            let (nu, l, g) = (partition(&a.nu)?, partition(&a.lambda)?, partition(&a.gamma)?);
            print_int(out, cli.json, &BigInt::from(lr_coeff(&nu, &l, &g)))?;
        }
        Command::Branch(a) => {
            let sys = RootSystem::from(a.system);
            if sys == RootSystem::A {
                return Err(Error::Parse("branching target must be of type B, C or D".into()));
            }
            let (l, nu) = partition_pair(&a.lambda, &a.nu)?;
            guard(cli, l.parts(), nu.parts())?;
            let x = match a.method {
                Method::Stable => BigInt::from(branch_stable(sys, &l, &nu)?),
                Method::Alt => branch_alt_shifted(sys, &l, &nu, stable_shift(&l, &nu))?,
            };
            print_int(out, cli.json, &x)?;
        }
        Command::Crystal(a) => {
            check_rank(a.n)?;
            let ty = match a.crystal {
                CrystalArg::A => CrystalType::A,
                CrystalArg::C => CrystalType::C,
            };
            let weight = a.weight.as_deref().map(parse_int_list).transpose()?;
            if let Some(w) = &weight {
                if w.len() != a.n {
                    return Err(Error::LengthMismatch { left: w.len(), right: a.n });
                }
            }
            if a.dot {
                if a.n > MAX_DOT_RANK {
                    return Err(Error::CapExceeded(format!("crystal graphs are drawn up to rank {MAX_DOT_RANK}")));
                }
                write!(out, "{}", crystal_dot(ty, a.n, a.n, weight.as_deref())?).map_err(io_err)?;
                return Ok(Outcome::Ok);
            }
            let words = highest_weight_words(ty, a.n, a.n, weight.as_deref())?;
            if a.list_hw {
                let rows: Vec<_> = words
                    .iter()
                    .map(|b| {
                        let wt = match ty {
                            CrystalType::C => b.weight_c(),
                            CrystalType::A => b.weight_a(),
                        };
                        (b, wt, energy_h(b))
                    })
                    .collect();
                if cli.json {
                    let v: Vec<_> = rows
                        .iter()
                        .map(|(b, wt, h)| json!({ "word": b.to_string(), "weight": wt, "energy": h }))
                        .collect();
                    emit_json(out, &v)?;
                } else {
                    for (b, wt, h) in rows {
                        let wt: Vec<String> = wt.iter().map(|x| x.to_string()).collect();
                        writeln!(out, "{b}\tweight ({})\tH {h}", wt.join(",")).map_err(io_err)?;
                    }
                }
            } else if cli.json {
                emit_json(out, &json!({ "highest_weight_words": words.len() }))?;
            } else {
                writeln!(out, "{}", words.len()).map_err(io_err)?;
            }
        }
        Command::X(a) => {
            let l = partition(&a.lambda)?;
            let l = match a.n {
                Some(n) => l.with_len(n)?,
                None => l,
            };
            check_rank(l.len())?;
            print_poly(out, cli.json, &one_dim_sum_x(&l)?)?;
        }
        Command::Verify(a) => {
            let suites: Vec<Suite> = if a.suite == "all" { Suite::ALL.to_vec() } else { vec![a.suite.parse()?] };
            let mut reports: Vec<VerifySuiteReport> = Vec::new();
            for s in suites {
                let mut p = SuiteParams::defaults(s);
                if let Some(n) = a.n {
                    check_rank(n)?;
                    p.n = n;
                }
                if let Some(m) = a.max_size {
                    p.max_size = m;
                }
                if let Some(m) = a.max_entry {
                    p.max_entry = m;
                }
                reports.push(run_suite(s, p)?);
            }
            if cli.json {
                emit_json(out, &reports)?;
            } else {
                for r in &reports {
                    write_report(out, r)?;
                }
            }
            if reports.iter().any(|r| !r.passed()) {
                return Ok(Outcome::IdentityFailure);
            }
        }
        Command::Table(a) => {
            let family: Family = a.family.parse()?;
            let format: Format = a.format.parse()?;
            match &a.output {
                Some(path) => {
                    let f = File::create(path).map_err(io_err)?;
                    emit_table(family, a.n, a.min_size, a.max_size, format, BufWriter::new(f))?;
                }
                None => emit_table(family, a.n, a.min_size, a.max_size, format, &mut *out)?,
            }
        }
    }
    Ok(Outcome::Ok)
}

fn write_report(out: &mut impl Write, r: &VerifySuiteReport) -> Result<()> {
    let status = if r.passed() { "PASS" } else { "FAIL" };
    writeln!(
        out,
        "{status} {}: {} instances, {} checks, {} failures, {:.2}s",
        r.suite,
        r.instances,
        r.checks,
        r.failures.len(),
        r.wall_time.as_secs_f64()
    )
    .map_err(io_err)?;
    writeln!(out, "  {}", r.statement).map_err(io_err)?;
    writeln!(out, "  checked: {}", r.checked.join("; ")).map_err(io_err)?;
    for f in r.failures.iter().take(20) {
        writeln!(out, "  {} at {}: {} != {}", f.identity, f.inputs, f.lhs, f.rhs).map_err(io_err)?;
    }
    Ok(())
}

/// Parses arguments, runs, and maps the result to an exit code:
/// 0 on success, 1 when an identity fails, 2 on bad input.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::IdentityFailure) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Caps the global thread pool from `KFPOLY_THREADS` if set.
pub fn configure_threads() {
    if let Some(n) = std::env::var("KFPOLY_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}
