//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error,
//! 3 theorem-precondition failure.

mod render;
mod verify;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::combinatorics::{GroupParams, Partition};
use crate::error::Error;
use crate::formulas::{
    coinvariant_multiplicity, composition_multiplicity_series, pim_decompose, socle_conjecture_closed_form,
    steinberg_bigraded, steinberg_closed_form, CompositionTarget, GeneralPart, TensorFactor,
};
use crate::series::LaurentSeries;

use render::{Format, SeriesMeta};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "stmult", version, about = "Graded Steinberg and composition multiplicities for GL_n(q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Multiplicity series of St in S(V) x M x Det^k, or of a composition factor in S(V).
    Series(SeriesArgs),
    /// Bigraded series of St in S(V) x wedge(V) x Det^k.
    Bigraded(BigradedArgs),
    /// Compare closed forms with the brute-force oracles.
    Verify(VerifyArgs),
    /// PIM decomposition of St x wedge^nu x Det^k.
    Pim(PimArgs),
    /// Composition multiplicity in the coinvariant algebra.
    Coinv(CoinvArgs),
    /// CSV table of series over a grid of factors and twists.
    Table(TableArgs),
    /// Conjectured socle multiplicity series.
    SocleConjecture(SocleArgs),
}

#[derive(Debug, Args)]
struct ParamArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    r: u32,
}

impl ParamArgs {
    fn params(&self) -> Result<GroupParams, Failure> {
        GroupParams::new(self.n, self.p, self.r).map_err(Failure::from)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FactorKind {
    Wedge,
    WedgeDual,
    Wedgenu,
    WedgenuDual,
    Simple,
    SimpleDual,
    Powerdet,
    None,
}

#[derive(Debug, Args)]
struct FactorArgs {
    #[arg(long, value_enum)]
    factor: Option<FactorKind>,
    #[arg(long)]
    m: Option<usize>,
    /// Comma-separated parts.
    #[arg(long)]
    nu: Option<Partition>,
    /// Comma-separated parts.
    #[arg(long)]
    mu: Option<Partition>,
    #[arg(long)]
    ell: Option<usize>,
}

impl FactorArgs {
    fn factor(&self, kind: FactorKind) -> Result<TensorFactor, Failure> {
        fn need<T: Clone>(v: &Option<T>, flag: &str, kind: FactorKind) -> Result<T, Failure> {
            v.clone().ok_or_else(|| Failure::usage(format!("--factor {} needs --{flag}", kind_name(kind))))
        }
        Ok(match kind {
            FactorKind::Wedge => TensorFactor::Wedge(need(&self.m, "m", kind)?),
            FactorKind::WedgeDual => TensorFactor::WedgeDual(need(&self.m, "m", kind)?),
            FactorKind::Wedgenu => TensorFactor::WedgeNu(need(&self.nu, "nu", kind)?),
            FactorKind::WedgenuDual => TensorFactor::WedgeNuDual(need(&self.nu, "nu", kind)?),
            FactorKind::Simple => TensorFactor::Simple(need(&self.mu, "mu", kind)?),
            FactorKind::SimpleDual => TensorFactor::SimpleDual(need(&self.mu, "mu", kind)?),
            FactorKind::Powerdet => TensorFactor::PowerDet(need(&self.ell, "ell", kind)?),
            FactorKind::None => TensorFactor::None,
        })
    }
}

fn kind_name(kind: FactorKind) -> String {
    kind.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TargetKind {
    /// L(gamma) with gamma_i = (q-1)(n-i) - k - [i <= m].
    Wedge,
    /// L((q-1) rho - mu + k) (part 1) or L((q-1) rho + w0 mu + k) (part 2).
    General,
}

#[derive(Debug, Args)]
struct SeriesArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[command(flatten)]
    factor: FactorArgs,
    /// Compute a composition multiplicity instead of a Steinberg one.
    #[arg(long, value_enum, conflicts_with = "factor")]
    target: Option<TargetKind>,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2), default_value_t = 1)]
    part: u8,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    k: i64,
    #[arg(long)]
    trunc: i64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct BigradedArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    k: i64,
    #[arg(long)]
    trunc: i64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[command(flatten)]
    factor: FactorArgs,
    /// Restrict to one twist; by default every valid k in [1, q-1].
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    #[arg(long)]
    amax: i64,
    /// Corrupt one formula coefficient to exercise the failure path.
    #[arg(long)]
    inject_fault: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct PimArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Comma-separated parts.
    #[arg(long)]
    nu: Partition,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    k: i64,
    /// Decompose St x (wedge^nu)* x Det^k.
    #[arg(long)]
    dual: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct CoinvArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Comma-separated parts.
    #[arg(long, default_value = "")]
    mu: Partition,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    k: i64,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2), default_value_t = 1)]
    part: u8,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, value_enum, default_value_t = FactorKind::Wedge)]
    factor: FactorKind,
    /// For wedge and wedge-dual; all of 0..=n when omitted.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    nu: Option<Partition>,
    #[arg(long)]
    mu: Option<Partition>,
    #[arg(long)]
    ell: Option<usize>,
    /// All valid k in [1, q-1] when omitted.
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    #[arg(long)]
    trunc: i64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SocleArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Comma-separated parts.
    #[arg(long, default_value = "")]
    mu: Partition,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    k: i64,
    #[arg(long)]
    trunc: i64,
    #[command(flatten)]
    output: OutputArgs,
}

/// A message and the exit code it maps to.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Precondition { .. } => EXIT_PRECONDITION,
            Error::InexactDivision(_) => EXIT_MISMATCH,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

/// What a command produced: text for stdout (or `--out`), an optional note
/// for stderr, and the exit code.
struct Report {
    body: String,
    note: Option<String>,
    code: i32,
}

impl Report {
    fn ok(body: String) -> Self {
        Report { body, note: None, code: EXIT_OK }
    }
}

/// Parses `args` (including the program name), runs the command, writes its
/// output, and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let out = match &cli.command {
        Command::Series(a) => a.output.out.clone(),
        Command::Bigraded(a) => a.output.out.clone(),
        Command::Verify(a) => a.out.clone(),
        Command::Pim(a) => a.output.out.clone(),
        Command::Coinv(a) => a.output.out.clone(),
        Command::Table(a) => a.out.clone(),
        Command::SocleConjecture(a) => a.output.out.clone(),
    };
    let report = match dispatch(cli.command) {
        Ok(r) => r,
        Err(f) => {
            eprintln!("error: {}", f.message);
            return f.code;
        }
    };
    if let Some(path) = out {
        if let Err(e) = std::fs::write(&path, &report.body) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return EXIT_USAGE;
        }
    } else {
        print!("{}", report.body);
    }
    if let Some(note) = report.note {
        eprintln!("{note}");
    }
    report.code
}

fn dispatch(command: Command) -> Result<Report, Failure> {
    match command {
        Command::Series(a) => cmd_series(&a),
        Command::Bigraded(a) => cmd_bigraded(&a),
        Command::Verify(a) => verify::cmd_verify(&a),
        Command::Pim(a) => cmd_pim(&a),
        Command::Coinv(a) => cmd_coinv(&a),
        Command::Table(a) => cmd_table(&a),
        Command::SocleConjecture(a) => cmd_socle(&a),
    }
}

fn cmd_series(a: &SeriesArgs) -> Result<Report, Failure> {
    let g = a.params.params()?;
    let part = if a.part == 1 { GeneralPart::One } else { GeneralPart::Two };
    let (series, meta) = match a.target {
        Some(kind) => {
            let target = match kind {
                TargetKind::Wedge => CompositionTarget::WedgeTwist {
                    m: a.factor.m.ok_or_else(|| Failure::usage("--target wedge needs --m"))?,
                    k: a.k,
                },
                TargetKind::General => CompositionTarget::General {
                    mu: a.factor.mu.clone().unwrap_or_else(Partition::empty),
                    k: a.k,
                    part,
                },
            };
            let c = composition_multiplicity_series(&g, &target, a.trunc)?;
            let meta = SeriesMeta::new(&g, c.theorem, false).with_target(c.target.entries(), c.det_shift);
            (c.series, meta)
        }
        None => {
            let kind = a.factor.factor.ok_or_else(|| Failure::usage("series needs --factor or --target"))?;
            let factor = a.factor.factor(kind)?;
            let form = steinberg_closed_form(&g, &factor, a.k)?;
            let meta = SeriesMeta::new(&g, form.theorem, form.conjecture).with_factor(&factor, a.k);
            (form.expand(a.trunc)?, meta)
        }
    };
    Ok(Report::ok(render::series(&series, &meta, a.output.format)))
}

fn cmd_bigraded(a: &BigradedArgs) -> Result<Report, Failure> {
    let g = a.params.params()?;
    let bi = steinberg_bigraded(&g, a.k, a.trunc)?;
    Ok(Report::ok(render::bigraded(&bi, &g, a.output.format)))
}

fn binomial(n: u64, k: u64) -> BigUint {
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

fn cmd_pim(a: &PimArgs) -> Result<Report, Failure> {
    let g = a.params.params()?;
    let d = pim_decompose(&g, &a.nu, a.k, a.dual)?;
    let total = d.total_dim(&g)?;
    let mut expected = g.steinberg_dim();
    for &v in a.nu.parts() {
        expected *= binomial(g.n() as u64, v as u64);
    }
    let body = render::pim(&d, &g, a.output.format)?;
    let ok = total == expected;
    let check = format!("total dim {total} {} dim St x dim wedge^nu = {expected}", if ok { "=" } else { "!=" });
    let (body, note) = match a.output.format {
        // keep stdout parseable
        Format::Json | Format::Csv => (body, Some(check)),
        Format::Pretty => (format!("{body}{check}\n"), None),
    };
    Ok(Report { body, note, code: if ok { EXIT_OK } else { EXIT_MISMATCH } })
}

fn cmd_coinv(a: &CoinvArgs) -> Result<Report, Failure> {
    let g = a.params.params()?;
    let part = if a.part == 1 { GeneralPart::One } else { GeneralPart::Two };
    let target = CompositionTarget::General { mu: a.mu.clone(), k: a.k, part };
    let c = coinvariant_multiplicity(&g, &target)?;
    Ok(Report::ok(render::coinv(&c, &g, a.output.format)))
}

fn cmd_table(a: &TableArgs) -> Result<Report, Failure> {
    let g = a.params.params()?;
    let fa = FactorArgs { factor: Some(a.factor), m: a.m, nu: a.nu.clone(), mu: a.mu.clone(), ell: a.ell };
    let factors = match (a.factor, a.m) {
        (FactorKind::Wedge, None) => (0..=g.n()).map(TensorFactor::Wedge).collect(),
        (FactorKind::WedgeDual, None) => (0..=g.n()).map(TensorFactor::WedgeDual).collect(),
        (kind, _) => vec![fa.factor(kind)?],
    };
    let explicit_k = a.k.is_some();
    let ks: Vec<i64> = match a.k {
        Some(k) => vec![k],
        None => (1..g.q()).collect(),
    };
    let mut body = String::from("factor,k,degree,coefficient\n");
    for factor in &factors {
        for &k in &ks {
            let form = match steinberg_closed_form(&g, factor, k) {
                Ok(f) => f,
                // sweeping k: skip twists outside the theorem's range
                Err(Error::Precondition { .. }) if !explicit_k => continue,
                Err(e) => return Err(e.into()),
            };
            let s = form.expand(a.trunc)?;
            for d in 0..=a.trunc {
                let c = s.coefficient_at(d).map_err(Failure::from)?;
                let _ = writeln!(body, "{factor},{k},{d},{c}");
            }
        }
    }
    Ok(Report::ok(body))
}

fn cmd_socle(a: &SocleArgs) -> Result<Report, Failure> {
    let g = a.params.params()?;
    let form = socle_conjecture_closed_form(&g, &a.mu, a.k)?;
    let series: LaurentSeries = form.expand(a.trunc)?;
    let meta = SeriesMeta::new(&g, form.theorem, form.conjecture);
    Ok(Report::ok(render::series(&series, &meta, a.output.format)))
}
