//! `weylcent`: command-line access to Weyl algebra arithmetic, centralizers
//! and commutation certificates.
//!
//! Exit codes: 0 success / commutative / COMMUTE, 1 NOT_COMMUTE, 2 error,
//! 3 noncommutative centralizer, 4 INCONCLUSIVE, 5 no fraction witness.

mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use weylcent_core::{
    centralizer_basis, certify_zero_commutator, decompose_over_center, fraction_witness, parse, theorem_pipeline,
    CertifyOptions, CoeffDomain, Error, Prime, PrimeField, QWeyl, Rationals, Verdict, WeylElement,
};

const EXIT_ERROR: u8 = 2;
const EXIT_NONCOMMUTATIVE: u8 = 3;
const EXIT_INCONCLUSIVE: u8 = 4;
const EXIT_NOT_FOUND: u8 = 5;

#[derive(Debug, Parser)]
#[command(name = "weylcent", version, about = "Exact Weyl algebra computations over Q and F_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Work over F_p instead of Q.
    #[arg(long = "mod", global = true, value_name = "P")]
    modulus: Option<u64>,

    /// Number of variables n of A_n.
    #[arg(long = "vars", global = true, default_value_t = 1, value_name = "N")]
    nvars: usize,

    /// Total degree bound for centralizers and fraction witnesses (default 2p).
    #[arg(long, global = true, value_name = "D")]
    degree: Option<u32>,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Skip the direct commutator computation over Q.
    #[arg(long = "no-cross-check", global = true)]
    no_cross_check: bool,

    /// Maximum number of good primes a certificate may use.
    #[arg(long = "max-primes", global = true, default_value_t = 64, value_name = "M")]
    max_primes: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Product A * B.
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Commutator [A, B].
    Comm {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Degree-truncated centralizer of A in A_n(F_p).
    Centralizer {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Decomposition of A over the center of A_1(F_p).
    Decompose {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Write B as z1 / z2 with z1, z2 in Z[A].
    FractionWitness {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Certify whether [P, Q] = 0 over Q by reduction modulo primes.
    Certify {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Run the reduction argument for A and operators P, Q commuting with it.
    Theorem {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
}

#[derive(Debug)]
struct CliError(String);

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError(e.to_string())
    }
}

impl From<weylcent_core::ParseError> for CliError {
    fn from(e: weylcent_core::ParseError) -> Self {
        CliError(e.to_string())
    }
}

type CliResult = Result<u8, CliError>;

impl Cli {
    fn field(&self) -> Result<Option<PrimeField>, CliError> {
        self.modulus.map(|p| Prime::new(p).map(PrimeField::new).map_err(CliError::from)).transpose()
    }

    fn require_field(&self, command: &str) -> Result<PrimeField, CliError> {
        self.field()?.ok_or_else(|| CliError(format!("{command} requires --mod <P>")))
    }

    fn degree_for(&self, field: &PrimeField) -> u32 {
        self.degree.unwrap_or_else(|| u32::try_from(2 * field.prime().get()).unwrap_or(u32::MAX))
    }

    fn certify_options(&self) -> CertifyOptions {
        CertifyOptions { cross_check: !self.no_cross_check, max_primes: self.max_primes }
    }

    fn rationals_only(&self, command: &str) -> Result<(), CliError> {
        if self.modulus.is_some() {
            return Err(CliError(format!("{command} works over Q and does not take --mod")));
        }
        Ok(())
    }

    fn parse_q(&self, text: &str) -> Result<QWeyl, CliError> {
        Ok(parse(text, self.nvars, &Rationals)?)
    }
}

fn parse_all<D: CoeffDomain>(exprs: &[&str], nvars: usize, domain: &D) -> Result<Vec<WeylElement<D>>, CliError> {
    exprs.iter().map(|e| parse(e, nvars, domain).map_err(CliError::from)).collect()
}

fn arithmetic<D: CoeffDomain>(cli: &Cli, domain: &D, exprs: &[&str], commutator: bool) -> CliResult {
    let elems = parse_all(exprs, cli.nvars, domain)?;
    let result = if commutator { elems[0].commutator(&elems[1])? } else { elems[0].checked_mul(&elems[1])? };
    output::element(cli.json, cli.modulus, cli.nvars, &result);
    Ok(0)
}

fn run(cli: &Cli) -> CliResult {
    if cli.nvars == 0 {
        return Err(CliError("--vars must be at least 1".into()));
    }
    match &cli.command {
        Command::Mul { a, b } => {
            let exprs = [a.as_str(), b.as_str()];
            match cli.field()? {
                Some(f) => arithmetic(cli, &f, &exprs, false),
                None => arithmetic(cli, &Rationals, &exprs, false),
            }
        }
        Command::Comm { a, b } => {
            let exprs = [a.as_str(), b.as_str()];
            match cli.field()? {
                Some(f) => arithmetic(cli, &f, &exprs, true),
                None => arithmetic(cli, &Rationals, &exprs, true),
            }
        }
        Command::Centralizer { a } => {
            let field = cli.require_field("centralizer")?;
            let a = parse(a, cli.nvars, &field)?;
            let cb = centralizer_basis(&a, cli.degree_for(&field))?;
            output::centralizer(cli.json, &cb);
            Ok(if cb.commutative { 0 } else { EXIT_NONCOMMUTATIVE })
        }
        Command::Decompose { a } => {
            let field = cli.require_field("decompose")?;
            let a = parse(a, cli.nvars, &field)?;
            let dec = decompose_over_center(&a)?;
            output::decomposition(cli.json, &dec);
            Ok(0)
        }
        Command::FractionWitness { a, b } => {
            let field = cli.require_field("fraction-witness")?;
            let degree = cli.degree_for(&field);
            let a = parse(a, cli.nvars, &field)?;
            let b = parse(b, cli.nvars, &field)?;
            let w = match fraction_witness(&a, &b, degree) {
                Ok(w) => w,
                Err(Error::NotFound(d)) => {
                    eprintln!("no fraction witness within degree {d} (inconclusive; try a larger --degree)");
                    return Ok(EXIT_NOT_FOUND);
                }
                Err(Error::CentralInput) => {
                    return Err(CliError(format!(
                        "{a} is central; the fraction field statement needs a noncentral operator"
                    )))
                }
                Err(e) => return Err(e.into()),
            };
            if b.checked_mul(&w.z2)? != w.z1 || w.z2.is_zero() {
                return Err(CliError("internal error: witness failed verification".into()));
            }
            output::fraction_witness(cli.json, field.prime().get(), &a, &w);
            Ok(0)
        }
        Command::Certify { p, q } => {
            cli.rationals_only("certify")?;
            let (p, q) = (cli.parse_q(p)?, cli.parse_q(q)?);
            let report = certify_zero_commutator(&p, &q, &cli.certify_options())?;
            output::report(cli.json, &report);
            Ok(verdict_code(report.verdict))
        }
        Command::Theorem { a, p, q } => {
            cli.rationals_only("theorem")?;
            let (a, p, q) = (cli.parse_q(a)?, cli.parse_q(p)?, cli.parse_q(q)?);
            let report = theorem_pipeline(&a, &p, &q, &cli.certify_options())?;
            output::report(cli.json, &report);
            Ok(verdict_code(report.verdict))
        }
    }
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::Commute => 0,
        Verdict::NotCommute => 1,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
