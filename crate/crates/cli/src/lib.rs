//! `fatflat` command-line front end. Each subcommand parses its flags, makes
//! one library call and renders the result.
//!
//! Exit codes: 0 success, 1 usage error, 2 precondition violation,
//! 3 verify-suite failure.

pub mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use fatflat::oracle::DEFAULT_PRIME;
use fatflat::verify::{run_all, VerifyConfig};
use fatflat::{
    adim_family, adim_rank_oracle, adim_upper_mult1, cap_index, classify_family,
    conditions_fat_flat, family_conditions_check, hilbert_poly_value, lower_certificate,
    polybinom, report_mult1, s_formula, scan_parallel, vdim_recursive, veneroni_pullback,
    FatFlatScheme, LinearSystem, OracleConfig,
};

pub use render::{OutputFormat, Rendered};
use render::{to_row, RowBuilder};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_PRECONDITION: u8 = 2;
pub const EXIT_VERIFY_FAILED: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "fatflat",
    version,
    about = "Dimensions of linear systems through general codimension-2 fat flats"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t, global = true)]
    pub format: OutputFormat,

    /// Write the rendering to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Virtual dimension of a fat-flat scheme (recursive engine).
    Vdim(SchemeArgs),
    /// Hilbert polynomial of a fat-flat scheme evaluated at t.
    Hp(SchemeArgs),
    /// Inclusion-exclusion count S(n, s, t) for s simple flats.
    Sform(MultOneArgs),
    /// Conditions imposed by one fat linear subspace of given codimension.
    Conds {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        codim: u32,
        #[arg(long)]
        mult: u32,
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
    },
    /// Polynomial binomial coefficient binom(x, m).
    Polybinom {
        #[arg(long, allow_hyphen_values = true)]
        x: i64,
        #[arg(long)]
        m: u32,
    },
    /// Summation cap min(floor(n/2), s).
    CapIndex {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        s: u32,
    },
    /// Castelnuovo upper bound on adim for s simple flats.
    AdimBound(MultOneArgs),
    /// Whether the lower-bound certificate adim >= vdim holds.
    Certify(MultOneArgs),
    /// Combined vdim / bounds report for s simple flats.
    Report(MultOneArgs),
    /// Positivity hypotheses for n+1 simple flats in degree n+k.
    FamilyCheck(FamilyArgs),
    /// Exact adim of the Veneroni family (k >= 3).
    AdimFamily(FamilyArgs),
    /// Veneroni pullback of dH - m_1 P_1 - ... - m_{n+1} P_{n+1}.
    Transform {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        degree: i64,
        #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
        mults: IntList,
    },
    /// Classify the Veneroni family for one (n, k).
    Classify(FamilyArgs),
    /// Classify the Veneroni family over a range of n.
    Scan {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Brute-force adim by rank over a prime field (desk scale only).
    Oracle {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
        mults: IntList,
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u64,
        /// Points per flat as a multiple of the simple-flat condition count.
        #[arg(long, default_value_t = 2)]
        samples: u32,
    },
    /// Run the identity grids and golden-value suites.
    Verify {
        #[arg(long, default_value_t = 9)]
        grid_max: u32,
        /// Skip the probabilistic rank-oracle checks.
        #[arg(long)]
        no_oracle: bool,
    },
}

#[derive(Debug, Args)]
pub struct SchemeArgs {
    #[arg(long)]
    pub n: u32,
    /// Comma-separated multiplicities; empty for no flats.
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
    pub mults: IntList,
    #[arg(long, allow_hyphen_values = true)]
    pub t: i64,
}

#[derive(Debug, Args)]
pub struct MultOneArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub s: u32,
    #[arg(long, allow_hyphen_values = true)]
    pub t: i64,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, allow_hyphen_values = true)]
    pub k: i64,
}

/// Comma-separated decimal integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntList(pub Vec<i64>);

impl IntList {
    fn joined(&self) -> String {
        join(&self.0)
    }

    /// Multiplicities of a scheme: non-negative, zeros allowed and dropped.
    fn multiplicities(&self) -> Result<Vec<u32>, Failure> {
        self.0
            .iter()
            .map(|&m| {
                u32::try_from(m)
                    .map_err(|_| Failure::Precondition(format!("multiplicity {m} is negative or too large")))
            })
            .collect()
    }
}

fn parse_list(s: &str) -> Result<IntList, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(IntList(Vec::new()));
    }
    s.split(',')
        .map(|p| {
            let p = p.trim();
            p.parse::<i64>()
                .map_err(|_| format!("{p:?} is not a decimal integer"))
        })
        .collect::<Result<_, _>>()
        .map(IntList)
}

fn join<T: ToString>(values: &[T]) -> String {
    values.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

#[derive(Debug)]
enum Failure {
    Precondition(String),
    VerifyFailed(Rendered),
}

impl From<fatflat::Error> for Failure {
    fn from(e: fatflat::Error) -> Self {
        Failure::Precondition(e.to_string())
    }
}

/// Executes the subcommand and returns its rendered result.
fn execute(command: &Command) -> Result<Rendered, Failure> {
    let scalar = |row, primary| Ok(Rendered::Scalar { row, primary });
    match command {
        Command::Vdim(a) => {
            let scheme = FatFlatScheme::new(a.n, a.mults.multiplicities()?)?;
            let v = vdim_recursive(&scheme, a.t);
            scalar(scheme_row(a).big("vdim", &v).build(), "vdim")
        }
        Command::Hp(a) => {
            let scheme = FatFlatScheme::new(a.n, a.mults.multiplicities()?)?;
            let v = hilbert_poly_value(&scheme, a.t);
            scalar(scheme_row(a).big("hp", &v).build(), "hp")
        }
        Command::Sform(a) => {
            require_ambient(a.n)?;
            let v = s_formula(a.n, a.s, a.t);
            scalar(mult_one_row(a).big("sform", &v).build(), "sform")
        }
        Command::Conds { n, codim, mult, t } => {
            let v = conditions_fat_flat(*n, *codim, *mult, *t)?;
            let row = RowBuilder::new()
                .int("n", *n)
                .int("codim", *codim)
                .int("mult", *mult)
                .int("t", *t)
                .big("conditions", &v)
                .build();
            scalar(row, "conditions")
        }
        Command::Polybinom { x, m } => {
            let v = polybinom(*x, *m);
            scalar(RowBuilder::new().int("x", *x).int("m", *m).big("value", &v).build(), "value")
        }
        Command::CapIndex { n, s } => {
            require_ambient(*n)?;
            let v = cap_index(*n, *s);
            scalar(RowBuilder::new().int("n", *n).int("s", *s).int("cap", v).build(), "cap")
        }
        Command::AdimBound(a) => {
            let v = adim_upper_mult1(a.n, a.s, a.t)?;
            scalar(mult_one_row(a).big("adim_upper", &v).build(), "adim_upper")
        }
        Command::Certify(a) => {
            require_ambient(a.n)?;
            let v = lower_certificate(a.n, a.s, a.t);
            scalar(mult_one_row(a).bool("certified", v).build(), "certified")
        }
        Command::Report(a) => Ok(Rendered::Record(to_row(&report_mult1(a.n, a.s, a.t)?))),
        Command::FamilyCheck(a) => {
            require_ambient(a.n)?;
            let v = family_conditions_check(a.n, a.k);
            scalar(family_row(a).bool("holds", v).build(), "holds")
        }
        Command::AdimFamily(a) => {
            let v = adim_family(a.n, a.k)?;
            scalar(family_row(a).big("adim", &v).build(), "adim")
        }
        Command::Transform { n, degree, mults } => {
            let source = LinearSystem::new(*n, *degree, mults.0.clone())?;
            let image = veneroni_pullback(&source)?;
            let row = RowBuilder::new()
                .int("n", *n)
                .int("degree", image.degree)
                .text("mults", join(&image.multiplicities))
                .bool("valid", image.is_valid())
                .text("system", image.to_string())
                .build();
            Ok(Rendered::Record(row))
        }
        Command::Classify(a) => Ok(Rendered::Record(to_row(&classify_family(a.n, a.k)?))),
        Command::Scan {
            k,
            n_min,
            n_max,
            jobs,
        } => {
            let records = scan_parallel(*k, *n_min, *n_max, *jobs)?;
            Ok(Rendered::Rows(records.iter().map(to_row).collect()))
        }
        Command::Oracle {
            n,
            mults,
            t,
            seed,
            prime,
            samples,
        } => {
            let cfg = OracleConfig {
                prime: *prime,
                seed: *seed,
                samples_per_flat: *samples,
            };
            let list = mults.multiplicities()?;
            let v = adim_rank_oracle(*n, &list, *t, &cfg)?;
            let row = RowBuilder::new()
                .int("n", *n)
                .text("mults", mults.joined())
                .int("t", *t)
                .text("seed", seed.to_string())
                .text("prime", prime.to_string())
                .big("adim", &v)
                .build();
            scalar(row, "adim")
        }
        Command::Verify {
            grid_max,
            no_oracle,
        } => {
            let outcomes = run_all(&VerifyConfig {
                grid_max: *grid_max,
                oracle: !no_oracle,
            });
            let all_passed = outcomes.iter().all(|o| o.passed);
            let rows = outcomes
                .iter()
                .map(|o| {
                    RowBuilder::new()
                        .text("status", if o.passed { "PASS" } else { "FAIL" })
                        .text("check", o.name)
                        .text("detail", o.detail.clone())
                        .build()
                })
                .collect();
            let rendered = Rendered::Rows(rows);
            if all_passed {
                Ok(rendered)
            } else {
                Err(Failure::VerifyFailed(rendered))
            }
        }
    }
}

fn require_ambient(n: u32) -> Result<(), Failure> {
    if n < 2 {
        return Err(fatflat::Error::AmbientDimension { min: 2, got: n }.into());
    }
    Ok(())
}

fn scheme_row(a: &SchemeArgs) -> RowBuilder {
    RowBuilder::new()
        .int("n", a.n)
        .text("mults", a.mults.joined())
        .int("t", a.t)
}

fn mult_one_row(a: &MultOneArgs) -> RowBuilder {
    RowBuilder::new().int("n", a.n).int("s", a.s).int("t", a.t)
}

fn family_row(a: &FamilyArgs) -> RowBuilder {
    RowBuilder::new().int("n", a.n).int("k", a.k)
}

fn emit(
    text: &str,
    cli: &Cli,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), u8> {
    let result = match &cli.out {
        Some(path) => std::fs::write(path, text),
        None => out.write_all(text.as_bytes()),
    };
    result.map_err(|e| {
        let _ = writeln!(err, "error: cannot write output: {e}");
        EXIT_PRECONDITION
    })
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };

    match execute(&cli.command) {
        Ok(rendered) => match emit(&rendered.render(cli.format), &cli, out, err) {
            Ok(()) => EXIT_OK,
            Err(code) => code,
        },
        Err(Failure::Precondition(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_PRECONDITION
        }
        Err(Failure::VerifyFailed(rendered)) => {
            let _ = emit(&rendered.render(cli.format), &cli, out, err);
            let _ = writeln!(err, "error: verify suite failed");
            EXIT_VERIFY_FAILED
        }
    }
}
