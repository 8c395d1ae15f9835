//! Command-line dispatch: every verifier and evaluator behind one binary.
//!
//! Exit codes: 0 when all requested checks pass, 1 on computation failure or
//! a failed check, 2 when a conjecture scan finds a deviation (to tell it
//! apart from hard failure), 64 on usage errors. Output is deterministic for
//! fixed inputs and flags; `--json` emits the report schema documented in
//! [`crate::report`].

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::basis::{basis_suite, build_t, build_u};
use crate::comp::Composition;
use crate::lie::{
    exp_functional_equation_check, nc_binomial_check, ree_inverse_check, vacuum_sweep,
};
use crate::mzv::checks::{
    admissible_words, closed_form_suite, duality_suite, holder_vs_direct_suite,
    shuffle_homomorphism_suite,
};
use crate::mzv::{
    cyclic_sum, scan_conjecture, theorem_t_suite, word_to_argstring, z_closed, zeta_args,
    zeta_direct, zeta_holder, ArgString, MzvError, DEFAULT_TERMS, SCAN_TOL,
};
use crate::report::{to_json, Report};
use crate::shuffle::{kernel_agreement_sweep, shuffle_with, word_sum_to_poly, ShuffleImpl};
use crate::words::{parse_word, Alphabet};

const EXIT_OK: i32 = 0;
const EXIT_FAIL: i32 = 1;
const EXIT_DEVIATION: i32 = 2;
const EXIT_USAGE: i32 = 64;

/// Precision fallback order: `--prec` flag, `SHUFFLE_MZV_PREC`, then 128.
pub const PREC_ENV_VAR: &str = "SHUFFLE_MZV_PREC";

#[derive(Parser)]
#[command(
    name = "shuffle-mzv",
    version,
    about = "Exact shuffle-algebra identities and high-precision multiple zeta values"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON reports instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Working precision in bits (overrides SHUFFLE_MZV_PREC; default 128)
    #[arg(long, global = true)]
    prec: Option<u32>,
    /// Series terms for the numeric engine
    #[arg(long, global = true)]
    terms: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum KernelArg {
    Left,
    Right,
    Direct,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Holder,
    Direct,
}

#[derive(Subcommand)]
enum Command {
    /// Shuffle two words and print the canonical polynomial
    Shuffle {
        u: String,
        v: String,
        /// Kernel: the front recursion, the back recursion, or direct
        /// enumeration of interleavings
        #[arg(long = "impl", value_enum, default_value = "left")]
        kernel: KernelArg,
        /// Alphabet the words are read over
        #[arg(long, default_value = "ab")]
        alphabet: String,
    },
    /// Print the T subsum polynomial T_{m,n}
    #[command(allow_negative_numbers = true)]
    Tmn { m: i64, n: i64 },
    /// Print the U subsum polynomial U_{m,n}
    #[command(allow_negative_numbers = true)]
    Umn { m: i64, n: i64 },
    /// Evaluate a zeta value from arguments ("2,1") or an admissible word
    Zeta {
        /// Comma-separated arguments, e.g. 3,1 (first entry at least 2)
        #[arg(required_unless_present = "word")]
        args: Option<String>,
        /// Admissible word over {a,b} instead of arguments, e.g. aabb
        #[arg(long, conflicts_with = "args")]
        word: Option<String>,
        /// holder: convolution split at 1/2; direct: plain nested sum
        #[arg(long, value_enum, default_value = "holder")]
        method: MethodArg,
    },
    /// Cyclic sum of a composition against the closed form Z(m)
    Cyclic {
        /// Comma-separated parts, odd count, e.g. 1,0,0
        parts: String,
    },
    /// Verification suites
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
    /// Scan the cyclic insertion statement (open conjecture) up to a weight
    ScanConjecture {
        #[arg(long, default_value_t = 7)]
        max_m: u64,
    },
}

#[derive(Subcommand)]
enum VerifySuite {
    /// Exact subsum decompositions and generating identities
    Basis {
        /// Bound on p+q and the bivariate weight (derived sweeps scale off it)
        #[arg(long, default_value_t = 10)]
        max: usize,
    },
    /// Exponential-series identities (vacuum sums, shuffle inverse,
    /// functional equation, noncommutative binomial theorem)
    Lie {
        #[arg(long, default_value = "ab")]
        alphabet: String,
        /// Truncation degree for the inverse check; the vacuum sweep runs to
        /// degree+2 (capped), the functional equation to degree-1
        #[arg(long, default_value_t = 6)]
        degree: usize,
    },
    /// Aggregate insertion-sum identities against their closed forms
    TheoremT {
        #[arg(long, default_value_t = 8)]
        max_m: u64,
    },
    /// Every suite, plus kernel agreement and numeric cross-checks
    All {
        /// Global size knob: exact sweeps to this total length / weight
        #[arg(long, default_value_t = 10)]
        max: usize,
    },
}

/// Parse argv and execute; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return code;
        }
    };

    let prec = resolve_prec(cli.prec);
    let terms = cli.terms.unwrap_or(DEFAULT_TERMS).max(1);
    let json = cli.json;

    match dispatch(cli.command, json, prec, terms) {
        Ok(code) => code,
        Err(message) => {
            let report = Report {
                statement: "computation failed".into(),
                parameters: Default::default(),
                lhs: None,
                rhs: None,
                abs_error: None,
                error_bound: None,
                tolerance: None,
                pass: false,
            }
            .with_param("error", message.clone());
            if json {
                println!("{}", to_json(&[report]));
            } else {
                eprintln!("error: {}", message);
            }
            EXIT_FAIL
        }
    }
}

fn resolve_prec(flag: Option<u32>) -> u32 {
    let from_env = std::env::var(PREC_ENV_VAR)
        .ok()
        .and_then(|value| value.parse::<u32>().ok());
    flag.or(from_env)
        .unwrap_or(crate::mzv::DEFAULT_PREC)
        .clamp(16, 4096)
}

fn digits_for(prec: u32) -> usize {
    ((prec as f64 * std::f64::consts::LOG10_2) as usize).min(50)
}

fn dispatch(command: Command, json: bool, prec: u32, terms: u64) -> Result<i32, String> {
    match command {
        Command::Shuffle {
            u,
            v,
            kernel,
            alphabet,
        } => {
            let alphabet = Alphabet::from_str_names(&alphabet);
            let u = parse_word(&u, &alphabet).map_err(|e| e.to_string())?;
            let v = parse_word(&v, &alphabet).map_err(|e| e.to_string())?;
            let (kernel, kernel_name) = match kernel {
                KernelArg::Left => (ShuffleImpl::Left, "left"),
                KernelArg::Right => (ShuffleImpl::Right, "right"),
                KernelArg::Direct => (ShuffleImpl::Direct, "direct"),
            };
            let sum = shuffle_with(kernel, &u, &v).map_err(|e| e.to_string())?;
            let poly = word_sum_to_poly(&alphabet, &sum);
            if json {
                let report = Report::value("shuffle product", poly.render(), None)
                    .with_param("u", u.render(&alphabet))
                    .with_param("v", v.render(&alphabet))
                    .with_param("impl", kernel_name);
                println!("{}", to_json(&[report]));
            } else {
                println!("{}", poly.render());
            }
            Ok(EXIT_OK)
        }

        Command::Tmn { m, n } => {
            let poly = build_t(m, n);
            if json {
                let report = Report::value("T subsum", poly.render(), None)
                    .with_param("m", m)
                    .with_param("n", n);
                println!("{}", to_json(&[report]));
            } else {
                println!("{}", poly.render());
            }
            Ok(EXIT_OK)
        }

        Command::Umn { m, n } => {
            let poly = build_u(m, n);
            if json {
                let report = Report::value("U subsum", poly.render(), None)
                    .with_param("m", m)
                    .with_param("n", n);
                println!("{}", to_json(&[report]));
            } else {
                println!("{}", poly.render());
            }
            Ok(EXIT_OK)
        }

        Command::Zeta { args, word, method } => {
            let ab = Alphabet::ab();
            let (value, label) = match (args, word) {
                // clap enforces exactly one of the two input forms
                (Some(_), Some(_)) | (None, None) => unreachable!("argument group"),
                (Some(text), None) => {
                    let argstring = ArgString::parse(&text).map_err(|e| e.to_string())?;
                    let value = match method {
                        MethodArg::Holder => zeta_args(&argstring, terms, prec),
                        MethodArg::Direct => zeta_direct(&argstring, terms, prec),
                    }
                    .map_err(|e| e.to_string())?;
                    (value, argstring.to_string())
                }
                (None, Some(text)) => {
                    let word = parse_word(&text, &ab).map_err(|e| e.to_string())?;
                    let value = match method {
                        MethodArg::Holder => zeta_holder(&word, terms, prec),
                        MethodArg::Direct => {
                            let argstring = word_to_argstring(&word).map_err(|e| e.to_string())?;
                            zeta_direct(&argstring, terms, prec)
                        }
                    }
                    .map_err(|e| e.to_string())?;
                    (value, word.render(&ab))
                }
            };
            let decimal = value.to_decimal(digits_for(prec));
            if json {
                let report = Report::value("zeta value", decimal, Some(value.bound()))
                    .with_param("input", label)
                    .with_param(
                        "method",
                        match method {
                            MethodArg::Holder => "holder",
                            MethodArg::Direct => "direct",
                        },
                    )
                    .with_param("terms", terms)
                    .with_param("prec", prec);
                println!("{}", to_json(&[report]));
            } else {
                println!("{} ± {:.3e}", decimal, value.bound());
            }
            Ok(EXIT_OK)
        }

        Command::Cyclic { parts } => {
            let parsed: Result<Vec<u64>, _> = parts
                .split(',')
                .map(|piece| piece.trim().parse::<u64>())
                .collect();
            let parts = parsed.map_err(|_| format!("cannot parse composition '{}'", parts))?;
            if parts.is_empty() {
                return Err("composition needs at least one part".into());
            }
            let composition = Composition::new(parts);
            if composition.len().is_multiple_of(2) {
                return Err(MzvError::Composition(crate::comp::CompError::EvenPartCount(
                    composition.len(),
                ))
                .to_string());
            }
            let m = composition.sum() + (composition.len() as u64 - 1);
            let cyclic = cyclic_sum(&composition, terms, prec).map_err(|e| e.to_string())?;
            let closed = z_closed(m, prec);
            let deviation = cyclic.abs_diff_f64(&closed);
            let digits = digits_for(prec);
            let report = Report::numeric(
                "cyclic sum against Z(m) (conjecture instance)",
                cyclic.to_decimal(digits),
                closed.to_decimal(digits),
                deviation,
                cyclic.bound() + closed.bound(),
                SCAN_TOL,
            )
            .with_param("composition", composition.to_string())
            .with_param("m", m)
            .with_param(
                "status",
                if deviation <= SCAN_TOL {
                    "conjecture-consistent"
                } else {
                    "DEVIATION"
                },
            );
            if json {
                println!("{}", to_json(std::slice::from_ref(&report)));
            } else {
                println!("cyclic    = {}", report.lhs.as_deref().unwrap_or(""));
                println!("closed    = {}", report.rhs.as_deref().unwrap_or(""));
                println!(
                    "deviation = {:.3e} (tolerance {:.1e}, {})",
                    deviation,
                    SCAN_TOL,
                    if report.pass {
                        "conjecture-consistent"
                    } else {
                        "DEVIATION"
                    }
                );
            }
            Ok(if report.pass { EXIT_OK } else { EXIT_DEVIATION })
        }

        Command::Verify { suite } => {
            let reports = run_verify(suite, terms, prec);
            emit(&reports, json);
            Ok(if reports.iter().all(|r| r.pass) {
                EXIT_OK
            } else {
                EXIT_FAIL
            })
        }

        Command::ScanConjecture { max_m } => {
            let outcome = scan_conjecture(max_m, terms, prec, SCAN_TOL);
            let mut reports = outcome.reports.clone();
            let summary = Report::numeric(
                "conjecture scan summary (consistency is not proof)",
                format!("max deviation {:.3e}", outcome.max_deviation),
                format!("tolerance {:.1e}", SCAN_TOL),
                outcome.max_deviation,
                0.0,
                SCAN_TOL,
            )
            .with_param("max_m", max_m)
            .with_param("status", outcome.status())
            .with_param("worst", outcome.worst_case.clone());
            reports.push(summary);
            emit(&reports, json);
            Ok(if outcome.deviated {
                EXIT_DEVIATION
            } else {
                EXIT_OK
            })
        }
    }
}

fn run_verify(suite: VerifySuite, terms: u64, prec: u32) -> Vec<Report> {
    match suite {
        VerifySuite::Basis { max } => basis_suite(max),
        VerifySuite::Lie { alphabet, degree } => {
            let alphabet = Alphabet::from_str_names(&alphabet);
            lie_suite(&alphabet, degree)
        }
        VerifySuite::TheoremT { max_m } => theorem_t_suite(max_m, terms, prec),
        VerifySuite::All { max } => {
            let mut reports = Vec::new();
            let ab_total = max.min(12);
            let abc_total = max.saturating_sub(4).clamp(2, 8);
            reports.push(kernel_agreement_sweep(&Alphabet::ab(), ab_total));
            reports.push(kernel_agreement_sweep(&Alphabet::abc(), abc_total));
            reports.extend(lie_suite(&Alphabet::ab(), 6));
            reports.extend(basis_suite(max));
            reports.extend(closed_form_suite(6, 3, terms, prec, 1e-10));
            reports.push(duality_suite(8, terms, prec, 1e-10));
            reports.push(shuffle_homomorphism_suite(8, terms, prec, 1e-9));
            match holder_vs_direct_suite(&admissible_words(5), terms, 100_000, 64) {
                Ok(report) => reports.push(report),
                Err(err) => reports.push(Report::exact(
                    "convolution and direct series agree within combined error bounds",
                    0,
                    vec![err.to_string()],
                )),
            }
            reports.extend(theorem_t_suite(max.min(10) as u64, terms, prec));
            reports
        }
    }
}

fn lie_suite(alphabet: &Alphabet, degree: usize) -> Vec<Report> {
    let vacuum_cap = if alphabet.len() <= 2 { 8 } else { 5 };
    vec![
        vacuum_sweep(alphabet, (degree + 2).min(vacuum_cap)),
        ree_inverse_check(alphabet, degree),
        exp_functional_equation_check(alphabet, degree.saturating_sub(1)),
        nc_binomial_check((degree + 2).min(8)),
    ]
}

fn emit(reports: &[Report], json: bool) {
    if json {
        println!("{}", to_json(reports));
    } else {
        for report in reports {
            println!("{}", report.line());
        }
        let passed = reports.iter().filter(|r| r.pass).count();
        println!("{}/{} statements passed", passed, reports.len());
    }
}
