//! The `dl` command line.
//!
//! Exit codes: 0 success or verified, 1 refuted, 2 usage error,
//! 3 inconclusive because of truncation.

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::cartan::CartanEngine;
use crate::cofiber::{
    build_cofiber, check_nilpotent_in_cofiber, check_p_power_rule, check_qnilpotent_identity,
    e1_filtration_stage, mixed_term_coefficient, smallest_mixed_sequence, Status,
};
use crate::error::{Error, Result};
use crate::expr::{parse_expr, parse_generator, parse_sequence};
use crate::field::Prime;
use crate::free::{enumerate_generators, poincare_series, verify_decomposition, Bounds, IndexConvention};
use crate::sequences::{classify, is_allowable, is_bounded, Arity};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TRUNCATED: i32 = 3;

/// Used when infinitely many operations fit and no excess bound was given.
pub const DEFAULT_EXCESS_BOUND: i64 = 64;

#[derive(Debug, Parser)]
#[command(name = "dl", version, about = "Dyer–Lashof operation calculus over F_p")]
struct Cli {
    /// The prime.
    #[arg(short = 'p', long = "prime", global = true, default_value_t = 2)]
    p: u32,

    /// Largest weight (arity grading) kept in enumerations and expansions.
    #[arg(long, global = true, default_value_t = 32)]
    weight_bound: u64,

    /// Largest excess `degree − weight·t` kept; needed when k is infinite.
    #[arg(long, global = true)]
    excess_bound: Option<i64>,

    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Topological degree of a class such as "bP_1/2 bP_1 x".
    Degree { class: String },
    /// Whether the sequence of a class is k-allowable (and optionally n-bounded).
    Allowable {
        class: String,
        #[arg(long, default_value = "inf")]
        k: Arity,
        #[arg(long)]
        bounded: Option<u32>,
    },
    /// Purely bosonic, mixed bosonic or fermionic.
    Classify { seq: String },
    /// Apply a sequence of operations to an expression and expand.
    Expand {
        expr: String,
        #[arg(long, default_value = "")]
        seq: String,
    },
    /// Polynomial generators of the free E_k-algebra on x in degree t.
    Basis(FreeArgs),
    /// Bigraded Poincaré series of the free E_k-algebra.
    Series(FreeArgs),
    /// Compare both sides of a free-algebra decomposition.
    VerifyDecomp {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value = "inf")]
        n: Arity,
        #[arg(long)]
        t: i64,
        #[arg(long, default_value = "corrected")]
        convention: IndexConvention,
    },
    /// Presentation of F_p{x}//x^p (odd p).
    Cofiber,
    /// Nilpotence of a class in the cofiber model.
    Nilpotent {
        #[arg(long)]
        class: String,
        #[arg(long, default_value_t = 100)]
        max_power: u32,
    },
    /// Classes killed by a stage of the E_1-cofiber filtration (p = 2).
    Filtration {
        #[arg(long)]
        stage: u64,
        #[arg(long, default_value_t = 0)]
        t: i64,
    },
    /// Machine checks of the power-operation lemmas.
    #[command(subcommand)]
    CheckLemma(Lemma),
}

#[derive(Debug, Args)]
struct FreeArgs {
    #[arg(long, default_value = "inf")]
    k: Arity,
    #[arg(long, default_value_t = 0)]
    t: i64,
}

#[derive(Debug, Subcommand)]
enum Lemma {
    /// Q_{2^n I}(v^{2^n}) = Q_I(v)^{2^n} for a basis-shape I (p = 2).
    Qnilpotent {
        #[arg(long)]
        seq: String,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        t: i64,
    },
    /// β^ε P_i(v^p) against the p-th power rule (odd p).
    PPower {
        /// The index, e.g. 3 or 3/2.
        #[arg(long)]
        index: String,
        #[arg(long)]
        bockstein: bool,
    },
    /// Coefficient of the mixed target term in P_I(x_1⋯x_n) (odd p).
    MixedTerm {
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Defaults to the smallest sequence admitting a target.
        #[arg(long)]
        seq: Option<String>,
    },
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Outcome {
    code: i32,
    json: Value,
    text: String,
}

fn ok(json: Value, text: String) -> Outcome {
    Outcome {
        code: EXIT_OK,
        json,
        text,
    }
}

fn status_code(status: Status) -> i32 {
    match status {
        Status::Verified => EXIT_OK,
        Status::Refuted => EXIT_REFUTED,
        Status::InconclusiveTruncated => EXIT_TRUNCATED,
    }
}

/// Runs `dl` on the given arguments (the first is the program name).
pub fn run_command<I, S>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if code == EXIT_OK {
                CommandOutput {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                CommandOutput {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            let stdout = if cli.json {
                format!("{}\n", serde_json::to_string_pretty(&out.json).expect("json"))
            } else {
                format!("{}\n", out.text.trim_end())
            };
            CommandOutput {
                code: out.code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => CommandOutput {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Tries without an excess bound and falls back to the default if the
/// enumeration turns out to be infinite.
fn with_excess<T>(cli: &Cli, mut f: impl FnMut(Bounds) -> Result<T>) -> Result<(T, Bounds)> {
    let bounds = Bounds::new(cli.weight_bound, cli.excess_bound);
    match f(bounds) {
        Err(Error::Unbounded(_)) if cli.excess_bound.is_none() => {
            let bounds = Bounds::new(cli.weight_bound, Some(DEFAULT_EXCESS_BOUND));
            Ok((f(bounds)?, bounds))
        }
        other => other.map(|v| (v, bounds)),
    }
}

fn parse_index(s: &str) -> Result<u32> {
    let bad = || Error::Syntax {
        pos: 0,
        msg: format!("expected an index like 3 or 3/2, got `{s}`"),
    };
    match s.strip_suffix("/2") {
        Some(num) => num.parse::<u32>().map_err(|_| bad()),
        None => s.parse::<u32>().map(|i| 2 * i).map_err(|_| bad()),
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let p = Prime::new(cli.p)?;
    match &cli.command {
        Command::Degree { class } => {
            let g = parse_generator(class, p)?;
            Ok(ok(
                json!({"class": g.to_string(), "degree": g.degree(), "weight": g.weight()}),
                g.degree().to_string(),
            ))
        }
        Command::Allowable { class, k, bounded } => {
            let g = parse_generator(class, p)?;
            let allowable = is_allowable(p, g.seq(), g.base_degree(), *k);
            let bounded_ok = bounded.map(|n| is_bounded(g.seq(), n));
            let answer = allowable && bounded_ok.unwrap_or(true);
            Ok(ok(
                json!({"class": g.to_string(), "k": k.to_string(), "allowable": allowable,
                       "bounded": bounded_ok}),
                answer.to_string(),
            ))
        }
        Command::Classify { seq } => {
            let seq = parse_sequence(seq, p)?;
            let kind = classify(&seq)?;
            Ok(ok(json!({"sequence": seq.to_string(), "type": kind}), kind.to_string()))
        }
        Command::Expand { expr, seq } => {
            let f = parse_expr(expr, p)?.evaluate(p)?;
            let seq = parse_sequence(seq, p)?;
            let out = CartanEngine::new(p, Some(cli.weight_bound)).apply_seq(&seq, &f)?;
            let mut text = out.value.to_string();
            if !out.adem_free {
                text.push_str("\n# contains composites that are not in basis form");
            }
            if out.truncated {
                text.push_str("\n# terms above the weight bound were dropped");
            }
            Ok(Outcome {
                code: if out.truncated { EXIT_TRUNCATED } else { EXIT_OK },
                json: json!({"value": out.value.to_json(), "text": out.value.to_string(),
                             "adem_free": out.adem_free, "truncated": out.truncated}),
                text,
            })
        }
        Command::Basis(args) => {
            let (gens, bounds) = with_excess(cli, |b| enumerate_generators(p, args.k, args.t, b))?;
            let rows: Vec<Value> = gens
                .iter()
                .map(|g| json!({"class": g.to_string(), "degree": g.degree(), "weight": g.weight()}))
                .collect();
            let text = gens
                .iter()
                .map(|g| format!("{g}\tdegree {}\tweight {}", g.degree(), g.weight()))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(ok(json!({"W": bounds.weight, "E": bounds.excess, "generators": rows}), text))
        }
        Command::Series(args) => {
            let (series, _) = with_excess(cli, |b| poincare_series(p, args.k, args.t, b))?;
            let text = series
                .nonzero()
                .iter()
                .map(|(w, d, c)| format!("{w}\t{d}\t{c}"))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(ok(serde_json::to_value(series.to_json()).expect("json"), text))
        }
        Command::VerifyDecomp {
            k,
            n,
            t,
            convention,
        } => {
            let (report, _) =
                with_excess(cli, |b| verify_decomposition(p, *k, *n, *t, b, *convention))?;
            let text = match report.first_mismatch {
                None => format!(
                    "match ({} factors, W = {}, E = {})",
                    report.factors, report.weight_bound, report.excess_bound
                ),
                Some((w, d)) => format!("mismatch at weight {w}, degree {d}"),
            };
            Ok(Outcome {
                code: if report.matched { EXIT_OK } else { EXIT_REFUTED },
                json: serde_json::to_value(&report).expect("json"),
                text,
            })
        }
        Command::Cofiber => {
            let (pres, bounds) = with_excess(cli, |b| build_cofiber(p, b))?;
            let killed: Vec<String> = pres.killed_powers.iter().map(|m| m.to_string()).collect();
            let sigmas = |v: &[crate::cofiber::Sigma]| -> Vec<Value> {
                v.iter()
                    .map(|s| json!({"source": s.source.to_string(), "degree": s.degree}))
                    .collect()
            };
            let ext = sigmas(&pres.exterior_sigmas);
            let e1 = sigmas(&pres.free_e1_sigmas);
            let mut text = format!("killed: {}\n", killed.join(", "));
            for (label, list) in [("exterior", &pres.exterior_sigmas), ("free E_1", &pres.free_e1_sigmas)] {
                for s in list.iter() {
                    text.push_str(&format!("{label}: sigma({}) in degree {}\n", s.source, s.degree));
                }
            }
            Ok(ok(
                json!({"W": bounds.weight, "E": bounds.excess, "killed_powers": killed,
                       "exterior_sigmas": ext, "free_e1_sigmas": e1}),
                text,
            ))
        }
        Command::Nilpotent { class, max_power } => {
            let g = parse_generator(class, p)?;
            let (pres, _) = with_excess(cli, |b| build_cofiber(p, b))?;
            let report = check_nilpotent_in_cofiber(&g, &pres, *max_power)?;
            let text = match report.exponent {
                Some(e) => format!("{} (exponent {e}): {}", report.result, report.witness),
                None => format!("{}: {}", report.result, report.witness),
            };
            Ok(Outcome {
                code: status_code(report.status),
                json: serde_json::to_value(&report).expect("json"),
                text,
            })
        }
        Command::Filtration { stage, t } => {
            if !p.is_two() {
                return Err(Error::Unsupported("filtration stages are for p = 2".into()));
            }
            let killed = e1_filtration_stage(*stage, *t);
            let rows: Vec<Value> = killed
                .iter()
                .map(|g| json!({"class": g.to_string(), "degree": g.degree()}))
                .collect();
            let text = killed
                .iter()
                .map(|g| format!("{g}\tdegree {}", g.degree()))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(ok(json!({"stage": stage, "killed": rows}), text))
        }
        Command::CheckLemma(lemma) => {
            let (status, json) = match lemma {
                Lemma::Qnilpotent { seq, n, t } => {
                    let seq = parse_sequence(seq, p)?;
                    let r = check_qnilpotent_identity(&seq, *n, *t)?;
                    (r.status, serde_json::to_value(&r).expect("json"))
                }
                Lemma::PPower { index, bockstein } => {
                    let r = check_p_power_rule(p, parse_index(index)?, *bockstein)?;
                    (r.status, serde_json::to_value(&r).expect("json"))
                }
                Lemma::MixedTerm { n, seq } => {
                    let seq = match seq {
                        Some(s) => parse_sequence(s, p)?,
                        None => smallest_mixed_sequence(p, *n)?,
                    };
                    let r = mixed_term_coefficient(p, *n, &seq)?;
                    (r.status, serde_json::to_value(&r).expect("json"))
                }
            };
            let mut text = format!("status: {status}");
            if let Value::Object(map) = &json {
                for (key, value) in map {
                    if key != "status" {
                        text.push_str(&format!("\n{key}: {value}"));
                    }
                }
            }
            Ok(Outcome {
                code: status_code(status),
                json,
                text,
            })
        }
    }
}
