//! Command-line front end.
//!
//! Exit codes: 0 when a verdict was reached, 2 when a cap stopped the
//! computation short of one, 1 on usage, file or configuration errors.

pub mod bench;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::context::{Caps, GroupContext, Profile};
use crate::error::{Error, Result};
use crate::list_solver::{centraliser_lists_report, solve_lists_report, ListOutcome};
use crate::oracle::brute_conjugator;
use crate::straightness::{test_inf_order, OrderClass};
use crate::words::{parse_word_list, Word};

pub const EXIT_DECIDED: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_UNVERIFIED: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ProfileArg {
    Practical,
    Paper,
}

#[derive(Parser, Debug)]
#[command(
    name = "hypconj",
    version,
    about = "Conjugacy and centralisers of lists in hyperbolic groups"
)]
struct Cli {
    /// Which set of caps to use.
    #[arg(long, value_enum, default_value = "practical", global = true)]
    profile: ProfileArg,
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: OutputFormat,
    #[arg(long, global = true)]
    conjugator_radius: Option<u128>,
    #[arg(long, global = true)]
    centraliser_radius: Option<u128>,
    #[arg(long, global = true)]
    power_cap: Option<u128>,
    #[arg(long, global = true)]
    straight_check_power: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GroupArg {
    /// Group definition file.
    #[arg(short = 'g', long = "group")]
    group: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Shortlex normal form of a word.
    Reduce {
        #[command(flatten)]
        g: GroupArg,
        #[arg(short = 'w', allow_hyphen_values = true)]
        word: String,
    },
    /// Finite or infinite order.
    Order {
        #[command(flatten)]
        g: GroupArg,
        #[arg(short = 'w')]
        word: String,
    },
    /// Conjugacy of two elements.
    Conj {
        #[command(flatten)]
        g: GroupArg,
        #[arg(short = 'u')]
        u: String,
        #[arg(short = 'v')]
        v: String,
    },
    /// Conjugacy of two lists read from files.
    ConjLists {
        #[command(flatten)]
        g: GroupArg,
        #[arg(short = 'A')]
        a: PathBuf,
        #[arg(short = 'B')]
        b: PathBuf,
    },
    /// Generators of the centraliser of a list.
    Centraliser {
        #[command(flatten)]
        g: GroupArg,
        #[arg(short = 'A')]
        a: PathBuf,
    },
    /// Exhaustive conjugator search up to a radius.
    OracleConj {
        #[command(flatten)]
        g: GroupArg,
        #[arg(short = 'A')]
        a: PathBuf,
        #[arg(short = 'B')]
        b: PathBuf,
        #[arg(long)]
        radius: usize,
    },
    /// Constants derived from δ.
    Constants {
        #[command(flatten)]
        g: GroupArg,
    },
    /// Times round-trip instances of increasing word length.
    Bench {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, value_delimiter = ',', default_value = "1000,2000,4000,8000")]
        mu_list: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// Settings shared by all subcommands.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub group_file: PathBuf,
    pub profile: Profile,
    pub caps: Caps,
    pub output: OutputFormat,
}

struct Report {
    code: i32,
    json: Value,
    text: String,
}

fn word_arg(ctx: &GroupContext, s: &str) -> Result<Word> {
    if s == "1" {
        Ok(Word::empty())
    } else {
        ctx.parse(s)
    }
}

fn show(ctx: &GroupContext, w: &Word) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        ctx.format(w)
    }
}

fn read_list(ctx: &GroupContext, path: &PathBuf) -> Result<Vec<Word>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    parse_word_list(&text, ctx.alphabet()).map_err(|e| match e {
        Error::File { line, message } => {
            Error::Config(format!("{}:{line}: {message}", path.display()))
        }
        other => other,
    })
}

fn load(cli: &Cli, group: &PathBuf) -> Result<(GroupContext, RunConfig)> {
    let base = GroupContext::from_file(group).map_err(|e| match e {
        Error::File { line, message } => {
            Error::Config(format!("{}:{line}: {message}", group.display()))
        }
        other => other,
    })?;
    let profile = match cli.profile {
        ProfileArg::Practical => Profile::Practical,
        ProfileArg::Paper => Profile::Paper,
    };
    let ctx = base.with_profile(profile);
    let mut caps = *ctx.caps();
    if let Some(r) = cli.conjugator_radius {
        caps.conjugator_radius = r;
    }
    if let Some(r) = cli.centraliser_radius {
        caps.centraliser_radius = r;
    }
    if let Some(p) = cli.power_cap {
        caps.power_cap = p;
    }
    if let Some(p) = cli.straight_check_power {
        caps.straight_check_power = p;
    }
    let ctx = ctx.with_caps(caps);
    let config = RunConfig {
        group_file: group.clone(),
        profile,
        caps,
        output: cli.format,
    };
    Ok((ctx, config))
}

fn outcome_report(
    ctx: &GroupContext,
    command: &str,
    report: crate::list_solver::ListReport,
) -> Report {
    let (code, witness) = match &report.outcome {
        ListOutcome::Conjugate(g) => (EXIT_DECIDED, Some(ctx.format(g))),
        ListOutcome::NotConjugate => (EXIT_DECIDED, None),
        ListOutcome::UnverifiedAtCap(_) => (EXIT_UNVERIFIED, None),
    };
    let detail = match &report.outcome {
        ListOutcome::UnverifiedAtCap(d) => Some(d.clone()),
        _ => None,
    };
    let mut text = format!("outcome: {}\n", report.outcome.tag());
    if let ListOutcome::Conjugate(g) = &report.outcome {
        text += &format!("witness: {}\nwitness verified: yes\n", show(ctx, g));
    }
    if let Some(d) = &detail {
        text += &format!("cap: {d}\n");
    }
    text += &format!(
        "route: {}\n",
        serde_json::to_string(&report.route).unwrap_or_default()
    );
    Report {
        code,
        json: json!({
            "command": command,
            "outcome": report.outcome.tag(),
            "witness": witness,
            "witness_verified": witness.is_some(),
            "detail": detail,
            "route": report.route,
            "checks": report.checks,
            "caps": report.caps,
        }),
        text,
    }
}

fn execute(cli: &Cli) -> Result<(RunConfig, Report)> {
    let group = match &cli.command {
        Command::Reduce { g, .. }
        | Command::Order { g, .. }
        | Command::Conj { g, .. }
        | Command::ConjLists { g, .. }
        | Command::Centraliser { g, .. }
        | Command::OracleConj { g, .. }
        | Command::Constants { g }
        | Command::Bench { g, .. } => &g.group,
    };
    let (ctx, config) = load(cli, group)?;
    let report = match &cli.command {
        Command::Reduce { word, .. } => {
            let r = ctx.reduce(&word_arg(&ctx, word)?);
            Report {
                code: EXIT_DECIDED,
                json: json!({ "command": "reduce", "normal_form": ctx.format(&r), "length": r.len() }),
                text: format!("{}\n", show(&ctx, &r)),
            }
        }
        Command::Order { word, .. } => {
            let w = word_arg(&ctx, word)?;
            match test_inf_order(&ctx, &w) {
                Ok(OrderClass::Finite(n)) => Report {
                    code: EXIT_DECIDED,
                    json: json!({ "command": "order", "outcome": "finite", "order": n }),
                    text: format!("finite order {n}\n"),
                },
                Ok(OrderClass::Infinite(n)) => Report {
                    code: EXIT_DECIDED,
                    json: json!({ "command": "order", "outcome": "infinite", "certified_at_power": n.to_string() }),
                    text: format!("infinite order (certified at power {n})\n"),
                },
                Err(Error::CapReached(d)) => Report {
                    code: EXIT_UNVERIFIED,
                    json: json!({ "command": "order", "outcome": "unverified_at_cap", "detail": d, "caps": ctx.caps() }),
                    text: format!("unverified at cap: {d}\n"),
                },
                Err(e) => return Err(e),
            }
        }
        Command::Conj { u, v, .. } => {
            let a = [word_arg(&ctx, u)?];
            let b = [word_arg(&ctx, v)?];
            outcome_report(&ctx, "conj", solve_lists_report(&ctx, &a, &b)?)
        }
        Command::ConjLists { a, b, .. } => {
            let a = read_list(&ctx, a)?;
            let b = read_list(&ctx, b)?;
            outcome_report(&ctx, "conj-lists", solve_lists_report(&ctx, &a, &b)?)
        }
        Command::Centraliser { a, .. } => {
            let a = read_list(&ctx, a)?;
            let r = centraliser_lists_report(&ctx, &a)?;
            let gens: Vec<String> = r.result.generators.iter().map(|w| ctx.format(w)).collect();
            let mut text = String::from("generators:\n");
            for g in &r.result.generators {
                text += &format!("  {}\n", show(&ctx, g));
            }
            text += &format!("complete: {}\n", r.result.complete);
            text += &format!(
                "route: {}\n",
                serde_json::to_string(&r.route).unwrap_or_default()
            );
            Report {
                code: if r.result.complete {
                    EXIT_DECIDED
                } else {
                    EXIT_UNVERIFIED
                },
                json: json!({
                    "command": "centraliser",
                    "generators": gens,
                    "complete": r.result.complete,
                    "route": r.route,
                    "checks": r.checks,
                    "caps": r.caps,
                }),
                text,
            }
        }
        Command::OracleConj { a, b, radius, .. } => {
            let a = read_list(&ctx, a)?;
            let b = read_list(&ctx, b)?;
            let found = brute_conjugator(&ctx, &a, &b, *radius)?;
            let text = match &found {
                Some(g) => format!("outcome: conjugate\nwitness: {}\n", show(&ctx, g)),
                None => format!("outcome: none within radius {radius}\n"),
            };
            Report {
                code: EXIT_DECIDED,
                json: json!({
                    "command": "oracle-conj",
                    "outcome": if found.is_some() { "conjugate" } else { "none_within_radius" },
                    "witness": found.map(|g| ctx.format(&g)),
                    "radius": radius,
                }),
                text,
            }
        }
        Command::Constants { .. } => {
            let c = ctx.constants();
            let text = format!(
                "delta={}\nL={}\nV={}\nM={}\nk={}\nR={}\ntorsion_order_bound={}\nV4={}\n",
                c.delta,
                c.l,
                c.v,
                c.m,
                c.k,
                c.exp_search_bound,
                c.torsion_order_bound,
                c.v4()
            );
            Report {
                code: EXIT_DECIDED,
                json: json!({
                    "command": "constants",
                    "delta": c.delta,
                    "L": c.l,
                    "V": c.v,
                    "M": c.m.to_string(),
                    "k": c.k,
                    "R": c.exp_search_bound.to_string(),
                    "torsion_order_bound": c.torsion_order_bound,
                    "caps": ctx.caps(),
                }),
                text,
            }
        }
        Command::Bench {
            m,
            mu_list,
            reps,
            seed,
            ..
        } => {
            let points = bench::run_bench(&ctx, *m, mu_list, *reps, *seed)?;
            let text: String = points
                .iter()
                .map(|p| {
                    format!(
                        "mu={} seconds={:.6} median_seconds={:.6}\n",
                        p.mu, p.seconds, p.median_seconds
                    )
                })
                .collect();
            let lines: Vec<Value> = points.iter().map(|p| json!(p)).collect();
            Report {
                code: EXIT_DECIDED,
                json: json!({ "command": "bench", "m": m, "points": lines }),
                text,
            }
        }
    };
    Ok((config, report))
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_DECIDED
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_ERROR
                }
            };
        }
    };
    match execute(&cli) {
        Ok((config, report)) => {
            let _ = match config.output {
                OutputFormat::Text => write!(out, "{}", report.text),
                OutputFormat::Json => {
                    let mut v = report.json;
                    if let Value::Object(map) = &mut v {
                        map.insert("profile".into(), json!(config.profile));
                        map.insert("group_file".into(), json!(config.group_file));
                    }
                    writeln!(out, "{v}")
                }
            };
            report.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

/// Parses `argv`, runs it, and returns the exit code and standard output.
pub fn dispatch<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(args, &mut out, &mut err);
    let mut text = String::from_utf8_lossy(&out).into_owned();
    text.push_str(&String::from_utf8_lossy(&err));
    (code, text)
}
