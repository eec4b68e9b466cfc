//! Command line front end. Every subcommand prints one JSON document on
//! stdout; diagnostics go to stderr.
//!
//! Exit codes: 0 success, 1 invalid input or flags, 2 a negative verdict
//! (not a diversity, not of negative type, a required property fails),
//! 3 internal or solver errors.

use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::{BigInt, BigRational};
use serde_json::{json, Value};

use crate::diversity::{Diversity, ValidationMode};
use crate::error::Error;
use crate::format;
use crate::geometry::{diversity_from_points, universal_embedding, verify_isometry};
use crate::hypergraph::{self, HypergraphInstance};
use crate::l1cone::{is_l1_embeddable, min_distortion_l1};
use crate::metricization::l1_embed_induced_metric;
use crate::subset;
use crate::transform::{is_negative_type, lambda_of, NotNegativeType};

pub const THREADS_ENV: &str = "DIVKIT_THREADS";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(payload: &Value, pretty: bool) -> Self {
        Self::with_code(0, payload, pretty)
    }

    fn with_code(code: i32, payload: &Value, pretty: bool) -> Self {
        Self {
            code,
            stdout: format::render(payload, pretty),
            stderr: String::new(),
        }
    }

    fn failure(code: i32, message: impl std::fmt::Display) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }

    fn note(mut self, message: impl std::fmt::Display) -> Self {
        self.stderr.push_str(&format!("{message}\n"));
        self
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "divkit",
    version,
    about = "Negative-type diversities: tests, transforms and embeddings"
)]
struct Cli {
    /// Worker threads (falls back to DIVKIT_THREADS, then all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Indented JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate the axioms and report negative type and L1 embeddability.
    Check(CheckArgs),
    /// Print the λ vector.
    Lambda(FileArg),
    /// Universal embedding into (R^(2^n - 1), δ_neg).
    Embed(EmbedArgs),
    /// Induced metric and cut weights realizing it.
    Induced(FileArg),
    /// Exact minimal L1 distortion.
    Distort(DistortArgs),
    /// Diversity δ_neg of a point configuration.
    Deltaneg(FileArg),
    /// The hypergraph diversity on m-subsets of [2m].
    Hypergraph(HypergraphArgs),
}

#[derive(Args, Debug)]
struct FileArg {
    /// Input JSON file, `-` for stdin.
    file: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Fast,
    Naive,
}

#[derive(Args, Debug)]
struct CheckArgs {
    file: String,
    #[arg(long, value_enum, default_value = "fast")]
    mode: Mode,
    /// Exit 2 unless the input is of negative type.
    #[arg(long)]
    require_negative: bool,
    /// Exit 2 unless the input is L1-embeddable.
    #[arg(long)]
    require_l1: bool,
}

#[derive(Args, Debug)]
struct EmbedArgs {
    file: String,
    /// Re-evaluate δ_neg on every subset of the image.
    #[arg(long)]
    verify: bool,
}

#[derive(Args, Debug)]
struct DistortArgs {
    file: String,
    /// Include the linear program and its primal/dual solution.
    #[arg(long)]
    lp: bool,
}

#[derive(Args, Debug)]
struct HypergraphArgs {
    #[arg(long)]
    m: usize,
    /// Print the δ_H table.
    #[arg(long)]
    emit: bool,
    /// Allow --emit for m = 3 (2^20 entries).
    #[arg(long)]
    full_table: bool,
    /// Brute-force minimum sparsity with its witness cut.
    #[arg(long)]
    sparsity: bool,
    /// Closed-form lower bounds.
    #[arg(long)]
    bounds: bool,
    /// Enumerated c·δ_H and d·δ_H against their closed forms.
    #[arg(long)]
    aggregates: bool,
    /// Check the |∂U|/|U| bound on every cut.
    #[arg(long)]
    expansion: bool,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Lp(_) | Error::Internal(_) => 3,
        Error::NotNegativeType { .. } | Error::NotNegativeTypeMetric(_) => 2,
        _ => 1,
    }
}

impl From<Error> for CommandResult {
    fn from(e: Error) -> Self {
        CommandResult::failure(exit_code(&e), e)
    }
}

/// Runs the CLI on `argv` (program name first) without touching the process
/// streams.
pub fn run<I, S>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandResult {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => CommandResult {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let threads = match cli.threads {
        Some(t) => Some(t),
        None => match std::env::var(THREADS_ENV) {
            Ok(v) => match v.trim().parse::<usize>() {
                Ok(t) => Some(t),
                Err(_) => {
                    return CommandResult::failure(
                        1,
                        format!("{THREADS_ENV} must be a positive integer, got `{v}`"),
                    )
                }
            },
            Err(_) => None,
        },
    };
    match threads {
        Some(0) => CommandResult::failure(1, "--threads must be at least 1"),
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| dispatch(cli.command, cli.pretty)),
            Err(e) => CommandResult::failure(3, e),
        },
        None => dispatch(cli.command, cli.pretty),
    }
}

fn read_input(path: &str) -> Result<String, CommandResult> {
    let res = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        std::fs::read_to_string(path)
    };
    res.map_err(|e| CommandResult::failure(1, format!("cannot read `{path}`: {e}")))
}

fn load_diversity(path: &str) -> Result<Diversity, CommandResult> {
    let text = read_input(path)?;
    format::parse_diversity(&text).map_err(|e| CommandResult::failure(1, format!("{path}: {e}")))
}

fn dispatch(cmd: Command, pretty: bool) -> CommandResult {
    let res = match cmd {
        Command::Check(a) => check(a, pretty),
        Command::Lambda(a) => lambda(a, pretty),
        Command::Embed(a) => embed(a, pretty),
        Command::Induced(a) => induced(a, pretty),
        Command::Distort(a) => distort(a, pretty),
        Command::Deltaneg(a) => deltaneg(a, pretty),
        Command::Hypergraph(a) => hypergraph_cmd(a, pretty),
    };
    res.unwrap_or_else(|e| e)
}

fn not_negative(
    labels: &[String],
    e: &NotNegativeType<BigRational>,
    pretty: bool,
) -> CommandResult {
    let witness =
        e.0.witness
            .as_ref()
            .map(|w| format::witness_to_json(labels, w));
    CommandResult::with_code(
        2,
        &json!({ "negative_type": false, "witness": witness }),
        pretty,
    )
    .note(e)
}

fn check(a: CheckArgs, pretty: bool) -> Result<CommandResult, CommandResult> {
    let d = load_diversity(&a.file)?;
    let mode = match a.mode {
        Mode::Fast => ValidationMode::Fast,
        Mode::Naive => ValidationMode::Naive,
    };
    let report = d.validate(mode)?;
    let cert = is_negative_type(&d);
    let l1 = is_l1_embeddable(&d)?;
    let labels = d.labels();
    let v = format::validation_to_json(labels, &report);
    let payload = json!({
        "labels": labels,
        "diversity": report.ok,
        "strict": report.is_strict(),
        "violations": v["violations"],
        "truncated": report.truncated,
        "negative_type": cert.negative_type,
        "witness": cert.witness.as_ref().map(|w| format::witness_to_json(labels, w)),
        "l1": l1.embeddable,
        "asymmetric_set": l1.asymmetric_set.map(|s| subset::key(labels, s)),
    });
    let mut failed = Vec::new();
    if !report.ok {
        failed.push("input violates the diversity axioms");
    }
    if a.require_negative && !cert.negative_type {
        failed.push("input is not of negative type");
    }
    if a.require_l1 && !l1.embeddable {
        failed.push("input is not L1-embeddable");
    }
    let mut out = CommandResult::with_code(if failed.is_empty() { 0 } else { 2 }, &payload, pretty);
    for f in failed {
        out = out.note(f);
    }
    Ok(out)
}

fn lambda(a: FileArg, pretty: bool) -> Result<CommandResult, CommandResult> {
    let d = load_diversity(&a.file)?;
    Ok(CommandResult::ok(
        &format::lambda_to_json(&lambda_of(&d)),
        pretty,
    ))
}

fn embed(a: EmbedArgs, pretty: bool) -> Result<CommandResult, CommandResult> {
    let d = load_diversity(&a.file)?;
    let map = match universal_embedding(&d) {
        Ok(map) => map,
        Err(e) => return Ok(not_negative(d.labels(), &e, pretty)),
    };
    let mut payload = format::embedding_to_json(&map);
    if a.verify {
        let report = verify_isometry(&d, &map)?;
        payload["isometry"] = json!(report.ok);
        if !report.ok {
            return Err(CommandResult::failure(3, "embedding is not an isometry"));
        }
    }
    Ok(CommandResult::ok(&payload, pretty))
}

fn induced(a: FileArg, pretty: bool) -> Result<CommandResult, CommandResult> {
    let d = load_diversity(&a.file)?;
    if let Err(e) = is_negative_type(&d).into_lambda() {
        return Ok(not_negative(d.labels(), &e, pretty));
    }
    let cuts = l1_embed_induced_metric(&d)?;
    let payload = json!({
        "labels": d.labels(),
        "metric": format::metric_to_json(&d.induced_metric()),
        "cuts": format::cuts_to_json(&cuts),
    });
    Ok(CommandResult::ok(&payload, pretty))
}

fn distort(a: DistortArgs, pretty: bool) -> Result<CommandResult, CommandResult> {
    let d = load_diversity(&a.file)?;
    let r = min_distortion_l1(&d)?;
    Ok(CommandResult::ok(
        &format::distortion_to_json(&r, a.lp),
        pretty,
    ))
}

fn deltaneg(a: FileArg, pretty: bool) -> Result<CommandResult, CommandResult> {
    let text = read_input(&a.file)?;
    let points = format::parse_points(&text)
        .map_err(|e| CommandResult::failure(1, format!("{}: {e}", a.file)))?;
    let d = diversity_from_points(&points)?;
    Ok(CommandResult::ok(&format::diversity_to_json(&d), pretty))
}

fn ratio(x: &BigRational) -> Value {
    Value::String(x.to_string())
}

fn big(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

fn closed_form(c: &hypergraph::ClosedForm) -> Value {
    json!({ "exact": c.exact.as_ref().map(ratio), "value": c.value })
}

fn family_keys(names: &[String], mask: u64) -> Vec<String> {
    (0..64)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| names[i].clone())
        .collect()
}

fn hypergraph_cmd(a: HypergraphArgs, pretty: bool) -> Result<CommandResult, CommandResult> {
    if !(a.emit || a.sparsity || a.bounds || a.aggregates || a.expansion) {
        return Err(CommandResult::failure(
            1,
            "choose at least one of --emit, --sparsity, --bounds, --aggregates, --expansion",
        ));
    }
    if a.m < 2 {
        return Err(CommandResult::failure(1, "--m must be at least 2"));
    }
    let enumerate = a.emit || a.sparsity || a.aggregates || a.expansion;
    let inst = if enumerate {
        Some(HypergraphInstance::new(a.m)?)
    } else {
        None
    };
    let mut out = json!({ "m": a.m });
    if let Some(inst) = &inst {
        out["ground_size"] = json!(inst.size());
        out["upper_size"] = json!(inst.upper().len());
    }
    if a.bounds {
        let b = hypergraph::expansion_bounds(a.m);
        out["bounds"] = json!({
            "boundary_expansion": closed_form(&b.boundary_expansion),
            "sparsity_floor": closed_form(&b.sparsity_floor),
            "distortion_floor": closed_form(&b.distortion_floor),
            "distortion_floor_chain": hypergraph::distortion_floor_chain(a.m),
        });
    }
    if a.aggregates {
        let g = hypergraph::aggregate_ratios(a.m)?;
        out["aggregates"] = json!({
            "c_delta": big(&g.c_delta),
            "c_closed": big(&g.c_closed),
            "d_delta": big(&g.d_delta),
            "d_closed": big(&g.d_closed),
            "ratio": ratio(&g.ratio),
            "ratio_closed": ratio(&g.ratio_closed),
            "match": g.matches_closed_forms(),
        });
    }
    if a.sparsity {
        let inst = inst
            .as_ref()
            .ok_or_else(|| CommandResult::failure(3, "missing instance"))?;
        let names = inst.labels();
        let upper: Vec<String> = inst.upper().iter().map(|&b| upper_name(b)).collect();
        let r = hypergraph::brute_force_min_sparsity(a.m)?;
        out["sparsity"] = json!({
            "min": ratio(&r.ratio),
            "cut": family_keys(&names, r.witness.u),
            "interior": family_keys(&upper, r.witness.interior),
            "exterior": family_keys(&upper, r.witness.exterior),
            "boundary": family_keys(&upper, r.witness.boundary),
            "cuts_covered": r.cuts_covered,
            "floor": hypergraph::expansion_bounds(a.m).sparsity_floor.value,
            "meets_floor": r.meets_floor(a.m),
        });
    }
    if a.expansion {
        let r = hypergraph::check_boundary_expansion(a.m)?;
        let names = inst.as_ref().map(|i| i.labels()).unwrap_or_default();
        out["expansion"] = json!({
            "cuts_checked": r.cuts_checked,
            "violations": r.violations,
            "first_violation": r.first_violation.map(|u| family_keys(&names, u)),
            "min_ratio": ratio(&r.min_ratio),
            "bound": r.bound,
            "holds": r.violations == 0,
        });
    }
    if a.emit {
        if a.m > 2 && !a.full_table {
            return Err(CommandResult::failure(
                1,
                "the m = 3 table has 2^20 entries; pass --full-table to print it",
            ));
        }
        let inst = inst
            .as_ref()
            .ok_or_else(|| CommandResult::failure(3, "missing instance"))?;
        let d = inst.diversity::<i64>()?;
        out["diversity"] = format::diversity_to_json(&d);
    }
    Ok(CommandResult::ok(&out, pretty))
}

fn upper_name(b: u32) -> String {
    (0..32)
        .filter(|i| b >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect()
}
