//! `cyclosieve`: verify cyclic sieving for the built-in families, replay the
//! worked examples against a golden file, and scan even-order graph cases.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 config error, 3 hypothesis
//! not met.

mod commands;
mod config;
mod error;
mod suite;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cyclosieve::families::{FamilySpec, GraphVariant};
use serde_json::{json, Map, Value};

use commands::Outcome;
use config::{read_config, Checks, KRange, Output, RunConfig, ScanConfig, VerifyConfig};
use error::CliError;

#[derive(Parser)]
#[command(name = "cyclosieve", version, about = "Exact checks of the cyclic sieving phenomenon")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family's triple and run both forms of the check.
    Verify(Box<VerifyArgs>),
    /// Replay every worked example and compare with the golden file.
    #[command(name = "paper-suite")]
    Suite(SuiteArgs),
    /// Try every shift u^m X(u) for graphs on an even number of vertices.
    Scan(ScanArgs),
}

#[derive(Args)]
struct OutputArgs {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// JSON run config; family flags may not be combined with it.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// words, parking, matrices, graphs or finite-field.
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    len: Option<usize>,
    #[arg(long)]
    q: Option<u64>,
    /// Matrix entries: N (nonnegative) or ZO (zero-one).
    #[arg(long)]
    mode: Option<String>,
    /// Graph variant: i, ii, iii or iv.
    #[arg(long)]
    variant: Option<String>,
    #[arg(long, value_name = "CYCLES")]
    value_gen: Option<String>,
    #[arg(long, value_name = "CYCLES")]
    pos_gen: Option<String>,
    #[arg(long, value_name = "CYCLES")]
    row_gen: Option<String>,
    #[arg(long, value_name = "CYCLES")]
    col_gen: Option<String>,
    #[arg(long, value_name = "CYCLES")]
    vertex_gen: Option<String>,
    /// Which forms of the check to run.
    #[arg(long, value_enum)]
    checks: Option<Checks>,
    /// Build even-order cases that need odd order; they are expected to fail.
    #[arg(long)]
    allow_even: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SuiteArgs {
    /// Compare against this file instead of the built-in one.
    #[arg(long, value_name = "PATH")]
    golden: Option<PathBuf>,
    /// Print the computed lines in golden-file format and exit.
    #[arg(long)]
    print: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    /// Edge count or inclusive range, e.g. 2..4.
    #[arg(long)]
    k: Option<KRange>,
    #[arg(long)]
    variant: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

fn merge_output(mut base: Output, flags: &OutputArgs) -> Output {
    base.json |= flags.json;
    if flags.out.is_some() {
        base.out.clone_from(&flags.out);
    }
    base
}

fn family_from_flags(a: &VerifyArgs) -> Result<FamilySpec, CliError> {
    let Some(family) = &a.family else {
        return Err(CliError::Config("give --family or --config".into()));
    };
    let mut obj = Map::new();
    obj.insert("family".into(), json!(family.replace('-', "_")));
    let mut put = |key: &str, v: Option<Value>| {
        if let Some(v) = v {
            obj.insert(key.into(), v);
        }
    };
    put("n", a.n.map(Value::from));
    put("m", a.m.map(Value::from));
    put("k", a.k.map(Value::from));
    put("len", a.len.map(Value::from));
    put("q", a.q.map(Value::from));
    put("mode", a.mode.as_ref().map(|s| json!(s.to_uppercase())));
    put("variant", a.variant.as_ref().map(|s| json!(s.to_lowercase())));
    for (key, v) in [
        ("value_gen", &a.value_gen),
        ("pos_gen", &a.pos_gen),
        ("row_gen", &a.row_gen),
        ("col_gen", &a.col_gen),
        ("vertex_gen", &a.vertex_gen),
    ] {
        put(key, v.as_ref().map(|s| json!(s)));
    }
    serde_json::from_value(Value::Object(obj)).map_err(|e| CliError::Config(format!("family {family}: {e}")))
}

fn has_family_flags(a: &VerifyArgs) -> bool {
    a.family.is_some()
        || [a.n, a.m, a.k, a.len].iter().any(Option::is_some)
        || a.q.is_some()
        || [&a.mode, &a.variant, &a.value_gen, &a.pos_gen, &a.row_gen, &a.col_gen, &a.vertex_gen]
            .iter()
            .any(|x| x.is_some())
}

fn verify_config(a: &VerifyArgs) -> Result<VerifyConfig, CliError> {
    let mut cfg = match &a.config {
        Some(path) => {
            if has_family_flags(a) {
                return Err(CliError::Config("family flags cannot be combined with --config".into()));
            }
            match read_config(path)? {
                RunConfig::Verify(c) => c,
                RunConfig::Scan(_) => return Err(CliError::Config("config is for scan, not verify".into())),
            }
        }
        None => VerifyConfig {
            triple: family_from_flags(a)?,
            checks: Checks::default(),
            allow_even: false,
            output: Output::default(),
        },
    };
    if let Some(c) = a.checks {
        cfg.checks = c;
    }
    cfg.allow_even |= a.allow_even;
    cfg.output = merge_output(cfg.output, &a.output);
    Ok(cfg)
}

fn scan_config(a: &ScanArgs) -> Result<ScanConfig, CliError> {
    let variant = a.variant.as_deref().map(str::parse::<GraphVariant>).transpose()?;
    let mut cfg = match &a.config {
        Some(path) => {
            if a.n.is_some() || a.k.is_some() || variant.is_some() {
                return Err(CliError::Config("scan flags cannot be combined with --config".into()));
            }
            match read_config(path)? {
                RunConfig::Scan(c) => c,
                RunConfig::Verify(_) => return Err(CliError::Config("config is for verify, not scan".into())),
            }
        }
        None => ScanConfig {
            n: a.n.ok_or_else(|| CliError::Config("scan needs --n".into()))?,
            k: a.k.ok_or_else(|| CliError::Config("scan needs --k".into()))?,
            variant: variant.unwrap_or(GraphVariant::IV),
            output: Output::default(),
        },
    };
    cfg.output = merge_output(cfg.output, &a.output);
    Ok(cfg)
}

fn emit(output: &Output, text: &str, json: &Value) -> Result<(), CliError> {
    let body = if output.json {
        let mut s = serde_json::to_string_pretty(json).expect("JSON values serialize");
        s.push('\n');
        s
    } else {
        text.to_string()
    };
    match &output.out {
        Some(path) => std::fs::write(path, body)?,
        None => std::io::stdout().write_all(body.as_bytes())?,
    }
    Ok(())
}

fn finish(output: &Output, outcome: Outcome) -> Result<ExitCode, CliError> {
    emit(output, &outcome.text, &outcome.json)?;
    Ok(if outcome.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn read_golden(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Verify(a) => {
            let cfg = verify_config(&a)?;
            let outcome = commands::verify(&cfg)?;
            finish(&cfg.output, outcome)
        }
        Command::Scan(a) => {
            let cfg = scan_config(&a)?;
            let outcome = commands::scan(&cfg)?;
            finish(&cfg.output, outcome)
        }
        Command::Suite(a) => {
            let output = merge_output(Output::default(), &a.output);
            let results = suite::compute();
            if a.print {
                let text = suite::render(&results);
                emit(&output, &text, &json!(results.iter().map(|(n, l)| json!({"name": n, "actual": l})).collect::<Vec<_>>()))?;
                return Ok(ExitCode::SUCCESS);
            }
            let golden = match &a.golden {
                Some(path) => read_golden(path)?,
                None => suite::GOLDEN.to_string(),
            };
            let out = suite::compare(&suite::parse_golden(&golden), &results);
            finish(&output, Outcome { text: out.text, json: out.json, pass: out.pass })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
