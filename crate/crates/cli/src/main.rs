//! `eulersum`: expand, reduce, verify and evaluate (alternating) Euler sums.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse or usage error,
//! 3 divergent input, 4 engine precondition, 5 identity tables, 6 numerical
//! capacity.

mod error;
mod tables;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use eulersum_core::algebra::{parse_lincomb, JsonTerm, LinComb};
use eulersum_core::expansion::{expand_theorem1, expand_theorem2, ExpansionError};
use eulersum_core::index::{parse_index, EulerSumIndex, IndexStyle};
use eulersum_core::numerics::{eval_euler_sum, Evaluator, NumericResult};
use eulersum_core::reduction::{
    default_ruleset, reduce, unresolved_atoms, IdentityTable, TraceStep,
};
use eulersum_core::verify::{oracle_atom_tol, oracle_sum_tol, verify_form, VerifyReport};
use rayon::prelude::*;
use serde_json::{json, Value};

use error::CliError;

const MIN_TOL: f64 = 1e-10;
const MAX_TOL: f64 = 1e-3;

#[derive(Parser, Debug)]
#[command(
    name = "eulersum",
    version,
    about = "Expansion, reduction and numerical verification of Euler sums"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Expansion engine.
    #[arg(long, global = true, value_enum, default_value_t = EngineArg::T1)]
    engine: EngineArg,
    /// Identity table (JSON lines); repeatable. `builtin:starter` names the bundled table.
    #[arg(long = "table", global = true, value_name = "PATH")]
    tables: Vec<String>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Plain)]
    output: Output,
    /// Verification tolerance, within [1e-10, 1e-3].
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,
    /// Print the rewrite trace of a reduction.
    #[arg(long, global = true)]
    trace: bool,
    /// Check every table entry numerically before use.
    #[arg(long = "verify-table", global = true)]
    verify_table: bool,
    /// Fail with exit code 5 when no table loads.
    #[arg(long = "require-tables", global = true)]
    require_tables: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand an Euler sum into (alternating) MZVs.
    Expand { index: String },
    /// Expand, then reduce with the identity rules and tables.
    Reduce { index: String },
    /// Compare the direct numerical value with the expansion (and reduction).
    Verify {
        index: Option<String>,
        /// Closed form to check as well.
        #[arg(long, allow_hyphen_values = true)]
        expect: Option<String>,
        /// Batch file: one `INDEX` or `INDEX = EXPR` per line.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Worker threads for `--file` (0 picks the core count).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Evaluate an index, an expression, or a JSON result (`-` reads stdin).
    Eval {
        #[arg(allow_hyphen_values = true)]
        input: String,
    },
    /// Load tables and report rejected entries.
    TableCheck { paths: Vec<String> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    T1,
    T2,
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Plain,
    Latex,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit()
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    if !(MIN_TOL..=MAX_TOL).contains(&cli.tol) {
        return Err(CliError::Parse(format!(
            "--tol {:e} outside [{MIN_TOL:e}, {MAX_TOL:e}]",
            cli.tol
        )));
    }
    match &cli.command {
        Command::Expand { index } => cmd_expand(cli, index),
        Command::Reduce { index } => cmd_reduce(cli, index),
        Command::Verify {
            index,
            expect,
            file,
            jobs,
        } => match (index, file) {
            (_, Some(path)) => cmd_verify_batch(cli, path, *jobs),
            (Some(index), None) => cmd_verify(cli, index, expect.as_deref()),
            (None, None) => Err(CliError::Parse("verify needs an index or --file".into())),
        },
        Command::Eval { input } => cmd_eval(cli, input),
        Command::TableCheck { paths } => cmd_table_check(cli, paths),
    }
}

/// An expansion and the engine label reported with it.
struct Expanded {
    index: EulerSumIndex,
    value: LinComb,
    engine: &'static str,
}

fn expand(cli: &Cli, text: &str) -> Result<Expanded, CliError> {
    let index = parse_index(text)?;
    let (value, engine) = match cli.engine {
        EngineArg::T1 => (expand_theorem1(&index)?, "t1"),
        EngineArg::T2 => (expand_theorem2(&index)?, "t2"),
        EngineArg::Auto => {
            let first = expand_theorem1(&index)?;
            match expand_theorem2(&index) {
                Ok(second) => {
                    cross_check(&index, &first, &second, cli.tol)?;
                    (first, "t1+t2")
                }
                Err(ExpansionError::UnsupportedHypothesis(_)) => (first, "t1"),
                Err(e) => return Err(e.into()),
            }
        }
    };
    Ok(Expanded {
        index,
        value,
        engine,
    })
}

fn cross_check(index: &EulerSumIndex, a: &LinComb, b: &LinComb, tol: f64) -> Result<(), CliError> {
    let ev = Evaluator::new(oracle_atom_tol(tol))?;
    let (x, y) = (ev.lincomb(a)?, ev.lincomb(b)?);
    if !x.agrees_with(&y, tol) {
        return Err(CliError::Mismatch(format!(
            "engines disagree on {index}: {:e} vs {:e}",
            x.to_f64(),
            y.to_f64()
        )));
    }
    Ok(())
}

fn render_index(cli: &Cli, index: &EulerSumIndex) -> String {
    match cli.output {
        Output::Latex => index.render(IndexStyle::Latex),
        _ => index.to_string(),
    }
}

fn render_lincomb(cli: &Cli, x: &LinComb) -> String {
    match cli.output {
        Output::Latex => x.to_latex(),
        _ => x.to_string(),
    }
}

fn result_json(e: &Expanded, value: &LinComb, trace: Option<&[TraceStep]>) -> Value {
    let mut doc = json!({
        "index": e.index.to_string(),
        "weight": e.index.weight(),
        "degree": e.index.degree(),
        "terms": value.to_json_terms(),
        "engine": e.engine,
        "conditionally_convergent": e.index.is_conditionally_convergent(),
    });
    if let Some(trace) = trace {
        doc["trace"] = json!(trace);
    }
    doc
}

fn print_json(doc: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(doc).expect("serializable")
    );
}

fn cmd_expand(cli: &Cli, text: &str) -> Result<ExitCode, CliError> {
    let e = expand(cli, text)?;
    if cli.output == Output::Json {
        print_json(&result_json(&e, &e.value, None));
    } else {
        println!(
            "{} = {}",
            render_index(cli, &e.index),
            render_lincomb(cli, &e.value)
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn load_tables(cli: &Cli) -> Result<Vec<IdentityTable>, CliError> {
    let verify_tol = cli.verify_table.then(|| oracle_atom_tol(cli.tol));
    tables::load_all(&cli.tables, verify_tol, cli.require_tables)
}

fn cmd_reduce(cli: &Cli, text: &str) -> Result<ExitCode, CliError> {
    let e = expand(cli, text)?;
    let tables = load_tables(cli)?;
    let r = reduce(&e.value, &tables, &default_ruleset());
    if !r.converged {
        eprintln!("warning: step limit reached after {} rewrites", r.steps);
    }
    let unresolved: Vec<String> = unresolved_atoms(&r.value)
        .iter()
        .map(|a| a.to_string())
        .collect();
    match cli.output {
        Output::Json => {
            let mut doc = result_json(&e, &r.value, cli.trace.then_some(r.trace.as_slice()));
            doc["unresolved"] = json!(unresolved);
            doc["tables"] = json!(tables.iter().map(|t| t.source()).collect::<Vec<_>>());
            print_json(&doc);
        }
        _ => {
            println!(
                "{} = {}",
                render_index(cli, &e.index),
                render_lincomb(cli, &r.value)
            );
            if !unresolved.is_empty() {
                println!("unresolved: {}", unresolved.join(", "));
            }
            if cli.trace {
                for step in &r.trace {
                    println!("  {} {}", step.rule, step.target);
                }
                if r.steps > r.trace.len() {
                    println!("  ... {} further steps", r.steps - r.trace.len());
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// All checks for one index: the expansion, the reduction when tables are
/// present, and an optional expected closed form.
fn verify_one(
    cli: &Cli,
    text: &str,
    expect: Option<&str>,
    tables: &[IdentityTable],
) -> Result<Vec<(String, VerifyReport)>, CliError> {
    let e = expand(cli, text)?;
    let ev = Evaluator::new(oracle_atom_tol(cli.tol))?;
    let mut checks = vec![(
        format!("expansion[{}]", e.engine),
        verify_form(&e.index, &e.value, cli.tol, Some(&ev))?,
    )];
    if !tables.is_empty() {
        let r = reduce(&e.value, tables, &default_ruleset());
        checks.push((
            "reduction".into(),
            verify_form(&e.index, &r.value, cli.tol, Some(&ev))?,
        ));
    }
    if let Some(expr) = expect {
        let form = parse_lincomb(expr)?;
        checks.push((
            "expected".into(),
            verify_form(&e.index, &form, cli.tol, Some(&ev))?,
        ));
    }
    Ok(checks)
}

fn report_json(label: &str, r: &VerifyReport) -> Value {
    let mut v = serde_json::to_value(r).expect("serializable");
    v["check"] = json!(label);
    v
}

fn print_checks(cli: &Cli, checks: &[(String, VerifyReport)]) {
    match cli.output {
        Output::Json => {
            let docs: Vec<Value> = checks.iter().map(|(l, r)| report_json(l, r)).collect();
            print_json(&json!(docs));
        }
        _ => {
            for (label, r) in checks {
                println!(
                    "{} {} {}: direct {:.17e} (±{:.1e}) symbolic {:.17e} (±{:.1e}) discrepancy {:.3e} allowance {:.3e}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.index,
                    label,
                    r.direct,
                    r.direct_bound,
                    r.symbolic,
                    r.symbolic_bound,
                    r.discrepancy,
                    r.allowance()
                );
            }
        }
    }
}

fn cmd_verify(cli: &Cli, text: &str, expect: Option<&str>) -> Result<ExitCode, CliError> {
    let tables = load_tables(cli)?;
    let checks = verify_one(cli, text, expect, &tables)?;
    print_checks(cli, &checks);
    Ok(if checks.iter().all(|(_, r)| r.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_verify_batch(cli: &Cli, path: &PathBuf, jobs: usize) -> Result<ExitCode, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    let entries: Vec<(&str, Option<&str>)> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| match l.split_once('=') {
            Some((idx, expr)) => (idx.trim(), Some(expr.trim())),
            None => (l, None),
        })
        .collect();
    let tables = load_tables(cli)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Parse(format!("cannot start worker pool: {e}")))?;
    let results: Vec<Result<Vec<(String, VerifyReport)>, CliError>> = pool.install(|| {
        entries
            .par_iter()
            .map(|(idx, expect)| verify_one(cli, idx, *expect, &tables))
            .collect()
    });
    let mut first_error: Option<CliError> = None;
    let mut all_passed = true;
    for ((idx, _), result) in entries.iter().zip(results) {
        match result {
            Ok(checks) => {
                all_passed &= checks.iter().all(|(_, r)| r.passed);
                print_checks(cli, &checks);
            }
            Err(e) => {
                eprintln!("error: {idx}: {e}");
                first_error.get_or_insert(e);
            }
        }
    }
    if let Some(e) = first_error {
        return Ok(e.exit());
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn read_input(input: &str) -> Result<String, CliError> {
    if input == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Parse(format!("cannot read stdin: {e}")))?;
        return Ok(s);
    }
    Ok(input.to_string())
}

fn eval_text(cli: &Cli, text: &str) -> Result<(String, NumericResult), CliError> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let doc: Value = serde_json::from_str(trimmed)
            .map_err(|e| CliError::Parse(format!("invalid JSON input: {e}")))?;
        let terms: Vec<JsonTerm> = serde_json::from_value(doc["terms"].clone())
            .map_err(|e| CliError::Parse(format!("JSON input has no valid \"terms\": {e}")))?;
        let x = LinComb::from_json_terms(&terms)?;
        let label = doc["index"].as_str().unwrap_or("expression").to_string();
        let ev = Evaluator::new(oracle_atom_tol(cli.tol))?;
        return Ok((label, ev.lincomb(&x)?));
    }
    if trimmed.starts_with('S') {
        let idx = parse_index(trimmed)?;
        return Ok((
            idx.to_string(),
            eval_euler_sum(&idx, oracle_sum_tol(cli.tol))?,
        ));
    }
    let x = parse_lincomb(trimmed)?;
    let ev = Evaluator::new(oracle_atom_tol(cli.tol))?;
    Ok((x.to_string(), ev.lincomb(&x)?))
}

fn cmd_eval(cli: &Cli, input: &str) -> Result<ExitCode, CliError> {
    let text = read_input(input)?;
    let (label, r) = eval_text(cli, &text)?;
    if cli.output == Output::Json {
        print_json(&json!({
            "input": label,
            "value": r.to_f64(),
            "value_lo": r.value.lo(),
            "bound": r.tail_bound,
            "terms_used": r.terms_used,
        }));
    } else {
        println!("{label} = {:.17e} (±{:.1e})", r.to_f64(), r.tail_bound);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_table_check(cli: &Cli, paths: &[String]) -> Result<ExitCode, CliError> {
    let sources: Vec<String> = paths.iter().chain(&cli.tables).cloned().collect();
    if sources.is_empty() {
        return Err(CliError::Parse(
            "table-check needs at least one table".into(),
        ));
    }
    let verify_tol = cli.verify_table.then(|| oracle_atom_tol(cli.tol));
    let mut clean = true;
    let mut docs = Vec::new();
    for source in &sources {
        match tables::load_one(source, verify_tol) {
            Ok((table, report)) => {
                clean &= report.rejected.is_empty();
                if cli.output == Output::Json {
                    docs.push(json!({
                        "table": table.source(),
                        "accepted": report.accepted,
                        "max_weight": table.max_weight(),
                        "rejected": report.rejected.iter().map(|r| json!({
                            "line": r.line, "lhs": r.lhs, "reason": r.reason,
                        })).collect::<Vec<_>>(),
                    }));
                } else {
                    println!(
                        "{}: {} accepted, {} rejected, max weight {}",
                        table.source(),
                        report.accepted,
                        report.rejected.len(),
                        table.max_weight()
                    );
                    for r in &report.rejected {
                        println!("  line {}: {}: {}", r.line, r.lhs, r.reason);
                    }
                }
            }
            Err(e) => {
                clean = false;
                eprintln!("error: {e}");
                docs.push(json!({ "table": source, "error": e.to_string() }));
            }
        }
    }
    if cli.output == Output::Json {
        print_json(&json!(docs));
    }
    Ok(if clean {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(CliError::Tables(String::new()).exit_code())
    })
}
