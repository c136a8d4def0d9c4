//! Command-line front end: argument definitions, per-field dispatch, the
//! batch runner and the self-check harness. `main.rs` only parses arguments
//! and writes what [`run`] returns.

pub mod parse;
mod selfcheck;

pub use parse::{parse_factored, parse_poly, ParseField, MAX_EXPONENT};
pub use selfcheck::{selfcheck, Counterexample, SelfcheckSummary};

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::factor::Factorization;
use crate::field::{Field, FieldDescriptor, FieldKind, Fp, RatFunc, Rational, Rationals};
use crate::poly::Poly;
use crate::resultant::discriminant;
use crate::tolerant::{
    dupl, gdisc, report, tol, tol_from_factorization, tol_irreducible, ErrorRecord, FormulaMode,
    ReportOptions,
};

#[derive(Debug, Parser)]
#[command(name = "tolerant", version, about = "Exact tolerants and discriminants of univariate polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The tolerant.
    Tol(EvalArgs),
    /// The duplicant, lc^2 times the tolerant.
    Dupl(EvalArgs),
    /// The generalized discriminant.
    Gdisc(EvalArgs),
    /// The classical discriminant.
    Disc(EvalArgs),
    /// Every invariant, cross-checked across computation paths.
    Report(EvalArgs),
    /// Randomized cross-validation of all computation paths.
    Selfcheck(SelfcheckArgs),
    /// One expression per line of a file; `-` reads standard input.
    Batch(BatchArgs),
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Polynomial in `x`, e.g. "(x-2)^2*(x-3)".
    pub expr: String,
    #[command(flatten)]
    pub input: InputOpts,
    #[command(flatten)]
    pub output: OutputOpts,
}

#[derive(Debug, Clone, Args)]
pub struct InputOpts {
    /// Coefficient field: q, fp:<p> or fpt:<p>.
    #[arg(long, default_value = "q")]
    pub field: FieldDescriptor,
    /// Read the input as `unit * (g1)^m1 * (g2)^m2 * ...` with irreducible g.
    #[arg(long)]
    pub factored: bool,
    /// Assert that the input polynomial is irreducible.
    #[arg(long)]
    pub assert_irreducible: bool,
    /// Factorization formula used with --factored.
    #[arg(long, default_value = "corrected")]
    pub mode: FormulaMode,
}

impl Default for InputOpts {
    fn default() -> Self {
        InputOpts {
            field: FieldDescriptor::rationals(),
            factored: false,
            assert_irreducible: false,
            mode: FormulaMode::Corrected,
        }
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct OutputOpts {
    /// Indented output.
    #[arg(long)]
    pub pretty: bool,
    /// Write to a file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SelfcheckArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long, default_value = "fp:101")]
    pub field: FieldDescriptor,
    #[arg(long, default_value_t = 8)]
    pub max_degree: usize,
    #[command(flatten)]
    pub output: OutputOpts,
}

#[derive(Debug, Args)]
pub struct BatchArgs {
    pub path: PathBuf,
    /// What to compute for each line.
    #[arg(long, value_enum, default_value_t = Op::Report)]
    pub op: Op,
    #[command(flatten)]
    pub input: InputOpts,
    #[command(flatten)]
    pub output: OutputOpts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Tol,
    Dupl,
    Gdisc,
    Disc,
    Report,
}

impl Op {
    pub fn name(self) -> &'static str {
        match self {
            Op::Tol => "tol",
            Op::Dupl => "dupl",
            Op::Gdisc => "gdisc",
            Op::Disc => "disc",
            Op::Report => "report",
        }
    }
}

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Success,
    InputError,
    CheckFailure,
}

impl Exit {
    pub fn code(self) -> u8 {
        match self {
            Exit::Success => 0,
            Exit::InputError => 1,
            Exit::CheckFailure => 2,
        }
    }
}

/// Parsed input in either form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input<F: Field> {
    Poly(Poly<F>),
    Factored(Factorization<F>),
}

impl<F: Field> Input<F> {
    pub fn expand(&self) -> Poly<F> {
        match self {
            Input::Poly(f) => f.clone(),
            Input::Factored(fac) => fac.expand(),
        }
    }
}

impl<F: Field> std::fmt::Display for Input<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Input::Poly(p) => write!(f, "{p}"),
            Input::Factored(fac) => write!(f, "{fac}"),
        }
    }
}

pub fn parse_input<F: ParseField>(text: &str, ctx: &F::Ctx, factored: bool) -> Result<Input<F>> {
    if factored {
        parse_factored(text, ctx).map(Input::Factored)
    } else {
        parse_poly(text, ctx).map(Input::Poly)
    }
}

/// Parses `text`, prints it canonically, and checks that the printed form
/// parses back to the same value. Returns the printed form.
pub fn round_trip(text: &str, field: FieldDescriptor, factored: bool) -> Result<(String, bool)> {
    fn go<F: ParseField>(text: &str, ctx: &F::Ctx, factored: bool) -> Result<(String, bool)> {
        let first = parse_input::<F>(text, ctx, factored)?;
        let printed = first.to_string();
        let again = parse_input::<F>(&printed, ctx, factored)?;
        Ok((printed, again == first))
    }
    match (field.kind, field.modulus()) {
        (FieldKind::Rationals, _) => go::<Rational>(text, &Rationals, factored),
        (FieldKind::PrimeField, Some(m)) => go::<Fp>(text, &m, factored),
        (FieldKind::RationalFunctionField, Some(m)) => go::<RatFunc>(text, &m, factored),
        _ => Err(Error::UnsupportedField(field.to_string())),
    }
}

/// The outcome of one expression: a structured record and whether it
/// succeeded.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub record: Value,
    pub ok: bool,
}

fn failure(field: FieldDescriptor, input: &str, err: &Error) -> Evaluation {
    Evaluation {
        record: json!({
            "field": field,
            "input": input,
            "errors": [ErrorRecord::from(err)],
        }),
        ok: false,
    }
}

/// The tolerant by the path the options select, and whether it rests on an
/// unverified irreducibility claim.
fn selected_tol<F: Field>(input: &Input<F>, opts: &InputOpts) -> Result<(F, bool)> {
    match input {
        Input::Factored(fac) => {
            let mut trusted = false;
            for (g, _) in &fac.factors {
                match F::irreducibility_known(g) {
                    Some(true) => {}
                    Some(false) => {
                        return Err(Error::InvalidFactorization(format!("factor {g} is reducible")))
                    }
                    None => trusted = true,
                }
            }
            Ok((tol_from_factorization(fac, opts.mode)?, trusted))
        }
        Input::Poly(f) if opts.assert_irreducible => {
            let a = tol_irreducible(f)?;
            Ok((a.value, a.trusted))
        }
        Input::Poly(f) => Ok((tol(f)?, false)),
    }
}

fn evaluate_in<F: ParseField>(op: Op, text: &str, ctx: &F::Ctx, opts: &InputOpts) -> Evaluation {
    let field = F::describe(ctx);
    let input = match parse_input::<F>(text, ctx, opts.factored) {
        Ok(i) => i,
        Err(e) => {
            return match op {
                Op::Report => Evaluation {
                    record: report_json(&crate::tolerant::InvariantReport::failed(field, text, &e)),
                    ok: false,
                },
                _ => failure(field, text, &e),
            }
        }
    };
    let f = input.expand();
    if op == Op::Report {
        let options = ReportOptions {
            factorization: match &input {
                Input::Factored(fac) => Some(fac.clone()),
                Input::Poly(_) => None,
            },
            assert_irreducible: opts.assert_irreducible,
            mode: opts.mode,
        };
        let r = report(text, &f, &options);
        return Evaluation {
            ok: r.tol.is_some(),
            record: report_json(&r),
        };
    }
    let mut extra = Map::new();
    let value = match op {
        Op::Tol | Op::Dupl => selected_tol(&input, opts).and_then(|(t, trusted)| {
            extra.insert("trusted_input".into(), trusted.into());
            if opts.factored {
                extra.insert("mode".into(), opts.mode.name().into());
            }
            if op == Op::Tol {
                Ok(t)
            } else {
                let lc = f.leading().ok_or(Error::ZeroPolynomial)?;
                debug_assert!(opts.factored || opts.assert_irreducible || dupl(&f) == Ok(lc.square().mul(&t)));
                Ok(lc.square().mul(&t))
            }
        }),
        Op::Gdisc => gdisc(&f),
        Op::Disc => discriminant(&f),
        Op::Report => unreachable!("handled above"),
    };
    match value {
        Ok(v) => {
            let mut record = Map::new();
            record.insert("field".into(), json!(field));
            record.insert("input".into(), text.into());
            record.insert(op.name().into(), v.to_string().into());
            record.extend(extra);
            Evaluation {
                record: Value::Object(record),
                ok: true,
            }
        }
        Err(e) => failure(field, text, &e),
    }
}

fn report_json(r: &crate::tolerant::InvariantReport) -> Value {
    serde_json::to_value(r).expect("reports serialize")
}

/// Runs `op` on one expression over `field`.
pub fn evaluate(op: Op, text: &str, field: FieldDescriptor, opts: &InputOpts) -> Evaluation {
    match (field.kind, field.modulus()) {
        (FieldKind::Rationals, _) => evaluate_in::<Rational>(op, text, &Rationals, opts),
        (FieldKind::PrimeField, Some(m)) => evaluate_in::<Fp>(op, text, &m, opts),
        (FieldKind::RationalFunctionField, Some(m)) => evaluate_in::<RatFunc>(op, text, &m, opts),
        _ => failure(field, text, &Error::UnsupportedField(field.to_string())),
    }
}

/// One non-blank, non-comment line of a batch file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatchLine {
    /// 1-based line number in the source.
    pub line: usize,
    /// The `@field` override if present, else the default field.
    pub field: Result<FieldDescriptor>,
    pub text: String,
}

/// Splits a batch file. `#` starts a comment, blank lines are skipped, and
/// a leading `@fp:7` token overrides the field for its line.
pub fn parse_batch(contents: &str, default_field: FieldDescriptor) -> Vec<BatchLine> {
    contents
        .lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                return None;
            }
            let (field, text) = match body.strip_prefix('@') {
                Some(rest) => {
                    let (tag, text) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                    (tag.parse::<FieldDescriptor>(), text.trim())
                }
                None => (Ok(default_field), body),
            };
            Some(BatchLine {
                line: i + 1,
                field,
                text: text.to_string(),
            })
        })
        .collect()
}

/// Evaluates every line, in parallel, returning records in input order.
pub fn run_batch(lines: &[BatchLine], op: Op, opts: &InputOpts) -> Vec<Evaluation> {
    lines
        .par_iter()
        .map(|l| {
            let mut eval = match &l.field {
                Ok(field) => evaluate(op, &l.text, *field, opts),
                Err(e) => failure(opts.field, &l.text, e),
            };
            if let Value::Object(map) = &mut eval.record {
                map.insert("line".into(), l.line.into());
            }
            eval
        })
        .collect()
}

/// What a command produced: the text for standard output (or `--output`),
/// human-readable diagnostics for standard error, and the exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: Vec<String>,
    pub exit: Exit,
    pub output_path: Option<PathBuf>,
}

fn render(v: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(v).expect("json values serialize")
    } else {
        v.to_string()
    }
}

fn diagnostics(record: &Value) -> Vec<String> {
    record["errors"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|e| format!("{}: {}", e["kind"].as_str().unwrap_or(""), e["message"].as_str().unwrap_or("")))
        .collect()
}

/// Executes a parsed command line.
pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Tol(a) => run_single(Op::Tol, a),
        Command::Dupl(a) => run_single(Op::Dupl, a),
        Command::Gdisc(a) => run_single(Op::Gdisc, a),
        Command::Disc(a) => run_single(Op::Disc, a),
        Command::Report(a) => run_single(Op::Report, a),
        Command::Selfcheck(a) => {
            let summary = selfcheck(a.seed, a.count, a.field, a.max_degree);
            let exit = if summary.failed == 0 {
                Exit::Success
            } else {
                Exit::CheckFailure
            };
            let stderr = summary
                .first_counterexample
                .iter()
                .map(|c| format!("counterexample: {} ({}): {}", c.input, c.check, c.detail))
                .collect();
            Outcome {
                stdout: render(&serde_json::to_value(&summary).expect("summaries serialize"), a.output.pretty),
                stderr,
                exit,
                output_path: a.output.output,
            }
        }
        Command::Batch(a) => {
            let contents = if a.path.as_os_str() == "-" {
                std::io::read_to_string(std::io::stdin())
            } else {
                std::fs::read_to_string(&a.path)
            };
            let contents = match contents {
                Ok(c) => c,
                Err(e) => {
                    return Outcome {
                        stdout: String::new(),
                        stderr: vec![format!("cannot read {}: {e}", a.path.display())],
                        exit: Exit::InputError,
                        output_path: None,
                    }
                }
            };
            let lines = parse_batch(&contents, a.input.field);
            let evals = run_batch(&lines, a.op, &a.input);
            let mut stdout = String::new();
            let mut stderr = Vec::new();
            for e in &evals {
                stdout.push_str(&render(&e.record, a.output.pretty));
                stdout.push('\n');
                if !e.ok {
                    let line = e.record["line"].as_u64().unwrap_or(0);
                    stderr.extend(diagnostics(&e.record).into_iter().map(|d| format!("line {line}: {d}")));
                }
            }
            Outcome {
                stdout,
                stderr,
                exit: if evals.iter().all(|e| e.ok) {
                    Exit::Success
                } else {
                    Exit::InputError
                },
                output_path: a.output.output,
            }
        }
    }
}

fn run_single(op: Op, a: EvalArgs) -> Outcome {
    let eval = evaluate(op, &a.expr, a.input.field, &a.input);
    let mut stdout = render(&eval.record, a.output.pretty);
    stdout.push('\n');
    Outcome {
        stdout,
        stderr: if eval.ok { Vec::new() } else { diagnostics(&eval.record) },
        exit: if eval.ok { Exit::Success } else { Exit::InputError },
        output_path: a.output.output,
    }
}
