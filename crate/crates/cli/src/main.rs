//! `cfl` — command-line front end for the exact fuzzy propositional engine.
//!
//! Six subcommands cover the library surface: `eval` computes a formula's
//! weight of truth under explicit bindings, `table` prints truth tables
//! (optionally with the sum-of-products addends), `law` certifies a formula
//! symbolically via its multilinear polynomial, `setop` evaluates set
//! expressions over a JSON definition file, `pw` combines piecewise
//! polynomial membership functions and samples the result, and `paper`
//! replays the embedded suite of worked examples as a regression check.
//!
//! All arithmetic is exact; identical inputs produce byte-identical output.

mod files;
mod fixtures;
mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::One;

use cfl_core::{
    eval_set_expression, multilinear_of, parse_formula, pw_from_formula, pw_sample, truth_table,
    weight_sop, EvalError, Formula, PiecewiseFn, PwError, Rational, SetError, SetExpression,
    Variable, Weight, WeightAssignment,
};

use render::{headline, poly_in_x, weight_line};

/// Exit code for failures outside the specific contract codes below (I/O,
/// variable-cap overflows, unrepresentable combinations), and for `law
/// --expect-law` / `paper` verdicts that fall short.
pub const EXIT_FAILED: u8 = 1;
/// Exit code for malformed input: formulas, bindings, definition files.
pub const EXIT_PARSE: u8 = 2;
/// Exit code for a formula variable with no weight bound to it.
pub const EXIT_MISSING_BINDING: u8 = 3;
/// Exit code for a name that is not defined: unknown set or element.
pub const EXIT_UNKNOWN_NAME: u8 = 4;
/// Exit code for operands that live on different universes or domains.
pub const EXIT_MISMATCH: u8 = 5;
/// Exit code for a membership function escaping the unit interval.
pub const EXIT_RANGE: u8 = 6;

/// A command failure: exit code plus a message for the error stream.
pub struct Failure {
    pub code: u8,
    pub message: String,
}

pub fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

/// Maps set-algebra errors onto the exit-code contract.
pub fn set_failure(e: SetError) -> Failure {
    let code = match &e {
        SetError::EmptyUniverse | SetError::DuplicateElement(_) => EXIT_PARSE,
        SetError::UnknownElement(_) | SetError::UnknownSet(_) | SetError::UnmappedVariable(_) => {
            EXIT_UNKNOWN_NAME
        }
        SetError::UniverseMismatch => EXIT_MISMATCH,
        SetError::NotCrisp { .. } | SetError::Eval(_) => EXIT_FAILED,
    };
    fail(code, e.to_string())
}

/// Maps piecewise-function errors onto the exit-code contract.
pub fn pw_failure(e: PwError) -> Failure {
    let code = match &e {
        PwError::InvalidDomain { .. }
        | PwError::InvalidSegment { .. }
        | PwError::EmptySegments
        | PwError::Gap { .. }
        | PwError::Overlap { .. }
        | PwError::UnknownFunction(_) => EXIT_PARSE,
        PwError::DomainMismatch => EXIT_MISMATCH,
        PwError::Range(_) => EXIT_RANGE,
        PwError::InconsistentBreakpoint { .. } | PwError::OutOfDomain { .. } | PwError::Eval(_) => {
            EXIT_FAILED
        }
    };
    fail(code, e.to_string())
}

fn eval_failure(e: EvalError) -> Failure {
    match e {
        EvalError::MissingVariable(_) => fail(EXIT_MISSING_BINDING, e.to_string()),
        EvalError::TooManyVariables { .. } => fail(EXIT_FAILED, e.to_string()),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-oriented aligned text.
    Text,
    /// Machine-oriented CSV with a header row.
    Csv,
}

#[derive(Parser)]
#[command(
    name = "cfl",
    version,
    about = "Exact fuzzy propositional logic: weights of truth, truth tables, \
             law certification, and set/membership-function algebra"
)]
struct Cli {
    /// Output format for tables and reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the primary output to a file instead of standard output
    /// (for `pw`: the sample table).
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a formula's weight of truth under name=weight bindings.
    Eval {
        /// Formula over named variables, e.g. "q1 | q2".
        formula: String,
        /// Bindings of the form name=weight; weights are decimal ("0.8")
        /// or rational ("4/5") literals in [0, 1].
        bindings: Vec<String>,
    },
    /// Print a formula's truth table in canonical row order.
    Table {
        /// Formula over named variables.
        formula: String,
        /// Append the sum-of-products addend of each row (symbolic, plus
        /// its value when bindings are given).
        #[arg(long)]
        addends: bool,
        /// Bindings of the form name=weight, used by --addends.
        bindings: Vec<String>,
    },
    /// Classify a formula as LAW / CONTRADICTION / CONTINGENT from its
    /// multilinear polynomial.
    Law {
        /// Formula over named variables.
        formula: String,
        /// Exit 0 only if the verdict is LAW (else exit 1).
        #[arg(long)]
        expect_law: bool,
    },
    /// Evaluate a set expression over fuzzy sets defined in a JSON file.
    Setop {
        /// Set-definition file: {"universe": [...], "sets": {...}}.
        file: PathBuf,
        /// Expression over the declared set names, e.g. "C1 | !C2".
        expression: String,
    },
    /// Combine piecewise membership functions from a JSON file; print the
    /// resulting segments and sample the curve.
    Pw {
        /// Function-definition file: {"domain": [...], "functions": {...}}.
        file: PathBuf,
        /// Expression over the declared function names, e.g. "C1 & C2".
        expression: String,
        /// Number of evenly spaced sample points (endpoints included).
        #[arg(long, default_value_t = 101, value_parser = clap::value_parser!(u32).range(2..))]
        samples: u32,
    },
    /// Run the embedded suite of worked examples and print PASS/FAIL per
    /// item; exit 0 only if every item passes.
    Paper {
        /// Deliberately corrupt one expected value to demonstrate that the
        /// harness reports failures (self-test).
        #[arg(long)]
        self_test_corrupt: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Eval { formula, bindings } => {
            let payload = cmd_eval(&formula, &bindings, cli.format)?;
            deliver(&cli.output, &payload)?;
            Ok(0)
        }
        Command::Table {
            formula,
            addends,
            bindings,
        } => {
            let payload = cmd_table(&formula, addends, &bindings, cli.format)?;
            deliver(&cli.output, &payload)?;
            Ok(0)
        }
        Command::Law {
            formula,
            expect_law,
        } => {
            let (payload, is_law) = cmd_law(&formula, cli.format)?;
            deliver(&cli.output, &payload)?;
            Ok(if expect_law && !is_law {
                EXIT_FAILED
            } else {
                0
            })
        }
        Command::Setop { file, expression } => {
            let payload = cmd_setop(&file, &expression, cli.format)?;
            deliver(&cli.output, &payload)?;
            Ok(0)
        }
        Command::Pw {
            file,
            expression,
            samples,
        } => {
            let (report, sample_table) = cmd_pw(&file, &expression, samples as usize, cli.format)?;
            match &cli.output {
                Some(path) => {
                    write_stdout(&report);
                    fs::write(path, sample_table).map_err(|e| {
                        fail(EXIT_FAILED, format!("cannot write {}: {e}", path.display()))
                    })?;
                }
                None => {
                    let banner = match cli.format {
                        Format::Text => format!("samples (n = {samples}):\n"),
                        Format::Csv => "\n".to_string(),
                    };
                    write_stdout(&format!("{report}{banner}{sample_table}"));
                }
            }
            Ok(0)
        }
        Command::Paper { self_test_corrupt } => {
            let (report, code) = fixtures::run_suite(self_test_corrupt);
            deliver(&cli.output, &report)?;
            Ok(code)
        }
    }
}

/// Writes the payload to the `--output` file when given, else to stdout.
fn deliver(output: &Option<PathBuf>, payload: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, payload)
            .map_err(|e| fail(EXIT_FAILED, format!("cannot write {}: {e}", path.display()))),
        None => {
            write_stdout(payload);
            Ok(())
        }
    }
}

/// Writes to stdout, exiting quietly if the downstream reader has closed the
/// pipe (e.g. `cfl table ... | head`).
fn write_stdout(payload: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if out
        .write_all(payload.as_bytes())
        .and_then(|()| out.flush())
        .is_err()
    {
        std::process::exit(0);
    }
}

fn parse(text: &str) -> Result<Formula, Failure> {
    parse_formula(text).map_err(|e| fail(EXIT_PARSE, e.to_string()))
}

/// Parses name=weight pairs; later pairs overwrite earlier ones.
fn parse_bindings(items: &[String]) -> Result<WeightAssignment, Failure> {
    let mut assignment = WeightAssignment::new();
    for item in items {
        let Some((name, value)) = item.split_once('=') else {
            return Err(fail(
                EXIT_PARSE,
                format!("binding '{item}' is not of the form name=weight"),
            ));
        };
        let variable = Variable::new(name.trim())
            .map_err(|e| fail(EXIT_PARSE, format!("binding '{item}': {e}")))?;
        let weight = Weight::parse(value.trim())
            .map_err(|e| fail(EXIT_PARSE, format!("binding '{item}': {e}")))?;
        assignment.insert(variable, weight);
    }
    Ok(assignment)
}

fn require_bound(f: &Formula, assignment: &WeightAssignment) -> Result<(), Failure> {
    for v in f.variables() {
        if assignment.get(&v).is_none() {
            return Err(fail(
                EXIT_MISSING_BINDING,
                format!("no weight bound for variable '{}'", v.name()),
            ));
        }
    }
    Ok(())
}

fn cmd_eval(formula: &str, bindings: &[String], format: Format) -> Result<String, Failure> {
    let f = parse(formula)?;
    let assignment = parse_bindings(bindings)?;
    require_bound(&f, &assignment)?;
    let w = weight_sop(&f, &assignment).map_err(eval_failure)?;
    Ok(match format {
        Format::Text => format!("{}\n", weight_line(&w)),
        Format::Csv => render::csv_table(&[
            vec!["formula".to_string(), "weight".to_string()],
            vec![headline(&f), w.to_string()],
        ]),
    })
}

fn cmd_table(
    formula: &str,
    addends: bool,
    bindings: &[String],
    format: Format,
) -> Result<String, Failure> {
    let f = parse(formula)?;
    let table = truth_table(&f).map_err(eval_failure)?;
    let assignment = parse_bindings(bindings)?;
    let with_values = addends && !assignment.is_empty();
    if with_values {
        require_bound(&f, &assignment)?;
    }

    let variables = table.variables();
    let mut headers: Vec<String> = variables.iter().map(|v| v.name().to_string()).collect();
    headers.push(headline(&f));
    if addends {
        headers.push("addend".to_string());
        if with_values && format == Format::Csv {
            headers.push("value".to_string());
        }
    }

    let mut rows: Vec<Vec<String>> = Vec::with_capacity(table.row_count());
    for i in 0..table.row_count() {
        let mut row: Vec<String> = (0..variables.len())
            .map(|j| if table.row_bit(i, j) { "1" } else { "0" }.to_string())
            .collect();
        row.push(if table.output(i) { "1" } else { "0" }.to_string());
        if addends {
            let symbolic = if table.output(i) {
                variables
                    .iter()
                    .enumerate()
                    .map(|(j, v)| {
                        if table.row_bit(i, j) {
                            format!("w({})", v.name())
                        } else {
                            format!("w(!{})", v.name())
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("*")
            } else {
                "0".to_string()
            };
            let value = with_values.then(|| addend_value(&table, i, &assignment));
            match format {
                Format::Text => {
                    let mut cell = format!("S{} = {symbolic}", i + 1);
                    if let Some(v) = &value {
                        if symbolic != "0" {
                            cell.push_str(&format!(" = {}", weight_line(v)));
                        }
                    }
                    row.push(cell);
                }
                Format::Csv => {
                    row.push(symbolic);
                    if let Some(v) = &value {
                        row.push(v.to_string());
                    }
                }
            }
        }
        rows.push(row);
    }

    let mut out = match format {
        Format::Text => render::text_table(&headers, &rows),
        Format::Csv => {
            let mut all = vec![headers];
            all.extend(rows);
            render::csv_table(&all)
        }
    };
    if with_values && format == Format::Text {
        let total = weight_sop(&f, &assignment).map_err(eval_failure)?;
        out.push_str(&format!("w({}) = {}\n", headline(&f), weight_line(&total)));
    }
    Ok(out)
}

/// The row's addend: 0 for a falsifying row, else the product of literal
/// weights — `w(v)` where the row bit is 1 and `1 - w(v)` where it is 0.
fn addend_value(table: &cfl_core::TruthTable, row: usize, assignment: &WeightAssignment) -> Weight {
    if !table.output(row) {
        return Weight::zero();
    }
    let mut product = Rational::one();
    for (j, v) in table.variables().iter().enumerate() {
        let w = assignment.get(v).expect("bindings checked above");
        let factor = if table.row_bit(row, j) {
            w.clone()
        } else {
            w.complement()
        };
        product *= factor.into_value();
    }
    Weight::new(product).expect("a product of unit-interval factors stays in the unit interval")
}

fn cmd_law(formula: &str, format: Format) -> Result<(String, bool), Failure> {
    let f = parse(formula)?;
    let p = multilinear_of(&f).map_err(eval_failure)?;
    let verdict = if p.is_one() {
        "LAW"
    } else if p.is_zero() {
        "CONTRADICTION"
    } else {
        "CONTINGENT"
    };
    let payload = match format {
        Format::Text => format!("{verdict}\npolynomial: {p}\n"),
        Format::Csv => render::csv_table(&[
            vec![
                "formula".to_string(),
                "verdict".to_string(),
                "polynomial".to_string(),
            ],
            vec![headline(&f), verdict.to_string(), p.to_string()],
        ]),
    };
    Ok((payload, verdict == "LAW"))
}

fn cmd_setop(file: &PathBuf, expression: &str, format: Format) -> Result<String, Failure> {
    let sets = files::load_sets(file)?;
    let f = parse(expression)?;
    let expr = SetExpression::from_formula(&f, &sets).map_err(set_failure)?;
    let result = eval_set_expression(&expr).map_err(set_failure)?;

    let elements = result.universe().elements().to_vec();
    Ok(match format {
        Format::Text => {
            let mut out = format!("{}\n", render::headline(&f));
            for (id, w) in elements.iter().zip(result.weights()) {
                out.push_str(&format!("{id} = {}\n", weight_line(w)));
            }
            if cfl_core::is_universal_set(&result) {
                out.push_str("UNIVERSAL\n");
            }
            if cfl_core::is_empty_set(&result) {
                out.push_str("EMPTY\n");
            }
            out
        }
        Format::Csv => {
            let mut rows = vec![vec!["element".to_string(), "weight".to_string()]];
            for (id, w) in elements.iter().zip(result.weights()) {
                rows.push(vec![id.clone(), w.to_string()]);
            }
            render::csv_table(&rows)
        }
    })
}

fn cmd_pw(
    file: &PathBuf,
    expression: &str,
    samples: usize,
    format: Format,
) -> Result<(String, String), Failure> {
    let functions = files::load_pw(file)?;
    let f = parse(expression)?;
    let result = pw_from_formula(&f, &functions).map_err(pw_failure)?;

    let report = match format {
        Format::Text => text_segment_report(&render::headline(&f), &result),
        Format::Csv => csv_segment_report(&result),
    };
    let points = pw_sample(&result, samples);
    let mut rows = vec![vec!["x".to_string(), "value".to_string()]];
    for (x, value) in &points {
        rows.push(vec![
            cfl_core::render_exact(x),
            cfl_core::render_exact(value),
        ]);
    }
    Ok((report, render::csv_table(&rows)))
}

/// One interval per segment, with brackets showing endpoint ownership:
/// a segment owns its left endpoint iff it is left-closed, and its right
/// endpoint iff it is the last segment or its successor is left-open.
fn segment_intervals(f: &PiecewiseFn) -> Vec<String> {
    let segments = f.segments();
    segments
        .iter()
        .enumerate()
        .map(|(i, seg)| {
            let left = if seg.lo_closed() { '[' } else { '(' };
            let owns_hi = match segments.get(i + 1) {
                Some(next) => !next.lo_closed(),
                None => true,
            };
            let right = if owns_hi { ']' } else { ')' };
            format!(
                "{left}{}, {}{right}",
                cfl_core::render_exact(seg.lo()),
                cfl_core::render_exact(seg.hi())
            )
        })
        .collect()
}

fn text_segment_report(title: &str, f: &PiecewiseFn) -> String {
    let (lo, hi) = f.domain();
    let breakpoints: Vec<String> = f.breakpoints().iter().map(cfl_core::render_exact).collect();
    let intervals = segment_intervals(f);
    let width = intervals.iter().map(|s| s.len()).max().unwrap_or(0);

    let mut out = format!(
        "{}\ndomain: [{}, {}]\nbreakpoints: {}\nsegments:\n",
        title,
        cfl_core::render_exact(lo),
        cfl_core::render_exact(hi),
        breakpoints.join(", ")
    );
    for (interval, seg) in intervals.iter().zip(f.segments()) {
        out.push_str(&format!(
            "  {interval:<width$}  {}\n",
            poly_in_x(seg.coeffs())
        ));
    }
    out
}

fn csv_segment_report(f: &PiecewiseFn) -> String {
    let mut rows = vec![vec![
        "lo".to_string(),
        "hi".to_string(),
        "lo_closed".to_string(),
        "coeffs".to_string(),
    ]];
    for seg in f.segments() {
        rows.push(vec![
            cfl_core::render_exact(seg.lo()),
            cfl_core::render_exact(seg.hi()),
            seg.lo_closed().to_string(),
            seg.coeffs()
                .iter()
                .map(cfl_core::render_exact)
                .collect::<Vec<_>>()
                .join(" "),
        ]);
    }
    render::csv_table(&rows)
}
