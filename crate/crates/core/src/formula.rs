//! Propositional formulas: syntax trees, classical evaluation, truth tables.
//!
//! Everything here is the classical (two-valued) layer. A [`Formula`] is a
//! finite tree whose leaves are named variables; [`eval_bl`] evaluates it
//! under an [`Assignment`], [`truth_table`] enumerates all assignments in a
//! canonical order, and [`is_tautology_bl`] / [`is_contradiction_bl`] classify
//! the formula by its final column.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Maximum number of distinct variables accepted by table enumeration
/// (`truth_table`, tautology checks, and the sum-of-products evaluator).
pub const MAX_TABLE_VARIABLES: usize = 24;

/// A named propositional variable.
///
/// Names are nonempty ASCII identifiers (letters, digits, underscore, not
/// beginning with a digit); `nand` and `nor` are reserved operator keywords
/// and rejected. Two variables are identical iff their names are
/// byte-identical. Ordering is numeric-suffix-aware, so `q2` sorts before
/// `q10`; this order fixes truth-table column order everywhere.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Variable {
    name: String,
}

/// Error for a rejected variable name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvalidName(pub String);

impl fmt::Display for InvalidName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid variable name {:?}: expected a nonempty ASCII identifier not starting with a digit and not a reserved word", self.0)
    }
}

impl core::error::Error for InvalidName {}

/// Returns true if `s` is a lexically valid identifier (reserved words included).
pub(crate) fn is_identifier(s: &str) -> bool {
    let bytes = s.as_bytes();
    match bytes.first() {
        Some(b) if b.is_ascii_alphabetic() || *b == b'_' => {}
        _ => return false,
    }
    bytes[1..]
        .iter()
        .all(|b| b.is_ascii_alphanumeric() || *b == b'_')
}

/// Reserved operator keywords that can never name a variable.
pub(crate) const RESERVED_WORDS: [&str; 2] = ["nand", "nor"];

impl Variable {
    /// Creates a variable, rejecting invalid identifiers and reserved words.
    pub fn new(name: impl Into<String>) -> Result<Variable, InvalidName> {
        let name = name.into();
        if !is_identifier(&name) || RESERVED_WORDS.contains(&name.as_str()) {
            return Err(InvalidName(name));
        }
        Ok(Variable { name })
    }

    /// The variable's name.
    pub fn name(&self) -> &str {
        &self.name
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Numeric-suffix-aware comparison: digit runs compare by value, everything
/// else bytewise; full byte order breaks ties (so `q07` and `q7` stay distinct
/// and the order is total).
fn natural_cmp(a: &str, b: &str) -> Ordering {
    let (ab, bb) = (a.as_bytes(), b.as_bytes());
    let (mut i, mut j) = (0usize, 0usize);
    while i < ab.len() && j < bb.len() {
        if ab[i].is_ascii_digit() && bb[j].is_ascii_digit() {
            let si = i;
            let sj = j;
            while i < ab.len() && ab[i].is_ascii_digit() {
                i += 1;
            }
            while j < bb.len() && bb[j].is_ascii_digit() {
                j += 1;
            }
            let ra = a[si..i].trim_start_matches('0');
            let rb = b[sj..j].trim_start_matches('0');
            let ord = ra.len().cmp(&rb.len()).then_with(|| ra.cmp(rb));
            if ord != Ordering::Equal {
                return ord;
            }
        } else {
            let ord = ab[i].cmp(&bb[j]);
            if ord != Ordering::Equal {
                return ord;
            }
            i += 1;
            j += 1;
        }
    }
    (ab.len() - i).cmp(&(bb.len() - j)).then_with(|| ab.cmp(bb))
}

impl Ord for Variable {
    fn cmp(&self, other: &Self) -> Ordering {
        natural_cmp(&self.name, &other.name)
    }
}

impl PartialOrd for Variable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Binary connective of a formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Connective {
    /// Inclusive disjunction: true iff at least one operand is true.
    Or,
    /// Exclusive disjunction: true iff the operands differ.
    Xor,
    /// Conjunction: true iff both operands are true.
    And,
    /// Material implication: false only when the antecedent is true and the
    /// consequent is false.
    Imp,
    /// Biconditional: true iff the operands agree.
    Iff,
    /// Negated conjunction (Sheffer stroke).
    Nand,
    /// Negated disjunction (Peirce's arrow).
    Nor,
}

impl Connective {
    /// All seven connectives, in a fixed order.
    pub const ALL: [Connective; 7] = [
        Connective::Or,
        Connective::Xor,
        Connective::And,
        Connective::Imp,
        Connective::Iff,
        Connective::Nand,
        Connective::Nor,
    ];

    /// The surface token used when printing and parsing.
    pub fn token(self) -> &'static str {
        match self {
            Connective::Or => "|",
            Connective::Xor => "^",
            Connective::And => "&",
            Connective::Imp => "->",
            Connective::Iff => "<->",
            Connective::Nand => "!&",
            Connective::Nor => "!|",
        }
    }

    /// Classical truth function of the connective.
    pub fn apply_bl(self, a: bool, b: bool) -> bool {
        match self {
            Connective::Or => a || b,
            Connective::Xor => a != b,
            Connective::And => a && b,
            Connective::Imp => !a || b,
            Connective::Iff => a == b,
            Connective::Nand => !(a && b),
            Connective::Nor => !(a || b),
        }
    }
}

/// Syntax tree of a propositional formula. Every leaf is a variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Formula {
    /// A propositional variable.
    Var(Variable),
    /// Negation of a subformula.
    Not(Box<Formula>),
    /// A binary connective applied to two subformulas.
    Bin(Connective, Box<Formula>, Box<Formula>),
}

impl Formula {
    /// Leaf constructor. Panics if `name` is not a valid variable name; use
    /// [`Variable::new`] for fallible construction.
    pub fn var(name: &str) -> Formula {
        Formula::Var(Variable::new(name).expect("valid variable name"))
    }

    /// Negation constructor.
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    /// Binary-connective constructor.
    pub fn bin(c: Connective, a: Formula, b: Formula) -> Formula {
        Formula::Bin(c, Box::new(a), Box::new(b))
    }

    /// The sorted, deduplicated set of variables occurring in the formula.
    pub fn variables(&self) -> BTreeSet<Variable> {
        let mut out = BTreeSet::new();
        self.collect_variables(&mut out);
        out
    }

    fn collect_variables(&self, out: &mut BTreeSet<Variable>) {
        match self {
            Formula::Var(v) => {
                out.insert(v.clone());
            }
            Formula::Not(g) => g.collect_variables(out),
            Formula::Bin(_, a, b) => {
                a.collect_variables(out);
                b.collect_variables(out);
            }
        }
    }
}

/// A total assignment of classical truth values to variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    values: BTreeMap<Variable, bool>,
}

impl Assignment {
    /// Creates an empty assignment.
    pub fn new() -> Assignment {
        Assignment::default()
    }

    /// Sets (or overwrites) one variable's value.
    pub fn set(&mut self, v: Variable, value: bool) {
        self.values.insert(v, value);
    }

    /// Looks up one variable's value.
    pub fn get(&self, v: &Variable) -> Option<bool> {
        self.values.get(v).copied()
    }

    /// Iterates over `(variable, value)` pairs in canonical variable order.
    pub fn iter(&self) -> impl Iterator<Item = (&Variable, bool)> {
        self.values.iter().map(|(v, b)| (v, *b))
    }

    /// Number of bound variables.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// True if no variable is bound.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl FromIterator<(Variable, bool)> for Assignment {
    fn from_iter<T: IntoIterator<Item = (Variable, bool)>>(iter: T) -> Assignment {
        Assignment {
            values: iter.into_iter().collect(),
        }
    }
}

/// Errors from evaluation and table enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalError {
    /// A variable of the formula is not bound by the assignment.
    MissingVariable(Variable),
    /// The formula has more distinct variables than the stated cap.
    TooManyVariables {
        /// Number of distinct variables in the formula.
        count: usize,
        /// The cap that was exceeded.
        max: usize,
    },
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::MissingVariable(v) => write!(f, "variable '{v}' is not bound"),
            EvalError::TooManyVariables { count, max } => {
                write!(
                    f,
                    "formula has {count} variables, more than the {max} supported"
                )
            }
        }
    }
}

impl core::error::Error for EvalError {}

/// Evaluates a formula under classical two-valued semantics.
pub fn eval_bl(f: &Formula, a: &Assignment) -> Result<bool, EvalError> {
    match f {
        Formula::Var(v) => a
            .get(v)
            .ok_or_else(|| EvalError::MissingVariable(v.clone())),
        Formula::Not(g) => Ok(!eval_bl(g, a)?),
        Formula::Bin(c, x, y) => Ok(c.apply_bl(eval_bl(x, a)?, eval_bl(y, a)?)),
    }
}

/// Evaluates against a row mask: variable `i` (in `index`) reads bit
/// `n - 1 - i` of `mask`, so the leftmost variable is most significant.
pub(crate) fn eval_row(
    f: &Formula,
    index: &BTreeMap<Variable, usize>,
    mask: u32,
    n: usize,
) -> bool {
    match f {
        Formula::Var(v) => {
            let i = index[v];
            (mask >> (n - 1 - i)) & 1 == 1
        }
        Formula::Not(g) => !eval_row(g, index, mask, n),
        Formula::Bin(c, a, b) => {
            c.apply_bl(eval_row(a, index, mask, n), eval_row(b, index, mask, n))
        }
    }
}

/// Returns the formula's variables in canonical order, enforcing `max`.
pub(crate) fn capped_variables(f: &Formula, max: usize) -> Result<Vec<Variable>, EvalError> {
    let vars: Vec<Variable> = f.variables().into_iter().collect();
    if vars.len() > max {
        return Err(EvalError::TooManyVariables {
            count: vars.len(),
            max,
        });
    }
    Ok(vars)
}

/// Builds the position index used by [`eval_row`].
pub(crate) fn variable_index(vars: &[Variable]) -> BTreeMap<Variable, usize> {
    vars.iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i))
        .collect()
}

/// A full truth table in canonical row order.
///
/// Rows are ordered lexicographically with 0 before 1 and the leftmost
/// (first) variable most significant, so row `i`'s assignment is the `n`-bit
/// binary expansion of `i`. Only the output column is stored; assignments are
/// reconstructed from row indices on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruthTable {
    variables: Vec<Variable>,
    outputs: Vec<bool>,
}

impl TruthTable {
    /// The table's variables, leftmost first.
    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    /// Number of rows (`2^n` for `n` variables).
    pub fn row_count(&self) -> usize {
        self.outputs.len()
    }

    /// The formula's value on row `row`.
    pub fn output(&self, row: usize) -> bool {
        self.outputs[row]
    }

    /// The full output column, in row order.
    pub fn outputs(&self) -> &[bool] {
        &self.outputs
    }

    /// The value of variable `var_index` on row `row`.
    pub fn row_bit(&self, row: usize, var_index: usize) -> bool {
        let n = self.variables.len();
        (row >> (n - 1 - var_index)) & 1 == 1
    }

    /// Materializes row `row`'s assignment.
    pub fn row_assignment(&self, row: usize) -> Assignment {
        self.variables
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), self.row_bit(row, i)))
            .collect()
    }
}

/// Enumerates the formula's full truth table (up to [`MAX_TABLE_VARIABLES`]).
pub fn truth_table(f: &Formula) -> Result<TruthTable, EvalError> {
    let vars = capped_variables(f, MAX_TABLE_VARIABLES)?;
    let index = variable_index(&vars);
    let n = vars.len();
    let rows = 1usize << n;
    let mut outputs = Vec::with_capacity(rows);
    for mask in 0..rows {
        outputs.push(eval_row(f, &index, mask as u32, n));
    }
    Ok(TruthTable {
        variables: vars,
        outputs,
    })
}

/// True iff the formula is true on every row of its truth table.
pub fn is_tautology_bl(f: &Formula) -> Result<bool, EvalError> {
    classify_rows(f, true)
}

/// True iff the formula is false on every row of its truth table.
pub fn is_contradiction_bl(f: &Formula) -> Result<bool, EvalError> {
    classify_rows(f, false)
}

fn classify_rows(f: &Formula, wanted: bool) -> Result<bool, EvalError> {
    let vars = capped_variables(f, MAX_TABLE_VARIABLES)?;
    let index = variable_index(&vars);
    let n = vars.len();
    for mask in 0..(1usize << n) {
        if eval_row(f, &index, mask as u32, n) != wanted {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Emits a fully parenthesized rendering that reparses to an identical tree.
///
/// Every binary application is wrapped in parentheses; negation prefixes its
/// operand directly (`!q1`, `!!q1`, `!(q1 | q2)`).
pub fn format_formula(f: &Formula) -> String {
    let mut out = String::new();
    write_formula(&mut out, f);
    out
}

fn write_formula(out: &mut String, f: &Formula) {
    match f {
        Formula::Var(v) => out.push_str(v.name()),
        Formula::Not(g) => {
            out.push('!');
            write_formula(out, g);
        }
        Formula::Bin(c, a, b) => {
            out.push('(');
            write_formula(out, a);
            out.push(' ');
            out.push_str(c.token());
            out.push(' ');
            write_formula(out, b);
            out.push(')');
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_formula(&mut s, self);
        f.write_str(&s)
    }
}
