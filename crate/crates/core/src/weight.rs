//! Exact truth weights and the sum-of-products weight of a formula.
//!
//! A weight of truth is an exact rational in the closed unit interval. The
//! weight of a formula under a [`WeightAssignment`] is defined row-wise: sum,
//! over the truth-table rows on which the formula is true, the product of
//! per-variable literal weights — `w(v)` where the row sets `v` to 1 and
//! `1 - w(v)` where it sets `v` to 0 ([`weight_sop`]).
//!
//! For *independent* operands that definition collapses to closed forms per
//! connective ([`connective_weight`]). The closed forms do not compose once
//! operands share variables: `weight_sop` of `q & q` is `w(q)`, not `w(q)²`,
//! and of `q & !q` is exactly 0. The row-wise definition is normative; the
//! closed forms are conveniences.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::formula::{
    capped_variables, eval_row, variable_index, Connective, EvalError, Formula, Variable,
    MAX_TABLE_VARIABLES,
};

/// Exact rational number type used throughout the crate.
pub type Rational = num_rational::BigRational;

/// Errors from weight construction and parsing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightError {
    /// The text is not a valid rational literal.
    InvalidNumber {
        /// The offending input text.
        text: String,
        /// What was wrong with it.
        reason: &'static str,
    },
    /// The value lies outside the closed unit interval.
    OutOfRange(Rational),
}

impl fmt::Display for WeightError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightError::InvalidNumber { text, reason } => {
                write!(f, "invalid number {text:?}: {reason}")
            }
            WeightError::OutOfRange(v) => {
                write!(f, "weight {v} is outside the unit interval [0, 1]")
            }
        }
    }
}

impl core::error::Error for WeightError {}

/// Parses an exact rational from decimal ("0.8"), fraction ("4/5"), or
/// integer ("2") notation, with an optional leading sign. Decimal literals
/// are exact: "0.8" is 4/5, not a float.
pub fn parse_rational(text: &str) -> Result<Rational, WeightError> {
    let err = |reason: &'static str| WeightError::InvalidNumber {
        text: text.to_string(),
        reason,
    };
    let t = text.trim();
    let (negative, t) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    if t.is_empty() {
        return Err(err("empty number"));
    }
    let magnitude = if let Some((num, den)) = t.split_once('/') {
        let n = parse_digits(num).ok_or_else(|| err("fraction parts must be decimal integers"))?;
        let d = parse_digits(den).ok_or_else(|| err("fraction parts must be decimal integers"))?;
        if d.is_zero() {
            return Err(err("denominator is zero"));
        }
        Rational::new(n, d)
    } else if let Some((int, frac)) = t.split_once('.') {
        if int.is_empty() && frac.is_empty() {
            return Err(err("no digits"));
        }
        let int_part = if int.is_empty() {
            BigInt::zero()
        } else {
            parse_digits(int).ok_or_else(|| err("integer part must be decimal digits"))?
        };
        let frac_part = if frac.is_empty() {
            BigInt::zero()
        } else {
            parse_digits(frac).ok_or_else(|| err("fractional part must be decimal digits"))?
        };
        let scale = BigInt::from(10u8).pow(frac.len() as u32);
        Rational::new(int_part * &scale + frac_part, scale)
    } else {
        Rational::from_integer(parse_digits(t).ok_or_else(|| err("expected decimal digits"))?)
    };
    Ok(if negative { -magnitude } else { magnitude })
}

/// Parses a nonempty all-digit string into an unsigned integer.
fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Some(s.parse().expect("digit strings parse as BigInt"))
}

/// Renders a rational as an exact terminating decimal, or `None` if its
/// decimal expansion does not terminate. "23/25" becomes "0.92".
pub fn decimal_string(r: &Rational) -> Option<String> {
    let mut denom = r.denom().clone();
    let mut twos = 0u32;
    let mut fives = 0u32;
    let two = BigInt::from(2u8);
    let five = BigInt::from(5u8);
    while (&denom % &two).is_zero() {
        denom /= &two;
        twos += 1;
    }
    while (&denom % &five).is_zero() {
        denom /= &five;
        fives += 1;
    }
    if !denom.is_one() {
        return None;
    }
    let k = twos.max(fives);
    let scaled = (r.numer() * BigInt::from(10u8).pow(k)) / r.denom();
    let negative = scaled.is_negative();
    let digits = scaled.abs().to_string();
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if k == 0 {
        out.push_str(&digits);
        return Some(out);
    }
    let k = k as usize;
    if digits.len() > k {
        out.push_str(&digits[..digits.len() - k]);
        out.push('.');
        out.push_str(&digits[digits.len() - k..]);
    } else {
        out.push_str("0.");
        for _ in digits.len()..k {
            out.push('0');
        }
        out.push_str(&digits);
    }
    Some(out)
}

/// Renders a rational exactly: integers plainly, terminating decimals in
/// decimal form, and everything else as "p/q".
pub fn render_exact(r: &Rational) -> String {
    match decimal_string(r) {
        Some(d) => d,
        None => r.to_string(),
    }
}

/// An exact truth weight: a rational in the closed unit interval `[0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Weight(Rational);

impl Weight {
    /// Wraps a rational, rejecting values outside `[0, 1]`.
    pub fn new(value: Rational) -> Result<Weight, WeightError> {
        if value < Rational::zero() || value > Rational::one() {
            return Err(WeightError::OutOfRange(value));
        }
        Ok(Weight(value))
    }

    /// The weight 0 (absolute falsehood).
    pub fn zero() -> Weight {
        Weight(Rational::zero())
    }

    /// The weight 1 (absolute truth).
    pub fn one() -> Weight {
        Weight(Rational::one())
    }

    /// 0 for false, 1 for true.
    pub fn from_bit(bit: bool) -> Weight {
        if bit {
            Weight::one()
        } else {
            Weight::zero()
        }
    }

    /// Parses a weight literal ("0.8", "4/5", "1"), rejecting values outside
    /// the unit interval at parse time.
    pub fn parse(text: &str) -> Result<Weight, WeightError> {
        Weight::new(parse_rational(text)?)
    }

    /// The underlying rational.
    pub fn value(&self) -> &Rational {
        &self.0
    }

    /// Consumes the weight, returning the underlying rational.
    pub fn into_value(self) -> Rational {
        self.0
    }

    /// The complement `1 - w`: the weight of the negated proposition.
    pub fn complement(&self) -> Weight {
        Weight(Rational::one() - &self.0)
    }

    /// True iff the weight is exactly 0.
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// True iff the weight is exactly 1.
    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_exact(&self.0))
    }
}

/// A total mapping from variables to weights.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightAssignment {
    weights: BTreeMap<Variable, Weight>,
}

impl WeightAssignment {
    /// Creates an empty assignment.
    pub fn new() -> WeightAssignment {
        WeightAssignment::default()
    }

    /// Binds (or overwrites) one variable's weight.
    pub fn insert(&mut self, v: Variable, w: Weight) {
        self.weights.insert(v, w);
    }

    /// Looks up one variable's weight.
    pub fn get(&self, v: &Variable) -> Option<&Weight> {
        self.weights.get(v)
    }

    /// Iterates over `(variable, weight)` pairs in canonical variable order.
    pub fn iter(&self) -> impl Iterator<Item = (&Variable, &Weight)> {
        self.weights.iter()
    }

    /// Number of bound variables.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    /// True if no variable is bound.
    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

impl FromIterator<(Variable, Weight)> for WeightAssignment {
    fn from_iter<T: IntoIterator<Item = (Variable, Weight)>>(iter: T) -> WeightAssignment {
        WeightAssignment {
            weights: iter.into_iter().collect(),
        }
    }
}

/// The formula's weight of truth by the row-wise sum-of-products method.
///
/// Sums, over every assignment on which the formula is classically true, the
/// product over its variables of `w(v)` (bit 1) or `1 - w(v)` (bit 0). This
/// definition is normative for formulas with shared variables: the weight of
/// `q & q` is `w(q)` and of `q & !q` exactly 0, which no composition of
/// closed forms reproduces.
pub fn weight_sop(f: &Formula, w: &WeightAssignment) -> Result<Weight, EvalError> {
    let vars = capped_variables(f, MAX_TABLE_VARIABLES)?;
    let mut literal: Vec<(Rational, Rational)> = Vec::with_capacity(vars.len());
    for v in &vars {
        let weight = w
            .get(v)
            .ok_or_else(|| EvalError::MissingVariable(v.clone()))?;
        let one_minus = weight.complement();
        literal.push((weight.value().clone(), one_minus.into_value()));
    }
    let index = variable_index(&vars);
    let n = vars.len();
    let mut total = Rational::zero();
    for mask in 0..(1usize << n) {
        if !eval_row(f, &index, mask as u32, n) {
            continue;
        }
        let mut addend = Rational::one();
        for (i, (w1, w0)) in literal.iter().enumerate() {
            let bit = (mask >> (n - 1 - i)) & 1 == 1;
            addend *= if bit { w1 } else { w0 };
        }
        total += addend;
    }
    Ok(Weight::new(total).expect("a sum of disjoint-row products stays within [0, 1]"))
}

/// Binary weight connective, including both implication directions.
///
/// `ConverseImp` is the mirror implication (consequent first); it has no
/// formula-level counterpart — write `b -> a` there — but set algebra treats
/// both directions as first-class operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightConnective {
    /// Inclusive disjunction. Closed form: `a + b - a·b`.
    Or,
    /// Exclusive disjunction. Closed form: `a + b - 2·a·b`.
    Xor,
    /// Conjunction. Closed form: `a·b`.
    And,
    /// Implication (first operand implies second). Closed form: `1 - a + a·b`.
    Imp,
    /// Converse implication (second operand implies first). Closed form:
    /// `1 - b + a·b`.
    ConverseImp,
    /// Biconditional. Closed form: `1 - a - b + 2·a·b`.
    Iff,
    /// Negated conjunction. Closed form: `1 - a·b`.
    Nand,
    /// Negated disjunction. Closed form: `1 - a - b + a·b`.
    Nor,
}

impl WeightConnective {
    /// All eight connectives, in a fixed order.
    pub const ALL: [WeightConnective; 8] = [
        WeightConnective::Or,
        WeightConnective::Xor,
        WeightConnective::And,
        WeightConnective::Imp,
        WeightConnective::ConverseImp,
        WeightConnective::Iff,
        WeightConnective::Nand,
        WeightConnective::Nor,
    ];
}

impl From<Connective> for WeightConnective {
    fn from(c: Connective) -> WeightConnective {
        match c {
            Connective::Or => WeightConnective::Or,
            Connective::Xor => WeightConnective::Xor,
            Connective::And => WeightConnective::And,
            Connective::Imp => WeightConnective::Imp,
            Connective::Iff => WeightConnective::Iff,
            Connective::Nand => WeightConnective::Nand,
            Connective::Nor => WeightConnective::Nor,
        }
    }
}

/// Display name for a combined result, e.g. `"(C1 | C2)"`. Converse
/// implication renders with its operands in implication order.
pub(crate) fn combined_name(c: WeightConnective, a: &str, b: &str) -> String {
    let tok = match c {
        WeightConnective::Or => "|",
        WeightConnective::Xor => "^",
        WeightConnective::And => "&",
        WeightConnective::Imp => "->",
        WeightConnective::ConverseImp => return format!("({b} -> {a})"),
        WeightConnective::Iff => "<->",
        WeightConnective::Nand => "!&",
        WeightConnective::Nor => "!|",
    };
    format!("({a} {tok} {b})")
}

/// The closed-form value of a connective on raw rationals. Maps the unit
/// square into the unit interval; defined (as a polynomial) everywhere.
pub(crate) fn connective_value(c: WeightConnective, x: &Rational, y: &Rational) -> Rational {
    let one = Rational::one();
    let xy = x * y;
    match c {
        WeightConnective::Or => x + y - &xy,
        WeightConnective::Xor => x + y - &xy - &xy,
        WeightConnective::And => xy,
        WeightConnective::Imp => one - x + &xy,
        WeightConnective::ConverseImp => one - y + &xy,
        WeightConnective::Iff => one - x - y + &xy + &xy,
        WeightConnective::Nand => one - &xy,
        WeightConnective::Nor => one - x - y + &xy,
    }
}

/// The closed-form weight of a connective applied to *independent* operands.
///
/// Agrees with [`weight_sop`] on a two-fresh-variable formula carrying the
/// operand weights. Not valid for operands that share variables; see the
/// module docs.
pub fn connective_weight(c: WeightConnective, a: &Weight, b: &Weight) -> Weight {
    let value = connective_value(c, a.value(), b.value());
    Weight::new(value).expect("connective closed forms preserve the unit interval")
}

/// The weight of a negation: `1 - w`.
pub fn negation_weight(w: &Weight) -> Weight {
    w.complement()
}

/// Connectives for which the max/min comparison baseline is defined.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZadehOp {
    /// Disjunction: maximum of the operand weights.
    Or,
    /// Conjunction: minimum of the operand weights.
    And,
}

/// The max/min baseline weights, provided solely for comparison with the
/// product-form [`connective_weight`].
pub fn zadeh_weight(op: ZadehOp, a: &Weight, b: &Weight) -> Weight {
    match op {
        ZadehOp::Or => a.max(b).clone(),
        ZadehOp::And => a.min(b).clone(),
    }
}

/// The product `Π (1 - wⱼ + wⱼ)` over the given weights, computed factor by
/// factor. Every factor is the weight of `qⱼ ∨ !qⱼ`, so the product — the
/// weight of an n-variable law decomposed over full rows — is exactly 1; the
/// operation exists to exhibit and test that identity (including its
/// recursive form `Π₁..ₙ = Π₁..ₙ₋₁ · (1 - wₙ + wₙ)`).
pub fn law_product_identity(weights: &[Weight]) -> Weight {
    let mut product = Rational::one();
    for w in weights {
        product *= w.complement().value() + w.value();
    }
    Weight::new(product).expect("each factor is exactly 1")
}
