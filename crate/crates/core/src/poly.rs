//! Multilinear polynomials: the symbolic weight of a formula.
//!
//! Every Boolean function extends to a unique polynomial of degree at most
//! one in each variable that agrees with it on `{0,1}ⁿ`; on the whole unit
//! cube that polynomial equals the row-wise sum-of-products weight. A formula
//! is a law exactly when its polynomial is the constant 1, and a
//! contradiction exactly when it is the constant 0 — which turns tautology
//! checking into symbolic certification.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::formula::{
    capped_variables, eval_row, is_contradiction_bl, is_tautology_bl, variable_index, EvalError,
    Formula, Variable,
};
use crate::weight::{Rational, Weight, WeightAssignment};

/// Maximum number of distinct variables for symbolic expansion; the monomial
/// count is bounded by `2^n`.
pub const MAX_SYMBOLIC_VARIABLES: usize = 16;

/// A multilinear polynomial with exact rational coefficients.
///
/// Terms map monomials — finite sets of variables, each of degree at most
/// one — to nonzero coefficients; the empty set is the constant term. Zero
/// coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultilinearPoly {
    terms: BTreeMap<BTreeSet<Variable>, Rational>,
}

impl MultilinearPoly {
    /// The zero polynomial.
    pub fn zero() -> MultilinearPoly {
        MultilinearPoly::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> MultilinearPoly {
        MultilinearPoly::constant(Rational::one())
    }

    /// A constant polynomial.
    pub fn constant(c: Rational) -> MultilinearPoly {
        let mut p = MultilinearPoly::zero();
        if !c.is_zero() {
            p.terms.insert(BTreeSet::new(), c);
        }
        p
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, summing
    /// duplicate monomials and dropping zero coefficients.
    pub fn from_terms<I>(terms: I) -> MultilinearPoly
    where
        I: IntoIterator<Item = (BTreeSet<Variable>, Rational)>,
    {
        let mut p = MultilinearPoly::zero();
        for (monomial, coeff) in terms {
            p.add_term(monomial, coeff);
        }
        p
    }

    /// True iff this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True iff this is the constant polynomial 1.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&BTreeSet::new()).is_some_and(|c| c.is_one())
    }

    /// The coefficient of a monomial (zero if absent).
    pub fn coefficient(&self, monomial: &BTreeSet<Variable>) -> Rational {
        self.terms
            .get(monomial)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Iterates over `(monomial, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&BTreeSet<Variable>, &Rational)> {
        self.terms.iter()
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// All variables that occur in some monomial.
    pub fn variables(&self) -> BTreeSet<Variable> {
        let mut out = BTreeSet::new();
        for monomial in self.terms.keys() {
            out.extend(monomial.iter().cloned());
        }
        out
    }

    fn add_term(&mut self, monomial: BTreeSet<Variable>, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add(mut self, other: MultilinearPoly) -> MultilinearPoly {
        for (monomial, coeff) in other.terms {
            self.add_term(monomial, coeff);
        }
        self
    }

    fn sub(mut self, other: MultilinearPoly) -> MultilinearPoly {
        for (monomial, coeff) in other.terms {
            self.add_term(monomial, -coeff);
        }
        self
    }

    /// Multiplies by a variable not occurring in any monomial.
    fn mul_fresh_var(self, v: &Variable) -> MultilinearPoly {
        let mut out = MultilinearPoly::zero();
        for (mut monomial, coeff) in self.terms {
            let fresh = monomial.insert(v.clone());
            debug_assert!(fresh, "variable must not already occur in the monomial");
            out.terms.insert(monomial, coeff);
        }
        out
    }
}

/// Renders a coefficient plainly: integers without a denominator, otherwise "p/q".
fn coeff_string(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        c.to_string()
    }
}

impl fmt::Display for MultilinearPoly {
    /// Monomials sorted by degree, then by variable names; explicit
    /// coefficients throughout, e.g. `1*q1 + 1*q2 - 1*q1*q2`, and `0` / `1`
    /// for the constants.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut ordered: Vec<(&BTreeSet<Variable>, &Rational)> = self.terms.iter().collect();
        ordered
            .sort_by(|(a, _), (b, _)| a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter())));
        for (i, (monomial, coeff)) in ordered.into_iter().enumerate() {
            let negative = coeff.is_negative();
            let magnitude = if negative {
                -coeff.clone()
            } else {
                coeff.clone()
            };
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            f.write_str(&coeff_string(&magnitude))?;
            for v in monomial.iter() {
                write!(f, "*{}", v.name())?;
            }
        }
        Ok(())
    }
}

/// The multilinear extension of the formula's Boolean function, by Shannon
/// expansion: `P(f) = x·P(f|x=1) + (1-x)·P(f|x=0)` with `P(true) = 1`,
/// `P(false) = 0`. For every weight assignment, evaluating the result equals
/// [`crate::weight_sop`] exactly.
pub fn multilinear_of(f: &Formula) -> Result<MultilinearPoly, EvalError> {
    let vars = capped_variables(f, MAX_SYMBOLIC_VARIABLES)?;
    let index = variable_index(&vars);
    let n = vars.len();
    Ok(shannon(f, &vars, &index, n, 0, 0))
}

/// Expands over `vars[depth..]`, with `vars[..depth]` pinned by `mask`.
fn shannon(
    f: &Formula,
    vars: &[Variable],
    index: &BTreeMap<Variable, usize>,
    n: usize,
    depth: usize,
    mask: u32,
) -> MultilinearPoly {
    if depth == n {
        return if eval_row(f, index, mask, n) {
            MultilinearPoly::one()
        } else {
            MultilinearPoly::zero()
        };
    }
    let bit = 1u32 << (n - 1 - depth);
    let hi = shannon(f, vars, index, n, depth + 1, mask | bit);
    let lo = shannon(f, vars, index, n, depth + 1, mask);
    // lo + x·(hi - lo); the cofactors only mention deeper variables, so the
    // product stays multilinear.
    let swing = hi.sub(lo.clone()).mul_fresh_var(&vars[depth]);
    lo.add(swing)
}

/// Evaluates the polynomial at a weight assignment, exactly.
///
/// # Panics
///
/// Panics if the value falls outside `[0, 1]`. Polynomials produced by
/// [`multilinear_of`] always evaluate inside the unit interval on unit-interval
/// arguments; hand-built polynomials must keep the same invariant.
pub fn poly_eval(p: &MultilinearPoly, w: &WeightAssignment) -> Result<Weight, EvalError> {
    for v in p.variables() {
        if w.get(&v).is_none() {
            return Err(EvalError::MissingVariable(v));
        }
    }
    let mut total = Rational::zero();
    for (monomial, coeff) in p.terms() {
        let mut term = coeff.clone();
        for v in monomial.iter() {
            term *= w.get(v).expect("checked above").value();
        }
        total += term;
    }
    Ok(Weight::new(total).expect("polynomial value must lie in [0, 1]"))
}

/// True iff the formula's weight is identically 1: its multilinear polynomial
/// is the constant 1. Cross-validated against the truth-table check; the two
/// can only disagree on an implementation bug.
pub fn is_cfl_law(f: &Formula) -> Result<bool, EvalError> {
    let symbolic = multilinear_of(f)?.is_one();
    let table = is_tautology_bl(f)?;
    assert_eq!(
        symbolic, table,
        "symbolic and truth-table law checks disagree on {f}"
    );
    Ok(symbolic)
}

/// True iff the formula's weight is identically 0: its multilinear polynomial
/// is the zero polynomial. Cross-validated like [`is_cfl_law`].
pub fn is_cfl_contradiction(f: &Formula) -> Result<bool, EvalError> {
    let symbolic = multilinear_of(f)?.is_zero();
    let table = is_contradiction_bl(f)?;
    assert_eq!(
        symbolic, table,
        "symbolic and truth-table contradiction checks disagree on {f}"
    );
    Ok(symbolic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_formula;
    use crate::weight::parse_rational;

    fn mono(names: &[&str]) -> BTreeSet<Variable> {
        names.iter().map(|n| Variable::new(*n).unwrap()).collect()
    }

    fn poly_of(text: &str) -> MultilinearPoly {
        multilinear_of(&parse_formula(text).unwrap()).unwrap()
    }

    fn rat(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn disjunction_expands_to_inclusion_exclusion() {
        let p = poly_of("q1 | q2");
        assert_eq!(p.term_count(), 3);
        assert_eq!(p.coefficient(&mono(&["q1"])), rat(1));
        assert_eq!(p.coefficient(&mono(&["q2"])), rat(1));
        assert_eq!(p.coefficient(&mono(&["q1", "q2"])), rat(-1));
        assert_eq!(p.coefficient(&mono(&[])), rat(0));
    }

    #[test]
    fn exclusive_disjunction_doubles_the_cross_term() {
        let p = poly_of("q1 ^ q2");
        assert_eq!(p.coefficient(&mono(&["q1", "q2"])), rat(-2));
    }

    #[test]
    fn contradictions_collapse_to_zero() {
        assert!(poly_of("q1 & !q1").is_zero());
        assert!(poly_of("q1 | !q1").is_one());
    }

    #[test]
    fn rendering_is_sorted_with_explicit_coefficients() {
        assert_eq!(poly_of("q1 | q2").to_string(), "1*q1 + 1*q2 - 1*q1*q2");
        assert_eq!(poly_of("q1 -> q2").to_string(), "1 - 1*q1 + 1*q1*q2");
        assert_eq!(poly_of("q1 | !q1").to_string(), "1");
        assert_eq!(poly_of("q1 & !q1").to_string(), "0");
    }

    #[test]
    fn evaluation_matches_the_worked_number() {
        let p = poly_of("q1 | q2");
        let w: WeightAssignment = [
            (Variable::new("q1").unwrap(), Weight::parse("0.8").unwrap()),
            (Variable::new("q2").unwrap(), Weight::parse("0.6").unwrap()),
        ]
        .into_iter()
        .collect();
        assert_eq!(poly_eval(&p, &w).unwrap(), Weight::parse("0.92").unwrap());

        let xor = poly_of("q1 ^ q2");
        let half: WeightAssignment = [
            (Variable::new("q1").unwrap(), Weight::parse("1/2").unwrap()),
            (Variable::new("q2").unwrap(), Weight::parse("1/2").unwrap()),
        ]
        .into_iter()
        .collect();
        assert_eq!(
            poly_eval(&xor, &half).unwrap(),
            Weight::parse("1/2").unwrap()
        );
    }

    #[test]
    fn law_and_contradiction_checks_agree_with_tables() {
        let transitivity = parse_formula("((q1 -> q2) & (q2 -> q3)) -> (q1 -> q3)").unwrap();
        assert!(is_cfl_law(&transitivity).unwrap());
        assert!(!is_cfl_contradiction(&transitivity).unwrap());

        let xor_iff = parse_formula("!(q1 ^ q2) <-> (q1 <-> q2)").unwrap();
        assert!(is_cfl_law(&xor_iff).unwrap());

        let single = parse_formula("q1").unwrap();
        assert!(!is_cfl_law(&single).unwrap());
        assert_eq!(poly_of("q1").to_string(), "1*q1");
    }

    #[test]
    fn from_terms_sums_and_drops_zeros() {
        let p = MultilinearPoly::from_terms([
            (mono(&["q1"]), rat(2)),
            (mono(&["q1"]), rat(-2)),
            (mono(&[]), parse_rational("1/2").unwrap()),
        ]);
        assert_eq!(p.term_count(), 1);
        assert_eq!(p.coefficient(&mono(&[])), parse_rational("1/2").unwrap());
    }
}
