//! Canonical fuzzy logic (CFL) over exact rational arithmetic.
//!
//! A propositional formula's *weight of truth* is the sum, over the rows of
//! its truth table on which the formula is true, of the product of per-variable
//! literal weights: `w(v)` where the row sets `v` to 1, `1 - w(v)` where it
//! sets `v` to 0. Classical bivalent logic is the exact 0/1 special case, and
//! classical set algebra falls out of the same arithmetic on crisp sets.
//!
//! The crate is organised around that one definition:
//!
//! - [`formula`]: propositional syntax — parsing, printing, classical
//!   evaluation, and truth tables.
//! - [`weight`]: exact truth weights, the sum-of-products evaluator, and the
//!   closed-form connective equations.
//! - [`poly`]: multilinear polynomials; a formula's weight as a symbolic
//!   polynomial, which certifies laws (identically 1) and contradictions
//!   (identically 0).
//! - [`laws`]: a registry of the standard propositional laws.
//! - [`sets`]: fuzzy sets over finite universes and the eight set operations.
//! - [`piecewise`]: piecewise-polynomial membership functions over a real
//!   interval, closed under all connectives.
//!
//! All arithmetic is exact (`BigRational`); there are no tolerances anywhere.
//! The crate is `no_std` (requires `alloc`); I/O and file formats live in the
//! companion CLI crate.

#![cfg_attr(not(test), no_std)]
#![warn(missing_docs)]

extern crate alloc;

pub mod formula;
pub mod laws;
pub mod parser;
pub mod piecewise;
pub mod poly;
pub mod sets;
pub mod weight;

pub use formula::{
    eval_bl, format_formula, is_contradiction_bl, is_tautology_bl, truth_table, Assignment,
    Connective, EvalError, Formula, TruthTable, Variable,
};
pub use laws::LawRegistry;
pub use parser::{parse_formula, ParseError};
pub use piecewise::{
    pw_combine, pw_complement, pw_eval, pw_from_formula, pw_from_segments, pw_range_check,
    pw_sample, PiecewiseFn, PolySegment, PwError, RangeViolation,
};
pub use poly::{is_cfl_contradiction, is_cfl_law, multilinear_of, poly_eval, MultilinearPoly};
pub use sets::{
    apply_connective_set, complement_set, define_fuzzy_set, empty_set, eval_set_expression,
    from_classical, is_empty_set, is_universal_set, make_universe, to_classical, universal_set,
    verify_set_law, FuzzySet, SetError, SetExpression, Universe,
};
pub use weight::{
    connective_weight, law_product_identity, negation_weight, parse_rational, render_exact,
    weight_sop, zadeh_weight, Rational, Weight, WeightAssignment, WeightConnective, WeightError,
    ZadehOp,
};
