//! A registry of the standard propositional laws.
//!
//! Seven classical laws (with the De Morgan pair stored as two entries):
//! excluded middle, non-contradiction, modus ponens, modus tollens, both
//! De Morgan laws, the equivalence of negated exclusive disjunction with the
//! biconditional, and transitivity of implication. Every entry is a classical
//! tautology, so each has weight identically 1 and its negation identically 0.

use alloc::vec::Vec;

use crate::formula::Formula;
use crate::parser::parse_formula;

/// Named catalogue of law formulas, in a fixed order.
#[derive(Clone, Debug)]
pub struct LawRegistry {
    entries: Vec<(&'static str, Formula)>,
}

const LAW_DEFINITIONS: [(&str, &str); 8] = [
    ("excluded middle", "q1 | !q1"),
    ("non-contradiction", "!(q1 & !q1)"),
    ("modus ponens", "((q1 -> q2) & q1) -> q2"),
    ("modus tollens", "((q1 -> q2) & !q2) -> !q1"),
    (
        "De Morgan (negated conjunction)",
        "!(q1 & q2) <-> (!q1 | !q2)",
    ),
    (
        "De Morgan (negated disjunction)",
        "!(q1 | q2) <-> (!q1 & !q2)",
    ),
    (
        "negated exclusive disjunction is the biconditional",
        "!(q1 ^ q2) <-> (q1 <-> q2)",
    ),
    (
        "transitivity of implication",
        "((q1 -> q2) & (q2 -> q3)) -> (q1 -> q3)",
    ),
];

impl LawRegistry {
    /// Builds the standard registry.
    pub fn standard() -> LawRegistry {
        LawRegistry {
            entries: LAW_DEFINITIONS
                .iter()
                .map(|(name, text)| {
                    let f = parse_formula(text).expect("registry formulas are well-formed");
                    (*name, f)
                })
                .collect(),
        }
    }

    /// Iterates over `(name, formula)` entries in registry order.
    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &Formula)> {
        self.entries.iter().map(|(name, f)| (*name, f))
    }

    /// Looks a law up by name.
    pub fn get(&self, name: &str) -> Option<&Formula> {
        self.entries
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, f)| f)
    }

    /// Number of registered laws.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Always false: the standard registry is nonempty.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
