//! Fuzzy sets over finite universes.
//!
//! A fuzzy set attaches a membership weight to every element of a fixed
//! universe; the proposition behind each weight is "this element belongs to
//! this set". Set operations are the weight connectives applied elementwise,
//! so the universal set (all weights 1) and the empty set (all weights 0)
//! behave exactly like their classical counterparts, and crisp (0/1) sets
//! embed classical set algebra without loss ([`from_classical`] /
//! [`to_classical`]).
//!
//! Expressions over sets ([`eval_set_expression`]) evaluate by the
//! sum-of-products method with one proposition per distinct leaf set, so the
//! classical laws survive fractional weights: `C ∪ !C` is universal and
//! `C ∩ !C` empty for every `C`, and more generally [`verify_set_law`]
//! accepts every tautology under every binding of sets to its variables.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::formula::{Connective, EvalError, Formula, Variable};
use crate::weight::{
    combined_name, connective_weight, weight_sop, Weight, WeightAssignment, WeightConnective,
};

/// Errors from universe and set construction or evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetError {
    /// A universe must contain at least one element.
    EmptyUniverse,
    /// The same identifier appeared twice in a universe.
    DuplicateElement(String),
    /// An element identifier does not belong to the universe.
    UnknownElement(String),
    /// Two sets in one operation live in different universes.
    UniverseMismatch,
    /// An expression references a set name with no definition.
    UnknownSet(String),
    /// A set is not crisp: the named element's weight is strictly between 0 and 1.
    NotCrisp {
        /// Name of the offending set.
        set: String,
        /// Element whose weight is fractional.
        element: String,
    },
    /// A formula variable has no set bound to it.
    UnmappedVariable(String),
    /// Weight evaluation failed (e.g. too many variables).
    Eval(EvalError),
}

impl fmt::Display for SetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetError::EmptyUniverse => f.write_str("universe must not be empty"),
            SetError::DuplicateElement(id) => write!(f, "duplicate universe element '{id}'"),
            SetError::UnknownElement(id) => write!(f, "element '{id}' is not in the universe"),
            SetError::UniverseMismatch => f.write_str("sets belong to different universes"),
            SetError::UnknownSet(name) => write!(f, "unknown set '{name}'"),
            SetError::NotCrisp { set, element } => write!(
                f,
                "set '{set}' is not crisp: element '{element}' has a fractional weight"
            ),
            SetError::UnmappedVariable(name) => {
                write!(f, "formula variable '{name}' has no set bound to it")
            }
            SetError::Eval(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for SetError {}

impl From<EvalError> for SetError {
    fn from(e: EvalError) -> SetError {
        SetError::Eval(e)
    }
}

/// A finite universe of discourse: an ordered list of distinct element
/// identifiers. The order is fixed at creation and defines display order.
/// Cloning is cheap (shared storage); equality compares element lists.
#[derive(Clone, Debug)]
pub struct Universe {
    elements: Arc<Vec<String>>,
}

impl Universe {
    /// The element identifiers, in creation order.
    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Always false: universes are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Position of an element identifier, if present.
    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == id)
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.elements, &other.elements) || self.elements == other.elements
    }
}

impl Eq for Universe {}

/// Creates a universe from distinct, nonempty identifiers.
pub fn make_universe<I, S>(ids: I) -> Result<Universe, SetError>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let elements: Vec<String> = ids.into_iter().map(Into::into).collect();
    if elements.is_empty() {
        return Err(SetError::EmptyUniverse);
    }
    let mut seen = BTreeSet::new();
    for id in &elements {
        if !seen.insert(id.as_str()) {
            return Err(SetError::DuplicateElement(id.clone()));
        }
    }
    Ok(Universe {
        elements: Arc::new(elements),
    })
}

/// A fuzzy set: one membership weight per universe element.
///
/// The name records provenance (results are named after the expression that
/// produced them) and is ignored by equality, which compares universe and
/// weights.
#[derive(Clone, Debug)]
pub struct FuzzySet {
    universe: Universe,
    name: String,
    weights: Vec<Weight>,
}

impl PartialEq for FuzzySet {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.weights == other.weights
    }
}

impl Eq for FuzzySet {}

impl FuzzySet {
    /// The universe this set lives in.
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// The set's display name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Membership weights, aligned with `universe().elements()`.
    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// The weight of one element.
    pub fn weight_of(&self, element: &str) -> Result<&Weight, SetError> {
        let i = self
            .universe
            .index_of(element)
            .ok_or_else(|| SetError::UnknownElement(element.to_string()))?;
        Ok(&self.weights[i])
    }
}

/// The set every element fully belongs to: all weights 1.
pub fn universal_set(u: &Universe) -> FuzzySet {
    FuzzySet {
        universe: u.clone(),
        name: "U".to_string(),
        weights: alloc::vec![Weight::one(); u.len()],
    }
}

/// The set no element belongs to at all: all weights 0.
pub fn empty_set(u: &Universe) -> FuzzySet {
    FuzzySet {
        universe: u.clone(),
        name: "Empty".to_string(),
        weights: alloc::vec![Weight::zero(); u.len()],
    }
}

/// Defines a fuzzy set from a partial element-to-weight mapping; unmapped
/// elements default to weight 0 (no membership evidence). Later entries for
/// the same element overwrite earlier ones.
pub fn define_fuzzy_set<I, S>(u: &Universe, name: &str, weights: I) -> Result<FuzzySet, SetError>
where
    I: IntoIterator<Item = (S, Weight)>,
    S: AsRef<str>,
{
    let mut values = alloc::vec![Weight::zero(); u.len()];
    for (id, w) in weights {
        let i = u
            .index_of(id.as_ref())
            .ok_or_else(|| SetError::UnknownElement(id.as_ref().to_string()))?;
        values[i] = w;
    }
    Ok(FuzzySet {
        universe: u.clone(),
        name: name.to_string(),
        weights: values,
    })
}

/// Elementwise complement: each weight becomes `1 - w`. An involution.
pub fn complement_set(s: &FuzzySet) -> FuzzySet {
    FuzzySet {
        universe: s.universe.clone(),
        name: format!("!{}", s.name),
        weights: s.weights.iter().map(Weight::complement).collect(),
    }
}

/// Applies a weight connective elementwise to two sets over one universe.
/// The result is named `"(<a> <op> <b>)"`.
///
/// The operands are treated as independent propositions (the closed forms
/// of [`connective_weight`]); this is the right notion for two different
/// sets, but expressions in which one set appears twice must go through
/// [`eval_set_expression`], which shares the repeated proposition.
pub fn apply_connective_set(
    c: WeightConnective,
    a: &FuzzySet,
    b: &FuzzySet,
) -> Result<FuzzySet, SetError> {
    if a.universe != b.universe {
        return Err(SetError::UniverseMismatch);
    }
    let weights = a
        .weights
        .iter()
        .zip(&b.weights)
        .map(|(x, y)| connective_weight(c, x, y))
        .collect();
    Ok(FuzzySet {
        universe: a.universe.clone(),
        name: combined_name(c, &a.name, &b.name),
        weights,
    })
}

/// True iff every weight is exactly 1.
pub fn is_universal_set(s: &FuzzySet) -> bool {
    s.weights.iter().all(Weight::is_one)
}

/// True iff every weight is exactly 0.
pub fn is_empty_set(s: &FuzzySet) -> bool {
    s.weights.iter().all(Weight::is_zero)
}

/// An expression tree over fuzzy sets.
///
/// Leaves are fuzzy sets; nodes are the eight set operations, with both
/// implication directions as distinct node kinds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetExpression {
    /// A set itself.
    Leaf(FuzzySet),
    /// Complement of a subexpression.
    Complement(Box<SetExpression>),
    /// Union (inclusive disjunction of memberships).
    Union(Box<SetExpression>, Box<SetExpression>),
    /// Intersection (conjunction of memberships).
    Intersection(Box<SetExpression>, Box<SetExpression>),
    /// Exclusive union (exclusive disjunction of memberships).
    ExclusiveUnion(Box<SetExpression>, Box<SetExpression>),
    /// Left-to-right material implication of memberships.
    Implication(Box<SetExpression>, Box<SetExpression>),
    /// Right-to-left (converse) material implication of memberships.
    ImpliedBy(Box<SetExpression>, Box<SetExpression>),
    /// Biconditional of memberships.
    Biconditional(Box<SetExpression>, Box<SetExpression>),
    /// Negated intersection.
    Nand(Box<SetExpression>, Box<SetExpression>),
    /// Negated union.
    Nor(Box<SetExpression>, Box<SetExpression>),
}

impl SetExpression {
    /// Builds a set expression from a parsed formula, resolving each variable
    /// to a named set. The formula grammar doubles as the set-expression
    /// grammar: `|` union, `&` intersection, `^` exclusive union, `->`
    /// implication, `<->` biconditional, `!&` nand, `!|` nor, `!` complement.
    pub fn from_formula(
        f: &Formula,
        sets: &BTreeMap<String, FuzzySet>,
    ) -> Result<SetExpression, SetError> {
        Ok(match f {
            Formula::Var(v) => {
                let set = sets
                    .get(v.name())
                    .ok_or_else(|| SetError::UnknownSet(v.name().to_string()))?;
                SetExpression::Leaf(set.clone())
            }
            Formula::Not(g) => {
                SetExpression::Complement(Box::new(SetExpression::from_formula(g, sets)?))
            }
            Formula::Bin(c, a, b) => {
                let a = Box::new(SetExpression::from_formula(a, sets)?);
                let b = Box::new(SetExpression::from_formula(b, sets)?);
                match WeightConnective::from(*c) {
                    WeightConnective::Or => SetExpression::Union(a, b),
                    WeightConnective::And => SetExpression::Intersection(a, b),
                    WeightConnective::Xor => SetExpression::ExclusiveUnion(a, b),
                    WeightConnective::Imp => SetExpression::Implication(a, b),
                    WeightConnective::Iff => SetExpression::Biconditional(a, b),
                    WeightConnective::Nand => SetExpression::Nand(a, b),
                    WeightConnective::Nor => SetExpression::Nor(a, b),
                    WeightConnective::ConverseImp => unreachable!("no formula token maps here"),
                }
            }
        })
    }
}

/// Interns each distinct leaf set as one proposition. Two leaves are the
/// same proposition iff they carry the same name *and* the same weights;
/// distinct sets that happen to share a weight vector stay independent.
#[derive(Default)]
struct LeafTable {
    sets: Vec<FuzzySet>,
    index: BTreeMap<(String, Vec<Weight>), usize>,
}

impl LeafTable {
    fn variable_for(&mut self, s: &FuzzySet) -> Variable {
        let key = (s.name.clone(), s.weights.clone());
        let i = match self.index.get(&key) {
            Some(&i) => i,
            None => {
                let i = self.sets.len();
                self.sets.push(s.clone());
                self.index.insert(key, i);
                i
            }
        };
        synthetic_variable(i)
    }
}

fn synthetic_variable(i: usize) -> Variable {
    Variable::new(&format!("v{}", i + 1)).expect("synthetic names are valid identifiers")
}

/// Rewrites an expression as a formula over one synthetic variable per
/// distinct leaf, plus the display name of the result.
fn expression_formula(e: &SetExpression, leaves: &mut LeafTable) -> (Formula, String) {
    let binary = |c: Connective,
                  wc: WeightConnective,
                  a: &SetExpression,
                  b: &SetExpression,
                  leaves: &mut LeafTable| {
        let (fa, na) = expression_formula(a, leaves);
        let (fb, nb) = expression_formula(b, leaves);
        (Formula::bin(c, fa, fb), combined_name(wc, &na, &nb))
    };
    match e {
        SetExpression::Leaf(s) => (Formula::Var(leaves.variable_for(s)), s.name.clone()),
        SetExpression::Complement(inner) => {
            let (f, n) = expression_formula(inner, leaves);
            (Formula::not(f), format!("!{n}"))
        }
        SetExpression::Union(a, b) => binary(Connective::Or, WeightConnective::Or, a, b, leaves),
        SetExpression::Intersection(a, b) => {
            binary(Connective::And, WeightConnective::And, a, b, leaves)
        }
        SetExpression::ExclusiveUnion(a, b) => {
            binary(Connective::Xor, WeightConnective::Xor, a, b, leaves)
        }
        SetExpression::Implication(a, b) => {
            binary(Connective::Imp, WeightConnective::Imp, a, b, leaves)
        }
        SetExpression::ImpliedBy(a, b) => {
            // `a implied-by b` is material implication read right to left.
            let (fa, na) = expression_formula(a, leaves);
            let (fb, nb) = expression_formula(b, leaves);
            (
                Formula::bin(Connective::Imp, fb, fa),
                combined_name(WeightConnective::ConverseImp, &na, &nb),
            )
        }
        SetExpression::Biconditional(a, b) => {
            binary(Connective::Iff, WeightConnective::Iff, a, b, leaves)
        }
        SetExpression::Nand(a, b) => binary(Connective::Nand, WeightConnective::Nand, a, b, leaves),
        SetExpression::Nor(a, b) => binary(Connective::Nor, WeightConnective::Nor, a, b, leaves),
    }
}

/// Evaluates a set expression.
///
/// Each *distinct* leaf set is one proposition, so an expression is
/// evaluated per element by the sum-of-products method over the distinct
/// leaves — never by composing closed forms, which would treat a repeated
/// operand as an independent one. `C ∪ !C` is therefore universal and
/// `C ∩ !C` empty for every fuzzy set `C`, exactly as for crisp sets. When
/// all leaves are distinct the result agrees with folding
/// [`apply_connective_set`] / [`complement_set`] over the tree.
pub fn eval_set_expression(e: &SetExpression) -> Result<FuzzySet, SetError> {
    let mut leaves = LeafTable::default();
    let (formula, name) = expression_formula(e, &mut leaves);
    let universe = leaves.sets[0].universe.clone();
    if leaves.sets.iter().any(|s| s.universe != universe) {
        return Err(SetError::UniverseMismatch);
    }
    let vars: Vec<Variable> = (0..leaves.sets.len()).map(synthetic_variable).collect();
    let mut weights = Vec::with_capacity(universe.len());
    for i in 0..universe.len() {
        let assignment: WeightAssignment = vars
            .iter()
            .cloned()
            .zip(leaves.sets.iter().map(|s| s.weights[i].clone()))
            .collect();
        weights.push(weight_sop(&formula, &assignment)?);
    }
    Ok(FuzzySet {
        universe,
        name,
        weights,
    })
}

/// Checks that a formula holds with weight exactly 1 at every element when
/// its variables are interpreted as the given sets' membership weights.
///
/// For a classical tautology this returns true for *every* choice of sets:
/// laws lift from propositions to sets, and the derived set is universal.
pub fn verify_set_law(
    f: &Formula,
    bindings: &BTreeMap<Variable, FuzzySet>,
) -> Result<bool, SetError> {
    let vars: Vec<Variable> = f.variables().into_iter().collect();
    let mut universe: Option<&Universe> = None;
    for (_, set) in bindings.iter() {
        match universe {
            None => universe = Some(set.universe()),
            Some(u) => {
                if *u != *set.universe() {
                    return Err(SetError::UniverseMismatch);
                }
            }
        }
    }
    for v in &vars {
        if !bindings.contains_key(v) {
            return Err(SetError::UnmappedVariable(v.name().to_string()));
        }
    }
    let Some(universe) = universe else {
        // No bindings: the formula must have no variables, which the Formula
        // type rules out; treat as vacuously universal.
        return Ok(true);
    };
    for i in 0..universe.len() {
        let assignment: WeightAssignment = vars
            .iter()
            .map(|v| (v.clone(), bindings[v].weights()[i].clone()))
            .collect();
        if !weight_sop(f, &assignment)?.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Embeds a classical set: members get weight 1, everything else 0.
pub fn from_classical<I, S>(u: &Universe, name: &str, members: I) -> Result<FuzzySet, SetError>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    define_fuzzy_set(u, name, members.into_iter().map(|id| (id, Weight::one())))
}

/// Extracts the member list of a crisp set (every weight exactly 0 or 1), in
/// universe order. Errs on the first fractional weight, naming the element.
pub fn to_classical(s: &FuzzySet) -> Result<Vec<String>, SetError> {
    let mut members = Vec::new();
    for (element, weight) in s.universe.elements().iter().zip(&s.weights) {
        if weight.is_one() {
            members.push(element.clone());
        } else if !weight.is_zero() {
            return Err(SetError::NotCrisp {
                set: s.name.clone(),
                element: element.clone(),
            });
        }
    }
    Ok(members)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u5() -> Universe {
        make_universe(["x1", "x2", "x3", "x4", "x5"]).unwrap()
    }

    fn w(text: &str) -> Weight {
        Weight::parse(text).unwrap()
    }

    /// The two worked five-element sets used across the suite.
    fn c1(u: &Universe) -> FuzzySet {
        define_fuzzy_set(u, "C1", [("x2", w("1")), ("x5", w("0.4"))]).unwrap()
    }

    fn c2(u: &Universe) -> FuzzySet {
        define_fuzzy_set(
            u,
            "C2",
            [
                ("x1", w("0.9")),
                ("x2", w("0.8")),
                ("x3", w("0.7")),
                ("x5", w("0.6")),
            ],
        )
        .unwrap()
    }

    fn weight_texts(s: &FuzzySet) -> Vec<String> {
        s.weights().iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn universe_construction_validates_inputs() {
        assert_eq!(
            make_universe(Vec::<String>::new()),
            Err(SetError::EmptyUniverse)
        );
        assert_eq!(
            make_universe(["a", "b", "a"]),
            Err(SetError::DuplicateElement("a".to_string()))
        );
        let u = u5();
        assert_eq!(u.len(), 5);
        assert_eq!(u.index_of("x3"), Some(2));
        assert_eq!(u.index_of("y"), None);
    }

    #[test]
    fn universal_and_empty_are_complements() {
        let u = u5();
        let top = universal_set(&u);
        let bottom = empty_set(&u);
        assert!(is_universal_set(&top));
        assert!(is_empty_set(&bottom));
        assert_eq!(complement_set(&top), bottom);
        assert_eq!(complement_set(&bottom), top);
    }

    #[test]
    fn definition_defaults_unmapped_elements_to_zero() {
        let u = u5();
        let set = c1(&u);
        assert_eq!(weight_texts(&set), ["0", "1", "0", "0", "0.4"]);
        assert!(define_fuzzy_set(&u, "bad", [("y9", w("1"))]).is_err());
        let empty = define_fuzzy_set(&u, "none", Vec::<(&str, Weight)>::new()).unwrap();
        assert!(is_empty_set(&empty));
    }

    #[test]
    fn complement_matches_the_worked_vectors() {
        let u = u5();
        assert_eq!(
            weight_texts(&complement_set(&c1(&u))),
            ["1", "0", "1", "1", "0.6"]
        );
        assert_eq!(
            weight_texts(&complement_set(&c2(&u))),
            ["0.1", "0.2", "0.3", "1", "0.4"]
        );
        assert_eq!(complement_set(&complement_set(&c1(&u))), c1(&u));
    }

    #[test]
    fn connectives_apply_elementwise() {
        let u = u5();
        let union = apply_connective_set(WeightConnective::Or, &c1(&u), &c2(&u)).unwrap();
        assert_eq!(union.name(), "(C1 | C2)");
        assert_eq!(weight_texts(&union), ["0.9", "1", "0.7", "0", "0.76"]);

        let xunion = apply_connective_set(WeightConnective::Xor, &c1(&u), &c2(&u)).unwrap();
        assert_eq!(weight_texts(&xunion)[4], "0.52");

        let by = apply_connective_set(WeightConnective::ConverseImp, &c1(&u), &c2(&u)).unwrap();
        assert_eq!(by.name(), "(C2 -> C1)");
        assert_eq!(weight_texts(&by)[4], "0.64");

        let other = make_universe(["z1"]).unwrap();
        let lone = universal_set(&other);
        assert_eq!(
            apply_connective_set(WeightConnective::Or, &c1(&u), &lone),
            Err(SetError::UniverseMismatch)
        );
    }

    #[test]
    fn expressions_share_repeated_operands() {
        let u = u5();
        let env: BTreeMap<String, FuzzySet> =
            [("C1".to_string(), c1(&u)), ("C2".to_string(), c2(&u))]
                .into_iter()
                .collect();
        let parse = |text: &str| {
            let f = crate::parser::parse_formula(text).unwrap();
            SetExpression::from_formula(&f, &env).unwrap()
        };
        // A set meets and joins itself classically, whatever its weights.
        assert!(is_universal_set(
            &eval_set_expression(&parse("C1 | !C1")).unwrap()
        ));
        assert!(is_empty_set(
            &eval_set_expression(&parse("C2 & !C2")).unwrap()
        ));
        assert!(is_universal_set(
            &eval_set_expression(&parse("((C1 -> C2) & C1) -> C2")).unwrap()
        ));
        // On distinct leaves the expression matches the elementwise operation.
        let union = eval_set_expression(&parse("C1 | C2")).unwrap();
        assert_eq!(
            union,
            apply_connective_set(WeightConnective::Or, &c1(&u), &c2(&u)).unwrap()
        );
        assert_eq!(union.name(), "(C1 | C2)");
        let f = crate::parser::parse_formula("C3 | C1").unwrap();
        assert_eq!(
            SetExpression::from_formula(&f, &env),
            Err(SetError::UnknownSet("C3".to_string()))
        );
    }

    #[test]
    fn laws_lift_to_sets() {
        let u = u5();
        let de_morgan = crate::parser::parse_formula("!(v1 & v2) <-> (!v1 | !v2)").unwrap();
        let bindings: BTreeMap<Variable, FuzzySet> = [
            (Variable::new("v1").unwrap(), c1(&u)),
            (Variable::new("v2").unwrap(), c2(&u)),
        ]
        .into_iter()
        .collect();
        assert!(verify_set_law(&de_morgan, &bindings).unwrap());

        let contingent = crate::parser::parse_formula("v1").unwrap();
        let single: BTreeMap<Variable, FuzzySet> = [(Variable::new("v1").unwrap(), c1(&u))]
            .into_iter()
            .collect();
        assert!(!verify_set_law(&contingent, &single).unwrap());

        let unmapped = crate::parser::parse_formula("v1 | v9").unwrap();
        assert_eq!(
            verify_set_law(&unmapped, &single),
            Err(SetError::UnmappedVariable("v9".to_string()))
        );
    }

    #[test]
    fn classical_embedding_round_trips() {
        let u = make_universe(["x1", "x2", "x3", "x4", "x5", "x6", "x7"]).unwrap();
        let a = from_classical(&u, "A", ["x2", "x3", "x5", "x7"]).unwrap();
        let b = from_classical(&u, "B", ["x1", "x2", "x4", "x7"]).unwrap();
        assert_eq!(to_classical(&a).unwrap(), ["x2", "x3", "x5", "x7"]);

        let union = apply_connective_set(WeightConnective::Or, &a, &b).unwrap();
        assert_eq!(
            to_classical(&union).unwrap(),
            ["x1", "x2", "x3", "x4", "x5", "x7"]
        );
        let meet = apply_connective_set(WeightConnective::And, &a, &b).unwrap();
        assert_eq!(to_classical(&meet).unwrap(), ["x2", "x7"]);
        let sym = apply_connective_set(WeightConnective::Xor, &a, &b).unwrap();
        assert_eq!(to_classical(&sym).unwrap(), ["x1", "x3", "x4", "x5"]);

        let u5 = u5();
        let fuzzy = c1(&u5);
        assert_eq!(
            to_classical(&fuzzy),
            Err(SetError::NotCrisp {
                set: "C1".to_string(),
                element: "x5".to_string(),
            })
        );
    }
}
