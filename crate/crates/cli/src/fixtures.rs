//! The embedded regression suite behind the `paper` subcommand: every worked
//! example the engine is pinned to, from parser trees through weights,
//! polynomials, set vectors, and piecewise membership curves.
//!
//! Each fixture is a named deterministic check; the suite prints one
//! `PASS`/`FAIL` line per fixture in a fixed order, so repeated runs are
//! byte-identical. The `corrupt` flag deliberately falsifies one expected
//! value to demonstrate that mismatches are reported (harness self-test).

use std::collections::{BTreeMap, BTreeSet};

use cfl_core::{
    apply_connective_set, define_fuzzy_set, empty_set, eval_bl, eval_set_expression,
    format_formula, from_classical, is_contradiction_bl, is_empty_set, is_tautology_bl,
    is_universal_set, law_product_identity, make_universe, multilinear_of, parse_formula,
    parse_rational, poly_eval, pw_combine, pw_eval, pw_from_formula, pw_from_segments, pw_sample,
    render_exact, to_classical, truth_table, universal_set, verify_set_law, weight_sop,
    zadeh_weight, Assignment, Connective, Formula, FuzzySet, LawRegistry, PiecewiseFn, PolySegment,
    Rational, SetExpression, Universe, Variable, Weight, WeightAssignment, WeightConnective,
    ZadehOp,
};

use crate::render::weight_line;

type Check = Result<(), String>;
type FixtureFn = fn(bool) -> Check;

/// Runs every fixture and formats the report; the exit code is 0 iff all
/// fixtures pass.
pub fn run_suite(corrupt: bool) -> (String, u8) {
    let mut out = String::new();
    let mut failed = 0usize;
    for (id, run) in FIXTURES {
        match run(corrupt) {
            Ok(()) => {
                out.push_str("PASS ");
                out.push_str(id);
                out.push('\n');
            }
            Err(detail) => {
                failed += 1;
                out.push_str(&format!("FAIL {id}: {detail}\n"));
            }
        }
    }
    out.push_str(&format!(
        "{} checked, {} passed, {} failed\n",
        FIXTURES.len(),
        FIXTURES.len() - failed,
        failed
    ));
    (out, if failed == 0 { 0 } else { 1 })
}

const FIXTURES: &[(&str, FixtureFn)] = &[
    // Formulas, classical evaluation, truth tables.
    ("parse-connective-precedence", parse_connective_precedence),
    ("parse-double-negation", parse_double_negation),
    ("format-nested-implication", format_nested_implication),
    (
        "classical-implication-rejects-true-to-false",
        classical_implication_rejects_true_to_false,
    ),
    (
        "classical-exclusive-or-rejects-agreement",
        classical_exclusive_or_rejects_agreement,
    ),
    (
        "classical-excluded-middle-holds",
        classical_excluded_middle_holds,
    ),
    (
        "truth-table-conjunction-column",
        truth_table_conjunction_column,
    ),
    (
        "truth-table-joint-denial-column",
        truth_table_joint_denial_column,
    ),
    (
        "truth-table-exclusive-or-column",
        truth_table_exclusive_or_column,
    ),
    (
        "truth-table-alternative-denial-column",
        truth_table_alternative_denial_column,
    ),
    (
        "truth-table-single-variable-rows",
        truth_table_single_variable_rows,
    ),
    ("tautology-modus-tollens", tautology_modus_tollens),
    ("contradiction-self-denial", contradiction_self_denial),
    // Weights of truth.
    (
        "disjunction-weight-sum-of-products",
        disjunction_weight_sum_of_products,
    ),
    ("conjunction-weight-product", conjunction_weight_product),
    (
        "excluded-middle-weight-is-one",
        excluded_middle_weight_is_one,
    ),
    ("implication-closed-form", implication_closed_form),
    ("joint-denial-closed-form", joint_denial_closed_form),
    (
        "alternative-denial-closed-form",
        alternative_denial_closed_form,
    ),
    (
        "product-identity-single-factor",
        product_identity_single_factor,
    ),
    (
        "product-identity-three-factors",
        product_identity_three_factors,
    ),
    ("product-identity-chain", product_identity_chain),
    ("zadeh-max-min-baseline", zadeh_max_min_baseline),
    // Multilinear polynomials and law certification.
    (
        "disjunction-polynomial-coefficients",
        disjunction_polynomial_coefficients,
    ),
    (
        "exclusive-disjunction-polynomial-coefficients",
        exclusive_disjunction_polynomial_coefficients,
    ),
    (
        "disjunction-polynomial-evaluation",
        disjunction_polynomial_evaluation,
    ),
    (
        "hypothetical-syllogism-is-law",
        hypothetical_syllogism_is_law,
    ),
    (
        "negated-exclusive-disjunction-matches-biconditional",
        negated_exclusive_disjunction_matches_biconditional,
    ),
    (
        "registry-laws-certify-symbolically",
        registry_laws_certify_symbolically,
    ),
    (
        "registry-law-negations-are-contradictions",
        registry_law_negations_are_contradictions,
    ),
    (
        "registry-laws-hold-on-rational-grid",
        registry_laws_hold_on_rational_grid,
    ),
    (
        "law-verdict-polynomial-rendering",
        law_verdict_polynomial_rendering,
    ),
    // Fuzzy sets over a finite universe.
    (
        "universal-set-weights-are-one",
        universal_set_weights_are_one,
    ),
    ("empty-set-weights-are-zero", empty_set_weights_are_zero),
    (
        "partial-definition-defaults-to-zero",
        partial_definition_defaults_to_zero,
    ),
    (
        "set-definition-matches-listed-weights",
        set_definition_matches_listed_weights,
    ),
    ("set-complement-vector", set_complement_vector),
    (
        "universal-complement-is-empty",
        universal_complement_is_empty,
    ),
    ("second-set-complement-vector", second_set_complement_vector),
    ("set-union-vector", set_union_vector),
    ("set-intersection-vector", set_intersection_vector),
    ("set-exclusive-union-vector", set_exclusive_union_vector),
    ("set-implication-vector", set_implication_vector),
    (
        "set-converse-implication-vector",
        set_converse_implication_vector,
    ),
    ("set-biconditional-vector", set_biconditional_vector),
    (
        "set-alternative-denial-vector",
        set_alternative_denial_vector,
    ),
    ("set-joint-denial-vector", set_joint_denial_vector),
    (
        "union-with-complement-is-universal",
        union_with_complement_is_universal,
    ),
    (
        "intersection-with-complement-is-empty",
        intersection_with_complement_is_empty,
    ),
    ("modus-ponens-lifts-to-sets", modus_ponens_lifts_to_sets),
    (
        "partial-membership-is-neither-universal-nor-empty",
        partial_membership_is_neither_universal_nor_empty,
    ),
    ("de-morgan-verifies-over-sets", de_morgan_verifies_over_sets),
    (
        "excluded-middle-verifies-over-sets",
        excluded_middle_verifies_over_sets,
    ),
    ("crisp-union-round-trip", crisp_union_round_trip),
    (
        "crisp-intersection-round-trip",
        crisp_intersection_round_trip,
    ),
    (
        "crisp-exclusive-union-round-trip",
        crisp_exclusive_union_round_trip,
    ),
    (
        "crisp-pairs-agree-with-bit-algebra",
        crisp_pairs_agree_with_bit_algebra,
    ),
    // Piecewise polynomial membership functions.
    (
        "triangle-membership-constructs",
        triangle_membership_constructs,
    ),
    (
        "plateau-membership-constructs",
        plateau_membership_constructs,
    ),
    ("triangle-peak-value", triangle_peak_value),
    ("plateau-left-edge-is-closed", plateau_left_edge_is_closed),
    (
        "constant-membership-stays-one",
        constant_membership_stays_one,
    ),
    (
        "membership-union-branch-polynomials",
        membership_union_branch_polynomials,
    ),
    (
        "membership-intersection-branch-polynomials",
        membership_intersection_branch_polynomials,
    ),
    (
        "membership-union-sample-values",
        membership_union_sample_values,
    ),
    (
        "membership-intersection-sample-values",
        membership_intersection_sample_values,
    ),
    ("plateau-sample-grid", plateau_sample_grid),
    (
        "complement-of-constant-one-is-zero",
        complement_of_constant_one_is_zero,
    ),
    // Command-line rendering contracts.
    (
        "weight-lines-render-rational-and-decimal",
        weight_lines_render_rational_and_decimal,
    ),
];

// ---------------------------------------------------------------------------
// Small helpers: embedded literals are trusted; checks report mismatches.
// ---------------------------------------------------------------------------

fn pf(text: &str) -> Formula {
    parse_formula(text).expect("embedded formula is well-formed")
}

fn w(text: &str) -> Weight {
    Weight::parse(text).expect("embedded weight literal is valid")
}

fn r(text: &str) -> Rational {
    parse_rational(text).expect("embedded rational literal is valid")
}

fn v(name: &str) -> Variable {
    Variable::new(name).expect("embedded variable name is valid")
}

fn wa(pairs: &[(&str, &str)]) -> WeightAssignment {
    pairs
        .iter()
        .map(|(name, text)| (v(name), w(text)))
        .collect()
}

fn sop(text: &str, pairs: &[(&str, &str)]) -> Result<Weight, String> {
    weight_sop(&pf(text), &wa(pairs)).map_err(|e| e.to_string())
}

fn ok(cond: bool, what: &str) -> Check {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn eq_str(what: &str, got: &str, want: &str) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: expected {want}, computed {got}"))
    }
}

fn eq_usize(what: &str, got: usize, want: usize) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: expected {want}, computed {got}"))
    }
}

fn eq_weight(what: &str, got: &Weight, want: &str) -> Check {
    let expected = w(want);
    if *got == expected {
        Ok(())
    } else {
        Err(format!("{what}: expected {expected}, computed {got}"))
    }
}

fn eq_rational(what: &str, got: &Rational, want: &str) -> Check {
    let expected = r(want);
    if *got == expected {
        Ok(())
    } else {
        Err(format!(
            "{what}: expected {}, computed {}",
            render_exact(&expected),
            render_exact(got)
        ))
    }
}

/// The output column of a formula's truth table as a 0/1 string, row 0 first.
fn column(text: &str) -> Result<String, String> {
    let table = truth_table(&pf(text)).map_err(|e| e.to_string())?;
    Ok(table
        .outputs()
        .iter()
        .map(|&b| if b { '1' } else { '0' })
        .collect())
}

fn eq_set(what: &str, got: &FuzzySet, want: &[&str]) -> Check {
    for (i, (id, expected)) in got
        .universe()
        .elements()
        .iter()
        .zip(want.iter())
        .enumerate()
    {
        let expected = w(expected);
        let actual = &got.weights()[i];
        if *actual != expected {
            return Err(format!(
                "{what}, element {id}: expected {expected}, computed {actual}"
            ));
        }
    }
    eq_usize(
        &format!("{what}, universe size"),
        got.weights().len(),
        want.len(),
    )
}

fn monomial(names: &[&str]) -> BTreeSet<Variable> {
    names.iter().map(|n| v(n)).collect()
}

fn bl(text: &str, pairs: &[(&str, bool)]) -> Result<bool, String> {
    let mut a = Assignment::new();
    for (name, bit) in pairs {
        a.set(v(name), *bit);
    }
    eval_bl(&pf(text), &a).map_err(|e| e.to_string())
}

// The five-element worked universe with its two partially-weighted sets.

fn five_universe() -> Universe {
    make_universe(["x1", "x2", "x3", "x4", "x5"]).expect("embedded universe is valid")
}

fn set_c1(u: &Universe) -> FuzzySet {
    define_fuzzy_set(u, "C1", [("x2", w("1")), ("x5", w("0.4"))])
        .expect("embedded set definition is valid")
}

fn set_c2(u: &Universe) -> FuzzySet {
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
    .expect("embedded set definition is valid")
}

/// Evaluates a set expression over the worked pair {C1, C2}.
fn pair_expr(text: &str) -> Result<FuzzySet, String> {
    let u = five_universe();
    let sets = BTreeMap::from([
        ("C1".to_string(), set_c1(&u)),
        ("C2".to_string(), set_c2(&u)),
    ]);
    let expr = SetExpression::from_formula(&pf(text), &sets).map_err(|e| e.to_string())?;
    eval_set_expression(&expr).map_err(|e| e.to_string())
}

// The worked interval domain [0, 10] with its three membership functions.

fn seg(lo: &str, hi: &str, lo_closed: bool, coeffs: &[&str]) -> PolySegment {
    PolySegment::new(
        r(lo),
        r(hi),
        lo_closed,
        coeffs.iter().map(|c| r(c)).collect(),
    )
    .expect("embedded segment is valid")
}

fn triangle() -> PiecewiseFn {
    pw_from_segments(
        (r("0"), r("10")),
        "C1",
        vec![
            seg("0", "5", true, &["0", "1/5"]),
            seg("5", "10", true, &["2", "-1/5"]),
        ],
    )
    .expect("embedded membership function is valid")
}

fn plateau() -> PiecewiseFn {
    pw_from_segments(
        (r("0"), r("10")),
        "C2",
        vec![
            seg("0", "3", true, &["0"]),
            seg("3", "7", true, &["4/5"]),
            seg("7", "10", true, &["0"]),
        ],
    )
    .expect("embedded membership function is valid")
}

fn constant_one() -> PiecewiseFn {
    pw_from_segments((r("0"), r("10")), "U", vec![seg("0", "10", true, &["1"])])
        .expect("embedded membership function is valid")
}

fn eq_coeffs(what: &str, got: &[Rational], want: &[&str]) -> Check {
    let expected: Vec<Rational> = want.iter().map(|c| r(c)).collect();
    if got == expected.as_slice() {
        Ok(())
    } else {
        let render = |cs: &[Rational]| cs.iter().map(render_exact).collect::<Vec<_>>().join(", ");
        Err(format!(
            "{what}: expected [{}], computed [{}]",
            render(&expected),
            render(got)
        ))
    }
}

fn pw_value(f: &PiecewiseFn, x: &str) -> Result<Rational, String> {
    pw_eval(f, &r(x)).map_err(|e| e.to_string())
}

// ---------------------------------------------------------------------------
// Formulas, classical evaluation, truth tables.
// ---------------------------------------------------------------------------

fn parse_connective_precedence(_corrupt: bool) -> Check {
    eq_str(
        "parse and re-render",
        &format_formula(&pf("(q1 | q2) ^ (q1 -> q3)")),
        "((q1 | q2) ^ (q1 -> q3))",
    )
}

fn parse_double_negation(_corrupt: bool) -> Check {
    let f = pf("!!q1");
    let shape = matches!(
        &f,
        Formula::Not(g) if matches!(&**g, Formula::Not(h) if matches!(&**h, Formula::Var(_)))
    );
    ok(shape, "two stacked negation nodes over a variable")?;
    eq_str("rendering", &format_formula(&f), "!!q1")
}

fn format_nested_implication(_corrupt: bool) -> Check {
    let f = Formula::bin(
        Connective::Imp,
        Formula::bin(
            Connective::And,
            Formula::bin(Connective::Imp, Formula::var("q1"), Formula::var("q2")),
            Formula::var("q1"),
        ),
        Formula::var("q2"),
    );
    eq_str(
        "rendering",
        &format_formula(&f),
        "(((q1 -> q2) & q1) -> q2)",
    )
}

fn classical_implication_rejects_true_to_false(_corrupt: bool) -> Check {
    ok(
        !bl("q1 -> q2", &[("q1", true), ("q2", false)])?,
        "a true antecedent with a false consequent evaluates false",
    )
}

fn classical_exclusive_or_rejects_agreement(_corrupt: bool) -> Check {
    ok(
        !bl("q1 ^ q2", &[("q1", true), ("q2", true)])?,
        "exclusive disjunction of two truths evaluates false",
    )
}

fn classical_excluded_middle_holds(_corrupt: bool) -> Check {
    ok(
        bl("q1 | !q1", &[("q1", false)])?,
        "a variable or its negation evaluates true",
    )
}

fn truth_table_conjunction_column(_corrupt: bool) -> Check {
    eq_str("q1 & q2 output column", &column("q1 & q2")?, "0001")
}

fn truth_table_joint_denial_column(_corrupt: bool) -> Check {
    eq_str("q1 !| q2 output column", &column("q1 !| q2")?, "1000")
}

fn truth_table_exclusive_or_column(_corrupt: bool) -> Check {
    eq_str("q1 ^ q2 output column", &column("q1 ^ q2")?, "0110")
}

fn truth_table_alternative_denial_column(_corrupt: bool) -> Check {
    eq_str("q1 !& q2 output column", &column("q1 !& q2")?, "1110")
}

fn truth_table_single_variable_rows(_corrupt: bool) -> Check {
    let table = truth_table(&pf("q1")).map_err(|e| e.to_string())?;
    eq_usize("row count", table.row_count(), 2)
}

fn tautology_modus_tollens(_corrupt: bool) -> Check {
    let f = pf("((q1 -> q2) & !q2) -> !q1");
    ok(
        is_tautology_bl(&f).map_err(|e| e.to_string())?,
        "denying the consequent denies the antecedent on every row",
    )
}

fn contradiction_self_denial(_corrupt: bool) -> Check {
    let f = pf("q1 & !q1");
    ok(
        is_contradiction_bl(&f).map_err(|e| e.to_string())?,
        "a variable conjoined with its negation is false on every row",
    )
}

// ---------------------------------------------------------------------------
// Weights of truth.
// ---------------------------------------------------------------------------

fn disjunction_weight_sum_of_products(corrupt: bool) -> Check {
    let expected = if corrupt { "93/100" } else { "23/25" };
    eq_weight(
        "w(q1 | q2) at (0.8, 0.6)",
        &sop("q1 | q2", &[("q1", "0.8"), ("q2", "0.6")])?,
        expected,
    )
}

fn conjunction_weight_product(_corrupt: bool) -> Check {
    eq_weight(
        "w(q1 & q2) at (0.8, 0.6)",
        &sop("q1 & q2", &[("q1", "0.8"), ("q2", "0.6")])?,
        "12/25",
    )
}

fn excluded_middle_weight_is_one(_corrupt: bool) -> Check {
    eq_weight(
        "w(q1 | !q1) at 0.3",
        &sop("q1 | !q1", &[("q1", "0.3")])?,
        "1",
    )
}

fn implication_closed_form(_corrupt: bool) -> Check {
    eq_weight(
        "w(q1 -> q2) at (0.4, 0.6)",
        &sop("q1 -> q2", &[("q1", "0.4"), ("q2", "0.6")])?,
        "21/25",
    )
}

fn joint_denial_closed_form(_corrupt: bool) -> Check {
    eq_weight(
        "w(q1 !| q2) at (0.4, 0.6)",
        &sop("q1 !| q2", &[("q1", "0.4"), ("q2", "0.6")])?,
        "6/25",
    )
}

fn alternative_denial_closed_form(_corrupt: bool) -> Check {
    eq_weight(
        "w(q1 !& q2) at (0.4, 0.6)",
        &sop("q1 !& q2", &[("q1", "0.4"), ("q2", "0.6")])?,
        "19/25",
    )
}

fn product_identity_single_factor(_corrupt: bool) -> Check {
    let result = law_product_identity(&[w("0.3")]);
    eq_weight("product over one factor", &result, "1")
}

fn product_identity_three_factors(_corrupt: bool) -> Check {
    let result = law_product_identity(&[w("0.1"), w("0.5"), w("0.9")]);
    eq_weight("product over three factors", &result, "1")
}

fn product_identity_chain(_corrupt: bool) -> Check {
    for n in 1..=10usize {
        let weights: Vec<Weight> = (1..=n)
            .map(|i| {
                Weight::new(Rational::new((i as i64).into(), ((n + 1) as i64).into()))
                    .expect("i/(n+1) lies in the unit interval")
            })
            .collect();
        let result = law_product_identity(&weights);
        if !result.is_one() {
            return Err(format!(
                "product over {n} factors: expected 1, computed {result}"
            ));
        }
    }
    Ok(())
}

fn zadeh_max_min_baseline(_corrupt: bool) -> Check {
    eq_weight(
        "max baseline at (0.8, 0.6)",
        &zadeh_weight(ZadehOp::Or, &w("0.8"), &w("0.6")),
        "0.8",
    )?;
    eq_weight(
        "min baseline at (0.8, 0.6)",
        &zadeh_weight(ZadehOp::And, &w("0.8"), &w("0.6")),
        "0.6",
    )
}

// ---------------------------------------------------------------------------
// Multilinear polynomials and law certification.
// ---------------------------------------------------------------------------

fn disjunction_polynomial_coefficients(_corrupt: bool) -> Check {
    let p = multilinear_of(&pf("q1 | q2")).map_err(|e| e.to_string())?;
    eq_rational("constant term", &p.coefficient(&monomial(&[])), "0")?;
    eq_rational("q1 coefficient", &p.coefficient(&monomial(&["q1"])), "1")?;
    eq_rational("q2 coefficient", &p.coefficient(&monomial(&["q2"])), "1")?;
    eq_rational(
        "q1*q2 coefficient",
        &p.coefficient(&monomial(&["q1", "q2"])),
        "-1",
    )?;
    eq_str("rendering", &p.to_string(), "1*q1 + 1*q2 - 1*q1*q2")
}

fn exclusive_disjunction_polynomial_coefficients(_corrupt: bool) -> Check {
    let p = multilinear_of(&pf("q1 ^ q2")).map_err(|e| e.to_string())?;
    eq_rational("q1 coefficient", &p.coefficient(&monomial(&["q1"])), "1")?;
    eq_rational("q2 coefficient", &p.coefficient(&monomial(&["q2"])), "1")?;
    eq_rational(
        "q1*q2 coefficient",
        &p.coefficient(&monomial(&["q1", "q2"])),
        "-2",
    )
}

fn disjunction_polynomial_evaluation(_corrupt: bool) -> Check {
    let p = multilinear_of(&pf("q1 | q2")).map_err(|e| e.to_string())?;
    let value = poly_eval(&p, &wa(&[("q1", "0.8"), ("q2", "0.6")])).map_err(|e| e.to_string())?;
    eq_weight("polynomial value at (0.8, 0.6)", &value, "23/25")
}

fn hypothetical_syllogism_is_law(_corrupt: bool) -> Check {
    let p = multilinear_of(&pf("((q1 -> q2) & (q2 -> q3)) -> (q1 -> q3)"))
        .map_err(|e| e.to_string())?;
    ok(p.is_one(), "chained implications reduce to the constant 1")
}

fn negated_exclusive_disjunction_matches_biconditional(_corrupt: bool) -> Check {
    let p = multilinear_of(&pf("!(q1 ^ q2) <-> (q1 <-> q2)")).map_err(|e| e.to_string())?;
    ok(p.is_one(), "the equivalence reduces to the constant 1")
}

fn registry_laws_certify_symbolically(_corrupt: bool) -> Check {
    for (name, f) in LawRegistry::standard().iter() {
        let p = multilinear_of(f).map_err(|e| e.to_string())?;
        ok(p.is_one(), &format!("{name}: polynomial reduces to 1"))?;
    }
    Ok(())
}

fn registry_law_negations_are_contradictions(_corrupt: bool) -> Check {
    for (name, f) in LawRegistry::standard().iter() {
        let p = multilinear_of(&Formula::not(f.clone())).map_err(|e| e.to_string())?;
        ok(
            p.is_zero(),
            &format!("negated {name}: polynomial reduces to 0"),
        )?;
    }
    Ok(())
}

/// Every registry law holds with weight exactly 1 across a deterministic
/// grid of rational weight vectors (endpoints included).
fn registry_laws_hold_on_rational_grid(_corrupt: bool) -> Check {
    const GRID: [&str; 4] = ["0", "1/3", "7/9", "1"];
    for (name, f) in LawRegistry::standard().iter() {
        let vars: Vec<Variable> = f.variables().into_iter().collect();
        let combos = GRID.len().pow(vars.len() as u32);
        for index in 0..combos {
            let mut rest = index;
            let mut assignment = WeightAssignment::new();
            for variable in &vars {
                assignment.insert(variable.clone(), w(GRID[rest % GRID.len()]));
                rest /= GRID.len();
            }
            let value = weight_sop(f, &assignment).map_err(|e| e.to_string())?;
            if !value.is_one() {
                return Err(format!(
                    "{name}: weight {value} at grid point {index}, expected 1"
                ));
            }
        }
    }
    Ok(())
}

fn law_verdict_polynomial_rendering(_corrupt: bool) -> Check {
    let modus_tollens =
        multilinear_of(&pf("((q1 -> q2) & !q2) -> !q1")).map_err(|e| e.to_string())?;
    ok(modus_tollens.is_one(), "modus tollens certifies as a law")?;
    eq_str("law polynomial", &modus_tollens.to_string(), "1")?;

    let contradiction = multilinear_of(&pf("q1 & !q1")).map_err(|e| e.to_string())?;
    ok(
        contradiction.is_zero(),
        "self-denial certifies as a contradiction",
    )?;
    eq_str("contradiction polynomial", &contradiction.to_string(), "0")?;

    let contingent = multilinear_of(&pf("q1 | q2")).map_err(|e| e.to_string())?;
    ok(
        !contingent.is_one() && !contingent.is_zero(),
        "a plain disjunction stays contingent",
    )?;
    eq_str(
        "contingent polynomial",
        &contingent.to_string(),
        "1*q1 + 1*q2 - 1*q1*q2",
    )
}

// ---------------------------------------------------------------------------
// Fuzzy sets over a finite universe.
// ---------------------------------------------------------------------------

fn universal_set_weights_are_one(_corrupt: bool) -> Check {
    let u = five_universe();
    eq_set(
        "universal set",
        &universal_set(&u),
        &["1", "1", "1", "1", "1"],
    )
}

fn empty_set_weights_are_zero(_corrupt: bool) -> Check {
    let u = five_universe();
    eq_set("empty set", &empty_set(&u), &["0", "0", "0", "0", "0"])
}

fn partial_definition_defaults_to_zero(_corrupt: bool) -> Check {
    let u = five_universe();
    eq_set("C1", &set_c1(&u), &["0", "1", "0", "0", "0.4"])
}

fn set_definition_matches_listed_weights(_corrupt: bool) -> Check {
    let u = five_universe();
    eq_set("C2", &set_c2(&u), &["0.9", "0.8", "0.7", "0", "0.6"])
}

fn set_complement_vector(_corrupt: bool) -> Check {
    eq_set("!C1", &pair_expr("!C1")?, &["1", "0", "1", "1", "0.6"])
}

fn universal_complement_is_empty(_corrupt: bool) -> Check {
    let u = five_universe();
    let complement = cfl_core::complement_set(&universal_set(&u));
    ok(
        is_empty_set(&complement) && complement == empty_set(&u),
        "the complement of the universal set is the empty set",
    )
}

fn second_set_complement_vector(_corrupt: bool) -> Check {
    eq_set(
        "!C2",
        &pair_expr("!C2")?,
        &["0.1", "0.2", "0.3", "1", "0.4"],
    )
}

fn set_union_vector(_corrupt: bool) -> Check {
    eq_set(
        "C1 | C2",
        &pair_expr("C1 | C2")?,
        &["0.9", "1", "0.7", "0", "0.76"],
    )
}

fn set_intersection_vector(_corrupt: bool) -> Check {
    eq_set(
        "C1 & C2",
        &pair_expr("C1 & C2")?,
        &["0", "0.8", "0", "0", "0.24"],
    )
}

fn set_exclusive_union_vector(_corrupt: bool) -> Check {
    eq_set(
        "C1 ^ C2",
        &pair_expr("C1 ^ C2")?,
        &["0.9", "0.2", "0.7", "0", "0.52"],
    )
}

fn set_implication_vector(_corrupt: bool) -> Check {
    eq_set(
        "C1 -> C2",
        &pair_expr("C1 -> C2")?,
        &["1", "0.8", "1", "1", "0.84"],
    )
}

fn set_converse_implication_vector(_corrupt: bool) -> Check {
    eq_set(
        "C2 -> C1",
        &pair_expr("C2 -> C1")?,
        &["0.1", "1", "0.3", "1", "0.64"],
    )
}

fn set_biconditional_vector(_corrupt: bool) -> Check {
    eq_set(
        "C1 <-> C2",
        &pair_expr("C1 <-> C2")?,
        &["0.1", "0.8", "0.3", "1", "0.48"],
    )
}

fn set_alternative_denial_vector(_corrupt: bool) -> Check {
    eq_set(
        "C1 !& C2",
        &pair_expr("C1 !& C2")?,
        &["1", "0.2", "1", "1", "0.76"],
    )
}

fn set_joint_denial_vector(_corrupt: bool) -> Check {
    eq_set(
        "C1 !| C2",
        &pair_expr("C1 !| C2")?,
        &["0.1", "0", "0.3", "1", "0.24"],
    )
}

fn union_with_complement_is_universal(_corrupt: bool) -> Check {
    let result = pair_expr("C1 | !C1")?;
    ok(
        is_universal_set(&result),
        "a set united with its own complement spans the universe",
    )
}

fn intersection_with_complement_is_empty(_corrupt: bool) -> Check {
    let result = pair_expr("C2 & !C2")?;
    ok(
        is_empty_set(&result),
        "a set intersected with its own complement is empty",
    )
}

fn modus_ponens_lifts_to_sets(_corrupt: bool) -> Check {
    let result = pair_expr("((C1 -> C2) & C1) -> C2")?;
    ok(
        is_universal_set(&result),
        "modus ponens over sets is the universal set",
    )
}

fn partial_membership_is_neither_universal_nor_empty(_corrupt: bool) -> Check {
    let u = five_universe();
    let c1 = set_c1(&u);
    ok(
        !is_universal_set(&c1) && !is_empty_set(&c1),
        "a partially weighted set is neither universal nor empty",
    )
}

fn de_morgan_verifies_over_sets(_corrupt: bool) -> Check {
    let u = five_universe();
    let bindings = BTreeMap::from([(v("v1"), set_c1(&u)), (v("v2"), set_c2(&u))]);
    ok(
        verify_set_law(&pf("!(v1 & v2) <-> (!v1 | !v2)"), &bindings).map_err(|e| e.to_string())?,
        "the negated intersection equals the union of complements everywhere",
    )
}

fn excluded_middle_verifies_over_sets(_corrupt: bool) -> Check {
    let u = five_universe();
    let bindings = BTreeMap::from([(v("v1"), set_c1(&u))]);
    ok(
        verify_set_law(&pf("v1 | !v1"), &bindings).map_err(|e| e.to_string())?,
        "a set united with its complement is universal for any weights",
    )
}

fn seven_universe() -> Universe {
    make_universe(["x1", "x2", "x3", "x4", "x5", "x6", "x7"]).expect("embedded universe is valid")
}

fn crisp_pair() -> (FuzzySet, FuzzySet) {
    let u = seven_universe();
    let a =
        from_classical(&u, "C1", ["x2", "x3", "x5", "x7"]).expect("members are in the universe");
    let b =
        from_classical(&u, "C2", ["x1", "x2", "x4", "x7"]).expect("members are in the universe");
    (a, b)
}

fn crisp_result(c: WeightConnective) -> Result<Vec<String>, String> {
    let (a, b) = crisp_pair();
    let combined = apply_connective_set(c, &a, &b).map_err(|e| e.to_string())?;
    to_classical(&combined).map_err(|e| e.to_string())
}

fn crisp_union_round_trip(_corrupt: bool) -> Check {
    let got = crisp_result(WeightConnective::Or)?;
    eq_str("union members", &got.join(","), "x1,x2,x3,x4,x5,x7")
}

fn crisp_intersection_round_trip(_corrupt: bool) -> Check {
    let got = crisp_result(WeightConnective::And)?;
    eq_str("intersection members", &got.join(","), "x2,x7")
}

fn crisp_exclusive_union_round_trip(_corrupt: bool) -> Check {
    let got = crisp_result(WeightConnective::Xor)?;
    eq_str("exclusive union members", &got.join(","), "x1,x3,x4,x5")
}

/// Union, intersection, and exclusive union of crisp sets agree with plain
/// bit operations, exhaustively over a four-element universe.
fn crisp_pairs_agree_with_bit_algebra(_corrupt: bool) -> Check {
    let u = make_universe(["x1", "x2", "x3", "x4"]).expect("embedded universe is valid");
    let members = |mask: u32| -> Vec<String> {
        (0..4)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| format!("x{}", i + 1))
            .collect()
    };
    for a_mask in 0..16u32 {
        for b_mask in 0..16u32 {
            let a = from_classical(&u, "A", members(a_mask)).expect("members are in the universe");
            let b = from_classical(&u, "B", members(b_mask)).expect("members are in the universe");
            for (c, oracle) in [
                (WeightConnective::Or, a_mask | b_mask),
                (WeightConnective::And, a_mask & b_mask),
                (WeightConnective::Xor, a_mask ^ b_mask),
            ] {
                let combined = apply_connective_set(c, &a, &b).map_err(|e| e.to_string())?;
                let got = to_classical(&combined).map_err(|e| e.to_string())?;
                let expected = members(oracle);
                if got != expected {
                    return Err(format!(
                        "masks ({a_mask:04b}, {b_mask:04b}) under {c:?}: expected {expected:?}, computed {got:?}"
                    ));
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Piecewise polynomial membership functions.
// ---------------------------------------------------------------------------

fn triangle_membership_constructs(_corrupt: bool) -> Check {
    let f = triangle();
    eq_usize("segment count", f.segments().len(), 2)?;
    eq_rational("value at 0", &pw_value(&f, "0")?, "0")?;
    eq_rational("value at 10", &pw_value(&f, "10")?, "0")
}

fn plateau_membership_constructs(_corrupt: bool) -> Check {
    let f = plateau();
    eq_usize("segment count", f.segments().len(), 3)?;
    eq_rational("value at 0", &pw_value(&f, "0")?, "0")?;
    eq_rational("value at 5", &pw_value(&f, "5")?, "4/5")
}

fn triangle_peak_value(_corrupt: bool) -> Check {
    eq_rational("triangle at 5", &pw_value(&triangle(), "5")?, "1")
}

fn plateau_left_edge_is_closed(_corrupt: bool) -> Check {
    eq_rational("plateau at 3", &pw_value(&plateau(), "3")?, "4/5")?;
    eq_rational("plateau at 7", &pw_value(&plateau(), "7")?, "0")
}

fn constant_membership_stays_one(_corrupt: bool) -> Check {
    let f = constant_one();
    for x in ["0", "1/3", "5", "10"] {
        eq_rational(&format!("value at {x}"), &pw_value(&f, x)?, "1")?;
    }
    let samples = pw_sample(&f, 11);
    eq_usize("sample count", samples.len(), 11)?;
    eq_rational("first sample x", &samples[0].0, "0")?;
    eq_rational("last sample x", &samples[10].0, "10")?;
    for (x, value) in &samples {
        eq_rational(&format!("sample at {}", render_exact(x)), value, "1")?;
    }
    Ok(())
}

fn union_curve() -> Result<PiecewiseFn, String> {
    pw_combine(WeightConnective::Or, &triangle(), &plateau()).map_err(|e| e.to_string())
}

fn intersection_curve() -> Result<PiecewiseFn, String> {
    pw_combine(WeightConnective::And, &triangle(), &plateau()).map_err(|e| e.to_string())
}

fn eq_breakpoints(f: &PiecewiseFn, want: &[&str]) -> Check {
    let got = f.breakpoints();
    let expected: Vec<Rational> = want.iter().map(|x| r(x)).collect();
    if got == expected {
        Ok(())
    } else {
        Err(format!(
            "breakpoints: expected [{}], computed [{}]",
            want.join(", "),
            got.iter().map(render_exact).collect::<Vec<_>>().join(", ")
        ))
    }
}

fn membership_union_branch_polynomials(_corrupt: bool) -> Check {
    let f = union_curve()?;
    eq_usize("segment count", f.segments().len(), 4)?;
    eq_breakpoints(&f, &["0", "3", "5", "7", "10"])?;
    let segs = f.segments();
    eq_coeffs("branch on [0, 3)", segs[0].coeffs(), &["0", "1/5"])?;
    eq_coeffs("branch on [3, 5)", segs[1].coeffs(), &["4/5", "1/25"])?;
    eq_coeffs("branch on [5, 7)", segs[2].coeffs(), &["6/5", "-1/25"])?;
    eq_coeffs("branch on [7, 10]", segs[3].coeffs(), &["2", "-1/5"])?;
    ok(
        segs.iter().all(PolySegment::lo_closed),
        "every branch owns its left endpoint",
    )
}

fn membership_intersection_branch_polynomials(_corrupt: bool) -> Check {
    let f = intersection_curve()?;
    eq_usize("segment count", f.segments().len(), 4)?;
    eq_breakpoints(&f, &["0", "3", "5", "7", "10"])?;
    let segs = f.segments();
    eq_coeffs("branch on [0, 3)", segs[0].coeffs(), &["0"])?;
    eq_coeffs("branch on [3, 5)", segs[1].coeffs(), &["0", "4/25"])?;
    eq_coeffs("branch on [5, 7)", segs[2].coeffs(), &["8/5", "-4/25"])?;
    eq_coeffs("branch on [7, 10]", segs[3].coeffs(), &["0"])?;
    ok(
        segs.iter().all(PolySegment::lo_closed),
        "every branch owns its left endpoint",
    )
}

fn membership_union_sample_values(_corrupt: bool) -> Check {
    let f = union_curve()?;
    for (x, want) in [
        ("0", "0"),
        ("3", "23/25"),
        ("5", "1"),
        ("7", "3/5"),
        ("10", "0"),
    ] {
        eq_rational(&format!("union at {x}"), &pw_value(&f, x)?, want)?;
    }
    Ok(())
}

fn membership_intersection_sample_values(_corrupt: bool) -> Check {
    let f = intersection_curve()?;
    for (x, want) in [
        ("0", "0"),
        ("3", "12/25"),
        ("5", "4/5"),
        ("7", "0"),
        ("10", "0"),
    ] {
        eq_rational(&format!("intersection at {x}"), &pw_value(&f, x)?, want)?;
    }
    Ok(())
}

fn plateau_sample_grid(_corrupt: bool) -> Check {
    let samples = pw_sample(&plateau(), 11);
    let expected = [
        "0", "0", "0", "4/5", "4/5", "4/5", "4/5", "0", "0", "0", "0",
    ];
    eq_usize("sample count", samples.len(), 11)?;
    for (i, ((x, value), want)) in samples.iter().zip(expected.iter()).enumerate() {
        eq_rational(
            &format!("sample {i} at x = {}", render_exact(x)),
            value,
            want,
        )?;
    }
    Ok(())
}

fn complement_of_constant_one_is_zero(_corrupt: bool) -> Check {
    let functions = BTreeMap::from([("U".to_string(), constant_one())]);
    let f = pw_from_formula(&pf("!U"), &functions).map_err(|e| e.to_string())?;
    eq_usize("segment count", f.segments().len(), 1)?;
    eq_coeffs("constant branch", f.segments()[0].coeffs(), &["0"])?;
    eq_rational("value at 5", &pw_value(&f, "5")?, "0")
}

// ---------------------------------------------------------------------------
// Command-line rendering contracts.
// ---------------------------------------------------------------------------

fn weight_lines_render_rational_and_decimal(_corrupt: bool) -> Check {
    eq_str(
        "disjunction weight line",
        &weight_line(&sop("q1 | q2", &[("q1", "0.8"), ("q2", "0.6")])?),
        "23/25 = 0.92",
    )?;
    eq_str(
        "implication weight line",
        &weight_line(&sop("q1 -> q2", &[("q1", "0.4"), ("q2", "0.6")])?),
        "21/25 = 0.84",
    )?;
    eq_str(
        "contradiction weight line",
        &weight_line(&sop("q1 & !q1", &[("q1", "0.5")])?),
        "0",
    )?;
    eq_str(
        "non-terminating weight line",
        &weight_line(&w("1/3")),
        "1/3",
    )
}
