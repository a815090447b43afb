//! Integration tests for the formula grammar: operator precedence and
//! associativity, token aliases, whitespace handling, and the exact
//! positions and suggestions carried by syntax errors.

use cfl_core::{format_formula, parse_formula, ParseError, Variable};

/// Parses and re-renders, making the tree shape visible as parentheses.
fn tree(text: &str) -> String {
    format_formula(&parse_formula(text).unwrap())
}

fn err(text: &str) -> ParseError {
    parse_formula(text).unwrap_err()
}

// ---------------------------------------------------------------------------
// Precedence and associativity
// ---------------------------------------------------------------------------

#[test]
fn conjunction_binds_tighter_than_disjunction() {
    assert_eq!(tree("q1 | q2 & q3"), "(q1 | (q2 & q3))");
    assert_eq!(tree("q1 & q2 | q3"), "((q1 & q2) | q3)");
}

#[test]
fn negation_binds_tighter_than_any_binary_operator() {
    assert_eq!(tree("!q1 & q2"), "(!q1 & q2)");
    assert_eq!(tree("!q1 -> !q2"), "(!q1 -> !q2)");
    assert_eq!(tree("!(q1 & q2)"), "!(q1 & q2)");
}

#[test]
fn implication_is_right_associative() {
    assert_eq!(tree("q1 -> q2 -> q3"), "(q1 -> (q2 -> q3))");
}

#[test]
fn biconditional_is_left_associative_and_loosest() {
    assert_eq!(tree("q1 <-> q2 <-> q3"), "((q1 <-> q2) <-> q3)");
    assert_eq!(tree("q1 <-> q2 -> q3"), "(q1 <-> (q2 -> q3))");
    assert_eq!(tree("q1 -> q2 <-> q3"), "((q1 -> q2) <-> q3)");
}

#[test]
fn disjunction_and_exclusive_disjunction_are_left_associative() {
    assert_eq!(tree("q1 | q2 | q3"), "((q1 | q2) | q3)");
    assert_eq!(tree("q1 ^ q2 ^ q3"), "((q1 ^ q2) ^ q3)");
}

#[test]
fn joint_denial_sits_between_implication_and_disjunction() {
    // `!|` binds looser than `|` but tighter than `->`.
    assert_eq!(tree("q1 !| q2 | q3"), "(q1 !| (q2 | q3))");
    assert_eq!(tree("q1 | q2 !| q3"), "((q1 | q2) !| q3)");
    assert_eq!(tree("q1 -> q2 !| q3"), "(q1 -> (q2 !| q3))");
}

#[test]
fn alternative_denial_sits_between_disjunction_and_conjunction() {
    // `!&` binds looser than `&` but tighter than `|`.
    assert_eq!(tree("q1 !& q2 & q3"), "(q1 !& (q2 & q3))");
    assert_eq!(tree("q1 & q2 !& q3"), "((q1 & q2) !& q3)");
    assert_eq!(tree("q1 !& q2 | q3"), "((q1 !& q2) | q3)");
}

#[test]
fn parentheses_override_precedence() {
    assert_eq!(tree("(q1 | q2) & q3"), "((q1 | q2) & q3)");
    assert_eq!(tree("q1 -> (q2 <-> q3)"), "(q1 -> (q2 <-> q3))");
    assert_eq!(tree("((q1))"), "q1");
}

// ---------------------------------------------------------------------------
// Token aliases and lexical details
// ---------------------------------------------------------------------------

#[test]
fn keyword_operators_match_their_symbolic_forms() {
    assert_eq!(tree("q1 nand q2"), tree("q1 !& q2"));
    assert_eq!(tree("q1 nor q2"), tree("q1 !| q2"));
    assert_eq!(tree("q1 nand q2 | q3 nor q4"), tree("q1 !& q2 | q3 !| q4"));
}

#[test]
fn tilde_is_an_alias_for_negation() {
    assert_eq!(tree("~q1"), "!q1");
    assert_eq!(tree("~~q1"), "!!q1");
    assert_eq!(tree("~q1 & !q2"), "(!q1 & !q2)");
}

#[test]
fn whitespace_is_insignificant() {
    assert_eq!(tree("q1|q2&q3"), tree("  q1 \t|\n q2   &\r\n q3 "));
    assert_eq!(tree("!q1->q2"), "(!q1 -> q2)");
}

#[test]
fn alternative_denial_lexes_only_without_interior_space() {
    // `! &` is a negation token followed by a conjunction token, which leaves
    // the parser stuck after the first operand.
    assert_eq!(tree("q1 !& q2"), "(q1 !& q2)");
    let e = err("q1 ! & q2");
    assert_eq!(e.position, 4);
    assert_eq!(e.found, "'!'");
}

#[test]
fn identifiers_allow_underscores_and_digits_after_the_first_character() {
    assert_eq!(tree("_x & speed_low & q10"), "((_x & speed_low) & q10)");
}

#[test]
fn operator_keywords_are_not_identifiers() {
    assert!(Variable::new("nand").is_err());
    assert!(Variable::new("nor").is_err());
    assert!(Variable::new("norther").is_ok());
}

// ---------------------------------------------------------------------------
// Errors: positions are 1-based character offsets
// ---------------------------------------------------------------------------

#[test]
fn empty_input_is_rejected_at_offset_one() {
    let e = err("");
    assert_eq!(e.position, 1);
    assert_eq!(e.found, "end of input");
    assert!(e.expected.contains(&"an identifier".to_string()));
}

#[test]
fn a_dangling_operator_reports_the_end_of_input() {
    let e = err("q1 &");
    assert_eq!(e.position, 5);
    assert_eq!(e.found, "end of input");
}

#[test]
fn an_unclosed_parenthesis_expects_the_closer() {
    let e = err("(q1 | q2");
    assert_eq!(e.position, 9);
    assert_eq!(e.found, "end of input");
    assert_eq!(e.expected, vec!["')'".to_string()]);
}

#[test]
fn a_doubled_operator_points_at_the_second_one() {
    let e = err("q1 | | q2");
    assert_eq!(e.position, 6);
    assert_eq!(e.found, "'|'");
    assert!(e.expected.contains(&"'('".to_string()));
}

#[test]
fn trailing_tokens_after_a_formula_are_rejected() {
    let e = err("q1 q2");
    assert_eq!(e.position, 4);
    assert_eq!(e.found, "identifier 'q2'");
    assert_eq!(
        e.expected,
        vec!["a binary operator".to_string(), "end of input".to_string()]
    );
}

#[test]
fn a_bare_dash_suggests_the_implication_arrow() {
    let e = err("q1 - q2");
    assert_eq!(e.position, 4);
    assert_eq!(e.found, "'-'");
    assert_eq!(e.expected, vec!["'->'".to_string()]);
}

#[test]
fn a_bare_angle_bracket_suggests_the_biconditional_arrow() {
    let e = err("q1 < q2");
    assert_eq!(e.position, 4);
    assert_eq!(e.expected, vec!["'<->'".to_string()]);
}

#[test]
fn a_leading_digit_is_called_out_explicitly() {
    let e = err("1q & q2");
    assert_eq!(e.position, 1);
    assert_eq!(
        e.expected,
        vec!["an identifier (must not begin with a digit)".to_string()]
    );
}

#[test]
fn offsets_count_characters_not_bytes() {
    // A two-byte character before the error must not inflate the offset.
    let e = err("q1 & µ");
    assert_eq!(e.position, 6);
    assert_eq!(e.found, "'µ'");
}

// ---------------------------------------------------------------------------
// Errors: ambiguity policing
// ---------------------------------------------------------------------------

#[test]
fn mixing_disjunction_flavors_requires_parentheses() {
    let e = err("q1 | q2 ^ q3");
    assert_eq!(e.position, 9);
    assert_eq!(
        e.to_string(),
        "syntax error at offset 9: found '^', expected parentheses (mixing '|' and '^' is ambiguous)"
    );

    let e = err("q1 ^ q2 | q3");
    assert_eq!(e.position, 9);
    assert_eq!(
        e.expected,
        vec!["parentheses (mixing '^' and '|' is ambiguous)".to_string()]
    );
}

#[test]
fn parenthesized_disjunction_flavors_mix_freely() {
    assert_eq!(tree("(q1 | q2) ^ q3"), "((q1 | q2) ^ q3)");
    assert_eq!(tree("q1 | (q2 ^ q3)"), "(q1 | (q2 ^ q3))");
}

#[test]
fn alternative_denial_does_not_chain() {
    let e = err("q1 !& q2 !& q3");
    assert_eq!(e.position, 10);
    assert_eq!(
        e.expected,
        vec!["parentheses ('!&' does not chain)".to_string()]
    );
    assert_eq!(tree("(q1 !& q2) !& q3"), "((q1 !& q2) !& q3)");
}

#[test]
fn joint_denial_does_not_chain() {
    let e = err("q1 nor q2 nor q3");
    assert_eq!(e.position, 11);
    assert_eq!(
        e.expected,
        vec!["parentheses ('!|' does not chain)".to_string()]
    );
    assert_eq!(tree("q1 nor (q2 nor q3)"), "(q1 !| (q2 !| q3))");
}
