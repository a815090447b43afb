//! Formula parsing: lexer and precedence-climbing parser.
//!
//! Grammar (ASCII), loosest to tightest binding:
//!
//! | tier | operators         | associativity                                   |
//! |------|-------------------|-------------------------------------------------|
//! | 1    | `<->`             | left                                            |
//! | 2    | `->`              | right                                           |
//! | 3    | `!\|`, `nor`      | none — chaining requires parentheses            |
//! | 4    | `\|`, `^`         | left; mixing `\|` and `^` without parentheses is an error |
//! | 5    | `!&`, `nand`      | none — chaining requires parentheses            |
//! | 6    | `&`               | left                                            |
//! | 7    | `!`, `~` (prefix) |                                                 |
//!
//! Identifiers consist of ASCII letters, digits, and underscores, do not
//! begin with a digit, and may not be the reserved words `nand` / `nor`.
//! Whitespace is insignificant, except that multi-character operators
//! (`!&`, `!|`, `->`, `<->`) must be written without interior spaces.
//! Errors carry a 1-based character offset and the set of inputs that would
//! have been accepted there.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::formula::{Connective, Formula, Variable};

/// A syntax error with a 1-based character offset into the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based character offset at which the error was detected.
    pub position: usize,
    /// Description of what was found there.
    pub found: String,
    /// Descriptions of what would have been accepted there.
    pub expected: Vec<String>,
}

impl ParseError {
    fn new(position: usize, found: impl Into<String>, expected: &[&str]) -> ParseError {
        ParseError {
            position,
            found: found.into(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at offset {}: found {}, expected ",
            self.position, self.found
        )?;
        for (i, e) in self.expected.iter().enumerate() {
            if i > 0 {
                f.write_str(" or ")?;
            }
            f.write_str(e)?;
        }
        Ok(())
    }
}

impl core::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    Not,
    Bin(Connective),
    LParen,
    RParen,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Ident(s) => format!("identifier '{s}'"),
            Token::Not => "'!'".to_string(),
            Token::Bin(c) => format!("'{}'", c.token()),
            Token::LParen => "'('".to_string(),
            Token::RParen => "')'".to_string(),
        }
    }
}

/// Lexes into `(1-based char offset, token)` pairs.
fn lex(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0usize;
    while i < chars.len() {
        let pos = i + 1;
        let c = chars[i];
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                i += 1;
            }
            '(' => {
                tokens.push((pos, Token::LParen));
                i += 1;
            }
            ')' => {
                tokens.push((pos, Token::RParen));
                i += 1;
            }
            '!' => match chars.get(i + 1) {
                Some('&') => {
                    tokens.push((pos, Token::Bin(Connective::Nand)));
                    i += 2;
                }
                Some('|') => {
                    tokens.push((pos, Token::Bin(Connective::Nor)));
                    i += 2;
                }
                _ => {
                    tokens.push((pos, Token::Not));
                    i += 1;
                }
            },
            '~' => {
                tokens.push((pos, Token::Not));
                i += 1;
            }
            '&' => {
                tokens.push((pos, Token::Bin(Connective::And)));
                i += 1;
            }
            '|' => {
                tokens.push((pos, Token::Bin(Connective::Or)));
                i += 1;
            }
            '^' => {
                tokens.push((pos, Token::Bin(Connective::Xor)));
                i += 1;
            }
            '-' => {
                if chars.get(i + 1) == Some(&'>') {
                    tokens.push((pos, Token::Bin(Connective::Imp)));
                    i += 2;
                } else {
                    return Err(ParseError::new(pos, "'-'", &["'->'"]));
                }
            }
            '<' => {
                if chars.get(i + 1) == Some(&'-') && chars.get(i + 2) == Some(&'>') {
                    tokens.push((pos, Token::Bin(Connective::Iff)));
                    i += 3;
                } else {
                    return Err(ParseError::new(pos, "'<'", &["'<->'"]));
                }
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                let token = match word.as_str() {
                    "nand" => Token::Bin(Connective::Nand),
                    "nor" => Token::Bin(Connective::Nor),
                    _ => Token::Ident(word),
                };
                tokens.push((pos, token));
            }
            _ if c.is_ascii_digit() => {
                return Err(ParseError::new(
                    pos,
                    format!("'{c}'"),
                    &["an identifier (must not begin with a digit)"],
                ));
            }
            _ => {
                return Err(ParseError::new(pos, format!("'{c}'"), &["a formula token"]));
            }
        }
    }
    Ok(tokens)
}

/// Binding policy of a binary operator tier.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Assoc {
    Left,
    Right,
    /// Chaining at the same tier requires parentheses.
    None,
}

/// `(left binding power, associativity)` — higher binds tighter. Same-tier
/// left-associative operators may still refuse to mix (`|` vs `^`).
fn binary_binding(c: Connective) -> (u8, Assoc) {
    match c {
        Connective::Iff => (10, Assoc::Left),
        Connective::Imp => (20, Assoc::Right),
        Connective::Nor => (30, Assoc::None),
        Connective::Or | Connective::Xor => (40, Assoc::Left),
        Connective::Nand => (50, Assoc::None),
        Connective::And => (60, Assoc::Left),
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    /// 1-based offset one past the last input character, for end-of-input errors.
    end: usize,
}

const FORMULA_START: [&str; 4] = ["an identifier", "'!'", "'~'", "'('"];

impl Parser {
    fn peek(&self) -> Option<&(usize, Token)> {
        self.tokens.get(self.pos)
    }

    fn advance(&mut self) -> Option<(usize, Token)> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn parse_expr(&mut self, min_bp: u8) -> Result<Formula, ParseError> {
        let mut lhs = self.parse_prefix()?;
        // The operator that last extended `lhs` at this recursion level, used
        // to police non-associative chains and `|`/`^` mixing.
        let mut prev: Option<(u8, Connective)> = None;
        while let Some((off, Token::Bin(c))) = self.peek().cloned() {
            let (l_bp, assoc) = binary_binding(c);
            if l_bp < min_bp {
                break;
            }
            if let Some((prev_bp, prev_c)) = prev {
                if prev_bp == l_bp {
                    match assoc {
                        Assoc::None => {
                            let hint = format!("parentheses ('{}' does not chain)", c.token());
                            return Err(ParseError::new(
                                off,
                                format!("'{}'", c.token()),
                                &[hint.as_str()],
                            ));
                        }
                        Assoc::Left if prev_c != c => {
                            let hint = format!(
                                "parentheses (mixing '{}' and '{}' is ambiguous)",
                                prev_c.token(),
                                c.token()
                            );
                            return Err(ParseError::new(
                                off,
                                format!("'{}'", c.token()),
                                &[hint.as_str()],
                            ));
                        }
                        _ => {}
                    }
                }
            }
            self.advance();
            let r_bp = match assoc {
                Assoc::Left | Assoc::None => l_bp + 1,
                Assoc::Right => l_bp,
            };
            let rhs = self.parse_expr(r_bp)?;
            lhs = Formula::bin(c, lhs, rhs);
            prev = Some((l_bp, c));
        }
        Ok(lhs)
    }

    fn parse_prefix(&mut self) -> Result<Formula, ParseError> {
        match self.advance() {
            Some((_, Token::Not)) => Ok(Formula::not(self.parse_prefix()?)),
            Some((off, Token::Ident(name))) => match Variable::new(name) {
                Ok(v) => Ok(Formula::Var(v)),
                Err(e) => Err(ParseError::new(
                    off,
                    format!("reserved or invalid name '{}'", e.0),
                    &["an identifier"],
                )),
            },
            Some((_, Token::LParen)) => {
                let inner = self.parse_expr(0)?;
                match self.advance() {
                    Some((_, Token::RParen)) => Ok(inner),
                    Some((off, t)) => Err(ParseError::new(off, t.describe(), &["')'"])),
                    None => Err(ParseError::new(self.end, "end of input", &["')'"])),
                }
            }
            Some((off, t)) => Err(ParseError::new(off, t.describe(), &FORMULA_START)),
            None => Err(ParseError::new(self.end, "end of input", &FORMULA_START)),
        }
    }
}

/// Parses a formula from text. See the module docs for the grammar.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let tokens = lex(text)?;
    let end = text.chars().count() + 1;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end,
    };
    let formula = parser.parse_expr(0)?;
    match parser.peek() {
        None => Ok(formula),
        Some((off, t)) => Err(ParseError::new(
            *off,
            t.describe(),
            &["a binary operator", "end of input"],
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::format_formula;

    fn roundtrip(text: &str) -> String {
        format_formula(&parse_formula(text).unwrap())
    }

    #[test]
    fn parses_mixed_connectives_with_parens() {
        assert_eq!(
            roundtrip("(q1 | q2) ^ (q1 -> q3)"),
            "((q1 | q2) ^ (q1 -> q3))"
        );
    }

    #[test]
    fn double_negation_nests() {
        assert_eq!(
            parse_formula("!!q1").unwrap(),
            Formula::not(Formula::not(Formula::var("q1")))
        );
        assert_eq!(roundtrip("~~q1"), "!!q1");
    }

    #[test]
    fn precedence_binds_and_tighter_than_or() {
        assert_eq!(roundtrip("q1 | q2 & q3"), "(q1 | (q2 & q3))");
        assert_eq!(roundtrip("!q1 & q2"), "(!q1 & q2)");
    }

    #[test]
    fn implication_is_right_associative() {
        assert_eq!(roundtrip("q1 -> q2 -> q3"), "(q1 -> (q2 -> q3))");
    }

    #[test]
    fn biconditional_is_left_associative_and_loosest() {
        assert_eq!(roundtrip("q1 <-> q2 <-> q3"), "((q1 <-> q2) <-> q3)");
        assert_eq!(roundtrip("q1 <-> q2 -> q3"), "(q1 <-> (q2 -> q3))");
    }

    #[test]
    fn nand_and_nor_tokens_and_keywords_agree() {
        assert_eq!(roundtrip("q1 !& q2"), "(q1 !& q2)");
        assert_eq!(roundtrip("q1 nand q2"), "(q1 !& q2)");
        assert_eq!(roundtrip("q1 !| q2"), "(q1 !| q2)");
        assert_eq!(roundtrip("q1 nor q2"), "(q1 !| q2)");
    }

    #[test]
    fn nand_chaining_requires_parens() {
        let err = parse_formula("q1 !& q2 !& q3").unwrap_err();
        assert_eq!(err.position, 10);
        assert!(parse_formula("(q1 !& q2) !& q3").is_ok());
        assert!(parse_formula("q1 nor q2 nor q3").is_err());
    }

    #[test]
    fn mixing_or_and_xor_requires_parens() {
        let err = parse_formula("q1 | q2 ^ q3").unwrap_err();
        assert_eq!(err.position, 9);
        assert!(parse_formula("(q1 | q2) ^ q3").is_ok());
        assert!(parse_formula("q1 | q2 | q3").is_ok());
        assert!(parse_formula("q1 ^ q2 ^ q3").is_ok());
    }

    #[test]
    fn errors_carry_offsets_and_expectations() {
        let err = parse_formula("q1 |").unwrap_err();
        assert_eq!(err.position, 5);
        assert!(err.expected.iter().any(|e| e.contains("identifier")));

        let err = parse_formula("q1 - q2").unwrap_err();
        assert_eq!(err.position, 4);
        assert_eq!(err.expected, vec!["'->'".to_string()]);

        let err = parse_formula("(q1 | q2").unwrap_err();
        assert_eq!(err.position, 9);

        let err = parse_formula("q1 q2").unwrap_err();
        assert_eq!(err.position, 4);

        let err = parse_formula("1q").unwrap_err();
        assert_eq!(err.position, 1);
    }

    #[test]
    fn reserved_words_do_not_parse_as_variables() {
        assert!(parse_formula("nand").is_err());
        assert!(parse_formula("q1 & nor").is_err());
    }

    #[test]
    fn whitespace_is_insignificant_but_operators_are_contiguous() {
        assert_eq!(roundtrip("  q1|q2  "), "(q1 | q2)");
        // '!' followed by a spaced '&' is negation then conjunction — a
        // prefix operator cannot serve as a right operand, so this errors.
        assert!(parse_formula("q1 ! & q2").is_err());
    }
}
