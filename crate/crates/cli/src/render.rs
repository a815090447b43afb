//! Rendering helpers shared by the commands: exact weight lines, univariate
//! polynomial strings, aligned text tables, and CSV assembly.

use num_traits::{Signed, Zero};

use cfl_core::{format_formula, render_exact, Formula, Rational, Weight};

/// A weight as the command line reports it: the exact rational first, the
/// terminating decimal second ("23/25 = 0.92"); integers plainly ("0", "1");
/// non-terminating values as the rational alone ("1/3").
pub fn weight_line(w: &Weight) -> String {
    let exact = w.to_string();
    let r = w.value();
    if r.is_integer() || exact.contains('/') {
        exact
    } else {
        format!("{}/{} = {exact}", r.numer(), r.denom())
    }
}

/// The formula for display: canonical rendering with the root's own
/// parentheses stripped, e.g. `q1 | q2` rather than `(q1 | q2)`.
pub fn headline(f: &Formula) -> String {
    let text = format_formula(f);
    match f {
        Formula::Bin(..) => text[1..text.len() - 1].to_string(),
        _ => text,
    }
}

/// A univariate polynomial from its constant-first coefficient list, with
/// explicit exact coefficients: `[4/5, 1/25]` renders as "0.8 + 0.04*x".
pub fn poly_in_x(coeffs: &[Rational]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let magnitude = if negative { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&render_exact(&magnitude));
        match k {
            0 => {}
            1 => out.push_str("*x"),
            _ => out.push_str(&format!("*x^{k}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Left-aligned columns padded to their widest cell, two spaces apart, no
/// trailing whitespace.
pub fn text_table(headers: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut emit = |cells: &[String]| {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if i + 1 < cells.len() {
                for _ in cell.chars().count()..widths[i] {
                    line.push(' ');
                }
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };
    emit(headers);
    for row in rows {
        emit(row);
    }
    out
}

/// CSV with the first row as header; fields are quoted only when needed and
/// records end in a bare newline.
pub fn csv_table(rows: &[Vec<String>]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer
            .write_record(row)
            .expect("writing CSV to memory cannot fail");
    }
    let bytes = writer
        .into_inner()
        .expect("flushing CSV to memory cannot fail");
    String::from_utf8(bytes).expect("CSV output is UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use cfl_core::{parse_formula, parse_rational};

    fn w(text: &str) -> Weight {
        Weight::parse(text).unwrap()
    }

    fn coeffs(literals: &[&str]) -> Vec<Rational> {
        literals
            .iter()
            .map(|c| parse_rational(c).unwrap())
            .collect()
    }

    #[test]
    fn weight_line_pairs_rational_with_terminating_decimal() {
        assert_eq!(weight_line(&w("23/25")), "23/25 = 0.92");
        assert_eq!(weight_line(&w("0.48")), "12/25 = 0.48");
    }

    #[test]
    fn weight_line_leaves_integers_and_nonterminating_values_alone() {
        assert_eq!(weight_line(&w("0")), "0");
        assert_eq!(weight_line(&w("1")), "1");
        assert_eq!(weight_line(&w("1/3")), "1/3");
    }

    #[test]
    fn headline_strips_only_the_root_parentheses() {
        let f = parse_formula("q1 | q2 & q3").unwrap();
        assert_eq!(headline(&f), "q1 | (q2 & q3)");
        let leaf = parse_formula("q1").unwrap();
        assert_eq!(headline(&leaf), "q1");
        let negated = parse_formula("!q1").unwrap();
        assert_eq!(headline(&negated), "!q1");
    }

    #[test]
    fn poly_renders_constant_first_with_explicit_signs() {
        assert_eq!(poly_in_x(&coeffs(&["4/5", "1/25"])), "0.8 + 0.04*x");
        assert_eq!(poly_in_x(&coeffs(&["2", "-1/5"])), "2 - 0.2*x");
        assert_eq!(poly_in_x(&coeffs(&["-2/5", "3/25"])), "-0.4 + 0.12*x");
    }

    #[test]
    fn poly_skips_zero_coefficients_and_marks_powers() {
        assert_eq!(poly_in_x(&coeffs(&["0", "1/5"])), "0.2*x");
        assert_eq!(poly_in_x(&coeffs(&["1", "0", "-1"])), "1 - 1*x^2");
        assert_eq!(poly_in_x(&coeffs(&["0", "0", "0", "9"])), "9*x^3");
    }

    #[test]
    fn zero_polynomial_renders_as_zero() {
        assert_eq!(poly_in_x(&[]), "0");
        assert_eq!(poly_in_x(&coeffs(&["0", "0"])), "0");
    }

    #[test]
    fn text_table_aligns_and_trims_trailing_space() {
        let headers = vec!["a".to_string(), "long".to_string(), "c".to_string()];
        let rows = vec![
            vec!["wide".to_string(), "x".to_string(), "1".to_string()],
            vec!["y".to_string(), "z".to_string(), "22".to_string()],
        ];
        assert_eq!(
            text_table(&headers, &rows),
            "a     long  c\nwide  x     1\ny     z     22\n"
        );
    }

    #[test]
    fn csv_quotes_only_fields_that_need_it() {
        let rows = vec![
            vec!["formula".to_string(), "weight".to_string()],
            vec!["f(x), g(x)".to_string(), "0.5".to_string()],
        ];
        assert_eq!(csv_table(&rows), "formula,weight\n\"f(x), g(x)\",0.5\n");
    }
}
