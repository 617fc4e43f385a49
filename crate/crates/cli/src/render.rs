//! Output in the four formats. Every renderer is a pure function of its
//! input, so repeated invocations print identical bytes.

use std::fmt::Write as _;

use serde_json::{json, Value};
use umbral::poly::Var;
use umbral::scalar::format_rational;
use umbral::sheffer::matrix_csv;
use umbral::special::{Check, Observation};
use umbral::{Poly, Rational};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
    Latex,
}

pub fn json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("output serializes");
    s.push('\n');
    s
}

/// Coefficients of `x^0..x^width-1`; polynomials in `y` cannot be tabulated.
pub fn coefficient_rows(polys: &[Poly]) -> Result<Vec<Vec<Rational>>, CliError> {
    let width = polys.iter().map(|p| p.degree(Var::X) as usize + 1).max().unwrap_or(1).max(polys.len());
    polys
        .iter()
        .map(|p| {
            if p.degree(Var::Y) > 0 {
                return Err(CliError::Usage(format!("cannot tabulate {p}: it involves y")));
            }
            Ok((0..width).map(|k| p.coeff(k as u32, 0)).collect())
        })
        .collect()
}

pub fn latex_rational(r: &Rational) -> String {
    if r.is_integer() {
        return r.to_string();
    }
    let text = format_rational(r);
    let (sign, body) = text.strip_prefix('-').map_or(("", text.as_str()), |b| ("-", b));
    let (p, q) = body.split_once('/').expect("non-integer has a denominator");
    format!("{sign}\\frac{{{p}}}{{{q}}}")
}

fn latex_matrix(rows: &[Vec<Rational>]) -> String {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = format!("\\begin{{array}}{{c|{}}}\n", "c".repeat(width));
    out.push('n');
    for k in 0..width {
        let _ = write!(out, " & x^{{{k}}}");
    }
    out.push_str(" \\\\\n\\hline\n");
    for (n, row) in rows.iter().enumerate() {
        let _ = write!(out, "{n}");
        for v in row {
            let _ = write!(out, " & {}", latex_rational(v));
        }
        out.push_str(" \\\\\n");
    }
    out.push_str("\\end{array}\n");
    out
}

fn pretty_lines<T: std::fmt::Display>(items: &[T]) -> String {
    let w = items.len().saturating_sub(1).to_string().len();
    let mut out = String::new();
    for (n, p) in items.iter().enumerate() {
        let _ = writeln!(out, "{n:>w$}  {p}");
    }
    out
}

fn pretty_matrix(rows: &[Vec<Rational>]) -> String {
    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(format_rational).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let nw = rows.len().saturating_sub(1).to_string().len();
    let mut out = String::new();
    for (n, row) in cells.iter().enumerate() {
        let _ = write!(out, "{n:>nw$} ");
        for (k, c) in row.iter().enumerate() {
            if k <= n {
                let _ = write!(out, " {c:>width$}");
            }
        }
        out.push('\n');
    }
    out
}

fn string_matrix(rows: &[Vec<Rational>]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.iter().map(format_rational).collect()).collect()
}

/// A list of polynomials: moments of an umbra or a polynomial sequence.
pub fn polys(format: Format, polys: &[Poly], json_head: Value) -> Result<String, CliError> {
    Ok(match format {
        Format::Pretty => pretty_lines(polys),
        Format::Json => {
            let mut v = json_head;
            v["polynomials"] = serde_json::to_value(polys).expect("polynomials serialize");
            json_string(&v)
        }
        Format::Csv => matrix_csv(&coefficient_rows(polys)?)?,
        Format::Latex => {
            if polys.iter().any(|p| p.degree(Var::Y) > 0) {
                let mut out = String::from("\\begin{array}{c|l}\nn & p_n \\\\\n\\hline\n");
                for (n, p) in polys.iter().enumerate() {
                    let _ = writeln!(out, "{n} & {} \\\\", p.to_latex());
                }
                out.push_str("\\end{array}\n");
                out
            } else {
                latex_matrix(&coefficient_rows(polys)?)
            }
        }
    })
}

/// A lower-triangular matrix with its verification flag.
pub fn matrix(format: Format, rows: &[Vec<Rational>], verified: bool, json_head: Value) -> Result<String, CliError> {
    Ok(match format {
        Format::Pretty => format!("{}verified: {verified}\n", pretty_matrix(rows)),
        Format::Json => {
            let mut v = json_head;
            v["verified"] = json!(verified);
            v["matrix"] = json!(string_matrix(rows));
            json_string(&v)
        }
        Format::Csv => matrix_csv(rows)?,
        Format::Latex => latex_matrix(rows),
    })
}

pub fn report(
    format: Format,
    sequence: &[Poly],
    checks: &[Check],
    observations: &[Observation],
    json_head: Value,
) -> Result<String, CliError> {
    Ok(match format {
        Format::Pretty => {
            let mut out = pretty_lines(sequence);
            for c in checks {
                let _ = writeln!(out, "[{}] {}", if c.passed { "pass" } else { "FAIL" }, c.name);
            }
            for o in observations {
                let _ = writeln!(out, "note: {} = {}", o.label, o.value);
            }
            out
        }
        Format::Json => {
            let mut v = json_head;
            v["passed"] = json!(checks.iter().all(|c| c.passed));
            v["polynomials"] = serde_json::to_value(sequence).expect("polynomials serialize");
            v["checks"] = serde_json::to_value(checks).expect("checks serialize");
            v["observations"] = serde_json::to_value(observations).expect("observations serialize");
            json_string(&v)
        }
        Format::Csv | Format::Latex => polys(format, sequence, Value::Null)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use umbral::scalar::{frac, int};

    #[test]
    fn latex_fractions() {
        assert_eq!(latex_rational(&frac(-1, 2)), "-\\frac{1}{2}");
        assert_eq!(latex_rational(&int(3)), "3");
    }

    #[test]
    fn pretty_matrix_is_triangular() {
        let rows = vec![vec![int(1), int(0)], vec![int(0), int(1)]];
        assert_eq!(pretty_matrix(&rows), "0  1\n1  0 1\n");
    }
}
