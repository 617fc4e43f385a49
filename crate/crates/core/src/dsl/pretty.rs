use crate::expr::{Expr, ExprKind};
use crate::scalar::{format_rational, Rational};

const SUM: u8 = 1;
const TERM: u8 = 2;
const CHAIN: u8 = 3;
const POSTFIX: u8 = 4;
const PRIMARY: u8 = 5;

fn precedence(e: &Expr) -> u8 {
    use ExprKind::*;
    match &e.kind {
        Sum(..) => SUM,
        Product(..) | ScalarMul(..) => TERM,
        Dot(..) => CHAIN,
        Power(..) | DotPower(..) => POSTFIX,
        _ => PRIMARY,
    }
}

/// Canonical text for `e`; parsing it gives back `e`.
pub fn pretty_print(e: &Expr) -> String {
    let mut out = String::new();
    write(e, &mut out);
    out
}

fn write_at(e: &Expr, min: u8, out: &mut String) {
    if precedence(e) < min {
        out.push('(');
        write(e, out);
        out.push(')');
    } else {
        write(e, out);
    }
}

fn number(r: &Rational) -> String {
    format_rational(r)
}

fn write(e: &Expr, out: &mut String) {
    use ExprKind::*;
    match &e.kind {
        Atom { name, primes } => {
            out.push_str(name);
            for _ in 0..*primes {
                out.push('\'');
            }
        }
        Indeterminate(v) => out.push_str(v.name()),
        Number(r) => out.push_str(&number(r)),
        Sum(l, r) => {
            write_at(l, SUM, out);
            match &r.kind {
                InverseDot(inner) => {
                    out.push_str(" - ");
                    write_at(inner, TERM, out);
                }
                _ => {
                    out.push_str(" + ");
                    write_at(r, TERM, out);
                }
            }
        }
        Product(l, r) => {
            // A bare literal on the left would read back as a scalar multiple.
            if matches!(l.kind, Number(_)) {
                out.push('(');
                write(l, out);
                out.push(')');
            } else {
                write_at(l, TERM, out);
            }
            out.push_str(" * ");
            write_at(r, CHAIN, out);
        }
        ScalarMul(c, inner) => {
            out.push_str(&number(c));
            out.push_str(" * ");
            write_at(inner, CHAIN, out);
        }
        Dot(l, r) => {
            write_at(l, POSTFIX, out);
            out.push_str(" . ");
            write_at(r, CHAIN, out);
        }
        Power(inner, k) => {
            write_at(inner, POSTFIX, out);
            out.push_str(&format!(" ^ {k}"));
        }
        DotPower(inner, k) => {
            write_at(inner, POSTFIX, out);
            out.push_str(&format!(" ^. {k}"));
        }
        InverseDot(inner) => call("inv", &[inner], out),
        CompInv(inner) => call("cinv", &[inner], out),
        Adjoint(inner) => call("adj", &[inner], out),
        Deriv(inner) => call("d", &[inner], out),
        Bar(inner) => call("bar", &[inner], out),
        Fresh(inner) => call("fresh", &[inner], out),
        DisjointSum(l, r) => call("dsum", &[l, r], out),
        DisjointDiff(l, r) => call("ddiff", &[l, r], out),
    }
}

fn call(name: &str, args: &[&Expr], out: &mut String) {
    out.push_str(name);
    out.push('(');
    for (i, a) in args.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        write(a, out);
    }
    out.push(')');
}
