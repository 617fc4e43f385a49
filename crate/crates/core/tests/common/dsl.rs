//! Random expression trees and the malformed-input corpus.

use proptest::prelude::*;
use umbral::expr::Expr;
use umbral::poly::Var;

use super::q;

pub fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (prop::sample::select(vec!["u", "chi", "bell", "g", "h"]), 0u32..=2).prop_map(|(n, p)| Expr::primed(n, p)),
        prop::sample::select(vec![Var::X, Var::Y]).prop_map(Expr::var),
        (-9i64..=9, 1i64..=4).prop_map(|(p, d)| Expr::number(q(p, d))),
    ]
}

/// Trees with at most 6 levels of operators. `a - b` arises as `a + inv(b)`.
pub fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(6, 64, 2, |inner| {
        let pair = (inner.clone(), inner.clone());
        prop_oneof![
            pair.clone().prop_map(|(a, b)| a.sum(b)),
            pair.clone().prop_map(|(a, b)| a.times(b)),
            pair.clone().prop_map(|(a, b)| a.dot(b)),
            pair.clone().prop_map(|(a, b)| a.dsum(b)),
            pair.prop_map(|(a, b)| a.ddiff(b)),
            (inner.clone(), -5i64..=5, 1i64..=3).prop_map(|(a, p, d)| a.scaled(q(p, d))),
            (inner.clone(), 0u32..=4).prop_map(|(a, k)| a.pow(k)),
            (inner.clone(), 0u32..=4).prop_map(|(a, k)| a.dot_pow(k)),
            inner.clone().prop_map(Expr::inv),
            inner.clone().prop_map(Expr::cinv),
            inner.clone().prop_map(Expr::adj),
            inner.clone().prop_map(Expr::deriv),
            inner.clone().prop_map(Expr::bar),
            inner.prop_map(Expr::fresh),
        ]
    })
}

/// Operator nesting depth; leaves have depth 0.
pub fn depth(e: &Expr) -> usize {
    e.children().into_iter().map(|c| 1 + depth(c)).max().unwrap_or(0)
}

pub struct Malformed {
    pub input: String,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// Parses `malformed.txt`: `input<TAB>line:col<TAB>message`, `\n` escaped.
pub fn malformed_corpus() -> Vec<Malformed> {
    let text = include_str!("../malformed.txt");
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| {
            let mut f = l.split('\t');
            let input = f.next().unwrap().replace("\\n", "\n");
            let (line, column) = f.next().unwrap().split_once(':').unwrap();
            Malformed {
                input,
                line: line.parse().unwrap(),
                column: column.parse().unwrap(),
                message: f.next().unwrap().to_string(),
            }
        })
        .collect()
}
