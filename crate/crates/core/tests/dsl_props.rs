mod common;

use common::dsl::{depth, expr, malformed_corpus};
use proptest::prelude::*;
use umbral::dsl::{parse, pretty_print, tokenize};
use umbral::expr::{Expr, ExprKind};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn pretty_print_round_trips(e in expr()) {
        prop_assert!(depth(&e) <= 6);
        let text = pretty_print(&e);
        let back = parse(&text).map_err(|err| TestCaseError::fail(format!("{text}: {}", err.message)))?;
        prop_assert_eq!(&back, &e, "{}", text);
        prop_assert_eq!(pretty_print(&back), text);
    }

    #[test]
    fn lexer_is_lossless(s in "[ \n\t a-z0-9_.^*+/(),'-]{0,40}") {
        if let Ok(tokens) = tokenize(&s) {
            let joined: String = tokens.iter().map(|t| t.lexeme.as_str()).collect();
            prop_assert_eq!(joined, s);
        }
    }

    #[test]
    fn lexer_is_lossless_on_printed_trees(e in expr(), pad in "[ \n]{0,3}") {
        let text = pretty_print(&e).replace(' ', &format!(" {pad}"));
        let joined: String = tokenize(&text).unwrap().iter().map(|t| t.lexeme.as_str()).collect();
        prop_assert_eq!(joined, text.clone());
        prop_assert_eq!(parse(&text).unwrap(), e);
    }

    #[test]
    fn dot_chains_group_to_the_right(names in prop::collection::vec(prop::sample::select(vec!["u", "chi", "bell", "g", "x"]), 2..=6)) {
        let text = names.join(" . ");
        let mut e = parse(&text).unwrap();
        for name in &names[..names.len() - 1] {
            let ExprKind::Dot(l, r) = e.kind else { panic!("{text}") };
            prop_assert_eq!(pretty_print(&l), name.to_string());
            e = *r;
        }
        prop_assert_eq!(pretty_print(&e), names.last().unwrap().to_string());
    }
}

#[test]
fn malformed_inputs_report_stable_positions() {
    let corpus = malformed_corpus();
    assert_eq!(corpus.len(), 20);
    for case in corpus {
        let err = parse(&case.input).expect_err(&case.input);
        assert_eq!(
            (err.position.line, err.position.column, err.message.as_str()),
            (case.line, case.column, case.message.as_str()),
            "{:?}",
            case.input
        );
        let again = parse(&case.input).unwrap_err();
        assert_eq!(again, err);
    }
}

#[test]
fn explicit_grouping_overrides_right_association() {
    let left = parse("(x . b) . a").unwrap();
    assert_eq!(left, Expr::var(umbral::poly::Var::X).dot(Expr::atom("b")).dot(Expr::atom("a")));
    assert_ne!(left, parse("x . b . a").unwrap());
}
