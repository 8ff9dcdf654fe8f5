use clausen_cli::{parse_expr, BinOp, ConstExpr, Func, ParseError};
use proptest::prelude::*;

fn leaf() -> impl Strategy<Value = ConstExpr> {
    prop_oneof![
        4 => "[0-9]{1,3}(\\.[0-9]{1,3})?([eE]-?[0-9]{1,2})?".prop_map(ConstExpr::number),
        1 => Just(ConstExpr::Pi),
        1 => Just(ConstExpr::Catalan),
        1 => Just(ConstExpr::ImagUnit),
    ]
}

fn op() -> impl Strategy<Value = BinOp> {
    prop_oneof![Just(BinOp::Add), Just(BinOp::Sub), Just(BinOp::Mul), Just(BinOp::Div), Just(BinOp::Pow)]
}

fn expr() -> impl Strategy<Value = ConstExpr> {
    leaf().prop_recursive(5, 40, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(ConstExpr::neg),
            (op(), inner.clone(), inner.clone()).prop_map(|(o, l, r)| ConstExpr::binary(o, l, r)),
            (0..Func::ALL.len(), prop::collection::vec(inner, 2)).prop_map(|(k, mut args)| {
                let f = Func::ALL[k];
                args.truncate(f.arity());
                ConstExpr::Call(f, args)
            }),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn print_parse_round_trip(e in expr()) {
        let printed = e.to_string();
        let back = parse_expr(&printed).unwrap();
        prop_assert_eq!(&back, &e);
        prop_assert_eq!(back.to_string(), printed);
    }

    #[test]
    fn whitespace_is_ignored(e in expr()) {
        let printed = e.to_string();
        let squeezed: String = printed.chars().filter(|c| !c.is_whitespace()).collect();
        prop_assert_eq!(parse_expr(&squeezed).unwrap(), e);
    }

    #[test]
    fn truncation_reports_offset_within_input(e in expr(), cut in 0.0f64..1.0) {
        let printed = e.to_string();
        let n = ((printed.len() as f64) * cut) as usize;
        if let Err(err) = parse_expr(&printed[..n]) {
            prop_assert!(err.offset() <= n);
        }
    }
}

#[test]
fn unknown_and_case_sensitive_names() {
    assert!(matches!(parse_expr("CL2(1)"), Err(ParseError::UnknownName { .. })));
    assert!(matches!(parse_expr("Pi"), Err(ParseError::UnknownName { .. })));
    assert!(matches!(parse_expr("catalan"), Err(ParseError::UnknownName { .. })));
    assert!(parse_expr("Catalan").is_ok());
}

#[test]
fn every_function_name_parses_with_its_arity() {
    for f in Func::ALL {
        let args = vec!["1"; f.arity()].join(", ");
        let e = parse_expr(&format!("{}({args})", f.name())).unwrap();
        assert!(matches!(e, ConstExpr::Call(g, ref a) if g == f && a.len() == f.arity()));
        let wrong = vec!["1"; f.arity() + 1].join(", ");
        assert!(matches!(parse_expr(&format!("{}({wrong})", f.name())), Err(ParseError::Arity { .. })));
    }
}
