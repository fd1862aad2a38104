use num_bigint::BigInt;
use proptest::prelude::*;
use qrk::catalog::{classical, finite, verify, xids, Overrides};
use qrk::dsl::{eval_series, parse, Bound, Expr, Func};
use qrk::exact::{BigRat, QLaurent, QRat};
use qrk::series::XSeries;
use qrk::verdict::Status;
use qrk::Error;

fn eval(text: &str, order: usize) -> XSeries {
    eval_series(&parse(text).unwrap(), order, 24).unwrap()
}

fn scalar(text: &str) -> QRat {
    let s = eval(text, 0);
    s.coeffs()[0].clone()
}

#[test]
fn parses_calls_and_bound_forms() {
    assert_eq!(parse("qnum(3)").unwrap(), Expr::Call(Func::QNum, vec![Expr::Int(3.into())]));
    match parse("sum(k,1,inf, x^k/qnum(k))").unwrap() {
        Expr::Sum { var, hi: Bound::Inf, body, .. } => {
            assert_eq!(var, "k");
            assert!(matches!(*body, Expr::Div(..)));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn syntax_errors_report_position_and_expectation() {
    let e = parse("qbinom(2").unwrap_err();
    assert_eq!(e.pos, 8);
    assert!(e.expected.contains(&"','".to_string()), "{e}");
    let e = parse("1 + * 2").unwrap_err();
    assert_eq!(e.pos, 4);
    assert!(e.expected.contains(&"expression".to_string()));
    assert_eq!(parse("k + 1").unwrap_err().pos, 0);
    assert_eq!(parse("sum(k, 0, 3, k) + k").unwrap_err().pos, 18);
    assert_eq!(parse("sum(k, inf, 3, k)").unwrap_err().pos, 7);
    assert_eq!(parse("qfact(1, 2)").unwrap_err().pos, 7);
    assert_eq!(parse("x @ 2").unwrap_err().pos, 2);
}

#[test]
fn minus_binds_looser_than_power() {
    assert_eq!(parse("-x^2").unwrap(), Expr::Neg(Box::new(Expr::Pow(Box::new(Expr::X), Box::new(Expr::Int(2.into()))))));
    let s = eval("-x^2", 3);
    assert_eq!(s.coeffs()[2], QRat::from_int(-1));
}

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (0u32..50).prop_map(|n| Expr::Int(n.into())),
        Just(Expr::X),
        Just(Expr::Q),
        Just(Expr::Var("k".into())),
    ]
}

fn arb_expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(5, 48, 3, |inner| {
        let b = |e: Expr| Box::new(e);
        prop_oneof![
            inner.clone().prop_map(move |a| Expr::Neg(b(a))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Add(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Sub(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Mul(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Div(b(x), b(y))),
            (inner.clone(), 0u32..6, any::<bool>()).prop_map(move |(x, n, neg)| {
                let e = Expr::Int(n.into());
                Expr::Pow(b(x), b(if neg { Expr::Neg(b(e)) } else { e }))
            }),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Pow(b(x), b(Expr::Sub(b(y), b(Expr::X))))),
            (inner.clone(), inner.clone(), prop::option::of(inner.clone()), any::<bool>()).prop_map(
                move |(lo, body, hi, sum)| {
                    let hi = hi.map_or(Bound::Inf, |h| Bound::Finite(b(h)));
                    if sum {
                        Expr::Sum { var: "k".into(), lo: b(lo), hi, body: b(body) }
                    } else {
                        Expr::Prod { var: "j".into(), lo: b(lo), hi, body: b(body) }
                    }
                }
            ),
            (0usize..Func::ALL.len(), prop::collection::vec(inner, 3)).prop_map(|(i, args)| {
                let f = Func::ALL[i];
                Expr::Call(f, args.into_iter().take(f.arity().1).collect())
            }),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn render_then_parse_is_identity(e in arb_expr()) {
        // Close over the free `k` so every variable is in scope.
        let closed = Expr::Sum { var: "k".into(), lo: Box::new(Expr::Int(0.into())), hi: Bound::Finite(Box::new(Expr::Int(2.into()))), body: Box::new(e) };
        let text = closed.to_string();
        let back = parse(&text);
        prop_assert_eq!(back.as_ref().ok(), Some(&closed), "{}", text);
    }
}

#[test]
fn evaluates_q_numbers_and_geometric_series() {
    assert_eq!(scalar("qnum(3)"), QRat::from_laurent(QLaurent::from_ints(0, &[1, 1, 1])));
    assert_eq!(scalar("qnum(3, 2)"), QRat::from_laurent(QLaurent::from_ints(0, &[1, 0, 1, 0, 1])));
    let s = eval("1/(1-x)", 3);
    assert_eq!(s.order(), 3);
    assert!(s.coeffs().iter().all(QRat::is_one));
    assert_eq!(scalar("qfact(3)"), scalar("qnum(1)*qnum(2)*qnum(3)"));
    assert_eq!(scalar("qbinom(4, 2)"), scalar("qfact(4)/(qfact(2)*qfact(2))"));
    assert_eq!(scalar("qpow(2, 3)"), scalar("qnum(2,1)*qnum(2,2)*qnum(2,3)"));
    assert_eq!(scalar("qshift(1, q, 2)"), scalar("(1+q)*(1+q^2)"));
    assert_eq!(scalar("qpoch(q, q, 2)"), scalar("(1-q)*(1-q^2)"));
    assert_eq!(scalar("q^-2 * q^2"), QRat::one());
}

#[test]
fn series_operators() {
    // Log(1 + x) against its definition.
    let a = eval("qlog(1 + x)", 8);
    let b = eval("sum(k, 0, inf, (-1)^k * x^(k+1) / qnum(k+1))", 8);
    assert_eq!(a, b);
    // D_q x^3 = [3] x^2, known to one order less.
    let d = eval("qderiv(x^3)", 5);
    assert_eq!(d.order(), 4);
    assert_eq!(d.coeffs()[2], QRat::from_laurent(QLaurent::from_ints(0, &[1, 1, 1])));
    assert_eq!(eval("subqx(x^2)", 4), eval("q^2*x^2", 4));
    let log = eval("log(1/(1-x))", 6);
    let want = eval("sum(k, 1, inf, x^k / k)", 6);
    assert_eq!(log, want);
    // Euler: prod (1 - x^n) has x^1, x^2 coefficients -1.
    let euler = eval("prod(n, 1, inf, 1 - x^n)", 7);
    let got: Vec<String> = euler.coeffs().iter().map(|c| c.to_string()).collect();
    assert_eq!(got, ["1", "-1", "-1", "0", "0", "1", "0", "1"]);
}

#[test]
fn q_only_infinite_sums_use_the_q_order() {
    let s = eval_series(&parse("sum(k, 0, inf, q^k)").unwrap(), 2, 10).unwrap();
    let want = QRat::from_laurent(QLaurent::from_ints(0, &[1; 11]));
    assert_eq!(s.coeffs()[0], want);
    assert_eq!(s.coeffs()[1], QRat::zero());
}

#[test]
fn evaluation_errors() {
    let nc = eval_series(&parse("sum(k, 0, inf, x)").unwrap(), 4, 4).unwrap_err();
    assert!(matches!(nc, Error::NonConvergent(_)), "{nc}");
    let z = eval_series(&parse("1/x").unwrap(), 4, 4).unwrap_err();
    assert!(matches!(z, Error::ZeroConstantTerm), "{z}");
    let bad = eval_series(&parse("x^q").unwrap(), 4, 4).unwrap_err();
    assert!(matches!(bad, Error::InvalidArgument(_)));
    assert!(matches!(eval_series(&parse("1/(q-q)").unwrap(), 1, 1), Err(Error::DivisionByZero)));
}

fn eq2_text(n: u64, side: u8) -> String {
    if side == 0 {
        format!("sum(k, 1, {n}, prod(i, 1, k, ({n} - k + i)/i) * (-2)^(k-1) / k)")
    } else {
        format!("sum(k, 1, {n}, (1 - (-1)^k) / (2*k))")
    }
}

#[test]
fn eq2_transcription_agrees_with_the_catalog() {
    assert_eq!(verify("eq2", &Overrides::default()).unwrap().status, Status::Pass);
    for n in 1..=20u64 {
        let lhs = scalar(&eq2_text(n, 0)).constant_value().unwrap();
        let rhs = scalar(&eq2_text(n, 1)).constant_value().unwrap();
        assert_eq!(lhs, classical::eq2_binomial_sum(n));
        assert_eq!(rhs, classical::harmonic_odd(n));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn eq53_transcription_agrees_with_the_catalog() {
    assert_eq!(verify("eq53", &Overrides::default()).unwrap().status, Status::Pass);
    let lhs = "sum(k, 1, N, qbinom(N, k) * (-1)^(k-1) * q^(k*(k+1)/2) / qnum(k))";
    let rhs = "sum(k, 1, N, q^k / qnum(k))";
    for n in 1..=12u64 {
        let l = scalar(&lhs.replace('N', &n.to_string()));
        let r = scalar(&rhs.replace('N', &n.to_string()));
        assert_eq!(l, finite::eq53_lhs(n));
        assert_eq!(r, finite::eq53_rhs(n));
    }
    let diff = format!("({}) - ({})", lhs.replace('N', "5"), rhs.replace('N', "5"));
    assert!(scalar(&diff).is_zero());
}

#[test]
fn eq67_line_one_transcription_agrees_with_the_catalog() {
    assert_eq!(verify("eq67.1", &Overrides::default()).unwrap().status, Status::Pass);
    let t = 12;
    let (closed, classical, quantum) = xids::eq67_sides(1, t).unwrap();
    assert_eq!(eval("1/(1-x)", t), closed);
    assert_eq!(eval("sum(k, 0, inf, (-1)^k * x^k / (1-x)^(k+2))", t), classical);
    assert_eq!(eval("sum(k, 0, inf, (-1)^k * q^(k*(k+1)/2) * qpow(1, k) * x^k / qshift(1, -x, k+2))", t), quantum);
}

#[test]
fn big_literals_survive() {
    let big = BigInt::from(10).pow(30);
    let e = parse(&big.to_string()).unwrap();
    assert_eq!(e, Expr::Int(big.clone()));
    assert_eq!(scalar(&big.to_string()).constant_value(), Some(BigRat::from_integer(big)));
}
