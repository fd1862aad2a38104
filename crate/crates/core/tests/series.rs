use num_bigint::BigInt;
use proptest::prelude::*;
use qrk::exact::rational::{int, rat};
use qrk::exact::{BigRat, QLaurent, QRat};
use qrk::qkit::{q_binomial, qn_rat};
use qrk::series::*;
use qrk::Error;

fn qpoly(c: &[i64]) -> QRat {
    QRat::from_laurent(QLaurent::from_ints(0, c))
}

fn series_from(coeffs: &[Vec<i64>], order: usize) -> XSeries {
    let cs: Vec<QRat> = coeffs.iter().map(|c| qpoly(c)).collect();
    XSeries::from_poly(&cs, order)
}

fn coeff_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, 0..3), 1..6)
}

fn pow_rat(v: &BigRat, n: usize) -> BigRat {
    (0..n).fold(int(1), |acc, _| acc * v)
}

/// Evaluates a polynomial in x of degree <= order at q = q0, x = x0.
fn eval_poly(s: &XSeries, q0: &BigRat, x0: &BigRat) -> BigRat {
    s.eval_q(q0)
        .unwrap()
        .iter()
        .enumerate()
        .fold(int(0), |acc, (n, c)| acc + c * pow_rat(x0, n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn q_leibniz_rule(a in coeff_strategy(), b in coeff_strategy()) {
        let t = 10;
        let f = series_from(&a, t);
        let g = series_from(&b, t);
        let lhs = q_derivative(&(&f * &g));
        let rhs = &(&subst_qx(&f, 1).truncate(t - 1) * &q_derivative(&g))
            + &(&g.truncate(t - 1) * &q_derivative(&f));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reciprocal_is_an_involution(mut a in coeff_strategy()) {
        a[0] = vec![1, 1];
        let f = series_from(&a, 6);
        let r = series_recip(&f).unwrap();
        prop_assert!((&r * &f) == XSeries::one(6));
        prop_assert_eq!(series_recip(&r).unwrap(), f);
    }

    #[test]
    fn derivative_matches_finite_difference(
        a in prop::collection::vec(-9i64..=9, 1..7),
        qn in 2i64..7, qd in 1i64..5, xn in -4i64..5, xd in 1i64..4,
    ) {
        let q0 = rat(qn, qd);
        prop_assume!(q0 != int(1));
        let x0 = rat(xn, xd);
        prop_assume!(xn != 0);
        let t = a.len();
        let f = XSeries::from_poly(
            &a.iter().map(|&c| QRat::from_int(c)).collect::<Vec<_>>(), t);
        let d = q_derivative(&f);
        let expected = (eval_poly(&f, &q0, &(&q0 * &x0)) - eval_poly(&f, &q0, &x0))
            / ((&q0 - int(1)) * &x0);
        prop_assert_eq!(eval_poly(&d, &q0, &x0), expected);
    }

    #[test]
    fn jackson_integral_inverts_derivative(a in coeff_strategy()) {
        let f = series_from(&a, 6);
        prop_assert_eq!(q_derivative(&jackson_integral(&f)), f);
    }
}

#[test]
fn derivative_of_power_over_shifted_product() {
    let t = 14;
    let alphas = [QRat::one(), QRat::from_rat(rat(-3, 7)), QRat::from_rat(rat(5, 2)), QRat::q_pow(1), qpoly(&[1, 1])];
    for k in 1..=6u32 {
        for alpha in alphas.iter() {
            let lhs = XSeries::monomial(QRat::one(), k as usize, t);
            let lhs = &lhs * &series_recip(&one_minus_dot(alpha, k, t)).unwrap();
            let rhs = XSeries::monomial(qn_rat(k as i64), k as usize - 1, t - 1);
            let rhs = &rhs * &series_recip(&one_minus_dot(alpha, k + 1, t - 1)).unwrap();
            assert_eq!(q_derivative(&lhs), rhs, "k = {k}");
            if k > 5 {
                continue;
            }
            let lhs = XSeries::monomial(QRat::one(), k as usize, t);
            let lhs = &lhs * &series_recip(&one_minus_dot(alpha, 2 * k, t)).unwrap();
            let tail = XSeries::from_poly(&[QRat::one(), alpha * &QRat::q_pow(k as i64)], t - 1);
            let rhs = &XSeries::monomial(qn_rat(k as i64), k as usize - 1, t - 1) * &tail;
            let rhs = &rhs * &series_recip(&one_minus_dot(alpha, 2 * k + 1, t - 1)).unwrap();
            assert_eq!(q_derivative(&lhs), rhs, "k = {k}");
        }
    }
}

#[test]
fn euler_formula_for_shifted_geometric_product() {
    let t = 10;
    for k in 0..5u32 {
        let lhs = series_recip(&one_minus_dot(&QRat::one(), k + 1, t)).unwrap();
        for n in 0..=t {
            assert_eq!(lhs.coeff(n).unwrap(), &q_binomial(k as i64 + n as i64, n as u32));
        }
    }
}

#[test]
fn qlog_is_jackson_integral_of_reciprocal() {
    let t = 9;
    let z = XSeries::x(t);
    let log = series_qlog(&z).unwrap();
    let one_plus = &XSeries::one(t - 1) + &z.truncate(t - 1);
    let integral = jackson_integral(&series_recip(&one_plus).unwrap());
    assert_eq!(log, integral);
}

#[test]
fn qlog_specializes_to_log_at_q_one() {
    let t = 8;
    let z = XSeries::from_poly(&[QRat::zero(), QRat::from_int(2), QRat::from_int(-1)], t);
    let one = int(1);
    let qlog = series_qlog(&z).unwrap().eval_q(&one).unwrap();
    let log = series_log(&(&XSeries::one(t) + &z)).unwrap().eval_q(&one).unwrap();
    assert_eq!(qlog, log);
}

#[test]
fn log_of_geometric_series() {
    // -log(1 - x) = sum x^n / n
    let t = 10;
    let one_minus = XSeries::from_poly(&[QRat::one(), QRat::from_int(-1)], t);
    let l = series_log(&one_minus).unwrap();
    for n in 1..=t {
        assert_eq!(l.coeff(n).unwrap(), &QRat::from_rat(rat(-1, n as i64)));
    }
    assert_eq!(series_log(&XSeries::constant(QRat::from_int(2), 3)), Err(Error::ConstantTermNotOne));
}

#[test]
fn reading_past_the_order_fails() {
    let s = XSeries::one(4);
    assert_eq!(s.coeff(5), Err(Error::BeyondOrder { index: 5, order: 4 }));
    assert!(s.coeff(4).is_ok());
    assert_eq!(series_recip(&XSeries::x(3)), Err(Error::ZeroConstantTerm));
    assert_eq!(series_qlog(&XSeries::one(3)), Err(Error::ConstantTermNotZero));
}

#[test]
fn euler_product_gives_pentagonal_numbers() {
    let c = product_expand_int(&(1..=30).map(|k| (k, 1)).collect::<Vec<_>>(), 30);
    let mut expected = vec![BigInt::from(0); 31];
    for m in -5i64..=5 {
        let e = m * (3 * m - 1) / 2;
        if (0..=30).contains(&e) {
            expected[e as usize] = BigInt::from(if m % 2 == 0 { 1 } else { -1 });
        }
    }
    assert_eq!(c, expected);
}

#[test]
fn reciprocal_euler_product_counts_partitions() {
    let c = product_expand_int(&(1..=12).map(|k| (k, -1)).collect::<Vec<_>>(), 12);
    let p: Vec<i64> = vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
    assert_eq!(c, p.into_iter().map(BigInt::from).collect::<Vec<_>>());
    let dense = series_recip(&product_expand(&(1..=12).map(|k| (k, 1)).collect::<Vec<_>>(), 12)).unwrap();
    assert_eq!(dense, product_expand(&(1..=12).map(|k| (k, -1)).collect::<Vec<_>>(), 12));
}

#[test]
fn adaptive_sum_of_geometric_terms() {
    let t = 6;
    let s = adaptive_xsum(t, default_cap(t), |k| Ok(XSeries::monomial(QRat::q_pow(k as i64), k, t))).unwrap();
    let prod = subst_qx(&series_recip(&XSeries::from_poly(&[QRat::one(), QRat::from_int(-1)], t)).unwrap(), 1);
    assert_eq!(s, prod);
}

#[test]
fn adaptive_sum_rejects_stalled_valuations() {
    let r = adaptive_xsum(5, 100, |_| Ok(XSeries::x(5)));
    assert!(matches!(r, Err(Error::NonConvergent(_))));
    let r = adaptive_xsum(5, 20, |_| Ok(XSeries::zero(5)));
    assert!(matches!(r, Err(Error::NonConvergent(_))));
}

#[test]
fn adaptive_q_product_of_euler_factors() {
    let q_order = 15;
    let p = adaptive_qprod(q_order, 100, |k| Ok(&QRat::one() - &QRat::q_pow(k as i64 + 1))).unwrap();
    let c = product_expand_int(&(1..=15).map(|k| (k, 1)).collect::<Vec<_>>(), 15);
    let expected = QLaurent::new('q', 0, c.into_iter().map(BigRat::from_integer).collect());
    assert_eq!(p, expected);
}

#[test]
fn jackson_sum_of_constant_is_one() {
    // (1 - Q) sum Q^j = 1
    let one = QLaurent::one();
    let s = jackson_sum_01(std::slice::from_ref(&one), std::slice::from_ref(&one), 1, 12).unwrap();
    assert_eq!(s, one);
    // integral of t: (1 - Q) sum Q^{2j} = 1 / (1 + Q)
    let s = jackson_sum_01(&[QLaurent::zero(), one.clone()], std::slice::from_ref(&one), 1, 12).unwrap();
    let expected = QRat::new(&one, &QLaurent::from_ints(0, &[1, 1])).unwrap().expand(12);
    assert_eq!(s, expected);
}

#[test]
fn jackson_sum_rejects_non_unit_denominator() {
    let one = QLaurent::one();
    let r = jackson_sum_01(std::slice::from_ref(&one), &[QLaurent::zero(), one.clone()], 1, 5);
    assert!(matches!(r, Err(Error::InvalidArgument(_))));
}

#[test]
fn display_of_series() {
    let s = XSeries::from_poly(&[QRat::one(), qpoly(&[1, 1]), QRat::zero(), QRat::from_int(-3)], 4);
    assert_eq!(s.to_string(), "1 + (1 + q)*x - 3*x^3 + O(x^5)");
    assert_eq!(XSeries::zero(2).to_string(), "0 + O(x^3)");
}

#[test]
fn linear_division_matches_reciprocal() {
    let t = 9;
    let a = series_from(&[vec![1, 2], vec![0, -1], vec![3]], t);
    let alpha = QRat::from_rat(rat(2, 3)).shift(1);
    let fast = div_one_minus_dot(&a, &alpha, 4);
    let slow = &a * &series_recip(&one_minus_dot(&alpha, 4, t)).unwrap();
    assert_eq!(fast, slow);
}
