use std::fmt::Display;

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exact::{BigRat, QLaurent, QRat};
use crate::series::{adaptive_xsum, default_cap, div_one_minus, div_one_minus_dot, XSeries};
use crate::verdict::Verdict;

pub(crate) fn r(n: i64, d: i64) -> QRat {
    QRat::from_rat(BigRat::new(n.into(), d.into()))
}

pub(crate) fn int(n: i64) -> QRat {
    QRat::from_int(n)
}

pub(crate) fn q(e: i64) -> QRat {
    QRat::q_pow(e)
}

pub(crate) fn sign(k: u64) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub(crate) fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

pub(crate) fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

pub(crate) fn brat(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRat {
    BigRat::new(n.into(), d.into())
}

pub(crate) fn ipow(base: i64, e: u64) -> BigInt {
    BigInt::from(base).pow(e as u32)
}

/// `c x^n` of order `t`.
pub(crate) fn xmono(c: QRat, n: usize, t: usize) -> XSeries {
    XSeries::monomial(c, n, t)
}

/// `c x^n / (1 ∸ alpha x)^k`.
pub(crate) fn over_dot(c: QRat, n: usize, alpha: &QRat, k: u32, t: usize) -> XSeries {
    div_one_minus_dot(&xmono(c, n, t), alpha, k)
}

/// `c x^n / (1 - beta x)^k`.
pub(crate) fn over_pow(c: QRat, n: usize, beta: &QRat, k: u32, t: usize) -> XSeries {
    (0..k).fold(xmono(c, n, t), |acc, _| div_one_minus(&acc, beta))
}

/// `1 / (1 - x)`.
pub(crate) fn geometric(t: usize) -> XSeries {
    over_dot(QRat::one(), 0, &QRat::one(), 1, t)
}

/// `sum_{k >= start} term(k)` under the valuation contract.
pub(crate) fn xsum_from(
    start: usize,
    t: usize,
    mut term: impl FnMut(usize) -> Result<XSeries>,
) -> Result<XSeries> {
    adaptive_xsum(t, default_cap(t), |i| term(start + i))
}

/// `sum_n c(n) x^n` for `n` in `0..=t`.
pub(crate) fn xseries_fn(t: usize, mut c: impl FnMut(usize) -> QRat) -> XSeries {
    XSeries::from_coeffs((0..=t).map(&mut c).collect())
}

pub(crate) fn compare_series(v: Verdict, lhs: &XSeries, rhs: &XSeries) -> Verdict {
    let t = lhs.order().min(rhs.order());
    match lhs.first_difference(rhs) {
        None => v.passed(format!("x^0..x^{t}")),
        Some(n) => v.failed(
            format!("x^{n}"),
            [("lhs", lhs.coeffs()[n].to_string()), ("rhs", rhs.coeffs()[n].to_string())],
        ),
    }
}

/// Compares truncated q-series up to `q^q_order`.
pub(crate) fn compare_q(v: Verdict, lhs: &QLaurent, rhs: &QLaurent, q_order: i64) -> Verdict {
    let l = lhs.truncate(q_order);
    let rr = rhs.truncate(q_order);
    if l == rr {
        return v.passed(format!("through q^{q_order}"));
    }
    let low = l.min_exponent().min(rr.min_exponent());
    let e = (low..=q_order).find(|&e| l.coeff(e) != rr.coeff(e)).unwrap_or(q_order);
    v.failed(format!("q^{e}"), [("lhs", l.coeff(e).to_string()), ("rhs", rr.coeff(e).to_string())])
}

/// Runs `check` over `items`, stopping at the first mismatch.
pub(crate) fn check_each<I, L, R>(
    v: Verdict,
    range: String,
    items: impl IntoIterator<Item = I>,
    mut check: impl FnMut(&I) -> Result<(L, R)>,
    label: impl Fn(&I) -> String,
) -> Result<Verdict>
where
    L: PartialEq<R> + Display,
    R: Display,
{
    for item in items {
        let (l, rr) = check(&item)?;
        if l != rr {
            return Ok(v.failed(label(&item), [("lhs", l.to_string()), ("rhs", rr.to_string())]));
        }
    }
    Ok(v.passed(range))
}

/// Sequential x-series checks: the first failing one decides.
pub(crate) fn all_series(
    v: Verdict,
    cases: impl IntoIterator<Item = Result<(String, XSeries, XSeries)>>,
) -> Result<Verdict> {
    let mut range = String::new();
    for case in cases {
        let (label, lhs, rhs) = case?;
        let out = compare_series(v.clone(), &lhs, &rhs);
        if !out.is_pass() {
            let at = out.first_failure.clone().unwrap_or_default();
            let mut out = out;
            out.first_failure = Some(format!("{label}: {at}"));
            return Ok(out);
        }
        range = out.witness["range"].clone();
    }
    Ok(v.passed(range))
}

/// Small rational, nonzero and never `-1`, where `(a ∔ 1)^k` vanishes for every `k` and the
/// adaptive sums of the random-parameter identities lose all terms.
pub(crate) fn random_rat(rng: &mut ChaCha8Rng) -> QRat {
    loop {
        let n: i64 = rng.gen_range(-6..=6);
        let d: i64 = rng.gen_range(1..=5);
        if n != 0 && n != -d {
            return r(n, d);
        }
    }
}

/// Random `c q^e` with `c` rational and `e` in `0..=2`.
pub(crate) fn random_qmono(rng: &mut ChaCha8Rng) -> QRat {
    let e = rng.gen_range(0..=2);
    random_rat(rng).shift(e)
}
