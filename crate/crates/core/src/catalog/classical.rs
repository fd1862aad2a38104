//! The q = 1 identities: binomial sums and generating functions linear in
//! logarithms.

use crate::error::Result;
use crate::exact::{BigRat, QRat};
use crate::series::{series_log, XSeries};
use crate::verdict::Verdict;

use super::common::*;
use super::Params;

fn rq(v: BigRat) -> QRat {
    QRat::from_rat(v)
}

/// `G_N = sum_{0 <= 2s+1 <= N} 1/(2s+1)`.
pub fn harmonic_odd(n: u64) -> BigRat {
    (0..n).filter(|k| k % 2 == 0).map(|k| brat(1, k as i64 + 1)).sum()
}

/// `G_{N|L} = sum_{1 <= k <= N, L ∤ k} 1/k`.
pub fn harmonic_skip(n: u64, l: u64) -> BigRat {
    (1..=n).filter(|k| k % l != 0).map(|k| brat(1, k as i64)).sum()
}

/// `sum_{k=1}^{N} C(N,k) (-2)^{k-1} / k`.
pub fn eq2_binomial_sum(n: u64) -> BigRat {
    (1..=n).map(|k| brat(binomial(n, k) * ipow(-2, k - 1), k as i64)).sum()
}

pub fn eq2(v: Verdict, p: &Params) -> Result<Verdict> {
    let n = p.order as u64;
    check_each(
        v,
        format!("1 <= N <= {n}"),
        1..=n,
        |&n| Ok((eq2_binomial_sum(n), harmonic_odd(n))),
        |n| format!("N={n}"),
    )
}

pub fn one_minus_x(t: usize) -> XSeries {
    XSeries::from_poly(&[int(1), int(-1)], t)
}

pub fn one_plus_x(t: usize) -> XSeries {
    XSeries::from_poly(&[int(1), int(1)], t)
}

pub fn eq7_sides(t: usize) -> Result<(XSeries, XSeries)> {
    let lhs = xseries_fn(t, |n| rq(harmonic_odd(n as u64)));
    let ratio = &one_plus_x(t) * &geometric(t);
    let rhs = (&geometric(t) * &series_log(&ratio)?).scale(&r(1, 2));
    Ok((lhs, rhs))
}

/// `sum_{k>=1} u^k c_k` for a series `u` with `u(0) = 0`.
fn power_sum(t: usize, u: &XSeries, c: impl Fn(u64) -> QRat) -> Result<XSeries> {
    let mut power = XSeries::one(t);
    xsum_from(1, t, |k| {
        power = &power * u;
        Ok(power.scale(&c(k as u64)))
    })
}

pub fn eq9_sides(t: usize) -> Result<(XSeries, XSeries)> {
    let lhs = &series_log(&one_plus_x(t))? - &series_log(&one_minus_x(t))?;
    let u = over_pow(int(2), 1, &int(1), 1, t);
    let rhs = power_sum(t, &u, |k| r(sign(k - 1), k as i64))?;
    Ok((lhs, rhs))
}

pub fn odd_reciprocals(t: usize) -> XSeries {
    xseries_fn(t, |n| if n % 2 == 1 { r(1, n as i64) } else { int(0) })
}

pub fn eq10_sides(t: usize) -> Result<(XSeries, XSeries)> {
    let u = over_pow(int(1), 1, &int(1), 1, t);
    let rhs = power_sum(t, &u, |k| rq(brat(ipow(-2, k - 1), k as i64)))?;
    Ok((odd_reciprocals(t), rhs))
}

pub fn even_geometric(t: usize) -> XSeries {
    xseries_fn(t, |n| if n % 2 == 0 { int(1) } else { int(0) })
}

pub fn eq12_sides(t: usize) -> Result<(XSeries, XSeries)> {
    let rhs = xsum_from(0, t, |k| {
        Ok(over_pow(rq(BigRat::from_integer(ipow(-2, k as u64))), k, &int(1), k as u32 + 2, t))
    })?;
    Ok((even_geometric(t), rhs))
}

pub fn eq41(v: Verdict, p: &Params) -> Result<Verdict> {
    let n = p.order as u64;
    check_each(
        v,
        format!("1 <= N <= {n}, L = 3"),
        1..=n,
        |&n| {
            let rhs: BigRat = (1..=n)
                .map(|k| brat(ipow(-3, k - 1) * binomial(n + k, 2 * k), k as i64))
                .sum();
            Ok((harmonic_skip(n, 3), rhs))
        },
        |n| format!("N={n}"),
    )
}

/// `sum_{k=1}^{N} C(N,k) (-1)^{k-1}/k - sum_{k=1}^{N} (-1)^{k-1}/k`.
pub fn eq42_lhs(n: u64) -> BigRat {
    let a: BigRat = (1..=n).map(|k| brat(binomial(n, k) * sign(k - 1), k as i64)).sum();
    let b: BigRat = (1..=n).map(|k| brat(sign(k - 1), k as i64)).sum();
    a - b
}

pub fn eq42(v: Verdict, p: &Params) -> Result<Verdict> {
    let n = p.order as u64;
    check_each(
        v,
        format!("1 <= N <= {n}"),
        1..=n,
        |&n| {
            let rhs: BigRat = (1..=n / 2).map(|k| brat(1, k as i64)).sum();
            Ok((eq42_lhs(n), rhs))
        },
        |n| format!("N={n}"),
    )
}

pub fn eq44_sides(t: usize) -> Result<(XSeries, XSeries)> {
    let lhs = &series_log(&one_minus_x(t))? + &series_log(&one_plus_x(t))?;
    let rhs = series_log(&XSeries::from_poly(&[int(1), int(0), int(-1)], t))?;
    Ok((lhs, rhs))
}

pub fn eq54_sides(t: usize) -> Result<(XSeries, XSeries)> {
    let lhs = xseries_fn(t, |n| if n > 0 && n % 3 != 0 { r(1, n as i64) } else { int(0) });
    let rhs = xsum_from(1, t, |k| {
        let c = rq(brat(ipow(-3, k as u64 - 1), k as i64));
        Ok(over_pow(c, k, &int(1), 2 * k as u32, t))
    })?;
    Ok((lhs, rhs))
}
