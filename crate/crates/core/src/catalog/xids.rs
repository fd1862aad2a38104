//! q-identities between power series in `x`.

use crate::error::Result;
use crate::exact::QRat;
use crate::qkit::{choose2, q_binomial, qn_rat, quantum_pow, shifted_pow};
use crate::series::{q_derivative, series_qlog, XSeries};

use super::classical::even_geometric;
use super::common::*;

pub type Sides = (XSeries, XSeries);

fn qplus_q(k: u32) -> QRat {
    shifted_pow(&int(1), &q(1), k)
}

fn qa(a: u64, k: u32) -> QRat {
    QRat::from_laurent(quantum_pow(a, k))
}

pub fn eq14_sides(t: usize) -> Result<Sides> {
    let rhs = xsum_from(0, t, |k| {
        let c = &qplus_q(k as u32) * &int(sign(k as u64));
        Ok(over_dot(c, k, &int(1), k as u32 + 2, t))
    })?;
    Ok((even_geometric(t), rhs))
}

pub fn eq16_sides(t: usize) -> Result<Sides> {
    let lhs = over_pow(int(1), 0, &int(-1), 1, t);
    let rhs = xsum_from(0, t, |k| {
        let c = &qplus_q(k as u32) * &int(sign(k as u64));
        Ok(over_dot(c, k, &q(1), k as u32 + 1, t))
    })?;
    Ok((lhs, rhs))
}

pub fn eq17_sides(t: usize, k: u32) -> Sides {
    let lhs = over_dot(int(1), 0, &int(1), k + 1, t);
    let rhs = xseries_fn(t, |n| q_binomial(k as i64 + n as i64, n as u32));
    (lhs, rhs)
}

pub fn eq25_sides(t: usize, k: u32, alpha: &QRat) -> Sides {
    let lhs = q_derivative(&over_dot(int(1), k as usize, alpha, k, t));
    let rhs = over_dot(qn_rat(k as i64), k as usize - 1, alpha, k + 1, t - 1);
    (lhs, rhs)
}

pub fn eq59_sides(t: usize, k: u32, alpha: &QRat) -> Sides {
    let lhs = q_derivative(&over_dot(int(1), k as usize, alpha, 2 * k, t));
    let head = over_dot(qn_rat(k as i64), k as usize - 1, alpha, 2 * k + 1, t - 1);
    let tail = XSeries::from_poly(&[int(1), alpha.shift(k as i64)], t - 1);
    (lhs, &head * &tail)
}

/// `sum_s x^{2s+1} c^{2s+1} / [2s+1]`.
fn odd_q_reciprocals(t: usize, c: &QRat) -> XSeries {
    xseries_fn(t, |n| {
        if n % 2 == 1 {
            &c.pow(n as i64).expect("nonzero") / &qn_rat(n as i64)
        } else {
            int(0)
        }
    })
}

pub fn eq26_sides(t: usize) -> Result<Sides> {
    let rhs = xsum_from(0, t, |k| {
        let c = &(&qplus_q(k as u32) * &int(sign(k as u64))) / &qn_rat(k as i64 + 1);
        Ok(over_dot(c, k + 1, &int(1), k as u32 + 1, t))
    })?;
    Ok((odd_q_reciprocals(t, &int(1)), rhs))
}

pub fn eq27_sides(t: usize) -> Result<Sides> {
    let lhs = &geometric(t) * &odd_q_reciprocals(t, &q(1));
    let rhs = xsum_from(1, t, |k| {
        let c = &(&qplus_q(k as u32 - 1) * &q(k as i64).scale(&brat(sign(k as u64 - 1), 1))) / &qn_rat(k as i64);
        Ok(over_dot(c, k, &int(1), k as u32 + 1, t))
    })?;
    Ok((lhs, rhs))
}

/// `(a ∔ 1)^k = prod_{i<k} (a + q^i)`.
fn aplus1(a: &QRat, k: u32) -> QRat {
    shifted_pow(a, &int(1), k)
}

pub fn eq33_sides(t: usize, a: &QRat) -> Result<Sides> {
    let lhs = &geometric(t) + &over_pow(a.clone(), 0, &-a, 1, t);
    let rhs = xsum_from(0, t, |k| {
        let c = &aplus1(a, k as u32 + 1) * &int(sign(k as u64));
        Ok(over_dot(c, k, &int(1), k as u32 + 2, t))
    })?;
    Ok((lhs, rhs))
}

/// `Log(1 + c x)`.
pub fn qlog_linear(c: &QRat, t: usize) -> Result<XSeries> {
    series_qlog(&xmono(c.clone(), 1, t))
}

pub fn eq35_sides(t: usize, a: &QRat) -> Result<Sides> {
    let lhs = &qlog_linear(a, t)? - &qlog_linear(&int(-1), t)?;
    let rhs = xsum_from(0, t, |k| {
        let c = &(&aplus1(a, k as u32 + 1) * &int(sign(k as u64))) / &qn_rat(k as i64 + 1);
        Ok(over_dot(c, k + 1, &int(1), k as u32 + 1, t))
    })?;
    Ok((lhs, rhs))
}

pub fn eq37_sides(t: usize, a: &QRat, b: &QRat) -> Result<Sides> {
    let lhs = &qlog_linear(a, t)? - &qlog_linear(b, t)?;
    let rhs = xsum_from(0, t, |k| {
        let diff = &aplus1(a, k as u32 + 1) - &aplus1(b, k as u32 + 1);
        let c = &(&diff * &int(sign(k as u64))) / &qn_rat(k as i64 + 1);
        Ok(over_dot(c, k + 1, &int(1), k as u32 + 1, t))
    })?;
    Ok((lhs, rhs))
}

/// `sum_{k>=1} (-1)^{k-1} t^k / [k]`.
fn alternating_qlog(t: usize) -> XSeries {
    xseries_fn(t, |n| if n == 0 { int(0) } else { &int(sign(n as u64 - 1)) / &qn_rat(n as i64) })
}

/// `sum_{k>=1} t^k / [k]`.
pub fn q_reciprocals(t: usize) -> XSeries {
    xseries_fn(t, |n| if n == 0 { int(0) } else { int(1) / qn_rat(n as i64) })
}

pub fn eq49_sides(t: usize) -> Result<Sides> {
    let lhs = xsum_from(1, t, |k| {
        let c = &q(choose2(k as i64)).scale(&brat(sign(k as u64 - 1), 1)) / &qn_rat(k as i64);
        Ok(over_dot(c, k, &int(1), k as u32, t))
    })?;
    let evens = xseries_fn(t, |n| {
        if n > 0 && n % 2 == 0 {
            &int(2) / &qn_rat(n as i64)
        } else {
            int(0)
        }
    });
    Ok((lhs, &alternating_qlog(t) + &evens))
}

pub fn eq50_sides(t: usize) -> Result<Sides> {
    let lhs = xsum_from(1, t, |k| {
        let c = q(choose2(k as i64)).scale(&brat(sign(k as u64 - 1), 1));
        Ok(over_dot(c, k - 1, &int(1), k as u32 + 1, t))
    })?;
    let rhs = xseries_fn(t, |n| {
        let alt = int(sign(n as u64));
        if n % 2 == 1 {
            &alt + &int(2)
        } else {
            alt
        }
    });
    Ok((lhs, rhs))
}

pub fn eq51_sides(t: usize) -> Result<Sides> {
    let lhs = xsum_from(0, t, |k| {
        let c = q(choose2(k as i64 + 1)).scale(&brat(sign(k as u64), 1));
        Ok(over_dot(c, k, &int(1), k as u32 + 2, t))
    })?;
    Ok((lhs, geometric(t)))
}

pub fn eq56_sides(t: usize) -> Result<Sides> {
    let lhs = xseries_fn(t, |n| if n > 0 && n % 3 != 0 { int(1) / qn_rat(n as i64) } else { int(0) });
    let rhs = xsum_from(1, t, |k| {
        let k64 = k as i64;
        let c = &(&qa(3, k as u32 - 1) * &q(-choose2(k64)).scale(&brat(sign(k as u64 - 1), 1))) / &qn_rat(k64);
        Ok(over_dot(c, k, &q(-k64), 2 * k as u32, t))
    })?;
    Ok((lhs, rhs))
}

/// `(-x)^k <3^k> q^{-C(k+1,2)} / (1 ∸ q^{-k-1} x)^{2k+3}`.
fn eq60_term(k: usize, t: usize) -> XSeries {
    let k64 = k as i64;
    let c = &qa(3, k as u32) * &q(-choose2(k64 + 1)).scale(&brat(sign(k as u64), 1));
    over_dot(c, k, &q(-k64 - 1), 2 * k as u32 + 3, t)
}

pub fn eq60_sides(t: usize) -> Result<Sides> {
    let lhs = xseries_fn(t, |n| if n % 3 == 0 { int(1) } else { int(0) });
    let rhs = xsum_from(0, t, |k| Ok(eq60_term(k, t)))?;
    Ok((lhs, rhs))
}

/// `(1 + x + x^2) S_N` against `1/(1-x) + (-1)^N x^{N+1} <3^{N+1}> q^{-C(N+2,2)} / (1 ∸ q^{-N-1} x)^{2N+3}`.
pub fn eq62_sides(n: usize, t: usize) -> Sides {
    let s = (0..=n).fold(XSeries::zero(t), |acc, k| &acc + &eq60_term(k, t));
    let lhs = &XSeries::from_poly(&[int(1), int(1), int(1)], t) * &s;
    let n64 = n as i64;
    let c = &qa(3, n as u32 + 1) * &q(-choose2(n64 + 2)).scale(&brat(sign(n as u64), 1));
    let tail = over_dot(c, n + 1, &q(-n64 - 1), 2 * n as u32 + 3, t);
    (lhs, &geometric(t) + &tail)
}

/// The three series of each line: closed form, classical sum, q-sum.
pub fn eq67_sides(line: u8, t: usize) -> Result<(XSeries, XSeries, XSeries)> {
    match line {
        1 => {
            let classical = xsum_from(0, t, |k| Ok(over_pow(int(sign(k as u64)), k, &int(1), k as u32 + 2, t)))?;
            let quantum = xsum_from(0, t, |k| {
                let c = &q(choose2(k as i64 + 1)).scale(&brat(sign(k as u64), 1)) * &qa(1, k as u32);
                Ok(over_dot(c, k, &int(1), k as u32 + 2, t))
            })?;
            Ok((geometric(t), classical, quantum))
        }
        2 => {
            let closed = xseries_fn(t, |n| if n % 2 == 0 { int(1) } else { int(0) });
            let classical = xsum_from(0, t, |k| {
                Ok(over_pow(QRat::from_rat(brat(ipow(-2, k as u64), 1)), k, &int(1), k as u32 + 2, t))
            })?;
            let quantum = xsum_from(0, t, |k| {
                let c = &qa(2, k as u32) * &int(sign(k as u64));
                Ok(over_dot(c, k, &int(1), k as u32 + 2, t))
            })?;
            Ok((closed, classical, quantum))
        }
        _ => {
            let closed = xseries_fn(t, |n| if n % 3 == 0 { int(1) } else { int(0) });
            let classical = xsum_from(0, t, |k| {
                Ok(over_pow(QRat::from_rat(brat(ipow(-3, k as u64), 1)), k, &int(1), 2 * k as u32 + 3, t))
            })?;
            let quantum = xsum_from(0, t, |k| Ok(eq60_term(k, t)))?;
            Ok((closed, classical, quantum))
        }
    }
}
