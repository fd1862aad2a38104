//! The q-Euler transformation of alternating series, its lemma, the
//! geometric progression for `<2^k>`, and the two worked examples.

use crate::error::Result;
use crate::exact::{QLaurent, QRat};
use crate::qkit::{choose2, q_binomial, qn_rat, quantum_pow, quantum_pow_inf, shifted_pow};
use crate::series::{adaptive_qsum, default_cap, jackson_sum_01, qseries_recip, series_qlog, XSeries};
use crate::verdict::{Mode, Verdict};

use super::common::*;

/// `(Δ^ℓ a)_k` with `(Δ^{j+1} a)_k = (Δ^j a)_{k+1} - q^{base j} (Δ^j a)_k`.
/// Entries past the end of `a` are zero.
pub fn delta_op_base(a: &[QRat], l: usize, k: usize, base: i64) -> QRat {
    let mut row: Vec<QRat> = (k..=k + l).map(|i| a.get(i).cloned().unwrap_or_default()).collect();
    for j in 0..l {
        let w = q(base * j as i64);
        row = (0..row.len() - 1).map(|i| &row[i + 1] - &(&w * &row[i])).collect();
    }
    row.swap_remove(0)
}

/// `(Δ^ℓ a)_k` in base `q`.
pub fn delta_op(a: &[QRat], l: usize, k: usize) -> QRat {
    delta_op_base(a, l, k, 1)
}

/// `<2^n>` with `q` replaced by `q^base`.
fn two_pow(n: u32, base: i64) -> QRat {
    QRat::from_laurent(quantum_pow(2, n).subst_power(base))
}

/// Both sides of `sum_k (-q)^k a_k = sum_ℓ (-q)^ℓ (Δ^ℓ a)_0 / <2^{ℓ+1}>`,
/// with `q -> q^base` throughout, modulo `q^{q_order+1}`. Requires every
/// `a_k` to be a power series in `q`; then summand `ℓ` has valuation at
/// least `base ℓ` and `ℓ <= q_order / base` suffices. The differences are
/// taken on truncated expansions, which is exact since `Δ` only multiplies
/// by nonnegative powers of `q`.
pub fn euler_transform_sides(a: &[QRat], q_order: i64, base: i64) -> Result<(QLaurent, QLaurent)> {
    let n = (q_order.max(0) / base) as usize;
    let sign_q = |k: usize, x: &QLaurent| {
        let t = x.shift(base * k as i64);
        if k.is_multiple_of(2) { t } else { -&t }
    };
    let mut row: Vec<QLaurent> = (0..=n).map(|k| a.get(k).map(|x| x.expand(q_order)).unwrap_or_default()).collect();
    let lhs = row.iter().enumerate().fold(QLaurent::zero(), |acc, (k, x)| &acc + &sign_q(k, x));
    let mut rhs = QLaurent::zero();
    for l in 0..=n {
        let den = qseries_recip(&two_pow(l as u32 + 1, base).expand(q_order), q_order)?;
        rhs = &rhs + &sign_q(l, &(&row[0] * &den).truncate(q_order));
        let w = QLaurent::q_pow(base * l as i64);
        row = (0..row.len().saturating_sub(1))
            .map(|i| (&row[i + 1] - &(&w * &row[i])).truncate(q_order))
            .collect();
        if row.is_empty() {
            break;
        }
    }
    Ok((lhs.truncate(q_order), rhs.truncate(q_order)))
}

/// `sum_s q^{C(s,2)} [k+s, s] q^s / (1 ∔ q)^{k+s+1}` modulo `q^{q_order+1}`.
pub fn eq88_lhs(k: u64, q_order: i64) -> Result<QLaurent> {
    adaptive_qsum(q_order, default_cap(q_order as usize), |s| {
        let s = s as i64;
        let num = &q(choose2(s) + s) * &q_binomial(k as i64 + s, s as u32);
        Ok(&num / &shifted_pow(&int(1), &q(1), (k as i64 + s + 1) as u32))
    })
}

/// q-Euler transform for finitely supported `a`, plus the lemma for `k <= 8`.
pub fn euler_transform_check(a: &[QRat], q_order: i64) -> Result<Verdict> {
    let names: Vec<String> = a.iter().map(|x| x.to_string()).collect();
    let v = Verdict::new("eq84", Mode::QSeries)
        .param("a", names.join(", "))
        .param("q_order", q_order);
    let (lhs, rhs) = euler_transform_sides(a, q_order, 1)?;
    let v = compare_q(v, &lhs, &rhs, q_order);
    if !v.is_pass() {
        return Ok(v);
    }
    let v = eq88_check(8, q_order)?;
    Ok(if v.is_pass() { v.passed(format!("through q^{q_order}, lemma for k <= 8")) } else { v })
}

pub fn eq88_check(k_max: u64, q_order: i64) -> Result<Verdict> {
    let v = Verdict::new("eq88", Mode::QSeries).param("k_max", k_max).param("q_order", q_order);
    for k in 0..=k_max {
        let out = compare_q(v.clone(), &eq88_lhs(k, q_order)?, &QLaurent::one(), q_order);
        if !out.is_pass() {
            let at = out.first_failure.clone().unwrap_or_default();
            let mut out = out;
            out.first_failure = Some(format!("k={k}: {at}"));
            return Ok(out);
        }
    }
    Ok(v.passed(format!("0 <= k <= {k_max} through q^{q_order}")))
}

/// `sum_{k=0}^{N} q^{C(k+1,2)} / <2^{k+1}>` and `1 - q^{C(N+2,2)} / <2^{N+1}>`.
pub fn geometric_sides(n: u64) -> (QRat, QRat) {
    let lhs = (0..=n).fold(int(0), |acc, k| &acc + &(&q(choose2(k as i64 + 1)) / &two_pow(k as u32 + 1, 1)));
    let rhs = &int(1) - &(&q(choose2(n as i64 + 2)) / &two_pow(n as u32 + 1, 1));
    (lhs, rhs)
}

pub fn geometric_check(n: u64) -> Verdict {
    let (lhs, rhs) = geometric_sides(n);
    let v = Verdict::new("eq80", Mode::Finite).param("N", n);
    if lhs == rhs {
        v.passed(format!("N={n}"))
    } else {
        v.failed(format!("N={n}"), [("lhs", lhs.to_string()), ("rhs", rhs.to_string())])
    }
}

/// `sum_k q^{C(k+1,2)} / <2^{k+1}>` modulo `q^{q_order+1}`.
pub fn eq79_sum(q_order: i64) -> Result<QLaurent> {
    adaptive_qsum(q_order, default_cap(q_order as usize), |k| {
        Ok(&q(choose2(k as i64 + 1)) / &two_pow(k as u32 + 1, 1))
    })
}

/// `<(2L)^inf> / (<L^inf> <2^inf>)` and `prod_{L ∤ n} (1 + q^n)^{-1}`.
pub fn eq77_sides(l: u64, q_order: i64) -> Result<(QLaurent, QLaurent)> {
    let qo = q_order as u32;
    let den = (&quantum_pow_inf(l, qo)? * &quantum_pow_inf(2, qo)?).truncate(q_order);
    let lhs = (&quantum_pow_inf(2 * l, qo)? * &qseries_recip(&den, q_order)?).truncate(q_order);
    let prod = (1..=q_order)
        .filter(|n| n % l as i64 != 0)
        .fold(QLaurent::one(), |acc, n| (&acc * &(&QLaurent::one() + &QLaurent::q_pow(n))).truncate(q_order));
    Ok((lhs, qseries_recip(&prod, q_order)?))
}

/// `a_k = 1 / [k+1]`, `k <= n`.
pub fn knopp_first_sequence(n: usize) -> Vec<QRat> {
    (0..=n).map(|k| &int(1) / &qn_rat(k as i64 + 1)).collect()
}

/// `a_k = 1 / [2k+1]_Q` in the base `Q = q^{1/2}` (written `q`).
pub fn knopp_second_sequence(n: usize) -> Vec<QRat> {
    (0..=n).map(|k| &int(1) / &qn_rat(2 * k as i64 + 1)).collect()
}

/// `[k+1] ... [k+l+1]`, or in steps of two for the second example.
fn rising(start: i64, count: usize, step: i64) -> QRat {
    (0..count as i64).fold(int(1), |acc, s| &acc * &qn_rat(start + step * s))
}

/// `(Δ^ℓ a)_k = (-1)^ℓ q^{kℓ + C(ℓ+1,2)} [ℓ]! / ([k+1] ... [k+ℓ+1])` for `a_k = 1/[k+1]`.
pub fn knopp_first_delta(l: usize, k: usize) -> QRat {
    let num = &q((k * l) as i64 + choose2(l as i64 + 1)).scale(&brat(sign(l as u64), 1)) * &rising(1, l, 1);
    &num / &rising(k as i64 + 1, l + 1, 1)
}

/// `(Δ^ℓ a)_k = (-1)^ℓ Q^{(2k+1)ℓ + 2C(ℓ,2)} [2ℓ]!! / prod_{s=0}^{ℓ} [2k+1+2s]`
/// for `a_k = 1/[2k+1]_Q`, with `Δ` in base `q = Q^2`.
pub fn knopp_second_delta(l: usize, k: usize) -> QRat {
    let e = (2 * k as i64 + 1) * l as i64 + 2 * choose2(l as i64);
    let num = &q(e).scale(&brat(sign(l as u64), 1)) * &rising(2, l, 2);
    &num / &rising(2 * k as i64 + 1, l + 1, 2)
}

/// `sum_ℓ q^{ℓ + C(ℓ+1,2)} / ([ℓ+1] <2^{ℓ+1}>)`.
pub fn knopp_first_rhs(q_order: i64) -> QLaurent {
    knopp_first_rhs_with(q_order, 1)
}

/// The same sum without the factor `q^ℓ`.
pub fn knopp_first_rhs_without_shift(q_order: i64) -> QLaurent {
    knopp_first_rhs_with(q_order, 0)
}

fn knopp_first_rhs_with(q_order: i64, linear: i64) -> QLaurent {
    (0i64..)
        .map(|l| (l, linear * l + choose2(l + 1)))
        .take_while(|&(_, e)| e <= q_order)
        .fold(QLaurent::zero(), |acc, (l, e)| {
            let t = &q(e) / &(&qn_rat(l + 1) * &two_pow(l as u32 + 1, 1));
            &acc + &t.expand(q_order)
        })
}

/// `sum_ℓ Q^{3ℓ + 2C(ℓ,2)} [2ℓ]_Q!! / (<2^{ℓ+1}>_{Q^2} [2ℓ+1]_Q!!)`.
pub fn knopp_second_rhs(q_order: i64) -> QLaurent {
    knopp_second_rhs_with(q_order, 3)
}

/// The same sum with `Q^{ℓ + 2C(ℓ,2)}` in place of `Q^{3ℓ + 2C(ℓ,2)}`.
pub fn knopp_second_rhs_without_shift(q_order: i64) -> QLaurent {
    knopp_second_rhs_with(q_order, 1)
}

fn knopp_second_rhs_with(q_order: i64, linear: i64) -> QLaurent {
    (0i64..)
        .map(|l| (l, linear * l + 2 * choose2(l)))
        .take_while(|&(_, e)| e <= q_order)
        .fold(QLaurent::zero(), |acc, (l, e)| {
            let num = &q(e) * &rising(2, l as usize, 2);
            let den = &two_pow(l as u32 + 1, 2) * &rising(1, l as usize + 1, 2);
            &acc + &(&num / &den).expand(q_order)
        })
}

/// `q^{-1} Log([2]; q)`: the q-logarithm `Log(1 + x)` at `x = q`, divided by `q`.
pub fn knopp_first_log(q_order: i64) -> Result<QLaurent> {
    let log = series_qlog(&XSeries::x(q_order as usize + 1))?;
    let mut out = QLaurent::zero();
    for (n, c) in log.coeffs().iter().enumerate().skip(1) {
        out = &out + &c.shift(n as i64 - 1).expand(q_order);
    }
    Ok(out.truncate(q_order))
}

/// `∫_0^1 d_Q t / (1 + q t^2)` with `q = Q^2`.
pub fn knopp_second_integral(q_order: i64) -> Result<QLaurent> {
    let one = QLaurent::one();
    jackson_sum_01(std::slice::from_ref(&one), &[one.clone(), QLaurent::zero(), QLaurent::q_pow(1)], 2, q_order)
}

fn tag(v: Verdict, label: &str) -> Verdict {
    if v.is_pass() {
        return v;
    }
    let mut v = v;
    let at = v.first_failure.take().unwrap_or_default();
    v.first_failure = Some(format!("{label}: {at}"));
    v
}

fn compare_all(v: Verdict, q_order: i64, cases: Vec<(&str, QLaurent, QLaurent)>) -> Verdict {
    for (label, x, y) in cases {
        let out = tag(compare_q(v.clone(), &x, &y, q_order), label);
        if !out.is_pass() {
            return out;
        }
    }
    v.passed(format!("through q^{q_order}"))
}

/// `a_k = 1/[k+1]`: the log form, the transform, the closed sum, and the
/// explicit differences against [`delta_op`] for `ℓ <= 5`, `k <= 4`.
pub fn knopp_first_check(q_order: i64) -> Result<Verdict> {
    let v = Verdict::new("eq91b", Mode::QSeries).param("q_order", q_order);
    let n = q_order.max(0) as usize;
    let a = knopp_first_sequence(n + 6);
    for l in 0..=5 {
        for k in 0..=4 {
            let got = delta_op(&a, l, k);
            let want = knopp_first_delta(l, k);
            if got != want {
                return Ok(v.failed(format!("l={l}, k={k}"), [("delta_op", got), ("explicit", want)]));
            }
        }
    }
    let (lhs, euler) = euler_transform_sides(&a[..=n], q_order, 1)?;
    Ok(compare_all(v, q_order, vec![
        ("log form", knopp_first_log(q_order)?, lhs.clone()),
        ("transform", lhs.clone(), euler),
        ("closed sum", lhs, knopp_first_rhs(q_order)),
    ]))
}

/// `a_k = 1/[2k+1]_Q` with `Δ` in base `Q^2`: the Jackson integral, the
/// transform, the closed sum, and the explicit differences.
pub fn knopp_second_check(q_order: i64) -> Result<Verdict> {
    let v = Verdict::new("eq92b", Mode::QSeries).param("q_order", q_order).param("variable", "Q = q^(1/2)");
    let n = q_order.max(0) as usize;
    let b = knopp_second_sequence(n + 6);
    for l in 0..=5 {
        for k in 0..=4 {
            let got = delta_op_base(&b, l, k, 2);
            let want = knopp_second_delta(l, k);
            if got != want {
                return Ok(v.failed(format!("l={l}, k={k}"), [("delta_op", got), ("explicit", want)]));
            }
        }
    }
    let (lhs, euler) = euler_transform_sides(&b[..=n], q_order, 2)?;
    Ok(compare_all(v, q_order, vec![
        ("Jackson integral", knopp_second_integral(q_order)?, lhs.clone()),
        ("transform", lhs.clone(), euler),
        ("closed sum", lhs, knopp_second_rhs(q_order)),
    ]))
}

/// Both worked examples of the transform.
pub fn knopp_examples_check(q_order: i64) -> Result<Verdict> {
    let first = knopp_first_check(q_order)?;
    if !first.is_pass() {
        return Ok(first);
    }
    let second = knopp_second_check(q_order)?;
    if !second.is_pass() {
        return Ok(second);
    }
    Ok(Verdict::new("knopp", Mode::QSeries)
        .param("q_order", q_order)
        .passed(format!("both examples through q^{q_order}")))
}
