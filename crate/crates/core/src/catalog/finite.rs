//! Exact equalities of rational functions of `q` over a parameter range.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exact::QRat;
use crate::qkit::{choose2, q_binomial, qn_rat, quantum_pow, shifted_pow};
use crate::verdict::Verdict;

use super::common::*;
use super::Params;

fn qb(n: u64, k: u64) -> QRat {
    q_binomial(n as i64, k as u32)
}

fn qplus_q(k: u64) -> QRat {
    shifted_pow(&int(1), &q(1), k as u32)
}

fn range_n(p: &Params) -> std::ops::RangeInclusive<u64> {
    0..=p.order as u64
}

fn by_n(n: &u64) -> String {
    format!("N={n}")
}

pub fn eq19(v: Verdict, p: &Params) -> Result<Verdict> {
    check_each(v, format!("0 <= N <= {}", p.order), range_n(p), |&n| {
        let rhs = (0..=n).fold(int(0), |acc, k| {
            &acc + &(&(&qb(n, k) * &qplus_q(k)) * &q((n - k) as i64).scale(&brat(sign(k), 1)))
        });
        Ok((int(sign(n)), rhs))
    }, by_n)
}

pub fn eq20(v: Verdict, p: &Params) -> Result<Verdict> {
    check_each(v, format!("0 <= N <= {}", p.order), range_n(p), |&n| {
        let rhs = (0..=n).fold(int(0), |acc, k| {
            &acc + &(&(&qb(n, k) * &q(k as i64).scale(&brat(sign(k), 1))) * &qplus_q(n - k))
        });
        Ok((int(1), rhs))
    }, by_n)
}

const DRAWS: usize = 3;

/// `sum_k [N,k] (a ∔ u)^k (b ∔ v)^{N-k}`.
fn eq23_side(n: u64, a: &QRat, u: &QRat, b: &QRat, v: &QRat) -> QRat {
    (0..=n).fold(int(0), |acc, k| {
        &acc + &(&(&qb(n, k) * &shifted_pow(a, u, k as u32)) * &shifted_pow(b, v, (n - k) as u32))
    })
}

fn draws(p: &Params, width: usize) -> Vec<Vec<QRat>> {
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    (0..DRAWS).map(|_| (0..width).map(|_| random_qmono(&mut rng)).collect()).collect()
}

fn random_check(
    v: Verdict,
    p: &Params,
    width: usize,
    side: impl Fn(u64, &[QRat]) -> (QRat, QRat),
) -> Result<Verdict> {
    let cases: Vec<(Vec<QRat>, u64)> = draws(p, width)
        .into_iter()
        .flat_map(|d| range_n(p).map(move |n| (d.clone(), n)))
        .collect();
    check_each(
        v.param("seed", p.seed),
        format!("0 <= N <= {}, {DRAWS} seeded parameter draws", p.order),
        cases,
        |(d, n)| Ok(side(*n, d)),
        |(d, n)| {
            let names: Vec<String> = d.iter().map(|x| x.to_string()).collect();
            format!("N={n}, params=({})", names.join(", "))
        },
    )
}

pub fn eq21(v: Verdict, p: &Params) -> Result<Verdict> {
    let zero = int(0);
    random_check(v, p, 3, |n, d| {
        (eq23_side(n, &d[0], &zero, &d[1], &d[2]), eq23_side(n, &d[1], &zero, &d[0], &d[2]))
    })
}

pub fn eq23(v: Verdict, p: &Params) -> Result<Verdict> {
    random_check(v, p, 4, |n, d| {
        (eq23_side(n, &d[0], &d[2], &d[1], &d[3]), eq23_side(n, &d[1], &d[2], &d[0], &d[3]))
    })
}

pub fn eq34(v: Verdict, p: &Params) -> Result<Verdict> {
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let alphas: Vec<QRat> = (0..DRAWS).map(|_| random_rat(&mut rng)).collect();
    let cases: Vec<(QRat, u64)> = alphas.iter().flat_map(|a| range_n(p).map(move |n| (a.clone(), n))).collect();
    check_each(
        v.param("seed", p.seed),
        format!("0 <= N <= {}, {DRAWS} seeded values of a", p.order),
        cases,
        |(a, n)| {
            let n = *n;
            let lhs = &int(1) + &(&a.pow(n as i64 + 1)? * &int(sign(n)));
            let rhs = (0..=n).fold(int(0), |acc, k| {
                &acc + &(&(&qb(n + 1, k + 1) * &int(sign(k))) * &shifted_pow(a, &int(1), k as u32 + 1))
            });
            Ok((lhs, rhs))
        },
        |(a, n)| format!("N={n}, a={a}"),
    )
}

/// `g_N = sum_{0 <= 2s+1 <= N} q^{2s+1} / [2s+1]`.
pub fn g_n(n: u64) -> QRat {
    (1..=n).filter(|k| k % 2 == 1).fold(int(0), |acc, k| &acc + &(&q(k as i64) / &qn_rat(k as i64)))
}

/// `sum_{k=1}^{N} [N,k] (-1)^{k-1} (1 ∔ q)^{k-1} q^k / [k]`.
pub fn eq31_rhs(n: u64) -> QRat {
    (1..=n).fold(int(0), |acc, k| {
        let t = &(&qb(n, k) * &qplus_q(k - 1)) * &q(k as i64).scale(&brat(sign(k - 1), 1));
        &acc + &(&t / &qn_rat(k as i64))
    })
}

pub fn eq31(v: Verdict, p: &Params) -> Result<Verdict> {
    check_each(v, format!("1 <= N <= {}", p.order), 1..=p.order as u64, |&n| Ok((g_n(n), eq31_rhs(n))), by_n)
}

/// `sum_{k=1}^{N} [N,k] (-1)^{k-1} q^{C(k+1,2)} / [k]`.
pub fn eq53_lhs(n: u64) -> QRat {
    (1..=n).fold(int(0), |acc, k| {
        let t = &qb(n, k) * &q(choose2(k as i64 + 1)).scale(&brat(sign(k - 1), 1));
        &acc + &(&t / &qn_rat(k as i64))
    })
}

/// `sum_{k=1}^{N} q^k / [k]`.
pub fn eq53_rhs(n: u64) -> QRat {
    (1..=n).fold(int(0), |acc, k| &acc + &(&q(k as i64) / &qn_rat(k as i64)))
}

pub fn eq46(v: Verdict, p: &Params) -> Result<Verdict> {
    check_each(v, format!("1 <= N <= {}", p.order), 1..=p.order as u64, |&n| {
        let alt = (1..=n).fold(int(0), |acc, k| &acc + &(&q(k as i64).scale(&brat(sign(k - 1), 1)) / &qn_rat(k as i64)));
        let even = (1..=n / 2).fold(int(0), |acc, k| &acc + &(&q(2 * k as i64).scale(&brat(2, 1)) / &qn_rat(2 * k as i64)));
        Ok((eq53_lhs(n), &alt + &even))
    }, by_n)
}

pub fn eq53(v: Verdict, p: &Params) -> Result<Verdict> {
    check_each(v, format!("1 <= N <= {}", p.order), 1..=p.order as u64, |&n| Ok((eq53_lhs(n), eq53_rhs(n))), by_n)
}

/// Summand `k` of `sum_{k=0}^{N} (-1)^k q^{-C(k+1,2)} <3^k> q^{-(k+1)(N-k)} [N+k+2, 2k+2]`.
pub fn eq66_term(n: u64, k: u64) -> QRat {
    let e = -choose2(k as i64 + 1) - (k as i64 + 1) * (n as i64 - k as i64);
    let c = &QRat::from_laurent(quantum_pow(3, k as u32)) * &q(e).scale(&brat(sign(k), 1));
    &c * &qb(n + k + 2, 2 * k + 2)
}

pub fn eq66_sum(n: u64) -> QRat {
    (0..=n).fold(int(0), |acc, k| &acc + &eq66_term(n, k))
}

pub fn eq66(v: Verdict, p: &Params) -> Result<Verdict> {
    let v = check_each(v, format!("0 <= N <= {}", p.order), range_n(p), |&n| {
        Ok((eq66_sum(n), int(if n % 3 == 0 { 1 } else { 0 })))
    }, by_n)?;
    if !v.is_pass() {
        return Ok(v);
    }
    let cases: Vec<(u64, u64)> = range_n(p).flat_map(|n| (0..=n).map(move |k| (n, k))).collect();
    let range = format!("{}; every summand invariant under q -> 1/q", v.witness["range"]);
    check_each(v, range, cases, |&(n, k)| {
        let t = eq66_term(n, k);
        Ok((t.subst_power(-1), t))
    }, |(n, k)| format!("N={n}, k={k}, q -> 1/q"))
}

pub fn eq110(v: Verdict, p: &Params) -> Result<Verdict> {
    let cases: Vec<(u64, u64)> = range_n(p).flat_map(|n| (0..=n).map(move |k| (n, k))).collect();
    check_each(v, format!("0 <= k <= n <= {}", p.order), cases, |&(n, k)| {
        let rhs = (0..=k).fold(int(0), |acc, s| {
            let e = s as i64 * (n as i64 - k as i64) + choose2(s as i64 + 1);
            &acc + &(&qb(n + 1, k - s) * &q(e).scale(&brat(sign(s), 1)))
        });
        Ok((qb(n, k), rhs))
    }, |(n, k)| format!("n={n}, k={k}"))
}

pub fn gauss(v: Verdict, p: &Params) -> Result<Verdict> {
    check_each(v, format!("0 <= N <= {}", p.order), range_n(p), |&n| {
        let lhs = (0..=n).fold(int(0), |acc, l| &acc + &(&qb(n, l) * &int(sign(l))));
        let rhs = if n % 2 == 1 {
            int(0)
        } else {
            (1..=n / 2).fold(int(1), |acc, j| &acc * &(&int(1) - &q(2 * j as i64 - 1)))
        };
        Ok((lhs, rhs))
    }, by_n)
}

pub fn eq62(v: Verdict, p: &Params) -> Result<Verdict> {
    let n_max = p.order.min(9);
    let cases = (0..=n_max).map(|n| {
        let t = 2 * n + 6;
        let (lhs, rhs) = super::xids::eq62_sides(n, t);
        Ok((format!("N={n}"), lhs, rhs))
    });
    let out = all_series(v, cases)?;
    Ok(if out.is_pass() {
        out.passed(format!("0 <= N <= {n_max}, each to x^(2N+6)"))
    } else {
        out
    })
}
