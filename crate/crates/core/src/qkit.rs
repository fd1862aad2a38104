//! q-combinatorics: q-integers, q-factorials, Gaussian binomials,
//! q-Pochhammer symbols, shifted products `(u ∔ v)^k` and quantum powers
//! `<a^n> = prod_{k=1}^{n} [a]_{q^k}`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{qrat_normalize, BigRat, QLaurent, QRat};

/// `[n]` in base `q^r`: `1 + q^r + ... + q^{r(n-1)}` for `n >= 0`, and
/// `-q^{rn} [-n]_{q^r}` for negative `n`.
pub fn q_int(n: i64, r: i64) -> Result<QLaurent> {
    if r == 0 {
        return Err(Error::InvalidArgument("q_int base exponent must be nonzero".into()));
    }
    if n < 0 {
        return Ok(-&q_int(-n, r)?.shift(r * n));
    }
    if n == 0 {
        return Ok(QLaurent::zero());
    }
    let step = r.unsigned_abs() as usize;
    let len = step * (n as usize - 1) + 1;
    let mut coeffs = vec![BigRat::zero(); len];
    for i in 0..n as usize {
        coeffs[i * step] = BigRat::one();
    }
    let min = if r < 0 { r * (n - 1) } else { 0 };
    Ok(QLaurent::new('q', min, coeffs))
}

/// `[n]_q` for ordinary base `q`.
pub fn qn(n: i64) -> QLaurent {
    q_int(n, 1).expect("base 1")
}

/// `[n]_q` as a rational function.
pub fn qn_rat(n: i64) -> QRat {
    QRat::from_laurent(qn(n))
}

/// `[n]_q! = prod_{k=1}^{n} [k]_q`.
pub fn q_factorial(n: u32) -> QLaurent {
    (1..=n as i64).fold(QLaurent::one(), |acc, k| &acc * &qn(k))
}

/// `prod_{k=1}^{n} [k]_{q^r}`.
pub fn q_factorial_base(n: u32, r: i64) -> Result<QLaurent> {
    (1..=n as i64).try_fold(QLaurent::one(), |acc, k| Ok(&acc * &q_int(k, r)?))
}

/// Gaussian binomial `[n]...[n-k+1] / ([k]...[1])` for any integer `n`.
pub fn q_binomial(n: i64, k: u32) -> QRat {
    if k == 0 {
        return QRat::one();
    }
    if n >= 0 && (k as i64) > n {
        return QRat::zero();
    }
    if n >= 0 {
        return QRat::from_laurent(q_binomial_poly(n as u32, k));
    }
    let num = (0..k as i64).fold(QLaurent::one(), |acc, i| &acc * &qn(n - i));
    let den = q_factorial(k);
    match num.div_exact(&den) {
        Ok(p) => QRat::from_laurent(p),
        Err(_) => qrat_normalize(&num, &den).expect("nonzero factorial"),
    }
}

/// Gaussian binomial for `0 <= k <= n` as a polynomial, via the q-Pascal
/// recurrence `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
pub fn q_binomial_poly(n: u32, k: u32) -> QLaurent {
    if k > n {
        return QLaurent::zero();
    }
    let k = k.min(n - k);
    // row[j] holds [m, j] for the current m
    let mut row: Vec<QLaurent> = vec![QLaurent::one()];
    for m in 1..=n {
        let width = (m.min(k) + 1) as usize;
        let mut next = Vec::with_capacity(width);
        for j in 0..width {
            let left = if j == 0 { QLaurent::zero() } else { row[j - 1].clone() };
            let up = row.get(j).map(|p| p.shift(j as i64)).unwrap_or_default();
            next.push(&left + &up);
        }
        row = next;
    }
    row.swap_remove(k as usize)
}

/// q-Pochhammer `(a; b)_n = prod_{s=0}^{n-1} (1 - a b^s)`, extended to
/// negative `n` by `(a; b)_{-m} = 1 / prod_{s=1}^{m} (1 - a b^{-s})`.
pub fn poch(a: &QRat, b: &QRat, n: i64) -> Result<QRat> {
    let one = QRat::one();
    if n >= 0 {
        let mut acc = QRat::one();
        let mut bs = QRat::one();
        for _ in 0..n {
            acc = &acc * &(&one - &(a * &bs));
            bs = &bs * b;
        }
        return Ok(acc);
    }
    let binv = b.try_recip()?;
    let mut den = QRat::one();
    let mut bs = QRat::one();
    for s in 1..=-n {
        bs = &bs * &binv;
        let f = &one - &(a * &bs);
        if f.is_zero() {
            return Err(Error::VanishingFactor(s));
        }
        den = &den * &f;
    }
    den.try_recip()
}

/// `(u ∔ v)^k = prod_{i=0}^{k-1} (u + q^i v)`.
pub fn shifted_pow(u: &QRat, v: &QRat, k: u32) -> QRat {
    (0..k as i64).fold(QRat::one(), |acc, i| &acc * &(u + &v.shift(i)))
}

/// `<a^n> = prod_{k=1}^{n} [a]_{q^k}`, with `<a^0> = 1`.
pub fn quantum_pow(a: u64, n: u32) -> QLaurent {
    (1..=n as i64).fold(QLaurent::one(), |acc, k| {
        &acc * &q_int(a as i64, k).expect("positive base")
    })
}

/// `<a^inf> = prod_{k>=1} [a]_{q^k}` modulo `q^{q_order+1}`.
///
/// The factor `[a]_{q^k}` is `1 + O(q^k)`, so factors with `k > q_order`
/// leave the truncated product unchanged and are skipped.
pub fn quantum_pow_inf(a: u64, q_order: u32) -> Result<QLaurent> {
    if a == 0 {
        return Err(Error::InvalidArgument("quantum_pow_inf needs a >= 1".into()));
    }
    let order = q_order as i64;
    let mut acc = QLaurent::one();
    for k in 1..=order {
        let factor = q_int(a as i64, k)?.truncate(order);
        acc = (&acc * &factor).truncate(order);
    }
    Ok(acc)
}

/// `q^{n(n-1)/2}` style helper: binomial coefficient `C(n, 2)`.
pub fn choose2(n: i64) -> i64 {
    n * (n - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn lp(min: i64, c: &[i64]) -> QLaurent {
        QLaurent::from_ints(min, c)
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_int(0, 1).unwrap(), QLaurent::zero());
        assert_eq!(q_int(3, 1).unwrap(), lp(0, &[1, 1, 1]));
        assert_eq!(q_int(-2, 1).unwrap(), lp(-2, &[-1, -1]));
        assert_eq!(q_int(3, 2).unwrap(), lp(0, &[1, 0, 1, 0, 1]));
        assert_eq!(q_int(2, -1).unwrap(), lp(-1, &[1, 1]));
        assert!(q_int(3, 0).is_err());
        assert_eq!(qn(3).eval_at(&int(1)).unwrap(), int(3));
    }

    #[test]
    fn negative_argument_rule() {
        // [-n]_Q = -Q^{-n} [n]_Q
        for n in 1..8 {
            for r in [-3, -1, 1, 2] {
                let lhs = q_int(-n, r).unwrap();
                let rhs = -&q_int(n, r).unwrap().shift(-r * n);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(q_factorial(0), QLaurent::one());
        assert_eq!(q_factorial(3), lp(0, &[1, 2, 2, 1]));
        assert_eq!(q_factorial(5).eval_at(&int(1)).unwrap(), int(120));
    }

    #[test]
    fn binomials() {
        assert_eq!(q_binomial(2, 1), QRat::from_laurent(lp(0, &[1, 1])));
        for n in -4..6 {
            assert_eq!(q_binomial(n, 0), QRat::one());
        }
        let gauss2: QRat = (0..=2).fold(QRat::zero(), |acc, l| {
            let sign = if l % 2 == 0 { 1 } else { -1 };
            &acc + &q_binomial(2, l).scale(&int(sign))
        });
        assert_eq!(gauss2, QRat::from_laurent(lp(0, &[1, -1])));
        assert!(q_binomial(3, 5).is_zero());
    }

    #[test]
    fn binomial_matches_product_definition() {
        for n in 0..10i64 {
            for k in 0..=n as u32 {
                let num = (0..k as i64).fold(QLaurent::one(), |acc, i| &acc * &qn(n - i));
                let direct = qrat_normalize(&num, &q_factorial(k)).unwrap();
                assert_eq!(q_binomial(n, k), direct, "[{n},{k}]");
            }
        }
    }

    #[test]
    fn binomial_symmetry_and_pascal() {
        for n in 1..=15u32 {
            for k in 0..=n {
                let b = q_binomial_poly(n, k);
                assert_eq!(b, q_binomial_poly(n, n - k));
                assert!(b.coeffs().iter().all(|c| c.is_integer() && *c >= BigRat::zero()));
                if k >= 1 {
                    let p1 = &q_binomial_poly(n - 1, k - 1) + &q_binomial_poly(n - 1, k).shift(k as i64);
                    let p2 = &q_binomial_poly(n - 1, k - 1).shift((n - k) as i64)
                        + &q_binomial_poly(n - 1, k);
                    assert_eq!(b, p1);
                    assert_eq!(b, p2);
                }
            }
        }
    }

    #[test]
    fn binomial_expansion_by_next_row() {
        // [n,k] = sum_s [n+1, k-s] (-1)^s q^{s(n-k)} q^{C(s+1,2)}
        for n in 0..=12i64 {
            for k in 0..=n {
                let mut sum = QRat::zero();
                for s in 0..=k {
                    let t = q_binomial(n + 1, (k - s) as u32)
                        .shift(s * (n - k) + choose2(s + 1))
                        .scale(&int(if s % 2 == 0 { 1 } else { -1 }));
                    sum = &sum + &t;
                }
                assert_eq!(sum, q_binomial(n, k as u32), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn negative_binomial_is_laurent() {
        // [-n, k] = (-1)^k q^{-nk - C(k,2)} [n+k-1, k]
        for n in 1..6i64 {
            for k in 0..5u32 {
                let kk = k as i64;
                let expected = q_binomial(n + kk - 1, k)
                    .shift(-n * kk - choose2(kk))
                    .scale(&int(if k % 2 == 0 { 1 } else { -1 }));
                assert_eq!(q_binomial(-n, k), expected);
            }
        }
    }

    #[test]
    fn pochhammer() {
        let q = QRat::q_pow(1);
        assert_eq!(poch(&q, &q, 0).unwrap(), QRat::one());
        let expected = QRat::from_laurent(&lp(0, &[1, -1]) * &lp(0, &[1, 0, -1]));
        assert_eq!(poch(&q, &q, 2).unwrap(), expected);
        let r = poch(&QRat::q_pow(2), &q, -1).unwrap();
        assert_eq!(r, QRat::new(&QLaurent::one(), &lp(0, &[1, -1])).unwrap());
        assert_eq!(poch(&q, &q, -1), Err(Error::VanishingFactor(1)));
    }

    #[test]
    fn pochhammer_negative_order_is_infinite_product_quotient() {
        // (a;b)_{-m} (a b^{-m}; b)_m = 1
        let a = QRat::q_pow(5);
        let b = QRat::q_pow(1);
        for m in 1..4 {
            let shifted = poch(&a.shift(-m), &b, m).unwrap();
            assert!((&poch(&a, &b, -m).unwrap() * &shifted).is_one());
        }
    }

    #[test]
    fn shifted_products() {
        let one = QRat::one();
        let q = QRat::q_pow(1);
        assert_eq!(shifted_pow(&one, &q, 0), QRat::one());
        let expected = QRat::from_laurent(&lp(0, &[1, 1]) * &lp(0, &[1, 0, 1]));
        assert_eq!(shifted_pow(&one, &q, 2), expected);
        assert_eq!(shifted_pow(&one, &-&q, 2).eval_at(&int(1)).unwrap(), int(0));
    }

    #[test]
    fn quantum_powers() {
        assert_eq!(quantum_pow(3, 0), QLaurent::one());
        assert_eq!(quantum_pow(2, 2), lp(0, &[1, 1, 1, 1]));
        assert_eq!(quantum_pow(3, 4).eval_at(&int(1)).unwrap(), int(81));
    }

    #[test]
    fn quantum_power_as_pochhammer_ratio() {
        let q = QRat::q_pow(1);
        for a in 1..=10u64 {
            let qa = QRat::q_pow(a as i64);
            for n in 0..=20u32 {
                let lhs = &QRat::from_laurent(quantum_pow(a, n)) * &poch(&q, &q, n as i64).unwrap();
                assert_eq!(lhs, poch(&qa, &qa, n as i64).unwrap(), "a={a} n={n}");
            }
        }
    }

    #[test]
    fn quantum_power_gamma_form() {
        for a in 1..=10u64 {
            for n in 1..=10u32 {
                let rhs = qrat_normalize(
                    &(&qn(a as i64).pow(n) * &q_factorial_base(n, a as i64).unwrap()),
                    &q_factorial(n),
                )
                .unwrap();
                assert_eq!(QRat::from_laurent(quantum_pow(a, n)), rhs);
            }
        }
    }

    #[test]
    fn infinite_quantum_powers() {
        assert_eq!(quantum_pow_inf(1, 7).unwrap(), QLaurent::one());
        assert_eq!(quantum_pow_inf(2, 3).unwrap(), lp(0, &[1, 1, 1, 2]));
        let direct = (&(&lp(0, &[1, 1]) * &lp(0, &[1, 0, 1])) * &lp(0, &[1, 0, 0, 1])).truncate(3);
        assert_eq!(quantum_pow_inf(2, 3).unwrap(), direct);
    }

    #[test]
    fn rational_arguments_in_shifted_products() {
        let u = QRat::from_rat(rat(1, 2));
        let v = QRat::from_rat(rat(-3, 5));
        let p = shifted_pow(&u, &v, 3);
        assert_eq!(p.eval_at(&int(1)).unwrap(), crate::exact::rational::pow(&rat(-1, 10), 3));
    }
}
