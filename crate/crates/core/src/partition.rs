//! Partition counts, the two Ramanujan generating-function identities for
//! `p(5n+4)` and `p(7n+5)`, the false prime-partition identity, and the
//! alternating exponential sum with its certified tail.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::BigRat;
use crate::series::product_expand_int;
use crate::verdict::{Mode, Verdict};

/// `p(0..=max_n)`. Built once by the pentagonal recurrence, then read-only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionTable {
    values: Vec<BigInt>,
}

impl PartitionTable {
    pub fn new(max_n: usize) -> Self {
        let mut p: Vec<BigInt> = Vec::with_capacity(max_n + 1);
        p.push(BigInt::one());
        for n in 1..=max_n {
            let mut acc = BigInt::zero();
            for m in 1.. {
                let g1 = m * (3 * m - 1) / 2;
                if g1 > n {
                    break;
                }
                let g2 = m * (3 * m + 1) / 2;
                let mut pair = p[n - g1].clone();
                if g2 <= n {
                    pair += &p[n - g2];
                }
                if m % 2 == 1 {
                    acc += pair;
                } else {
                    acc -= pair;
                }
            }
            p.push(acc);
        }
        PartitionTable { values: p }
    }

    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> &BigInt {
        &self.values[n]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

pub fn partition_count(n: usize) -> BigInt {
    PartitionTable::new(n).values.swap_remove(n)
}

fn add_exponents(map: &mut BTreeMap<u64, i64>, step: u64, e: i64, order: usize) {
    let mut k = step;
    while k as usize <= order {
        *map.entry(k).or_insert(0) += e;
        k += step;
    }
}

/// `prod_{k} (1 - x^{stride k})^{top} / prod_k (1 - x^k)^{bottom}`.
fn eta_quotient(stride: u64, top: i64, bottom: i64, order: usize) -> Vec<BigInt> {
    let mut map = BTreeMap::new();
    add_exponents(&mut map, 1, -bottom, order);
    add_exponents(&mut map, stride, top, order);
    let exps: Vec<(u64, i64)> = map.into_iter().filter(|&(_, e)| e != 0).collect();
    product_expand_int(&exps, order)
}

fn compare_coefficients(v: Verdict, lhs: &[BigInt], rhs: &[BigInt]) -> Verdict {
    match (0..lhs.len()).find(|&n| lhs[n] != rhs[n]) {
        None => {
            let t = lhs.len() - 1;
            v.passed(format!("coefficients x^0..x^{t}"))
        }
        Some(n) => v.failed(
            format!("x^{n}"),
            [("lhs", lhs[n].to_string()), ("rhs", rhs[n].to_string())],
        ),
    }
}

fn progression(table_len: usize, stride: usize, offset: usize, t: usize) -> Vec<BigInt> {
    let table = PartitionTable::new(table_len);
    (0..=t).map(|n| table.get(stride * n + offset).clone()).collect()
}

/// `sum p(5n+4) x^n = 5 prod (1-x^{5k})^5 / prod (1-x^k)^6` to `x^t`.
pub fn ramanujan_mod5_check(t: usize) -> Verdict {
    let lhs = progression(5 * t + 4, 5, 4, t);
    let rhs: Vec<BigInt> = eta_quotient(5, 5, 6, t).into_iter().map(|c| c * 5).collect();
    compare_coefficients(Verdict::new("partitions5", Mode::XSeries).param("order", t), &lhs, &rhs)
}

/// `sum p(7n+5) x^n = 7 prod (1-x^{7k})^3 / prod (1-x^k)^4
///  + 49 x prod (1-x^{7k})^7 / prod (1-x^k)^8` to `x^t`.
pub fn ramanujan_mod7_check(t: usize) -> Verdict {
    let lhs = progression(7 * t + 5, 7, 5, t);
    let a = eta_quotient(7, 3, 4, t);
    let b = eta_quotient(7, 7, 8, t);
    let rhs: Vec<BigInt> = (0..=t)
        .map(|n| &a[n] * 7 + if n > 0 { &b[n - 1] * 49 } else { BigInt::zero() })
        .collect();
    compare_coefficients(Verdict::new("partitions7", Mode::XSeries).param("order", t), &lhs, &rhs)
}

/// Checks `p(stride n + offset) ≡ 0 (mod modulus)` for `n <= n_max`; returns
/// the first counterexample.
pub fn ramanujan_congruence(stride: usize, offset: usize, modulus: u32, n_max: usize) -> Option<usize> {
    let table = PartitionTable::new(stride * n_max + offset);
    (0..=n_max).find(|&n| !(table.get(stride * n + offset) % modulus).is_zero())
}

/// Primes `<= n` by the sieve of Eratosthenes.
pub fn primes_up_to(n: usize) -> Vec<usize> {
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Both sides of the prime-partition identity to `x^t`: `c` counts
/// partitions into primes, `d` is `1 + sum_k x^{p_1+..+p_k} / ((1-x)..(1-x^k))`.
pub fn prime_partition_sides(t: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    let primes = primes_up_to(t.max(2));
    let exps: Vec<(u64, i64)> = primes.iter().map(|&p| (p as u64, -1)).collect();
    let c = product_expand_int(&exps, t);
    let mut d = vec![BigInt::zero(); t + 1];
    d[0] = BigInt::one();
    let mut prefix = 0;
    for (k, &p) in primes.iter().enumerate() {
        prefix += p;
        if prefix > t {
            break;
        }
        let k = k as u64 + 1;
        let parts: Vec<(u64, i64)> = (1..=k).map(|j| (j, -1)).collect();
        let series = product_expand_int(&parts, t - prefix);
        for (i, v) in series.into_iter().enumerate() {
            d[prefix + i] += v;
        }
    }
    (c, d)
}

/// First `n` in `2..=t` with `c_n != d_n`.
pub fn prime_partition_scan(t: usize) -> Option<(usize, BigInt, BigInt)> {
    let (c, d) = prime_partition_sides(t);
    (2..=t).find(|&n| c[n] != d[n]).map(|n| (n, c[n].clone(), d[n].clone()))
}

fn exp_term(k: u64) -> BigRat {
    let m = BigInt::from(2 * k + 1);
    let top = &m * &m * &m + &m * &m;
    let fact: BigInt = (1..=k).fold(BigInt::one(), |acc, i| acc * i);
    let t = BigRat::new(top, fact);
    if k.is_multiple_of(2) {
        t
    } else {
        -t
    }
}

/// `S_K = sum_{k=0}^{K} (-1)^k ((2k+1)^3 + (2k+1)^2) / k!`.
pub fn exp_sum_partial(k_max: u64) -> BigRat {
    (0..=k_max).map(exp_term).fold(BigRat::zero(), |acc, t| acc + t)
}

/// `((2K+3)^3 + (2K+3)^2) 2 / K!`, a bound on `|S_K|` for `K >= 10`.
pub fn exp_sum_tail_bound(k_max: u64) -> BigRat {
    let m = BigInt::from(2 * k_max + 3);
    let fact: BigInt = (1..=k_max).fold(BigInt::one(), |acc, i| acc * i);
    BigRat::new((&m * &m * &m + &m * &m) * 2, fact)
}

/// Certifies that the alternating sum tends to 0: `|S_K|` stays under the
/// tail bound for `10 <= K <= k_max` and `|S_{k_max}| < 10^-digits`.
pub fn exp_sum_check(k_max: u64, digits: u32) -> Verdict {
    let v = Verdict::new("exp-sum-zero", Mode::NumericBound)
        .param("K", k_max)
        .param("digits", digits);
    let mut s = BigRat::zero();
    for k in 0..=k_max {
        s += exp_term(k);
        if k >= 10 && s.abs() > exp_sum_tail_bound(k) {
            return v.failed(format!("K={k}"), [("partial_sum", s.to_string())]);
        }
    }
    let eps = BigRat::new(BigInt::one(), BigInt::from(10).pow(digits));
    if s.abs() < eps {
        v.passed(format!("tail bound for 10<=K<={k_max}, |S_{k_max}| < 1e-{digits}"))
    } else {
        v.failed(format!("K={k_max}"), [("partial_sum", s.to_string())])
    }
}
