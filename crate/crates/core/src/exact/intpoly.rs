//! Dense integer polynomials (ascending coefficients) and their gcd.
//!
//! The gcd is computed modularly: images modulo word-sized primes are
//! combined by CRT until the candidate divides both inputs exactly over the
//! integers. A primitive remainder sequence is kept as the fallback when the
//! prime table runs out.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type IntPoly = Vec<BigInt>;

pub fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub fn degree(p: &[BigInt]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Divides out the content and makes the leading coefficient positive.
pub fn primitive_part(p: &[BigInt]) -> IntPoly {
    let mut c = content(p);
    if c.is_zero() {
        return Vec::new();
    }
    if p.last().is_some_and(Signed::is_negative) {
        c = -c;
    }
    p.iter().map(|x| x / &c).collect()
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    let sparse_b: Vec<(usize, &BigInt)> = b.iter().enumerate().filter(|(_, y)| !y.is_zero()).collect();
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for &(j, y) in &sparse_b {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Exact quotient `a / b` over the integers, or `None` when `b` does not
/// divide `a` in `Z[q]`.
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<IntPoly> {
    let db = degree(b)?;
    if a.is_empty() {
        return Some(Vec::new());
    }
    let da = degree(a)?;
    if da < db {
        return None;
    }
    let lead = &b[db];
    let mut rem: IntPoly = a.to_vec();
    let mut quot = vec![BigInt::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let top = &rem[k + db];
        if top.is_zero() {
            continue;
        }
        let (qk, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &qk * bj;
        }
        quot[k] = qk;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut quot);
    Some(quot)
}

/// Primitive gcd of two integer polynomials, leading coefficient positive.
/// Returns `[1]` when the polynomials are coprime, and the primitive part
/// of the other argument when one of them is zero.
pub fn gcd(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() {
        return primitive_part(b);
    }
    if b.is_empty() {
        return primitive_part(a);
    }
    if a.len() == 1 || b.len() == 1 {
        return vec![BigInt::one()];
    }
    let a = primitive_part(a);
    let b = primitive_part(b);
    if a == b {
        return a;
    }
    modular_gcd(&a, &b).unwrap_or_else(|| gcd_prs(&a, &b))
}

/// Euclid over the integers with primitive parts taken at each step.
pub fn gcd_prs(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut r0 = primitive_part(a);
    let mut r1 = primitive_part(b);
    if r0.len() < r1.len() {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !r1.is_empty() {
        let r = pseudo_rem(&r0, &r1);
        r0 = r1;
        r1 = primitive_part(&r);
    }
    primitive_part(&r0)
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let db = b.len() - 1;
    let lead = &b[db];
    let mut rem: IntPoly = a.to_vec();
    while rem.len() > db {
        let top = rem.last().cloned().unwrap();
        let shift = rem.len() - 1 - db;
        for c in rem.iter_mut() {
            *c *= lead;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[shift + j] -= &top * bj;
        }
        trim(&mut rem);
    }
    rem
}

const PRIME_TABLE_LEN: usize = 768;

fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(PRIME_TABLE_LEN);
        let mut n: u64 = (1 << 31) - 1;
        while out.len() < PRIME_TABLE_LEN {
            if is_prime_u64(n) {
                out.push(n);
            }
            n -= 2;
        }
        out
    })
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn reduce_mod(p: &[BigInt], m: u64) -> Vec<u64> {
    let mb = BigInt::from(m);
    let mut out: Vec<u64> = p
        .iter()
        .map(|c| c.mod_floor(&mb).to_u64().unwrap())
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn inv_mod(a: u64, m: u64) -> u64 {
    pow_mod(a, m - 2, m)
}

/// Monic gcd over `F_m`.
fn gcd_mod(a: Vec<u64>, b: Vec<u64>, m: u64) -> Vec<u64> {
    let (mut r0, mut r1) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    while !r1.is_empty() {
        let inv = inv_mod(*r1.last().unwrap(), m);
        let d1 = r1.len() - 1;
        while r0.len() > d1 {
            let top = mul_mod(*r0.last().unwrap(), inv, m);
            let shift = r0.len() - 1 - d1;
            for (j, c) in r1.iter().enumerate() {
                let t = mul_mod(top, *c, m);
                r0[shift + j] = (r0[shift + j] + m - t) % m;
            }
            while r0.last() == Some(&0) {
                r0.pop();
            }
        }
        std::mem::swap(&mut r0, &mut r1);
    }
    let inv = inv_mod(*r0.last().unwrap(), m);
    r0.iter().map(|c| mul_mod(*c, inv, m)).collect()
}

fn modular_gcd(a: &[BigInt], b: &[BigInt]) -> Option<IntPoly> {
    let lc_a = a.last().unwrap();
    let lc_b = b.last().unwrap();
    let scale = lc_a.gcd(lc_b);
    let max_deg = (a.len().min(b.len())) - 1;

    let mut best_deg = max_deg + 1;
    let mut acc: IntPoly = Vec::new();
    let mut modulus = BigInt::one();
    let mut stable;

    for &p in primes() {
        let pb = BigInt::from(p);
        if (lc_a % &pb).is_zero() || (lc_b % &pb).is_zero() {
            continue;
        }
        let g = gcd_mod(reduce_mod(a, p), reduce_mod(b, p), p);
        let d = g.len() - 1;
        if d == 0 {
            return Some(vec![BigInt::one()]);
        }
        if d > best_deg {
            continue;
        }
        let s = scale.mod_floor(&pb).to_u64().unwrap();
        let image: Vec<u64> = g.iter().map(|c| mul_mod(*c, s, p)).collect();
        if d < best_deg {
            best_deg = d;
            acc = image.iter().map(|&c| symmetric(BigInt::from(c), &pb)).collect();
            modulus = pb;
            stable = false;
        } else {
            let next = crt_combine(&acc, &modulus, &image, p);
            modulus *= &pb;
            stable = next == acc;
            acc = next;
        }
        if stable || modulus.bits() > 64 * (a.len().max(b.len()) as u64 + 8) {
            let cand = primitive_part(&acc);
            if div_exact(a, &cand).is_some() && div_exact(b, &cand).is_some() {
                return Some(cand);
            }
        }
    }
    None
}

fn symmetric(v: BigInt, m: &BigInt) -> BigInt {
    let half: BigInt = m >> 1;
    if v > half {
        v - m
    } else {
        v
    }
}

fn crt_combine(acc: &[BigInt], modulus: &BigInt, image: &[u64], p: u64) -> IntPoly {
    let pb = BigInt::from(p);
    let m_mod_p = modulus.mod_floor(&pb).to_u64().unwrap();
    let m_inv = inv_mod(m_mod_p, p);
    let new_mod = modulus * &pb;
    acc.iter()
        .zip(image)
        .map(|(h, &r)| {
            let h_mod = h.mod_floor(&pb).to_u64().unwrap();
            let t = mul_mod((r + p - h_mod) % p, m_inv, p);
            let v = (h + modulus * BigInt::from(t)).mod_floor(&new_mod);
            symmetric(v, &new_mod)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> IntPoly {
        let mut out: IntPoly = v.iter().map(|&c| BigInt::from(c)).collect();
        trim(&mut out);
        out
    }

    #[test]
    fn gcd_of_cyclotomic_multiples() {
        // (1+q)(1+q+q^2) and (1+q)(1-q)
        let a = mul(&p(&[1, 1]), &p(&[1, 1, 1]));
        let b = mul(&p(&[1, 1]), &p(&[1, -1]));
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
        assert_eq!(gcd_prs(&a, &b), p(&[1, 1]));
    }

    #[test]
    fn gcd_respects_non_monic_factors() {
        let f = p(&[3, 0, 2]);
        let a = mul(&f, &p(&[5, 7]));
        let b = mul(&f, &p(&[-1, 0, 0, 4]));
        assert_eq!(gcd(&a, &b), f);
    }

    #[test]
    fn exact_division_reports_failure() {
        assert_eq!(div_exact(&p(&[-1, 0, 1]), &p(&[-1, 1])), Some(p(&[1, 1])));
        assert_eq!(div_exact(&p(&[-3, 1]), &p(&[1, 1])), None);
    }

    #[test]
    fn miller_rabin_matches_trial_division() {
        for n in 0..5000u64 {
            let trial = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime_u64(n), trial, "n = {n}");
        }
    }
}
