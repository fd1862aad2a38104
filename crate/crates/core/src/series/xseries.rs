use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{BigRat, QLaurent, QRat};
use crate::qkit::qn_rat;

/// Formal power series in `x` over `QRat`, known modulo `x^{order+1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct XSeries {
    coeffs: Vec<QRat>,
}

impl XSeries {
    pub fn zero(order: usize) -> Self {
        XSeries { coeffs: vec![QRat::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(QRat::one(), order)
    }

    pub fn constant(c: QRat, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c x^n`, zero when `n > order`.
    pub fn monomial(c: QRat, n: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if n <= order {
            s.coeffs[n] = c;
        }
        s
    }

    pub fn x(order: usize) -> Self {
        Self::monomial(QRat::one(), 1, order)
    }

    /// Coefficients `c_0..c_T`; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<QRat>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        XSeries { coeffs }
    }

    /// A polynomial in `x`: coefficients past `order` are dropped, missing
    /// ones are zero.
    pub fn from_poly(coeffs: &[QRat], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (i, c) in coeffs.iter().enumerate().take(order + 1) {
            s.coeffs[i] = c.clone();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[QRat] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&QRat> {
        self.coeffs.get(n).ok_or(Error::BeyondOrder { index: n, order: self.order() })
    }

    pub fn constant_term(&self) -> &QRat {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(QRat::is_zero)
    }

    /// Lowest `n` with `c_n != 0`; `None` if zero to the known order.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// True when only the constant coefficient can be nonzero.
    pub fn is_x_free(&self) -> bool {
        self.coeffs[1..].iter().all(QRat::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let keep = (order + 1).min(self.coeffs.len());
        XSeries { coeffs: self.coeffs[..keep].to_vec() }
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(usize, &QRat) -> QRat) -> Self {
        XSeries { coeffs: self.coeffs.iter().enumerate().map(|(n, c)| f(n, c)).collect() }
    }

    pub fn try_map_coeffs(&self, mut f: impl FnMut(usize, &QRat) -> Result<QRat>) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| f(n, c))
            .collect::<Result<Vec<_>>>()?;
        Ok(XSeries { coeffs })
    }

    pub fn scale(&self, c: &QRat) -> Self {
        self.map_coeffs(|_, x| x * c)
    }

    /// Multiplication by `x^k`, keeping the order.
    pub fn shift_x(&self, k: usize) -> Self {
        let t = self.order();
        let mut s = Self::zero(t);
        for n in 0..=t {
            if n >= k {
                s.coeffs[n] = self.coeffs[n - k].clone();
            }
        }
        s
    }

    /// Nonnegative integer power.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..n {
            acc = series_mul(&acc, self);
        }
        acc
    }

    /// Specializes `q = v` coefficientwise.
    pub fn eval_q(&self, v: &BigRat) -> Result<Vec<BigRat>> {
        self.coeffs.iter().map(|c| c.eval_at(v)).collect()
    }

    /// The substitution `q -> q^m` in every coefficient.
    pub fn subst_q_power(&self, m: i64) -> Self {
        self.map_coeffs(|_, c| c.subst_power(m))
    }

    /// First index where two series differ up to their common order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let t = self.order().min(other.order());
        (0..=t).find(|&n| self.coeffs[n] != other.coeffs[n])
    }
}

fn zip_with(a: &XSeries, b: &XSeries, f: impl Fn(&QRat, &QRat) -> QRat) -> XSeries {
    let t = a.order().min(b.order());
    XSeries { coeffs: (0..=t).map(|n| f(&a.coeffs[n], &b.coeffs[n])).collect() }
}

/// Cauchy product truncated to the smaller order.
pub fn series_mul(a: &XSeries, b: &XSeries) -> XSeries {
    let t = a.order().min(b.order());
    let mut out = XSeries::zero(t);
    for i in 0..=t {
        if a.coeffs[i].is_zero() {
            continue;
        }
        for j in 0..=t - i {
            if b.coeffs[j].is_zero() {
                continue;
            }
            out.coeffs[i + j] = &out.coeffs[i + j] + &(&a.coeffs[i] * &b.coeffs[j]);
        }
    }
    out
}

/// Multiplicative inverse; needs a nonzero constant term.
pub fn series_recip(a: &XSeries) -> Result<XSeries> {
    let a0 = a.constant_term();
    if a0.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let inv0 = a0.try_recip()?;
    let t = a.order();
    let mut b: Vec<QRat> = Vec::with_capacity(t + 1);
    b.push(inv0.clone());
    for n in 1..=t {
        let mut acc = QRat::zero();
        for i in 1..=n {
            if !a.coeffs[i].is_zero() && !b[n - i].is_zero() {
                acc = &acc + &(&a.coeffs[i] * &b[n - i]);
            }
        }
        b.push(-&(&acc * &inv0));
    }
    Ok(XSeries { coeffs: b })
}

/// Ordinary derivative `c_n x^n -> n c_n x^{n-1}`.
pub fn classical_derivative(a: &XSeries) -> XSeries {
    derive_with(a, |n| QRat::from_int(n as i64))
}

fn derive_with(a: &XSeries, weight: impl Fn(usize) -> QRat) -> XSeries {
    let t = a.order();
    if t == 0 {
        return XSeries::zero(0);
    }
    XSeries { coeffs: (1..=t).map(|n| &a.coeffs[n] * &weight(n)).collect() }
}

/// Formal logarithm of a series with constant term 1, via `log a = ∫ a'/a`.
pub fn series_log(a: &XSeries) -> Result<XSeries> {
    if !a.constant_term().is_one() {
        return Err(Error::ConstantTermNotOne);
    }
    let t = a.order();
    if t == 0 {
        return Ok(XSeries::zero(0));
    }
    let quotient = series_mul(&classical_derivative(a), &series_recip(&a.truncate(t - 1))?);
    let mut out = XSeries::zero(t);
    for n in 1..=t {
        out.coeffs[n] = quotient.coeffs[n - 1].scale(&BigRat::new(1.into(), BigInt::from(n)));
    }
    Ok(out)
}

/// q-logarithm `Log(1 + z) = sum_{k>=0} (-1)^k z^{k+1} / [k+1]`, for `z(0) = 0`.
pub fn series_qlog(z: &XSeries) -> Result<XSeries> {
    if !z.constant_term().is_zero() {
        return Err(Error::ConstantTermNotZero);
    }
    let t = z.order();
    let mut out = XSeries::zero(t);
    let mut power = z.clone();
    for k in 0..t {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let w = &QRat::from_int(sign) / &qn_rat(k as i64 + 1);
        out = &out + &power.scale(&w);
        power = series_mul(&power, z);
    }
    Ok(out)
}

/// `c_n x^n -> [n] c_n x^{n-1}`. The result is known to one order less.
pub fn q_derivative(a: &XSeries) -> XSeries {
    derive_with(a, |n| qn_rat(n as i64))
}

/// Jackson integral from 0: `c_n x^n -> c_n x^{n+1} / [n+1]`.
pub fn jackson_integral(a: &XSeries) -> XSeries {
    let t = a.order();
    let mut out = XSeries::zero(t + 1);
    for n in 0..=t {
        out.coeffs[n + 1] = &a.coeffs[n] / &qn_rat(n as i64 + 1);
    }
    out
}

/// `x -> q^power x`: `c_n -> q^{n power} c_n`.
pub fn subst_qx(a: &XSeries, power: i64) -> XSeries {
    a.map_coeffs(|n, c| c.shift(n as i64 * power))
}

impl Add for &XSeries {
    type Output = XSeries;
    fn add(self, rhs: &XSeries) -> XSeries {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub for &XSeries {
    type Output = XSeries;
    fn sub(self, rhs: &XSeries) -> XSeries {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Mul for &XSeries {
    type Output = XSeries;
    fn mul(self, rhs: &XSeries) -> XSeries {
        series_mul(self, rhs)
    }
}

impl Neg for &XSeries {
    type Output = XSeries;
    fn neg(self) -> XSeries {
        self.map_coeffs(|_, c| -c)
    }
}

impl fmt::Display for XSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let simple = c.is_polynomial() && c.numer().terms().count() == 1;
            let (negative, body) = match text.strip_prefix('-') {
                Some(rest) if simple => (true, rest.to_string()),
                _ => (false, text.clone()),
            };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let power = match n {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{n}"),
            };
            if n == 0 {
                write!(f, "{body}")?;
            } else if simple && body == "1" {
                write!(f, "{power}")?;
            } else if simple {
                write!(f, "{body}*{power}")?;
            } else {
                write!(f, "({body})*{power}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        match self.order() {
            0 => write!(f, " + O(x)"),
            t => write!(f, " + O(x^{})", t + 1),
        }
    }
}

impl fmt::Debug for XSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XSeries({self})")
    }
}

/// Polynomial `prod_{i=0}^{k-1} (u + q^i v x)` in `x`, i.e. `(u ∔ v x)^k`.
pub fn shifted_pow_x(u: &QRat, v: &QRat, k: u32, order: usize) -> XSeries {
    let mut acc = XSeries::one(order);
    for i in 0..k as i64 {
        let factor = XSeries::from_poly(&[u.clone(), v.shift(i)], order);
        acc = series_mul(&acc, &factor);
    }
    acc
}

/// `(1 ∸ alpha x)^k = prod_{i=0}^{k-1} (1 - q^i alpha x)`.
pub fn one_minus_dot(alpha: &QRat, k: u32, order: usize) -> XSeries {
    shifted_pow_x(&QRat::one(), &-alpha, k, order)
}

/// Coefficientwise check on a q-free series.
pub fn is_q_free(a: &XSeries) -> bool {
    a.coeffs().iter().all(|c| c.constant_value().is_some())
}

/// Series of a Laurent polynomial in `x`.
pub fn from_x_polynomial(p: &QLaurent, order: usize) -> Result<XSeries> {
    if p.min_exponent() < 0 && !p.is_zero() {
        return Err(Error::InvalidArgument("negative power of x in a power series".into()));
    }
    let mut s = XSeries::zero(order);
    for (e, c) in p.terms() {
        if (e as usize) <= order {
            s.coeffs[e as usize] = QRat::from_rat(c.clone());
        }
    }
    Ok(s)
}

/// `a / (1 - c x)` by the recurrence `b_n = a_n + c b_{n-1}`.
pub fn div_one_minus(a: &XSeries, c: &QRat) -> XSeries {
    div_linear_factors(a, std::slice::from_ref(c))
}

/// `a / (1 ∸ alpha x)^k = a / prod_{i<k} (1 - q^i alpha x)`.
pub fn div_one_minus_dot(a: &XSeries, alpha: &QRat, k: u32) -> XSeries {
    let cs: Vec<QRat> = (0..k as i64).map(|i| alpha.shift(i)).collect();
    div_linear_factors(a, &cs)
}

/// `a / prod_j (1 - c_j x)`. When the coefficients of `a` share one
/// denominator and every `c_j` is a Laurent polynomial, the recurrence runs
/// on numerators and each coefficient is normalized once.
fn div_linear_factors(a: &XSeries, cs: &[QRat]) -> XSeries {
    let den = a.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.denom().clone());
    let polys: Option<Vec<QLaurent>> = cs.iter().map(QRat::to_laurent).collect();
    match (den, polys) {
        (Some(den), Some(polys)) if a.coeffs.iter().all(|c| c.is_zero() || *c.denom() == den) => {
            let mut nums: Vec<QLaurent> = a.coeffs.iter().map(|c| c.numer().clone()).collect();
            for c in &polys {
                for n in 1..nums.len() {
                    let carry = &nums[n - 1] * c;
                    nums[n] = &nums[n] + &carry;
                }
            }
            let coeffs = nums.iter().map(|n| QRat::new(n, &den).expect("nonzero denominator")).collect();
            XSeries { coeffs }
        }
        _ => {
            let mut out = a.clone();
            for c in cs {
                for n in 1..out.coeffs.len() {
                    let carry = &out.coeffs[n - 1] * c;
                    out.coeffs[n] = &out.coeffs[n] + &carry;
                }
            }
            out
        }
    }
}

/// Running sum of x-series whose coefficients are kept as unreduced
/// fractions over the lcm of the denominators seen so far; each coefficient
/// is normalized once in [`LazySum::finish`].
pub(crate) struct LazySum {
    nums: Vec<QLaurent>,
    dens: Vec<QLaurent>,
}

impl LazySum {
    pub(crate) fn new(order: usize) -> Self {
        LazySum { nums: vec![QLaurent::zero(); order + 1], dens: vec![QLaurent::one(); order + 1] }
    }

    pub(crate) fn add(&mut self, s: &XSeries) {
        for ((num, den), c) in self.nums.iter_mut().zip(self.dens.iter_mut()).zip(&s.coeffs) {
            if c.is_zero() {
                continue;
            }
            if c.denom() == &*den {
                *num = &*num + c.numer();
                continue;
            }
            // L/D = (L/g) / (D/g); the reduced denominator is D/g exactly,
            // both being primitive with positive leading coefficient.
            let ratio = QRat::new(den, c.denom()).expect("nonzero denominator");
            let d_over_g = ratio.denom();
            if d_over_g.is_one() {
                *num = &*num + &(c.numer() * &den.div_exact(c.denom()).expect("D divides L"));
                continue;
            }
            let g = c.denom().div_exact(d_over_g).expect("gcd divides D");
            let l_over_g = den.div_exact(&g).expect("gcd divides L");
            *num = &(&*num * d_over_g) + &(c.numer() * &l_over_g);
            *den = &*den * d_over_g;
        }
    }

    pub(crate) fn finish(self) -> XSeries {
        let coeffs = self.nums.iter().zip(&self.dens).map(|(n, d)| QRat::new(n, d).expect("nonzero denominator")).collect();
        XSeries { coeffs }
    }
}
