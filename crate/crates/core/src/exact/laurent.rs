use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::intpoly::{self, IntPoly};
use super::rational::{common_denominator, numerator_gcd, BigRat};
use crate::error::{Error, Result};

/// Laurent polynomial in a single named variable with rational coefficients.
///
/// Storage is dense from `min_exp` upward. The first and last stored
/// coefficients are nonzero; zero is the empty vector with `min_exp == 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QLaurent {
    var: char,
    min_exp: i64,
    coeffs: Vec<BigRat>,
}

impl QLaurent {
    pub fn zero_in(var: char) -> Self {
        QLaurent { var, min_exp: 0, coeffs: Vec::new() }
    }

    pub fn zero() -> Self {
        Self::zero_in('q')
    }

    pub fn one() -> Self {
        Self::constant_in(BigRat::one(), 'q')
    }

    pub fn constant(c: BigRat) -> Self {
        Self::constant_in(c, 'q')
    }

    pub fn constant_in(c: BigRat, var: char) -> Self {
        Self::monomial_in(c, 0, var)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRat::from_integer(n.into()))
    }

    /// `c * var^e`.
    pub fn monomial_in(c: BigRat, e: i64, var: char) -> Self {
        if c.is_zero() {
            return Self::zero_in(var);
        }
        QLaurent { var, min_exp: e, coeffs: vec![c] }
    }

    pub fn monomial(c: BigRat, e: i64) -> Self {
        Self::monomial_in(c, e, 'q')
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(BigRat::one(), e)
    }

    pub fn var_pow(var: char, e: i64) -> Self {
        Self::monomial_in(BigRat::one(), e, var)
    }

    pub fn new(var: char, min_exp: i64, coeffs: Vec<BigRat>) -> Self {
        let mut p = QLaurent { var, min_exp, coeffs };
        p.canonicalize();
        p
    }

    /// Integer coefficients starting at `min_exp`.
    pub fn from_ints_in(var: char, min_exp: i64, coeffs: &[i64]) -> Self {
        Self::new(
            var,
            min_exp,
            coeffs.iter().map(|&c| BigRat::from_integer(c.into())).collect(),
        )
    }

    pub fn from_ints(min_exp: i64, coeffs: &[i64]) -> Self {
        Self::from_ints_in('q', min_exp, coeffs)
    }

    fn canonicalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.min_exp = 0;
        } else if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_exp += lead_zeros as i64;
        }
    }

    pub fn var(&self) -> char {
        self.var
    }

    /// Same coefficients, different variable name.
    pub fn with_var(mut self, var: char) -> Self {
        self.var = var;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_exp == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.min_exp == 0 && self.coeffs.len() == 1)
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Value of a constant polynomial.
    pub fn constant_value(&self) -> Option<BigRat> {
        if self.is_zero() {
            Some(BigRat::zero())
        } else if self.is_constant() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn min_exponent(&self) -> i64 {
        self.min_exp
    }

    /// Highest exponent; `None` for zero.
    pub fn max_exponent(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_exp + self.coeffs.len() as i64 - 1)
        }
    }

    /// Lowest exponent carrying a nonzero coefficient; `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min_exp)
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn coeff(&self, e: i64) -> BigRat {
        let idx = e - self.min_exp;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            BigRat::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigRat> {
        self.coeffs.last()
    }

    /// `(exponent, coefficient)` pairs with nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRat)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(Error::VariableMismatch(self.var, other.var))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let lo = self.min_exp.min(other.min_exp);
        let hi = self.max_exponent().unwrap().max(other.max_exponent().unwrap());
        let mut coeffs = vec![BigRat::zero(); (hi - lo + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.min_exp - lo) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.min_exp - lo) as usize + i] += c;
        }
        Ok(Self::new(self.var, lo, coeffs))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero_in(self.var));
        }
        let min_exp = self.min_exp + other.min_exp;
        if self.is_monomial() {
            let c = &self.coeffs[0];
            return Ok(QLaurent {
                var: self.var,
                min_exp,
                coeffs: other.coeffs.iter().map(|x| x * c).collect(),
            });
        }
        if other.is_monomial() {
            let c = &other.coeffs[0];
            return Ok(QLaurent {
                var: self.var,
                min_exp,
                coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            });
        }
        let (da, ia) = self.cleared();
        let (db, ib) = other.cleared();
        let prod = intpoly::mul(&ia, &ib);
        let den = da * db;
        let coeffs = if den.is_one() {
            prod.into_iter().map(BigRat::from_integer).collect()
        } else {
            prod.into_iter().map(|c| BigRat::new(c, den.clone())).collect()
        };
        Ok(Self::new(self.var, min_exp, coeffs))
    }

    /// Common denominator and the integer coefficients `den * self`.
    fn cleared(&self) -> (BigInt, IntPoly) {
        let den = common_denominator(&self.coeffs);
        let ints = if den.is_one() {
            self.coeffs.iter().map(|c| c.numer().clone()).collect()
        } else {
            self.coeffs
                .iter()
                .map(|c| c.numer() * (&den / c.denom()))
                .collect()
        };
        (den, ints)
    }

    /// Decomposes `self = scalar * var^shift * P` with `P` a primitive
    /// integer polynomial, `P(0) != 0` and positive leading coefficient.
    /// Zero yields `(0, 0, [])`.
    pub fn to_primitive(&self) -> (BigRat, i64, IntPoly) {
        if self.is_zero() {
            return (BigRat::zero(), 0, Vec::new());
        }
        let den = common_denominator(&self.coeffs);
        let mut num = numerator_gcd(&self.coeffs);
        if self.coeffs.last().unwrap().is_negative() {
            num = -num;
        }
        let scalar = BigRat::new(num, den);
        let prim = self
            .coeffs
            .iter()
            .map(|c| {
                let v = c / &scalar;
                debug_assert!(v.is_integer());
                v.to_integer()
            })
            .collect();
        (scalar, self.min_exp, prim)
    }

    pub fn from_primitive(scalar: &BigRat, shift: i64, prim: &[BigInt], var: char) -> Self {
        Self::new(
            var,
            shift,
            prim.iter().map(|c| BigRat::from_integer(c.clone()) * scalar).collect(),
        )
    }

    pub fn neg_ref(&self) -> Self {
        QLaurent {
            var: self.var,
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero_in(self.var);
        }
        QLaurent {
            var: self.var,
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplication by `var^e`.
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        QLaurent { var: self.var, min_exp: self.min_exp + e, coeffs: self.coeffs.clone() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant_in(BigRat::one(), self.var);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The substitution `var -> var^m`.
    pub fn subst_power(&self, m: i64) -> Self {
        assert!(m != 0, "subst_power needs a nonzero power");
        if self.is_zero() {
            return self.clone();
        }
        let lo = self.terms().map(|(e, _)| e * m).min().unwrap();
        let hi = self.terms().map(|(e, _)| e * m).max().unwrap();
        let mut coeffs = vec![BigRat::zero(); (hi - lo + 1) as usize];
        for (e, c) in self.terms() {
            coeffs[(e * m - lo) as usize] = c.clone();
        }
        Self::new(self.var, lo, coeffs)
    }

    /// Drops every term of exponent greater than `order`.
    pub fn truncate(&self, order: i64) -> Self {
        if self.is_zero() || self.max_exponent().unwrap() <= order {
            return self.clone();
        }
        if order < self.min_exp {
            return Self::zero_in(self.var);
        }
        let keep = (order - self.min_exp + 1) as usize;
        Self::new(self.var, self.min_exp, self.coeffs[..keep].to_vec())
    }

    /// Exact value at a rational point.
    pub fn eval_at(&self, v: &BigRat) -> Result<BigRat> {
        if self.is_zero() {
            return Ok(BigRat::zero());
        }
        if v.is_zero() {
            if self.min_exp < 0 {
                return Err(Error::NegativePowerAtZero);
            }
            return Ok(self.coeff(0));
        }
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        Ok(acc * super::rational::pow(v, self.min_exp as i32))
    }

    /// Quotient and remainder of the polynomial parts.
    ///
    /// Monomials are units in the Laurent ring, so only the polynomial part
    /// of the divisor matters; the remainder is reported at the dividend's
    /// exponent offset.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_var(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok((self.clone(), self.clone()));
        }
        let db = divisor.coeffs.len() - 1;
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRat::zero(); rem.len().saturating_sub(db).max(1)];
        if rem.len() > db {
            for k in (0..rem.len() - db).rev() {
                let top = &rem[k + db];
                if top.is_zero() {
                    continue;
                }
                let qk = top / lead;
                for (j, bj) in divisor.coeffs.iter().enumerate() {
                    let t = &qk * bj;
                    rem[k + j] -= t;
                }
                quot[k] = qk;
            }
        }
        let q = Self::new(self.var, self.min_exp - divisor.min_exp, quot);
        let r = Self::new(self.var, self.min_exp, rem);
        Ok((q, r))
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonzeroRemainder { remainder: r })
        }
    }
}

/// Exact polynomial quotient `a / b`; fails with the remainder otherwise.
pub fn poly_exact_div(a: &QLaurent, b: &QLaurent) -> Result<QLaurent> {
    a.div_exact(b)
}

impl Default for QLaurent {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &QLaurent) -> QLaurent {
        self.try_add(rhs).expect("QLaurent addition")
    }
}

impl Sub for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &QLaurent) -> QLaurent {
        self.try_sub(rhs).expect("QLaurent subtraction")
    }
}

impl Mul for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        self.try_mul(rhs).expect("QLaurent multiplication")
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        self.neg_ref()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QLaurent {
            type Output = QLaurent;
            fn $m(self, rhs: QLaurent) -> QLaurent {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        self.neg_ref()
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: char, e: i64) -> fmt::Result {
    match e {
        1 => write!(f, "{var}"),
        _ => write!(f, "{var}^{e}"),
    }
}

/// Ascending-exponent text form: `1 + q + q^2`, `q^-1 + 2`, `-4 + 3*y`.
impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if e == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write_power(f, self.var, e)?;
            } else {
                write!(f, "{mag}*")?;
                write_power(f, self.var, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QLaurent({self})")
    }
}
