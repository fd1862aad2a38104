use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::intpoly;
use super::laurent::QLaurent;
use super::rational::BigRat;
use crate::error::{Error, Result};

/// Canonical quotient of two Laurent polynomials in `q`.
///
/// The denominator is a primitive integer polynomial with nonzero constant
/// term and positive leading coefficient; numerator and denominator are
/// coprime. Every value has exactly one representation, so `==` is
/// structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRat {
    num: QLaurent,
    den: QLaurent,
}

fn int_poly_to_laurent(p: &[BigInt]) -> QLaurent {
    QLaurent::new('q', 0, p.iter().cloned().map(BigRat::from_integer).collect())
}

/// Primitive gcd of the polynomial parts (monomial factors discarded).
fn laurent_gcd(a: &QLaurent, b: &QLaurent) -> QLaurent {
    let (_, _, pa) = a.to_primitive();
    let (_, _, pb) = b.to_primitive();
    int_poly_to_laurent(&intpoly::gcd(&pa, &pb))
}

/// Canonical representative of `n / d`.
pub fn qrat_normalize(n: &QLaurent, d: &QLaurent) -> Result<QRat> {
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let n = n.clone().with_var('q');
    let d = d.clone().with_var('q');
    if n.is_zero() {
        return Ok(QRat::zero());
    }
    let (sn, shift_n, pn) = n.to_primitive();
    let (sd, shift_d, pd) = d.to_primitive();
    let g = intpoly::gcd(&pn, &pd);
    let (pn, pd) = if g.len() > 1 {
        (
            intpoly::div_exact(&pn, &g).expect("gcd divides numerator"),
            intpoly::div_exact(&pd, &g).expect("gcd divides denominator"),
        )
    } else {
        (pn, pd)
    };
    let scalar = sn / sd;
    Ok(QRat {
        num: QLaurent::from_primitive(&scalar, shift_n - shift_d, &pn, 'q'),
        den: int_poly_to_laurent(&pd),
    })
}

impl QRat {
    pub fn zero() -> Self {
        QRat { num: QLaurent::zero(), den: QLaurent::one() }
    }

    pub fn one() -> Self {
        QRat { num: QLaurent::one(), den: QLaurent::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_laurent(QLaurent::from_int(n))
    }

    pub fn from_rat(c: BigRat) -> Self {
        Self::from_laurent(QLaurent::constant(c))
    }

    pub fn from_laurent(p: QLaurent) -> Self {
        QRat { num: p.with_var('q'), den: QLaurent::one() }
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::from_laurent(QLaurent::q_pow(e))
    }

    pub fn new(n: &QLaurent, d: &QLaurent) -> Result<Self> {
        qrat_normalize(n, d)
    }

    pub fn numer(&self) -> &QLaurent {
        &self.num
    }

    pub fn denom(&self) -> &QLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The Laurent polynomial, if the denominator is 1.
    pub fn to_laurent(&self) -> Option<QLaurent> {
        self.is_polynomial().then(|| self.num.clone())
    }

    /// Rational constant, if the value does not depend on `q`.
    pub fn constant_value(&self) -> Option<BigRat> {
        if self.is_polynomial() {
            self.num.constant_value()
        } else {
            None
        }
    }

    /// `q`-adic valuation; `None` for zero. The denominator never vanishes
    /// at `q = 0`, so this is the numerator's lowest exponent.
    pub fn valuation(&self) -> Option<i64> {
        self.num.valuation()
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QRat { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn shift(&self, e: i64) -> Self {
        QRat { num: self.num.shift(e), den: self.den.clone() }
    }

    pub fn try_recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // swap and re-canonicalize: numerator monomials and content move over
        let (s, shift, p) = self.num.to_primitive();
        let num = QLaurent::from_primitive(&s.recip(), -shift, &[BigInt::one()], 'q');
        let num = &num * &self.den;
        Ok(QRat { num, den: int_poly_to_laurent(&p) })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.try_recip()?)
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.try_recip()? } else { self.clone() };
        let mut acc = QRat::one();
        let mut b = base;
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &b;
            }
            k >>= 1;
            if k > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// The substitution `q -> q^m`.
    pub fn subst_power(&self, m: i64) -> Self {
        qrat_normalize(&self.num.subst_power(m), &self.den.subst_power(m))
            .expect("substitution keeps the denominator nonzero")
    }

    /// Exact value at `q = v`.
    pub fn eval_at(&self, v: &BigRat) -> Result<BigRat> {
        let d = self.den.eval_at(v)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval_at(v)? / d)
    }

    /// Power-series expansion in `q`, keeping exponents up to `order`.
    pub fn expand(&self, order: i64) -> QLaurent {
        if self.is_zero() {
            return QLaurent::zero();
        }
        if self.is_polynomial() {
            return self.num.truncate(order);
        }
        let v = self.num.min_exponent();
        if v > order {
            return QLaurent::zero();
        }
        let len = (order - v + 1) as usize;
        let inv = series_inverse(self.den.coeffs(), len);
        let num = self.num.shift(-v).truncate(len as i64 - 1);
        let inv = QLaurent::new('q', 0, inv);
        (&num * &inv).truncate(len as i64 - 1).shift(v)
    }
}

/// First `len` coefficients of `1 / d` for `d(0) != 0`.
pub(crate) fn series_inverse(d: &[BigRat], len: usize) -> Vec<BigRat> {
    let inv0 = d[0].recip();
    let mut out: Vec<BigRat> = Vec::with_capacity(len);
    for n in 0..len {
        if n == 0 {
            out.push(inv0.clone());
            continue;
        }
        let mut acc = BigRat::zero();
        for i in 1..=n.min(d.len() - 1) {
            if !d[i].is_zero() {
                acc += &d[i] * &out[n - i];
            }
        }
        out.push(-acc * &inv0);
    }
    out
}

impl Default for QRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<QLaurent> for QRat {
    fn from(p: QLaurent) -> Self {
        QRat::from_laurent(p)
    }
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return QRat::from_laurent(&self.num + &rhs.num);
            }
            return qrat_normalize(&(&self.num + &rhs.num), &self.den).unwrap();
        }
        // a + c/d with gcd(c, d) = 1 needs no reduction
        if self.den.is_one() {
            return QRat { num: &(&self.num * &rhs.den) + &rhs.num, den: rhs.den.clone() };
        }
        if rhs.den.is_one() {
            return QRat { num: &(&rhs.num * &self.den) + &self.num, den: self.den.clone() };
        }
        let g = laurent_gcd(&self.den, &rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            if num.is_zero() {
                return QRat::zero();
            }
            return QRat { num, den: &self.den * &rhs.den };
        }
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = rhs.den.div_exact(&g).unwrap();
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        qrat_normalize(&num, &(&b1 * &rhs.den)).unwrap()
    }
}

impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        self + &(-rhs)
    }
}

impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        if self.is_zero() || rhs.is_zero() {
            return QRat::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QRat::from_laurent(&self.num * &rhs.num);
        }
        // cross-cancel: (a/b)(c/d) with g1 = gcd(a, d), g2 = gcd(c, b)
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        QRat { num: &a * &c, den: &b * &d }
    }
}

/// Removes the common polynomial factor of a numerator and a canonical
/// denominator; the reduced denominator stays canonical.
fn cancel(num: &QLaurent, den: &QLaurent) -> (QLaurent, QLaurent) {
    if den.is_one() || num.is_monomial() {
        return (num.clone(), den.clone());
    }
    let g = laurent_gcd(num, den);
    if g.is_one() {
        (num.clone(), den.clone())
    } else {
        (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
    }
}

impl Div for &QRat {
    type Output = QRat;
    fn div(self, rhs: &QRat) -> QRat {
        self.try_div(rhs).expect("QRat division by zero")
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QRat {
            type Output = QRat;
            fn $m(self, rhs: QRat) -> QRat {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QRat> for QRat {
            type Output = QRat;
            fn $m(self, rhs: &QRat) -> QRat {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

fn needs_parens(p: &QLaurent) -> bool {
    p.terms().count() > 1
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if needs_parens(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        write!(f, "/({})", self.den)
    }
}

impl fmt::Debug for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRat({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn lp(min: i64, c: &[i64]) -> QLaurent {
        QLaurent::from_ints(min, c)
    }

    #[test]
    fn cancels_exact_factors() {
        let r = qrat_normalize(&lp(0, &[-1, 0, 1]), &lp(0, &[-1, 1])).unwrap();
        assert_eq!(r, QRat::from_laurent(lp(0, &[1, 1])));
        let r = qrat_normalize(&lp(0, &[1, 0, 0, -1]), &lp(0, &[1, -1])).unwrap();
        assert_eq!(r, QRat::from_laurent(lp(0, &[1, 1, 1])));
    }

    #[test]
    fn zero_numerator_and_zero_denominator() {
        assert_eq!(qrat_normalize(&QLaurent::zero(), &lp(0, &[1, 1])).unwrap(), QRat::zero());
        assert_eq!(qrat_normalize(&lp(0, &[1]), &QLaurent::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_denominator_shape() {
        // q^2 / (-2q - 4q^2)  ->  -(1/2) q / (1 + 2q)
        let r = qrat_normalize(&lp(2, &[1]), &lp(1, &[-2, -4])).unwrap();
        assert_eq!(r.denom(), &lp(0, &[1, 2]));
        assert_eq!(r.numer(), &QLaurent::monomial(rat(-1, 2), 1));
    }

    #[test]
    fn field_operations() {
        let a = QRat::new(&lp(0, &[1]), &lp(0, &[1, 1])).unwrap();
        let b = QRat::new(&lp(1, &[1]), &lp(0, &[1, 1])).unwrap();
        assert_eq!(&a + &b, QRat::one());
        let c = QRat::new(&lp(0, &[1, 1]), &lp(0, &[1, 0, 1])).unwrap();
        assert!((&(&c / &c) - &QRat::one()).is_zero());
        assert_eq!(&(&a * &c) * &QRat::from_laurent(lp(0, &[1, 0, 1])), QRat::one());
    }

    #[test]
    fn expansion_in_q() {
        let r = QRat::new(&lp(0, &[1]), &lp(0, &[1, -1])).unwrap();
        assert_eq!(r.expand(4), lp(0, &[1, 1, 1, 1, 1]));
        let r = QRat::new(&lp(-1, &[2]), &lp(0, &[1, 1])).unwrap();
        assert_eq!(r.expand(2), lp(-1, &[2, -2, 2, -2]));
    }

    #[test]
    fn evaluation() {
        let r = QRat::new(&lp(0, &[1, 1]), &lp(0, &[1, 0, 1])).unwrap();
        assert_eq!(r.eval_at(&int(1)).unwrap(), int(1));
        assert_eq!(r.eval_at(&rat(1, 2)).unwrap(), rat(6, 5));
    }

    #[test]
    fn rendering() {
        let r = QRat::new(&lp(0, &[1, 1]), &lp(0, &[1, 0, 1])).unwrap();
        assert_eq!(r.to_string(), "(1 + q)/(1 + q^2)");
        let r = QRat::new(&lp(1, &[1]), &lp(0, &[1, 1])).unwrap();
        assert_eq!(r.to_string(), "q/(1 + q)");
    }
}
