use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Arbitrary-precision rational in lowest terms with a positive denominator.
pub type BigRat = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a BigRat>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Greatest common divisor of the numerators (nonnegative).
pub fn numerator_gcd<'a>(values: impl IntoIterator<Item = &'a BigRat>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v.numer()))
}

pub fn pow(base: &BigRat, exp: i32) -> BigRat {
    num_traits::Pow::pow(base, exp)
}
