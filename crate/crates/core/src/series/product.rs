use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact::{BigRat, QRat};

use super::XSeries;

/// Integer coefficients of `prod_k (1 - x^k)^{e_k}` up to `x^order`.
///
/// Each factor is applied in place: multiplying by `1 - x^k` sweeps down,
/// dividing sweeps up, so a unit exponent costs `O(order)`.
pub fn product_expand_int(exponents: &[(u64, i64)], order: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); order + 1];
    c[0] = BigInt::from(1);
    for &(k, e) in exponents {
        assert!(k > 0, "factor 1 - x^0 vanishes");
        let k = k as usize;
        if k > order {
            continue;
        }
        for _ in 0..e.unsigned_abs() {
            if e > 0 {
                for n in (k..=order).rev() {
                    let t = c[n - k].clone();
                    c[n] -= t;
                }
            } else {
                for n in k..=order {
                    let t = c[n - k].clone();
                    c[n] += t;
                }
            }
        }
    }
    c
}

/// `prod_k (1 - x^k)^{e_k}` as a series of the given order.
pub fn product_expand(exponents: &[(u64, i64)], order: usize) -> XSeries {
    XSeries::from_coeffs(
        product_expand_int(exponents, order)
            .into_iter()
            .map(|n| QRat::from_rat(BigRat::from_integer(n)))
            .collect(),
    )
}
