//! Truncated power series in `x` with `QRat` coefficients, the q-calculus
//! operators acting on them, Euler-type products and Jackson sums.
//!
//! A series of order `T` knows `c_0..c_T`; every operation keeps the
//! result exact modulo `x^{T+1}` and reading past `T` is an error.

mod adaptive;
mod product;
mod qseries;
mod xseries;

pub use adaptive::{adaptive_qprod, adaptive_qsum, adaptive_xprod, adaptive_xsum, default_cap};
pub use product::{product_expand, product_expand_int};
pub use qseries::{jackson_sum_01, qseries_recip};
pub use xseries::{
    classical_derivative, div_one_minus, div_one_minus_dot, from_x_polynomial, is_q_free, jackson_integral, one_minus_dot,
    q_derivative, series_log, series_mul, series_qlog, series_recip, shifted_pow_x, subst_qx,
    XSeries,
};
