//! Exact scalar, Laurent-polynomial and rational-function arithmetic.

pub mod intpoly;
mod laurent;
mod qrat;
pub mod rational;

pub use laurent::{poly_exact_div, QLaurent};
pub use qrat::{qrat_normalize, QRat};
pub use rational::BigRat;

