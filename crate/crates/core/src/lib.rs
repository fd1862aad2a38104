//! Exact computer algebra for q-series identities, q-binomial sums,
//! partition generating functions and congruences modulo `[m]_q`.

pub mod error;
pub mod exact;

pub use error::{Error, Result};
pub mod qkit;
pub mod series;
pub mod partition;
pub mod verdict;
pub mod qnt;
pub mod catalog;
pub mod dsl;
pub mod cli;
