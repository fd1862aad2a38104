//! Truncated infinite sums and products driven by valuations.
//!
//! Contract: nonzero terms must have strictly increasing valuation. A term
//! whose valuation exceeds the target order ends the sum, since every later
//! term lies beyond it as well. Zero terms are skipped. Evaluating more than
//! `cap` terms without termination is reported as non-convergence.

use crate::error::{Error, Result};
use crate::exact::{QLaurent, QRat};

use super::xseries::LazySum;
use super::XSeries;

/// Default term budget for a target order `t`.
pub fn default_cap(t: usize) -> usize {
    10 * t.max(1) + 10
}

struct Tracker {
    last: Option<i64>,
    what: &'static str,
}

impl Tracker {
    fn admit(&mut self, k: usize, v: i64) -> Result<()> {
        if let Some(prev) = self.last {
            if v <= prev {
                return Err(Error::NonConvergent(format!(
                    "{} term {k} has valuation {v}, not above the previous {prev}",
                    self.what
                )));
            }
        }
        self.last = Some(v);
        Ok(())
    }
}

fn cap_error(what: &str, cap: usize) -> Error {
    Error::NonConvergent(format!("{what} did not terminate within {cap} terms"))
}

/// `sum_{k>=0} term(k)` as an x-series of the given order.
pub fn adaptive_xsum(
    order: usize,
    cap: usize,
    mut term: impl FnMut(usize) -> Result<XSeries>,
) -> Result<XSeries> {
    let mut acc = LazySum::new(order);
    let mut tracker = Tracker { last: None, what: "sum" };
    for k in 0..cap {
        let t = term(k)?;
        let Some(v) = t.valuation() else { continue };
        if v > order {
            return Ok(acc.finish());
        }
        tracker.admit(k, v as i64)?;
        if t.order() < order {
            return Err(Error::BeyondOrder { index: order, order: t.order() });
        }
        acc.add(&t);
        if v == order {
            return Ok(acc.finish());
        }
    }
    Err(cap_error("sum", cap))
}

/// `prod_{k>=0} factor(k)` where each factor is `1 + O(x)`; the valuation
/// of `factor(k) - 1` plays the role of the term valuation.
pub fn adaptive_xprod(
    order: usize,
    cap: usize,
    mut factor: impl FnMut(usize) -> Result<XSeries>,
) -> Result<XSeries> {
    let mut acc = XSeries::one(order);
    let mut tracker = Tracker { last: None, what: "product" };
    for k in 0..cap {
        let f = factor(k)?;
        if !f.constant_term().is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        let Some(v) = (&f - &XSeries::one(order)).valuation() else {
            continue;
        };
        if v > order {
            return Ok(acc);
        }
        tracker.admit(k, v as i64)?;
        acc = &acc * &f;
        if v == order {
            return Ok(acc);
        }
    }
    Err(cap_error("product", cap))
}

/// `sum_{k>=0} term(k)` expanded in `q` modulo `q^{q_order+1}`.
pub fn adaptive_qsum(
    q_order: i64,
    cap: usize,
    mut term: impl FnMut(usize) -> Result<QRat>,
) -> Result<QLaurent> {
    let mut acc = QLaurent::zero();
    let mut tracker = Tracker { last: None, what: "sum" };
    for k in 0..cap {
        let t = term(k)?;
        let Some(v) = t.valuation() else { continue };
        if v > q_order {
            return Ok(acc);
        }
        tracker.admit(k, v)?;
        acc = &acc + &t.expand(q_order);
        if v == q_order {
            return Ok(acc);
        }
    }
    Err(cap_error("sum", cap))
}

/// `prod_{k>=0} factor(k)` with factors `1 + O(q)`, modulo `q^{q_order+1}`.
pub fn adaptive_qprod(
    q_order: i64,
    cap: usize,
    mut factor: impl FnMut(usize) -> Result<QRat>,
) -> Result<QLaurent> {
    let mut acc = QLaurent::one();
    let mut tracker = Tracker { last: None, what: "product" };
    for k in 0..cap {
        let f = factor(k)?;
        let rest = &f - &QRat::one();
        let Some(v) = rest.valuation() else { continue };
        if v <= 0 {
            return Err(Error::ConstantTermNotOne);
        }
        if v > q_order {
            return Ok(acc);
        }
        tracker.admit(k, v)?;
        acc = (&acc * &f.expand(q_order)).truncate(q_order);
        if v == q_order {
            return Ok(acc);
        }
    }
    Err(cap_error("product", cap))
}
