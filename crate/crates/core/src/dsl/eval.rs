use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::{BigRat, QRat};
use crate::qkit::{poch, q_binomial, q_factorial, q_int, quantum_pow};
use crate::series::{
    adaptive_qprod, adaptive_qsum, adaptive_xprod, adaptive_xsum, default_cap, q_derivative, series_log,
    series_qlog, series_recip, subst_qx, XSeries,
};

use super::ast::{Bound, Expr, Func};

/// Pure-q values stay exact rational functions until an x-series is needed.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(QRat),
    Series(XSeries),
}

impl Value {
    pub fn into_series(self, order: usize) -> XSeries {
        match self {
            Value::Scalar(c) => XSeries::constant(c, order),
            Value::Series(s) => s,
        }
    }
}

struct Ctx {
    order: usize,
    q_order: i64,
    env: Vec<(String, i64)>,
}

/// Evaluates to an x-series of the given order; `q_order` bounds the
/// q-expansion of infinite sums and products in `q` alone, whose values are
/// then exact only modulo `q^{q_order+1}`.
pub fn eval_series(e: &Expr, order: usize, q_order: i64) -> Result<XSeries> {
    Ok(eval_value(e, order, q_order)?.into_series(order))
}

pub fn eval_value(e: &Expr, order: usize, q_order: i64) -> Result<Value> {
    Ctx { order, q_order, env: Vec::new() }.eval(e)
}

fn not_integer(what: &str, v: &Value) -> Error {
    let shown = match v {
        Value::Scalar(c) => c.to_string(),
        Value::Series(s) => s.to_string(),
    };
    Error::InvalidArgument(format!("{what} must be an integer, got {shown}"))
}

impl Ctx {
    fn series(&self, v: Value) -> XSeries {
        v.into_series(self.order)
    }

    fn int(&mut self, e: &Expr, what: &str) -> Result<i64> {
        let v = self.eval(e)?;
        let c = match &v {
            Value::Scalar(c) => c.constant_value(),
            Value::Series(_) => None,
        };
        c.filter(BigRat::is_integer)
            .and_then(|c| c.to_integer().to_i64())
            .ok_or_else(|| not_integer(what, &v))
    }

    fn nonneg(&mut self, e: &Expr, what: &str) -> Result<u32> {
        let n = self.int(e, what)?;
        u32::try_from(n).map_err(|_| Error::InvalidArgument(format!("{what} must be nonnegative, got {n}")))
    }

    fn eval(&mut self, e: &Expr) -> Result<Value> {
        Ok(match e {
            Expr::Int(n) => Value::Scalar(QRat::from_rat(BigRat::from_integer(n.clone()))),
            Expr::Q => Value::Scalar(QRat::q_pow(1)),
            Expr::X => Value::Series(XSeries::x(self.order)),
            Expr::Var(v) => {
                let n = self.env.iter().rev().find(|(name, _)| name == v).map(|(_, n)| *n);
                let n = n.ok_or_else(|| Error::InvalidArgument(format!("unbound variable {v}")))?;
                Value::Scalar(QRat::from_int(n))
            }
            Expr::Neg(a) => match self.eval(a)? {
                Value::Scalar(c) => Value::Scalar(-&c),
                Value::Series(s) => Value::Series(-&s),
            },
            Expr::Add(a, b) => self.binary(a, b, |x, y| x + y, |x, y| x + y)?,
            Expr::Sub(a, b) => self.binary(a, b, |x, y| x - y, |x, y| x - y)?,
            Expr::Mul(a, b) => self.binary(a, b, |x, y| x * y, |x, y| x * y)?,
            Expr::Div(a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                match (x, y) {
                    (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x.try_div(&y)?),
                    (Value::Series(x), Value::Scalar(y)) => Value::Series(x.scale(&y.try_recip()?)),
                    (x, y) => Value::Series(&self.series(x) * &series_recip(&self.series(y))?),
                }
            }
            Expr::Pow(a, n) => {
                let n = self.int(n, "exponent")?;
                match self.eval(a)? {
                    Value::Scalar(c) => Value::Scalar(c.pow(n)?),
                    Value::Series(s) if n >= 0 => Value::Series(s.pow(n as u32)),
                    Value::Series(s) => Value::Series(series_recip(&s)?.pow(n.unsigned_abs() as u32)),
                }
            }
            Expr::Sum { var, lo, hi, body } => self.bound(var, lo, hi, body, true)?,
            Expr::Prod { var, lo, hi, body } => self.bound(var, lo, hi, body, false)?,
            Expr::Call(f, args) => self.call(*f, args)?,
        })
    }

    fn binary(
        &mut self,
        a: &Expr,
        b: &Expr,
        scalar: impl Fn(&QRat, &QRat) -> QRat,
        series: impl Fn(&XSeries, &XSeries) -> XSeries,
    ) -> Result<Value> {
        let (x, y) = (self.eval(a)?, self.eval(b)?);
        Ok(match (x, y) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(scalar(&x, &y)),
            (x, y) => Value::Series(series(&self.series(x), &self.series(y))),
        })
    }

    fn with_var<T>(&mut self, var: &str, n: i64, f: impl FnOnce(&mut Self) -> Result<T>) -> Result<T> {
        self.env.push((var.to_string(), n));
        let out = f(self);
        self.env.pop();
        out
    }

    fn bound(&mut self, var: &str, lo: &Expr, hi: &Bound, body: &Expr, is_sum: bool) -> Result<Value> {
        let lo = self.int(lo, "lower bound")?;
        let in_x = body.mentions_x();
        match hi {
            Bound::Finite(h) => {
                let hi = self.int(h, "upper bound")?;
                let mut acc = Value::Scalar(if is_sum { QRat::zero() } else { QRat::one() });
                for n in lo..=hi {
                    let t = self.with_var(var, n, |c| c.eval(body))?;
                    acc = match (acc, t) {
                        (Value::Scalar(a), Value::Scalar(t)) => {
                            Value::Scalar(if is_sum { &a + &t } else { &a * &t })
                        }
                        (a, t) => {
                            let (a, t) = (self.series(a), self.series(t));
                            Value::Series(if is_sum { &a + &t } else { &a * &t })
                        }
                    };
                }
                Ok(acc)
            }
            Bound::Inf if in_x => {
                let order = self.order;
                let cap = default_cap(order);
                let mut term = |k: usize| -> Result<XSeries> {
                    let v = self.with_var(var, lo + k as i64, |c| c.eval(body))?;
                    Ok(v.into_series(order))
                };
                let s = if is_sum { adaptive_xsum(order, cap, &mut term)? } else { adaptive_xprod(order, cap, &mut term)? };
                Ok(Value::Series(s))
            }
            Bound::Inf => {
                let q_order = self.q_order;
                let cap = default_cap(q_order.max(0) as usize);
                let mut term = |k: usize| -> Result<QRat> {
                    match self.with_var(var, lo + k as i64, |c| c.eval(body))? {
                        Value::Scalar(c) => Ok(c),
                        Value::Series(_) => Err(Error::InvalidArgument("term depends on x".into())),
                    }
                };
                let s = if is_sum { adaptive_qsum(q_order, cap, &mut term)? } else { adaptive_qprod(q_order, cap, &mut term)? };
                Ok(Value::Scalar(QRat::from_laurent(s)))
            }
        }
    }

    fn call(&mut self, f: Func, args: &[Expr]) -> Result<Value> {
        let scalar = |l| Ok(Value::Scalar(QRat::from_laurent(l)));
        match f {
            Func::QNum => {
                let n = self.int(&args[0], "qnum argument")?;
                let r = if args.len() > 1 { self.int(&args[1], "qnum base")? } else { 1 };
                scalar(q_int(n, r)?)
            }
            Func::QFact => scalar(q_factorial(self.nonneg(&args[0], "qfact argument")?)),
            Func::QBinom => {
                let n = self.int(&args[0], "qbinom top")?;
                let k = self.int(&args[1], "qbinom bottom")?;
                if k < 0 {
                    return Ok(Value::Scalar(QRat::zero()));
                }
                Ok(Value::Scalar(q_binomial(n, k as u32)))
            }
            Func::QPow => {
                let a = self.nonneg(&args[0], "qpow base")?;
                let n = self.nonneg(&args[1], "qpow exponent")?;
                scalar(quantum_pow(a as u64, n))
            }
            Func::QPoch => {
                let n = self.int(&args[2], "qpoch length")?;
                let (a, b) = (self.eval(&args[0])?, self.eval(&args[1])?);
                match (a, b) {
                    (Value::Scalar(a), Value::Scalar(b)) => Ok(Value::Scalar(poch(&a, &b, n)?)),
                    (a, b) if n >= 0 => {
                        let (a, b) = (self.series(a), self.series(b));
                        let one = XSeries::one(self.order);
                        let mut acc = one.clone();
                        let mut bs = one.clone();
                        for _ in 0..n {
                            acc = &acc * &(&one - &(&a * &bs));
                            bs = &bs * &b;
                        }
                        Ok(Value::Series(acc))
                    }
                    _ => Err(Error::InvalidArgument("qpoch with x and negative length".into())),
                }
            }
            Func::QShift => {
                let k = self.nonneg(&args[2], "qshift length")?;
                let (u, v) = (self.eval(&args[0])?, self.eval(&args[1])?);
                let mut acc = Value::Scalar(QRat::one());
                for i in 0..k as i64 {
                    let shifted = match &v {
                        Value::Scalar(c) => Value::Scalar(c.shift(i)),
                        Value::Series(s) => Value::Series(s.map_coeffs(|_, c| c.shift(i))),
                    };
                    let factor = match (&u, shifted) {
                        (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a + &b),
                        (a, b) => Value::Series(&self.series(a.clone()) + &self.series(b)),
                    };
                    acc = match (acc, factor) {
                        (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(&a * &b),
                        (a, b) => Value::Series(&self.series(a) * &self.series(b)),
                    };
                }
                Ok(acc)
            }
            Func::Log => {
                let s = self.eval(&args[0])?;
                Ok(Value::Series(series_log(&self.series(s))?))
            }
            Func::QLog => {
                let s = self.eval(&args[0])?;
                let z = &self.series(s) - &XSeries::one(self.order);
                Ok(Value::Series(series_qlog(&z)?))
            }
            Func::QDeriv => {
                let s = self.eval(&args[0])?;
                Ok(Value::Series(q_derivative(&self.series(s))))
            }
            Func::SubQx => {
                let s = self.eval(&args[0])?;
                Ok(Value::Series(subst_qx(&self.series(s), 1)))
            }
        }
    }
}
