use std::fmt;

use num_bigint::BigInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    QNum,
    QFact,
    QBinom,
    QPoch,
    QShift,
    QPow,
    Log,
    QLog,
    QDeriv,
    SubQx,
}

impl Func {
    pub const ALL: [Func; 10] = [
        Func::QNum,
        Func::QFact,
        Func::QBinom,
        Func::QPoch,
        Func::QShift,
        Func::QPow,
        Func::Log,
        Func::QLog,
        Func::QDeriv,
        Func::SubQx,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::QNum => "qnum",
            Func::QFact => "qfact",
            Func::QBinom => "qbinom",
            Func::QPoch => "qpoch",
            Func::QShift => "qshift",
            Func::QPow => "qpow",
            Func::Log => "log",
            Func::QLog => "qlog",
            Func::QDeriv => "qderiv",
            Func::SubQx => "subqx",
        }
    }

    pub fn from_name(s: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == s)
    }

    /// Accepted argument counts, inclusive.
    pub fn arity(self) -> (usize, usize) {
        match self {
            Func::QNum => (1, 2),
            Func::QBinom | Func::QPow => (2, 2),
            Func::QPoch | Func::QShift => (3, 3),
            _ => (1, 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    Finite(Box<Expr>),
    Inf,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    X,
    Q,
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Sum { var: String, lo: Box<Expr>, hi: Bound, body: Box<Expr> },
    Prod { var: String, lo: Box<Expr>, hi: Bound, body: Box<Expr> },
    Call(Func, Vec<Expr>),
}

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }

    /// Whether `x` occurs, i.e. whether the value is a genuine x-series.
    pub fn mentions_x(&self) -> bool {
        match self {
            Expr::X => true,
            Expr::Int(_) | Expr::Q | Expr::Var(_) => false,
            Expr::Neg(a) => a.mentions_x(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) | Expr::Pow(a, b) => {
                a.mentions_x() || b.mentions_x()
            }
            Expr::Sum { lo, hi, body, .. } | Expr::Prod { lo, hi, body, .. } => {
                lo.mentions_x() || matches!(hi, Bound::Finite(h) if h.mentions_x()) || body.mentions_x()
            }
            Expr::Call(_, args) => args.iter().any(Expr::mentions_x),
        }
    }
}

fn wrap(f: &mut fmt::Formatter<'_>, e: &Expr, paren: bool) -> fmt::Result {
    if paren {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

fn binary(f: &mut fmt::Formatter<'_>, a: &Expr, op: &str, b: &Expr, prec: u8) -> fmt::Result {
    wrap(f, a, a.prec() < prec)?;
    write!(f, " {op} ")?;
    wrap(f, b, b.prec() <= prec)
}

fn bound_form(f: &mut fmt::Formatter<'_>, name: &str, var: &str, lo: &Expr, hi: &Bound, body: &Expr) -> fmt::Result {
    write!(f, "{name}({var}, {lo}, ")?;
    match hi {
        Bound::Inf => write!(f, "inf")?,
        Bound::Finite(h) => write!(f, "{h}")?,
    }
    write!(f, ", {body})")
}

/// Renders text that parses back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::X => write!(f, "x"),
            Expr::Q => write!(f, "q"),
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Neg(a) => {
                write!(f, "-")?;
                wrap(f, a, a.prec() < 3)
            }
            Expr::Add(a, b) => binary(f, a, "+", b, 1),
            Expr::Sub(a, b) => binary(f, a, "-", b, 1),
            Expr::Mul(a, b) => binary(f, a, "*", b, 2),
            Expr::Div(a, b) => binary(f, a, "/", b, 2),
            Expr::Pow(a, e) => {
                wrap(f, a, a.prec() < 5)?;
                write!(f, "^")?;
                match &**e {
                    Expr::Neg(inner) if inner.prec() == 5 => write!(f, "-{inner}"),
                    other => wrap(f, other, other.prec() < 5),
                }
            }
            Expr::Sum { var, lo, hi, body } => bound_form(f, "sum", var, lo, hi, body),
            Expr::Prod { var, lo, hi, body } => bound_form(f, "prod", var, lo, hi, body),
            Expr::Call(func, args) => {
                write!(f, "{}(", func.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}
