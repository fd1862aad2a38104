//! A small expression language for q-series terms.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom ('^' expo)?
//! expo   := '-'? atom
//! atom   := integer | 'x' | 'q' | ident | call | '(' expr ')'
//! call   := name '(' args ')'
//! ```
//!
//! `^` binds tighter than unary minus, so `-x^2` is `-(x^2)`. Exponents and
//! bounds must evaluate to integers. `inf` is accepted only as the upper
//! bound of `sum` and `prod`.

mod ast;
mod eval;
mod parser;

pub use ast::{Bound, Expr, Func};
pub use eval::{eval_series, eval_value, Value};
pub use parser::{parse, ParseError};
