use std::fmt;

use num_bigint::BigInt;

use super::ast::{Bound, Expr, Func};

/// Syntax error at byte offset `pos`, with the tokens that would have been
/// accepted there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at position {}: expected {}, found {}", self.pos, self.expected.join(" or "), self.found)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "'{n}'"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Int(text[start..i].parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
        } else if "+-*/^(),".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            let ch = text[i..].chars().next().unwrap();
            return Err(ParseError { pos: i, expected: vec!["expression".into()], found: format!("'{ch}'") });
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

const RESERVED: [&str; 5] = ["x", "q", "inf", "sum", "prod"];

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    scope: Vec<String>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().to_string(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, also: &[&str]) -> Result<(), ParseError> {
        if self.eat(c) {
            return Ok(());
        }
        let quoted = format!("'{c}'");
        let mut exp: Vec<&str> = vec![&quoted];
        exp.extend_from_slice(also);
        self.error(&exp)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let expo = if self.eat('-') { Expr::Neg(Box::new(self.atom()?)) } else { self.atom()? };
        Ok(Expr::Pow(Box::new(base), Box::new(expo)))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')', &["operator"])?;
                Ok(e)
            }
            Tok::Ident(name) => self.ident(name),
            _ => self.error(&["expression"]),
        }
    }

    fn ident(&mut self, name: String) -> Result<Expr, ParseError> {
        match name.as_str() {
            "x" => {
                self.bump();
                Ok(Expr::X)
            }
            "q" => {
                self.bump();
                Ok(Expr::Q)
            }
            "sum" | "prod" => {
                self.bump();
                self.bound_form(name == "sum")
            }
            "inf" => self.error(&["expression"]),
            _ => {
                if let Some(f) = Func::from_name(&name) {
                    self.bump();
                    return self.call(f);
                }
                if self.scope.contains(&name) {
                    self.bump();
                    return Ok(Expr::Var(name));
                }
                self.error(&["expression"])
            }
        }
    }

    fn call(&mut self, f: Func) -> Result<Expr, ParseError> {
        self.expect('(', &[])?;
        let (lo, hi) = f.arity();
        let mut args = vec![self.expr()?];
        while args.len() < hi {
            if args.len() < lo {
                self.expect(',', &["operator"])?;
            } else if !self.eat(',') {
                break;
            }
            args.push(self.expr()?);
        }
        self.expect(')', &["operator"])?;
        Ok(Expr::Call(f, args))
    }

    fn bound_form(&mut self, is_sum: bool) -> Result<Expr, ParseError> {
        self.expect('(', &[])?;
        let var = match self.peek().clone() {
            Tok::Ident(v) if !RESERVED.contains(&v.as_str()) && Func::from_name(&v).is_none() => {
                self.bump();
                v
            }
            _ => return self.error(&["variable name"]),
        };
        self.expect(',', &[])?;
        let lo = self.expr()?;
        self.expect(',', &["operator"])?;
        let hi = if *self.peek() == Tok::Ident("inf".into()) {
            self.bump();
            Bound::Inf
        } else {
            Bound::Finite(Box::new(self.expr()?))
        };
        self.expect(',', &["operator"])?;
        self.scope.push(var.clone());
        let body = self.expr();
        self.scope.pop();
        let body = Box::new(body?);
        self.expect(')', &["operator"])?;
        let lo = Box::new(lo);
        Ok(if is_sum { Expr::Sum { var, lo, hi, body } } else { Expr::Prod { var, lo, hi, body } })
    }
}

/// Parses one expression; trailing input is an error.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(text)?, at: 0, scope: Vec::new() };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.error(&["operator", "end of input"]);
    }
    Ok(e)
}
