//! Infix grammar shared by polynomials and differential operators.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Identifiers must be declared variables. When operators are allowed, `d<var>`
//! denotes the partial derivative with respect to a declared variable. A
//! divisor must evaluate to a nonzero constant, so `5/4*x` reads as expected.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::{Poly, Rational};
use crate::weyl::WeylOp;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at offset {}: {}", self.pos, self.msg)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

#[derive(Debug, Clone)]
enum Expr {
    Num(Rational),
    Var(usize),
    Diff(usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { pos, msg: msg.into() })
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = bytes[start..i].iter().collect();
            out.push((start, Tok::Num(s.parse().expect("digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_alphanumeric() || bytes[i] == '_') {
                i += 1;
            }
            out.push((start, Tok::Ident(bytes[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return err(i, format!("unexpected character {c:?}"));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    names: &'a [String],
    allow_diff: bool,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
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
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.peek() == Some(&Tok::Op('/')) {
                let at = self.offset();
                self.pos += 1;
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), at);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            let at = self.offset();
            match self.peek().cloned() {
                Some(Tok::Num(k)) => {
                    self.pos += 1;
                    let k: u32 = k.try_into().or_else(|_| err(at, "exponent too large"))?;
                    Ok(Expr::Pow(Box::new(base), k))
                }
                _ => err(at, "expected a non-negative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(Rational::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(i) = self.names.iter().position(|v| *v == name) {
                    return Ok(Expr::Var(i));
                }
                if self.allow_diff {
                    if let Some(rest) = name.strip_prefix('d') {
                        if let Some(i) = self.names.iter().position(|v| v == rest) {
                            return Ok(Expr::Diff(i));
                        }
                    }
                }
                err(at, format!("undeclared identifier `{name}`"))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return err(self.offset(), "expected `)`");
                }
                Ok(e)
            }
            Some(Tok::Op(c)) => err(at, format!("unexpected `{c}`")),
            None => err(at, "unexpected end of input"),
        }
    }
}

fn parse_ast(src: &str, names: &[String], allow_diff: bool) -> Result<Expr, ParseError> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, pos: 0, names, allow_diff, end: src.len() };
    if p.peek().is_none() {
        return err(0, "empty expression");
    }
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return err(p.offset(), "trailing input");
    }
    Ok(e)
}

/// Targets an AST can be evaluated into.
trait Algebra: Sized + Clone {
    fn num(&self, q: Rational) -> Self;
    fn var(&self, i: usize) -> Self;
    fn diff(&self, i: usize, pos: usize) -> Result<Self, ParseError>;
    fn add(self, rhs: Self) -> Self;
    fn sub(self, rhs: Self) -> Self;
    fn mul(self, rhs: Self) -> Self;
    fn scale(self, q: &Rational) -> Self;
    fn as_constant(&self) -> Option<Rational>;
}

fn eval<A: Algebra>(ctx: &A, e: &Expr) -> Result<A, ParseError> {
    Ok(match e {
        Expr::Num(q) => ctx.num(q.clone()),
        Expr::Var(i) => ctx.var(*i),
        Expr::Diff(i) => ctx.diff(*i, 0)?,
        Expr::Add(a, b) => eval(ctx, a)?.add(eval(ctx, b)?),
        Expr::Sub(a, b) => eval(ctx, a)?.sub(eval(ctx, b)?),
        Expr::Mul(a, b) => eval(ctx, a)?.mul(eval(ctx, b)?),
        Expr::Neg(a) => eval(ctx, a)?.scale(&-Rational::one()),
        Expr::Pow(a, k) => {
            let base = eval(ctx, a)?;
            let mut acc = ctx.num(Rational::one());
            for _ in 0..*k {
                acc = acc.mul(base.clone());
            }
            acc
        }
        Expr::Div(a, b, pos) => {
            let d = eval(ctx, b)?;
            match d.as_constant() {
                Some(q) if !q.is_zero() => eval(ctx, a)?.scale(&q.recip()),
                Some(_) => return err(*pos, "division by zero"),
                None => return err(*pos, "divisor must be a nonzero constant"),
            }
        }
    })
}

impl Algebra for Poly {
    fn num(&self, q: Rational) -> Self {
        Poly::constant(self.nvars(), q)
    }
    fn var(&self, i: usize) -> Self {
        Poly::var(self.nvars(), i)
    }
    fn diff(&self, _i: usize, pos: usize) -> Result<Self, ParseError> {
        err(pos, "derivatives are not allowed in a polynomial")
    }
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
    fn scale(self, q: &Rational) -> Self {
        Poly::scale(&self, q)
    }
    fn as_constant(&self) -> Option<Rational> {
        self.constant_value()
    }
}

impl Algebra for WeylOp {
    fn num(&self, q: Rational) -> Self {
        WeylOp::from_poly(Poly::constant(self.nvars(), q))
    }
    fn var(&self, i: usize) -> Self {
        WeylOp::from_poly(Poly::var(self.nvars(), i))
    }
    fn diff(&self, i: usize, _pos: usize) -> Result<Self, ParseError> {
        Ok(WeylOp::partial(self.nvars(), i))
    }
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
    fn mul(self, rhs: Self) -> Self {
        WeylOp::mul(&self, &rhs)
    }
    fn scale(self, q: &Rational) -> Self {
        WeylOp::scale(&self, q)
    }
    fn as_constant(&self) -> Option<Rational> {
        self.as_poly().and_then(|p| p.constant_value())
    }
}

pub fn parse_poly(src: &str, names: &[String]) -> Result<Poly, ParseError> {
    let ast = parse_ast(src, names, false)?;
    eval(&Poly::zero(names.len()), &ast)
}

/// Parses a differential operator; products are taken in the written order
/// and normal-ordered as they are formed.
pub fn parse_operator(src: &str, names: &[String]) -> Result<WeylOp, ParseError> {
    let ast = parse_ast(src, names, true)?;
    eval(&WeylOp::zero(names.len()), &ast)
}
