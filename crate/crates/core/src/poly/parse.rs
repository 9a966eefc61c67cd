//! Text grammar for polynomials: variables `x1..xN`, integer literals,
//! `+ - * ^`, parentheses, and `/` by an integer constant.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' unary) | ('/' integer))*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'x' digits | '(' expr ')'
//! ```

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::polynomial::Polynomial;
use crate::error::{Error, ParseError, Result};
use crate::field::Field;

#[derive(Debug, Clone)]
enum Expr {
    Int(BigInt),
    Var(usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, BigInt, usize),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    fn max_var(&self) -> Option<usize> {
        match self {
            Expr::Int(_) => None,
            Expr::Var(i) => Some(*i),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => a.max_var().max(b.max_var()),
            Expr::Div(a, _, _) | Expr::Neg(a) | Expr::Pow(a, _) => a.max_var(),
        }
    }

    fn eval<F: Field>(&self, field: &F, nvars: usize) -> Result<Polynomial<F>> {
        Ok(match self {
            Expr::Int(n) => {
                let c = field
                    .from_ratio(n, &BigInt::one())
                    .expect("unit denominator");
                Polynomial::constant(field.clone(), nvars, c)
            }
            Expr::Var(i) => Polynomial::var(field.clone(), nvars, *i),
            Expr::Add(a, b) => &a.eval(field, nvars)? + &b.eval(field, nvars)?,
            Expr::Sub(a, b) => &a.eval(field, nvars)? - &b.eval(field, nvars)?,
            Expr::Mul(a, b) => &a.eval(field, nvars)? * &b.eval(field, nvars)?,
            Expr::Neg(a) => -&a.eval(field, nvars)?,
            Expr::Pow(a, e) => a.eval(field, nvars)?.pow(*e),
            Expr::Div(a, d, pos) => {
                let inv = field.from_ratio(&BigInt::one(), d).ok_or_else(|| ParseError {
                    position: *pos,
                    message: format!("division by {d}, which is zero in the coefficient field"),
                })?;
                a.eval(field, nvars)?.scale(&inv)
            }
        })
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> core::result::Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> core::result::Result<&'a str, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn integer(&mut self) -> core::result::Result<BigInt, ParseError> {
        self.skip_ws();
        let s = self.digits()?;
        Ok(s.parse::<BigInt>().expect("digits parse"))
    }

    fn expr(&mut self) -> core::result::Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> core::result::Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.integer()?;
                    lhs = Expr::Div(Box::new(lhs), d, at);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> core::result::Result<Expr, ParseError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> core::result::Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.digits()?;
            let e: u32 = match e.parse() {
                Ok(e) => e,
                Err(_) => return self.err("exponent too large"),
            };
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> core::result::Result<Expr, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Expr::Int(self.integer()?)),
            Some(b'x') => {
                self.pos += 1;
                let s = self.digits()?;
                match s.parse::<usize>() {
                    Ok(i) if i >= 1 => Ok(Expr::Var(i - 1)),
                    _ => self.err("variables are numbered from x1"),
                }
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

fn parse_expr(text: &str) -> core::result::Result<Expr, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Parse one polynomial. The ring has `nvars` variables, or as many as the
/// highest index used when `nvars` is `None`.
pub fn parse_polynomial<F: Field>(field: F, text: &str, nvars: Option<usize>) -> Result<Polynomial<F>> {
    let mut v = parse_polynomials(field, &[text], nvars)?;
    Ok(v.pop().expect("one input"))
}

/// Parse several polynomials into one common ring: at least `min_vars`
/// variables and at least the highest index used anywhere.
pub fn parse_polynomials<F: Field, S: AsRef<str>>(
    field: F,
    texts: &[S],
    min_vars: Option<usize>,
) -> Result<Vec<Polynomial<F>>> {
    let exprs = texts
        .iter()
        .map(|t| parse_expr(t.as_ref()))
        .collect::<core::result::Result<Vec<_>, _>>()?;
    let used = exprs
        .iter()
        .filter_map(Expr::max_var)
        .max()
        .map_or(0, |i| i + 1);
    let nvars = match min_vars {
        Some(n) if n < used => {
            return Err(Error::VariableOutOfRange {
                index: used - 1,
                nvars: n,
            })
        }
        Some(n) => n,
        None => used,
    };
    exprs.iter().map(|e| e.eval(&field, nvars)).collect()
}
