//! Recursive-descent parser for rational-function expressions.
//!
//! Grammar (EBNF):
//! ```text
//! expr     = term , { ("+" | "-") , term } ;
//! term     = unary , { ("*" | "/") , unary } ;
//! unary    = { "+" | "-" } , power ;
//! power    = atom , [ "^" , exponent ] ;
//! atom     = integer | variable | "(" , expr , ")" ;
//! exponent = [ "-" ] , integer | "(" , [ "-" ] , integer , ")" ;
//! integer  = digit , { digit } ;
//! ```
//! Whitespace is insignificant. Variables must come from the declared list;
//! `1/x` and `x^-1` both produce negative exponents after normalization.

use num_bigint::BigInt;
use thiserror::Error;

use crate::{LaurentPoly, Rat, RationalCombo};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { pos: usize, name: String },
    #[error("division by identically-zero polynomial at position {pos}")]
    DivisionByZero { pos: usize },
}

/// Parses `text` into a normalized rational function over `variables`.
pub fn parse_expr(text: &str, variables: &[&str]) -> Result<RationalCombo, ParseError> {
    let mut p = Parser {
        chars: text.char_indices().collect(),
        pos: 0,
        vars: variables,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    vars: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn byte_pos(&self) -> usize {
        self.chars.get(self.pos).map_or_else(
            || self.chars.last().map_or(0, |(i, c)| i + c.len_utf8()),
            |(i, _)| *i,
        )
    }

    fn err(&self, msg: &str) -> ParseError {
        ParseError::Syntax { pos: self.byte_pos(), msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.get(self.pos), Some((_, c)) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn eat(&mut self, want: char) -> bool {
        if self.peek() == Some(want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RationalCombo, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some('-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalCombo, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some('/') => {
                    self.pos += 1;
                    let at = self.byte_pos();
                    let rhs = self.unary()?;
                    acc = acc
                        .div(&rhs)
                        .map_err(|_| ParseError::DivisionByZero { pos: at })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalCombo, ParseError> {
        let mut negate = false;
        loop {
            match self.peek() {
                Some('-') => {
                    self.pos += 1;
                    negate = !negate;
                }
                Some('+') => {
                    self.pos += 1;
                }
                _ => break,
            }
        }
        let v = self.power()?;
        Ok(if negate { v.neg() } else { v })
    }

    fn power(&mut self) -> Result<RationalCombo, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.byte_pos();
        let exp = self.exponent()?;
        base.powi(exp)
            .map_err(|_| ParseError::DivisionByZero { pos: at })
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let parens = self.eat('(');
        let neg = self.eat('-');
        let n = self.integer()?;
        if parens && !self.eat(')') {
            return Err(self.err("expected `)` after exponent"));
        }
        let k: i64 = n
            .try_into()
            .map_err(|_| self.err("exponent does not fit in a machine integer"))?;
        Ok(if neg { -k } else { k })
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.chars.get(self.pos), Some((_, c)) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().map(|(_, c)| c).collect();
        Ok(digits.parse().expect("digits form a valid integer"))
    }

    fn atom(&mut self) -> Result<RationalCombo, ParseError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RationalCombo::from_poly(LaurentPoly::constant(
                    self.vars,
                    Rat::from_integer(n),
                )))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let at = self.byte_pos();
                let start = self.pos;
                while matches!(self.chars.get(self.pos), Some((_, c))
                    if c.is_alphanumeric() || *c == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().map(|(_, c)| c).collect();
                if !self.vars.contains(&name.as_str()) {
                    return Err(ParseError::UnknownVariable { pos: at, name });
                }
                Ok(RationalCombo::from_poly(LaurentPoly::var(self.vars, &name)))
            }
            Some(_) => Err(self.err("expected a number, variable, or `(`")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}
