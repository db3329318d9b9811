//! Parser for polynomial expressions over the rationals.
//!
//! Grammar: variable names `[a-zA-Z][a-zA-Z0-9]*`, integer or `a/b` rational
//! literals, `+ - * ^` and parentheses. Multiplication is always explicit
//! and `^` takes a natural literal.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::coeff::Rational;
use super::polynomial::Polynomial;
use super::ring::Ring;

/// A syntax or name error, with a 1-based character column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        column,
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Var(String),
    Literal(Rational),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let col = i + 1;
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                tokens.push((col, Token::Plus));
                i += 1;
            }
            '-' => {
                tokens.push((col, Token::Minus));
                i += 1;
            }
            '*' => {
                tokens.push((col, Token::Star));
                i += 1;
            }
            '^' => {
                tokens.push((col, Token::Caret));
                i += 1;
            }
            '(' => {
                tokens.push((col, Token::LParen));
                i += 1;
            }
            ')' => {
                tokens.push((col, Token::RParen));
                i += 1;
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let numer: BigInt = chars[start..i].iter().collect::<String>().parse().unwrap();
                let mut denom = BigInt::from(1);
                if i < chars.len() && chars[i] == '/' {
                    i += 1;
                    let dstart = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    if dstart == i {
                        return err(i + 1, "expected digits after `/`");
                    }
                    denom = chars[dstart..i].iter().collect::<String>().parse().unwrap();
                    if denom.is_zero() {
                        return err(dstart + 1, "zero denominator");
                    }
                }
                tokens.push((col, Token::Literal(Rational::new(numer, denom))));
            }
            _ if c.is_ascii_alphabetic() => {
                let start = i;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                tokens.push((col, Token::Var(chars[start..i].iter().collect())));
            }
            _ => return err(col, format!("unexpected character `{}`", c)),
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    ring: &'a Arc<Ring>,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end_column: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(c, _)| *c)
            .unwrap_or(self.end_column)
    }

    fn advance(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expression(&mut self) -> Result<Polynomial<Rational>, ParseError> {
        let mut acc = match self.peek() {
            Some(Token::Minus) => {
                self.advance();
                self.term()?.neg()
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.advance();
                    let rhs = self.term()?;
                    acc = &acc + &rhs;
                }
                Some(Token::Minus) => {
                    self.advance();
                    let rhs = self.term()?;
                    acc = &acc - &rhs;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<Rational>, ParseError> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.advance();
            let rhs = self.factor()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<Rational>, ParseError> {
        if matches!(self.peek(), Some(Token::Minus)) {
            self.advance();
            return Ok(self.factor()?.neg());
        }
        let base = self.primary()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.advance();
            let col = self.column();
            match self.advance() {
                Some(Token::Literal(r)) if r.is_integer() => {
                    let exp: u32 = match r.to_integer().try_into() {
                        Ok(e) => e,
                        Err(_) => return err(col, "exponent out of range"),
                    };
                    return Ok(base.pow(exp));
                }
                _ => return err(col, "expected a natural number after `^`"),
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Polynomial<Rational>, ParseError> {
        let col = self.column();
        match self.advance() {
            Some(Token::Var(name)) => match Polynomial::var_named(self.ring, &name) {
                Ok(p) => Ok(p),
                Err(_) => err(col, format!("undeclared variable `{}`", name)),
            },
            Some(Token::Literal(r)) => Ok(Polynomial::constant(self.ring, r)),
            Some(Token::LParen) => {
                let inner = self.expression()?;
                let col = self.column();
                match self.advance() {
                    Some(Token::RParen) => Ok(inner),
                    _ => err(col, "expected `)`"),
                }
            }
            Some(other) => err(col, format!("unexpected token `{:?}`", other)),
            None => err(col, "unexpected end of input"),
        }
    }
}

/// Parse a single polynomial expression in the given ring.
pub fn parse_polynomial(ring: &Arc<Ring>, src: &str) -> Result<Polynomial<Rational>, ParseError> {
    let tokens = lex(src)?;
    let end_column = src.chars().count() + 1;
    let mut parser = Parser {
        ring,
        tokens,
        pos: 0,
        end_column,
    };
    let poly = parser.expression()?;
    if parser.pos < parser.tokens.len() {
        return err(parser.column(), "trailing input after expression");
    }
    Ok(poly)
}
