//! Text grammar for exact numbers.
//!
//! ```text
//! expr     := sum | '(' sum ')' '/' uint
//! sum      := signed (('+'|'-') unsigned)*
//! signed   := ['-'] unsigned
//! unsigned := rat | [rat '*'] 'sqrt(' uint ')'
//! rat      := int ['/' uint]
//! ```
//!
//! Whitespace is ignored. `Display` on [`QuadraticNumber`] prints in the same
//! grammar, so `parse(x.to_string()) == x`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use super::{ArithError, QuadraticNumber, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected {expected}, found '{found}'")]
    Unexpected { expected: &'static str, found: char },
    #[error("expected {expected}, found end of input")]
    UnexpectedEnd { expected: &'static str },
    #[error("radicand must be a positive integer")]
    BadRadicand,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0}")]
    Arith(ArithError),
    #[error("unexpected trailing input '{0}'")]
    Trailing(char),
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    idx: usize,
    len: usize,
    _src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        let chars: Vec<_> = src
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Parser {
            chars,
            idx: 0,
            len: src.len(),
            _src: src,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.idx).map(|&(_, c)| c)
    }

    fn position(&self) -> usize {
        self.chars.get(self.idx).map_or(self.len, |&(p, _)| p)
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.position(),
            kind,
        }
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        match self.peek() {
            Some(found) => self.error(ParseErrorKind::Unexpected { expected, found }),
            None => self.error(ParseErrorKind::UnexpectedEnd { expected }),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, expected: &'static str) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn uint(&mut self) -> Result<BigInt, ParseError> {
        let start = self.idx;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.idx += 1;
        }
        if start == self.idx {
            return Err(self.unexpected("digit"));
        }
        let digits: String = self.chars[start..self.idx]
            .iter()
            .map(|&(_, c)| c)
            .collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn divisor(&mut self) -> Result<BigInt, ParseError> {
        let pos = self.position();
        let d = self.uint()?;
        if d.is_zero() {
            return Err(ParseError {
                position: pos,
                kind: ParseErrorKind::DivisionByZero,
            });
        }
        Ok(d)
    }

    fn rat(&mut self) -> Result<Rational, ParseError> {
        let n = self.uint()?;
        let d = if self.eat('/') {
            self.divisor()?
        } else {
            BigInt::from(1)
        };
        Ok(Rational::new(n, d))
    }

    fn sqrt(&mut self) -> Result<QuadraticNumber, ParseError> {
        for (c, expected) in [
            ('s', "'sqrt('"),
            ('q', "'sqrt('"),
            ('r', "'sqrt('"),
            ('t', "'sqrt('"),
            ('(', "'('"),
        ] {
            self.expect(c, expected)?;
        }
        let pos = self.position();
        let radicand = self.uint()?;
        let bad = || ParseError {
            position: pos,
            kind: ParseErrorKind::BadRadicand,
        };
        let radicand = radicand.to_u64().ok_or_else(bad)?;
        if radicand == 0 {
            return Err(bad());
        }
        self.expect(')', "')'")?;
        QuadraticNumber::sqrt(radicand).map_err(|_| bad())
    }

    fn unsigned(&mut self) -> Result<QuadraticNumber, ParseError> {
        if self.peek() == Some('s') {
            return self.sqrt();
        }
        let coefficient = self.rat()?;
        if self.eat('*') {
            Ok(self.sqrt()?.scale(&coefficient))
        } else {
            Ok(QuadraticNumber::from_rational(coefficient))
        }
    }

    fn combine(
        &self,
        acc: QuadraticNumber,
        term: QuadraticNumber,
        negate: bool,
    ) -> Result<QuadraticNumber, ParseError> {
        let result = if negate {
            acc.checked_sub(&term)
        } else {
            acc.checked_add(&term)
        };
        result.map_err(|e| self.error(ParseErrorKind::Arith(e)))
    }

    fn sum(&mut self) -> Result<QuadraticNumber, ParseError> {
        let negate = self.eat('-');
        let first = self.unsigned()?;
        let mut acc = if negate { -first } else { first };
        loop {
            let negate = match self.peek() {
                Some('+') => false,
                Some('-') => true,
                _ => return Ok(acc),
            };
            self.idx += 1;
            let term = self.unsigned()?;
            acc = self.combine(acc, term, negate)?;
        }
    }

    fn expr(&mut self) -> Result<QuadraticNumber, ParseError> {
        let value = if self.eat('(') {
            let inner = self.sum()?;
            self.expect(')', "')'")?;
            self.expect('/', "'/'")?;
            let d = self.divisor()?;
            inner.scale(&Rational::new(BigInt::from(1), d))
        } else {
            self.sum()?
        };
        match self.peek() {
            None => Ok(value),
            Some(c) => Err(self.error(ParseErrorKind::Trailing(c))),
        }
    }
}

/// Parses an exact number written in the expression grammar.
pub fn parse_quadratic(text: &str) -> Result<QuadraticNumber, ParseError> {
    Parser::new(text).expr()
}

impl FromStr for QuadraticNumber {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_quadratic(s)
    }
}
