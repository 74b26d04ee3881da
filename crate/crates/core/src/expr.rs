//! Text syntax for polynomials in operation composites.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := int | [int '*'] factor ('*' factor)*
//! factor := (op ' ')* var ['^' int]
//! op     := 'Q_' int | ['b'] 'P_' int ['/2']
//! var    := ident ['(' int ')']
//! ```
//!
//! Operations in a factor are listed outermost first. The parenthesized
//! integer is the degree of the variable and defaults to 0.

use std::fmt;

use crate::algebra::{Generator, Polynomial};
use crate::cartan::CartanEngine;
use crate::error::{Error, Result};
use crate::field::Prime;
use crate::sequences::{DlOp, DlSequence};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub seq: DlSequence,
    pub var: String,
    pub degree: i64,
    pub exponent: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub negative: bool,
    pub coeff: u64,
    /// Empty for a constant term.
    pub factors: Vec<Factor>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub terms: Vec<Term>,
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.seq.is_empty() {
            write!(f, "{} ", self.seq)?;
        }
        f.write_str(&self.var)?;
        if self.degree != 0 {
            write!(f, "({})", self.degree)?;
        }
        if self.exponent != 1 {
            write!(f, "^{}", self.exponent)?;
        }
        Ok(())
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "{}", self.coeff);
        }
        if self.coeff != 1 {
            write!(f, "{}*", self.coeff)?;
        }
        for (n, factor) in self.factors.iter().enumerate() {
            if n > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, term) in self.terms.iter().enumerate() {
            match (n, term.negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write!(f, "{term}")?;
        }
        Ok(())
    }
}

impl Expr {
    /// Evaluates in the free algebra: each factor is its sequence applied to
    /// the variable, so composites that vanish for parity reasons give zero.
    pub fn evaluate(&self, p: Prime) -> Result<Polynomial> {
        let mut engine = CartanEngine::new(p, None);
        let mut out = Polynomial::zero(p);
        for term in &self.terms {
            let c = p.reduce(term.coeff as i64 * if term.negative { -1 } else { 1 });
            let mut value = Polynomial::constant(p, c as i64);
            for factor in &term.factors {
                let var = Polynomial::from_generator(p, Generator::variable(&factor.var, factor.degree));
                let applied = engine.apply_seq(&factor.seq, &var)?.value;
                value = &value * &applied.pow(factor.exponent);
            }
            out += &value;
        }
        Ok(out)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    p: Prime,
}

impl<'a> Parser<'a> {
    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u64> {
        let digits: usize = self.rest().chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return self.error("expected a number");
        }
        let text = &self.rest()[..digits];
        let value = text.parse::<u64>().or_else(|_| self.error("number too large"))?;
        self.pos += digits;
        Ok(value)
    }

    fn small(&mut self) -> Result<u32> {
        let start = self.pos;
        let n = self.number()?;
        u32::try_from(n).or_else(|_| {
            self.pos = start;
            self.error("number too large")
        })
    }

    fn expr(&mut self) -> Result<Expr> {
        self.skip_ws();
        if self.rest().is_empty() {
            return self.error("empty expression");
        }
        let mut terms = Vec::new();
        let mut negative = self.eat('-');
        loop {
            self.skip_ws();
            let mut term = self.term()?;
            term.negative = negative;
            terms.push(term);
            self.skip_ws();
            if self.eat('+') {
                negative = false;
            } else if self.eat('-') {
                negative = true;
            } else if self.rest().is_empty() {
                return Ok(Expr { terms });
            } else {
                return self.error("expected `+`, `-`, `*` or end of input");
            }
        }
    }

    fn term(&mut self) -> Result<Term> {
        let mut coeff = 1;
        let mut factors = Vec::new();
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            coeff = self.number()?;
            self.skip_ws();
            if !self.eat('*') {
                return Ok(Term {
                    negative: false,
                    coeff,
                    factors,
                });
            }
            self.skip_ws();
        }
        loop {
            factors.push(self.factor()?);
            self.skip_ws();
            if !self.eat('*') {
                break;
            }
            self.skip_ws();
        }
        Ok(Term {
            negative: false,
            coeff,
            factors,
        })
    }

    /// An operation token, if one starts here.
    fn op(&mut self) -> Result<Option<DlOp>> {
        let rest = self.rest();
        let digit_after = |prefix: &str| {
            rest.strip_prefix(prefix)
                .is_some_and(|r| r.starts_with(|c: char| c.is_ascii_digit()))
        };
        let start = self.pos;
        let op = if digit_after("Q_") {
            self.pos += 2;
            DlOp::q(self.small()?)
        } else if digit_after("P_") || digit_after("bP_") {
            let bockstein = self.eat('b');
            self.pos += 2;
            let n = self.small()?;
            let twice_index = if self.rest().starts_with("/2") {
                self.pos += 2;
                if n % 2 == 0 {
                    self.pos = start;
                    return self.error("a half-integer index needs an odd numerator");
                }
                n
            } else {
                n.checked_mul(2).map_or_else(|| self.error("number too large"), Ok)?
            };
            DlOp::P {
                bockstein,
                twice_index,
            }
        } else {
            return Ok(None);
        };
        if op.twice_index() == 0 {
            self.pos = start;
            return self.error("index-zero operations are written as powers");
        }
        op.check_prime(self.p)?;
        Ok(Some(op))
    }

    fn factor(&mut self) -> Result<Factor> {
        let mut ops = Vec::new();
        while let Some(op) = self.op()? {
            ops.push(op);
            if !self.peek().is_some_and(char::is_whitespace) {
                return self.error("expected whitespace after an operation");
            }
            self.skip_ws();
        }
        let len = self
            .rest()
            .char_indices()
            .take_while(|&(i, c)| {
                if i == 0 {
                    c.is_ascii_alphabetic()
                } else {
                    c.is_ascii_alphanumeric() || c == '_'
                }
            })
            .count();
        if len == 0 {
            return self.error("expected a variable");
        }
        let var = self.rest()[..len].to_string();
        self.pos += len;
        let mut degree = 0i64;
        if self.eat('(') {
            let negative = self.eat('-');
            let start = self.pos;
            let n = self.number()?;
            degree = i64::try_from(n).or_else(|_| {
                self.pos = start;
                self.error("number too large")
            })?;
            if negative {
                degree = -degree;
            }
            if !self.eat(')') {
                return self.error("expected `)`");
            }
        }
        let exponent = if self.eat('^') { self.small()? } else { 1 };
        Ok(Factor {
            seq: DlSequence::new(ops),
            var,
            degree,
            exponent,
        })
    }
}

pub fn parse_expr(s: &str, p: Prime) -> Result<Expr> {
    Parser { src: s, pos: 0, p }.expr()
}

/// Parses a single class `ops var`, with no exponent or coefficient.
pub fn parse_generator(s: &str, p: Prime) -> Result<Generator> {
    let expr = parse_expr(s, p)?;
    match expr.terms.as_slice() {
        [Term {
            negative: false,
            coeff: 1,
            factors,
        }] if factors.len() == 1 && factors[0].exponent == 1 => {
            let f = &factors[0];
            Generator::new(p, &f.var, f.degree, f.seq.clone())
        }
        _ => Err(Error::Syntax {
            pos: 0,
            msg: format!("expected a single class like `P_1 x`, got `{s}`"),
        }),
    }
}

/// Parses a bare sequence of operations such as `bP_1/2 bP_1`.
pub fn parse_sequence(s: &str, p: Prime) -> Result<DlSequence> {
    let mut parser = Parser { src: s, pos: 0, p };
    let mut ops = Vec::new();
    loop {
        parser.skip_ws();
        if parser.rest().is_empty() {
            return Ok(DlSequence::new(ops));
        }
        match parser.op()? {
            Some(op) => ops.push(op),
            None => return parser.error("expected an operation"),
        }
        if !parser.rest().is_empty() && !parser.peek().is_some_and(char::is_whitespace) {
            return parser.error("expected whitespace after an operation");
        }
    }
}
