//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' uint)?
//! base     := var | rational | '(' expr ')' | '-' factor
//! var      := 'x' | 'y' | 'z' | 'p' | 'q' | 't'
//! rational := int ('/' uint)?
//! ```
//!
//! `t` denotes the generator of the quadratic field and is only accepted when
//! a quadratic field is supplied.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::field::{Coeff, Field, FieldScalar, FieldSpec, Rational};
use crate::poly::{MPoly, Var};

const MAX_EXPONENT: u32 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("parse error at offset {offset}: expected {}", expected.join(" or "))]
    Syntax { offset: usize, expected: Vec<&'static str> },
    #[error("unknown variable '{name}' at offset {offset}")]
    UnknownVariable { offset: usize, name: String },
    #[error("'t' at offset {offset} needs a quadratic field (--field)")]
    ThetaWithoutField { offset: usize },
    #[error("exponent at offset {offset} exceeds {MAX_EXPONENT}")]
    ExponentTooLarge { offset: usize },
    #[error("division by zero at offset {offset}")]
    ZeroDenominator { offset: usize },
    #[error("{0}")]
    Invalid(String),
}

impl ParseError {
    /// Moves the reported offset by `by` bytes.
    fn shifted(self, by: usize) -> Self {
        match self {
            ParseError::Syntax { offset, expected } => ParseError::Syntax { offset: offset + by, expected },
            ParseError::UnknownVariable { offset, name } => ParseError::UnknownVariable { offset: offset + by, name },
            ParseError::ThetaWithoutField { offset } => ParseError::ThetaWithoutField { offset: offset + by },
            ParseError::ExponentTooLarge { offset } => ParseError::ExponentTooLarge { offset: offset + by },
            ParseError::ZeroDenominator { offset } => ParseError::ZeroDenominator { offset: offset + by },
            e @ ParseError::Invalid(_) => e,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "ParseError",
            ParseError::UnknownVariable { .. } => "UnknownVariable",
            ParseError::ThetaWithoutField { .. } => "ThetaWithoutField",
            ParseError::ExponentTooLarge { .. } => "ExponentTooLarge",
            ParseError::ZeroDenominator { .. } => "ZeroDenominator",
            ParseError::Invalid(_) => "ParseError",
        }
    }
}

type PResult<T> = std::result::Result<T, ParseError>;

#[derive(Clone, Copy, PartialEq)]
enum TMode {
    /// `t` is the field generator.
    Theta,
    /// `t` is an ordinary polynomial variable.
    Variable,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    field: Field,
    tmode: TMode,
    theta_ok: bool,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn syntax<T>(&self, expected: &[&'static str]) -> PResult<T> {
        Err(ParseError::Syntax { offset: self.pos, expected: expected.to_vec() })
    }

    fn expr(&mut self) -> PResult<MPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> PResult<MPoly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> PResult<MPoly> {
        let base = self.base()?;
        if self.eat(b'^') {
            let start = {
                self.skip_ws();
                self.pos
            };
            let e = self.uint()?;
            if e > BigInt::from(MAX_EXPONENT) {
                return Err(ParseError::ExponentTooLarge { offset: start });
            }
            let e: u32 = e.try_into().expect("bounded");
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> PResult<MPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.syntax(&["')'", "operator"]);
                }
                Ok(e)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.factor()?)
            }
            Some(c) if c.is_ascii_digit() => self.rational(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.variable(),
            _ => self.syntax(&["variable", "number", "'('", "'-'"]),
        }
    }

    fn variable(&mut self) -> PResult<MPoly> {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        let var = (name.len() == 1)
            .then(|| Var::from_name(name.chars().next().unwrap()))
            .flatten()
            .ok_or_else(|| ParseError::UnknownVariable { offset: start, name: name.to_string() })?;
        if var == Var::T && self.tmode == TMode::Theta {
            if !self.theta_ok {
                return Err(ParseError::ThetaWithoutField { offset: start });
            }
            return Ok(MPoly::constant(Coeff::theta(), &self.field));
        }
        Ok(MPoly::var(var, &self.field))
    }

    fn uint(&mut self) -> PResult<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.syntax(&["unsigned integer"]);
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(s.parse().expect("digits"))
    }

    fn rational(&mut self) -> PResult<MPoly> {
        let n = self.uint()?;
        let mut d = BigInt::from(1);
        // Only treat '/' as part of the literal when a digit follows.
        let save = self.pos;
        if self.eat(b'/') {
            self.skip_ws();
            if self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                let off = self.pos;
                d = self.uint()?;
                if d.is_zero() {
                    return Err(ParseError::ZeroDenominator { offset: off });
                }
            } else {
                self.pos = save;
                self.pos += 1;
                return self.syntax(&["unsigned integer"]);
            }
        }
        Ok(MPoly::rational(Rational::new(n, d), &self.field))
    }
}

fn run(src: &str, field: Field, tmode: TMode) -> PResult<MPoly> {
    let theta_ok = field.is_quadratic();
    let mut p = Parser { src: src.as_bytes(), pos: 0, field, tmode, theta_ok };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.syntax(&["operator", "end of input"]);
    }
    Ok(e)
}

/// Parses a polynomial. `t` maps to the field generator and requires a
/// quadratic `field`; with `None` the coefficients are rational.
pub fn parse_poly(src: &str, field: Option<&Field>) -> PResult<MPoly> {
    let field = field.cloned().unwrap_or_else(FieldSpec::rationals);
    run(src, field, TMode::Theta)
}

/// Parses a constant expression into a field element.
pub fn parse_scalar(src: &str, field: Option<&Field>) -> PResult<FieldScalar> {
    let p = parse_poly(src, field)?;
    if !p.is_constant() {
        return Err(ParseError::Invalid(format!("'{}' is not a constant", src.trim())));
    }
    FieldScalar::new(p.constant_term(), p.field().clone()).map_err(|e| ParseError::Invalid(e.to_string()))
}

/// Parses `t^2 = u*t + v` (any linear expression in `t` on the right).
pub fn parse_field_spec(src: &str) -> PResult<Field> {
    let (lhs, rhs) = src
        .split_once('=')
        .ok_or_else(|| ParseError::Invalid("field must have the form t^2=<u>*t+<v>".into()))?;
    let lhs = run(lhs, FieldSpec::rationals(), TMode::Variable)?;
    let tt = MPoly::var(Var::T, &FieldSpec::rationals()).pow(2);
    if lhs != tt {
        return Err(ParseError::Invalid("left-hand side must be t^2".into()));
    }
    let rhs = run(rhs, FieldSpec::rationals(), TMode::Variable)?;
    if rhs.vars().iter().any(|&v| v != Var::T) || rhs.degree_in(Var::T) > 1 {
        return Err(ParseError::Invalid("right-hand side must be linear in t".into()));
    }
    let c = rhs.coefficients_in(Var::T);
    let v = c[0].constant_term().rational_part().clone();
    let u = c.get(1).map(|p| p.constant_term().rational_part().clone()).unwrap_or_default();
    FieldSpec::quadratic(u, v).map_err(|e| ParseError::Invalid(e.to_string()))
}

/// Splits `"A ; B"` (or more components) and parses each part. Error offsets
/// refer to the whole input.
pub fn parse_components(src: &str, field: Option<&Field>) -> PResult<Vec<MPoly>> {
    let mut start = 0;
    src.split(';')
        .map(|part| {
            let at = start;
            start += part.len() + 1;
            parse_poly(part, field).map_err(|e| e.shifted(at))
        })
        .collect()
}
