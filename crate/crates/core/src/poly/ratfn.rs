use std::fmt;

use super::{MPoly, Var};
use crate::error::{Error, Result};
use crate::field::Coeff;

/// Quotient of two polynomials in lowest terms, with a monic denominator.
#[derive(Clone, Debug)]
pub struct RatFn {
    num: MPoly,
    den: MPoly,
}

impl RatFn {
    /// Builds and reduces `num / den`.
    pub fn new(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFn { den: MPoly::one(den.field()), num });
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.try_div(&g).expect("gcd divides numerator"),
                den.try_div(&g).expect("gcd divides denominator"),
            )
        };
        let lc = den.leading_coeff();
        if !lc.is_one() {
            let inv = lc.inv(den.field()).expect("nonzero");
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RatFn { num, den })
    }

    pub fn from_poly(p: MPoly) -> Self {
        let den = MPoly::one(p.field());
        RatFn { num: p, den }
    }

    pub fn numerator(&self) -> &MPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn scale(&self, c: &Coeff) -> RatFn {
        if c.is_zero() {
            return RatFn::from_poly(MPoly::zero(self.num.field()));
        }
        RatFn { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Simultaneous substitution into numerator and denominator.
    pub fn substitute(&self, bindings: &[(Var, MPoly)]) -> Result<RatFn> {
        RatFn::new(self.num.substitute(bindings), self.den.substitute(bindings))
    }

    pub fn rename(&self, pairs: &[(Var, Var)]) -> RatFn {
        RatFn { num: self.num.rename(pairs), den: self.den.rename(pairs) }
    }

    /// `n1 d2 == n2 d1`; independent of representation.
    pub fn cross_eq(&self, other: &RatFn) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl PartialEq for RatFn {
    fn eq(&self, other: &Self) -> bool {
        self.cross_eq(other)
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
