//! Exact coefficient fields: `Q` and one quadratic extension `Q(t)` with
//! `t^2 = u t + v`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Shared handle to a coefficient field description.
pub type Field = Arc<FieldSpec>;

/// Description of the ambient coefficient field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    /// `Q(t)` with `t^2 = u t + v`.
    Quadratic { u: Rational, v: Rational },
}

impl FieldSpec {
    pub fn rationals() -> Field {
        static Q: OnceLock<Field> = OnceLock::new();
        Q.get_or_init(|| Arc::new(FieldSpec::Rationals)).clone()
    }

    /// Builds `Q(t)`, rejecting reducible moduli (`u^2 + 4v` a rational square).
    pub fn quadratic(u: Rational, v: Rational) -> Result<Field> {
        let disc = &u * &u + Rational::from_integer(4.into()) * &v;
        if rational_sqrt(&disc).is_some() {
            return Err(Error::ReducibleModulus {
                u: u.to_string(),
                v: v.to_string(),
            });
        }
        Ok(Arc::new(FieldSpec::Quadratic { u, v }))
    }

    /// `Q(t)` with `t^2 = t - 1`, the field of primitive sixth roots of unity.
    pub fn eisenstein() -> Field {
        Self::quadratic(Rational::one(), -Rational::one()).expect("t^2 - t + 1 is irreducible")
    }

    pub fn is_quadratic(&self) -> bool {
        matches!(self, FieldSpec::Quadratic { .. })
    }

    pub fn modulus(&self) -> Option<(&Rational, &Rational)> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Quadratic { u, v } => Some((u, v)),
        }
    }

    /// The smallest field containing both operands' fields. `Q` embeds into every
    /// quadratic extension; two distinct extensions are incompatible.
    pub fn join(a: &Field, b: &Field) -> Result<Field> {
        if Arc::ptr_eq(a, b) {
            return Ok(a.clone());
        }
        match (a.as_ref(), b.as_ref()) {
            (FieldSpec::Rationals, _) => Ok(b.clone()),
            (_, FieldSpec::Rationals) => Ok(a.clone()),
            (x, y) if x == y => Ok(a.clone()),
            _ => Err(Error::FieldMismatch),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Quadratic { u, v } => {
                let rhs = crate::poly::MPoly::from_terms(
                    &FieldSpec::rationals(),
                    [
                        (crate::poly::Monomial::var(crate::poly::Var::T, 1), Coeff::from_rational(u.clone())),
                        (crate::poly::Monomial::one(), Coeff::from_rational(v.clone())),
                    ],
                );
                write!(f, "t^2 = {}", rhs)
            }
        }
    }
}

/// Square root of a rational, if it is rational.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Bare field element `a + b t`; the field is supplied by the caller.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Coeff {
    pub(crate) a: Rational,
    pub(crate) b: Rational,
}

impl Coeff {
    pub fn new(a: Rational, b: Rational) -> Self {
        Coeff { a, b }
    }

    pub fn zero() -> Self {
        Coeff::default()
    }

    pub fn one() -> Self {
        Coeff::from_rational(Rational::one())
    }

    pub fn from_rational(a: Rational) -> Self {
        Coeff { a, b: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Coeff::from_rational(Rational::from_integer(n.into()))
    }

    pub fn theta() -> Self {
        Coeff { a: Rational::zero(), b: Rational::one() }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn theta_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn add(&self, o: &Coeff) -> Coeff {
        Coeff { a: &self.a + &o.a, b: &self.b + &o.b }
    }

    pub fn sub(&self, o: &Coeff) -> Coeff {
        Coeff { a: &self.a - &o.a, b: &self.b - &o.b }
    }

    pub fn neg(&self) -> Coeff {
        Coeff { a: -&self.a, b: -&self.b }
    }

    pub fn scale(&self, r: &Rational) -> Coeff {
        Coeff { a: &self.a * r, b: &self.b * r }
    }

    pub fn add_assign(&mut self, o: &Coeff) {
        self.a += &o.a;
        if !o.b.is_zero() {
            self.b += &o.b;
        }
    }

    /// `(a + bt)(c + dt) = (ac + bd v) + (ad + bc + bd u) t`.
    pub fn mul(&self, o: &Coeff, field: &FieldSpec) -> Coeff {
        if self.b.is_zero() && o.b.is_zero() {
            return Coeff::from_rational(&self.a * &o.a);
        }
        if self.b.is_zero() {
            return o.scale(&self.a);
        }
        if o.b.is_zero() {
            return self.scale(&o.a);
        }
        let (u, v) = field
            .modulus()
            .expect("theta component present over the rationals");
        let bd = &self.b * &o.b;
        Coeff {
            a: &self.a * &o.a + &bd * v,
            b: &self.a * &o.b + &self.b * &o.a + &bd * u,
        }
    }

    /// Norm `a^2 + abu - b^2 v` down to `Q`.
    pub fn norm(&self, field: &FieldSpec) -> Rational {
        match field.modulus() {
            None => &self.a * &self.a,
            Some((u, v)) => &self.a * &self.a + &self.a * &self.b * u - &self.b * &self.b * v,
        }
    }

    /// Galois conjugate `t -> u - t`; identity over `Q`.
    pub fn conj(&self, field: &FieldSpec) -> Coeff {
        match field.modulus() {
            None => self.clone(),
            Some((u, _)) => Coeff { a: &self.a + &self.b * u, b: -&self.b },
        }
    }

    pub fn inv(&self, field: &FieldSpec) -> Option<Coeff> {
        if self.is_zero() {
            return None;
        }
        if self.b.is_zero() {
            return Some(Coeff::from_rational(self.a.recip()));
        }
        let n = self.norm(field);
        let c = self.conj(field);
        Some(c.scale(&n.recip()))
    }

    pub fn pow(&self, mut e: u32, field: &FieldSpec) -> Coeff {
        let mut base = self.clone();
        let mut acc = Coeff::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, field);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, field);
            }
        }
        acc
    }

    /// Square root inside the field, when one exists there.
    pub fn sqrt(&self, field: &FieldSpec) -> Option<Coeff> {
        let Some((u, v)) = field.modulus() else {
            return rational_sqrt(&self.a).map(Coeff::from_rational);
        };
        if self.b.is_zero() {
            if let Some(r) = rational_sqrt(&self.a) {
                return Some(Coeff::from_rational(r));
            }
        }
        // Work in the basis (1, s) with s^2 = disc and t = (u + s)/2.
        let two = Rational::from_integer(2.into());
        let disc = u * u + Rational::from_integer(4.into()) * v;
        let c = &self.a + &self.b * u / &two;
        let d = &self.b / &two;
        let from_s = |e: Rational, f: Rational| Coeff { a: &e - &f * u, b: &f * &two };
        if d.is_zero() {
            // (f s)^2 = f^2 disc
            return rational_sqrt(&(&c / &disc)).map(|f| from_s(Rational::zero(), f));
        }
        let r = rational_sqrt(&(&c * &c - &d * &d * &disc))?;
        for cand in [(&c + &r) / &two, (&c - &r) / &two] {
            if let Some(e) = rational_sqrt(&cand) {
                if e.is_zero() {
                    continue;
                }
                // (e + f s)^2 = e^2 + f^2 disc + 2 e f s
                let f = &d / (&two * &e);
                if &e * &e + &f * &f * &disc == c {
                    return Some(from_s(e, f));
                }
            }
        }
        None
    }

    /// Least common multiple of the denominators of both components.
    pub fn denominator_lcm(&self) -> BigInt {
        num_integer::Integer::lcm(self.a.denom(), self.b.denom())
    }

    pub(crate) fn fmt_plain(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let theta = if self.b.is_one() {
            "t".to_string()
        } else if self.b == -Rational::one() {
            "-t".to_string()
        } else {
            format!("{}*t", self.b)
        };
        if self.a.is_zero() {
            write!(f, "{}", theta)
        } else if let Some(rest) = theta.strip_prefix('-') {
            write!(f, "{} - {}", self.a, rest)
        } else {
            write!(f, "{} + {}", self.a, theta)
        }
    }

    /// True when rendering needs parentheses to be used as a product factor.
    pub(crate) fn is_compound(&self) -> bool {
        !self.b.is_zero() && !self.a.is_zero()
    }

    pub(crate) fn is_negative_leading(&self) -> bool {
        if self.a.is_zero() {
            self.b.is_negative()
        } else {
            self.a.is_negative()
        }
    }

    pub fn to_complex(&self, theta: num_complex::Complex64) -> num_complex::Complex64 {
        num_complex::Complex64::new(rational_to_f64(&self.a), 0.0)
            + theta * rational_to_f64(&self.b)
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_plain(f)
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Huge numerators and denominators: scale down before converting.
    let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000) as usize;
    let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

/// An exact element of the ambient field, tagged with its field.
#[derive(Clone, Debug)]
pub struct FieldScalar {
    value: Coeff,
    field: Field,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldScalar {
    pub fn new(value: Coeff, field: Field) -> Result<Self> {
        if !value.is_rational() && !field.is_quadratic() {
            return Err(Error::NotQuadratic);
        }
        Ok(FieldScalar { value, field })
    }

    pub fn rational(r: Rational) -> Self {
        FieldScalar { value: Coeff::from_rational(r), field: FieldSpec::rationals() }
    }

    pub fn int(n: i64) -> Self {
        FieldScalar::rational(Rational::from_integer(n.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        FieldScalar::rational(Rational::new(n.into(), d.into()))
    }

    /// The generator `t` of a quadratic field.
    pub fn theta(field: &Field) -> Result<Self> {
        FieldScalar::new(Coeff::theta(), field.clone())
    }

    /// `a + b t` in `field`.
    pub fn from_parts(a: Rational, b: Rational, field: &Field) -> Result<Self> {
        FieldScalar::new(Coeff::new(a, b), field.clone())
    }

    pub fn value(&self) -> &Coeff {
        &self.value
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn into_parts(self) -> (Coeff, Field) {
        (self.value, self.field)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    /// Exact `lhs op rhs`.
    pub fn arith(&self, rhs: &FieldScalar, op: ScalarOp) -> Result<FieldScalar> {
        let field = FieldSpec::join(&self.field, &rhs.field)?;
        let value = match op {
            ScalarOp::Add => self.value.add(&rhs.value),
            ScalarOp::Sub => self.value.sub(&rhs.value),
            ScalarOp::Mul => self.value.mul(&rhs.value, &field),
            ScalarOp::Div => {
                let inv = rhs.value.inv(&field).ok_or(Error::DivisionByZero)?;
                self.value.mul(&inv, &field)
            }
        };
        Ok(FieldScalar { value, field })
    }

    pub fn add(&self, rhs: &FieldScalar) -> Result<FieldScalar> {
        self.arith(rhs, ScalarOp::Add)
    }

    pub fn sub(&self, rhs: &FieldScalar) -> Result<FieldScalar> {
        self.arith(rhs, ScalarOp::Sub)
    }

    pub fn mul(&self, rhs: &FieldScalar) -> Result<FieldScalar> {
        self.arith(rhs, ScalarOp::Mul)
    }

    pub fn div(&self, rhs: &FieldScalar) -> Result<FieldScalar> {
        self.arith(rhs, ScalarOp::Div)
    }

    pub fn neg(&self) -> FieldScalar {
        FieldScalar { value: self.value.neg(), field: self.field.clone() }
    }

    pub fn inv(&self) -> Result<FieldScalar> {
        let value = self.value.inv(&self.field).ok_or(Error::DivisionByZero)?;
        Ok(FieldScalar { value, field: self.field.clone() })
    }

    /// Image under `t -> u - t`.
    pub fn conjugate(&self) -> Result<FieldScalar> {
        if !self.field.is_quadratic() {
            return Err(Error::NotQuadratic);
        }
        Ok(FieldScalar { value: self.value.conj(&self.field), field: self.field.clone() })
    }

    pub fn norm(&self) -> Rational {
        self.value.norm(&self.field)
    }
}

impl PartialEq for FieldScalar {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && FieldSpec::join(&self.field, &other.field).is_ok()
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt_plain(f)
    }
}
