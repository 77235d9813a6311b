//! Sparse multivariate polynomials over the exact coefficient fields.
//!
//! Variables form the closed tuple `(x, y, z, p, q, t)`. Terms are kept sorted
//! by the graded lexicographic order with `x > y > z > p > q > t`, leading term
//! first, with no zero coefficients, so equal polynomials have equal term lists.

mod gcd;
mod heuristic;
mod matrix;
mod ratfn;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{Coeff, Field, FieldScalar, FieldSpec, Rational};

pub use matrix::{cubic_resultant, PolyMatrix};
pub use ratfn::RatFn;

pub const NVARS: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
    P,
    Q,
    T,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::X, Var::Y, Var::Z, Var::P, Var::Q, Var::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> char {
        ['x', 'y', 'z', 'p', 'q', 't'][self.index()]
    }

    pub fn from_name(c: char) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == c)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Exponent vector. The derived order (total degree, then lexicographic from
/// `x`) is exactly graded lex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    deg: u32,
    exps: [u16; NVARS],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn new(exps: [u16; NVARS]) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { deg, exps }
    }

    pub fn var(v: Var, e: u16) -> Self {
        let mut exps = [0; NVARS];
        exps[v.index()] = e;
        Monomial::new(exps)
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.exps[v.index()]
    }

    pub fn exps(&self) -> &[u16; NVARS] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, f) in exps.iter_mut().zip(o.exps.iter()) {
            *e += f;
        }
        Monomial { deg: self.deg + o.deg, exps }
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.deg <= o.deg && self.exps.iter().zip(o.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`; caller guarantees divisibility.
    fn quotient_of(&self, o: &Monomial) -> Monomial {
        let mut exps = o.exps;
        for (e, f) in exps.iter_mut().zip(self.exps.iter()) {
            *e -= f;
        }
        Monomial { deg: o.deg - self.deg, exps }
    }

    pub(crate) fn with_exp(&self, v: Var, e: u16) -> Monomial {
        let mut exps = self.exps;
        exps[v.index()] = e;
        Monomial::new(exps)
    }
}

/// Sparse multivariate polynomial over `Q` or `Q(t)`.
#[derive(Clone, Debug)]
pub struct MPoly {
    terms: Vec<(Monomial, Coeff)>,
    field: Field,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

fn join_fields(a: &Field, b: &Field) -> Field {
    FieldSpec::join(a, b).expect("polynomials over incompatible coefficient fields")
}

impl MPoly {
    pub fn zero(field: &Field) -> Self {
        MPoly { terms: Vec::new(), field: field.clone() }
    }

    pub fn one(field: &Field) -> Self {
        MPoly::constant(Coeff::one(), field)
    }

    pub fn constant(c: Coeff, field: &Field) -> Self {
        MPoly::term(Monomial::one(), c, field)
    }

    pub fn int(n: i64, field: &Field) -> Self {
        MPoly::constant(Coeff::from_int(n), field)
    }

    pub fn rational(r: Rational, field: &Field) -> Self {
        MPoly::constant(Coeff::from_rational(r), field)
    }

    pub fn scalar(s: &FieldScalar) -> Self {
        MPoly::constant(s.value().clone(), s.field())
    }

    pub fn var(v: Var, field: &Field) -> Self {
        MPoly::term(Monomial::var(v, 1), Coeff::one(), field)
    }

    pub fn term(m: Monomial, c: Coeff, field: &Field) -> Self {
        assert!(c.is_rational() || field.is_quadratic(), "theta coefficient over Q");
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        MPoly { terms, field: field.clone() }
    }

    /// Collects arbitrary (possibly repeated, possibly zero) terms into canonical form.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Coeff)>>(field: &Field, terms: I) -> Self {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in terms {
            acc.entry(m).or_default().add_assign(&c);
        }
        Self::from_map(field, acc)
    }

    fn from_map(field: &Field, acc: HashMap<Monomial, Coeff>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        MPoly { terms, field: field.clone() }
    }

    /// Terms, leading (largest) monomial first.
    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Reinterprets the polynomial over a larger field.
    pub fn in_field(mut self, field: &Field) -> Self {
        self.field = join_fields(&self.field, field);
        self
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn constant_term(&self) -> Coeff {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Coeff::zero(),
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_coeff(&self) -> Coeff {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_default()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0.deg)
    }

    /// Least total degree of a term (the order of vanishing at the origin).
    pub fn order(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.deg).min()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|t| t.0.exp(v) as u32).max().unwrap_or(0)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.iter().any(|t| t.0.exp(v) > 0)
    }

    pub fn vars(&self) -> Vec<Var> {
        Var::ALL.iter().copied().filter(|&v| self.contains_var(v)).collect()
    }

    /// Degree if every term has the same total degree; `None` for zero or mixed.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.total_degree()?;
        self.terms.iter().all(|t| t.0.deg == d).then_some(d)
    }

    /// The part of total degree exactly `k`.
    pub fn homogeneous_part(&self, k: u32) -> MPoly {
        MPoly {
            terms: self.terms.iter().filter(|t| t.0.deg == k).cloned().collect(),
            field: self.field.clone(),
        }
    }

    pub fn try_arith(&self, rhs: &MPoly, op: PolyOp) -> Result<MPoly> {
        FieldSpec::join(&self.field, &rhs.field)?;
        Ok(match op {
            PolyOp::Add => self + rhs,
            PolyOp::Sub => self - rhs,
            PolyOp::Mul => self * rhs,
        })
    }

    fn merge(&self, rhs: &MPoly, negate_rhs: bool) -> MPoly {
        let field = join_fields(&self.field, &rhs.field);
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        let rhs_c = |c: &Coeff| if negate_rhs { c.neg() } else { c.clone() };
        while i < self.terms.len() && j < rhs.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &rhs.terms[j];
            match ma.cmp(mb) {
                std::cmp::Ordering::Greater => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((*mb, rhs_c(cb)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_rhs { ca.sub(cb) } else { ca.add(cb) };
                    if !c.is_zero() {
                        out.push((*ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(rhs.terms[j..].iter().map(|(m, c)| (*m, rhs_c(c))));
        MPoly { terms: out, field }
    }

    fn product(&self, rhs: &MPoly) -> MPoly {
        let field = join_fields(&self.field, &rhs.field);
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero(&field);
        }
        if rhs.terms.len() == 1 {
            return self.mul_term(&rhs.terms[0].0, &rhs.terms[0].1).in_field(&field);
        }
        if self.terms.len() == 1 {
            return rhs.mul_term(&self.terms[0].0, &self.terms[0].1).in_field(&field);
        }
        let mut acc: HashMap<Monomial, Coeff> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len() / 2 + 1);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let c = ca.mul(cb, &field);
                acc.entry(ma.mul(mb)).or_default().add_assign(&c);
            }
        }
        MPoly::from_map(&field, acc)
    }

    /// Multiplies by a single term; order is preserved so no resorting is needed.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.field);
        }
        let terms = self
            .terms
            .iter()
            .map(|(mm, cc)| (mm.mul(m), cc.mul(c, &self.field)))
            .collect();
        MPoly { terms, field: self.field.clone() }
    }

    pub fn scale(&self, c: &Coeff) -> MPoly {
        self.mul_term(&Monomial::one(), c)
    }

    pub fn pow(&self, mut e: u32) -> MPoly {
        let mut acc = MPoly::one(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> MPoly {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv(&self.field).expect("nonzero leading coefficient")),
        }
    }

    pub fn derivative(&self, v: Var) -> MPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(v) > 0)
            .map(|(m, c)| {
                let e = m.exp(v);
                (m.with_exp(v, e - 1), c.scale(&Rational::from_integer(e.into())))
            });
        MPoly::from_terms(&self.field, terms)
    }

    /// Simultaneous substitution: every bound variable is replaced by its image
    /// in one pass, unbound variables are left alone.
    pub fn substitute(&self, bindings: &[(Var, MPoly)]) -> MPoly {
        let mut field = self.field.clone();
        let mut image: [Option<&MPoly>; NVARS] = [None; NVARS];
        for (v, p) in bindings {
            field = join_fields(&field, p.field());
            image[v.index()] = Some(p);
        }
        let mut powers: [Vec<MPoly>; NVARS] = Default::default();
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in &self.terms {
            let mut kept = m.exps;
            let mut prod = MPoly::constant(c.clone(), &field);
            for v in Var::ALL {
                let e = m.exp(v) as usize;
                let Some(img) = image[v.index()] else { continue };
                kept[v.index()] = 0;
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[v.index()];
                if cache.is_empty() {
                    cache.push(MPoly::one(&field));
                }
                while cache.len() <= e {
                    let next = cache.last().unwrap() * img;
                    cache.push(next);
                }
                prod = &prod * &cache[e];
            }
            let kept = Monomial::new(kept);
            for (pm, pc) in prod.terms {
                acc.entry(pm.mul(&kept)).or_default().add_assign(&pc);
            }
        }
        MPoly::from_map(&field, acc)
    }

    /// Simultaneous renaming of variables.
    pub fn rename(&self, pairs: &[(Var, Var)]) -> MPoly {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = m.exps;
            for &(from, _) in pairs {
                exps[from.index()] = 0;
            }
            for &(from, to) in pairs {
                exps[to.index()] += m.exp(from);
            }
            (Monomial::new(exps), c.clone())
        });
        MPoly::from_terms(&self.field, terms)
    }

    /// Coefficients with respect to `v`: entry `k` multiplies `v^k`.
    pub fn coefficients_in(&self, v: Var) -> Vec<MPoly> {
        let n = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); n + 1];
        for (m, c) in &self.terms {
            buckets[m.exp(v) as usize].push((m.with_exp(v, 0), c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut t| {
                // removing one variable can reorder terms
                t.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
                MPoly { terms: t, field: self.field.clone() }
            })
            .collect()
    }

    /// Inverse of [`MPoly::coefficients_in`]; coefficients must not contain `v`.
    pub fn from_coefficients_in(v: Var, coeffs: &[MPoly], field: &Field) -> MPoly {
        let terms = coeffs.iter().enumerate().flat_map(|(k, c)| {
            c.terms.iter().map(move |(m, cc)| (m.with_exp(v, k as u16), cc.clone()))
        });
        MPoly::from_terms(field, terms)
    }

    /// Exact quotient `self / g`, or `None` when `g` does not divide `self`.
    pub fn try_div(&self, g: &MPoly) -> Option<MPoly> {
        let field = join_fields(&self.field, &g.field);
        let (lm, lc) = g.leading_term()?;
        if self.is_zero() {
            return Some(MPoly::zero(&field));
        }
        let inv = lc.inv(&field)?;
        if g.terms.len() == 1 {
            if !self.terms.iter().all(|(m, _)| lm.divides(m)) {
                return None;
            }
            let terms = self
                .terms
                .iter()
                .map(|(m, c)| (lm.quotient_of(m), c.mul(&inv, &field)))
                .collect();
            return Some(MPoly { terms, field });
        }
        for v in Var::ALL {
            if g.degree_in(v) > self.degree_in(v) {
                return None;
            }
        }
        let mut rem: BTreeMap<Monomial, Coeff> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            if !lm.divides(&m) {
                return None;
            }
            let qm = lm.quotient_of(&m);
            let qc = c.mul(&inv, &field);
            for (gm, gc) in &g.terms[1..] {
                let key = gm.mul(&qm);
                let delta = gc.mul(&qc, &field);
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let nv = e.get().sub(&delta);
                        if nv.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = nv;
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(delta.neg());
                    }
                }
            }
            quot.push((qm, qc));
        }
        Some(MPoly { terms: quot, field })
    }

    /// True when `g` divides `self` exactly.
    pub fn is_divisible_by(&self, g: &MPoly) -> bool {
        self.try_div(g).is_some()
    }

    pub fn gcd(&self, other: &MPoly) -> MPoly {
        gcd::gcd(self, other)
    }

    /// Product of the distinct irreducible factors, made monic.
    pub fn squarefree_part(&self) -> Result<MPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut f = self.monic();
        loop {
            let mut g = f.clone();
            for v in f.vars() {
                if g.is_constant() {
                    break;
                }
                g = g.gcd(&f.derivative(v));
            }
            if g.is_constant() {
                return Ok(f);
            }
            f = f.try_div(&g).expect("gcd divides its argument").monic();
        }
    }

    /// Exact evaluation at a point; unbound variables stay symbolic.
    pub fn evaluate(&self, point: &[(Var, Coeff)]) -> MPoly {
        let bindings: Vec<_> =
            point.iter().map(|(v, c)| (*v, MPoly::constant(c.clone(), &self.field))).collect();
        self.substitute(&bindings)
    }

    /// Floating-point evaluation. `theta` must be supplied exactly when the
    /// field is quadratic, and must satisfy the minimal polynomial.
    pub fn evaluate_float(&self, point: &[(Var, Complex64)], theta: Option<Complex64>) -> Result<Complex64> {
        let theta = match (self.field.modulus(), theta) {
            (None, None) => Complex64::zero(),
            (Some((u, v)), Some(th)) => {
                let u = crate::field::rational_to_f64(u);
                let v = crate::field::rational_to_f64(v);
                let resid = th * th - th * u - v;
                if resid.norm() > 1e-12 * (1.0 + th.norm_sqr()) {
                    return Err(Error::BadEmbedding);
                }
                th
            }
            _ => return Err(Error::BadEmbedding),
        };
        let mut vals = [Complex64::zero(); NVARS];
        for (v, z) in point {
            vals[v.index()] = *z;
        }
        let mut sum = Complex64::zero();
        for (m, c) in &self.terms {
            let mut t = c.to_complex(theta);
            for v in Var::ALL {
                let e = m.exp(v);
                if e > 0 {
                    t *= vals[v.index()].powu(e as u32);
                }
            }
            sum += t;
        }
        Ok(sum)
    }

    /// Multiplies by `lcm` of coefficient denominators, giving a polynomial with
    /// integral rational and theta parts.
    pub fn clear_denominators(&self) -> MPoly {
        let l = self
            .terms
            .iter()
            .fold(num_bigint::BigInt::from(1), |acc, (_, c)| {
                num_integer::Integer::lcm(&acc, &c.denominator_lcm())
            });
        self.scale(&Coeff::from_rational(Rational::from_integer(l)))
    }
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && FieldSpec::join(&self.field, &other.field).is_ok()
    }
}

impl Eq for MPoly {}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.merge(rhs, false)
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.merge(rhs, true)
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.product(rhs)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
            field: self.field.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: &MPoly) -> MPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

fn fmt_monomial(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for v in Var::ALL {
        match m.exp(v) {
            0 => {}
            1 => parts.push(v.name().to_string()),
            e => parts.push(format!("{}^{}", v.name(), e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for MPoly {
    /// Canonical rendering in the fixed monomial order; reparses with the
    /// crate's grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let compound = c.is_compound();
            let negative = !compound && c.is_negative_leading();
            let abs = if negative { c.neg() } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = fmt_monomial(m);
            if m.is_one() {
                if compound {
                    write!(f, "({})", abs)?;
                } else {
                    write!(f, "{}", abs)?;
                }
            } else if abs.is_one() {
                write!(f, "{}", mono)?;
            } else if compound {
                write!(f, "({})*{}", abs, mono)?;
            } else {
                write!(f, "{}*{}", abs, mono)?;
            }
        }
        Ok(())
    }
}
