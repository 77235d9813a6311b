//! Local invariants of affine vector fields at supplied points, and the
//! toolkit for homogeneous cubic foliations.

use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::{Coeff, Field, FieldScalar, FieldSpec, Rational};
use crate::poly::{cubic_resultant, MPoly, Var};
use crate::web::{self, AffineVectorField};

/// Divides both components by their gcd. Returns the saturated field and the
/// monic common factor.
pub fn saturate(vf: &AffineVectorField) -> (AffineVectorField, MPoly) {
    let g = vf.a().gcd(vf.b());
    if g.is_one() {
        return (vf.clone(), g);
    }
    let a = vf.a().try_div(&g).expect("gcd divides A");
    let b = vf.b().try_div(&g).expect("gcd divides B");
    (AffineVectorField::new(a, b).expect("nonzero after division"), g)
}

fn local_field(vf: &AffineVectorField, pt: &[FieldScalar; 2]) -> Result<AffineVectorField> {
    let field = FieldSpec::join(&FieldSpec::join(vf.field(), pt[0].field())?, pt[1].field())?;
    let vf = AffineVectorField::new(vf.a().clone().in_field(&field), vf.b().clone().in_field(&field))?;
    let (sat, _) = saturate(&vf);
    Ok(sat.translated_to(pt[0].value(), pt[1].value()))
}

fn order(vf: &AffineVectorField) -> u32 {
    [vf.a(), vf.b()].iter().filter_map(|p| p.order()).min().expect("nonzero field")
}

/// Algebraic multiplicity of the saturated field at `pt`; 0 at regular points.
pub fn multiplicity_nu(vf: &AffineVectorField, pt: &[FieldScalar; 2]) -> Result<u32> {
    Ok(order(&local_field(vf, pt)?))
}

/// Order of the first jet that is not a multiple of the radial field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Tau {
    Finite(u32),
    /// Every jet is radial (`X = H R`).
    Infinite,
}

impl fmt::Display for Tau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tau::Finite(k) => write!(f, "{}", k),
            Tau::Infinite => write!(f, "inf"),
        }
    }
}

fn tau_of_local(local: &AffineVectorField, nu: u32) -> Tau {
    let k = local.field();
    let (x, y) = (MPoly::var(Var::X, k), MPoly::var(Var::Y, k));
    let top = local.degree();
    for d in nu..=top {
        let a = local.a().homogeneous_part(d);
        let b = local.b().homogeneous_part(d);
        if !(&(&x * &b) - &(&y * &a)).is_zero() {
            return Tau::Finite(d);
        }
    }
    Tau::Infinite
}

pub fn tau(vf: &AffineVectorField, pt: &[FieldScalar; 2]) -> Result<Tau> {
    let local = local_field(vf, pt)?;
    let nu = order(&local);
    if nu == 0 {
        return Err(Error::NotSingular);
    }
    Ok(tau_of_local(&local, nu))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SingularityReport {
    pub point: [FieldScalar; 2],
    pub nu: u32,
    pub tau: Tau,
    pub radial: bool,
    /// Member of the special set: `nu >= 2` or radial.
    pub special: bool,
}

pub fn classify_singularity(vf: &AffineVectorField, pt: &[FieldScalar; 2]) -> Result<SingularityReport> {
    let local = local_field(vf, pt)?;
    let nu = order(&local);
    if nu == 0 {
        return Err(Error::NotSingular);
    }
    let tau = tau_of_local(&local, nu);
    let radial = nu == 1 && tau > Tau::Finite(1);
    Ok(SingularityReport { point: pt.clone(), nu, tau, radial, special: nu >= 2 || radial })
}

/// Slope of an invariant line through the origin.
#[derive(Clone, Debug, PartialEq)]
pub enum Slope {
    /// The line `y = m x`.
    Finite(FieldScalar),
    /// The line `x = 0`.
    Vertical,
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(m) => write!(f, "{}", m),
            Slope::Vertical => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct HomogeneousAnalysis {
    pub tangent_cone: MPoly,
    pub slopes: Vec<Slope>,
    /// `P_j(t) = B(1,t) - m_j A(1,t)`; `A(t,1)` for the vertical line.
    pub pj: Vec<MPoly>,
    pub pj_discriminants: Vec<MPoly>,
    /// Factor of the dehomogenized tangent cone with no roots found in the field.
    pub unsolved: Option<MPoly>,
}

/// Dense univariate polynomial, index = power.
type Dense = Vec<Coeff>;

fn dense_eval(f: &Dense, r: &Coeff, k: &FieldSpec) -> Coeff {
    f.iter().rev().fold(Coeff::zero(), |acc, c| acc.mul(r, k).add(c))
}

/// Divides by `(t - r)`, assuming `r` is a root.
fn deflate(f: &Dense, r: &Coeff, k: &FieldSpec) -> Dense {
    let n = f.len() - 1;
    let mut out = vec![Coeff::zero(); n];
    let mut carry = Coeff::zero();
    for i in (1..=n).rev() {
        carry = f[i].add(&carry.mul(r, k));
        out[i - 1] = carry.clone();
    }
    out
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    if n.is_zero() {
        return None;
    }
    // trial division is only sensible for small constants
    if n.bits() > 64 {
        return None;
    }
    let n = n.to_u64().expect("fits");
    let mut out = Vec::new();
    let mut d = 1u64;
    let lim = n.sqrt();
    while d <= lim {
        if n.is_multiple_of(d) {
            out.push(BigInt::from(d));
            if d != n / d {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Rational roots of a polynomial with rational coefficients.
fn rational_root_candidates(f: &[Rational]) -> Vec<Rational> {
    let mut f: Vec<Rational> = f.to_vec();
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
    let mut out = Vec::new();
    let lead_zero = f.iter().take_while(|c| c.is_zero()).count();
    if lead_zero > 0 {
        out.push(Rational::zero());
    }
    let f = &f[lead_zero..];
    if f.len() < 2 {
        return out;
    }
    let l = f.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
    let (Some(ps), Some(qs)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
        return out;
    };
    for p in &ps {
        for q in &qs {
            let r = Rational::new(p.clone(), q.clone());
            out.push(r.clone());
            out.push(-r);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Roots inside the field (with multiplicity) and the unsplit remainder.
fn field_roots(f: Dense, k: &Field) -> (Vec<Coeff>, Dense) {
    let mut rest = f;
    let mut roots = Vec::new();
    // rational roots of the norm contain all rational roots of f
    let norm: Vec<Rational> = {
        let conj: Dense = rest.iter().map(|c| c.conj(k)).collect();
        let mut prod = vec![Coeff::zero(); rest.len() + conj.len() - 1];
        for (i, a) in rest.iter().enumerate() {
            for (j, b) in conj.iter().enumerate() {
                prod[i + j] = prod[i + j].add(&a.mul(b, k));
            }
        }
        prod.into_iter().map(|c| c.rational_part().clone()).collect()
    };
    for r in rational_root_candidates(&norm) {
        let r = Coeff::from_rational(r);
        while rest.len() > 1 && dense_eval(&rest, &r, k).is_zero() {
            rest = deflate(&rest, &r, k);
            roots.push(r.clone());
        }
    }
    loop {
        match rest.len() {
            2 => {
                let inv = rest[1].inv(k).expect("nonzero lead");
                roots.push(rest[0].neg().mul(&inv, k));
                rest = vec![rest[1].clone()];
            }
            3 => {
                let (a, b, c) = (&rest[2], &rest[1], &rest[0]);
                let disc = b.mul(b, k).sub(&Coeff::from_int(4).mul(&a.mul(c, k), k));
                let Some(s) = disc.sqrt(k) else { break };
                let inv2a = Coeff::from_int(2).mul(a, k).inv(k).expect("nonzero lead");
                let r1 = b.neg().add(&s).mul(&inv2a, k);
                let r2 = b.neg().sub(&s).mul(&inv2a, k);
                roots.push(r1);
                roots.push(r2);
                rest = vec![a.clone()];
            }
            _ => break,
        }
    }
    (roots, rest)
}

fn to_dense(p: &MPoly, v: Var) -> Dense {
    p.coefficients_in(v).into_iter().map(|c| c.constant_term()).collect()
}

/// `(a0, a1, a2, a3)` of a cubic in `v` (leading first); missing powers are 0.
fn cubic_coefficients(p: &MPoly, v: Var) -> Option<[MPoly; 4]> {
    if p.degree_in(v) > 3 {
        return None;
    }
    let c = p.coefficients_in(v);
    let get = |i: usize| c.get(i).cloned().unwrap_or_else(|| MPoly::zero(p.field()));
    Some([get(3), get(2), get(1), get(0)])
}

pub fn homogeneous_analysis(vf: &AffineVectorField) -> Result<HomogeneousAnalysis> {
    let degs: Vec<u32> = [vf.a(), vf.b()]
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.homogeneous_degree().ok_or(Error::NonHomogeneous))
        .collect::<Result<_>>()?;
    if degs.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::NonHomogeneous);
    }
    let tc = web::tangent_cone(vf);
    if tc.is_zero() {
        return Err(Error::ZeroTangentCone);
    }
    let k = vf.field().clone();
    let t = MPoly::var(Var::T, &k);
    let one = MPoly::one(&k);
    let chart = [(Var::X, one.clone()), (Var::Y, t.clone())];
    let swapped = [(Var::X, t.clone()), (Var::Y, one)];

    let cone_t = tc.substitute(&chart);
    let vertical = cone_t.degree_in(Var::T) < tc.total_degree().expect("nonzero");
    let (roots, rest) = field_roots(to_dense(&cone_t, Var::T), &k);
    let mut roots = roots;
    roots.dedup();

    let a1 = vf.a().substitute(&chart);
    let b1 = vf.b().substitute(&chart);
    let mut slopes = Vec::new();
    let mut pj = Vec::new();
    for m in roots {
        let mp = MPoly::constant(m.clone(), &k);
        pj.push(&b1 - &(&mp * &a1));
        slopes.push(Slope::Finite(FieldScalar::new(m, k.clone())?));
    }
    if vertical {
        pj.push(vf.a().substitute(&swapped));
        slopes.push(Slope::Vertical);
    }
    let pj_discriminants = pj
        .iter()
        .map(|p| {
            let [a0, a1, a2, a3] = cubic_coefficients(p, Var::T).ok_or(Error::NonHomogeneous)?;
            Ok(cubic_resultant(&a0, &a1, &a2, &a3))
        })
        .collect::<Result<_>>()?;
    let unsolved = (rest.len() > 1).then(|| {
        let terms = rest.into_iter().enumerate().map(|(i, c)| (crate::poly::Monomial::var(Var::T, i as u16), c));
        MPoly::from_terms(&k, terms)
    });
    Ok(HomogeneousAnalysis { tangent_cone: tc, slopes, pj, pj_discriminants, unsolved })
}

/// Homogeneous cubic field with tangent cone `x y (y - x)(y - nu x)`:
/// `[(nu + a1)x^3 + (a2 - nu - 1)x^2 y + (a3 + 1)x y^2] d/dx + [a1 x^2 y + a2 x y^2 + a3 y^3] d/dy`.
pub fn normal_form(
    nu: &FieldScalar,
    a1: &FieldScalar,
    a2: &FieldScalar,
    a3: &FieldScalar,
) -> Result<AffineVectorField> {
    let k = [nu, a1, a2, a3]
        .iter()
        .try_fold(FieldSpec::rationals(), |acc, s| FieldSpec::join(&acc, s.field()))?;
    let c = |s: FieldScalar| MPoly::scalar(&s).in_field(&k);
    let one = FieldScalar::int(1);
    let (x, y) = (MPoly::var(Var::X, &k), MPoly::var(Var::Y, &k));
    let mono = |i: u32, j: u32| &x.pow(i) * &y.pow(j);
    let a = &(&(&c(nu.add(a1)?) * &mono(3, 0)) + &(&c(a2.sub(nu)?.sub(&one)?) * &mono(2, 1)))
        + &(&c(a3.add(&one)?) * &mono(1, 2));
    let b = &(&(&c(a1.clone()) * &mono(2, 1)) + &(&c(a2.clone()) * &mono(1, 2))) + &(&c(a3.clone()) * &mono(0, 3));
    AffineVectorField::new(a, b)
}

/// Coefficients `(a1, a2, a3)` of the flat member of the normal form.
pub fn flat_family_coefficients(nu: &FieldScalar) -> Result<[FieldScalar; 3]> {
    let q = FieldScalar::ratio;
    Ok([
        nu.mul(&q(-3, 4))?,
        nu.add(&q(1, 1))?.mul(&q(1, 2))?,
        q(-1, 4),
    ])
}

/// `(nu/4 x^3 - (1+nu)/2 x^2 y + 3/4 x y^2) d/dx + (-3nu/4 x^2 y + (1+nu)/2 x y^2 - 1/4 y^3) d/dy`.
pub fn classification_family(nu: &FieldScalar) -> Result<AffineVectorField> {
    if nu.is_zero() || nu.is_one() {
        return Err(Error::DegenerateParameter);
    }
    let [a1, a2, a3] = flat_family_coefficients(nu)?;
    normal_form(nu, &a1, &a2, &a3)
}

/// Outcome of checking one member of the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassificationCheck {
    pub flat: bool,
    pub inflection_reduced: bool,
}

impl ClassificationCheck {
    /// Flat dual web with reduced inflection divisor.
    pub fn holds(&self) -> bool {
        self.flat && self.inflection_reduced
    }
}

pub fn check_classification(nu: &FieldScalar) -> Result<ClassificationCheck> {
    let vf = classification_family(nu)?;
    let flat = web::is_flat(&vf)?;
    let infl = web::inflection_divisor(&web::homogenize(&vf, 3)?);
    let inflection_reduced = !infl.is_zero()
        && infl.squarefree_part()?.total_degree() == infl.total_degree();
    Ok(ClassificationCheck { flat, inflection_reduced })
}

/// Whether the family member at `nu` belongs to the classification: its dual
/// web is flat and its inflection divisor is reduced.
pub fn verify_classification(nu: &FieldScalar) -> Result<bool> {
    Ok(check_classification(nu)?.holds())
}
