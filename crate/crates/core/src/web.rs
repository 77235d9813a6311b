//! Dual webs of plane foliations: Legendre transform, Blaschke curvature of
//! implicit cubic webs, inflection divisors, discriminants and holomorphy tests.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{Coeff, Field, FieldScalar, FieldSpec, Rational};
use crate::poly::{cubic_resultant, MPoly, Monomial, PolyMatrix, RatFn, Var};

fn only_vars(p: &MPoly, allowed: &[Var]) -> bool {
    p.vars().iter().all(|v| allowed.contains(v))
}

/// Affine vector field `A d/dx + B d/dy` with `A, B` in `x, y`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineVectorField {
    a: MPoly,
    b: MPoly,
}

impl AffineVectorField {
    pub fn new(a: MPoly, b: MPoly) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroField);
        }
        if !only_vars(&a, &[Var::X, Var::Y]) || !only_vars(&b, &[Var::X, Var::Y]) {
            return Err(Error::InvariantViolated("field components must be polynomials in x, y".into()));
        }
        let field = FieldSpec::join(a.field(), b.field())?;
        Ok(AffineVectorField { a: a.in_field(&field), b: b.in_field(&field) })
    }

    pub fn a(&self) -> &MPoly {
        &self.a
    }

    pub fn b(&self) -> &MPoly {
        &self.b
    }

    pub fn field(&self) -> &Field {
        self.a.field()
    }

    pub fn degree(&self) -> u32 {
        self.a.total_degree().unwrap_or(0).max(self.b.total_degree().unwrap_or(0))
    }

    /// Conjugates by the translation moving `(x0, y0)` to the origin.
    pub fn translated_to(&self, x0: &Coeff, y0: &Coeff) -> AffineVectorField {
        let f = self.field();
        let shift = |v: Var, c: &Coeff| &MPoly::var(v, f) + &MPoly::constant(c.clone(), f);
        let bind = [(Var::X, shift(Var::X, x0)), (Var::Y, shift(Var::Y, y0))];
        AffineVectorField { a: self.a.substitute(&bind), b: self.b.substitute(&bind) }
    }
}

/// Homogeneous vector field `A d/dx + B d/dy + C d/dz` with components of a
/// common degree in `x, y, z`.
#[derive(Clone, Debug, PartialEq)]
pub struct HomogeneousVectorField {
    comps: [MPoly; 3],
    degree: u32,
}

impl HomogeneousVectorField {
    pub fn new(a: MPoly, b: MPoly, c: MPoly) -> Result<Self> {
        let field = FieldSpec::join(&FieldSpec::join(a.field(), b.field())?, c.field())?;
        let comps = [a.in_field(&field), b.in_field(&field), c.in_field(&field)];
        let mut degree = None;
        for p in &comps {
            if !only_vars(p, &[Var::X, Var::Y, Var::Z]) {
                return Err(Error::InvariantViolated("components must be polynomials in x, y, z".into()));
            }
            if p.is_zero() {
                continue;
            }
            let d = p.homogeneous_degree().ok_or(Error::NonHomogeneous)?;
            match degree {
                None => degree = Some(d),
                Some(e) if e != d => return Err(Error::NonHomogeneous),
                _ => {}
            }
        }
        let degree = degree.ok_or(Error::ZeroField)?;
        Ok(HomogeneousVectorField { comps, degree })
    }

    pub fn components(&self) -> &[MPoly; 3] {
        &self.comps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn field(&self) -> &Field {
        self.comps[0].field()
    }

    /// The derivation `A f_x + B f_y + C f_z`.
    pub fn apply(&self, f: &MPoly) -> MPoly {
        let [a, b, c] = &self.comps;
        &(&(a * &f.derivative(Var::X)) + &(b * &f.derivative(Var::Y))) + &(c * &f.derivative(Var::Z))
    }
}

/// Implicit 3-web `a0 s^3 + a1 s^2 + a2 s + a3 = 0`, where the slope `s` is
/// the derivative of the second base variable with respect to the first.
#[derive(Clone, Debug, PartialEq)]
pub struct CubicWebEquation {
    slope: Var,
    coeffs: [MPoly; 4],
    base: (Var, Var),
}

impl CubicWebEquation {
    /// Splits `f` by powers of `slope`. Requires degree exactly 3 in the slope
    /// and a discriminant that does not vanish identically.
    pub fn from_implicit(f: &MPoly, slope: Var, base: (Var, Var)) -> Result<Self> {
        if slope == base.0 || slope == base.1 || base.0 == base.1 {
            return Err(Error::InvariantViolated("slope and base variables must be distinct".into()));
        }
        if !only_vars(f, &[slope, base.0, base.1]) {
            return Err(Error::InvariantViolated(format!(
                "equation may only involve {}, {}, {}",
                slope, base.0, base.1
            )));
        }
        let deg = f.degree_in(slope);
        if deg < 3 || f.is_zero() {
            return Err(Error::DegreeTooLow(if f.is_zero() { 0 } else { deg }));
        }
        if deg > 3 {
            return Err(Error::DegreeTooHigh(deg));
        }
        let c = f.coefficients_in(slope);
        let w = CubicWebEquation {
            slope,
            coeffs: [c[3].clone(), c[2].clone(), c[1].clone(), c[0].clone()],
            base,
        };
        if w.discriminant().is_zero() {
            return Err(Error::DegenerateWeb);
        }
        Ok(w)
    }

    pub fn slope_var(&self) -> Var {
        self.slope
    }

    pub fn base_vars(&self) -> (Var, Var) {
        self.base
    }

    /// `[a0, a1, a2, a3]`, coefficients of `s^3, s^2, s, 1`.
    pub fn coefficients(&self) -> &[MPoly; 4] {
        &self.coeffs
    }

    pub fn field(&self) -> &Field {
        self.coeffs[0].field()
    }

    pub fn implicit(&self) -> MPoly {
        let c: Vec<MPoly> = self.coeffs.iter().rev().cloned().collect();
        MPoly::from_coefficients_in(self.slope, &c, self.field())
    }

    pub fn discriminant(&self) -> MPoly {
        let [a0, a1, a2, a3] = &self.coeffs;
        cubic_resultant(a0, a1, a2, a3)
    }
}

/// Curvature 2-form `coeff * d(first) ^ d(second)`.
#[derive(Clone, Debug)]
pub struct CurvatureForm {
    coeff: RatFn,
    chart: (Var, Var),
}

impl CurvatureForm {
    pub fn coeff(&self) -> &RatFn {
        &self.coeff
    }

    pub fn chart(&self) -> (Var, Var) {
        self.chart
    }

    /// Two-letter chart name, e.g. `"pq"`.
    pub fn chart_name(&self) -> String {
        format!("{}{}", self.chart.0, self.chart.1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }
}

impl fmt::Display for CurvatureForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} d{}^d{}", self.coeff, self.chart.0, self.chart.1)
    }
}

/// `F(x, px + q; p) = B(x, px + q) - p A(x, px + q)`, as a cubic in `x` over
/// the dual chart `(p, q)`.
pub fn legendre_transform(vf: &AffineVectorField) -> Result<CubicWebEquation> {
    let f = legendre_polynomial(vf);
    CubicWebEquation::from_implicit(&f, Var::X, (Var::P, Var::Q))
}

fn legendre_polynomial(vf: &AffineVectorField) -> MPoly {
    let k = vf.field();
    let p = MPoly::var(Var::P, k);
    let g = vf.b() - &(&p * vf.a());
    let line = &(&p * &MPoly::var(Var::X, k)) + &MPoly::var(Var::Q, k);
    g.substitute(&[(Var::Y, line)])
}

/// The dual web written as an implicit equation with slope `p = dy/dx`:
/// the Legendre equation under `p -> x, q -> y, x -> -p`.
pub fn dual_web_equation(vf: &AffineVectorField) -> Result<CubicWebEquation> {
    let leg = legendre_transform(vf)?;
    let k = vf.field();
    let f = leg.implicit().substitute(&[
        (Var::P, MPoly::var(Var::X, k)),
        (Var::Q, MPoly::var(Var::Y, k)),
        (Var::X, -&MPoly::var(Var::P, k)),
    ]);
    CubicWebEquation::from_implicit(&f, Var::P, (Var::X, Var::Y))
}

/// Unreduced pieces of the curvature: `k = num / R^2`.
struct CurvatureParts {
    num: MPoly,
    resultant: MPoly,
}

fn curvature_parts(w: &CubicWebEquation) -> Result<CurvatureParts> {
    let (x, y) = w.base_vars();
    let [a0, a1, a2, a3] = w.coefficients();
    let k = w.field();
    let r = w.discriminant();
    if r.is_zero() {
        return Err(Error::DegenerateWeb);
    }
    let int = |n: i64| MPoly::int(n, k);
    let z = MPoly::zero(k);
    let alpha0 = vec![
        a0.derivative(y),
        &a0.derivative(x) + &a1.derivative(y),
        &a1.derivative(x) + &a2.derivative(y),
        &a2.derivative(x) + &a3.derivative(y),
        a3.derivative(x),
    ];
    let tail = [
        vec![-a0, z.clone(), a2.clone(), a3 * &int(2), z.clone()],
        vec![z.clone(), a0 * &int(-2), -a1, z.clone(), a3.clone()],
        vec![z.clone(), z.clone(), a0 * &int(-3), a1 * &int(-2), -a2],
    ];
    let det_with = |second: Vec<MPoly>| -> Result<MPoly> {
        let mut rows = vec![alpha0.clone(), second];
        rows.extend(tail.iter().cloned());
        PolyMatrix::from_rows(rows).determinant()
    };
    let alpha1 = det_with(vec![a0.clone(), a1.clone(), a2.clone(), a3.clone(), z.clone()])?;
    let alpha2 = det_with(vec![z.clone(), a0.clone(), a1.clone(), a2.clone(), a3.clone()])?;
    // d/dx(alpha2 / R) + d/dy(alpha1 / R) over the common denominator R^2
    let num = &(&(&(&alpha2.derivative(x) + &alpha1.derivative(y)) * &r)
        - &(&alpha2 * &r.derivative(x)))
        - &(&alpha1 * &r.derivative(y));
    Ok(CurvatureParts { num, resultant: r })
}

/// Blaschke curvature of an implicit cubic web, in the web's base chart.
pub fn kw_curvature(w: &CubicWebEquation) -> Result<CurvatureForm> {
    let parts = curvature_parts(w)?;
    let den = parts.resultant.pow(2);
    Ok(CurvatureForm { coeff: RatFn::new(parts.num, den)?, chart: w.base_vars() })
}

/// Curvature of the dual web of `vf`, in the dual chart `(p, q)`.
pub fn dual_curvature(vf: &AffineVectorField) -> Result<CurvatureForm> {
    let w = dual_web_equation(vf)?;
    let k = kw_curvature(&w)?;
    Ok(CurvatureForm {
        coeff: k.coeff.rename(&[(Var::X, Var::P), (Var::Y, Var::Q)]),
        chart: (Var::P, Var::Q),
    })
}

/// True when the dual web has identically vanishing curvature.
pub fn is_flat(vf: &AffineVectorField) -> Result<bool> {
    let w = dual_web_equation(vf)?;
    Ok(curvature_parts(&w)?.num.is_zero())
}

/// `det[[x, y, z], [X(x), X(y), X(z)], [X^2(x), X^2(y), X^2(z)]]`.
pub fn inflection_divisor(hvf: &HomogeneousVectorField) -> MPoly {
    let k = hvf.field();
    let coords = [Var::X, Var::Y, Var::Z].map(|v| MPoly::var(v, k));
    let first: Vec<MPoly> = hvf.components().to_vec();
    let second: Vec<MPoly> = first.iter().map(|c| hvf.apply(c)).collect();
    PolyMatrix::from_rows(vec![coords.to_vec(), first, second])
        .determinant()
        .expect("3x3 is square")
}

/// `(z^d A(x/z, y/z), z^d B(x/z, y/z), 0)`.
pub fn homogenize(vf: &AffineVectorField, d: u32) -> Result<HomogeneousVectorField> {
    if vf.degree() > d {
        return Err(Error::DegreeExceeded(d));
    }
    let lift = |p: &MPoly| {
        let terms = p.terms().iter().map(|(m, c)| {
            let mut e = *m.exps();
            e[Var::Z.index()] = (d - m.degree()) as u16;
            (Monomial::new(e), c.clone())
        });
        MPoly::from_terms(p.field(), terms)
    };
    HomogeneousVectorField::new(lift(vf.a()), lift(vf.b()), MPoly::zero(vf.field()))
}

pub fn web_discriminant(w: &CubicWebEquation) -> MPoly {
    w.discriminant()
}

/// `yA - xB`.
pub fn tangent_cone(vf: &AffineVectorField) -> MPoly {
    let k = vf.field();
    &(&MPoly::var(Var::Y, k) * vf.a()) - &(&MPoly::var(Var::X, k) * vf.b())
}

fn eval_at(p: &MPoly, pt: &[(Var, Coeff)]) -> Coeff {
    p.evaluate(pt).constant_term()
}

fn scalar_field(pts: &[FieldScalar], base: &Field) -> Result<Field> {
    pts.iter().try_fold(base.clone(), |acc, s| FieldSpec::join(&acc, s.field()))
}

/// Tangent line at `pt` as a point `(Bz - Cy : Cx - Az : Ay - Bx)` of the dual
/// plane, with the common integer content of the coordinates removed.
pub fn gauss_map_point(hvf: &HomogeneousVectorField, pt: &[FieldScalar; 3]) -> Result<[FieldScalar; 3]> {
    let field = scalar_field(pt, hvf.field())?;
    let at: Vec<(Var, Coeff)> =
        [Var::X, Var::Y, Var::Z].into_iter().zip(pt.iter().map(|s| s.value().clone())).collect();
    let [a, b, c] = hvf.components().clone().map(|p| eval_at(&p.in_field(&field), &at));
    let [x0, y0, z0] = [&at[0].1, &at[1].1, &at[2].1];
    let cross = |p: &Coeff, q: &Coeff, r: &Coeff, s: &Coeff| p.mul(q, &field).sub(&r.mul(s, &field));
    let line = [cross(&b, z0, &c, y0), cross(&c, x0, &a, z0), cross(&a, y0, &b, x0)];
    if line.iter().all(Coeff::is_zero) {
        return Err(Error::SingularPoint);
    }
    let [a, b, c] = remove_content(line);
    Ok([
        FieldScalar::new(a, field.clone())?,
        FieldScalar::new(b, field.clone())?,
        FieldScalar::new(c, field)?,
    ])
}

/// Scales a triple to integral components with no common integer factor.
fn remove_content(v: [Coeff; 3]) -> [Coeff; 3] {
    let l = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denominator_lcm()));
    let scaled = v.map(|c| c.scale(&Rational::from_integer(l.clone())));
    let g = scaled.iter().fold(BigInt::zero(), |acc, c| {
        acc.gcd(c.rational_part().numer()).gcd(c.theta_part().numer())
    });
    if g.is_zero() || g.is_one() {
        return scaled;
    }
    let inv = Rational::new(BigInt::one(), g.abs());
    scaled.map(|c| c.scale(&inv))
}

/// Lines through `(x0, y0)` in the dual chart: `q + x0 p - y0`.
pub fn dual_line(x0: &FieldScalar, y0: &FieldScalar) -> Result<MPoly> {
    let field = FieldSpec::join(x0.field(), y0.field())?;
    let q = MPoly::var(Var::Q, &field);
    let p = MPoly::var(Var::P, &field);
    Ok(&(&q + &(&p * &MPoly::scalar(x0))) - &MPoly::scalar(y0))
}

/// Whether the curvature has no pole along any component of `g = 0`.
pub fn holomorphic_along(k: &CurvatureForm, g: &MPoly) -> Result<bool> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(k.coeff().denominator().gcd(g).is_constant())
}

/// Three foliations `dy + y^a h_i dx`.
#[derive(Clone, Debug, PartialEq)]
pub struct EtaWebSpec {
    h: [MPoly; 3],
    a: u32,
}

impl EtaWebSpec {
    pub fn new(h1: MPoly, h2: MPoly, h3: MPoly, a: u32) -> Result<Self> {
        let field = FieldSpec::join(&FieldSpec::join(h1.field(), h2.field())?, h3.field())?;
        let h = [h1.in_field(&field), h2.in_field(&field), h3.in_field(&field)];
        if h.iter().any(|p| !only_vars(p, &[Var::X, Var::Y])) {
            return Err(Error::InvariantViolated("h_i must be polynomials in x, y".into()));
        }
        let spec = EtaWebSpec { h, a };
        for d in spec.differences() {
            // y | d  iff every term carries y
            if d.terms().iter().all(|(m, _)| m.exp(Var::Y) > 0) {
                return Err(Error::InvariantViolated("y divides some h_i - h_j".into()));
            }
        }
        Ok(spec)
    }

    pub fn h(&self) -> &[MPoly; 3] {
        &self.h
    }

    pub fn order(&self) -> u32 {
        self.a
    }

    /// `(h1 - h2, h2 - h3, h3 - h1)`.
    pub fn differences(&self) -> [MPoly; 3] {
        let [h1, h2, h3] = &self.h;
        [h1 - h2, h2 - h3, h3 - h1]
    }

    /// `prod (p + y^a h_i)`, slope `p = dy/dx`.
    pub fn web_equation(&self) -> Result<CubicWebEquation> {
        let k = self.h[0].field();
        let ya = MPoly::var(Var::Y, k).pow(self.a);
        let p = MPoly::var(Var::P, k);
        let f = self.h.iter().fold(MPoly::one(k), |acc, h| &acc * &(&p + &(&ya * h)));
        CubicWebEquation::from_implicit(&f, Var::P, (Var::X, Var::Y))
    }
}

/// Holomorphy criterion along `y = 0`: `y^a` divides
/// `d/dx[(h12 h23' - h23 h12') / (h12 h23 h31)]`.
pub fn eta_criterion(spec: &EtaWebSpec) -> Result<bool> {
    if spec.a == 0 {
        return Ok(true);
    }
    let [h12, h23, h31] = spec.differences();
    let num = &(&h12 * &h23.derivative(Var::X)) - &(&h23 * &h12.derivative(Var::X));
    let den = &(&h12 * &h23) * &h31;
    let dnum = &(&num.derivative(Var::X) * &den) - &(&num * &den.derivative(Var::X));
    let reduced = RatFn::new(dnum, den.pow(2))?;
    // the reduced denominator divides (h12 h23 h31)^2, which y does not divide
    let a = spec.a as u16;
    Ok(reduced.numerator().terms().iter().all(|(m, _)| m.exp(Var::Y) >= a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn poly(s: &str) -> MPoly {
        parse_poly(s, None).unwrap()
    }

    fn vf(a: &str, b: &str) -> AffineVectorField {
        AffineVectorField::new(poly(a), poly(b)).unwrap()
    }

    #[test]
    fn legendre_of_cubic_field() {
        let w = legendre_transform(&vf("x^3", "y^3 - 1")).unwrap();
        assert_eq!(w.slope_var(), Var::X);
        let [a0, a1, a2, a3] = w.coefficients();
        assert_eq!(a0, &poly("p^3 - p"));
        assert_eq!(a1, &poly("3*p^2*q"));
        assert_eq!(a2, &poly("3*p*q^2"));
        assert_eq!(a3, &poly("q^3 - 1"));
        assert_eq!(w.implicit(), poly("(p*x + q)^3 - 1 - p*x^3"));
    }

    #[test]
    fn radial_field_has_no_dual_web() {
        assert_eq!(legendre_transform(&vf("x", "y")).unwrap_err(), Error::DegreeTooLow(0));
    }

    #[test]
    fn constant_slope_pencils_are_flat() {
        let w = CubicWebEquation::from_implicit(&poly("p^3 - p"), Var::P, (Var::X, Var::Y)).unwrap();
        assert!(kw_curvature(&w).unwrap().is_zero());
        assert_eq!(web_discriminant(&w), poly("-4"));
    }

    #[test]
    fn exponential_pencils_are_flat() {
        let f = poly("p^3 + 3*p^2*y + 2*p*y^2");
        let w = CubicWebEquation::from_implicit(&f, Var::P, (Var::X, Var::Y)).unwrap();
        assert!(kw_curvature(&w).unwrap().is_zero());
    }

    #[test]
    fn triple_root_is_degenerate() {
        let err = CubicWebEquation::from_implicit(&poly("p^3"), Var::P, (Var::X, Var::Y)).unwrap_err();
        assert_eq!(err, Error::DegenerateWeb);
    }

    #[test]
    fn dual_curvature_matches_appendix_display() {
        let k = dual_curvature(&vf("x^3", "y^3 - 1")).unwrap();
        let num = poly("(3*p^4 + 22*p^2 - 10*q^3*p^2 - 25 + 18*q^3 + 7*q^6)*p*q^2");
        let den = poly("-3*(p^4 - 2*q^3*p^2 - 2*p^2 + q^6 + 1 - 2*q^3)^2");
        assert!(k.coeff().cross_eq(&RatFn::new(num, den).unwrap()));
        assert_eq!(k.chart_name(), "pq");
    }

    #[test]
    fn algebraic_dual_web_is_flat() {
        // H R with H = x^3 + y^3: the dual web is three pencils of lines
        let hr = vf("x*(x^3 + y^3)", "y*(x^3 + y^3)");
        assert!(dual_curvature(&hr).unwrap().is_zero());
        assert!(is_flat(&hr).unwrap());
        // H = x^3 collapses the dual cubic to q x^3, a triple root
        assert_eq!(dual_curvature(&vf("x^4", "x^3*y")).unwrap_err(), Error::DegenerateWeb);
        assert!(!is_flat(&vf("x^3", "y^3 - 1")).unwrap());
    }

    #[test]
    fn holomorphy_along_curves() {
        let k = dual_curvature(&vf("x^3", "y^3 - 1")).unwrap();
        assert!(holomorphic_along(&k, &poly("q")).unwrap());
        assert!(!holomorphic_along(&k, &poly("p^4 - 2*q^3*p^2 - 2*p^2 + q^6 + 1 - 2*q^3")).unwrap());
        assert_eq!(holomorphic_along(&k, &poly("0")).unwrap_err(), Error::ZeroPolynomial);
        let flat = dual_curvature(&vf("x*(x^3 + y^3)", "y*(x^3 + y^3)")).unwrap();
        assert!(holomorphic_along(&flat, &poly("q")).unwrap());
    }

    fn hvf(a: &str, b: &str, c: &str) -> HomogeneousVectorField {
        HomogeneousVectorField::new(poly(a), poly(b), poly(c)).unwrap()
    }

    #[test]
    fn inflection_examples() {
        assert!(inflection_divisor(&hvf("x", "y", "0")).is_zero());
        let i = inflection_divisor(&hvf("x^3", "y^3 - z^3", "0"));
        let expect = poly("3*z*x^3*(y^3 - z^3)*(y^2 - x^2)");
        assert_eq!(i, expect);
        assert_eq!(i.total_degree(), Some(9));
    }

    #[test]
    fn homogenization() {
        assert_eq!(homogenize(&vf("x^3", "y^3 - 1"), 3).unwrap(), hvf("x^3", "y^3 - z^3", "0"));
        assert_eq!(homogenize(&vf("x", "y"), 1).unwrap(), hvf("x", "y", "0"));
        let padded = homogenize(&vf("x", "y"), 2).unwrap();
        assert_eq!(padded, hvf("x*z", "y*z", "0"));
        assert!(inflection_divisor(&padded).is_zero());
        assert_eq!(homogenize(&vf("x^3", "y"), 2).unwrap_err(), Error::DegreeExceeded(2));
        assert_eq!(
            HomogeneousVectorField::new(poly("x^2"), poly("y"), poly("0")).unwrap_err(),
            Error::NonHomogeneous
        );
    }

    #[test]
    fn tangent_cones() {
        assert!(tangent_cone(&vf("x", "y")).is_zero());
        assert_eq!(tangent_cone(&vf("y", "x")), poly("y^2 - x^2"));
    }

    #[test]
    fn gauss_map() {
        let h = hvf("x^3", "y^3 - z^3", "0");
        let pt = [FieldScalar::int(1), FieldScalar::int(2), FieldScalar::int(1)];
        let line = gauss_map_point(&h, &pt).unwrap();
        let ints: Vec<String> = line.iter().map(|c| c.to_string()).collect();
        assert_eq!(ints, ["7", "-1", "-5"]);
        // the point lies on its tangent line
        let dot = line
            .iter()
            .zip(pt.iter())
            .fold(FieldScalar::int(0), |acc, (a, b)| acc.add(&a.mul(b).unwrap()).unwrap());
        assert!(dot.is_zero());
        let sing = [FieldScalar::int(0), FieldScalar::int(1), FieldScalar::int(1)];
        assert_eq!(gauss_map_point(&h, &sing).unwrap_err(), Error::SingularPoint);
        let half = [FieldScalar::ratio(1, 2), FieldScalar::int(1), FieldScalar::ratio(1, 2)];
        let l2 = gauss_map_point(&h, &half).unwrap();
        assert_eq!(l2.iter().map(|c| c.to_string()).collect::<Vec<_>>(), ["7", "-1", "-5"]);
    }

    #[test]
    fn dual_lines() {
        assert_eq!(dual_line(&FieldScalar::int(0), &FieldScalar::int(0)).unwrap(), poly("q"));
        assert_eq!(dual_line(&FieldScalar::int(1), &FieldScalar::int(2)).unwrap(), poly("q + p - 2"));
    }

    #[test]
    fn eta_examples() {
        let e = |h: [&str; 3], a| EtaWebSpec::new(poly(h[0]), poly(h[1]), poly(h[2]), a);
        assert!(eta_criterion(&e(["0", "1", "2"], 1).unwrap()).unwrap());
        assert!(!eta_criterion(&e(["0", "1", "x"], 1).unwrap()).unwrap());
        assert!(eta_criterion(&e(["0", "1", "x"], 0).unwrap()).unwrap());
        assert_eq!(e(["0", "y", "1"], 1).unwrap_err().name(), "InvariantViolated");
    }
}
