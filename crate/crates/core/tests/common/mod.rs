//! Shared generators and independent oracles for the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use webflat::field::{Coeff, Field, FieldSpec, Rational};
use webflat::parse::parse_poly;
use webflat::poly::Monomial;
use webflat::web::AffineVectorField;
use webflat::{MPoly, Var};

pub fn q() -> Field {
    FieldSpec::rationals()
}

pub fn poly(s: &str) -> MPoly {
    parse_poly(s, None).unwrap()
}

pub fn vf(a: &str, b: &str) -> AffineVectorField {
    AffineVectorField::new(poly(a), poly(b)).unwrap()
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All exponent vectors in `vars` of total degree exactly `d`.
pub fn monomials_of_degree(vars: &[Var], d: u32) -> Vec<Monomial> {
    fn go(vars: &[Var], d: u32, acc: &mut [u16; 6], out: &mut Vec<Monomial>) {
        match vars {
            [] => {}
            [last] => {
                acc[last.index()] = d as u16;
                out.push(Monomial::new(*acc));
                acc[last.index()] = 0;
            }
            [first, rest @ ..] => {
                for e in 0..=d {
                    acc[first.index()] = e as u16;
                    go(rest, d - e, acc, out);
                }
                acc[first.index()] = 0;
            }
        }
    }
    let mut out = Vec::new();
    go(vars, d, &mut [0; 6], &mut out);
    out
}

/// Random polynomial with each monomial of degree in `degs` present with
/// probability `density` and an integer coefficient in `[-c, c]`.
pub fn random_poly(r: &mut impl Rng, vars: &[Var], degs: std::ops::RangeInclusive<u32>, density: f64, c: i64) -> MPoly {
    let mut terms = Vec::new();
    for d in degs {
        for m in monomials_of_degree(vars, d) {
            if r.gen_bool(density) {
                terms.push((m, Coeff::from_int(r.gen_range(-c..=c))));
            }
        }
    }
    MPoly::from_terms(&q(), terms)
}

pub fn random_homogeneous(r: &mut impl Rng, vars: &[Var], d: u32, c: i64) -> MPoly {
    loop {
        let p = random_poly(r, vars, d..=d, 0.8, c);
        if !p.is_zero() {
            return p;
        }
    }
}

// ---------------------------------------------------------------- proptest

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

pub fn coeff_in(field: Field) -> BoxedStrategy<Coeff> {
    if field.is_quadratic() {
        (small_rational(), small_rational()).prop_map(|(a, b)| Coeff::new(a, b)).boxed()
    } else {
        small_rational().prop_map(Coeff::from_rational).boxed()
    }
}

/// Polynomials in `x, y, z` of total degree at most 3 with up to 5 terms.
pub fn poly_in(field: Field) -> impl Strategy<Value = MPoly> {
    let f2 = field.clone();
    prop::collection::vec(((0u16..=3, 0u16..=3, 0u16..=2), coeff_in(field)), 0..=5).prop_map(move |ts| {
        let terms = ts.into_iter().filter(|((a, b, c), _)| a + b + c <= 3).map(|((a, b, c), k)| {
            (Monomial::new([a, b, c, 0, 0, 0]), k)
        });
        MPoly::from_terms(&f2, terms)
    })
}

pub fn rational_poly() -> impl Strategy<Value = MPoly> {
    poly_in(q())
}

// ---------------------------------------------------------------- oracles

/// Exact evaluation by direct term expansion over the rationals, independent
/// of the library's substitution code.
pub fn eval_rational(p: &MPoly, pt: &[Rational; 6]) -> Rational {
    assert!(!p.field().is_quadratic());
    let mut sum = Rational::zero();
    for (m, c) in p.terms() {
        let mut t = c.rational_part().clone();
        for v in Var::ALL {
            for _ in 0..m.exp(v) {
                t *= &pt[v.index()];
            }
        }
        sum += t;
    }
    sum
}

/// Leibniz determinant over permutations.
pub fn leibniz_det(m: &[Vec<MPoly>]) -> MPoly {
    let n = m.len();
    let field = m[0][0].field().clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = MPoly::zero(&field);
    permute(&mut perm, 0, &mut |p| {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let prod = (0..n).fold(MPoly::one(&field), |acc, i| &acc * &m[i][p[i]]);
        total = if inversions % 2 == 0 { &total + &prod } else { &total - &prod };
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// Naive dense product of two univariate coefficient vectors.
pub fn dense_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

// ---------------------------------------------------------------- float jets

/// Second-order jet in two variables: value and partials up to order 2.
#[derive(Clone, Copy, Debug, Default)]
pub struct Jet {
    pub v: f64,
    pub dx: f64,
    pub dy: f64,
    pub dxx: f64,
    pub dxy: f64,
    pub dyy: f64,
}

impl Jet {
    pub fn c(v: f64) -> Jet {
        Jet { v, ..Default::default() }
    }
    pub fn x(v: f64) -> Jet {
        Jet { v, dx: 1.0, ..Default::default() }
    }
    pub fn y(v: f64) -> Jet {
        Jet { v, dy: 1.0, ..Default::default() }
    }
    /// Partial in x; the result is only valid to first order.
    pub fn ddx(self) -> Jet {
        Jet { v: self.dx, dx: self.dxx, dy: self.dxy, ..Default::default() }
    }
    pub fn ddy(self) -> Jet {
        Jet { v: self.dy, dx: self.dxy, dy: self.dyy, ..Default::default() }
    }
}

impl std::ops::Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        Jet {
            v: self.v + o.v,
            dx: self.dx + o.dx,
            dy: self.dy + o.dy,
            dxx: self.dxx + o.dxx,
            dxy: self.dxy + o.dxy,
            dyy: self.dyy + o.dyy,
        }
    }
}

impl std::ops::Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet { v: -self.v, dx: -self.dx, dy: -self.dy, dxx: -self.dxx, dxy: -self.dxy, dyy: -self.dyy }
    }
}

impl std::ops::Sub for Jet {
    type Output = Jet;
    fn sub(self, o: Jet) -> Jet {
        self + (-o)
    }
}

impl std::ops::Mul for Jet {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        Jet {
            v: self.v * o.v,
            dx: self.dx * o.v + self.v * o.dx,
            dy: self.dy * o.v + self.v * o.dy,
            dxx: self.dxx * o.v + 2.0 * self.dx * o.dx + self.v * o.dxx,
            dxy: self.dxy * o.v + self.dx * o.dy + self.dy * o.dx + self.v * o.dxy,
            dyy: self.dyy * o.v + 2.0 * self.dy * o.dy + self.v * o.dyy,
        }
    }
}

/// Polynomial in the slope with jet coefficients, index = power.
pub type SlopePoly = Vec<Jet>;

pub fn sp_add(a: &SlopePoly, b: &SlopePoly) -> SlopePoly {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| a.get(i).copied().unwrap_or_default() + b.get(i).copied().unwrap_or_default())
        .collect()
}

pub fn sp_mul(a: &SlopePoly, b: &SlopePoly) -> SlopePoly {
    let mut out = vec![Jet::default(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j] + *x * *y;
        }
    }
    out
}

fn det5(m: &[[Jet; 5]; 5]) -> Jet {
    let mut perm = vec![0, 1, 2, 3, 4];
    let mut total = Jet::default();
    permute(&mut perm, 0, &mut |p| {
        let inv = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let prod = (0..5).fold(Jet::c(1.0), |acc, i| acc * m[i][p[i]]);
        total = if inv % 2 == 0 { total + prod } else { total - prod };
    });
    total
}

/// Floating rerun of the curvature algorithm on jets. `coeffs` are the
/// coefficients `[a0, a1, a2, a3]` of `s^3 .. s^0` at the sample point.
/// Returns the curvature and the resultant there.
pub fn float_curvature(coeffs: [Jet; 4]) -> (f64, f64) {
    let [a0, a1, a2, a3] = coeffs;
    let z = Jet::default();
    let k = |n: f64| Jet::c(n);
    let r = det5(&[
        [a0, a1, a2, a3, z],
        [z, a0, a1, a2, a3],
        [k(3.0) * a0, k(2.0) * a1, a2, z, z],
        [z, k(3.0) * a0, k(2.0) * a1, a2, z],
        [z, z, k(3.0) * a0, k(2.0) * a1, a2],
    ]);
    let alpha0 = [
        a0.ddy(),
        a0.ddx() + a1.ddy(),
        a1.ddx() + a2.ddy(),
        a2.ddx() + a3.ddy(),
        a3.ddx(),
    ];
    let tail = [
        [-a0, z, a2, k(2.0) * a3, z],
        [z, k(-2.0) * a0, -a1, z, a3],
        [z, z, k(-3.0) * a0, k(-2.0) * a1, -a2],
    ];
    let alpha = |second: [Jet; 5]| det5(&[alpha0, second, tail[0], tail[1], tail[2]]);
    let alpha1 = alpha([a0, a1, a2, a3, z]);
    let alpha2 = alpha([z, a0, a1, a2, a3]);
    // d/dx(alpha2 / R) + d/dy(alpha1 / R)
    let k = (alpha2.dx * r.v - alpha2.v * r.dx) / (r.v * r.v) + (alpha1.dy * r.v - alpha1.v * r.dy) / (r.v * r.v);
    (k, r.v)
}

/// Evaluates a reduced curvature `num / den` in floats at `(s, t)` of its chart.
pub fn eval_ratfn(k: &webflat::RatFn, chart: (Var, Var), s: f64, t: f64) -> f64 {
    let pt = [(chart.0, Complex64::new(s, 0.0)), (chart.1, Complex64::new(t, 0.0))];
    let n = k.numerator().evaluate_float(&pt, None).unwrap();
    let d = k.denominator().evaluate_float(&pt, None).unwrap();
    (n / d).re
}

