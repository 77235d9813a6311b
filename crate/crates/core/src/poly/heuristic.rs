//! Heuristic GCD for polynomials with integer coefficients.
//!
//! Each variable in turn is evaluated at a large integer, the GCD of the images
//! is computed recursively and lifted back by balanced radix expansion. A
//! candidate is accepted only if it divides both inputs, so a `None` result
//! just means the caller should use the subresultant algorithm instead.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{MPoly, Monomial, Var};
use crate::field::{Coeff, Field, Rational};

const ATTEMPTS: usize = 6;

/// GCD of two nonzero polynomials with integral coefficients over Q, or `None`
/// when the heuristic does not succeed.
pub(super) fn gcd(f: &MPoly, g: &MPoly) -> Option<MPoly> {
    let mut vars = f.vars();
    for v in g.vars() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    rec(f, g, &vars)
}

fn int(c: &Coeff) -> BigInt {
    c.rational_part().to_integer()
}

fn from_int(n: BigInt) -> Coeff {
    Coeff::from_rational(Rational::from_integer(n))
}

/// Integer content (positive) and primitive part.
fn primitive(f: &MPoly) -> (BigInt, MPoly) {
    let c = f.terms().iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(&int(c)));
    if c.is_one() {
        return (c, f.clone());
    }
    let inv = Coeff::from_rational(Rational::new(BigInt::one(), c.clone()));
    (c, f.scale(&inv))
}

fn max_norm(f: &MPoly) -> BigInt {
    f.terms().iter().map(|(_, c)| int(c).abs()).max().unwrap_or_default()
}

fn constant(n: BigInt, field: &Field) -> MPoly {
    MPoly::constant(from_int(n), field)
}

fn rec(f: &MPoly, g: &MPoly, vars: &[Var]) -> Option<MPoly> {
    let field = f.field().clone();
    let (cf, f) = primitive(f);
    let (cg, g) = primitive(g);
    let cont = cf.gcd(&cg);
    if f.is_constant() || g.is_constant() {
        return Some(constant(cont, &field));
    }
    let Some((&v, rest)) = vars.split_last() else {
        return Some(constant(cont, &field));
    };
    if !f.contains_var(v) && !g.contains_var(v) {
        return rec(&f, &g, rest).map(|h| h.scale(&from_int(cont)));
    }
    let (nf, ng) = (max_norm(&f), max_norm(&g));
    let b: BigInt = BigInt::from(2) * nf.clone().min(ng.clone()) + 29;
    let lc = |p: &MPoly| int(&p.leading_coeff()).abs();
    let mut xi = (b.clone().min(BigInt::from(99) * b.sqrt()))
        .max(BigInt::from(2) * (&nf / lc(&f)).min(&ng / lc(&g)) + 4);
    for _ in 0..ATTEMPTS {
        let ff = eval(&f, v, &xi);
        let gg = eval(&g, v, &xi);
        if !ff.is_zero() && !gg.is_zero() {
            if let Some(h) = rec(&ff, &gg, rest) {
                let h = interpolate(&h, v, &xi);
                if !h.is_zero() {
                    let (_, h) = primitive(&h);
                    if f.is_divisible_by(&h) && g.is_divisible_by(&h) {
                        return Some(h.scale(&from_int(cont)));
                    }
                }
            }
        }
        xi = &xi * 73794 * xi.sqrt().sqrt() / 27011;
    }
    None
}

/// `f` with `v` replaced by the integer `xi`.
fn eval(f: &MPoly, v: Var, xi: &BigInt) -> MPoly {
    let deg = f.degree_in(v) as usize;
    let mut pows = Vec::with_capacity(deg + 1);
    pows.push(BigInt::one());
    for i in 1..=deg {
        let next = &pows[i - 1] * xi;
        pows.push(next);
    }
    let terms = f.terms().iter().map(|(m, c)| {
        let e = m.exp(v) as usize;
        (m.with_exp(v, 0), from_int(int(c) * &pows[e]))
    });
    MPoly::from_terms(f.field(), terms)
}

/// Recovers the polynomial in `v` whose value at `xi` is `h`, reading each
/// coefficient in balanced base `xi`.
fn interpolate(h: &MPoly, v: Var, xi: &BigInt) -> MPoly {
    let field = h.field().clone();
    let half = xi / 2;
    let mut cur: Vec<(Monomial, BigInt)> = h.terms().iter().map(|(m, c)| (*m, int(c))).collect();
    let mut out: Vec<(Monomial, Coeff)> = Vec::new();
    let mut power: u16 = 0;
    while !cur.is_empty() {
        let mut next = Vec::with_capacity(cur.len());
        for (m, c) in cur {
            let mut digit = c.mod_floor(xi);
            if digit > half {
                digit -= xi;
            }
            let rest = (&c - &digit) / xi;
            if !digit.is_zero() {
                out.push((m.with_exp(v, power), from_int(digit)));
            }
            if !rest.is_zero() {
                next.push((m, rest));
            }
        }
        cur = next;
        power += 1;
    }
    let p = MPoly::from_terms(&field, out);
    if p.leading_coeff().rational_part().is_negative() {
        -&p
    } else {
        p
    }
}
