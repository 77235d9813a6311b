//! Multivariate GCD by recursive subresultant remainder sequences.
//!
//! Over Q the heuristic integer GCD is tried first; the remainder sequence is
//! the fallback and the only method over quadratic fields.
//!
//! The polynomial is viewed as univariate in a main variable with coefficients
//! in the remaining ones; contents are peeled off recursively and the primitive
//! parts go through the subresultant PRS. With a single variable left the
//! coefficient ring is the field itself and plain Euclid is used.

use super::{join_fields, MPoly, Monomial, Var, NVARS};
use crate::field::{Coeff, Field, FieldSpec};

pub(super) fn gcd(f: &MPoly, g: &MPoly) -> MPoly {
    let field = join_fields(f.field(), g.field());
    if f.is_zero() {
        return g.monic().in_field(&field);
    }
    if g.is_zero() {
        return f.monic().in_field(&field);
    }
    if f.is_constant() || g.is_constant() {
        return MPoly::one(&field);
    }
    if f.len() == 1 {
        return monomial_gcd(&f.terms()[0].0, g, &field);
    }
    if g.len() == 1 {
        return monomial_gcd(&g.terms()[0].0, f, &field);
    }
    // A variable present in only one argument can be eliminated through the content.
    for v in Var::ALL {
        match (f.contains_var(v), g.contains_var(v)) {
            (true, false) => return gcd(&content(f, v), g),
            (false, true) => return gcd(f, &content(g, v)),
            _ => {}
        }
    }
    let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
    if large.is_divisible_by(small) {
        return small.monic().in_field(&field);
    }
    if !field.is_quadratic() {
        if let Some(h) = super::heuristic::gcd(&f.clear_denominators(), &g.clear_denominators()) {
            return h.monic().in_field(&field);
        }
    }
    let vars = f.vars();
    if vars.len() == 1 {
        return univariate_gcd(f, g, vars[0], &field);
    }
    let main = most_frequent_var(f, g, &vars);

    let fc = f.coefficients_in(main);
    let gc = g.coefficients_in(main);
    let cf = content_of(&fc, &field);
    let cg = content_of(&gc, &field);
    let c = gcd(&cf, &cg);
    let pf = divide_all(fc, &cf);
    let pg = divide_all(gc, &cg);
    let s = if pf.len() >= pg.len() {
        subresultant(pf, pg, &field)
    } else {
        subresultant(pg, pf, &field)
    };
    let cs = content_of(&s, &field);
    let s = divide_all(s, &cs);
    let h = MPoly::from_coefficients_in(main, &s, &field);
    (&h * &c).monic()
}

fn most_frequent_var(f: &MPoly, g: &MPoly, vars: &[Var]) -> Var {
    let mut counts = [0usize; NVARS];
    for (m, _) in f.terms().iter().chain(g.terms()) {
        for &v in vars {
            if m.exp(v) > 0 {
                counts[v.index()] += 1;
            }
        }
    }
    // ties go to the earlier variable
    let mut best = vars[0];
    for &v in vars {
        if counts[v.index()] > counts[best.index()] {
            best = v;
        }
    }
    best
}

fn monomial_gcd(m: &Monomial, g: &MPoly, field: &Field) -> MPoly {
    let mut exps = *m.exps();
    for (gm, _) in g.terms() {
        for (e, ge) in exps.iter_mut().zip(gm.exps()) {
            *e = (*e).min(*ge);
        }
    }
    MPoly::term(Monomial::new(exps), Coeff::one(), field)
}

/// Content of `f` viewed as a polynomial in `v`.
fn content(f: &MPoly, v: Var) -> MPoly {
    content_of(&f.coefficients_in(v), f.field())
}

fn content_of(coeffs: &[MPoly], field: &Field) -> MPoly {
    let mut nonzero: Vec<&MPoly> = coeffs.iter().filter(|c| !c.is_zero()).collect();
    nonzero.sort_by_key(|c| c.len());
    let mut acc = MPoly::zero(field);
    for c in nonzero {
        acc = gcd(&acc, c);
        if acc.is_constant() {
            return MPoly::one(field);
        }
    }
    acc
}

fn divide_all(coeffs: Vec<MPoly>, d: &MPoly) -> Vec<MPoly> {
    if d.is_one() {
        return coeffs;
    }
    coeffs
        .into_iter()
        .map(|c| c.try_div(d).expect("content divides every coefficient"))
        .collect()
}

fn trim(r: &mut Vec<MPoly>) {
    while r.last().is_some_and(|c| c.is_zero()) {
        r.pop();
    }
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) a mod b`.
fn prem(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let db = b.len() - 1;
    let lcb = &b[db];
    let mut r = a.to_vec();
    let mut e = a.len() - b.len() + 1;
    trim(&mut r);
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            if !c.is_zero() {
                *c = &*c * lcb;
            }
        }
        let shift = dr - db;
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                r[j + shift] = &r[j + shift] - &(&lr * bj);
            }
        }
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let m = lcb.pow(e as u32);
        for c in r.iter_mut() {
            *c = &*c * &m;
        }
    }
    r
}

/// Last nonzero element of the subresultant PRS of `a`, `b` (deg a >= deg b >= 1).
fn subresultant(mut a: Vec<MPoly>, mut b: Vec<MPoly>, field: &Field) -> Vec<MPoly> {
    let mut g = MPoly::one(field);
    let mut h = MPoly::one(field);
    loop {
        let delta = (a.len() - b.len()) as u32;
        let r = prem(&a, &b);
        if r.is_empty() {
            return b;
        }
        if r.len() == 1 {
            return vec![MPoly::one(field)];
        }
        let divisor = &g * &h.pow(delta);
        a = std::mem::replace(&mut b, divide_all(r, &divisor));
        g = a.last().expect("nonzero").clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => g.pow(d).try_div(&h.pow(d - 1)).expect("subresultant division is exact"),
        };
    }
}

fn univariate_gcd(f: &MPoly, g: &MPoly, v: Var, field: &Field) -> MPoly {
    let to_dense = |p: &MPoly| -> Vec<Coeff> {
        let mut d = vec![Coeff::zero(); p.degree_in(v) as usize + 1];
        for (m, c) in p.terms() {
            d[m.exp(v) as usize] = c.clone();
        }
        d
    };
    let mut a = to_dense(f);
    let mut b = to_dense(g);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = dense_rem(&a, &b, field);
        a = b;
        b = r;
    }
    let terms = a.into_iter().enumerate().map(|(k, c)| (Monomial::var(v, k as u16), c));
    MPoly::from_terms(field, terms).monic()
}

fn dense_rem(a: &[Coeff], b: &[Coeff], field: &FieldSpec) -> Vec<Coeff> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = b[db].inv(field).expect("leading coefficient is nonzero");
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = r[dr].mul(&inv, field);
        if !factor.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[j + dr - db] = r[j + dr - db].sub(&bj.mul(&factor, field));
            }
        }
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn v(x: Var) -> MPoly {
        MPoly::var(x, &FieldSpec::rationals())
    }

    fn c(n: i64) -> MPoly {
        MPoly::int(n, &FieldSpec::rationals())
    }

    #[test]
    fn constructed_common_factors() {
        let (x, y) = (v(Var::X), v(Var::Y));
        let f = &x.pow(2) - &y.pow(2);
        assert_eq!(f.gcd(&(&x - &y)), (&x - &y).monic());
        let a = &(&x + &y) * &(&x - &c(1));
        let b = &(&x + &y) * &(&y - &c(1));
        let g = a.gcd(&b);
        assert_eq!(g, &x + &y);
        assert!(a.is_divisible_by(&g) && b.is_divisible_by(&g));
    }

    #[test]
    fn gcd_with_zero() {
        let x = v(Var::X);
        let f = &c(3) * &(&x + &c(2));
        assert_eq!(f.gcd(&MPoly::zero(&FieldSpec::rationals())), &x + &c(2));
        let z = MPoly::zero(&FieldSpec::rationals());
        assert!(z.gcd(&z).is_zero());
    }

    #[test]
    fn trivariate() {
        let (x, y, z) = (v(Var::X), v(Var::Y), v(Var::Z));
        let h = &(&(&x * &y) + &z.pow(2)) - &c(3);
        let f = &h * &(&x.pow(2) + &(&y * &z));
        let g = &h * &(&(&x * &z) - &y.pow(3));
        assert_eq!(f.gcd(&g), h.monic());
        let coprime = (&x.pow(2) + &(&y * &z)).gcd(&(&(&x * &z) - &y.pow(3)));
        assert!(coprime.is_one());
    }

    #[test]
    fn over_quadratic_field() {
        let k = FieldSpec::eisenstein();
        let x = MPoly::var(Var::X, &k);
        let y = MPoly::var(Var::Y, &k);
        let th = MPoly::constant(Coeff::theta(), &k);
        let h = &y - &(&th * &x);
        let f = &h * &(&x + &y);
        let g = &h * &(&x - &MPoly::one(&k));
        assert_eq!(f.gcd(&g), h.monic());
    }

    #[test]
    fn monomial_gcds() {
        let (x, y) = (v(Var::X), v(Var::Y));
        let f = &(&x.pow(3) * &y) + &(&x.pow(2) * &y.pow(2));
        assert_eq!(f.gcd(&(&x.pow(5) * &y.pow(5))), &x.pow(2) * &y);
    }
}
