//! Multivariate gcd and resultants by subresultant remainder sequences.
//!
//! A polynomial is viewed as univariate in a main variable with coefficients
//! in the polynomial ring of the others. Contents are removed recursively.

use num_traits::Zero;

use super::{Monomial, Poly};

fn lc_in(p: &Poly, var: usize) -> Poly {
    p.coeffs_in(var).pop().unwrap_or_else(|| Poly::zero(p.arity()))
}

fn deg_in(p: &Poly, var: usize) -> i32 {
    if p.is_zero() {
        -1
    } else {
        p.degree_in(var)
    }
}

fn div_exact(a: &Poly, b: &Poly) -> Poly {
    a.exact_divide(b)
        .expect("subresultant quotient must be exact")
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b` in `var`.
fn prem(a: &Poly, b: &Poly, var: usize) -> Poly {
    let db = deg_in(b, var);
    let lb = lc_in(b, var);
    let mut r = a.clone();
    let mut steps = deg_in(a, var) - db + 1;
    while !r.is_zero() && deg_in(&r, var) >= db {
        let dr = deg_in(&r, var);
        let lr = lc_in(&r, var);
        let mut shift = Monomial::one();
        shift.0[var] = dr - db;
        r = &(&r * &lb) - &(&b.mul_monomial(&shift) * &lr);
        steps -= 1;
    }
    if steps > 0 {
        r = &r * &lb.pow(steps as u32);
    }
    r
}

/// Resultant with respect to `var`, computed without content extraction.
///
/// If one input has degree 0 in `var`, the result is that input raised to
/// the degree of the other.
pub fn resultant(f: &Poly, g: &Poly, var: usize) -> Poly {
    assert_eq!(f.arity(), g.arity(), "arity mismatch");
    let n = f.arity();
    if f.is_zero() || g.is_zero() {
        return Poly::zero(n);
    }
    assert!(f.is_ordinary() && g.is_ordinary(), "resultant needs ordinary polynomials");
    let (mut a, mut b) = (f.clone(), g.clone());
    let (da, db) = (deg_in(&a, var), deg_in(&b, var));
    let mut sign_neg = false;
    if da < db {
        std::mem::swap(&mut a, &mut b);
        sign_neg = (da * db) % 2 == 1;
    }
    if deg_in(&b, var) == 0 {
        let r = b.pow(deg_in(&a, var) as u32);
        return if sign_neg { -r } else { r };
    }
    let mut g_ = Poly::one(n);
    let mut h = Poly::one(n);
    loop {
        let (da, db) = (deg_in(&a, var), deg_in(&b, var));
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign_neg = !sign_neg;
        }
        let r = prem(&a, &b, var);
        if r.is_zero() {
            return Poly::zero(n);
        }
        a = b;
        b = div_exact(&r, &(&g_ * &h.pow(delta)));
        g_ = lc_in(&a, var);
        h = if delta == 0 {
            h
        } else {
            div_exact(&g_.pow(delta), &h.pow(delta - 1))
        };
        if deg_in(&b, var) == 0 {
            let da = deg_in(&a, var) as u32;
            let res = div_exact(&b.pow(da), &h.pow(da - 1));
            return if sign_neg { -res } else { res };
        }
    }
}

/// Monic greatest common divisor (leading coefficient 1 in graded-lex order).
/// Laurent inputs are normalized first; the monomial parts contribute their
/// componentwise minimum.
pub fn gcd_poly(f: &Poly, g: &Poly) -> Poly {
    assert_eq!(f.arity(), g.arity(), "arity mismatch");
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    let (fp, mf) = f.laurent_normalize();
    let (gp, mg) = g.laurent_normalize();
    let m = mf.meet(&mg);
    let core = if fp.is_homogeneous() && gp.is_homogeneous() {
        homogeneous_gcd(&fp, &gp)
    } else {
        gcd_rec(&fp, &gp)
    };
    core.mul_monomial(&m).monic()
}

/// gcd of several polynomials.
pub fn gcd_many(polys: &[Poly]) -> Poly {
    let mut it = polys.iter();
    let first = it.next().expect("gcd of no polynomials");
    let mut acc = first.monic();
    for p in it {
        if acc.is_constant() && !acc.is_zero() {
            break;
        }
        acc = gcd_poly(&acc, p);
    }
    acc
}

fn homogeneous_gcd(f: &Poly, g: &Poly) -> Poly {
    // Dehomogenize in the last variable that both use; the inputs are
    // coprime to every variable so the gcd is recovered by homogenizing.
    let used_f = f.used_vars();
    let used_g = g.used_vars();
    let shared = used_f.iter().rev().find(|v| used_g.contains(v)).copied();
    match shared {
        Some(v) if used_f.len() > 1 || used_g.len() > 1 => {
            let one = num_traits::One::one();
            let fd = f.eval_var(v, &one);
            let gd = g.eval_var(v, &one);
            let h = gcd_rec(&fd, &gd);
            h.homogenize(v)
        }
        _ => gcd_rec(f, g),
    }
}

fn content_in(p: &Poly, var: usize) -> Poly {
    let coeffs: Vec<Poly> = p.coeffs_in(var).into_iter().filter(|c| !c.is_zero()).collect();
    let mut acc = coeffs[0].clone();
    for c in &coeffs[1..] {
        if acc.is_constant() {
            break;
        }
        acc = gcd_rec(&acc, c);
    }
    if acc.is_constant() {
        Poly::one(p.arity())
    } else {
        acc
    }
}

/// gcd of ordinary polynomials, up to a scalar.
fn gcd_rec(f: &Poly, g: &Poly) -> Poly {
    let n = f.arity();
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    if f.is_constant() || g.is_constant() {
        return Poly::one(n);
    }
    let mc = f.monomial_content().meet(&g.monomial_content());
    if mc != Monomial::one() {
        let f1 = f.mul_monomial(&mc.inverse());
        let g1 = g.mul_monomial(&mc.inverse());
        return gcd_rec(&f1, &g1).mul_monomial(&mc);
    }
    let used_f = f.used_vars();
    let used_g = g.used_vars();
    // A variable used by only one input: the gcd lies in its content.
    if let Some(&v) = used_f.iter().find(|v| !used_g.contains(v)) {
        return gcd_rec(&content_in(f, v), g);
    }
    if let Some(&v) = used_g.iter().find(|v| !used_f.contains(v)) {
        return gcd_rec(f, &content_in(g, v));
    }
    if used_f.len() == 1 {
        let v = used_f[0];
        let uf = f.to_upoly(v).unwrap();
        let ug = g.to_upoly(v).unwrap();
        return Poly::from_upoly(n, v, &uf.gcd(&ug));
    }
    // Main variable: the one of smallest combined degree keeps the remainder
    // sequence short.
    let var = *used_f
        .iter()
        .min_by_key(|&&v| f.degree_in(v).max(g.degree_in(v)))
        .unwrap();
    let cf = content_in(f, var);
    let cg = content_in(g, var);
    let pf = div_exact(f, &cf);
    let pg = div_exact(g, &cg);
    let c = gcd_rec(&cf, &cg);
    let (mut a, mut b) = if deg_in(&pf, var) >= deg_in(&pg, var) {
        (pf, pg)
    } else {
        (pg, pf)
    };
    let mut g_ = Poly::one(n);
    let mut h = Poly::one(n);
    let prim = loop {
        let delta = (deg_in(&a, var) - deg_in(&b, var)) as u32;
        let r = prem(&a, &b, var);
        if r.is_zero() {
            break b;
        }
        if deg_in(&r, var) == 0 {
            break Poly::one(n);
        }
        a = b;
        b = div_exact(&r, &(&g_ * &h.pow(delta)));
        g_ = lc_in(&a, var);
        h = if delta == 0 {
            h
        } else {
            div_exact(&g_.pow(delta), &h.pow(delta - 1))
        };
    };
    let prim = if prim.is_constant() {
        prim
    } else {
        let cc = content_in(&prim, var);
        div_exact(&prim, &cc)
    };
    (&c * &prim).primitive_integer()
}

/// Squarefree part `f / gcd(f, f_v for each variable)`, made monic.
pub fn squarefree_part(f: &Poly) -> Poly {
    if f.is_zero() || f.is_constant() {
        return if f.is_zero() { f.clone() } else { Poly::one(f.arity()) };
    }
    let mut parts = vec![f.clone()];
    for v in f.used_vars() {
        parts.push(f.derivative(v));
    }
    let g = gcd_many(&parts);
    if g.is_constant() {
        return f.monic();
    }
    f.exact_divide(&g).expect("gcd divides").monic()
}

/// True if `f` and `g` have no nonconstant common factor.
pub fn coprime(f: &Poly, g: &Poly) -> bool {
    let h = gcd_poly(f, g);
    h.is_constant() && !h.constant_term().is_zero()
}
