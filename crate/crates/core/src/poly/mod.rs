//! Sparse exact-rational Laurent polynomials in up to five variables.
//!
//! A [`Poly`] carries an arity (2 for binary forms in `s,t`, 3 for ternary
//! forms in `x,y,z`, 5 when both sets appear) and a map from [`Monomial`] to
//! nonzero [`Rational`] coefficient. Terms are kept in graded lexicographic
//! order, so iteration, printing, and "leading coefficient" are deterministic.

mod gcd;
mod parse;
mod univariate;

pub use gcd::{coprime, gcd_many, gcd_poly, resultant, squarefree_part};
pub use parse::ParseError;
pub use univariate::UPoly;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// Exact rational number. Always reduced with a positive denominator.
pub type Rational = BigRational;

/// Largest supported number of variables.
pub const MAX_VARS: usize = 5;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Variable names for a given arity.
pub fn var_names(arity: usize) -> &'static [&'static str] {
    match arity {
        2 => &["s", "t"],
        3 => &["x", "y", "z"],
        _ => &["x", "y", "z", "s", "t"],
    }
}

/// Exponent vector. Entries beyond the owning polynomial's arity are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(pub [i32; MAX_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; MAX_VARS])
    }

    pub fn from_slice(exps: &[i32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut e = [0; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        Monomial(e)
    }

    pub fn var(index: usize) -> Self {
        let mut e = [0; MAX_VARS];
        e[index] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn exp(&self, var: usize) -> i32 {
        self.0[var]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        Monomial(e)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a -= b;
        }
        Monomial(e)
    }

    pub fn inverse(&self) -> Monomial {
        Monomial::one().div(self)
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = (*a).min(*b);
        }
        Monomial(e)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn is_ordinary(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with exact rational coefficients; negative exponents allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    arity: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

impl Poly {
    pub fn zero(arity: usize) -> Self {
        assert!((1..=MAX_VARS).contains(&arity), "unsupported arity {arity}");
        Poly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        Self::term(arity, c, Monomial::one())
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rational::one())
    }

    pub fn var(arity: usize, index: usize) -> Self {
        assert!(index < arity);
        Self::term(arity, Rational::one(), Monomial::var(index))
    }

    pub fn term(arity: usize, c: Rational, m: Monomial) -> Self {
        let mut p = Self::zero(arity);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs; like terms are merged.
    pub fn from_terms<I>(arity: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Monomial)>,
    {
        let mut p = Self::zero(arity);
        for (c, m) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Monomial::one()))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    /// Largest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Same polynomial viewed with a larger (or equal) arity.
    pub fn with_arity(&self, arity: usize) -> Result<Poly, Error> {
        if arity < self.arity {
            let used = self.used_vars();
            if used.iter().any(|&v| v >= arity) {
                return Err(Error::ArityMismatch(self.arity, arity));
            }
        }
        Ok(Poly {
            arity,
            terms: self.terms.clone(),
        })
    }

    fn check_arity(&self, other: &Poly) -> Result<(), Error> {
        if self.arity != other.arity {
            Err(Error::ArityMismatch(self.arity, other.arity))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly, Error> {
        self.check_arity(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly, Error> {
        self.check_arity(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    fn sub_unchecked(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }

    fn mul_unchecked(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.arity);
        if self.is_zero() || other.is_zero() {
            return out;
        }
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.arity);
        }
        Poly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            arity: self.arity,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut result = Poly::one(self.arity);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    /// Total degree of the leading term, `None` for zero.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Common degree of all terms if the polynomial is a (Laurent) form.
    pub fn form_degree(&self) -> Option<i64> {
        let mut degs = self.terms.keys().map(|m| m.degree());
        let d = degs.next()?;
        if degs.all(|e| e == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.form_degree().is_some()
    }

    pub fn degree_in(&self, var: usize) -> i32 {
        self.terms.keys().map(|m| m.exp(var)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, var: usize) -> i32 {
        self.terms.keys().map(|m| m.exp(var)).min().unwrap_or(0)
    }

    pub fn used_vars(&self) -> Vec<usize> {
        (0..self.arity)
            .filter(|&v| self.terms.keys().any(|m| m.exp(v) != 0))
            .collect()
    }

    pub fn is_ordinary(&self) -> bool {
        self.terms.keys().all(|m| m.is_ordinary())
    }

    /// Componentwise minimum of all exponent vectors (the monomial content).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(),
            Some(first) => it.fold(*first, |acc, m| acc.meet(m)),
        }
    }

    /// Formal partial derivative; negative exponents follow the power rule.
    pub fn derivative(&self, var: usize) -> Poly {
        let mut out = Poly::zero(self.arity);
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            let mut nm = *m;
            nm.0[var] -= 1;
            out.add_term(nm, c * rat(e as i64));
        }
        out
    }

    /// `var * d/dvar`, the toric derivative.
    pub fn toric_derivative(&self, var: usize) -> Poly {
        Poly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(var) != 0)
                .map(|(m, c)| (*m, c * rat(m.exp(var) as i64)))
                .collect(),
        }
    }

    /// Evaluates at a point (one value per variable of the arity).
    ///
    /// Panics if a negative exponent meets a zero coordinate.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.arity, "point dimension");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, x) in point.iter().enumerate() {
                let e = m.exp(v);
                if e != 0 {
                    t *= pow_rat(x, e);
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes a constant for one variable.
    pub fn eval_var(&self, var: usize, value: &Rational) -> Poly {
        let mut out = Poly::zero(self.arity);
        for (m, c) in &self.terms {
            let e = m.exp(var);
            let mut nm = *m;
            nm.0[var] = 0;
            let coeff = if e == 0 { c.clone() } else { c * pow_rat(value, e) };
            out.add_term(nm, coeff);
        }
        out
    }

    /// Replaces each variable by a polynomial (ordinary exponents only).
    pub fn compose(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.arity, "one image per variable");
        let target_arity = images.first().map(|p| p.arity).unwrap_or(self.arity);
        let mut cache: Vec<Vec<Poly>> = images
            .iter()
            .map(|p| vec![Poly::one(target_arity), p.clone()])
            .collect();
        let mut out = Poly::zero(target_arity);
        for (m, c) in &self.terms {
            assert!(m.is_ordinary(), "compose requires an ordinary polynomial");
            let mut t = Poly::constant(target_arity, c.clone());
            for v in 0..self.arity {
                let e = m.exp(v) as usize;
                if e == 0 {
                    continue;
                }
                while cache[v].len() <= e {
                    let next = cache[v].last().unwrap().mul_unchecked(&images[v]);
                    cache[v].push(next);
                }
                t = t.mul_unchecked(&cache[v][e]);
            }
            out = out.add_unchecked(&t);
        }
        out
    }

    /// Substitutes `x_i -> c_i x_i`.
    pub fn scale_vars(&self, factors: &[Rational]) -> Poly {
        assert_eq!(factors.len(), self.arity);
        let mut out = Poly::zero(self.arity);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, f) in factors.iter().enumerate() {
                let e = m.exp(v);
                if e != 0 {
                    t *= pow_rat(f, e);
                }
            }
            out.add_term(*m, t);
        }
        out
    }

    /// Homogenizes with respect to `var`: each term gets `var^(d - deg)` where
    /// `d` is the total degree.
    pub fn homogenize(&self, var: usize) -> Poly {
        let d = match self.total_degree() {
            Some(d) => d,
            None => return self.clone(),
        };
        let mut out = Poly::zero(self.arity);
        for (m, c) in &self.terms {
            let mut nm = *m;
            nm.0[var] += (d - m.degree()) as i32;
            out.add_term(nm, c.clone());
        }
        out
    }

    /// Divides every coefficient by the leading one (graded-lex order).
    pub fn monic(&self) -> Poly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Splits `self = m * f'` with `f'` an ordinary polynomial coprime to
    /// every variable.
    pub fn laurent_normalize(&self) -> (Poly, Monomial) {
        let m = self.monomial_content();
        (self.mul_monomial(&m.inverse()), m)
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    ///
    /// Laurent inputs are handled by stripping monomial contents first.
    pub fn exact_divide(&self, divisor: &Poly) -> Option<Poly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        assert_eq!(self.arity, divisor.arity, "arity mismatch");
        if self.is_zero() {
            return Some(Poly::zero(self.arity));
        }
        let (f, mf) = self.laurent_normalize();
        let (g, mg) = divisor.laurent_normalize();
        let q = f.divide_ordinary(&g)?;
        Some(q.mul_monomial(&mf.div(&mg)))
    }

    fn divide_ordinary(&self, divisor: &Poly) -> Option<Poly> {
        if divisor.is_constant() {
            return Some(self.scale(&divisor.constant_term().recip()));
        }
        let (lm, lc) = divisor.leading_term().map(|(m, c)| (*m, c.clone()))?;
        let lc_inv = lc.recip();
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.arity);
        while let Some((m, c)) = rem.leading_term().map(|(m, c)| (*m, c.clone())) {
            if !lm.divides(&m) {
                return None;
            }
            let qm = m.div(&lm);
            let qc = c * &lc_inv;
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&qm), -(dc * &qc));
            }
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Remainder of multivariate division by a single polynomial in graded-lex
    /// order. Since a principal ideal's generator is a Gröbner basis, the
    /// remainder is the unique normal form modulo `divisor`.
    pub fn normal_form(&self, divisor: &Poly) -> Poly {
        assert!(!divisor.is_zero());
        let (lm, lc) = divisor.leading_term().map(|(m, c)| (*m, c.clone())).unwrap();
        let lc_inv = lc.recip();
        let mut rem = self.clone();
        let mut out = Poly::zero(self.arity);
        while let Some((m, c)) = rem.leading_term().map(|(m, c)| (*m, c.clone())) {
            if lm.divides(&m) {
                let qm = m.div(&lm);
                let qc = c * &lc_inv;
                for (dm, dc) in &divisor.terms {
                    rem.add_term(dm.mul(&qm), -(dc * &qc));
                }
            } else {
                rem.terms.remove(&m);
                out.add_term(m, c);
            }
        }
        out
    }

    /// Coefficients with respect to `var`, indexed by exponent.
    /// Requires nonnegative exponents in `var`.
    pub fn coeffs_in(&self, var: usize) -> Vec<Poly> {
        let deg = self.degree_in(var).max(0) as usize;
        let mut out = vec![Poly::zero(self.arity); deg + 1];
        if self.is_zero() {
            return Vec::new();
        }
        for (m, c) in &self.terms {
            let e = m.exp(var);
            assert!(e >= 0, "negative exponent in main variable");
            let mut nm = *m;
            nm.0[var] = 0;
            out[e as usize].add_term(nm, c.clone());
        }
        out
    }

    /// Inverse of [`Poly::coeffs_in`].
    pub fn from_coeffs_in(arity: usize, var: usize, coeffs: &[Poly]) -> Poly {
        let mut out = Poly::zero(arity);
        for (e, c) in coeffs.iter().enumerate() {
            for (m, v) in &c.terms {
                let mut nm = *m;
                nm.0[var] += e as i32;
                out.add_term(nm, v.clone());
            }
        }
        out
    }

    /// Converts a polynomial in only `var` to a dense univariate one.
    pub fn to_upoly(&self, var: usize) -> Option<UPoly> {
        let mut coeffs = Vec::new();
        for (m, c) in &self.terms {
            for v in 0..self.arity {
                if v != var && m.exp(v) != 0 {
                    return None;
                }
            }
            let e = m.exp(var);
            if e < 0 {
                return None;
            }
            let e = e as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Rational::zero());
            }
            coeffs[e] = c.clone();
        }
        Some(UPoly::new(coeffs))
    }

    pub fn from_upoly(arity: usize, var: usize, p: &UPoly) -> Poly {
        let mut out = Poly::zero(arity);
        for (e, c) in p.coeffs().iter().enumerate() {
            let mut m = Monomial::one();
            m.0[var] = e as i32;
            out.add_term(m, c.clone());
        }
        out
    }

    /// Applies the monomial substitution `t^a -> t^(M a)`.
    pub fn substitute_monomial(&self, matrix: &MonomialMatrix) -> Poly {
        assert_eq!(self.arity, 3, "monomial matrices act on x,y,z");
        let mut out = Poly::zero(3);
        for (m, c) in &self.terms {
            out.add_term(matrix.apply(m), c.clone());
        }
        out
    }

    /// Multiplies through by the least common denominator and divides by the
    /// integer content, giving a primitive integer polynomial with positive
    /// leading coefficient.
    pub fn primitive_integer(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&lcm / c.denom());
            g = g.gcd(&n);
        }
        let mut factor = Rational::new(lcm, g);
        if self.leading_coeff().is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

/// Integer power of a rational; negative exponents invert.
pub fn pow_rat(x: &Rational, e: i32) -> Rational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        self.add_unchecked(rhs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        self.sub_unchecked(rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        self.mul_unchecked(rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Arithmetic operation selector for [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Pow(u32),
    Neg,
}

/// Folds `op` over the operands: sum or product of all, power or negation of the first.
pub fn poly_arith(op: ArithOp, operands: &[Poly]) -> Result<Poly, Error> {
    let first = operands.first().ok_or(Error::EmptyOperands)?;
    for p in operands {
        first.check_arity(p)?;
    }
    Ok(match op {
        ArithOp::Add => operands[1..]
            .iter()
            .fold(first.clone(), |acc, p| acc.add_unchecked(p)),
        ArithOp::Mul => operands[1..]
            .iter()
            .fold(first.clone(), |acc, p| acc.mul_unchecked(p)),
        ArithOp::Pow(n) => first.pow(n),
        ArithOp::Neg => -first,
    })
}

/// The matrix with columns `alpha, beta, gamma` of a monomial map
/// `(x, y, z) -> (t^alpha, t^beta, t^gamma)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonomialMatrix {
    pub columns: [[i64; 3]; 3],
}

impl MonomialMatrix {
    pub fn new(alpha: [i64; 3], beta: [i64; 3], gamma: [i64; 3]) -> Self {
        MonomialMatrix {
            columns: [alpha, beta, gamma],
        }
    }

    pub fn identity() -> Self {
        Self::new([1, 0, 0], [0, 1, 0], [0, 0, 1])
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Row `i`, column `j` entry.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.columns[j][i]
    }

    pub fn apply(&self, m: &Monomial) -> Monomial {
        let mut out = [0i32; MAX_VARS];
        for (i, slot) in out.iter_mut().take(3).enumerate() {
            let v: i64 = (0..3).map(|j| self.entry(i, j) * m.exp(j) as i64).sum();
            *slot = i32::try_from(v).expect("exponent overflow");
        }
        Monomial(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn distributivity_example() {
        assert_eq!(&p("x+z") * &p("y+z"), p("x*y+x*z+y*z+z^2"));
    }

    #[test]
    fn square_of_linear_form() {
        let sq = poly_arith(ArithOp::Pow(2), &[p("x+y+z")]).unwrap();
        assert_eq!(sq, p("x^2+y^2+z^2+2*x*y+2*x*z+2*y*z"));
    }

    #[test]
    fn arith_rejects_arity_mismatch() {
        let a = p("x+y");
        let b = p("s+t");
        assert!(matches!(
            poly_arith(ArithOp::Add, &[a, b]),
            Err(Error::ArityMismatch(3, 2))
        ));
    }

    #[test]
    fn derivative_basic_and_laurent() {
        assert_eq!(p("x^2*y").derivative(0), p("2*x*y"));
        assert_eq!(p("x^-2*y").derivative(0), p("-2*x^-3*y"));
    }

    #[test]
    fn euler_relation_for_cube() {
        let f = p("(x+y+z)^3");
        let euler = &(&f.toric_derivative(0) + &f.toric_derivative(1)) + &f.toric_derivative(2);
        assert_eq!(euler, f.scale(&rat(3)));
    }

    #[test]
    fn exact_divide_cases() {
        assert_eq!(p("x^2-z^2").exact_divide(&p("x+z")), Some(p("x-z")));
        let f = p("(x+z)^3*(y+z)^2");
        let g = p("(x+z)^2*(y+z)");
        assert_eq!(f.exact_divide(&g), Some(p("(x+z)*(y+z)")));
        assert_eq!(p("x+y").exact_divide(&p("x+z")), None);
    }

    #[test]
    fn laurent_normalize_examples() {
        let (f, m) = p("x^-1*y + x^-1*y*z").laurent_normalize();
        assert_eq!(f, p("1+z"));
        assert_eq!(m, Monomial::from_slice(&[-1, 1, 0]));
        let (f, m) = p("x^2*y").laurent_normalize();
        assert_eq!(f, p("1"));
        assert_eq!(m, Monomial::from_slice(&[2, 1, 0]));
    }

    #[test]
    fn laurent_quadric_times_monomial() {
        let laurent = p("y^-1*z^-1 + x^-2*y*z^-1 + x^-2*y^-1*z - 2*(x^-1*z^-1 + x^-1*y^-1 + x^-2)");
        let restored = laurent.mul_monomial(&Monomial::from_slice(&[2, 1, 1]));
        assert_eq!(restored, p("x^2+y^2+z^2-2*x*y-2*x*z-2*y*z"));
        let (f, _) = laurent.laurent_normalize();
        assert_eq!(f, restored);
    }

    #[test]
    fn monomial_substitution_examples() {
        let f = p("3*x^2*y - z");
        assert_eq!(f.substitute_monomial(&MonomialMatrix::identity()), f);
        let m = MonomialMatrix::new([2, 0, 0], [0, 1, 1], [1, 0, 1]);
        assert_eq!(p("x*y*z").substitute_monomial(&m), p("x^3*y*z^2"));
    }

    #[test]
    fn normal_form_is_remainder() {
        let g = p("x+z");
        let f = p("x*y + z*y + x^2");
        // x*y + z*y = y*(x+z); x^2 = (x+z)(x-z) + z^2
        assert_eq!(f.normal_form(&g), p("z^2"));
    }
}
