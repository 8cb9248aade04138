//! Toric Bézier patches on lattice polygons: facet functions, blending
//! functions, patch and tautological maps, the associated form, and the
//! linear-precision reparameterization.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::families::FamilySpec;
use crate::poly::{rat, Monomial, Poly, Rational};
use crate::Error;

/// `h(s, t) = normal . (s, t) + offset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Facet {
    pub normal: (i64, i64),
    pub offset: i64,
}

impl Facet {
    pub fn eval(&self, p: (i64, i64)) -> i64 {
        self.normal.0 * p.0 + self.normal.1 * p.1 + self.offset
    }

    pub fn eval_rat(&self, s: &Rational, t: &Rational) -> Rational {
        rat(self.normal.0) * s + rat(self.normal.1) * t + rat(self.offset)
    }

    pub fn eval_f64(&self, s: f64, t: f64) -> f64 {
        self.normal.0 as f64 * s + self.normal.1 as f64 * t + self.offset as f64
    }

    /// The facet function as a polynomial in `s, t`.
    pub fn poly(&self) -> Poly {
        Poly::from_terms(
            2,
            [
                (rat(self.normal.0), Monomial::from_slice(&[1, 0])),
                (rat(self.normal.1), Monomial::from_slice(&[0, 1])),
                (rat(self.offset), Monomial::one()),
            ],
        )
    }
}

/// Lattice points with weights and the inequality presentation of the polygon.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticePatch {
    pub points: Vec<(i64, i64)>,
    pub facets: Vec<Facet>,
    pub weights: Vec<Rational>,
}

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

impl LatticePatch {
    pub fn new(points: Vec<(i64, i64)>, facets: Vec<Facet>, weights: Vec<Rational>) -> Result<Self, Error> {
        if points.len() != weights.len() {
            return Err(Error::InvalidSpec("one weight per point".into()));
        }
        if weights.iter().any(|w| !w.is_positive()) {
            return Err(Error::InvalidSpec("weights must be positive".into()));
        }
        for f in &facets {
            if f.normal.0.gcd(&f.normal.1) != 1 {
                return Err(Error::InvalidSpec("facet normals must be primitive".into()));
            }
            if points.iter().any(|&p| f.eval(p) < 0) {
                return Err(Error::InvalidSpec("point violates a facet inequality".into()));
            }
        }
        Ok(LatticePatch {
            points,
            facets,
            weights,
        })
    }

    /// Bézier triangle of degree `d` with multinomial weights.
    pub fn triangle(d: u32) -> Self {
        let d = d as i64;
        let mut points = Vec::new();
        let mut weights = Vec::new();
        for j in 0..=d {
            for i in 0..=d - j {
                points.push((i, j));
                let w = factorial(d) / (factorial(i) * factorial(j) * factorial(d - i - j));
                weights.push(Rational::from_integer(w));
            }
        }
        let facets = vec![
            Facet { normal: (1, 0), offset: 0 },
            Facet { normal: (0, 1), offset: 0 },
            Facet { normal: (-1, -1), offset: d },
        ];
        LatticePatch { points, facets, weights }
    }

    /// Tensor product patch on `[0,a] x [0,b]`, weights `C(a,i) C(b,j)`.
    pub fn tensor(a: u32, b: u32) -> Self {
        let (a, b) = (a as i64, b as i64);
        let mut points = Vec::new();
        let mut weights = Vec::new();
        for j in 0..=b {
            for i in 0..=a {
                points.push((i, j));
                weights.push(Rational::from_integer(binom(a, i) * binom(b, j)));
            }
        }
        let facets = vec![
            Facet { normal: (1, 0), offset: 0 },
            Facet { normal: (-1, 0), offset: a },
            Facet { normal: (0, 1), offset: 0 },
            Facet { normal: (0, -1), offset: b },
        ];
        LatticePatch { points, facets, weights }
    }

    /// Trapezoid `0 <= t <= b, 0 <= s <= a + d b - d t`, weights
    /// `C(b,j) C(a+db-dj, i)`. The facet `b - t` is kept even when it only
    /// touches a vertex.
    pub fn trapezoid(a: u32, b: u32, d: u32) -> Self {
        let (a, b, d) = (a as i64, b as i64, d as i64);
        let mut points = Vec::new();
        let mut weights = Vec::new();
        for j in 0..=b {
            let n = a + d * b - d * j;
            for i in 0..=n {
                points.push((i, j));
                weights.push(Rational::from_integer(binom(b, j) * binom(n, i)));
            }
        }
        let facets = vec![
            Facet { normal: (1, 0), offset: 0 },
            Facet { normal: (0, 1), offset: 0 },
            Facet { normal: (0, -1), offset: b },
            Facet { normal: (-1, -d), offset: a + d * b },
        ];
        LatticePatch { points, facets, weights }
    }

    pub fn from_family(spec: &FamilySpec) -> Result<Self, Error> {
        spec.validate()?;
        match *spec {
            FamilySpec::Tensor { a, b } => Ok(Self::tensor(a, b)),
            FamilySpec::Trapezoid { a, b, d } => Ok(Self::trapezoid(a, b, d)),
            FamilySpec::Quadric { .. } => Err(Error::InvalidSpec(
                "the quadric family has no patch with positive weights".into(),
            )),
        }
    }

    /// Maximum of `i + j` over the points.
    pub fn degree(&self) -> i64 {
        self.points.iter().map(|p| p.0 + p.1).max().unwrap_or(0)
    }

    pub fn contains(&self, s: &Rational, t: &Rational) -> bool {
        self.facets.iter().all(|f| !f.eval_rat(s, t).is_negative())
    }

    /// Range of `t` over the polygon and the slice of `s` at a given `t`.
    fn t_range(&self) -> (Rational, Rational) {
        let lo = self.points.iter().map(|p| p.1).min().unwrap();
        let hi = self.points.iter().map(|p| p.1).max().unwrap();
        (rat(lo), rat(hi))
    }

    fn s_slice(&self, t: &Rational) -> (Rational, Rational) {
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for f in &self.facets {
            let (ns, nt) = f.normal;
            if ns == 0 {
                continue;
            }
            let bound = -(rat(nt) * t + rat(f.offset)) / rat(ns);
            if ns > 0 {
                lo = Some(match lo {
                    Some(l) if l >= bound => l,
                    _ => bound,
                });
            } else {
                hi = Some(match hi {
                    Some(h) if h <= bound => h,
                    _ => bound,
                });
            }
        }
        (lo.unwrap(), hi.unwrap())
    }
}

/// Parses `triangle:d` or any family spec with a patch.
impl FromStr for LatticePatch {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        if let Some(rest) = s.trim().strip_prefix("triangle:") {
            let d: u32 = rest
                .trim()
                .parse()
                .map_err(|_| Error::InvalidSpec(format!("cannot parse '{s}'")))?;
            if d == 0 {
                return Err(Error::InvalidSpec("triangle needs d >= 1".into()));
            }
            return Ok(Self::triangle(d));
        }
        Self::from_family(&s.parse()?)
    }
}

/// Facets of the convex hull with primitive inward normals, ordered by the
/// angle of the normal.
pub fn facet_functions(points: &[(i64, i64)]) -> Result<Vec<Facet>, Error> {
    let mut pts: Vec<(i64, i64)> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return Err(Error::CollinearPoints);
    }
    let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &(i64, i64)>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    if hull.len() < 3 {
        return Err(Error::CollinearPoints);
    }
    let mut facets: Vec<Facet> = (0..hull.len())
        .map(|k| {
            let p = hull[k];
            let q = hull[(k + 1) % hull.len()];
            let (dx, dy) = (q.0 - p.0, q.1 - p.1);
            let g = dx.gcd(&dy);
            let normal = (-dy / g, dx / g);
            Facet {
                normal,
                offset: -(normal.0 * p.0 + normal.1 * p.1),
            }
        })
        .collect();
    facets.sort_by(|a, b| {
        let ang = |f: &Facet| {
            let t = (f.normal.1 as f64).atan2(f.normal.0 as f64);
            if t < 0.0 {
                t + std::f64::consts::TAU
            } else {
                t
            }
        };
        ang(a).partial_cmp(&ang(b)).unwrap()
    });
    Ok(facets)
}

#[derive(Clone, Debug, PartialEq)]
pub struct BlendingFunction {
    pub point: (i64, i64),
    /// `w_a * prod h_i^(h_i(a))`, expanded in `s, t`.
    pub poly: Poly,
}

pub fn blending_functions(patch: &LatticePatch) -> Vec<BlendingFunction> {
    let facet_polys: Vec<Poly> = patch.facets.iter().map(|f| f.poly()).collect();
    patch
        .points
        .iter()
        .zip(&patch.weights)
        .map(|(&a, w)| {
            let mut poly = Poly::constant(2, w.clone());
            for (f, hp) in patch.facets.iter().zip(&facet_polys) {
                let e = f.eval(a) as u32;
                if e > 0 {
                    poly = &poly * &hp.pow(e);
                }
            }
            BlendingFunction { point: a, poly }
        })
        .collect()
}

/// One control point per lattice point, in the order of `patch.points`.
#[derive(Clone, Debug, PartialEq)]
pub struct ControlNet {
    pub points: Vec<Vec<Rational>>,
}

impl ControlNet {
    /// The lattice points themselves.
    pub fn tautological(patch: &LatticePatch) -> Self {
        ControlNet {
            points: patch.points.iter().map(|p| vec![rat(p.0), rat(p.1)]).collect(),
        }
    }

    /// The paraboloid lift `(i, j, i^2 + j^2)`.
    pub fn lift(patch: &LatticePatch) -> Self {
        ControlNet {
            points: patch
                .points
                .iter()
                .map(|p| vec![rat(p.0), rat(p.1), rat(p.0 * p.0 + p.1 * p.1)])
                .collect(),
        }
    }
}

fn weights_at(patch: &LatticePatch, s: &Rational, t: &Rational) -> Vec<Rational> {
    let hs: Vec<Rational> = patch.facets.iter().map(|f| f.eval_rat(s, t)).collect();
    patch
        .points
        .iter()
        .zip(&patch.weights)
        .map(|(&a, w)| {
            let mut v = w.clone();
            for (f, h) in patch.facets.iter().zip(&hs) {
                let e = f.eval(a);
                if e > 0 {
                    v *= num_traits::pow(h.clone(), e as usize);
                }
            }
            v
        })
        .collect()
}

/// `sum b_a beta_a(s) / sum beta_a(s)`, exactly.
pub fn patch_map(patch: &LatticePatch, net: &ControlNet, s: (&Rational, &Rational)) -> Result<Vec<Rational>, Error> {
    assert_eq!(net.points.len(), patch.points.len(), "one control point per lattice point");
    let w = weights_at(patch, s.0, s.1);
    let total: Rational = w.iter().fold(Rational::zero(), |acc, v| acc + v);
    if total.is_zero() {
        return Err(Error::DenominatorZero);
    }
    let m = net.points.first().map(|p| p.len()).unwrap_or(0);
    let mut out = vec![Rational::zero(); m];
    for (b, v) in net.points.iter().zip(&w) {
        for (o, c) in out.iter_mut().zip(b) {
            *o += c * v;
        }
    }
    Ok(out.into_iter().map(|c| c / &total).collect())
}

pub fn tautological_map(patch: &LatticePatch, s: (&Rational, &Rational)) -> Result<(Rational, Rational), Error> {
    let v = patch_map(patch, &ControlNet::tautological(patch), s)?;
    Ok((v[0].clone(), v[1].clone()))
}

/// Numerator polynomials `sum a_k beta_a` and the denominator `sum beta_a`.
fn tau_polys(patch: &LatticePatch) -> ([Poly; 2], Poly) {
    let bl = blending_functions(patch);
    let mut n0 = Poly::zero(2);
    let mut n1 = Poly::zero(2);
    let mut d = Poly::zero(2);
    for b in &bl {
        n0 = &n0 + &b.poly.scale(&rat(b.point.0));
        n1 = &n1 + &b.poly.scale(&rat(b.point.1));
        d = &d + &b.poly;
    }
    ([n0, n1], d)
}

/// True iff `sum a beta_a(s) = s sum beta_a(s)` identically.
pub fn exact_linear_precision(patch: &LatticePatch) -> bool {
    let ([n0, n1], d) = tau_polys(patch);
    let s = Poly::var(2, 0);
    let t = Poly::var(2, 1);
    (&n0 - &(&s * &d)).is_zero() && (&n1 - &(&t * &d)).is_zero()
}

/// `sum w_a z^(d-|a|) x^i y^j`.
pub fn form_from_patch(patch: &LatticePatch) -> Poly {
    let d = patch.degree();
    Poly::from_terms(
        3,
        patch.points.iter().zip(&patch.weights).map(|(&(i, j), w)| {
            (w.clone(), Monomial::from_slice(&[i as i32, j as i32, (d - i - j) as i32]))
        }),
    )
}

/// Solves `tau(psi) = s` by damped Newton iteration.
///
/// The Jacobian comes from exact derivatives of the numerator and
/// denominator polynomials; both are evaluated exactly at the binary value of
/// the current iterate and rounded once. Steps are halved while the residual
/// grows or the iterate leaves the polygon by more than `1e-12`.
pub fn numeric_reparameterization(patch: &LatticePatch, s: (f64, f64), tol: f64) -> Result<(f64, f64), Error> {
    let ([n0, n1], d) = tau_polys(patch);
    let derivs = [
        [n0.derivative(0), n0.derivative(1)],
        [n1.derivative(0), n1.derivative(1)],
        [d.derivative(0), d.derivative(1)],
    ];
    let to_rat = |x: f64| Rational::from_float(x).expect("finite coordinate");
    let to_f = |r: &Rational| r.to_f64().unwrap_or(f64::NAN);
    let target = (s.0, s.1);
    let residual = |p: (f64, f64)| -> Option<(f64, f64, [Rational; 3], [Rational; 2])> {
        let pt = [to_rat(p.0), to_rat(p.1)];
        let dv = d.eval(&pt);
        if dv.is_zero() {
            return None;
        }
        let t0 = n0.eval(&pt) / &dv;
        let t1 = n1.eval(&pt) / &dv;
        let r0 = to_f(&(&t0 - to_rat(target.0)));
        let r1 = to_f(&(&t1 - to_rat(target.1)));
        Some((r0, r1, [n0.eval(&pt), n1.eval(&pt), dv], pt))
    };
    let inside = |p: (f64, f64)| patch.facets.iter().all(|f| f.eval_f64(p.0, p.1) >= -1e-12);
    let norm = |a: f64, b: f64| (a * a + b * b).sqrt();

    let mut p = target;
    let (mut r0, mut r1, mut vals, mut pt) = residual(p).ok_or(Error::DenominatorZero)?;
    for _ in 0..100 {
        let res = norm(r0, r1);
        // keep polishing well below tol while steps still help
        if res < tol * 1e-3 {
            return Ok(p);
        }
        // J = (N_l D - N D_l) / D^2
        let dv = &vals[2];
        let dd = [derivs[2][0].eval(&pt), derivs[2][1].eval(&pt)];
        let mut jac = [[0.0f64; 2]; 2];
        for k in 0..2 {
            for l in 0..2 {
                let num = derivs[k][l].eval(&pt) * dv - &vals[k] * &dd[l];
                jac[k][l] = to_f(&(num / (dv * dv)));
            }
        }
        let det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
        if det == 0.0 || !det.is_finite() {
            return if res < tol { Ok(p) } else { Err(Error::NonConvergence(res)) };
        }
        let step = (
            -(jac[1][1] * r0 - jac[0][1] * r1) / det,
            -(-jac[1][0] * r0 + jac[0][0] * r1) / det,
        );
        let mut lambda = 1.0;
        let mut accepted = false;
        for _ in 0..60 {
            let cand = (p.0 + lambda * step.0, p.1 + lambda * step.1);
            if inside(cand) {
                if let Some((c0, c1, cv, cpt)) = residual(cand) {
                    if norm(c0, c1) < res {
                        p = cand;
                        r0 = c0;
                        r1 = c1;
                        vals = cv;
                        pt = cpt;
                        accepted = true;
                        break;
                    }
                }
            }
            lambda *= 0.5;
        }
        if !accepted {
            return if res < tol { Ok(p) } else { Err(Error::NonConvergence(res)) };
        }
    }
    let res = norm(r0, r1);
    if res < tol {
        Ok(p)
    } else {
        Err(Error::NonConvergence(res))
    }
}

/// Grid of `n x n` parameter values: `n` values of `t` across the polygon
/// and, for each, `n` values of `s` across its slice.
pub fn parameter_grid(patch: &LatticePatch, n: usize) -> Vec<(Rational, Rational)> {
    assert!(n >= 2, "grid needs at least two samples per direction");
    let (t_lo, t_hi) = patch.t_range();
    let steps = rat(n as i64 - 1);
    let mut out = Vec::with_capacity(n * n);
    for k in 0..n {
        let t = &t_lo + (&t_hi - &t_lo) * rat(k as i64) / &steps;
        let (s_lo, s_hi) = patch.s_slice(&t);
        for i in 0..n {
            let s = &s_lo + (&s_hi - &s_lo) * rat(i as i64) / &steps;
            out.push((s, t.clone()));
        }
    }
    out
}

fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

/// CSV of the tautological map on the grid: `s,t,taus,taut`.
pub fn tau_csv(patch: &LatticePatch, n: usize) -> Result<String, Error> {
    let mut out = String::from("s,t,taus,taut\n");
    for (s, t) in parameter_grid(patch, n) {
        let (a, b) = tautological_map(patch, (&s, &t))?;
        let v: Vec<f64> = [&s, &t, &a, &b].iter().map(|r| r.to_f64().unwrap()).collect();
        writeln!(out, "{},{},{},{}", fmt17(v[0]), fmt17(v[1]), fmt17(v[2]), fmt17(v[3])).unwrap();
    }
    Ok(out)
}

/// CSV of the patch with a three-dimensional control net: `s,t,fx,fy,fz`.
pub fn patch_csv(patch: &LatticePatch, net: &ControlNet, n: usize) -> Result<String, Error> {
    let mut out = String::from("s,t,fx,fy,fz\n");
    for (s, t) in parameter_grid(patch, n) {
        let v = patch_map(patch, net, (&s, &t))?;
        if v.len() != 3 {
            return Err(Error::InvalidSpec("control net must be three-dimensional".into()));
        }
        let f: Vec<f64> = [&s, &t, &v[0], &v[1], &v[2]].iter().map(|r| r.to_f64().unwrap()).collect();
        writeln!(
            out,
            "{},{},{},{},{}",
            fmt17(f[0]),
            fmt17(f[1]),
            fmt17(f[2]),
            fmt17(f[3]),
            fmt17(f[4])
        )
        .unwrap();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn facet_set(f: &[Facet]) -> Vec<Facet> {
        let mut v = f.to_vec();
        v.sort_by_key(|f| (f.normal, f.offset));
        v
    }

    #[test]
    fn hull_facets() {
        let tri = facet_functions(&[(0, 0), (1, 0), (0, 1)]).unwrap();
        assert_eq!(tri, LatticePatch::triangle(1).facets);
        let rect = facet_functions(&LatticePatch::tensor(2, 3).points).unwrap();
        assert_eq!(facet_set(&rect), facet_set(&LatticePatch::tensor(2, 3).facets));
        let trap = facet_functions(&LatticePatch::trapezoid(1, 2, 2).points).unwrap();
        assert_eq!(facet_set(&trap), facet_set(&LatticePatch::trapezoid(1, 2, 2).facets));
        assert_eq!(facet_functions(&[(0, 0), (1, 1), (2, 2)]), Err(Error::CollinearPoints));
    }

    #[test]
    fn degree_one_triangle_blending() {
        let bl = blending_functions(&LatticePatch::triangle(1));
        let polys: Vec<Poly> = bl.iter().map(|b| b.poly.clone()).collect();
        assert_eq!(polys, vec![p("1-s-t"), p("s"), p("t")]);
    }

    #[test]
    fn bilinear_blending() {
        let bl = blending_functions(&LatticePatch::tensor(1, 1));
        assert_eq!(bl[0].poly, p("(1-s)*(1-t)"));
        assert_eq!(bl[3].poly, p("s*t"));
    }

    #[test]
    fn trapezoid_sum_closed_form() {
        for (a, b, d) in [(1, 1, 1), (0, 2, 2), (2, 1, 3)] {
            let patch = LatticePatch::trapezoid(a, b, d);
            let sum = blending_functions(&patch)
                .iter()
                .fold(Poly::zero(2), |acc, bf| &acc + &bf.poly);
            let v = p(&format!("{} - {}*t", a + d * b, d));
            let closed = &v.pow(a) * &(&p("t") + &(&p(&format!("{b}-t")) * &v.pow(d))).pow(b);
            assert_eq!(sum, closed);
        }
    }

    #[test]
    fn patch_and_tautological_maps() {
        let tri = LatticePatch::triangle(1);
        let third = ratio(1, 3);
        let net = ControlNet {
            points: vec![
                vec![rat(0), rat(0), rat(0)],
                vec![rat(3), rat(0), rat(6)],
                vec![rat(0), rat(3), rat(9)],
            ],
        };
        assert_eq!(patch_map(&tri, &net, (&third, &third)).unwrap(), vec![rat(1), rat(1), rat(5)]);
        let sq = LatticePatch::tensor(1, 1);
        let half = ratio(1, 2);
        assert_eq!(tautological_map(&sq, (&half, &half)).unwrap(), (half.clone(), half.clone()));
        let trap = LatticePatch::trapezoid(1, 1, 1);
        let (_, tt) = tautological_map(&trap, (&half, &half)).unwrap();
        // b t / (t + (b - t) v^d) with v = 2 - t
        let expected = ratio(1, 2) / (ratio(1, 2) + ratio(1, 2) * ratio(3, 2));
        assert_eq!(tt, expected);
        assert_ne!(tt, half);
    }

    #[test]
    fn linear_precision_cases() {
        for d in 1..=4 {
            assert!(exact_linear_precision(&LatticePatch::triangle(d)));
        }
        assert!(exact_linear_precision(&LatticePatch::tensor(2, 3)));
        assert!(!exact_linear_precision(&LatticePatch::trapezoid(0, 1, 2)));
    }

    #[test]
    fn forms_from_patches() {
        assert_eq!(form_from_patch(&LatticePatch::triangle(2)), p("(x+y+z)^2"));
        assert_eq!(form_from_patch(&LatticePatch::tensor(2, 1)), p("(x+z)^2*(y+z)"));
        assert_eq!(form_from_patch(&LatticePatch::trapezoid(1, 1, 2)), p("(x+z)*((x+z)^2+y*z)"));
    }

    #[test]
    fn newton_reparameterization() {
        let trap = LatticePatch::trapezoid(0, 1, 1);
        let (u, v) = numeric_reparameterization(&trap, (0.3, 0.4), 1e-10).unwrap();
        let (a, b) = tautological_map(&trap, (&Rational::from_float(u).unwrap(), &Rational::from_float(v).unwrap())).unwrap();
        let r = ((a.to_f64().unwrap() - 0.3).powi(2) + (b.to_f64().unwrap() - 0.4).powi(2)).sqrt();
        assert!(r < 1e-10, "residual {r}");
        let (u, v) = numeric_reparameterization(&LatticePatch::tensor(2, 2), (0.7, 1.1), 1e-12).unwrap();
        assert_eq!((u, v), (0.7, 1.1));
    }

    #[test]
    fn grid_and_csv() {
        let trap = LatticePatch::trapezoid(0, 1, 1);
        let csv = tau_csv(&trap, 11).unwrap();
        assert_eq!(csv.lines().count(), 122);
        assert!(csv.starts_with("s,t,taus,taut\n"));
        let csv = patch_csv(&trap, &ControlNet::lift(&trap), 3).unwrap();
        assert_eq!(csv.lines().nth(1).unwrap().split(',').count(), 5);
        for (s, t) in parameter_grid(&trap, 5) {
            assert!(trap.contains(&s, &t));
        }
    }

    #[test]
    fn patch_spec_strings() {
        assert_eq!("triangle:2".parse::<LatticePatch>().unwrap(), LatticePatch::triangle(2));
        assert_eq!("tensor:1,2".parse::<LatticePatch>().unwrap(), LatticePatch::tensor(1, 2));
        assert!("quadric:1".parse::<LatticePatch>().is_err());
    }
}
