//! Toric polar linear systems `T(F) = <xF_x, yF_y, zF_z>`, their reduced
//! forms, contraction tests for factors, and off-axis singular points.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{gcd_many, rat, resultant, squarefree_part, Monomial, Poly, Rational, UPoly};
use crate::Error;

/// A projective point with rational coordinates.
pub type Point = [Rational; 3];

#[derive(Clone, Debug, PartialEq)]
pub struct ToricPolarSystem {
    /// The form, normalized to be coprime to `xyz`.
    pub source: Poly,
    pub degree: i64,
    /// `xF_x, yF_y, zF_z`.
    pub components: [Poly; 3],
    /// Components divided by their gcd and jointly made primitive.
    pub reduced: [Poly; 3],
    /// The monic gcd `G` of the components.
    pub removed_factor: Poly,
}

/// `xF_x, yF_y, zF_z` for any ternary (Laurent) polynomial.
pub fn toric_derivatives(f: &Poly) -> [Poly; 3] {
    [
        f.toric_derivative(0),
        f.toric_derivative(1),
        f.toric_derivative(2),
    ]
}

/// Divides a triple by its gcd (Laurent parts included) and scales it to a
/// primitive integer triple whose first nonzero entry has positive leading
/// coefficient. Returns the reduced triple and the monic gcd.
pub fn reduce_linear_system(components: &[Poly; 3]) -> ([Poly; 3], Poly) {
    let nonzero: Vec<Poly> = components.iter().filter(|p| !p.is_zero()).cloned().collect();
    assert!(!nonzero.is_empty(), "all components vanish");
    let g = gcd_many(&nonzero);
    let divided: Vec<Poly> = components
        .iter()
        .map(|p| p.exact_divide(&g).expect("gcd divides each component"))
        .collect();
    let scale = joint_primitive_scale(&divided);
    let reduced = [
        divided[0].scale(&scale),
        divided[1].scale(&scale),
        divided[2].scale(&scale),
    ];
    (reduced, g)
}

fn joint_primitive_scale(polys: &[Poly]) -> Rational {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::Signed;
    let mut lcm = BigInt::one();
    for p in polys {
        for (_, c) in p.terms() {
            lcm = lcm.lcm(c.denom());
        }
    }
    let mut g = BigInt::zero();
    for p in polys {
        for (_, c) in p.terms() {
            g = g.gcd(&(c.numer() * (&lcm / c.denom())));
        }
    }
    let mut s = Rational::new(lcm, g);
    if let Some(first) = polys.iter().find(|p| !p.is_zero()) {
        if first.leading_coeff().is_negative() {
            s = -s;
        }
    }
    s
}

/// Builds `T(F)` and its reduced system. Laurent input is first multiplied by
/// a monomial to become an ordinary form coprime to `xyz`.
pub fn toric_polar_system(f: &Poly) -> Result<ToricPolarSystem, Error> {
    if f.arity() != 3 {
        return Err(Error::ArityMismatch(f.arity(), 3));
    }
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let (source, _) = f.laurent_normalize();
    let degree = source.form_degree().ok_or(Error::NotHomogeneous)?;
    if degree == 0 {
        return Err(Error::Degenerate("constant form".into()));
    }
    let components = toric_derivatives(&source);
    let (reduced, removed_factor) = reduce_linear_system(&components);
    let euler = &(&components[0] + &components[1]) + &components[2];
    debug_assert_eq!(euler, source.scale(&rat(degree)));
    Ok(ToricPolarSystem {
        source,
        degree,
        components,
        reduced,
        removed_factor,
    })
}

impl ToricPolarSystem {
    /// `F / G`, which equals the squarefree part of `F` up to a scalar.
    pub fn radical(&self) -> Poly {
        self.source
            .exact_divide(&self.removed_factor)
            .expect("G divides F")
    }

    /// Evaluates the reduced map at a point.
    pub fn eval_reduced(&self, p: &Point) -> Point {
        eval_triple(&self.reduced, p)
    }
}

pub fn eval_triple(map: &[Poly; 3], p: &Point) -> Point {
    [map[0].eval(p), map[1].eval(p), map[2].eval(p)]
}

/// Scales a nonzero point so that its first nonzero coordinate is 1.
pub fn normalize_point(p: &Point) -> Point {
    let lead = p
        .iter()
        .find(|c| !c.is_zero())
        .cloned()
        .expect("projective point needs a nonzero coordinate");
    [&p[0] / &lead, &p[1] / &lead, &p[2] / &lead]
}

/// Projective equality of two nonzero triples.
pub fn proj_eq(p: &Point, q: &Point) -> bool {
    (0..3).all(|i| (0..3).all(|j| &p[i] * &q[j] == &p[j] * &q[i]))
}

#[derive(Clone, Debug, PartialEq)]
pub struct ContractionVerdict {
    pub contracted: bool,
    /// The image point, scaled so its last nonzero coordinate is 1.
    pub image_point: Option<Point>,
}

/// Decides whether the curve `G = 0` is mapped to a point by `map`.
///
/// Reduces each component modulo `G`; since `G` generates a principal ideal
/// the remainders are canonical. The curve is contracted exactly when the
/// remainders span a space of dimension one, and the image is read off the
/// proportionality constants.
pub fn contraction_test(g: &Poly, map: &[Poly; 3]) -> Result<ContractionVerdict, Error> {
    let (g, _) = g.laurent_normalize();
    let nfs: Vec<Poly> = map.iter().map(|c| c.normal_form(&g)).collect();
    let base = match nfs.iter().find(|p| !p.is_zero()) {
        Some(b) => b.clone(),
        None => {
            return Err(Error::Degenerate(
                "every component vanishes on the curve".into(),
            ))
        }
    };
    let (bm, bc) = base.leading_term().map(|(m, c)| (*m, c.clone())).unwrap();
    let mut coords = Vec::with_capacity(3);
    for nf in &nfs {
        let lambda = nf.coeff(&bm) / &bc;
        if &base.scale(&lambda) != nf {
            return Ok(ContractionVerdict {
                contracted: false,
                image_point: None,
            });
        }
        coords.push(lambda);
    }
    let last = coords.iter().rev().find(|c| !c.is_zero()).unwrap().clone();
    let point = [&coords[0] / &last, &coords[1] / &last, &coords[2] / &last];
    Ok(ContractionVerdict {
        contracted: true,
        image_point: Some(point),
    })
}

/// Result of [`binomial_contracted_normal_form`].
#[derive(Clone, Debug, PartialEq)]
pub enum BinomialVerdict {
    Binomial(BinomialNormalForm),
    NotBinomialContracted,
}

/// `x^a + alpha y^b z^(a-b)` after renaming variables: original variable
/// `perm[k]` plays the role of the `k`-th of `x,y,z`.
#[derive(Clone, Debug, PartialEq)]
pub struct BinomialNormalForm {
    pub a: i32,
    pub b: i32,
    pub alpha: Rational,
    pub perm: [usize; 3],
    pub normalized: Poly,
}

/// Rank of a family of polynomials as vectors over the rationals.
pub fn rank_over_q(polys: &[Poly]) -> usize {
    let mut rows: Vec<BTreeMap<Monomial, Rational>> = polys
        .iter()
        .map(|p| p.terms().map(|(m, c)| (*m, c.clone())).collect())
        .collect();
    let mut rank = 0;
    let mut i = 0;
    while i < rows.len() {
        let pivot = rows[i].iter().next_back().map(|(m, c)| (*m, c.clone()));
        match pivot {
            None => {
                rows.remove(i);
            }
            Some((pm, pc)) => {
                let pivot_row = rows[i].clone();
                for row in rows.iter_mut().skip(i + 1) {
                    if let Some(c) = row.get(&pm).cloned() {
                        let f = c / &pc;
                        for (m, v) in &pivot_row {
                            let e = row.entry(*m).or_insert_with(Rational::zero);
                            *e -= &f * v;
                            if e.is_zero() {
                                row.remove(m);
                            }
                        }
                    }
                }
                rank += 1;
                i += 1;
            }
        }
    }
    rank
}

/// Recognizes factors whose toric derivatives are linearly dependent, which
/// are exactly the binomials, and puts them in the form
/// `x^a + alpha y^b z^(a-b)` with `b <= a - b` and `gcd(a, b) = 1`.
///
/// A linear binomial such as `x + z` is reported with `a = 1, b = 0`.
pub fn binomial_contracted_normal_form(g: &Poly) -> Result<BinomialVerdict, Error> {
    let (g, _) = g.laurent_normalize();
    let a = g.form_degree().ok_or(Error::NotHomogeneous)? as i32;
    let ders = toric_derivatives(&g);
    if rank_over_q(&ders) == 3 || g.len() != 2 {
        return Ok(BinomialVerdict::NotBinomialContracted);
    }
    let terms: Vec<(Monomial, Rational)> = g.terms().map(|(m, c)| (*m, c.clone())).collect();
    let support = |m: &Monomial| (0..3).filter(|&v| m.exp(v) != 0).count();
    let (pure, other) = if support(&terms[1].0) == 1 {
        (&terms[1], &terms[0])
    } else if support(&terms[0].0) == 1 {
        (&terms[0], &terms[1])
    } else {
        return Err(Error::InvalidFactors(format!("{g} is not coprime to xyz")));
    };
    let px = (0..3).find(|&v| pure.0.exp(v) != 0).unwrap();
    let mut rest: Vec<usize> = (0..3).filter(|&v| v != px).collect();
    // The smaller exponent goes to y; ties keep variable order.
    if other.0.exp(rest[0]) > other.0.exp(rest[1]) {
        rest.swap(0, 1);
    }
    let b = other.0.exp(rest[0]);
    if num_integer::gcd(a, b) != 1 {
        return Err(Error::InvalidFactors(format!("{g} is reducible")));
    }
    let alpha = &other.1 / &pure.1;
    let normalized = Poly::from_terms(
        3,
        [
            (Rational::one(), Monomial::from_slice(&[a, 0, 0])),
            (alpha.clone(), Monomial::from_slice(&[0, b, a - b])),
        ],
    );
    Ok(BinomialVerdict::Binomial(BinomialNormalForm {
        a,
        b,
        alpha,
        perm: [px, rest[0], rest[1]],
        normalized,
    }))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SingularCount {
    pub count: usize,
    /// Rational singular points off the coordinate lines, first nonzero coordinate 1.
    pub rational_points: Vec<Point>,
}

/// Counts singular points of the reduced curve `sqrt(F) = 0` with `xyz != 0`.
///
/// Works in the chart `z = 1`, which contains every such point. After a shear
/// `u = x + c y`, the `u`-coordinates of the singular points are the common
/// roots of `Res_y(f, f_x + r1 f_y)` and `Res_y(f, f_x + r2 f_y)`; singular
/// points on the axes are then removed.
pub fn off_axis_singular_count(f: &Poly) -> Result<SingularCount, Error> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let (f, _) = f.laurent_normalize();
    f.form_degree().ok_or(Error::NotHomogeneous)?;
    let sq = squarefree_part(&f);
    let one = Rational::one();
    let fz = sq.eval_var(2, &one);
    if fz.total_degree().unwrap_or(0) <= 1 {
        return Ok(SingularCount {
            count: 0,
            rational_points: Vec::new(),
        });
    }
    let fx = fz.derivative(0);
    let fy = fz.derivative(1);

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _attempt in 0..8 {
        let c = rat(rng.gen_range(1..=9));
        let r1 = rat(rng.gen_range(1..=9));
        let r2 = &r1 + rat(rng.gen_range(1..=9));
        let g1 = &fx + &fy.scale(&r1);
        let g2 = &fx + &fy.scale(&r2);
        let shear = |p: &Poly| {
            // x -> u - c y, keeping the name x for u.
            let img_x = &Poly::var(3, 0) - &Poly::var(3, 1).scale(&c);
            p.compose(&[img_x, Poly::var(3, 1), Poly::var(3, 2)])
        };
        let (sf, sg1, sg2) = (shear(&fz), shear(&g1), shear(&g2));
        if !lc_y_constant(&sf) || !lc_y_constant(&sg1) || !lc_y_constant(&sg2) {
            continue;
        }
        let r_a = resultant(&sf, &sg1, 1);
        let r_b = resultant(&sf, &sg2, 1);
        if r_a.is_zero() || r_b.is_zero() {
            continue;
        }
        let ua = r_a.to_upoly(0).expect("resultant in u only").squarefree();
        let ub = r_b.to_upoly(0).expect("resultant in u only").squarefree();
        let p = ua.gcd(&ub);
        let total = p.degree().unwrap_or(0);

        let axis = axis_singular_count(&fz, &fx, &fy);
        let count = total.checked_sub(axis).ok_or_else(|| {
            Error::Degenerate("axis singular points not resolved by shear".into())
        })?;

        let mut points = Vec::new();
        for u0 in p.rational_roots() {
            let slice = |q: &Poly| q.eval_var(0, &u0).to_upoly(1).unwrap();
            let h = slice(&sf).gcd(&slice(&sg1)).gcd(&slice(&sg2));
            for y0 in h.rational_roots() {
                let x0 = &u0 - &c * &y0;
                if !x0.is_zero() && !y0.is_zero() {
                    points.push(normalize_point(&[x0, y0, Rational::one()]));
                }
            }
        }
        return Ok(SingularCount {
            count,
            rational_points: points,
        });
    }
    Err(Error::Degenerate("no admissible shear found".into()))
}

fn lc_y_constant(p: &Poly) -> bool {
    let d = p.degree_in(1);
    let top = p.total_degree().unwrap_or(0);
    d as i64 == top
        && p.coeffs_in(1)
            .last()
            .is_some_and(|c| c.is_constant() && !c.is_zero())
}

/// Number of distinct singular points of `f = 0` on the lines `x = 0` and
/// `y = 0` of the affine chart.
fn axis_singular_count(f: &Poly, fx: &Poly, fy: &Poly) -> usize {
    let zero = Rational::zero();
    let on_line = |var: usize, other: usize| -> UPoly {
        let restrict = |p: &Poly| p.eval_var(var, &zero).to_upoly(other).unwrap();
        let g = restrict(f).gcd(&restrict(fx)).gcd(&restrict(fy));
        if g.is_zero() {
            panic!("curve contains a coordinate line");
        }
        g.squarefree()
    };
    let gx = on_line(0, 1);
    let gy = on_line(1, 0);
    let origin_x = gx.degree().unwrap_or(0) > 0 && gx.eval(&zero).is_zero();
    let origin_y = gy.degree().unwrap_or(0) > 0 && gy.eval(&zero).is_zero();
    let mut n = gx.degree().unwrap_or(0) + gy.degree().unwrap_or(0);
    if origin_x && origin_y {
        n -= 1;
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{ratio, MonomialMatrix};

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn pt(a: i64, b: i64, c: i64) -> Point {
        [rat(a), rat(b), rat(c)]
    }

    #[test]
    fn bezier_triangle_reduces_to_identity() {
        let sys = toric_polar_system(&p("(x+y+z)^3")).unwrap();
        assert_eq!(sys.reduced, [p("x"), p("y"), p("z")]);
        assert_eq!(sys.removed_factor, p("(x+y+z)^2"));
    }

    #[test]
    fn tensor_reduced_system() {
        let sys = toric_polar_system(&p("(x+z)^2*(y+z)")).unwrap();
        let expected = [p("(x+z)*(y+z)"), p("z*(x+z)"), p("z*(y+z)")];
        // Same span: each reduced component is a combination of the expected basis.
        for c in &sys.reduced {
            let mut all = expected.to_vec();
            all.push(c.clone());
            assert_eq!(rank_over_q(&all), 3);
        }
        assert_eq!(rank_over_q(&sys.reduced), 3);
    }

    #[test]
    fn quadric_components() {
        let sys = toric_polar_system(&p("x^2+y^2+z^2-2*(x*y+x*z+y*z)")).unwrap();
        assert_eq!(
            sys.reduced,
            [p("x^2-x*y-x*z"), p("y^2-x*y-y*z"), p("z^2-x*z-y*z")]
        );
        let combo = &(&(-&sys.reduced[0]) - &sys.reduced[1]) + &sys.reduced[2];
        assert_eq!(combo, p("(x-y-z)*(y-x-z)"));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(toric_polar_system(&Poly::zero(3)), Err(Error::ZeroInput));
        assert_eq!(toric_polar_system(&p("x^2+y")), Err(Error::NotHomogeneous));
    }

    #[test]
    fn contraction_of_tensor_factors() {
        let map = toric_derivatives(&p("(x+z)*(y+z)"));
        let v1 = contraction_test(&p("x+z"), &map).unwrap();
        assert!(v1.contracted);
        assert_eq!(v1.image_point, Some([rat(-1), rat(0), rat(1)]));
        let v2 = contraction_test(&p("y+z"), &map).unwrap();
        assert!(v2.contracted);
        assert_eq!(v2.image_point, Some([rat(0), rat(-1), rat(1)]));
    }

    #[test]
    fn contraction_witnesses_hold() {
        let map = toric_derivatives(&p("(x+z)*(y+z)"));
        let g = p("x+z");
        let v = contraction_test(&g, &map).unwrap();
        let [l, m, n] = v.image_point.unwrap();
        let pairs = [
            (&map[0].scale(&m) - &map[1].scale(&l)),
            (&map[1].scale(&n) - &map[2].scale(&m)),
            (&map[0].scale(&n) - &map[2].scale(&l)),
        ];
        for w in pairs {
            assert!(w.exact_divide(&g).is_some());
        }
    }

    #[test]
    fn quadric_not_contracted() {
        let q = p("x^2+y^2+z^2-2*(x*y+x*z+y*z)");
        let sys = toric_polar_system(&q).unwrap();
        assert!(!contraction_test(&q, &sys.reduced).unwrap().contracted);
    }

    #[test]
    fn degenerate_contraction_input() {
        let g = p("x+z");
        let map = [p("x+z"), p("x^2-z^2"), p("0")];
        assert!(matches!(contraction_test(&g, &map), Err(Error::Degenerate(_))));
    }

    #[test]
    fn binomial_normal_forms() {
        match binomial_contracted_normal_form(&p("x+z")).unwrap() {
            BinomialVerdict::Binomial(nf) => {
                assert_eq!((nf.a, nf.b), (1, 0));
                assert_eq!(nf.alpha, rat(1));
            }
            v => panic!("{v:?}"),
        }
        match binomial_contracted_normal_form(&p("z^2-x*y")).unwrap() {
            BinomialVerdict::Binomial(nf) => {
                assert_eq!((nf.a, nf.b), (2, 1));
                assert_eq!(nf.alpha, rat(-1));
                assert_eq!(nf.perm[0], 2);
            }
            v => panic!("{v:?}"),
        }
        assert_eq!(
            binomial_contracted_normal_form(&p("x+y+z")).unwrap(),
            BinomialVerdict::NotBinomialContracted
        );
        assert!(binomial_contracted_normal_form(&p("x^2-z^2")).is_err());
    }

    #[test]
    fn binomial_with_mixed_exponents() {
        // y^3 + 2 x z^2: pure power y, smaller exponent x.
        match binomial_contracted_normal_form(&p("y^3+2*x*z^2")).unwrap() {
            BinomialVerdict::Binomial(nf) => {
                assert_eq!((nf.a, nf.b), (3, 1));
                assert_eq!(nf.perm, [1, 0, 2]);
                assert_eq!(nf.alpha, rat(2));
                assert_eq!(nf.normalized, p("x^3+2*y*z^2"));
            }
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn singular_point_of_tensor() {
        let s = off_axis_singular_count(&p("(x+z)*(y+z)")).unwrap();
        assert_eq!(s.count, 1);
        assert_eq!(s.rational_points, vec![pt(1, 1, -1)]);
    }

    #[test]
    fn smooth_conic_and_trapezoid() {
        let q = p("x^2+y^2+z^2-2*(x*y+x*z+y*z)");
        assert_eq!(off_axis_singular_count(&q).unwrap().count, 0);
        let t = p("(x+z)*((x+z)^2+y*z)");
        assert_eq!(off_axis_singular_count(&t).unwrap().count, 0);
    }

    #[test]
    fn node_off_axis_counted() {
        // Two lines through [1:2:3]; their meeting point is the only singularity.
        let f = p("(2*x-y)*(3*y-2*z)");
        let s = off_axis_singular_count(&f).unwrap();
        assert_eq!(s.count, 1);
        assert_eq!(s.rational_points, vec![[rat(1), rat(2), rat(3)]]);
        // Same lines meeting on an axis: [0:1:1].
        let g = p("(x+y-z)*(2*x+y-z)");
        assert_eq!(off_axis_singular_count(&g).unwrap().count, 0);
        let _ = ratio(1, 2);
    }

    #[test]
    fn monomial_substitution_chain_rule() {
        // t_k dG/dt_k = sum_j A[k][j] * phi*(x_j F_{x_j}) with G = phi*(F).
        let f = p("x^2*y + 3*y*z^2 - x*z^2");
        let m = MonomialMatrix::new([1, 1, 0], [0, 1, 1], [1, 0, 1]);
        let g = f.substitute_monomial(&m);
        let tf = toric_derivatives(&f);
        let tg = toric_derivatives(&g);
        for (k, gk) in tg.iter().enumerate() {
            let mut acc = Poly::zero(3);
            for (j, c) in tf.iter().enumerate() {
                acc = &acc + &c.substitute_monomial(&m).scale(&rat(m.entry(k, j)));
            }
            assert_eq!(*gk, acc);
        }
    }
}
