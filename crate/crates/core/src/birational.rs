//! Birationality of plane rational maps by exact fiber counting, and
//! validation of monomial transformations.
//!
//! A fiber `phi^-1(q)` is the set `V(g1, g2)` minus the base locus, where
//! `g1, g2` are two members of the linear system vanishing on the fiber.
//! After a random projective coordinate change the points of `V(g1, g2)`
//! have distinct `x`-coordinates in the chart `z = 1`, so they are counted
//! by the squarefree degree of `R = Res_y(g1, g2)`. Base points are those
//! roots of `R` shared with `Res_y(g1, h)` for a random member `h`.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::poly::{gcd_many, rat, resultant, Monomial, MonomialMatrix, Poly};
use crate::toric::{eval_triple, Point, ToricPolarSystem};
use crate::Error;

/// Three coprime forms of a common degree.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalPlaneMap {
    components: [Poly; 3],
    degree: i64,
}

impl RationalPlaneMap {
    /// Builds the map, dividing out any common factor of the components.
    pub fn new(components: [Poly; 3]) -> Result<Self, Error> {
        let nonzero: Vec<Poly> = components.iter().filter(|p| !p.is_zero()).cloned().collect();
        if nonzero.is_empty() {
            return Err(Error::ZeroInput);
        }
        for c in &components {
            if c.arity() != 3 {
                return Err(Error::ArityMismatch(c.arity(), 3));
            }
        }
        let g = gcd_many(&nonzero);
        let comps: Vec<Poly> = components
            .iter()
            .map(|c| c.exact_divide(&g).expect("gcd divides"))
            .collect();
        let mut degree = None;
        for c in comps.iter().filter(|c| !c.is_zero()) {
            if !c.is_ordinary() {
                return Err(Error::LaurentInput);
            }
            let d = c.form_degree().ok_or(Error::NotHomogeneous)?;
            if degree.is_some_and(|e| e != d) {
                return Err(Error::NotHomogeneous);
            }
            degree = Some(d);
        }
        Ok(RationalPlaneMap {
            components: [comps[0].clone(), comps[1].clone(), comps[2].clone()],
            degree: degree.unwrap(),
        })
    }

    /// The reduced toric polar map of `F`.
    pub fn from_system(sys: &ToricPolarSystem) -> Self {
        RationalPlaneMap {
            components: sys.reduced.clone(),
            degree: sys
                .reduced
                .iter()
                .find_map(|c| c.form_degree())
                .expect("reduced system is nonzero"),
        }
    }

    pub fn components(&self) -> &[Poly; 3] {
        &self.components
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn eval(&self, p: &Point) -> Point {
        eval_triple(&self.components, p)
    }

    pub fn jacobian_determinant(&self) -> Poly {
        let j: Vec<Vec<Poly>> = self
            .components
            .iter()
            .map(|c| (0..3).map(|v| c.derivative(v)).collect())
            .collect();
        let minor = |a: usize, b: usize, c: usize, d: usize| &(&j[1][a] * &j[2][b]) - &(&j[1][c] * &j[2][d]);
        let t0 = &j[0][0] * &minor(1, 2, 2, 1);
        let t1 = &j[0][1] * &minor(0, 2, 2, 0);
        let t2 = &j[0][2] * &minor(0, 1, 1, 0);
        &(&t0 - &t1) + &t2
    }
}

/// True iff all components vanish at `p`.
pub fn base_point_check(map: &RationalPlaneMap, p: &Point) -> bool {
    map.eval(p).iter().all(|c| c.is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Birational,
    /// Modal fiber cardinality; 0 when the map is not dominant.
    NotBirational(usize),
    Degenerate,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Birational => write!(f, "Birational"),
            Verdict::NotBirational(n) => write!(f, "NotBirational({n})"),
            Verdict::Degenerate => write!(f, "Degenerate"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Trial {
    pub source: Point,
    pub target: Point,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FiberCountReport {
    pub trials: Vec<Trial>,
    pub verdict: Verdict,
    pub seed: u64,
}

fn point_json(p: &Point) -> Value {
    Value::Array(p.iter().map(|c| Value::String(c.to_string())).collect())
}

impl FiberCountReport {
    pub fn to_json(&self) -> Value {
        json!({
            "seed": self.seed,
            "verdict": self.verdict.to_string(),
            "trials": self.trials.iter().map(|t| json!({
                "source": point_json(&t.source),
                "target": point_json(&t.target),
                "fiber": t.count,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Fiber cardinality through `source`; shears come from a fixed seed.
pub fn fiber_count(map: &RationalPlaneMap, source: &Point) -> Result<usize, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    fiber_count_with(map, source, &mut rng)
}

pub fn fiber_count_seeded(map: &RationalPlaneMap, source: &Point, seed: u64) -> Result<usize, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    fiber_count_with(map, source, &mut rng)
}

fn fiber_count_with(map: &RationalPlaneMap, source: &Point, rng: &mut ChaCha8Rng) -> Result<usize, Error> {
    let q = map.eval(source);
    if q.iter().all(|c| c.is_zero()) {
        return Err(Error::InvalidSource);
    }
    let f = &map.components;
    let j = (0..3).find(|&i| !q[i].is_zero()).unwrap();
    let others: Vec<usize> = (0..3).filter(|&i| i != j).collect();
    let member = |i: usize| &f[i].scale(&q[j]) - &f[j].scale(&q[i]);
    let g1 = member(others[0]);
    let g2 = member(others[1]);
    let k = map.degree as usize;

    let mut agreed: Option<usize> = None;
    let mut failures = 0;
    while failures < 3 {
        match count_under_shear(&g1, &g2, f, k, rng) {
            Some(n) => match agreed {
                Some(m) if m == n => return Ok(n),
                Some(_) => {
                    agreed = Some(n);
                    failures += 1;
                }
                None => agreed = Some(n),
            },
            None => failures += 1,
        }
    }
    Err(Error::Degenerate(
        "fiber count unstable under coordinate changes".into(),
    ))
}

fn random_shear(rng: &mut ChaCha8Rng) -> [[i64; 3]; 3] {
    loop {
        let mut m = [[0i64; 3]; 3];
        for row in m.iter_mut() {
            for e in row.iter_mut() {
                *e = rng.gen_range(-9..=9);
            }
        }
        let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if det != 0 {
            return m;
        }
    }
}

/// One shear: returns `None` when a failure detector fires.
fn count_under_shear(
    g1: &Poly,
    g2: &Poly,
    f: &[Poly; 3],
    k: usize,
    rng: &mut ChaCha8Rng,
) -> Option<usize> {
    let s = random_shear(rng);
    // Old coordinates in terms of new ones, then z = 1.
    let images: Vec<Poly> = s
        .iter()
        .map(|row| {
            Poly::from_terms(
                3,
                [
                    (rat(row[0]), Monomial::var(0)),
                    (rat(row[1]), Monomial::var(1)),
                    (rat(row[2]), Monomial::one()),
                ],
            )
        })
        .collect();
    let chart = |p: &Poly| p.compose(&images);
    let (a, b) = (chart(g1), chart(g2));
    let top_y = |p: &Poly| p.degree_in(1) as usize == k && p.coeffs_in(1).last().is_some_and(|c| c.is_constant());
    if !top_y(&a) || !top_y(&b) {
        return None;
    }
    let r = resultant(&a, &b, 1);
    if r.is_zero() {
        return None;
    }
    let ru = r.to_upoly(0)?;
    if ru.degree() != Some(k * k) {
        // Intersection at infinity of the chart.
        return None;
    }
    let sq = ru.squarefree();
    let n = sq.degree().unwrap_or(0);
    let coeffs: Vec<i64> = (0..3).map(|_| rng.gen_range(1..=50)).collect();
    let h = f
        .iter()
        .zip(&coeffs)
        .fold(Poly::zero(3), |acc, (c, &w)| &acc + &c.scale(&rat(w)));
    let hc = chart(&h);
    let rb = resultant(&a, &hc, 1);
    let base = if rb.is_zero() {
        return None;
    } else {
        let rbu = rb.to_upoly(0)?;
        sq.gcd(&rbu).degree().unwrap_or(0)
    };
    Some(n - base)
}

/// Runs `trials` fiber counts at seeded random integer source points.
pub fn is_birational(map: &RationalPlaneMap, trials: usize, seed: u64) -> Result<FiberCountReport, Error> {
    assert!(trials >= 1, "at least one trial");
    let jac = map.jacobian_determinant();
    if jac.is_zero() {
        return Ok(FiberCountReport {
            trials: Vec::new(),
            verdict: Verdict::NotBirational(0),
            seed,
        });
    }
    let mut out = Vec::with_capacity(trials);
    let mut degenerate = false;
    for t in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(t as u64);
        let mut result = None;
        for _ in 0..4 {
            let source = random_source(&mut rng, map, &jac);
            let target = map.eval(&source);
            match fiber_count_with(map, &source, &mut rng) {
                Ok(n) => {
                    result = Some(Trial {
                        source,
                        target,
                        count: n,
                    });
                    break;
                }
                Err(Error::Degenerate(_)) => continue,
                Err(e) => return Err(e),
            }
        }
        match result {
            Some(tr) => out.push(tr),
            None => degenerate = true,
        }
    }
    let verdict = if degenerate {
        Verdict::Degenerate
    } else if out.iter().all(|t| t.count == 1) {
        Verdict::Birational
    } else {
        let mut freq: BTreeMap<usize, usize> = BTreeMap::new();
        for t in &out {
            *freq.entry(t.count).or_default() += 1;
        }
        let best = freq.values().copied().max().unwrap();
        let modal = *freq.iter().find(|(_, &v)| v == best).unwrap().0;
        Verdict::NotBirational(modal)
    };
    Ok(FiberCountReport {
        trials: out,
        verdict,
        seed,
    })
}

fn random_source(rng: &mut ChaCha8Rng, map: &RationalPlaneMap, jac: &Poly) -> Point {
    loop {
        let p: Point = [
            rat(rng.gen_range(-1000..=1000)),
            rat(rng.gen_range(-1000..=1000)),
            rat(rng.gen_range(-1000..=1000)),
        ];
        if p.iter().all(|c| c.is_zero()) || base_point_check(map, &p) || jac.eval(&p).is_zero() {
            continue;
        }
        return p;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransformValidity {
    Valid,
    NotProjective,
    NotInvertible,
}

/// Checks `|alpha| = |beta| = |gamma|` and that `alpha - gamma`,
/// `beta - gamma` form a basis of the sum-zero lattice.
pub fn validate_monomial_transform(m: &MonomialMatrix) -> TransformValidity {
    let [a, b, g] = m.columns;
    let deg = |v: &[i64; 3]| v.iter().sum::<i64>();
    if deg(&a) != deg(&g) || deg(&b) != deg(&g) {
        return TransformValidity::NotProjective;
    }
    // Coordinates in the basis (1,-1,0), (0,1,-1): v = c1 e1 + c2 e2.
    let coords = |v: &[i64; 3]| (v[0] - g[0], -(v[2] - g[2]));
    let (a1, a2) = coords(&a);
    let (b1, b2) = coords(&b);
    if (a1 * b2 - a2 * b1).abs() == 1 {
        TransformValidity::Valid
    } else {
        TransformValidity::NotInvertible
    }
}
