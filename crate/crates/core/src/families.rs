//! The three families of toric polar Cremona forms, equivalence moves, and
//! classification of factored forms.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::birational::{validate_monomial_transform, TransformValidity};
use crate::poly::{coprime, squarefree_part, Monomial, MonomialMatrix, Poly, Rational};
use crate::toric::{binomial_contracted_normal_form, contraction_test, toric_derivatives};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `(x+z)^a (y+z)^b`
    Tensor { a: u32, b: u32 },
    /// `(x+z)^a ((x+z)^d + y z^(d-1))^b`
    Trapezoid { a: u32, b: u32, d: u32 },
    /// `(x^2+y^2+z^2-2(xy+xz+yz))^d`
    Quadric { d: u32 },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), Error> {
        let bad = |m: &str| Err(Error::InvalidSpec(m.to_string()));
        match *self {
            FamilySpec::Tensor { a, b } if a == 0 || b == 0 => bad("tensor needs a,b >= 1"),
            FamilySpec::Trapezoid { b, d, .. } if b == 0 || d == 0 => bad("trapezoid needs b,d >= 1"),
            FamilySpec::Quadric { d: 0 } => bad("quadric needs d >= 1"),
            _ => Ok(()),
        }
    }

    /// Distinct irreducible factors with multiplicities.
    pub fn factors(&self) -> Vec<(Poly, u32)> {
        let xz = &Poly::var(3, 0) + &Poly::var(3, 2);
        match *self {
            FamilySpec::Tensor { a, b } => {
                vec![(xz, a), (&Poly::var(3, 1) + &Poly::var(3, 2), b)]
            }
            FamilySpec::Trapezoid { a, b, d } => {
                let mut out = Vec::new();
                if a > 0 {
                    out.push((xz, a));
                }
                out.push((trapezoid_factor(d), b));
                out
            }
            FamilySpec::Quadric { d } => vec![(quadric(), d)],
        }
    }

    /// Degree of the built form.
    pub fn degree(&self) -> u32 {
        match *self {
            FamilySpec::Tensor { a, b } => a + b,
            FamilySpec::Trapezoid { a, b, d } => a + d * b,
            FamilySpec::Quadric { d } => 2 * d,
        }
    }

    /// False for the quadric family, whose coefficients cannot all be made positive.
    pub fn has_positive_representative(&self) -> bool {
        !matches!(self, FamilySpec::Quadric { .. })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Tensor { a, b } => write!(f, "tensor:{a},{b}"),
            FamilySpec::Trapezoid { a, b, d } => write!(f, "trapezoid:{a},{b},{d}"),
            FamilySpec::Quadric { d } => write!(f, "quadric:{d}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidSpec(format!("cannot parse '{s}'"));
        let (kind, params) = s.trim().split_once(':').ok_or_else(bad)?;
        let nums: Vec<u32> = params
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        let spec = match (kind, nums.as_slice()) {
            ("tensor", [a, b]) => FamilySpec::Tensor { a: *a, b: *b },
            ("trapezoid", [a, b, d]) => FamilySpec::Trapezoid { a: *a, b: *b, d: *d },
            ("quadric", [d]) => FamilySpec::Quadric { d: *d },
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// `x^2+y^2+z^2-2(xy+xz+yz)`
pub fn quadric() -> Poly {
    "x^2+y^2+z^2-2*x*y-2*x*z-2*y*z".parse().unwrap()
}

/// `(x+z)^d + y z^(d-1)`
pub fn trapezoid_factor(d: u32) -> Poly {
    let xz = &Poly::var(3, 0) + &Poly::var(3, 2);
    let tail = Poly::term(3, Rational::one(), Monomial::from_slice(&[0, 1, d as i32 - 1]));
    &xz.pow(d) + &tail
}

/// The expanded form of a family member.
pub fn build_family(spec: &FamilySpec) -> Result<Poly, Error> {
    spec.validate()?;
    Ok(spec
        .factors()
        .iter()
        .fold(Poly::one(3), |acc, (f, m)| &acc * &f.pow(*m)))
}

#[derive(Clone, Debug, PartialEq)]
pub enum EquivalenceMove {
    /// `F(x,y,z) -> F(a x, b y, c z)`
    ScaleVariables([Rational; 3]),
    MultiplyMonomial(Monomial),
    MonomialTransform(MonomialMatrix),
}

impl fmt::Display for EquivalenceMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquivalenceMove::ScaleVariables([a, b, c]) => write!(f, "scale({a}, {b}, {c})"),
            EquivalenceMove::MultiplyMonomial(m) => {
                write!(f, "multiply({})", Poly::term(3, Rational::one(), *m))
            }
            EquivalenceMove::MonomialTransform(m) => {
                let [a, b, c] = m.columns;
                write!(f, "transform({a:?}, {b:?}, {c:?})")
            }
        }
    }
}

/// Applies the moves in order and returns the ordinary form coprime to `xyz`.
pub fn apply_equivalence(f: &Poly, moves: &[EquivalenceMove]) -> Result<Poly, Error> {
    let mut g = f.clone();
    for mv in moves {
        g = match mv {
            EquivalenceMove::ScaleVariables(s) => {
                if s.iter().any(|c| c.is_zero()) {
                    return Err(Error::InvalidTransform("zero scaling".into()));
                }
                g.scale_vars(s)
            }
            EquivalenceMove::MultiplyMonomial(m) => g.mul_monomial(m),
            EquivalenceMove::MonomialTransform(m) => match validate_monomial_transform(m) {
                TransformValidity::Valid => g.substitute_monomial(m),
                TransformValidity::NotProjective => {
                    return Err(Error::InvalidTransform("columns have different degrees".into()))
                }
                TransformValidity::NotInvertible => {
                    return Err(Error::InvalidTransform(
                        "differences do not form a lattice basis".into(),
                    ))
                }
            },
        };
    }
    Ok(g.laurent_normalize().0)
}

#[derive(Clone, Debug, PartialEq)]
pub struct BinomialNormalization {
    pub moves: Vec<EquivalenceMove>,
    /// Monic image of `GH`, always `(x+z)(y+z)`.
    pub product: Poly,
    /// True when `H` was sent to `x+z` and `G` to `y+z`.
    pub swapped: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum PairOutcome {
    Normalized(BinomialNormalization),
    TooManyIntersections(u64),
}

/// Writes a binomial as `c2 m1 (alpha + x^A y^a z^(-A-a))`, returning `(A, a, alpha)`.
fn binomial_data(g: &Poly) -> Result<(i64, i64, Rational), Error> {
    let (g, _) = g.laurent_normalize();
    if g.len() != 2 || !g.is_homogeneous() {
        return Err(Error::NotBinomial(g.to_string()));
    }
    let t: Vec<(Monomial, Rational)> = g.terms().map(|(m, c)| (*m, c.clone())).collect();
    let e = t[1].0.div(&t[0].0);
    Ok((e.exp(0) as i64, e.exp(1) as i64, &t[0].1 / &t[1].1))
}

/// Moves carrying two coprime irreducible binomials to `x+z` and `y+z`,
/// when their curves meet exactly once off the coordinate lines.
pub fn normalize_binomial_pair(g: &Poly, h: &Poly) -> Result<PairOutcome, Error> {
    let (mut ga, mut gb, mut galpha) = binomial_data(g)?;
    let (mut ha, mut hb, mut halpha) = binomial_data(h)?;
    if !coprime(g, h) {
        return Err(Error::InvalidFactors("binomials share a factor".into()));
    }
    let det = ga * hb - gb * ha;
    if det.abs() != 1 {
        return Ok(PairOutcome::TooManyIntersections(det.unsigned_abs()));
    }
    let swapped = det == -1;
    if swapped {
        std::mem::swap(&mut ga, &mut ha);
        std::mem::swap(&mut gb, &mut hb);
        std::mem::swap(&mut galpha, &mut halpha);
    }
    let (a_big, a_small, b_big, b_small) = (ga, gb, ha, hb);
    let m = MonomialMatrix::new(
        [b_small, -a_small, a_small - b_small + 1],
        [-b_big, a_big, b_big - a_big + 1],
        [0, 0, 1],
    );
    let mut moves = Vec::new();
    if !m.is_identity() {
        moves.push(EquivalenceMove::MonomialTransform(m));
    }
    let s = [galpha, halpha, Rational::one()];
    if !s.iter().all(|c| c.is_one()) {
        moves.push(EquivalenceMove::ScaleVariables(s));
    }
    let product = apply_equivalence(&(g * h), &moves)?.monic();
    debug_assert_eq!(product, "x*y+x*z+y*z+z^2".parse().unwrap());
    Ok(PairOutcome::Normalized(BinomialNormalization {
        moves,
        product,
        swapped,
    }))
}

#[derive(Clone, Debug, PartialEq)]
pub enum Classification {
    MatchedFamily {
        spec: FamilySpec,
        moves: Vec<EquivalenceMove>,
        note: Option<String>,
    },
    Unmatched(String),
}

/// Places a factored form in one of the three families, following the split
/// into all factors contracted, none contracted, or mixed.
pub fn verify_classification(factors: &[(Poly, u32)]) -> Result<Classification, Error> {
    if factors.is_empty() {
        return Err(Error::InvalidFactors("empty factor list".into()));
    }
    let mut norm: Vec<(Poly, u32)> = Vec::new();
    for (f, m) in factors {
        if f.arity() != 3 {
            return Err(Error::ArityMismatch(f.arity(), 3));
        }
        if *m == 0 {
            return Err(Error::InvalidFactors("zero multiplicity".into()));
        }
        let (g, _) = f.laurent_normalize();
        let deg = g.form_degree().ok_or(Error::NotHomogeneous)?;
        if deg == 0 {
            return Err(Error::InvalidFactors(format!("{f} is a monomial")));
        }
        if squarefree_part(&g).form_degree() != Some(deg) {
            return Err(Error::InvalidFactors(format!("{f} is reducible (repeated factor)")));
        }
        norm.push((g.monic(), *m));
    }
    for i in 0..norm.len() {
        for j in i + 1..norm.len() {
            if !coprime(&norm[i].0, &norm[j].0) {
                return Err(Error::InvalidFactors(format!(
                    "{} and {} share a factor",
                    norm[i].0, norm[j].0
                )));
            }
        }
    }
    let mut contracted = Vec::new();
    let mut free = Vec::new();
    for (g, m) in &norm {
        // Rejects binomials with non-coprime exponents, which are reducible.
        binomial_contracted_normal_form(g)?;
        let v = contraction_test(g, &toric_derivatives(g))?;
        if v.contracted {
            contracted.push((g.clone(), *m));
        } else {
            free.push((g.clone(), *m));
        }
    }

    let product = norm.iter().fold(Poly::one(3), |acc, (f, m)| &acc * &f.pow(*m));
    let certify = |spec: FamilySpec, moves: Vec<EquivalenceMove>, note: Option<String>| {
        let image = apply_equivalence(&product, &moves)?.monic();
        let target = build_family(&spec)?.monic();
        if image != target {
            return Ok(Classification::Unmatched(format!(
                "moves do not reproduce {spec}"
            )));
        }
        Ok(Classification::MatchedFamily { spec, moves, note })
    };

    match (contracted.len(), free.len()) {
        (2, 0) => {
            let (g, gm) = &contracted[0];
            let (h, hm) = &contracted[1];
            match normalize_binomial_pair(g, h)? {
                PairOutcome::TooManyIntersections(n) => Ok(Classification::Unmatched(format!(
                    "contracted factors meet {n} times off the coordinate lines"
                ))),
                PairOutcome::Normalized(nb) => {
                    let (a, b) = if nb.swapped { (*hm, *gm) } else { (*gm, *hm) };
                    certify(FamilySpec::Tensor { a, b }, nb.moves, None)
                }
            }
        }
        (_, 0) => Ok(Classification::Unmatched(format!(
            "all {} factors contracted; exactly two are required",
            contracted.len()
        ))),
        (0, 1) => {
            let (g, m) = &free[0];
            for target in single_targets(g) {
                if let Some((moves, _)) = match_single(g, &target.form()).into_iter().next() {
                    let spec = target.spec(*m);
                    let note = match spec {
                        FamilySpec::Trapezoid { a: 0, d: 1, .. } => {
                            Some("triangle: trapezoid with a=0, d=1".to_string())
                        }
                        _ => None,
                    };
                    return certify(spec, moves, note);
                }
            }
            Ok(Classification::Unmatched(
                "non-contracted factor matches neither normal form".into(),
            ))
        }
        (1, 1) => {
            let (c, a) = &contracted[0];
            let (n, b) = &free[0];
            let line = &Poly::var(3, 0) + &Poly::var(3, 2);
            let d = n_points(n).saturating_sub(2) as u32;
            if d == 0 {
                return Ok(Classification::Unmatched("non-contracted factor too small".into()));
            }
            for (moves, _) in match_single(n, &trapezoid_factor(d)) {
                if apply_equivalence(c, &moves)?.monic() == line {
                    return certify(FamilySpec::Trapezoid { a: *a, b: *b, d }, moves, None);
                }
            }
            Ok(Classification::Unmatched(
                "contracted factor is not sent to x+z by the trapezoid normalization".into(),
            ))
        }
        (_, 1) => Ok(Classification::Unmatched(
            "more than one contracted factor beside a non-contracted one".into(),
        )),
        _ => Ok(Classification::Unmatched(format!(
            "{} non-contracted factors; at most one is allowed",
            free.len()
        ))),
    }
}

#[derive(Clone, Copy)]
enum SingleTarget {
    Quadric,
    Trapezoid(u32),
}

impl SingleTarget {
    fn form(self) -> Poly {
        match self {
            SingleTarget::Quadric => quadric(),
            SingleTarget::Trapezoid(d) => trapezoid_factor(d),
        }
    }

    fn spec(self, m: u32) -> FamilySpec {
        match self {
            SingleTarget::Quadric => FamilySpec::Quadric { d: m },
            SingleTarget::Trapezoid(d) => FamilySpec::Trapezoid { a: 0, b: m, d },
        }
    }
}

/// Normal forms with as many terms as `g`.
fn single_targets(g: &Poly) -> Vec<SingleTarget> {
    let n = n_points(g);
    let mut out = Vec::new();
    if n == 6 {
        out.push(SingleTarget::Quadric);
    }
    if n >= 3 {
        out.push(SingleTarget::Trapezoid((n - 2) as u32));
    }
    out
}

fn n_points(g: &Poly) -> usize {
    g.len()
}

fn support_2d(g: &Poly) -> Vec<(i64, i64)> {
    let (g, _) = g.laurent_normalize();
    g.terms().map(|(m, _)| (m.exp(0) as i64, m.exp(1) as i64)).collect()
}

/// All ways to carry `g` onto `target` by a monomial transform followed by
/// scaling `x` and `y`, found by matching exponent supports.
fn match_single(g: &Poly, target: &Poly) -> Vec<(Vec<EquivalenceMove>, MonomialMatrix)> {
    let p = support_2d(g);
    let q = support_2d(target);
    let mut out = Vec::new();
    if p.len() != q.len() || p.len() < 3 {
        return out;
    }
    let qset: BTreeSet<(i64, i64)> = q.iter().copied().collect();
    let p0 = p[0];
    let p1 = p[1];
    let Some(p2) = p
        .iter()
        .copied()
        .find(|r| (p1.0 - p0.0) * (r.1 - p0.1) - (p1.1 - p0.1) * (r.0 - p0.0) != 0)
    else {
        return out;
    };
    let u = (p1.0 - p0.0, p1.1 - p0.1);
    let v = (p2.0 - p0.0, p2.1 - p0.1);
    let det_p = u.0 * v.1 - u.1 * v.0;
    let target_n = target.laurent_normalize().0;
    let mut seen = BTreeSet::new();
    for &q0 in &q {
        for &q1 in &q {
            for &q2 in &q {
                if q0 == q1 || q0 == q2 || q1 == q2 {
                    continue;
                }
                let uq = (q1.0 - q0.0, q1.1 - q0.1);
                let vq = (q2.0 - q0.0, q2.1 - q0.1);
                // A [u v] = [uq vq]  =>  A = [uq vq] adj([u v]) / det
                let num = [
                    [uq.0 * v.1 - vq.0 * u.1, -uq.0 * v.0 + vq.0 * u.0],
                    [uq.1 * v.1 - vq.1 * u.1, -uq.1 * v.0 + vq.1 * u.0],
                ];
                if num.iter().flatten().any(|e| e % det_p != 0) {
                    continue;
                }
                let a = [
                    [num[0][0] / det_p, num[0][1] / det_p],
                    [num[1][0] / det_p, num[1][1] / det_p],
                ];
                if (a[0][0] * a[1][1] - a[0][1] * a[1][0]).abs() != 1 {
                    continue;
                }
                let image: BTreeSet<(i64, i64)> = p
                    .iter()
                    .map(|r| {
                        let d = (r.0 - p0.0, r.1 - p0.1);
                        (
                            a[0][0] * d.0 + a[0][1] * d.1 + q0.0,
                            a[1][0] * d.0 + a[1][1] * d.1 + q0.1,
                        )
                    })
                    .collect();
                if image != qset || !seen.insert(a) {
                    continue;
                }
                let m = MonomialMatrix::new(
                    [a[0][0], a[1][0], 1 - a[0][0] - a[1][0]],
                    [a[0][1], a[1][1], 1 - a[0][1] - a[1][1]],
                    [0, 0, 1],
                );
                if let Some(moves) = solve_scaling(g, &m, &target_n) {
                    out.push((moves, m));
                }
            }
        }
    }
    out
}

fn solve_scaling(g: &Poly, m: &MonomialMatrix, target: &Poly) -> Option<Vec<EquivalenceMove>> {
    let mut moves = Vec::new();
    if !m.is_identity() {
        moves.push(EquivalenceMove::MonomialTransform(*m));
    }
    let g1 = apply_equivalence(g, &moves).ok()?;
    let d = target.form_degree()? as i32;
    let ratio = |e: [i32; 3]| {
        let mono = Monomial::from_slice(&e);
        let t = target.coeff(&mono);
        let c = g1.coeff(&mono);
        if c.is_zero() || t.is_zero() {
            None
        } else {
            Some(t / c)
        }
    };
    let r0 = ratio([0, 0, d])?;
    let sx = ratio([1, 0, d - 1])? / &r0;
    let sy = ratio([0, 1, d - 1])? / &r0;
    let s = [sx, sy, Rational::one()];
    if !s.iter().all(|c| c.is_one()) {
        moves.push(EquivalenceMove::ScaleVariables(s));
    }
    let image = apply_equivalence(g, &moves).ok()?;
    if image.monic() == target.monic() {
        Some(moves)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use crate::birational::{is_birational, RationalPlaneMap, Verdict};
    use crate::toric::toric_polar_system;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn builds_examples() {
        assert_eq!(build_family(&FamilySpec::Tensor { a: 1, b: 1 }).unwrap(), p("x*y+x*z+y*z+z^2"));
        assert_eq!(build_family(&FamilySpec::Trapezoid { a: 0, b: 1, d: 1 }).unwrap(), p("x+y+z"));
        assert_eq!(build_family(&FamilySpec::Quadric { d: 1 }).unwrap(), quadric());
        assert_eq!(
            build_family(&FamilySpec::Trapezoid { a: 1, b: 1, d: 1 }).unwrap(),
            p("x^2+2*x*z+z^2+x*y+y*z")
        );
        assert!(build_family(&FamilySpec::Tensor { a: 0, b: 1 }).is_err());
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in ["tensor:2,3", "trapezoid:0,1,2", "quadric:4"] {
            assert_eq!(s.parse::<FamilySpec>().unwrap().to_string(), s);
        }
        assert!("tensor:1".parse::<FamilySpec>().is_err());
        assert!("quadric:0".parse::<FamilySpec>().is_err());
        assert!("cube:1".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn equivalence_moves() {
        let scaled = apply_equivalence(&p("x+y"), &[EquivalenceMove::ScaleVariables([rat(2), rat(1), rat(1)])]).unwrap();
        assert_eq!(scaled, p("2*x+y"));
        let q = quadric();
        let laurent_move = EquivalenceMove::MultiplyMonomial(Monomial::from_slice(&[-2, -1, -1]));
        assert_eq!(apply_equivalence(&q, &[laurent_move]).unwrap(), q);
        let bad = EquivalenceMove::MonomialTransform(MonomialMatrix::new([2, 0, 0], [0, 2, 0], [0, 0, 2]));
        assert!(matches!(apply_equivalence(&q, &[bad]), Err(Error::InvalidTransform(_))));
    }

    #[test]
    fn binomial_pairs() {
        match normalize_binomial_pair(&p("x+z"), &p("y+z")).unwrap() {
            PairOutcome::Normalized(nb) => {
                assert!(nb.moves.is_empty());
                assert_eq!(nb.product, p("x*y+x*z+y*z+z^2"));
            }
            o => panic!("{o:?}"),
        }
        assert_eq!(
            normalize_binomial_pair(&p("x^2-y*z"), &p("y^2-x*z")).unwrap(),
            PairOutcome::TooManyIntersections(3)
        );
        // These meet twice off the axes, at [1:1:1] and [1:1:-1].
        assert_eq!(
            normalize_binomial_pair(&p("z^2-x*y"), &p("y-x")).unwrap(),
            PairOutcome::TooManyIntersections(2)
        );
        assert!(matches!(
            normalize_binomial_pair(&p("x+y+z"), &p("y+z")),
            Err(Error::NotBinomial(_))
        ));
    }

    #[test]
    fn binomial_pair_with_nontrivial_transform() {
        // z^2 - xy and x - z meet off the axes only at [1:1:1].
        match normalize_binomial_pair(&p("z^2-x*y"), &p("x-z")).unwrap() {
            PairOutcome::Normalized(nb) => {
                assert_eq!(nb.product, p("(x+z)*(y+z)"));
                assert!(!nb.moves.is_empty());
            }
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn classification_examples() {
        let r = verify_classification(&[(p("x+z"), 2), (p("y+z"), 3)]).unwrap();
        assert!(matches!(r, Classification::MatchedFamily { spec: FamilySpec::Tensor { a: 2, b: 3 }, .. }));
        let r = verify_classification(&[(p("x+z"), 1), (p("(x+z)^2+y*z"), 2)]).unwrap();
        assert!(matches!(
            r,
            Classification::MatchedFamily { spec: FamilySpec::Trapezoid { a: 1, b: 2, d: 2 }, .. }
        ));
    }

    #[test]
    fn line_pair_is_trapezoid() {
        let r = verify_classification(&[(p("x+y+z"), 1), (p("x+z"), 1)]).unwrap();
        assert!(matches!(
            r,
            Classification::MatchedFamily { spec: FamilySpec::Trapezoid { a: 1, b: 1, d: 1 }, .. }
        ));
        let sys = toric_polar_system(&p("(x+y+z)*(x+z)")).unwrap();
        let rep = is_birational(&RationalPlaneMap::from_system(&sys), 5, 0).unwrap();
        assert_eq!(rep.verdict, Verdict::Birational);
    }

    #[test]
    fn classification_of_transformed_forms() {
        // A scaled quadric under the standard Cremona exponent transform.
        let m = MonomialMatrix::new([1, 1, -1], [0, 1, 0], [0, 0, 1]);
        assert_eq!(validate_monomial_transform(&m), TransformValidity::Valid);
        let moves = [
            EquivalenceMove::ScaleVariables([rat(3), rat(-2), rat(1)]),
            EquivalenceMove::MonomialTransform(m),
        ];
        let g = apply_equivalence(&quadric(), &moves).unwrap();
        let r = verify_classification(&[(g, 2)]).unwrap();
        assert!(matches!(r, Classification::MatchedFamily { spec: FamilySpec::Quadric { d: 2 }, .. }), "{r:?}");
    }

    #[test]
    fn unmatched_and_errors() {
        let r = verify_classification(&[(p("x+y+z"), 1), (p("x+2*y+3*z"), 1)]).unwrap();
        assert!(matches!(r, Classification::Unmatched(_)));
        assert!(verify_classification(&[(p("x^2-z^2"), 1)]).is_err());
        assert!(verify_classification(&[(p("x+z"), 1), (p("x+z"), 2)]).is_err());
        let r = verify_classification(&[(p("x+z"), 3)]).unwrap();
        assert!(matches!(r, Classification::Unmatched(_)));
    }
}
