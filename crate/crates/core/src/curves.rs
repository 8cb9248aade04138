//! Monomially parameterized rational curves in `s, t, l` with `l = -(s+t)`:
//! the seven shapes I..VII, quadratic Cremona steps, implicitization and the
//! syzygy linear-factor count.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::poly::{gcd_many, rat, resultant, squarefree_part, Monomial, Poly};
use crate::Error;

/// `sign * s^e[0] t^e[1] l^e[2]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonomialComponent {
    pub sign: i8,
    pub exps: [u32; 3],
}

impl MonomialComponent {
    pub fn new(sign: i8, exps: [u32; 3]) -> Self {
        MonomialComponent { sign, exps }
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Expanded binary form in `s, t`.
    pub fn to_form(&self) -> Poly {
        let s = Poly::var(2, 0);
        let t = Poly::var(2, 1);
        let l = -(&s + &t);
        let p = &(&s.pow(self.exps[0]) * &t.pow(self.exps[1])) * &l.pow(self.exps[2]);
        p.scale(&rat(self.sign as i64))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurveType {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    Other,
}

impl fmt::Display for CurveType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CurveType::I => "I",
            CurveType::II => "II",
            CurveType::III => "III",
            CurveType::IV => "IV",
            CurveType::V => "V",
            CurveType::VI => "VI",
            CurveType::VII => "VII",
            CurveType::Other => "Other",
        };
        f.write_str(s)
    }
}

impl FromStr for CurveType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s.trim() {
            "I" => CurveType::I,
            "II" => CurveType::II,
            "III" => CurveType::III,
            "IV" => CurveType::IV,
            "V" => CurveType::V,
            "VI" => CurveType::VI,
            "VII" => CurveType::VII,
            other => return Err(Error::InvalidCurve(format!("unknown type '{other}'"))),
        })
    }
}

const TYPES: [CurveType; 7] = [
    CurveType::I,
    CurveType::II,
    CurveType::III,
    CurveType::IV,
    CurveType::V,
    CurveType::VI,
    CurveType::VII,
];

/// Exponent matrix of a shape (rows are components, columns `s, t, l`) and
/// the mask of entries that must be positive.
fn pattern(ty: CurveType, p: [i64; 3], d: i64) -> ([[i64; 3]; 3], [[bool; 3]; 3]) {
    let [a, b, c] = p;
    let (m, z) = match ty {
        CurveType::I => (
            [[a, d - a, 0], [0, b, d - b], [d - c, 0, c]],
            [[true, true, false], [false, true, true], [true, false, true]],
        ),
        CurveType::II => (
            [[a, b, d - a - b], [d - c, c, 0], [0, 0, d]],
            [[true, true, true], [true, true, false], [false, false, true]],
        ),
        CurveType::III => (
            [[a, d - a, 0], [0, b, d - b], [0, 0, d]],
            [[true, true, false], [false, true, true], [false, false, true]],
        ),
        CurveType::IV => (
            [[a, d - a, 0], [d - b, b, 0], [0, 0, d]],
            [[true, true, false], [true, true, false], [false, false, true]],
        ),
        CurveType::V => (
            [[a, b, d - a - b], [0, d, 0], [0, 0, d]],
            [[true, true, true], [false, true, false], [false, false, true]],
        ),
        CurveType::VI => (
            [[a, d - a, 0], [0, d, 0], [0, 0, d]],
            [[true, true, false], [false, true, false], [false, false, true]],
        ),
        CurveType::VII => (
            [[d, 0, 0], [0, d, 0], [0, 0, d]],
            [[true, false, false], [false, true, false], [false, false, true]],
        ),
        CurveType::Other => unreachable!(),
    };
    (m, z)
}

/// Entries holding the parameters `(a, b, c)` of each shape.
fn param_slots(ty: CurveType) -> [Option<(usize, usize)>; 3] {
    match ty {
        CurveType::I => [Some((0, 0)), Some((1, 1)), Some((2, 2))],
        CurveType::II => [Some((0, 0)), Some((0, 1)), Some((1, 1))],
        CurveType::III | CurveType::IV => [Some((0, 0)), Some((1, 1)), None],
        CurveType::V => [Some((0, 0)), Some((0, 1)), None],
        CurveType::VI => [Some((0, 0)), None, None],
        _ => [None, None, None],
    }
}

fn match_pattern(ty: CurveType, e: &[[i64; 3]; 3], d: i64) -> Option<[i64; 3]> {
    let mut p = [0i64; 3];
    for (k, slot) in param_slots(ty).iter().enumerate() {
        if let Some((i, j)) = slot {
            p[k] = e[*i][*j];
        }
    }
    let (m, pos) = pattern(ty, p, d);
    for i in 0..3 {
        for j in 0..3 {
            if m[i][j] != e[i][j] || (pos[i][j] != (m[i][j] > 0)) {
                return None;
            }
        }
    }
    Some(p)
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// A matched shape: the type, its parameters `(a, b, c)` (unused ones zero),
/// the degree, and the permutations bringing the curve into that shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub ty: CurveType,
    pub params: [i64; 3],
    pub degree: u32,
    /// Canonical component `k` is component `component_perm[k]` of the input.
    pub component_perm: [usize; 3],
    /// Canonical symbol `k` is symbol `symbol_perm[k]` of the input.
    pub symbol_perm: [usize; 3],
}

/// Differences of exponent vectors of rank two give a birational monomial map
/// of the torus, hence of the line `s + t + l = 0`. In rank one the image is
/// cut out by a single ratio `u`, which must have degree one on the line.
fn birational_onto_image(comps: &[MonomialComponent; 3]) -> bool {
    use num_integer::Integer;
    let e = comps.map(|c| c.exps.map(|x| x as i64));
    let d1: [i64; 3] = [0, 1, 2].map(|v| e[1][v] - e[0][v]);
    let d2: [i64; 3] = [0, 1, 2].map(|v| e[2][v] - e[0][v]);
    let cross = [
        d1[1] * d2[2] - d1[2] * d2[1],
        d1[2] * d2[0] - d1[0] * d2[2],
        d1[0] * d2[1] - d1[1] * d2[0],
    ];
    if cross.iter().any(|&c| c != 0) {
        return true;
    }
    let Some(v) = [d1, d2].into_iter().find(|d| d.iter().any(|&x| x != 0)) else {
        return false;
    };
    let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    let v = v.map(|x| x / g);
    let k = v.iter().position(|&x| x != 0).unwrap();
    let mult = |d: &[i64; 3]| d[k] / v[k];
    if mult(&d1).gcd(&mult(&d2)) != 1 {
        return false;
    }
    let mut sorted = v;
    sorted.sort();
    sorted == [-1, 0, 1]
}

/// A curve `[f : g : h]` with monomial components in `s, t, l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ParamCurve {
    pub comps: [MonomialComponent; 3],
}

impl ParamCurve {
    pub fn new(comps: [MonomialComponent; 3]) -> Result<Self, Error> {
        let d = comps[0].degree();
        if d == 0 || comps.iter().any(|c| c.degree() != d) {
            return Err(Error::InvalidCurve("components must share a positive degree".into()));
        }
        if comps.iter().any(|c| c.sign != 1 && c.sign != -1) {
            return Err(Error::InvalidCurve("signs must be +1 or -1".into()));
        }
        for v in 0..3 {
            if comps.iter().all(|c| c.exps[v] > 0) {
                return Err(Error::InvalidCurve("components share a factor".into()));
            }
        }
        if !birational_onto_image(&comps) {
            return Err(Error::InvalidCurve("parameterization is not birational onto its image".into()));
        }
        Ok(ParamCurve { comps })
    }

    pub fn from_exponents(e: [[u32; 3]; 3]) -> Result<Self, Error> {
        Self::new(e.map(|x| MonomialComponent::new(1, x)))
    }

    /// The canonical curve of a shape.
    pub fn of_type(ty: CurveType, params: [i64; 3], d: i64) -> Result<Self, Error> {
        if ty == CurveType::Other {
            return Err(Error::InvalidCurve("no shape for Other".into()));
        }
        let (m, _) = pattern(ty, params, d);
        if m.iter().flatten().any(|&x| x < 0) {
            return Err(Error::InvalidCurve(format!("negative exponent in type {ty}")));
        }
        let c = Self::from_exponents(m.map(|r| r.map(|x| x as u32)))?;
        if classify_type(&c).ty != ty {
            return Err(Error::InvalidCurve(format!(
                "parameters {params:?}, d={d} do not give a type {ty} curve"
            )));
        }
        Ok(c)
    }

    pub fn degree(&self) -> u32 {
        self.comps[0].degree()
    }

    pub fn exponents(&self) -> [[i64; 3]; 3] {
        self.comps.map(|c| c.exps.map(|x| x as i64))
    }

    pub fn to_forms(&self) -> [Poly; 3] {
        self.comps.map(|c| c.to_form())
    }

    /// Reorders components and relabels symbols; signs follow their components.
    pub fn permuted(&self, component_perm: [usize; 3], symbol_perm: [usize; 3]) -> Self {
        let comps = component_perm.map(|i| {
            let c = self.comps[i];
            MonomialComponent::new(c.sign, symbol_perm.map(|j| c.exps[j]))
        });
        ParamCurve { comps }
    }

    pub fn with_sign(&self, component: usize, sign: i8) -> Self {
        let mut c = *self;
        c.comps[component].sign = sign;
        c
    }
}

fn fmt_component(c: &MonomialComponent) -> String {
    let names = ["s", "t", "l"];
    let mut parts = Vec::new();
    for (n, &e) in names.iter().zip(&c.exps) {
        match e {
            0 => {}
            1 => parts.push(n.to_string()),
            _ => parts.push(format!("{n}^{e}")),
        }
    }
    let body = if parts.is_empty() { "1".to_string() } else { parts.join("*") };
    if c.sign < 0 {
        format!("-{body}")
    } else {
        body
    }
}

impl fmt::Display for ParamCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} : {} : {}]",
            fmt_component(&self.comps[0]),
            fmt_component(&self.comps[1]),
            fmt_component(&self.comps[2])
        )
    }
}

fn parse_component(text: &str) -> Result<MonomialComponent, Error> {
    let bad = || Error::InvalidCurve(format!("cannot parse component '{text}'"));
    let mut body = text.trim();
    let mut sign = 1i8;
    if let Some(rest) = body.strip_prefix('-') {
        sign = -1;
        body = rest.trim();
    }
    let mut exps = [0u32; 3];
    if body != "1" {
        for factor in body.split('*') {
            let factor = factor.trim();
            let (name, e) = match factor.split_once('^') {
                Some((n, e)) => (n.trim(), e.trim().parse::<u32>().map_err(|_| bad())?),
                None => (factor, 1),
            };
            let idx = match name {
                "s" => 0,
                "t" => 1,
                "l" => 2,
                _ => return Err(bad()),
            };
            exps[idx] += e;
        }
    }
    Ok(MonomialComponent::new(sign, exps))
}

/// Accepts `[s^2*t : t*l^2 : -s^3]` (commas also separate) or a shape such as
/// `VII:d=3`, `I:a=2,b=2,c=2,d=4`.
impl FromStr for ParamCurve {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self, Error> {
        let text = text.trim();
        if let Some(inner) = text.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let sep = if inner.contains(':') { ':' } else { ',' };
            let parts: Vec<&str> = inner.split(sep).collect();
            if parts.len() != 3 {
                return Err(Error::InvalidCurve("expected three components".into()));
            }
            return ParamCurve::new([
                parse_component(parts[0])?,
                parse_component(parts[1])?,
                parse_component(parts[2])?,
            ]);
        }
        let (ty, rest) = text
            .split_once(':')
            .ok_or_else(|| Error::InvalidCurve(format!("cannot parse curve '{text}'")))?;
        let ty: CurveType = ty.parse()?;
        let mut params = [0i64; 3];
        let mut d = None;
        for kv in rest.split(',') {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::InvalidCurve(format!("expected key=value, got '{kv}'")))?;
            let v: i64 = v
                .trim()
                .parse()
                .map_err(|_| Error::InvalidCurve(format!("bad value '{v}'")))?;
            match k.trim() {
                "a" => params[0] = v,
                "b" => params[1] = v,
                "c" => params[2] = v,
                "d" => d = Some(v),
                other => return Err(Error::InvalidCurve(format!("unknown key '{other}'"))),
            }
        }
        let d = d.ok_or_else(|| Error::InvalidCurve("missing d".into()))?;
        ParamCurve::of_type(ty, params, d)
    }
}

/// Tries every component order and symbol relabeling against the shapes in
/// order I..VII; the first match wins.
pub fn classify_type(curve: &ParamCurve) -> Classification {
    let d = curve.degree() as i64;
    for ty in TYPES {
        for cp in PERMS {
            for sp in PERMS {
                let e = curve.permuted(cp, sp).exponents();
                if let Some(params) = match_pattern(ty, &e, d) {
                    return Classification {
                        ty,
                        params,
                        degree: d as u32,
                        component_perm: cp,
                        symbol_perm: sp,
                    };
                }
            }
        }
    }
    Classification {
        ty: CurveType::Other,
        params: [0; 3],
        degree: d as u32,
        component_perm: [0, 1, 2],
        symbol_perm: [0, 1, 2],
    }
}

/// Quadratic monomial map: output `k` is `prod_j x_j^rows[k][j]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CremonaMap {
    pub rows: [[u32; 3]; 3],
}

impl CremonaMap {
    /// `[yz : xz : xy]`
    pub const STANDARD: CremonaMap = CremonaMap {
        rows: [[0, 1, 1], [1, 0, 1], [1, 1, 0]],
    };
    /// `[xy : xz : yz]`
    pub const STANDARD_XY: CremonaMap = CremonaMap {
        rows: [[1, 1, 0], [1, 0, 1], [0, 1, 1]],
    };
    /// `[z^2 : xz : xy]`
    pub const Z2_XZ_XY: CremonaMap = CremonaMap {
        rows: [[0, 0, 2], [1, 0, 1], [1, 1, 0]],
    };
    /// `[z^2 : xy : yz]`
    pub const Z2_XY_YZ: CremonaMap = CremonaMap {
        rows: [[0, 0, 2], [1, 1, 0], [0, 1, 1]],
    };
    /// `[x^2 : yz : xz]`
    pub const X2_YZ_XZ: CremonaMap = CremonaMap {
        rows: [[2, 0, 0], [0, 1, 1], [1, 0, 1]],
    };
    /// `[y^2 : xy : xz]`
    pub const Y2_XY_XZ: CremonaMap = CremonaMap {
        rows: [[0, 2, 0], [1, 1, 0], [1, 0, 1]],
    };

    pub fn is_standard(&self) -> bool {
        let mut rows = self.rows;
        rows.sort();
        rows == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
    }
}

impl fmt::Display for CremonaMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["x", "y", "z"];
        let parts: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let mut s = String::new();
                for (n, &e) in names.iter().zip(r) {
                    match e {
                        0 => {}
                        1 => s.push_str(n),
                        _ => s.push_str(&format!("{n}^{e}")),
                    }
                }
                s
            })
            .collect();
        write!(f, "[{}]", parts.join(" : "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CremonaStep {
    pub map: CremonaMap,
    pub input: ParamCurve,
    /// Exponents in `s, t, l` of the common factor removed after substitution.
    pub removed: [u32; 3],
    pub output: ParamCurve,
}

impl fmt::Display for CremonaStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.map.is_standard() { "standard" } else { "non-standard" };
        let removed = fmt_component(&MonomialComponent::new(1, self.removed));
        write!(
            f,
            "{} -> {kind} {}, remove {} -> {} (type {})",
            self.input,
            self.map,
            removed,
            self.output,
            classify_type(&self.output).ty
        )
    }
}

/// Substitutes the components into the map and removes the monomial gcd.
pub fn apply_cremona(curve: &ParamCurve, map: &CremonaMap) -> CremonaStep {
    let raw: [MonomialComponent; 3] = map.rows.map(|row| {
        let mut exps = [0u32; 3];
        let mut sign = 1i8;
        for (j, &e) in row.iter().enumerate() {
            let c = curve.comps[j];
            for (x, ce) in exps.iter_mut().zip(c.exps) {
                *x += e * ce;
            }
            if e % 2 == 1 {
                sign *= c.sign;
            }
        }
        MonomialComponent::new(sign, exps)
    });
    let removed: [u32; 3] = [0, 1, 2].map(|v| raw.iter().map(|c| c.exps[v]).min().unwrap());
    let comps = raw.map(|c| MonomialComponent::new(c.sign, [0, 1, 2].map(|v| c.exps[v] - removed[v])));
    let output = ParamCurve::new(comps).expect("removing the monomial gcd leaves coprime components");
    CremonaStep {
        map: *map,
        input: *curve,
        removed,
        output,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub result: ParamCurve,
    pub steps: Vec<CremonaStep>,
}

/// Brings a curve of type II..VII to type I by the case analysis on shapes.
pub fn reduce_to_type_i(curve: &ParamCurve, max_steps: usize) -> Result<Reduction, Error> {
    let mut steps: Vec<CremonaStep> = Vec::new();
    let mut current = *curve;
    let first = classify_type(&current);
    if first.ty == CurveType::Other {
        return Err(Error::InvalidCurve(format!("{curve} matches none of the seven shapes")));
    }
    loop {
        let cls = classify_type(&current);
        match cls.ty {
            CurveType::I => {
                return Ok(Reduction {
                    result: current,
                    steps,
                })
            }
            CurveType::Other => {
                return Err(Error::InvalidCurve(format!("reduction reached {current}, no shape")));
            }
            _ => {}
        }
        let canon = current.permuted(cls.component_perm, cls.symbol_perm);
        let [a, b, c] = cls.params;
        let d = cls.degree as i64;
        let push = |steps: &mut Vec<CremonaStep>, from: &ParamCurve, map: CremonaMap| -> Result<ParamCurve, Error> {
            if steps.len() >= max_steps {
                return Err(Error::MaxStepsExceeded(max_steps));
            }
            let step = apply_cremona(from, &map);
            let out = step.output;
            steps.push(step);
            Ok(out)
        };
        current = match cls.ty {
            CurveType::II => {
                // b < c after swapping s and t if needed
                let (canon, a, b, c) = if b < c {
                    (canon, a, b, c)
                } else {
                    (canon.permuted([0, 1, 2], [1, 0, 2]), b, a, d - c)
                };
                if a > d - c {
                    push(&mut steps, &canon, CremonaMap::STANDARD_XY)?
                } else if a == d - c {
                    let c1 = push(&mut steps, &canon, CremonaMap::STANDARD_XY)?;
                    let c2 = push(&mut steps, &c1, CremonaMap::Z2_XZ_XY)?;
                    if b == c - b {
                        push(&mut steps, &c2, CremonaMap::Z2_XY_YZ)?
                    } else {
                        c2
                    }
                } else {
                    push(&mut steps, &canon, CremonaMap::X2_YZ_XZ)?
                }
            }
            CurveType::III => {
                if b == d - a {
                    push(&mut steps, &canon, CremonaMap::Y2_XY_XZ)?
                } else {
                    push(&mut steps, &canon, CremonaMap::STANDARD_XY)?
                }
            }
            _ => push(&mut steps, &canon, CremonaMap::STANDARD)?,
        };
    }
}

/// Implicit equation of `[f : g : h]` for coprime binary forms of equal
/// degree, via `Res_t(x h - z f, y h - z g)` in the chart `s = 1`.
pub fn implicitize(forms: &[Poly; 3]) -> Result<Poly, Error> {
    let d = forms[0].form_degree();
    if forms.iter().any(|f| f.arity() != 2 || !f.is_homogeneous() || f.is_zero() || f.form_degree() != d) {
        return Err(Error::InvalidCurve("components must be nonzero binary forms of equal degree".into()));
    }
    if !gcd_many(forms).is_constant() {
        return Err(Error::CommonFactor);
    }
    // shear so that no component vanishes at [0:1]
    let k = (0i64..)
        .find(|k| forms.iter().all(|f| !f.eval(&[rat(*k), rat(1)]).is_zero()))
        .unwrap();
    let s5 = Poly::var(5, 3);
    let t5 = Poly::var(5, 4);
    let lift = |f: &Poly| {
        f.compose(&[&s5 + &t5.scale(&rat(k)), t5.clone()])
            .eval_var(3, &rat(1))
    };
    let [f, g, h] = [lift(&forms[0]), lift(&forms[1]), lift(&forms[2])];
    let (x, y, z) = (Poly::var(5, 0), Poly::var(5, 1), Poly::var(5, 2));
    let p1 = &(&x * &h) - &(&z * &f);
    let p2 = &(&y * &h) - &(&z * &g);
    let r = resultant(&p1, &p2, 4).with_arity(3)?;
    if r.is_zero() {
        return Err(Error::Degenerate("vanishing resultant".into()));
    }
    // the chart contributes a power of z
    let sq = squarefree_part(&r);
    let zk = sq.min_degree_in(2);
    let sq = if zk > 0 && sq.total_degree() != Some(zk as i64) {
        sq.mul_monomial(&Monomial::from_slice(&[0, 0, -zk]))
    } else {
        sq
    };
    Ok(sq.primitive_integer())
}

pub fn implicitize_curve(curve: &ParamCurve) -> Result<Poly, Error> {
    implicitize(&curve.to_forms())
}

#[derive(Clone, Debug, PartialEq)]
pub struct SyzygyReport {
    /// Distinct linear factors of `fgh`.
    pub k: usize,
    /// `(f_s g h - f g h_s, f g_s h - f g h_s, 0)` in the coordinates used.
    pub row: [Poly; 3],
    /// The row divided by `t * fgh / sqf(fgh)`, when that division is exact.
    pub reduced: Option<[Poly; 3]>,
    /// Every reduced entry has degree at most one.
    pub linear: bool,
    /// Linear substitution `s -> s + i t, t -> t + j s` applied first.
    pub shear: (i64, i64),
}

pub fn syzygy_linear_factor_count(forms: &[Poly; 3]) -> Result<SyzygyReport, Error> {
    let d = forms[0].form_degree();
    if forms.iter().any(|f| f.arity() != 2 || !f.is_homogeneous() || f.is_zero() || f.form_degree() != d) {
        return Err(Error::InvalidCurve("components must be nonzero binary forms of equal degree".into()));
    }
    if !gcd_many(forms).is_constant() {
        return Err(Error::CommonFactor);
    }
    let s = Poly::var(2, 0);
    let t = Poly::var(2, 1);
    let product = |fs: &[Poly; 3]| &(&fs[0] * &fs[1]) * &fs[2];
    let mut shear = (0, 0);
    'search: for n in 0i64..20 {
        for i in 0..=n {
            let j = n - i;
            if i * j == 1 {
                continue;
            }
            let fgh = product(forms);
            let moved = fgh.compose(&[&s + &t.scale(&rat(i)), &t + &s.scale(&rat(j))]);
            if !moved.eval(&[rat(1), rat(0)]).is_zero() && !moved.eval(&[rat(0), rat(1)]).is_zero() {
                shear = (i, j);
                break 'search;
            }
        }
    }
    let sub = [&s + &t.scale(&rat(shear.0)), &t + &s.scale(&rat(shear.1))];
    let [f, g, h] = [forms[0].compose(&sub), forms[1].compose(&sub), forms[2].compose(&sub)];
    let fgh = &(&f * &g) * &h;
    let sqf = squarefree_part(&fgh);
    let k = sqf.form_degree().unwrap_or(0) as usize;
    let (fs, gs, hs) = (f.derivative(0), g.derivative(0), h.derivative(0));
    let fgh_s = &(&f * &g) * &hs;
    let row = [
        &(&(&fs * &g) * &h) - &fgh_s,
        &(&(&f * &gs) * &h) - &fgh_s,
        Poly::zero(2),
    ];
    let factor = &t * &fgh.exact_divide(&sqf).expect("squarefree part divides");
    let reduced = match (row[0].exact_divide(&factor), row[1].exact_divide(&factor)) {
        (Some(p), Some(q)) => Some([p, q, Poly::zero(2)]),
        _ => None,
    };
    let linear = reduced
        .as_ref()
        .map(|r| r.iter().all(|p| p.is_zero() || p.total_degree().unwrap_or(0) <= 1))
        .unwrap_or(false);
    Ok(SyzygyReport {
        k,
        row,
        reduced,
        linear,
        shear,
    })
}

/// Binomial germ exponents at `[0:0:1]`, `[1:0:0]`, `[0:1:0]` of a type I
/// curve, read from vanishing orders: at the point where components `i` and
/// `i+1` vanish, the pair is their orders in the shared symbol, later one first.
pub fn singular_germ_profile(curve: &ParamCurve) -> Result<[(u32, u32); 3], Error> {
    if classify_type(curve).ty != CurveType::I {
        return Err(Error::InvalidCurve(format!("{curve} is not of type I")));
    }
    let e = curve.comps.map(|c| c.exps);
    let pair = |i: usize, j: usize| {
        let v = (0..3).find(|&v| e[i][v] > 0 && e[j][v] > 0).expect("type I shares one symbol per pair");
        (e[j][v], e[i][v])
    };
    Ok([pair(0, 1), pair(1, 2), pair(2, 0)])
}

/// `[s^a t^(d-a) : t^b l^(d-b) : s^(d-c) l^c]`
pub fn type_i(a: u32, b: u32, c: u32, d: u32) -> Result<ParamCurve, Error> {
    ParamCurve::of_type(CurveType::I, [a as i64, b as i64, c as i64], d as i64)
}
