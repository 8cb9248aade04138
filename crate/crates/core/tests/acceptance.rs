//! Acceptance criteria 1-9. Each test writes one `ACCEPTANCE n: PASS|FAIL`
//! line straight to stdout so it shows up even when output is captured.

use std::io::Write;
use std::time::Instant;

use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use toric_cremona::birational::{fiber_count, is_birational, RationalPlaneMap, Verdict};
use toric_cremona::curves::{
    apply_cremona, classify_type, implicitize_curve, reduce_to_type_i, singular_germ_profile,
    syzygy_linear_factor_count, type_i, CremonaMap, CurveType, ParamCurve,
};
use toric_cremona::families::{build_family, trapezoid_factor, FamilySpec};
use toric_cremona::germs::{delta_closed, delta_recursive, enumerate_genus_solutions, Region};
use toric_cremona::patches::{
    exact_linear_precision, form_from_patch, numeric_reparameterization, parameter_grid, tautological_map,
    LatticePatch,
};
use toric_cremona::poly::{rat, Poly, Rational};
use toric_cremona::toric::{off_axis_singular_count, proj_eq, toric_polar_system, Point};

fn report(n: u32, ok: bool, detail: &str) {
    let line = format!("ACCEPTANCE {n}: {} {detail}\n", if ok { "PASS" } else { "FAIL" });
    let mut out = std::io::stdout();
    out.write_all(line.as_bytes()).unwrap();
    out.flush().unwrap();
}

fn p(s: &str) -> Poly {
    s.parse().unwrap()
}

fn all_specs() -> Vec<FamilySpec> {
    let mut v = Vec::new();
    for a in 1..=3 {
        for b in 1..=3 {
            v.push(FamilySpec::Tensor { a, b });
            for d in 1..=3 {
                v.push(FamilySpec::Trapezoid { a, b, d });
            }
        }
    }
    for d in 1..=3 {
        v.push(FamilySpec::Quadric { d });
    }
    v
}

#[test]
fn acceptance_1_family_suite_is_birational() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let specs = all_specs();
    for spec in &specs {
        let f = build_family(spec).unwrap();
        let map = RationalPlaneMap::from_system(&toric_polar_system(&f).unwrap());
        let r = is_birational(&map, 5, 0).unwrap();
        if r.verdict != Verdict::Birational || r.trials.len() != 5 || r.trials.iter().any(|t| t.count != 1) {
            failures.push(format!("{spec}: {}", r.verdict));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    let ok = failures.is_empty() && secs < 60.0;
    report(
        1,
        ok,
        &format!("{} specs, 5/5 fibers of size 1, {secs:.1}s; failures {failures:?}", specs.len()),
    );
    assert!(ok);
}

/// `a + b w` with `w^2 = -1 - w`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Eis(i64, i64);

impl Eis {
    fn mul(self, o: Eis) -> Eis {
        Eis(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0 - self.1 * o.1)
    }
}

fn distinct_projective(points: &[[Eis; 3]]) -> usize {
    let same = |p: &[Eis; 3], q: &[Eis; 3]| {
        (0..3).all(|i| (0..3).all(|j| p[i].mul(q[j]) == p[j].mul(q[i])))
    };
    let mut reps: Vec<[Eis; 3]> = Vec::new();
    for pt in points {
        if !reps.iter().any(|r| same(r, pt)) {
            reps.push(*pt);
        }
    }
    reps.len()
}

/// Fiber of `[x^n : y^n : z^n]` through an integer point: multiply coordinates
/// by n-th roots of unity and count distinct projective points.
fn power_map_fiber(n: u32, src: [i64; 3]) -> usize {
    let roots: Vec<Eis> = match n {
        2 => vec![Eis(1, 0), Eis(-1, 0)],
        3 => vec![Eis(1, 0), Eis(0, 1), Eis(-1, -1)],
        _ => unreachable!(),
    };
    let mut pts = Vec::new();
    for r0 in &roots {
        for r1 in &roots {
            for r2 in &roots {
                pts.push([r0.mul(Eis(src[0], 0)), r1.mul(Eis(src[1], 0)), r2.mul(Eis(src[2], 0))]);
            }
        }
    }
    distinct_projective(&pts)
}

#[test]
fn acceptance_2_negative_controls() {
    let mut ok = true;
    let mut notes = Vec::new();
    for (form, n) in [("x^3+y^3+z^3", 3u32), ("x^2+y^2+z^2", 2)] {
        let map = RationalPlaneMap::from_system(&toric_polar_system(&p(form)).unwrap());
        for src in [[2i64, 3, 5], [7, -4, 9]] {
            let expected = power_map_fiber(n, src);
            let got = fiber_count(&map, &src.map(rat)).unwrap();
            ok &= got == expected;
            notes.push(format!("{form}@{src:?}: {got} (oracle {expected})"));
        }
        let verdicts: Vec<Verdict> = (0..3).map(|s| is_birational(&map, 5, s).unwrap().verdict).collect();
        let expected = Verdict::NotBirational(power_map_fiber(n, [2, 3, 5]));
        ok &= verdicts.iter().all(|v| *v == expected);
    }
    let map = RationalPlaneMap::from_system(&toric_polar_system(&p("(x+y+z)*(x+2*y+3*z)")).unwrap());
    let verdicts: Vec<Verdict> = (0..3).map(|s| is_birational(&map, 5, s).unwrap().verdict).collect();
    ok &= verdicts.iter().all(|v| matches!(v, Verdict::NotBirational(_))) && verdicts.windows(2).all(|w| w[0] == w[1]);
    notes.push(format!("two lines: {}", verdicts[0]));
    report(2, ok, &notes.join("; "));
    assert!(ok);
}

#[test]
fn acceptance_3_fixtures() {
    let mut ok = true;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for d in 1..=4u32 {
        let sys = toric_polar_system(&p("x+y+z").pow(d)).unwrap();
        for _ in 0..20 {
            let pt: Point = [0, 1, 2].map(|_| rat(rng.gen_range(-50..=50)));
            if pt.iter().all(|c| c.is_zero()) {
                continue;
            }
            ok &= proj_eq(&sys.eval_reduced(&pt), &pt);
        }
    }
    let q = p("x^2+y^2+z^2-2*(x*y+x*z+y*z)");
    let sys = toric_polar_system(&q).unwrap();
    let lhs = [p("x^2-x*y-x*z"), p("y^2-x*y-y*z"), p("z^2-x*z-y*z")];
    ok &= sys.reduced == lhs;
    ok &= (0..3).all(|k| sys.components[k] == lhs[k].scale(&rat(2)));
    let products = [
        p("(x-y-z)*(y-x-z)"),
        p("(x-y-z)*(z-x-y)"),
        p("(y-x-z)*(z-x-y)"),
    ];
    let combo = &(&(-&lhs[0]) - &lhs[1]) + &lhs[2];
    ok &= combo == products[0];
    ok &= toric_cremona::toric::rank_over_q(&[lhs.to_vec(), products.to_vec()].concat()) == 3;
    let mut forms = 0;
    for d in 1..=3u32 {
        ok &= form_from_patch(&LatticePatch::triangle(d)) == p("x+y+z").pow(d);
        forms += 1;
    }
    for (a, b) in [(1u32, 1u32), (2, 1), (2, 3)] {
        let closed = &p("x+z").pow(a) * &p("y+z").pow(b);
        ok &= form_from_patch(&LatticePatch::tensor(a, b)) == closed;
        ok &= build_family(&FamilySpec::Tensor { a, b }).unwrap() == closed;
        forms += 1;
    }
    for (a, b, d) in [(0u32, 1u32, 1u32), (1, 1, 2), (2, 2, 3)] {
        let closed = &p("x+z").pow(a) * &(&p("x+z").pow(d) + &p(&format!("y*z^{}", d - 1))).pow(b);
        ok &= form_from_patch(&LatticePatch::trapezoid(a, b, d)) == closed;
        forms += 1;
    }
    report(
        3,
        ok,
        &format!("reduced T((x+y+z)^d) = identity at 20 points, d=1..4; T(Q) fixture; {forms} patch forms"),
    );
    assert!(ok);
}

#[test]
fn acceptance_4_delta_invariants() {
    let mut ok = true;
    for a in 1..=30u64 {
        for b in 1..=30u64 {
            ok &= delta_closed(a, b) == delta_recursive(a, b) && delta_closed(a, b) == delta_closed(b, a);
        }
    }
    let mut checked = 0;
    for d in 2..=12i64 {
        for s in enumerate_genus_solutions(d).iter().filter(|s| s.region == Region::Bipyramid) {
            let (a, b, c) = s.abc;
            let curve = type_i(a as u32, b as u32, c as u32, d as u32).unwrap();
            let total: u64 = singular_germ_profile(&curve)
                .unwrap()
                .iter()
                .map(|&(x, y)| delta_closed(x as u64, y as u64))
                .sum();
            ok &= total == ((d - 1) * (d - 2) / 2) as u64;
            checked += 1;
        }
    }
    report(4, ok, &format!("900 germs closed = recursive; {checked} bipyramid solutions sum to p_a"));
    assert!(ok);
}

#[test]
fn acceptance_5_genus_enumeration() {
    let start = Instant::now();
    let mut ok = true;
    let mut extra = 0;
    for d in 2..=12i64 {
        let sols = enumerate_genus_solutions(d);
        let mut bip: Vec<_> = sols.iter().filter(|s| s.region == Region::Bipyramid).map(|s| s.abc).collect();
        bip.sort();
        let mut expected = vec![(d - 1, d - 1, 1), (d - 1, 1, d - 1), (1, d - 1, d - 1)];
        if d == 4 {
            expected.push((2, 2, 2));
        }
        expected.sort();
        expected.dedup();
        ok &= bip == expected;
        if d >= 3 {
            let tet: Vec<_> = sols.iter().filter(|s| s.region == Region::Tetrahedron).map(|s| s.abc).collect();
            ok &= [(d - 1, 1, 1), (1, d - 1, 1), (1, 1, d - 1)].iter().all(|t| tet.contains(t));
            extra += tet.len() - 3;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    ok &= secs < 5.0;
    report(
        5,
        ok,
        &format!("bipyramid exact for d=2..12, (2,2,2) only at d=4, tetrahedron contains (d-1,1,1) shifts; {extra} further tetrahedron solutions on the (d-1,b,1) edge; {secs:.2}s"),
    );
    assert!(ok);
}

fn random_instance(rng: &mut ChaCha8Rng) -> ParamCurve {
    let types = [CurveType::II, CurveType::III, CurveType::IV, CurveType::V, CurveType::VI, CurveType::VII];
    loop {
        let ty = types[rng.gen_range(0..types.len())];
        let d = rng.gen_range(2..=8i64);
        let params = [0, 1, 2].map(|_| rng.gen_range(1..d));
        if let Ok(c) = ParamCurve::of_type(ty, params, d) {
            return c;
        }
    }
}

#[test]
fn acceptance_6_cremona_reduction() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut ok = true;
    let mut longest = 0;
    for _ in 0..500 {
        let c = random_instance(&mut rng);
        match reduce_to_type_i(&c, 20) {
            Ok(r) => {
                ok &= classify_type(&r.result).ty == CurveType::I;
                longest = longest.max(r.steps.len());
            }
            Err(_) => ok = false,
        }
    }
    // [s^2 t^2 : t^2 l^2 : s^2 l^2] -> conic
    let conic = apply_cremona(&type_i(2, 2, 2, 4).unwrap(), &CremonaMap::STANDARD).output;
    ok &= implicitize_curve(&conic).unwrap() == p("x^2+y^2+z^2-2*(x*y+x*z+y*z)");
    // [s^a t : t^a l : s^a l], a = d-1 -> (x+z)^a + y z^(a-1)
    for d in 2..=5u32 {
        let a = d - 1;
        let c: ParamCurve = format!("[s^{a}*t : t^{a}*l : s^{a}*l]").parse().unwrap();
        let out = apply_cremona(&c, &CremonaMap::STANDARD).output;
        let out = out.with_sign(1, if a % 2 == 1 { 1 } else { -1 } * out.comps[1].sign);
        let target = &p("x+z").pow(a) + &p(&format!("y*z^{}", a - 1));
        ok &= implicitize_curve(&out).unwrap() == target.primitive_integer();
        ok &= target == trapezoid_factor(a);
    }
    report(6, ok, &format!("500 random instances reach type I (longest chain {longest}); both normal forms implicitize correctly"));
    assert!(ok);
}

#[test]
fn acceptance_7_syzygy_count() {
    let mut ok = true;
    let mut curves = vec![type_i(2, 2, 2, 4).unwrap()];
    for d in 2..=5u32 {
        let a = d - 1;
        curves.push(format!("[s^{a}*t : t^{a}*l : s^{a}*l]").parse().unwrap());
    }
    for c in &curves {
        let r = syzygy_linear_factor_count(&c.to_forms()).unwrap();
        ok &= r.k == 3 && r.linear;
    }
    let bad = syzygy_linear_factor_count(&[p("s^3"), p("t^3"), p("(s+t)^2*(s-t)")]).unwrap();
    ok &= bad.k == 4 && !bad.linear;
    report(7, ok, &format!("{} family curves give k=3 with linear entries; 4-factor instance fails", curves.len()));
    assert!(ok);
}

#[test]
fn acceptance_8_patches() {
    let mut ok = true;
    for d in 1..=4 {
        ok &= exact_linear_precision(&LatticePatch::triangle(d));
    }
    for a in 1..=3 {
        for b in 1..=3 {
            ok &= exact_linear_precision(&LatticePatch::tensor(a, b));
        }
    }
    let mut slowest = 0.0f64;
    let mut worst = 0.0f64;
    for a in 1..=3 {
        for b in 1..=3 {
            for d in 1..=3 {
                let patch = LatticePatch::trapezoid(a, b, d);
                ok &= !exact_linear_precision(&patch);
                let start = Instant::now();
                for (s, t) in parameter_grid(&patch, 5) {
                    let target = (s.to_f64().unwrap(), t.to_f64().unwrap());
                    match numeric_reparameterization(&patch, target, 1e-10) {
                        Ok((u, v)) => {
                            let (ts, tt) = tautological_map(
                                &patch,
                                (&Rational::from_float(u).unwrap(), &Rational::from_float(v).unwrap()),
                            )
                            .unwrap();
                            let r = ((ts.to_f64().unwrap() - target.0).powi(2) + (tt.to_f64().unwrap() - target.1).powi(2)).sqrt();
                            worst = worst.max(r);
                            ok &= r < 1e-10;
                        }
                        Err(_) => ok = false,
                    }
                }
                slowest = slowest.max(start.elapsed().as_secs_f64());
            }
        }
    }
    ok &= slowest < 2.0;
    report(
        8,
        ok,
        &format!("linear precision for triangles and tensors, none for 27 trapezoids; worst residual {worst:.1e}, slowest spec {slowest:.2}s"),
    );
    assert!(ok);
}

#[test]
fn acceptance_9_off_axis_singularities() {
    let mut ok = true;
    let two_lines = off_axis_singular_count(&p("(x+z)*(y+z)")).unwrap();
    ok &= two_lines.count == 1
        && two_lines.rational_points.len() == 1
        && proj_eq(&two_lines.rational_points[0], &[rat(1), rat(1), rat(-1)]);
    let mut irreducible = vec![build_family(&FamilySpec::Quadric { d: 1 }).unwrap()];
    irreducible.extend((1..=4).map(trapezoid_factor));
    for f in &irreducible {
        ok &= off_axis_singular_count(f).unwrap().count == 0;
    }
    let mut products = 0;
    for (a, b, d) in [(1, 1, 1), (1, 2, 2), (2, 1, 3), (0, 2, 2)] {
        let f = build_family(&FamilySpec::Trapezoid { a, b, d }).unwrap();
        ok &= off_axis_singular_count(&f).unwrap().count == 0;
        products += 1;
    }
    report(
        9,
        ok,
        &format!("(x+z)(y+z) has one at [1:1:-1]; {} irreducible members and {products} trapezoid products have none", irreducible.len()),
    );
    assert!(ok);
}
