//! delta-invariants of binomial germs `x^a - y^b` and the integer solutions of
//! the genus equation for type I curves.

use std::fmt;

use num_integer::Integer;

/// Exponents of the germ `x^a - y^b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GermProfile {
    pub a: u64,
    pub b: u64,
}

impl GermProfile {
    pub fn new(a: u64, b: u64) -> Self {
        assert!(a >= 1 && b >= 1, "germ exponents must be positive");
        GermProfile { a, b }
    }

    pub fn delta(&self) -> u64 {
        delta_closed(self.a, self.b)
    }
}

/// `((a-1)(b-1) + gcd(a,b) - 1) / 2`
pub fn delta_closed(a: u64, b: u64) -> u64 {
    assert!(a >= 1 && b >= 1, "germ exponents must be positive");
    let twice = (a - 1) * (b - 1) + a.gcd(&b) - 1;
    assert!(twice.is_multiple_of(2), "odd numerator for ({a}, {b})");
    twice / 2
}

/// Blowup recursion: one blowup at multiplicity `min(a,b)` turns `(a, b)` into
/// `(a, b - a)` for `a < b`.
pub fn delta_recursive(a: u64, b: u64) -> u64 {
    assert!(a >= 1 && b >= 1, "germ exponents must be positive");
    let (m, n) = if a <= b { (a, b) } else { (b, a) };
    if m == 1 {
        0
    } else if m == n {
        m * (m - 1) / 2
    } else {
        delta_recursive(m, n - m) + m * (m - 1) / 2
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Region {
    Bipyramid,
    Tetrahedron,
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Region::Bipyramid => "bipyramid",
            Region::Tetrahedron => "tetrahedron",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenusEquationSolution {
    pub d: i64,
    pub abc: (i64, i64, i64),
    pub region: Region,
}

/// `(d-1)(d-2) = d(a+b+c-3) - (ab+ac+bc) + gcd(a,d-c) + gcd(b,d-a) + gcd(c,d-b)`
pub fn satisfies_genus_equation(d: i64, a: i64, b: i64, c: i64) -> bool {
    let rhs = d * (a + b + c - 3) - (a * b + a * c + b * c) + a.gcd(&(d - c)) + b.gcd(&(d - a)) + c.gcd(&(d - b));
    (d - 1) * (d - 2) == rhs
}

pub fn in_bipyramid(d: i64, a: i64, b: i64, c: i64) -> bool {
    (d - c..=d - 1).contains(&a) && (d - a..=d - 1).contains(&b) && (d - b..=d - 1).contains(&c)
}

pub fn in_tetrahedron(d: i64, a: i64, b: i64, c: i64) -> bool {
    (d - c..=d - 1).contains(&a) && (d - a..=d - 1).contains(&b) && (1..=d - b).contains(&c)
}

/// Scans `[1, d-1]^3`. The equation is invariant under the cyclic shift
/// `(a,b,c) -> (b,c,a)`, as is the bipyramid; a triple is tagged
/// tetrahedron when some cyclic shift of it lies in the tetrahedron.
pub fn enumerate_genus_solutions(d: i64) -> Vec<GenusEquationSolution> {
    assert!(d >= 2, "degree must be at least 2");
    let mut out = Vec::new();
    for a in 1..d {
        for b in 1..d {
            for c in 1..d {
                if !satisfies_genus_equation(d, a, b, c) {
                    continue;
                }
                let region = if in_bipyramid(d, a, b, c) {
                    Region::Bipyramid
                } else if [(a, b, c), (b, c, a), (c, a, b)]
                    .iter()
                    .any(|&(x, y, z)| in_tetrahedron(d, x, y, z))
                {
                    Region::Tetrahedron
                } else {
                    continue;
                };
                out.push(GenusEquationSolution { d, abc: (a, b, c), region });
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// `d,a,b,c,region` with a header line.
pub fn solutions_csv(solutions: &[GenusEquationSolution]) -> String {
    let mut out = String::from("d,a,b,c,region\n");
    for s in solutions {
        out.push_str(&format!("{},{},{},{},{}\n", s.d, s.abc.0, s.abc.1, s.abc.2, s.region));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_values() {
        assert_eq!(delta_closed(1, 9), 0);
        assert_eq!(delta_closed(4, 4), 6);
        assert_eq!(delta_closed(2, 3), 1);
        assert_eq!(GermProfile::new(3, 3).delta(), 3);
    }

    #[test]
    fn recursion_values() {
        assert_eq!(delta_recursive(2, 5), 2);
        assert_eq!(delta_recursive(3, 3), 3);
        assert_eq!(delta_recursive(1, 7), 0);
        assert_eq!(delta_recursive(5, 2), 2);
    }

    #[test]
    fn small_degree_solutions() {
        let abc = |d| -> Vec<((i64, i64, i64), Region)> {
            enumerate_genus_solutions(d).iter().map(|s| (s.abc, s.region)).collect()
        };
        assert_eq!(abc(2), vec![((1, 1, 1), Region::Bipyramid)]);
        let four = abc(4);
        let bip: Vec<_> = four.iter().filter(|s| s.1 == Region::Bipyramid).map(|s| s.0).collect();
        assert_eq!(bip, vec![(1, 3, 3), (2, 2, 2), (3, 1, 3), (3, 3, 1)]);
        let tet: Vec<_> = abc(5).iter().filter(|s| s.1 == Region::Tetrahedron).map(|s| s.0).collect();
        assert!([(1, 1, 4), (1, 4, 1), (4, 1, 1)].iter().all(|t| tet.contains(t)));
    }

    #[test]
    fn tetrahedron_solutions_fill_an_edge() {
        // (d-1, b, 1) solves the equation for every b; the tetrahedron
        // part is that edge up to cyclic shifts
        for d in 3..=12i64 {
            let mut tet: Vec<_> = enumerate_genus_solutions(d)
                .into_iter()
                .filter(|s| s.region == Region::Tetrahedron)
                .map(|s| s.abc)
                .collect();
            tet.sort();
            let mut edge: Vec<_> = (1..d - 1)
                .flat_map(|b| [(d - 1, b, 1), (b, 1, d - 1), (1, d - 1, b)])
                .collect();
            edge.sort();
            edge.dedup();
            assert_eq!(tet, edge, "d = {d}");
        }
    }

    #[test]
    fn csv_rows() {
        let csv = solutions_csv(&enumerate_genus_solutions(3));
        assert!(csv.starts_with("d,a,b,c,region\n3,"));
        assert!(csv.contains("3,2,2,1,bipyramid"));
    }
}
