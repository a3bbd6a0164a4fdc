use eigenpoints::algebra::Scalar;
use eigenpoints::configurations as conf;
use eigenpoints::eigenscheme::Cubic;
use eigenpoints::geometry::ProjPoint;
use eigenpoints::numsolve::{self, CPoint, SolveOptions};
use eigenpoints::sample;
use num_complex::Complex64 as C;
use proptest::prelude::*;

/// Exponents `(x, y, z)` of the coefficient slots of a cubic.
const EXPS: [[i32; 3]; 10] = [
    [3, 0, 0],
    [2, 1, 0],
    [1, 2, 0],
    [0, 3, 0],
    [2, 0, 1],
    [1, 1, 1],
    [0, 2, 1],
    [1, 0, 2],
    [0, 1, 2],
    [0, 0, 3],
];

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn p(a: i64, b: i64, c: i64) -> ProjPoint {
    ProjPoint::from_ints(a, b, c)
}

fn gradient(c: &[C; 10], v: &[C; 3]) -> [C; 3] {
    let mut g = [C::new(0.0, 0.0); 3];
    for (coef, e) in c.iter().zip(EXPS) {
        for k in 0..3 {
            if e[k] == 0 {
                continue;
            }
            let mut term = coef * e[k] as f64;
            for l in 0..3 {
                let d = if l == k { e[l] - 1 } else { e[l] };
                term *= v[l].powi(d);
            }
            g[k] += term;
        }
    }
    g
}

/// Largest of the three minors at a unit vector, relative to the
/// coefficient norm.
fn minor_residual(c: &[C; 10], q: &CPoint) -> f64 {
    let v = q.coords();
    let g = gradient(c, v);
    let m = [(0, 1), (0, 2), (1, 2)].map(|(i, j)| (v[i] * g[j] - v[j] * g[i]).norm());
    let n = c.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    m.into_iter().fold(0.0, f64::max) / n
}

fn cpoint(q: &ProjPoint) -> CPoint {
    CPoint::new(q.to_complex())
}

fn all_near(exact: &[ProjPoint], found: &[CPoint], tol: f64) -> bool {
    exact.iter().all(|q| {
        let c = cpoint(q);
        found.iter().any(|f| f.distance(&c) < tol)
    })
}

/// The cubic with `x, y, z` replaced by `y, z, x`.
fn cycled(c: &[C; 10]) -> [C; 10] {
    let mut out = [C::new(0.0, 0.0); 10];
    for (coef, e) in c.iter().zip(EXPS) {
        // x^a y^b z^c  ->  y^a z^b x^c
        let target = [e[2], e[0], e[1]];
        let k = EXPS.iter().position(|f| *f == target).unwrap();
        out[k] = *coef;
    }
    out
}

fn poly_value(p: &[C], z: C) -> C {
    p.iter().rev().fold(C::new(0.0, 0.0), |acc, c| acc * z + c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn aberth_degree_nine_residuals(re in prop::collection::vec(-10.0f64..10.0, 10), im in prop::collection::vec(-10.0f64..10.0, 10)) {
        let mut c: Vec<C> = re.iter().zip(&im).map(|(a, b)| C::new(*a, *b)).collect();
        if c[9].norm() < 1e-3 {
            c[9] = C::new(1.0, 0.0);
        }
        let roots = numsolve::aberth_roots(&c, &SolveOptions::default()).unwrap();
        prop_assert_eq!(roots.len(), 9);
        let norm = c.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for r in roots {
            let scale = c.iter().enumerate().map(|(k, z)| z.norm() * r.norm().powi(k as i32)).sum::<f64>();
            prop_assert!(poly_value(&c, r).norm() / scale.max(norm) < 1e-9);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn residuals_and_chart_independence(c in prop::collection::vec(-9i64..=9, 10)) {
        prop_assume!(c.iter().any(|&x| x != 0));
        let f = Cubic::from_ints(c.try_into().unwrap());
        let Ok(e) = numsolve::eigenpoints_numeric(&f, &SolveOptions::default()) else { return Ok(()) };
        prop_assume!(e.regular);
        let fc = f.to_complex();
        for q in &e.points {
            prop_assert!(minor_residual(&fc, q) < 1e-9);
        }
        let e2 = numsolve::eigenpoints_numeric_c(&cycled(&fc), &SolveOptions::default()).unwrap();
        prop_assert_eq!(e2.points.len(), 7);
        // A point (a, b, c) of the cycled cubic is (b, c, a) for the original.
        let back: Vec<CPoint> = e2.points.iter().map(|q| {
            let [a, b, c] = *q.coords();
            CPoint::new([b, c, a])
        }).collect();
        for q in &e.points {
            prop_assert!(back.iter().any(|r| r.distance(q) < 1e-7));
        }
    }
}

#[test]
fn aberth_examples() {
    let o = SolveOptions::default();
    let one = C::new(1.0, 0.0);
    let zero = C::new(0.0, 0.0);
    let mut r = numsolve::aberth_roots(&[one, zero, one], &o).unwrap();
    r.sort_by(|a, b| a.im.total_cmp(&b.im));
    assert!((r[0] - C::new(0.0, -1.0)).norm() < 1e-12);
    assert!((r[1] - C::new(0.0, 1.0)).norm() < 1e-12);

    // (t - 1)^3
    let r = numsolve::aberth_roots(&[-one, 3.0 * one, -3.0 * one, one], &o).unwrap();
    assert_eq!(r.len(), 3);
    assert!(r.iter().all(|z| (z - one).norm() < 1e-4));

    assert!(numsolve::aberth_roots(&[zero, zero], &o).is_err());
    assert!(numsolve::aberth_roots(&[one], &o).unwrap().is_empty());
}

#[test]
fn fermat_points() {
    let e = numsolve::eigenpoints_numeric(&Cubic::fermat(), &SolveOptions::default()).unwrap();
    assert!(e.regular);
    let want = [p(1, 0, 0), p(0, 1, 0), p(0, 0, 1), p(1, 1, 1), p(1, 1, 0), p(1, 0, 1), p(0, 1, 1)];
    assert!(all_near(&want, &e.points, 1e-9));
    let lifted = numsolve::lift_exact(&Cubic::fermat(), &e.points, 10).unwrap();
    assert_eq!(lifted.len(), 7);
}

#[test]
fn exact_and_numeric_agree() {
    let mut rng = sample::sampler(5);
    let o = SolveOptions::default();
    let mut checked = 0;
    while checked < 12 {
        let (a, b, c) = (sample::point(&mut rng, 6), sample::point(&mut rng, 6), sample::point(&mut rng, 6));
        let (t3, t5) = (sample::param(&mut rng, 5), sample::param(&mut rng, 5));
        let builds = [conf::build_c8(&a, &b, &c), conf::build_c5(&a, &b, &t3, &t5)];
        for built in builds.into_iter().flatten() {
            let f = built.member.unwrap();
            let e = numsolve::eigenpoints_numeric(&f, &o).unwrap();
            assert!(e.regular);
            assert!(all_near(&built.points, &e.points, 1e-7), "{:?}", built.points);
            checked += 1;
        }
    }
    let c = conf::build_odeco([&s(2), &s(-3), &s(5)]).unwrap();
    let e = numsolve::eigenpoints_numeric(c.member.as_ref().unwrap(), &o).unwrap();
    assert!(all_near(&c.points, &e.points, 1e-7));
}

#[test]
fn positive_dimensional_input_is_rejected() {
    let zero = Cubic::parse(&["0"; 10]);
    assert!(zero.is_err() || numsolve::eigenpoints_numeric(&zero.unwrap(), &SolveOptions::default()).is_err());
    // x^2 (y - z)
    let g = Cubic::from_ints([0, 1, 0, 0, -1, 0, 0, 0, 0, 0]);
    assert!(numsolve::eigenpoints_numeric(&g, &SolveOptions::default()).is_err());
}

#[test]
fn alignment_examples() {
    let o = SolveOptions::default();
    let fermat = Cubic::fermat().to_complex();
    assert_eq!(numsolve::verify_alignment_at(&fermat, &o).unwrap().len(), 6);

    let mut rng = sample::sampler(2);
    let generic = sample::cubic(&mut rng, 9).to_complex();
    assert!(numsolve::verify_alignment_at(&generic, &o).unwrap().is_empty());

    let (p1, p2) = (p(1, 2, 3), p(2, -1, 1));
    let c = conf::build_c2(&p1, &p2, &(s(1), s(2)), &(s(1), s(3)), &(s(2), s(-1))).unwrap();
    let f = c.member.unwrap().to_complex();
    let triples = numsolve::verify_alignment_at(&f, &o).unwrap();
    let want: Vec<CPoint> = c.points[..3].iter().map(cpoint).collect();
    assert!(triples
        .iter()
        .any(|t| want.iter().all(|w| t.iter().any(|q| q.distance(w) < 1e-7))));
}

#[test]
fn pencils() {
    let o = SolveOptions { seed: 1, ..Default::default() };
    let c = conf::build_c2(&p(1, 2, 3), &p(2, -1, 1), &(s(1), s(2)), &(s(1), s(3)), &(s(2), s(-1))).unwrap();
    let f = c.member.unwrap();
    let mut rng = sample::sampler(4);
    let g = sample::cubic(&mut rng, 9);
    let r = numsolve::pencil_alignment_parameters(&f, &g, &o).unwrap();
    assert!(r.t_values.iter().any(|t| t.norm() < 1e-6), "{:?}", r.t_values);

    assert!(numsolve::pencil_alignment_parameters(&f, &f, &o).is_err());
    assert!(numsolve::pencil_alignment_parameters(&f, &f.scale(&s(3)), &o).is_err());
}

#[test]
fn pencil_count_is_stable_across_seeds() {
    let mut rng = sample::sampler(77);
    let (f, g) = eigenpoints::verify::random_pencil(&mut rng);
    let counts: Vec<usize> = [3u64, 4, 5]
        .iter()
        .map(|&seed| {
            let o = SolveOptions { seed, ..Default::default() };
            numsolve::pencil_alignment_parameters(&f, &g, &o).unwrap().t_values.len()
        })
        .collect();
    assert_eq!(counts, vec![15, 15, 15]);
}

#[test]
fn cpoint_normalization() {
    let q = CPoint::new([C::new(0.0, 2.0), C::new(1.0, 0.0), C::new(0.0, 0.0)]);
    let n: f64 = q.coords().iter().map(|z| z.norm_sqr()).sum();
    assert!((n - 1.0).abs() < 1e-15);
    assert!(q.coords()[0].im.abs() < 1e-15 && q.coords()[0].re > 0.0);
    let r = CPoint::new([C::new(0.0, 4.0), C::new(2.0, 0.0), C::new(0.0, 0.0)]);
    assert!(q.distance(&r) < 1e-12);
    let e = CPoint::new([C::new(0.0, 0.0), C::new(0.0, 0.0), C::new(1.0, 0.0)]);
    assert!((q.distance(&e) - 1.0).abs() < 1e-12);
}
