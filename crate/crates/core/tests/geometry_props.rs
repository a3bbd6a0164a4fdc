use eigenpoints::algebra::{ExactMatrix, Scalar};
use eigenpoints::eigenscheme::{self, Cubic};
use eigenpoints::geometry::{self, combine, cross, delta1, on_isotropic, scal, sigma, so3_normalize, Line, ProjPoint};
use proptest::prelude::*;

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn point() -> impl Strategy<Value = ProjPoint> {
    (-6i64..=6, -6i64..=6, -6i64..=6, -2i64..=2)
        .prop_filter_map("nonzero", |(a, b, c, i)| {
            ProjPoint::new([Scalar::gaussian(a, i), s(b), s(c)]).ok()
        })
}

fn rational_point() -> impl Strategy<Value = ProjPoint> {
    (-6i64..=6, -6i64..=6, -6i64..=6).prop_filter_map("nonzero", |(a, b, c)| ProjPoint::new([s(a), s(b), s(c)]).ok())
}

fn nonzero() -> impl Strategy<Value = Scalar> {
    (-5i64..=5, -3i64..=3)
        .prop_filter("nonzero", |(a, b)| *a != 0 || *b != 0)
        .prop_map(|(a, b)| Scalar::gaussian(a, b))
}

/// `(1 - t^2, i (1 + t^2), 2 t)`: every such point is isotropic.
fn isotropic_point() -> impl Strategy<Value = ProjPoint> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| {
        let t = Scalar::frac(n, d);
        let t2 = &t * &t;
        let one = Scalar::one();
        ProjPoint::new([&one - &t2, &Scalar::i() * &(&one + &t2), &s(2) * &t]).unwrap()
    })
}

fn scaled(p: &ProjPoint, c: &Scalar) -> ProjPoint {
    // The canonical representative absorbs the scale, so rebuild and check
    // the raw vector path through combine.
    combine(c, p, &Scalar::zero(), p).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn cross_is_orthogonal(p in point(), q in point()) {
        prop_assume!(p != q);
        let c = cross(&p, &q).unwrap();
        prop_assert!(scal(&c, &p).is_zero());
        prop_assert!(scal(&c, &q).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// On a tangent line every pair of distinct points has `sigma = 0`.
    #[test]
    fn sigma_vanishing_is_linewise(p in isotropic_point(), a in nonzero(), b in nonzero(), c in nonzero(), d in nonzero()) {
        let l = p.polar();
        let (u, v) = l.two_points();
        let q1 = combine(&a, &u, &b, &v).unwrap();
        let q2 = combine(&c, &u, &d, &v).unwrap();
        prop_assume!(q1 != q2);
        prop_assert!(sigma(&u, &v).is_zero());
        prop_assert!(sigma(&q1, &q2).is_zero());
    }

    #[test]
    fn secant_lines_have_nonzero_sigma(p in rational_point(), q in rational_point()) {
        prop_assume!(p != q);
        // A real line meets the isotropic conic in two conjugate points.
        prop_assert!(!sigma(&p, &q).is_zero());
    }

    #[test]
    fn delta1_verdict_ignores_scaling(p1 in point(), p2 in point(), p4 in point(), a in nonzero(), b in nonzero(), c in nonzero()) {
        let v = delta1(&p1, &p2, &p4).is_zero();
        let w = delta1(&scaled(&p1, &a), &scaled(&p2, &b), &scaled(&p4, &c)).is_zero();
        prop_assert_eq!(v, w);
    }

    #[test]
    fn so3_normalize_contract(p in point()) {
        let (m, rep) = so3_normalize(&p).unwrap();
        let mm = m.matrix();
        prop_assert_eq!(mm.mul(&mm.transpose()), ExactMatrix::identity(3));
        prop_assert!(mm.det().is_one());
        prop_assert_eq!(m.apply_point(&rep), p.clone());
        let iso_rep = rep == ProjPoint::parse(["1", "i", "0"]).unwrap();
        prop_assert_eq!(on_isotropic(&p), iso_rep);
    }

    #[test]
    fn isotropic_points_normalize_to_one_i_zero(p in isotropic_point()) {
        let (m, rep) = so3_normalize(&p).unwrap();
        prop_assert_eq!(rep, ProjPoint::parse(["1", "i", "0"]).unwrap());
        prop_assert_eq!(m.apply_point(&ProjPoint::parse(["1", "i", "0"]).unwrap()), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn eigenpoints_are_equivariant(
        c in prop::collection::vec(-4i64..=4, 10),
        p in rational_point(),
        q in rational_point(),
    ) {
        prop_assume!(c.iter().any(|&x| x != 0));
        let f = Cubic::from_ints(c.try_into().unwrap());
        let (m, _) = so3_normalize(&p).unwrap();
        let mf = Cubic::new(m.apply_form(f.form())).unwrap();
        for x in [&p, &q] {
            prop_assert_eq!(eigenscheme::is_eigenpoint(&f, x), eigenscheme::is_eigenpoint(&mf, &m.apply_point(x)));
        }
        // Fermat's eigenpoints move to eigenpoints of the rotated cubic.
        let fm = Cubic::new(m.apply_form(Cubic::fermat().form())).unwrap();
        prop_assert!(eigenscheme::is_eigenpoint(&fm, &m.apply_point(&ProjPoint::from_ints(1, 1, 1))));
    }
}

#[test]
fn isotropy_examples() {
    assert!(on_isotropic(&ProjPoint::parse(["1", "i", "0"]).unwrap()));
    assert!(!on_isotropic(&ProjPoint::from_ints(1, 0, 0)));
    assert!(on_isotropic(&ProjPoint::parse(["0", "i", "1"]).unwrap()));
}

#[test]
fn lines_and_meets() {
    let l = Line::through(&ProjPoint::from_ints(1, 0, 0), &ProjPoint::from_ints(0, 1, 0)).unwrap();
    assert_eq!(l, Line::new([s(0), s(0), s(1)]).unwrap());
    let m = Line::new([s(1), s(-1), s(0)]).unwrap();
    assert_eq!(l.meet(&m).unwrap(), ProjPoint::from_ints(1, 1, 0));
    assert!(Line::new([s(1), Scalar::i(), s(0)]).unwrap().is_isotropic_tangent());
    assert!(geometry::collinear(
        &ProjPoint::from_ints(1, 0, 0),
        &ProjPoint::from_ints(0, 1, 0),
        &ProjPoint::from_ints(1, 1, 0)
    ));
}

#[test]
fn points_needing_a_square_root() {
    // <P, P> = 2 is not a square in Q(i).
    let p = ProjPoint::from_ints(1, 1, 0);
    let (m, rep) = so3_normalize(&p).unwrap();
    assert_eq!(rep, ProjPoint::from_ints(1, 0, 0));
    assert_eq!(m.apply_point(&rep), p);
}
