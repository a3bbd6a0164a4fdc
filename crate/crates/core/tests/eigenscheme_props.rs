use eigenpoints::algebra::{Scalar, TernaryForm};
use eigenpoints::configurations as conf;
use eigenpoints::eigenscheme::{self, ConicFamily, Cubic, EigKind};
use eigenpoints::geometry::{combine, so3_normalize, Line, ProjPoint};
use eigenpoints::verify;
use proptest::prelude::*;

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn cubic() -> impl Strategy<Value = Cubic> {
    prop::collection::vec(-5i64..=5, 10)
        .prop_filter("nonzero", |c| c.iter().any(|&x| x != 0))
        .prop_map(|c| Cubic::from_ints(c.try_into().unwrap()))
}

fn point() -> impl Strategy<Value = ProjPoint> {
    (-5i64..=5, -5i64..=5, -5i64..=5, -2i64..=2)
        .prop_filter_map("nonzero", |(a, b, c, i)| ProjPoint::new([s(a), Scalar::gaussian(b, i), s(c)]).ok())
}

fn x() -> TernaryForm {
    TernaryForm::var(0)
}
fn y() -> TernaryForm {
    TernaryForm::var(1)
}
fn z() -> TernaryForm {
    TernaryForm::var(2)
}

fn phi_times(p: &ProjPoint, f: &Cubic) -> Vec<Scalar> {
    let w = f.coeffs();
    eigenscheme::phi_rows(p)
        .iter()
        .map(|row| row.iter().zip(&w).map(|(a, b)| a * b).sum())
        .collect()
}

fn proportional(a: &TernaryForm, b: &TernaryForm) -> bool {
    a.is_zero() == b.is_zero() && a.monic() == b.monic()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn syzygy(f in cubic()) {
        let [g1, g2, g3] = eigenscheme::eig_generators(&f);
        let lhs = &(&(&z() * &g1) - &(&y() * &g2)) + &(&x() * &g3);
        prop_assert!(lhs.is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Half the cubics are drawn from those having `p` as an eigenpoint.
    #[test]
    fn eigenpoint_iff_conditions_vanish(f in cubic(), p in point(), through in any::<bool>(), k in 0usize..8) {
        let f = if through {
            let basis = eigenscheme::cubics_through(std::slice::from_ref(&p)).unwrap();
            basis[k].add(&f.scale(&s(0)))
        } else {
            f
        };
        let zero = phi_times(&p, &f).iter().all(|v| v.is_zero());
        prop_assert_eq!(eigenscheme::is_eigenpoint(&f, &p), zero);
        prop_assert!(!through || zero);
    }
}

/// Eigenpoints of `l1 x^3 + l2 y^3 + l3 z^3` moved by a rotation.
fn rotated_odeco(l: [i64; 3], q: &ProjPoint) -> (Cubic, Vec<ProjPoint>) {
    let ls = l.map(s);
    let c = conf::build_odeco([&ls[0], &ls[1], &ls[2]]).unwrap();
    let (m, _) = so3_normalize(q).unwrap();
    let f = Cubic::new(m.apply_form(c.member.unwrap().form())).unwrap().normalized();
    (f, c.points.iter().map(|p| m.apply_point(p)).collect())
}

fn nonzero() -> impl Strategy<Value = i64> {
    prop_oneof![-5i64..=-1, 1i64..=5]
}

fn rational_point() -> impl Strategy<Value = ProjPoint> {
    (-4i64..=4, -4i64..=4, 1i64..=4).prop_map(|(a, b, c)| ProjPoint::from_ints(a, b, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn reconstruction_round_trip(l in [nonzero(), nonzero(), nonzero()], q in rational_point()) {
        let (f0, pts) = rotated_odeco(l, &q);
        // Q1, Q2, Q5 and Q1, Q3, Q6 are aligned.
        let five = [pts[0].clone(), pts[1].clone(), pts[4].clone(), pts[2].clone(), pts[5].clone()];
        prop_assume!(eigenscheme::condition_rank(&five).unwrap() == 9);
        let h = eigenscheme::rank9_rows(&five).unwrap();
        let f = eigenscheme::unique_cubic_from_rank9(&h).unwrap();
        prop_assert_eq!(f.normalized(), f0.normalized());
        // Bordered minors are proportional to the minors of the cubic.
        let g = eigenscheme::eig_generators(&f);
        for k in 0..3 {
            let b = eigenscheme::bordered_det(&h, &eigenscheme::phi_forms(k));
            prop_assert!(proportional(&b, &g[k]), "k = {}", k);
        }
    }

    /// The Geiser map is constant along a line of three eigenpoints.
    #[test]
    fn geiser_contracts_aligned_lines(l in [nonzero(), nonzero(), nonzero()], q in rational_point(), t in prop::collection::vec((1i64..=7, -7i64..=-1), 5)) {
        let (f, pts) = rotated_odeco(l, &q);
        let (a, b) = (&pts[0], &pts[1]);
        let images: Vec<ProjPoint> = t
            .iter()
            .filter_map(|(u, v)| combine(&s(*u), a, &s(*v), b).ok())
            .filter(|p| !eigenscheme::is_eigenpoint(&f, p))
            .map(|p| eigenscheme::geiser(&f, &p).unwrap())
            .collect();
        prop_assert!(images.windows(2).all(|w| w[0] == w[1]));
    }
}

#[test]
fn split_form_and_residual_degrees() {
    assert!(verify::g_split(5, 30).ok());
    for c in verify::positive_dimension(5, 30) {
        assert!(c.ok(), "{c:?}");
    }
}

#[test]
fn rank_tables_hold() {
    for c in verify::rank_tables(9, 100) {
        assert!(c.ok(), "{c:?}");
    }
}

#[test]
fn generator_examples() {
    let g = eigenscheme::eig_generators(&Cubic::fermat());
    let three = s(3);
    let expect = [
        (&(&x() * &y()) * &(&y() - &x())).scale(&three),
        (&(&x() * &z()) * &(&z() - &x())).scale(&three),
        (&(&y() * &z()) * &(&z() - &y())).scale(&three),
    ];
    assert_eq!(g, expect);

    let f = Cubic::new(&(&x() * &x()) * &(&y() - &z())).unwrap();
    let g = eigenscheme::eig_generators(&f);
    let h1 = &(&(&x() * &x()) - &(&y() * &y()).scale(&s(2))) + &(&y() * &z()).scale(&s(2));
    let h2 = &(&(&(-&x()) * &x()) - &(&y() * &z()).scale(&s(2))) + &(&z() * &z()).scale(&s(2));
    let h3 = -&(&x() * &(&y() + &z()));
    assert_eq!(g, [&x() * &h1, &x() * &h2, &x() * &h3]);

    let zero = Cubic::from_ints([0; 10]);
    assert!(eigenscheme::eig_generators(&zero).iter().all(|g| g.is_zero()));
}

#[test]
fn eigenpoint_examples() {
    let f = Cubic::fermat();
    assert!(eigenscheme::is_eigenpoint(&f, &ProjPoint::from_ints(1, 1, 1)));
    assert!(!eigenscheme::is_eigenpoint(&f, &ProjPoint::from_ints(1, 2, 0)));
    let sing = Cubic::new(&(&x() * &x()) * &(&y() - &z())).unwrap();
    assert!(eigenscheme::is_singular_at(&sing, &ProjPoint::from_ints(0, 0, 1)));
    assert!(eigenscheme::is_eigenpoint(&sing, &ProjPoint::from_ints(0, 0, 1)));
    assert!(!eigenscheme::is_singular_at(&f, &ProjPoint::from_ints(1, 0, 0)));
}

#[test]
fn condition_matrix_examples() {
    let p = ProjPoint::from_ints(2, -1, 3);
    let m = eigenscheme::condition_matrix(std::slice::from_ref(&p)).unwrap();
    assert_eq!((m.matrix.rows(), m.matrix.cols()), (3, 10));
    assert_eq!(m.matrix.rank(), 2);
    assert!(eigenscheme::condition_matrix(&[p.clone(), p.clone()]).is_err());

    let collinear = [ProjPoint::from_ints(1, 0, 0), ProjPoint::from_ints(0, 1, 0), ProjPoint::from_ints(1, 2, 0)];
    assert_eq!(eigenscheme::cubics_through(&collinear).unwrap().len(), 4);
    assert_eq!(eigenscheme::cubics_through(&[]).unwrap().len(), 10);

    let v = [
        ProjPoint::from_ints(1, 0, 0),
        ProjPoint::parse(["0", "i", "1"]).unwrap(),
        ProjPoint::parse(["1", "i", "1"]).unwrap(),
        ProjPoint::parse(["0", "-i", "1"]).unwrap(),
        ProjPoint::parse(["2", "-i", "1"]).unwrap(),
    ];
    assert_eq!(eigenscheme::cubics_through(&v).unwrap().len(), 2);
    assert!(eigenscheme::unique_cubic_from_rank9(&eigenscheme::condition_matrix(&v).unwrap().matrix.select_rows(&[0, 1, 2, 3, 4, 5, 6, 7, 8])).is_err());
}

#[test]
fn fermat_from_five_eigenpoints() {
    let pts = [
        ProjPoint::from_ints(1, 0, 0),
        ProjPoint::from_ints(0, 1, 0),
        ProjPoint::from_ints(1, 1, 0),
        ProjPoint::from_ints(0, 0, 1),
        ProjPoint::from_ints(1, 0, 1),
    ];
    let h = eigenscheme::rank9_rows(&pts).unwrap();
    assert_eq!(eigenscheme::unique_cubic_from_rank9(&h).unwrap(), Cubic::fermat());
}

#[test]
fn line_divisor_examples() {
    let f = Cubic::fermat();
    let (p, q) = (ProjPoint::from_ints(1, 0, 0), ProjPoint::from_ints(0, 1, 0));
    let d = eigenscheme::line_eigen_divisor(&f, &p, &q).unwrap();
    assert_eq!(d.degree(), 3);
    for (a, b) in [(1, 0), (0, 1), (1, 1)] {
        assert!(d.eval(&s(a), &s(b)).is_zero());
    }
    let sing = Cubic::new(&(&x() * &x()) * &(&y() - &z())).unwrap();
    let d = eigenscheme::line_eigen_divisor(&sing, &ProjPoint::from_ints(0, 1, 0), &ProjPoint::from_ints(0, 0, 1)).unwrap();
    assert!(d.is_zero());
    // A cubic with no eigenpoint on the line z = 2x + 3y.
    let g = Cubic::from_ints([1, 2, -1, 3, 0, 1, -2, 1, 4, 2]);
    let d = eigenscheme::line_eigen_divisor(&g, &ProjPoint::from_ints(1, 0, 2), &ProjPoint::from_ints(0, 1, 3)).unwrap();
    assert_eq!(d.degree(), 0);
    assert!(eigenscheme::line_eigen_divisor(&f, &p, &p).is_err());
}

#[test]
fn positive_dimension_examples() {
    let f = Cubic::new(&(&x() * &x()) * &(&y() - &z())).unwrap();
    let d = eigenscheme::positive_dim_analysis(&f).unwrap();
    assert_eq!(d.kind, EigKind::LineComponent);
    let mut got: Vec<String> = d.exact_residuals().iter().map(|p| p.to_string()).collect();
    got.sort();
    let mut want: Vec<String> = [ProjPoint::from_ints(0, 1, 1), ProjPoint::from_ints(2, 1, -1), ProjPoint::from_ints(-2, 1, -1)]
        .iter()
        .map(|p| p.to_string())
        .collect();
    want.sort();
    assert_eq!(got, want);

    let ell = Line::new([s(1), s(2), s(-3)]).unwrap();
    let (f, gamma) = eigenscheme::build_eigenconic_family(&ConicFamily::IsoLine { ell }).unwrap();
    assert_eq!(gamma, eigenscheme::iso_conic());
    let d = eigenscheme::positive_dim_analysis(&f).unwrap();
    assert_eq!((d.kind, d.residual_degree), (EigKind::ConicComponent, 1));

    let d = eigenscheme::positive_dim_analysis(&Cubic::fermat()).unwrap();
    assert_eq!(d.kind, EigKind::RegularCandidate);
    assert!(eigenscheme::positive_dim_analysis(&Cubic::from_ints([0; 10])).is_err());
}

#[test]
fn f_of_r_examples() {
    let f = eigenscheme::build_f_of_r(&Line::new([s(0), s(0), s(1)]).unwrap()).unwrap();
    // -(3 x^2 z + 3 y^2 z + 2 z^3), normalized.
    assert_eq!(f, Cubic::from_ints([0, 0, 0, 0, 3, 0, 3, 0, 0, 2]));
    let tangent = Line::new([s(1), Scalar::i(), s(0)]).unwrap();
    assert!(eigenscheme::build_f_of_r(&tangent).is_err());
    // Both tangents at the isotropic points of z = 0 are eigenlines.
    for t in [Line::new([s(1), Scalar::i(), s(0)]).unwrap(), Line::new([s(1), -Scalar::i(), s(0)]).unwrap()] {
        let (p, q) = t.two_points();
        assert!(eigenscheme::line_eigen_divisor(&f, &p, &q).unwrap().is_zero());
    }
}

#[test]
fn eigenline_and_eigenconic_examples() {
    let zl = Line::new([s(0), s(0), s(1)]).unwrap();
    let xl = Line::new([s(1), s(0), s(0)]).unwrap();
    let f = eigenscheme::build_eigenline_family(&zl, &xl, None).unwrap();
    assert_eq!(f, Cubic::new(&(&z() * &z()) * &x()).unwrap());

    // t = x + i y touches the isotropic conic at (1 : i : 0); r0 = x + i y - z
    // passes through it.
    let t = Line::new([s(1), Scalar::i(), s(0)]).unwrap();
    let r0 = Line::new([s(1), Scalar::i(), s(-1)]).unwrap();
    assert!(eigenscheme::build_eigenline_family(&t, &zl, Some((&s(1), &r0))).is_ok());
    assert!(eigenscheme::build_eigenline_family(&t, &zl, None).is_err());
    let tl = eigenscheme::build_eigenline_family(&t, &zl, Some((&s(0), &r0))).unwrap();
    assert_eq!(tl, Cubic::new(&(&t.form() * &t.form()) * &z()).unwrap().normalized());

    let q = eigenscheme::iso_conic();
    let (f, gamma) = eigenscheme::build_eigenconic_family(&ConicFamily::Bitangent { lambda: s(1), mu: s(1), r: zl.clone() }).unwrap();
    assert_eq!(f, Cubic::new(&z() * &(&q + &(&z() * &z()))).unwrap().normalized());
    assert_eq!(gamma, (&q + &(&z() * &z()).scale(&s(3))).monic());

    let (f, gamma) = eigenscheme::build_eigenconic_family(&ConicFamily::Hyperosculating { r: t.clone() }).unwrap();
    let r2 = &t.form() * &t.form();
    assert_eq!(f, Cubic::new(&t.form() * &(&q - &r2)).unwrap().normalized());
    assert_eq!(gamma, (&q - &r2.scale(&s(3))).monic());
}

#[test]
fn rank8_pencil_members_are_singular() {
    let c = conf::build_rank8_case1(&ProjPoint::from_ints(1, 2, 3), &ProjPoint::from_ints(2, -1, 1), &(s(1), s(2))).unwrap();
    let p1 = &c.points[0];
    for k in -2..=2 {
        let f = c.cubics[0].add(&c.cubics[1].scale(&s(k)));
        assert!(eigenscheme::is_singular_at(&f, p1));
    }
}
