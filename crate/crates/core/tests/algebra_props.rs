use eigenpoints::algebra::{BinaryForm, ExactMatrix, Scalar, TernaryForm};
use proptest::prelude::*;

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn gauss() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, -6i64..=6).prop_map(|(a, b)| Scalar::gaussian(a, b))
}

fn cubic_form() -> impl Strategy<Value = TernaryForm> {
    prop::collection::vec(-5i64..=5, 10)
        .prop_filter("nonzero", |c| c.iter().any(|&x| x != 0))
        .prop_map(|c| TernaryForm::from_coeffs(3, &c.into_iter().map(s).collect::<Vec<_>>()))
}

fn linear_form() -> impl Strategy<Value = TernaryForm> {
    (-4i64..=4, -4i64..=4, 1i64..=4).prop_map(|(a, b, c)| TernaryForm::linear(&[s(a), s(b), s(c)]))
}

fn vec3() -> impl Strategy<Value = [Scalar; 3]> {
    (gauss(), gauss(), gauss()).prop_map(|(a, b, c)| [a, b, c])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn euler_identity(f in cubic_form()) {
        let xs = [0, 1, 2].map(TernaryForm::var);
        let mut sum = TernaryForm::zero(3);
        for k in 0..3 {
            sum = &sum + &(&xs[k] * &f.partial(k));
        }
        prop_assert_eq!(sum, f.scale(&s(3)));
    }

    #[test]
    fn field_axioms(a in gauss(), b in gauss(), c in gauss()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv()).is_one());
        }
        let text = a.to_string();
        prop_assert_eq!(text.parse::<Scalar>().unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    /// `L R` with `L` (m x r) and `R` (r x n) carrying identity blocks has rank
    /// exactly `r`.
    #[test]
    fn rank_and_kernel_of_constructed_matrices(
        r in 1usize..=4,
        extra in prop::collection::vec(-3i64..=3, 64),
    ) {
        let (m, n) = (6usize, 7usize);
        let mut it = extra.into_iter().cycle();
        let l: Vec<Vec<Scalar>> = (0..m)
            .map(|i| (0..r).map(|j| if i < r { s((i == j) as i64) } else { s(it.next().unwrap()) }).collect())
            .collect();
        let rr: Vec<Vec<Scalar>> = (0..r)
            .map(|i| (0..n).map(|j| if j < r { s((i == j) as i64) } else { s(it.next().unwrap()) }).collect())
            .collect();
        let a = ExactMatrix::from_rows(l).mul(&ExactMatrix::from_rows(rr));
        prop_assert_eq!(a.rank(), r);
        let k = a.kernel();
        prop_assert_eq!(k.len(), n - r);
        for v in &k {
            prop_assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn gcd_divides_and_extracts_common_factor(f in linear_form(), g in linear_form(), h in linear_form()) {
        let fh = &f * &h;
        let gh = &g * &h;
        let d = fh.gcd(&gh);
        prop_assert!(fh.div_exact(&d).is_some());
        prop_assert!(gh.div_exact(&d).is_some());
        let expect = (&f.gcd(&g) * &h).monic();
        prop_assert_eq!(d.monic(), expect);
    }

    /// Replacing `P` by `c P` substitutes `c u1` for `u1`.
    #[test]
    fn restriction_scales_with_the_point(f in cubic_form(), p in vec3(), q in vec3(), c in gauss(), u1 in gauss(), u2 in gauss()) {
        let cp = p.clone().map(|x| &x * &c);
        let lhs = f.restrict(&cp, &q).eval(&u1, &u2);
        let rhs = f.restrict(&p, &q).eval(&(&c * &u1), &u2);
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn restriction_examples() {
    let q = &(&TernaryForm::var(0).pow(2) + &TernaryForm::var(1).pow(2)) + &TernaryForm::var(2).pow(2);
    let e1 = [s(1), s(0), s(0)];
    let e2 = [s(0), s(1), s(0)];
    assert_eq!(q.restrict(&e1, &e2), BinaryForm::new(vec![s(1), s(0), s(1)]));
    let tangent = [s(0), Scalar::i(), s(1)];
    assert_eq!(q.restrict(&e1, &tangent), BinaryForm::new(vec![s(1), s(0), s(0)]));
    assert!(TernaryForm::var(2).restrict(&e1, &e2).is_zero());
}

#[test]
fn scalar_grammar() {
    for (text, re, im) in [("3/4", (3, 4), (0, 1)), ("1-2i", (1, 1), (-2, 1)), ("-i", (0, 1), (-1, 1)), ("5/2i", (0, 1), (5, 2))] {
        let v: Scalar = text.parse().unwrap();
        let want = &Scalar::frac(re.0, re.1) + &(&Scalar::i() * &Scalar::frac(im.0, im.1));
        assert_eq!(v, want, "{text}");
    }
    for bad in ["", "x", "1/0", "1+", "i2"] {
        assert!(bad.parse::<Scalar>().is_err(), "{bad}");
    }
}

#[test]
fn square_root_extension() {
    let two = s(2);
    let r = Scalar::sqrt_or_adjoin(&two).unwrap();
    assert!(r.radicand().is_some());
    assert_eq!(&r * &r, two);
    assert_eq!(Scalar::sqrt_or_adjoin(&s(-4)).unwrap().square(), s(-4));
}
