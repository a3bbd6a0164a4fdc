//! Randomized check suites over the exact and numeric machinery. Each check
//! reports pass counts and the first failures; a check passes when every
//! admissible instance passes.

use std::time::Instant;

use rand::Rng;

use crate::algebra::{Scalar, TernaryForm};
use crate::configurations::{self as conf, Label};
use crate::eigenscheme::{self, ConicFamily, Cubic, EigKind};
use crate::geometry::{self, combine, Line, ProjPoint};
use crate::numsolve::{self, SolveOptions};
use crate::sample::{self, Sampler};

#[derive(Clone, Debug, serde::Serialize)]
pub struct Check {
    pub name: String,
    pub section: &'static str,
    pub passed: usize,
    pub total: usize,
    /// Sampled inputs rejected as degenerate before testing.
    pub skipped: usize,
    pub failures: Vec<String>,
    pub seconds: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<serde_json::Value>,
}

impl Check {
    fn new(name: impl Into<String>, section: &'static str) -> Self {
        Check {
            name: name.into(),
            section,
            passed: 0,
            total: 0,
            skipped: 0,
            failures: Vec::new(),
            seconds: 0.0,
            detail: None,
        }
    }

    pub fn ok(&self) -> bool {
        self.total > 0 && self.passed == self.total
    }

    fn record(&mut self, pass: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if pass {
            self.passed += 1;
        } else if self.failures.len() < 5 {
            self.failures.push(what());
        }
    }
}

/// Runs `body` until `n` instances were recorded, skipping those for which
/// it returns `None`. Gives up after `50 n` draws.
fn sampled(
    name: &str,
    section: &'static str,
    n: usize,
    rng: &mut Sampler,
    mut body: impl FnMut(&mut Sampler) -> Option<(bool, String)>,
) -> Check {
    let start = Instant::now();
    let mut c = Check::new(name, section);
    let mut draws = 0;
    while c.total < n && draws < 50 * n {
        draws += 1;
        match body(rng) {
            Some((pass, what)) => c.record(pass, || what),
            None => c.skipped += 1,
        }
    }
    if c.total < n {
        c.failures.push(format!("only {} admissible instances", c.total));
    }
    c.seconds = start.elapsed().as_secs_f64();
    c
}

/// A point of the isotropic conic, `(1 - t^2, i (1 + t^2), 2 t)` with
/// rational `t`, moved by a random coordinate permutation.
pub fn isotropic_point(rng: &mut Sampler) -> ProjPoint {
    let t = Scalar::frac(sample::int(rng, 6), 1 + sample::int(rng, 3).unsigned_abs() as i64);
    let one = Scalar::one();
    let t2 = &t * &t;
    let mut c = [&one - &t2, &Scalar::i() * &(&one + &t2), &Scalar::from_int(2) * &t];
    let k = rng.gen_range(0..3);
    c.rotate_left(k);
    ProjPoint::new(c).expect("nonzero")
}

fn rank_of(points: &[ProjPoint]) -> Option<usize> {
    eigenscheme::condition_rank(points).ok()
}

fn distinct(points: &[ProjPoint]) -> bool {
    (0..points.len()).all(|i| (i + 1..points.len()).all(|j| points[i] != points[j]))
}

fn show(points: &[ProjPoint]) -> String {
    points.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}

/// Ranks of the conditions imposed by small point sets.
pub fn rank_tables(seed: u64, n: usize) -> Vec<Check> {
    let mut rng = sample::sampler(seed);
    let expect = |pts: Vec<ProjPoint>, r: usize| -> Option<(bool, String)> {
        if !distinct(&pts) {
            return None;
        }
        let got = rank_of(&pts)?;
        Some((got == r, format!("rank {got}, expected {r}: {}", show(&pts))))
    };
    let secant_points = |rng: &mut Sampler, k: usize| -> Option<Vec<ProjPoint>> {
        let p = sample::point(rng, 5);
        let q = sample::point(rng, 5);
        if p == q || geometry::sigma(&p, &q).is_zero() {
            return None;
        }
        let mut v = vec![p.clone(), q.clone()];
        v.extend(sample::points_on_line(rng, &p, &q, k - 2, 5));
        Some(v)
    };
    let tangent_points = |rng: &mut Sampler, k: usize, with_touch: bool| -> Vec<ProjPoint> {
        let p = isotropic_point(rng);
        let (a, b) = p.polar().two_points();
        let q = if a == p { b } else { a };
        let mut v = if with_touch { vec![p.clone()] } else { Vec::new() };
        let need = k - v.len();
        v.extend(sample::points_on_line(rng, &p, &q, need, 5));
        v
    };
    vec![
        sampled("one point: rank 2", "rank", n, &mut rng, |r| {
            expect(vec![sample::gaussian_point(r, 5)], 2)
        }),
        sampled("three non-collinear points: rank 6", "rank", n, &mut rng, |r| {
            let v: Vec<ProjPoint> = (0..3).map(|_| sample::point(r, 5)).collect();
            if geometry::collinear(&v[0], &v[1], &v[2]) {
                return None;
            }
            expect(v, 6)
        }),
        sampled("three collinear points, secant line: rank 6", "rank", n, &mut rng, |r| {
            expect(secant_points(r, 3)?, 6)
        }),
        sampled("three collinear points, tangent at one: rank 5", "rank", n, &mut rng, |r| {
            expect(tangent_points(r, 3, true), 5)
        }),
        sampled("four collinear points, secant line: rank 7", "rank", n, &mut rng, |r| {
            expect(secant_points(r, 4)?, 7)
        }),
        sampled("four collinear points, tangent line: rank 6", "rank", n, &mut rng, |r| {
            expect(tangent_points(r, 4, false), 6)
        }),
    ]
}

fn theorem_case(v: crate::Result<conf::VConfig>, want: impl Fn(usize) -> bool) -> Option<(bool, String)> {
    let v = v.ok()?;
    let c = conf::rank_v(&v).ok()?;
    Some((
        c.theorem_holds && want(c.rank),
        format!("rank {} certificate {:?}: {}", c.rank, c, show(v.points())),
    ))
}

/// The rank of a V-configuration against the invariants `delta1`, `delta2`
/// and the two rank-8 conditions, on each branch.
pub fn rank_v_theorem(seed: u64, n: usize) -> Vec<Check> {
    let mut rng = sample::sampler(seed);
    let pt = |r: &mut Sampler| sample::point(r, 4);
    let par = |r: &mut Sampler| sample::param(r, 4);
    vec![
        sampled("generic V-configurations", "rank_v", n, &mut rng, |r| {
            let (p1, p2, p4) = (pt(r), pt(r), pt(r));
            let (t3, t5) = (par(r), par(r));
            let v = (|| {
                let p3 = combine(&t3.0, &p1, &t3.1, &p2)?;
                let p5 = combine(&t5.0, &p1, &t5.1, &p4)?;
                conf::VConfig::new([p1.clone(), p2.clone(), p3, p4.clone(), p5])
            })();
            theorem_case(v, |_| true)
        }),
        sampled("delta1 = 0 branch: rank at most 9", "rank_v", n, &mut rng, |r| {
            let (p1, p2) = (pt(r), pt(r));
            let (t3, t4, t5) = (par(r), par(r), par(r));
            theorem_case(conf::c2_points(&p1, &p2, &t4, &t3, &t5), |k| k <= 9)
        }),
        sampled("delta2 = 0 branch: rank at most 9", "rank_v", n, &mut rng, |r| {
            let (p1, p2, p4) = (pt(r), pt(r), pt(r));
            let t5 = par(r);
            theorem_case(conf::c3_points(&p1, &p2, &p4, &t5), |k| k <= 9)
        }),
        sampled("rank 8, singular shared point", "rank_v", n, &mut rng, |r| {
            let (p1, p2) = (pt(r), pt(r));
            let t4 = par(r);
            theorem_case(conf::rank8_case1_points(&p1, &p2, &t4), |k| k == 8)
        }),
        sampled("rank 8, tangent lines", "rank_v", n, &mut rng, |r| {
            let p1 = pt(r);
            let (t3, t5) = (par(r), par(r));
            theorem_case(conf::rank8_case2_points(&p1, &t3, &t5), |k| k == 8)
        }),
    ]
}

/// The unique cubic of a `delta2 = 0` configuration has two more
/// eigenpoints on a third line through `P1`.
pub fn third_alignment(seed: u64, n: usize) -> Check {
    let mut rng = sample::sampler(seed);
    sampled("third line through P1 carries two more eigenpoints", "third", n, &mut rng, |r| {
        let (p1, p2, p4) = (sample::point(r, 4), sample::point(r, 4), sample::point(r, 4));
        let t5 = sample::param(r, 4);
        let c = conf::build_c3(&p1, &p2, &p4, &t5).ok()?;
        let keys = ["third line through P1", "third line divisor degree 3", "degree 2 beyond P1"];
        let pass = keys.iter().all(|k| c.certificates.get(*k) == Some(&true));
        Some((pass, format!("{:?} at {}", c.certificates, show(&c.points))))
    })
}

/// For `delta2 = 0` configurations of rank 9, the split form
/// `A g3 - B g2 + C g1` at `P1` contains both lines through `P1`.
pub fn g_split(seed: u64, n: usize) -> Check {
    let mut rng = sample::sampler(seed);
    sampled("split form contains P1 v P2 and P1 v P4", "third", n, &mut rng, |r| {
        let (p1, p2, p4) = (sample::point(r, 4), sample::point(r, 4), sample::point(r, 4));
        let t5 = sample::param(r, 4);
        let v = conf::c3_points(&p1, &p2, &p4, &t5).ok()?;
        let p = v.points();
        if rank_of(p)? != 9 {
            return None;
        }
        let f = eigenscheme::unique_cubic_through(p).ok()?;
        let g = eigenscheme::g_split_form(&f, &p[0]);
        let l12 = Line::through(&p[0], &p[1]).ok()?.form();
        let l14 = Line::through(&p[0], &p[3]).ok()?.form();
        let pass = !g.is_zero() && g.div_exact(&(&l12 * &l14)).is_some();
        Some((pass, format!("split form {g} at {}", show(p))))
    })
}

fn exact_residual_set(d: &eigenscheme::EigDecomposition) -> Vec<ProjPoint> {
    let mut v = d.exact_residuals();
    v.sort_by_key(|p| p.to_string());
    v
}

/// Cubics whose eigenscheme contains a line or a conic.
pub fn positive_dimension(seed: u64, n: usize) -> Vec<Check> {
    let mut rng = sample::sampler(seed);
    let start = Instant::now();
    let mut ex = Check::new("x^2 (y - z): line x = 0 and three residual points", "positive");
    let mut c = vec![Scalar::zero(); 10];
    c[1] = Scalar::one(); // x^2 y
    c[4] = Scalar::from_int(-1); // x^2 z
    let f = Cubic::from_coeffs(&c).expect("ten");
    match eigenscheme::positive_dim_analysis(&f) {
        Ok(d) => {
            let mut want = vec![
                ProjPoint::from_ints(0, 1, 1),
                ProjPoint::from_ints(2, 1, -1),
                ProjPoint::from_ints(-2, 1, -1),
            ];
            want.sort_by_key(|p| p.to_string());
            let line_ok = d.component.as_ref() == Some(&TernaryForm::var(0));
            let got = exact_residual_set(&d);
            ex.record(d.kind == EigKind::LineComponent && line_ok && got == want, || {
                format!("got {:?} with residual {}", d.kind, show(&got))
            });
        }
        Err(e) => ex.record(false, || e.to_string()),
    }
    ex.seconds = start.elapsed().as_secs_f64();
    let lines = sampled("t^2 l: line component, residual degree 3", "positive", n, &mut rng, |r| {
        let t = sample::line(r, 4);
        if t.is_isotropic_tangent() {
            return None;
        }
        let l = sample::line(r, 4);
        let f = eigenscheme::build_eigenline_family(&t, &l, None).ok()?;
        let d = eigenscheme::positive_dim_analysis(&f).ok()?;
        let pass = d.kind == EigKind::LineComponent
            && d.residual_degree == 3
            && d.component.as_ref().is_some_and(|g| Line::new(line_coeffs(g)).ok() == Some(t.clone()));
        Some((pass, format!("{:?} degree {} for t = {t}, l = {l}", d.kind, d.residual_degree)))
    });
    let conics = sampled(
        "r (lambda Q + mu r^2): conic lambda Q + 3 mu r^2, residual degree 1",
        "positive",
        n,
        &mut rng,
        |r| {
            let line = sample::line(r, 4);
            if line.is_isotropic_tangent() {
                return None;
            }
            let lambda = sample::nonzero(r, 5);
            let mu = sample::nonzero(r, 5);
            let kind = ConicFamily::Bitangent { lambda: lambda.clone(), mu: mu.clone(), r: line.clone() };
            let (f, gamma) = eigenscheme::build_eigenconic_family(&kind).ok()?;
            let d = eigenscheme::positive_dim_analysis(&f).ok()?;
            let rf = line.form();
            let expect = (&eigenscheme::iso_conic().scale(&lambda)
                + &(&rf * &rf).scale(&(&Scalar::from_int(3) * &mu)))
                .monic();
            let comp_ok = d.component.as_ref().is_some_and(|g| g.monic() == expect) && gamma == expect;
            // Sample points of the conic are eigenpoints.
            let base = conic_base_point(&expect, r);
            let pts_ok = base.is_some_and(|b| {
                let dirs: Vec<ProjPoint> = (0..3).map(|_| sample::point(r, 5)).collect();
                let pts = eigenscheme::conic_points(&expect, &b, &dirs);
                !pts.is_empty() && pts.iter().all(|p| eigenscheme::is_eigenpoint(&f, p))
            });
            let pass = d.kind == EigKind::ConicComponent && d.residual_degree == 1 && comp_ok && pts_ok;
            Some((pass, format!("{:?} degree {} for r = {line}", d.kind, d.residual_degree)))
        },
    );
    vec![ex, lines, conics]
}

fn line_coeffs(g: &TernaryForm) -> [Scalar; 3] {
    let c = g.coeffs();
    [c[0].clone(), c[1].clone(), c[2].clone()]
}

/// A point of `conic` with coordinates in the base field, found on a line
/// `z = c x` or similar where the restriction has a root; `None` if the
/// draws do not produce one.
fn conic_base_point(conic: &TernaryForm, rng: &mut Sampler) -> Option<ProjPoint> {
    for _ in 0..20 {
        let p = sample::point(rng, 5);
        let q = sample::point(rng, 5);
        if p == q {
            continue;
        }
        let b = conic.restrict(p.coords(), q.coords());
        if b.coeffs().iter().all(|c| c.is_zero()) {
            continue;
        }
        if let Ok([(a1, b1), _]) = b.quadratic_roots() {
            if let Ok(x) = combine(&a1, &p, &b1, &q) {
                return Some(x);
            }
        }
    }
    None
}

/// The orthocenter construction of six-line configurations.
pub fn c8_orthocenter(seed: u64, n: usize) -> Vec<Check> {
    let mut rng = sample::sampler(seed);
    let start = Instant::now();
    let mut fermat = Check::new("seed (1:1:1), (1:0:0), (0:1:0) gives Fermat", "c8");
    match conf::build_c8(&ProjPoint::from_ints(1, 1, 1), &ProjPoint::from_ints(1, 0, 0), &ProjPoint::from_ints(0, 1, 0)) {
        Ok(c) => {
            let pass = c.points[6] == ProjPoint::from_ints(0, 0, 1) && c.member.as_ref() == Some(&Cubic::fermat());
            fermat.record(pass, || format!("P7 = {}, cubic {:?}", c.points[6], c.member));
        }
        Err(e) => fermat.record(false, || e.to_string()),
    }
    fermat.seconds = start.elapsed().as_secs_f64();
    let random = sampled("random seeds: rank 9, orthogonalities, six lines", "c8", n, &mut rng, |r| {
        let (p1, p2, p4) = (sample::point(r, 5), sample::point(r, 5), sample::point(r, 5));
        let c = match conf::build_c8(&p1, &p2, &p4) {
            Err(crate::Error::Precondition(_) | crate::Error::Degenerate { .. }) => return None,
            Err(e) => return Some((false, format!("{e} at {p1} {p2} {p4}"))),
            Ok(c) => c,
        };
        let rep = conf::classify_incidence(&c.points).ok()?;
        let mut deg3: Vec<usize> = (1..=7)
            .filter(|i| rep.lines.iter().filter(|t| t.contains(i)).count() == 3)
            .collect();
        deg3.sort_unstable();
        let pass = c.certificates.values().all(|&b| b)
            && eigenscheme::condition_rank(&c.points).ok() == Some(9)
            && rep.label == Label::C8
            && deg3 == vec![1, 2, 4, 7];
        Some((pass, format!("{:?} {:?} at {}", rep.label, c.certificates, show(&c.points))))
    });
    vec![fermat, random]
}

/// Orthogonality among the four triple points of the orthocenter
/// configuration is transitive.
pub fn three_s_zero(seed: u64, n: usize) -> Check {
    let mut rng = sample::sampler(seed);
    sampled("orthogonality transitive on P1, P2, P4, P7", "c8", n, &mut rng, |r| {
        // Draw with many zeros so orthogonal pairs occur.
        let p1 = sample::point(r, 1);
        let p2 = sample::point(r, 1);
        let p4 = sample::point(r, 1);
        let c = conf::build_c8(&p1, &p2, &p4).ok()?;
        let q = [&c.points[0], &c.points[1], &c.points[3], &c.points[6]];
        let s = |a: usize, b: usize| geometry::scal(q[a], q[b]).is_zero();
        let mut pass = true;
        for u in 0..4 {
            for v in 0..4 {
                for w in 0..4 {
                    if u != v && v != w && u != w && s(u, v) && s(u, w) && !s(v, w) {
                        pass = false;
                    }
                }
            }
        }
        Some((pass, show(&c.points)))
    })
}

/// Seven eigenpoints produced by the builders and by the numeric solver
/// never realize the impossible rows nor a strict four-line row.
pub fn impossibility(seed: u64, n_builders: usize, n_random: usize, opts: &SolveOptions) -> Vec<Check> {
    let mut rng = sample::sampler(seed);
    let forbidden = |l: Label| matches!(l, Label::C6 | Label::C7 | Label::C9 | Label::C4);
    let exact = sampled("builder outputs, exact", "impossible", n_builders, &mut rng, |r| {
        let (p1, p2, p4) = (sample::point(r, 4), sample::point(r, 4), sample::point(r, 4));
        let (t3, t4, t5) = (sample::param(r, 4), sample::param(r, 4), sample::param(r, 4));
        let built = [
            conf::build_c3(&p1, &p2, &p4, &t5),
            conf::build_c5(&p2, &p4, &t3, &t5),
            conf::build_c8(&p1, &p2, &p4),
            conf::build_rank8_case1(&p1, &p2, &t4),
            conf::build_rank8_case2(&p1, &t3, &t5, Some(conf::Subfamily::A)),
            conf::build_rank8_case2(&p1, &t3, &t5, Some(conf::Subfamily::B)),
            conf::build_d2_6align(&p1, &p2, &t4),
        ];
        let labels: Vec<Label> = built
            .iter()
            .filter_map(|c| c.as_ref().ok())
            .filter(|c| c.points.len() == 7)
            .filter_map(|c| conf::classify_incidence(&c.points).ok())
            .map(|r| r.label)
            .collect();
        if labels.is_empty() {
            return None;
        }
        Some((!labels.iter().any(|&l| forbidden(l)), format!("{labels:?}")))
    });
    let members = sampled("builder cubics, numeric", "impossible", n_builders, &mut rng, |r| {
        let (p1, p2, p4) = (sample::point(r, 4), sample::point(r, 4), sample::point(r, 4));
        let (t3, t4, t5) = (sample::param(r, 4), sample::param(r, 4), sample::param(r, 4));
        let mut cubics: Vec<Cubic> = Vec::new();
        for c in [
            conf::build_c2(&p1, &p2, &t4, &t3, &t5),
            conf::build_c3(&p1, &p2, &p4, &t5),
            conf::build_c5(&p2, &p4, &t3, &t5),
            conf::build_c8(&p1, &p2, &p4),
            conf::build_rank8_case2(&p1, &t3, &t5, None),
        ]
        .into_iter()
        .flatten()
        {
            // A random member of the system.
            let mut f = c.cubics[0].clone();
            for g in &c.cubics[1..] {
                f = f.add(&g.scale(&sample::nonzero(r, 3)));
            }
            cubics.push(f);
        }
        let labels: Vec<Label> = cubics
            .iter()
            .filter_map(|f| numsolve::eigenpoints_numeric(f, opts).ok())
            .filter(|e| e.points.len() == 7)
            .filter_map(|e| conf::classify_numeric(&e.points, 1e-8).ok())
            .map(|r| r.label)
            .collect();
        if labels.is_empty() {
            return None;
        }
        Some((!labels.iter().any(|&l| forbidden(l)), format!("{labels:?}")))
    });
    let random = sampled("random cubics, numeric", "impossible", n_random, &mut rng, |r| {
        let f = sample::cubic(r, 9);
        let e = numsolve::eigenpoints_numeric(&f, opts).ok()?;
        if e.points.len() != 7 {
            return None;
        }
        let rep = conf::classify_numeric(&e.points, 1e-8).ok()?;
        Some((!forbidden(rep.label), format!("{} for {f}", rep.label)))
    });
    vec![exact, members, random]
}

/// The ODECO family and its seven eigenpoints.
pub fn odeco(seed: u64, n: usize) -> Check {
    let mut rng = sample::sampler(seed);
    sampled("l1 x^3 + l2 y^3 + l3 z^3: seven eigenpoints, six lines", "c8", n, &mut rng, |r| {
        let l = [sample::nonzero(r, 6), sample::nonzero(r, 6), sample::nonzero(r, 6)];
        let c = conf::build_odeco([&l[0], &l[1], &l[2]]).ok()?;
        let rep = conf::classify(&c.points).ok()?;
        let pass = c.certificates.values().all(|&b| b) && rep.label == Label::C8;
        Some((pass, format!("{} for {:?}", rep.label, l)))
    })
}

/// A random pencil of integer cubics.
pub fn random_pencil(rng: &mut Sampler) -> (Cubic, Cubic) {
    (sample::cubic(rng, 9), sample::cubic(rng, 9))
}

/// Members of random pencils with an aligned eigenpoint triple.
pub fn degree15(seed: u64, pencils: usize, seeds: usize, opts: &SolveOptions) -> Check {
    let start = Instant::now();
    let mut rng = sample::sampler(seed);
    let mut c = Check::new("aligned members of a pencil: 15 parameters", "degree15");
    let mut counts: Vec<Vec<usize>> = Vec::new();
    let mut full = 0;
    for k in 0..pencils {
        let (f, g) = random_pencil(&mut rng);
        let mut row = Vec::new();
        for s in 0..seeds {
            let o = SolveOptions { seed: opts.seed.wrapping_add(s as u64), ..opts.clone() };
            match numsolve::pencil_alignment_parameters(&f, &g, &o) {
                Ok(rep) => row.push(rep.t_values.len()),
                Err(e) => {
                    c.failures.push(format!("pencil {k}: {e}"));
                    row.push(0);
                }
            }
        }
        let pass = row.iter().all(|&m| (14..=15).contains(&m));
        if row.iter().all(|&m| m == 15) {
            full += 1;
        }
        c.record(pass, || format!("pencil {k}: counts {row:?}"));
        counts.push(row);
    }
    if 3 * full < 2 * pencils {
        c.failures.push(format!("only {full} of {pencils} pencils gave 15 on every seed"));
        c.passed = c.passed.min(c.total.saturating_sub(1));
    }
    c.detail = Some(serde_json::json!({ "counts": counts }));
    c.seconds = start.elapsed().as_secs_f64();
    c
}

pub const SECTIONS: [&str; 7] = ["rank", "rank_v", "third", "positive", "c8", "impossible", "degree15"];

/// Every check in `section` (or all sections), with default sizes.
pub fn run(section: &str, seed: u64, opts: &SolveOptions) -> crate::Result<Vec<Check>> {
    let all = section == "all";
    if !all && !SECTIONS.contains(&section) {
        return Err(crate::Error::Parse(format!(
            "unknown section '{section}', expected all or one of {}",
            SECTIONS.join(", ")
        )));
    }
    let want = |s: &str| all || s == section;
    let mut out = Vec::new();
    if want("rank") {
        out.extend(rank_tables(seed, 200));
    }
    if want("rank_v") {
        out.extend(rank_v_theorem(seed, 200));
    }
    if want("third") {
        out.push(third_alignment(seed, 50));
        out.push(g_split(seed, 50));
    }
    if want("positive") {
        out.extend(positive_dimension(seed, 50));
    }
    if want("c8") {
        out.extend(c8_orthocenter(seed, 100));
        out.push(three_s_zero(seed, 100));
        out.push(odeco(seed, 50));
    }
    if want("impossible") {
        out.extend(impossibility(seed, 50, 500, opts));
    }
    if want("degree15") {
        out.push(degree15(seed, 3, 3, opts));
    }
    Ok(out)
}
