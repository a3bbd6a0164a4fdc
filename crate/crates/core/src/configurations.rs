//! Alignment configurations of seven eigenpoints: the classifier and the
//! constructions for every realizable case.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{ExactMatrix, Scalar, TernaryForm};
use crate::eigenscheme::{self, Cubic};
use crate::error::{Error, Redirect, Result};
use crate::geometry::{
    collinear, combine, cross, cross3, delta1, delta1bar, delta2, lincomb, on_isotropic, scal,
    sigma, so3_normalize, Line, ProjPoint, Vec3,
};
use crate::numsolve::{det3c, CPoint};

/// A point `u1 A + u2 B` on a line is given by its parameter `(u1 : u2)`.
pub type Param = (Scalar, Scalar);

/// Rows of the table of seven-point configurations with pairwise meeting
/// lines.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub enum Label {
    NoAlignment,
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
    Invalid,
}

const PATTERNS: [(Label, &[[usize; 3]]); 9] = [
    (Label::C1, &[[1, 2, 3]]),
    (Label::C2, &[[1, 2, 3], [1, 4, 5]]),
    (Label::C3, &[[1, 2, 3], [1, 4, 5], [1, 6, 7]]),
    (Label::C4, &[[1, 2, 3], [1, 4, 5], [2, 4, 6]]),
    (Label::C5, &[[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6]]),
    (Label::C6, &[[1, 2, 3], [1, 4, 5], [2, 4, 6], [3, 5, 6]]),
    (Label::C7, &[[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6], [2, 5, 7]]),
    (Label::C8, &[[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6], [2, 5, 7], [3, 4, 7]]),
    (
        Label::C9,
        &[[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 5, 6]],
    ),
];

impl Label {
    pub fn name(&self) -> &'static str {
        match self {
            Label::NoAlignment => "no alignment",
            Label::C1 => "C1",
            Label::C2 => "C2",
            Label::C3 => "C3",
            Label::C4 => "C4",
            Label::C5 => "C5",
            Label::C6 => "C6",
            Label::C7 => "C7",
            Label::C8 => "C8",
            Label::C9 => "C9",
            Label::Invalid => "invalid",
        }
    }

    /// The aligned triples of the row, with 1-based indices.
    pub fn pattern(&self) -> Option<&'static [[usize; 3]]> {
        PATTERNS.iter().find(|(l, _)| l == self).map(|(_, p)| *p)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl serde::Serialize for Label {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

fn signature(lines: &[[usize; 3]], n: usize) -> (usize, Vec<usize>) {
    let mut deg = vec![0usize; n];
    for t in lines {
        for &i in t {
            deg[i - 1] += 1;
        }
    }
    deg.sort_unstable_by(|a, b| b.cmp(a));
    (lines.len(), deg)
}

/// Label of a set of aligned triples (1-based) among seven points.
///
/// Two triples sharing two points mean four collinear points, and two
/// triples sharing none cannot both be eigenpoint lines; both are invalid.
pub fn label_from_lines(lines: &[[usize; 3]]) -> Label {
    if lines.is_empty() {
        return Label::NoAlignment;
    }
    for (a, s) in lines.iter().enumerate() {
        for t in &lines[a + 1..] {
            if s.iter().filter(|i| t.contains(i)).count() != 1 {
                return Label::Invalid;
            }
        }
    }
    let sig = signature(lines, 7);
    PATTERNS
        .iter()
        .find(|(_, p)| signature(p, 7) == sig)
        .map_or(Label::Invalid, |(l, _)| *l)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// Whether some relabeling of `label`'s pattern is contained in `lines`,
/// that is, whether the points are in a (not necessarily strict) `label`
/// configuration.
pub fn contains_configuration(lines: &[[usize; 3]], label: Label) -> bool {
    let Some(pat) = label.pattern() else {
        return label == Label::NoAlignment;
    };
    let mut have: Vec<[usize; 3]> = lines
        .iter()
        .map(|t| {
            let mut s = *t;
            s.sort_unstable();
            s
        })
        .collect();
    have.sort_unstable();
    permutations(7).into_iter().any(|perm| {
        pat.iter().all(|t| {
            let mut m = t.map(|i| perm[i - 1] + 1);
            m.sort_unstable();
            have.binary_search(&m).is_ok()
        })
    })
}

/// Result of classifying seven points.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ConfigReport {
    pub label: Label,
    /// Aligned triples, 1-based, in increasing order.
    pub lines: Vec<[usize; 3]>,
    /// The lines are exactly a table row, with no further alignment.
    pub strict: bool,
    pub certificates: BTreeMap<String, bool>,
    /// No six of the points lie on a conic.
    pub regular: bool,
}

fn check_distinct(points: &[ProjPoint]) -> Result<()> {
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i] == points[j] {
                return Err(Error::pre(format!("points {} and {} coincide", i + 1, j + 1)));
            }
        }
    }
    Ok(())
}

fn triples(n: usize) -> impl Iterator<Item = [usize; 3]> {
    (0..n).flat_map(move |i| {
        (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| [i, j, k]))
    })
}

fn conic_row(p: &Vec3) -> Vec<Scalar> {
    let [x, y, z] = p;
    vec![x * x, x * y, y * y, x * z, y * z, z * z]
}

/// Indices (0-based) of the point left out by each six-point subset that
/// lies on a conic.
fn six_on_conic(points: &[ProjPoint]) -> Vec<usize> {
    (0..points.len())
        .filter(|&skip| {
            let rows: Vec<Vec<Scalar>> = points
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != skip)
                .map(|(_, p)| conic_row(p.coords()))
                .collect();
            ExactMatrix::from_rows(rows).det().is_zero()
        })
        .collect()
}

/// The V-configurations formed by pairs of lines sharing a point, as
/// 0-based index tuples `(P1, P2, P3, P4, P5)`.
fn v_configurations(lines: &[[usize; 3]]) -> Vec<[usize; 5]> {
    let mut out = Vec::new();
    for (a, s) in lines.iter().enumerate() {
        for t in &lines[a + 1..] {
            let Some(&c) = s.iter().find(|i| t.contains(i)) else { continue };
            let l1: Vec<usize> = s.iter().copied().filter(|&i| i != c).collect();
            let l2: Vec<usize> = t.iter().copied().filter(|&i| i != c).collect();
            if l1.len() == 2 && l2.len() == 2 {
                out.push([c - 1, l1[0] - 1, l1[1] - 1, l2[0] - 1, l2[1] - 1]);
            }
        }
    }
    out
}

fn idx_name(prefix: &str, idx: &[usize]) -> String {
    let parts: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
    format!("{prefix}({})", parts.join(","))
}

/// Exact classification of seven distinct points, with the invariants of
/// every V-configuration among the lines as certificates.
pub fn classify(points: &[ProjPoint]) -> Result<ConfigReport> {
    classify_with(points, true)
}

/// [`classify`] without certificates.
pub fn classify_incidence(points: &[ProjPoint]) -> Result<ConfigReport> {
    classify_with(points, false)
}

fn classify_with(points: &[ProjPoint], certify: bool) -> Result<ConfigReport> {
    if points.len() != 7 {
        return Err(Error::pre(format!("need 7 points, got {}", points.len())));
    }
    check_distinct(points)?;
    let lines: Vec<[usize; 3]> = triples(7)
        .filter(|[i, j, k]| collinear(&points[*i], &points[*j], &points[*k]))
        .map(|t| t.map(|i| i + 1))
        .collect();
    let label = label_from_lines(&lines);
    let mut certificates = BTreeMap::new();
    if certify && label != Label::Invalid {
        for t in &lines {
            let l = Line::through(&points[t[0] - 1], &points[t[1] - 1])?;
            certificates.insert(
                idx_name("tangent", &t.map(|i| i - 1)),
                l.is_isotropic_tangent(),
            );
        }
        for v in v_configurations(&lines) {
            let p: [ProjPoint; 5] = v.map(|i| points[i].clone());
            let d1 = delta1(&p[0], &p[1], &p[3]).is_zero();
            let d2 = delta2(&p)?.is_zero();
            let rank = eigenscheme::condition_rank(&p)?;
            certificates.insert(idx_name("delta1=0 ", &[v[0], v[1], v[3]]), d1);
            certificates.insert(idx_name("delta2=0 ", &v), d2);
            certificates.insert(idx_name("rank<=9 ", &v), rank <= 9);
            certificates.insert(idx_name("rank=8 ", &v), rank == 8);
        }
    }
    let regular = six_on_conic(points).is_empty();
    Ok(ConfigReport {
        strict: matches!(label.pattern(), Some(_)),
        label,
        lines,
        certificates,
        regular,
    })
}

fn cdet6(rows: &mut [[num_complex::Complex64; 6]; 6]) -> num_complex::Complex64 {
    let mut det = num_complex::Complex64::new(1.0, 0.0);
    for c in 0..6 {
        let piv = (c..6)
            .max_by(|&a, &b| rows[a][c].norm().total_cmp(&rows[b][c].norm()))
            .expect("nonempty");
        if rows[piv][c].norm() == 0.0 {
            return num_complex::Complex64::new(0.0, 0.0);
        }
        if piv != c {
            rows.swap(piv, c);
            det = -det;
        }
        det *= rows[c][c];
        for r in c + 1..6 {
            let m = rows[r][c] / rows[c][c];
            for k in c..6 {
                let v = rows[c][k];
                rows[r][k] -= m * v;
            }
        }
    }
    det
}

/// Classification of numeric points: a triple is aligned when the
/// determinant of the unit representatives is below `tol`.
pub fn classify_numeric(points: &[CPoint], tol: f64) -> Result<ConfigReport> {
    if points.len() != 7 {
        return Err(Error::pre(format!("need 7 points, got {}", points.len())));
    }
    let lines: Vec<[usize; 3]> = triples(7)
        .filter(|[i, j, k]| det3c(&points[*i], &points[*j], &points[*k]).norm() < tol)
        .map(|t| t.map(|i| i + 1))
        .collect();
    let label = label_from_lines(&lines);
    let regular = (0..7).all(|skip| {
        let mut rows = [[num_complex::Complex64::new(0.0, 0.0); 6]; 6];
        for (r, (_, p)) in points.iter().enumerate().filter(|(k, _)| *k != skip).enumerate() {
            let [x, y, z] = *p.coords();
            rows[r] = [x * x, x * y, y * y, x * z, y * z, z * z];
        }
        cdet6(&mut rows).norm() > tol
    });
    Ok(ConfigReport {
        strict: label.pattern().is_some(),
        label,
        lines,
        certificates: BTreeMap::new(),
        regular,
    })
}

/// Five points with `P1, P2, P3` and `P1, P4, P5` on two distinct lines.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct VConfig {
    points: [ProjPoint; 5],
}

impl VConfig {
    pub fn new(points: [ProjPoint; 5]) -> Result<Self> {
        crate::geometry::check_v_configuration(&points)?;
        Ok(VConfig { points })
    }

    pub fn points(&self) -> &[ProjPoint; 5] {
        &self.points
    }
}

/// The rank of the conditions of a V-configuration with the invariants that
/// govern it.
#[derive(Clone, Debug, serde::Serialize)]
pub struct RankCertificate {
    pub rank: usize,
    pub delta1: Scalar,
    pub delta2: Scalar,
    pub delta1bar_123: Scalar,
    pub delta1bar_145: Scalar,
    /// `P1 v P2` touches the isotropic conic at `P2` or `P3`.
    pub tangent_12: bool,
    /// `P1 v P4` touches the isotropic conic at `P4` or `P5`.
    pub tangent_14: bool,
    /// `delta1 = 0` and both `delta1bar` vanish.
    pub rank8_case1: bool,
    /// Both lines tangent at one of their outer points.
    pub rank8_case2: bool,
    /// The instance agrees with every statement of the rank theorem.
    pub theorem_holds: bool,
}

fn touches_at(p1: &ProjPoint, a: &ProjPoint, b: &ProjPoint) -> bool {
    sigma(p1, a).is_zero() && (on_isotropic(a) || on_isotropic(b))
}

pub fn rank_v(v: &VConfig) -> Result<RankCertificate> {
    let [p1, p2, p3, p4, p5] = &v.points;
    let rank = eigenscheme::condition_rank(&v.points)?;
    let d1 = delta1(p1, p2, p4);
    let d2 = delta2(&v.points)?;
    let b123 = delta1bar(p1, p2, p3)?;
    let b145 = delta1bar(p1, p4, p5)?;
    let tangent_12 = touches_at(p1, p2, p3);
    let tangent_14 = touches_at(p1, p4, p5);
    let case1 = d1.is_zero() && b123.is_zero() && b145.is_zero();
    let case2 = tangent_12 && tangent_14;
    let low = d1.is_zero() || d2.is_zero();
    let theorem_holds = (8..=10).contains(&rank)
        && (rank <= 9) == low
        && (rank == 8) == (case1 || case2)
        && (rank != 8 || d2.is_zero())
        && (!case2 || !d1.is_zero());
    Ok(RankCertificate {
        rank,
        delta1: d1,
        delta2: d2,
        delta1bar_123: b123,
        delta1bar_145: b145,
        tangent_12,
        tangent_14,
        rank8_case1: case1,
        rank8_case2: case2,
        theorem_holds,
    })
}

/// Output of every builder.
#[derive(Clone, Debug, serde::Serialize)]
pub struct Construction {
    pub points: Vec<ProjPoint>,
    /// Basis of the cubics having the first five points as eigenpoints.
    pub cubics: Vec<Cubic>,
    /// The distinguished cubic of the construction, when there is one.
    pub member: Option<Cubic>,
    /// Rank of the conditions imposed by the first five points.
    pub rank: usize,
    /// Further lines the construction produces.
    pub lines: Vec<Line>,
    pub certificates: BTreeMap<String, bool>,
}

fn on_line(t: &Param, a: &ProjPoint, b: &ProjPoint) -> Result<ProjPoint> {
    combine(&t.0, a, &t.1, b)
}

fn s(p: &[ProjPoint], i: usize, j: usize) -> Scalar {
    scal(&p[i - 1], &p[j - 1])
}

fn vsum(terms: &[(Scalar, Vec3)]) -> Vec3 {
    let mut acc: Vec3 = [Scalar::zero(), Scalar::zero(), Scalar::zero()];
    for (c, v) in terms {
        acc = lincomb(&Scalar::one(), &acc, c, v);
    }
    acc
}

fn point_of(v: Vec3, what: &str) -> Result<ProjPoint> {
    ProjPoint::new(v).map_err(|_| Error::degenerate(format!("{what} vanishes"), Redirect::None))
}

fn proportional(a: &Vec3, p: &ProjPoint) -> bool {
    ProjPoint::new(a.clone()).is_ok_and(|q| q == *p)
}

/// `P4` on the line of points orthogonal to `s11 P2 - s12 P1`.
fn orthogonal_partner(p1: &ProjPoint, p2: &ProjPoint, t4: &Param) -> Result<ProjPoint> {
    let w = lincomb(&scal(p1, p1), p2.coords(), &-scal(p1, p2), p1.coords());
    let l = Line::new(w).map_err(|_| {
        Error::pre("P1 is isotropic and orthogonal to P2: every P4 satisfies the condition")
    })?;
    let (u, v) = l.two_points();
    let p4 = on_line(t4, &u, &v)?;
    if collinear(p1, p2, &p4) {
        return Err(Error::degenerate("P4 lies on the line P1 v P2", Redirect::None));
    }
    Ok(p4)
}

fn v_points(p: [ProjPoint; 5]) -> Result<VConfig> {
    VConfig::new(p).map_err(|e| Error::degenerate(e.to_string(), Redirect::None))
}

/// The roots of a line's eigen-divisor other than `known`, as points on
/// the line through `a` and `b`.
fn other_eigenpoints(
    f: &Cubic,
    a: &ProjPoint,
    b: &ProjPoint,
    known: &[ProjPoint],
) -> Result<(u32, u32, Vec<ProjPoint>)> {
    let d = eigenscheme::line_eigen_divisor(f, a, b)?;
    if d.is_zero() {
        return Err(Error::degenerate("the line lies in the eigenscheme", Redirect::Eigenline));
    }
    let total = d.degree();
    let mut rest = d;
    for k in known {
        let (u1, u2) = line_param(a, b, k)?;
        rest = rest.remove_root(&u1, &u2).0;
    }
    let pts = match rest.degree() {
        0 => Vec::new(),
        1 => {
            let c = rest.coeffs();
            // c0 u1 + c1 u2 = 0
            vec![combine(&-&c[1], a, &c[0], b)?]
        }
        2 if rest.coeffs().iter().all(|c| c.as_gauss().is_some()) => {
            let [(a1, b1), (a2, b2)] = rest.quadratic_roots()?;
            vec![combine(&a1, a, &b1, b)?, combine(&a2, a, &b2, b)?]
        }
        _ => Vec::new(),
    };
    Ok((total, rest.degree(), pts))
}

/// `(u1 : u2)` with `R = u1 A + u2 B`.
pub fn line_param(a: &ProjPoint, b: &ProjPoint, r: &ProjPoint) -> Result<Param> {
    if !collinear(a, b, r) {
        return Err(Error::pre(format!("{r} is not on the line through {a} and {b}")));
    }
    let (pa, pb, pr) = (a.coords(), b.coords(), r.coords());
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let d = &(&pa[i] * &pb[j]) - &(&pa[j] * &pb[i]);
        if d.is_zero() {
            continue;
        }
        let u1 = &(&pr[i] * &pb[j]) - &(&pr[j] * &pb[i]);
        let u2 = &(&pa[i] * &pr[j]) - &(&pa[j] * &pr[i]);
        return Ok((&u1 / &d, &u2 / &d));
    }
    Err(Error::pre("the two points coincide"))
}

fn single_member(points: &[ProjPoint]) -> Result<Cubic> {
    let basis = eigenscheme::cubics_through(points)?;
    match basis.len() {
        1 => Ok(basis.into_iter().next().expect("one cubic")),
        0 => Err(Error::Verification("no cubic has all these eigenpoints".into())),
        n => Err(Error::Verification(format!("{n} independent cubics, expected one"))),
    }
}

fn ortho(a: (&ProjPoint, &ProjPoint), b: (&ProjPoint, &ProjPoint)) -> bool {
    let u = cross3(a.0.coords(), a.1.coords());
    let v = cross3(b.0.coords(), b.1.coords());
    crate::geometry::dot(&u, &v).is_zero()
}

/// The V-configuration of [`build_c2`].
pub fn c2_points(p1: &ProjPoint, p2: &ProjPoint, t4: &Param, t3: &Param, t5: &Param) -> Result<VConfig> {
    if p1 == p2 {
        return Err(Error::pre("P1 and P2 coincide"));
    }
    let p4 = orthogonal_partner(p1, p2, t4)?;
    let p3 = on_line(t3, p1, p2)?;
    let p5 = on_line(t5, p1, &p4)?;
    v_points([p1.clone(), p2.clone(), p3, p4, p5])
}

/// Five points with `delta1(P1, P2, P4) = 0`: `P4` orthogonal to
/// `s11 P2 - s12 P1`, `P3` and `P5` free on their lines.
pub fn build_c2(p1: &ProjPoint, p2: &ProjPoint, t4: &Param, t3: &Param, t5: &Param) -> Result<Construction> {
    let v = c2_points(p1, p2, t4, t3, t5)?;
    let cert = rank_v(&v)?;
    let cubics = eigenscheme::cubics_through(v.points())?;
    let member = (cubics.len() == 1).then(|| cubics[0].clone());
    let mut certificates = BTreeMap::new();
    certificates.insert("delta1=0".into(), cert.delta1.is_zero());
    certificates.insert("rank theorem".into(), cert.theorem_holds);
    Ok(Construction {
        points: v.points().to_vec(),
        cubics,
        member,
        rank: cert.rank,
        lines: Vec::new(),
        certificates,
    })
}

/// Why the closed form for `P3` in a `delta2 = 0` configuration breaks down.
fn p3_redirect(p: &[ProjPoint]) -> Error {
    let (s12, s14, s15, s22, s44) = (s(p, 1, 2), s(p, 1, 4), s(p, 1, 5), s(p, 2, 2), s(p, 4, 4));
    if s12.is_zero() && (s14.is_zero() || s15.is_zero()) {
        return Error::degenerate("s12 and s14 (or s15) vanish", Redirect::C5);
    }
    if s12.is_zero() && s22.is_zero() {
        return Error::degenerate(
            "s12 = s22 = 0: P1 v P2 touches the isotropic conic at P2",
            Redirect::None,
        );
    }
    if sigma(&p[0], &p[1]).is_zero() && sigma(&p[0], &p[3]).is_zero() {
        let r = if s22.is_zero() && s44.is_zero() {
            Redirect::Rank8Case2
        } else {
            Redirect::Eigenline
        };
        return Error::degenerate("both lines are tangent to the isotropic conic", r);
    }
    Error::degenerate("the closed form for P3 vanishes", Redirect::None)
}

/// The V-configuration with `delta2 = 0` and `P3` from its closed form.
pub fn c3_points(p1: &ProjPoint, p2: &ProjPoint, p4: &ProjPoint, t5: &Param) -> Result<VConfig> {
    if collinear(p1, p2, p4) {
        return Err(Error::pre("P1, P2, P4 are collinear"));
    }
    let p5 = on_line(t5, p1, p4)?;
    let base = [p1.clone(), p2.clone(), p1.clone(), p4.clone(), p5.clone()];
    let (s11, s12, s14, s15, s22, s45) =
        (s(&base, 1, 1), s(&base, 1, 2), s(&base, 1, 4), s(&base, 1, 5), s(&base, 2, 2), s(&base, 4, 5));
    let a = &(&(&s14 * &s15) * &s22) - &(&(&s12 * &s12) * &s45);
    let b = &s12 * &(&(&s11 * &s45) - &(&s14 * &s15));
    if a.is_zero() || b.is_zero() {
        return Err(p3_redirect(&base));
    }
    let p3 = combine(&a, p1, &b, p2)?;
    v_points([p1.clone(), p2.clone(), p3, p4.clone(), p5])
}

/// A `delta2 = 0` configuration with its unique cubic and the third line
/// through `P1` carrying the remaining two eigenpoints.
pub fn build_c3(p1: &ProjPoint, p2: &ProjPoint, p4: &ProjPoint, t5: &Param) -> Result<Construction> {
    let v = c3_points(p1, p2, p4, t5)?;
    let cert = rank_v(&v)?;
    if cert.rank == 8 {
        let r = if cert.rank8_case1 { Redirect::Rank8Case1 } else { Redirect::Rank8Case2 };
        return Err(Error::degenerate("the conditions have rank 8", r));
    }
    if cert.rank != 9 {
        return Err(Error::Verification(format!("expected rank 9, got {}", cert.rank)));
    }
    let f = eigenscheme::unique_cubic_through(v.points())?;
    let l12 = Line::through(p1, p2)?;
    let l14 = Line::through(p1, p4)?;
    let third = eigenscheme::residual_split_line(&f, p1, &[l12, l14])?;
    let q = third_point(&third, p1);
    let (total, beyond, rest) = other_eigenpoints(&f, p1, &q, std::slice::from_ref(p1))?;
    let mut certificates = BTreeMap::new();
    certificates.insert("delta2=0".into(), cert.delta2.is_zero());
    certificates.insert("rank theorem".into(), cert.theorem_holds);
    certificates.insert("third line through P1".into(), third.contains(p1));
    certificates.insert("third line divisor degree 3".into(), total == 3);
    certificates.insert("degree 2 beyond P1".into(), beyond == 2);
    let mut points = v.points().to_vec();
    if rest.len() == 2 {
        let eig = rest.iter().all(|p| eigenscheme::is_eigenpoint(&f, p));
        certificates.insert("P6, P7 eigenpoints".into(), eig);
        points.extend(rest);
    }
    Ok(Construction {
        points,
        cubics: vec![f.clone()],
        member: Some(f),
        rank: cert.rank,
        lines: vec![third],
        certificates,
    })
}

fn third_point(l: &Line, p: &ProjPoint) -> ProjPoint {
    let (u, v) = l.two_points();
    if u == *p {
        v
    } else {
        u
    }
}

/// The V-configuration of [`build_rank8_case1`].
pub fn rank8_case1_points(p1: &ProjPoint, p2: &ProjPoint, t4: &Param) -> Result<VConfig> {
    if on_isotropic(p1) {
        return Err(Error::pre("P1 lies on the isotropic conic"));
    }
    if p1 == p2 {
        return Err(Error::pre("P1 and P2 coincide"));
    }
    let p4 = orthogonal_partner(p1, p2, t4)?;
    let two = Scalar::from_int(2);
    let closed = |q: &ProjPoint| -> Result<ProjPoint> {
        let (s11, s1q, sqq) = (scal(p1, p1), scal(p1, q), scal(q, q));
        let a = &(&s1q * &s1q) + &(&s11 * &sqq);
        let b = -&(&(&two * &s11) * &s1q);
        point_of(lincomb(&a, p1.coords(), &b, q.coords()), "closed form")
    };
    let p3 = closed(p2)?;
    let p5 = closed(&p4)?;
    v_points([p1.clone(), p2.clone(), p3, p4, p5])
}

/// The rank-8 pencil with `P4` orthogonal to `s11 P2 - s12 P1` and `P3`,
/// `P5` from their closed forms. The member is the cubic of the pencil
/// whose remaining two eigenpoints are aligned with `P1`.
pub fn build_rank8_case1(p1: &ProjPoint, p2: &ProjPoint, t4: &Param) -> Result<Construction> {
    let v = rank8_case1_points(p1, p2, t4)?;
    let pts = v.points();
    let cert = rank_v(&v)?;
    if cert.rank != 8 {
        return Err(Error::Verification(format!("expected rank 8, got {}", cert.rank)));
    }
    let pencil = eigenscheme::cubics_through(pts)?;
    let mut certificates = BTreeMap::new();
    certificates.insert("rank theorem".into(), cert.theorem_holds);
    certificates.insert(
        "singular at P1".into(),
        pencil.iter().all(|f| eigenscheme::is_singular_at(f, p1)),
    );
    // The split form of every member contains P1 v P2 and P1 v P4; the
    // residual line m_a + t m_b passes through P1 for one member.
    let l12 = Line::through(p1, &pts[1])?;
    let l14 = Line::through(p1, &pts[3])?;
    let both = &l12.form() * &l14.form();
    let residual = |f: &Cubic| -> Result<TernaryForm> {
        eigenscheme::g_split_form(f, p1)
            .div_exact(&both)
            .ok_or_else(|| Error::Verification("split form lacks the two lines".into()))
    };
    let (ma, mb) = (residual(&pencil[0])?, residual(&pencil[1])?);
    let (va, vb) = (ma.eval(p1.coords()), mb.eval(p1.coords()));
    let member = if va.is_zero() && vb.is_zero() {
        pencil[0].clone()
    } else {
        pencil[0].scale(&vb).add(&pencil[1].scale(&-va)).normalized()
    };
    let third = eigenscheme::residual_split_line(&member, p1, &[l12, l14])?;
    let q = third_point(&third, p1);
    let (total, beyond, rest) = other_eigenpoints(&member, p1, &q, std::slice::from_ref(p1))?;
    certificates.insert("third line through P1".into(), third.contains(p1));
    certificates.insert("third line divisor degree 3".into(), total == 3);
    certificates.insert("degree 2 beyond P1".into(), beyond == 2);
    let mut points = pts.to_vec();
    if rest.len() == 2 {
        certificates.insert(
            "P6, P7 eigenpoints".into(),
            rest.iter().all(|p| eigenscheme::is_eigenpoint(&member, p)),
        );
        points.extend(rest);
    }
    Ok(Construction {
        points,
        cubics: pencil,
        member: Some(member),
        rank: cert.rank,
        lines: vec![third],
        certificates,
    })
}

/// Members of the tangent-lines pencil with extra alignments.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Subfamily {
    /// `(P2, P4, P6)` aligned.
    A,
    /// `(P2, P5, P6)`, `(P3, P4, P6)` and `(P3, P5, P7)` aligned.
    B,
}

/// The pencil of cubics with `P1` off the isotropic conic, `P2`, `P4` the
/// tangency points of the tangents from `P1`, and `P3`, `P5` on these
/// tangents. Built in the frame `P1 = (1:0:0)` and mapped back.
pub fn build_rank8_case2(p1: &ProjPoint, t3: &Param, t5: &Param, sub: Option<Subfamily>) -> Result<Construction> {
    let (m, rep) = so3_normalize(p1)?;
    if on_isotropic(&rep) {
        return Err(Error::pre("P1 lies on the isotropic conic"));
    }
    let i = Scalar::i();
    let (u1, u2) = t3;
    let (v1, v2) = t5;
    let pt = |c: [Scalar; 3]| -> Result<ProjPoint> { Ok(m.apply_point(&point_of(c, "parameter")?)) };
    let z = Scalar::zero;
    let o = Scalar::one;
    let frame = [
        pt([o(), z(), z()])?,
        pt([z(), i.clone(), o()])?,
        pt([u1.clone(), &i * u2, u2.clone()])?,
        pt([z(), -&i, o()])?,
        pt([v1.clone(), &(-&i) * v2, v2.clone()])?,
    ];
    let v = v_points(frame)?;
    let pts = v.points().to_vec();
    let cert = rank_v(&v)?;
    if cert.rank != 8 {
        return Err(Error::Verification(format!("expected rank 8, got {}", cert.rank)));
    }
    let x = TernaryForm::var(0);
    let y = TernaryForm::var(1);
    let zz = TernaryForm::var(2);
    let k = |n: i64| Scalar::from_int(n);
    let f1 = &x * &(&(&x.pow(2).scale(&k(2)) + &y.pow(2).scale(&k(3))) + &zz.pow(2).scale(&k(3)));
    let lin = TernaryForm::linear(&[
        &(&k(2) * &i) * &(u2 * v2),
        &(u2 * v1) - &(u1 * v2),
        &(-&i) * &(&(u2 * v1) + &(u1 * v2)),
    ]);
    let yp = TernaryForm::linear(&[z(), o(), i.clone()]);
    let ym = TernaryForm::linear(&[z(), o(), -&i]);
    let f2 = &(&yp * &ym) * &lin;
    let pencil = [f1, f2]
        .iter()
        .map(|f| Cubic::new(m.apply_form(f)).map(|c| c.normalized()))
        .collect::<Result<Vec<_>>>()?;
    let mut certificates = BTreeMap::new();
    certificates.insert("rank theorem".into(), cert.theorem_holds);
    certificates.insert(
        "pencil has the five eigenpoints".into(),
        pencil.iter().all(|f| pts.iter().all(|p| eigenscheme::is_eigenpoint(f, p))),
    );
    // The line through P1 orthogonal to P3 v P5 carries P6 and P7.
    let r = Line::new(cross3(p1.coords(), &cross3(pts[2].coords(), pts[4].coords())))?;
    let mut points = pts.clone();
    let mut member = None;
    match sub {
        None => {}
        Some(Subfamily::A) => {
            let p = &pts;
            let p6 = point_of(
                vsum(&[
                    (&s(p, 1, 5) * &s(p, 3, 4), p[1].coords().clone()),
                    (&s(p, 1, 3) * &s(p, 2, 5), p[3].coords().clone()),
                ]),
                "P6",
            )?;
            certificates.insert("P6 on the orthogonal line".into(), r.contains(&p6));
            let mut six = pts.clone();
            six.push(p6.clone());
            let f = single_member(&six)?;
            let (_, _, rest) = other_eigenpoints(&f, p1, &p6, &[p1.clone(), p6.clone()])?;
            let p7 = rest
                .into_iter()
                .next()
                .ok_or_else(|| Error::Verification("no seventh eigenpoint on the line".into()))?;
            six.push(p7);
            let q = &six;
            let formula = vsum(&[
                (
                    &s(q, 1, 5) * &(&(&s(q, 2, 6) * &s(q, 4, 6)) + &(&s(q, 2, 4) * &s(q, 6, 6))),
                    q[0].coords().clone(),
                ),
                (&(&s(q, 1, 1) * &s(q, 2, 4)) * &s(q, 5, 6), q[5].coords().clone()),
            ]);
            certificates.insert("P7 closed form".into(), proportional(&formula, &q[6]));
            points = six;
            member = Some(f);
        }
        Some(Subfamily::B) => {
            let p6 = Line::through(&pts[1], &pts[4])?.meet(&Line::through(&pts[2], &pts[3])?)?;
            let p7 = Line::through(p1, &p6)?.meet(&Line::through(&pts[2], &pts[4])?)?;
            certificates.insert("P6 on the orthogonal line".into(), r.contains(&p6));
            let mut seven = pts.clone();
            seven.push(p6);
            let f = single_member(&seven)?;
            certificates.insert("P7 eigenpoint".into(), eigenscheme::is_eigenpoint(&f, &p7));
            seven.push(p7);
            points = seven;
            member = Some(f);
        }
    }
    Ok(Construction {
        points,
        cubics: pencil,
        member,
        rank: cert.rank,
        lines: vec![r],
        certificates,
    })
}

/// The V-configuration of [`build_rank8_case2`].
pub fn rank8_case2_points(p1: &ProjPoint, t3: &Param, t5: &Param) -> Result<VConfig> {
    let c = build_rank8_case2(p1, t3, t5, None)?;
    VConfig::new(std::array::from_fn(|k| c.points[k].clone()))
}

/// The member of the case-1 pencil with an eigenpoint on `P2 v P4`; its
/// seven eigenpoints have six alignments.
pub fn build_d2_6align(p1: &ProjPoint, p2: &ProjPoint, t4: &Param) -> Result<Construction> {
    let v = rank8_case1_points(p1, p2, t4)?;
    let p = v.points();
    let cert = rank_v(&v)?;
    let p6 = Line::through(&p[1], &p[3])?.meet(&Line::through(&p[2], &p[4])?)?;
    let p7 = Line::through(&p[2], &p[3])?.meet(&Line::through(&p[1], &p[4])?)?;
    let mut seven = p.to_vec();
    seven.push(p6);
    seven.push(p7);
    check_distinct(&seven)?;
    let f = single_member(&seven)?;
    let q = &seven;
    let mut certificates = BTreeMap::new();
    certificates.insert("rank theorem".into(), cert.theorem_holds);
    certificates.insert(
        "rank < 10".into(),
        eigenscheme::condition_rank(&seven)? < 10,
    );
    certificates.insert("<P1xP2, P1xP4> = 0".into(), ortho((&q[0], &q[1]), (&q[0], &q[3])));
    certificates.insert("<P2xP4, P3xP5> = 0".into(), ortho((&q[1], &q[3]), (&q[2], &q[4])));
    certificates.insert("<P3xP4, P2xP5> = 0".into(), ortho((&q[2], &q[3]), (&q[1], &q[4])));
    let c = |a: usize, b: usize| cross3(q[a - 1].coords(), q[b - 1].coords());
    let p4 = vsum(&[
        (&s(q, 2, 5) * &s(q, 3, 5), c(2, 3)),
        (-&(&s(q, 2, 3) * &s(q, 3, 5)), c(2, 5)),
        (&s(q, 2, 3) * &s(q, 2, 5), c(3, 5)),
    ]);
    certificates.insert("P4 from P2, P3, P5".into(), proportional(&p4, &q[3]));
    Ok(Construction {
        points: seven,
        cubics: vec![f.clone()],
        member: Some(f),
        rank: cert.rank,
        lines: Vec::new(),
        certificates,
    })
}

/// Seven eigenpoints with `P1 = P2 x P4` and the lines
/// `(1,2,3), (1,4,5), (1,6,7), (2,4,6)`.
pub fn build_c5(p2: &ProjPoint, p4: &ProjPoint, t3: &Param, t5: &Param) -> Result<Construction> {
    let p1 = cross(p2, p4)?;
    let p3 = on_line(t3, &p1, p2)?;
    let p5 = on_line(t5, &p1, p4)?;
    let v = v_points([p1.clone(), p2.clone(), p3, p4.clone(), p5])?;
    let cert = rank_v(&v)?;
    let p = v.points().to_vec();
    let (p6, p7, f) = if cert.rank == 9 {
        let t = |a: (usize, usize), b: (usize, usize), c: (usize, usize)| {
            &(&s(&p, a.0, a.1) * &s(&p, b.0, b.1)) * &s(&p, c.0, c.1)
        };
        let w2 = &(&(&t((1, 5), (2, 4), (3, 4)) + &t((1, 5), (2, 3), (4, 4))) - &t((1, 3), (2, 5), (4, 4)))
            - &t((1, 3), (2, 4), (4, 5));
        let w4 = &(&t((1, 3), (2, 4), (2, 5)) - &(&Scalar::from_int(2) * &t((1, 5), (2, 2), (3, 4))))
            + &t((1, 3), (2, 2), (4, 5));
        let p6 = point_of(lincomb(&w2, p2.coords(), &w4, p4.coords()), "P6")?;
        let f = eigenscheme::unique_cubic_through(&p)?;
        let mut six = p.clone();
        six.push(p6.clone());
        let q = &six;
        let a = &s(q, 1, 5) * &(&(&s(q, 2, 6) * &s(q, 4, 6)) + &(&s(q, 2, 4) * &s(q, 6, 6)));
        let b = &s(q, 1, 1) * &(&(&s(q, 2, 6) * &s(q, 4, 5)) + &(&s(q, 2, 4) * &s(q, 5, 6)));
        let p7 = point_of(lincomb(&a, p1.coords(), &b, p6.coords()), "P7")?;
        (p6, p7, f)
    } else if cert.rank8_case2 {
        let six_base = p.clone();
        let q = &six_base;
        let p6 = point_of(
            vsum(&[
                (&s(q, 1, 5) * &s(q, 3, 4), p2.coords().clone()),
                (&s(q, 1, 3) * &s(q, 2, 5), p4.coords().clone()),
            ]),
            "P6",
        )?;
        let mut six = p.clone();
        six.push(p6.clone());
        let f = single_member(&six)?;
        let q = &six;
        let a = &s(q, 1, 5) * &(&(&s(q, 2, 6) * &s(q, 4, 6)) + &(&s(q, 2, 4) * &s(q, 6, 6)));
        let b = &(&s(q, 1, 1) * &s(q, 2, 4)) * &s(q, 5, 6);
        let p7 = point_of(lincomb(&a, p1.coords(), &b, p6.coords()), "P7")?;
        (p6, p7, f)
    } else {
        return Err(Error::Verification(format!("unexpected rank {}", cert.rank)));
    };
    let mut seven = p.clone();
    seven.push(p6);
    seven.push(p7);
    check_distinct(&seven).map_err(|e| Error::degenerate(e.to_string(), Redirect::None))?;
    let q = &seven;
    let c5 = &(&s(q, 2, 6) * &(&(&s(q, 4, 5) * &s(q, 1, 3)) - &(&s(q, 3, 4) * &s(q, 1, 5))))
        + &(&s(q, 4, 6) * &(&(&s(q, 2, 5) * &s(q, 1, 3)) - &(&s(q, 2, 3) * &s(q, 1, 5))));
    let mut certificates = BTreeMap::new();
    certificates.insert("rank theorem".into(), cert.theorem_holds);
    certificates.insert("C5 relation".into(), c5.is_zero());
    certificates.insert(
        "all seven eigenpoints".into(),
        seven.iter().all(|x| eigenscheme::is_eigenpoint(&f, x)),
    );
    certificates.insert("<P1xP2, P2xP4> = 0".into(), ortho((&q[0], &q[1]), (&q[1], &q[3])));
    certificates.insert("<P1xP4, P2xP4> = 0".into(), ortho((&q[0], &q[3]), (&q[1], &q[3])));
    certificates.insert("<P1xP6, P2xP4> = 0".into(), ortho((&q[0], &q[5]), (&q[1], &q[3])));
    Ok(Construction {
        points: seven,
        cubics: vec![f.clone()],
        member: Some(f),
        rank: cert.rank,
        lines: Vec::new(),
        certificates,
    })
}

/// Seven points in the six-line configuration from `P1, P2, P4`, with `P7`
/// the orthocenter-like point
/// `s14 s24 (P1 x P2) - s12 s24 (P1 x P4) + s12 s14 (P2 x P4)`.
pub fn build_c8(p1: &ProjPoint, p2: &ProjPoint, p4: &ProjPoint) -> Result<Construction> {
    if p1 == p2 || p1 == p4 || p2 == p4 || collinear(p1, p2, p4) {
        return Err(Error::pre("P1, P2, P4 must be three non-collinear points"));
    }
    let (s12, s14, s24) = (scal(p1, p2), scal(p1, p4), scal(p2, p4));
    let p7 = point_of(
        vsum(&[
            (&s14 * &s24, cross3(p1.coords(), p2.coords())),
            (-&(&s12 * &s24), cross3(p1.coords(), p4.coords())),
            (&s12 * &s14, cross3(p2.coords(), p4.coords())),
        ]),
        "P7",
    )?;
    let meet = |a: &ProjPoint, b: &ProjPoint, c: &ProjPoint, d: &ProjPoint| -> Result<ProjPoint> {
        let l1 = Line::through(a, b).map_err(|e| Error::degenerate(e.to_string(), Redirect::None))?;
        let l2 = Line::through(c, d).map_err(|e| Error::degenerate(e.to_string(), Redirect::None))?;
        l1.meet(&l2).map_err(|e| Error::degenerate(e.to_string(), Redirect::None))
    };
    let p3 = meet(p1, p2, p4, &p7)?;
    let p5 = meet(p1, p4, p2, &p7)?;
    let p6 = meet(p1, &p7, p2, p4)?;
    let seven = vec![p1.clone(), p2.clone(), p3, p4.clone(), p5, p6, p7];
    check_distinct(&seven).map_err(|e| Error::degenerate(e.to_string(), Redirect::None))?;
    let rank = eigenscheme::condition_rank(&seven)?;
    if rank != 9 {
        return Err(Error::Verification(format!("seven points impose rank {rank}, expected 9")));
    }
    let f = eigenscheme::unique_cubic_through(&seven)?;
    let q = &seven;
    let mut certificates = BTreeMap::new();
    certificates.insert("rank 9".into(), rank == 9);
    certificates.insert("<P1xP2, P3xP4> = 0".into(), ortho((&q[0], &q[1]), (&q[2], &q[3])));
    certificates.insert("<P1xP4, P2xP5> = 0".into(), ortho((&q[0], &q[3]), (&q[1], &q[4])));
    certificates.insert("<P1xP6, P2xP4> = 0".into(), ortho((&q[0], &q[5]), (&q[1], &q[3])));
    let five_rank = eigenscheme::condition_rank(&seven[..5])?;
    Ok(Construction {
        points: seven,
        cubics: vec![f.clone()],
        member: Some(f),
        rank: five_rank,
        lines: Vec::new(),
        certificates,
    })
}

/// `l1 x^3 + l2 y^3 + l3 z^3` with its seven eigenpoints
/// `Q1, Q2, Q3, Q1+Q2+Q3, Q1+Q2, Q1+Q3, Q2+Q3`, `Q_k = e_k / l_k`.
pub fn build_odeco(l: [&Scalar; 3]) -> Result<Construction> {
    if l.iter().any(|x| x.is_zero()) {
        return Err(Error::pre("coefficients must be nonzero"));
    }
    let inv = l.map(|x| x.inv());
    let z = Scalar::zero;
    let q = [
        [inv[0].clone(), z(), z()],
        [z(), inv[1].clone(), z()],
        [z(), z(), inv[2].clone()],
    ];
    let add = |a: &[usize]| -> Vec3 {
        std::array::from_fn(|k| a.iter().map(|&i| q[i][k].clone()).sum())
    };
    let vecs = [
        add(&[0]),
        add(&[1]),
        add(&[2]),
        add(&[0, 1, 2]),
        add(&[0, 1]),
        add(&[0, 2]),
        add(&[1, 2]),
    ];
    let points = vecs
        .iter()
        .map(|v| ProjPoint::new(v.clone()))
        .collect::<Result<Vec<_>>>()?;
    let mut c = vec![Scalar::zero(); 10];
    c[0] = l[0].clone();
    c[3] = l[1].clone();
    c[9] = l[2].clone();
    let f = Cubic::from_coeffs(&c)?.normalized();
    let mut certificates = BTreeMap::new();
    certificates.insert(
        "all seven eigenpoints".into(),
        points.iter().all(|p| eigenscheme::is_eigenpoint(&f, p)),
    );
    for (i, j) in [(1, 2), (1, 3), (2, 3), (1, 7), (2, 6), (3, 5)] {
        certificates.insert(
            format!("<Q{i}, Q{j}> = 0"),
            crate::geometry::dot(&vecs[i - 1], &vecs[j - 1]).is_zero(),
        );
    }
    let rank = eigenscheme::condition_rank(&points[..5])?;
    Ok(Construction {
        points,
        cubics: vec![f.clone()],
        member: Some(f),
        rank,
        lines: Vec::new(),
        certificates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(a: i64, b: i64, c: i64) -> ProjPoint {
        ProjPoint::from_ints(a, b, c)
    }

    #[test]
    fn labels_of_table_rows() {
        for (l, p) in PATTERNS {
            assert_eq!(label_from_lines(p), l);
        }
        assert_eq!(label_from_lines(&[[1, 2, 3], [4, 5, 6]]), Label::Invalid);
        assert_eq!(label_from_lines(&[[1, 2, 3], [1, 2, 4]]), Label::Invalid);
        assert!(contains_configuration(PATTERNS[7].1, Label::C4));
        assert!(!contains_configuration(PATTERNS[2].1, Label::C4));
    }

    #[test]
    fn fermat_points_are_c8() {
        let pts = vec![pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1), pt(1, 1, 0), pt(1, 0, 1), pt(0, 1, 1)];
        let r = classify(&pts).unwrap();
        assert_eq!(r.label, Label::C8);
        assert_eq!(r.lines.len(), 6);
        assert!(r.regular);
    }

    #[test]
    fn c8_from_fermat_seed() {
        let c = build_c8(&pt(1, 1, 1), &pt(1, 0, 0), &pt(0, 1, 0)).unwrap();
        assert_eq!(c.points[6], pt(0, 0, 1));
        assert_eq!(c.member.unwrap(), Cubic::fermat());
        assert!(c.certificates.values().all(|&b| b));
    }
}
