//! Eigenschemes of ternary cubics: generators, condition matrices,
//! reconstruction, the Geiser map and positive-dimensional components.

use std::fmt;

use crate::algebra::{monomials, BinaryForm, Exp, ExactMatrix, Scalar, TernaryForm};
use crate::error::{Error, Redirect, Result};
use crate::geometry::{self, cross3, dot, Line, ProjPoint, Vec3};
use crate::numsolve::{self, CPoint};

/// A ternary cubic. Equality is equality of coefficients, so compare
/// [`Cubic::normalized`] values for projective equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cubic {
    f: TernaryForm,
}

impl Cubic {
    pub fn new(f: TernaryForm) -> Result<Self> {
        if f.degree() != 3 {
            return Err(Error::pre(format!("expected a cubic, got degree {}", f.degree())));
        }
        Ok(Cubic { f })
    }

    /// Coefficients of `x^3, x^2y, xy^2, y^3, x^2z, xyz, y^2z, xz^2, yz^2, z^3`.
    pub fn from_coeffs(c: &[Scalar]) -> Result<Self> {
        if c.len() != 10 {
            return Err(Error::pre("a cubic has ten coefficients"));
        }
        Ok(Cubic {
            f: TernaryForm::from_coeffs(3, c),
        })
    }

    pub fn parse(c: &[&str]) -> Result<Self> {
        let v: Result<Vec<Scalar>> = c.iter().map(|s| s.parse()).collect();
        Cubic::from_coeffs(&v?)
    }

    pub fn from_ints(c: [i64; 10]) -> Self {
        Cubic::from_coeffs(&c.map(Scalar::from_int)).expect("ten coefficients")
    }

    /// `x^3 + y^3 + z^3`.
    pub fn fermat() -> Self {
        Cubic::from_ints([1, 0, 0, 1, 0, 0, 0, 0, 0, 1])
    }

    pub fn form(&self) -> &TernaryForm {
        &self.f
    }

    pub fn coeffs(&self) -> Vec<Scalar> {
        self.f.coeffs()
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero()
    }

    /// Primitive Gaussian-integer coefficients with the first nonzero one in
    /// the first quadrant; over an extension, first nonzero coefficient one.
    pub fn normalized(&self) -> Cubic {
        match crate::algebra::canonical_projective(&self.coeffs()) {
            Some(c) => Cubic::from_coeffs(&c).expect("ten"),
            None => self.clone(),
        }
    }

    pub fn eval(&self, p: &Vec3) -> Scalar {
        self.f.eval(p)
    }

    pub fn add(&self, o: &Cubic) -> Cubic {
        Cubic { f: &self.f + &o.f }
    }

    pub fn scale(&self, s: &Scalar) -> Cubic {
        Cubic { f: self.f.scale(s) }
    }

    pub fn to_complex(&self) -> [num_complex::Complex64; 10] {
        let c = self.coeffs();
        std::array::from_fn(|k| c[k].to_complex())
    }
}

impl fmt::Display for Cubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.f)
    }
}

impl serde::Serialize for Cubic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs().serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for Cubic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let c = Vec::<Scalar>::deserialize(d)?;
        Cubic::from_coeffs(&c).map_err(serde::de::Error::custom)
    }
}

/// The minors `x f_y - y f_x`, `x f_z - z f_x`, `y f_z - z f_y`.
pub fn eig_generators(f: &Cubic) -> [TernaryForm; 3] {
    minors_of(f.form())
}

fn minors_of(f: &TernaryForm) -> [TernaryForm; 3] {
    let [fx, fy, fz] = f.gradient();
    let [x, y, z] = [0, 1, 2].map(TernaryForm::var);
    [
        &(&x * &fy) - &(&y * &fx),
        &(&x * &fz) - &(&z * &fx),
        &(&y * &fz) - &(&z * &fy),
    ]
}

pub fn is_eigenpoint(f: &Cubic, p: &ProjPoint) -> bool {
    eig_generators(f).iter().all(|g| g.eval(p.coords()).is_zero())
}

/// Gradient vanishes at `p`.
pub fn is_singular_at(f: &Cubic, p: &ProjPoint) -> bool {
    f.form().gradient().iter().all(|g| g.eval(p.coords()).is_zero())
}

/// The three linear conditions on cubic coefficients for `p` to be an
/// eigenpoint, one per minor, in closed form.
pub fn phi_rows(p: &ProjPoint) -> [[Scalar; 10]; 3] {
    let [a, b, c] = p.coords().clone();
    let n = Scalar::from_int;
    let (a2, b2, c2) = (a.square(), b.square(), c.square());
    let abc = &(&a * &b) * &c;
    let r1 = [
        &(&n(-3) * &a2) * &b,
        &a * &(&a2 - &(&n(2) * &b2)),
        &b * &(&(&n(2) * &a2) - &b2),
        &(&n(3) * &a) * &b2,
        &n(-2) * &abc,
        &c * &(&a2 - &b2),
        &n(2) * &abc,
        -&(&b * &c2),
        &a * &c2,
        n(0),
    ];
    let r2 = [
        &(&n(-3) * &a2) * &c,
        &n(-2) * &abc,
        -&(&c * &b2),
        n(0),
        &a * &(&a2 - &(&n(2) * &c2)),
        &b * &(&a2 - &c2),
        &a * &b2,
        &c * &(&(&n(2) * &a2) - &c2),
        &n(2) * &abc,
        &(&n(3) * &a) * &c2,
    ];
    let r3 = [
        n(0),
        -&(&a2 * &c),
        &n(-2) * &abc,
        &(&n(-3) * &c) * &b2,
        &a2 * &b,
        &a * &(&b2 - &c2),
        &b * &(&b2 - &(&n(2) * &c2)),
        &n(2) * &abc,
        &c * &(&(&n(2) * &b2) - &c2),
        &(&n(3) * &b) * &c2,
    ];
    [r1, r2, r3]
}

/// The same rows obtained by differentiating the monomial basis:
/// `A d_y - B d_x`, `A d_z - C d_x`, `B d_z - C d_y` applied at `p`.
pub fn phi_rows_derived(p: &ProjPoint) -> [[Scalar; 10]; 3] {
    let v = p.coords();
    let mons = monomials(3);
    let d = |k: usize, var: usize| {
        TernaryForm::monomial(mons[k], Scalar::one())
            .partial(var)
            .eval(v)
    };
    let row = |i: usize, j: usize| -> [Scalar; 10] {
        std::array::from_fn(|k| &(&v[i] * &d(k, j)) - &(&v[j] * &d(k, i)))
    };
    [row(0, 1), row(0, 2), row(1, 2)]
}

/// Which point and which minor each row of a condition matrix came from.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
pub struct RowOrigin {
    pub point: usize,
    pub minor: usize,
}

#[derive(Clone, Debug)]
pub struct ConditionMatrix {
    pub matrix: ExactMatrix,
    pub origins: Vec<RowOrigin>,
}

/// Stacks the three condition rows of every point.
pub fn condition_matrix(points: &[ProjPoint]) -> Result<ConditionMatrix> {
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i] == points[j] {
                return Err(Error::pre(format!("points {} and {} coincide", i + 1, j + 1)));
            }
        }
    }
    let mut rows = Vec::with_capacity(3 * points.len());
    let mut origins = Vec::with_capacity(3 * points.len());
    for (i, p) in points.iter().enumerate() {
        let r = phi_rows(p);
        debug_assert_eq!(r, phi_rows_derived(p), "closed-form rows disagree at {p}");
        for (k, row) in r.into_iter().enumerate() {
            rows.push(row.to_vec());
            origins.push(RowOrigin { point: i, minor: k });
        }
    }
    let matrix = if rows.is_empty() {
        ExactMatrix::zeros(0, 10)
    } else {
        ExactMatrix::from_rows(rows)
    };
    Ok(ConditionMatrix { matrix, origins })
}

pub fn condition_rank(points: &[ProjPoint]) -> Result<usize> {
    Ok(condition_matrix(points)?.matrix.rank())
}

/// Basis of the cubics having every given point as an eigenpoint.
pub fn cubics_through(points: &[ProjPoint]) -> Result<Vec<Cubic>> {
    let m = condition_matrix(points)?;
    let mut out = Vec::new();
    for v in m.matrix.kernel() {
        let f = Cubic::from_coeffs(&v)?.normalized();
        if let Some(p) = points.iter().find(|p| !is_eigenpoint(&f, p)) {
            return Err(Error::Verification(format!("{p} is not an eigenpoint of {f}")));
        }
        out.push(f);
    }
    Ok(out)
}

/// Signed maximal minors `c_i` with `det [H; v] = sum c_i v_i` for a 9x10
/// matrix `H`.
pub fn bordered_cofactors(h: &ExactMatrix) -> Vec<Scalar> {
    assert_eq!((h.rows(), h.cols()), (9, 10), "need a 9x10 matrix");
    (0..10)
        .map(|i| {
            let m = h.drop_col(i).det();
            if (9 + i) % 2 == 0 {
                m
            } else {
                -m
            }
        })
        .collect()
}

/// `det [H; v(X)]` for a row of ten forms.
pub fn bordered_det(h: &ExactMatrix, v: &[TernaryForm]) -> TernaryForm {
    let cof = bordered_cofactors(h);
    let mut out = TernaryForm::zero(v[0].degree());
    for (c, f) in cof.iter().zip(v) {
        out = &out + &f.scale(c);
    }
    out
}

/// The cubic `det [H; B]` where `B` is the monomial basis.
pub fn unique_cubic_from_rank9(h: &ExactMatrix) -> Result<Cubic> {
    if h.rows() != 9 || h.cols() != 10 {
        return Err(Error::pre("need a 9x10 matrix"));
    }
    if h.rank() < 9 {
        return Err(Error::pre("matrix has rank below 9"));
    }
    Ok(Cubic::from_coeffs(&bordered_cofactors(h))?.normalized())
}

/// The rows used for reconstruction: the lexicographically first nine
/// independent rows.
pub fn rank9_rows(points: &[ProjPoint]) -> Result<ExactMatrix> {
    let m = condition_matrix(points)?.matrix;
    let idx = m.independent_rows(9);
    if idx.len() < 9 {
        return Err(Error::pre(format!(
            "condition matrix has rank {}, not 9",
            idx.len()
        )));
    }
    if m.rank() > 9 {
        return Err(Error::pre("condition matrix has rank 10: no cubic"));
    }
    Ok(m.select_rows(&idx))
}

/// The unique cubic with the given eigenpoints when the conditions have rank 9.
pub fn unique_cubic_through(points: &[ProjPoint]) -> Result<Cubic> {
    let f = unique_cubic_from_rank9(&rank9_rows(points)?)?;
    if let Some(p) = points.iter().find(|p| !is_eigenpoint(&f, p)) {
        return Err(Error::Verification(format!("{p} is not an eigenpoint of {f}")));
    }
    Ok(f)
}

/// The vector of forms `phi_k(X)` whose value at `P` is the `k`-th row.
pub fn phi_forms(k: usize) -> Vec<TernaryForm> {
    let (i, j) = [(0, 1), (0, 2), (1, 2)][k];
    let (xi, xj) = (TernaryForm::var(i), TernaryForm::var(j));
    monomials(3)
        .into_iter()
        .map(|e| {
            let b = TernaryForm::monomial(e, Scalar::one());
            &(&xi * &b.partial(j)) - &(&xj * &b.partial(i))
        })
        .collect()
}

/// `(g3(P) : -g2(P) : g1(P))`.
pub fn geiser(f: &Cubic, p: &ProjPoint) -> Result<ProjPoint> {
    let g = eig_generators(f);
    let v = p.coords();
    let img = [g[2].eval(v), -g[1].eval(v), g[0].eval(v)];
    ProjPoint::new(img).map_err(|_| Error::pre(format!("{p} is a base point of the Geiser map")))
}

/// The common divisor of the minors restricted to the line through `p` and
/// `q`. Its roots are the eigenpoints on the line; the zero form means the
/// whole line lies in the eigenscheme.
pub fn line_eigen_divisor(f: &Cubic, p: &ProjPoint, q: &ProjPoint) -> Result<BinaryForm> {
    if p == q {
        return Err(Error::pre("need two distinct points"));
    }
    let g = eig_generators(f);
    let r: Vec<BinaryForm> = g.iter().map(|g| g.restrict(p.coords(), q.coords())).collect();
    Ok(r[0].gcd(&r[1]).gcd(&r[2]))
}

/// `A g3 - B g2 + C g1` for `P = (A : B : C)`; it vanishes on every line
/// through `P` contracted by the Geiser map.
pub fn g_split_form(f: &Cubic, p: &ProjPoint) -> TernaryForm {
    let g = eig_generators(f);
    let v = p.coords();
    &(&g[2].scale(&v[0]) - &g[1].scale(&v[1])) + &g[0].scale(&v[2])
}

/// Divides [`g_split_form`] by the given lines and returns the remaining
/// linear factor.
pub fn residual_split_line(f: &Cubic, p: &ProjPoint, known: &[Line]) -> Result<Line> {
    let mut g = g_split_form(f, p);
    if g.is_zero() {
        return Err(Error::pre("the split form vanishes identically"));
    }
    for l in known {
        g = g
            .div_exact(&l.form())
            .ok_or_else(|| Error::Verification(format!("{l} does not divide the split form")))?;
    }
    if g.degree() != 1 {
        return Err(Error::pre("expected a single residual line"));
    }
    let c = g.coeffs();
    Line::new([c[0].clone(), c[1].clone(), c[2].clone()])
}

/// A point of the residual scheme, exact when it could be certified.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
#[serde(untagged)]
pub enum ResidualPoint {
    Exact(ProjPoint),
    Numeric(CPoint),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EigKind {
    RegularCandidate,
    LineComponent,
    ConicComponent,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct EigDecomposition {
    pub kind: EigKind,
    /// The common factor of the minors, monic; absent when constant.
    #[serde(serialize_with = "ser_form_opt")]
    pub component: Option<TernaryForm>,
    pub residual_points: Vec<ResidualPoint>,
    pub residual_degree: u32,
}

fn ser_form_opt<S: serde::Serializer>(
    f: &Option<TernaryForm>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match f {
        None => s.serialize_none(),
        Some(f) => f.coeffs().serialize(s),
    }
}

use serde::Serialize as _;

/// Splits the eigenscheme into the curve `gcd(g1, g2, g3)` and the residual
/// points cut out by the cofactors.
pub fn positive_dim_analysis(f: &Cubic) -> Result<EigDecomposition> {
    if f.is_zero() {
        return Err(Error::pre("the zero cubic"));
    }
    let g = eig_generators(f);
    let common = g[0].gcd(&g[1]).gcd(&g[2]);
    if common.is_zero() {
        return Err(Error::pre("all minors vanish"));
    }
    match common.degree() {
        0 => Ok(EigDecomposition {
            kind: EigKind::RegularCandidate,
            component: None,
            residual_points: Vec::new(),
            residual_degree: 0,
        }),
        1 => {
            let h: Vec<TernaryForm> = g.iter().map(|gi| gi.div_exact(&common).expect("gcd")).collect();
            let pts = residual_of_conics(&h)?;
            Ok(EigDecomposition {
                kind: EigKind::LineComponent,
                component: Some(common),
                residual_points: pts,
                residual_degree: 3,
            })
        }
        2 => {
            let h: Vec<Vec3> = g
                .iter()
                .map(|gi| {
                    let c = gi.div_exact(&common).expect("gcd").coeffs();
                    [c[0].clone(), c[1].clone(), c[2].clone()]
                })
                .collect();
            let p = (0..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .find_map(|(i, j)| ProjPoint::new(cross3(&h[i], &h[j])).ok())
                .ok_or_else(|| Error::pre("residual linear forms are dependent"))?;
            Ok(EigDecomposition {
                kind: EigKind::ConicComponent,
                component: Some(common),
                residual_points: vec![ResidualPoint::Exact(p)],
                residual_degree: 1,
            })
        }
        d => Err(Error::pre(format!("common factor of unexpected degree {d}"))),
    }
}

/// Common zeros of `h1 = x n_y - y n_x`, `h2 = x n_z - z n_x`,
/// `h3 = y n_z - z n_y` with `n = L X` linear: the eigenvectors of `L`.
fn residual_of_conics(h: &[TernaryForm]) -> Result<Vec<ResidualPoint>> {
    let mons = monomials(2);
    let xs = [0, 1, 2].map(TernaryForm::var);
    // Contribution of the unknown L[r][j] to (h1, h2, h3).
    let contrib = |r: usize, j: usize| -> [TernaryForm; 3] {
        let xj = &xs[j];
        let zero = TernaryForm::zero(2);
        match r {
            0 => [-&(&xs[1] * xj), -&(&xs[2] * xj), zero],
            1 => [&xs[0] * xj, zero, -&(&xs[2] * xj)],
            _ => [zero, &xs[0] * xj, &xs[1] * xj],
        }
    };
    let mut cols: Vec<Vec<Scalar>> = Vec::new();
    for r in 0..3 {
        for j in 0..3 {
            let c = contrib(r, j);
            cols.push(c.iter().flat_map(|f| mons.iter().map(move |e| f.coeff(e))).collect());
        }
    }
    let a = ExactMatrix::from_rows(
        (0..18).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect(),
    );
    let b: Vec<Scalar> = h.iter().flat_map(|f| mons.iter().map(move |e| f.coeff(e))).collect();
    let l = a
        .solve(&b)
        .ok_or_else(|| Error::Verification("cofactors are not minors of a linear map".into()))?;
    let lm = ExactMatrix::from_rows((0..3).map(|r| l[3 * r..3 * r + 3].to_vec()).collect());
    Ok(eigenvectors_3x3(&lm)
        .into_iter()
        .map(|p| match p {
            ResidualPoint::Exact(q) if !h.iter().all(|f| f.eval(q.coords()).is_zero()) => {
                ResidualPoint::Numeric(CPoint::new(q.to_complex()))
            }
            other => other,
        })
        .collect())
}

/// Eigenvector directions of a 3x3 matrix, exact when the eigenvalues are
/// small Gaussian rationals.
fn eigenvectors_3x3(m: &ExactMatrix) -> Vec<ResidualPoint> {
    let g = |i: usize, j: usize| m.get(i, j).clone();
    let tr = &(&g(0, 0) + &g(1, 1)) + &g(2, 2);
    let c2 = &(&(&(&g(0, 0) * &g(1, 1)) - &(&g(0, 1) * &g(1, 0)))
        + &(&(&g(0, 0) * &g(2, 2)) - &(&g(0, 2) * &g(2, 0))))
        + &(&(&g(1, 1) * &g(2, 2)) - &(&g(1, 2) * &g(2, 1)));
    let det = m.det();
    // lambda^3 - tr lambda^2 + c2 lambda - det
    let chi = [-&det, c2, -&tr, Scalar::one()];
    let chi_c: Vec<num_complex::Complex64> = chi.iter().map(|s| s.to_complex()).collect();
    let roots = numsolve::aberth_roots(&chi_c, &numsolve::SolveOptions::default())
        .unwrap_or_default();
    let mut out: Vec<ResidualPoint> = Vec::new();
    let mut exact_seen: Vec<ProjPoint> = Vec::new();
    for r in roots {
        let lam = Scalar::approximate(r, 1 << 20);
        let val: Scalar = chi.iter().rev().fold(Scalar::zero(), |acc, c| &(&acc * &lam) + c);
        if val.is_zero() {
            let mut shifted = m.clone();
            for k in 0..3 {
                let v = m.get(k, k) - &lam;
                shifted.set(k, k, v);
            }
            if let Some(v) = shifted.kernel().into_iter().next() {
                if let Ok(p) = ProjPoint::new([v[0].clone(), v[1].clone(), v[2].clone()]) {
                    if !exact_seen.contains(&p) {
                        exact_seen.push(p.clone());
                        out.push(ResidualPoint::Exact(p));
                    }
                    continue;
                }
            }
        }
        let mc: Vec<Vec<num_complex::Complex64>> = (0..3)
            .map(|i| (0..3).map(|j| m.get(i, j).to_complex() - if i == j { r } else { 0.0.into() }).collect())
            .collect();
        out.push(ResidualPoint::Numeric(numsolve::null_vector_3x3(&mc)));
    }
    out
}

/// `(r^2 - 3 (a^2 + b^2 + c^2) Q) r` for `r = a x + b y + c z`; the tangent
/// lines to the isotropic conic at its two points on `r` are eigenlines.
pub fn build_f_of_r(r: &Line) -> Result<Cubic> {
    let (p, q) = r.two_points();
    if geometry::sigma(&p, &q).is_zero() {
        return Err(Error::pre("the line is tangent to the isotropic conic"));
    }
    let rf = r.form();
    let n = dot(r.dual(), r.dual());
    let f = &(&(&rf * &rf) - &iso_conic().scale(&(&Scalar::from_int(3) * &n))) * &rf;
    Ok(Cubic::new(f)?.normalized())
}

/// `x^2 + y^2 + z^2`.
pub fn iso_conic() -> TernaryForm {
    let xs = [0, 1, 2].map(TernaryForm::var);
    &(&(&xs[0] * &xs[0]) + &(&xs[1] * &xs[1])) + &(&xs[2] * &xs[2])
}

/// A cubic containing the line `t` in its eigenscheme: `t^2 l`, plus
/// `lambda f(r0)` when `t` is tangent to the isotropic conic. Then `r0` must
/// pass through the point of tangency and differ from `t`.
pub fn build_eigenline_family(t: &Line, ell: &Line, tangent_extra: Option<(&Scalar, &Line)>) -> Result<Cubic> {
    let tf = t.form();
    let mut f = &(&tf * &tf) * &ell.form();
    if t.is_isotropic_tangent() {
        let (lambda, r0) = tangent_extra.ok_or_else(|| {
            Error::degenerate("tangent line needs the extra term", Redirect::Eigenline)
        })?;
        let touch = t.pole();
        if !r0.contains(&touch) || r0 == t {
            return Err(Error::pre("r0 must pass through the point of tangency and differ from t"));
        }
        f = &f + &build_f_of_r(r0)?.form().scale(lambda);
    }
    let f = Cubic::new(f)?;
    let (p, q) = t.two_points();
    if !line_eigen_divisor(&f, &p, &q)?.is_zero() {
        return Err(Error::Verification(format!("{t} is not an eigenline")));
    }
    Ok(f.normalized())
}

/// Families of cubics whose eigenscheme contains a conic.
#[derive(Clone, Debug)]
pub enum ConicFamily {
    /// `l Q`, with the isotropic conic itself.
    IsoLine { ell: Line },
    /// `r (lambda Q + mu r^2)` for `r` not tangent.
    Bitangent { lambda: Scalar, mu: Scalar, r: Line },
    /// `r (Q - r^2)` for `r` tangent.
    Hyperosculating { r: Line },
}

/// The cubic and its conic of eigenpoints.
pub fn build_eigenconic_family(kind: &ConicFamily) -> Result<(Cubic, TernaryForm)> {
    let q = iso_conic();
    let (f, gamma) = match kind {
        ConicFamily::IsoLine { ell } => (&ell.form() * &q, q.clone()),
        ConicFamily::Bitangent { lambda, mu, r } => {
            if r.is_isotropic_tangent() {
                return Err(Error::pre("the line must not be tangent"));
            }
            if lambda.is_zero() {
                return Err(Error::pre("lambda must be nonzero"));
            }
            let rf = r.form();
            let r2 = &rf * &rf;
            let f = &rf * &(&q.scale(lambda) + &r2.scale(mu));
            let gamma = &q.scale(lambda) + &r2.scale(&(&Scalar::from_int(3) * mu));
            (f, gamma)
        }
        ConicFamily::Hyperosculating { r } => {
            if !r.is_isotropic_tangent() {
                return Err(Error::pre("the line must be tangent"));
            }
            let rf = r.form();
            let r2 = &rf * &rf;
            (&rf * &(&q - &r2), &q - &r2.scale(&Scalar::from_int(3)))
        }
    };
    let f = Cubic::new(f)?;
    for g in eig_generators(&f) {
        if g.div_exact(&gamma).is_none() {
            return Err(Error::Verification("conic does not divide the minors".into()));
        }
    }
    Ok((f.normalized(), gamma.monic()))
}

/// Points of a conic through a known point `base`, from the pencil of lines
/// through it. The line through `base` in direction `dir_k` meets the conic
/// again at the returned point.
pub fn conic_points(conic: &TernaryForm, base: &ProjPoint, dirs: &[ProjPoint]) -> Vec<ProjPoint> {
    dirs.iter()
        .filter(|d| *d != base)
        .filter_map(|d| {
            let b = conic.restrict(base.coords(), d.coords());
            // b = c0 u1^2 + c1 u1 u2 + c2 u2^2 with c0 = 0 since base is on it.
            let c = b.coeffs();
            if c[2].is_zero() {
                return None;
            }
            geometry::combine(&c[2], base, &-&c[1], d).ok()
        })
        .collect()
}

impl EigDecomposition {
    pub fn exact_residuals(&self) -> Vec<ProjPoint> {
        self.residual_points
            .iter()
            .filter_map(|p| match p {
                ResidualPoint::Exact(q) => Some(q.clone()),
                _ => None,
            })
            .collect()
    }
}

/// Exponent helper for callers building forms by hand.
pub fn exp(x: u32, y: u32, z: u32) -> Exp {
    Exp::new(x, y, z)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fermat_minors_and_geiser() {
        let f = Cubic::fermat();
        let g = eig_generators(&f);
        // 3xy(y - x)
        let expect = TernaryForm::from_coeffs(
            3,
            &[0, -3, 3, 0, 0, 0, 0, 0, 0, 0].map(Scalar::from_int),
        );
        assert_eq!(g[0], expect);
        assert!(is_eigenpoint(&f, &ProjPoint::from_ints(1, 1, 1)));
        assert!(!is_eigenpoint(&f, &ProjPoint::from_ints(1, 2, 3)));
        assert_eq!(geiser(&f, &ProjPoint::from_ints(1, 2, 0)).unwrap(), ProjPoint::from_ints(0, 0, 1));
        assert!(geiser(&f, &ProjPoint::from_ints(1, 0, 0)).is_err());
    }

    #[test]
    fn closed_form_rows_match_derivation() {
        for p in [
            ProjPoint::from_ints(1, 2, 3),
            ProjPoint::from_ints(-2, 0, 5),
            ProjPoint::parse(["1", "i", "2-i"]).unwrap(),
        ] {
            assert_eq!(phi_rows(&p), phi_rows_derived(&p));
        }
    }

    #[test]
    fn fermat_line_divisor() {
        let f = Cubic::fermat();
        let d = line_eigen_divisor(&f, &ProjPoint::from_ints(1, 0, 0), &ProjPoint::from_ints(0, 1, 0)).unwrap();
        assert_eq!(d.degree(), 3);
    }

    #[test]
    fn f_of_r_for_z() {
        let r = Line::new([0.into(), 0.into(), 1.into()]).unwrap();
        let f = build_f_of_r(&r).unwrap();
        assert_eq!(f, Cubic::from_ints([0, 0, 0, 0, 3, 0, 3, 0, 0, 2]));
    }

    #[test]
    fn x2_times_y_minus_z() {
        // x^2 y - x^2 z
        let f = Cubic::from_ints([0, 1, 0, 0, -1, 0, 0, 0, 0, 0]);
        let d = positive_dim_analysis(&f).unwrap();
        assert_eq!(d.kind, EigKind::LineComponent);
        assert_eq!(d.component, Some(TernaryForm::var(0)));
        let mut got = d.exact_residuals();
        assert_eq!(got.len(), 3);
        let mut want = vec![
            ProjPoint::from_ints(0, 1, 1),
            ProjPoint::from_ints(2, 1, -1),
            ProjPoint::from_ints(-2, 1, -1),
        ];
        let key = |p: &ProjPoint| p.to_string();
        got.sort_by_key(key);
        want.sort_by_key(key);
        assert_eq!(got, want);
    }
}
