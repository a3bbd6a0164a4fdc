//! Floating-point eigenpoints and the alignment experiment on pencils.

use std::collections::BTreeMap;

use num_complex::Complex64 as C;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::algebra::{monomials, Exp};
use crate::eigenscheme::{self, Cubic, EigKind};
use crate::error::{Error, Result};

/// Tolerances and budgets for the numeric routines.
#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
pub struct SolveOptions {
    pub tol_residual: f64,
    pub tol_cluster: f64,
    pub max_aberth_iters: usize,
    pub newton_restarts: usize,
    pub seed: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            tol_residual: 1e-9,
            tol_cluster: 1e-7,
            max_aberth_iters: 200,
            newton_restarts: 2000,
            seed: 0,
        }
    }
}

/// A numeric projective point with unit Hermitian norm and its
/// largest-modulus coordinate real and positive.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CPoint {
    c: [C; 3],
}

impl CPoint {
    pub fn new(v: [C; 3]) -> Self {
        let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let k = (0..3)
            .max_by(|&a, &b| v[a].norm().total_cmp(&v[b].norm()))
            .unwrap_or(0);
        let phase = if v[k].norm() > 0.0 { v[k] / v[k].norm() } else { C::new(1.0, 0.0) };
        let s = phase.conj() / n;
        CPoint { c: v.map(|z| z * s) }
    }

    pub fn coords(&self) -> &[C; 3] {
        &self.c
    }

    /// `sqrt(1 - |<P, Q>_H|^2)`, evaluated as the norm of the 2x2 minors
    /// to avoid cancellation.
    pub fn distance(&self, o: &CPoint) -> f64 {
        let (a, b) = (&self.c, &o.c);
        [(0, 1), (0, 2), (1, 2)]
            .iter()
            .map(|&(i, j)| (a[i] * b[j] - a[j] * b[i]).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

impl serde::Serialize for CPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<[f64; 2]> = self.c.iter().map(|z| [z.re, z.im]).collect();
        v.serialize(s)
    }
}

/// Determinant of three numeric points, a collinearity measure.
pub fn det3c(a: &CPoint, b: &CPoint, c: &CPoint) -> C {
    let (a, b, c) = (a.c, b.c, c.c);
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
}

/// A null direction of a nearly singular 3x3 matrix: the largest cross
/// product of two of its rows.
pub fn null_vector_3x3(m: &[Vec<C>]) -> CPoint {
    let cr = |a: &[C], b: &[C]| {
        [
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ]
    };
    let cands = [cr(&m[0], &m[1]), cr(&m[0], &m[2]), cr(&m[1], &m[2])];
    let best = cands
        .iter()
        .max_by(|a, b| {
            let na: f64 = a.iter().map(|z| z.norm_sqr()).sum();
            let nb: f64 = b.iter().map(|z| z.norm_sqr()).sum();
            na.total_cmp(&nb)
        })
        .expect("three candidates");
    CPoint::new(*best)
}

fn peval(p: &[C], z: C) -> C {
    p.iter().rev().fold(C::new(0.0, 0.0), |acc, c| acc * z + c)
}

/// Roots of `sum c_k t^k` by Aberth iteration. Trailing zero leading
/// coefficients are trimmed first.
pub fn aberth_roots(coeffs: &[C], opts: &SolveOptions) -> Result<Vec<C>> {
    let mut p: Vec<C> = coeffs.to_vec();
    while p.last().is_some_and(|c| *c == C::new(0.0, 0.0)) {
        p.pop();
    }
    if p.is_empty() {
        return Err(Error::Numeric("the zero polynomial has no isolated roots".into()));
    }
    let n = p.len() - 1;
    if n == 0 {
        return Ok(Vec::new());
    }
    let lead = p[n];
    let dp: Vec<C> = (1..=n).map(|k| p[k] * k as f64).collect();
    // Cauchy bound for the initial circle.
    let radius = 1.0 + p[..n].iter().map(|c| (c / lead).norm()).fold(0.0, f64::max);
    let mut z: Vec<C> = (0..n)
        .map(|k| {
            let ang = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4;
            C::from_polar(radius * 0.5, ang)
        })
        .collect();
    let mut converged = false;
    for _ in 0..opts.max_aberth_iters {
        let mut max_step: f64 = 0.0;
        for k in 0..n {
            let pz = peval(&p, z[k]);
            if pz == C::new(0.0, 0.0) {
                continue;
            }
            let ratio = pz / peval(&dp, z[k]);
            let s: C = (0..n)
                .filter(|&j| j != k)
                .map(|j| {
                    let d = z[k] - z[j];
                    if d == C::new(0.0, 0.0) { C::new(0.0, 0.0) } else { 1.0 / d }
                })
                .sum();
            let w = ratio / (1.0 - ratio * s);
            if w.is_finite() {
                z[k] -= w;
                max_step = max_step.max(w.norm() / (1.0 + z[k].norm()));
            }
        }
        if max_step < 1e-15 {
            converged = true;
            break;
        }
    }
    if !converged {
        let scale: f64 = p.iter().map(|c| c.norm()).sum();
        let worst = z
            .iter()
            .map(|&r| peval(&p, r).norm() / (scale * (1.0 + r.norm()).powi(n as i32)))
            .fold(0.0, f64::max);
        if worst > 1e-8 {
            return Err(Error::Numeric(format!(
                "Aberth iteration did not converge (worst scaled residual {worst:.3e}, iterate {z:?})"
            )));
        }
    }
    Ok(z)
}

/// A dense complex ternary form.
#[derive(Clone, Debug, Default)]
struct CForm {
    t: BTreeMap<Exp, C>,
}

impl CForm {
    fn var(k: usize) -> Self {
        let e = match k {
            0 => Exp::new(1, 0, 0),
            1 => Exp::new(0, 1, 0),
            _ => Exp::new(0, 0, 1),
        };
        CForm { t: [(e, C::new(1.0, 0.0))].into() }
    }

    fn one() -> Self {
        CForm { t: [(Exp::new(0, 0, 0), C::new(1.0, 0.0))].into() }
    }

    fn cubic(c: &[C; 10]) -> Self {
        CForm { t: monomials(3).into_iter().zip(c.iter().copied()).collect() }
    }

    fn coeffs3(&self) -> [C; 10] {
        let m = monomials(3);
        std::array::from_fn(|k| self.t.get(&m[k]).copied().unwrap_or_default())
    }

    fn add(&self, o: &CForm) -> CForm {
        let mut t = self.t.clone();
        for (e, c) in &o.t {
            *t.entry(*e).or_default() += c;
        }
        CForm { t }
    }

    fn scale(&self, s: C) -> CForm {
        CForm { t: self.t.iter().map(|(e, c)| (*e, c * s)).collect() }
    }

    fn mul(&self, o: &CForm) -> CForm {
        let mut t: BTreeMap<Exp, C> = BTreeMap::new();
        for (a, ca) in &self.t {
            for (b, cb) in &o.t {
                *t.entry(Exp::new(a.x + b.x, a.y + b.y, a.z + b.z)).or_default() += ca * cb;
            }
        }
        CForm { t }
    }

    fn partial(&self, k: usize) -> CForm {
        let mut t = BTreeMap::new();
        for (e, c) in &self.t {
            let n = e.get(k);
            if n == 0 {
                continue;
            }
            let mut ne = *e;
            match k {
                0 => ne.x -= 1,
                1 => ne.y -= 1,
                _ => ne.z -= 1,
            }
            *t.entry(ne).or_default() += c * n as f64;
        }
        CForm { t }
    }

    /// `f(l0, l1, l2)`.
    fn compose(&self, l: &[CForm; 3]) -> CForm {
        let pw = |f: &CForm, n: u32| (0..n).fold(CForm::one(), |acc, _| acc.mul(f));
        let mut out = CForm::default();
        for (e, c) in &self.t {
            let m = pw(&l[0], e.x).mul(&pw(&l[1], e.y)).mul(&pw(&l[2], e.z));
            out = out.add(&m.scale(*c));
        }
        out
    }

    fn eval(&self, p: &[C; 3]) -> C {
        self.t
            .iter()
            .map(|(e, c)| c * p[0].powu(e.x) * p[1].powu(e.y) * p[2].powu(e.z))
            .sum()
    }
}

/// Gradient and Hessian of a cubic.
struct CubicEval {
    grad: [CForm; 3],
    hess: [[CForm; 3]; 3],
    scale: f64,
}

impl CubicEval {
    fn new(c: &[C; 10]) -> Self {
        let f = CForm::cubic(c);
        let grad = [0, 1, 2].map(|k| f.partial(k));
        let hess = [0, 1, 2].map(|i| [0, 1, 2].map(|j| grad[i].partial(j)));
        let scale = c.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt().max(1e-300);
        CubicEval { grad, hess, scale }
    }

    /// Minors `(g1, g2, g3)` and their Jacobian in `x, y, z`.
    fn minors(&self, p: &[C; 3]) -> ([C; 3], [[C; 3]; 3]) {
        let g = [0, 1, 2].map(|k| self.grad[k].eval(p));
        let h = [0, 1, 2].map(|i| [0, 1, 2].map(|j| self.hess[i][j].eval(p)));
        let pairs = [(0, 1), (0, 2), (1, 2)];
        let vals = pairs.map(|(i, j)| p[i] * g[j] - p[j] * g[i]);
        let jac = pairs.map(|(i, j)| {
            std::array::from_fn(|l| {
                let mut d = p[i] * h[j][l] - p[j] * h[i][l];
                if l == i {
                    d += g[j];
                }
                if l == j {
                    d -= g[i];
                }
                d
            })
        });
        (vals, jac)
    }

    /// Largest minor at the unit-norm representative, relative to the
    /// coefficient norm.
    fn residual(&self, p: &CPoint) -> f64 {
        let (v, _) = self.minors(p.coords());
        v.iter().map(|z| z.norm()).fold(0.0, f64::max) / self.scale
    }
}

/// A random real rotation, from a random unit quaternion.
fn random_rotation(rng: &mut ChaCha8Rng) -> [[f64; 3]; 3] {
    let q: [f64; 4] = std::array::from_fn(|_| rng.sample(StandardNormal));
    let n = q.iter().map(|v| v * v).sum::<f64>().sqrt();
    let [w, x, y, z] = q.map(|v| v / n);
    [
        [1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y - w * z), 2.0 * (x * z + w * y)],
        [2.0 * (x * y + w * z), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z - w * x)],
        [2.0 * (x * z - w * y), 2.0 * (y * z + w * x), 1.0 - 2.0 * (x * x + y * y)],
    ]
}

/// Coefficients of `f(R^T X)`, whose eigenpoints are `R` times those of `f`.
fn rotate_cubic(c: &[C; 10], r: &[[f64; 3]; 3]) -> [C; 10] {
    let l: [CForm; 3] = std::array::from_fn(|k| {
        (0..3).fold(CForm::default(), |acc, j| acc.add(&CForm::var(j).scale(C::new(r[j][k], 0.0))))
    });
    CForm::cubic(c).compose(&l).coeffs3()
}

fn mat_vec(r: &[[f64; 3]; 3], v: &[C; 3], transpose: bool) -> [C; 3] {
    std::array::from_fn(|i| {
        (0..3)
            .map(|j| v[j] * if transpose { r[j][i] } else { r[i][j] })
            .sum()
    })
}

/// Solve a small dense complex system by Gaussian elimination with partial
/// pivoting. Returns `None` for a numerically singular matrix.
fn solve_dense<const N: usize>(mut a: [[C; N]; N], mut b: [C; N]) -> Option<[C; N]> {
    for col in 0..N {
        let piv = (col..N).max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))?;
        if a[piv][col].norm() < 1e-300 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for r in col + 1..N {
            let m = a[r][col] / a[col][col];
            for c in col..N {
                let v = a[col][c];
                a[r][c] -= m * v;
            }
            let v = b[col];
            b[r] -= m * v;
        }
    }
    let mut x = [C::new(0.0, 0.0); N];
    for r in (0..N).rev() {
        let s: C = (r + 1..N).map(|c| a[r][c] * x[c]).sum();
        x[r] = (b[r] - s) / a[r][r];
    }
    x.iter().all(|z| z.is_finite()).then_some(x)
}

/// Newton on the two minors that involve the largest coordinate.
fn polish(ev: &CubicEval, p: CPoint) -> CPoint {
    let mut v = *p.coords();
    let k = (0..3).max_by(|&a, &b| v[a].norm().total_cmp(&v[b].norm())).unwrap_or(2);
    v = v.map(|z| z / v[k]);
    let (rows, free): ([usize; 2], [usize; 2]) = match k {
        0 => ([0, 1], [1, 2]),
        1 => ([0, 2], [0, 2]),
        _ => ([1, 2], [0, 1]),
    };
    for _ in 0..30 {
        let (g, j) = ev.minors(&v);
        let a = [
            [j[rows[0]][free[0]], j[rows[0]][free[1]]],
            [j[rows[1]][free[0]], j[rows[1]][free[1]]],
        ];
        let Some(d) = solve_dense(a, [-g[rows[0]], -g[rows[1]]]) else { break };
        v[free[0]] += d[0];
        v[free[1]] += d[1];
        if d[0].norm() + d[1].norm() < 1e-16 * (1.0 + v.iter().map(|z| z.norm()).sum::<f64>()) {
            break;
        }
    }
    CPoint::new(v)
}

/// Complex polynomials in one variable, ascending.
type CPoly = Vec<C>;

fn cp_mul(a: &CPoly, b: &CPoly) -> CPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![C::new(0.0, 0.0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn cp_add(a: &CPoly, b: &CPoly, sign: f64) -> CPoly {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| a.get(k).copied().unwrap_or_default() + b.get(k).copied().unwrap_or_default() * sign)
        .collect()
}

/// Determinant of a small matrix of polynomials by expansion over column
/// subsets.
fn poly_det(m: &[Vec<CPoly>]) -> CPoly {
    let n = m.len();
    let mut memo: BTreeMap<u32, CPoly> = BTreeMap::new();
    memo.insert(0, vec![C::new(1.0, 0.0)]);
    // memo[mask] = det of rows n-|mask|..n restricted to columns in mask.
    for size in 1..=n {
        let row = n - size;
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != size {
                continue;
            }
            let mut acc: CPoly = Vec::new();
            let mut sign = 1.0;
            for col in 0..n {
                if mask & (1 << col) == 0 {
                    continue;
                }
                let sub = &memo[&(mask & !(1 << col))];
                if !m[row][col].is_empty() {
                    acc = cp_add(&acc, &cp_mul(&m[row][col], sub), sign);
                }
                sign = -sign;
            }
            memo.insert(mask, acc);
        }
    }
    memo.remove(&((1u32 << n) - 1)).unwrap_or_default()
}

/// `f(x, y, 1)` as coefficients in `y`, each a polynomial in `x`.
fn chart_z1(f: &CForm) -> Vec<CPoly> {
    let mut rows: Vec<CPoly> = Vec::new();
    for (e, c) in &f.t {
        let (yi, xi) = (e.y as usize, e.x as usize);
        if rows.len() <= yi {
            rows.resize(yi + 1, Vec::new());
        }
        if rows[yi].len() <= xi {
            rows[yi].resize(xi + 1, C::new(0.0, 0.0));
        }
        rows[yi][xi] += c;
    }
    rows
}

fn sylvester(a: &[CPoly], b: &[CPoly]) -> Vec<Vec<CPoly>> {
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    let mut s = vec![vec![Vec::new(); size]; size];
    for r in 0..n {
        for k in 0..=m {
            s[r][r + k] = a[m - k].clone();
        }
    }
    for r in 0..m {
        for k in 0..=n {
            s[n + r][r + k] = b[n - k].clone();
        }
    }
    s
}

/// Candidate eigenpoints of a cubic in the chart `z = 1` plus the line `z = 0`.
fn chart_candidates(ev: &CubicEval, opts: &SolveOptions) -> Vec<[C; 3]> {
    let x = CForm::var(0);
    let y = CForm::var(1);
    let z = CForm::var(2);
    let [fx, fy, fz] = &ev.grad;
    let g1 = x.mul(fy).add(&y.mul(fx).scale(C::new(-1.0, 0.0)));
    let g2 = x.mul(fz).add(&z.mul(fx).scale(C::new(-1.0, 0.0)));
    let mut a = chart_z1(&g1);
    let mut b = chart_z1(&g2);
    let mut out = Vec::new();
    a.resize(4, Vec::new());
    b.resize(3, Vec::new());
    let res = poly_det(&sylvester(&a, &b));
    if let Ok(xs) = aberth_roots(&res, opts) {
        for x0 in xs {
            let ycoef: Vec<C> = a.iter().map(|p| peval(p, x0)).collect();
            if let Ok(ys) = aberth_roots(&ycoef, opts) {
                for y0 in ys {
                    out.push([x0, y0, C::new(1.0, 0.0)]);
                }
            }
        }
    }
    // Points at infinity: roots of g1(x, y, 0) as a binary cubic in (x : y).
    let bin: Vec<C> = (0..=3u32)
        .map(|k| g1.t.get(&Exp::new(k, 3 - k, 0)).copied().unwrap_or_default())
        .collect();
    if bin.iter().any(|c| c.norm() > 0.0) {
        if let Ok(ts) = aberth_roots(&bin, opts) {
            for t in ts {
                out.push([t, C::new(1.0, 0.0), C::new(0.0, 0.0)]);
            }
        }
        out.push([C::new(1.0, 0.0), C::new(0.0, 0.0), C::new(0.0, 0.0)]);
    }
    out
}

/// Numeric eigenpoints and whether they form a reduced set of seven.
#[derive(Clone, Debug, serde::Serialize)]
pub struct NumericEigen {
    pub points: Vec<CPoint>,
    pub residuals: Vec<f64>,
    pub regular: bool,
    pub min_separation: f64,
}

/// Eigenpoints of an exact cubic; errors when the eigenscheme has a curve.
pub fn eigenpoints_numeric(f: &Cubic, opts: &SolveOptions) -> Result<NumericEigen> {
    if f.form().is_gaussian() {
        let d = eigenscheme::positive_dim_analysis(f)?;
        if d.kind != EigKind::RegularCandidate {
            return Err(Error::Precondition(format!(
                "eigenscheme contains a curve ({:?})",
                d.kind
            )));
        }
    }
    eigenpoints_numeric_c(&f.to_complex(), opts)
}

/// Eigenpoints of a cubic with complex coefficients in the monomial order.
pub fn eigenpoints_numeric_c(c: &[C; 10], opts: &SolveOptions) -> Result<NumericEigen> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5eed);
    let mut best: Option<NumericEigen> = None;
    // A generic rotation keeps all points in the affine chart with distinct
    // projections; retry with a fresh one if the count comes out wrong.
    for _ in 0..4 {
        let r = random_rotation(&mut rng);
        let rc = rotate_cubic(c, &r);
        let ev_rot = CubicEval::new(&rc);
        let ev = CubicEval::new(c);
        let mut pts: Vec<CPoint> = Vec::new();
        for cand in chart_candidates(&ev_rot, opts) {
            if cand.iter().any(|z| !z.is_finite()) {
                continue;
            }
            let back = CPoint::new(mat_vec(&r, &cand, true));
            let p = polish(&ev, back);
            if ev.residual(&p) <= opts.tol_residual && !pts.iter().any(|q| q.distance(&p) < opts.tol_cluster) {
                pts.push(p);
            }
        }
        if pts.len() > 7 {
            return Err(Error::Numeric(format!(
                "{} distinct eigenpoints found; the tolerances are too loose",
                pts.len()
            )));
        }
        let residuals: Vec<f64> = pts.iter().map(|p| ev.residual(p)).collect();
        let mut sep = f64::INFINITY;
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                sep = sep.min(pts[i].distance(&pts[j]));
            }
        }
        let regular = pts.len() == 7 && sep > 1e3 * opts.tol_cluster;
        let out = NumericEigen { points: pts, residuals, regular, min_separation: sep };
        if out.regular {
            return Ok(out);
        }
        if best.as_ref().map_or(true, |b| out.points.len() > b.points.len()) {
            best = Some(out);
        }
    }
    Ok(best.expect("at least one attempt"))
}

/// Exact points with Gaussian rational coordinates of denominator at most
/// `max_den` near `points`, kept only if each is an exact eigenpoint of `f`.
pub fn lift_exact(f: &Cubic, points: &[CPoint], max_den: u64) -> Option<Vec<crate::geometry::ProjPoint>> {
    points
        .iter()
        .map(|p| {
            let c = p.coords();
            let k = (0..3).max_by(|&a, &b| c[a].norm().total_cmp(&c[b].norm()))?;
            let v = c.map(|z| crate::algebra::Scalar::approximate(z / c[k], max_den));
            let q = crate::geometry::ProjPoint::new(v).ok()?;
            eigenscheme::is_eigenpoint(f, &q).then_some(q)
        })
        .collect()
}

/// Index triples of numerically collinear points.
pub fn aligned_triples(points: &[CPoint], tol: f64) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            for k in j + 1..points.len() {
                if det3c(&points[i], &points[j], &points[k]).norm() < tol {
                    out.push([i, j, k]);
                }
            }
        }
    }
    out
}

/// Aligned eigenpoint triples of the cubic with coefficients `c`.
pub fn verify_alignment_at(c: &[C; 10], opts: &SolveOptions) -> Result<Vec<[CPoint; 3]>> {
    let e = eigenpoints_numeric_c(c, opts)?;
    Ok(aligned_triples(&e.points, 1e3 * opts.tol_cluster)
        .into_iter()
        .map(|[i, j, k]| [e.points[i], e.points[j], e.points[k]])
        .collect())
}

/// Outcome of the alignment experiment on a pencil `f + t g`.
#[derive(Clone, Debug, serde::Serialize)]
pub struct PencilReport {
    /// Distinct parameters with an aligned eigen-triple.
    #[serde(serialize_with = "ser_complex_vec")]
    pub t_values: Vec<C>,
    pub restarts: usize,
    pub converged: usize,
    pub accepted: usize,
}

fn ser_complex_vec<S: serde::Serializer>(v: &[C], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::Serialize;
    let w: Vec<[f64; 2]> = v.iter().map(|z| [z.re, z.im]).collect();
    w.serialize(s)
}

fn cnormal(rng: &mut ChaCha8Rng) -> C {
    C::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Affine chart of a point: the coordinate fixed to one, the two free
/// coordinates, and the two minors that involve the fixed coordinate.
#[derive(Clone, Copy)]
struct Chart {
    free: [usize; 2],
    rows: [usize; 2],
}

impl Chart {
    fn of(v: &[C; 3]) -> (usize, Chart) {
        let k = (0..3).max_by(|&a, &b| v[a].norm().total_cmp(&v[b].norm())).unwrap_or(0);
        let c = match k {
            0 => Chart { free: [1, 2], rows: [0, 1] },
            1 => Chart { free: [0, 2], rows: [0, 2] },
            _ => Chart { free: [0, 1], rows: [1, 2] },
        };
        (k, c)
    }

    fn embed(k: usize, c: &Chart, a: C, b: C) -> [C; 3] {
        let mut v = [C::new(0.0, 0.0); 3];
        v[k] = C::new(1.0, 0.0);
        v[c.free[0]] = a;
        v[c.free[1]] = b;
        v
    }
}

/// Unknowns `(p1, p2, q1, q2, s, t)`: the free coordinates of `P` and `Q`
/// in their charts, with `R = P + s Q`. Equations: two minors of `f + t g`
/// at each of `P`, `Q`, `R`.
fn alignment_system(
    evf: &CubicEval,
    evg: &CubicEval,
    charts: &[(usize, Chart); 3],
    u: &[C; 6],
) -> ([C; 6], [[C; 6]; 6]) {
    let (ka, ca) = &charts[0];
    let (kb, cb) = &charts[1];
    let p = Chart::embed(*ka, ca, u[0], u[1]);
    let q = Chart::embed(*kb, cb, u[2], u[3]);
    let (s, t) = (u[4], u[5]);
    let r = [p[0] + s * q[0], p[1] + s * q[1], p[2] + s * q[2]];
    let mut f = [C::new(0.0, 0.0); 6];
    let mut j = [[C::new(0.0, 0.0); 6]; 6];
    for (blk, pt) in [p, q, r].iter().enumerate() {
        let (vf, jf) = evf.minors(pt);
        let (vg, jg) = evg.minors(pt);
        for (m, &mi) in charts[blk].1.rows.iter().enumerate() {
            let row = 2 * blk + m;
            f[row] = vf[mi] + t * vg[mi];
            let d = |l: usize| jf[mi][l] + t * jg[mi][l];
            if blk != 1 {
                j[row][0] = d(ca.free[0]);
                j[row][1] = d(ca.free[1]);
            }
            if blk == 1 {
                j[row][2] = d(cb.free[0]);
                j[row][3] = d(cb.free[1]);
            }
            if blk == 2 {
                j[row][2] = s * d(cb.free[0]);
                j[row][3] = s * d(cb.free[1]);
                j[row][4] = (0..3).map(|l| d(l) * q[l]).sum();
            }
            j[row][5] = vg[mi];
        }
    }
    (f, j)
}

/// Parameters `t` at which `f + t g` has three collinear eigenpoints, found
/// by Newton's method on a square system from many seeded starts.
pub fn pencil_alignment_parameters(f: &Cubic, g: &Cubic, opts: &SolveOptions) -> Result<PencilReport> {
    pencil_alignment_parameters_c(&f.to_complex(), &g.to_complex(), opts)
}

pub fn pencil_alignment_parameters_c(f: &[C; 10], g: &[C; 10], opts: &SolveOptions) -> Result<PencilReport> {
    let nf = f.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let ng = g.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if nf == 0.0 || ng == 0.0 {
        return Err(Error::pre("pencil generators must be nonzero"));
    }
    // Proportional generators span no pencil.
    let h: C = f.iter().zip(g).map(|(a, b)| a.conj() * b).sum();
    if 1.0 - h.norm_sqr() / (nf * nf * ng * ng) < 1e-20 {
        return Err(Error::pre("pencil generators are proportional"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let rot = random_rotation(&mut rng);
    let fr = rotate_cubic(f, &rot).map(|z| z / nf);
    let gr = rotate_cubic(g, &rot).map(|z| z / ng);
    let (evf, evg) = (CubicEval::new(&fr), CubicEval::new(&gr));
    let t_scale = ng / nf;

    let mut ts: Vec<C> = Vec::new();
    let (mut converged, mut accepted) = (0, 0);
    let inner = SolveOptions { seed: opts.seed.wrapping_add(1), ..opts.clone() };
    for _ in 0..opts.newton_restarts {
        // Start at three eigenpoints of a random member.
        let t0 = cnormal(&mut rng) / cnormal(&mut rng);
        // Large parameters are solved as `g + tau f` with `tau = 1 / t`.
        let swap = t0.norm() > 1.0;
        let (a, b, eva, evb) = if swap { (&gr, &fr, &evg, &evf) } else { (&fr, &gr, &evf, &evg) };
        let t0 = if swap { t0.inv() } else { t0 };
        let member: [C; 10] = std::array::from_fn(|k| a[k] + t0 * b[k]);
        let Ok(eig) = eigenpoints_numeric_c(&member, &inner) else { continue };
        let n = eig.points.len();
        if n < 3 {
            continue;
        }
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        // The third point nearest the line through the first two.
        let k = (0..n)
            .filter(|&k| k != i && k != j)
            .min_by(|&a, &b| {
                let da = det3c(&eig.points[i], &eig.points[j], &eig.points[a]).norm();
                let db = det3c(&eig.points[i], &eig.points[j], &eig.points[b]).norm();
                da.total_cmp(&db)
            })
            .expect("at least three points");
        let (pp, qq, ww) = (eig.points[i].coords(), eig.points[j].coords(), eig.points[k].coords());
        let (ka, ca) = Chart::of(pp);
        let (kb, cb) = Chart::of(qq);
        let pv = pp.map(|z| z / pp[ka]);
        let qv = qq.map(|z| z / qq[kb]);
        // Least squares for P + s Q ~ beta W.
        let cols = [qv, ww.map(|z| -z)];
        let mut ata = [[C::new(0.0, 0.0); 2]; 2];
        let mut atb = [C::new(0.0, 0.0); 2];
        for a in 0..2 {
            for b in 0..2 {
                ata[a][b] = (0..3).map(|l| cols[a][l].conj() * cols[b][l]).sum();
            }
            atb[a] = (0..3).map(|l| -cols[a][l].conj() * pv[l]).sum();
        }
        let s0 = solve_dense(ata, atb).map(|x| x[0]).unwrap_or(C::new(1.0, 0.0));
        let r0: [C; 3] = std::array::from_fn(|l| pv[l] + s0 * qv[l]);
        let charts = [(ka, ca), (kb, cb), Chart::of(&r0)];
        let mut u = [pv[ca.free[0]], pv[ca.free[1]], qv[cb.free[0]], qv[cb.free[1]], s0, t0];
        let mut ok = false;
        for _ in 0..60 {
            let (fv, jac) = alignment_system(eva, evb, &charts, &u);
            let Some(d) = solve_dense(jac, fv.map(|z| -z)) else { break };
            for (uk, dk) in u.iter_mut().zip(d) {
                *uk += dk;
            }
            let step: f64 = d.iter().map(|z| z.norm()).sum();
            let size: f64 = u.iter().map(|z| z.norm()).sum();
            if !size.is_finite() || size > 1e8 {
                break;
            }
            if step < 1e-13 * (1.0 + size) {
                ok = true;
                break;
            }
        }
        if !ok {
            continue;
        }
        converged += 1;
        let (s, t) = (u[4], u[5]);
        if s.norm() < 1e-6 {
            continue;
        }
        let pe = Chart::embed(ka, &ca, u[0], u[1]);
        let qe = Chart::embed(kb, &cb, u[2], u[3]);
        let p = CPoint::new(pe);
        let q = CPoint::new(qe);
        let r = CPoint::new(std::array::from_fn(|l| pe[l] + s * qe[l]));
        if p.distance(&q) < 1e-6 || p.distance(&r) < 1e-6 || q.distance(&r) < 1e-6 {
            continue;
        }
        let member: [C; 10] = std::array::from_fn(|k| a[k] + t * b[k]);
        let evm = CubicEval::new(&member);
        if [p, q, r].iter().any(|x| evm.residual(x) > opts.tol_residual) {
            continue;
        }
        if swap && t.norm() < 1e-12 {
            continue;
        }
        accepted += 1;
        let t = if swap { t.inv() } else { t };
        let t_orig = t * t_scale.recip();
        if !ts.iter().any(|x| (x - t_orig).norm() <= opts.tol_cluster * (1.0 + x.norm())) {
            ts.push(t_orig);
        }
    }
    ts.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(PencilReport {
        t_values: ts,
        restarts: opts.newton_restarts,
        converged,
        accepted,
    })
}
