//! Projective points and lines, the isotropic conic and orthogonal normal forms.

use std::fmt;

use crate::algebra::{canonical_projective, ExactMatrix, Scalar, TernaryForm};
use crate::error::{Error, Result};

pub type Vec3 = [Scalar; 3];

pub fn dot(a: &Vec3, b: &Vec3) -> Scalar {
    &(&(&a[0] * &b[0]) + &(&a[1] * &b[1])) + &(&a[2] * &b[2])
}

pub fn cross3(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

pub fn det3(a: &Vec3, b: &Vec3, c: &Vec3) -> Scalar {
    dot(a, &cross3(b, c))
}

/// `s*a + t*b`.
pub fn lincomb(s: &Scalar, a: &Vec3, t: &Scalar, b: &Vec3) -> Vec3 {
    [0, 1, 2].map(|k| &(s * &a[k]) + &(t * &b[k]))
}

fn is_zero_vec(v: &Vec3) -> bool {
    v.iter().all(|c| c.is_zero())
}

fn canonical3(v: &Vec3) -> Option<Vec3> {
    let c = canonical_projective(v)?;
    let mut it = c.into_iter();
    Some([it.next()?, it.next()?, it.next()?])
}

/// A point of the complex projective plane, stored as its canonical
/// representative so equality is projective equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjPoint {
    c: Vec3,
}

impl ProjPoint {
    pub fn new(c: Vec3) -> Result<Self> {
        canonical3(&c)
            .map(|c| ProjPoint { c })
            .ok_or_else(|| Error::pre("the zero vector is not a point"))
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        ProjPoint::new([a.into(), b.into(), c.into()]).expect("nonzero point")
    }

    pub fn parse(t: [&str; 3]) -> Result<Self> {
        ProjPoint::new([t[0].parse()?, t[1].parse()?, t[2].parse()?])
    }

    pub fn coords(&self) -> &Vec3 {
        &self.c
    }

    /// The point with these coordinates read as a line.
    pub fn polar(&self) -> Line {
        Line { dual: self.c.clone() }
    }

    pub fn has_extension(&self) -> bool {
        self.c.iter().any(|s| s.radicand().is_some())
    }

    /// Coordinates as complex numbers.
    pub fn to_complex(&self) -> [num_complex::Complex64; 3] {
        [0, 1, 2].map(|k| self.c[k].to_complex())
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.c[0], self.c[1], self.c[2])
    }
}

impl serde::Serialize for ProjPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.c.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for ProjPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let c = <[Scalar; 3]>::deserialize(d)?;
        ProjPoint::new(c).map_err(serde::de::Error::custom)
    }
}

/// A line `a x + b y + c z = 0`, stored by its canonical dual coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Line {
    dual: Vec3,
}

impl Line {
    pub fn new(dual: Vec3) -> Result<Self> {
        canonical3(&dual)
            .map(|dual| Line { dual })
            .ok_or_else(|| Error::pre("the zero vector is not a line"))
    }

    pub fn through(p: &ProjPoint, q: &ProjPoint) -> Result<Self> {
        if p == q {
            return Err(Error::pre(format!("no unique line through {p} twice")));
        }
        Line::new(cross3(&p.c, &q.c))
    }

    pub fn dual(&self) -> &Vec3 {
        &self.dual
    }

    pub fn form(&self) -> TernaryForm {
        TernaryForm::linear(&self.dual)
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        dot(&self.dual, &p.c).is_zero()
    }

    pub fn meet(&self, o: &Line) -> Result<ProjPoint> {
        if self == o {
            return Err(Error::pre("coincident lines have no single meeting point"));
        }
        ProjPoint::new(cross3(&self.dual, &o.dual))
    }

    /// The point whose polar is this line.
    pub fn pole(&self) -> ProjPoint {
        ProjPoint::new(self.dual.clone()).expect("nonzero")
    }

    /// Two distinct points spanning the line.
    pub fn two_points(&self) -> (ProjPoint, ProjPoint) {
        let axes: [Vec3; 3] = [
            [1.into(), 0.into(), 0.into()],
            [0.into(), 1.into(), 0.into()],
            [0.into(), 0.into(), 1.into()],
        ];
        let cands: Vec<ProjPoint> = axes
            .iter()
            .filter_map(|e| ProjPoint::new(cross3(&self.dual, e)).ok())
            .collect();
        let p = cands[0].clone();
        let q = cands.iter().find(|q| **q != p).expect("line has two points").clone();
        (p, q)
    }

    /// Tangent to the isotropic conic.
    pub fn is_isotropic_tangent(&self) -> bool {
        dot(&self.dual, &self.dual).is_zero()
    }

    /// Orthogonal in the sense of the dual bilinear form.
    pub fn is_orthogonal(&self, o: &Line) -> bool {
        dot(&self.dual, &o.dual).is_zero()
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", self.dual[0], self.dual[1], self.dual[2])
    }
}

impl serde::Serialize for Line {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(1))?;
        m.serialize_entry("dual", &self.dual)?;
        m.end()
    }
}

impl<'de> serde::Deserialize<'de> for Line {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            dual: [Scalar; 3],
        }
        let r = Raw::deserialize(d)?;
        Line::new(r.dual).map_err(serde::de::Error::custom)
    }
}

/// The symmetric bilinear form `<P, Q>` on stored representatives.
pub fn scal(p: &ProjPoint, q: &ProjPoint) -> Scalar {
    dot(&p.c, &q.c)
}

/// `P x Q` as a point; errors when `P = Q`.
pub fn cross(p: &ProjPoint, q: &ProjPoint) -> Result<ProjPoint> {
    if p == q {
        return Err(Error::pre("cross product of a point with itself"));
    }
    ProjPoint::new(cross3(&p.c, &q.c))
}

pub fn collinear(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> bool {
    det3(&p.c, &q.c, &r.c).is_zero()
}

pub fn on_isotropic(p: &ProjPoint) -> bool {
    scal(p, p).is_zero()
}

/// `s11 s22 - s12^2`; zero exactly when the line through the two points is
/// tangent to the isotropic conic.
pub fn sigma(p1: &ProjPoint, p2: &ProjPoint) -> Scalar {
    let s12 = scal(p1, p2);
    &(&scal(p1, p1) * &scal(p2, p2)) - &(&s12 * &s12)
}

/// `s11 s24 - s12 s14 = <P1 x P2, P1 x P4>`.
pub fn delta1(p1: &ProjPoint, p2: &ProjPoint, p4: &ProjPoint) -> Scalar {
    &(&scal(p1, p1) * &scal(p2, p4)) - &(&scal(p1, p2) * &scal(p1, p4))
}

/// `s11 s23 + s12 s13` for three distinct collinear points.
pub fn delta1bar(p1: &ProjPoint, p2: &ProjPoint, p3: &ProjPoint) -> Result<Scalar> {
    if p1 == p2 || p1 == p3 || p2 == p3 {
        return Err(Error::pre("points must be distinct"));
    }
    if !collinear(p1, p2, p3) {
        return Err(Error::pre("points must be collinear"));
    }
    Ok(&(&scal(p1, p1) * &scal(p2, p3)) + &(&scal(p1, p2) * &scal(p1, p3)))
}

/// Checks that `P1, P2, P3` and `P1, P4, P5` are two distinct lines of
/// three distinct points meeting at `P1`.
pub fn check_v_configuration(p: &[ProjPoint; 5]) -> Result<()> {
    for i in 0..5 {
        for j in i + 1..5 {
            if p[i] == p[j] {
                return Err(Error::pre(format!("P{} and P{} coincide", i + 1, j + 1)));
            }
        }
    }
    if !collinear(&p[0], &p[1], &p[2]) {
        return Err(Error::pre("P1, P2, P3 are not collinear"));
    }
    if !collinear(&p[0], &p[3], &p[4]) {
        return Err(Error::pre("P1, P4, P5 are not collinear"));
    }
    if collinear(&p[0], &p[1], &p[3]) {
        return Err(Error::pre("P1, P2, P4 are collinear"));
    }
    Ok(())
}

/// `s12 s13 s45 - s14 s15 s23` on a V-configuration.
pub fn delta2(p: &[ProjPoint; 5]) -> Result<Scalar> {
    check_v_configuration(p)?;
    let s = |i: usize, j: usize| scal(&p[i - 1], &p[j - 1]);
    Ok(&(&(&s(1, 2) * &s(1, 3)) * &s(4, 5)) - &(&(&s(1, 4) * &s(1, 5)) * &s(2, 3)))
}

/// The two points where a line meets the isotropic conic, equal when the
/// line is tangent. May adjoin a square root.
pub fn isotropic_points(line: &Line) -> Result<[ProjPoint; 2]> {
    let (u, w) = line.two_points();
    let (uu, uw, ww) = (scal(&u, &u), scal(&u, &w), scal(&w, &w));
    // <a u + b w, a u + b w> = a^2 uu + 2ab uw + b^2 ww
    let q = crate::algebra::BinaryForm::new(vec![uu, &Scalar::from_int(2) * &uw, ww]);
    let [(a1, b1), (a2, b2)] = q.quadratic_roots()?;
    Ok([
        ProjPoint::new(lincomb(&a1, &u.c, &b1, &w.c))?,
        ProjPoint::new(lincomb(&a2, &u.c, &b2, &w.c))?,
    ])
}

/// A proper orthogonal 3x3 matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SO3Map {
    m: ExactMatrix,
}

impl SO3Map {
    /// Checks `M M^T = I` and `det M = 1`.
    pub fn new(m: ExactMatrix) -> Result<Self> {
        if m.rows() != 3 || m.cols() != 3 {
            return Err(Error::pre("need a 3x3 matrix"));
        }
        if m.mul(&m.transpose()) != ExactMatrix::identity(3) || !m.det().is_one() {
            return Err(Error::pre("matrix is not special orthogonal"));
        }
        Ok(SO3Map { m })
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.m
    }

    pub fn inverse(&self) -> SO3Map {
        SO3Map {
            m: self.m.transpose(),
        }
    }

    pub fn apply_vec(&self, v: &Vec3) -> Vec3 {
        let r = self.m.mul_vec(v);
        [r[0].clone(), r[1].clone(), r[2].clone()]
    }

    pub fn apply_point(&self, p: &ProjPoint) -> ProjPoint {
        ProjPoint::new(self.apply_vec(&p.c)).expect("invertible")
    }

    /// `(M f)(X) = f(M^-1 X) = f(M^T X)`, so eigenpoints map by `M`.
    pub fn apply_form(&self, f: &TernaryForm) -> TernaryForm {
        let mt = self.m.transpose();
        let subs: [TernaryForm; 3] = [0, 1, 2].map(|k| {
            let row: Vec3 = [0, 1, 2].map(|j| mt.get(k, j).clone());
            TernaryForm::linear(&row)
        });
        f.compose(&subs)
    }
}

fn cyclic_power(j: usize) -> ExactMatrix {
    // C sends e1 -> e2 -> e3 -> e1.
    let c = ExactMatrix::from_rows(vec![
        vec![0.into(), 0.into(), 1.into()],
        vec![1.into(), 0.into(), 0.into()],
        vec![0.into(), 1.into(), 0.into()],
    ]);
    let mut m = ExactMatrix::identity(3);
    for _ in 0..j {
        m = c.mul(&m);
    }
    m
}

fn rotate_coords(v: &Vec3, j: usize) -> Vec3 {
    // C^-j v: (a, b, c) -> (b, c, a) per step.
    let mut w = v.clone();
    for _ in 0..j {
        w = [w[1].clone(), w[2].clone(), w[0].clone()];
    }
    w
}

/// Matrix for a point `(1 : b : c)` on the isotropic conic, sending
/// `(1 : i : 0)` to it.
fn isotropic_matrix(v: &Vec3) -> ExactMatrix {
    let a_inv = v[0].inv();
    let (b, c) = (&v[1] * &a_inv, &v[2] * &a_inv);
    let i = Scalar::i();
    let (ib, ic) = (&i * &b, &i * &c);
    ExactMatrix::from_rows(vec![
        vec![1.into(), 0.into(), 0.into()],
        vec![0.into(), -&ib, ic.clone()],
        vec![0.into(), -&ic, -&ib],
    ])
}

/// The normal-form matrix with first column `(a, b, c)` of unit norm and
/// `w^2 = b^2 + c^2`.
fn unit_matrix(a: &Scalar, b: &Scalar, c: &Scalar, w: &Scalar) -> ExactMatrix {
    let wi = w.inv();
    ExactMatrix::from_rows(vec![
        vec![a.clone(), w.clone(), 0.into()],
        vec![b.clone(), -&(&(a * b) * &wi), c * &wi],
        vec![c.clone(), -&(&(a * c) * &wi), -&(b * &wi)],
    ])
}

/// An orthogonal frame through a hyperbolic pair of the polar line; needs
/// only a square root of `<P, P>`.
fn hyperbolic_matrix(v: &Vec3, s: &Scalar, root_s: &Scalar) -> Result<ExactMatrix> {
    let p = ProjPoint::new(v.clone())?;
    let (u, w) = p.polar().two_points();
    let (uu, uw, ww) = (scal(&u, &u), scal(&u, &w), scal(&w, &w));
    // Isotropic points a u + b w solve a^2 uu + 2ab uw + b^2 ww = 0, whose
    // discriminant is s times a square.
    let disc = &(&uw * &uw) - &(&uu * &ww);
    let root = &(&disc / s).sqrt_exact().ok_or_else(|| Error::pre("discriminant"))? * root_s;
    let (t1, t2): (Vec3, Vec3) = if !uu.is_zero() {
        let a1 = &(-&uw) + &root;
        let a2 = &(-&uw) - &root;
        (lincomb(&a1, &u.c, &uu, &w.c), lincomb(&a2, &u.c, &uu, &w.c))
    } else {
        // u is isotropic; the other root has b(2a uw + b ww) = 0 with b != 0.
        let two_uw = &Scalar::from_int(2) * &uw;
        (u.c.clone(), lincomb(&(-&ww), &u.c, &two_uw, &w.c))
    };
    let t12 = dot(&t1, &t2);
    let half = Scalar::frac(1, 2);
    let col2: Vec3 = [0, 1, 2].map(|k| &t1[k] + &(&half * &(&t2[k] / &t12)));
    let col1: Vec3 = [0, 1, 2].map(|k| &v[k] / root_s);
    let col3 = cross3(&col1, &col2);
    Ok(ExactMatrix::from_rows(
        (0..3)
            .map(|r| vec![col1[r].clone(), col2[r].clone(), col3[r].clone()])
            .collect(),
    ))
}

/// A map `M` and a representative `R`, either `(1:i:0)` or `(1:0:0)`, with
/// `M R` proportional to `P`.
pub fn so3_normalize(p: &ProjPoint) -> Result<(SO3Map, ProjPoint)> {
    let v = p.coords();
    if p.has_extension() {
        return Err(Error::pre("normalizing a point that already involves a square root"));
    }
    if on_isotropic(p) {
        let j = (0..3)
            .find(|&j| !rotate_coords(v, j)[0].is_zero())
            .expect("nonzero point");
        let m = cyclic_power(j).mul(&isotropic_matrix(&rotate_coords(v, j)));
        let rep = ProjPoint::new([1.into(), Scalar::i(), 0.into()])?;
        return Ok((SO3Map::new(m)?, rep));
    }
    let s = scal(p, p);
    let root_s = Scalar::sqrt_or_adjoin(&s)?;
    let s_square = root_s.radicand().is_none();
    let rep = ProjPoint::from_ints(1, 0, 0);
    for j in 0..3 {
        let r = rotate_coords(v, j);
        let rad_num = &(&r[1] * &r[1]) + &(&r[2] * &r[2]);
        if rad_num.is_zero() {
            continue;
        }
        // w^2 = rad_num / s must have a root in the field generated by root_s.
        let w = if let Some(x) = (&rad_num / &s).sqrt_exact() {
            Some(x)
        } else if !s_square {
            rad_num.sqrt_exact().map(|x| &x / &root_s)
        } else {
            None
        };
        if let Some(w) = w {
            let unit: Vec3 = [0, 1, 2].map(|k| &r[k] / &root_s);
            let m = cyclic_power(j).mul(&unit_matrix(&unit[0], &unit[1], &unit[2], &w));
            return Ok((SO3Map::new(m)?, rep));
        }
    }
    let m = hyperbolic_matrix(v, &s, &root_s)?;
    Ok((SO3Map::new(m)?, rep))
}

/// Point `s P + t Q`.
pub fn combine(s: &Scalar, p: &ProjPoint, t: &Scalar, q: &ProjPoint) -> Result<ProjPoint> {
    let v = lincomb(s, &p.c, t, &q.c);
    if is_zero_vec(&v) {
        return Err(Error::pre("linear combination vanishes"));
    }
    ProjPoint::new(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(t: [&str; 3]) -> ProjPoint {
        ProjPoint::parse(t).unwrap()
    }

    #[test]
    fn bilinear_examples() {
        assert_eq!(scal(&pt(["0", "i", "1"]), &pt(["0", "-i", "1"])), 2.into());
        assert_eq!(
            cross(&ProjPoint::from_ints(1, 1, 1), &ProjPoint::from_ints(1, 0, 0)).unwrap(),
            ProjPoint::from_ints(0, 1, -1)
        );
        assert!(collinear(
            &ProjPoint::from_ints(1, 0, 0),
            &ProjPoint::from_ints(0, 1, 0),
            &ProjPoint::from_ints(1, 1, 0)
        ));
        assert!(on_isotropic(&pt(["1", "i", "0"])));
        assert!(sigma(&ProjPoint::from_ints(1, 0, 0), &pt(["0", "1", "i"])).is_zero());
        let d = delta1(&ProjPoint::from_ints(1, 0, 0), &pt(["0", "i", "1"]), &pt(["0", "-i", "1"]));
        assert_eq!(d, 2.into());
    }

    #[test]
    fn normalize_examples() {
        let (m, r) = so3_normalize(&ProjPoint::from_ints(1, 0, 0)).unwrap();
        assert_eq!(m.matrix(), &ExactMatrix::identity(3));
        assert_eq!(r, ProjPoint::from_ints(1, 0, 0));
        let (m, r) = so3_normalize(&pt(["1", "i", "0"])).unwrap();
        assert_eq!(m.matrix(), &ExactMatrix::identity(3));
        assert_eq!(r, pt(["1", "i", "0"]));
        let p = ProjPoint::from_ints(3, 0, 4);
        let (m, r) = so3_normalize(&p).unwrap();
        assert_eq!(m.apply_point(&r), p);
        assert!(m.matrix().get(0, 0).as_gauss().is_some());
    }

    #[test]
    fn isotropic_points_of_a_line() {
        let l = Line::new([0.into(), 0.into(), 1.into()]).unwrap();
        let [a, b] = isotropic_points(&l).unwrap();
        assert!(on_isotropic(&a) && on_isotropic(&b) && a != b);
        assert!(l.contains(&a) && l.contains(&b));
    }
}
