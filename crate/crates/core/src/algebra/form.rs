//! Homogeneous polynomials in `x, y, z` and binary forms in `u1, u2`.

use std::collections::BTreeMap;
use std::fmt;

use super::poly::{Poly1, Poly2};
use super::scalar::Scalar;

/// Exponent triple. The derived order compares `z`, then `y`, which for a
/// fixed degree lists monomials as `x^3, x^2y, xy^2, y^3, x^2z, ...`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Exp {
    pub z: u32,
    pub y: u32,
    pub x: u32,
}

impl Exp {
    pub const fn new(x: u32, y: u32, z: u32) -> Self {
        Exp { z, y, x }
    }

    pub fn degree(&self) -> u32 {
        self.x + self.y + self.z
    }

    pub fn get(&self, var: usize) -> u32 {
        [self.x, self.y, self.z][var]
    }

    fn add(&self, o: &Exp) -> Exp {
        Exp::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }

    fn checked_sub(&self, o: &Exp) -> Option<Exp> {
        Some(Exp::new(
            self.x.checked_sub(o.x)?,
            self.y.checked_sub(o.y)?,
            self.z.checked_sub(o.z)?,
        ))
    }
}

/// All monomials of degree `d` in the canonical order.
pub fn monomials(d: u32) -> Vec<Exp> {
    let mut out = Vec::new();
    for z in 0..=d {
        for y in 0..=(d - z) {
            out.push(Exp::new(d - z - y, y, z));
        }
    }
    out
}

/// A ternary form of fixed degree. The zero form keeps its degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TernaryForm {
    degree: u32,
    terms: BTreeMap<Exp, Scalar>,
}

impl TernaryForm {
    pub fn zero(degree: u32) -> Self {
        TernaryForm {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        let mut f = TernaryForm::zero(0);
        f.add_term(Exp::new(0, 0, 0), c);
        f
    }

    /// The coordinate function `x`, `y` or `z` for `var = 0, 1, 2`.
    pub fn var(var: usize) -> Self {
        let e = match var {
            0 => Exp::new(1, 0, 0),
            1 => Exp::new(0, 1, 0),
            _ => Exp::new(0, 0, 1),
        };
        TernaryForm::monomial(e, Scalar::one())
    }

    pub fn monomial(e: Exp, c: Scalar) -> Self {
        let mut f = TernaryForm::zero(e.degree());
        f.add_term(e, c);
        f
    }

    /// `a x + b y + c z`.
    pub fn linear(c: &[Scalar; 3]) -> Self {
        let mut f = TernaryForm::zero(1);
        for (k, ck) in c.iter().enumerate() {
            f = &f + &TernaryForm::var(k).scale(ck);
        }
        f
    }

    /// Form with the given coefficients listed in canonical monomial order.
    pub fn from_coeffs(degree: u32, coeffs: &[Scalar]) -> Self {
        let mons = monomials(degree);
        assert_eq!(mons.len(), coeffs.len(), "wrong coefficient count");
        let mut f = TernaryForm::zero(degree);
        for (e, c) in mons.into_iter().zip(coeffs) {
            f.add_term(e, c.clone());
        }
        f
    }

    /// Dense coefficients in canonical monomial order.
    pub fn coeffs(&self) -> Vec<Scalar> {
        monomials(self.degree).iter().map(|e| self.coeff(e)).collect()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &Exp) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, e: Exp, c: Scalar) {
        assert_eq!(e.degree(), self.degree, "inhomogeneous term");
        if c.is_zero() {
            return;
        }
        let v = match self.terms.remove(&e) {
            Some(old) => old + c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(e, v);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut f = TernaryForm::zero(self.degree);
        if c.is_zero() {
            return f;
        }
        for (e, v) in &self.terms {
            f.terms.insert(*e, v * c);
        }
        f
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = TernaryForm::constant(Scalar::one());
        for _ in 0..k {
            r = &r * self;
        }
        r
    }

    pub fn partial(&self, var: usize) -> Self {
        let mut f = TernaryForm::zero(self.degree.saturating_sub(1));
        for (e, c) in &self.terms {
            let k = e.get(var);
            if k == 0 {
                continue;
            }
            let mut ne = *e;
            match var {
                0 => ne.x -= 1,
                1 => ne.y -= 1,
                _ => ne.z -= 1,
            }
            f.add_term(ne, c * &Scalar::from_int(k as i64));
        }
        f
    }

    pub fn gradient(&self) -> [TernaryForm; 3] {
        [self.partial(0), self.partial(1), self.partial(2)]
    }

    pub fn eval(&self, p: &[Scalar; 3]) -> Scalar {
        let pw = |v: &Scalar, k: u32| v.pow(k);
        self.terms
            .iter()
            .map(|(e, c)| c * &pw(&p[0], e.x) * pw(&p[1], e.y) * pw(&p[2], e.z))
            .sum()
    }

    /// `f(l0, l1, l2)` for forms `l_k` of a common degree.
    pub fn compose(&self, l: &[TernaryForm; 3]) -> Self {
        let d = l[0].degree;
        let mut out = TernaryForm::zero(self.degree * d);
        let mut cache: BTreeMap<(usize, u32), TernaryForm> = BTreeMap::new();
        let mut power = |k: usize, n: u32| -> TernaryForm {
            cache.entry((k, n)).or_insert_with(|| l[k].pow(n)).clone()
        };
        for (e, c) in &self.terms {
            let t = &(&power(0, e.x) * &power(1, e.y)) * &power(2, e.z);
            out = &out + &t.scale(c);
        }
        out
    }

    /// Coefficient of the first monomial present, in canonical order.
    pub fn leading(&self) -> Option<(Exp, Scalar)> {
        self.terms.iter().next().map(|(e, c)| (*e, c.clone()))
    }

    /// Scaled so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv()),
            None => self.clone(),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide.
    pub fn div_exact(&self, d: &TernaryForm) -> Option<TernaryForm> {
        let (le, lc) = d.leading()?;
        if self.degree < d.degree {
            return if self.is_zero() {
                Some(TernaryForm::zero(0))
            } else {
                None
            };
        }
        let lci = lc.inv();
        let mut rem = self.clone();
        let mut q = TernaryForm::zero(self.degree - d.degree);
        while let Some((re, rc)) = rem.leading() {
            let qe = re.checked_sub(&le)?;
            let qc = &rc * &lci;
            let t = TernaryForm::monomial(qe, qc.clone());
            rem = &rem - &(&t * d);
            q.add_term(qe, qc);
        }
        Some(q)
    }

    /// Largest `k` with `z^k` dividing the form.
    fn z_valuation(&self) -> u32 {
        self.terms.keys().map(|e| e.z).min().unwrap_or(0)
    }

    /// `f(x, y, 1)` as a polynomial in `y` with coefficients in `x`.
    pub(crate) fn dehomogenize_z(&self) -> Poly2 {
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for (e, c) in &self.terms {
            let (yi, xi) = (e.y as usize, e.x as usize);
            if rows.len() <= yi {
                rows.resize(yi + 1, Vec::new());
            }
            if rows[yi].len() <= xi {
                rows[yi].resize(xi + 1, Scalar::zero());
            }
            rows[yi][xi] = &rows[yi][xi] + c;
        }
        Poly2::new(rows.into_iter().map(Poly1::new).collect())
    }

    /// Inverse of [`TernaryForm::dehomogenize_z`] at the given degree.
    pub(crate) fn homogenize_z(p: &Poly2, degree: u32) -> Self {
        let mut f = TernaryForm::zero(degree);
        for (yi, row) in p.coeffs().iter().enumerate() {
            for (xi, c) in row.coeffs().iter().enumerate() {
                let (x, y) = (xi as u32, yi as u32);
                f.add_term(Exp::new(x, y, degree - x - y), c.clone());
            }
        }
        f
    }

    /// Monic greatest common divisor. `gcd(0, 0)` is the zero form.
    pub fn gcd(&self, other: &TernaryForm) -> TernaryForm {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let (va, vb) = (self.z_valuation(), other.z_valuation());
        let zpow = |k: u32| TernaryForm::var(2).pow(k);
        let a = self.div_exact(&zpow(va)).expect("z power divides");
        let b = other.div_exact(&zpow(vb)).expect("z power divides");
        let g = a.dehomogenize_z().gcd(&b.dehomogenize_z());
        let h = TernaryForm::homogenize_z(&g, g.total_degree());
        (&h * &zpow(va.min(vb))).monic()
    }

    /// Substitute `u1*p + u2*q` and return the binary form in `(u1, u2)`.
    pub fn restrict(&self, p: &[Scalar; 3], q: &[Scalar; 3]) -> BinaryForm {
        let lin: Vec<BinaryForm> = (0..3)
            .map(|k| BinaryForm::new(vec![p[k].clone(), q[k].clone()]))
            .collect();
        let mut out = BinaryForm::zero(self.degree);
        for (e, c) in &self.terms {
            let t = lin[0].pow(e.x).mul(&lin[1].pow(e.y)).mul(&lin[2].pow(e.z));
            out = out.add(&t.scale(c));
        }
        out
    }

    /// True when every coefficient is a Gaussian rational.
    pub fn is_gaussian(&self) -> bool {
        self.terms.values().all(|c| c.as_gauss().is_some())
    }
}

impl std::ops::Add for &TernaryForm {
    type Output = TernaryForm;
    fn add(self, o: &TernaryForm) -> TernaryForm {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let mut f = self.clone();
        for (e, c) in &o.terms {
            f.add_term(*e, c.clone());
        }
        f
    }
}

impl std::ops::Sub for &TernaryForm {
    type Output = TernaryForm;
    fn sub(self, o: &TernaryForm) -> TernaryForm {
        self + &o.scale(&Scalar::from_int(-1))
    }
}

impl std::ops::Neg for &TernaryForm {
    type Output = TernaryForm;
    fn neg(self) -> TernaryForm {
        self.scale(&Scalar::from_int(-1))
    }
}

impl std::ops::Mul for &TernaryForm {
    type Output = TernaryForm;
    fn mul(self, o: &TernaryForm) -> TernaryForm {
        let mut f = TernaryForm::zero(self.degree + o.degree);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                f.add_term(ea.add(eb), ca * cb);
            }
        }
        f
    }
}

impl fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (name, k) in [("x", e.x), ("y", e.y), ("z", e.z)] {
                match k {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

/// Binary form `sum c_k u1^(d-k) u2^k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryForm {
    coeffs: Vec<Scalar>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        assert!(!coeffs.is_empty(), "binary form needs a degree");
        BinaryForm { coeffs }
    }

    pub fn zero(degree: u32) -> Self {
        BinaryForm::new(vec![Scalar::zero(); degree as usize + 1])
    }

    pub fn degree(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree(), o.degree(), "degree mismatch");
        BinaryForm::new(self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, c: &Scalar) -> BinaryForm {
        BinaryForm::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, o: &BinaryForm) -> BinaryForm {
        let mut out = vec![Scalar::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BinaryForm::new(out)
    }

    pub fn pow(&self, k: u32) -> BinaryForm {
        let mut r = BinaryForm::new(vec![Scalar::one()]);
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    pub fn eval(&self, u1: &Scalar, u2: &Scalar) -> Scalar {
        let d = self.degree();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * &u1.pow(d - k as u32) * u2.pow(k as u32))
            .sum()
    }

    /// Number of leading zero coefficients, i.e. the power of `u2` dividing.
    fn u2_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// `b(t, 1)` as a polynomial in `t`.
    fn dehomogenize(&self) -> Poly1 {
        Poly1::new(self.coeffs.iter().rev().cloned().collect())
    }

    fn homogenize(p: &Poly1, degree: usize) -> BinaryForm {
        let mut c = vec![Scalar::zero(); degree + 1];
        for (k, v) in p.coeffs().iter().enumerate() {
            c[degree - k] = v.clone();
        }
        BinaryForm::new(c)
    }

    /// Monic greatest common divisor. `gcd(0, 0)` is the zero form of the
    /// larger degree.
    pub fn gcd(&self, o: &BinaryForm) -> BinaryForm {
        if self.is_zero() {
            return if o.is_zero() {
                BinaryForm::zero(self.degree().max(o.degree()))
            } else {
                o.monic()
            };
        }
        if o.is_zero() {
            return self.monic();
        }
        let v = self.u2_valuation().min(o.u2_valuation());
        let g = self.dehomogenize().gcd(&o.dehomogenize());
        let deg = g.degree().unwrap_or(0) + v;
        BinaryForm::homogenize(&g, deg).monic()
    }

    /// Scaled so the first nonzero coefficient is one.
    pub fn monic(&self) -> BinaryForm {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            Some(c) => self.scale(&c.inv()),
            None => self.clone(),
        }
    }

    /// Divide out the linear factor vanishing at `(a : b)` as often as it
    /// divides. Returns the quotient and the multiplicity removed.
    pub fn remove_root(&self, a: &Scalar, b: &Scalar) -> (BinaryForm, u32) {
        let lin = BinaryForm::new(vec![b.clone(), -a]);
        let mut cur = self.clone();
        let mut mult = 0;
        while !cur.is_zero() && cur.degree() > 0 && cur.eval(a, b).is_zero() {
            cur = cur.div_linear(&lin);
            mult += 1;
        }
        (cur, mult)
    }

    /// Exact division by a linear binary form.
    fn div_linear(&self, lin: &BinaryForm) -> BinaryForm {
        // Synthetic division on coefficient lists, from the u1^d end, or from
        // the u2^d end when the divisor has no u1 term.
        let d = self.degree() as usize;
        let (p, q) = (&lin.coeffs[0], &lin.coeffs[1]);
        let mut out = vec![Scalar::zero(); d];
        if !p.is_zero() {
            let mut rem = self.coeffs.clone();
            for k in 0..d {
                let c = &rem[k] / p;
                rem[k + 1] = &rem[k + 1] - &(&c * q);
                out[k] = c;
            }
        } else {
            let mut rem = self.coeffs.clone();
            for k in (1..=d).rev() {
                let c = &rem[k] / q;
                rem[k - 1] = &rem[k - 1] - &(&c * p);
                out[k - 1] = c;
            }
        }
        BinaryForm::new(out)
    }

    /// Roots `(u1 : u2)` of a nonzero binary quadratic, adjoining a square
    /// root if needed.
    pub fn quadratic_roots(&self) -> crate::error::Result<[(Scalar, Scalar); 2]> {
        use crate::error::Error;
        if self.degree() != 2 || self.is_zero() {
            return Err(Error::pre("need a nonzero binary quadratic"));
        }
        // a u1^2 + b u1 u2 + c u2^2
        let (a, b, c) = (&self.coeffs[0], &self.coeffs[1], &self.coeffs[2]);
        if a.is_zero() {
            // u2 (b u1 + c u2)
            return Ok([(Scalar::one(), Scalar::zero()), (-c, b.clone())]);
        }
        let disc = b * b - &(&Scalar::from_int(4) * &(a * c));
        let r = Scalar::sqrt_or_adjoin(&disc)?;
        let two_a = &Scalar::from_int(2) * a;
        Ok([
            (&(-b) + &r, two_a.clone()),
            (&(-b) - &r, two_a),
        ])
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({c})*u1^{}*u2^{k}", d - k as u32))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(a: i64, b: i64, c: i64) -> TernaryForm {
        TernaryForm::linear(&[a.into(), b.into(), c.into()])
    }

    #[test]
    fn basis_order() {
        let m = monomials(3);
        let expect = [
            (3, 0, 0), (2, 1, 0), (1, 2, 0), (0, 3, 0), (2, 0, 1),
            (1, 1, 1), (0, 2, 1), (1, 0, 2), (0, 1, 2), (0, 0, 3),
        ];
        let got: Vec<_> = m.iter().map(|e| (e.x, e.y, e.z)).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn partials_of_x2y() {
        let f = TernaryForm::monomial(Exp::new(2, 1, 0), Scalar::one());
        assert_eq!(f.partial(0), TernaryForm::monomial(Exp::new(1, 1, 0), 2.into()));
        assert_eq!(f.partial(1), TernaryForm::monomial(Exp::new(2, 0, 0), 1.into()));
        assert!(f.partial(2).is_zero());
    }

    #[test]
    fn gcd_of_products() {
        let x = TernaryForm::var(0);
        let (y, z) = (TernaryForm::var(1), TernaryForm::var(2));
        let a = &(&x * &x) * &y;
        let b = &(&x * &x) * &z;
        assert_eq!(a.gcd(&b), &x * &x);
        let l1 = lin(1, 2, -1);
        let l2 = lin(0, 1, 3);
        let l3 = lin(2, 0, 1);
        let f = &(&l1 * &l2) * &z;
        let g = &(&l1 * &l3) * &(&z * &z);
        assert_eq!(f.gcd(&g), (&l1 * &z).monic());
        assert_eq!(f.gcd(&TernaryForm::zero(3)), f.monic());
    }

    #[test]
    fn exact_division() {
        let l1 = lin(1, -1, 2);
        let q = &lin(3, 1, 0) * &lin(0, 1, 1);
        let f = &l1 * &q;
        assert_eq!(f.div_exact(&l1), Some(q));
        assert_eq!(lin(1, 0, 0).div_exact(&lin(0, 1, 0)), None);
    }

    #[test]
    fn restriction_to_a_line() {
        // x^2 y on the line through (1:0:0) and (0:1:0) is u1^2 u2.
        let f = TernaryForm::monomial(Exp::new(2, 1, 0), Scalar::one());
        let b = f.restrict(&[1.into(), 0.into(), 0.into()], &[0.into(), 1.into(), 0.into()]);
        assert_eq!(b.coeffs(), &[0.into(), 1.into(), 0.into(), 0.into()]);
    }

    #[test]
    fn binary_gcd_and_roots() {
        // u1 u2 (u2 - u1) and u1 u2^2
        let a = BinaryForm::new(vec![0.into(), (-1).into(), 1.into(), 0.into()]);
        let b = BinaryForm::new(vec![0.into(), 0.into(), 1.into(), 0.into()]);
        let g = a.gcd(&b);
        assert_eq!(g.degree(), 2);
        assert_eq!(g.coeffs(), &[0.into(), 1.into(), 0.into()]);
        let (q, m) = a.remove_root(&1.into(), &1.into());
        assert_eq!((q.degree(), m), (2, 1));
        let (q, m) = a.remove_root(&0.into(), &1.into());
        assert_eq!((q.degree(), m), (2, 1));
        let r = BinaryForm::new(vec![1.into(), 0.into(), 1.into()]).quadratic_roots().unwrap();
        for (u1, u2) in r {
            assert!((&u1 * &u1 + &u2 * &u2).is_zero());
        }
    }
}
