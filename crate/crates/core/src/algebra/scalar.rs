//! Exact scalars: Gaussian rationals, optionally extended by one square root.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// An element `re + im*i` of the Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRational { re, im }
    }

    pub fn zero() -> Self {
        GaussRational::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        GaussRational::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        GaussRational::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRational::new(self.re.clone(), -self.im.clone())
    }

    /// `re^2 + im^2`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn add(&self, o: &Self) -> Self {
        GaussRational::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Self) -> Self {
        GaussRational::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn mul(&self, o: &Self) -> Self {
        GaussRational::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    pub fn neg(&self) -> Self {
        GaussRational::new(-self.re.clone(), -self.im.clone())
    }

    /// Panics on zero.
    pub fn inv(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "division by zero");
        GaussRational::new(&self.re / &n, -(&self.im / &n))
    }

    /// Exact square root inside the Gaussian rationals, if one exists.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(GaussRational::zero());
        }
        if self.im.is_zero() {
            return if self.re.is_negative() {
                rational_sqrt(&-self.re.clone())
                    .map(|s| GaussRational::new(BigRational::zero(), s))
            } else {
                rational_sqrt(&self.re).map(|s| GaussRational::new(s, BigRational::zero()))
            };
        }
        // (u + vi)^2 = re + im*i forces u^2 = (re + |z|) / 2.
        let n = rational_sqrt(&self.norm())?;
        let two = BigRational::from_integer(2.into());
        let u = rational_sqrt(&((&self.re + &n) / &two))?;
        let v = &self.im / (&two * &u);
        Some(GaussRational::new(u, v))
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }

    fn fmt_text(&self) -> String {
        let re0 = self.re.is_zero();
        let im0 = self.im.is_zero();
        if im0 {
            return fmt_rat(&self.re);
        }
        if re0 {
            return if self.im.is_one() {
                "i".to_string()
            } else {
                format!("{}i", fmt_rat(&self.im))
            };
        }
        if self.im.is_negative() {
            format!("{}-{}i", fmt_rat(&self.re), fmt_rat(&-self.im.clone()))
        } else {
            format!("{}+{}i", fmt_rat(&self.re), fmt_rat(&self.im))
        }
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn rat_to_f64(r: &BigRational) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // Scale down huge numerators and denominators together.
            let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
            let n = (r.numer() >> shift).to_f64().unwrap_or(0.0);
            let d = (r.denom() >> shift).to_f64().unwrap_or(1.0);
            n / d
        }
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

#[derive(Clone, Debug)]
struct Ext {
    coeff: GaussRational,
    radicand: Arc<GaussRational>,
}

/// An element `base + coeff*w` where `w^2` is a fixed non-square Gaussian
/// rational. Scalars without the `w` part are plain Gaussian rationals.
///
/// Only one extension may be in play per computation; combining scalars
/// built over different radicands panics.
#[derive(Clone, Debug)]
pub struct Scalar {
    base: GaussRational,
    ext: Option<Ext>,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        if self.base != other.base {
            return false;
        }
        match (&self.ext, &other.ext) {
            (None, None) => true,
            (Some(a), Some(b)) => a.coeff == b.coeff && a.radicand == b.radicand,
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::from_gauss(GaussRational::zero())
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn i() -> Self {
        Scalar::from_gauss(GaussRational::new(BigRational::zero(), BigRational::one()))
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_gauss(GaussRational::from_int(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Scalar::from_gauss(GaussRational::new(
            BigRational::from_integer(n),
            BigRational::zero(),
        ))
    }

    pub fn gaussian(re: i64, im: i64) -> Self {
        Scalar::from_gauss(GaussRational::new(
            BigRational::from_integer(re.into()),
            BigRational::from_integer(im.into()),
        ))
    }

    /// `num / den`; panics if `den == 0`.
    pub fn frac(num: i64, den: i64) -> Self {
        Scalar::from_gauss(GaussRational::new(
            BigRational::new(num.into(), den.into()),
            BigRational::zero(),
        ))
    }

    pub fn from_gauss(base: GaussRational) -> Self {
        Scalar { base, ext: None }
    }

    /// The root `w` of `w^2 = radicand`. Errors when `radicand` is already a
    /// square, in which case [`Scalar::sqrt_or_adjoin`] gives the exact root.
    pub fn adjoin_sqrt(radicand: &GaussRational) -> Result<Self, Error> {
        if radicand.sqrt().is_some() {
            return Err(Error::Precondition(format!(
                "{} is a square; no extension needed",
                radicand.fmt_text()
            )));
        }
        Ok(Scalar {
            base: GaussRational::zero(),
            ext: Some(Ext {
                coeff: GaussRational::one(),
                radicand: Arc::new(radicand.clone()),
            }),
        })
    }

    /// A square root of `r`: exact when possible, otherwise a freshly adjoined
    /// `w`. When `r` itself involves `w`, only exact roots inside the
    /// Gaussian rationals are attempted.
    pub fn sqrt_or_adjoin(r: &Scalar) -> Result<Scalar, Error> {
        let g = r.as_gauss().ok_or_else(|| {
            Error::Precondition("square root of an element already involving w".into())
        })?;
        match g.sqrt() {
            Some(s) => Ok(Scalar::from_gauss(s)),
            None => Scalar::adjoin_sqrt(g),
        }
    }

    /// Exact square root inside the Gaussian rationals, if `self` lies there.
    pub fn sqrt_exact(&self) -> Option<Scalar> {
        self.as_gauss()?.sqrt().map(Scalar::from_gauss)
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.ext.is_none()
    }

    pub fn is_one(&self) -> bool {
        self.ext.is_none() && self.base == GaussRational::one()
    }

    /// The value as a Gaussian rational, when it has no `w` part.
    pub fn as_gauss(&self) -> Option<&GaussRational> {
        if self.ext.is_none() {
            Some(&self.base)
        } else {
            None
        }
    }

    pub fn base(&self) -> &GaussRational {
        &self.base
    }

    /// Coefficient of `w` and the radicand, if present.
    pub fn ext_part(&self) -> Option<(&GaussRational, &GaussRational)> {
        self.ext.as_ref().map(|e| (&e.coeff, e.radicand.as_ref()))
    }

    pub fn radicand(&self) -> Option<&GaussRational> {
        self.ext.as_ref().map(|e| e.radicand.as_ref())
    }

    fn with_ext(base: GaussRational, coeff: GaussRational, radicand: Arc<GaussRational>) -> Self {
        if coeff.is_zero() {
            Scalar { base, ext: None }
        } else {
            Scalar {
                base,
                ext: Some(Ext { coeff, radicand }),
            }
        }
    }

    fn common_radicand(&self, other: &Scalar) -> Option<Arc<GaussRational>> {
        match (&self.ext, &other.ext) {
            (None, None) => None,
            (Some(a), None) => Some(a.radicand.clone()),
            (None, Some(b)) => Some(b.radicand.clone()),
            (Some(a), Some(b)) => {
                assert!(
                    a.radicand == b.radicand,
                    "incompatible square-root extensions: {} vs {}",
                    a.radicand.fmt_text(),
                    b.radicand.fmt_text()
                );
                Some(a.radicand.clone())
            }
        }
    }

    fn coeff(&self) -> GaussRational {
        self.ext
            .as_ref()
            .map(|e| e.coeff.clone())
            .unwrap_or_else(GaussRational::zero)
    }

    pub fn inv(&self) -> Scalar {
        match &self.ext {
            None => Scalar::from_gauss(self.base.inv()),
            Some(e) => {
                // (a + bw)^-1 = (a - bw) / (a^2 - b^2 r)
                let n = self
                    .base
                    .mul(&self.base)
                    .sub(&e.coeff.mul(&e.coeff).mul(&e.radicand));
                let ni = n.inv();
                Scalar::with_ext(self.base.mul(&ni), e.coeff.neg().mul(&ni), e.radicand.clone())
            }
        }
    }

    pub fn try_inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            None
        } else {
            Some(self.inv())
        }
    }

    pub fn square(&self) -> Scalar {
        self * self
    }

    pub fn pow(&self, k: u32) -> Scalar {
        let mut r = Scalar::one();
        for _ in 0..k {
            r = &r * self;
        }
        r
    }

    /// Complex value, taking the principal square root for `w`.
    pub fn to_complex(&self) -> Complex64 {
        let mut z = self.base.to_complex();
        if let Some(e) = &self.ext {
            z += e.coeff.to_complex() * e.radicand.to_complex().sqrt();
        }
        z
    }

    /// Nearby Gaussian rational with denominators at most `max_den`.
    pub fn approximate(z: Complex64, max_den: u64) -> Scalar {
        Scalar::from_gauss(GaussRational::new(
            approx_rational(z.re, max_den),
            approx_rational(z.im, max_den),
        ))
    }
}

/// Best rational approximation by continued fractions.
fn approx_rational(x: f64, max_den: u64) -> BigRational {
    if !x.is_finite() {
        return BigRational::zero();
    }
    let neg = x < 0.0;
    let mut v = x.abs();
    let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    for _ in 0..64 {
        let a = v.floor();
        if a > 1e15 {
            break;
        }
        let ai = a as i128;
        let p2 = ai * p1 + p0;
        let q2 = ai * q1 + q0;
        if q2 as u64 > max_den {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        let frac = v - a;
        if frac < 1e-12 {
            break;
        }
        v = 1.0 / frac;
    }
    if q1 == 0 {
        return BigRational::zero();
    }
    let r = BigRational::new(BigInt::from(p1), BigInt::from(q1));
    if neg {
        -r
    } else {
        r
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, o: &'a Scalar) -> Scalar {
                let f: fn(&Scalar, &Scalar) -> Scalar = $body;
                f(self, o)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &'a Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
    };
}

binop!(Add, add, |a, b| match a.common_radicand(b) {
    None => Scalar::from_gauss(a.base.add(&b.base)),
    Some(r) => Scalar::with_ext(a.base.add(&b.base), a.coeff().add(&b.coeff()), r),
});

binop!(Sub, sub, |a, b| match a.common_radicand(b) {
    None => Scalar::from_gauss(a.base.sub(&b.base)),
    Some(r) => Scalar::with_ext(a.base.sub(&b.base), a.coeff().sub(&b.coeff()), r),
});

binop!(Mul, mul, |a, b| match a.common_radicand(b) {
    None => Scalar::from_gauss(a.base.mul(&b.base)),
    Some(r) => {
        let (ca, cb) = (a.coeff(), b.coeff());
        let base = a.base.mul(&b.base).add(&ca.mul(&cb).mul(&r));
        let coeff = a.base.mul(&cb).add(&ca.mul(&b.base));
        Scalar::with_ext(base, coeff, r)
    }
});

binop!(Div, div, |a, b| a * &b.inv());

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            base: self.base.neg(),
            ext: self.ext.as_ref().map(|e| Ext {
                coeff: e.coeff.neg(),
                radicand: e.radicand.clone(),
            }),
        }
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.ext {
            None => write!(f, "{}", self.base.fmt_text()),
            Some(e) => {
                if !self.base.is_zero() {
                    write!(f, "{} + ", self.base.fmt_text())?;
                }
                write!(
                    f,
                    "({})*sqrt({})",
                    e.coeff.fmt_text(),
                    e.radicand.fmt_text()
                )
            }
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let bad = || Error::Parse(format!("bad rational '{s}'"));
    let body = s.strip_prefix('-').unwrap_or(s);
    let neg = body.len() != s.len();
    let (n, d) = match body.split_once('/') {
        Some((n, d)) => (n, d),
        None => (body, "1"),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !digits(n) || !digits(d) {
        return Err(bad());
    }
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in '{s}'")));
    }
    let r = BigRational::new(n, d);
    Ok(if neg { -r } else { r })
}

/// Imaginary coefficient written before the `i`; empty or a bare sign means one.
fn parse_imag(s: &str) -> Result<BigRational, Error> {
    match s {
        "" | "+" => Ok(BigRational::one()),
        "-" => Ok(-BigRational::one()),
        _ => parse_rational(s.strip_prefix('+').unwrap_or(s)),
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `p/q`, `a+bi`, `a-bi`, `bi` and `i`, with optional signs.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let Some(body) = t.strip_suffix('i') else {
            return Ok(Scalar::from_gauss(GaussRational::new(
                parse_rational(&t)?,
                BigRational::zero(),
            )));
        };
        let split = body
            .char_indices()
            .filter(|&(k, c)| k > 0 && (c == '+' || c == '-'))
            .map(|(k, _)| k)
            .last();
        let (re, im) = match split {
            Some(k) => (parse_rational(&body[..k])?, parse_imag(&body[k..])?),
            None => (BigRational::zero(), parse_imag(body)?),
        };
        Ok(Scalar::from_gauss(GaussRational::new(re, im)))
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Gaussian integer `(re, im)`.
pub(crate) type GaussInt = (BigInt, BigInt);

fn gi_mul(a: &GaussInt, b: &GaussInt) -> GaussInt {
    (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

fn gi_is_zero(a: &GaussInt) -> bool {
    a.0.is_zero() && a.1.is_zero()
}

fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    // d > 0
    let two = BigInt::from(2);
    (n * &two + d).div_floor(&(d * &two))
}

/// Nearest-quotient remainder in the Gaussian integers.
fn gi_rem(a: &GaussInt, b: &GaussInt) -> GaussInt {
    let nb = &b.0 * &b.0 + &b.1 * &b.1;
    let num = gi_mul(a, &(b.0.clone(), -b.1.clone()));
    let q = (round_div(&num.0, &nb), round_div(&num.1, &nb));
    let qb = gi_mul(&q, b);
    (&a.0 - &qb.0, &a.1 - &qb.1)
}

fn gi_gcd(mut a: GaussInt, mut b: GaussInt) -> GaussInt {
    while !gi_is_zero(&b) {
        let r = gi_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// Rescale a nonzero vector to its canonical projective representative.
///
/// Gaussian-rational vectors become primitive Gaussian-integer vectors whose
/// first nonzero entry has positive real part and non-negative imaginary
/// part. Vectors involving `w` get their first nonzero entry set to one.
pub fn canonical_projective(v: &[Scalar]) -> Option<Vec<Scalar>> {
    let first = v.iter().position(|s| !s.is_zero())?;
    if v.iter().any(|s| s.ext.is_some()) {
        let inv = v[first].inv();
        let w: Vec<Scalar> = v.iter().map(|s| s * &inv).collect();
        if w.iter().any(|s| s.ext.is_some()) {
            return Some(w);
        }
        // The square root cancelled.
        return canonical_projective(&w);
    }
    let mut lcm = BigInt::one();
    for s in v {
        lcm = lcm.lcm(s.base.re.denom());
        lcm = lcm.lcm(s.base.im.denom());
    }
    let ints: Vec<GaussInt> = v
        .iter()
        .map(|s| {
            let re = (&s.base.re * BigRational::from_integer(lcm.clone())).to_integer();
            let im = (&s.base.im * BigRational::from_integer(lcm.clone())).to_integer();
            (re, im)
        })
        .collect();
    let mut g: GaussInt = (BigInt::zero(), BigInt::zero());
    for c in &ints {
        if !gi_is_zero(c) {
            g = gi_gcd(g, c.clone());
        }
    }
    // Divide by g, then by the unit that puts the first entry in the quadrant.
    let gn = &g.0 * &g.0 + &g.1 * &g.1;
    let gc = (g.0.clone(), -g.1.clone());
    let divided: Vec<GaussInt> = ints
        .iter()
        .map(|c| {
            let m = gi_mul(c, &gc);
            (m.0 / &gn, m.1 / &gn)
        })
        .collect();
    let lead = &divided[first];
    let unit: GaussInt = if lead.0.is_positive() && !lead.1.is_negative() {
        (BigInt::one(), BigInt::zero())
    } else if lead.1.is_positive() && !lead.0.is_positive() {
        (BigInt::zero(), -BigInt::one())
    } else if lead.0.is_negative() && !lead.1.is_positive() {
        (-BigInt::one(), BigInt::zero())
    } else {
        (BigInt::zero(), BigInt::one())
    };
    Some(
        divided
            .iter()
            .map(|c| {
                let m = gi_mul(c, &unit);
                Scalar::from_gauss(GaussRational::new(
                    BigRational::from_integer(m.0),
                    BigRational::from_integer(m.1),
                ))
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    #[test]
    fn parse_and_print_round_trip() {
        for t in ["0", "-3/4", "i", "-1i", "2+3i", "1/2-5/3i", "7i"] {
            assert_eq!(s(t).to_string(), t);
        }
        assert_eq!(s("-i"), s("-1i"));
        assert_eq!(s("1+i"), s("1+1i"));
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("x".parse::<Scalar>().is_err());
    }

    #[test]
    fn field_arithmetic() {
        assert_eq!(&s("i") * &s("i"), s("-1"));
        assert_eq!(&s("1+2i") * &s("1+2i").inv(), Scalar::one());
        assert_eq!(&s("3+4i") / &s("1+2i"), s("11/5-2/5i"));
    }

    #[test]
    fn square_roots() {
        assert_eq!(s("-4").sqrt_exact(), Some(s("2i")));
        assert_eq!(s("2i").sqrt_exact(), Some(s("1+i")));
        assert_eq!(s("9/4").sqrt_exact(), Some(s("3/2")));
        assert!(s("2").sqrt_exact().is_none());
        let w = Scalar::sqrt_or_adjoin(&s("2")).unwrap();
        assert_eq!(&w * &w, s("2"));
        let x = &s("1") + &w;
        assert_eq!(&x * &x.inv(), Scalar::one());
        assert_eq!(&(&x - &w) - &s("1"), Scalar::zero());
        assert!((w.to_complex().re - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn canonical_vectors() {
        let v = canonical_projective(&[s("-2"), s("1"), s("-1")]).unwrap();
        assert_eq!(v, vec![s("2"), s("-1"), s("1")]);
        let v = canonical_projective(&[s("0"), s("3/2i"), s("3/2")]).unwrap();
        assert_eq!(v, vec![s("0"), s("1"), s("-i")]);
        let v = canonical_projective(&[s("2+2i"), s("4")]).unwrap();
        assert_eq!(v, vec![s("1"), s("1-1i")]);
        assert!(canonical_projective(&[s("0"), s("0")]).is_none());
    }

    #[test]
    fn rational_approximation() {
        assert_eq!(Scalar::approximate(Complex64::new(0.5, -1.0 / 3.0), 1000), s("1/2-1/3i"));
    }
}
