//! Dense univariate and bivariate polynomials used for GCD computations.

use super::scalar::Scalar;

/// Univariate polynomial, coefficients in ascending degree, trimmed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly1 {
    c: Vec<Scalar>,
}

impl Poly1 {
    pub fn new(mut c: Vec<Scalar>) -> Self {
        while c.last().is_some_and(|v| v.is_zero()) {
            c.pop();
        }
        Poly1 { c }
    }

    pub fn zero() -> Self {
        Poly1 { c: Vec::new() }
    }

    pub fn one() -> Self {
        Poly1::new(vec![Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Scalar {
        self.c.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add(&self, o: &Poly1) -> Poly1 {
        let n = self.c.len().max(o.c.len());
        let z = Scalar::zero();
        Poly1::new(
            (0..n)
                .map(|k| self.c.get(k).unwrap_or(&z) + o.c.get(k).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, o: &Poly1) -> Poly1 {
        self.add(&o.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Poly1 {
        Poly1::new(self.c.iter().map(|v| v * s).collect())
    }

    pub fn mul(&self, o: &Poly1) -> Poly1 {
        if self.is_zero() || o.is_zero() {
            return Poly1::zero();
        }
        let mut out = vec![Scalar::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly1::new(out)
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        self.c.iter().rev().fold(Scalar::zero(), |acc, v| &(&acc * t) + v)
    }

    pub fn div_rem(&self, d: &Poly1) -> (Poly1, Poly1) {
        let dd = d.degree().expect("division by zero polynomial");
        let li = d.lead().inv();
        let mut r = self.c.clone();
        let mut q = vec![Scalar::zero(); self.c.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = &r[r.len() - 1] * &li;
            for (j, dv) in d.c.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&c * dv);
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(|v| v.is_zero()) {
                r.pop();
            }
        }
        (Poly1::new(q), Poly1::new(r))
    }

    pub fn monic(&self) -> Poly1 {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().inv())
    }

    /// Monic greatest common divisor by Euclid's algorithm.
    pub fn gcd(&self, o: &Poly1) -> Poly1 {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Polynomial in `y` whose coefficients are polynomials in `x`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly2 {
    c: Vec<Poly1>,
}

impl Poly2 {
    pub fn new(mut c: Vec<Poly1>) -> Self {
        while c.last().is_some_and(|v| v.is_zero()) {
            c.pop();
        }
        Poly2 { c }
    }

    pub fn coeffs(&self) -> &[Poly1] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn deg_y(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn total_degree(&self) -> u32 {
        self.c
            .iter()
            .enumerate()
            .filter_map(|(k, p)| p.degree().map(|d| (d + k) as u32))
            .max()
            .unwrap_or(0)
    }

    /// Gcd of the coefficients in `x`.
    fn content(&self) -> Poly1 {
        self.c.iter().fold(Poly1::zero(), |g, p| g.gcd(p))
    }

    fn div_poly1(&self, d: &Poly1) -> Poly2 {
        Poly2::new(
            self.c
                .iter()
                .map(|p| {
                    let (q, r) = p.div_rem(d);
                    debug_assert!(r.is_zero(), "content does not divide");
                    q
                })
                .collect(),
        )
    }

    fn mul_poly1(&self, m: &Poly1) -> Poly2 {
        Poly2::new(self.c.iter().map(|p| p.mul(m)).collect())
    }

    fn primitive(&self) -> Poly2 {
        if self.is_zero() {
            return self.clone();
        }
        self.div_poly1(&self.content())
    }

    /// Pseudo-remainder of `self` by `b` with respect to `y`.
    fn prem(&self, b: &Poly2) -> Poly2 {
        let db = b.deg_y().expect("nonzero divisor");
        let lb = b.c[db].clone();
        let mut r = self.clone();
        while let Some(dr) = r.deg_y() {
            if dr < db {
                break;
            }
            let lr = r.c[dr].clone();
            let shift = dr - db;
            let mut next: Vec<Poly1> = r.c.iter().map(|p| p.mul(&lb)).collect();
            for (j, bj) in b.c.iter().enumerate() {
                next[j + shift] = next[j + shift].sub(&bj.mul(&lr));
            }
            r = Poly2::new(next);
        }
        r
    }

    /// Greatest common divisor up to a scalar, via contents and a primitive
    /// pseudo-remainder sequence.
    pub fn gcd(&self, o: &Poly2) -> Poly2 {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let c = self.content().gcd(&o.content());
        let (mut a, mut b) = (self.primitive(), o.primitive());
        if a.deg_y() < b.deg_y() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.deg_y() == Some(0) {
                // b is a nonzero polynomial in x alone and primitive: a unit.
                return Poly2::new(vec![c]);
            }
            let r = a.prem(&b);
            if r.is_zero() {
                return b.primitive().mul_poly1(&c);
            }
            a = b;
            b = r.primitive();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly1 {
        Poly1::new(c.iter().map(|&v| Scalar::from_int(v)).collect())
    }

    #[test]
    fn univariate_gcd() {
        // (t - 1)(t + 2) and (t - 1)(t - 3)
        let a = p(&[-2, 1, 1]);
        let b = p(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(a.gcd(&p(&[5])), p(&[1]));
    }

    #[test]
    fn division_with_remainder() {
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[1, 1]));
        assert_eq!(q, p(&[-1, 1]));
        assert_eq!(r, p(&[2]));
    }
}
