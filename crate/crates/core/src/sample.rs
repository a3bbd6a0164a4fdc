//! Seeded random exact inputs for experiments and property suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Scalar;
use crate::eigenscheme::Cubic;
use crate::geometry::{Line, ProjPoint};

pub type Sampler = ChaCha8Rng;

pub fn sampler(seed: u64) -> Sampler {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer in `[-b, b]`.
pub fn int(rng: &mut Sampler, b: i64) -> i64 {
    rng.gen_range(-b..=b)
}

/// Rational integer in `[-b, b]`.
pub fn rational(rng: &mut Sampler, b: i64) -> Scalar {
    Scalar::from_int(int(rng, b))
}

/// Gaussian integer with both parts in `[-b, b]`.
pub fn gaussian(rng: &mut Sampler, b: i64) -> Scalar {
    Scalar::gaussian(int(rng, b), int(rng, b))
}

pub fn nonzero(rng: &mut Sampler, b: i64) -> Scalar {
    loop {
        let s = rational(rng, b);
        if !s.is_zero() {
            return s;
        }
    }
}

/// A point with rational integer coordinates in `[-b, b]`.
pub fn point(rng: &mut Sampler, b: i64) -> ProjPoint {
    loop {
        let c = [rational(rng, b), rational(rng, b), rational(rng, b)];
        if let Ok(p) = ProjPoint::new(c) {
            return p;
        }
    }
}

/// A point with Gaussian integer coordinates.
pub fn gaussian_point(rng: &mut Sampler, b: i64) -> ProjPoint {
    loop {
        let c = [gaussian(rng, b), gaussian(rng, b), gaussian(rng, b)];
        if let Ok(p) = ProjPoint::new(c) {
            return p;
        }
    }
}

/// A parameter `(u1 : u2)` with both entries nonzero.
pub fn param(rng: &mut Sampler, b: i64) -> (Scalar, Scalar) {
    (nonzero(rng, b), nonzero(rng, b))
}

pub fn line(rng: &mut Sampler, b: i64) -> Line {
    loop {
        if let Ok(l) = Line::new([rational(rng, b), rational(rng, b), rational(rng, b)]) {
            return l;
        }
    }
}

/// A cubic with rational integer coefficients in `[-b, b]`.
pub fn cubic(rng: &mut Sampler, b: i64) -> Cubic {
    loop {
        let c: Vec<Scalar> = (0..10).map(|_| rational(rng, b)).collect();
        if let Ok(f) = Cubic::from_coeffs(&c) {
            return f;
        }
    }
}

/// `n` distinct points on the line through `p` and `q`, other than `p`
/// and `q`.
pub fn points_on_line(rng: &mut Sampler, p: &ProjPoint, q: &ProjPoint, n: usize, b: i64) -> Vec<ProjPoint> {
    let mut out: Vec<ProjPoint> = Vec::new();
    while out.len() < n {
        let (u, v) = param(rng, b);
        let Ok(r) = crate::geometry::combine(&u, p, &v, q) else { continue };
        if r != *p && r != *q && !out.contains(&r) {
            out.push(r);
        }
    }
    out
}
