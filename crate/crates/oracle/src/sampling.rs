use std::f64::consts::FRAC_PI_2;

use hill_core::consts::{c0, x_crit};
use hill_core::{in_hill_region, pointwise_level, EnergyParam};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::Result;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A point of the first-quadrant Hill region outside `|q| < 0.54` and an energy
/// offset `c ∈ (c0, b(q))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Admissible {
    pub q: [f64; 2],
    pub c: EnergyParam,
}

/// Rejection sampling in polar coordinates. `c` stays a relative `1e-9` below
/// `b(q)` so that the disk radius is positive.
pub fn sample_admissible(rng: &mut impl Rng, r_min: f64) -> Result<Admissible> {
    loop {
        let r = rng.gen_range(r_min..x_crit());
        let theta = rng.gen_range(0.0..FRAC_PI_2);
        let q = [r * theta.cos(), r * theta.sin()];
        if !in_hill_region(q)? {
            continue;
        }
        let b = pointwise_level(q)?;
        let hi = b * (1.0 - 1e-9);
        if hi <= c0() {
            continue;
        }
        let c = rng.gen_range(c0()..hi);
        if let Ok(c) = EnergyParam::new(c) {
            return Ok(Admissible { q, c });
        }
    }
}

/// `(p, c)` with `|p| ≤ p_max` uniform in the disk and `c ∈ (c0, c0 + dc]`.
pub fn sample_momentum(rng: &mut impl Rng, p_max: f64, dc: f64) -> ([f64; 2], EnergyParam) {
    loop {
        let r = p_max * rng.gen_range(0.0f64..=1.0).sqrt();
        let t = rng.gen_range(0.0..std::f64::consts::TAU);
        let c = c0() + dc * (1.0 - rng.gen_range(0.0..1.0));
        if let Ok(c) = EnergyParam::new(c) {
            return ([r * t.cos(), r * t.sin()], c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_admissible_and_reproducible() {
        let mut a = rng_from_seed(7);
        let mut b = rng_from_seed(7);
        for _ in 0..200 {
            let s = sample_admissible(&mut a, 0.54).unwrap();
            assert_eq!(s, sample_admissible(&mut b, 0.54).unwrap());
            assert!(s.q[0] >= 0.0 && s.q[1] >= 0.0);
            assert!(s.q[0].hypot(s.q[1]) >= 0.54);
            assert!(s.c.value() < pointwise_level(s.q).unwrap());
        }
    }

    #[test]
    fn momenta_respect_bounds() {
        let mut rng = rng_from_seed(1);
        for _ in 0..200 {
            let (p, c) = sample_momentum(&mut rng, 5.0, 2.0);
            assert!(p[0].hypot(p[1]) <= 5.0);
            assert!(c.value() > c0() && c.value() <= c0() + 2.0);
        }
    }
}
