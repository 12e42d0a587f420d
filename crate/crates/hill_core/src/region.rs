use crate::consts::{c0, q2_max, x_crit};
use crate::{norm, HillError, Result};

/// Pointwise level `b(q) = 1/|q| + (3/2) q1²`; `q` lies on the Hill boundary of level `b(q)`.
pub fn pointwise_level(q: [f64; 2]) -> Result<f64> {
    let r = norm(q)?;
    Ok(1.0 / r + 1.5 * q[0] * q[0])
}

/// `f_{b,θ}(r) = (3/2) cos²θ r³ - b r + 1`
pub fn cubic_residual(b: f64, theta: f64, r: f64) -> f64 {
    let c = theta.cos();
    1.5 * c * c * r * r * r - b * r + 1.0
}

/// Smallest positive root `r_{b,θ}` of the polar Hill boundary cubic.
///
/// On `(0, r*)`, with `r* = sqrt(2b / (9 cos²θ))` the minimiser of the cubic, the
/// cubic is strictly decreasing, so bisection needs no branch selection. It
/// returns `r*` itself at the double root.
pub fn cubic_smallest_positive_root(b: f64, theta: f64) -> Result<f64> {
    if !(b.is_finite() && b > 0.0) {
        return Err(HillError::InvalidArgument(format!("level b = {b}")));
    }
    let cos = theta.cos();
    let cos2 = cos * cos;
    // The cubic term is below the residual tolerance everywhere near 1/b.
    if cos2 < 1e-24 {
        return Ok(1.0 / b);
    }
    let f = |r: f64| 1.5 * cos2 * r * r * r - b * r + 1.0;
    let r_star = (2.0 * b / (9.0 * cos2)).sqrt();
    let f_star = f(r_star);
    if f_star > 1e-12 {
        return Err(HillError::NoRoot { b, theta });
    }
    if f_star >= 0.0 {
        return Ok(r_star);
    }
    let (mut lo, mut hi) = (0.0f64, r_star);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(if f(lo).abs() <= f(hi).abs() { lo } else { hi })
}

/// Membership in `ℜ = {b(q) > c0, |q1| < 3^{-1/3}, |q2| < 2·3^{-4/3}}`.
pub fn in_hill_region(q: [f64; 2]) -> Result<bool> {
    let b = pointwise_level(q)?;
    Ok(b > c0() && q[0].abs() < x_crit() && q[1].abs() < q2_max())
}

/// Radius of the momentum disk, `sqrt(3 q1² + 2/|q| - 2c)`.
pub fn disk_radius(q: [f64; 2], c: f64) -> Result<f64> {
    let rad = 2.0 * pointwise_level(q)? - 2.0 * c;
    if rad >= 0.0 {
        Ok(rad.sqrt())
    } else if rad > -1e-13 * c.abs().max(1.0) {
        // On the boundary curve up to rounding.
        Ok(0.0)
    } else {
        Err(HillError::NegativeRadicand(rad))
    }
}

/// Boundary of the region `{b(q) >= level}` sampled at `n` equally spaced angles.
pub fn hill_boundary(level: f64, n: usize) -> Result<Vec<(f64, [f64; 2])>> {
    (0..n)
        .map(|i| {
            let theta = std::f64::consts::TAU * i as f64 / n as f64;
            let r = cubic_smallest_positive_root(level, theta)?;
            Ok((theta, [r * theta.cos(), r * theta.sin()]))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consts::three_4_3;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn root_examples() {
        let b = 2.7;
        assert_abs_diff_eq!(cubic_smallest_positive_root(b, FRAC_PI_2).unwrap(), 1.0 / b, epsilon = 1e-12);
        let r = cubic_smallest_positive_root(c0(), 0.0).unwrap();
        assert_abs_diff_eq!(r, x_crit(), epsilon = 1e-7);
        let r = cubic_smallest_positive_root(3.0, 0.0).unwrap();
        assert!(cubic_residual(3.0, 0.0, r).abs() < 1e-12);
        assert!(r > 0.0 && r < (2.0 * 3.0 / 9.0f64).sqrt());
    }

    #[test]
    fn root_rejects_subcritical_level() {
        assert!(matches!(cubic_smallest_positive_root(2.0, 0.0), Err(HillError::NoRoot { .. })));
    }

    #[test]
    fn region_examples() {
        assert!(in_hill_region([0.1, 0.0]).unwrap());
        assert!(!in_hill_region([x_crit(), 0.0]).unwrap());
        let q = [0.5f64, 0.3];
        let b = 1.0 / q[0].hypot(q[1]) + 1.5 * 0.25;
        assert_eq!(in_hill_region(q).unwrap(), b > c0());
        assert!(in_hill_region([0.0, 0.0]).is_err());
    }

    #[test]
    fn disk_radius_examples() {
        // boundary of the c0 level at |q| = 0.54
        let r = 0.54f64;
        let cos2 = (three_4_3() - 2.0 / r) / (3.0 * r * r);
        assert!(cos2 > 0.7);
        let th = cos2.sqrt().acos();
        let q = [r * th.cos(), r * th.sin()];
        assert_abs_diff_eq!(disk_radius(q, c0()).unwrap(), 0.0, epsilon = 1e-7);
        assert_abs_diff_eq!(
            disk_radius([0.2, 0.0], c0()).unwrap(),
            (0.12f64 + 10.0 - three_4_3()).sqrt(),
            epsilon = 1e-14
        );
        assert!(matches!(disk_radius([0.6, 0.0], 5.0), Err(HillError::NegativeRadicand(_))));
    }

    #[test]
    fn boundary_has_expected_extent() {
        let pts = hill_boundary(c0(), 2000).unwrap();
        let max_q2 = pts.iter().map(|(_, q)| q[1].abs()).fold(0.0, f64::max);
        assert!(max_q2 < q2_max() + 1e-9, "max |q2| = {max_q2}");
    }
}
