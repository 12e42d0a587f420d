use std::f64::consts::SQRT_2;

use hill_core::consts::{cbrt9, three_4_3};

use crate::blowup::{blowup_forward, energy_gap, BlowupPoint};
use crate::laurent::Laurent;
use crate::quadratic::w_h_w_cos2;
use crate::{ReductionError, Result};

/// `(3^{-1/3}-x)² · R0 = 15/x⁷ - 39·3^{1/3}/x⁶ + ...`, the `wᵗℋw` part of the corner expansion.
pub const R0: Laurent =
    Laurent(&[(15, 1, 2, -7), (-27, 1, 0, -6), (-18, 1, 1, -5), (5, 1, 2, -4), (12, 1, 0, -3), (9, 1, 1, -2)]);
pub const R1: Laurent = Laurent(&[(-13, 1, 0, -6), (18, 1, 1, -5), (-8, 1, 0, -3), (3, 1, 0, 0)]);
/// `(3^{-1/3}-x) · R2 = 1/x⁵ - 3^{4/3}/x`.
pub const R2: Laurent = Laurent(&[(1, 1, 1, -5), (1, 1, 2, -4), (3, 1, 0, -3), (3, 1, 1, -2)]);
pub const R3: Laurent = Laurent(&[(1, 1, 0, 0), (-3, 1, 1, -2)]);
const F9: Laurent = Laurent(&[(-13, 1, 0, -6), (18, 1, 1, -5), (-19, 2, 0, -3), (6, 1, 1, -2), (-1, 2, 0, 0)]);
const H: Laurent = Laurent(&[(-13, 1, 0, -6), (18, 1, 1, -5), (-15, 2, 0, -3), (-6, 1, 1, -2), (11, 2, 0, 0)]);
const DECOM1: Laurent = Laurent(&[
    (15, 1, 0, -7),
    (-39, 1, 1, -6),
    (27, 1, 2, -5),
    (14, 1, 0, -4),
    (-24, 1, 1, -3),
    (-6, 1, 0, -1),
    (9, 1, 1, 0),
]);

pub fn r0(x: f64) -> f64 {
    R0.eval(x)
}

pub fn r1(x: f64) -> f64 {
    R1.eval(x)
}

pub fn r2(x: f64) -> f64 {
    R2.eval(x)
}

pub fn r3(x: f64) -> f64 {
    R3.eval(x)
}

/// Part of `wᵗℋw` at `(x, y)` free of the energy gap; equals `(3^{-1/3}-x)² r0(x)`.
pub fn decom1(x: f64) -> f64 {
    DECOM1.eval(x)
}

/// Leading coefficient of `g_x`.
pub fn gx_leading(x: f64) -> f64 {
    F9.eval(x)
}

/// Coefficient of the energy-gap term in the lower tangent-line bound.
pub fn h_case(x: f64) -> f64 {
    H.eval(x)
}

/// `3 + 2·3^{2/3}/x`, the value of `(2b - 3^{4/3}) / (3^{-1/3}-x)²` at `k = 0`.
pub fn t_sq(x: f64) -> f64 {
    3.0 + 2.0 * cbrt9() / x
}

/// `g_x(t) = a t² + b t + c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GxCoeffs {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

pub fn g_x_coeffs(x: f64) -> GxCoeffs {
    GxCoeffs { a: gx_leading(x), b: -2.0 * SQRT_2 * r2(x), c: r0(x) }
}

pub fn g_x_eval(x: f64, t: f64) -> f64 {
    let g = g_x_coeffs(x);
    (g.a * t + g.b) * t + g.c
}

/// Quarter discriminant `2 r2² - f9 r0` of `g_x`.
pub fn g_x_discriminant(x: f64) -> f64 {
    2.0 * r2(x).powi(2) - gx_leading(x) * r0(x)
}

/// `g_x′(√T)`.
pub fn f11(x: f64) -> f64 {
    2.0 * gx_leading(x) * t_sq(x).sqrt() - 2.0 * SQRT_2 * r2(x)
}

/// `g_x(√T)`.
pub fn f12(x: f64) -> f64 {
    g_x_eval(x, t_sq(x).sqrt())
}

/// `1/r⁷ - 3/r⁴ - 27/(4r) - 2r²`, a lower bound for `vᵗℋv` at `p = 0`.
pub fn warmup_bound(r: f64) -> f64 {
    r.powi(-7) - 3.0 / r.powi(4) - 6.75 / r - 2.0 * r * r
}

/// Lower bound for `(w+s)ᵗℋ(w+s)` over `|q| = r` and `|s|` at most the critical disk radius.
pub fn prop44_lower_bound(r: f64) -> Result<f64> {
    let rad = 3.0 * r * r + 2.0 / r - three_4_3();
    if !(r > 0.0) || rad < 0.0 {
        return Err(ReductionError::Domain(format!("radicand {rad:e} at r = {r}")));
    }
    Ok(11.0 / 12.0 / r.powi(7) - 10.0 / 3.0 / r.powi(4) - 29.0 / 6.0 / r + 4.0 * r * r
        - 0.75 * r.powi(5)
        - 2.0 * (r.powi(-5) - 2.0 / (r * r)) * rad.sqrt()
        - (2.0 + 2.0 / r.powi(3)) * rad)
}

struct Corner {
    whw: f64,
    rho: f64,
    b: f64,
    cs: f64,
}

fn corner(x: f64, k: f64) -> Result<Corner> {
    let (_, y) = blowup_forward(BlowupPoint { x, k })?;
    let y = y.clamp(0.0, 1.0);
    Ok(Corner {
        whw: w_h_w_cos2(x, y)?,
        rho: energy_gap(x, k).max(0.0).sqrt(),
        b: 1.0 / x + 1.5 * x * x * y,
        cs: (y * (1.0 - y)).sqrt(),
    })
}

/// Tangent line of `f_q` at `π/4`, evaluated at `π/4 + 1`, at the critical energy.
pub fn l_plus(x: f64, k: f64) -> Result<f64> {
    let Corner { whw, rho, b, cs } = corner(x, k)?;
    Ok(whw
        + 2.0 * SQRT_2 * rho * (-x.powi(-5) + 2.0 * b / x)
        + rho * rho * (-3.5 - 1.5 / x.powi(3) + 4.0 * b / (x * x) + 3.0 * cs))
}

/// Tangent line of `f_q` at `π/4`, evaluated at `π/4 - 1`, at the critical energy.
pub fn l_minus(x: f64, k: f64) -> Result<f64> {
    let Corner { whw, rho, b, cs } = corner(x, k)?;
    Ok(whw
        + 2.0 * SQRT_2 * rho * (3.0 * x - 9.0 / (x * x)) * cs
        + rho * rho * (2.5 + 0.5 / x.powi(3) - 4.0 * b / (x * x) + 3.0 * cs))
}

fn den(x: f64, k: f64) -> f64 {
    1.0 + k * (3.0 * x.powi(3) - 1.0)
}

/// `g_x(√((1-k)T/den))`; `l_plus ≥ (3^{-1/3}-x)²` times this.
pub fn l_plus_bracket(x: f64, k: f64) -> f64 {
    g_x_eval(x, ((1.0 - k) * t_sq(x) / den(x, k)).sqrt())
}

/// Bracket bounding `l_minus / (3^{-1/3}-x)²` from below.
pub fn l_minus_bracket(x: f64, k: f64) -> f64 {
    let t = t_sq(x);
    let d = den(x, k);
    r0(x)
        + 2.0 * SQRT_2 * x.sqrt() * (k - k * k).max(0.0).sqrt() / d * t * (3.0 * x - 9.0 / (x * x))
        + (1.0 - k) / d * t * h_case(x)
}

/// `k`-interval of case `i`.
pub fn case_interval(i: u8) -> Result<(f64, f64)> {
    Ok(match i {
        1 => (0.0, 1.0 / 3.0),
        2 => (1.0 / 3.0, 2.0 / 3.0),
        3 => (2.0 / 3.0, 0.75),
        4 => (0.75, 0.8),
        5 => (0.8, 1.0),
        _ => return Err(ReductionError::InvalidCase(i)),
    })
}

/// `(U_i, m_i, M_i)`: a maximum of the cross term and bracketing values of the gap term over case `i`.
pub fn case_u_m_big_m(i: u8, x: f64) -> Result<(f64, f64, f64)> {
    let t = t_sq(x);
    let x3 = x.powi(3);
    Ok(match i {
        1 => ((2.0 * x).sqrt() / (3.0 * x3 + 2.0) * t, 2.0 / (3.0 * x3 + 2.0) * t, t),
        2 => (t / (2.0 * 3f64.sqrt() * x), t / (6.0 * x3 + 1.0), 2.0 / (3.0 * x3 + 2.0) * t),
        3 => ((2.0 * x).sqrt() / (6.0 * x3 + 1.0) * t, t / (9.0 * x3 + 1.0), t / (6.0 * x3 + 1.0)),
        4 => ((3.0 * x).sqrt() / (9.0 * x3 + 1.0) * t, t / (12.0 * x3 + 1.0), t / (9.0 * x3 + 1.0)),
        5 => (2.0 * x.sqrt() / (12.0 * x3 + 1.0) * t, 0.0, t / (12.0 * x3 + 1.0)),
        _ => return Err(ReductionError::InvalidCase(i)),
    })
}

/// `(L_i^m(x), L_i^M(x))`.
pub fn case_bounds(i: u8, x: f64) -> Result<(f64, f64)> {
    let (u, m, big_m) = case_u_m_big_m(i, x)?;
    let base = r0(x) + 2.0 * SQRT_2 * u * (3.0 * x - 9.0 / (x * x));
    let h = h_case(x);
    Ok((base + m * h, base + big_m * h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use hill_core::consts::{cbrt3, x_crit};

    fn grid(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
        (0..n).map(move |i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
    }

    #[test]
    fn decompositions() {
        for x in grid(0.3, 0.69, 50) {
            let g = x_crit() - x;
            assert_abs_diff_eq!(decom1(x), g * g * r0(x), epsilon = 1e-9 * decom1(x).abs().max(1.0));
            assert_abs_diff_eq!(-x.powi(-5) + 3.0 * cbrt3() / x, -g * r2(x), epsilon = 1e-9 * r2(x).abs());
        }
    }

    #[test]
    fn discriminant_matches_coefficients() {
        for x in grid(0.54, 0.69, 20) {
            let g = g_x_coeffs(x);
            assert_abs_diff_eq!(
                g.b * g.b - 4.0 * g.a * g.c,
                4.0 * g_x_discriminant(x),
                epsilon = 1e-10 * g.c.abs() * g.a.abs()
            );
        }
    }

    #[test]
    fn figure_signs() {
        for x in grid(0.54, x_crit() - 1e-9, 200) {
            assert!(gx_leading(x) > 0.0, "f9({x})");
        }
        for x in grid(0.56, x_crit() - 1e-9, 200) {
            assert!(g_x_discriminant(x) < 0.0, "D({x})");
        }
        for x in grid(0.54, 0.56, 50) {
            assert!(f12(x) > 0.0);
        }
    }

    #[test]
    fn prop44_examples() {
        assert!(prop44_lower_bound(0.54).unwrap() > 0.0);
        let r = 0.2f64;
        let rad = 3.0 * 0.04 + 10.0 - three_4_3();
        let hand = 11.0 / 12.0 * 78125.0 - 10.0 / 3.0 * 625.0 - 29.0 / 6.0 * 5.0 + 0.16
            - 0.75 * 0.00032
            - 2.0 * (3125.0 - 50.0) * rad.sqrt()
            - 252.0 * rad;
        assert_abs_diff_eq!(prop44_lower_bound(r).unwrap(), hand, epsilon = 1e-8 * hand.abs());
        assert!(prop44_lower_bound(0.0).is_err());
    }

    #[test]
    fn case_bounds_positive() {
        for i in 1..=5 {
            for x in grid(0.54, 0.63, 200) {
                let (lm, big) = case_bounds(i, x).unwrap();
                assert!(lm > 0.0 && big > 0.0, "case {i} at {x}: {lm} {big}");
            }
        }
        assert!(case_bounds(6, 0.6).is_err());
    }

    #[test]
    fn case_one_maximum_at_one_third() {
        let x = 0.58;
        let (u, _, _) = case_u_m_big_m(1, x).unwrap();
        let k: f64 = 1.0 / 3.0;
        let term = x.sqrt() * (k - k * k).sqrt() / den(x, k) * t_sq(x);
        assert_abs_diff_eq!(u, term, epsilon = 1e-12);
    }
}
