use hill_core::consts::{c0, cbrt3, cbrt9, three_4_3, x_crit};

use crate::blowup::{blowup_forward, energy_gap, polar_of, BlowupPoint};
use crate::polys::{decom1, r0, r1, r2, r3, t_sq, R0, R1, R2, R3};
use crate::quadratic::{f_q, w_h_w_cos2};
use crate::{ReductionError, Result};

fn den(x: f64, k: f64) -> f64 {
    1.0 + k * (3.0 * x.powi(3) - 1.0)
}

/// `(1-k)/(1+k(3x³-1)) · T(x)`, the energy gap divided by `(3^{-1/3}-x)²`.
fn gap_ratio(x: f64, k: f64) -> f64 {
    (1.0 - k) / den(x, k) * t_sq(x)
}

fn c5_poly(x: f64) -> f64 {
    -x.powi(-3) + three_4_3() / (x * x) - 2.0
}

/// `[C1, ..., C5]` with `d = C1 - C2 cosα - C3 sinα + C4 cos²α + C5 sin²α`.
pub fn c_funcs(x: f64, k: f64) -> [f64; 5] {
    let a = gap_ratio(x, k);
    let cross = 2.0 * x.sqrt() * (k - k * k).max(0.0).sqrt() / den(x, k) * t_sq(x) * (9.0 / (x * x) - 3.0 * x);
    [r0(x) + a * r1(x), cross, 2.0 * a.max(0.0).sqrt() * r2(x), a * r3(x), a * c5_poly(x)]
}

pub fn d_func(x: f64, k: f64, alpha: f64) -> f64 {
    let [c1, c2, c3, c4, c5] = c_funcs(x, k);
    let (s, c) = alpha.sin_cos();
    c1 - c2 * c - c3 * s + c4 * c * c + c5 * s * s
}

/// `36[(3√(1-k) sinα - 1)² + (√(2k) - √(6(1-k)) cosα)²]`.
pub fn d_corner_sos(k: f64, alpha: f64) -> f64 {
    let (s, c) = alpha.sin_cos();
    let a = 3.0 * (1.0 - k).sqrt() * s - 1.0;
    let b = (2.0 * k).sqrt() - (6.0 * (1.0 - k)).sqrt() * c;
    36.0 * (a * a + b * b)
}

/// `d(3^{-1/3}, k, α)`, cross-checked against the sum-of-squares form.
pub fn d_corner(k: f64, alpha: f64) -> Result<f64> {
    let raw = d_func(x_crit(), k, alpha);
    let sos = d_corner_sos(k, alpha);
    if (raw - sos).abs() > 1e-10 * sos.abs().max(1.0) {
        return Err(ReductionError::Domain(format!("corner forms disagree: {raw} vs {sos}")));
    }
    Ok(sos)
}

/// `(G, E, D)` at the point with blow-up coordinates `(x, k)` and critical energy `c0`.
pub fn chain_e_d_g(x: f64, k: f64, alpha: f64) -> Result<(f64, f64, f64)> {
    let q = polar_of(x, k)?.to_cartesian();
    let g = f_q(q, c0(), alpha)?;
    let (_, y) = blowup_forward(BlowupPoint { x, k })?;
    let y = y.clamp(0.0, 1.0);
    let b = 1.0 / x + 1.5 * x * x * y;
    let rho = energy_gap(x, k).max(0.0).sqrt();
    let sin_t = (1.0 - y).sqrt();
    let (sa, ca) = alpha.sin_cos();
    let (c2, s2) = (ca * ca, sa * sa);
    let lin_e = ca * (3.0 * x - 9.0 / (x * x)) * sin_t;
    let e = w_h_w_cos2(x, y)?
        + 2.0 * rho * (lin_e + sa * (-x.powi(-5) + 2.0 * b / x))
        + rho * rho * (c2 * (1.0 - 2.0 * b / (x * x)) + s2 * (-x.powi(-3) + 2.0 * b / (x * x) - 2.0));
    let d = decom1(x)
        + 2.0 * rho * (lin_e + sa * (-x.powi(-5) + three_4_3() / x))
        + rho * rho * (r1(x) + c2 * r3(x) + s2 * c5_poly(x));
    Ok((g, e, d))
}

/// `k(u) = 3u² - 2u³`.
pub fn k_of_u(u: f64) -> f64 {
    u * u * (3.0 - 2.0 * u)
}

/// Values of the abstract factors of `C1..C4` and their formal derivatives at `(x, u)`:
/// `a0 = (1+k(3x³-1))^{-1/2}`, `a1 = √(1-k)`, `a2 = √k`, `a3 = √T`, `a4 = √x(9/x² - 3x)`,
/// with `a1, a2` written in `u` so that they stay smooth at `u ∈ {0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FactorValues {
    pub a0: f64,
    pub a0x: f64,
    pub a0u: f64,
    pub a0xx: f64,
    pub a0xu: f64,
    pub a1: f64,
    pub a1u: f64,
    pub a2: f64,
    pub a2u: f64,
    pub a3: f64,
    pub a3x: f64,
    pub a3xx: f64,
    pub a4: f64,
    pub a4x: f64,
    pub a4xx: f64,
}

impl FactorValues {
    pub fn at(x: f64, u: f64) -> Self {
        let k = k_of_u(u);
        let kp = 6.0 * u * (1.0 - u);
        let x3 = x.powi(3);
        let s = den(x, k);
        let (s12, s32, s52) = (s.sqrt(), s.powf(1.5), s.powf(2.5));
        let sx = 9.0 * k * x * x;
        let su = kp * (3.0 * x3 - 1.0);
        let a3 = t_sq(x).sqrt();
        Self {
            a0: 1.0 / s12,
            a0x: -0.5 * sx / s32,
            a0u: -0.5 * su / s32,
            a0xx: 0.75 * sx * sx / s52 - 0.5 * 18.0 * k * x / s32,
            a0xu: 0.75 * sx * su / s52 - 0.5 * 9.0 * kp * x * x / s32,
            a1: (1.0 - u) * (1.0 + 2.0 * u).sqrt(),
            a1u: -3.0 * u / (1.0 + 2.0 * u).sqrt(),
            a2: u * (3.0 - 2.0 * u).sqrt(),
            a2u: (3.0 - 3.0 * u) / (3.0 - 2.0 * u).sqrt(),
            a3,
            a3x: -cbrt9() / (x * x * a3),
            a3xx: 2.0 * cbrt9() / (x3 * a3) - 3.0 * cbrt3() / (x.powi(4) * a3.powi(3)),
            a4: 9.0 * x.powf(-1.5) - 3.0 * x.powf(1.5),
            a4x: -13.5 * x.powf(-2.5) - 4.5 * x.sqrt(),
            a4xx: 33.75 * x.powf(-3.5) - 2.25 / x.sqrt(),
        }
    }
}

/// The `x`-dependent parts of `∂C_i/∂x`, so that sweeping `k` along a fixed `x` costs
/// one square root and a division per point.
#[derive(Debug, Clone, Copy)]
pub struct DcDxRow {
    cubic: f64,
    x2: f64,
    r0x: f64,
    r1: f64,
    r1x: f64,
    r2: f64,
    r2x: f64,
    r3: f64,
    r3x: f64,
    a3: f64,
    a3x: f64,
    a4: f64,
    a4x: f64,
}

impl DcDxRow {
    pub fn new(x: f64) -> Self {
        let a3 = t_sq(x).sqrt();
        Self {
            cubic: 3.0 * x.powi(3) - 1.0,
            x2: x * x,
            r0x: R0.deriv(x),
            r1: r1(x),
            r1x: R1.deriv(x),
            r2: r2(x),
            r2x: R2.deriv(x),
            r3: r3(x),
            r3x: R3.deriv(x),
            a3,
            a3x: -cbrt9() / (x * x * a3),
            a4: 9.0 * x.powf(-1.5) - 3.0 * x.powf(1.5),
            a4x: -13.5 * x.powf(-2.5) - 4.5 * x.sqrt(),
        }
    }

    /// `[∂C1/∂x, ∂C2/∂x, ∂C3/∂x, ∂C4/∂x]` at `k`, by the product rule over the factors.
    pub fn dc_dx(&self, k: f64) -> [f64; 4] {
        let s = 1.0 + k * self.cubic;
        let a0 = 1.0 / s.sqrt();
        let a0x = -4.5 * k * self.x2 * a0 / s;
        let a1 = (1.0 - k).max(0.0).sqrt();
        let a2 = k.max(0.0).sqrt();
        let (a3, a3x, a4, a4x) = (self.a3, self.a3x, self.a4, self.a4x);
        let big_a = a0 * a0 * a1 * a1 * a3 * a3;
        let big_ax = a1 * a1 * (2.0 * a0 * a0x * a3 * a3 + 2.0 * a0 * a0 * a3 * a3x);
        [
            self.r0x + big_ax * self.r1 + big_a * self.r1x,
            2.0 * a1 * a2 * (2.0 * a0 * a0x * a3 * a3 * a4 + 2.0 * a0 * a0 * a3 * a3x * a4 + a0 * a0 * a3 * a3 * a4x),
            2.0 * a1 * (a0x * a3 * self.r2 + a0 * a3x * self.r2 + a0 * a3 * self.r2x),
            big_ax * self.r3 + big_a * self.r3x,
        ]
    }

    /// `F` at `k`.
    pub fn f(&self, k: f64) -> f64 {
        let [d1, d2, d3, d4] = self.dc_dx(k);
        d1 - d2 - d3 + d4
    }
}

/// `[∂C1/∂x, ∂C2/∂x, ∂C3/∂x, ∂C4/∂x]`.
pub fn dc_dx(x: f64, k: f64) -> [f64; 4] {
    DcDxRow::new(x).dc_dx(k)
}

/// `F(x, u) = ∂C1/∂x - ∂C2/∂x - ∂C3/∂x + ∂C4/∂x` at `k = k(u)`.
pub fn f_xu(x: f64, u: f64) -> f64 {
    DcDxRow::new(x).f(k_of_u(u))
}

/// The printed closed form of `∂C2/∂x`.
pub fn dc2_dx_closed(x: f64, k: f64) -> f64 {
    let c = cbrt9();
    let s = den(x, k);
    let bracket = 27.0 * x.powi(7) * k + 30.0 * c * x.powi(6) * k
        - 234.0 * x.powi(4) * k
        - 9.0 * x.powi(4)
        - 196.0 * c * x.powi(3) * k
        - 2.0 * c * x.powi(3)
        + (27.0 * x * k - 27.0 * x)
        + (30.0 * c * k - 30.0 * c);
    3.0 * (k - k * k).max(0.0).sqrt() / (x.powf(3.5) * s * s) * bracket
}

/// The printed closed form of `∂C3/∂x`; `0` at `k = 1`, where `C3` vanishes identically.
pub fn dc3_dx_closed(x: f64, k: f64) -> f64 {
    let s = den(x, k);
    let t = t_sq(x);
    let a = (1.0 - k) * t / s;
    if a <= 0.0 {
        return 0.0;
    }
    let c1 = cbrt3();
    let c2 = cbrt9();
    let r2x = -4.0 * c2 / x.powi(5) - 5.0 * c1 / x.powi(6) - 9.0 / x.powi(4) - 6.0 * c1 / x.powi(3);
    let ax = -9.0 * x * x * (k - k * k) * t / (s * s) - 2.0 * c2 * (1.0 - k) / (x * x * s);
    2.0 * r2x * a.sqrt() + r2(x) * ax / a.sqrt()
}

/// The printed closed form of `∂/∂x ((C4 - C5)/(1-k))`.
pub fn dc45_dx_over_1mk(x: f64, k: f64) -> f64 {
    let s = den(x, k);
    let t = t_sq(x);
    let p = 3.0 - 2.0 * three_4_3() / (x * x) + x.powi(-3);
    -9.0 * k * x * x / (s * s) * t * p - 2.0 * cbrt9() / (x * x) / s * p
        + t / s * (4.0 * three_4_3() / x.powi(3) - 3.0 / x.powi(4))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn c2_vanishes_at_ends() {
        for x in [0.63, 0.66, x_crit()] {
            assert_eq!(c_funcs(x, 0.0)[1], 0.0);
            assert_eq!(c_funcs(x, 1.0)[1], 0.0);
        }
    }

    #[test]
    fn c4_is_non_positive() {
        for i in 0..=50 {
            for j in 0..=50 {
                let x = 0.54 + (x_crit() - 0.54) * i as f64 / 50.0;
                assert!(c_funcs(x, j as f64 / 50.0)[3] <= 0.0);
            }
        }
    }

    #[test]
    fn corner_examples() {
        assert_abs_diff_eq!(d_corner(2.0 / 3.0, (1.0f64 / 3.0).sqrt().asin()).unwrap(), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(d_corner(0.0, FRAC_PI_2).unwrap(), 144.0, epsilon = 1e-12);
        assert_abs_diff_eq!(d_func(x_crit(), 0.0, FRAC_PI_2), 144.0, epsilon = 1e-9);
    }

    #[test]
    fn c45_claim_positive() {
        for i in 0..=40 {
            for j in 0..=40 {
                let x = 0.63 + (x_crit() - 0.63) * i as f64 / 40.0;
                assert!(dc45_dx_over_1mk(x, j as f64 / 40.0) > 0.0);
            }
        }
    }

    #[test]
    fn factor_values_match_dc_dx() {
        let (x, u) = (0.65, 0.4);
        let f = FactorValues::at(x, u);
        let k = k_of_u(u);
        assert_abs_diff_eq!(f.a1, (1.0 - k).sqrt(), epsilon = 1e-14);
        assert_abs_diff_eq!(f.a2, k.sqrt(), epsilon = 1e-14);
        assert_abs_diff_eq!(f.a3 * f.a3, t_sq(x), epsilon = 1e-13);
    }
}
