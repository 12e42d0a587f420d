use std::f64::consts::{FRAC_PI_2, TAU};

use hill_core::{disk_radius, hessian, pointwise_level, shifted_w, tangent_v};

use crate::{ReductionError, Result};

/// `(v(q)+p)ᵗ ℋ(q) (v(q)+p)`, the Hessian of `H_{c,p}` along the level-curve tangent.
pub fn tangential_hessian(q: [f64; 2], p: [f64; 2]) -> Result<f64> {
    let v = tangent_v(q)?;
    Ok(hessian(q)?.quad([v[0] + p[0], v[1] + p[1]]))
}

/// `wᵗℋw` in polar coordinates.
pub fn w_h_w_polar(r: f64, theta: f64) -> Result<f64> {
    let c = theta.cos();
    w_h_w_cos2(r, c * c)
}

/// `wᵗℋw` with `y = cos²θ`.
pub fn w_h_w_cos2(r: f64, y: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(ReductionError::Domain(format!("radius {r} must be positive")));
    }
    let s = 1.0 - y;
    Ok(r.powi(-7) - 5.0 * y / r.powi(4) - 2.0 * s / r.powi(4) + 3.0 * y / r - 27.0 * y * s / r + 9.0 * r * r * y)
}

struct Ingredients {
    whw: f64,
    rho: f64,
    cs: f64,
    r: f64,
    b: f64,
}

fn ingredients(q: [f64; 2], c: f64) -> Result<Ingredients> {
    let r = q[0].hypot(q[1]);
    let theta = q[1].atan2(q[0]);
    Ok(Ingredients {
        whw: w_h_w_polar(r, theta)?,
        rho: disk_radius(q, c)?,
        cs: theta.cos() * theta.sin(),
        r,
        b: pointwise_level(q)?,
    })
}

/// Restriction of the tangential Hessian to the boundary circle of the momentum
/// disk, `α` measured from the direction of `q`. Evaluated through the expanded
/// trigonometric form.
pub fn f_q(q: [f64; 2], c: f64, alpha: f64) -> Result<f64> {
    let Ingredients { whw, rho, cs, r, b } = ingredients(q, c)?;
    let (sa, ca) = alpha.sin_cos();
    Ok(whw
        + 2.0 * rho * (ca * (3.0 * r - 9.0 / (r * r)) * cs + sa * (-r.powi(-5) + 2.0 * b / r))
        + rho
            * rho
            * (ca * ca * (1.0 - 2.0 * b / (r * r))
                + sa * sa * (-r.powi(-3) + 2.0 * b / (r * r) - 2.0)
                + 6.0 * cs * ca * sa))
}

/// `f_q` as the quadratic form `(w+s)ᵗℋ(w+s)` with `s` on the disk boundary.
pub fn f_q_direct(q: [f64; 2], c: f64, alpha: f64) -> Result<f64> {
    let rho = disk_radius(q, c)?;
    let phi = q[1].atan2(q[0]) + alpha;
    let w = shifted_w(q)?;
    Ok(hessian(q)?.quad([w[0] + rho * phi.cos(), w[1] + rho * phi.sin()]))
}

/// `f_q′(α) = A1 sin2α + A2 cos2α + B1 sinα + B2 cosα`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigDerivCoeffs {
    pub a1: f64,
    pub a2: f64,
    pub b1: f64,
    pub b2: f64,
}

impl TrigDerivCoeffs {
    pub fn eval(&self, alpha: f64) -> f64 {
        self.a1 * (2.0 * alpha).sin() + self.a2 * (2.0 * alpha).cos() + self.b1 * alpha.sin() + self.b2 * alpha.cos()
    }
}

pub fn f_q_deriv_coeffs(q: [f64; 2], c: f64) -> Result<TrigDerivCoeffs> {
    let Ingredients { rho, cs, r, b, .. } = ingredients(q, c)?;
    let rho2 = rho * rho;
    Ok(TrigDerivCoeffs {
        a1: rho2 * (-r.powi(-3) + 4.0 * b / (r * r) - 3.0),
        a2: 6.0 * rho2 * cs,
        b1: 2.0 * rho * (9.0 / (r * r) - 3.0 * r) * cs,
        b2: 2.0 * rho * (-r.powi(-5) + 2.0 * b / r),
    })
}

pub fn f_q_deriv(q: [f64; 2], c: f64, alpha: f64) -> Result<f64> {
    Ok(f_q_deriv_coeffs(q, c)?.eval(alpha))
}

/// Minimum of `f_q` over an `n`-point grid of `[0, π/2]`.
pub fn min_f_q(q: [f64; 2], c: f64, n: usize) -> Result<f64> {
    let n = n.max(2);
    let mut best = f64::INFINITY;
    for i in 0..n {
        best = best.min(f_q(q, c, FRAC_PI_2 * i as f64 / (n - 1) as f64)?);
    }
    Ok(best)
}

/// `(α, f_q(α))` at the minimum over `[0, π/2]`: the best of an `n`-point grid,
/// refined by golden-section search between its neighbours.
pub fn argmin_f_q(q: [f64; 2], c: f64, n: usize) -> Result<(f64, f64)> {
    let n = n.max(3);
    let step = FRAC_PI_2 / (n - 1) as f64;
    let mut best = (0.0, f64::INFINITY);
    for i in 0..n {
        let a = step * i as f64;
        let v = f_q(q, c, a)?;
        if v < best.1 {
            best = (a, v);
        }
    }
    let (mut lo, mut hi) = ((best.0 - step).max(0.0), (best.0 + step).min(FRAC_PI_2));
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let (mut a, mut b) = (hi - g * (hi - lo), lo + g * (hi - lo));
    let (mut fa, mut fb) = (f_q(q, c, a)?, f_q(q, c, b)?);
    for _ in 0..80 {
        if fa < fb {
            hi = b;
            (b, fb) = (a, fa);
            a = hi - g * (hi - lo);
            fa = f_q(q, c, a)?;
        } else {
            lo = a;
            (a, fa) = (b, fb);
            b = lo + g * (hi - lo);
            fb = f_q(q, c, b)?;
        }
    }
    for (x, v) in [(a, fa), (b, fb)] {
        if v < best.1 {
            best = (x, v);
        }
    }
    Ok(best)
}

const ROOT_GRID: usize = 10_000;
/// Grid offsets, in units of the grid step, tried in turn when a sample lands on a root.
const ROOT_GRID_SHIFTS: [f64; 4] = [0.0, 0.5, 0.25, 0.618_033_988_749_895];

/// Number of sign changes of the trigonometric polynomial around the circle.
pub fn count_circle_roots(coeffs: &TrigDerivCoeffs) -> Result<usize> {
    let step = TAU / ROOT_GRID as f64;
    let mut nearest = 0.0;
    for shift in ROOT_GRID_SHIFTS {
        let vals: Vec<f64> = (0..ROOT_GRID).map(|i| coeffs.eval(step * (i as f64 + shift))).collect();
        if let Some(v) = vals.iter().find(|v| v.abs() < 1e-12) {
            nearest = *v;
            continue;
        }
        return Ok((0..ROOT_GRID).filter(|&i| (vals[i] > 0.0) != (vals[(i + 1) % ROOT_GRID] > 0.0)).count());
    }
    Err(ReductionError::Indeterminate(nearest))
}

/// `-(2 + 2/|q|³)`, a lower bound for the negative eigenvalue of `ℋ(q)`.
pub fn lambda_minus_bound(q: [f64; 2]) -> Result<f64> {
    let r = q[0].hypot(q[1]);
    if r == 0.0 {
        return Err(hill_core::HillError::Origin.into());
    }
    Ok(-(2.0 + 2.0 / r.powi(3)))
}

/// Negative eigenvalue of `ℋ(q)`.
pub fn lambda_minus(q: [f64; 2]) -> Result<f64> {
    Ok(hessian(q)?.eigenvalues().0)
}
