use hill_core::{fiber_curve, hessian, tangent_v, winding_number, EnergyParam, FiberCurve};

use crate::{OracleError, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct ConvexityVerdict {
    pub convex: bool,
    pub winding: i64,
    /// First vertex whose turn has the wrong sign (or is degenerate).
    pub first_violation: Option<usize>,
    /// Smallest and largest normalized turn `(e_i × e_{i+1}) / (|e_i||e_{i+1}|)`.
    pub turn_range: (f64, f64),
}

/// Strict convexity of the closed polygon through `pts`: every turn has the same
/// sign and the polygon winds once around the origin.
pub fn polygon_convexity(pts: &[[f64; 2]]) -> Result<ConvexityVerdict> {
    let n = pts.len();
    if n < 3 {
        return Err(OracleError::InvalidArgument(format!("{n} vertices")));
    }
    let turn = |i: usize| {
        let (a, b, c) = (pts[i], pts[(i + 1) % n], pts[(i + 2) % n]);
        let e1 = [b[0] - a[0], b[1] - a[1]];
        let e2 = [c[0] - b[0], c[1] - b[1]];
        (e1[0] * e2[1] - e1[1] * e2[0]) / (e1[0].hypot(e1[1]) * e2[0].hypot(e2[1]))
    };
    let turns: Vec<f64> = (0..n).map(turn).collect();
    let sign = turns.iter().map(|t| t.signum()).sum::<f64>().signum();
    let first_violation = turns.iter().position(|&t| !(t * sign > 0.0)).map(|i| (i + 1) % n);
    let winding = winding_number(pts);
    let range = turns.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &t| (lo.min(t), hi.max(t)));
    Ok(ConvexityVerdict {
        convex: first_violation.is_none() && winding.abs() == 1,
        winding,
        first_violation,
        turn_range: range,
    })
}

pub fn fiber_convexity_check(curve: &FiberCurve) -> Result<ConvexityVerdict> {
    if curve.samples.len() < 64 {
        return Err(OracleError::InvalidArgument(format!("need at least 64 samples, got {}", curve.samples.len())));
    }
    polygon_convexity(&curve.points())
}

/// `max | |q|(|p|²/2 + c) - 1 |` over the fiber at `p = (p_mag, 0)`.
pub fn limit_fiber_deviation(c: EnergyParam, p_mag: f64) -> Result<f64> {
    let curve = fiber_curve([p_mag, 0.0], c, 256)?;
    let k = 0.5 * p_mag * p_mag + c.value();
    Ok(curve.points().iter().map(|q| (q[0].hypot(q[1]) * k - 1.0).abs()).fold(0.0, f64::max))
}

/// Minimum of `vᵗℋv` along the fiber over `p = 0`, `v` the level-curve tangent.
pub fn warmup_min(c: EnergyParam, n: usize) -> Result<f64> {
    let curve = fiber_curve([0.0, 0.0], c, n)?;
    let mut best = f64::INFINITY;
    for q in curve.points() {
        best = best.min(hessian(q)?.quad(tangent_v(q)?));
    }
    Ok(best)
}
