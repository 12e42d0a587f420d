use std::f64::consts::TAU;

use crate::region::cubic_smallest_positive_root;
use crate::{hamiltonian, EnergyParam, HillError, PhasePoint, Result};

/// Ray start; `-1/|q|` dominates `H_{c,p}` there for every admissible `(p, c)`.
const RAY_START: f64 = 1e-6;
const SCAN_STEPS: usize = 96;

/// Sampled bounded component of `{q : H_{c,p}(q) = 0}`.
#[derive(Debug, Clone, PartialEq)]
pub struct FiberCurve {
    pub p: [f64; 2],
    pub c: f64,
    /// `(theta, q, residual)` in increasing `theta`.
    pub samples: Vec<(f64, [f64; 2], f64)>,
}

impl FiberCurve {
    pub fn points(&self) -> Vec<[f64; 2]> {
        self.samples.iter().map(|s| s.1).collect()
    }

    pub fn max_residual(&self) -> f64 {
        self.samples.iter().map(|s| s.2.abs()).fold(0.0, f64::max)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("theta,q1,q2,residual\n");
        for (t, q, res) in &self.samples {
            out.push_str(&format!("{t:e},{:e},{:e},{res:e}\n", q[0], q[1]));
        }
        out
    }
}

/// Radial bisection of the fiber over `p` at `n` equally spaced angles.
///
/// Along each ray `H_{c,p}` is negative near the origin and non-negative on the
/// boundary of `{b >= c}`, where `H_{c,p} = |p + Jq|²/2`, so the scan interval
/// is `[1e-6, r_{c,θ}]` and the first sign change is kept.
pub fn fiber_curve(p: [f64; 2], c: EnergyParam, n: usize) -> Result<FiberCurve> {
    if n < 16 {
        return Err(HillError::InvalidArgument(format!("need at least 16 samples, got {n}")));
    }
    let c = c.value();
    let mut samples = Vec::with_capacity(n);
    for i in 0..n {
        let theta = TAU * i as f64 / n as f64;
        let (s, co) = theta.sin_cos();
        let h = |r: f64| hamiltonian(&PhasePoint::new(r * co, r * s, p[0], p[1]), c);
        let r_end = cubic_smallest_positive_root(c, theta)?;
        let Some((mut lo, mut hi)) = first_bracket(&h, r_end)? else {
            return Err(HillError::EmptyFiber);
        };
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if h(mid)? < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let (hl, hh) = (h(lo)?, h(hi)?);
        let (r, res) = if hl.abs() <= hh.abs() { (lo, hl) } else { (hi, hh) };
        samples.push((theta, [r * co, r * s], res));
    }
    Ok(FiberCurve { p, c, samples })
}

fn first_bracket(h: &impl Fn(f64) -> Result<f64>, r_end: f64) -> Result<Option<(f64, f64)>> {
    if h(RAY_START)? >= 0.0 || r_end <= RAY_START {
        return Ok(None);
    }
    let ratio = (r_end / RAY_START).powf(1.0 / SCAN_STEPS as f64);
    let mut prev = RAY_START;
    for k in 1..=SCAN_STEPS {
        let r = if k == SCAN_STEPS { r_end } else { RAY_START * ratio.powi(k as i32) };
        if h(r)? >= 0.0 {
            return Ok(Some((prev, r)));
        }
        prev = r;
    }
    Ok(None)
}

/// Winding number of the closed polygon through `pts` about the origin.
pub fn winding_number(pts: &[[f64; 2]]) -> i64 {
    let mut total = 0.0;
    for i in 0..pts.len() {
        let a = pts[i];
        let b = pts[(i + 1) % pts.len()];
        let cross = a[0] * b[1] - a[1] * b[0];
        let dot = a[0] * b[0] + a[1] * b[1];
        total += cross.atan2(dot);
    }
    (total / TAU).round() as i64
}

/// True when no two non-adjacent edges of the closed polygon intersect.
pub fn polygon_is_simple(pts: &[[f64; 2]]) -> bool {
    let n = pts.len();
    let orient = |a: [f64; 2], b: [f64; 2], c: [f64; 2]| (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    for i in 0..n {
        let (a, b) = (pts[i], pts[(i + 1) % n]);
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let (c, d) = (pts[j], pts[(j + 1) % n]);
            let d1 = orient(a, b, c);
            let d2 = orient(a, b, d);
            let d3 = orient(c, d, a);
            let d4 = orient(c, d, b);
            if d1 * d2 < 0.0 && d3 * d4 < 0.0 {
                return false;
            }
        }
    }
    true
}
