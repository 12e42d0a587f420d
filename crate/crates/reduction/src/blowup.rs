use hill_core::consts::{cbrt3, cbrt9, three_4_3, x_crit};
use hill_core::PolarPoint;

use crate::{ReductionError, Result};

/// Blow-up coordinates of the corner at the critical point: `x = |q|` and the
/// parameter `k`, with `k = 0` on the `q1`-axis and `k = 1` on the Hill boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlowupPoint {
    pub x: f64,
    pub k: f64,
}

fn check_unit(k: f64) -> Result<()> {
    if (0.0..=1.0).contains(&k) {
        Ok(())
    } else {
        Err(ReductionError::Domain(format!("k = {k} outside [0, 1]")))
    }
}

fn den(x: f64, k: f64) -> f64 {
    1.0 + k * (3.0 * x.powi(3) - 1.0)
}

/// `(x, k) ↦ (x, y)` with `y = cos²θ`.
pub fn blowup_forward(b: BlowupPoint) -> Result<(f64, f64)> {
    check_unit(b.k)?;
    let BlowupPoint { x, k } = b;
    Ok((x, (1.0 + 3.0 * k * (cbrt3() * x - 1.0)) / den(x, k)))
}

pub fn blowup_inverse(x: f64, y: f64) -> Result<BlowupPoint> {
    let d = 3.0 * x.powi(3) * y - three_4_3() * x + 3.0 - y;
    if !(d > 0.0) {
        return Err(ReductionError::Domain(format!("denominator {d:e} at (x, y) = ({x}, {y})")));
    }
    Ok(BlowupPoint { x, k: (1.0 - y) / d })
}

/// `∂y/∂k = (-3x³ + 3^{4/3}x - 2) / (1 + k(3x³-1))²`.
pub fn dy_dk(x: f64, k: f64) -> f64 {
    (-3.0 * x.powi(3) + three_4_3() * x - 2.0) / den(x, k).powi(2)
}

/// `2b(q) - 3^{4/3}` in factored form; vanishes on the boundary and at the corner.
pub fn energy_gap(x: f64, k: f64) -> f64 {
    let t = 3.0 + 2.0 * cbrt9() / x;
    (1.0 - k) / den(x, k) * (x_crit() - x).powi(2) * t
}

/// Position in the upper half plane with `|q| = x`, `cos²θ = y`.
pub fn polar_of(x: f64, k: f64) -> Result<PolarPoint> {
    let (_, y) = blowup_forward(BlowupPoint { x, k })?;
    Ok(PolarPoint { r: x, theta: y.clamp(0.0, 1.0).sqrt().acos() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn edge_values() {
        let x = 0.6;
        assert_eq!(blowup_forward(BlowupPoint { x, k: 0.0 }).unwrap().1, 1.0);
        assert_abs_diff_eq!(
            blowup_forward(BlowupPoint { x, k: 1.0 }).unwrap().1,
            (three_4_3() * x - 2.0) / (3.0 * x.powi(3)),
            epsilon = 1e-14
        );
        for k in [0.0, 0.3, 0.9, 1.0] {
            assert_abs_diff_eq!(blowup_forward(BlowupPoint { x: x_crit(), k }).unwrap().1, 1.0, epsilon = 1e-14);
        }
        assert!(blowup_forward(BlowupPoint { x, k: 1.2 }).is_err());
    }

    #[test]
    fn inverse_edges() {
        assert_eq!(blowup_inverse(0.6, 1.0).unwrap().k, 0.0);
        let x = 0.57;
        let y = (three_4_3() * x - 2.0) / (3.0 * x.powi(3));
        assert_abs_diff_eq!(blowup_inverse(x, y).unwrap().k, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn gap_values() {
        assert_eq!(energy_gap(0.6, 1.0), 0.0);
        assert_abs_diff_eq!(energy_gap(x_crit(), 0.4), 0.0, epsilon = 1e-15);
        let g = energy_gap(0.54, 0.0);
        assert_abs_diff_eq!(g, 3.0 * 0.54f64.powi(2) + 2.0 / 0.54 - three_4_3(), epsilon = 1e-12);
        assert!(g < 0.3);
    }

    #[test]
    fn y_decreases_in_k() {
        for x in [0.55, 0.6, 0.69] {
            for k in [0.0, 0.5, 1.0] {
                assert!(dy_dk(x, k) < 0.0);
            }
        }
    }
}
