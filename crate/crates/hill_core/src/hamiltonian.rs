use crate::consts::{c0, x_crit};
use crate::{norm, PhasePoint, Result, SymMat2};

/// `U(q) = -1/|q| - (3/2) q1²`
pub fn effective_potential(q: [f64; 2]) -> Result<f64> {
    let r = norm(q)?;
    Ok(-1.0 / r - 1.5 * q[0] * q[0])
}

/// `H_{c,p}(q) = H(q,p) + c`, expanded form.
pub fn hamiltonian(s: &PhasePoint, c: f64) -> Result<f64> {
    let r = norm(s.q())?;
    let PhasePoint { q1, q2, p1, p2 } = *s;
    Ok(0.5 * (p1 * p1 + p2 * p2) - 1.0 / r - q1 * q1 + 0.5 * q2 * q2 + p1 * q2 - p2 * q1 + c)
}

/// Same value as [`hamiltonian`] via `|p + Jq|²/2 + U(q) + c`.
pub fn hamiltonian_completed_square(s: &PhasePoint, c: f64) -> Result<f64> {
    let u = effective_potential(s.q())?;
    let a = s.p1 + s.q2;
    let b = s.p2 - s.q1;
    Ok(0.5 * (a * a + b * b) + u + c)
}

/// `K_c = |q| (H + c)`. Only defined through the product, so the origin is excluded.
pub fn regularized_hamiltonian(s: &PhasePoint, c: f64) -> Result<f64> {
    let r = norm(s.q())?;
    Ok(r * hamiltonian(s, c)?)
}

/// Both critical points of `H` and the critical value `-c0`.
pub fn critical_data() -> (PhasePoint, PhasePoint, f64) {
    let x = x_crit();
    (PhasePoint::new(x, 0.0, 0.0, x), PhasePoint::new(-x, 0.0, 0.0, -x), -c0())
}

/// Gradient of `q -> H_{c,p}(q)`.
pub fn grad_hcp(q: [f64; 2], p: [f64; 2]) -> Result<[f64; 2]> {
    let r = norm(q)?;
    let r3 = r * r * r;
    Ok([-2.0 * q[0] + q[0] / r3 - p[1], q[1] + q[1] / r3 + p[0]])
}

/// Hessian of `q -> H_{c,p}(q)`; independent of `p` and `c`.
pub fn hessian(q: [f64; 2]) -> Result<SymMat2> {
    let r = norm(q)?;
    let r2 = r * r;
    let r5 = r2 * r2 * r;
    let (q1, q2) = (q[0], q[1]);
    Ok(SymMat2 {
        a11: (-2.0 * r5 + r2 - 3.0 * q1 * q1) / r5,
        a12: -3.0 * q1 * q2 / r5,
        a22: (r5 + r2 - 3.0 * q2 * q2) / r5,
    })
}

/// `v(q) = J grad H_{c,0}(q)` with `J(a,b) = (b,-a)`.
pub fn tangent_v(q: [f64; 2]) -> Result<[f64; 2]> {
    let r = norm(q)?;
    let r3 = r * r * r;
    Ok([q[1] + q[1] / r3, 2.0 * q[0] - q[0] / r3])
}

/// `w(q) = v(q) - Jq`
pub fn shifted_w(q: [f64; 2]) -> Result<[f64; 2]> {
    let r = norm(q)?;
    let r3 = r * r * r;
    Ok([q[1] / r3, 3.0 * q[0] - q[0] / r3])
}

/// The two anti-symplectic reflections `R1`, `R2`.
pub fn symmetry_images(s: &PhasePoint) -> (PhasePoint, PhasePoint) {
    (PhasePoint::new(-s.q1, s.q2, s.p1, -s.p2), PhasePoint::new(s.q1, -s.q2, -s.p1, s.p2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consts::three_4_3;
    use approx::assert_abs_diff_eq;

    #[test]
    fn potential_examples() {
        assert_abs_diff_eq!(effective_potential([x_crit(), 0.0]).unwrap(), -three_4_3() / 2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(effective_potential([1.0, 0.0]).unwrap(), -2.5, epsilon = 1e-15);
        assert_abs_diff_eq!(effective_potential([0.0, 1.0]).unwrap(), -1.0, epsilon = 1e-15);
        assert!(effective_potential([0.0, 0.0]).is_err());
    }

    #[test]
    fn hamiltonian_examples() {
        let x = x_crit();
        assert_abs_diff_eq!(hamiltonian(&PhasePoint::new(x, 0.0, 0.0, x), c0()).unwrap(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(hamiltonian(&PhasePoint::new(1.0, 0.0, 0.0, 0.0), 0.0).unwrap(), -2.0, epsilon = 1e-15);
        let s = PhasePoint::new(0.5, 0.3, 0.1, -0.2);
        assert_abs_diff_eq!(
            hamiltonian(&s, 2.2).unwrap(),
            hamiltonian_completed_square(&s, 2.2).unwrap(),
            epsilon = 1e-12
        );
    }

    #[test]
    fn regularized_examples() {
        assert_abs_diff_eq!(
            regularized_hamiltonian(&PhasePoint::new(1.0, 0.0, 0.0, 0.0), 0.0).unwrap(),
            -2.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            regularized_hamiltonian(&PhasePoint::new(0.5, 0.0, 0.0, 0.0), 3.0).unwrap(),
            0.375,
            epsilon = 1e-15
        );
    }

    #[test]
    fn critical_points_are_stationary() {
        let (a, b, value) = critical_data();
        assert_abs_diff_eq!(value, -c0(), epsilon = 0.0);
        for s in [a, b] {
            let g = grad_hcp(s.q(), s.p()).unwrap();
            assert_abs_diff_eq!(g[0], 0.0, epsilon = 1e-12);
            assert_abs_diff_eq!(g[1], 0.0, epsilon = 1e-12);
            // p-gradient of H is p + (q2, -q1)
            assert_abs_diff_eq!(s.p1 + s.q2, 0.0, epsilon = 1e-12);
            assert_abs_diff_eq!(s.p2 - s.q1, 0.0, epsilon = 1e-12);
            assert_abs_diff_eq!(effective_potential(s.q()).unwrap(), -c0(), epsilon = 1e-14);
        }
    }

    #[test]
    fn gradient_examples() {
        let g = grad_hcp([1.0, 0.0], [0.0, 0.0]).unwrap();
        assert_eq!(g, [-1.0, 0.0]);
    }

    #[test]
    fn hessian_at_critical_point() {
        let h = hessian([x_crit(), 0.0]).unwrap();
        assert_abs_diff_eq!(h.a11, -8.0, epsilon = 1e-12);
        assert_abs_diff_eq!(h.a12, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(h.a22, 4.0, epsilon = 1e-12);
        assert_eq!(hessian([0.0, 0.7]).unwrap().a12, 0.0);
    }

    #[test]
    fn v_and_w_examples() {
        assert_eq!(tangent_v([1.0, 0.0]).unwrap(), [0.0, 1.0]);
        let w = shifted_w([x_crit(), 0.0]).unwrap();
        assert_abs_diff_eq!(w[0], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(w[1], 0.0, epsilon = 1e-14);
        assert_eq!(shifted_w([0.0, 1.0]).unwrap(), [1.0, 0.0]);
        // q = (0.5, 0.5): |q|³ = 2^{-3/2}
        let r3 = 0.5f64.sqrt().powi(3);
        let v = tangent_v([0.5, 0.5]).unwrap();
        assert_abs_diff_eq!(v[0], 0.5 + 0.5 / r3, epsilon = 1e-14);
        assert_abs_diff_eq!(v[1], 1.0 - 0.5 / r3, epsilon = 1e-14);
    }

    #[test]
    fn symmetry_example() {
        let (a, b) = symmetry_images(&PhasePoint::new(1.0, 2.0, 3.0, 4.0));
        assert_eq!(a, PhasePoint::new(-1.0, 2.0, 3.0, -4.0));
        assert_eq!(b, PhasePoint::new(1.0, -2.0, -3.0, 4.0));
    }
}
