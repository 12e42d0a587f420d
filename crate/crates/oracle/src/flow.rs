//! Second-order splitting for Hamilton's equations of `H`.
//!
//! `H = |p|²/2 + V(q) + (p1 q2 - p2 q1)` with `V = -1/|q| - q1² + q2²/2`. Each of the
//! three parts has an exact flow (drift, kick, joint rotation of `q` and `p`), and the
//! symmetric composition `V/2 ∘ T/2 ∘ R ∘ T/2 ∘ V/2` is second order and
//! time-reversible. On `K_c⁻¹(0)` the flow of `K_c = |q|(H + c)` is the flow of `H`
//! with time rescaled by `dt_H = |q| dτ`, so one step of size `dτ` is a splitting step
//! of `H` of size `dτ · (|q_n| + |q_{n+1}|)/2`, solved by fixed-point iteration. The
//! rescaling keeps steps short near collision; the drift of `K_c` is recorded.

use hill_core::{regularized_hamiltonian, EnergyParam, PhasePoint};

use crate::{OracleError, Result};

/// Trajectories stop once `|q|` drops below this.
pub const COLLISION_RADIUS: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlowState {
    pub state: PhasePoint,
    /// Time of the `K_c` flow.
    pub t: f64,
    /// Physical time of the `H` flow.
    pub t_h: f64,
    pub k_c: f64,
    pub energy_drift: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub states: Vec<FlowState>,
    pub collision: bool,
}

impl Trajectory {
    pub fn last(&self) -> &FlowState {
        self.states.last().expect("a trajectory holds its start")
    }

    pub fn max_drift(&self) -> f64 {
        self.states.iter().map(|s| s.energy_drift).fold(0.0, f64::max)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,q1,q2,p1,p2,Kc\n");
        for s in &self.states {
            let PhasePoint { q1, q2, p1, p2 } = s.state;
            out.push_str(&format!("{:e},{q1:e},{q2:e},{p1:e},{p2:e},{:e}\n", s.t, s.k_c));
        }
        out
    }
}

fn kick(s: &mut PhasePoint, h: f64) {
    let r = s.q1.hypot(s.q2);
    let r3 = r * r * r;
    // -∇V = (-q1/r³ + 2q1, -q2/r³ - q2)
    s.p1 += h * (2.0 * s.q1 - s.q1 / r3);
    s.p2 -= h * (s.q2 + s.q2 / r3);
}

fn drift(s: &mut PhasePoint, h: f64) {
    s.q1 += h * s.p1;
    s.q2 += h * s.p2;
}

/// Exact flow of `p1 q2 - p2 q1`: `q' = (q2, -q1)`, `p' = (p2, -p1)`.
fn rotate(s: &mut PhasePoint, h: f64) {
    let (sn, cs) = h.sin_cos();
    let rot = |a: f64, b: f64| (cs * a + sn * b, -sn * a + cs * b);
    (s.q1, s.q2) = rot(s.q1, s.q2);
    (s.p1, s.p2) = rot(s.p1, s.p2);
}

fn step(s: &mut PhasePoint, h: f64) {
    kick(s, 0.5 * h);
    drift(s, 0.5 * h);
    rotate(s, h);
    drift(s, 0.5 * h);
    kick(s, 0.5 * h);
}

const TIME_ITERATIONS: usize = 4;

/// One step of size `dt` in `K_c` time; returns the physical time advanced.
fn sundman_step(s: &mut PhasePoint, dt: f64) -> f64 {
    let r0 = s.q1.hypot(s.q2);
    let mut h = dt * r0;
    let mut next = *s;
    for _ in 0..TIME_ITERATIONS {
        next = *s;
        step(&mut next, h);
        h = dt * 0.5 * (r0 + next.q1.hypot(next.q2));
    }
    *s = next;
    h
}

/// Integrates `steps` steps of size `dt` (negative `dt` runs backwards in time),
/// storing every `record_every`-th state and the last one.
pub fn flow_integrate(
    start: PhasePoint,
    c: EnergyParam,
    dt: f64,
    steps: usize,
    record_every: usize,
) -> Result<Trajectory> {
    if !(dt.is_finite() && dt != 0.0) || record_every == 0 {
        return Err(OracleError::InvalidArgument(format!("dt = {dt}, record_every = {record_every}")));
    }
    let c = c.value();
    let k0 = regularized_hamiltonian(&start, c)?;
    let record = |s: PhasePoint, t: f64, t_h: f64| -> Result<FlowState> {
        let k = regularized_hamiltonian(&s, c)?;
        Ok(FlowState { state: s, t, t_h, k_c: k, energy_drift: (k - k0).abs() })
    };
    let mut states = vec![record(start, 0.0, 0.0)?];
    let mut s = start;
    let mut t_h = 0.0;
    for i in 1..=steps {
        t_h += sundman_step(&mut s, dt);
        let t = dt * i as f64;
        if s.q1.hypot(s.q2) < COLLISION_RADIUS || !s.q1.is_finite() {
            return Ok(Trajectory { states, collision: true });
        }
        if i % record_every == 0 || i == steps {
            states.push(record(s, t, t_h)?);
        }
    }
    Ok(Trajectory { states, collision: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use hill_core::{critical_data, hamiltonian};

    #[test]
    fn equilibrium_is_stationary() {
        let (eq, _, _) = critical_data();
        let mut s = eq;
        for _ in 0..100 {
            let before = s;
            step(&mut s, 1e-4);
            let d = (s.q1 - before.q1).abs()
                + (s.q2 - before.q2).abs()
                + (s.p1 - before.p1).abs()
                + (s.p2 - before.p2).abs();
            assert!(d < 1e-10, "{d}");
        }
    }

    #[test]
    fn rotation_preserves_norms() {
        let mut s = PhasePoint::new(0.3, -0.2, 1.0, 0.5);
        rotate(&mut s, 0.7);
        assert!((s.q1.hypot(s.q2) - 0.3f64.hypot(0.2)).abs() < 1e-15);
        assert!((s.p1.hypot(s.p2) - 1.0f64.hypot(0.5)).abs() < 1e-15);
    }

    #[test]
    fn energy_is_nearly_conserved() {
        let c = 2.2;
        let q = [0.3, 0.1];
        // |p + Jq|² = 2(b(q) - c) puts the start on H = -c.
        let v = (-2.0 * hamiltonian(&PhasePoint::new(q[0], q[1], -q[1], q[0]), c).unwrap()).sqrt();
        let start = PhasePoint::new(q[0], q[1], v - q[1], q[0]);
        assert!(hamiltonian(&start, c).unwrap().abs() < 1e-12);
        let tr = flow_integrate(start, EnergyParam::new(c).unwrap(), 1e-4, 10_000, 100).unwrap();
        assert!(!tr.collision);
        assert!(tr.max_drift() < 1e-6, "{}", tr.max_drift());
    }

    #[test]
    fn bad_arguments() {
        let c = EnergyParam::new(2.2).unwrap();
        assert!(flow_integrate(PhasePoint::new(0.3, 0.0, 0.0, 0.0), c, 0.0, 10, 1).is_err());
        assert!(flow_integrate(PhasePoint::new(0.0, 0.0, 0.0, 0.0), c, 1e-3, 10, 1).is_err());
    }
}
