//! Exact formulas for Hill's lunar problem in the rotating frame.
//!
//! `H(q,p) = |p|²/2 - 1/|q| - q1² + q2²/2 + p1 q2 - p2 q1`, shifted by an energy
//! offset `c` so that the bounded energy surface is the zero set of
//! `H_{c,p}(q) = H(q,p) + c`.

pub mod consts;
mod fiber;
mod hamiltonian;
mod region;

pub use fiber::{fiber_curve, polygon_is_simple, winding_number, FiberCurve};
pub use hamiltonian::{
    critical_data, effective_potential, grad_hcp, hamiltonian, hamiltonian_completed_square, hessian,
    regularized_hamiltonian, shifted_w, symmetry_images, tangent_v,
};
pub use region::{
    cubic_residual, cubic_smallest_positive_root, disk_radius, hill_boundary, in_hill_region, pointwise_level,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HillError {
    #[error("undefined at the origin")]
    Origin,
    #[error("negative radicand {0:e}")]
    NegativeRadicand(f64),
    #[error("energy offset {0} is not above the critical value")]
    BelowCritical(f64),
    #[error("cubic level curve has no positive root for b = {b}, theta = {theta}")]
    NoRoot { b: f64, theta: f64 },
    #[error("no sign change found on any ray")]
    EmptyFiber,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, HillError>;

/// A point of the phase plane pair, `q` position and `p` momentum.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PhasePoint {
    pub q1: f64,
    pub q2: f64,
    pub p1: f64,
    pub p2: f64,
}

impl PhasePoint {
    pub const fn new(q1: f64, q2: f64, p1: f64, p2: f64) -> Self {
        Self { q1, q2, p1, p2 }
    }

    pub fn q(&self) -> [f64; 2] {
        [self.q1, self.q2]
    }

    pub fn p(&self) -> [f64; 2] {
        [self.p1, self.p2]
    }
}

/// Energy offset `c`; the energy level is `-c`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EnergyParam(f64);

impl EnergyParam {
    /// Accepts only `c > c0`, the range where the bounded component exists.
    pub fn new(c: f64) -> Result<Self> {
        if c.is_finite() && c > consts::c0() {
            Ok(Self(c))
        } else {
            Err(HillError::BelowCritical(c))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarPoint {
    pub r: f64,
    pub theta: f64,
}

impl PolarPoint {
    pub fn from_cartesian(q: [f64; 2]) -> Self {
        Self { r: q[0].hypot(q[1]), theta: q[1].atan2(q[0]) }
    }

    pub fn to_cartesian(self) -> [f64; 2] {
        let (s, c) = self.theta.sin_cos();
        [self.r * c, self.r * s]
    }
}

/// Symmetric 2x2 matrix; `a21` is never stored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymMat2 {
    pub a11: f64,
    pub a12: f64,
    pub a22: f64,
}

impl SymMat2 {
    pub fn quad(&self, v: [f64; 2]) -> f64 {
        self.a11 * v[0] * v[0] + 2.0 * self.a12 * v[0] * v[1] + self.a22 * v[1] * v[1]
    }

    pub fn apply(&self, v: [f64; 2]) -> [f64; 2] {
        [self.a11 * v[0] + self.a12 * v[1], self.a12 * v[0] + self.a22 * v[1]]
    }

    pub fn det(&self) -> f64 {
        self.a11 * self.a22 - self.a12 * self.a12
    }

    pub fn trace(&self) -> f64 {
        self.a11 + self.a22
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let half_tr = 0.5 * self.trace();
        let disc = (0.5 * (self.a11 - self.a22)).hypot(self.a12);
        (half_tr - disc, half_tr + disc)
    }
}

pub(crate) fn norm(q: [f64; 2]) -> Result<f64> {
    let r = q[0].hypot(q[1]);
    if r > 0.0 {
        Ok(r)
    } else {
        Err(HillError::Origin)
    }
}
