//! Independent numerical cross-checks. Everything here is computed from the raw
//! Hamiltonian, its Hessian and the shifted tangent `w` of `hill_core`, never from
//! derived closed forms.

mod convex;
mod disk;
mod flow;
mod sampling;

pub use convex::{fiber_convexity_check, limit_fiber_deviation, polygon_convexity, warmup_min, ConvexityVerdict};
pub use disk::{brute_force_fiber_min, ring_extremum_count, ring_values, DiskGrid, DiskMin};
pub use flow::{flow_integrate, FlowState, Trajectory, COLLISION_RADIUS};
pub use sampling::{rng_from_seed, sample_admissible, sample_momentum, Admissible};

use hill_core::HillError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error(transparent)]
    Hill(#[from] HillError),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, OracleError>;
