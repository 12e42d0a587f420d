//! Lattice sweeps with derivative-bound certificates.
//!
//! A function `g` is certified positive on `[lo, hi]` when its minimum `m` over the
//! lattice `lo + kε` satisfies `m > εB + budget`, where `B` bounds `|g′|` and the
//! budget dominates the rounding error of evaluating `g`. The two-dimensional
//! analogue certifies negativity on a rectangle.

mod certificate;
mod factor_bounds;
mod figures;
mod final_ineq;
mod grid;
pub mod interval;
mod report;
mod symbolic;

pub use certificate::{
    certify_negative_2d, certify_negative_2d_rows, certify_positive_1d, float_error_budget, Certificate1D,
    Certificate2D, FloatMeta, Verdict,
};
pub use factor_bounds::{
    certified_factor_bounds, script_factor_bounds, table_factor_bounds, verify_factor_bounds, FactorBoundReport,
    FactorBoundRow, X_LEFT,
};
pub use figures::{figure_rows, figure_suite, measured_derivative_bound, FigureRow, FigureVariant};
pub use final_ineq::{
    derivative_bounds, f_witness_check, final_rect, final_sweep, BoundMode, DerivativeBounds, FinalSweepOptions,
    PRINTED_B_U, PRINTED_B_X,
};
pub use grid::{lattice_1d, sweep_max_2d, sweep_max_2d_rows, sweep_min_1d, Grid1DSpec, Rect};
pub use report::{Report, ReportEntry, HEADER};
pub use symbolic::{
    f_expansion, factor_derivative_bound, Coef, FExpansion, Factor, FactorTermSum, R3Convention, Term, Var,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CertError {
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    #[error("evaluation failed at {point}: {message}")]
    Eval { point: String, message: String },
    #[error("term {0} has positive degree in x")]
    PositiveDegree(String),
    #[error("factor {0:?} has no bound")]
    MissingBound(Factor),
    #[error("derivative of {0:?} is not tracked")]
    Untracked(Factor),
    #[error("report parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, CertError>;
