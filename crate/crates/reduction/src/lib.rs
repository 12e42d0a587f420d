//! Derived functions of the fiberwise-convexity argument: the tangential Hessian,
//! its restriction `f_q` to the boundary of the momentum disk, tangent-line
//! bounds, blow-up coordinates `(x, k)`, case bounds and the `C_i`, `d`, `F` family
//! used near the critical point.

mod blowup;
mod laurent;
mod polys;
mod quadratic;
mod step3;

pub use blowup::{blowup_forward, blowup_inverse, dy_dk, energy_gap, polar_of, BlowupPoint};
pub use laurent::Laurent;
pub use polys::{
    case_bounds, case_interval, case_u_m_big_m, decom1, f11, f12, g_x_coeffs, g_x_discriminant, g_x_eval, gx_leading,
    h_case, l_minus, l_minus_bracket, l_plus, l_plus_bracket, prop44_lower_bound, r0, r1, r2, r3, t_sq, warmup_bound,
    GxCoeffs, R0, R1, R2, R3,
};
pub use quadratic::{
    argmin_f_q, count_circle_roots, f_q, f_q_deriv, f_q_deriv_coeffs, f_q_direct, lambda_minus, lambda_minus_bound,
    min_f_q, tangential_hessian, w_h_w_cos2, w_h_w_polar, TrigDerivCoeffs,
};
pub use step3::{
    c_funcs, chain_e_d_g, d_corner, d_corner_sos, d_func, dc2_dx_closed, dc3_dx_closed, dc45_dx_over_1mk, dc_dx, f_xu,
    k_of_u, DcDxRow, FactorValues,
};

use hill_core::HillError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ReductionError {
    #[error(transparent)]
    Hill(#[from] HillError),
    #[error("outside domain: {0}")]
    Domain(String),
    #[error("sign count indeterminate: grid value {0:e} too close to zero")]
    Indeterminate(f64),
    #[error("invalid case id {0}")]
    InvalidCase(u8),
}

pub type Result<T> = std::result::Result<T, ReductionError>;
