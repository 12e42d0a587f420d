//! Negativity of `F(x, u)` on `[0.63, 3^{-1/3}] × [0, 1]`.

use std::collections::BTreeMap;
use std::convert::Infallible;

use hill_core::consts::x_crit;
use reduction::{f_xu, k_of_u, DcDxRow};

use crate::certificate::{certify_negative_2d_rows, Certificate2D, FloatMeta};
use crate::factor_bounds::{certified_factor_bounds, script_factor_bounds, table_factor_bounds, X_LEFT};
use crate::grid::Rect;
use crate::symbolic::{f_expansion, factor_derivative_bound, Factor, R3Convention};
use crate::Result;

/// Published value of the bound on `|∂F/∂u|`.
pub const PRINTED_B_U: f64 = 4.580163896e5;
/// Published value of the bound on `|∂F/∂x|`.
pub const PRINTED_B_X: f64 = 2.040754753e6;

/// How the factor expansion and factor bounds are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundMode {
    /// Mirrors the published script: `r3 = 1 - 3^{2/3}/x²`, `|∂ₓa₃| < 1.8`, and the
    /// second derivatives `∂ₓₓa₃`, `∂ₓₓa₄` contribute nothing to `B_x` (the script
    /// substitutes first derivatives before second ones, which erases them).
    PublishedScript,
    /// Exact expansion with the published factor table.
    PublishedTable,
    /// Exact expansion with factor bounds certified by interval arithmetic.
    Certified,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivativeBounds {
    pub b_x: f64,
    pub b_u: f64,
}

pub fn derivative_bounds(mode: BoundMode) -> Result<DerivativeBounds> {
    let (conv, table): (R3Convention, BTreeMap<Factor, f64>) = match mode {
        BoundMode::PublishedScript => (R3Convention::PublishedScript, script_factor_bounds()),
        BoundMode::PublishedTable => (R3Convention::Exact, table_factor_bounds()),
        BoundMode::Certified => (R3Convention::Exact, certified_factor_bounds(400, 10_000)),
    };
    let e = f_expansion(conv)?;
    let b_u = factor_derivative_bound(&e.f_u.with_bounds(&table), X_LEFT)?;
    let mut table_x = table;
    if mode == BoundMode::PublishedScript {
        table_x.insert(Factor::A3xx, 0.0);
        table_x.insert(Factor::A4xx, 0.0);
    }
    let b_x = factor_derivative_bound(&e.f_x.with_bounds(&table_x), X_LEFT)?;
    Ok(DerivativeBounds { b_x, b_u })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FinalSweepOptions {
    pub eps_x: f64,
    pub eps_u: f64,
    pub stripes: usize,
}

impl Default for FinalSweepOptions {
    fn default() -> Self {
        Self { eps_x: 1.0 / 2.05e5, eps_u: 1.0 / 4.59e4, stripes: 8 }
    }
}

pub fn final_rect() -> Rect {
    Rect { x0: X_LEFT, x1: x_crit(), u0: 0.0, u1: 1.0 }
}

/// Sweeps `F` over `rect` and certifies `F < 0` with the given derivative bounds.
pub fn final_sweep(rect: &Rect, opts: &FinalSweepOptions, bounds: DerivativeBounds) -> Result<Certificate2D> {
    certify_negative_2d_rows(
        "final",
        "F(x,u)",
        |x| {
            let row = DcDxRow::new(x);
            move |u| Ok::<_, Infallible>(row.f(k_of_u(u)))
        },
        rect,
        (opts.eps_x, opts.eps_u),
        (bounds.b_x, bounds.b_u),
        &FloatMeta::FINAL,
        opts.stripes,
    )
}

/// A point of the rectangle where `F` is positive, with the value there.
pub fn f_witness_check() -> (f64, f64, f64) {
    let (x, u) = (0.693361, 0.5418);
    (x, u, f_xu(x, u))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_script_reproduces_printed_bounds() {
        let b = derivative_bounds(BoundMode::PublishedScript).unwrap();
        assert!((b.b_u / PRINTED_B_U - 1.0).abs() < 1e-9, "{}", b.b_u);
        assert!((b.b_x / PRINTED_B_X - 1.0).abs() < 1e-9, "{}", b.b_x);
    }

    #[test]
    fn exact_expansion_with_table() {
        let b = derivative_bounds(BoundMode::PublishedTable).unwrap();
        assert!((b.b_u - 459263.4).abs() < 0.1, "{}", b.b_u);
        assert!((b.b_x - 2065340.6).abs() < 0.1, "{}", b.b_x);
    }

    #[test]
    fn f_is_positive_somewhere() {
        let (_, _, v) = f_witness_check();
        assert!(v > 90.0, "{v}");
    }

    #[test]
    fn coarse_sweep_is_stripe_independent() {
        let rect = final_rect();
        let b = DerivativeBounds { b_x: 1.0, b_u: 1.0 };
        let run = |s| final_sweep(&rect, &FinalSweepOptions { eps_x: 1e-3, eps_u: 1e-3, stripes: s }, b).unwrap();
        let (a, c, d) = (run(1), run(2), run(8));
        assert_eq!((a.big_m, a.witness), (c.big_m, c.witness));
        assert_eq!((a.big_m, a.witness), (d.big_m, d.witness));
    }
}
