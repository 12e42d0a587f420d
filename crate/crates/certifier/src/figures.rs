//! The eleven one-variable positivity checks behind the figures, each scaled by a
//! power of `x` so that it stays bounded on its interval.

use std::convert::Infallible;

use hill_core::consts::{cbrt3, cbrt9, three_4_3, x_crit};
use reduction::{case_bounds, gx_leading, r0, t_sq};

use crate::certificate::{certify_positive_1d, Certificate1D, FloatMeta};
use crate::grid::Grid1DSpec;
use crate::Result;

/// Which formulas to sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FigureVariant {
    /// Formulas whose minima agree with the published table of minima: the `1/x`
    /// coefficient of `f5` is `9/2`, and the last coefficient of `r2` inside
    /// `f10, f11, f12` is `4` rather than `3^{4/3}`.
    #[default]
    Tabulated,
    /// The formulas as derived (`29/6` in `f5`, `3^{4/3}` in `r2`).
    Printed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    F2,
    F5,
    F9,
    F10,
    F11,
    F12,
    L { case: u8, upper: bool },
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureRow {
    pub id: String,
    pub function: String,
    pub lo: f64,
    pub hi: f64,
    /// Minimum as published, to four decimals.
    pub table_m: f64,
    kind: Kind,
    variant: FigureVariant,
}

fn r2_with(x: f64, last: f64) -> f64 {
    cbrt3() / x.powi(5) + cbrt9() / x.powi(4) + 3.0 / x.powi(3) + last / (x * x)
}

impl FigureRow {
    fn r2(&self, x: f64) -> f64 {
        match self.variant {
            FigureVariant::Tabulated => r2_with(x, 4.0),
            FigureVariant::Printed => r2_with(x, three_4_3()),
        }
    }

    /// The scaled function `g` that is swept.
    pub fn eval(&self, x: f64) -> f64 {
        let s2 = std::f64::consts::SQRT_2;
        match self.kind {
            Kind::F2 => 1.0 - 3.0 * x.powi(3) - 6.75 * x.powi(6) - 2.0 * x.powi(9),
            Kind::F5 => {
                let c = match self.variant {
                    FigureVariant::Tabulated => 4.5,
                    FigureVariant::Printed => 29.0 / 6.0,
                };
                let x3 = x.powi(3);
                let rad = (3.0 * x3 + 2.0 - three_4_3() * x).max(0.0);
                11.0 / 12.0 - 10.0 / 3.0 * x3 - c * x3 * x3 + 4.0 * x3.powi(3)
                    - 0.75 * x3.powi(4)
                    - 2.0 * (x.powf(1.5) - 2.0 * x.powf(4.5)) * rad.sqrt()
                    - (2.0 * x3 * x3 + 2.0 * x3) * rad
            }
            Kind::F9 => x.powi(6) * gx_leading(x),
            Kind::F10 => -x.powi(13) * (2.0 * self.r2(x).powi(2) - gx_leading(x) * r0(x)),
            Kind::F11 => -x.powi(7) * (2.0 * gx_leading(x) * t_sq(x).sqrt() - 2.0 * s2 * self.r2(x)),
            Kind::F12 => {
                let t = t_sq(x);
                x.powi(7) * (gx_leading(x) * t - 2.0 * s2 * self.r2(x) * t.sqrt() + r0(x))
            }
            Kind::L { case, upper } => {
                let (lm, lbig) = case_bounds(case, x).expect("case ids are 1..=5");
                x.powi(7) * if upper { lbig } else { lm }
            }
        }
    }

    pub fn spec(&self, eps: f64, b: f64) -> Result<Grid1DSpec> {
        Grid1DSpec::new(self.lo, self.hi, eps, b)
    }

    pub fn certify(&self, eps: f64, b: f64) -> Result<Certificate1D> {
        let spec = self.spec(eps, b)?;
        certify_positive_1d(&self.id, &self.function, |x| Ok::<_, Infallible>(self.eval(x)), &spec, &FloatMeta::FIGURES)
    }
}

/// The sixteen rows in table order.
pub fn figure_rows(variant: FigureVariant) -> Vec<FigureRow> {
    let xc = x_crit();
    let row = |id: &str, function: &str, lo, hi, table_m, kind| FigureRow {
        id: id.to_owned(),
        function: function.to_owned(),
        lo,
        hi,
        table_m,
        kind,
        variant,
    };
    let mut rows = vec![
        row("fig2", "x^7 f2", 0.0, 0.54, 0.3524, Kind::F2),
        row("fig5", "x^7 f5", 0.0, 0.54, 0.0453, Kind::F5),
        row("fig9", "x^6 f9", 0.54, xc, 0.2461, Kind::F9),
        row("fig10", "-x^13 f10", 0.56, xc, 1.8777, Kind::F10),
        row("fig11", "-x^7 f11", 0.54, 0.56, 1.2197, Kind::F11),
        row("fig12", "x^7 f12", 0.54, 0.56, 2.7452, Kind::F12),
    ];
    let table = [(2.6154, 2.9192), (0.5905, 1.5023), (0.5395, 0.7966), (0.9569, 1.1176), (0.8420, 1.5383)];
    for (i, (m, big)) in table.into_iter().enumerate() {
        let case = i as u8 + 1;
        let fig = 13 + i;
        rows.push(row(&format!("fig{fig}m"), &format!("x^7 L{case}^m"), 0.54, 0.63, m, Kind::L { case, upper: false }));
        rows.push(row(
            &format!("fig{fig}M"),
            &format!("x^7 L{case}^M"),
            0.54,
            0.63,
            big,
            Kind::L { case, upper: true },
        ));
    }
    rows
}

/// Certifies every row with lattice step `eps` and derivative bound `b`.
pub fn figure_suite(variant: FigureVariant, eps: f64, b: f64) -> Result<Vec<Certificate1D>> {
    figure_rows(variant).iter().map(|r| r.certify(eps, b)).collect()
}

/// `max |g′|` over the lattice of step `step`, by central differences (one-sided at the ends).
pub fn measured_derivative_bound(row: &FigureRow, step: f64) -> f64 {
    let h = 1e-7;
    crate::grid::lattice_1d(row.lo, row.hi, step)
        .map(|x| {
            let a = (x - h).max(row.lo);
            let b = (x + h).min(row.hi);
            ((row.eval(b) - row.eval(a)) / (b - a)).abs()
        })
        .fold(0.0, f64::max)
}
