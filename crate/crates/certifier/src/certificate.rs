use std::fmt;
use std::str::FromStr;

use crate::grid::{sweep_max_2d_rows, sweep_min_1d, Grid1DSpec, Rect};
use crate::{CertError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

impl FromStr for Verdict {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "pass" => Ok(Verdict::Pass),
            "fail" => Ok(Verdict::Fail),
            _ => Err(format!("unknown verdict {s:?}")),
        }
    }
}

/// Cost model of one evaluation: number of floating-point operations and an
/// envelope for the magnitude of every intermediate quantity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloatMeta {
    pub ops: u32,
    pub magnitude: f64,
}

impl FloatMeta {
    /// Used for the one-dimensional figure functions.
    pub const FIGURES: FloatMeta = FloatMeta { ops: 200, magnitude: 1e4 };
    /// Used for `F(x, u)`.
    pub const FINAL: FloatMeta = FloatMeta { ops: 300, magnitude: 1e5 };
}

/// `ops · magnitude · 2⁻⁵² · 8`.
pub fn float_error_budget(meta: &FloatMeta) -> f64 {
    meta.ops as f64 * meta.magnitude * f64::EPSILON * 8.0
}

#[derive(Debug, Clone, PartialEq)]
pub struct Certificate1D {
    pub id: String,
    pub function: String,
    pub spec: Grid1DSpec,
    pub m: f64,
    pub witness: f64,
    pub float_budget: f64,
    pub verdict: Verdict,
}

impl Certificate1D {
    pub fn from_parts(id: &str, function: &str, spec: Grid1DSpec, m: f64, witness: f64, float_budget: f64) -> Self {
        let mut c = Self {
            id: id.to_owned(),
            function: function.to_owned(),
            spec,
            m,
            witness,
            float_budget,
            verdict: Verdict::Fail,
        };
        c.verdict = c.recompute_verdict();
        c
    }

    /// `m - εB - budget`.
    pub fn margin(&self) -> f64 {
        self.m - self.spec.eps * self.spec.b - self.float_budget
    }

    pub fn recompute_verdict(&self) -> Verdict {
        Verdict::from_bool(self.margin() > 0.0)
    }
}

/// Sweeps `f` over the lattice of `spec` and certifies `f > 0` on `[lo, hi]`.
pub fn certify_positive_1d<E, F>(
    id: &str,
    function: &str,
    f: F,
    spec: &Grid1DSpec,
    meta: &FloatMeta,
) -> Result<Certificate1D>
where
    E: fmt::Display,
    F: Fn(f64) -> std::result::Result<f64, E> + Sync,
{
    let (m, witness) = sweep_min_1d(f, spec, rayon::current_num_threads().max(1) * 4)?;
    Ok(Certificate1D::from_parts(id, function, *spec, m, witness, float_error_budget(meta)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Certificate2D {
    pub id: String,
    pub function: String,
    pub rect: Rect,
    pub eps_x: f64,
    pub eps_u: f64,
    pub b_x: f64,
    pub b_u: f64,
    pub big_m: f64,
    pub witness: (f64, f64),
    pub float_budget: f64,
    pub verdict: Verdict,
}

impl Certificate2D {
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        id: &str,
        function: &str,
        rect: Rect,
        (eps_x, eps_u): (f64, f64),
        (b_x, b_u): (f64, f64),
        big_m: f64,
        witness: (f64, f64),
        float_budget: f64,
    ) -> Self {
        let mut c = Self {
            id: id.to_owned(),
            function: function.to_owned(),
            rect,
            eps_x,
            eps_u,
            b_x,
            b_u,
            big_m,
            witness,
            float_budget,
            verdict: Verdict::Fail,
        };
        c.verdict = c.recompute_verdict();
        c
    }

    /// The smaller of `|M| - ε_x B_x - budget` and `|M| - ε_u B_u - budget`, or `-M` if `M ≥ 0`.
    pub fn margin(&self) -> f64 {
        if self.big_m >= 0.0 {
            return -self.big_m;
        }
        let a = self.big_m.abs();
        (a - self.eps_x * self.b_x).min(a - self.eps_u * self.b_u) - self.float_budget
    }

    pub fn recompute_verdict(&self) -> Verdict {
        Verdict::from_bool(self.big_m < 0.0 && self.margin() > 0.0)
    }
}

/// Certifies `F < 0` on `rect` from a lattice maximum; `row(x)` yields `u ↦ F(x, u)`.
#[allow(clippy::too_many_arguments)]
pub fn certify_negative_2d_rows<E, R, G>(
    id: &str,
    function: &str,
    row: R,
    rect: &Rect,
    eps: (f64, f64),
    bounds: (f64, f64),
    meta: &FloatMeta,
    stripes: usize,
) -> Result<Certificate2D>
where
    E: fmt::Display,
    R: Fn(f64) -> G + Sync,
    G: Fn(f64) -> std::result::Result<f64, E>,
{
    if !(bounds.0 >= 0.0 && bounds.1 >= 0.0) {
        return Err(CertError::InvalidSpec(format!("derivative bounds {bounds:?}")));
    }
    let (big_m, witness) = sweep_max_2d_rows(row, rect, eps.0, eps.1, stripes)?;
    Ok(Certificate2D::from_parts(id, function, *rect, eps, bounds, big_m, witness, float_error_budget(meta)))
}

/// [`certify_negative_2d_rows`] for a plain function of `(x, u)`.
#[allow(clippy::too_many_arguments)]
pub fn certify_negative_2d<E, F>(
    id: &str,
    function: &str,
    f: F,
    rect: &Rect,
    eps: (f64, f64),
    bounds: (f64, f64),
    meta: &FloatMeta,
    stripes: usize,
) -> Result<Certificate2D>
where
    E: fmt::Display,
    F: Fn(f64, f64) -> std::result::Result<f64, E> + Sync,
{
    certify_negative_2d_rows(
        id,
        function,
        |x| {
            let f = &f;
            move |u| f(x, u)
        },
        rect,
        eps,
        bounds,
        meta,
        stripes,
    )
}
