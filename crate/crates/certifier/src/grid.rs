use rayon::prelude::*;

use crate::{CertError, Result};

/// Interval `[lo, hi]`, lattice step `eps`, and a bound `b` for `|g′|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1DSpec {
    pub lo: f64,
    pub hi: f64,
    pub eps: f64,
    pub b: f64,
}

impl Grid1DSpec {
    pub fn new(lo: f64, hi: f64, eps: f64, b: f64) -> Result<Self> {
        if !(lo < hi && eps > 0.0 && b > 0.0 && lo.is_finite() && hi.is_finite()) {
            return Err(CertError::InvalidSpec(format!("lo={lo} hi={hi} eps={eps} B={b}")));
        }
        Ok(Self { lo, hi, eps, b })
    }
}

/// Number of points `lo + kε < hi`; the lattice proper, without `hi` itself.
fn interior_count(lo: f64, hi: f64, eps: f64) -> u64 {
    let mut n = ((hi - lo) / eps).ceil() as u64;
    while n > 0 && lo + (n - 1) as f64 * eps >= hi {
        n -= 1;
    }
    while lo + n as f64 * eps < hi {
        n += 1;
    }
    n
}

/// The lattice `{lo + kε < hi} ∪ {hi}`. Points are `lo + k·ε` computed directly,
/// not by repeated addition, so they carry no accumulated drift.
pub fn lattice_1d(lo: f64, hi: f64, eps: f64) -> impl Iterator<Item = f64> + Clone {
    let n = interior_count(lo, hi, eps);
    (0..n).map(move |k| lo + k as f64 * eps).chain(std::iter::once(hi))
}

fn lattice_point(lo: f64, hi: f64, eps: f64, n: u64, k: u64) -> f64 {
    if k == n {
        hi
    } else {
        lo + k as f64 * eps
    }
}

/// Smaller value wins; equal values keep the smaller coordinate.
fn better_min(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    if b.0 < a.0 || (b.0 == a.0 && b.1 < a.1) {
        b
    } else {
        a
    }
}

fn eval_checked<E: std::fmt::Display>(v: std::result::Result<f64, E>, point: impl FnOnce() -> String) -> Result<f64> {
    match v {
        Ok(v) if v.is_finite() => Ok(v),
        Ok(v) => Err(CertError::Eval { point: point(), message: format!("non-finite value {v}") }),
        Err(e) => Err(CertError::Eval { point: point(), message: e.to_string() }),
    }
}

/// Exact minimum of `f` over the lattice of `spec`, split into `parts` contiguous
/// chunks. The result, including the witness, does not depend on `parts`.
pub fn sweep_min_1d<E, F>(f: F, spec: &Grid1DSpec, parts: usize) -> Result<(f64, f64)>
where
    E: std::fmt::Display,
    F: Fn(f64) -> std::result::Result<f64, E> + Sync,
{
    let n = interior_count(spec.lo, spec.hi, spec.eps);
    let total = n + 1;
    let parts = parts.clamp(1, total as usize) as u64;
    let chunk = total.div_ceil(parts);
    (0..parts)
        .into_par_iter()
        .map(|p| {
            let mut best = (f64::INFINITY, f64::INFINITY);
            for k in p * chunk..((p + 1) * chunk).min(total) {
                let x = lattice_point(spec.lo, spec.hi, spec.eps, n, k);
                let v = eval_checked(f(x), || format!("x = {x:.17e}"))?;
                best = better_min(best, (v, x));
            }
            Ok(best)
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().fold((f64::INFINITY, f64::INFINITY), better_min))
}

/// Rectangle `[x0, x1] × [u0, u1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub x0: f64,
    pub x1: f64,
    pub u0: f64,
    pub u1: f64,
}

impl Rect {
    pub fn new(x0: f64, x1: f64, u0: f64, u1: f64) -> Result<Self> {
        if !(x0 < x1 && u0 < u1) {
            return Err(CertError::InvalidSpec(format!("rectangle [{x0}, {x1}] x [{u0}, {u1}]")));
        }
        Ok(Self { x0, x1, u0, u1 })
    }
}

type Max2 = (f64, (f64, f64));

/// Larger value wins; ties keep the lexicographically smaller `(x, u)`.
fn better_max(a: Max2, b: Max2) -> Max2 {
    if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
        b
    } else {
        a
    }
}

const NO_MAX: Max2 = (f64::NEG_INFINITY, (f64::INFINITY, f64::INFINITY));

/// Maximum over the lattice `{x0 + mε_x < x1} ∪ {x1}` × `{u0 + nε_u < u1} ∪ {u1}`.
/// `row(x)` prepares the evaluator for one `x`; the lattice is cut into `stripes`
/// contiguous bands of `x` and reduced deterministically.
pub fn sweep_max_2d_rows<E, R, G>(row: R, rect: &Rect, eps_x: f64, eps_u: f64, stripes: usize) -> Result<Max2>
where
    E: std::fmt::Display,
    R: Fn(f64) -> G + Sync,
    G: Fn(f64) -> std::result::Result<f64, E>,
{
    if !(eps_x > 0.0 && eps_u > 0.0) {
        return Err(CertError::InvalidSpec(format!("eps_x={eps_x} eps_u={eps_u}")));
    }
    let us: Vec<f64> = lattice_1d(rect.u0, rect.u1, eps_u).collect();
    let nx = interior_count(rect.x0, rect.x1, eps_x);
    let total = nx + 1;
    let stripes = stripes.clamp(1, total as usize) as u64;
    let chunk = total.div_ceil(stripes);
    (0..stripes)
        .into_par_iter()
        .map(|p| {
            let mut best = NO_MAX;
            for m in p * chunk..((p + 1) * chunk).min(total) {
                let x = lattice_point(rect.x0, rect.x1, eps_x, nx, m);
                let g = row(x);
                for &u in &us {
                    let v = eval_checked(g(u), || format!("(x, u) = ({x:.17e}, {u:.17e})"))?;
                    if v > best.0 {
                        best = (v, (x, u));
                    }
                }
            }
            Ok(best)
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().fold(NO_MAX, better_max))
}

/// [`sweep_max_2d_rows`] for a plain function of `(x, u)`.
pub fn sweep_max_2d<E, F>(f: F, rect: &Rect, eps_x: f64, eps_u: f64, stripes: usize) -> Result<Max2>
where
    E: std::fmt::Display,
    F: Fn(f64, f64) -> std::result::Result<f64, E> + Sync,
{
    sweep_max_2d_rows(
        |x| {
            let f = &f;
            move |u| f(x, u)
        },
        rect,
        eps_x,
        eps_u,
        stripes,
    )
}
