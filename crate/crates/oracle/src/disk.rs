use std::f64::consts::TAU;

use hill_core::{disk_radius, hessian, shifted_w, EnergyParam};

use crate::{OracleError, Result};

/// Samples of the closed momentum disk `D_q`: `n_radial` area-uniform rings plus
/// the boundary ring, each with `n_angular` points, and the centre.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskGrid {
    pub n_radial: usize,
    pub n_angular: usize,
}

impl Default for DiskGrid {
    fn default() -> Self {
        Self { n_radial: 200, n_angular: 720 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiskMin {
    pub value: f64,
    pub s: [f64; 2],
    /// Polar angle of `s`.
    pub angle: f64,
    pub on_boundary: bool,
    /// Every sample as `(s1, s2, value)`.
    pub scan: Vec<(f64, f64, f64)>,
}

impl DiskMin {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("s1,s2,value\n");
        for (a, b, v) in &self.scan {
            out.push_str(&format!("{a:e},{b:e},{v:e}\n"));
        }
        out
    }
}

fn form(q: [f64; 2]) -> Result<impl Fn(f64, f64) -> f64> {
    let h = hessian(q)?;
    let w = shifted_w(q)?;
    Ok(move |s1: f64, s2: f64| h.quad([w[0] + s1, w[1] + s2]))
}

fn golden_min(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> (f64, f64) {
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let (mut a, mut b) = (hi - g * (hi - lo), lo + g * (hi - lo));
    let (mut fa, mut fb) = (f(a), f(b));
    for _ in 0..80 {
        if fa < fb {
            hi = b;
            (b, fb) = (a, fa);
            a = hi - g * (hi - lo);
            fa = f(a);
        } else {
            lo = a;
            (a, fa) = (b, fb);
            b = lo + g * (hi - lo);
            fb = f(b);
        }
    }
    if fa < fb {
        (a, fa)
    } else {
        (b, fb)
    }
}

/// Minimum of `(w(q)+s)ᵗℋ(q)(w(q)+s)` over `|s| ≤ ρ`, `ρ` the disk radius at energy
/// `c`. When the grid minimum lies on the boundary ring its angle is refined by
/// golden-section search between the neighbouring samples.
pub fn brute_force_fiber_min(q: [f64; 2], c: EnergyParam, grid: &DiskGrid) -> Result<DiskMin> {
    if grid.n_radial < 1 || grid.n_angular < 8 {
        return Err(OracleError::InvalidArgument(format!("{grid:?}")));
    }
    let rho = disk_radius(q, c.value())?;
    let f = form(q)?;
    let step = TAU / grid.n_angular as f64;
    let mut scan = Vec::with_capacity(grid.n_radial * grid.n_angular + 1);
    scan.push((0.0, 0.0, f(0.0, 0.0)));
    let mut best = (f64::INFINITY, 0usize, 0usize);
    for i in 1..=grid.n_radial {
        let r = rho * (i as f64 / grid.n_radial as f64).sqrt();
        for j in 0..grid.n_angular {
            let (s, co) = (step * j as f64).sin_cos();
            let v = f(r * co, r * s);
            scan.push((r * co, r * s, v));
            if v < best.0 {
                best = (v, i, j);
            }
        }
    }
    if scan[0].2 <= best.0 {
        return Ok(DiskMin { value: scan[0].2, s: [0.0, 0.0], angle: 0.0, on_boundary: rho == 0.0, scan });
    }
    let (mut value, i, j) = best;
    let mut angle = step * j as f64;
    let on_boundary = i == grid.n_radial;
    let mut r = rho * (i as f64 / grid.n_radial as f64).sqrt();
    if on_boundary {
        let (a, v) = golden_min(|a| f(rho * a.cos(), rho * a.sin()), angle - step, angle + step);
        if v < value {
            (angle, value) = (a.rem_euclid(TAU), v);
        }
        r = rho;
    }
    Ok(DiskMin { value, s: [r * angle.cos(), r * angle.sin()], angle, on_boundary, scan })
}

/// The quadratic form on the boundary ring at `n` equally spaced angles from 0.
pub fn ring_values(q: [f64; 2], c: EnergyParam, n: usize) -> Result<Vec<f64>> {
    let rho = disk_radius(q, c.value())?;
    let f = form(q)?;
    Ok((0..n)
        .map(|j| {
            let (s, co) = (TAU * j as f64 / n as f64).sin_cos();
            f(rho * co, rho * s)
        })
        .collect())
}

/// Cyclic number of sign changes of the first differences of [`ring_values`]: the
/// number of local extrema on the ring.
pub fn ring_extremum_count(q: [f64; 2], c: EnergyParam, n: usize) -> Result<usize> {
    let v = ring_values(q, c, n)?;
    let d: Vec<f64> = (0..n).map(|j| v[(j + 1) % n] - v[j]).collect();
    Ok((0..n).filter(|&j| (d[j] > 0.0) != (d[(j + 1) % n] > 0.0)).count())
}
