//! Grid and Monte-Carlo batteries with one summary line per check.

use std::f64::consts::FRAC_PI_2;

use hill_core::consts::{c0, q2_max, x_crit};
use hill_core::{
    fiber_curve, grad_hcp, hamiltonian, hamiltonian_completed_square, hessian, in_hill_region, EnergyParam, PhasePoint,
};
use oracle::{
    brute_force_fiber_min, fiber_convexity_check, limit_fiber_deviation, ring_extremum_count, rng_from_seed,
    sample_admissible, sample_momentum, warmup_min, DiskGrid,
};
use rand::Rng;
use reduction::{
    argmin_f_q, blowup_forward, blowup_inverse, c_funcs, d_corner_sos, d_func, dc_dx, energy_gap, f_q, k_of_u, l_minus,
    l_plus, BlowupPoint,
};

use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    /// `worst` is a maximum that must stay below `limit`.
    Below,
    /// `worst` is a minimum that must stay above `limit`.
    Above,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub samples: usize,
    pub worst: f64,
    pub limit: f64,
    pub bound: Bound,
}

impl Check {
    fn max(name: &str, samples: usize, worst: f64, limit: f64) -> Self {
        Self { name: name.into(), samples, worst, limit, bound: Bound::Below }
    }

    fn min(name: &str, samples: usize, worst: f64, limit: f64) -> Self {
        Self { name: name.into(), samples, worst, limit, bound: Bound::Above }
    }

    pub fn passed(&self) -> bool {
        match self.bound {
            Bound::Below => self.worst < self.limit,
            Bound::Above => self.worst > self.limit,
        }
    }

    pub fn line(&self) -> String {
        let (label, rel) = match self.bound {
            Bound::Below => ("max", "<"),
            Bound::Above => ("min", ">"),
        };
        format!(
            "check {} samples = {} {label} = {:.6e} required {rel} {:.1e} verdict = {}",
            self.name,
            self.samples,
            self.worst,
            self.limit,
            if self.passed() { "pass" } else { "fail" }
        )
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(Check::passed)
}

/// Disk-vs-arc agreement, convexity of `f_q`, and the two extrema on the ring.
pub fn reduction_chain(seed: u64, trials: usize) -> Result<Vec<Check>> {
    let mut rng = rng_from_seed(seed);
    let grid = DiskGrid::default();
    let n = 200;
    let h = FRAC_PI_2 / n as f64;
    let (mut gap, mut second, mut extrema_off) = (0.0f64, f64::INFINITY, 0.0f64);
    for _ in 0..trials {
        let a = sample_admissible(&mut rng, 0.54)?;
        let brute = brute_force_fiber_min(a.q, a.c, &grid)?;
        let (_, arc) = argmin_f_q(a.q, a.c.value(), 2001)?;
        gap = gap.max((brute.value - arc).abs());
        let vals = (0..=n).map(|i| f_q(a.q, a.c.value(), h * i as f64)).collect::<reduction::Result<Vec<_>>>()?;
        for i in 1..n {
            let d2 = vals[i - 1] - 2.0 * vals[i] + vals[i + 1];
            second = second.min(d2 / vals[i].abs().max(1.0));
        }
        let count = ring_extremum_count(a.q, a.c, 720)?;
        extrema_off = extrema_off.max((count as f64 - 2.0).abs());
    }
    Ok(vec![
        Check::max("disk-vs-arc", trials, gap, 1e-6),
        Check::min("f_q-second-difference", trials, second, 0.0),
        Check::max("ring-extrema-minus-two", trials, extrema_off, 0.5),
    ])
}

/// Strict convexity and winding of sampled fibers, the Kepler limit, and the
/// tangential Hessian over `p = 0`.
pub fn fibers(seed: u64, count: usize) -> Result<Vec<Check>> {
    let mut rng = rng_from_seed(seed);
    let mut bad = 0usize;
    let mut turn = f64::INFINITY;
    for _ in 0..count {
        let (p, c) = sample_momentum(&mut rng, 5.0, 2.0);
        let v = fiber_convexity_check(&fiber_curve(p, c, 256)?)?;
        if !(v.convex && v.winding == 1) {
            bad += 1;
        }
        let (lo, hi) = v.turn_range;
        // smallest turn magnitude when all turns share a sign, else 0
        turn = turn.min(if lo > 0.0 || hi < 0.0 { lo.abs().min(hi.abs()) } else { 0.0 });
    }
    let levels = [0.01, 0.1, 0.5, 1.0, 2.0];
    let mut kepler = 0.0f64;
    let mut warm = f64::INFINITY;
    for dc in levels {
        let c = EnergyParam::new(c0() + dc)?;
        kepler = kepler.max(limit_fiber_deviation(c, 100.0)?);
        warm = warm.min(warmup_min(c, 256)?);
    }
    Ok(vec![
        Check::max("nonconvex-fibers", count, bad as f64, 0.5),
        Check::min("fiber-min-turn", count, turn, 0.0),
        Check::max("kepler-deviation-at-100", levels.len(), kepler, 1e-2),
        Check::min("warmup-tangential-hessian", levels.len(), warm, 0.0),
    ])
}

fn region_point(rng: &mut impl Rng, r_min: f64) -> Result<[f64; 2]> {
    loop {
        let q = [rng.gen_range(-x_crit()..x_crit()), rng.gen_range(-q2_max()..q2_max())];
        if q[0].hypot(q[1]) > r_min && in_hill_region(q)? {
            return Ok(q);
        }
    }
}

/// Finite-difference and algebraic identities on `n` seeded points each.
pub fn formulas(seed: u64, n: usize) -> Result<Vec<Check>> {
    let mut rng = rng_from_seed(seed);
    let (mut grad, mut hess, mut square, mut y_trip, mut k_trip, mut gap, mut dcdx) =
        (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for _ in 0..n {
        let q = region_point(&mut rng, 0.05)?;
        let p = [rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)];
        let c = rng.gen_range(c0()..c0() + 2.0);
        let h = 1e-6;
        let hq = |a: f64, b: f64| hamiltonian(&PhasePoint::new(a, b, p[0], p[1]), c);
        let g = grad_hcp(q, p)?;
        let fd = [
            (hq(q[0] + h, q[1])? - hq(q[0] - h, q[1])?) / (2.0 * h),
            (hq(q[0], q[1] + h)? - hq(q[0], q[1] - h)?) / (2.0 * h),
        ];
        let scale = g[0].hypot(g[1]).max(1.0);
        grad = grad.max((g[0] - fd[0]).abs().max((g[1] - fd[1]).abs()) / scale);

        let m = hessian(q)?;
        let h2 = 1e-5;
        let g1p = grad_hcp([q[0] + h2, q[1]], p)?;
        let g1m = grad_hcp([q[0] - h2, q[1]], p)?;
        let g2p = grad_hcp([q[0], q[1] + h2], p)?;
        let g2m = grad_hcp([q[0], q[1] - h2], p)?;
        let col1 = [(g1p[0] - g1m[0]) / (2.0 * h2), (g1p[1] - g1m[1]) / (2.0 * h2)];
        let col2 = [(g2p[0] - g2m[0]) / (2.0 * h2), (g2p[1] - g2m[1]) / (2.0 * h2)];
        let scale = m.a11.abs().max(m.a22.abs()).max(m.a12.abs()).max(1.0);
        let err = [col1[0] - m.a11, col1[1] - m.a12, col2[0] - m.a12, col2[1] - m.a22];
        hess = hess.max(err.iter().fold(0.0f64, |a, e| a.max(e.abs())) / scale);

        let s = PhasePoint::new(q[0], q[1], p[0], p[1]);
        square = square.max((hamiltonian(&s, c)? - hamiltonian_completed_square(&s, c)?).abs());

        let x = rng.gen_range(0.54..=x_crit());
        let k = rng.gen_range(0.0..=1.0);
        let (_, y) = blowup_forward(BlowupPoint { x, k })?;
        let (_, y2) = blowup_forward(blowup_inverse(x, y)?)?;
        y_trip = y_trip.max((y2 - y).abs());
        gap = gap.max((energy_gap(x, k) - (3.0 * x * x * y + 2.0 / x - 3.0 * 3f64.cbrt())).abs());

        let xa = rng.gen_range(0.54..x_crit() - 0.01);
        let (_, ya) = blowup_forward(BlowupPoint { x: xa, k })?;
        k_trip = k_trip.max((blowup_inverse(xa, ya)?.k - k).abs());

        let xf = rng.gen_range(0.63..x_crit() - 1e-5);
        let kf = k_of_u(rng.gen_range(0.0..=1.0));
        let d = dc_dx(xf, kf);
        let (hi, lo) = (c_funcs(xf + h, kf), c_funcs(xf - h, kf));
        for i in 0..4 {
            let fd = (hi[i] - lo[i]) / (2.0 * h);
            dcdx = dcdx.max((d[i] - fd).abs() / d[i].abs().max(1.0));
        }
    }
    Ok(vec![
        Check::max("gradient-fd", n, grad, 1e-6),
        Check::max("hessian-fd", n, hess, 1e-5),
        Check::max("completed-square", n, square, 1e-12),
        Check::max("blowup-y-round-trip", n, y_trip, 1e-12),
        Check::max("blowup-k-round-trip", n, k_trip, 1e-12),
        Check::max("energy-gap", n, gap, 1e-12),
        Check::max("dc-dx-fd", n, dcdx, 1e-5),
    ])
}

fn lin(lo: f64, hi: f64, n: usize, i: usize) -> f64 {
    lo + (hi - lo) * i as f64 / n as f64
}

/// Largest finite-difference `∂d/∂x` over the `(x, k, α)` grid with `n + 1` points
/// per axis on `[0.63, 3^{-1/3}] × [0, 1] × [0, π/2]`.
pub fn dd_dx_max(n: usize) -> f64 {
    let xc = x_crit();
    let h = 1e-6;
    let mut worst = f64::NEG_INFINITY;
    for i in 0..=n {
        let x = lin(0.63, xc, n, i);
        let (a, b) = ((x - h).max(0.63), (x + h).min(xc));
        for j in 0..=n {
            let k = lin(0.0, 1.0, n, j);
            for l in 0..=n {
                let alpha = lin(0.0, FRAC_PI_2, n, l);
                worst = worst.max((d_func(b, k, alpha) - d_func(a, k, alpha)) / (b - a));
            }
        }
    }
    worst
}

pub fn positive_grid(f: impl Fn(f64, f64) -> reduction::Result<f64>, x: (f64, f64, bool), n: usize) -> Result<f64> {
    let (lo, hi, closed) = x;
    let last = if closed { n } else { n - 1 };
    let mut worst = f64::INFINITY;
    for i in 0..=last {
        for j in 0..=n {
            worst = worst.min(f(lin(lo, hi, n, i), lin(0.0, 1.0, n, j))?);
        }
    }
    Ok(worst)
}

pub fn l_plus_min(n: usize) -> Result<f64> {
    positive_grid(l_plus, (0.54, x_crit(), false), n)
}

pub fn l_minus_min(n: usize) -> Result<f64> {
    positive_grid(l_minus, (0.54, 0.63, true), n)
}

/// Sign claims on grids: the Hessian is indefinite on the Hill region, `C2` and `C3`
/// decrease in `x`, `d` decreases in `x`, and the tangent lines are positive.
pub fn signs() -> Result<Vec<Check>> {
    let n = 200;
    let mut det = f64::NEG_INFINITY;
    let mut count = 0;
    for i in 0..n {
        for j in 0..n {
            let q = [
                -x_crit() + 2.0 * x_crit() * (i as f64 + 0.5) / n as f64,
                -q2_max() + 2.0 * q2_max() * (j as f64 + 0.5) / n as f64,
            ];
            if in_hill_region(q)? {
                det = det.max(hessian(q)?.det());
                count += 1;
            }
        }
    }
    // C2 and C3 vanish identically at k = 0 and k = 1, so the strict claim is on the open interval
    let (mut c2, mut c3) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for i in 0..=n {
        for j in 1..n {
            let d = dc_dx(lin(0.63, x_crit(), n, i), lin(0.0, 1.0, n, j));
            c2 = c2.max(d[1]);
            c3 = c3.max(d[2]);
        }
    }
    let m = 40;
    Ok(vec![
        Check::max("hessian-det-on-region", count, det, 0.0),
        Check::max("dC2-dx", (n + 1) * (n - 1), c2, 0.0),
        Check::max("dC3-dx", (n + 1) * (n - 1), c3, 0.0),
        Check::max("dd-dx-fd", (m + 1usize).pow(3), dd_dx_max(m), 0.0),
        Check::min("l_plus", n * (n + 1), l_plus_min(n)?, 0.0),
        Check::min("l_minus", (n + 1) * (n + 1), l_minus_min(n)?, 0.0),
    ])
}

/// Corner identity of `d` at `x = 3^{-1/3}` on an `n × n` grid of `[0,1] × [0,π/2]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CornerCheck {
    pub n: usize,
    pub max_gap: f64,
    pub min_value: f64,
    pub argmin: (f64, f64),
    /// `(k, α) = (2/3, arcsin(1/√3))`.
    pub zero: (f64, f64),
    pub value_at_zero: f64,
}

impl CornerCheck {
    pub fn passed(&self) -> bool {
        let (dk, da) = (1.0 / (self.n - 1) as f64, FRAC_PI_2 / (self.n - 1) as f64);
        self.max_gap < 1e-9
            && self.min_value >= 0.0
            && (self.argmin.0 - self.zero.0).abs() <= dk
            && (self.argmin.1 - self.zero.1).abs() <= da
            && self.value_at_zero.abs() < 1e-9
    }

    pub fn lines(&self) -> Vec<String> {
        vec![
            format!("corner grid = {}x{} max_gap = {:.6e} required < 1.0e-9", self.n, self.n, self.max_gap),
            format!("corner min = {:.6e} at k = {:.16e} alpha = {:.16e}", self.min_value, self.argmin.0, self.argmin.1),
            format!(
                "corner zero k = {:.16e} alpha = {:.16e} d = {:.6e} verdict = {}",
                self.zero.0,
                self.zero.1,
                self.value_at_zero,
                if self.passed() { "pass" } else { "fail" }
            ),
        ]
    }
}

pub fn corner_identity(n: usize) -> CornerCheck {
    let xc = x_crit();
    let mut max_gap = 0.0f64;
    let mut best = (f64::INFINITY, (0.0, 0.0));
    for i in 0..n {
        let k = i as f64 / (n - 1) as f64;
        for j in 0..n {
            let a = FRAC_PI_2 * j as f64 / (n - 1) as f64;
            let sos = d_corner_sos(k, a);
            max_gap = max_gap.max((d_func(xc, k, a) - sos).abs());
            if sos < best.0 {
                best = (sos, (k, a));
            }
        }
    }
    let zero = (2.0 / 3.0, (1.0 / 3f64.sqrt()).asin());
    CornerCheck { n, max_gap, min_value: best.0, argmin: best.1, zero, value_at_zero: d_func(xc, zero.0, zero.1) }
}
