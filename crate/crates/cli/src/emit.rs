//! CSV writers for the data behind the figures and the oracle scans.

use std::f64::consts::FRAC_PI_2;

use certifier::{figure_rows, final_rect, FigureVariant};
use hill_core::consts::{c0, x_crit};
use hill_core::{fiber_curve, hill_boundary, pointwise_level, EnergyParam, PhasePoint};
use oracle::{brute_force_fiber_min, flow_integrate, DiskGrid};
use reduction::{d_corner_sos, f_xu, l_minus, l_plus};

use crate::config::EmitArgs;
use crate::error::{CliError, Result};

/// `(file name, contents)`
pub type CsvFile = (String, String);

fn pair(v: &[f64], default: [f64; 2], what: &str) -> Result<[f64; 2]> {
    match v {
        [] => Ok(default),
        [a, b] => Ok([*a, *b]),
        _ => Err(CliError::Config(format!("--{what} takes two comma-separated values"))),
    }
}

fn energy(c: f64) -> Result<EnergyParam> {
    EnergyParam::new(c).map_err(|e| CliError::Config(e.to_string()))
}

/// Figure row id for a graph name: `f2` → `fig2`, `L3m` → `fig15m`.
pub fn graph_row_id(name: &str) -> Option<String> {
    if let Some(n) = name.strip_prefix('f') {
        return matches!(n, "2" | "5" | "9" | "10" | "11" | "12").then(|| format!("fig{n}"));
    }
    let rest = name.strip_prefix('L')?;
    let (case, end) = rest.split_at(1.min(rest.len()));
    let case: u8 = case.parse().ok().filter(|c| (1..=5).contains(c))?;
    matches!(end, "m" | "M").then(|| format!("fig{}{end}", 12 + case))
}

fn grid_2d(
    name: &str,
    header: &str,
    x: (f64, f64),
    y: (f64, f64),
    n: usize,
    f: impl Fn(f64, f64) -> Result<f64>,
) -> Result<CsvFile> {
    let mut out = format!("{header}\n");
    for i in 0..=n {
        let a = x.0 + (x.1 - x.0) * i as f64 / n as f64;
        for j in 0..=n {
            let b = y.0 + (y.1 - y.0) * j as f64 / n as f64;
            out.push_str(&format!("{a:e},{b:e},{:e}\n", f(a, b)?));
        }
    }
    Ok((format!("graph_{name}.csv"), out))
}

pub fn graph(name: &str, n: Option<usize>, variant: FigureVariant) -> Result<CsvFile> {
    let xc = x_crit();
    match name {
        // l_plus vanishes to second order at the corner, the last column is x = 3^{-1/3}
        "l_plus" => grid_2d(name, "x,k,value", (0.54, xc), (0.0, 1.0), n.unwrap_or(100), |x, k| Ok(l_plus(x, k)?)),
        "l_minus" => grid_2d(name, "x,k,value", (0.54, 0.63), (0.0, 1.0), n.unwrap_or(100), |x, k| Ok(l_minus(x, k)?)),
        "F" => {
            let r = final_rect();
            grid_2d(name, "x,u,value", (r.x0, r.x1), (r.u0, r.u1), n.unwrap_or(100), |x, u| Ok(f_xu(x, u)))
        }
        "d_corner" => grid_2d(name, "k,alpha,value", (0.0, 1.0), (0.0, FRAC_PI_2), n.unwrap_or(100), |k, a| {
            Ok(d_corner_sos(k, a))
        }),
        _ => {
            let id = graph_row_id(name).ok_or_else(|| CliError::Config(format!("unknown graph {name:?}")))?;
            let row = figure_rows(variant).into_iter().find(|r| r.id == id).expect("every graph id names a row");
            let n = n.unwrap_or(1000).max(1);
            // the scaled functions are singular-free but the plots start away from 0
            let lo = row.lo.max(0.01);
            let mut out = String::from("x,value\n");
            for i in 0..=n {
                let x = lo + (row.hi - lo) * i as f64 / n as f64;
                out.push_str(&format!("{x:e},{:e}\n", row.eval(x)));
            }
            Ok((format!("graph_{name}.csv"), out))
        }
    }
}

pub fn emit(args: &EmitArgs) -> Result<Vec<CsvFile>> {
    let target = args.target.as_str();
    if let Some(name) = target.strip_prefix("graph:") {
        return Ok(vec![graph(name, args.n, args.variant.into())?]);
    }
    match target {
        "hill-region" => {
            let pts = hill_boundary(c0(), args.n.unwrap_or(2000))?;
            let mut out = String::from("theta,q1,q2\n");
            for (t, q) in pts {
                out.push_str(&format!("{t:e},{:e},{:e}\n", q[0], q[1]));
            }
            Ok(vec![("hill_region.csv".into(), out)])
        }
        "fiber" => {
            let p = pair(&args.p, [0.0, 0.0], "p")?;
            let curve = fiber_curve(p, energy(args.c.unwrap_or(2.5))?, args.n.unwrap_or(256))?;
            Ok(vec![("fiber.csv".into(), curve.to_csv())])
        }
        "flow" => {
            let q = pair(&args.q, [0.4, 0.2], "q")?;
            let c = args.c.unwrap_or(2.2);
            let b = pointwise_level(q)?;
            if !(b > c) {
                return Err(CliError::Config(format!("c = {c} is not below b(q) = {b}")));
            }
            // on H = -c with p + Jq pointing at angle 1
            let v = (2.0 * (b - c)).sqrt();
            let start = PhasePoint::new(q[0], q[1], v * 1f64.cos() - q[1], v * 1f64.sin() + q[0]);
            let every = args.n.unwrap_or(10).max(1);
            let tr = flow_integrate(start, energy(c)?, args.dt, args.steps, every)?;
            eprintln!("flow: max drift {:.3e}, collision {}", tr.max_drift(), tr.collision);
            Ok(vec![("flow.csv".into(), tr.to_csv())])
        }
        "disk" => {
            let q = pair(&args.q, [0.6, 0.05], "q")?;
            let b = pointwise_level(q)?;
            if !(b > c0()) {
                return Err(CliError::Config(format!("q = {q:?} is outside the Hill region")));
            }
            let c = args.c.unwrap_or(0.5 * (c0() + b));
            let n = args.n.unwrap_or(200);
            let m = brute_force_fiber_min(q, energy(c)?, &DiskGrid { n_radial: n, n_angular: 720 })?;
            eprintln!("disk: min {:.6e} at angle {:.6}, boundary {}", m.value, m.angle, m.on_boundary);
            Ok(vec![("disk.csv".into(), m.to_csv())])
        }
        _ => Err(CliError::Config(format!("unknown emit target {target:?}"))),
    }
}
