//! The `verify` suites. Reports are certificates followed by `#` annotation lines;
//! nothing in them depends on timing, so reruns are byte-identical. Wall time goes
//! to stderr.

use std::time::Instant;

use certifier::{
    derivative_bounds, figure_rows, final_rect, final_sweep, lattice_1d, script_factor_bounds, table_factor_bounds,
    verify_factor_bounds, BoundMode, Certificate1D, Certificate2D, DerivativeBounds, FactorBoundReport, FigureVariant,
    FinalSweepOptions, Report, ReportEntry, PRINTED_B_U, PRINTED_B_X,
};

use crate::battery::{self, Check};
use crate::config::{DEFAULT_FIGURE_B, DEFAULT_FIGURE_EPS};
use crate::error::{CliError, Result};

/// Certificates plus annotations, rendered as a report.
#[derive(Debug, Default)]
pub struct ReportBuilder {
    pub report: Report,
    pub notes: Vec<String>,
}

impl ReportBuilder {
    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn render(&self, pass: bool) -> String {
        let mut s = self.report.to_text();
        s.push('\n');
        for n in &self.notes {
            s.push_str("# ");
            s.push_str(n);
            s.push('\n');
        }
        s.push_str(&format!("# result = {}\n", verdict(pass)));
        s
    }
}

pub fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

/// Reference minimum-table tolerance.
pub const TABLE_TOLERANCE: f64 = 2e-4;
/// The published bound `M < -19`.
pub const FINAL_M_REQUIRED: f64 = -19.0;
/// Relative tolerance on the published `B_x`, `B_u`.
pub const B_TOLERANCE: f64 = 1e-3;

#[derive(Debug, Clone)]
pub struct FigureRun {
    pub certificates: Vec<Certificate1D>,
    /// `(id, table m, |m - table m|)`
    pub table: Vec<(String, f64, f64)>,
    pub certifying: bool,
    pub evaluations: u64,
}

impl FigureRun {
    pub fn sweeps_pass(&self) -> bool {
        self.certificates.iter().all(|c| c.verdict.passed())
    }

    pub fn table_matches(&self) -> bool {
        self.table.iter().all(|t| t.2 < TABLE_TOLERANCE)
    }

    /// With the published parameters the minima must also match the table; coarser
    /// runs only need their own certificates to pass.
    pub fn passed(&self, variant: FigureVariant) -> bool {
        self.sweeps_pass() && (!self.certifying || variant == FigureVariant::Printed || self.table_matches())
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.certificates.iter().find(|c| !c.verdict.passed()).map(|c| c.id.as_str())
    }
}

pub fn run_figures(variant: FigureVariant, eps: f64, b: f64, ids: Option<&[&str]>) -> Result<FigureRun> {
    let rows: Vec<_> =
        figure_rows(variant).into_iter().filter(|r| ids.is_none_or(|ids| ids.contains(&r.id.as_str()))).collect();
    if rows.is_empty() {
        return Err(CliError::Config(format!("no figure row matches {ids:?}")));
    }
    let mut run = FigureRun {
        certificates: Vec::new(),
        table: Vec::new(),
        certifying: eps == DEFAULT_FIGURE_EPS && b == DEFAULT_FIGURE_B,
        evaluations: 0,
    };
    for row in rows {
        let t = Instant::now();
        let cert = row.certify(eps, b)?;
        let n = lattice_1d(row.lo, row.hi, eps).count() as u64;
        eprintln!("{}: m = {:.7} in {:.2?} ({n} points)", row.id, cert.m, t.elapsed());
        run.evaluations += n;
        run.table.push((row.id.clone(), row.table_m, (cert.m - row.table_m).abs()));
        run.certificates.push(cert);
    }
    Ok(run)
}

pub fn figures_report(run: &FigureRun, variant: FigureVariant, builder: &mut ReportBuilder) {
    for c in &run.certificates {
        builder.report.push(ReportEntry::One(c.clone()));
    }
    builder.note(format!("variant = {variant:?}"));
    if !run.certifying {
        builder.note("non-certifying: eps or B differs from the published parameters, table comparison skipped");
    }
    for (id, m, dev) in &run.table {
        builder.note(format!("table {id} m = {m:.4} deviation = {dev:.3e}"));
    }
    builder.note(format!("evaluations = {}", run.evaluations));
}

#[derive(Debug, Clone)]
pub struct FinalRun {
    pub mode: BoundMode,
    pub factors: FactorBoundReport,
    pub bounds: DerivativeBounds,
    pub certificate: Certificate2D,
    pub certifying: bool,
    pub evaluations: u64,
}

impl FinalRun {
    pub fn b_x_deviation(&self) -> f64 {
        (self.bounds.b_x - PRINTED_B_X).abs() / PRINTED_B_X
    }

    pub fn b_u_deviation(&self) -> f64 {
        (self.bounds.b_u - PRINTED_B_U).abs() / PRINTED_B_U
    }

    /// `(stage, passed)` for bounds, sweep and margin.
    pub fn stages(&self) -> [(&'static str, bool); 3] {
        [
            ("bounds", self.factors.all_ok()),
            ("sweep", self.certificate.big_m < FINAL_M_REQUIRED),
            ("margin", self.certificate.verdict.passed()),
        ]
    }

    pub fn passed(&self) -> bool {
        self.stages().iter().all(|s| s.1)
    }
}

pub fn factor_table(mode: BoundMode) -> std::collections::BTreeMap<certifier::Factor, f64> {
    match mode {
        BoundMode::PublishedScript => script_factor_bounds(),
        BoundMode::PublishedTable => table_factor_bounds(),
        BoundMode::Certified => certifier::certified_factor_bounds(400, 10_000),
    }
}

pub fn run_final(mode: BoundMode, opts: &FinalSweepOptions) -> Result<FinalRun> {
    let t = Instant::now();
    let factors = verify_factor_bounds(&factor_table(mode), 400, 10_000);
    let bounds = derivative_bounds(mode)?;
    eprintln!("bounds: B_x = {:.6e}, B_u = {:.6e} in {:.2?}", bounds.b_x, bounds.b_u, t.elapsed());
    let rect = final_rect();
    let t = Instant::now();
    eprintln!("sweep: {} stripes over [{}, {}] x [0, 1]", opts.stripes, rect.x0, rect.x1);
    let certificate = final_sweep(&rect, opts, bounds)?;
    let nx = lattice_1d(rect.x0, rect.x1, opts.eps_x).count() as u64;
    let nu = lattice_1d(rect.u0, rect.u1, opts.eps_u).count() as u64;
    eprintln!("sweep: M = {:.6} in {:.2?} ({} points)", certificate.big_m, t.elapsed(), nx * nu);
    let def = FinalSweepOptions::default();
    Ok(FinalRun {
        mode,
        factors,
        bounds,
        certificate,
        certifying: opts.eps_x == def.eps_x && opts.eps_u == def.eps_u,
        evaluations: nx * nu,
    })
}

pub fn final_report(run: &FinalRun, builder: &mut ReportBuilder) {
    builder.report.push(ReportEntry::Two(run.certificate.clone()));
    builder.note(format!("bounds mode = {:?}", run.mode));
    if !run.certifying {
        builder.note("non-certifying: eps_x or eps_u differs from the published parameters");
    }
    for r in &run.factors.rows {
        builder.note(format!(
            "factor {} table = {} certified_sup = {:.6e} sampled_max = {:.6e} ok = {}",
            r.factor.name(),
            r.table_bound,
            r.certified_sup,
            r.sampled_max,
            r.ok
        ));
    }
    builder.note(format!(
        "B_x = {:.10e} reference = {PRINTED_B_X:.9e} relative_deviation = {:.3e}",
        run.bounds.b_x,
        run.b_x_deviation()
    ));
    builder.note(format!(
        "B_u = {:.10e} reference = {PRINTED_B_U:.9e} relative_deviation = {:.3e}",
        run.bounds.b_u,
        run.b_u_deviation()
    ));
    builder.note(format!("M required < {FINAL_M_REQUIRED}"));
    builder.note(format!("evaluations = {}", run.evaluations));
    for (stage, ok) in run.stages() {
        builder.note(format!("stage {stage} = {}", verdict(ok)));
    }
}

pub const STEP1_ROWS: [&str; 2] = ["fig2", "fig5"];

#[derive(Debug, Clone)]
pub struct StepsRun {
    pub step1: FigureRun,
    pub step2: FigureRun,
    pub tangent_lines: Vec<Check>,
    pub dd_dx: Check,
    pub corner: battery::CornerCheck,
    pub last: FinalRun,
    pub variant: FigureVariant,
}

impl StepsRun {
    pub fn steps(&self) -> [(&'static str, bool); 3] {
        [
            ("step1", self.step1.passed(self.variant)),
            ("step2", self.step2.passed(self.variant) && battery::all_pass(&self.tangent_lines)),
            ("step3", self.dd_dx.passed() && self.corner.passed() && self.last.passed()),
        ]
    }
}

pub fn run_steps(variant: FigureVariant, eps: f64, mode: BoundMode, opts: &FinalSweepOptions) -> Result<StepsRun> {
    let step1 = run_figures(variant, eps, DEFAULT_FIGURE_B, Some(&STEP1_ROWS))?;
    let rest: Vec<String> =
        figure_rows(variant).into_iter().map(|r| r.id).filter(|id| !STEP1_ROWS.contains(&id.as_str())).collect();
    let rest: Vec<&str> = rest.iter().map(String::as_str).collect();
    let step2 = run_figures(variant, eps, DEFAULT_FIGURE_B, Some(&rest))?;
    let n = 200;
    let tangent_lines = vec![
        Check {
            name: "l_plus".into(),
            samples: n * (n + 1),
            worst: battery::l_plus_min(n)?,
            limit: 0.0,
            bound: battery::Bound::Above,
        },
        Check {
            name: "l_minus".into(),
            samples: (n + 1) * (n + 1),
            worst: battery::l_minus_min(n)?,
            limit: 0.0,
            bound: battery::Bound::Above,
        },
    ];
    let m = 40;
    let dd_dx = Check {
        name: "dd-dx-fd".into(),
        samples: (m + 1) * (m + 1) * (m + 1),
        worst: battery::dd_dx_max(m),
        limit: 0.0,
        bound: battery::Bound::Below,
    };
    let corner = battery::corner_identity(500);
    let last = run_final(mode, opts)?;
    Ok(StepsRun { step1, step2, tangent_lines, dd_dx, corner, last, variant })
}

pub fn steps_report(run: &StepsRun, builder: &mut ReportBuilder) {
    let mut sub = ReportBuilder::default();
    figures_report(&run.step1, run.variant, &mut sub);
    figures_report(&run.step2, run.variant, &mut sub);
    for c in &run.tangent_lines {
        sub.note(c.line());
    }
    sub.note(run.dd_dx.line());
    for l in run.corner.lines() {
        sub.note(l);
    }
    final_report(&run.last, &mut sub);
    builder.report.entries.extend(sub.report.entries);
    builder.notes.extend(sub.notes);
    for (step, ok) in run.steps() {
        builder.note(format!("{step} = {}", verdict(ok)));
    }
}
