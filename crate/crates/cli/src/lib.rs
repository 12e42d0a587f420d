//! Command-line front end: certification suites, oracle batteries and CSV output.
//!
//! Exit status: 0 when every check passes, 1 on a failed certificate or check, 2 on
//! a configuration error, 3 on an evaluation error.

pub mod battery;
pub mod config;
pub mod emit;
mod error;
pub mod verify;

use std::fs;
use std::path::PathBuf;

use certifier::{FigureVariant, FinalSweepOptions};

pub use config::RunConfig;
pub use error::{CliError, Result};

use config::{Command, Suite, DEFAULT_FIGURE_EPS};
use verify::{verdict, ReportBuilder};

#[derive(Debug, Clone)]
pub struct Outcome {
    /// Report text, printed to stdout and written to `<out>/<stem>.report`.
    pub text: String,
    pub stem: String,
    pub pass: bool,
    pub files: Vec<PathBuf>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }
}

fn figure_eps(cfg: &RunConfig) -> Result<f64> {
    match cfg.eps.as_slice() {
        [] => Ok(DEFAULT_FIGURE_EPS),
        [e] => Ok(*e),
        _ => Err(CliError::Config("the 1-D sweeps take a single --eps".into())),
    }
}

fn final_options(cfg: &RunConfig) -> Result<FinalSweepOptions> {
    let d = FinalSweepOptions::default();
    let (eps_x, eps_u) = match cfg.eps.as_slice() {
        [] => (d.eps_x, d.eps_u),
        [e] => (*e, *e),
        [x, u] => (*x, *u),
        _ => return Err(CliError::Config("--eps takes one or two values".into())),
    };
    if cfg.stripes == 0 {
        return Err(CliError::Config("--stripes must be positive".into()));
    }
    Ok(FinalSweepOptions { eps_x, eps_u, stripes: cfg.stripes })
}

fn write(cfg: &RunConfig, name: &str, contents: &str) -> Result<Option<PathBuf>> {
    let Some(dir) = &cfg.out else { return Ok(None) };
    fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.clone(), source })?;
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|source| CliError::Io { path: path.clone(), source })?;
    Ok(Some(path))
}

fn oracle_report(cfg: &RunConfig, trials: usize) -> Result<(String, bool)> {
    if trials == 0 {
        return Err(CliError::Config("--trials must be positive".into()));
    }
    let mut checks = battery::reduction_chain(cfg.seed, trials)?;
    checks.extend(battery::fibers(cfg.seed.wrapping_add(1), trials.min(200))?);
    checks.extend(battery::formulas(cfg.seed.wrapping_add(2), trials)?);
    checks.extend(battery::signs()?);
    let corner = battery::corner_identity(500);
    let pass = battery::all_pass(&checks) && corner.passed();
    let mut b = ReportBuilder::default();
    b.note(format!("oracle seed = {} trials = {trials}", cfg.seed));
    for c in &checks {
        b.note(c.line());
    }
    for l in corner.lines() {
        b.note(l);
    }
    Ok((b.render(pass), pass))
}

/// Runs one command. Reports and CSV files go to `--out` when given.
pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    let mut files = Vec::new();
    let (stem, text, pass) = match &cfg.command {
        Command::Verify { suite: Suite::Figures { b, variant } } => {
            let variant: FigureVariant = (*variant).into();
            let only = cfg.only.as_deref().map(|s| vec![s]);
            let run = verify::run_figures(variant, figure_eps(cfg)?, *b, only.as_deref())?;
            let mut builder = ReportBuilder::default();
            verify::figures_report(&run, variant, &mut builder);
            let pass = run.passed(variant);
            if let Some(id) = run.first_failure() {
                eprintln!("first failing row: {id}");
            }
            ("figures", builder.render(pass), pass)
        }
        Command::Verify { suite: Suite::Final { bounds } } => {
            let run = verify::run_final((*bounds).into(), &final_options(cfg)?)?;
            let mut builder = ReportBuilder::default();
            verify::final_report(&run, &mut builder);
            for (stage, ok) in run.stages() {
                if !ok {
                    eprintln!("failed stage: {stage}");
                }
            }
            ("final", builder.render(run.passed()), run.passed())
        }
        Command::Verify { suite: Suite::Steps { variant, bounds } } => {
            let run = verify::run_steps(
                (*variant).into(),
                figure_eps(cfg).unwrap_or(DEFAULT_FIGURE_EPS),
                (*bounds).into(),
                &final_options(cfg)?,
            )?;
            let mut builder = ReportBuilder::default();
            verify::steps_report(&run, &mut builder);
            let steps = run.steps();
            for (step, ok) in steps {
                eprintln!("{step}: {}", verdict(ok));
            }
            let pass = steps.iter().all(|s| s.1);
            ("steps", builder.render(pass), pass)
        }
        Command::Oracle { trials } => {
            let (text, pass) = oracle_report(cfg, *trials)?;
            ("oracle", text, pass)
        }
        Command::Emit(args) => {
            let mut listing = String::new();
            for (name, csv) in emit::emit(args)? {
                let path = write(cfg, &name, &csv)?.unwrap_or_else(|| PathBuf::from(&name));
                if cfg.out.is_none() {
                    fs::write(&path, &csv).map_err(|source| CliError::Io { path: path.clone(), source })?;
                }
                listing.push_str(&format!("{}\n", path.display()));
                files.push(path);
            }
            return Ok(Outcome { text: listing, stem: "emit".into(), pass: true, files });
        }
    };
    if let Some(p) = write(cfg, &format!("{stem}.report"), &text)? {
        files.push(p);
    }
    Ok(Outcome { text, stem: stem.into(), pass, files })
}
