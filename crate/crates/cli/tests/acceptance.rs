//! One PASS/FAIL line per acceptance criterion.
//!
//! Criterion 2 cannot pass: `F` is positive near the corner of the final rectangle,
//! so the 2-D sweep returns `M ≈ +91.3` and the factor table is violated at `a0_xu`.
//! That line stays FAIL; its reproducible parts are still enforced. Any other
//! failure makes the target fail.

use std::time::{Duration, Instant};

use certifier::{f_witness_check, BoundMode, Factor, FigureVariant, FinalSweepOptions};
use hill_cli::battery::{self, Check};
use hill_cli::config::{DEFAULT_FIGURE_B, DEFAULT_FIGURE_EPS, DEFAULT_SEED};
use hill_cli::verify::{self, B_TOLERANCE, FINAL_M_REQUIRED};

struct Line {
    id: u8,
    pass: bool,
    detail: String,
}

fn checks_detail(checks: &[Check]) -> String {
    checks.iter().map(|c| format!("{} {:.3e}", c.name, c.worst)).collect::<Vec<_>>().join(", ")
}

fn checks_line(id: u8, checks: Vec<Check>) -> Line {
    Line { id, pass: battery::all_pass(&checks), detail: checks_detail(&checks) }
}

fn criterion_1() -> Line {
    let t = Instant::now();
    let run = verify::run_figures(FigureVariant::Tabulated, DEFAULT_FIGURE_EPS, DEFAULT_FIGURE_B, None).unwrap();
    let elapsed = t.elapsed();
    let worst = run.table.iter().map(|t| t.2).fold(0.0, f64::max);
    let pass =
        run.certificates.len() == 16 && run.sweeps_pass() && run.table_matches() && elapsed < Duration::from_secs(60);
    Line { id: 1, pass, detail: format!("16 sweeps, worst table deviation {worst:.2e}, {elapsed:.1?}") }
}

/// Returns the line and whether the reproducible parts held.
fn criterion_2() -> (Line, bool) {
    let t = Instant::now();
    let run = verify::run_final(BoundMode::PublishedScript, &FinalSweepOptions::default()).unwrap();
    let elapsed = t.elapsed();
    let bad: Vec<Factor> = run.factors.rows.iter().filter(|r| !r.ok).map(|r| r.factor).collect();
    let c = &run.certificate;
    let (_, _, f_at_witness) = f_witness_check();
    let reproducible = run.b_x_deviation() < B_TOLERANCE
        && run.b_u_deviation() < B_TOLERANCE
        && bad == [Factor::A0xu]
        && c.big_m > 90.0
        && f_at_witness > 90.0
        && elapsed < Duration::from_secs(600);
    let pass = run.passed() && c.big_m < FINAL_M_REQUIRED;
    let detail = format!(
        "B_x dev {:.1e}, B_u dev {:.1e}, factor table fails at {:?}, M = {:+.4} at ({:.6}, {:.6}) needs < {FINAL_M_REQUIRED}, {elapsed:.1?}",
        run.b_x_deviation(),
        run.b_u_deviation(),
        bad.iter().map(|f| f.name()).collect::<Vec<_>>(),
        c.big_m,
        c.witness.0,
        c.witness.1,
    );
    (Line { id: 2, pass, detail }, reproducible)
}

fn criterion_3() -> Line {
    let c = battery::corner_identity(500);
    Line {
        id: 3,
        pass: c.passed(),
        detail: format!(
            "max gap {:.2e}, min {:.2e} at (k, a) = ({:.4}, {:.4})",
            c.max_gap, c.min_value, c.argmin.0, c.argmin.1
        ),
    }
}

fn main() {
    let mut lines = vec![criterion_1()];
    let (two, reproducible) = criterion_2();
    lines.push(two);
    lines.push(criterion_3());
    let chain = battery::reduction_chain(DEFAULT_SEED, 1000).unwrap();
    lines.push(checks_line(4, chain[..1].to_vec()));
    lines.push(checks_line(5, chain[1..].to_vec()));
    let fibers = battery::fibers(DEFAULT_SEED + 1, 200).unwrap();
    lines.push(checks_line(6, fibers[..3].to_vec()));
    lines.push(checks_line(7, battery::formulas(DEFAULT_SEED + 2, 1000).unwrap()));
    lines.push(checks_line(8, battery::signs().unwrap()));

    for l in &lines {
        println!("{} criterion {}: {}", if l.pass { "PASS" } else { "FAIL" }, l.id, l.detail);
    }
    println!(
        "criterion 2 reproducible parts (B values, factor table, positive M): {}",
        if reproducible { "held" } else { "broken" }
    );
    let unexpected: Vec<u8> = lines.iter().filter(|l| !l.pass && l.id != 2).map(|l| l.id).collect();
    if !unexpected.is_empty() || !reproducible {
        eprintln!("unexpected failures: {unexpected:?}, criterion 2 reproducible parts held: {reproducible}");
        std::process::exit(1);
    }
}
