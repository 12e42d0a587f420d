use certifier::{
    derivative_bounds, f_expansion, final_rect, final_sweep, sweep_max_2d, table_factor_bounds, verify_factor_bounds,
    BoundMode, DerivativeBounds, Factor, FinalSweepOptions, R3Convention, Rect,
};
use reduction::{f_xu, FactorValues};

#[test]
fn expansion_derivatives_match_finite_differences() {
    let e = f_expansion(R3Convention::Exact).unwrap();
    let h = 1e-6;
    for i in 0..=6 {
        for j in 1..=9 {
            let x = 0.632 + 0.0085 * i as f64;
            let u = 0.1 * j as f64;
            let v = FactorValues::at(x, u);
            let fu = (f_xu(x, u + h) - f_xu(x, u - h)) / (2.0 * h);
            let fx = (f_xu(x + h, u) - f_xu(x - h, u)) / (2.0 * h);
            assert!((e.f_u.eval(x, &v) - fu).abs() < 1e-4 * fu.abs().max(1.0), "{x} {u}");
            assert!((e.f_x.eval(x, &v) - fx).abs() < 1e-4 * fx.abs().max(1.0), "{x} {u}");
        }
    }
}

#[test]
fn factor_table_check() {
    let r = verify_factor_bounds(&table_factor_bounds(), 400, 10_000);
    for row in &r.rows {
        println!(
            "{:6} table {:9.4} sup {:9.4} sampled {:9.4} {}",
            row.factor.name(),
            row.table_bound,
            row.certified_sup,
            row.sampled_max,
            row.ok
        );
    }
    let bad: Vec<Factor> = r.rows.iter().filter(|r| !r.ok).map(|r| r.factor).collect();
    assert_eq!(bad, vec![Factor::A0xu]);
    let a0xu = r.row(Factor::A0xu).unwrap();
    assert!(a0xu.sampled_max > 4.0, "{a0xu:?}");
}

#[test]
fn certified_bounds_are_finite() {
    let t = derivative_bounds(BoundMode::PublishedTable).unwrap();
    let c = derivative_bounds(BoundMode::Certified).unwrap();
    println!("table B_x {} B_u {}; certified B_x {} B_u {}", t.b_x, t.b_u, c.b_x, c.b_u);
    assert!(c.b_x.is_finite() && c.b_u.is_finite());
    assert!(c.b_x > 1e5 && c.b_u > 1e5);
}

#[test]
fn quadratic_maximum_lands_next_to_the_peak() {
    let rect = Rect::new(0.6, 0.7, 0.0, 1.0).unwrap();
    let (eps_x, eps_u) = (1e-3, 1e-2);
    let (m, (x, u)) = sweep_max_2d(
        |x, u| Ok::<_, std::convert::Infallible>(-(x - 0.65f64).powi(2) - (u - 0.5f64).powi(2)),
        &rect,
        eps_x,
        eps_u,
        4,
    )
    .unwrap();
    assert!((x - 0.65).abs() <= eps_x / 2.0 + 1e-12);
    assert!((u - 0.5).abs() <= eps_u / 2.0 + 1e-12);
    assert!(m <= 0.0 && m > -1e-6);
}

#[test]
fn f_is_not_negative_on_the_rectangle() {
    let bounds = derivative_bounds(BoundMode::PublishedScript).unwrap();
    let opts = FinalSweepOptions { eps_x: 1e-3, eps_u: 1e-3, stripes: 4 };
    let c = final_sweep(&final_rect(), &opts, bounds).unwrap();
    assert!(c.big_m > 90.0, "{c:?}");
    assert!(!c.verdict.passed());
    let shrunk = Rect::new(0.69, final_rect().x1, 0.0, 1.0).unwrap();
    let c = final_sweep(&shrunk, &opts, DerivativeBounds { b_x: 0.0, b_u: 0.0 }).unwrap();
    assert!(c.big_m > 90.0);
    assert!(!c.verdict.passed());
}
