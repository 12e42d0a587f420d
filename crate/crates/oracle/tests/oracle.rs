use std::f64::consts::{FRAC_PI_2, TAU};

use hill_core::{critical_data, fiber_curve, hamiltonian, pointwise_level, symmetry_images, EnergyParam, PhasePoint};
use oracle::{
    brute_force_fiber_min, fiber_convexity_check, flow_integrate, limit_fiber_deviation, ring_extremum_count,
    rng_from_seed, sample_admissible, warmup_min, DiskGrid,
};

fn on_level(q: [f64; 2], c: f64, angle: f64) -> PhasePoint {
    let v = (2.0 * (pointwise_level(q).unwrap() - c)).sqrt();
    PhasePoint::new(q[0], q[1], v * angle.cos() - q[1], v * angle.sin() + q[0])
}

#[test]
fn minimum_is_positive_on_the_ring_and_in_the_first_quarter_turn() {
    let mut rng = rng_from_seed(11);
    let grid = DiskGrid { n_radial: 60, n_angular: 360 };
    for _ in 0..1000 {
        let a = sample_admissible(&mut rng, 0.54).unwrap();
        let m = brute_force_fiber_min(a.q, a.c, &grid).unwrap();
        assert!(m.value > 0.0, "{a:?}: {}", m.value);
        assert!(m.on_boundary, "{a:?}");
        let theta = a.q[1].atan2(a.q[0]);
        let rel = (m.angle - theta).rem_euclid(TAU);
        assert!(rel <= FRAC_PI_2 + TAU / 360.0, "{a:?}: {rel}");
    }
}

#[test]
fn ring_has_two_extrema() {
    let mut rng = rng_from_seed(12);
    for _ in 0..1000 {
        let a = sample_admissible(&mut rng, 0.54).unwrap();
        assert_eq!(ring_extremum_count(a.q, a.c, 720).unwrap(), 2, "{a:?}");
    }
}

#[test]
fn sample_fibers_are_convex() {
    for (p, c) in [([0.0, 0.0], 2.3), ([1.5, -0.7], 2.2)] {
        let curve = fiber_curve(p, EnergyParam::new(c).unwrap(), 256).unwrap();
        let v = fiber_convexity_check(&curve).unwrap();
        assert!(v.convex, "{p:?} {c}: {v:?}");
        assert_eq!(v.winding, 1);
    }
}

#[test]
fn kepler_limit() {
    let c = EnergyParam::new(2.2).unwrap();
    let d10 = limit_fiber_deviation(c, 10.0).unwrap();
    let d100 = limit_fiber_deviation(c, 100.0).unwrap();
    assert!(d10 < 0.1, "{d10}");
    assert!(d100 < 1e-2, "{d100}");
    assert!(d100 < d10);
}

#[test]
fn warmup_tangential_hessian_is_positive() {
    for i in 0..20 {
        let c = EnergyParam::new(2.17 + 0.1 * i as f64).unwrap();
        assert!(warmup_min(c, 256).unwrap() > 0.0, "{c:?}");
    }
}

#[test]
fn equilibrium_stays_put() {
    let (eq, _, _) = critical_data();
    let c = EnergyParam::new(2.2).unwrap();
    let tr = flow_integrate(eq, c, 1e-4, 1000, 1).unwrap();
    for w in tr.states.windows(2) {
        let (a, b) = (w[0].state, w[1].state);
        let d = (a.q1 - b.q1).abs() + (a.q2 - b.q2).abs() + (a.p1 - b.p1).abs() + (a.p2 - b.p2).abs();
        assert!(d < 1e-10, "{d}");
    }
}

#[test]
fn generic_drift_is_small() {
    for (q, c, angle) in [([0.6, 0.0], 2.165, 0.3), ([0.4, 0.2], 2.17, 1.0), ([0.1, 0.05], 3.0, 1.0)] {
        let start = on_level(q, c, angle);
        assert!(hamiltonian(&start, c).unwrap().abs() < 1e-12);
        let tr = flow_integrate(start, EnergyParam::new(c).unwrap(), 1e-4, 100_000, 100).unwrap();
        assert!(!tr.collision);
        assert!(tr.max_drift() < 1e-6, "{q:?}: {}", tr.max_drift());
    }
}

#[test]
fn reflected_start_retraces_the_orbit_backwards() {
    let c = 2.2;
    let start = on_level([0.4, 0.2], c, 1.0);
    let e = EnergyParam::new(c).unwrap();
    let fwd = flow_integrate(start, e, 1e-3, 2000, 2000).unwrap();
    let (r1_end, _) = symmetry_images(&fwd.last().state);
    let back = flow_integrate(r1_end, e, 1e-3, 2000, 2000).unwrap();
    let (want, _) = symmetry_images(&start);
    let got = back.last().state;
    let d = (got.q1 - want.q1).abs() + (got.q2 - want.q2).abs() + (got.p1 - want.p1).abs() + (got.p2 - want.p2).abs();
    assert!(d < 1e-9, "{d}");
}

#[test]
fn csv_headers() {
    let e = EnergyParam::new(2.2).unwrap();
    let tr = flow_integrate(on_level([0.4, 0.2], 2.2, 1.0), e, 1e-3, 10, 1).unwrap();
    assert!(tr.to_csv().starts_with("t,q1,q2,p1,p2,Kc\n"));
    assert_eq!(tr.to_csv().lines().count(), 12);
}
