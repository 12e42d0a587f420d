use hill_core::consts::{cbrt3, cbrt9};

/// Finite sum of terms `(num/den) · 3^{j/3} · x^n`, `j ∈ {0,1,2}`.
#[derive(Debug, Clone, Copy)]
pub struct Laurent(pub &'static [(i64, i64, u8, i32)]);

fn cube_root_power(j: u8) -> f64 {
    match j {
        0 => 1.0,
        1 => cbrt3(),
        2 => cbrt9(),
        _ => unreachable!("exponent folded into the rational part"),
    }
}

impl Laurent {
    pub fn eval(&self, x: f64) -> f64 {
        self.0.iter().map(|&(num, den, j, n)| num as f64 / den as f64 * cube_root_power(j) * x.powi(n)).sum()
    }

    pub fn deriv(&self, x: f64) -> f64 {
        self.0
            .iter()
            .filter(|t| t.3 != 0)
            .map(|&(num, den, j, n)| (num * n as i64) as f64 / den as f64 * cube_root_power(j) * x.powi(n - 1))
            .sum()
    }

    pub fn terms(&self) -> &'static [(i64, i64, u8, i32)] {
        self.0
    }
}
