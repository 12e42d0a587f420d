//! Constants of the critical configuration, computed from cube roots rather than
//! decimal literals.

/// `3^{1/3}`
#[inline]
pub fn cbrt3() -> f64 {
    3f64.cbrt()
}

/// `3^{2/3}`
#[inline]
pub fn cbrt9() -> f64 {
    9f64.cbrt()
}

/// `3^{4/3} = 3 * 3^{1/3}`
#[inline]
pub fn three_4_3() -> f64 {
    3.0 * cbrt3()
}

/// Critical value `c0 = 3^{4/3}/2`.
#[inline]
pub fn c0() -> f64 {
    1.5 * cbrt3()
}

/// Critical radius `3^{-1/3}`.
#[inline]
pub fn x_crit() -> f64 {
    1.0 / cbrt3()
}

/// Bound `2 * 3^{-4/3}` on |q2| in Hill's region.
#[inline]
pub fn q2_max() -> f64 {
    2.0 / three_4_3()
}
