//! Minimal closed-interval arithmetic with outward rounding. Every operation widens
//! its result by one ulp on each side, which dominates the round-to-nearest error of
//! the underlying `f64` operation.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

fn out(lo: f64, hi: f64) -> Interval {
    Interval { lo: lo.next_down(), hi: hi.next_up() }
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "empty interval [{lo}, {hi}]");
        Self { lo, hi }
    }

    /// A point known exactly.
    pub fn point(v: f64) -> Self {
        Self { lo: v, hi: v }
    }

    /// A rounded constant: the true value lies within one ulp of `v`.
    pub fn around(v: f64) -> Self {
        out(v, v)
    }

    /// Sup of `|t|` over the interval.
    pub fn mag(self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn contains(self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn sqrt(self) -> Self {
        let lo = self.lo.max(0.0);
        assert!(self.hi >= 0.0, "sqrt of negative interval");
        Interval { lo: lo.sqrt().next_down().max(0.0), hi: self.hi.sqrt().next_up() }
    }

    pub fn powi(self, n: i32) -> Self {
        if n < 0 {
            return Interval::point(1.0) / self.powi(-n);
        }
        if n == 0 {
            return Interval::point(1.0);
        }
        if n % 2 == 0 {
            let m = self.abs();
            let mut r = m;
            for _ in 1..n {
                r = r * m;
            }
            return Interval { lo: r.lo.max(0.0), hi: r.hi };
        }
        let mut r = self;
        for _ in 1..n {
            r = r * self;
        }
        r
    }

    pub fn abs(self) -> Self {
        if self.lo >= 0.0 {
            self
        } else if self.hi <= 0.0 {
            -self
        } else {
            Interval { lo: 0.0, hi: self.mag() }
        }
    }

    /// Enclosure of a function that is monotone on the interval, from its endpoint values.
    pub fn hull(a: f64, b: f64) -> Self {
        out(a.min(b), a.max(b))
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, o: Interval) -> Interval {
        out(self.lo + o.lo, self.hi + o.hi)
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, o: Interval) -> Interval {
        out(self.lo - o.hi, self.hi - o.lo)
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -self.hi, hi: -self.lo }
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, o: Interval) -> Interval {
        let p = [self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi];
        out(p.iter().copied().fold(f64::INFINITY, f64::min), p.iter().copied().fold(f64::NEG_INFINITY, f64::max))
    }
}

impl Div for Interval {
    type Output = Interval;
    fn div(self, o: Interval) -> Interval {
        assert!(o.lo > 0.0 || o.hi < 0.0, "division by an interval containing 0");
        let p = [self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi];
        out(p.iter().copied().fold(f64::INFINITY, f64::min), p.iter().copied().fold(f64::NEG_INFINITY, f64::max))
    }
}

impl Mul<f64> for Interval {
    type Output = Interval;
    fn mul(self, c: f64) -> Interval {
        self * Interval::point(c)
    }
}

impl Add<f64> for Interval {
    type Output = Interval;
    fn add(self, c: f64) -> Interval {
        self + Interval::point(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encloses_point_results() {
        let a = Interval::new(0.1, 0.3);
        let b = Interval::new(-2.0, 0.5);
        for &x in &[0.1, 0.2, 0.3] {
            for &y in &[-2.0, -0.7, 0.0, 0.5] {
                assert!((a + b).contains(x + y));
                assert!((a - b).contains(x - y));
                assert!((a * b).contains(x * y));
                assert!((b / a).contains(y / x));
            }
            assert!(a.sqrt().contains(x.sqrt()));
            assert!(a.powi(-3).contains(x.powi(-3)));
        }
        assert!(b.powi(2).lo >= 0.0 && b.powi(2).contains(4.0));
        assert_eq!(b.mag(), 2.0);
    }

    #[test]
    fn third_is_enclosed() {
        let t = Interval::point(1.0) / Interval::point(3.0);
        assert!(t.lo < t.hi);
        assert!(t.lo <= 1.0 / 3.0 && 1.0 / 3.0 <= t.hi);
    }
}
