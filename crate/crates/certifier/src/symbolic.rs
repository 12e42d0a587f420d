//! Exact expansion of `F`, `∂F/∂u` and `∂F/∂x` as sums of rational multiples of
//! `3^{j/3} xⁿ` times products of abstract factors, and the bound obtained by
//! replacing every factor with a bound on its absolute value.

use std::collections::BTreeMap;
use std::fmt;

use hill_core::consts::{cbrt3, cbrt9};
use num_rational::Ratio;
use reduction::{FactorValues, Laurent, R0, R1, R2, R3};

use crate::{CertError, Result};

pub type Coef = Ratio<i128>;

/// The abstract factors of `C1..C4` and the formal derivatives that occur in
/// `∂F/∂x` and `∂F/∂u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Factor {
    A0,
    A0x,
    A0u,
    A0xx,
    A0xu,
    A1,
    A1u,
    A2,
    A2u,
    A3,
    A3x,
    A3xx,
    A4,
    A4x,
    A4xx,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    U,
}

/// Result of differentiating one factor.
enum Deriv {
    Zero,
    To(Factor),
}

impl Factor {
    pub const ALL: [Factor; 15] = [
        Factor::A0,
        Factor::A0x,
        Factor::A0u,
        Factor::A0xx,
        Factor::A0xu,
        Factor::A1,
        Factor::A1u,
        Factor::A2,
        Factor::A2u,
        Factor::A3,
        Factor::A3x,
        Factor::A3xx,
        Factor::A4,
        Factor::A4x,
        Factor::A4xx,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Factor::A0 => "a0",
            Factor::A0x => "a0_x",
            Factor::A0u => "a0_u",
            Factor::A0xx => "a0_xx",
            Factor::A0xu => "a0_xu",
            Factor::A1 => "a1",
            Factor::A1u => "a1_u",
            Factor::A2 => "a2",
            Factor::A2u => "a2_u",
            Factor::A3 => "a3",
            Factor::A3x => "a3_x",
            Factor::A3xx => "a3_xx",
            Factor::A4 => "a4",
            Factor::A4x => "a4_x",
            Factor::A4xx => "a4_xx",
        }
    }

    pub fn value(self, v: &FactorValues) -> f64 {
        match self {
            Factor::A0 => v.a0,
            Factor::A0x => v.a0x,
            Factor::A0u => v.a0u,
            Factor::A0xx => v.a0xx,
            Factor::A0xu => v.a0xu,
            Factor::A1 => v.a1,
            Factor::A1u => v.a1u,
            Factor::A2 => v.a2,
            Factor::A2u => v.a2u,
            Factor::A3 => v.a3,
            Factor::A3x => v.a3x,
            Factor::A3xx => v.a3xx,
            Factor::A4 => v.a4,
            Factor::A4x => v.a4x,
            Factor::A4xx => v.a4xx,
        }
    }

    fn deriv(self, var: Var) -> Result<Deriv> {
        use Factor::*;
        let to = |f| Ok(Deriv::To(f));
        match (var, self) {
            (Var::X, A0) => to(A0x),
            (Var::X, A0x) => to(A0xx),
            (Var::X, A0u) => to(A0xu),
            (Var::X, A3) => to(A3x),
            (Var::X, A3x) => to(A3xx),
            (Var::X, A4) => to(A4x),
            (Var::X, A4x) => to(A4xx),
            (Var::X, A1 | A1u | A2 | A2u) => Ok(Deriv::Zero),
            (Var::U, A0) => to(A0u),
            (Var::U, A0x) => to(A0xu),
            (Var::U, A1) => to(A1u),
            (Var::U, A2) => to(A2u),
            (Var::U, A3 | A3x | A3xx | A4 | A4x | A4xx) => Ok(Deriv::Zero),
            _ => Err(CertError::Untracked(self)),
        }
    }
}

/// `coef · 3^{j/3} · xⁿ · Π factors`, with `j ∈ {0, 1, 2}` and sorted factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coef: Coef,
    pub j: u8,
    pub n: i32,
    pub factors: Vec<Factor>,
}

impl Term {
    pub fn new(coef: Coef, j: u32, n: i32, mut factors: Vec<Factor>) -> Self {
        factors.sort();
        let mut coef = coef;
        for _ in 0..j / 3 {
            coef *= Coef::from_integer(3);
        }
        Term { coef, j: (j % 3) as u8, n, factors }
    }

    fn key(&self) -> (u8, i32, Vec<Factor>) {
        (self.j, self.n, self.factors.clone())
    }

    fn scalar(&self) -> f64 {
        let c = *self.coef.numer() as f64 / *self.coef.denom() as f64;
        c * match self.j {
            0 => 1.0,
            1 => cbrt3(),
            _ => cbrt9(),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·3^({}/3)·x^{}", self.coef, self.j, self.n)?;
        for a in &self.factors {
            write!(f, "·{}", a.name())?;
        }
        Ok(())
    }
}

/// A sum of [`Term`]s together with absolute bounds for the factors it uses.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FactorTermSum {
    pub terms: Vec<Term>,
    pub factor_bounds: BTreeMap<Factor, f64>,
}

impl FactorTermSum {
    /// Collects like terms and drops zeros; the order is canonical.
    pub fn from_terms(terms: impl IntoIterator<Item = Term>) -> Self {
        let mut acc: BTreeMap<(u8, i32, Vec<Factor>), Coef> = BTreeMap::new();
        for t in terms {
            *acc.entry(t.key()).or_insert_with(|| Coef::from_integer(0)) += t.coef;
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| *c != Coef::from_integer(0))
            .map(|((j, n, factors), coef)| Term { coef, j, n, factors })
            .collect();
        Self { terms, factor_bounds: BTreeMap::new() }
    }

    pub fn laurent(p: &Laurent) -> Self {
        Self::from_terms(
            p.terms()
                .iter()
                .map(|&(num, den, j, n)| Term::new(Coef::new(num as i128, den as i128), j as u32, n, vec![])),
        )
    }

    pub fn monomial(coef: i64, factors: &[Factor]) -> Self {
        Self::from_terms([Term::new(Coef::from_integer(coef as i128), 0, 0, factors.to_vec())])
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(self.terms.iter().chain(&other.terms).cloned())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, s: i64) -> Self {
        let s = Coef::from_integer(s as i128);
        Self::from_terms(self.terms.iter().map(|t| Term { coef: t.coef * s, ..t.clone() }))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let mut fs = a.factors.clone();
                fs.extend_from_slice(&b.factors);
                out.push(Term::new(a.coef * b.coef, (a.j + b.j) as u32, a.n + b.n, fs));
            }
        }
        Self::from_terms(out)
    }

    /// Formal derivative, applying the product rule to the factors.
    pub fn derivative(&self, var: Var) -> Result<Self> {
        let mut out = Vec::new();
        for t in &self.terms {
            if var == Var::X && t.n != 0 {
                out.push(Term { coef: t.coef * Coef::from_integer(t.n as i128), n: t.n - 1, ..t.clone() });
            }
            for (i, f) in t.factors.iter().enumerate() {
                if let Deriv::To(df) = f.deriv(var)? {
                    let mut fs = t.factors.clone();
                    fs[i] = df;
                    out.push(Term::new(t.coef, t.j as u32, t.n, fs));
                }
            }
        }
        Ok(Self::from_terms(out))
    }

    pub fn d_dx(&self) -> Result<Self> {
        self.derivative(Var::X)
    }

    pub fn d_du(&self) -> Result<Self> {
        self.derivative(Var::U)
    }

    /// Value at `x` with the factors taken from `v`.
    pub fn eval(&self, x: f64, v: &FactorValues) -> f64 {
        self.terms
            .iter()
            .map(|t| t.scalar() * x.powi(t.n) * t.factors.iter().map(|f| f.value(v)).product::<f64>())
            .sum()
    }

    pub fn with_bounds(mut self, bounds: &BTreeMap<Factor, f64>) -> Self {
        self.factor_bounds = bounds.clone();
        self
    }
}

/// `Σ |coef · 3^{j/3} · x_evalⁿ| · Π bound(factor)`. Every degree must be `≤ 0`, so that
/// the monomials are largest at the left endpoint `x_eval`.
pub fn factor_derivative_bound(sum: &FactorTermSum, x_eval: f64) -> Result<f64> {
    let mut total = 0.0;
    for t in &sum.terms {
        if t.n > 0 {
            return Err(CertError::PositiveDegree(t.to_string()));
        }
        let mut v = (t.scalar() * x_eval.powi(t.n)).abs();
        for f in &t.factors {
            v *= sum.factor_bounds.get(f).ok_or(CertError::MissingBound(*f))?.abs();
        }
        total += v;
    }
    Ok(total)
}

/// Which polynomial is used for `r3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum R3Convention {
    /// `r3 = 1 - 3^{4/3}/x²`, the coefficient of `cos²α` in `d`.
    Exact,
    /// `r3 = 1 - 3^{2/3}/x²`, as typed into the published derivative-bound script.
    PublishedScript,
}

const R3_SCRIPT: Laurent = Laurent(&[(1, 1, 0, 0), (-1, 1, 2, -2)]);

/// `F = ∂C1/∂x - ∂C2/∂x - ∂C3/∂x + ∂C4/∂x` and its partial derivatives.
#[derive(Debug, Clone)]
pub struct FExpansion {
    pub f: FactorTermSum,
    pub f_u: FactorTermSum,
    pub f_x: FactorTermSum,
}

/// Expands `C1 = r0 + a0²a1²a3² r1`, `C2 = 2a0²a1a2a3²a4`, `C3 = 2a0a1a3 r2`,
/// `C4 = a0²a1²a3² r3`, then `F`, `∂F/∂u` and `∂F/∂x`.
pub fn f_expansion(r3: R3Convention) -> Result<FExpansion> {
    use Factor::*;
    let sq = FactorTermSum::monomial(1, &[A0, A0, A1, A1, A3, A3]);
    let r3 = match r3 {
        R3Convention::Exact => R3,
        R3Convention::PublishedScript => R3_SCRIPT,
    };
    let c1 = FactorTermSum::laurent(&R0).add(&sq.mul(&FactorTermSum::laurent(&R1)));
    let c2 = FactorTermSum::monomial(2, &[A0, A0, A1, A2, A3, A3, A4]);
    let c3 = FactorTermSum::monomial(2, &[A0, A1, A3]).mul(&FactorTermSum::laurent(&R2));
    let c4 = sq.mul(&FactorTermSum::laurent(&r3));
    let f = c1.d_dx()?.sub(&c2.d_dx()?).sub(&c3.d_dx()?).add(&c4.d_dx()?);
    Ok(FExpansion { f_u: f.d_du()?, f_x: f.d_dx()?, f })
}
