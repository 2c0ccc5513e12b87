//! Polynomial families: Bernoulli, (higher-order) Euler and Frobenius–Euler,
//! their degenerate versions, and the degenerate falling factorials.
//!
//! [`family_table`] builds members by binomial convolution of the number
//! sequences in [`crate::numbers`] against `x^j` or `(x)_{j,λ}`.
//! [`gf_oracle`] recomputes the same table by truncated generating-function
//! arithmetic and shares no code with it beyond `(x)_{j,λ}`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rational::{binomial_q, factorial_q, format_rational, int, serde_rational, Rational};
use crate::exact::{Poly, PolySeries};
use crate::numbers::{self, check_u, DegenParams};

/// Members above this index are refused unless a larger cap is passed to
/// [`family_table_capped`].
pub const DEFAULT_MAX_DEGREE: usize = 64;

/// Which family, with exactly the parameters that family uses.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FamilyKind {
    /// `t/(e^t - 1) e^{xt}`
    Bernoulli,
    /// `(2/(e^t + 1))^r e^{xt}`
    Euler { r: usize },
    /// `((1-u)/(e^t - u))^r e^{xt}`
    #[serde(rename = "fe")]
    FrobeniusEuler {
        #[serde(with = "serde_rational")]
        u: Rational,
        r: usize,
    },
    /// `(2/(e_λ(t) + 1))^r e_λ^x(t)`
    #[serde(rename = "degen-euler")]
    DegenerateEuler {
        #[serde(with = "serde_rational")]
        lambda: Rational,
        r: usize,
    },
    /// `((1-u)/(e_λ(t) - u))^r e_λ^x(t)`
    #[serde(rename = "degen-fe")]
    DegenerateFrobeniusEuler {
        #[serde(with = "serde_rational")]
        lambda: Rational,
        #[serde(with = "serde_rational")]
        u: Rational,
        r: usize,
    },
    /// `e_λ^x(t)`, members `(x)_{n,λ}`
    #[serde(rename = "falling")]
    DegenerateFallingFactorial {
        #[serde(with = "serde_rational")]
        lambda: Rational,
    },
}

impl FamilyKind {
    pub fn degenerate_fe(params: &DegenParams) -> Self {
        FamilyKind::DegenerateFrobeniusEuler {
            lambda: params.lambda.clone(),
            u: params.u.clone(),
            r: params.r,
        }
    }

    /// Short CLI name.
    pub fn tag(&self) -> &'static str {
        match self {
            FamilyKind::Bernoulli => "bernoulli",
            FamilyKind::Euler { .. } => "euler",
            FamilyKind::FrobeniusEuler { .. } => "fe",
            FamilyKind::DegenerateEuler { .. } => "degen-euler",
            FamilyKind::DegenerateFrobeniusEuler { .. } => "degen-fe",
            FamilyKind::DegenerateFallingFactorial { .. } => "falling",
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            FamilyKind::FrobeniusEuler { u, .. } | FamilyKind::DegenerateFrobeniusEuler { u, .. } => check_u(u),
            _ => Ok(()),
        }
    }

    /// The `λ = 0` counterpart of a degenerate kind; classical kinds map to
    /// themselves.
    pub fn classical(&self) -> FamilyKind {
        match self {
            FamilyKind::DegenerateEuler { r, .. } => FamilyKind::Euler { r: *r },
            FamilyKind::DegenerateFrobeniusEuler { u, r, .. } => FamilyKind::FrobeniusEuler { u: u.clone(), r: *r },
            // x^n is the order-zero Frobenius–Euler family for any u
            FamilyKind::DegenerateFallingFactorial { .. } => FamilyKind::FrobeniusEuler { u: int(0), r: 0 },
            other => other.clone(),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = format_rational;
        match self {
            FamilyKind::Bernoulli => write!(f, "bernoulli"),
            FamilyKind::Euler { r } => write!(f, "euler(r={r})"),
            FamilyKind::FrobeniusEuler { u, r } => write!(f, "fe(u={}, r={r})", q(u)),
            FamilyKind::DegenerateEuler { lambda, r } => write!(f, "degen-euler(lambda={}, r={r})", q(lambda)),
            FamilyKind::DegenerateFrobeniusEuler { lambda, u, r } => {
                write!(f, "degen-fe(lambda={}, u={}, r={r})", q(lambda), q(u))
            }
            FamilyKind::DegenerateFallingFactorial { lambda } => write!(f, "falling(lambda={})", q(lambda)),
        }
    }
}

/// `(x)_{n,λ} = x (x - λ) ... (x - (n-1)λ)`.
pub fn falling_factorial_poly(n: usize, lambda: &Rational) -> Poly {
    falling_factorial_table(n, lambda).pop().expect("non-empty")
}

/// `(x)_{0,λ} ..= (x)_{n_max,λ}`.
pub fn falling_factorial_table(n_max: usize, lambda: &Rational) -> Vec<Poly> {
    let mut out = vec![Poly::one()];
    for i in 1..=n_max {
        let factor = Poly::from_coeffs(vec![-(lambda * int(i as i64 - 1)), Rational::one()]);
        let next = &out[i - 1] * &factor;
        out.push(next);
    }
    out
}

fn monomial_table(n_max: usize) -> Vec<Poly> {
    (0..=n_max).map(|j| Poly::monomial(Rational::one(), j)).collect()
}

/// `Σ_j C(n,j) numbers[n-j] basis[j]` for every `n`.
fn appell_like(numbers: &[Rational], basis: &[Poly]) -> Vec<Poly> {
    (0..numbers.len())
        .map(|n| {
            (0..=n)
                .filter(|&j| !numbers[n - j].is_zero())
                .map(|j| basis[j].scale(&(binomial_q(n, j) * &numbers[n - j])))
                .sum()
        })
        .collect()
}

/// Members `0..=n_max`, refusing `n_max` above [`DEFAULT_MAX_DEGREE`].
pub fn family_table(kind: &FamilyKind, n_max: usize) -> Result<Vec<Poly>> {
    family_table_capped(kind, n_max, DEFAULT_MAX_DEGREE)
}

pub fn family_table_capped(kind: &FamilyKind, n_max: usize, cap: usize) -> Result<Vec<Poly>> {
    if n_max > cap {
        return Err(Error::DegreeTooLarge { requested: n_max, cap });
    }
    kind.validate()?;
    let table = match kind {
        FamilyKind::Bernoulli => {
            // B_n(x) = Σ_j C(n,j) B_{n-j} x^j
            appell_like(&numbers::bernoulli_numbers(n_max), &monomial_table(n_max))
        }
        FamilyKind::Euler { r } => appell_like(&numbers::euler_numbers(n_max, *r), &monomial_table(n_max)),
        FamilyKind::FrobeniusEuler { u, r } => {
            appell_like(&numbers::frobenius_euler_numbers(n_max, u, *r)?, &monomial_table(n_max))
        }
        FamilyKind::DegenerateEuler { lambda, r } => {
            let params = DegenParams::new(lambda.clone(), int(-1), *r);
            appell_like(
                &numbers::degen_fe_numbers(n_max, &params)?,
                &falling_factorial_table(n_max, lambda),
            )
        }
        FamilyKind::DegenerateFrobeniusEuler { lambda, u, r } => {
            let params = DegenParams::new(lambda.clone(), u.clone(), *r);
            appell_like(
                &numbers::degen_fe_numbers(n_max, &params)?,
                &falling_factorial_table(n_max, lambda),
            )
        }
        FamilyKind::DegenerateFallingFactorial { lambda } => falling_factorial_table(n_max, lambda),
    };
    Ok(table)
}

/// The `n`-th member.
pub fn family_poly(kind: &FamilyKind, n: usize) -> Result<Poly> {
    Ok(family_table(kind, n)?.pop().expect("non-empty"))
}

/// `e_λ^x(t)`: terms `(x)_{k,λ}`; at `λ = 0` this is `e^{xt}` with terms `x^k`.
fn exp_x_series(n_max: usize, lambda: Option<&Rational>) -> PolySeries {
    match lambda {
        Some(l) => PolySeries::new(n_max, falling_factorial_table(n_max, l)),
        None => PolySeries::from_polys(n_max, |k| Poly::monomial(Rational::one(), k)),
    }
}

/// `e_λ(t)` (or `e^t`), terms `(1)_{k,λ}` computed directly as products.
fn exp_one_series(n_max: usize, lambda: Option<&Rational>) -> PolySeries {
    PolySeries::from_scalars(n_max, |k| match lambda {
        Some(l) => (0..k).fold(Rational::one(), |acc, i| acc * (Rational::one() - l * int(i as i64))),
        None => Rational::one(),
    })
}

/// `((1-u)/(E(t) - u))^r` where `E` is `e_λ(t)` or `e^t`.
fn frobenius_prefactor(n_max: usize, lambda: Option<&Rational>, u: &Rational, r: usize) -> Result<PolySeries> {
    check_u(u)?;
    let shifted = exp_one_series(n_max, lambda).sub(&PolySeries::unit(n_max).scale(u))?;
    let normalized = shifted.scale(&(Rational::one() - u).recip());
    Ok(normalized.inverse()?.pow(r))
}

/// Recomputes members `0..=n_max` by truncated generating-function arithmetic.
pub fn gf_oracle(kind: &FamilyKind, n_max: usize) -> Result<Vec<Poly>> {
    kind.validate()?;
    let series = match kind {
        FamilyKind::Bernoulli => {
            // (e^t - 1)/t = Σ t^k/(k+1)!, i.e. EGF terms 1/(k+1)
            let quotient = PolySeries::from_scalars(n_max, |k| factorial_q(k) / factorial_q(k + 1));
            quotient.inverse()?.mul(&exp_x_series(n_max, None))?
        }
        FamilyKind::Euler { r } => frobenius_prefactor(n_max, None, &int(-1), *r)?.mul(&exp_x_series(n_max, None))?,
        FamilyKind::FrobeniusEuler { u, r } => {
            frobenius_prefactor(n_max, None, u, *r)?.mul(&exp_x_series(n_max, None))?
        }
        FamilyKind::DegenerateEuler { lambda, r } => {
            frobenius_prefactor(n_max, Some(lambda), &int(-1), *r)?.mul(&exp_x_series(n_max, Some(lambda)))?
        }
        FamilyKind::DegenerateFrobeniusEuler { lambda, u, r } => {
            frobenius_prefactor(n_max, Some(lambda), u, *r)?.mul(&exp_x_series(n_max, Some(lambda)))?
        }
        FamilyKind::DegenerateFallingFactorial { lambda } => exp_x_series(n_max, Some(lambda)),
    };
    Ok(series.into_terms())
}
