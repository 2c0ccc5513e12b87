//! Expansion of an arbitrary polynomial in degenerate (higher-order)
//! Frobenius–Euler and Euler bases.
//!
//! For `p` of degree `n` each basis admits several closed forms for the
//! coefficients `a_0..a_n`, selected by [`FormulaVariant`]. With
//! `f(t) = (e^{λt}-1)/λ`, `g(t) = (e^t-u)/(1-u)` and `a(x) = p(x+1) - u p(x)`:
//!
//! Order one, basis `h_{k,λ}(x|u)` ([`represent_dfe`]):
//!
//! | variant  | `a_k`                                                                    |
//! |----------|--------------------------------------------------------------------------|
//! | operator | `f(t)^k a(x) |_{x=0} / ((1-u) k!)`                                       |
//! | delta    | `(Δ_λ^k ∇̃p(0) - (1+u) Δ_λ^k p(0)) / ((1-u) k! λ^k)`                      |
//! | binomial | `Σ_j C(k,j) (-1)^{k-j} (p(1+jλ) - u p(jλ)) / ((1-u) k! λ^k)`              |
//! | stirling | `Σ_{l≥k} S2(l,k) λ^{l-k}/l! (p^{(l)}(1) - u p^{(l)}(0)) / (1-u)`          |
//!
//! Order `r`, basis `h^{(r)}_{k,λ}(x|u)` ([`represent_dfe_r`]):
//!
//! | variant  | `a_k`                                                                                   |
//! |----------|-----------------------------------------------------------------------------------------|
//! | operator | `g(t)^r f(t)^k p(x) |_{x=0} / k!`                                                       |
//! | delta    | `Σ_j C(r,j)(-u)^{r-j} Δ_λ^k p(j) / ((1-u)^r k! λ^k)`                                     |
//! | binomial | `Σ_j Σ_l C(r,j) C(k,l) (-u)^{r-j} (-1)^{k-l} p(lλ+j) / ((1-u)^r k! λ^k)`                 |
//! | ladder   | `Σ_{j<r} C(r-1,j)(-u)^{r-1-j} Δ_λ^k (p(x+j+1) - u p(x+j))|_{x=0} / ((1-u)^r k! λ^k)`    |
//! | stirling | `Σ_j Σ_{l≥k} C(r,j)(-u)^{r-j} λ^{l-k}/l! S2(l,k) p^{(l)}(j) / (1-u)^r`                   |
//!
//! The Euler versions ([`represent_de`], [`represent_de_r`]) are the same
//! formulas at `u = -1`, written with `∇̃` and powers of two.
//!
//! Only the stirling variant is defined at `λ = 0`; there it reduces to the
//! classical Frobenius–Euler coefficients of [`represent_classical`].

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::batch;
use crate::error::{Error, Result};
use crate::exact::rational::{binomial_q, factorial_q, int, pow, serde_rational_vec, sign, Rational};
use crate::exact::Poly;
use crate::families::{family_table, FamilyKind};
use crate::numbers::{check_u, stirling2_table};
use crate::operators::{f_op, forward_diff, g_op, tilde_diff, ShiftCombo};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaVariant {
    OperatorForm,
    DeltaForm,
    BinomialSum,
    StirlingSum,
    /// Order-`r` bases only.
    LadderForm,
}

impl FormulaVariant {
    pub const ALL: [FormulaVariant; 5] = [
        FormulaVariant::OperatorForm,
        FormulaVariant::DeltaForm,
        FormulaVariant::BinomialSum,
        FormulaVariant::StirlingSum,
        FormulaVariant::LadderForm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaVariant::OperatorForm => "operator",
            FormulaVariant::DeltaForm => "delta",
            FormulaVariant::BinomialSum => "binomial",
            FormulaVariant::StirlingSum => "stirling",
            FormulaVariant::LadderForm => "ladder",
        }
    }

    /// Binomial sum, or the stirling sum when the basis has `λ = 0`.
    pub fn default_for(kind: &FamilyKind) -> FormulaVariant {
        let lambda = match kind {
            FamilyKind::DegenerateFrobeniusEuler { lambda, .. }
            | FamilyKind::DegenerateEuler { lambda, .. }
            | FamilyKind::DegenerateFallingFactorial { lambda } => Some(lambda),
            _ => None,
        };
        if lambda.is_some_and(|l| l.is_zero()) {
            FormulaVariant::StirlingSum
        } else {
            FormulaVariant::BinomialSum
        }
    }

    /// Whether the formula carries a `λ^{-k}` factor.
    pub fn divides_by_lambda(self) -> bool {
        self != FormulaVariant::StirlingSum
    }
}

impl fmt::Display for FormulaVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FormulaVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown formula variant `{s}`")))
    }
}

/// `p = Σ_k coeffs[k] · member_k(kind)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expansion {
    pub kind: FamilyKind,
    #[serde(with = "serde_rational_vec")]
    pub coeffs: Vec<Rational>,
}

impl Expansion {
    /// Coefficient `k`, zero past the end.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }
}

fn check_lambda(lambda: &Rational, variant: FormulaVariant) -> Result<()> {
    if lambda.is_zero() && variant.divides_by_lambda() {
        return Err(Error::ZeroLambda(variant.name()));
    }
    Ok(())
}

/// Runs `coeff(k)` for `k = 0..=deg p`, or returns `[0]` for the zero polynomial.
fn expand_with<F>(p: &Poly, kind: FamilyKind, coeff: F) -> Expansion
where
    F: Fn(usize) -> Rational + Sync + Send,
{
    let coeffs = match p.degree() {
        None => vec![Rational::zero()],
        Some(n) => batch::map_range(n + 1, coeff),
    };
    Expansion { kind, coeffs }
}

/// `1 / (k! λ^k)`
fn inv_fact_lambda(k: usize, lambda: &Rational) -> Rational {
    (factorial_q(k) * pow(lambda, k)).recip()
}

/// `p^{(l)}(x_j)` for `l = 0..=n` and every point.
fn derivative_values(p: &Poly, n: usize, points: &[Rational]) -> Vec<Vec<Rational>> {
    (0..=n)
        .map(|l| {
            let d = p.derivative(l);
            points.iter().map(|x| d.evaluate(x)).collect()
        })
        .collect()
}

/// Coefficients in `h_{k,λ}(x|u)`.
pub fn represent_dfe(p: &Poly, lambda: &Rational, u: &Rational, variant: FormulaVariant) -> Result<Expansion> {
    check_u(u)?;
    if variant == FormulaVariant::LadderForm {
        return Err(Error::VariantNotApplicable {
            variant: variant.name(),
            basis: "order-one degenerate Frobenius-Euler polynomials",
        });
    }
    check_lambda(lambda, variant)?;
    let kind = FamilyKind::DegenerateFrobeniusEuler { lambda: lambda.clone(), u: u.clone(), r: 1 };
    let one_minus_u = Rational::one() - u;
    let n = p.degree().unwrap_or(0);

    let out = match variant {
        FormulaVariant::OperatorForm => {
            let a = p.shift(&Rational::one()) - p.scale(u);
            expand_with(p, kind, |k| {
                f_op(&a, lambda, k).evaluate(&Rational::zero()) / (&one_minus_u * factorial_q(k))
            })
        }
        FormulaVariant::DeltaForm => {
            // a(x) = ∇̃p(x) - (1+u) p(x)
            let tilde = tilde_diff(p, 1);
            let c = Rational::one() + u;
            expand_with(p, kind, |k| {
                let zero = Rational::zero();
                let dt = forward_diff(&tilde, lambda, k).evaluate(&zero);
                let dp = forward_diff(p, lambda, k).evaluate(&zero);
                (dt - &c * dp) * inv_fact_lambda(k, lambda) / &one_minus_u
            })
        }
        FormulaVariant::BinomialSum => expand_with(p, kind, |k| {
            let s: Rational = (0..=k)
                .map(|j| {
                    let jl = lambda * int(j as i64);
                    binomial_q(k, j) * sign(k - j) * (p.evaluate(&(&jl + Rational::one())) - u * p.evaluate(&jl))
                })
                .sum();
            s * inv_fact_lambda(k, lambda) / &one_minus_u
        }),
        FormulaVariant::StirlingSum => {
            let s2 = stirling2_table(n);
            let d = derivative_values(p, n, &[Rational::zero(), Rational::one()]);
            expand_with(p, kind, |k| {
                let s: Rational = (k..=n)
                    .map(|l| {
                        Rational::from_integer(s2[l][k].clone()) * pow(lambda, l - k) / factorial_q(l)
                            * (&d[l][1] - u * &d[l][0])
                    })
                    .sum();
                s / &one_minus_u
            })
        }
        FormulaVariant::LadderForm => unreachable!(),
    };
    Ok(out)
}

/// Coefficients in `𝓔_{k,λ}(x)`.
pub fn represent_de(p: &Poly, lambda: &Rational, variant: FormulaVariant) -> Result<Expansion> {
    if variant == FormulaVariant::LadderForm {
        return Err(Error::VariantNotApplicable {
            variant: variant.name(),
            basis: "order-one degenerate Euler polynomials",
        });
    }
    represent_de_r(p, lambda, 1, variant)
}

/// Coefficients in `h^{(r)}_{k,λ}(x|u)`.
pub fn represent_dfe_r(
    p: &Poly,
    lambda: &Rational,
    u: &Rational,
    r: usize,
    variant: FormulaVariant,
) -> Result<Expansion> {
    check_u(u)?;
    check_lambda(lambda, variant)?;
    if variant == FormulaVariant::LadderForm && r == 0 {
        return Err(Error::LadderNeedsPositiveOrder);
    }
    let kind = FamilyKind::DegenerateFrobeniusEuler { lambda: lambda.clone(), u: u.clone(), r };
    let neg_u = -u;
    let norm = pow(&(Rational::one() - u).recip(), r);
    // C(r,j) (-u)^{r-j}
    let weights: Vec<Rational> = (0..=r).map(|j| binomial_q(r, j) * pow(&neg_u, r - j)).collect();
    let n = p.degree().unwrap_or(0);

    let out = match variant {
        FormulaVariant::OperatorForm => expand_with(p, kind, |k| {
            let fk = f_op(p, lambda, k);
            g_op(&fk, u, r).expect("u checked").evaluate(&Rational::zero()) / factorial_q(k)
        }),
        FormulaVariant::DeltaForm => expand_with(p, kind, |k| {
            let dk = forward_diff(p, lambda, k);
            let s: Rational = weights
                .iter()
                .enumerate()
                .map(|(j, w)| w * dk.evaluate(&int(j as i64)))
                .sum();
            s * &norm * inv_fact_lambda(k, lambda)
        }),
        FormulaVariant::BinomialSum => expand_with(p, kind, |k| {
            let s: Rational = weights
                .iter()
                .enumerate()
                .flat_map(|(j, w)| {
                    (0..=k).map(move |l| {
                        let x = lambda * int(l as i64) + int(j as i64);
                        w * binomial_q(k, l) * sign(k - l) * p.evaluate(&x)
                    })
                })
                .sum();
            s * &norm * inv_fact_lambda(k, lambda)
        }),
        FormulaVariant::LadderForm => {
            let b = p.shift(&Rational::one()) - p.scale(u);
            let ladder: Vec<Rational> = (0..r).map(|j| binomial_q(r - 1, j) * pow(&neg_u, r - 1 - j)).collect();
            expand_with(p, kind, |k| {
                let dk = forward_diff(&b, lambda, k);
                let s: Rational = ladder
                    .iter()
                    .enumerate()
                    .map(|(j, w)| w * dk.evaluate(&int(j as i64)))
                    .sum();
                s * &norm * inv_fact_lambda(k, lambda)
            })
        }
        FormulaVariant::StirlingSum => {
            let s2 = stirling2_table(n);
            let points: Vec<Rational> = (0..=r).map(|j| int(j as i64)).collect();
            let d = derivative_values(p, n, &points);
            expand_with(p, kind, |k| {
                let s: Rational = (k..=n)
                    .map(|l| {
                        let inner: Rational = weights.iter().zip(&d[l]).map(|(w, v)| w * v).sum();
                        Rational::from_integer(s2[l][k].clone()) * pow(lambda, l - k) / factorial_q(l) * inner
                    })
                    .sum();
                s * &norm
            })
        }
    };
    Ok(out)
}

/// Coefficients in `𝓔^{(r)}_{k,λ}(x)`, from the `∇̃` forms.
pub fn represent_de_r(p: &Poly, lambda: &Rational, r: usize, variant: FormulaVariant) -> Result<Expansion> {
    check_lambda(lambda, variant)?;
    if variant == FormulaVariant::LadderForm && r == 0 {
        return Err(Error::LadderNeedsPositiveOrder);
    }
    let kind = FamilyKind::DegenerateEuler { lambda: lambda.clone(), r };
    let half_r = pow(&Rational::new(1.into(), 2.into()), r);
    let zero = Rational::zero();
    let n = p.degree().unwrap_or(0);

    let out = match variant {
        FormulaVariant::OperatorForm => expand_with(p, kind, |k| {
            // ⟨ ((e^t + 1)/2)^r f(t)^k | p ⟩
            let combo = ShiftCombo::tilde_difference(r)
                .scale(&half_r)
                .compose(&ShiftCombo::degenerate_delta(lambda, k));
            combo.functional(p) / factorial_q(k)
        }),
        FormulaVariant::DeltaForm => expand_with(p, kind, |k| {
            tilde_diff(&forward_diff(p, lambda, k), r).evaluate(&zero) * &half_r * inv_fact_lambda(k, lambda)
        }),
        FormulaVariant::BinomialSum => expand_with(p, kind, |k| {
            let s: Rational = (0..=r)
                .flat_map(|j| {
                    (0..=k).map(move |l| {
                        let x = int(j as i64) + lambda * int(l as i64);
                        binomial_q(r, j) * binomial_q(k, l) * sign(k - l) * p.evaluate(&x)
                    })
                })
                .sum();
            s * &half_r * inv_fact_lambda(k, lambda)
        }),
        FormulaVariant::LadderForm => {
            let b = tilde_diff(p, 1);
            expand_with(p, kind, |k| {
                tilde_diff(&forward_diff(&b, lambda, k), r - 1).evaluate(&zero) * &half_r * inv_fact_lambda(k, lambda)
            })
        }
        FormulaVariant::StirlingSum => {
            let s2 = stirling2_table(n);
            let points: Vec<Rational> = (0..=r).map(|j| int(j as i64)).collect();
            let d = derivative_values(p, n, &points);
            let weights: Vec<Rational> = (0..=r).map(|j| binomial_q(r, j)).collect();
            expand_with(p, kind, |k| {
                let s: Rational = (k..=n)
                    .map(|l| {
                        let inner: Rational = weights.iter().zip(&d[l]).map(|(w, v)| w * v).sum();
                        Rational::from_integer(s2[l][k].clone()) * pow(lambda, l - k) / factorial_q(l) * inner
                    })
                    .sum();
                s * &half_r
            })
        }
    };
    Ok(out)
}

/// Coefficients in the classical `H^{(r)}_k(x|u)`:
/// `a_k = Σ_j C(r,j) (-u)^{r-j} p^{(k)}(j) / ((1-u)^r k!)`.
pub fn represent_classical(p: &Poly, u: &Rational, r: usize) -> Result<Expansion> {
    check_u(u)?;
    let kind = FamilyKind::FrobeniusEuler { u: u.clone(), r };
    let neg_u = -u;
    let norm = pow(&(Rational::one() - u).recip(), r);
    Ok(expand_with(p, kind, |k| {
        let d = p.derivative(k);
        let s: Rational = (0..=r)
            .map(|j| binomial_q(r, j) * pow(&neg_u, r - j) * d.evaluate(&int(j as i64)))
            .sum();
        s * &norm / factorial_q(k)
    }))
}

/// Coefficients in the classical `E^{(r)}_k(x)`:
/// `b_k = Σ_j C(r,j) p^{(k)}(j) / (2^r k!)`.
pub fn represent_classical_euler(p: &Poly, r: usize) -> Expansion {
    let half_r = pow(&Rational::new(1.into(), 2.into()), r);
    expand_with(p, FamilyKind::Euler { r }, |k| {
        let d = p.derivative(k);
        let s: Rational = (0..=r).map(|j| binomial_q(r, j) * d.evaluate(&int(j as i64))).sum();
        s * &half_r / factorial_q(k)
    })
}

/// Expands `p` in any supported basis.
///
/// Degenerate kinds honour `variant`; classical Frobenius–Euler and Euler
/// kinds have a single formula and ignore it; Bernoulli goes through the
/// triangular solve.
pub fn represent(p: &Poly, kind: &FamilyKind, variant: FormulaVariant) -> Result<Expansion> {
    use FormulaVariant::LadderForm;
    match kind {
        FamilyKind::DegenerateFrobeniusEuler { lambda, u, r } => {
            if *r == 1 && variant != LadderForm {
                represent_dfe(p, lambda, u, variant)
            } else {
                represent_dfe_r(p, lambda, u, *r, variant)
            }
        }
        FamilyKind::DegenerateEuler { lambda, r } => {
            if *r == 1 && variant != LadderForm {
                represent_de(p, lambda, variant)
            } else {
                represent_de_r(p, lambda, *r, variant)
            }
        }
        FamilyKind::DegenerateFallingFactorial { lambda } => {
            // order-zero degenerate Frobenius-Euler; u drops out
            let e = represent_dfe_r(p, lambda, &Rational::zero(), 0, variant)?;
            Ok(Expansion { kind: kind.clone(), coeffs: e.coeffs })
        }
        FamilyKind::FrobeniusEuler { u, r } => represent_classical(p, u, *r),
        FamilyKind::Euler { r } => Ok(represent_classical_euler(p, *r)),
        FamilyKind::Bernoulli => basis_convert_oracle(p, kind),
    }
}

/// Whether [`represent`] distinguishes formula variants for `kind`.
pub fn honours_variant(kind: &FamilyKind) -> bool {
    matches!(
        kind,
        FamilyKind::DegenerateFrobeniusEuler { .. }
            | FamilyKind::DegenerateEuler { .. }
            | FamilyKind::DegenerateFallingFactorial { .. }
    )
}

/// `Σ_k coeffs[k] · member_k`.
pub fn reconstruct(e: &Expansion) -> Result<Poly> {
    if e.coeffs.is_empty() {
        return Ok(Poly::zero());
    }
    let table = family_table(&e.kind, e.coeffs.len() - 1)?;
    Ok(table.iter().zip(&e.coeffs).map(|(m, a)| m.scale(a)).sum())
}

/// Change of basis by back-substitution on the triangular system
/// `p = Σ a_k member_k`, peeling off the top degree first.
///
/// Independent of every closed-form formula above: it only needs the family
/// table.
pub fn basis_convert_oracle(p: &Poly, kind: &FamilyKind) -> Result<Expansion> {
    let n = match p.degree() {
        None => {
            kind.validate()?;
            return Ok(Expansion { kind: kind.clone(), coeffs: vec![Rational::zero()] });
        }
        Some(n) => n,
    };
    let table = family_table(kind, n)?;
    let mut rest = p.clone();
    let mut coeffs = vec![Rational::zero(); n + 1];
    for k in (0..=n).rev() {
        let member = &table[k];
        if member.degree() != Some(k) {
            return Err(Error::DegenerateBasis(k));
        }
        let a = rest.coeff(k) / member.leading().expect("nonzero member");
        if !a.is_zero() {
            rest = rest - member.scale(&a);
        }
        coeffs[k] = a;
    }
    debug_assert!(rest.is_zero());
    Ok(Expansion { kind: kind.clone(), coeffs })
}

/// `true` when `e` reconstructs `p` and matches the triangular-solve oracle.
pub fn verify_expansion(p: &Poly, e: &Expansion) -> Result<bool> {
    if reconstruct(e)? != *p {
        return Ok(false);
    }
    let oracle = basis_convert_oracle(p, &e.kind)?;
    Ok(oracle.coeffs == e.coeffs)
}

/// Every admissible variant for `kind`, each with its outcome.
pub fn all_variants(p: &Poly, kind: &FamilyKind) -> Vec<(FormulaVariant, Result<Expansion>)> {
    FormulaVariant::ALL
        .into_iter()
        .map(|v| (v, represent(p, kind, v)))
        .collect()
}
