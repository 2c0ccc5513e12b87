//! Exact checks of the quadratic Bernoulli identity and of six classical
//! product identities, each together with its re-expansion in a degenerate
//! basis.
//!
//! Every check compares two polynomials by exact subtraction. A check that
//! compares coefficient vectors encodes them as `Σ a_k x^k` so that the same
//! report type carries it.
//!
//! The degenerate re-expansions all come from one fact. If
//! `p = Σ_m c_m H_m(x|u)` then `p(x+1) - u p(x) = (1-u) Σ_m c_m x^m`, so the
//! coefficient of `h_{k,λ}(x|u)` in `p` is `(1/(k! λ^k)) Σ_m c_m Δ_λ^k 0^m`.
//! At `u = -1` the same holds for `E_m(x)` and `𝓔_{k,λ}(x)`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::batch;
use crate::error::{Error, Result};
use crate::exact::rational::{binomial_q, factorial_q, int, pow, rat, serde_rational_opt, sign, Rational};
use crate::exact::Poly;
use crate::families::{family_table, FamilyKind};
use crate::numbers::{
    bernoulli_numbers, check_u, delta_zero, euler_numbers, frobenius_euler_numbers, harmonic, harmonic_table,
};
use crate::representation::{reconstruct, represent, represent_dfe, represent_dfe_r, Expansion, FormulaVariant};

/// Selectable identity families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    /// Quadratic Bernoulli identity specialising to Miki (`x = 0`) and
    /// Faber–Pandharipande–Zagier (`x = 1/2`).
    Miki,
    /// `H_n(x|u)` in `h_{k,λ}(x|u)`.
    FrobeniusEulerInDegenerate,
    /// `Σ B_k(x) B_{n-k}(x) / (k(n-k))` in Euler polynomials.
    BernoulliConvolution,
    /// `Σ E_k(x) E_{n-k}(x) / (k(n-k))` in Euler polynomials.
    EulerConvolution,
    /// `Σ B_k(x) E_{n-k}(x) / (k(n-k))` in Euler polynomials.
    MixedConvolution,
    /// Nielsen: `B_m(x) H_n(x|u)` in Frobenius–Euler polynomials.
    Nielsen,
    /// Carlitz: `H_m(x|u) H_n(x|v)` in `H_k(x|uv)`.
    Carlitz,
}

impl Identity {
    pub const ALL: [Identity; 7] = [
        Identity::Miki,
        Identity::FrobeniusEulerInDegenerate,
        Identity::BernoulliConvolution,
        Identity::EulerConvolution,
        Identity::MixedConvolution,
        Identity::Nielsen,
        Identity::Carlitz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Miki => "miki",
            Identity::FrobeniusEulerInDegenerate => "5a",
            Identity::BernoulliConvolution => "5b",
            Identity::EulerConvolution => "5c",
            Identity::MixedConvolution => "5d",
            Identity::Nielsen => "5e",
            Identity::Carlitz => "5f",
        }
    }

    /// Smallest admissible `n`.
    pub fn min_n(self) -> usize {
        match self {
            Identity::Miki
            | Identity::BernoulliConvolution
            | Identity::EulerConvolution
            | Identity::MixedConvolution => 2,
            _ => 0,
        }
    }

    /// Whether the check takes a second size `m`.
    pub fn uses_m(self) -> bool {
        matches!(self, Identity::Nielsen | Identity::Carlitz)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s || i.name().strip_prefix('5') == Some(s))
            .ok_or_else(|| Error::Parse(format!("unknown identity `{s}`")))
    }
}

/// Sizes and parameters of one case. Unused fields stay `None` and are
/// omitted from JSON.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityParams {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, with = "serde_rational_opt", skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Rational>,
    #[serde(default, with = "serde_rational_opt", skip_serializing_if = "Option::is_none")]
    pub u: Option<Rational>,
    #[serde(default, with = "serde_rational_opt", skip_serializing_if = "Option::is_none")]
    pub v: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
}

impl IdentityParams {
    pub fn with_n(n: usize) -> Self {
        IdentityParams { n, ..Default::default() }
    }

    /// Keeps only the fields `identity` reads.
    pub fn restrict(&self, identity: Identity) -> Self {
        let keep_u = matches!(
            identity,
            Identity::FrobeniusEulerInDegenerate | Identity::Nielsen | Identity::Carlitz
        );
        IdentityParams {
            n: self.n,
            m: self.m.filter(|_| identity.uses_m()),
            lambda: self.lambda.clone().filter(|_| identity != Identity::Miki),
            u: self.u.clone().filter(|_| keep_u),
            v: self.v.clone().filter(|_| identity == Identity::Carlitz),
            r: self.r.filter(|_| identity == Identity::Nielsen),
        }
    }
}

fn required<T: Clone>(value: &Option<T>, name: &'static str) -> Result<T> {
    value.clone().ok_or(Error::MissingParam(name))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub name: String,
    pub params: IdentityParams,
    pub lhs: Poly,
    pub rhs: Poly,
    pub holds: bool,
    pub discrepancy: Poly,
}

impl IdentityReport {
    pub fn new(name: impl Into<String>, params: IdentityParams, lhs: Poly, rhs: Poly) -> Self {
        let discrepancy = &lhs - &rhs;
        IdentityReport {
            name: name.into(),
            params,
            holds: discrepancy.is_zero(),
            lhs,
            rhs,
            discrepancy,
        }
    }
}

fn sum_in(table: &[Poly], coeffs: &[Rational]) -> Poly {
    table.iter().zip(coeffs).map(|(p, c)| p.scale(c)).sum()
}

fn check_size(identity: Identity, param: &'static str, got: usize, min: usize) -> Result<()> {
    if got < min {
        return Err(Error::SizeTooSmall { name: identity.name(), param, min, got });
    }
    Ok(())
}

/// Coefficients in `h_{k,λ}(x|u)` (or `𝓔_{k,λ}(x)`) of `Σ_m c_m H_m(x|u)`
/// (or `Σ_m c_m E_m(x)`): `(1/(k! λ^k)) Σ_m c_m Δ_λ^k 0^m`.
pub fn degenerate_reexpansion(classical: &[Rational], lambda: &Rational) -> Result<Vec<Rational>> {
    if lambda.is_zero() {
        return Err(Error::ZeroLambda("degenerate re-expansion"));
    }
    Ok((0..classical.len())
        .map(|k| {
            let s: Rational = classical
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| c * delta_zero(m, k, lambda))
                .sum();
            s / (factorial_q(k) * pow(lambda, k))
        })
        .collect())
}

/// Classical check plus degenerate re-expansion check.
fn classical_and_degenerate(
    identity: Identity,
    params: &IdentityParams,
    lhs: Poly,
    classical_kind: FamilyKind,
    degenerate_kind: FamilyKind,
    classical: &[Rational],
    lambda: &Rational,
) -> Result<Vec<IdentityReport>> {
    let table = family_table(&classical_kind, classical.len() - 1)?;
    let rhs = sum_in(&table, classical);
    let degenerate = Expansion {
        kind: degenerate_kind,
        coeffs: degenerate_reexpansion(classical, lambda)?,
    };
    let reexpanded = reconstruct(&degenerate)?;
    let name = identity.name();
    Ok(vec![
        IdentityReport::new(format!("{name}/classical"), params.clone(), lhs.clone(), rhs),
        IdentityReport::new(format!("{name}/degenerate"), params.clone(), lhs, reexpanded),
    ])
}

/// The quadratic Bernoulli identity for `n ≥ 2`:
///
/// `Σ_{k=1}^{n-1} B_{2k}(x) B_{2n-2k}(x) / (2k(2n-2k)) + 2/(2n-1) B_1(x) B_{2n-1}(x)`
/// `= (1/n) Σ_{k=1}^{n} C(2n,2k)/(2k) B_{2k} B_{2n-2k}(x) + (1/n) H_{2n-1} B_{2n}(x) + 2/(2n-1) B_1(x) B_{2n-1}`.
///
/// Reports, in order: `miki` (the identity as polynomials), `miki@x=0`,
/// `miki@x=1/2`, and `miki/full-sum`, whose left side is the convolution
/// over all indices `Σ_{k=1}^{2n-1} B_k(x) B_{2n-k}(x) / (k(2n-k))`.
///
/// As polynomials the even-index left side only matches for `n = 2`; for
/// larger `n` it misses the odd products `B_k(x) B_{2n-k}(x)`, `3 ≤ k ≤ 2n-3`,
/// which vanish at `x = 0` and `x = 1/2` but not identically.
pub fn check_miki_variant(n: usize) -> Result<Vec<IdentityReport>> {
    check_size(Identity::Miki, "n", n, 2)?;
    let params = IdentityParams::with_n(n);
    let top = 2 * n;
    let b = family_table(&FamilyKind::Bernoulli, top)?;
    let bn = bernoulli_numbers(top);
    let h = harmonic(top - 1)?;
    let two_over = rat(2, top as i64 - 1);
    let n_q = int(n as i64);

    let product = |k: usize| (&b[k] * &b[top - k]).scale(&int((k * (top - k)) as i64).recip());
    let b1_tail = (&b[1] * &b[top - 1]).scale(&two_over);

    let lhs: Poly = (1..n).map(|k| product(2 * k)).sum::<Poly>() + &b1_tail;
    let rhs: Poly = (1..=n)
        .map(|k| b[top - 2 * k].scale(&(binomial_q(top, 2 * k) * &bn[2 * k] / (int(2 * k as i64) * &n_q))))
        .sum::<Poly>()
        + b[top].scale(&(h / &n_q))
        + b[1].scale(&(&two_over * &bn[top - 1]));
    let full: Poly = (1..top).map(product).sum();

    let at = |p: &Poly, x: &Rational| Poly::constant(p.evaluate(x));
    let (zero, half) = (Rational::zero(), rat(1, 2));
    Ok(vec![
        IdentityReport::new("miki", params.clone(), lhs.clone(), rhs.clone()),
        IdentityReport::new("miki@x=0", params.clone(), at(&lhs, &zero), at(&rhs, &zero)),
        IdentityReport::new("miki@x=1/2", params.clone(), at(&lhs, &half), at(&rhs, &half)),
        IdentityReport::new("miki/full-sum", params, full, rhs),
    ])
}

/// Coefficients of `B_m(x) H_n(x|u)` in `H_j(x|u)`, `j = 0..=m+n`, from
/// Nielsen's formula.
pub fn nielsen_coefficients(m: usize, n: usize, u: &Rational) -> Result<Vec<Rational>> {
    check_u(u)?;
    let top = m + n;
    let bn = bernoulli_numbers(m);
    let hu = frobenius_euler_numbers(n, u, 1)?;
    let mut c = vec![Rational::zero(); top + 1];
    for (i, b) in bn.iter().enumerate() {
        c[top - i] += binomial_q(m, i) * b;
    }
    if m > 0 {
        let m_q = int(m as i64);
        c[top - 1] += &m_q;
        let w = &m_q * u / (Rational::one() - u);
        for (s, h) in hu.iter().enumerate() {
            c[top - s - 1] += &w * binomial_q(n, s) * h;
        }
    }
    Ok(c)
}

/// Coefficients of `H_m(x|u) H_n(x|v)` in `H_j(x|uv)` from Carlitz's formula.
pub fn carlitz_coefficients(m: usize, n: usize, u: &Rational, v: &Rational) -> Result<Vec<Rational>> {
    check_u(u)?;
    if v.is_one() {
        return Err(Error::VEqualsOne);
    }
    let w = u * v;
    if w.is_one() {
        return Err(Error::UvEqualsOne);
    }
    let one = Rational::one();
    let hu = frobenius_euler_numbers(m, u, 1)?;
    let hv = frobenius_euler_numbers(n, v, 1)?;
    let wu = u * (&one - v) / (&one - &w);
    let wv = v * (&one - u) / (&one - &w);
    let top = m + n;
    let mut c = vec![Rational::zero(); top + 1];
    c[top] += &one;
    for r in 1..=m {
        c[top - r] += &wu * binomial_q(m, r) * &hu[r];
    }
    for s in 1..=n {
        c[top - s] += &wv * binomial_q(n, s) * &hv[s];
    }
    Ok(c)
}

/// `(Δ_λ^k x^i)(x0) = Σ_l C(k,l) (-1)^{k-l} (x0 + lλ)^i`
fn delta_monomial_at(i: usize, k: usize, lambda: &Rational, x0: &Rational) -> Rational {
    (0..=k)
        .map(|l| binomial_q(k, l) * sign(k - l) * pow(&(x0 + lambda * int(l as i64)), i))
        .sum()
}

/// Order-`r` coefficients of `Σ_i c_i H_i(x|u)` through the ladder form:
/// `(1/((1-u)^{r-1} k! λ^k)) Σ_{j<r} C(r-1,j) (-u)^{r-1-j} Σ_i c_i (Δ_λ^k x^i)(j)`.
pub fn nielsen_ladder_coefficients(classical: &[Rational], lambda: &Rational, u: &Rational, r: usize) -> Result<Vec<Rational>> {
    check_u(u)?;
    if r == 0 {
        return Err(Error::LadderNeedsPositiveOrder);
    }
    if lambda.is_zero() {
        return Err(Error::ZeroLambda("ladder"));
    }
    let neg_u = -u;
    let norm = pow(&(Rational::one() - u).recip(), r - 1);
    Ok((0..classical.len())
        .map(|k| {
            let s: Rational = (0..r)
                .map(|j| {
                    let x0 = int(j as i64);
                    let inner: Rational = classical
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, c)| c * delta_monomial_at(i, k, lambda, &x0))
                        .sum();
                    binomial_q(r - 1, j) * pow(&neg_u, r - 1 - j) * inner
                })
                .sum();
            s * &norm / (factorial_q(k) * pow(lambda, k))
        })
        .collect())
}

fn convolution_lhs(left: &[Poly], right: &[Poly], n: usize) -> Poly {
    (1..n)
        .map(|k| (&left[k] * &right[n - k]).scale(&int((k * (n - k)) as i64).recip()))
        .sum()
}

/// One of the six product identities; see [`Identity`].
///
/// Each returns a `…/classical` report for the cited identity and a
/// `…/degenerate` report for its re-expansion in the degenerate basis. The
/// Frobenius–Euler case instead compares its coefficients with
/// [`represent_dfe`]; Nielsen adds two order-`r` reports when `r` is given.
pub fn check_sec5(identity: Identity, params: &IdentityParams) -> Result<Vec<IdentityReport>> {
    let params = params.restrict(identity);
    let n = params.n;
    check_size(identity, "n", n, identity.min_n())?;
    let lambda = required(&params.lambda, "lambda")?;
    let euler_kind = FamilyKind::Euler { r: 1 };
    let degen_euler = FamilyKind::DegenerateEuler { lambda: lambda.clone(), r: 1 };

    match identity {
        Identity::Miki => Err(Error::Parse("use check_miki_variant for the quadratic Bernoulli identity".into())),
        Identity::FrobeniusEulerInDegenerate => {
            let u = required(&params.u, "u")?;
            check_u(&u)?;
            let mut unit = vec![Rational::zero(); n + 1];
            unit[n] = Rational::one();
            let lhs = family_table(&FamilyKind::FrobeniusEuler { u: u.clone(), r: 1 }, n)?.swap_remove(n);
            let expected = degenerate_reexpansion(&unit, &lambda)?;
            let computed = represent_dfe(&lhs, &lambda, &u, FormulaVariant::OperatorForm)?;
            let kind = FamilyKind::DegenerateFrobeniusEuler { lambda, u, r: 1 };
            let reexpanded = reconstruct(&Expansion { kind, coeffs: expected.clone() })?;
            Ok(vec![
                IdentityReport::new(
                    "5a/coefficients",
                    params.clone(),
                    Poly::from_coeffs(computed.coeffs),
                    Poly::from_coeffs(expected),
                ),
                IdentityReport::new("5a/degenerate", params, lhs, reexpanded),
            ])
        }
        Identity::BernoulliConvolution => {
            let b = family_table(&FamilyKind::Bernoulli, n)?;
            let bn = bernoulli_numbers(n);
            let h = harmonic_table(n);
            let n_q = int(n as i64);
            let mut c = vec![Rational::zero(); n + 1];
            for (m, cm) in c.iter_mut().enumerate().take(n - 1) {
                let inner: Rational = (m + 1..n)
                    .map(|l| &bn[l - m] * &bn[n - l] / int(((l - m) * (n - l)) as i64))
                    .sum();
                *cm = int(2) * binomial_q(n, m) / &n_q * (&h[n - 1] - &h[n - m - 1]) * &bn[n - m]
                    + binomial_q(n - 1, m) * inner
                    + binomial_q(n - 1, m) * &bn[n - 1 - m] / int((n - 1 - m) as i64);
            }
            c[n - 2] += rat(n as i64 - 1, 2);
            c[n] += int(2) / &n_q * &h[n - 1];
            let lhs = convolution_lhs(&b, &b, n);
            classical_and_degenerate(identity, &params, lhs, euler_kind, degen_euler, &c, &lambda)
        }
        Identity::EulerConvolution => {
            let e = family_table(&euler_kind, n)?;
            let en = euler_numbers(n, 1);
            let h = harmonic_table(n);
            let mut c = vec![Rational::zero(); n + 1];
            for (m, cm) in c.iter_mut().enumerate().take(n - 1) {
                *cm = (m + 1..n)
                    .map(|l| binomial_q(n - 1, m) / int(((l - m) * (n - l)) as i64) * &en[l - m] * &en[n - l])
                    .sum();
            }
            c[n] += int(2) / int(n as i64) * &h[n - 1];
            let lhs = convolution_lhs(&e, &e, n);
            classical_and_degenerate(identity, &params, lhs, euler_kind, degen_euler, &c, &lambda)
        }
        Identity::MixedConvolution => {
            let b = family_table(&FamilyKind::Bernoulli, n)?;
            let e = family_table(&euler_kind, n)?;
            let bn = bernoulli_numbers(n);
            let en = euler_numbers(n, 1);
            let h = harmonic_table(n);
            let n_q = int(n as i64);
            let mut c = vec![Rational::zero(); n + 1];
            for (m, cm) in c.iter_mut().enumerate().take(n - 1) {
                *cm = binomial_q(n, m) / &n_q * (&h[n - 1] - &h[n - m - 1]) * &bn[n - m]
                    - rat(1, 2) * binomial_q(n - 1, m) * &en[n - m - 1] / int((n - m - 1) as i64);
            }
            c[n] += int(2) / &n_q * &h[n - 1];
            let lhs = convolution_lhs(&b, &e, n);
            classical_and_degenerate(identity, &params, lhs, euler_kind, degen_euler, &c, &lambda)
        }
        Identity::Nielsen => {
            let m = required(&params.m, "m")?;
            let u = required(&params.u, "u")?;
            let c = nielsen_coefficients(m, n, &u)?;
            let fe = FamilyKind::FrobeniusEuler { u: u.clone(), r: 1 };
            let bm = family_table(&FamilyKind::Bernoulli, m)?.swap_remove(m);
            let hn = family_table(&fe, n)?.swap_remove(n);
            let lhs = &bm * &hn;
            let degen = FamilyKind::DegenerateFrobeniusEuler { lambda: lambda.clone(), u: u.clone(), r: 1 };
            let mut reports = classical_and_degenerate(identity, &params, lhs.clone(), fe, degen, &c, &lambda)?;
            if let Some(r) = params.r {
                let binomial = represent_dfe_r(&lhs, &lambda, &u, r, FormulaVariant::BinomialSum)?;
                let ladder = Expansion {
                    kind: FamilyKind::DegenerateFrobeniusEuler { lambda: lambda.clone(), u: u.clone(), r },
                    coeffs: nielsen_ladder_coefficients(&c, &lambda, &u, r)?,
                };
                reports.push(IdentityReport::new(
                    "5e/order-r/binomial",
                    params.clone(),
                    lhs.clone(),
                    reconstruct(&binomial)?,
                ));
                reports.push(IdentityReport::new("5e/order-r/ladder", params, lhs, reconstruct(&ladder)?));
            }
            Ok(reports)
        }
        Identity::Carlitz => {
            let m = required(&params.m, "m")?;
            let u = required(&params.u, "u")?;
            let v = required(&params.v, "v")?;
            let c = carlitz_coefficients(m, n, &u, &v)?;
            let w = &u * &v;
            let hm = family_table(&FamilyKind::FrobeniusEuler { u: u.clone(), r: 1 }, m)?.swap_remove(m);
            let hn = family_table(&FamilyKind::FrobeniusEuler { u: v.clone(), r: 1 }, n)?.swap_remove(n);
            let lhs = &hm * &hn;
            let fe = FamilyKind::FrobeniusEuler { u: w.clone(), r: 1 };
            let degen = FamilyKind::DegenerateFrobeniusEuler { lambda: lambda.clone(), u: w, r: 1 };
            classical_and_degenerate(identity, &params, lhs, fe, degen, &c, &lambda)
        }
    }
}

/// Dispatches to [`check_miki_variant`] or [`check_sec5`].
pub fn check(identity: Identity, params: &IdentityParams) -> Result<Vec<IdentityReport>> {
    match identity {
        Identity::Miki => check_miki_variant(params.n),
        _ => check_sec5(identity, params),
    }
}

/// Runs independent cases, in input order.
pub fn check_all(cases: &[(Identity, IdentityParams)]) -> Vec<Result<Vec<IdentityReport>>> {
    batch::map(cases, |(identity, params)| check(*identity, params))
}

/// Expansion of `p·q` in `kind`.
///
/// For order `r ≥ 1` degenerate Frobenius–Euler bases with `λ ≠ 0` the
/// binomial double sum and the ladder form are both evaluated and must agree.
pub fn expand_product_in_basis(p: &Poly, q: &Poly, kind: &FamilyKind) -> Result<Expansion> {
    kind.validate()?;
    let product = p * q;
    match kind {
        FamilyKind::DegenerateFrobeniusEuler { lambda, u, r } if *r >= 1 && !lambda.is_zero() => {
            let direct = represent_dfe_r(&product, lambda, u, *r, FormulaVariant::BinomialSum)?;
            let ladder = represent_dfe_r(&product, lambda, u, *r, FormulaVariant::LadderForm)?;
            if direct != ladder {
                return Err(Error::RoutesDisagree(format!(
                    "binomial and ladder coefficients differ in the {kind} basis"
                )));
            }
            Ok(direct)
        }
        _ => represent(&product, kind, FormulaVariant::default_for(kind)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::stirling2;

    fn params(n: usize, m: Option<usize>, lambda: Rational, u: Option<Rational>, v: Option<Rational>) -> IdentityParams {
        IdentityParams { n, m, lambda: Some(lambda), u, v, r: None }
    }

    fn all_hold(reports: &[IdentityReport]) -> bool {
        reports.iter().all(|r| r.holds)
    }

    #[test]
    fn miki_n2_holds() {
        let reports = check_miki_variant(2).unwrap();
        assert_eq!(reports.len(), 4);
        assert!(all_hold(&reports));
    }

    #[test]
    fn miki_literal_fails_beyond_n2_but_specialisations_hold() {
        for n in 3..=6 {
            let reports = check_miki_variant(n).unwrap();
            assert!(!reports[0].holds, "n = {n}");
            assert!(reports[1..].iter().all(|r| r.holds), "n = {n}");
        }
        // the defect at n = 3 is the missing -B_3(x)^2 / 9
        let b3 = family_table(&FamilyKind::Bernoulli, 3).unwrap().swap_remove(3);
        let d = check_miki_variant(3).unwrap().swap_remove(0).discrepancy;
        assert_eq!(d, (&b3 * &b3).scale(&rat(-1, 9)));
    }

    #[test]
    fn miki_rejects_small_n() {
        assert!(matches!(check_miki_variant(1), Err(Error::SizeTooSmall { min: 2, got: 1, .. })));
    }

    #[test]
    fn frobenius_euler_coefficients_are_scaled_stirling() {
        let (lambda, u) = (rat(1, 2), int(2));
        let reports = check_sec5(
            Identity::FrobeniusEulerInDegenerate,
            &params(4, None, lambda.clone(), Some(u), None),
        )
        .unwrap();
        assert!(all_hold(&reports));
        let expected: Vec<Rational> = (0..=4).map(|k| pow(&lambda, 4 - k) * stirling2(4, k)).collect();
        assert_eq!(reports[0].lhs, Poly::from_coeffs(expected));
    }

    #[test]
    fn convolutions_hold() {
        for identity in [Identity::BernoulliConvolution, Identity::EulerConvolution, Identity::MixedConvolution] {
            for n in 2..=7 {
                let reports = check_sec5(identity, &params(n, None, rat(-1, 3), None, None)).unwrap();
                assert_eq!(reports.len(), 2);
                assert!(all_hold(&reports), "{identity} n = {n}");
            }
            assert!(matches!(
                check_sec5(identity, &params(1, None, int(1), None, None)),
                Err(Error::SizeTooSmall { .. })
            ));
        }
    }

    #[test]
    fn nielsen_m_zero_is_trivial() {
        let u = int(3);
        for n in 0..5 {
            let mut unit = vec![Rational::zero(); n + 1];
            unit[n] = Rational::one();
            assert_eq!(nielsen_coefficients(0, n, &u).unwrap(), unit);
        }
    }

    #[test]
    fn nielsen_holds_with_order_r() {
        for r in 1..=3 {
            for (m, n) in [(1, 1), (2, 3), (3, 0)] {
                let mut p = params(n, Some(m), rat(1, 2), Some(int(-3)), None);
                p.r = Some(r);
                let reports = check_sec5(Identity::Nielsen, &p).unwrap();
                assert_eq!(reports.len(), 4);
                assert!(all_hold(&reports), "m = {m}, n = {n}, r = {r}");
            }
        }
    }

    #[test]
    fn nielsen_ladder_at_zero_only_is_wrong_for_higher_order() {
        // reading every Δ_λ^k x^i in the ladder at x = 0 instead of x = j
        let (lambda, u, m, n) = (int(1), int(2), 1, 2);
        let c = nielsen_coefficients(m, n, &u).unwrap();
        let at_zero = |r: usize| -> Vec<Rational> {
            let norm = pow(&(Rational::one() - &u).recip(), r - 1);
            let weight: Rational = (0..r).map(|j| binomial_q(r - 1, j) * pow(&-&u, r - 1 - j)).sum();
            degenerate_reexpansion(&c, &lambda)
                .unwrap()
                .into_iter()
                .map(|a| a * &norm * &weight)
                .collect()
        };
        for r in 1..=3 {
            let corrected = nielsen_ladder_coefficients(&c, &lambda, &u, r).unwrap();
            assert_eq!(corrected == at_zero(r), r == 1, "r = {r}");
        }
    }

    #[test]
    fn carlitz_example_and_guards() {
        let reports = check_sec5(Identity::Carlitz, &params(1, Some(1), int(1), Some(int(2)), Some(int(3)))).unwrap();
        assert!(all_hold(&reports));
        // H_1(x|2) H_1(x|3) = H_2(x|6) + 4/5 H_1(2) H_1(x|6) + 3/5 H_1(3) H_1(x|6)
        let c = carlitz_coefficients(1, 1, &int(2), &int(3)).unwrap();
        let h1 = |u: i64| frobenius_euler_numbers(1, &int(u), 1).unwrap()[1].clone();
        assert_eq!(c, vec![int(0), rat(4, 5) * h1(2) + rat(3, 5) * h1(3), int(1)]);

        let guard = |u: Rational, v: Rational| check_sec5(Identity::Carlitz, &params(1, Some(1), int(1), Some(u), Some(v)));
        assert_eq!(guard(rat(1, 2), int(2)), Err(Error::UvEqualsOne));
        assert_eq!(guard(int(1), int(2)), Err(Error::UEqualsOne));
        assert_eq!(guard(int(2), int(1)), Err(Error::VEqualsOne));
    }

    #[test]
    fn missing_parameters() {
        assert_eq!(
            check_sec5(Identity::Nielsen, &IdentityParams::with_n(2)),
            Err(Error::MissingParam("lambda"))
        );
        assert_eq!(
            check_sec5(Identity::Carlitz, &params(1, Some(1), int(1), Some(int(2)), None)),
            Err(Error::MissingParam("v"))
        );
    }

    #[test]
    fn product_expansion() {
        let u = int(2);
        let lambda = rat(1, 3);
        let b1 = family_table(&FamilyKind::Bernoulli, 1).unwrap().swap_remove(1);
        let h1 = family_table(&FamilyKind::FrobeniusEuler { u: u.clone(), r: 1 }, 1).unwrap().swap_remove(1);
        for r in 0..=3 {
            let kind = FamilyKind::DegenerateFrobeniusEuler { lambda: lambda.clone(), u: u.clone(), r };
            let e = expand_product_in_basis(&b1, &h1, &kind).unwrap();
            assert_eq!(reconstruct(&e).unwrap(), &b1 * &h1);
        }
        let kind = FamilyKind::DegenerateFrobeniusEuler { lambda: lambda.clone(), u: u.clone(), r: 2 };
        assert_eq!(
            expand_product_in_basis(&Poly::one(), &h1, &kind).unwrap(),
            represent(&h1, &kind, FormulaVariant::DeltaForm).unwrap()
        );
    }

    #[test]
    fn identity_names_parse() {
        for i in Identity::ALL {
            assert_eq!(i.name().parse::<Identity>().unwrap(), i);
        }
        assert_eq!("f".parse::<Identity>().unwrap(), Identity::Carlitz);
        assert!("5g".parse::<Identity>().is_err());
    }

    #[test]
    fn check_all_keeps_order() {
        let cases: Vec<_> = (2..6).map(|n| (Identity::Miki, IdentityParams::with_n(n))).collect();
        let out = check_all(&cases);
        for (res, n) in out.iter().zip(2..) {
            assert_eq!(res.as_ref().unwrap()[0].params.n, n);
        }
    }
}
