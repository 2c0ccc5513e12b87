//! Scalar special-number sequences.
//!
//! Every sequence is produced by an exact recurrence; each `*_numbers`
//! function returns the whole prefix `0..=n_max`, which is the memo table the
//! single-value accessors read from. Tables live only for the call, so the
//! functions stay pure under concurrent use.
//!
//! The degeneration parameter `lambda` may be zero everywhere in this module:
//! every recurrence is polynomial in `lambda`, and `lambda = 0` reproduces the
//! classical sequence.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rational::{binomial_q, int, pow, serde_rational, sign, Rational};

/// Degeneration parameter `lambda`, Frobenius parameter `u` and order `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegenParams {
    #[serde(with = "serde_rational")]
    pub lambda: Rational,
    #[serde(with = "serde_rational")]
    pub u: Rational,
    pub r: usize,
}

impl DegenParams {
    pub fn new(lambda: Rational, u: Rational, r: usize) -> Self {
        DegenParams { lambda, u, r }
    }
}

pub(crate) fn check_u(u: &Rational) -> Result<()> {
    if u.is_one() {
        Err(Error::UEqualsOne)
    } else {
        Ok(())
    }
}

/// Rows `0..=n_max` of the Stirling triangle of the second kind.
pub fn stirling2_table(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let stay = if k < n { prev[k].clone() * k } else { BigInt::zero() };
                let grow = if k > 0 { prev[k - 1].clone() } else { BigInt::zero() };
                stay + grow
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// `S2(n, k)`, zero when `k > n`.
pub fn stirling2(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    Rational::from_integer(stirling2_table(n)[n][k].clone())
}

/// `1 + 1/2 + ... + 1/n`.
pub fn harmonic(n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::HarmonicZero);
    }
    Ok((1..=n).map(|i| Rational::new(1.into(), i.into())).sum())
}

/// Harmonic numbers with `H_0 = 0` included, for sums that reach index zero.
pub(crate) fn harmonic_table(n_max: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero()];
    for i in 1..=n_max {
        let next = &out[i - 1] + Rational::new(1.into(), i.into());
        out.push(next);
    }
    out
}

/// `B_0..=B_{n_max}` with `B_1 = -1/2`.
pub fn bernoulli_numbers(n_max: usize) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for m in 1..=n_max {
        let s: Rational = (0..m).map(|j| binomial_q(m + 1, j) * &b[j]).sum();
        b.push(-s / int(m as i64 + 1));
    }
    b
}

pub fn bernoulli_number(n: usize) -> Rational {
    bernoulli_numbers(n).pop().expect("non-empty")
}

/// `(1)_{n,lambda} = 1 (1 - lambda) ... (1 - (n-1) lambda)`.
pub fn one_nlambda(n: usize, lambda: &Rational) -> Rational {
    (0..n).fold(Rational::one(), |acc, i| acc * (Rational::one() - lambda * int(i as i64)))
}

/// `Δ_λ^k 0^n = Σ_j C(k,j) (-1)^{k-j} (jλ)^n`, with `0^0 = 1`.
pub fn delta_zero(n: usize, k: usize, lambda: &Rational) -> Rational {
    (0..=k)
        .map(|j| binomial_q(k, j) * sign(k - j) * pow(&(lambda * int(j as i64)), n))
        .sum()
}

/// Binomial convolution of two exponential-generating sequences.
pub fn egf_convolve(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let len = a.len().min(b.len());
    (0..len)
        .map(|n| (0..=n).map(|k| binomial_q(n, k) * &a[k] * &b[n - k]).sum())
        .collect()
}

/// `r`-fold self-convolution; `r = 0` gives `δ_{n,0}`.
pub fn egf_power(a: &[Rational], r: usize) -> Vec<Rational> {
    let mut acc: Vec<Rational> = (0..a.len())
        .map(|n| if n == 0 { Rational::one() } else { Rational::zero() })
        .collect();
    for _ in 0..r {
        acc = egf_convolve(&acc, a);
    }
    acc
}

/// Frobenius–Euler numbers `H_0^{(r)}(u)..=H_{n_max}^{(r)}(u)`.
///
/// Order one solves `H_n(1|u) - u H_n(u) = (1-u) δ_{n,0}` for `H_n(u)`,
/// using `H_n(1|u) = Σ_j C(n,j) H_j(u)`.
pub fn frobenius_euler_numbers(n_max: usize, u: &Rational, r: usize) -> Result<Vec<Rational>> {
    check_u(u)?;
    let denom = Rational::one() - u;
    let mut h = vec![Rational::one()];
    for n in 1..=n_max {
        let s: Rational = (0..n).map(|j| binomial_q(n, j) * &h[j]).sum();
        h.push(-s / &denom);
    }
    Ok(egf_power(&h, r))
}

pub fn frobenius_euler_number(n: usize, u: &Rational, r: usize) -> Result<Rational> {
    Ok(frobenius_euler_numbers(n, u, r)?.pop().expect("non-empty"))
}

/// Euler numbers of order `r`, i.e. Frobenius–Euler numbers at `u = -1`.
pub fn euler_numbers(n_max: usize, r: usize) -> Vec<Rational> {
    frobenius_euler_numbers(n_max, &int(-1), r).expect("u = -1 is admissible")
}

pub fn euler_number(n: usize) -> Rational {
    euler_numbers(n, 1).pop().expect("non-empty")
}

/// Degenerate Frobenius–Euler numbers `h_{n,λ}^{(r)}(u)` for `n = 0..=n_max`.
///
/// Order one uses `(1-u) h_n = -Σ_{j<n} C(n,j) (1)_{n-j,λ} h_j`; higher
/// orders are binomial self-convolutions of that sequence.
pub fn degen_fe_numbers(n_max: usize, params: &DegenParams) -> Result<Vec<Rational>> {
    check_u(&params.u)?;
    let ones: Vec<Rational> = (0..=n_max).map(|k| one_nlambda(k, &params.lambda)).collect();
    let denom = Rational::one() - &params.u;
    let mut h = vec![Rational::one()];
    for n in 1..=n_max {
        let s: Rational = (0..n).map(|j| binomial_q(n, j) * &ones[n - j] * &h[j]).sum();
        h.push(-s / &denom);
    }
    Ok(egf_power(&h, params.r))
}

pub fn degen_fe_number(n: usize, params: &DegenParams) -> Result<Rational> {
    Ok(degen_fe_numbers(n, params)?.pop().expect("non-empty"))
}
