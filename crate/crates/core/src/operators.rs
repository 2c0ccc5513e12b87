//! Difference operators and umbral functionals as finite shift combinations.
//!
//! Every operator needed here is a polynomial in shift operators `e^{yt}`,
//! which act on polynomials by `p(x) -> p(x + y)`:
//!
//! * `Δ_a^k = (e^{at} - 1)^k`
//! * `∇̃^k = (e^t + 1)^k`
//! * `f(t)^k = λ^{-k} (e^{λt} - 1)^k`
//! * `g(t)^r = (1-u)^{-r} (e^t - u)^r`
//!
//! Because these are only ever applied to polynomials, the finite sum
//! `Σ w_i e^{y_i t}` is an exact representation of the operator and no
//! power series in `t` has to be truncated. The one exception is the `λ = 0`
//! limit of `f(t)`, which is `d/dx` and is handled by an explicit branch.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::Result;
use crate::exact::rational::{binomial_q, int, pow, sign, Rational};
use crate::exact::Poly;
use crate::numbers::check_u;

/// `Σ weight · e^{offset · t}` with distinct offsets and nonzero weights,
/// sorted by offset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ShiftCombo {
    terms: Vec<(Rational, Rational)>,
}

impl ShiftCombo {
    /// Merges duplicate offsets and drops zero weights.
    pub fn new(terms: impl IntoIterator<Item = (Rational, Rational)>) -> Self {
        let mut merged: BTreeMap<Rational, Rational> = BTreeMap::new();
        for (w, y) in terms {
            *merged.entry(y).or_insert_with(Rational::zero) += w;
        }
        ShiftCombo {
            terms: merged
                .into_iter()
                .filter(|(_, w)| !w.is_zero())
                .map(|(y, w)| (w, y))
                .collect(),
        }
    }

    pub fn zero() -> Self {
        ShiftCombo { terms: Vec::new() }
    }

    pub fn identity() -> Self {
        Self::shift(Rational::zero())
    }

    /// `e^{yt}`
    pub fn shift(y: Rational) -> Self {
        ShiftCombo {
            terms: vec![(Rational::one(), y)],
        }
    }

    /// `(weight, offset)` pairs.
    pub fn terms(&self) -> &[(Rational, Rational)] {
        &self.terms
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.terms.iter().chain(&other.terms).cloned())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.terms.iter().map(|(w, y)| (w * c, y.clone())))
    }

    /// Operator product; shifts commute, so `e^{at} e^{bt} = e^{(a+b)t}`.
    pub fn compose(&self, other: &Self) -> Self {
        Self::new(
            self.terms
                .iter()
                .flat_map(|(w1, y1)| other.terms.iter().map(move |(w2, y2)| (w1 * w2, y1 + y2))),
        )
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::identity(), |acc, _| acc.compose(self))
    }

    /// `Δ_a^k = Σ_i C(k,i) (-1)^{k-i} e^{iat}`
    pub fn forward_difference(a: &Rational, k: usize) -> Self {
        Self::new((0..=k).map(|i| (binomial_q(k, i) * sign(k - i), a * int(i as i64))))
    }

    /// `∇̃^k = Σ_i C(k,i) e^{it}`
    pub fn tilde_difference(k: usize) -> Self {
        Self::new((0..=k).map(|i| (binomial_q(k, i), int(i as i64))))
    }

    /// `((e^{λt} - 1)/λ)^k`; `λ` must be nonzero.
    pub fn degenerate_delta(lambda: &Rational, k: usize) -> Self {
        Self::forward_difference(lambda, k).scale(&pow(&lambda.recip(), k))
    }

    /// `((e^t - u)/(1-u))^r = (1-u)^{-r} Σ_j C(r,j) (-u)^{r-j} e^{jt}`
    pub fn frobenius_g(u: &Rational, r: usize) -> Result<Self> {
        check_u(u)?;
        let neg_u = -u;
        let norm = pow(&(Rational::one() - u).recip(), r);
        Ok(Self::new(
            (0..=r).map(|j| (binomial_q(r, j) * pow(&neg_u, r - j) * &norm, int(j as i64))),
        ))
    }

    /// `Σ w · p(x + y)`
    pub fn apply(&self, p: &Poly) -> Poly {
        self.terms.iter().map(|(w, y)| p.shift(y).scale(w)).sum()
    }

    /// `⟨combo | p⟩ = (combo p)(0) = Σ w · p(y)`; no shifted polynomial is formed.
    pub fn functional(&self, p: &Poly) -> Rational {
        self.terms.iter().map(|(w, y)| w * p.evaluate(y)).sum()
    }
}

/// `Δ_a^k p`
pub fn forward_diff(p: &Poly, a: &Rational, k: usize) -> Poly {
    if k == 0 {
        return p.clone();
    }
    ShiftCombo::forward_difference(a, k).apply(p)
}

/// `∇̃^k p = Σ_i C(k,i) p(x + i)`
pub fn tilde_diff(p: &Poly, k: usize) -> Poly {
    if k == 0 {
        return p.clone();
    }
    ShiftCombo::tilde_difference(k).apply(p)
}

/// `f(t)^k p` with `f(t) = (e^{λt} - 1)/λ`; at `λ = 0` this is `d^k p/dx^k`.
pub fn f_op(p: &Poly, lambda: &Rational, k: usize) -> Poly {
    if lambda.is_zero() {
        return p.derivative(k);
    }
    forward_diff(p, lambda, k).scale(&pow(&lambda.recip(), k))
}

/// `g(t)^r p` with `g(t) = (e^t - u)/(1-u)`.
pub fn g_op(p: &Poly, u: &Rational, r: usize) -> Result<Poly> {
    check_u(u)?;
    if r == 0 {
        return Ok(p.clone());
    }
    Ok(ShiftCombo::frobenius_g(u, r)?.apply(p))
}

/// `⟨c | p⟩`
pub fn functional(c: &ShiftCombo, p: &Poly) -> Rational {
    c.functional(p)
}
