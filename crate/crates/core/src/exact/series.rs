//! Truncated exponential generating functions with polynomial coefficients.

use super::poly::Poly;
use super::rational::{binomial_q, Rational};
use crate::error::{Error, Result};

/// `Σ_{k=0}^{N} terms[k] t^k / k!`, truncated at order `N`.
///
/// Terms are stored in exponential normalization, so the product of two
/// series is a binomial convolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySeries {
    terms: Vec<Poly>,
}

impl PolySeries {
    /// Pads with zeros or truncates `terms` to exactly `order + 1` entries.
    pub fn new(order: usize, mut terms: Vec<Poly>) -> Self {
        terms.resize(order + 1, Poly::zero());
        PolySeries { terms }
    }

    /// The series `1`.
    pub fn unit(order: usize) -> Self {
        Self::new(order, vec![Poly::one()])
    }

    pub fn from_scalars(order: usize, f: impl Fn(usize) -> Rational) -> Self {
        PolySeries {
            terms: (0..=order).map(|k| Poly::constant(f(k))).collect(),
        }
    }

    pub fn from_polys(order: usize, f: impl Fn(usize) -> Poly) -> Self {
        PolySeries {
            terms: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn terms(&self) -> &[Poly] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Poly> {
        self.terms
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(PolySeries {
            terms: self.terms.iter().zip(&other.terms).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(PolySeries {
            terms: self.terms.iter().zip(&other.terms).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PolySeries {
            terms: self.terms.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Binomial (EGF) convolution: `out[n] = Σ_k C(n,k) a[k] b[n-k]`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let terms = (0..=self.order())
            .map(|n| {
                (0..=n)
                    .filter(|&k| !self.terms[k].is_zero() && !other.terms[n - k].is_zero())
                    .map(|k| (&self.terms[k] * &other.terms[n - k]).scale(&binomial_q(n, k)))
                    .sum()
            })
            .collect();
        Ok(PolySeries { terms })
    }

    /// Multiplicative inverse by triangular recursion on the convolution.
    pub fn inverse(&self) -> Result<Self> {
        let c = match self.terms[0].degree() {
            Some(0) => self.terms[0].coeff(0),
            _ => return Err(Error::NotInvertible),
        };
        let inv_c = c.recip();
        let mut out: Vec<Poly> = Vec::with_capacity(self.terms.len());
        out.push(Poly::constant(inv_c.clone()));
        for n in 1..=self.order() {
            let acc: Poly = (1..=n)
                .map(|k| (&self.terms[k] * &out[n - k]).scale(&binomial_q(n, k)))
                .sum();
            out.push(acc.scale(&-&inv_c));
        }
        Ok(PolySeries { terms: out })
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::unit(self.order());
        for _ in 0..e {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    pub fn is_unit(&self) -> bool {
        self.terms[0] == Poly::one() && self.terms[1..].iter().all(Poly::is_zero)
    }

    /// Value of `Σ terms[k] t^k/k!` with every polynomial evaluated at `x0`:
    /// a scalar series, returned as its terms.
    pub fn scalar_terms_at(&self, x0: &Rational) -> Vec<Rational> {
        self.terms.iter().map(|p| p.evaluate(x0)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(Poly::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn e_lambda_one(order: usize) -> PolySeries {
        // e_1(t) = 1 + t
        PolySeries::from_scalars(order, |k| if k <= 1 { int(1) } else { int(0) })
    }

    #[test]
    fn unit_is_identity() {
        let b = PolySeries::from_polys(3, |k| Poly::from_ints(&[k as i64, 1]));
        assert_eq!(PolySeries::unit(3).mul(&b).unwrap(), b);
    }

    #[test]
    fn square_of_degenerate_exponential() {
        // (1)_{n,1} convolved with itself gives (2)_{n,1} = 1, 2, 2, 0, ...
        let e = e_lambda_one(4);
        let sq = e.mul(&e).unwrap();
        let got = sq.scalar_terms_at(&int(0));
        assert_eq!(got, vec![int(1), int(2), int(2), int(0), int(0)]);
    }

    #[test]
    fn order_zero_product() {
        let a = PolySeries::from_scalars(0, |_| int(3));
        let b = PolySeries::from_scalars(0, |_| rat(1, 2));
        assert_eq!(a.mul(&b).unwrap().terms(), &[Poly::constant(rat(3, 2))]);
    }

    #[test]
    fn mismatched_orders() {
        let a = PolySeries::unit(2);
        let b = PolySeries::unit(3);
        assert_eq!(a.mul(&b), Err(Error::OrderMismatch(2, 3)));
    }

    #[test]
    fn inverse_examples() {
        assert!(PolySeries::unit(4).inverse().unwrap().is_unit());
        // e_1(t) + 1 = 2 + t: solve 2 b0 = 1, 2 b1 + b0 = 0
        let a = e_lambda_one(3).add(&PolySeries::unit(3)).unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(inv.terms()[0], Poly::constant(rat(1, 2)));
        assert_eq!(inv.terms()[1], Poly::constant(rat(-1, 4)));
        assert!(a.mul(&inv).unwrap().is_unit());
        assert_eq!(inv.inverse().unwrap(), a);
    }

    #[test]
    fn non_invertible() {
        let zero_const = PolySeries::from_scalars(3, |k| int(k as i64));
        assert_eq!(zero_const.inverse(), Err(Error::NotInvertible));
        let poly_const = PolySeries::new(2, vec![Poly::x()]);
        assert_eq!(poly_const.inverse(), Err(Error::NotInvertible));
    }
}
