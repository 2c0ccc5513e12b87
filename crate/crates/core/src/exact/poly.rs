//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{binomial_q, latex_rational, parse_rational, pow, Rational};

/// A polynomial in `x`, coefficient `i` multiplying `x^i`.
///
/// Trailing zeros are trimmed on construction, so the zero polynomial has an
/// empty coefficient vector and derived equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

/// Binary ring operations, for callers that pick the operation at runtime.
#[derive(Debug, Clone, PartialEq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    Scale(Rational),
}

/// `scale` ignores `q`.
pub fn poly_arith(p: &Poly, q: &Poly, op: &PolyOp) -> Poly {
    match op {
        PolyOp::Add => p + q,
        PolyOp::Sub => p - q,
        PolyOp::Mul => p * q,
        PolyOp::Scale(c) => p.scale(c),
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    /// Parses comma-separated ascending coefficients, e.g. `"1/2,0,-3"`.
    pub fn parse_csv(s: &str) -> crate::Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(crate::Error::Parse("empty polynomial".into()));
        }
        s.split(',')
            .map(parse_rational)
            .collect::<crate::Result<Vec<_>>>()
            .map(Self::from_coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial (degree minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(x + a)`, by binomial expansion of each power.
    pub fn shift(&self, a: &Rational) -> Poly {
        if a.is_zero() || self.coeffs.len() < 2 {
            return self.clone();
        }
        let n = self.coeffs.len();
        let powers: Vec<Rational> = (0..n).map(|e| pow(a, e)).collect();
        let out = (0..n)
            .map(|j| {
                (j..n)
                    .filter(|&i| !self.coeffs[i].is_zero())
                    .map(|i| &self.coeffs[i] * binomial_q(i, j) * &powers[i - j])
                    .fold(Rational::zero(), |acc, t| acc + t)
            })
            .collect();
        Poly::from_coeffs(out)
    }

    /// `l`-fold derivative.
    pub fn derivative(&self, l: usize) -> Poly {
        if l == 0 {
            return self.clone();
        }
        if l >= self.coeffs.len() {
            return Poly::zero();
        }
        let out = (l..self.coeffs.len())
            .map(|i| {
                // i (i-1) ... (i-l+1)
                let falling: num_bigint::BigInt = ((i - l + 1)..=i).product();
                &self.coeffs[i] * Rational::from_integer(falling)
            })
            .collect();
        Poly::from_coeffs(out)
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x0: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x0 + c)
    }

    /// Rendered in descending powers, rationals as `\frac{p}{q}`.
    pub fn to_latex(&self) -> String {
        render(self, true)
    }
}

fn render(p: &Poly, latex: bool) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let abs = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let var = match i {
            0 => String::new(),
            1 => "x".into(),
            _ if latex => format!("x^{{{i}}}"),
            _ => format!("x^{i}"),
        };
        if !abs.is_one() || i == 0 {
            out.push_str(&if latex {
                latex_rational(&abs)
            } else if abs.is_integer() {
                abs.numer().to_string()
            } else {
                format!("{}/{}", abs.numer(), abs.denom())
            });
            if i > 0 {
                out.push(if latex { ' ' } else { '*' });
            }
        }
        out.push_str(&var);
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, false))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        super::rational::serde_rational_vec::serialize(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        super::rational::serde_rational_vec::deserialize(d).map(Poly::from_coeffs)
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |acc, p| acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    #[test]
    fn arithmetic_examples() {
        let a = Poly::from_ints(&[1, 1]);
        let b = Poly::from_ints(&[-1, 1]);
        assert_eq!(poly_arith(&a, &b, &PolyOp::Add), Poly::from_ints(&[0, 2]));
        assert_eq!(poly_arith(&Poly::x(), &Poly::x(), &PolyOp::Mul), Poly::from_ints(&[0, 0, 1]));
        let p = Poly::from_ints(&[0, -1, 1]);
        assert_eq!(
            poly_arith(&p, &Poly::zero(), &PolyOp::Scale(rat(1, 2))),
            Poly::from_coeffs(vec![int(0), rat(-1, 2), rat(1, 2)])
        );
        assert_eq!(&a - &a, Poly::zero());
        assert_eq!((&a - &a).degree(), None);
    }

    #[test]
    fn shift_examples() {
        assert_eq!(Poly::from_ints(&[0, 0, 1]).shift(&int(1)), Poly::from_ints(&[1, 2, 1]));
        let p = Poly::from_ints(&[3, 0, 5]);
        assert_eq!(p.shift(&int(0)), p);
        // (x - 1/2)^3
        assert_eq!(
            Poly::from_ints(&[0, 0, 0, 1]).shift(&rat(-1, 2)),
            Poly::from_coeffs(vec![rat(-1, 8), rat(3, 4), rat(-3, 2), int(1)])
        );
        assert_eq!(Poly::zero().shift(&int(4)), Poly::zero());
    }

    #[test]
    fn derivative_examples() {
        let cube = Poly::from_ints(&[0, 0, 0, 1]);
        assert_eq!(cube.derivative(1), Poly::from_ints(&[0, 0, 3]));
        assert_eq!(cube.derivative(4), Poly::zero());
        assert_eq!(Poly::from_ints(&[0, -1, 0, 0, 1]).derivative(2), Poly::from_ints(&[0, 0, 12]));
        assert_eq!(Poly::zero().derivative(0), Poly::zero());
    }

    #[test]
    fn evaluate_examples() {
        let p = Poly::from_ints(&[0, -1, 1]);
        assert_eq!(p.evaluate(&int(1)), int(0));
        assert_eq!(p.evaluate(&rat(1, 2)), rat(-1, 4));
        assert_eq!(Poly::zero().evaluate(&rat(7, 3)), int(0));
    }

    #[test]
    fn canonical_form() {
        let p = Poly::from_coeffs(vec![int(1), int(0), int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(p, Poly::one());
        assert_eq!(Poly::from_coeffs(vec![int(0)]), Poly::zero());
    }

    #[test]
    fn rendering() {
        let p = Poly::from_coeffs(vec![rat(1, 4), rat(-1, 2), int(1)]);
        assert_eq!(p.to_latex(), "x^{2} - \\frac{1}{2} x + \\frac{1}{4}");
        assert_eq!(p.to_string(), "x^2 - 1/2*x + 1/4");
        assert_eq!(Poly::from_ints(&[0, -1]).to_latex(), "-x");
        assert_eq!(Poly::zero().to_latex(), "0");
    }

    #[test]
    fn json_and_csv() {
        let p = Poly::from_coeffs(vec![rat(-31, 2), int(0), int(1)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"["-31/2","0/1","1/1"]"#);
        assert_eq!(serde_json::from_str::<Poly>(&s).unwrap(), p);
        assert_eq!(Poly::parse_csv("-31/2, 0, 1").unwrap(), p);
        assert!(Poly::parse_csv("1,,2").is_err());
    }
}
