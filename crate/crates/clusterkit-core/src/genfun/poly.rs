//! Dense univariate polynomials over arbitrary-precision rationals.
//!
//! Coefficients are stored in ascending degree order. The representation
//! is canonical: trailing zeros are stripped, and the zero polynomial has
//! an empty coefficient list.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::GfError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    /// Builds a polynomial, stripping trailing zeros.
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::new(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::new(vec![c])
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_zero(&self) -> BigRational {
        self.coeff(0)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Divides by `x^k`; the low-order coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Result<Poly, GfError> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(GfError::NonVanishingLowOrder { valuation: k });
        }
        Ok(Poly::new(self.coeffs.iter().skip(k).cloned().collect()))
    }

    /// Euclidean division, `None` when the divisor is zero.
    pub fn div_rem(&self, d: &Poly) -> Option<(Poly, Poly)> {
        let dd = d.degree()?;
        let lead = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let factor = &rem[k] / &lead;
            if !factor.is_zero() {
                quot[k - dd] = factor.clone();
                for i in 0..=dd {
                    let t = &d.coeffs[i] * &factor;
                    rem[k - dd + i] -= t;
                }
            }
            rem.pop();
        }
        Some((Poly::new(quot), Poly::new(rem)))
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scales to leading coefficient one (zero stays zero).
    pub fn monic(&self) -> Poly {
        match self.degree() {
            None => Poly::zero(),
            Some(d) => self.scale(&self.coeffs[d].recip()),
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    /// Space-separated `coeff*x^k` terms in ascending degree, joined by
    /// `+`; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{c}*x^{k}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Poly {
    type Err = GfError;

    fn from_str(s: &str) -> Result<Self, GfError> {
        let s = s.trim();
        if s == "0" {
            return Ok(Poly::zero());
        }
        let mut coeffs: Vec<BigRational> = Vec::new();
        for term in s.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(GfError::Parse { message: "empty term".to_string() });
            }
            let (coeff_str, degree) = match term.split_once("*x^") {
                Some((c, k)) => (c.trim(), parse_degree(k)?),
                None => match term.strip_prefix("x^") {
                    Some(k) => ("1", parse_degree(k)?),
                    None => (term, 0),
                },
            };
            let c: BigRational = coeff_str.parse().map_err(|_| GfError::Parse {
                message: alloc::format!("invalid coefficient {coeff_str:?}"),
            })?;
            if coeffs.len() <= degree {
                coeffs.resize(degree + 1, BigRational::zero());
            }
            coeffs[degree] += c;
        }
        Ok(Poly::new(coeffs))
    }
}

fn parse_degree(k: &str) -> Result<usize, GfError> {
    k.trim()
        .parse()
        .map_err(|_| GfError::Parse { message: alloc::format!("invalid degree {k:?}") })
}
