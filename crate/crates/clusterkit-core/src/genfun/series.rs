//! Truncated formal power series over exact rationals.
//!
//! A series of order `T` stores the coefficients of `x^0 ..= x^T`.
//! Arithmetic never silently changes the order: binary operations carry
//! the minimum of the operand orders, and the shift-then-divide helper
//! (the only operation that shrinks the order) documents the drop.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::Poly;
use super::GfError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

impl Series {
    /// A series from its coefficients; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least its constant term");
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// A polynomial truncated (or zero-padded) to the given order.
    pub fn from_poly(p: &Poly, order: usize) -> Self {
        Series { coeffs: (0..=order).map(|k| p.coeff(k)).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^n`; panics beyond the truncation order.
    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    pub fn constant_term(&self) -> &BigRational {
        &self.coeffs[0]
    }

    pub fn truncated(&self, order: usize) -> Series {
        assert!(order <= self.order());
        Series { coeffs: self.coeffs[..=order].to_vec() }
    }

    /// Multiplies by `x^k` within the same truncation order, discarding
    /// the top `k` coefficients.
    pub fn mul_x(&self, k: usize) -> Series {
        let n = self.coeffs.len();
        let mut coeffs = vec![BigRational::zero(); n];
        for i in k..n {
            coeffs[i] = self.coeffs[i - k].clone();
        }
        Series { coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Series {
        Series { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    ///
    /// Computed by the triangular recurrence `b_n = -(1/a_0) * sum_{i>=1}
    /// a_i b_{n-i}`.
    pub fn reciprocal(&self) -> Result<Series, GfError> {
        if self.coeffs[0].is_zero() {
            return Err(GfError::ZeroConstantTerm);
        }
        let inv0 = self.coeffs[0].recip();
        let n = self.coeffs.len();
        let mut out = vec![BigRational::zero(); n];
        out[0] = inv0.clone();
        for k in 1..n {
            let mut acc = BigRational::zero();
            for i in 1..=k {
                acc += &self.coeffs[i] * &out[k - i];
            }
            out[k] = -(acc * &inv0);
        }
        Ok(Series { coeffs: out })
    }

    /// Division; the divisor's constant term must be nonzero.
    pub fn div(&self, den: &Series) -> Result<Series, GfError> {
        let order = self.order().min(den.order());
        Ok(&self.truncated(order) * &den.truncated(order).reciprocal()?)
    }

    /// Shift-then-divide: divides by a series with valuation `v > 0`
    /// after checking that the numerator's first `v` coefficients vanish
    /// exactly. The result's order drops by `v`.
    pub fn div_with_valuation(&self, den: &Series) -> Result<Series, GfError> {
        let v = den
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(GfError::DivisionByZero)?;
        if self.coeffs.iter().take(v).any(|c| !c.is_zero()) {
            return Err(GfError::NonVanishingLowOrder { valuation: v });
        }
        let order = self.order().min(den.order());
        if order < v {
            return Err(GfError::InsufficientOrder { needed: v });
        }
        let num = Series { coeffs: self.coeffs[v..=order].to_vec() };
        let den = Series { coeffs: den.coeffs[v..=order].to_vec() };
        num.div(&den)
    }

    /// Square root with constant term one: the unique series `c` with
    /// `c(0) = 1` and `c^2 = self` to the truncation order.
    pub fn sqrt(&self) -> Result<Series, GfError> {
        if !self.coeffs[0].is_one() {
            return Err(GfError::NonUnitConstantTerm);
        }
        let n = self.coeffs.len();
        let mut out = vec![BigRational::zero(); n];
        out[0] = BigRational::one();
        let two = BigRational::from_integer(2.into());
        for k in 1..n {
            let mut acc = self.coeffs[k].clone();
            for i in 1..k {
                acc -= &out[i] * &out[k - i];
            }
            out[k] = acc / &two;
        }
        Ok(Series { coeffs: out })
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        Series {
            coeffs: (0..=order).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect(),
        }
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        Series {
            coeffs: (0..=order).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect(),
        }
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        Series { coeffs }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for Series {
    /// Comma-separated exact coefficients: `a0, a1, a2, ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Series {
    type Err = GfError;

    fn from_str(s: &str) -> Result<Self, GfError> {
        let coeffs: Result<Vec<BigRational>, _> = s
            .split(',')
            .map(|t| {
                t.trim().parse::<BigRational>().map_err(|_| GfError::Parse {
                    message: alloc::format!("invalid coefficient {:?}", t.trim()),
                })
            })
            .collect();
        let coeffs = coeffs?;
        if coeffs.is_empty() {
            return Err(GfError::Parse { message: "empty series".to_string() });
        }
        Ok(Series { coeffs })
    }
}

/// The Catalan series, built from its convolution recurrence. Used as an
/// independent route to the `[321]`-avoiding generating function.
pub fn catalan_series(order: usize) -> Series {
    let mut c = vec![BigRational::zero(); order + 1];
    c[0] = BigRational::one();
    for n in 0..order {
        let mut acc = BigRational::zero();
        for i in 0..=n {
            acc += &c[i] * &c[n - i];
        }
        c[n + 1] = acc;
    }
    Series::new(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect()
    }

    #[test]
    fn sqrt_of_one_minus_4x_matches_binomial_expansion() {
        let order = 12;
        let s = Series::from_poly(&Poly::from_integers(&[1, -4]), order).sqrt().unwrap();
        // Generalized binomial oracle: (1-4x)^(1/2) = sum binom(1/2, k) (-4)^k x^k.
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let mut expect = Vec::new();
        let mut binom = BigRational::one();
        for k in 0..=order {
            let term = &binom * BigRational::from_integer(BigInt::from(-4).pow(k as u32));
            expect.push(term);
            let kk = BigRational::from_integer(BigInt::from(k as i64));
            binom = binom * (&half - &kk) / (&kk + BigRational::one());
        }
        assert_eq!(s.coeffs(), &expect[..]);
        assert_eq!(&s.coeffs()[..5], &ints(&[1, -2, -2, -4, -10])[..]);
    }

    #[test]
    fn catalan_from_algebraic_form() {
        // (1 - 2x - sqrt(1-4x)) / (2x^2), computed with the shift-divide
        // helper because the denominator vanishes to order 2.
        let order = 9;
        let s = Series::from_poly(&Poly::from_integers(&[1, -4]), order + 2).sqrt().unwrap();
        let num = &Series::from_poly(&Poly::from_integers(&[1, -2]), order + 2) - &s;
        let den = Series::from_poly(&Poly::from_integers(&[0, 0, 2]), order + 2);
        let f = num.div_with_valuation(&den).unwrap();
        assert_eq!(f.order(), order);
        assert_eq!(f.coeffs(), &ints(&[1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796])[..]);
        assert_eq!(f, catalan_series(order));
    }

    #[test]
    fn reciprocal_of_one_is_one() {
        assert_eq!(Series::one(8).reciprocal().unwrap(), Series::one(8));
    }

    #[test]
    fn division_guards() {
        let x = Series::from_poly(&Poly::x(), 5);
        assert_eq!(Series::one(5).div(&x), Err(GfError::ZeroConstantTerm));
        assert_eq!(
            Series::one(5).div_with_valuation(&x),
            Err(GfError::NonVanishingLowOrder { valuation: 1 })
        );
        assert_eq!(x.div_with_valuation(&Series::zero(5)), Err(GfError::DivisionByZero));
    }

    fn arb_series(order: usize) -> impl Strategy<Value = Series> {
        prop::collection::vec((-9i64..=9, 1i64..=4), order + 1).prop_map(|cs| {
            Series::new(
                cs.into_iter()
                    .map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
                    .collect(),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn sqrt_squares_back(s in arb_series(32)) {
            // Force constant term 1.
            let mut coeffs = s.coeffs().to_vec();
            coeffs[0] = BigRational::one();
            let s = Series::new(coeffs);
            let r = s.sqrt().unwrap();
            prop_assert_eq!(&(&r * &r), &s);
        }

        #[test]
        fn reciprocal_matches_newton_iteration(s in arb_series(24)) {
            let mut coeffs = s.coeffs().to_vec();
            if coeffs[0].is_zero() {
                coeffs[0] = BigRational::one();
            }
            let s = Series::new(coeffs);
            let direct = s.reciprocal().unwrap();
            // Newton oracle: r <- r(2 - s r), doubling precision each step.
            let order = s.order();
            let mut r = Series::new(alloc::vec![s.constant_term().recip()]);
            let mut prec = 0usize;
            while prec < order {
                prec = (2 * prec + 1).min(order);
                let rr = Series::new(
                    (0..=prec).map(|k| if k <= r.order() { r.coeff(k).clone() } else { BigRational::zero() }).collect(),
                );
                let two = Series::one(prec).scale(&BigRational::from_integer(2.into()));
                r = &rr * &(&two - &(&s.truncated(prec) * &rr));
            }
            prop_assert_eq!(&direct, &r);
        }

        #[test]
        fn mul_respects_min_order(a in arb_series(10), b in arb_series(14)) {
            prop_assert_eq!((&a * &b).order(), 10);
            prop_assert_eq!((&a + &b).order(), 10);
        }
    }
}
