//! Rational generating functions in reduced canonical form.
//!
//! A [`RationalGF`] is a ratio of polynomials with nonzero denominator
//! constant term, so it expands as a power series. Values are kept
//! canonical: numerator and denominator are coprime and the denominator's
//! constant term is normalized to one, making equality structural.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::Poly;
use super::series::Series;
use super::GfError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    num: Poly,
    den: Poly,
}

impl RationalGF {
    /// Builds `num/den`, reducing to lowest terms and normalizing the
    /// denominator constant term to one. Fails if `den` is zero or if,
    /// after reduction, its constant term vanishes (the ratio would not
    /// be a power series).
    pub fn new(num: Poly, den: Poly) -> Result<Self, GfError> {
        if den.is_zero() {
            return Err(GfError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalGF { num: Poly::zero(), den: Poly::one() });
        }
        let g = Poly::gcd(&num, &den);
        let num = num.div_rem(&g).expect("gcd nonzero").0;
        let den = den.div_rem(&g).expect("gcd nonzero").0;
        let c = den.eval_zero();
        if c.is_zero() {
            return Err(GfError::ZeroConstantTerm);
        }
        let inv = c.recip();
        Ok(RationalGF { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalGF { num: p, den: Poly::one() }
    }

    pub fn from_integers(num: &[i64], den: &[i64]) -> Result<Self, GfError> {
        RationalGF::new(Poly::from_integers(num), Poly::from_integers(den))
    }

    pub fn zero() -> Self {
        RationalGF::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RationalGF::from_poly(Poly::one())
    }

    pub fn x() -> Self {
        RationalGF::from_poly(Poly::x())
    }

    pub fn constant(c: BigRational) -> Self {
        RationalGF::from_poly(Poly::constant(c))
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The constant term of the power-series expansion.
    pub fn eval_zero(&self) -> BigRational {
        self.num.eval_zero()
    }

    pub fn div(&self, other: &RationalGF) -> Result<RationalGF, GfError> {
        if other.is_zero() {
            return Err(GfError::DivisionByZero);
        }
        RationalGF::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn recip(&self) -> Result<RationalGF, GfError> {
        RationalGF::one().div(self)
    }

    /// Power-series expansion to the given truncation order, by the long
    /// division recurrence `q_0 a_n = p_n - sum_{i>=1} q_i a_{n-i}`.
    pub fn series(&self, order: usize) -> Series {
        let q0 = self.den.eval_zero();
        debug_assert!(q0.is_one(), "canonical form has unit denominator constant");
        let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
        let d = self.den.degree().unwrap_or(0);
        for n in 0..=order {
            let mut acc = self.num.coeff(n);
            for i in 1..=d.min(n) {
                acc -= self.den.coeff(i) * &out[n - i];
            }
            out.push(acc / &q0);
        }
        Series::new(out)
    }
}

impl Add for &RationalGF {
    type Output = RationalGF;
    fn add(self, other: &RationalGF) -> RationalGF {
        RationalGF::new(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
        .expect("denominator constants multiply to a unit")
    }
}

impl Sub for &RationalGF {
    type Output = RationalGF;
    fn sub(self, other: &RationalGF) -> RationalGF {
        self + &-other
    }
}

impl Mul for &RationalGF {
    type Output = RationalGF;
    fn mul(self, other: &RationalGF) -> RationalGF {
        RationalGF::new(&self.num * &other.num, &self.den * &other.den)
            .expect("denominator constants multiply to a unit")
    }
}

impl Neg for &RationalGF {
    type Output = RationalGF;
    fn neg(self) -> RationalGF {
        RationalGF { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RationalGF {
    /// `(<poly>)/(<poly>)` with both polynomials in the ascending term
    /// format of [`Poly`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl FromStr for RationalGF {
    type Err = GfError;

    fn from_str(s: &str) -> Result<Self, GfError> {
        let s = s.trim();
        let (num, den) = match s.split_once(")/(") {
            Some((a, b)) => {
                let a = a.strip_prefix('(').ok_or_else(|| GfError::Parse {
                    message: "expected leading '('".to_string(),
                })?;
                let b = b.strip_suffix(')').ok_or_else(|| GfError::Parse {
                    message: "expected trailing ')'".to_string(),
                })?;
                (a.parse::<Poly>()?, b.parse::<Poly>()?)
            }
            // A bare polynomial is accepted as a rational with denominator 1.
            None => (s.trim_matches(['(', ')']).parse::<Poly>()?, Poly::one()),
        };
        RationalGF::new(num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(num: &[i64], den: &[i64]) -> RationalGF {
        RationalGF::from_integers(num, den).unwrap()
    }

    #[test]
    fn field_arithmetic_examples() {
        // 1/(1-x) - x/(1-x) = 1
        let a = gf(&[1], &[1, -1]);
        let b = gf(&[0, 1], &[1, -1]);
        assert_eq!(&a - &b, RationalGF::one());
        // (1-x)/(1-3x+x^2) * (1-3x+x^2) = 1-x, with cancellation.
        let c = gf(&[1, -1], &[1, -3, 1]);
        let d = RationalGF::from_poly(Poly::from_integers(&[1, -3, 1]));
        assert_eq!(&c * &d, RationalGF::from_poly(Poly::from_integers(&[1, -1])));
    }

    #[test]
    fn canonical_form_normalizes_signs() {
        // Both print the same canonical value regardless of input sign.
        let a = gf(&[-1, 4, -4, 3, 1, -1], &[-1, 6, -11, 9, -4, -4, 1]);
        let b = gf(&[1, -4, 4, -3, -1, 1], &[1, -6, 11, -9, 4, 4, -1]);
        assert_eq!(a, b);
        assert!(a.denominator().eval_zero().is_one());
    }

    #[test]
    fn division_guards() {
        let x = RationalGF::x();
        assert_eq!(RationalGF::one().div(&RationalGF::zero()), Err(GfError::DivisionByZero));
        // 1/x is not a power series.
        assert_eq!(RationalGF::one().div(&x), Err(GfError::ZeroConstantTerm));
        // x/x reduces to 1 before the constant-term check.
        assert_eq!(x.div(&x).unwrap(), RationalGF::one());
    }

    #[test]
    fn series_expansion_examples() {
        let g = gf(&[1, -1], &[1, -3, 1]);
        let s = g.series(6);
        let expect: Vec<BigRational> =
            [1, 2, 5, 13, 34, 89, 233].iter().map(|&c| BigRational::from_integer(c.into())).collect();
        assert_eq!(s.coeffs(), &expect[..]);
        let ones = gf(&[1], &[1, -1]).series(5);
        assert!(ones.coeffs().iter().all(|c| c.is_one()));
    }

    #[test]
    fn display_parse_roundtrip() {
        let g = gf(&[1, -5, 7, -5, 1, 3], &[1, -7, 15, -14, 8, 4, -3]);
        let s = alloc::format!("{g}");
        assert_eq!(s.parse::<RationalGF>().unwrap(), g);
        assert_eq!("1*x^0 + 1*x^1".parse::<RationalGF>().unwrap(), gf(&[1, 1], &[1]));
    }

    fn arb_gf() -> impl Strategy<Value = RationalGF> {
        (
            prop::collection::vec(-6i64..=6, 1..5),
            prop::collection::vec(-6i64..=6, 1..5),
        )
            .prop_filter_map("denominator needs nonzero constant term", |(n, mut d)| {
                if d[0] == 0 {
                    d[0] = 1;
                }
                RationalGF::from_integers(&n, &d).ok()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn add_sub_roundtrip(a in arb_gf(), b in arb_gf()) {
            prop_assert_eq!(&(&(&a + &b) - &b), &a);
        }

        #[test]
        fn series_matches_multiplication(a in arb_gf()) {
            // series(num/den) * den == num, coefficientwise to the order.
            let order = 16;
            let s = a.series(order);
            let den = Series::from_poly(a.denominator(), order);
            let num = Series::from_poly(a.numerator(), order);
            prop_assert_eq!(&(&s * &den), &num);
        }

        #[test]
        fn display_roundtrips(a in arb_gf()) {
            let s = alloc::format!("{a}");
            prop_assert_eq!(s.parse::<RationalGF>().unwrap(), a);
        }
    }
}
