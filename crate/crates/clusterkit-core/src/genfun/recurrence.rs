//! Linear constant-coefficient recurrences read off rational generating
//! functions.

use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::ratfun::RationalGF;
use super::series::Series;

/// A recurrence `a_n = c_1 a_{n-1} + ... + c_d a_{n-d}`, valid from a
/// known index onward, together with enough initial terms to regenerate
/// the sequence.
///
/// Indices follow the rank convention of the generating functions
/// (coefficient `n` counts `S_{n+1}`); [`Recurrence::valid_from_size`]
/// reports the same bound in size indexing, a shift of one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recurrence {
    coeffs: Vec<BigRational>,
    valid_from: usize,
    initial: Vec<BigRational>,
}

/// Extracts the recurrence of the series of `r`: with denominator
/// `1 + q_1 x + ... + q_d x^d` (canonical form), the coefficients satisfy
/// `a_n = -q_1 a_{n-1} - ... - q_d a_{n-d}` for every `n` beyond the
/// numerator degree.
pub fn recurrence_from_ratfun(r: &RationalGF) -> Recurrence {
    let d = r.denominator().degree().unwrap_or(0);
    let p_deg = match r.numerator().degree() {
        None => 0,
        Some(p) => p + 1,
    };
    let valid_from = p_deg.max(d);
    let coeffs: Vec<BigRational> = (1..=d).map(|i| -r.denominator().coeff(i)).collect();
    let initial = r.series(valid_from.saturating_sub(1)).coeffs().to_vec();
    let initial = if valid_from == 0 { Vec::new() } else { initial };
    Recurrence { coeffs, valid_from, initial }
}

impl Recurrence {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// The coefficients `c_1, ..., c_d`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Smallest rank index `n` from which `a_n = sum c_i a_{n-i}` holds.
    pub fn valid_from_rank(&self) -> usize {
        self.valid_from
    }

    /// The same bound in size indexing (counts in `S_m` for `m >= this`).
    pub fn valid_from_size(&self) -> usize {
        self.valid_from + 1
    }

    pub fn initial_terms(&self) -> &[BigRational] {
        &self.initial
    }

    /// Regenerates `a_0 ..= a_n` from the initial terms.
    pub fn terms_to(&self, n: usize) -> Vec<BigRational> {
        let mut out = self.initial.clone();
        out.truncate(n + 1);
        while out.len() <= n {
            let k = out.len();
            let mut acc = BigRational::zero();
            for (i, c) in self.coeffs.iter().enumerate() {
                if i + 1 <= k {
                    acc += c * &out[k - i - 1];
                }
            }
            out.push(acc);
        }
        out
    }

    /// True when the recurrence reproduces the series exactly from
    /// `valid_from` onward (and the initial terms match before it).
    pub fn reproduces(&self, s: &Series) -> bool {
        let regen = self.terms_to(s.order());
        regen.iter().zip(s.coeffs()).all(|(a, b)| a == b)
    }
}

impl fmt::Display for Recurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a(n) = ")?;
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*a(n-{})", i + 1)?;
        }
        write!(
            f,
            "  for n >= {} (rank indexing; n >= {} in size indexing)",
            self.valid_from,
            self.valid_from_size()
        )
    }
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
    fn geometric_series_recurrence() {
        let r = RationalGF::from_integers(&[1], &[1, -1]).unwrap();
        let rec = recurrence_from_ratfun(&r);
        assert_eq!(rec.coeffs(), &ints(&[1])[..]);
        assert_eq!(rec.valid_from_rank(), 1);
        assert!(rec.reproduces(&r.series(20)));
    }

    #[test]
    fn fibonacci_like_example() {
        let r = RationalGF::from_integers(&[1, -1], &[1, -3, 1]).unwrap();
        let rec = recurrence_from_ratfun(&r);
        assert_eq!(rec.coeffs(), &ints(&[3, -1])[..]);
        assert!(rec.reproduces(&r.series(30)));
    }

    fn arb_gf() -> impl Strategy<Value = RationalGF> {
        (
            prop::collection::vec(-5i64..=5, 1..6),
            prop::collection::vec(-5i64..=5, 1..6),
        )
            .prop_filter_map("nonzero constant", |(n, mut d)| {
                if d[0] == 0 {
                    d[0] = 1;
                }
                RationalGF::from_integers(&n, &d).ok()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn recurrence_reproduces_series(r in arb_gf()) {
            let rec = recurrence_from_ratfun(&r);
            prop_assert!(rec.reproduces(&r.series(40)));
        }
    }
}
