//! The named generating functions of the enumerated classes.
//!
//! Ten table rows: the fully commutative, freely braided, and maximally
//! clustered classes with their `L`/`M` pieces, for the unrestricted case
//! (algebraic, involving `sqrt(1-4x)`) and the hexagon-avoiding case
//! (rational), plus the diamond-avoiding class.
//!
//! Every constructor builds the closed form; the series-level transforms
//! and the brute-force enumerator provide independent routes that the
//! test suites compare against.

use alloc::vec::Vec;

use super::poly::Poly;
use super::ratfun::RationalGF;
use super::recurrence::{recurrence_from_ratfun, Recurrence};
use super::series::Series;

/// One of the built-in enumerated classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedClass {
    /// `[321]`-avoiding (fully commutative): the Catalan numbers.
    Fc,
    /// The `L` piece of the unrestricted fully commutative class.
    LEmpty,
    /// The `M` piece of the unrestricted fully commutative class.
    MEmpty,
    /// Freely braided.
    Fb,
    /// Maximally clustered.
    Mc,
    /// `[321]`-avoiding and hexagon-avoiding.
    FcHexagon,
    /// `L` piece of the hexagon-avoiding fully commutative class.
    LHexagon,
    /// `M` piece of the hexagon-avoiding fully commutative class.
    MHexagon,
    /// Freely braided hexagon-avoiding.
    FbHexagon,
    /// Maximally clustered hexagon-avoiding.
    McHexagon,
    /// `[321]`- and `[3412]`-avoiding (diamond-avoiding heaps).
    DiamondAvoiding,
}

impl NamedClass {
    pub fn all() -> [NamedClass; 11] {
        use NamedClass::*;
        [Fc, LEmpty, MEmpty, Fb, Mc, FcHexagon, LHexagon, MHexagon, FbHexagon, McHexagon,
         DiamondAvoiding]
    }

    pub fn name(&self) -> &'static str {
        match self {
            NamedClass::Fc => "fc",
            NamedClass::LEmpty => "l",
            NamedClass::MEmpty => "m",
            NamedClass::Fb => "fb",
            NamedClass::Mc => "mc",
            NamedClass::FcHexagon => "fc-hexagon",
            NamedClass::LHexagon => "l-hexagon",
            NamedClass::MHexagon => "m-hexagon",
            NamedClass::FbHexagon => "fb-hexagon",
            NamedClass::McHexagon => "mc-hexagon",
            NamedClass::DiamondAvoiding => "diamond-avoiding",
        }
    }

    pub fn from_name(name: &str) -> Option<NamedClass> {
        NamedClass::all().into_iter().find(|c| c.name() == name)
    }

    pub fn description(&self) -> &'static str {
        match self {
            NamedClass::Fc => "[321]-avoiding (fully commutative)",
            NamedClass::LEmpty => "fully commutative with the rightmost generator present",
            NamedClass::MEmpty => "fully commutative with both extremal generators present",
            NamedClass::Fb => "freely braided",
            NamedClass::Mc => "maximally clustered",
            NamedClass::FcHexagon => "[321]-avoiding hexagon-avoiding",
            NamedClass::LHexagon => "hexagon-avoiding piece with the rightmost generator",
            NamedClass::MHexagon => "hexagon-avoiding piece with both extremal generators",
            NamedClass::FbHexagon => "freely braided hexagon-avoiding",
            NamedClass::McHexagon => "maximally clustered hexagon-avoiding",
            NamedClass::DiamondAvoiding => "[321]- and [3412]-avoiding",
        }
    }

    /// The exact rational form, for the rational rows.
    pub fn gf(&self) -> Option<RationalGF> {
        let hex_den: &[i64] = &[-1, 6, -11, 9, -4, -4, 1];
        let build = |num: &[i64], den: &[i64]| {
            Some(RationalGF::from_integers(num, den).expect("catalog generating function"))
        };
        match self {
            NamedClass::FcHexagon => build(&[-1, 4, -4, 3, 1, -1], hex_den),
            NamedClass::LHexagon => build(&[0, -1, 3, -2, 2, 2], hex_den),
            NamedClass::MHexagon => build(&[0, 0, -2, 6, -5, 4, 2, -1], hex_den),
            NamedClass::FbHexagon => {
                build(&[-1, 4, -3, 1, 2, -2, -1], &[-1, 6, -9, 3, 1, -8, -1, 1])
            }
            NamedClass::McHexagon => {
                build(&[1, -5, 7, -5, 1, 3], &[1, -7, 15, -14, 8, 4, -3])
            }
            NamedClass::DiamondAvoiding => build(&[1, -1], &[1, -3, 1]),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.gf().is_some()
    }

    /// The power series to a truncation order, from the closed form.
    ///
    /// The algebraic rows all have shape `(a + b*sqrt(1-4x)) / c` with
    /// polynomial `a`, `b`, `c`; the division goes through the
    /// shift-then-divide helper since `c` may vanish at the origin.
    pub fn series(&self, order: usize) -> Series {
        if let Some(gf) = self.gf() {
            return gf.series(order);
        }
        // Compute with enough guard coefficients for the valuation shift.
        let pad = 2;
        let t = order + pad;
        let sqrt = Series::from_poly(&Poly::from_integers(&[1, -4]), t)
            .sqrt()
            .expect("unit constant term");
        let combo = |a: &[i64], b: &[i64], c: &[i64]| -> Series {
            let num = &Series::from_poly(&Poly::from_integers(a), t)
                + &(&Series::from_poly(&Poly::from_integers(b), t) * &sqrt);
            let den = Series::from_poly(&Poly::from_integers(c), t);
            let s = num.div_with_valuation(&den).expect("catalog series");
            s.truncated(order)
        };
        match self {
            // (1 - 2x - sqrt(1-4x)) / (2x^2)
            NamedClass::Fc => combo(&[1, -2], &[-1], &[0, 0, 2]),
            // (1 - 3x - (1-x) sqrt(1-4x)) / (2x^2)
            NamedClass::LEmpty => combo(&[1, -3], &[-1, 1], &[0, 0, 2]),
            // (1 - 4x + 3x^2 - 2x^3 - (1-x)^2 sqrt(1-4x)) / (2x^2)
            NamedClass::MEmpty => combo(&[1, -4, 3, -2], &[-1, 2, -1], &[0, 0, 2]),
            // (2x - 2x^2 - 2x sqrt(1-4x)) / (-1 + 4x - x^2 + 2x^3 + (1-x)^2 sqrt(1-4x))
            NamedClass::Fb => {
                let num = &Series::from_poly(&Poly::from_integers(&[0, 2, -2]), t)
                    - &(&Series::from_poly(&Poly::from_integers(&[0, 2]), t) * &sqrt);
                let den = &Series::from_poly(&Poly::from_integers(&[-1, 4, -1, 2]), t)
                    + &(&Series::from_poly(&Poly::from_integers(&[1, -2, 1]), t) * &sqrt);
                num.div_with_valuation(&den).expect("catalog series").truncated(order)
            }
            // 2x / (-1 + 4x - 2x^2 + sqrt(1-4x))
            NamedClass::Mc => {
                let num = Series::from_poly(&Poly::from_integers(&[0, 2]), t);
                let den =
                    &Series::from_poly(&Poly::from_integers(&[-1, 4, -2]), t) + &sqrt;
                num.div_with_valuation(&den).expect("catalog series").truncated(order)
            }
            _ => unreachable!("rational rows handled above"),
        }
    }

    /// The recurrence.
    pub fn recurrence(&self) -> Option<Recurrence> {
        self.gf().map(|g| recurrence_from_ratfun(&g))
    }
}

/// All class names, for diagnostics.
pub fn class_names() -> Vec<&'static str> {
    NamedClass::all().iter().map(|c| c.name()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect()
    }

    #[test]
    fn printed_initial_series_to_x7() {
        let expected: [(&str, [i64; 8]); 10] = [
            ("fc", [1, 2, 5, 14, 42, 132, 429, 1430]),
            ("l", [0, 1, 3, 9, 28, 90, 297, 1001]),
            ("m", [0, 0, 2, 6, 19, 62, 207, 704]),
            ("fb", [1, 2, 6, 20, 71, 260, 971, 3674]),
            ("mc", [1, 2, 6, 21, 78, 298, 1157, 4539]),
            ("fc-hexagon", [1, 2, 5, 14, 42, 132, 429, 1426]),
            ("l-hexagon", [0, 1, 3, 9, 28, 90, 297, 997]),
            ("m-hexagon", [0, 0, 2, 6, 19, 62, 207, 700]),
            ("fb-hexagon", [1, 2, 6, 20, 71, 260, 971, 3670]),
            ("mc-hexagon", [1, 2, 6, 21, 78, 298, 1157, 4535]),
        ];
        for (name, coeffs) in expected {
            let class = NamedClass::from_name(name).unwrap();
            let s = class.series(7);
            assert_eq!(s.coeffs(), &ints(&coeffs)[..], "initial series of {name}");
        }
    }

    #[test]
    fn mc_hexagon_series_extends_to_known_counts() {
        let s = NamedClass::McHexagon.gf().unwrap().series(8);
        assert_eq!(s.coeff(8), &BigRational::from_integer(17872.into()));
    }

    #[test]
    fn hexagon_recurrence_coefficients() {
        let rec = NamedClass::FcHexagon.recurrence().unwrap();
        assert_eq!(rec.coeffs(), &ints(&[6, -11, 9, -4, -4, 1])[..]);
        let rec = NamedClass::FbHexagon.recurrence().unwrap();
        assert_eq!(rec.coeffs(), &ints(&[6, -9, 3, 1, -8, -1, 1])[..]);
        let rec = NamedClass::McHexagon.recurrence().unwrap();
        assert_eq!(rec.coeffs(), &ints(&[7, -15, 14, -8, -4, 3])[..]);
    }

    #[test]
    fn name_lookup() {
        for c in NamedClass::all() {
            assert_eq!(NamedClass::from_name(c.name()), Some(c));
        }
        assert_eq!(NamedClass::from_name("nope"), None);
    }
}
