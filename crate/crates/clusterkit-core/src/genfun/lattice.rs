//! Lattice paths avoiding consecutive step factors, by transfer matrix.
//!
//! Paths take up/down steps; a path on `n` nodes has `n-1` steps. The
//! generating function counts paths by node count, so the coefficient of
//! `x^n` for `n >= 1` is the number of admissible step words of length
//! `n-1`, and it is rational: walks in the factor-avoidance automaton
//! (states are proper prefixes of the forbidden words, with failure
//! transitions) are counted by `x * e_start (I - xM)^{-1} 1`.

use alloc::vec;
use alloc::vec::Vec;

use super::poly::Poly;
use super::ratfun::RationalGF;
use super::GfError;

/// An up or a down step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    Up,
    Down,
}

fn parse_word(word: &str) -> Result<Vec<Step>, GfError> {
    if word.is_empty() {
        return Err(GfError::EmptyStepWord);
    }
    word.chars()
        .map(|ch| match ch.to_ascii_uppercase() {
            'U' => Ok(Step::Up),
            'D' => Ok(Step::Down),
            _ => Err(GfError::InvalidStepChar { ch }),
        })
        .collect()
}

/// The generating function, by node count, of up/down lattice paths that
/// contain none of the forbidden step words as a consecutive factor.
pub fn lattice_path_gf_avoiding(forbidden: &[&str]) -> Result<RationalGF, GfError> {
    let words: Vec<Vec<Step>> = forbidden.iter().map(|w| parse_word(w)).collect::<Result<_, _>>()?;

    // Aho-Corasick automaton over {U, D}: nodes are word prefixes.
    struct Node {
        children: [Option<usize>; 2],
        fail: usize,
        dead: bool,
    }
    let mut trie = vec![Node { children: [None, None], fail: 0, dead: false }];
    for w in &words {
        let mut s = 0usize;
        for &step in w {
            let c = step as usize;
            s = match trie[s].children[c] {
                Some(t) => t,
                None => {
                    trie.push(Node { children: [None, None], fail: 0, dead: false });
                    let t = trie.len() - 1;
                    trie[s].children[c] = Some(t);
                    t
                }
            };
        }
        trie[s].dead = true;
    }
    // Breadth-first failure links; a state is dead if any suffix is a
    // full forbidden word.
    let mut queue: alloc::collections::VecDeque<usize> = Default::default();
    for c in 0..2 {
        if let Some(t) = trie[0].children[c] {
            queue.push_back(t);
        }
    }
    while let Some(s) = queue.pop_front() {
        for c in 0..2 {
            if let Some(t) = trie[s].children[c] {
                let mut f = trie[s].fail;
                let fail = loop {
                    if let Some(ft) = trie[f].children[c] {
                        if ft != t {
                            break ft;
                        }
                    }
                    if f == 0 {
                        break 0;
                    }
                    f = trie[f].fail;
                };
                trie[t].fail = fail;
                if trie[fail].dead {
                    trie[t].dead = true;
                }
                queue.push_back(t);
            }
        }
    }
    let transition = |mut s: usize, c: usize| -> usize {
        loop {
            if let Some(t) = trie[s].children[c] {
                return t;
            }
            if s == 0 {
                return 0;
            }
            s = trie[s].fail;
        }
    };

    // Transfer matrix over live states.
    let live: Vec<usize> = (0..trie.len()).filter(|&s| !trie[s].dead).collect();
    let index_of = |s: usize| live.iter().position(|&t| t == s);
    let n = live.len();
    if n == 0 || index_of(0).is_none() {
        // No admissible paths at all beyond... cannot happen: the root is
        // only dead for an empty forbidden word, which is rejected above.
        return RationalGF::new(Poly::zero(), Poly::one());
    }
    let mut m = vec![vec![0i64; n]; n];
    for (i, &s) in live.iter().enumerate() {
        for c in 0..2 {
            let t = transition(s, c);
            if let Some(j) = index_of(t) {
                m[i][j] += 1;
            }
        }
    }

    // Solve (I - xM) y = 1 over the rational function field, then the
    // answer is x * y[start].
    let mut a: Vec<Vec<Fraction>> = (0..n)
        .map(|i| {
            (0..=n)
                .map(|j| {
                    if j == n {
                        Fraction::one()
                    } else if i == j {
                        Fraction::from_poly(Poly::from_integers(&[1, -m[i][j]]))
                    } else {
                        Fraction::from_poly(Poly::from_integers(&[0, -m[i][j]]))
                    }
                })
                .collect()
        })
        .collect();
    gaussian_solve(&mut a);
    let start = index_of(0).expect("root is live");
    let y = a[start][n].clone();
    RationalGF::new(y.num.shift_up(1), y.den)
}

/// Rational-function fractions without the power-series constraint,
/// private to the solver (pivots may have zero constant term).
#[derive(Clone)]
struct Fraction {
    num: Poly,
    den: Poly,
}

impl Fraction {
    fn from_poly(p: Poly) -> Self {
        Fraction { num: p, den: Poly::one() }
    }

    fn one() -> Self {
        Fraction::from_poly(Poly::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduce(self) -> Self {
        if self.num.is_zero() {
            return Fraction { num: Poly::zero(), den: Poly::one() };
        }
        let g = Poly::gcd(&self.num, &self.den);
        Fraction {
            num: self.num.div_rem(&g).expect("gcd nonzero").0,
            den: self.den.div_rem(&g).expect("gcd nonzero").0,
        }
    }

    fn sub(&self, other: &Fraction) -> Fraction {
        Fraction {
            num: &(&self.num * &other.den) - &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
        .reduce()
    }

    fn mul(&self, other: &Fraction) -> Fraction {
        Fraction { num: &self.num * &other.num, den: &self.den * &other.den }.reduce()
    }

    fn div(&self, other: &Fraction) -> Fraction {
        Fraction { num: &self.num * &other.den, den: &self.den * &other.num }.reduce()
    }
}

/// In-place Gauss-Jordan over the fraction field; the matrix `I - xM` is
/// invertible since its determinant has constant term one.
fn gaussian_solve(a: &mut [Vec<Fraction>]) {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).expect("matrix is invertible");
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for j in col..=n {
            a[col][j] = a[col][j].div(&p);
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in col..=n {
                let t = factor.mul(&a[col][j]);
                a[r][j] = a[r][j].sub(&t);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::ratfun::RationalGF;
    use num_rational::BigRational;
    use num_traits::ToPrimitive;

    #[test]
    fn avoiding_up_down_counts_n_paths() {
        let gf = lattice_path_gf_avoiding(&["UD"]).unwrap();
        assert_eq!(gf, RationalGF::from_integers(&[0, 1], &[1, -2, 1]).unwrap());
        let s = gf.series(6);
        let vals: alloc::vec::Vec<i64> =
            s.coeffs().iter().map(|c| c.to_integer().to_i64().unwrap()).collect();
        assert_eq!(vals, alloc::vec![0, 1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn monotone_paths() {
        let gf = lattice_path_gf_avoiding(&["UD", "DU"]).unwrap();
        // 2x/(1-x) - x = (x + x^2)/(1 - x)
        assert_eq!(gf, RationalGF::from_integers(&[0, 1, 1], &[1, -1]).unwrap());
    }

    #[test]
    fn long_forbidden_word_leaves_short_paths_free() {
        let gf = lattice_path_gf_avoiding(&["UUUUUU"]).unwrap();
        let s = gf.series(6);
        for n in 1..=6usize {
            assert_eq!(
                s.coeff(n),
                &BigRational::from_integer((1i64 << (n - 1)).into()),
                "all 2^(n-1) paths on {n} nodes are admissible"
            );
        }
    }

    #[test]
    fn matches_direct_path_enumeration() {
        // Brute-force oracle: scan all step words for factor occurrences.
        let cases: [&[&str]; 4] = [&["UDU"], &["UU"], &["UDD", "DU"], &["UDUD", "DD"]];
        for forbidden in cases {
            let gf = lattice_path_gf_avoiding(forbidden).unwrap();
            let s = gf.series(12);
            for n in 1..=12usize {
                let steps = n - 1;
                let mut count = 0u64;
                for bits in 0u32..(1 << steps) {
                    let word: alloc::vec::Vec<char> =
                        (0..steps).map(|i| if bits >> i & 1 == 1 { 'U' } else { 'D' }).collect();
                    let w: alloc::string::String = word.iter().collect();
                    if forbidden.iter().all(|f| !w.contains(f)) {
                        count += 1;
                    }
                }
                assert_eq!(
                    s.coeff(n),
                    &BigRational::from_integer(count.into()),
                    "mismatch at {n} nodes avoiding {forbidden:?}"
                );
            }
        }
    }

    #[test]
    fn rejects_bad_words() {
        assert_eq!(lattice_path_gf_avoiding(&[""]), Err(GfError::EmptyStepWord));
        assert_eq!(lattice_path_gf_avoiding(&["UX"]), Err(GfError::InvalidStepChar { ch: 'X' }));
    }
}
