//! The homomorphism onto SL(2, Z) recording the action on the homology of
//! the torus in the ordered base (beta, alpha), lens-space classification,
//! and the trivial-knot words built from continued fractions.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::words::{Letter, TwistGen, TwistWord, Word};

/// 2x2 integer matrix `[[q, s], [p, r]]` of determinant 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Matrix {
    pub q: BigInt,
    pub s: BigInt,
    pub p: BigInt,
    pub r: BigInt,
}

impl Sl2Matrix {
    pub fn identity() -> Self {
        Sl2Matrix {
            q: BigInt::one(),
            s: BigInt::zero(),
            p: BigInt::zero(),
            r: BigInt::one(),
        }
    }

    pub fn det(&self) -> BigInt {
        &self.q * &self.r - &self.s * &self.p
    }

    pub fn mul(&self, other: &Self) -> Self {
        Sl2Matrix {
            q: &self.q * &other.q + &self.s * &other.p,
            s: &self.q * &other.s + &self.s * &other.r,
            p: &self.p * &other.q + &self.r * &other.p,
            r: &self.p * &other.s + &self.r * &other.r,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.q.is_one() && self.s.is_zero() && self.p.is_zero() && self.r.is_one()
    }
}

impl fmt::Display for Sl2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.q, self.s, self.p, self.r)
    }
}

/// Image of one twist-generator power under the homomorphism.
fn generator_power(gen: TwistGen, exp: &BigInt) -> Sl2Matrix {
    match gen {
        // [[1,0],[e,1]]
        TwistGen::Ta => Sl2Matrix {
            q: BigInt::one(),
            s: BigInt::zero(),
            p: exp.clone(),
            r: BigInt::one(),
        },
        // [[1,-e],[0,1]] for both tb and tc
        TwistGen::Tb | TwistGen::Tc => Sl2Matrix {
            q: BigInt::one(),
            s: -exp,
            p: BigInt::zero(),
            r: BigInt::one(),
        },
    }
}

/// The matrix image of a twist word: the product of the generator images in
/// word order (leftmost factor first).
pub fn omega(word: &TwistWord) -> Sl2Matrix {
    let mut acc = Sl2Matrix::identity();
    for l in word.letters() {
        acc = acc.mul(&generator_power(l.gen, &l.exp));
    }
    acc
}

/// True iff the word maps to the identity matrix.
pub fn is_kernel(word: &TwistWord) -> bool {
    omega(word).is_identity()
}

/// A lens space `L(p, q)`; `L(1,0)` is the 3-sphere and `L(0,1)` is
/// `S^1 x S^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LensSpace {
    p: BigInt,
    q: BigInt,
}

impl LensSpace {
    /// Normalized constructor: `p >= 0`, `q` reduced into `[0, p)` when
    /// `p > 1`; `(1, _) -> (1, 0)`; `(0, _) -> (0, 1)`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Self {
        let p: BigInt = p.into().abs();
        let q: BigInt = q.into();
        if p.is_zero() {
            return LensSpace { p, q: BigInt::one() };
        }
        if p.is_one() {
            return LensSpace { p, q: BigInt::zero() };
        }
        LensSpace { q: q.mod_floor(&p), p }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn is_s3(&self) -> bool {
        self.p.is_one()
    }

    pub fn is_s1s2(&self) -> bool {
        self.p.is_zero()
    }

    /// Homeomorphism classification: `L(p,q) ~ L(p,q')` iff
    /// `q' = +-q^{+-1} (mod p)`.
    pub fn homeomorphic(&self, other: &LensSpace) -> bool {
        if self.p != other.p {
            return false;
        }
        if self.p.is_zero() || self.p.is_one() {
            return true;
        }
        let p = &self.p;
        let q1 = &self.q;
        let q2 = &other.q;
        if q1 == q2 || (q1 + q2).mod_floor(p).is_zero() {
            return true;
        }
        // compare against q2^{-1} mod p when it exists
        let e = q2.extended_gcd(p);
        if e.gcd.is_one() {
            let inv = e.x.mod_floor(p);
            if *q1 == inv || (q1 + &inv).mod_floor(p).is_zero() {
                return true;
            }
        }
        false
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_s3() {
            write!(f, "L(1,0) = S^3")
        } else if self.is_s1s2() {
            write!(f, "L(0,1) = S^1 x S^2")
        } else {
            write!(f, "L({},{})", self.p, self.q)
        }
    }
}

/// The ambient lens space of the knot represented by `word`: reads
/// `p` (lower left) and `q` (upper left) from the matrix image.
pub fn lens_space_of(word: &TwistWord) -> LensSpace {
    let m = omega(word);
    LensSpace::new(m.p, m.q)
}

/// Greedy regular continued fraction `p/q = a1 + 1/(a2 + 1/(... + 1/am))`
/// with all `ai >= 1` and `am >= 2` when `m > 1`.
fn continued_fraction(p: &BigInt, q: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let (mut num, mut den) = (p.clone(), q.clone());
    while !den.is_zero() {
        let (quot, rem) = num.div_rem(&den);
        out.push(quot);
        num = den;
        den = rem;
    }
    out
}

/// The word representing the trivial knot in `L(p, q)`:
/// `ta^{a1} tb^{-a2} ... ta^{am}` for odd depth, with the tail `tb ta tb`
/// appended (and reduced) for even depth; `(1, 0)` gives `tb ta tb` itself.
pub fn trivial_knot_word(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<TwistWord> {
    use TwistGen::*;
    let p: BigInt = p.into();
    let q: BigInt = q.into();
    let psi10 = Word::reduce([Letter::new(Tb, 1), Letter::new(Ta, 1), Letter::new(Tb, 1)]);
    if p.is_one() && q.is_zero() {
        return Ok(psi10);
    }
    if p < BigInt::one() || q < BigInt::one() || q >= p {
        return Err(Error::domain(format!(
            "trivial knot word needs 0 < q < p or (p,q) = (1,0); got ({p},{q})"
        )));
    }
    if !p.gcd(&q).is_one() {
        return Err(Error::domain(format!("p and q must be coprime; got ({p},{q})")));
    }
    let cf = continued_fraction(&p, &q);
    let mut letters = Vec::new();
    for (i, a) in cf.iter().enumerate() {
        if i % 2 == 0 {
            letters.push(Letter::new(Ta, a.clone()));
        } else {
            letters.push(Letter::new(Tb, -a));
        }
    }
    let word = Word::reduce(letters);
    if cf.len() % 2 == 0 {
        Ok(word.compose(&psi10))
    } else {
        Ok(word)
    }
}

/// Splits `word = psi' * psi_{p,q}` and returns the kernel cofactor `psi'`
/// when the factorization lands in the kernel; fails otherwise.
pub fn factor_off_trivial(
    word: &TwistWord,
    p: impl Into<BigInt>,
    q: impl Into<BigInt>,
) -> Result<TwistWord> {
    let trivial = trivial_knot_word(p, q)?;
    let candidate = word.compose(&trivial.invert());
    if is_kernel(&candidate) {
        Ok(candidate)
    } else {
        Err(Error::domain(
            "word does not factor through the given trivial-knot word".to_string(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{expand_kernel, parse_twist_word, KernelGen, KernelWord};

    fn m(q: i64, s: i64, p: i64, r: i64) -> Sl2Matrix {
        Sl2Matrix { q: q.into(), s: s.into(), p: p.into(), r: r.into() }
    }

    #[test]
    fn generator_images() {
        assert_eq!(omega(&parse_twist_word("ta").unwrap()), m(1, 0, 1, 1));
        assert_eq!(omega(&parse_twist_word("tb").unwrap()), m(1, -1, 0, 1));
        assert_eq!(omega(&parse_twist_word("tc").unwrap()), m(1, -1, 0, 1));
        assert_eq!(omega(&TwistWord::identity()), Sl2Matrix::identity());
    }

    #[test]
    fn word_image() {
        // tb ta tb -> [[0,-1],[1,0]]
        assert_eq!(omega(&parse_twist_word("tb ta tb").unwrap()), m(0, -1, 1, 0));
    }

    #[test]
    fn lens_space_examples() {
        assert!(lens_space_of(&parse_twist_word("tb ta tb").unwrap()).is_s3());
        assert!(lens_space_of(&TwistWord::identity()).is_s1s2());
        let w52 = trivial_knot_word(5, 2).unwrap();
        assert_eq!(omega(&w52), m(2, -1, 5, -2));
        assert_eq!(lens_space_of(&w52), LensSpace::new(5, 2));
    }

    #[test]
    fn trivial_words() {
        assert_eq!(trivial_knot_word(3, 1).unwrap(), parse_twist_word("ta^3").unwrap());
        assert_eq!(trivial_knot_word(1, 0).unwrap(), parse_twist_word("tb ta tb").unwrap());
        // 5/2 = 2 + 1/2, even depth, reduced tail
        assert_eq!(
            trivial_knot_word(5, 2).unwrap(),
            parse_twist_word("ta^2 tb^-1 ta tb").unwrap()
        );
        assert!(trivial_knot_word(4, 2).is_err());
        assert!(trivial_knot_word(3, 5).is_err());
    }

    #[test]
    fn kernel_membership() {
        let tm = expand_kernel(&KernelWord::from_letter(KernelGen::Tm, 1));
        assert!(is_kernel(&tm));
        assert!(!is_kernel(&parse_twist_word("ta").unwrap()));
    }

    #[test]
    fn factor_off() {
        let w = trivial_knot_word(5, 2).unwrap();
        assert!(factor_off_trivial(&w, 5, 2).unwrap().is_identity());
        assert!(factor_off_trivial(&parse_twist_word("ta").unwrap(), 0, 1).is_err());
    }

    #[test]
    fn lens_recovery_small() {
        for p in 2i64..=20 {
            for q in 1..p {
                if num_integer::gcd(p, q) != 1 {
                    continue;
                }
                let w = trivial_knot_word(p, q).unwrap();
                assert_eq!(lens_space_of(&w), LensSpace::new(p, q), "p={p} q={q}");
            }
        }
    }

    #[test]
    fn homeomorphic_lens_spaces() {
        // L(7,2) ~ L(7,4) since 4 = 2^{-1} mod 7
        assert!(LensSpace::new(7, 2).homeomorphic(&LensSpace::new(7, 4)));
        // L(7,2) ~ L(7,5) since 5 = -2 mod 7
        assert!(LensSpace::new(7, 2).homeomorphic(&LensSpace::new(7, 5)));
        // 3 = -(2^{-1}) mod 7, so L(7,3) is also homeomorphic to L(7,2)
        assert!(LensSpace::new(7, 2).homeomorphic(&LensSpace::new(7, 3)));
        assert!(!LensSpace::new(7, 1).homeomorphic(&LensSpace::new(7, 2)));
        assert!(!LensSpace::new(5, 1).homeomorphic(&LensSpace::new(7, 1)));
    }
}
