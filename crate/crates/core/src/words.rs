//! Free-group words over the Dehn-twist generators and the kernel generators.
//!
//! A word is a reduced sequence of letters `g^e` with nonzero integer
//! exponents and distinct adjacent generators.  Words multiply by
//! concatenation followed by free reduction; no mapping-class-group
//! relations are imposed here.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dehn-twist generators of the pure mapping class group of the
/// twice-punctured torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwistGen {
    /// `t_alpha`
    Ta,
    /// `t_beta`
    Tb,
    /// `t_gamma`
    Tc,
}

/// Generators of the kernel of the homomorphism onto SL(2, Z): the meridian
/// and longitude puncture slides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelGen {
    /// `tau_m = t_beta t_gamma^-1`
    Tm,
    /// `tau_l = tau_m^-1 t_alpha tau_m t_alpha^-1`
    Tl,
}

pub trait Generator: Copy + Eq + fmt::Debug {
    fn token(&self) -> &'static str;
}

impl Generator for TwistGen {
    fn token(&self) -> &'static str {
        match self {
            TwistGen::Ta => "ta",
            TwistGen::Tb => "tb",
            TwistGen::Tc => "tc",
        }
    }
}

impl Generator for KernelGen {
    fn token(&self) -> &'static str {
        match self {
            KernelGen::Tm => "tm",
            KernelGen::Tl => "tl",
        }
    }
}

/// One syllable `g^e`, `e != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Letter<G> {
    pub gen: G,
    pub exp: BigInt,
}

impl<G: Generator> Letter<G> {
    pub fn new(gen: G, exp: impl Into<BigInt>) -> Self {
        Letter { gen, exp: exp.into() }
    }
}

/// A reduced word in the free group on the generators `G`.
///
/// The empty word is the identity.  In a word `g1 g2 ... gn` the rightmost
/// letter acts first on the surface; all products follow this convention.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word<G> {
    letters: Vec<Letter<G>>,
}

/// Word in the twist generators `ta`, `tb`, `tc`.
pub type TwistWord = Word<TwistGen>;
/// Word in the kernel generators `tm`, `tl`.
pub type KernelWord = Word<KernelGen>;

impl<G: Generator> Word<G> {
    pub fn identity() -> Self {
        Word { letters: Vec::new() }
    }

    /// Free reduction of an arbitrary letter sequence: merges adjacent
    /// letters with equal generator and drops zero exponents.  Idempotent.
    pub fn reduce(raw: impl IntoIterator<Item = Letter<G>>) -> Self {
        let mut out: Vec<Letter<G>> = Vec::new();
        for l in raw {
            if l.exp.is_zero() {
                continue;
            }
            match out.last_mut() {
                Some(top) if top.gen == l.gen => {
                    top.exp += l.exp;
                    if top.exp.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push(l),
            }
        }
        Word { letters: out }
    }

    pub fn from_letter(gen: G, exp: impl Into<BigInt>) -> Self {
        Self::reduce([Letter::new(gen, exp)])
    }

    pub fn letters(&self) -> &[Letter<G>] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of syllables (letters with merged exponents).
    pub fn syllables(&self) -> usize {
        self.letters.len()
    }

    /// Total letter length `sum |e_i|`; may be large, hence BigInt.
    pub fn length(&self) -> BigInt {
        self.letters.iter().map(|l| l.exp.abs()).sum()
    }

    /// Product `self * other`, reduced.
    pub fn compose(&self, other: &Self) -> Self {
        Self::reduce(self.letters.iter().chain(other.letters.iter()).cloned())
    }

    /// Inverse word: reversed order, negated exponents.
    pub fn invert(&self) -> Self {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter { gen: l.gen, exp: -&l.exp })
                .collect(),
        }
    }

    /// `self^k` for integer k.
    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut acc = Word::identity();
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&base);
        }
        acc
    }
}

impl TwistWord {
    /// Iterate single letters `g^{+-1}` from left to right.
    ///
    /// Panics if an exponent magnitude exceeds `usize`; such a word could
    /// not be materialized letter-by-letter anyway.
    pub fn single_letters(&self) -> impl Iterator<Item = (TwistGen, i8)> + '_ {
        self.letters.iter().flat_map(|l| {
            let n = usize::try_from(l.exp.abs().to_biguint().unwrap())
                .expect("exponent too large to expand");
            let sign: i8 = if l.exp.is_negative() { -1 } else { 1 };
            std::iter::repeat((l.gen, sign)).take(n)
        })
    }
}

/// Substitutes the kernel generators by their twist expressions and reduces:
/// `tm -> tb tc^-1`, `tl -> tc tb^-1 ta tb tc^-1 ta^-1`.
pub fn expand_kernel(word: &KernelWord) -> TwistWord {
    use TwistGen::*;
    let tm = [(Tb, 1), (Tc, -1)];
    let tl = [(Tc, 1), (Tb, -1), (Ta, 1), (Tb, 1), (Tc, -1), (Ta, -1)];
    let mut letters: Vec<Letter<TwistGen>> = Vec::new();
    for l in word.letters() {
        let body: &[(TwistGen, i64)] = match l.gen {
            KernelGen::Tm => &tm,
            KernelGen::Tl => &tl,
        };
        let n = usize::try_from(l.exp.abs().to_biguint().unwrap())
            .expect("exponent too large to expand");
        let inv = l.exp.is_negative();
        for _ in 0..n {
            if inv {
                letters.extend(body.iter().rev().map(|&(g, e)| Letter::new(g, -e)));
            } else {
                letters.extend(body.iter().map(|&(g, e)| Letter::new(g, e)));
            }
        }
    }
    Word::reduce(letters)
}

impl<G: Generator> fmt::Display for Word<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if l.exp.is_one() {
                write!(f, "{}", l.gen.token())?;
            } else {
                write!(f, "{}^{}", l.gen.token(), l.exp)?;
            }
        }
        Ok(())
    }
}

fn parse_token(tok: &str, position: usize) -> Result<(String, BigInt)> {
    let bad = || Error::WordParse { token: tok.to_string(), position };
    let (name, exp) = match tok.split_once('^') {
        Some((name, e)) => {
            let exp: BigInt = e.parse().map_err(|_| bad())?;
            (name, exp)
        }
        None => (tok, BigInt::one()),
    };
    Ok((name.to_ascii_lowercase(), exp))
}

/// Parses the CLI word syntax into a twist word.  Kernel tokens `tm`, `tl`
/// are accepted and expanded through their twist expressions.
pub fn parse_twist_word(input: &str) -> Result<TwistWord> {
    let mut acc = TwistWord::identity();
    for (position, tok) in input.split_whitespace().enumerate() {
        if tok == "1" {
            continue;
        }
        let (name, exp) = parse_token(tok, position)?;
        let piece = match name.as_str() {
            "ta" => TwistWord::from_letter(TwistGen::Ta, exp),
            "tb" => TwistWord::from_letter(TwistGen::Tb, exp),
            "tc" => TwistWord::from_letter(TwistGen::Tc, exp),
            "tm" => expand_kernel(&KernelWord::from_letter(KernelGen::Tm, exp)),
            "tl" => expand_kernel(&KernelWord::from_letter(KernelGen::Tl, exp)),
            _ => {
                return Err(Error::WordParse { token: tok.to_string(), position });
            }
        };
        acc = acc.compose(&piece);
    }
    Ok(acc)
}

/// Parses a word in the kernel alphabet only (`tm`, `tl`).
pub fn parse_kernel_word(input: &str) -> Result<KernelWord> {
    let mut acc = KernelWord::identity();
    for (position, tok) in input.split_whitespace().enumerate() {
        if tok == "1" {
            continue;
        }
        let (name, exp) = parse_token(tok, position)?;
        let gen = match name.as_str() {
            "tm" => KernelGen::Tm,
            "tl" => KernelGen::Tl,
            _ => {
                return Err(Error::WordParse { token: tok.to_string(), position });
            }
        };
        acc = acc.compose(&KernelWord::from_letter(gen, exp));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use TwistGen::*;

    fn w(parts: &[(TwistGen, i64)]) -> TwistWord {
        Word::reduce(parts.iter().map(|&(g, e)| Letter::new(g, e)))
    }

    #[test]
    fn reduce_cancellation() {
        assert!(w(&[(Ta, 1), (Ta, -1)]).is_identity());
    }

    #[test]
    fn reduce_merge() {
        assert_eq!(w(&[(Tb, 1), (Tb, 1), (Tc, -1)]), w(&[(Tb, 2), (Tc, -1)]));
    }

    #[test]
    fn reduce_inner_cancellation() {
        assert_eq!(w(&[(Ta, 1), (Tb, 1), (Tb, -1), (Ta, 1)]), w(&[(Ta, 2)]));
    }

    #[test]
    fn compose_identity_and_inverse() {
        let word = w(&[(Tb, 2), (Ta, -1)]);
        assert_eq!(TwistWord::identity().compose(&word), word);
        assert!(word.compose(&word.invert()).is_identity());
        assert_eq!(w(&[(Tb, 1), (Ta, 1)]).invert(), w(&[(Ta, -1), (Tb, -1)]));
    }

    #[test]
    fn expand_kernel_generators() {
        let tm = KernelWord::from_letter(KernelGen::Tm, 1);
        assert_eq!(expand_kernel(&tm), w(&[(Tb, 1), (Tc, -1)]));
        let tl = KernelWord::from_letter(KernelGen::Tl, 1);
        assert_eq!(
            expand_kernel(&tl),
            w(&[(Tc, 1), (Tb, -1), (Ta, 1), (Tb, 1), (Tc, -1), (Ta, -1)])
        );
        assert!(expand_kernel(&KernelWord::identity()).is_identity());
    }

    #[test]
    fn expand_kernel_is_homomorphism() {
        use KernelGen::*;
        let u = KernelWord::reduce([Letter::new(Tm, 2), Letter::new(Tl, -1)]);
        let v = KernelWord::reduce([Letter::new(Tl, 1), Letter::new(Tm, 3)]);
        assert_eq!(
            expand_kernel(&u.compose(&v)),
            expand_kernel(&u).compose(&expand_kernel(&v))
        );
    }

    #[test]
    fn parse_and_display_round_trip() {
        let word = parse_twist_word("ta^-2 tb tc^3").unwrap();
        assert_eq!(word, w(&[(Ta, -2), (Tb, 1), (Tc, 3)]));
        assert_eq!(word.to_string(), "ta^-2 tb tc^3");
        assert_eq!(parse_twist_word("").unwrap(), TwistWord::identity());
        assert_eq!(TwistWord::identity().to_string(), "1");
    }

    #[test]
    fn parse_kernel_tokens_in_twist_word() {
        assert_eq!(parse_twist_word("tm").unwrap(), w(&[(Tb, 1), (Tc, -1)]));
    }

    #[test]
    fn parse_reports_token_and_position() {
        let err = parse_twist_word("ta tx^2").unwrap_err();
        assert_eq!(
            err,
            Error::WordParse { token: "tx^2".into(), position: 1 }
        );
        let err = parse_kernel_word("tm ta").unwrap_err();
        assert_eq!(err, Error::WordParse { token: "ta".into(), position: 1 });
    }
}
