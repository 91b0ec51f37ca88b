//! Action of twist words on the rank-3 free fundamental group of the
//! twice-punctured torus, and the extension test for the handlebody
//! subgroup.
//!
//! The fundamental group is free on the loops `av`, `bv`, `gv` (classes of
//! the curves alpha, beta, gamma joined to the base point).  The frozen
//! generator actions, derived from the curve configuration and validated by
//! the calibration suite (matrix consistency plus the four membership
//! facts), are:
//!
//! ```text
//! ta: av -> av,       bv -> av bv,  gv -> av gv
//! tb: av -> bv^-1 av, bv -> bv,     gv -> bv^-1 gv bv
//! tc: av -> gv^-1 av, bv -> bv,     gv -> gv
//! ```
//!
//! The inclusion into the solid-torus complement kills `bv` and fixes `av`
//! and `gv`; a word extends over the handlebody iff the image of `bv` dies
//! under that quotient.

use std::fmt;

use crate::words::{TwistGen, TwistWord};

/// Free generators of the fundamental group of the twice-punctured torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LoopGen {
    /// `av`: the loop along alpha.
    A,
    /// `bv`: the loop along beta.
    B,
    /// `gv`: the loop along gamma.
    G,
}

impl LoopGen {
    fn token(&self) -> &'static str {
        match self {
            LoopGen::A => "av",
            LoopGen::B => "bv",
            LoopGen::G => "gv",
        }
    }
}

/// A reduced word in the free group on `av`, `bv`, `gv`, stored as signed
/// single letters.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LoopWord {
    letters: Vec<(LoopGen, i8)>,
}

impl LoopWord {
    pub fn identity() -> Self {
        LoopWord::default()
    }

    pub fn generator(g: LoopGen) -> Self {
        LoopWord { letters: vec![(g, 1)] }
    }

    pub fn from_letters(raw: impl IntoIterator<Item = (LoopGen, i8)>) -> Self {
        let mut out: Vec<(LoopGen, i8)> = Vec::new();
        for (g, s) in raw {
            debug_assert!(s == 1 || s == -1);
            if out.last() == Some(&(g, -s)) {
                out.pop();
            } else {
                out.push((g, s));
            }
        }
        LoopWord { letters: out }
    }

    pub fn letters(&self) -> &[(LoopGen, i8)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self::from_letters(self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn invert(&self) -> Self {
        LoopWord {
            letters: self.letters.iter().rev().map(|&(g, s)| (g, -s)).collect(),
        }
    }

    /// Exponent sums over (av, bv, gv).
    pub fn abelianized(&self) -> [i64; 3] {
        let mut out = [0i64; 3];
        for &(g, s) in &self.letters {
            out[g as usize] += i64::from(s);
        }
        out
    }
}

impl fmt::Display for LoopWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let (g, s) = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == (g, s) {
                j += 1;
            }
            let e = (j - i) as i64 * i64::from(s);
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", g.token())?;
            } else {
                write!(f, "{}^{}", g.token(), e)?;
            }
            i = j;
        }
        Ok(())
    }
}

/// An endomorphism of the free group, given by the images of the three
/// generators.  Twist actions are always invertible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistEndo {
    images: [LoopWord; 3],
}

impl TwistEndo {
    pub fn identity() -> Self {
        TwistEndo {
            images: [
                LoopWord::generator(LoopGen::A),
                LoopWord::generator(LoopGen::B),
                LoopWord::generator(LoopGen::G),
            ],
        }
    }

    pub fn image_of(&self, g: LoopGen) -> &LoopWord {
        &self.images[g as usize]
    }

    /// Applies the endomorphism to a word.
    pub fn apply(&self, w: &LoopWord) -> LoopWord {
        let mut out: Vec<(LoopGen, i8)> = Vec::new();
        for &(g, s) in w.letters() {
            let img = &self.images[g as usize];
            if s > 0 {
                for &l in img.letters() {
                    push_reduced(&mut out, l);
                }
            } else {
                for &(gg, ss) in img.letters().iter().rev() {
                    push_reduced(&mut out, (gg, -ss));
                }
            }
        }
        LoopWord { letters: out }
    }

    /// `self` after `other`: `(self.compose(other))(x) = self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        TwistEndo {
            images: [
                self.apply(&other.images[0]),
                self.apply(&other.images[1]),
                self.apply(&other.images[2]),
            ],
        }
    }

    /// The induced matrix on the homology of the closed torus in the base
    /// (beta, alpha): `bv` and `gv` both project to the first basis class,
    /// `av` to the second.  Returned row-major as `[[q, s], [p, r]]`.
    pub fn homology_matrix(&self) -> [[i64; 2]; 2] {
        let b = self.images[LoopGen::B as usize].abelianized();
        let a = self.images[LoopGen::A as usize].abelianized();
        // column of beta-image: (e1, e2) = (b_bv + b_gv, b_av)
        [[b[1] + b[2], a[1] + a[2]], [b[0], a[0]]]
    }
}

fn push_reduced(out: &mut Vec<(LoopGen, i8)>, l: (LoopGen, i8)) {
    if out.last() == Some(&(l.0, -l.1)) {
        out.pop();
    } else {
        out.push(l);
    }
}

fn words(parts: &[(LoopGen, i8)]) -> LoopWord {
    LoopWord::from_letters(parts.iter().copied())
}

/// The frozen action of one twist generator (or its inverse).
pub fn generator_action(g: TwistGen, inverse: bool) -> TwistEndo {
    use LoopGen::*;
    let images = match (g, inverse) {
        (TwistGen::Ta, false) => [
            words(&[(A, 1)]),
            words(&[(A, 1), (B, 1)]),
            words(&[(A, 1), (G, 1)]),
        ],
        (TwistGen::Ta, true) => [
            words(&[(A, 1)]),
            words(&[(A, -1), (B, 1)]),
            words(&[(A, -1), (G, 1)]),
        ],
        (TwistGen::Tb, false) => [
            words(&[(B, -1), (A, 1)]),
            words(&[(B, 1)]),
            words(&[(B, -1), (G, 1), (B, 1)]),
        ],
        (TwistGen::Tb, true) => [
            words(&[(B, 1), (A, 1)]),
            words(&[(B, 1)]),
            words(&[(B, 1), (G, 1), (B, -1)]),
        ],
        (TwistGen::Tc, false) => [
            words(&[(G, -1), (A, 1)]),
            words(&[(B, 1)]),
            words(&[(G, 1)]),
        ],
        (TwistGen::Tc, true) => [
            words(&[(G, 1), (A, 1)]),
            words(&[(B, 1)]),
            words(&[(G, 1)]),
        ],
    };
    TwistEndo { images }
}

/// The action of a twist word: the rightmost letter acts first.
pub fn word_action(w: &TwistWord) -> TwistEndo {
    let mut acc = TwistEndo::identity();
    for (g, s) in w.single_letters() {
        acc = acc.compose(&generator_action(g, s < 0));
    }
    acc
}

/// The inclusion-induced map onto the free group on `av`, `gv`: kills `bv`.
pub fn i_sharp(w: &LoopWord) -> LoopWord {
    LoopWord::from_letters(
        w.letters().iter().copied().filter(|&(g, _)| g != LoopGen::B),
    )
}

/// True iff the word extends over the handlebody fixing the trivial arc:
/// the image of `bv` dies in the solid-torus complement.
pub fn in_e(w: &TwistWord) -> bool {
    let image = word_action(w).apply(&LoopWord::generator(LoopGen::B));
    i_sharp(&image).is_identity()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omega::omega;
    use crate::words::parse_twist_word;
    use num_bigint::BigInt;

    #[test]
    fn identity_action() {
        assert_eq!(word_action(&TwistWord::identity()), TwistEndo::identity());
        assert_eq!(word_action(&parse_twist_word("ta ta^-1").unwrap()), TwistEndo::identity());
    }

    #[test]
    fn generator_actions_invert() {
        for g in [TwistGen::Ta, TwistGen::Tb, TwistGen::Tc] {
            let fwd = generator_action(g, false);
            let bwd = generator_action(g, true);
            assert_eq!(fwd.compose(&bwd), TwistEndo::identity());
            assert_eq!(bwd.compose(&fwd), TwistEndo::identity());
        }
    }

    #[test]
    fn abelianization_matches_matrix() {
        for w in ["ta", "tb", "tc", "tb ta tb", "ta^2 tb^-1 tc ta"] {
            let word = parse_twist_word(w).unwrap();
            let m = omega(&word);
            let h = word_action(&word).homology_matrix();
            assert_eq!(BigInt::from(h[0][0]), m.q, "{w}");
            assert_eq!(BigInt::from(h[0][1]), m.s, "{w}");
            assert_eq!(BigInt::from(h[1][0]), m.p, "{w}");
            assert_eq!(BigInt::from(h[1][1]), m.r, "{w}");
        }
    }

    #[test]
    fn membership_facts() {
        assert!(in_e(&parse_twist_word("tb").unwrap()));
        assert!(in_e(&parse_twist_word("tc").unwrap()));
        assert!(in_e(&parse_twist_word("tb ta tb tb ta tb").unwrap()));
        assert!(!in_e(&parse_twist_word("ta").unwrap()));
        assert!(in_e(&TwistWord::identity()));
    }

    #[test]
    fn puncture_slides_become_inner_after_filling() {
        // tau_m and tau_l are puncture slides: after filling the puncture
        // back (identifying gv with bv), their actions must fix the images
        // of all three generators.
        let fill = |w: &LoopWord| -> LoopWord {
            LoopWord::from_letters(w.letters().iter().map(|&(g, s)| {
                if g == LoopGen::G {
                    (LoopGen::B, s)
                } else {
                    (g, s)
                }
            }))
        };
        for word in ["tm", "tl"] {
            let act = word_action(&parse_twist_word(word).unwrap());
            for g in [LoopGen::A, LoopGen::B, LoopGen::G] {
                assert_eq!(
                    fill(act.image_of(g)),
                    fill(&LoopWord::generator(g)),
                    "{word} on {g:?}"
                );
            }
        }
    }

    #[test]
    fn word_action_is_homomorphism() {
        let u = parse_twist_word("ta tb^-1 tc").unwrap();
        let v = parse_twist_word("tc^-1 tb ta^2").unwrap();
        let uv = u.compose(&v);
        assert_eq!(word_action(&uv), word_action(&u).compose(&word_action(&v)));
    }
}
