//! Explicit knot representations: torus-knot words, two-bridge words, and
//! the closed-form parametrizations for the families that admit one.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::param::ParamKnot;
use crate::words::{expand_kernel, KernelGen, KernelWord, Letter, TwistGen, TwistWord, Word};

/// The torus knot `t(k, h)` with `0 < k < h` and `gcd(k, h) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TorusKnot {
    k: i64,
    h: i64,
}

impl TorusKnot {
    pub fn new(k: i64, h: i64) -> Result<Self> {
        if !(0 < k && k < h) {
            return Err(Error::domain(format!("need 0 < k < h; got ({k},{h})")));
        }
        if k.gcd(&h) != 1 {
            return Err(Error::domain(format!("k and h must be coprime; got ({k},{h})")));
        }
        Ok(TorusKnot { k, h })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn h(&self) -> i64 {
        self.h
    }
}

impl fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t({},{})", self.k, self.h)
    }
}

/// The exponents `eps_1, ..., eps_h`, each in `{0, -1}`, defined by
/// `eps_{h-j} = floor((j+1)k/h) - floor((j+2)k/h)` for `j = 0..h-1`.
pub fn torus_epsilon(t: TorusKnot) -> Vec<i64> {
    let (k, h) = (t.k, t.h);
    (1..=h)
        .map(|i| {
            let j = h - i;
            Integer::div_floor(&((j + 1) * k), &h) - Integer::div_floor(&((j + 2) * k), &h)
        })
        .collect()
}

/// The torus-knot word: the kernel prefix
/// `prod_{j=0}^{h-1} (tl^-1 tm^{eps_{h-j}})` and the full twist word
/// `expand(prefix) * tb ta tb`.
pub fn torus_word(t: TorusKnot) -> (KernelWord, TwistWord) {
    let eps = torus_epsilon(t);
    let mut letters = Vec::new();
    for j in 0..t.h {
        letters.push(Letter::new(KernelGen::Tl, -1));
        let e = eps[(t.h - 1 - j) as usize];
        if e != 0 {
            letters.push(Letter::new(KernelGen::Tm, e));
        }
    }
    let prefix = KernelWord::reduce(letters);
    let full = expand_kernel(&prefix).compose(&psi_one_zero());
    (prefix, full)
}

fn psi_one_zero() -> TwistWord {
    use TwistGen::*;
    Word::reduce([Letter::new(Tb, 1), Letter::new(Ta, 1), Letter::new(Tb, 1)])
}

/// Conway parameters `[2a_1, 2b_1, ..., 2a_n, 2b_n]`, stored as the halved
/// pairs `(a_i, b_i)`, all nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConwayEven {
    pairs: Vec<(i64, i64)>,
}

impl ConwayEven {
    /// Builds from the even parameter list `[2a_1, 2b_1, ...]`.
    pub fn from_even_params(params: &[i64]) -> Result<Self> {
        if params.is_empty() || params.len() % 2 != 0 {
            return Err(Error::domain(
                "Conway parameters must be a nonempty list of pairs".to_string(),
            ));
        }
        if let Some(x) = params.iter().find(|x| **x == 0 || *x % 2 != 0) {
            return Err(Error::domain(format!(
                "Conway parameters must be nonzero even integers; got {x}"
            )));
        }
        Ok(ConwayEven {
            pairs: params.chunks(2).map(|ch| (ch[0] / 2, ch[1] / 2)).collect(),
        })
    }

    pub fn pairs(&self) -> &[(i64, i64)] {
        &self.pairs
    }

    /// Total number of even parameters `2n`.
    pub fn len(&self) -> usize {
        self.pairs.len() * 2
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// The two-bridge word
/// `tb ta tb * tm^{-b_n} te^{a_n} * ... * tm^{-b_1} te^{a_1}` with
/// `te = tl^-1 tm tl tm^-1`, expanded to twists and reduced.
pub fn twobridge_word(c: &ConwayEven) -> TwistWord {
    use KernelGen::*;
    let te = KernelWord::reduce([
        Letter::new(Tl, -1),
        Letter::new(Tm, 1),
        Letter::new(Tl, 1),
        Letter::new(Tm, -1),
    ]);
    let mut kernel = KernelWord::identity();
    for &(ai, bi) in c.pairs.iter().rev() {
        kernel = kernel.compose(&KernelWord::from_letter(Tm, -bi));
        kernel = kernel.compose(&te.pow(ai));
    }
    psi_one_zero().compose(&expand_kernel(&kernel))
}

/// The trivial knot in `L(p, q)` is `K(0, 0, p, q)`.
pub fn trivial_param(p: i64, q: i64) -> Result<ParamKnot> {
    if p < 0 {
        return Err(Error::domain(format!("p must be non-negative; got {p}")));
    }
    let in_range = (0 <= q && q < p) || (p, q) == (1, 0) || (p, q) == (0, 0);
    if !in_range {
        return Err(Error::domain(format!(
            "need 0 <= q < p or (p,q) in {{(1,0),(0,0)}}; got ({p},{q})"
        )));
    }
    ParamKnot::new(0, 0, p, q)
}

/// The two-bridge knot of type `(2a+1, 2r)` is `K(a, 0, 1, r)`.
pub fn twobridge_param(a: i64, r: i64) -> Result<ParamKnot> {
    if a < 1 {
        return Err(Error::domain(format!("need a >= 1; got {a}")));
    }
    if (2 * a + 1).gcd(&(2 * r)) != 1 {
        return Err(Error::domain(format!(
            "2a+1 and 2r must be coprime; got ({}, {})",
            2 * a + 1,
            2 * r
        )));
    }
    ParamKnot::new(a, 0, 1, r)
}

/// Which closed-form family covers a torus knot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    /// `t(k, qk+1) = K(1, k-2, (k-1)(2q-1), k)`, `k > 1`, `q > 0`.
    PlusOne { q: i64 },
    /// `t(k, qk-1) = K(1, k-2, (k-1)(2q-1)-2, (k-1)(2q-3))`, `k, q > 1`.
    MinusOne { q: i64 },
    /// `t(sq'+1, (sq'+1)q + s)`, `q, q' > 0`, `s > 1`.
    ThreeBridge { s: i64, q: i64, qp: i64 },
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedForm::PlusOne { q } => write!(f, "t(k,qk+1) with q={q}"),
            ClosedForm::MinusOne { q } => write!(f, "t(k,qk-1) with q={q}"),
            ClosedForm::ThreeBridge { s, q, qp } => {
                write!(f, "t(sq'+1,(sq'+1)q+s) with s={s}, q={q}, q'={qp}")
            }
        }
    }
}

/// Matches `t(k, h)` against the closed-form families, in the fixed priority
/// order `qk+1`, `qk-1`, three-bridge; returns the family and its formula
/// value, or `None` when no family covers the knot.
pub fn torus_param_closed_form(t: TorusKnot) -> Option<(ClosedForm, ParamKnot)> {
    let (k, h) = (t.k, t.h);
    if k > 1 && h % k == 1 {
        let q = h / k;
        if q > 0 {
            let knot = ParamKnot::new(1, k - 2, (k - 1) * (2 * q - 1), k)
                .expect("counts non-negative for k > 1, q > 0");
            return Some((ClosedForm::PlusOne { q }, knot));
        }
    }
    if k > 1 && (h + 1) % k == 0 {
        let q = (h + 1) / k;
        if q > 1 {
            let knot = ParamKnot::new(1, k - 2, (k - 1) * (2 * q - 1) - 2, (k - 1) * (2 * q - 3))
                .expect("counts non-negative for k > 1, q > 1");
            return Some((ClosedForm::MinusOne { q }, knot));
        }
    }
    // search s > 1, q' > 0 with k = s q' + 1, then q > 0 with h = k q + s
    for qp in 1..k {
        if (k - 1) % qp != 0 {
            continue;
        }
        let s = (k - 1) / qp;
        if s <= 1 {
            continue;
        }
        if (h - s) % k != 0 {
            continue;
        }
        let q = (h - s) / k;
        if q <= 0 {
            continue;
        }
        let b = qp * (2 * q * qp * (s - 1) + 2 * q + s - 2);
        let c = 1 + (s - 2) * qp;
        let r = 2 * qp * qp * (s - 1) + s * qp + 1;
        let knot = ParamKnot::new(qp, b, c, r).expect("counts non-negative");
        return Some((ClosedForm::ThreeBridge { s, q, qp }, knot));
    }
    None
}
