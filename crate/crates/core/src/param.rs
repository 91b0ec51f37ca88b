//! The parametric representation of (1,1)-knots by integer 4-tuples
//! `K(a, b, c, r)` with `a, b, c >= 0` and `r` a residue mod `d = 2a+b+c`,
//! together with the two equivalence moves and the known non-admissible
//! families.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A normalized 4-tuple `K(a, b, c, r)`: `0 <= r < d` when `d = 2a+b+c > 0`,
/// and `K(0,0,0,0)` is the unique tuple with `d = 0` (the trivial knot in
/// `S^1 x S^2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamKnot {
    a: i64,
    b: i64,
    c: i64,
    r: i64,
}

impl ParamKnot {
    /// Normalizes `r` mod `d` into `[0, d)`; rejects negative `a`, `b`, `c`.
    pub fn new(a: i64, b: i64, c: i64, r: i64) -> Result<Self> {
        if a < 0 || b < 0 || c < 0 {
            return Err(Error::domain(format!(
                "arc counts must be non-negative; got ({a},{b},{c})"
            )));
        }
        let d = 2 * a + b + c;
        let r = if d == 0 { 0 } else { r.rem_euclid(d) };
        Ok(ParamKnot { a, b, c, r })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    /// `d = 2a + b + c`, the number of vertices per diagram circle.
    pub fn d(&self) -> i64 {
        2 * self.a + self.b + self.c
    }

    /// Swap of the two crossing-arc families with reflected gluing:
    /// `K(a,b,c,r) -> K(a,c,b,-r)`.  An involution up to normalization.
    pub fn move_a(&self) -> ParamKnot {
        ParamKnot::new(self.a, self.c, self.b, -self.r).expect("counts preserved")
    }

    /// Swap of an empty crossing family through the zero slot:
    /// `K(a,0,c,r) <-> K(a,c,0,r)`.  Returns `None` when neither `b` nor
    /// `c` is zero.
    pub fn move_b(&self) -> Option<ParamKnot> {
        if self.b == 0 {
            Some(ParamKnot::new(self.a, self.c, 0, self.r).expect("counts preserved"))
        } else if self.c == 0 {
            Some(ParamKnot::new(self.a, 0, self.b, self.r).expect("counts preserved"))
        } else {
            None
        }
    }

    /// True iff the tuple belongs to one of the families known to determine
    /// no knot: `(a, 0, a, a)` with `a > 1`, or `(1, 0, c, 2)` with `c`
    /// even.
    pub fn is_known_invalid(&self) -> bool {
        (self.a > 1 && self.b == 0 && self.c == self.a && self.r == self.a)
            || (self.a == 1 && self.b == 0 && self.c % 2 == 0 && self.r == 2)
    }
}

impl fmt::Display for ParamKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({},{},{},{})", self.a, self.b, self.c, self.r)
    }
}

/// Breadth-first search over the two moves from `start`, up to `depth`
/// applications; true iff `target` is reached.  A negative answer means
/// "not related within depth", not inequivalence of the knots.
pub fn equivalent_under_moves(start: ParamKnot, target: ParamKnot, depth: u32) -> bool {
    if start == target {
        return true;
    }
    let mut seen: HashSet<ParamKnot> = HashSet::from([start]);
    let mut frontier = VecDeque::from([(start, 0u32)]);
    while let Some((k, dist)) = frontier.pop_front() {
        if dist == depth {
            continue;
        }
        let mut nexts = vec![k.move_a()];
        if let Some(kb) = k.move_b() {
            nexts.push(kb);
        }
        for n in nexts {
            if n == target {
                return true;
            }
            if seen.insert(n) {
                frontier.push_back((n, dist + 1));
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(a: i64, b: i64, c: i64, r: i64) -> ParamKnot {
        ParamKnot::new(a, b, c, r).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(k(2, 1, 14, 30), k(2, 1, 14, 11));
        assert_eq!(k(0, 0, 0, 17), k(0, 0, 0, 0));
        assert_eq!(k(1, 0, 1, -1), k(1, 0, 1, 2));
        assert!(ParamKnot::new(-1, 0, 0, 0).is_err());
    }

    #[test]
    fn move_a_examples() {
        assert_eq!(k(2, 1, 14, 11).move_a(), k(2, 14, 1, 8));
        assert_eq!(k(1, 0, 1, 2).move_a(), k(1, 1, 0, 1));
        let x = k(3, 5, 2, 7);
        assert_eq!(x.move_a().move_a(), x);
    }

    #[test]
    fn move_b_examples() {
        assert_eq!(k(1, 0, 1, 1).move_b(), Some(k(1, 1, 0, 1)));
        assert_eq!(k(2, 0, 1, 1).move_b(), Some(k(2, 1, 0, 1)));
        assert_eq!(k(1, 1, 1, 2).move_b(), None);
        let x = k(2, 0, 5, 3);
        assert_eq!(x.move_b().unwrap().move_b(), Some(x));
    }

    #[test]
    fn equivalence_search() {
        // trefoil torus form vs two-bridge form
        assert!(equivalent_under_moves(k(1, 0, 1, 2), k(1, 0, 1, 1), 2));
        // t(3,5) dual closed forms via one move_a
        assert!(equivalent_under_moves(k(1, 1, 4, 2), k(1, 4, 1, 5), 1));
        assert!(equivalent_under_moves(k(1, 1, 4, 2), k(1, 1, 4, 2), 0));
        assert!(!equivalent_under_moves(k(1, 0, 1, 2), k(1, 0, 1, 1), 1));
    }

    #[test]
    fn known_invalid_families() {
        assert!(k(2, 0, 2, 2).is_known_invalid());
        assert!(k(1, 0, 4, 2).is_known_invalid());
        assert!(!k(1, 0, 1, 1).is_known_invalid());
        assert!(!k(1, 0, 3, 2).is_known_invalid());
        assert!(!k(2, 0, 2, 1).is_known_invalid());
    }
}
