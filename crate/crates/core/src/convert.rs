//! The integer state machine converting a torus-knot word into its
//! parametric representation.
//!
//! Starting from `(a,b,c,r) = (0,0,1,0)` and `z = 0`, one step is applied
//! per exponent `eps_i` (in the order `i = 1..h`); the final state, with `r`
//! reduced mod `d`, is the parametrization of `t(k,h)`.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::families::{torus_epsilon, TorusKnot};
use crate::param::ParamKnot;

/// One state of the conversion: the running 4-tuple plus the auxiliary
/// counter `z`.  Intermediate `r` values are plain integers; only the final
/// result is reduced mod `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConversionState {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub r: i64,
    pub z: i64,
}

impl ConversionState {
    pub fn initial() -> Self {
        ConversionState { a: 0, b: 0, c: 1, r: 0, z: 0 }
    }

    pub fn d(&self) -> i64 {
        2 * self.a + self.b + self.c
    }
}

impl fmt::Display for ConversionState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({},{},{},{}) z={}", self.a, self.b, self.c, self.r, self.z)
    }
}

/// Applies one step of the machine for the exponent `eps` in `{0, -1}`.
///
/// `w` and `v` follow the three-way comparison of `z` with `-1 - eps`;
/// `u = floor((r - 2w)/d)` with floor toward minus infinity.
pub fn step(s: ConversionState, eps: i64) -> Result<ConversionState> {
    if eps != 0 && eps != -1 {
        return Err(Error::domain(format!(
            "step is defined for eps in {{0,-1}}; got {eps}"
        )));
    }
    let d = s.d();
    if d <= 0 {
        return Err(Error::internal(format!("non-positive d = {d}")));
    }
    let pivot = -1 - eps;
    let (w, v) = if s.z < pivot {
        (s.a + s.b + s.c, -(s.b + s.c) * (s.z + 1 + eps) - s.b)
    } else if s.z == pivot {
        (s.a + s.c, 0)
    } else {
        (s.a, (s.b + s.c) * (s.z + 1 + eps) - s.c)
    };
    let u = Integer::div_floor(&(s.r - 2 * w), &d);
    let next = ConversionState {
        a: s.a + v,
        b: s.r - 2 * w - u * d,
        c: d - (s.r - 2 * w - u * d),
        r: s.a + v + w,
        z: u - eps,
    };
    if next.b < 0 || next.b > d || next.a < 0 {
        return Err(Error::internal(format!(
            "state invariant violated after step: {next} (d was {d})"
        )));
    }
    Ok(next)
}

/// Folds the machine over `eps_1, ..., eps_h`; returns the final 4-tuple
/// with `r` reduced mod `d`.
pub fn convert_torus(t: TorusKnot) -> Result<ParamKnot> {
    let last = *trace_convert(t)?.last().expect("trace is nonempty");
    ParamKnot::new(last.a, last.b, last.c, last.r)
}

/// All `h + 1` states of the conversion, starting state included.
pub fn trace_convert(t: TorusKnot) -> Result<Vec<ConversionState>> {
    let mut states = vec![ConversionState::initial()];
    for eps in torus_epsilon(t) {
        let next = step(*states.last().unwrap(), eps)?;
        states.push(next);
    }
    Ok(states)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(a: i64, b: i64, c: i64, r: i64, z: i64) -> ConversionState {
        ConversionState { a, b, c, r, z }
    }

    #[test]
    fn hand_traced_steps() {
        assert_eq!(step(st(0, 0, 1, 0, 0), 0).unwrap(), st(0, 0, 1, 0, 0));
        assert_eq!(step(st(0, 0, 1, 0, 0), -1).unwrap(), st(0, 0, 1, 1, -1));
        assert_eq!(step(st(0, 0, 1, 1, -1), -1).unwrap(), st(1, 0, 1, 2, 0));
    }

    #[test]
    fn rejects_bad_eps() {
        assert!(step(ConversionState::initial(), 1).is_err());
        assert!(step(ConversionState::initial(), -2).is_err());
    }

    #[test]
    fn trefoil_trace() {
        let t = TorusKnot::new(2, 3).unwrap();
        let trace = trace_convert(t).unwrap();
        assert_eq!(
            trace,
            vec![
                st(0, 0, 1, 0, 0),
                st(0, 0, 1, 0, 0),
                st(0, 0, 1, 1, -1),
                st(1, 0, 1, 2, 0),
            ]
        );
        assert_eq!(convert_torus(t).unwrap(), ParamKnot::new(1, 0, 1, 2).unwrap());
    }

    #[test]
    fn t35_trace_anchors() {
        let t = TorusKnot::new(3, 5).unwrap();
        let trace = trace_convert(t).unwrap();
        // the proof intermediate after the first factor block
        assert!(trace.contains(&st(1, 0, 3, 2, 0)));
        let last = trace.last().unwrap();
        assert_eq!((last.a, last.b, last.c, last.r.rem_euclid(last.d())), (1, 4, 1, 5));
    }

    #[test]
    fn appendix_sample() {
        let cases = [
            ((5, 8), (2, 1, 14, 11)),
            ((8, 13), (3, 41, 2, 32)),
            ((20, 23), (7, 6, 189, 176)),
        ];
        for ((k, h), (a, b, c, r)) in cases {
            let t = TorusKnot::new(k, h).unwrap();
            assert_eq!(
                convert_torus(t).unwrap(),
                ParamKnot::new(a, b, c, r).unwrap(),
                "t({k},{h})"
            );
        }
    }
}
