//! Two representations of (1,1)-knots and the bridges between them.
//!
//! A (1,1)-knot is a knot in a lens space admitting a genus-one splitting
//! into two solid tori, each meeting the knot in one trivial arc.  Such a
//! knot can be recorded in two ways:
//!
//! * algebraically, by a word in the Dehn twists `ta`, `tb`, `tc` of the
//!   pure mapping class group of the twice-punctured torus ([`words`],
//!   [`omega`], [`pi1`]);
//! * parametrically, by an integer 4-tuple `K(a, b, c, r)` describing the
//!   arc pattern of a cut-open genus-one diagram ([`param`], [`dunwoody`]).
//!
//! The crate implements both sides and the explicit conversions between
//! them: generators for torus-knot and two-bridge words ([`families`]), the
//! integer state machine turning a torus-knot word into its 4-tuple
//! ([`convert`]), and the Dunwoody diagram machinery that recovers the
//! ambient space and the cyclic branched coverings from a 4-tuple
//! ([`dunwoody`]).

pub mod convert;
pub mod dunwoody;
mod error;
pub mod families;
pub mod omega;
pub mod param;
pub mod pi1;
pub mod words;

pub use error::{Error, Result};
pub use families::TorusKnot;
pub use omega::{LensSpace, Sl2Matrix};
pub use param::ParamKnot;
pub use words::{KernelWord, TwistWord};
