//! Combinatorial Dunwoody diagrams `D(a, b, c, n, r, s)`: construction,
//! curve tracing, admissibility, and first homology via Smith normal form.
//!
//! The diagram has `n` internal circles and `n` external circles, each with
//! `d = 2a + b + c` vertices (slots `0..d`).  The frozen layout, calibrated
//! against the lens-space, appendix-table, 3-torus, and non-admissibility
//! anchors, is:
//!
//! * internal circle `i`: a-arc slots `[0, 2a)`, c-arc slots `[2a, 2a+c)`,
//!   b-arc slots `[2a+c, d)`;
//! * external circle `i`: the same blocks shifted by `r` and with the b and
//!   c blocks swapped: a-arcs `[r, r+2a)`, b-arcs `[r+2a, r+2a+b)`, c-arcs
//!   `[r+2a+b, r+d)` (all mod `d`);
//! * a-arcs: internal `i` slot `a+j` joins internal `i+1` slot `a-1-j`;
//!   external `i` slot `r+a+j` joins external `i+1` slot `r+a-1-j`;
//! * c-arcs: internal `i` slot `2a+j` joins external `i` slot `r+2a+b+j`;
//! * b-arcs: internal `i` slot `2a+c+j` joins external `i-1` slot `r+2a+j`;
//! * gluing: internal circle `i` is identified with external circle `i+s`,
//!   equal slots matching.
//!
//! Admissibility is "exactly `n` traced curves"; at `n = 1` the glued
//! surface is a torus and the criterion additionally requires the traced
//! curve to be primitive in its homology (the diagram determines the
//! winding coordinate mod the handle twist, which the gcd test respects).
//! This rejects exactly the known invalid families.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::param::ParamKnot;

mod snf;

pub use snf::smith_invariant_factors;

/// Parameters of a Dunwoody diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DunwoodyParams {
    a: i64,
    b: i64,
    c: i64,
    n: i64,
    r: i64,
    s: i64,
}

impl DunwoodyParams {
    /// Validates and normalizes: `a, b, c >= 0`, `n > 0`, `r` mod `d`,
    /// `s` mod `n`.  Requires `d = 2a + b + c > 0`.
    pub fn new(a: i64, b: i64, c: i64, n: i64, r: i64, s: i64) -> Result<Self> {
        if a < 0 || b < 0 || c < 0 {
            return Err(Error::domain(format!(
                "arc counts must be non-negative; got ({a},{b},{c})"
            )));
        }
        if n <= 0 {
            return Err(Error::domain(format!("need n > 0; got {n}")));
        }
        let d = 2 * a + b + c;
        if d == 0 {
            return Err(Error::domain("need d = 2a+b+c > 0".to_string()));
        }
        Ok(DunwoodyParams { a, b, c, n, r: r.rem_euclid(d), s: s.rem_euclid(n) })
    }

    /// The diagram of the 4-tuple at covering degree `n` with twist `s`.
    pub fn from_knot(k: ParamKnot, n: i64, s: i64) -> Result<Self> {
        DunwoodyParams::new(k.a(), k.b(), k.c(), n, k.r(), s)
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
    pub fn n(&self) -> i64 {
        self.n
    }
    pub fn r(&self) -> i64 {
        self.r
    }
    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn d(&self) -> i64 {
        2 * self.a + self.b + self.c
    }
}

impl fmt::Display for DunwoodyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "D({},{},{},{},{},{})",
            self.a, self.b, self.c, self.n, self.r, self.s
        )
    }
}

/// A vertex of the diagram: a slot on one circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vertex {
    /// false: internal circle `C'_i`; true: external circle `C''_i`.
    pub external: bool,
    /// Circle index in `0..n`.
    pub circle: usize,
    /// Slot index in `0..d`.
    pub slot: usize,
}

/// The built diagram: the arc involution on vertices plus the parameters.
#[derive(Debug, Clone)]
pub struct DunwoodyDiagram {
    params: DunwoodyParams,
    /// `arc[v]` is the other endpoint of the arc at vertex index `v`.
    arc: Vec<u32>,
}

const MAX_VERTICES: i64 = 8_000_000;

impl DunwoodyDiagram {
    pub fn params(&self) -> DunwoodyParams {
        self.params
    }

    fn d(&self) -> usize {
        self.params.d() as usize
    }

    fn n(&self) -> usize {
        self.params.n as usize
    }

    fn index(&self, v: Vertex) -> usize {
        let side = usize::from(v.external);
        (side * self.n() + v.circle) * self.d() + v.slot
    }

    fn vertex(&self, idx: usize) -> Vertex {
        let d = self.d();
        let n = self.n();
        let slot = idx % d;
        let rest = idx / d;
        Vertex { external: rest / n == 1, circle: rest % n, slot }
    }

    /// The arc partner of a vertex.
    pub fn arc_partner(&self, v: Vertex) -> Vertex {
        self.vertex(self.arc[self.index(v)] as usize)
    }

    /// The vertex identified with `v` by the gluing: internal circle `i`
    /// matches external circle `i + s`, equal slots.
    pub fn glue_partner(&self, v: Vertex) -> Vertex {
        let n = self.n() as i64;
        let circle = if v.external {
            (v.circle as i64 - self.params.s).rem_euclid(n)
        } else {
            (v.circle as i64 + self.params.s).rem_euclid(n)
        };
        Vertex { external: !v.external, circle: circle as usize, slot: v.slot }
    }

    /// All vertices, internal circles first.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..2 * self.n() * self.d()).map(|i| self.vertex(i))
    }
}

/// Builds the labeled diagram under the frozen convention.  Deterministic.
pub fn build_diagram(p: DunwoodyParams) -> Result<DunwoodyDiagram> {
    let d = p.d();
    if 2 * p.n * d > MAX_VERTICES {
        return Err(Error::domain(format!(
            "diagram too large: {} vertices",
            2 * p.n * d
        )));
    }
    let (a, b, c, n, r) = (p.a, p.b, p.c, p.n, p.r);
    let total = (2 * n * d) as usize;
    let mut arc: Vec<u32> = vec![u32::MAX; total];
    let dia = DunwoodyDiagram { params: p, arc: Vec::new() };
    let idx = |external: bool, i: i64, k: i64| -> usize {
        let side = i64::from(external);
        ((side * n + i.rem_euclid(n)) * d + k.rem_euclid(d)) as usize
    };
    let connect = |u: usize, v: usize, arc: &mut Vec<u32>| -> Result<()> {
        if arc[u] != u32::MAX || arc[v] != u32::MAX {
            return Err(Error::internal(format!(
                "vertex used twice while building {p}"
            )));
        }
        arc[u] = v as u32;
        arc[v] = u as u32;
        Ok(())
    };
    for i in 0..n {
        for j in 0..a {
            // internal a-band to the next internal circle, reversed
            connect(idx(false, i, a + j), idx(false, i + 1, a - 1 - j), &mut arc)?;
            // external a-band, shifted by r
            connect(idx(true, i, r + a + j), idx(true, i + 1, r + a - 1 - j), &mut arc)?;
        }
        for j in 0..c {
            connect(idx(false, i, 2 * a + j), idx(true, i, r + 2 * a + b + j), &mut arc)?;
        }
        for j in 0..b {
            connect(idx(false, i, 2 * a + c + j), idx(true, i - 1, r + 2 * a + j), &mut arc)?;
        }
    }
    if arc.iter().any(|x| *x == u32::MAX) {
        return Err(Error::internal(format!("unmatched vertex while building {p}")));
    }
    Ok(DunwoodyDiagram { arc, ..dia })
}

/// One closed attaching curve: the cyclic relator word, letters
/// `(generator index, sign)` with generators `x_0 .. x_{n-1}`.
pub type Relator = Vec<(usize, i8)>;

/// Result of tracing: the undirected closed curves as relator words.
#[derive(Debug, Clone)]
pub struct TracedCurves {
    /// One cyclic relator per undirected curve.
    pub relators: Vec<Relator>,
    /// Per directed curve: net signed handle passes and the winding number
    /// of the canonical drawing (used by the `n = 1` primitivity test).
    classes: Vec<(i64, i64)>,
}

impl TracedCurves {
    pub fn count(&self) -> usize {
        self.relators.len()
    }
}

/// Follows the arcs through the gluings until every directed arc is
/// consumed; each crossing of a glued circle pair records one signed letter.
pub fn trace_curves(dia: &DunwoodyDiagram) -> Result<TracedCurves> {
    let p = dia.params;
    let d = p.d();
    let n = p.n;
    let total = dia.arc.len();
    let mut seen = vec![false; total]; // directed arc v -> arc[v] consumed
    let mut directed: Vec<(Relator, i64, i64)> = Vec::new();
    for start in 0..total {
        if seen[start] {
            continue;
        }
        let mut word: Relator = Vec::new();
        let mut mu: i64 = 0;
        let mut lam_num: i64 = 0;
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            let u = dia.arc[v] as usize;
            let uv = dia.vertex(u);
            let vv = dia.vertex(v);
            lam_num += (uv.slot as i64 - vv.slot as i64).rem_euclid(d);
            if uv.external {
                let gen = (uv.circle as i64 - p.s).rem_euclid(n) as usize;
                word.push((gen, 1));
                mu += 1;
            } else {
                word.push((uv.circle, -1));
                mu -= 1;
            }
            let next = dia.glue_partner(uv);
            v = dia.index(next);
        }
        if v != start {
            return Err(Error::internal(format!(
                "traversal is not a permutation in {p}"
            )));
        }
        if lam_num % d != 0 {
            return Err(Error::internal(format!(
                "non-integral winding while tracing {p}"
            )));
        }
        directed.push((word, mu, lam_num / d));
    }
    // every undirected curve is traversed once per direction; pair each
    // directed curve with its reverse
    let mut used = vec![false; directed.len()];
    let mut relators = Vec::new();
    let mut classes = Vec::new();
    for i in 0..directed.len() {
        classes.push((directed[i].1, directed[i].2));
        if used[i] {
            continue;
        }
        used[i] = true;
        let rev = canonical_cyclic(&reverse_relator(&directed[i].0));
        let mut found = false;
        for (j, other) in directed.iter().enumerate().skip(i + 1) {
            if !used[j] && canonical_cyclic(&other.0) == rev {
                used[j] = true;
                found = true;
                break;
            }
        }
        if !found {
            return Err(Error::internal(format!(
                "unpaired directed curve while tracing {p}"
            )));
        }
        relators.push(directed[i].0.clone());
    }
    Ok(TracedCurves { relators, classes })
}

fn reverse_relator(w: &Relator) -> Relator {
    w.iter().rev().map(|&(g, s)| (g, -s)).collect()
}

fn canonical_cyclic(w: &Relator) -> Relator {
    if w.is_empty() {
        return Vec::new();
    }
    let mut best: Option<Relator> = None;
    for k in 0..w.len() {
        let rot: Relator = w[k..].iter().chain(w[..k].iter()).copied().collect();
        if best.as_ref().is_none_or(|b| rot < *b) {
            best = Some(rot);
        }
    }
    best.unwrap()
}

/// True iff the diagram is a genuine open Heegaard diagram of genus `n`:
/// exactly `n` traced curves, and at `n = 1` a primitive curve class.
pub fn is_admissible(p: DunwoodyParams) -> bool {
    let Ok(dia) = build_diagram(p) else {
        return false;
    };
    let Ok(traced) = trace_curves(&dia) else {
        return false;
    };
    admissible_trace(p, &traced)
}

fn admissible_trace(p: DunwoodyParams, traced: &TracedCurves) -> bool {
    if traced.count() != p.n as usize {
        return false;
    }
    if p.n == 1 {
        // the two directed gauges of the single curve; accept if either
        // reads primitive
        return traced
            .classes
            .iter()
            .any(|&(mu, lam)| mu.unsigned_abs().gcd(&lam.unsigned_abs()) == 1);
    }
    true
}

/// Invariant factors of the first homology of the Dunwoody manifold:
/// Smith normal form of the relator exponent-sum matrix, unit factors
/// dropped, zeros meaning free rank.
pub fn homology(p: DunwoodyParams) -> Result<Vec<BigInt>> {
    let dia = build_diagram(p)?;
    let traced = trace_curves(&dia)?;
    if !admissible_trace(p, &traced) {
        return Err(Error::NotAdmissible(format!("{p}")));
    }
    let n = p.n as usize;
    let mut matrix = vec![vec![BigInt::zero(); n]; n];
    for (row, relator) in matrix.iter_mut().zip(&traced.relators) {
        for &(gen, sign) in relator {
            row[gen] += BigInt::from(sign);
        }
    }
    let mut factors = smith_invariant_factors(matrix);
    factors.retain(|f| !f.is_one());
    Ok(factors)
}

/// Order of the first homology group: product of the invariant factors,
/// `0` when the group is infinite, `1` when it is trivial.
pub fn homology_order(factors: &[BigInt]) -> BigInt {
    let mut prod = BigInt::one();
    for f in factors {
        if f.is_zero() {
            return BigInt::zero();
        }
        prod *= f;
    }
    prod
}

/// `|H_1|` of the ambient space of `K(a,b,c,r)`: the order `p` of the lens
/// space `L(p, q)`, with `1` meaning the 3-sphere and `0` meaning
/// `S^1 x S^2`.
///
/// The degenerate tuple `K(0,0,0,0)` is the trivial knot in `S^1 x S^2` and
/// has no diagram; it is answered directly.
pub fn ambient_order(k: ParamKnot) -> Result<BigInt> {
    if k.d() == 0 {
        return Ok(BigInt::zero());
    }
    let p = DunwoodyParams::from_knot(k, 1, 0)?;
    Ok(homology_order(&homology(p)?))
}

/// Scans `s in 0..n` and returns the admissible covering parameters with
/// the homology of each.  An empty list is a valid outcome.
pub fn coverings(k: ParamKnot, n: i64) -> Result<Vec<(i64, Vec<BigInt>)>> {
    if n <= 0 {
        return Err(Error::domain(format!("need n > 0; got {n}")));
    }
    if k.d() == 0 {
        return Err(Error::domain(
            "K(0,0,0,0) has no Dunwoody diagram to lift".to_string(),
        ));
    }
    let mut out = Vec::new();
    for s in 0..n {
        let p = DunwoodyParams::from_knot(k, n, s)?;
        if is_admissible(p) {
            out.push((s, homology(p)?));
        }
    }
    Ok(out)
}
