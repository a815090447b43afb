//! Piecewise-polynomial membership functions on a real interval.
//!
//! A membership function assigns a weight in `[0, 1]` to every point of a
//! closed interval `[a, b]`. It is stored as contiguous polynomial segments
//! with exact rational coefficients (constant term first). Each interior
//! breakpoint belongs to exactly one of its two neighbors — `lo_closed` says
//! whether a segment owns its left endpoint — so step discontinuities are
//! representable without ambiguity, while continuous functions never depend
//! on the flags.
//!
//! Connectives act pointwise through the same closed forms as scalar weights
//! ([`crate::weight::connective_weight`]), executed symbolically on the
//! coefficient lists. Combining two functions therefore yields exact result
//! polynomials — a union of piecewise-linear memberships comes out as the
//! actual piecewise-quadratic function, not a table of samples. Formulas in
//! which one function appears several times evaluate through the formula's
//! multilinear weight polynomial ([`pw_from_formula`]), so the classical
//! laws hold pointwise: `T | !T` is the constant-1 function.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::formula::{format_formula, EvalError, Formula, Variable};
use crate::poly::{multilinear_of, MultilinearPoly};
use crate::weight::{combined_name, connective_value, Rational, WeightConnective};

/// Interior grid size for the sampled range check on segments of degree
/// three or more, where extrema have no closed form.
const INTERIOR_SAMPLES: usize = 10_000;

/// A point where a piecewise function's values leave `[0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangeViolation {
    /// Index of the offending segment, in the order the segments were given.
    pub segment: usize,
    /// Point at which the violation was found.
    pub x: Rational,
    /// Value attained there.
    pub value: Rational,
    /// True when the point came from the dense sampling grid (degree ≥ 3)
    /// rather than an exact extremum candidate. A sampled check that finds
    /// nothing is strong evidence, not proof.
    pub sampled: bool,
}

impl fmt::Display for RangeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "segment {} attains {} at x = {}, outside [0, 1]{}",
            self.segment,
            self.value,
            self.x,
            if self.sampled {
                " (found by sampling)"
            } else {
                ""
            }
        )
    }
}

/// Errors from piecewise-function construction, evaluation, or combination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PwError {
    /// Domain bounds are not in increasing order.
    InvalidDomain {
        /// Claimed lower bound.
        lo: Rational,
        /// Claimed upper bound.
        hi: Rational,
    },
    /// Segment bounds are not in increasing order.
    InvalidSegment {
        /// Claimed lower bound.
        lo: Rational,
        /// Claimed upper bound.
        hi: Rational,
    },
    /// A function needs at least one segment.
    EmptySegments,
    /// Segments leave part of the domain uncovered, starting at this point.
    Gap {
        /// Leftmost uncovered point.
        at: Rational,
    },
    /// Segments overlap each other or spill past the domain.
    Overlap {
        /// Leftmost doubly-covered (or out-of-domain) point.
        at: Rational,
    },
    /// A segment's values leave `[0, 1]`.
    Range(RangeViolation),
    /// An evaluation point outside the domain.
    OutOfDomain {
        /// The point that was asked for.
        x: Rational,
    },
    /// Two functions in one operation are defined on different domains.
    DomainMismatch,
    /// The combined value at this interior breakpoint matches neither
    /// adjacent result polynomial, so no half-open segmentation represents
    /// the result exactly. Requires both operands to jump at the same point
    /// in opposite ownership directions.
    InconsistentBreakpoint {
        /// The breakpoint in question.
        at: Rational,
    },
    /// A formula references a function name with no definition.
    UnknownFunction(String),
    /// The symbolic weight machinery failed underneath, e.g. a formula over
    /// more distinct functions than it supports.
    Eval(EvalError),
}

impl fmt::Display for PwError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PwError::InvalidDomain { lo, hi } => {
                write!(f, "domain bounds must increase: [{lo}, {hi}]")
            }
            PwError::InvalidSegment { lo, hi } => {
                write!(f, "segment bounds must increase: [{lo}, {hi}]")
            }
            PwError::EmptySegments => {
                f.write_str("a piecewise function needs at least one segment")
            }
            PwError::Gap { at } => {
                write!(f, "segments leave the domain uncovered starting at {at}")
            }
            PwError::Overlap { at } => write!(f, "segments overlap starting at {at}"),
            PwError::Range(v) => write!(f, "{v}"),
            PwError::OutOfDomain { x } => write!(f, "point {x} is outside the domain"),
            PwError::DomainMismatch => f.write_str("functions are defined on different domains"),
            PwError::InconsistentBreakpoint { at } => write!(
                f,
                "no segmentation represents the combined value at {at} exactly"
            ),
            PwError::UnknownFunction(name) => write!(f, "unknown function '{name}'"),
            PwError::Eval(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for PwError {}

impl From<EvalError> for PwError {
    fn from(e: EvalError) -> PwError {
        PwError::Eval(e)
    }
}

/// A dense univariate polynomial, constant term first, with no trailing zero
/// coefficients (the zero polynomial keeps a single 0).
#[derive(Clone, Debug, PartialEq, Eq)]
struct Poly1 {
    coeffs: Vec<Rational>,
}

impl Poly1 {
    fn new(mut coeffs: Vec<Rational>) -> Poly1 {
        while coeffs.len() > 1 && coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        Poly1 { coeffs }
    }

    fn one() -> Poly1 {
        Poly1 {
            coeffs: alloc::vec![Rational::one()],
        }
    }

    fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    fn add(&self, other: &Poly1) -> Poly1 {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = alloc::vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Poly1::new(out)
    }

    fn sub(&self, other: &Poly1) -> Poly1 {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = alloc::vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        Poly1::new(out)
    }

    fn mul(&self, other: &Poly1) -> Poly1 {
        let mut out = alloc::vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly1::new(out)
    }

    /// `1 - p`.
    fn complement(&self) -> Poly1 {
        let mut out: Vec<Rational> = self.coeffs.iter().map(|c| -c).collect();
        out[0] += Rational::one();
        Poly1::new(out)
    }
}

/// The closed forms of [`crate::weight::connective_weight`], lifted from
/// numbers to polynomials.
fn combine_polys(c: WeightConnective, a: &Poly1, b: &Poly1) -> Poly1 {
    let one = Poly1::one();
    let ab = a.mul(b);
    match c {
        WeightConnective::Or => a.add(b).sub(&ab),
        WeightConnective::Xor => a.add(b).sub(&ab).sub(&ab),
        WeightConnective::And => ab,
        WeightConnective::Imp => one.sub(a).add(&ab),
        WeightConnective::ConverseImp => one.sub(b).add(&ab),
        WeightConnective::Iff => one.sub(a).sub(b).add(&ab).add(&ab),
        WeightConnective::Nand => one.sub(&ab),
        WeightConnective::Nor => one.sub(a).sub(b).add(&ab),
    }
}

/// One polynomial piece of a membership function, on the interval from `lo`
/// to `hi`. Whether the endpoints belong to this piece is decided by the
/// surrounding function: `lo_closed` claims the left endpoint, and a segment
/// owns its right endpoint exactly when its successor declines the point (or
/// there is no successor).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySegment {
    lo: Rational,
    hi: Rational,
    lo_closed: bool,
    poly: Poly1,
}

impl PolySegment {
    /// Creates a segment; the coefficient list is constant term first and is
    /// normalized (trailing zeros dropped). Requires `lo < hi`.
    pub fn new(
        lo: Rational,
        hi: Rational,
        lo_closed: bool,
        coeffs: Vec<Rational>,
    ) -> Result<PolySegment, PwError> {
        if lo >= hi {
            return Err(PwError::InvalidSegment { lo, hi });
        }
        Ok(PolySegment {
            lo,
            hi,
            lo_closed,
            poly: Poly1::new(coeffs),
        })
    }

    /// Left endpoint.
    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    /// Right endpoint.
    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    /// Whether this segment owns its left endpoint.
    pub fn lo_closed(&self) -> bool {
        self.lo_closed
    }

    /// Normalized coefficients, constant term first.
    pub fn coeffs(&self) -> &[Rational] {
        &self.poly.coeffs
    }

    /// Degree of the polynomial (0 for constants, including the zero
    /// polynomial).
    pub fn degree(&self) -> usize {
        self.poly.degree()
    }

    /// Evaluates the segment polynomial at a point, with no interval check;
    /// useful for inspecting a piece beyond the endpoints it owns.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.poly.eval(x)
    }
}

/// A membership function: contiguous polynomial segments covering a closed
/// interval. Equality compares the segment data and ignores the name.
#[derive(Clone, Debug)]
pub struct PiecewiseFn {
    name: String,
    segments: Vec<PolySegment>,
}

impl PartialEq for PiecewiseFn {
    fn eq(&self, other: &Self) -> bool {
        self.segments == other.segments
    }
}

impl Eq for PiecewiseFn {}

impl PiecewiseFn {
    /// The function's display name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// The segments, in increasing order of interval.
    pub fn segments(&self) -> &[PolySegment] {
        &self.segments
    }

    /// The closed domain `[a, b]` the function covers.
    pub fn domain(&self) -> (&Rational, &Rational) {
        (
            &self.segments[0].lo,
            &self.segments.last().expect("functions have segments").hi,
        )
    }

    /// All breakpoints in increasing order, domain endpoints included.
    pub fn breakpoints(&self) -> Vec<Rational> {
        let mut cuts: Vec<Rational> = self.segments.iter().map(|s| s.lo.clone()).collect();
        cuts.push(
            self.segments
                .last()
                .expect("functions have segments")
                .hi
                .clone(),
        );
        cuts
    }

    /// The polynomial in force at a point that is not a breakpoint of this
    /// function. (At a breakpoint it returns the right-hand piece.)
    fn poly_at(&self, x: &Rational) -> &Poly1 {
        for seg in &self.segments {
            if *x < seg.hi {
                return &seg.poly;
            }
        }
        &self.segments.last().expect("functions have segments").poly
    }
}

/// Fuses adjacent segments that carry the same polynomial; ownership flags
/// at the fused cut are irrelevant since both sides agree there.
fn merge_segments(segments: Vec<PolySegment>) -> Vec<PolySegment> {
    let mut out: Vec<PolySegment> = Vec::with_capacity(segments.len());
    for seg in segments {
        match out.last_mut() {
            Some(prev) if prev.poly == seg.poly => prev.hi = seg.hi,
            _ => out.push(seg),
        }
    }
    out
}

/// Finds a point where the segment leaves `[0, 1]`, if any.
///
/// Degree ≤ 1: endpoints are the extrema. Degree 2: endpoints plus the
/// interior vertex, all exact. Degree ≥ 3: endpoints exactly plus a dense
/// interior grid, so a pass is not a proof (violations report
/// `sampled = true`). Checking the closed interval is equivalent to checking
/// the points the segment actually owns: a polynomial exceeding the range at
/// an excluded endpoint already exceeds it just inside.
fn segment_violation(seg: &PolySegment, index: usize) -> Option<RangeViolation> {
    let violation = |x: Rational, sampled: bool| -> Option<RangeViolation> {
        let value = seg.poly.eval(&x);
        if value < Rational::zero() || value > Rational::one() {
            Some(RangeViolation {
                segment: index,
                x,
                value,
                sampled,
            })
        } else {
            None
        }
    };
    if let Some(v) = violation(seg.lo.clone(), false) {
        return Some(v);
    }
    if let Some(v) = violation(seg.hi.clone(), false) {
        return Some(v);
    }
    match seg.poly.degree() {
        0 | 1 => None,
        2 => {
            // The lone interior extremum of c0 + c1 x + c2 x^2 is at -c1/(2 c2).
            let two = Rational::from_integer(BigInt::from(2));
            let vertex = -(&seg.poly.coeffs[1] / (&seg.poly.coeffs[2] * two));
            if seg.lo < vertex && vertex < seg.hi {
                violation(vertex, false)
            } else {
                None
            }
        }
        _ => {
            let span = &seg.hi - &seg.lo;
            let denom = BigInt::from(INTERIOR_SAMPLES + 1);
            for i in 1..=INTERIOR_SAMPLES {
                let x = &seg.lo + &span * Rational::new(BigInt::from(i), denom.clone());
                if let Some(v) = violation(x, true) {
                    return Some(v);
                }
            }
            None
        }
    }
}

/// Assembles a membership function from segments that must cover the domain
/// exactly, in order, with no gaps or overlaps.
///
/// The first segment's `lo_closed` flag is forced on (the domain's left
/// endpoint is always attained), adjacent segments with identical
/// polynomials are fused, and every segment is range-checked; a
/// [`PwError::Range`] reports the offending segment by its position in the
/// input list.
pub fn pw_from_segments(
    domain: (Rational, Rational),
    name: &str,
    mut segments: Vec<PolySegment>,
) -> Result<PiecewiseFn, PwError> {
    let (a, b) = domain;
    if a >= b {
        return Err(PwError::InvalidDomain { lo: a, hi: b });
    }
    if segments.is_empty() {
        return Err(PwError::EmptySegments);
    }
    match segments[0].lo.cmp(&a) {
        Ordering::Greater => return Err(PwError::Gap { at: a }),
        Ordering::Less => {
            return Err(PwError::Overlap {
                at: segments[0].lo.clone(),
            })
        }
        Ordering::Equal => {}
    }
    for i in 1..segments.len() {
        let prev_hi = segments[i - 1].hi.clone();
        match segments[i].lo.cmp(&prev_hi) {
            Ordering::Greater => return Err(PwError::Gap { at: prev_hi }),
            Ordering::Less => {
                return Err(PwError::Overlap {
                    at: segments[i].lo.clone(),
                })
            }
            Ordering::Equal => {}
        }
    }
    let last_hi = segments.last().expect("nonempty").hi.clone();
    match last_hi.cmp(&b) {
        Ordering::Less => return Err(PwError::Gap { at: last_hi }),
        Ordering::Greater => return Err(PwError::Overlap { at: b }),
        Ordering::Equal => {}
    }
    segments[0].lo_closed = true;
    for (i, seg) in segments.iter().enumerate() {
        if let Some(v) = segment_violation(seg, i) {
            return Err(PwError::Range(v));
        }
    }
    Ok(PiecewiseFn {
        name: name.to_string(),
        segments: merge_segments(segments),
    })
}

/// Evaluates a membership function at a point of its domain.
pub fn pw_eval(f: &PiecewiseFn, x: &Rational) -> Result<Rational, PwError> {
    let (a, b) = f.domain();
    if x < a || x > b {
        return Err(PwError::OutOfDomain { x: x.clone() });
    }
    let n = f.segments.len();
    for (i, seg) in f.segments.iter().enumerate() {
        let owns = if *x < seg.hi {
            *x > seg.lo || seg.lo_closed
        } else if *x == seg.hi {
            i + 1 == n || !f.segments[i + 1].lo_closed
        } else {
            false
        };
        if owns {
            return Ok(seg.poly.eval(x));
        }
    }
    unreachable!("segments cover the domain")
}

/// Re-runs the range check on an assembled function. Construction and
/// complement/combination preserve the range, so this matters mainly for
/// auditing degree ≥ 3 functions, whose construction check is sampled.
pub fn pw_range_check(f: &PiecewiseFn) -> Result<(), RangeViolation> {
    for (i, seg) in f.segments.iter().enumerate() {
        if let Some(v) = segment_violation(seg, i) {
            return Err(v);
        }
    }
    Ok(())
}

/// Pointwise complement: every piece becomes `1 - p`. An involution; no
/// range check is needed since `w ∈ [0, 1]` iff `1 - w ∈ [0, 1]`.
pub fn pw_complement(f: &PiecewiseFn) -> PiecewiseFn {
    PiecewiseFn {
        name: format!("!{}", f.name),
        segments: f
            .segments
            .iter()
            .map(|seg| PolySegment {
                lo: seg.lo.clone(),
                hi: seg.hi.clone(),
                lo_closed: seg.lo_closed,
                poly: seg.poly.complement(),
            })
            .collect(),
    }
}

/// Applies a connective pointwise to two membership functions on one
/// domain, treating them as independent propositions; a formula in which
/// one function appears twice must go through [`pw_from_formula`], which
/// shares the repeated proposition.
///
/// The result's breakpoints are the union of the operands' breakpoints; on
/// each refined interval the result polynomial is the closed form of the two
/// operand polynomials in force there. Interior breakpoint ownership is
/// decided by exact value: the side whose polynomial reproduces the combined
/// value at the cut owns it. Both sides agree for continuous operands; when
/// both operands jump at one cut with opposite ownership, neither side may
/// match and the combination fails with [`PwError::InconsistentBreakpoint`].
/// Values stay in `[0, 1]` pointwise (the closed forms map the unit square
/// into the unit interval), so no range re-check is run.
pub fn pw_combine(
    c: WeightConnective,
    f: &PiecewiseFn,
    g: &PiecewiseFn,
) -> Result<PiecewiseFn, PwError> {
    if f.domain() != g.domain() {
        return Err(PwError::DomainMismatch);
    }
    let mut cuts = f.breakpoints();
    cuts.extend(g.breakpoints());
    cuts.sort();
    cuts.dedup();
    let two = Rational::from_integer(BigInt::from(2));
    let mut polys: Vec<Poly1> = Vec::with_capacity(cuts.len() - 1);
    for w in cuts.windows(2) {
        let mid = (&w[0] + &w[1]) / &two;
        polys.push(combine_polys(c, f.poly_at(&mid), g.poly_at(&mid)));
    }
    let mut segments: Vec<PolySegment> = Vec::with_capacity(polys.len());
    for (k, poly) in polys.iter().enumerate() {
        let lo = cuts[k].clone();
        let lo_closed = if k == 0 {
            true
        } else {
            let fv = pw_eval(f, &lo).expect("cut lies inside the domain");
            let gv = pw_eval(g, &lo).expect("cut lies inside the domain");
            let v = connective_value(c, &fv, &gv);
            if v == poly.eval(&lo) {
                true
            } else if v == polys[k - 1].eval(&lo) {
                false
            } else {
                return Err(PwError::InconsistentBreakpoint { at: lo });
            }
        };
        segments.push(PolySegment {
            lo,
            hi: cuts[k + 1].clone(),
            lo_closed,
            poly: poly.clone(),
        });
    }
    Ok(PiecewiseFn {
        name: combined_name(c, &f.name, &g.name),
        segments: merge_segments(segments),
    })
}

/// Substitutes one membership polynomial per formula variable into a
/// multilinear weight polynomial. `pieces[i]` stands for `vars[i]`.
fn substitute(p: &MultilinearPoly, vars: &[Variable], pieces: &[&Poly1]) -> Poly1 {
    let mut acc = Poly1::new(alloc::vec![Rational::zero()]);
    for (monomial, coeff) in p.terms() {
        let mut term = Poly1::new(alloc::vec![coeff.clone()]);
        for v in monomial {
            let i = vars
                .iter()
                .position(|u| u == v)
                .expect("monomial variables come from the formula");
            term = term.mul(pieces[i]);
        }
        acc = acc.add(&term);
    }
    acc
}

/// Evaluates a multilinear weight polynomial at raw rational values,
/// `values[i]` standing for `vars[i]`.
fn multilinear_value(p: &MultilinearPoly, vars: &[Variable], values: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (monomial, coeff) in p.terms() {
        let mut term = coeff.clone();
        for v in monomial {
            let i = vars
                .iter()
                .position(|u| u == v)
                .expect("monomial variables come from the formula");
            term *= &values[i];
        }
        acc += term;
    }
    acc
}

/// Evaluates a formula over named membership functions, all on one domain.
///
/// Each *distinct* function is one proposition: the formula's multilinear
/// weight polynomial is computed once, then each function's in-force
/// polynomial is substituted into it per refined interval. A repeated name
/// is therefore shared, not treated as an independent operand — `T | !T` is
/// the constant-1 function for every membership function `T` — while on
/// distinct names the result coincides with folding [`pw_complement`] and
/// [`pw_combine`] over the formula. Interior breakpoint ownership follows
/// the same exact-value rule as [`pw_combine`].
pub fn pw_from_formula(
    f: &Formula,
    functions: &BTreeMap<String, PiecewiseFn>,
) -> Result<PiecewiseFn, PwError> {
    let vars: Vec<Variable> = f.variables().into_iter().collect();
    let mut bound: Vec<&PiecewiseFn> = Vec::with_capacity(vars.len());
    for v in &vars {
        let g = functions
            .get(v.name())
            .ok_or_else(|| PwError::UnknownFunction(v.name().to_string()))?;
        bound.push(g);
    }
    let first = bound.first().expect("formulas always contain a variable");
    if bound.iter().any(|g| g.domain() != first.domain()) {
        return Err(PwError::DomainMismatch);
    }
    let poly = multilinear_of(f)?;

    let mut cuts: Vec<Rational> = Vec::new();
    for g in &bound {
        cuts.extend(g.breakpoints());
    }
    cuts.sort();
    cuts.dedup();
    let two = Rational::from_integer(BigInt::from(2));
    let mut polys: Vec<Poly1> = Vec::with_capacity(cuts.len() - 1);
    for w in cuts.windows(2) {
        let mid = (&w[0] + &w[1]) / &two;
        let pieces: Vec<&Poly1> = bound.iter().map(|g| g.poly_at(&mid)).collect();
        polys.push(substitute(&poly, &vars, &pieces));
    }
    let mut segments: Vec<PolySegment> = Vec::with_capacity(polys.len());
    for (k, piece) in polys.iter().enumerate() {
        let lo = cuts[k].clone();
        let lo_closed = if k == 0 {
            true
        } else {
            let values: Vec<Rational> = bound
                .iter()
                .map(|g| pw_eval(g, &lo).expect("cut lies inside the domain"))
                .collect();
            let v = multilinear_value(&poly, &vars, &values);
            if v == piece.eval(&lo) {
                true
            } else if v == polys[k - 1].eval(&lo) {
                false
            } else {
                return Err(PwError::InconsistentBreakpoint { at: lo });
            }
        };
        segments.push(PolySegment {
            lo,
            hi: cuts[k + 1].clone(),
            lo_closed,
            poly: piece.clone(),
        });
    }
    Ok(PiecewiseFn {
        name: format_formula(f),
        segments: merge_segments(segments),
    })
}

/// Evaluates a function on `n ≥ 2` evenly spaced points covering the domain,
/// endpoints included: `x_i = a + (b - a) · i / (n - 1)`.
pub fn pw_sample(f: &PiecewiseFn, n: usize) -> Vec<(Rational, Rational)> {
    assert!(n >= 2, "need at least the two domain endpoints");
    let (a, b) = f.domain();
    let span = b - a;
    let denom = BigInt::from(n - 1);
    (0..n)
        .map(|i| {
            let x = a + &span * Rational::new(BigInt::from(i), denom.clone());
            let value = pw_eval(f, &x).expect("sample points lie inside the domain");
            (x, value)
        })
        .collect()
}
