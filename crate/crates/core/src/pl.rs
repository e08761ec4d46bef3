//! Piecewise-linear functions on the unit interval and the circle, their
//! extrema sequences and critical sets, and monotone reparametrizations.
//!
//! The circle is `R/Z` parametrized by `[0, 1)`, with `0` as the base point
//! from which extrema are read off. Circle reparametrizations are stored as
//! lifts `F : [0,1] -> R` with `F(1) = F(0) + 1`.

use crate::error::{Error, Result};
use crate::num::{mod1, rat_int, Rat};
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomainKind {
    Interval,
    Circle,
}

impl DomainKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DomainKind::Interval => "interval",
            DomainKind::Circle => "circle",
        }
    }
}

impl std::fmt::Display for DomainKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for DomainKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "interval" => Ok(DomainKind::Interval),
            "circle" => Ok(DomainKind::Circle),
            other => Err(Error::Parse(format!("unknown domain `{other}`"))),
        }
    }
}

fn check_domain(expected: DomainKind, got: DomainKind) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DomainMismatch { expected: expected.as_str(), got: got.as_str() })
    }
}

/// Affine interpolation of `(x0, y0)-(x1, y1)` at `t`.
fn interp(x0: &Rat, y0: &Rat, x1: &Rat, y1: &Rat, t: &Rat) -> Rat {
    y0 + (t - x0) * (y1 - y0) / (x1 - x0)
}

/// A piecewise-linear function given by breakpoints `t_0 = 0 < t_1 < ...`
/// and their values; affine in between. On the circle the final segment
/// wraps from the last breakpoint back to `t_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PLFunction {
    domain: DomainKind,
    breakpoints: Vec<Rat>,
    values: Vec<Rat>,
}

impl PLFunction {
    pub fn new(domain: DomainKind, breakpoints: Vec<Rat>, values: Vec<Rat>) -> Result<Self> {
        let invalid = |msg: &str| Err(Error::InvalidFunction(msg.to_string()));
        if breakpoints.is_empty() {
            return invalid("at least one breakpoint is required");
        }
        if breakpoints.len() != values.len() {
            return invalid("breakpoints and values must have equal length");
        }
        if !breakpoints[0].is_zero() {
            return invalid("first breakpoint must be 0");
        }
        if !breakpoints.windows(2).all(|w| w[0] < w[1]) {
            return invalid("breakpoints must be strictly increasing");
        }
        let last = breakpoints.last().unwrap();
        match domain {
            DomainKind::Interval => {
                if breakpoints.len() < 2 || *last != rat_int(1) {
                    return invalid("interval functions must end with a breakpoint at 1");
                }
            }
            DomainKind::Circle => {
                if *last >= rat_int(1) {
                    return invalid("circle breakpoints must lie in [0, 1)");
                }
            }
        }
        Ok(PLFunction { domain, breakpoints, values })
    }

    pub fn constant(domain: DomainKind, c: Rat) -> Self {
        match domain {
            DomainKind::Interval => PLFunction {
                domain,
                breakpoints: vec![rat_int(0), rat_int(1)],
                values: vec![c.clone(), c],
            },
            DomainKind::Circle => {
                PLFunction { domain, breakpoints: vec![rat_int(0)], values: vec![c] }
            }
        }
    }

    pub fn domain(&self) -> DomainKind {
        self.domain
    }

    pub fn breakpoints(&self) -> &[Rat] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn is_constant(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }

    /// The constant value, if the function is constant.
    pub fn constant_value(&self) -> Option<&Rat> {
        self.is_constant().then(|| &self.values[0])
    }

    /// Evaluates at `t`. Circle parameters are taken mod 1; interval
    /// parameters outside `[0, 1]` clamp to the boundary values.
    pub fn eval(&self, t: &Rat) -> Rat {
        let t = match self.domain {
            DomainKind::Circle => mod1(t),
            DomainKind::Interval => {
                if *t <= rat_int(0) {
                    return self.values[0].clone();
                }
                if *t >= rat_int(1) {
                    return self.values.last().unwrap().clone();
                }
                t.clone()
            }
        };
        let i = self.breakpoints.partition_point(|b| *b <= t);
        if i == self.breakpoints.len() {
            // circle wrap segment
            let last = self.breakpoints.len() - 1;
            return interp(
                &self.breakpoints[last],
                &self.values[last],
                &rat_int(1),
                &self.values[0],
                &t,
            );
        }
        if self.breakpoints[i - 1] == t {
            return self.values[i - 1].clone();
        }
        interp(&self.breakpoints[i - 1], &self.values[i - 1], &self.breakpoints[i], &self.values[i], &t)
    }

    /// Exact supremum of `|f - g|` over a shared domain.
    pub fn sup_abs_diff(&self, other: &PLFunction) -> Result<Rat> {
        check_domain(self.domain, other.domain)?;
        let params: BTreeSet<&Rat> = self.breakpoints.iter().chain(other.breakpoints.iter()).collect();
        let mut best = rat_int(0);
        for t in params {
            let d = (self.eval(t) - other.eval(t)).abs();
            if d > best {
                best = d;
            }
        }
        Ok(best)
    }

    /// Pre-composition `f . phi`. The result's breakpoints are the union of
    /// `phi`'s breakpoints with the `phi`-preimages of `f`'s breakpoints, so
    /// the composite is exactly piecewise linear on them.
    pub fn compose(&self, phi: &Reparametrization) -> Result<PLFunction> {
        check_domain(self.domain, phi.domain)?;
        let mut params: BTreeSet<Rat> = phi.breakpoints.iter().cloned().collect();
        params.insert(rat_int(0));
        let wrap = self.domain == DomainKind::Circle;
        for (s0, u0, s1, u1) in phi.segments() {
            if u0 == u1 {
                continue;
            }
            for b in &self.breakpoints {
                // Solve phi(t) = b (+ k on the circle lift) within the segment.
                let mut k = if wrap { (&u0 - b).ceil().to_integer() } else { num_bigint::BigInt::from(0) };
                let k_max = if wrap { (&u1 - b).floor().to_integer() } else { num_bigint::BigInt::from(0) };
                while k <= k_max {
                    let x = b + Rat::from_integer(k.clone());
                    if x >= u0 && x <= u1 {
                        let t = interp(&u0, &s0, &u1, &s1, &x);
                        if t < rat_int(1) || self.domain == DomainKind::Interval {
                            params.insert(t);
                        }
                    }
                    k += 1;
                }
            }
        }
        let breakpoints: Vec<Rat> = params.into_iter().collect();
        let values: Vec<Rat> = breakpoints.iter().map(|t| self.eval(&phi.apply(t))).collect();
        PLFunction::new(self.domain, breakpoints, values)
    }

    /// Extremal values `Val(f)` with the aligned critical sets `Seq(f)`.
    ///
    /// Plateaus merge into one critical set. On the circle the sequence
    /// starts at the first minimum read from the base point; if an extremal
    /// plateau straddles the base point the reading is re-anchored to the
    /// midpoint of the longest monotone arc.
    pub fn extrema(&self) -> Result<(ExtremaSequence, CriticalSets)> {
        let runs = self.runs()?;
        match self.domain {
            DomainKind::Interval => self.extrema_interval(runs),
            DomainKind::Circle => self.extrema_circle(runs),
        }
    }

    /// Maximal runs of equal consecutive values; on the circle the first and
    /// last runs merge across the wrap when they agree (the merged run's end
    /// lives in `(1, 2)`).
    fn runs(&self) -> Result<Vec<Run>> {
        let mut runs: Vec<Run> = Vec::new();
        for (b, v) in self.breakpoints.iter().zip(&self.values) {
            match runs.last_mut() {
                Some(last) if last.value == *v => last.end = b.clone(),
                _ => runs.push(Run { start: b.clone(), end: b.clone(), value: v.clone() }),
            }
        }
        if self.domain == DomainKind::Circle && runs.len() > 1 && runs[0].value == runs.last().unwrap().value {
            let first = runs.remove(0);
            let last = runs.last_mut().unwrap();
            last.end = first.end + rat_int(1);
        }
        if runs.len() <= 1 {
            return Err(Error::ConstantFunction);
        }
        Ok(runs)
    }

    fn extrema_interval(&self, runs: Vec<Run>) -> Result<(ExtremaSequence, CriticalSets)> {
        let m = runs.len();
        let mut arcs = Vec::new();
        let mut values = Vec::new();
        let mut kinds = Vec::new();
        for (j, run) in runs.iter().enumerate() {
            let below_prev = j > 0 && runs[j - 1].value > run.value;
            let below_next = j + 1 < m && runs[j + 1].value > run.value;
            let kind = if j == 0 {
                Some(if below_next { ExtremumKind::Min } else { ExtremumKind::Max })
            } else if j == m - 1 {
                Some(if below_prev { ExtremumKind::Min } else { ExtremumKind::Max })
            } else if below_prev && below_next {
                Some(ExtremumKind::Min)
            } else if !below_prev && !below_next {
                Some(ExtremumKind::Max)
            } else {
                None
            };
            if let Some(kind) = kind {
                values.push(run.value.clone());
                arcs.push(CriticalArc { start: run.start.clone(), end: run.end.clone() });
                kinds.push(kind);
            }
        }
        let starts_with_min = kinds[0] == ExtremumKind::Min;
        let seq = ExtremaSequence::new(DomainKind::Interval, values, starts_with_min)?;
        Ok((seq, CriticalSets { arcs }))
    }

    fn extrema_circle(&self, runs: Vec<Run>) -> Result<(ExtremaSequence, CriticalSets)> {
        let m = runs.len();
        let mut extremal: Vec<(Run, ExtremumKind)> = Vec::new();
        for (j, run) in runs.iter().enumerate() {
            let prev = &runs[(j + m - 1) % m];
            let next = &runs[(j + 1) % m];
            if prev.value < run.value && next.value < run.value {
                extremal.push((run.clone(), ExtremumKind::Max));
            } else if prev.value > run.value && next.value > run.value {
                extremal.push((run.clone(), ExtremumKind::Min));
            }
        }
        extremal.sort_by(|a, b| a.0.start.cmp(&b.0.start));

        // Re-anchor only when the base point is strictly inside an extremal
        // plateau, i.e. a merged wrap run with end > 1.
        let straddled = extremal.iter().any(|(r, _)| r.end > rat_int(1));
        let anchor = if straddled { self.longest_arc_midpoint(&extremal) } else { rat_int(0) };
        let mut order: Vec<usize> = (0..extremal.len()).collect();
        if !anchor.is_zero() {
            order.sort_by_key(|&i| mod1(&(&extremal[i].0.start - &anchor)));
        }
        if extremal[order[0]].1 == ExtremumKind::Max {
            order.rotate_left(1);
        }

        let values: Vec<Rat> = order.iter().map(|&i| extremal[i].0.value.clone()).collect();
        let arcs: Vec<CriticalArc> = order
            .iter()
            .map(|&i| CriticalArc { start: extremal[i].0.start.clone(), end: extremal[i].0.end.clone() })
            .collect();
        let seq = ExtremaSequence::new(DomainKind::Circle, values, true)?;
        Ok((seq, CriticalSets { arcs }))
    }

    /// Midpoint of the longest monotone arc between consecutive extremal
    /// runs (ties broken by reading order).
    fn longest_arc_midpoint(&self, extremal: &[(Run, ExtremumKind)]) -> Rat {
        let m = extremal.len();
        let mut best: Option<(Rat, Rat)> = None; // (length, midpoint)
        for j in 0..m {
            let gap_start = mod1(&extremal[j].0.end);
            let len = mod1(&(&extremal[(j + 1) % m].0.start - &extremal[j].0.end));
            let mid = mod1(&(&gap_start + &len / rat_int(2)));
            if best.as_ref().is_none_or(|(l, _)| len > *l) {
                best = Some((len, mid));
            }
        }
        best.expect("non-constant function has monotone arcs").1
    }
}

#[derive(Debug, Clone)]
struct Run {
    start: Rat,
    end: Rat,
    value: Rat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremumKind {
    Min,
    Max,
}

/// The alternating sequence of extremal values.
///
/// Circle sequences always start with their first minimum read from the base
/// point and have even length `2n`. Interval sequences keep the left-to-right
/// order and may start or end with either kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremaSequence {
    domain: DomainKind,
    values: Vec<Rat>,
    starts_with_min: bool,
}

impl ExtremaSequence {
    pub fn new(domain: DomainKind, values: Vec<Rat>, starts_with_min: bool) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidFunction(msg));
        if values.is_empty() {
            return invalid("extrema sequence must be non-empty".into());
        }
        if domain == DomainKind::Circle {
            if values.len() % 2 != 0 {
                return invalid("circle extrema sequences have even length".into());
            }
            if !starts_with_min {
                return invalid("circle extrema sequences start with a minimum".into());
            }
        }
        for i in 0..values.len() {
            let min_slot = (i % 2 == 0) == starts_with_min;
            let check = |neighbor: &Rat| if min_slot { values[i] < *neighbor } else { values[i] > *neighbor };
            let next = if i + 1 < values.len() {
                Some(&values[i + 1])
            } else if domain == DomainKind::Circle {
                Some(&values[0])
            } else {
                None
            };
            if let Some(next) = next {
                if !check(next) {
                    return invalid(format!("extrema do not strictly alternate at position {i}"));
                }
            }
        }
        Ok(ExtremaSequence { domain, values, starts_with_min })
    }

    pub fn domain(&self) -> DomainKind {
        self.domain
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn starts_with_min(&self) -> bool {
        self.starts_with_min
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn kind(&self, i: usize) -> ExtremumKind {
        if (i % 2 == 0) == self.starts_with_min {
            ExtremumKind::Min
        } else {
            ExtremumKind::Max
        }
    }

    /// Number of (min, max) pairs; circle sequences only.
    pub fn pair_count(&self) -> usize {
        debug_assert_eq!(self.domain, DomainKind::Circle);
        self.values.len() / 2
    }

    /// The `(m_i, M_i)` pairs of a circle sequence.
    pub fn pairs(&self) -> Vec<(&Rat, &Rat)> {
        debug_assert_eq!(self.domain, DomainKind::Circle);
        self.values.chunks(2).map(|c| (&c[0], &c[1])).collect()
    }

    /// Rotation by `shift` pairs: element `i` of the result is element
    /// `i + shift` (cyclically) of `self`.
    pub fn rotate_pairs(&self, shift: usize) -> ExtremaSequence {
        debug_assert_eq!(self.domain, DomainKind::Circle);
        let len = self.values.len();
        let values = (0..len).map(|i| self.values[(i + 2 * shift) % len].clone()).collect();
        ExtremaSequence { domain: self.domain, values, starts_with_min: true }
    }
}

/// Lexicographically minimal rotation over the cyclic action on the
/// `(m_i, M_i)` pairs; the canonical representative of the cyclic class.
pub fn normalize_cyclic(seq: &ExtremaSequence) -> ExtremaSequence {
    debug_assert_eq!(seq.domain(), DomainKind::Circle);
    let n = seq.pair_count();
    (0..n).map(|s| seq.rotate_pairs(s)).min_by(|a, b| a.values.cmp(&b.values)).expect("n >= 1")
}

/// A maximal connected component of the preimage of one extremal value,
/// as a closed parameter arc. On the circle `end` may exceed 1 when the
/// arc wraps; `start` always lies in `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalArc {
    pub start: Rat,
    pub end: Rat,
}

impl CriticalArc {
    pub fn is_point(&self) -> bool {
        self.start == self.end
    }

    pub fn contains_mod1(&self, t: &Rat) -> bool {
        let t = mod1(t);
        (t >= self.start && t <= self.end) || (&t + rat_int(1)) <= self.end
    }
}

/// Critical sets aligned index-by-index with the extrema sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalSets {
    pub arcs: Vec<CriticalArc>,
}

/// A monotone degree-one PL self-map of the domain: an element of the
/// closure of the orientation-preserving homeomorphisms, so flat segments
/// are allowed. Interval maps fix both endpoints; circle maps are stored
/// through a non-decreasing lift with `F(1) = F(0) + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reparametrization {
    domain: DomainKind,
    breakpoints: Vec<Rat>,
    values: Vec<Rat>,
}

impl Reparametrization {
    pub fn new_interval(breakpoints: Vec<Rat>, values: Vec<Rat>) -> Result<Self> {
        let invalid = |msg: &str| Err(Error::InvalidReparametrization(msg.to_string()));
        if breakpoints.len() != values.len() || breakpoints.len() < 2 {
            return invalid("need matching breakpoint/value lists of length >= 2");
        }
        if breakpoints[0] != rat_int(0) || *breakpoints.last().unwrap() != rat_int(1) {
            return invalid("interval maps are defined on [0, 1]");
        }
        if !breakpoints.windows(2).all(|w| w[0] < w[1]) {
            return invalid("breakpoints must be strictly increasing");
        }
        if values[0] != rat_int(0) || *values.last().unwrap() != rat_int(1) {
            return invalid("interval maps must fix the endpoints");
        }
        if !values.windows(2).all(|w| w[0] <= w[1]) {
            return invalid("map must be monotone non-decreasing");
        }
        Ok(Reparametrization { domain: DomainKind::Interval, breakpoints, values })
    }

    /// `values` are lift values at the breakpoints; the lift continues to
    /// `values[0] + 1` at parameter 1.
    pub fn new_circle(breakpoints: Vec<Rat>, values: Vec<Rat>) -> Result<Self> {
        let invalid = |msg: &str| Err(Error::InvalidReparametrization(msg.to_string()));
        if breakpoints.len() != values.len() || breakpoints.is_empty() {
            return invalid("need matching non-empty breakpoint/value lists");
        }
        if breakpoints[0] != rat_int(0) {
            return invalid("first breakpoint must be 0");
        }
        if !breakpoints.windows(2).all(|w| w[0] < w[1]) || *breakpoints.last().unwrap() >= rat_int(1) {
            return invalid("breakpoints must be strictly increasing within [0, 1)");
        }
        if !values.windows(2).all(|w| w[0] <= w[1]) {
            return invalid("lift must be monotone non-decreasing");
        }
        if *values.last().unwrap() > &values[0] + rat_int(1) {
            return invalid("lift must not increase by more than 1 over a full turn");
        }
        Ok(Reparametrization { domain: DomainKind::Circle, breakpoints, values })
    }

    pub fn identity(domain: DomainKind) -> Self {
        match domain {
            DomainKind::Interval => Reparametrization {
                domain,
                breakpoints: vec![rat_int(0), rat_int(1)],
                values: vec![rat_int(0), rat_int(1)],
            },
            DomainKind::Circle => {
                Reparametrization { domain, breakpoints: vec![rat_int(0)], values: vec![rat_int(0)] }
            }
        }
    }

    /// The circle rotation `t -> t + r`.
    pub fn rotation(r: &Rat) -> Self {
        Reparametrization {
            domain: DomainKind::Circle,
            breakpoints: vec![rat_int(0)],
            values: vec![mod1(r)],
        }
    }

    pub fn domain(&self) -> DomainKind {
        self.domain
    }

    pub fn breakpoints(&self) -> &[Rat] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    /// Shifts every lift value by an integer; the same circle map.
    pub fn with_lift_offset(mut self, k: i64) -> Self {
        debug_assert_eq!(self.domain, DomainKind::Circle);
        for v in &mut self.values {
            *v += rat_int(k);
        }
        self
    }

    fn segments(&self) -> Vec<(Rat, Rat, Rat, Rat)> {
        let mut segs: Vec<(Rat, Rat, Rat, Rat)> = self
            .breakpoints
            .windows(2)
            .zip(self.values.windows(2))
            .map(|(t, v)| (t[0].clone(), v[0].clone(), t[1].clone(), v[1].clone()))
            .collect();
        if self.domain == DomainKind::Circle {
            segs.push((
                self.breakpoints.last().unwrap().clone(),
                self.values.last().unwrap().clone(),
                rat_int(1),
                &self.values[0] + rat_int(1),
            ));
        }
        segs
    }

    /// Lift value at `t` for any real `t` (degree-one extension).
    pub fn eval_lift(&self, t: &Rat) -> Rat {
        debug_assert_eq!(self.domain, DomainKind::Circle);
        let frac = mod1(t);
        let whole = t - &frac;
        let i = self.breakpoints.partition_point(|b| *b <= frac);
        let v = if i == self.breakpoints.len() {
            let last = self.breakpoints.len() - 1;
            interp(
                &self.breakpoints[last],
                &self.values[last],
                &rat_int(1),
                &(&self.values[0] + rat_int(1)),
                &frac,
            )
        } else if self.breakpoints[i - 1] == frac {
            self.values[i - 1].clone()
        } else {
            interp(&self.breakpoints[i - 1], &self.values[i - 1], &self.breakpoints[i], &self.values[i], &frac)
        };
        v + whole
    }

    /// The mapped parameter: interval maps evaluate directly, circle maps
    /// through the lift (the caller reduces mod 1 as needed).
    pub fn apply(&self, t: &Rat) -> Rat {
        match self.domain {
            DomainKind::Circle => self.eval_lift(t),
            DomainKind::Interval => {
                let t = t.clone().max(rat_int(0)).min(rat_int(1));
                let i = self.breakpoints.partition_point(|b| *b <= t);
                if i == self.breakpoints.len() {
                    return self.values.last().unwrap().clone();
                }
                if self.breakpoints[i - 1] == t {
                    return self.values[i - 1].clone();
                }
                interp(&self.breakpoints[i - 1], &self.values[i - 1], &self.breakpoints[i], &self.values[i], &t)
            }
        }
    }

    /// Composite `self . other` (apply `other` first).
    pub fn compose(&self, other: &Reparametrization) -> Result<Reparametrization> {
        check_domain(self.domain, other.domain)?;
        let mut params: BTreeSet<Rat> = other.breakpoints.iter().cloned().collect();
        let wrap = self.domain == DomainKind::Circle;
        for (s0, u0, s1, u1) in other.segments() {
            if u0 == u1 {
                continue;
            }
            for b in &self.breakpoints {
                let mut k = if wrap { (&u0 - b).ceil().to_integer() } else { num_bigint::BigInt::from(0) };
                let k_max = if wrap { (&u1 - b).floor().to_integer() } else { num_bigint::BigInt::from(0) };
                while k <= k_max {
                    let x = b + Rat::from_integer(k.clone());
                    if x >= u0 && x <= u1 {
                        let t = interp(&u0, &s0, &u1, &s1, &x);
                        if t < rat_int(1) || self.domain == DomainKind::Interval {
                            params.insert(t);
                        }
                    }
                    k += 1;
                }
            }
        }
        let breakpoints: Vec<Rat> = params.into_iter().collect();
        let values: Vec<Rat> = breakpoints.iter().map(|t| self.apply(&other.apply(t))).collect();
        match self.domain {
            DomainKind::Interval => Reparametrization::new_interval(breakpoints, values),
            DomainKind::Circle => Reparametrization::new_circle(breakpoints, values),
        }
    }

    /// True when every segment (including the wrap) has positive slope.
    pub fn is_strictly_increasing(&self) -> bool {
        self.segments().iter().all(|(_, u0, _, u1)| u1 > u0)
    }
}
