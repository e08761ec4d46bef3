//! Path components of the persistence fiber for circle functions.
//!
//! Two non-constant circle functions with the same barcode lie in the same
//! path component exactly when their extrema sequences agree up to a cyclic
//! shift of the (min, max) pairs. Each component carries a canonical
//! representative with its critical points on a regular polygon, an explicit
//! monotone reparametrization onto it, and straight-line lift paths inside
//! the fiber.

use crate::error::{Error, Result};
use crate::num::{rat_int, Rat};
use crate::persistence::{barcode, same_barcode, Barcode};
use crate::pl::{normalize_cyclic, DomainKind, ExtremaSequence, PLFunction, Reparametrization};
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// The cyclic equivalence class of a circle extrema sequence, keyed by its
/// lexicographically minimal rotation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicClass {
    normal_form: ExtremaSequence,
}

impl CyclicClass {
    pub fn of(f: &PLFunction) -> Result<CyclicClass> {
        if f.domain() != DomainKind::Circle {
            return Err(Error::DomainMismatch { expected: "circle", got: f.domain().as_str() });
        }
        let (seq, _) = f.extrema()?;
        Ok(CyclicClass::from_sequence(&seq))
    }

    pub fn from_sequence(seq: &ExtremaSequence) -> CyclicClass {
        CyclicClass { normal_form: normalize_cyclic(seq) }
    }

    pub fn normal_form(&self) -> &ExtremaSequence {
        &self.normal_form
    }

    pub fn pair_count(&self) -> usize {
        self.normal_form.pair_count()
    }
}

/// One path component of the fiber over a circle barcode.
///
/// The constant-function component (over the trivial barcode) is the
/// sentinel with `class = None` and zero pairs.
#[derive(Debug, Clone)]
pub struct FiberComponentCircle {
    barcode: Barcode,
    class: Option<CyclicClass>,
    canonical: PLFunction,
}

impl FiberComponentCircle {
    pub fn from_class(class: CyclicClass) -> Self {
        let canonical = canonical_representative(&class);
        let barcode = barcode(&canonical);
        FiberComponentCircle { barcode, class: Some(class), canonical }
    }

    pub fn constant(c: Rat) -> Self {
        let canonical = PLFunction::constant(DomainKind::Circle, c);
        FiberComponentCircle { barcode: barcode(&canonical), class: None, canonical }
    }

    pub fn barcode(&self) -> &Barcode {
        &self.barcode
    }

    pub fn class(&self) -> Option<&CyclicClass> {
        self.class.as_ref()
    }

    pub fn canonical(&self) -> &PLFunction {
        &self.canonical
    }

    pub fn pair_count(&self) -> usize {
        self.class.as_ref().map_or(0, |c| c.pair_count())
    }

    pub fn is_constant(&self) -> bool {
        self.class.is_none()
    }
}

/// All shifts `s` with `seq = rotate_pairs(target, s)`.
pub fn valid_shifts(seq: &ExtremaSequence, target: &ExtremaSequence) -> Vec<usize> {
    let n = target.pair_count();
    if seq.pair_count() != n {
        return Vec::new();
    }
    (0..n).filter(|&s| *seq == target.rotate_pairs(s)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentMismatch {
    BarcodeMismatch,
    ClassMismatch,
}

impl std::fmt::Display for ComponentMismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ComponentMismatch::BarcodeMismatch => "barcode mismatch",
            ComponentMismatch::ClassMismatch => "cyclic class mismatch",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SameComponent {
    pub same: bool,
    /// Every shift witnessing `Val(g) = pi . Val(f)`; for a symmetric class
    /// this is the whole stabilizer coset, ordered by shift amount.
    pub shifts: Vec<usize>,
    pub reason: Option<ComponentMismatch>,
}

impl SameComponent {
    fn no(reason: ComponentMismatch) -> Self {
        SameComponent { same: false, shifts: Vec::new(), reason: Some(reason) }
    }
}

/// Decides whether two circle functions lie in the same fiber component
/// and returns every witnessing cyclic shift. Exact comparison.
pub fn same_component(f: &PLFunction, g: &PLFunction) -> Result<SameComponent> {
    same_component_within(f, g, &rat_int(0))
}

/// Like [`same_component`] but with value comparisons relaxed to `eps`.
pub fn same_component_within(f: &PLFunction, g: &PLFunction, eps: &Rat) -> Result<SameComponent> {
    for h in [f, g] {
        if h.domain() != DomainKind::Circle {
            return Err(Error::DomainMismatch { expected: "circle", got: h.domain().as_str() });
        }
    }
    match (f.constant_value(), g.constant_value()) {
        (Some(a), Some(b)) => Ok(if (a - b).abs() <= *eps {
            SameComponent { same: true, shifts: Vec::new(), reason: None }
        } else {
            SameComponent::no(ComponentMismatch::BarcodeMismatch)
        }),
        (Some(_), None) | (None, Some(_)) => Ok(SameComponent::no(ComponentMismatch::BarcodeMismatch)),
        (None, None) => {
            if !same_barcode(&barcode(f), &barcode(g), eps) {
                return Ok(SameComponent::no(ComponentMismatch::BarcodeMismatch));
            }
            let (seq_f, _) = f.extrema()?;
            let (seq_g, _) = g.extrema()?;
            let n = seq_f.pair_count();
            let shifts: Vec<usize> = if seq_g.pair_count() != n {
                Vec::new()
            } else {
                (0..n)
                    .filter(|&s| {
                        let rotated = seq_f.rotate_pairs(s);
                        seq_g
                            .values()
                            .iter()
                            .zip(rotated.values())
                            .all(|(x, y)| (x - y).abs() <= *eps)
                    })
                    .collect()
            };
            if shifts.is_empty() {
                Ok(SameComponent::no(ComponentMismatch::ClassMismatch))
            } else {
                Ok(SameComponent { same: true, shifts, reason: None })
            }
        }
    }
}

/// The canonical representative of a class: the 2n critical points sit on
/// the regular 2n-gon (minima at even vertices) and the function is affine
/// on each arc in between.
pub fn canonical_representative(class: &CyclicClass) -> PLFunction {
    let values = class.normal_form.values().to_vec();
    let l = values.len();
    let breakpoints: Vec<Rat> = (0..l).map(|j| Rat::new((j as i64).into(), (l as i64).into())).collect();
    PLFunction::new(DomainKind::Circle, breakpoints, values).expect("polygon representative is valid")
}

/// The monotone map `phi` with `canonical . phi = f` that collapses the
/// i-th critical set of `f` onto critical point `i + shift` of the
/// canonical representative.
///
/// Plateaus of `f` collapse to single parameters, so `phi` is generally
/// non-injective (hence monotone rather than a homeomorphism). The lift is
/// normalized so that `phi(0)` lies in `[0, 1)`.
pub fn reparametrization(f: &PLFunction, class: &CyclicClass, shift: usize) -> Result<Reparametrization> {
    if f.domain() != DomainKind::Circle {
        return Err(Error::DomainMismatch { expected: "circle", got: f.domain().as_str() });
    }
    let (seq, sets) = f.extrema()?;
    let target = class.normal_form();
    if shift >= class.pair_count() || seq != target.rotate_pairs(shift) {
        return Err(Error::ClassMismatch);
    }
    let values = seq.values();
    let l = values.len();
    let one = rat_int(1);

    // Critical arcs in reading order, lifted to an increasing window
    // [a_0, a_0 + 1).
    let a0 = sets.arcs[0].start.clone();
    let lifted: Vec<(Rat, Rat)> = sets
        .arcs
        .iter()
        .map(|arc| {
            let s = if arc.start >= a0 { arc.start.clone() } else { &arc.start + &one };
            let e = &s + (&arc.end - &arc.start);
            (s, e)
        })
        .collect();
    let target_point = |j: usize| Rat::new(((j + 2 * shift) as i64).into(), (l as i64).into());

    // Piecewise lift: flat on each critical arc, affine in the value of f
    // on each monotone arc in between.
    let mut pts: Vec<(Rat, Rat)> = Vec::new();
    for j in 0..l {
        let (aj, bj) = &lifted[j];
        let pj = target_point(j);
        pts.push((aj.clone(), pj.clone()));
        if bj > aj {
            pts.push((bj.clone(), pj.clone()));
        }
        let next_a = if j + 1 < l { lifted[j + 1].0.clone() } else { &lifted[0].0 + &one };
        let next_p = target_point(j + 1);
        let vj = &values[j];
        let next_v = &values[(j + 1) % l];
        let scale = (&next_p - &pj) / (next_v - vj);
        for b in f.breakpoints() {
            let mut k = (bj - b).ceil().to_integer();
            let k_max = (&next_a - b).floor().to_integer();
            while k <= k_max {
                let x = b + Rat::from_integer(k.clone());
                if x > *bj && x < next_a {
                    let y = &pj + (f.eval(&x) - vj) * &scale;
                    pts.push((x, y));
                }
                k += 1;
            }
        }
    }
    pts.sort_by(|a, b| a.0.cmp(&b.0));

    // The representation needs a breakpoint at parameter 0, i.e. at the
    // unique integer inside the walk window.
    let u0 = if a0.is_zero() { rat_int(0) } else { one.clone() };
    if pts.iter().all(|(u, _)| *u != u0) {
        let i = pts.partition_point(|(u, _)| *u < u0);
        debug_assert!(i > 0 && i < pts.len());
        let (ua, va) = pts[i - 1].clone();
        let (ub, vb) = pts[i].clone();
        let v = &va + (&u0 - &ua) * (&vb - &va) / (&ub - &ua);
        pts.insert(i, (u0.clone(), v));
    }

    let mut map: BTreeMap<Rat, Rat> = BTreeMap::new();
    for (u, v) in pts {
        let whole = u.floor();
        map.insert(&u - &whole, v - whole);
    }
    let offset = map[&rat_int(0)].floor();
    let breakpoints: Vec<Rat> = map.keys().cloned().collect();
    let lift_values: Vec<Rat> = map.into_values().map(|v| v - &offset).collect();
    Reparametrization::new_circle(breakpoints, lift_values)
}

/// Convex combination of two circle lifts at time `t`.
fn interpolate_lifts(phi: &Reparametrization, psi: &Reparametrization, t: &Rat) -> Result<Reparametrization> {
    let params: BTreeSet<Rat> = phi.breakpoints().iter().chain(psi.breakpoints()).cloned().collect();
    let params: Vec<Rat> = params.into_iter().collect();
    let s = rat_int(1) - t;
    let values: Vec<Rat> = params.iter().map(|u| &s * phi.eval_lift(u) + t * psi.eval_lift(u)).collect();
    Reparametrization::new_circle(params, values)
}

/// A path `f -> g` inside the fiber with `steps + 1` entries: write both as
/// reparametrizations of the shared canonical representative, align the
/// lifts to within half a turn, and interpolate the lifts linearly. Every
/// interpolant is monotone of degree one, so the barcode is constant along
/// the path.
pub fn fiber_path(f: &PLFunction, g: &PLFunction, steps: usize) -> Result<Vec<PLFunction>> {
    let membership = same_component(f, g)?;
    if !membership.same {
        let reason = membership.reason.expect("mismatch carries a reason");
        return Err(Error::NotSameComponent(reason.to_string()));
    }
    let steps = steps.max(1);
    if f.is_constant() {
        return Ok(vec![f.clone(); steps + 1]);
    }

    let class = CyclicClass::of(f)?;
    let canonical = canonical_representative(&class);
    let (seq_f, _) = f.extrema()?;
    let (seq_g, _) = g.extrema()?;
    let shift_f = valid_shifts(&seq_f, class.normal_form())[0];
    let shift_g = valid_shifts(&seq_g, class.normal_form())[0];
    let phi_f = reparametrization(f, &class, shift_f)?;
    let phi_g = reparametrization(g, &class, shift_g)?;

    // Both lifts start in [0, 1); shift psi by the integer that brings the
    // starting values within 1/2 of each other, ties toward the smaller
    // offset.
    let d = phi_f.apply(&rat_int(0)) - phi_g.apply(&rat_int(0));
    let mut best: Option<(Rat, i64)> = None;
    for k in [-1i64, 0, 1] {
        let gap = (&d - rat_int(k)).abs();
        if best.as_ref().is_none_or(|(g0, _)| gap < *g0) {
            best = Some((gap, k));
        }
    }
    let phi_g = phi_g.with_lift_offset(best.unwrap().1);

    let mut path = Vec::with_capacity(steps + 1);
    for j in 0..=steps {
        let t = Rat::new((j as i64).into(), (steps as i64).into());
        let phi_t = interpolate_lifts(&phi_f, &phi_g, &t)?;
        path.push(canonical.compose(&phi_t)?);
    }
    Ok(path)
}

#[derive(Debug, Clone)]
pub struct EnumerateOptions {
    /// Permit barcodes whose 2n derived extremal values are not pairwise
    /// distinct (enumeration may then blow up combinatorially).
    pub allow_repeated_endpoints: bool,
    /// Refuse barcodes with more than this many (min, max) pairs.
    pub max_pairs: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions { allow_repeated_endpoints: false, max_pairs: 10 }
    }
}

/// The shape of a valid circle barcode.
enum CircleShape {
    Trivial(Rat),
    General { b0: Rat, b1: Rat, bounded: Vec<(Rat, Rat)> },
}

fn circle_shape(d: &Barcode) -> Result<CircleShape> {
    let malformed = |msg: String| Err(Error::MalformedBarcode(msg));
    let inf0: Vec<_> = d.infinite_in_degree(0).collect();
    let inf1: Vec<_> = d.infinite_in_degree(1).collect();
    if inf0.len() != 1 || inf1.len() != 1 {
        return malformed("a circle barcode has exactly one infinite bar in each of degrees 0 and 1".into());
    }
    if d.in_degree(2).next().is_some() || d.bounded_in_degree(1).next().is_some() {
        return malformed("a circle barcode has no degree-2 bars and no bounded degree-1 bars".into());
    }
    let b0 = inf0[0].birth.clone();
    let b1 = inf1[0].birth.clone();
    let bounded: Vec<(Rat, Rat)> = d
        .bounded_in_degree(0)
        .map(|bar| (bar.birth.clone(), bar.death.clone().unwrap()))
        .collect();
    if b0 == b1 {
        if !bounded.is_empty() {
            return malformed("the trivial barcode has no bounded bars".into());
        }
        return Ok(CircleShape::Trivial(b0));
    }
    if b0 > b1 {
        return malformed("the degree-0 infinite bar must be born before the degree-1 one".into());
    }
    for (birth, death) in &bounded {
        if birth >= death {
            return malformed("bounded bars must have positive length".into());
        }
        if *birth < b0 || *death > b1 {
            return malformed("bounded endpoints must lie between the two infinite births".into());
        }
    }
    Ok(CircleShape::General { b0, b1, bounded })
}

fn permute<T: Clone>(items: &mut Vec<T>, k: usize, out: &mut Vec<Vec<T>>) {
    if k + 1 >= items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Enumerates the fiber components over `d` by brute force: interleave the
/// derived minima and maxima multisets into alternating cyclic arrangements,
/// keep the arrangements whose canonical representative reproduces `d`
/// exactly, and deduplicate by cyclic normal form. An empty result means no
/// arrangement realizes `d`.
pub fn enumerate_components(d: &Barcode, opts: &EnumerateOptions) -> Result<Vec<FiberComponentCircle>> {
    let (b0, b1, bounded) = match circle_shape(d)? {
        CircleShape::Trivial(c) => return Ok(vec![FiberComponentCircle::constant(c)]),
        CircleShape::General { b0, b1, bounded } => (b0, b1, bounded),
    };
    let mut minima: Vec<Rat> = vec![b0];
    minima.extend(bounded.iter().map(|(b, _)| b.clone()));
    let mut maxima: Vec<Rat> = vec![b1];
    maxima.extend(bounded.iter().map(|(_, d)| d.clone()));
    let n = minima.len();

    let all: BTreeSet<&Rat> = minima.iter().chain(maxima.iter()).collect();
    let distinct = all.len() == 2 * n;
    if !distinct && !opts.allow_repeated_endpoints {
        return Err(Error::ComplexityGuard(format!(
            "barcode over {} pairs has repeated endpoint values",
            n
        )));
    }
    if n > opts.max_pairs {
        return Err(Error::ComplexityGuard(format!("{n} pairs exceed the limit of {}", opts.max_pairs)));
    }

    // With distinct values the global minimum can be pinned at slot 0,
    // which enumerates each cyclic arrangement exactly once.
    let mut min_perms = Vec::new();
    permute(&mut minima, if distinct { 1 } else { 0 }, &mut min_perms);
    let mut max_perms = Vec::new();
    permute(&mut maxima, 0, &mut max_perms);

    let mut found: BTreeMap<Vec<Rat>, FiberComponentCircle> = BTreeMap::new();
    for mins in &min_perms {
        for maxs in &max_perms {
            let mut values = Vec::with_capacity(2 * n);
            for (m, mx) in mins.iter().zip(maxs) {
                values.push(m.clone());
                values.push(mx.clone());
            }
            let Ok(seq) = ExtremaSequence::new(DomainKind::Circle, values, true) else {
                continue; // not strictly alternating
            };
            let class = CyclicClass::from_sequence(&seq);
            let key = class.normal_form().values().to_vec();
            if found.contains_key(&key) {
                continue;
            }
            let component = FiberComponentCircle::from_class(class);
            if component.barcode() == d {
                found.insert(key, component);
            }
        }
    }
    Ok(found.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{mod1, parse_rat, rat};
    use crate::persistence::{barcode_bruteforce, bottleneck_distance, Bar};

    fn plf(pts: &[(&str, &str)]) -> PLFunction {
        let breakpoints = pts.iter().map(|(t, _)| parse_rat(t).unwrap()).collect();
        let values = pts.iter().map(|(_, v)| parse_rat(v).unwrap()).collect();
        PLFunction::new(DomainKind::Circle, breakpoints, values).unwrap()
    }

    fn seq(values: &[&str]) -> ExtremaSequence {
        let values = values.iter().map(|v| parse_rat(v).unwrap()).collect();
        ExtremaSequence::new(DomainKind::Circle, values, true).unwrap()
    }

    fn two_pair() -> PLFunction {
        plf(&[("0", "0"), ("0.25", "1"), ("0.5", "0.2"), ("0.75", "0.8")])
    }

    #[test]
    fn rotation_stays_in_component() {
        let f = two_pair();
        let g = f.compose(&Reparametrization::rotation(&rat(37, 100))).unwrap();
        let r = same_component(&f, &g).unwrap();
        assert!(r.same);
        assert_eq!(r.shifts, vec![1]);
    }

    #[test]
    fn cyclic_shift_is_witnessed() {
        let f = two_pair();
        let g = plf(&[("0", "0.2"), ("0.25", "0.8"), ("0.5", "0"), ("0.75", "1")]);
        let r = same_component(&f, &g).unwrap();
        assert!(r.same);
        assert_eq!(r.shifts, vec![1]);
    }

    #[test]
    fn same_barcode_different_class() {
        let f = two_pair();
        let g = plf(&[("0", "0"), ("0.25", "0.8"), ("0.5", "0.2"), ("0.75", "1")]);
        assert_eq!(barcode(&f), barcode(&g));
        assert_eq!(barcode_bruteforce(&f, 10_000).unwrap(), barcode_bruteforce(&g, 10_000).unwrap());
        let r = same_component(&f, &g).unwrap();
        assert!(!r.same);
        assert_eq!(r.reason, Some(ComponentMismatch::ClassMismatch));
    }

    #[test]
    fn constants_compare_by_value() {
        let f = PLFunction::constant(DomainKind::Circle, rat_int(2));
        let g = PLFunction::constant(DomainKind::Circle, rat_int(2));
        let h = PLFunction::constant(DomainKind::Circle, rat_int(3));
        assert!(same_component(&f, &g).unwrap().same);
        let r = same_component(&f, &h).unwrap();
        assert!(!r.same);
        assert_eq!(r.reason, Some(ComponentMismatch::BarcodeMismatch));
        assert!(!same_component(&f, &two_pair()).unwrap().same);
    }

    #[test]
    fn canonical_two_gon() {
        let class = CyclicClass::from_sequence(&seq(&["0", "1"]));
        let f = canonical_representative(&class);
        assert_eq!(f.breakpoints(), &[rat_int(0), rat(1, 2)]);
        assert_eq!(f.values(), &[rat_int(0), rat_int(1)]);
    }

    #[test]
    fn canonical_square() {
        let class = CyclicClass::from_sequence(&seq(&["0", "1", "0.2", "0.8"]));
        let f = canonical_representative(&class);
        assert_eq!(f, two_pair());
        assert_eq!(barcode(&f), barcode_bruteforce(&f, 10_000).unwrap());
    }

    #[test]
    fn reparametrization_of_canonical_is_identity() {
        let class = CyclicClass::from_sequence(&seq(&["0", "1", "0.2", "0.8"]));
        let f = canonical_representative(&class);
        let phi = reparametrization(&f, &class, 0).unwrap();
        for i in 0..40 {
            let t = rat(i, 40);
            assert_eq!(phi.apply(&t), t);
        }
        assert!(phi.is_strictly_increasing());
    }

    #[test]
    fn reparametrization_of_polygon_rotation_is_that_rotation() {
        let class = CyclicClass::from_sequence(&seq(&["0", "1", "0.2", "0.8"]));
        let f = canonical_representative(&class);
        let quarter = rat(1, 4);
        let g = f.compose(&Reparametrization::rotation(&quarter)).unwrap();
        let (seq_g, _) = g.extrema().unwrap();
        let shifts = valid_shifts(&seq_g, class.normal_form());
        assert_eq!(shifts, vec![1]);
        let phi = reparametrization(&g, &class, 1).unwrap();
        for i in 0..40 {
            let t = rat(i, 40);
            assert_eq!(phi.apply(&t), &t + &quarter, "at t = {i}/40");
        }
    }

    #[test]
    fn reparametrization_round_trip_with_plateaus() {
        let class = CyclicClass::from_sequence(&seq(&["0", "1", "0.2", "0.8"]));
        let f = canonical_representative(&class);
        // A monotone map flat across the maximum at 1/4 gives g an extremal plateau.
        let psi = Reparametrization::new_circle(
            vec![rat_int(0), rat(1, 5), rat(2, 5), rat(3, 5)],
            vec![rat(1, 10), rat(1, 4), rat(1, 4), rat(7, 10)],
        )
        .unwrap();
        let g = f.compose(&psi).unwrap();
        let (seq_g, _) = g.extrema().unwrap();
        for &s in &valid_shifts(&seq_g, class.normal_form()) {
            let phi = reparametrization(&g, &class, s).unwrap();
            let back = f.compose(&phi).unwrap();
            assert_eq!(back.sup_abs_diff(&g).unwrap(), rat_int(0), "shift {s}");
        }
    }

    #[test]
    fn reparametrization_rejects_wrong_shift() {
        let class = CyclicClass::from_sequence(&seq(&["0", "1", "0.2", "0.8"]));
        let f = canonical_representative(&class);
        assert_eq!(reparametrization(&f, &class, 1).unwrap_err(), Error::ClassMismatch);
    }

    #[test]
    fn stabilizer_of_symmetric_class() {
        let class = CyclicClass::from_sequence(&seq(&["0", "1", "0", "1"]));
        let f = canonical_representative(&class);
        let r = same_component(&f, &f).unwrap();
        assert_eq!(r.shifts, vec![0, 1]);
        // Each stabilizer shift acts as a polygon rotation.
        let phi = reparametrization(&f, &class, 1).unwrap();
        for i in 0..16 {
            let t = rat(i, 16);
            assert_eq!(mod1(&phi.apply(&t)), mod1(&(&t + rat(1, 2))));
        }
    }

    #[test]
    fn fiber_path_constant_for_equal_endpoints() {
        let f = two_pair();
        let path = fiber_path(&f, &f, 4).unwrap();
        assert_eq!(path.len(), 5);
        for g in &path {
            assert_eq!(g.sup_abs_diff(&f).unwrap(), rat_int(0));
        }
    }

    #[test]
    fn fiber_path_of_rotation_is_a_rotation_path() {
        let f = two_pair();
        let r = rat(1, 8);
        let g = f.compose(&Reparametrization::rotation(&r)).unwrap();
        let path = fiber_path(&f, &g, 8).unwrap();
        assert_eq!(path.len(), 9);
        assert_eq!(path[0].sup_abs_diff(&f).unwrap(), rat_int(0));
        assert_eq!(path[8].sup_abs_diff(&g).unwrap(), rat_int(0));
        let d = barcode(&f);
        for (j, h) in path.iter().enumerate() {
            let expect = f.compose(&Reparametrization::rotation(&(&r * rat(j as i64, 8)))).unwrap();
            assert_eq!(h.sup_abs_diff(&expect).unwrap(), rat_int(0), "step {j}");
            assert_eq!(bottleneck_distance(&barcode(h), &d), Some(rat_int(0)));
        }
    }

    #[test]
    fn fiber_path_rejects_different_components() {
        let f = two_pair();
        let g = plf(&[("0", "0"), ("0.25", "0.8"), ("0.5", "0.2"), ("0.75", "1")]);
        assert!(matches!(fiber_path(&f, &g, 4), Err(Error::NotSameComponent(_))));
    }

    #[test]
    fn enumerate_trivial_barcode() {
        let d = Barcode::trivial(DomainKind::Circle, &rat_int(5));
        let comps = enumerate_components(&d, &EnumerateOptions::default()).unwrap();
        assert_eq!(comps.len(), 1);
        assert!(comps[0].is_constant());
        assert_eq!(comps[0].pair_count(), 0);
    }

    #[test]
    fn enumerate_single_pair() {
        let d = Barcode::new(vec![Bar::infinite(0, rat_int(0)), Bar::infinite(1, rat_int(1))]);
        let comps = enumerate_components(&d, &EnumerateOptions::default()).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].class().unwrap().normal_form(), &seq(&["0", "1"]));
    }

    #[test]
    fn enumerate_two_pairs() {
        let d = Barcode::new(vec![
            Bar::infinite(0, rat_int(0)),
            Bar::bounded(0, rat(1, 5), rat(4, 5)),
            Bar::infinite(1, rat_int(1)),
        ]);
        let comps = enumerate_components(&d, &EnumerateOptions::default()).unwrap();
        // Both cyclic interleavings of {0, 0.2} with {0.8, 1} reproduce d.
        assert_eq!(comps.len(), 2);
        for c in &comps {
            assert_eq!(c.barcode(), &d);
            assert_eq!(barcode_bruteforce(c.canonical(), 10_000).unwrap(), d);
        }
        let r = same_component(comps[0].canonical(), comps[1].canonical()).unwrap();
        assert!(!r.same);
    }

    #[test]
    fn enumerate_guards() {
        let d = Barcode::new(vec![
            Bar::infinite(0, rat_int(0)),
            Bar::bounded(0, rat_int(0), rat_int(1)),
            Bar::infinite(1, rat_int(1)),
        ]);
        assert!(matches!(
            enumerate_components(&d, &EnumerateOptions::default()),
            Err(Error::ComplexityGuard(_))
        ));
        let opts = EnumerateOptions { allow_repeated_endpoints: true, max_pairs: 10 };
        let comps = enumerate_components(&d, &opts).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].class().unwrap().normal_form(), &seq(&["0", "1", "0", "1"]));
    }

    #[test]
    fn enumerate_rejects_malformed() {
        let d = Barcode::new(vec![Bar::infinite(0, rat_int(0))]);
        assert!(matches!(enumerate_components(&d, &EnumerateOptions::default()), Err(Error::MalformedBarcode(_))));
        let d = Barcode::new(vec![
            Bar::infinite(0, rat_int(0)),
            Bar::bounded(0, rat(1, 5), rat_int(2)),
            Bar::infinite(1, rat_int(1)),
        ]);
        assert!(matches!(enumerate_components(&d, &EnumerateOptions::default()), Err(Error::MalformedBarcode(_))));
    }
}
