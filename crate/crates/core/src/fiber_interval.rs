//! Path components of the persistence fiber for functions on `[0, 1]`,
//! optionally with prescribed boundary values.
//!
//! Membership uses ordered (non-cyclic) equality of extrema sequences,
//! including whether the boundary starts ascending or descending. Every
//! component deformation-retracts onto a canonical representative with
//! evenly spaced extrema via straight-line interpolation of monotone maps.

use crate::error::{Error, Result};
use crate::num::{rat_int, Rat};
use crate::persistence::{barcode, Barcode};
use crate::pl::{DomainKind, ExtremaSequence, PLFunction, Reparametrization};
use std::collections::{BTreeMap, BTreeSet};

/// Optional prescription of the values at `t = 0` and `t = 1`.
pub type BoundaryValues = (Rat, Rat);

#[derive(Debug, Clone)]
pub struct FiberComponentInterval {
    barcode: Barcode,
    sequence: ExtremaSequence,
    canonical: PLFunction,
    boundary: Option<BoundaryValues>,
}

impl FiberComponentInterval {
    pub fn from_sequence(sequence: ExtremaSequence, boundary: Option<BoundaryValues>) -> Self {
        let canonical = canonical_representative_interval(&sequence);
        FiberComponentInterval { barcode: barcode(&canonical), sequence, canonical, boundary }
    }

    pub fn barcode(&self) -> &Barcode {
        &self.barcode
    }

    pub fn sequence(&self) -> &ExtremaSequence {
        &self.sequence
    }

    pub fn canonical(&self) -> &PLFunction {
        &self.canonical
    }

    pub fn boundary(&self) -> Option<&BoundaryValues> {
        self.boundary.as_ref()
    }
}

fn require_interval(f: &PLFunction) -> Result<()> {
    if f.domain() != DomainKind::Interval {
        return Err(Error::DomainMismatch { expected: "interval", got: f.domain().as_str() });
    }
    Ok(())
}

fn check_boundary(f: &PLFunction, boundary: Option<&BoundaryValues>) -> Result<()> {
    if let Some((b0, b1)) = boundary {
        let (f0, f1) = (f.eval(&rat_int(0)), f.eval(&rat_int(1)));
        if f0 != *b0 || f1 != *b1 {
            return Err(Error::BoundaryViolation(format!(
                "expected boundary values ({}, {}), got ({}, {})",
                crate::num::format_rat(b0),
                crate::num::format_rat(b1),
                crate::num::format_rat(&f0),
                crate::num::format_rat(&f1),
            )));
        }
    }
    Ok(())
}

/// Same-component test: ordered equality of the extrema sequences,
/// including the boundary pattern. Constants compare by value.
pub fn same_component_interval(
    f: &PLFunction,
    g: &PLFunction,
    boundary: Option<&BoundaryValues>,
) -> Result<bool> {
    same_component_interval_within(f, g, boundary, &crate::num::rat_int(0))
}

/// Like [`same_component_interval`] with value comparisons relaxed to `eps`.
pub fn same_component_interval_within(
    f: &PLFunction,
    g: &PLFunction,
    boundary: Option<&BoundaryValues>,
    eps: &Rat,
) -> Result<bool> {
    use num_traits::Signed;
    require_interval(f)?;
    require_interval(g)?;
    check_boundary(f, boundary)?;
    check_boundary(g, boundary)?;
    match (f.constant_value(), g.constant_value()) {
        (Some(a), Some(b)) => Ok((a - b).abs() <= *eps),
        (Some(_), None) | (None, Some(_)) => Ok(false),
        (None, None) => {
            let (sf, _) = f.extrema()?;
            let (sg, _) = g.extrema()?;
            Ok(sf.starts_with_min() == sg.starts_with_min()
                && sf.len() == sg.len()
                && sf.values().iter().zip(sg.values()).all(|(x, y)| (x - y).abs() <= *eps))
        }
    }
}

/// The canonical representative of a component: extrema at equally spaced
/// parameters, affine in between. A one-element sequence denotes the
/// constant class.
pub fn canonical_representative_interval(seq: &ExtremaSequence) -> PLFunction {
    let values = seq.values();
    if values.len() == 1 {
        return PLFunction::constant(DomainKind::Interval, values[0].clone());
    }
    let l = values.len();
    let breakpoints: Vec<Rat> =
        (0..l).map(|i| Rat::new((i as i64).into(), ((l - 1) as i64).into())).collect();
    PLFunction::new(DomainKind::Interval, breakpoints, values.to_vec()).expect("spaced extrema are valid")
}

/// The monotone endpoint-fixing map `phi` with `canonical . phi = f`,
/// collapsing each critical plateau of `f` to the matching evenly spaced
/// critical point.
fn flattening_map(f: &PLFunction) -> Result<(PLFunction, Reparametrization)> {
    let (seq, sets) = f.extrema()?;
    let canonical = canonical_representative_interval(&seq);
    let values = seq.values();
    let l = values.len();
    let mut pts: Vec<(Rat, Rat)> = Vec::new();
    for j in 0..l {
        let arc = &sets.arcs[j];
        let pj = Rat::new((j as i64).into(), ((l - 1) as i64).into());
        pts.push((arc.start.clone(), pj.clone()));
        if arc.end > arc.start {
            pts.push((arc.end.clone(), pj.clone()));
        }
        if j + 1 == l {
            break;
        }
        let next = &sets.arcs[j + 1];
        let next_p = Rat::new(((j + 1) as i64).into(), ((l - 1) as i64).into());
        let scale = (&next_p - &pj) / (&values[j + 1] - &values[j]);
        for b in f.breakpoints() {
            if *b > arc.end && *b < next.start {
                pts.push((b.clone(), &pj + (f.eval(b) - &values[j]) * &scale));
            }
        }
    }
    pts.sort_by(|a, b| a.0.cmp(&b.0));
    let (breakpoints, lift): (Vec<Rat>, Vec<Rat>) = pts.into_iter().unzip();
    Ok((canonical, Reparametrization::new_interval(breakpoints, lift)?))
}

/// Deformation of `f` onto its canonical representative: straight-line
/// interpolation from the flattening map to the identity, with `steps + 1`
/// entries. `Val` and the barcode are constant along the path.
pub fn contraction_path(f: &PLFunction, steps: usize) -> Result<Vec<PLFunction>> {
    require_interval(f)?;
    let steps = steps.max(1);
    if f.is_constant() {
        return Ok(vec![f.clone(); steps + 1]);
    }
    let (canonical, phi) = flattening_map(f)?;
    let mut path = Vec::with_capacity(steps + 1);
    for j in 0..=steps {
        let t = Rat::new((j as i64).into(), (steps as i64).into());
        let s = rat_int(1) - &t;
        let values: Vec<Rat> = phi
            .breakpoints()
            .iter()
            .zip(phi.values())
            .map(|(b, v)| &s * v + &t * b)
            .collect();
        let psi = Reparametrization::new_interval(phi.breakpoints().to_vec(), values)?;
        path.push(canonical.compose(&psi)?);
    }
    Ok(path)
}

#[derive(Debug, Clone)]
pub struct EnumerateOptions {
    pub allow_repeated_endpoints: bool,
    /// Refuse barcodes with more than this many bounded bars.
    pub max_bounded: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions { allow_repeated_endpoints: false, max_bounded: 10 }
    }
}

fn interval_shape(d: &Barcode) -> Result<(Rat, Vec<(Rat, Rat)>)> {
    let malformed = |msg: String| Err(Error::MalformedBarcode(msg));
    let inf0: Vec<_> = d.infinite_in_degree(0).collect();
    if inf0.len() != 1 {
        return malformed("an interval barcode has exactly one infinite bar, in degree 0".into());
    }
    if d.in_degree(1).next().is_some() || d.in_degree(2).next().is_some() {
        return malformed("an interval barcode has degree-0 bars only".into());
    }
    let b0 = inf0[0].birth.clone();
    let bounded: Vec<(Rat, Rat)> = d
        .bounded_in_degree(0)
        .map(|bar| (bar.birth.clone(), bar.death.clone().unwrap()))
        .collect();
    for (birth, death) in &bounded {
        if birth >= death {
            return malformed("bounded bars must have positive length".into());
        }
        if *birth < b0 {
            return malformed("no bar may be born before the infinite one".into());
        }
    }
    Ok((b0, bounded))
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

/// Enumerates components over an interval barcode by brute force.
///
/// The derived multisets are the minima `{b0} + births` and the interior
/// maxima `deaths`; interleavings therefore start and end with a minimum.
/// With a boundary prescription, each end may instead be a prescribed
/// boundary maximum (its value is not part of the barcode), or must pin the
/// prescribed value onto the adjacent minimum. Survivors are the
/// arrangements whose canonical representative reproduces `d` exactly.
pub fn enumerate_components_interval(
    d: &Barcode,
    boundary: Option<&BoundaryValues>,
    opts: &EnumerateOptions,
) -> Result<Vec<FiberComponentInterval>> {
    let (b0, bounded) = interval_shape(d)?;
    let k = bounded.len();
    if k > opts.max_bounded {
        return Err(Error::ComplexityGuard(format!(
            "{k} bounded bars exceed the limit of {}",
            opts.max_bounded
        )));
    }
    let mut minima: Vec<Rat> = vec![b0];
    minima.extend(bounded.iter().map(|(b, _)| b.clone()));
    let maxima: Vec<Rat> = bounded.iter().map(|(_, dd)| dd.clone()).collect();
    let all: BTreeSet<&Rat> = minima.iter().chain(maxima.iter()).collect();
    if all.len() != 2 * k + 1 && !opts.allow_repeated_endpoints {
        return Err(Error::ComplexityGuard("barcode has repeated endpoint values".into()));
    }

    let mut min_perms = Vec::new();
    permute(&mut minima, 0, &mut min_perms);
    let mut max_perms = Vec::new();
    permute(&mut maxima.clone(), 0, &mut max_perms);

    // (prepend beta0 as a boundary max?, append beta1 as a boundary max?)
    let end_patterns: Vec<(bool, bool)> = match boundary {
        None => vec![(false, false)],
        Some(_) => vec![(false, false), (false, true), (true, false), (true, true)],
    };

    let mut found: BTreeMap<(bool, Vec<Rat>), FiberComponentInterval> = BTreeMap::new();
    for mins in &min_perms {
        for maxs in &max_perms {
            for &(start_max, end_max) in &end_patterns {
                let mut values: Vec<Rat> = Vec::with_capacity(2 * k + 3);
                if start_max {
                    values.push(boundary.unwrap().0.clone());
                }
                for (i, m) in mins.iter().enumerate() {
                    values.push(m.clone());
                    if i < maxs.len() {
                        values.push(maxs[i].clone());
                    }
                }
                if end_max {
                    values.push(boundary.unwrap().1.clone());
                }
                if let Some((beta0, beta1)) = boundary {
                    if (!start_max && values[0] != *beta0) || (!end_max && values.last().unwrap() != beta1) {
                        continue;
                    }
                }
                let starts_with_min = !start_max || values.len() == 1;
                let Ok(seq) = ExtremaSequence::new(DomainKind::Interval, values, starts_with_min) else {
                    continue;
                };
                let key = (seq.starts_with_min(), seq.values().to_vec());
                if found.contains_key(&key) {
                    continue;
                }
                let component = FiberComponentInterval::from_sequence(seq, boundary.cloned());
                if component.barcode() == d {
                    found.insert(key, component);
                }
            }
        }
    }
    Ok(found.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{parse_rat, rat};
    use crate::persistence::{barcode_bruteforce, bottleneck_distance, Bar};

    fn plf(pts: &[(&str, &str)]) -> PLFunction {
        let breakpoints = pts.iter().map(|(t, _)| parse_rat(t).unwrap()).collect();
        let values = pts.iter().map(|(_, v)| parse_rat(v).unwrap()).collect();
        PLFunction::new(DomainKind::Interval, breakpoints, values).unwrap()
    }

    fn iseq(values: &[&str], starts_with_min: bool) -> ExtremaSequence {
        let values = values.iter().map(|v| parse_rat(v).unwrap()).collect();
        ExtremaSequence::new(DomainKind::Interval, values, starts_with_min).unwrap()
    }

    #[test]
    fn endpoint_fixing_reparametrization_stays_in_component() {
        let f = plf(&[("0", "0"), ("0.25", "1"), ("0.6", "0.2"), ("1", "0.8")]);
        let phi = Reparametrization::new_interval(
            vec![rat_int(0), rat(1, 2), rat_int(1)],
            vec![rat_int(0), rat(1, 5), rat_int(1)],
        )
        .unwrap();
        let g = f.compose(&phi).unwrap();
        assert!(same_component_interval(&f, &g, None).unwrap());
    }

    #[test]
    fn ordered_sequences_differ() {
        let f = plf(&[("0", "0"), ("0.25", "1"), ("0.6", "0.2"), ("1", "0.8")]);
        let g = plf(&[("0", "0"), ("0.25", "0.8"), ("0.6", "0.2"), ("1", "1")]);
        assert!(!same_component_interval(&f, &g, None).unwrap());
    }

    #[test]
    fn mirrored_functions_share_barcode_but_not_component() {
        let f = plf(&[("0", "0"), ("0.25", "1"), ("0.6", "0.2"), ("1", "0.8")]);
        let g = plf(&[("0", "0.8"), ("0.4", "0.2"), ("0.75", "1"), ("1", "0")]);
        assert_eq!(barcode(&f), barcode(&g));
        assert_eq!(
            barcode_bruteforce(&f, 200).unwrap(),
            barcode_bruteforce(&g, 200).unwrap()
        );
        assert!(!same_component_interval(&f, &g, None).unwrap());
    }

    #[test]
    fn monotone_functions_with_equal_endpoints_agree() {
        let f = plf(&[("0", "0"), ("1", "1")]);
        let g = plf(&[("0", "0"), ("0.3", "0.9"), ("1", "1")]);
        assert!(same_component_interval(&f, &g, None).unwrap());
        assert!(same_component_interval(&f, &g, Some(&(rat_int(0), rat_int(1)))).unwrap());
    }

    #[test]
    fn boundary_violation_is_an_error() {
        let f = plf(&[("0", "0"), ("1", "1")]);
        let g = plf(&[("0", "0"), ("1", "2")]);
        assert!(matches!(
            same_component_interval(&f, &g, Some(&(rat_int(0), rat_int(1)))),
            Err(Error::BoundaryViolation(_))
        ));
    }

    #[test]
    fn canonical_spacing() {
        let seq = iseq(&["0", "1"], true);
        let f = canonical_representative_interval(&seq);
        assert_eq!(f.breakpoints(), &[rat_int(0), rat_int(1)]);

        let seq = iseq(&["0", "1", "0.2"], true);
        let f = canonical_representative_interval(&seq);
        assert_eq!(f.breakpoints(), &[rat_int(0), rat(1, 2), rat_int(1)]);
        assert_eq!(f.values(), &[rat_int(0), rat_int(1), rat(1, 5)]);
    }

    #[test]
    fn contraction_path_of_canonical_is_constant() {
        let f = canonical_representative_interval(&iseq(&["0", "1", "0.2"], true));
        let path = contraction_path(&f, 4).unwrap();
        assert_eq!(path.len(), 5);
        for g in &path {
            assert_eq!(g.sup_abs_diff(&f).unwrap(), rat_int(0));
        }
    }

    #[test]
    fn contraction_path_preserves_val_and_barcode() {
        let f = plf(&[("0", "0.5"), ("0.1", "0.9"), ("0.2", "0.9"), ("0.55", "0.1"), ("1", "1")]);
        let d = barcode(&f);
        let (seq_f, _) = f.extrema().unwrap();
        let path = contraction_path(&f, 16).unwrap();
        assert_eq!(path[0].sup_abs_diff(&f).unwrap(), rat_int(0));
        let canonical = canonical_representative_interval(&seq_f);
        assert_eq!(path[16].sup_abs_diff(&canonical).unwrap(), rat_int(0));
        for g in &path {
            let (seq_g, _) = g.extrema().unwrap();
            assert_eq!(seq_g, seq_f);
            assert_eq!(bottleneck_distance(&barcode(g), &d), Some(rat_int(0)));
        }
    }

    #[test]
    fn two_functions_meet_at_the_shared_canonical() {
        let f = plf(&[("0", "0"), ("0.7", "1"), ("1", "0.2")]);
        let g = plf(&[("0", "0"), ("0.1", "1"), ("1", "0.2")]);
        assert!(same_component_interval(&f, &g, None).unwrap());
        let pf = contraction_path(&f, 4).unwrap();
        let pg = contraction_path(&g, 4).unwrap();
        assert_eq!(pf[4].sup_abs_diff(&pg[4]).unwrap(), rat_int(0));
    }

    #[test]
    fn enumerate_monotone_with_boundary() {
        let d = Barcode::new(vec![Bar::infinite(0, rat_int(0))]);
        let comps =
            enumerate_components_interval(&d, Some(&(rat_int(0), rat_int(1))), &EnumerateOptions::default())
                .unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].sequence(), &iseq(&["0", "1"], true));
        assert_eq!(comps[0].canonical().eval(&rat_int(1)), rat_int(1));
    }

    #[test]
    fn enumerate_one_bounded_bar_without_boundary() {
        let d = Barcode::new(vec![Bar::infinite(0, rat_int(0)), Bar::bounded(0, rat(1, 5), rat(4, 5))]);
        let comps = enumerate_components_interval(&d, None, &EnumerateOptions::default()).unwrap();
        // Exhaustive check of the min-max-min interleavings: both orders of
        // the two minima around the single interior maximum survive.
        assert_eq!(comps.len(), 2);
        for c in &comps {
            assert_eq!(c.barcode(), &d);
            assert_eq!(barcode_bruteforce(c.canonical(), 100).unwrap(), d);
        }
        assert!(!same_component_interval(comps[0].canonical(), comps[1].canonical(), None).unwrap());
    }

    #[test]
    fn enumerate_with_boundary_maxima() {
        let d = Barcode::new(vec![Bar::infinite(0, rat_int(0)), Bar::bounded(0, rat(1, 5), rat(4, 5))]);
        let beta = (rat_int(2), rat_int(3));
        let comps = enumerate_components_interval(&d, Some(&beta), &EnumerateOptions::default()).unwrap();
        // Both boundary values exceed every death, so both ends must be
        // boundary maxima: 2 <m> M <m> 3 over the two minima orders.
        assert_eq!(comps.len(), 2);
        for c in &comps {
            assert!(!c.sequence().starts_with_min());
            assert_eq!(c.canonical().eval(&rat_int(0)), rat_int(2));
            assert_eq!(c.canonical().eval(&rat_int(1)), rat_int(3));
            assert_eq!(c.barcode(), &d);
        }
    }

    #[test]
    fn enumerate_trivial_interval_barcode() {
        let d = Barcode::new(vec![Bar::infinite(0, rat(1, 2))]);
        let comps = enumerate_components_interval(&d, None, &EnumerateOptions::default()).unwrap();
        assert_eq!(comps.len(), 1);
        assert!(comps[0].canonical().is_constant());
    }

    #[test]
    fn enumerate_rejects_malformed_and_guards() {
        let circle_like = Barcode::new(vec![Bar::infinite(0, rat_int(0)), Bar::infinite(1, rat_int(1))]);
        assert!(matches!(
            enumerate_components_interval(&circle_like, None, &EnumerateOptions::default()),
            Err(Error::MalformedBarcode(_))
        ));
        let repeated = Barcode::new(vec![
            Bar::infinite(0, rat_int(0)),
            Bar::bounded(0, rat_int(0), rat_int(1)),
        ]);
        assert!(matches!(
            enumerate_components_interval(&repeated, None, &EnumerateOptions::default()),
            Err(Error::ComplexityGuard(_))
        ));
    }
}
