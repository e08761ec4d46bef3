//! Sublevel-set persistence barcodes of PL functions in degrees 0 and 1,
//! a union-find oracle over a discretization, and exact barcode comparison.

use crate::error::{Error, Result};
use crate::num::{rat_int, Rat};
use crate::pl::{DomainKind, ExtremumKind, PLFunction};
use num_traits::Signed;
use std::collections::BTreeSet;

/// One interval `[birth, death)` of a barcode; `death = None` means the
/// class persists forever.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bar {
    pub degree: u8,
    pub birth: Rat,
    pub death: Option<Rat>,
}

impl Bar {
    pub fn bounded(degree: u8, birth: Rat, death: Rat) -> Self {
        debug_assert!(birth < death, "bars must have positive length");
        Bar { degree, birth, death: Some(death) }
    }

    pub fn infinite(degree: u8, birth: Rat) -> Self {
        Bar { degree, birth, death: None }
    }

    pub fn is_infinite(&self) -> bool {
        self.death.is_none()
    }

    /// Half the bar length: the cost of matching it to the diagonal.
    pub fn half_life(&self) -> Option<Rat> {
        self.death.as_ref().map(|d| (d - &self.birth) / rat_int(2))
    }

    fn sort_key(&self) -> (u8, &Rat, bool, Option<&Rat>) {
        (self.degree, &self.birth, self.death.is_none(), self.death.as_ref())
    }
}

/// A graded multiset of bars, kept in a canonical order so that equal
/// multisets compare equal structurally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Barcode {
    bars: Vec<Bar>,
}

impl Barcode {
    pub fn new(mut bars: Vec<Bar>) -> Self {
        bars.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        Barcode { bars }
    }

    pub fn bars(&self) -> &[Bar] {
        &self.bars
    }

    pub fn len(&self) -> usize {
        self.bars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bars.is_empty()
    }

    pub fn in_degree(&self, degree: u8) -> impl Iterator<Item = &Bar> {
        self.bars.iter().filter(move |b| b.degree == degree)
    }

    pub fn bounded_in_degree(&self, degree: u8) -> impl Iterator<Item = &Bar> {
        self.in_degree(degree).filter(|b| !b.is_infinite())
    }

    pub fn infinite_in_degree(&self, degree: u8) -> impl Iterator<Item = &Bar> {
        self.in_degree(degree).filter(|b| b.is_infinite())
    }

    /// The barcode of a constant function on the given domain.
    pub fn trivial(domain: DomainKind, c: &Rat) -> Self {
        match domain {
            DomainKind::Interval => Barcode::new(vec![Bar::infinite(0, c.clone())]),
            DomainKind::Circle => {
                Barcode::new(vec![Bar::infinite(0, c.clone()), Bar::infinite(1, c.clone())])
            }
        }
    }

    /// True for the two-infinite-bars-at-one-value barcode of a circle constant.
    pub fn is_trivial_circle(&self) -> bool {
        self.bars.len() == 2
            && self.bars[0].degree == 0
            && self.bars[1].degree == 1
            && self.bars.iter().all(|b| b.is_infinite())
            && self.bars[0].birth == self.bars[1].birth
    }
}

/// The sublevel-set barcode of a PL function.
///
/// Minima give birth to degree-0 classes; at each interior maximum the two
/// neighboring components merge and the younger one dies (elder rule, ties
/// broken toward the smaller birth parameter). On the circle the final,
/// redundant merge closes the 1-cycle instead: one infinite degree-1 bar
/// born at the global maximum.
pub fn barcode(f: &PLFunction) -> Barcode {
    if let Some(c) = f.constant_value() {
        return Barcode::trivial(f.domain(), c);
    }
    let (seq, sets) = f.extrema().expect("non-constant function has extrema");
    let params: Vec<Rat> = sets.arcs.iter().map(|a| a.start.clone()).collect();
    let kinds: Vec<ExtremumKind> = (0..seq.len()).map(|i| seq.kind(i)).collect();
    elder_rule_sweep(f.domain(), seq.values(), &kinds, &params)
}

fn elder_rule_sweep(
    domain: DomainKind,
    values: &[Rat],
    kinds: &[ExtremumKind],
    params: &[Rat],
) -> Barcode {
    let l = values.len();
    let mut order: Vec<usize> = (0..l).collect();
    order.sort_by(|&a, &b| {
        (&values[a], kinds[a] == ExtremumKind::Max, a).cmp(&(&values[b], kinds[b] == ExtremumKind::Max, b))
    });

    let mut uf = UnionFind::new(l);
    // birth (value, parameter) of the component containing each root
    let mut birth: Vec<Option<(Rat, Rat)>> = vec![None; l];
    let mut bars: Vec<Bar> = Vec::new();
    let mut cycle_birth: Option<Rat> = None;

    for &i in &order {
        match kinds[i] {
            ExtremumKind::Min => birth[i] = Some((values[i].clone(), params[i].clone())),
            ExtremumKind::Max => {
                if domain == DomainKind::Interval && (i == 0 || i == l - 1) {
                    continue; // boundary maximum: the endpoint joins an existing component
                }
                let left = uf.find((i + l - 1) % l);
                let right = uf.find((i + 1) % l);
                if left == right {
                    debug_assert_eq!(domain, DomainKind::Circle);
                    debug_assert!(cycle_birth.is_none(), "the cycle closes exactly once");
                    cycle_birth = Some(values[i].clone());
                    continue;
                }
                let (survivor, dying) = if birth[left] <= birth[right] { (left, right) } else { (right, left) };
                let (dying_birth, _) = birth[dying].clone().expect("merged component was born");
                debug_assert!(dying_birth < values[i]);
                bars.push(Bar::bounded(0, dying_birth, values[i].clone()));
                let root = uf.union(survivor, dying);
                birth[root] = birth[survivor].clone();
            }
        }
    }

    let mut roots: Vec<usize> = (0..l)
        .filter(|&i| kinds[i] == ExtremumKind::Min)
        .map(|i| uf.find(i))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    debug_assert_eq!(roots.len(), 1, "one essential component remains");
    let root = roots.pop().unwrap();
    bars.push(Bar::infinite(0, birth[root].clone().unwrap().0));
    if let Some(b1) = cycle_birth {
        bars.push(Bar::infinite(1, b1));
    } else {
        debug_assert_eq!(domain, DomainKind::Interval);
    }
    Barcode::new(bars)
}

/// Independent oracle: discretize the domain, sweep sample values in
/// increasing order with a union-find over sample points, and read the
/// same barcode off the discretization.
///
/// Fails with `ResolutionTooLow` when the grid cannot see the function:
/// either fewer than ten samples per breakpoint, or some pair of adjacent
/// samples has non-monotone function behavior between them (an extremum
/// was skipped).
pub fn barcode_bruteforce(f: &PLFunction, resolution: usize) -> Result<Barcode> {
    let k = f.breakpoints().len();
    if resolution < 10 * k {
        return Err(Error::ResolutionTooLow(format!(
            "resolution {resolution} below 10 x {k} breakpoints"
        )));
    }
    let res = resolution;
    let n_verts = match f.domain() {
        DomainKind::Circle => res,
        DomainKind::Interval => res + 1,
    };
    let params: Vec<Rat> = (0..n_verts).map(|i| Rat::new((i as i64).into(), (res as i64).into())).collect();
    let values: Vec<Rat> = params.iter().map(|t| f.eval(t)).collect();
    check_monotone_gaps(f, &params, &values)?;

    let mut order: Vec<usize> = (0..n_verts).collect();
    order.sort_by(|&a, &b| (&values[a], a).cmp(&(&values[b], b)));
    let mut active = vec![false; n_verts];
    let mut uf = UnionFind::new(n_verts);
    let mut birth: Vec<Option<(Rat, Rat)>> = vec![None; n_verts];
    let mut bars: Vec<Bar> = Vec::new();
    let mut cycle_birth: Option<Rat> = None;

    for &i in &order {
        active[i] = true;
        birth[i] = Some((values[i].clone(), params[i].clone()));
        let neighbors: Vec<usize> = match f.domain() {
            DomainKind::Circle => vec![(i + n_verts - 1) % n_verts, (i + 1) % n_verts],
            DomainKind::Interval => {
                let mut v = Vec::new();
                if i > 0 {
                    v.push(i - 1);
                }
                if i + 1 < n_verts {
                    v.push(i + 1);
                }
                v
            }
        };
        for w in neighbors {
            if !active[w] {
                continue;
            }
            let (ri, rw) = (uf.find(i), uf.find(w));
            if ri == rw {
                debug_assert_eq!(f.domain(), DomainKind::Circle);
                if cycle_birth.is_none() {
                    cycle_birth = Some(values[i].clone());
                }
                continue;
            }
            let (survivor, dying) = if birth[ri] <= birth[rw] { (ri, rw) } else { (rw, ri) };
            let (dying_birth, _) = birth[dying].clone().unwrap();
            if dying_birth < values[i] {
                bars.push(Bar::bounded(0, dying_birth, values[i].clone()));
            }
            let root = uf.union(survivor, dying);
            birth[root] = birth[survivor].clone();
        }
    }

    let roots: BTreeSet<usize> = (0..n_verts).map(|i| uf.find(i)).collect();
    for r in roots {
        bars.push(Bar::infinite(0, birth[r].clone().unwrap().0));
    }
    if f.domain() == DomainKind::Circle {
        let b1 = cycle_birth.expect("a full circle sweep closes the cycle");
        bars.push(Bar::infinite(1, b1));
    }
    Ok(Barcode::new(bars))
}

/// The smallest resolution whose sample grid contains every breakpoint of
/// `f` and satisfies the ten-samples-per-breakpoint floor. Errors when the
/// breakpoint denominators force more than a million samples.
pub fn minimal_oracle_resolution(f: &PLFunction) -> Result<usize> {
    use num_integer::Integer;
    let mut lcm = num_bigint::BigInt::from(1);
    for b in f.breakpoints() {
        lcm = lcm.lcm(b.denom());
    }
    let cap = 1_000_000usize;
    let lcm = match num_traits::ToPrimitive::to_usize(&lcm) {
        Some(l) if l <= cap => l,
        _ => {
            return Err(Error::ResolutionTooLow(format!(
                "breakpoint denominators need more than {cap} samples; pass an explicit resolution"
            )))
        }
    };
    let need = 10 * f.breakpoints().len();
    let res = lcm * need.div_ceil(lcm).max(1);
    if res > cap {
        return Err(Error::ResolutionTooLow(format!(
            "breakpoint denominators need more than {cap} samples; pass an explicit resolution"
        )));
    }
    Ok(res)
}

fn check_monotone_gaps(f: &PLFunction, params: &[Rat], values: &[Rat]) -> Result<()> {
    let bps = f.breakpoints();
    let n = params.len();
    let gaps = match f.domain() {
        DomainKind::Circle => n,
        DomainKind::Interval => n - 1,
    };
    let mut j = bps.partition_point(|t| *t <= params[0]);
    for g in 0..gaps {
        let a = &params[g];
        let b = if g + 1 < n { params[g + 1].clone() } else { rat_int(1) };
        let mut seq = vec![&values[g]];
        let mut inner = Vec::new();
        while j < bps.len() && bps[j] < b {
            inner.push(f.values()[j].clone());
            j += 1;
        }
        seq.extend(inner.iter());
        let end = values.get(g + 1).cloned().unwrap_or_else(|| values[0].clone());
        seq.push(&end);
        let up = seq.windows(2).all(|w| w[0] <= w[1]);
        let down = seq.windows(2).all(|w| w[0] >= w[1]);
        if !up && !down {
            return Err(Error::ResolutionTooLow(format!(
                "samples at {} and {} skip an extremum",
                crate::num::format_rat(a),
                crate::num::format_rat(&b)
            )));
        }
    }
    Ok(())
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    /// Unions two roots, keeping `keep` as the representative.
    fn union(&mut self, keep: usize, other: usize) -> usize {
        self.parent[other] = keep;
        keep
    }
}

/// Exact bottleneck distance; `None` encodes `+infinity` (infinite bars
/// that cannot be matched). Bounded bars may match the diagonal at half
/// their length; the answer is the smallest feasible candidate cost.
pub fn bottleneck_distance(a: &Barcode, b: &Barcode) -> Option<Rat> {
    let mut worst = rat_int(0);
    for degree in 0..=2u8 {
        let cost = bottleneck_in_degree(a, b, degree)?;
        if cost > worst {
            worst = cost;
        }
    }
    Some(worst)
}

fn bottleneck_in_degree(a: &Barcode, b: &Barcode, degree: u8) -> Option<Rat> {
    let mut inf_a: Vec<&Rat> = a.infinite_in_degree(degree).map(|x| &x.birth).collect();
    let mut inf_b: Vec<&Rat> = b.infinite_in_degree(degree).map(|x| &x.birth).collect();
    if inf_a.len() != inf_b.len() {
        return None;
    }
    inf_a.sort();
    inf_b.sort();
    let mut cost = rat_int(0);
    for (x, y) in inf_a.iter().zip(&inf_b) {
        let d = if x > y { *x - *y } else { *y - *x };
        if d > cost {
            cost = d;
        }
    }

    let bars_a: Vec<&Bar> = a.bounded_in_degree(degree).collect();
    let bars_b: Vec<&Bar> = b.bounded_in_degree(degree).collect();
    if bars_a.is_empty() && bars_b.is_empty() {
        return Some(cost);
    }
    let mut candidates: BTreeSet<Rat> = BTreeSet::new();
    candidates.insert(rat_int(0));
    for bar in bars_a.iter().chain(bars_b.iter()) {
        candidates.insert(bar.half_life().unwrap());
    }
    for x in &bars_a {
        for y in &bars_b {
            candidates.insert(pair_cost(x, y));
        }
    }
    let candidates: Vec<Rat> = candidates.into_iter().collect();
    let mut lo = 0usize;
    let mut hi = candidates.len() - 1;
    debug_assert!(matching_feasible(&bars_a, &bars_b, &candidates[hi]));
    while lo < hi {
        let mid = (lo + hi) / 2;
        if matching_feasible(&bars_a, &bars_b, &candidates[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Some(cost.max(candidates[lo].clone()))
}

fn pair_cost(x: &Bar, y: &Bar) -> Rat {
    let db = (&x.birth - &y.birth).abs();
    let dd = (x.death.as_ref().unwrap() - y.death.as_ref().unwrap()).abs();
    db.max(dd)
}

/// Perfect-matching feasibility at threshold `r`, with diagonal slots on
/// both sides so unmatched bars may retire at half-life cost.
fn matching_feasible(bars_a: &[&Bar], bars_b: &[&Bar], r: &Rat) -> bool {
    let (na, nb) = (bars_a.len(), bars_b.len());
    let left = na + nb; // real bars of A, then nb diagonal slots
    let right = nb + na;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); left];
    for i in 0..na {
        for (j, y) in bars_b.iter().enumerate() {
            if pair_cost(bars_a[i], y) <= *r {
                adj[i].push(j);
            }
        }
        if bars_a[i].half_life().unwrap() <= *r {
            adj[i].extend(nb..right);
        }
    }
    for i in na..left {
        for (j, y) in bars_b.iter().enumerate() {
            if y.half_life().unwrap() <= *r {
                adj[i].push(j);
            }
        }
        adj[i].extend(nb..right);
    }

    let mut match_right: Vec<Option<usize>> = vec![None; right];
    let mut matched = 0usize;
    for i in 0..left {
        let mut seen = vec![false; right];
        if augment(i, &adj, &mut match_right, &mut seen) {
            matched += 1;
        }
    }
    matched == left
}

fn augment(i: usize, adj: &[Vec<usize>], match_right: &mut Vec<Option<usize>>, seen: &mut [bool]) -> bool {
    for &j in &adj[i] {
        if seen[j] {
            continue;
        }
        seen[j] = true;
        if match_right[j].is_none() || augment(match_right[j].unwrap(), adj, match_right, seen) {
            match_right[j] = Some(i);
            return true;
        }
    }
    false
}

/// Multiset equality per degree within `eps` (exact for `eps = 0`).
pub fn same_barcode(a: &Barcode, b: &Barcode, eps: &Rat) -> bool {
    for degree in 0..=2u8 {
        let xs: Vec<&Bar> = a.in_degree(degree).collect();
        let ys: Vec<&Bar> = b.in_degree(degree).collect();
        if xs.len() != ys.len() {
            return false;
        }
        // canonical barcode order makes the sorted lists comparable pairwise
        for (x, y) in xs.iter().zip(&ys) {
            if (&x.birth - &y.birth).abs() > *eps {
                return false;
            }
            match (&x.death, &y.death) {
                (None, None) => {}
                (Some(dx), Some(dy)) => {
                    if (dx - dy).abs() > *eps {
                        return false;
                    }
                }
                _ => return false,
            }
        }
    }
    true
}
