//! Seeded generators for random PL functions, alternating sequences and
//! monotone reparametrizations.
//!
//! Extremal parameters land on a fixed grid ([`PARAM_GRID`]) so the
//! union-find oracle sees every extremum at any resolution that is a
//! multiple of the grid.

use crate::fiber_circle::{canonical_representative, CyclicClass};
use crate::fiber_interval::canonical_representative_interval;
use crate::num::{rat, Rat};
use crate::pl::{DomainKind, ExtremaSequence, PLFunction, Reparametrization};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

pub const PARAM_GRID: usize = 200;
const VALUE_DENOM: i64 = 1000;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A resolution the oracle accepts for functions built on the grid.
pub fn oracle_resolution(f: &PLFunction) -> usize {
    let need = 10 * f.breakpoints().len();
    let factor = need.div_ceil(PARAM_GRID).max(1);
    PARAM_GRID * factor
}

fn distinct_grid_values(count: usize, rng: &mut impl Rng) -> Vec<Rat> {
    let mut set = BTreeSet::new();
    while set.len() < count {
        set.insert(rng.random_range(0..=VALUE_DENOM));
    }
    set.into_iter().map(|k| rat(k, VALUE_DENOM)).collect()
}

/// 2n distinct values forming a strictly alternating cyclic sequence.
pub fn random_alternating_circle_values(n: usize, rng: &mut impl Rng) -> Vec<Rat> {
    assert!(n >= 1);
    for _ in 0..200 {
        let mut vals = distinct_grid_values(2 * n, rng);
        vals.shuffle(rng);
        if ExtremaSequence::new(DomainKind::Circle, vals.clone(), true).is_ok() {
            return vals;
        }
    }
    // Always-valid fallback: minima from the low half, maxima from the high half.
    let vals = distinct_grid_values(2 * n, rng);
    let (low, high) = vals.split_at(n);
    let mut low = low.to_vec();
    let mut high = high.to_vec();
    low.shuffle(rng);
    high.shuffle(rng);
    low.into_iter().zip(high).flat_map(|(m, mx)| [m, mx]).collect()
}

/// A random alternating interval sequence of the given length.
pub fn random_alternating_interval_values(len: usize, rng: &mut impl Rng) -> ExtremaSequence {
    assert!(len >= 2);
    let starts_with_min = rng.random_bool(0.5);
    for _ in 0..200 {
        let mut vals = distinct_grid_values(len, rng);
        vals.shuffle(rng);
        if let Ok(seq) = ExtremaSequence::new(DomainKind::Interval, vals, starts_with_min) {
            return seq;
        }
    }
    // Fallback: weave sorted values outside-in, which always alternates.
    let vals = distinct_grid_values(len, rng);
    let mut weave = Vec::with_capacity(len);
    let (mut lo, mut hi) = (0usize, len - 1);
    let mut take_low = starts_with_min;
    while lo <= hi {
        if take_low {
            weave.push(vals[lo].clone());
            lo += 1;
        } else {
            weave.push(vals[hi].clone());
            hi = match hi.checked_sub(1) {
                Some(h) => h,
                None => break,
            };
        }
        take_low = !take_low;
    }
    ExtremaSequence::new(DomainKind::Interval, weave, starts_with_min).expect("weave alternates")
}

/// A random circle function with n (min, max) pairs: extrema at distinct
/// grid parameters, occasionally widened into plateaus, with occasional
/// non-extremal breakpoints inside the monotone arcs.
pub fn random_circle_function(n: usize, rng: &mut impl Rng) -> PLFunction {
    let values = random_alternating_circle_values(n, rng);
    let g = PARAM_GRID as i64;
    let mut set = BTreeSet::new();
    set.insert(0i64);
    while set.len() < 2 * n {
        set.insert(rng.random_range(0..g));
    }
    let params: Vec<i64> = set.into_iter().collect();

    let mut breakpoints = Vec::new();
    let mut vals = Vec::new();
    for i in 0..2 * n {
        let next_param = if i + 1 < 2 * n { params[i + 1] } else { params[0] + g };
        breakpoints.push(rat(params[i], g));
        vals.push(values[i].clone());
        let mut cur_end = params[i];
        if next_param - cur_end >= 2 && cur_end + 1 < g && rng.random_bool(0.25) {
            cur_end += 1;
            breakpoints.push(rat(cur_end, g));
            vals.push(values[i].clone());
        }
        if next_param - cur_end >= 2 && rng.random_bool(0.25) {
            let mid = (cur_end + next_param) / 2;
            if mid < g {
                let lambda = rat(rng.random_range(1..=3), 4);
                let next_value = &values[(i + 1) % (2 * n)];
                breakpoints.push(rat(mid, g));
                vals.push(&values[i] + lambda * (next_value - &values[i]));
            }
        }
    }
    PLFunction::new(DomainKind::Circle, breakpoints, vals).expect("grid construction is valid")
}

/// A random monotone reparametrization; with `allow_flat` it may contain
/// flat segments (a non-injective element of the monoid closure).
pub fn random_reparametrization(domain: DomainKind, allow_flat: bool, rng: &mut impl Rng) -> Reparametrization {
    let segments = rng.random_range(1..=6usize);
    let g = PARAM_GRID as i64;
    let low = if allow_flat { 0u32 } else { 1 };
    match domain {
        DomainKind::Circle => {
            let mut set = BTreeSet::new();
            set.insert(0i64);
            while set.len() < segments {
                set.insert(rng.random_range(0..g));
            }
            let breakpoints: Vec<Rat> = set.iter().map(|&k| rat(k, g)).collect();
            let weights = loop {
                let w: Vec<u32> = (0..segments).map(|_| rng.random_range(low..=10)).collect();
                if w.iter().sum::<u32>() > 0 {
                    break w;
                }
            };
            let total: u32 = weights.iter().sum();
            let base = rat(rng.random_range(0..VALUE_DENOM), VALUE_DENOM);
            let mut acc = 0u32;
            let values: Vec<Rat> = (0..segments)
                .map(|i| {
                    if i > 0 {
                        acc += weights[i - 1];
                    }
                    &base + rat(acc as i64, total as i64)
                })
                .collect();
            Reparametrization::new_circle(breakpoints, values).expect("constructed lift is monotone")
        }
        DomainKind::Interval => {
            let mut set = BTreeSet::new();
            set.insert(0i64);
            set.insert(g);
            while set.len() < segments + 1 {
                set.insert(rng.random_range(1..g));
            }
            let breakpoints: Vec<Rat> = set.iter().map(|&k| rat(k, g)).collect();
            let m = breakpoints.len() - 1;
            let weights = loop {
                let w: Vec<u32> = (0..m).map(|_| rng.random_range(low..=10)).collect();
                if w.iter().sum::<u32>() > 0 {
                    break w;
                }
            };
            let total: u32 = weights.iter().sum();
            let mut acc = 0u32;
            let values: Vec<Rat> = (0..=m)
                .map(|i| {
                    if i > 0 {
                        acc += weights[i - 1];
                    }
                    rat(acc as i64, total as i64)
                })
                .collect();
            Reparametrization::new_interval(breakpoints, values).expect("constructed map is monotone")
        }
    }
}

/// A random member of the component: the canonical representative
/// pre-composed with a random (possibly non-injective) reparametrization.
pub fn random_in_class(class: &CyclicClass, rng: &mut impl Rng) -> PLFunction {
    let canonical = canonical_representative(class);
    let phi = random_reparametrization(DomainKind::Circle, true, rng);
    canonical.compose(&phi).expect("same domain")
}

/// A random interval function with the given number of extrema.
pub fn random_interval_function(extrema: usize, rng: &mut impl Rng) -> PLFunction {
    let seq = random_alternating_interval_values(extrema.max(2), rng);
    let canonical = canonical_representative_interval(&seq);
    let phi = random_reparametrization(DomainKind::Interval, true, rng);
    canonical.compose(&phi).expect("same domain")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::persistence::{barcode, barcode_bruteforce};

    #[test]
    fn generated_circle_functions_pass_the_oracle() {
        let mut rng = rng_from_seed(7);
        for n in 1..=4 {
            for _ in 0..5 {
                let f = random_circle_function(n, &mut rng);
                let (seq, _) = f.extrema().unwrap();
                assert_eq!(seq.pair_count(), n);
                let res = oracle_resolution(&f);
                assert_eq!(barcode(&f), barcode_bruteforce(&f, res).unwrap());
            }
        }
    }

    #[test]
    fn generated_reparametrizations_are_monotone() {
        let mut rng = rng_from_seed(11);
        for _ in 0..20 {
            let phi = random_reparametrization(DomainKind::Circle, false, &mut rng);
            assert!(phi.is_strictly_increasing());
            let psi = random_reparametrization(DomainKind::Interval, true, &mut rng);
            assert_eq!(psi.apply(&rat(0, 1)), rat(0, 1));
            assert_eq!(psi.apply(&rat(1, 1)), rat(1, 1));
        }
    }

    #[test]
    fn in_class_members_keep_the_class() {
        let mut rng = rng_from_seed(13);
        for n in 1..=4 {
            let values = random_alternating_circle_values(n, &mut rng);
            let seq = ExtremaSequence::new(DomainKind::Circle, values, true).unwrap();
            let class = CyclicClass::from_sequence(&seq);
            for _ in 0..5 {
                let f = random_in_class(&class, &mut rng);
                assert_eq!(CyclicClass::of(&f).unwrap(), class);
            }
        }
    }

    #[test]
    fn interval_generator_roundtrip() {
        let mut rng = rng_from_seed(17);
        for len in 2..=6 {
            let f = random_interval_function(len, &mut rng);
            let (seq, _) = f.extrema().unwrap();
            assert_eq!(seq.len(), len);
        }
    }
}
