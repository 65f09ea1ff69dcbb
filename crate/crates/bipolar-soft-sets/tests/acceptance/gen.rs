//! Seeded generation of random (and exhaustively enumerated small)
//! bipolar soft sets for the law suite and the oracle comparisons.

use bipolar_soft_sets::{BipolarSoftSet, ParameterSpace, Subset, Universe};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn universe(n: usize) -> Universe {
    Universe::new((1..=n).map(|i| format!("u{i}"))).unwrap()
}

pub fn space(k: usize) -> ParameterSpace {
    ParameterSpace::from_tokens((1..=k).map(|i| format!("e{i}"))).unwrap()
}

/// A random subset of the space's parameters. With `force_first` the first
/// parameter is always included, which guarantees any two such domains
/// overlap (restricted operations stay defined).
pub fn domain(rng: &mut ChaCha8Rng, space: &ParameterSpace, force_first: bool) -> Vec<String> {
    space
        .iter()
        .enumerate()
        .filter(|&(i, _)| (force_first && i == 0) || rng.gen_bool(0.5))
        .map(|(_, p)| p.positive().to_owned())
        .collect()
}

/// A random consistent set over the given domain: each (object, parameter)
/// cell lands uniformly in {positive, negative, hesitant}.
pub fn set_over(
    rng: &mut ChaCha8Rng,
    universe: &Universe,
    space: &ParameterSpace,
    domain: &[String],
) -> BipolarSoftSet {
    let n = universe.len();
    let mut pos = Vec::with_capacity(domain.len());
    let mut neg = Vec::with_capacity(domain.len());
    for _ in domain {
        let mut f = Subset::empty(n);
        let mut g = Subset::empty(n);
        for i in 0..n {
            match rng.gen_range(0..3u8) {
                0 => f.insert(i),
                1 => g.insert(i),
                _ => {}
            }
        }
        pos.push(f);
        neg.push(g);
    }
    let refs: Vec<&str> = domain.iter().map(String::as_str).collect();
    BipolarSoftSet::from_subsets(universe.clone(), space.clone(), &refs, pos, neg).unwrap()
}

/// A random set whose domain always contains the space's first parameter.
pub fn overlapping_set(
    rng: &mut ChaCha8Rng,
    universe: &Universe,
    space: &ParameterSpace,
) -> BipolarSoftSet {
    let d = domain(rng, space, true);
    set_over(rng, universe, space, &d)
}

/// A random superset: keeps the input's domain (possibly extending it),
/// shrinks each negative side, and grows each positive side into the space
/// freed up — the containment order's "more positive evidence, less
/// negative evidence, more parameters".
pub fn grow(rng: &mut ChaCha8Rng, set: &BipolarSoftSet) -> BipolarSoftSet {
    let universe = set.universe().clone();
    let n = universe.len();
    let mut labels: Vec<String> = set.domain_labels().map(str::to_owned).collect();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for label in &labels {
        let f = set.positive(label).unwrap();
        let g = set.negative(label).unwrap();
        let mut g2 = Subset::empty(n);
        for i in g.iter() {
            if rng.gen_bool(0.7) {
                g2.insert(i);
            }
        }
        let mut f2 = f.clone();
        for i in 0..n {
            if !f2.contains(i) && !g2.contains(i) && rng.gen_bool(0.3) {
                f2.insert(i);
            }
        }
        pos.push(f2);
        neg.push(g2);
    }
    // Fresh parameters join with arbitrary consistent sides.
    for p in set.space().iter() {
        if set.contains_parameter(p.positive()) || !rng.gen_bool(0.4) {
            continue;
        }
        let mut f = Subset::empty(n);
        let mut g = Subset::empty(n);
        for i in 0..n {
            match rng.gen_range(0..3u8) {
                0 => f.insert(i),
                1 => g.insert(i),
                _ => {}
            }
        }
        labels.push(p.positive().to_owned());
        pos.push(f);
        neg.push(g);
    }
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    BipolarSoftSet::from_subsets(universe, set.space().clone(), &refs, pos, neg).unwrap()
}

/// A random subset with the *same* domain: shrinks each positive side and
/// grows each negative side.
pub fn shrink_same_domain(rng: &mut ChaCha8Rng, set: &BipolarSoftSet) -> BipolarSoftSet {
    let universe = set.universe().clone();
    let n = universe.len();
    let labels: Vec<String> = set.domain_labels().map(str::to_owned).collect();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for label in &labels {
        let f = set.positive(label).unwrap();
        let g = set.negative(label).unwrap();
        let mut f2 = Subset::empty(n);
        for i in f.iter() {
            if rng.gen_bool(0.7) {
                f2.insert(i);
            }
        }
        let mut g2 = g.clone();
        for i in 0..n {
            if !g2.contains(i) && !f2.contains(i) && rng.gen_bool(0.3) {
                g2.insert(i);
            }
        }
        pos.push(f2);
        neg.push(g2);
    }
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    BipolarSoftSet::from_subsets(universe, set.space().clone(), &refs, pos, neg).unwrap()
}

/// Every consistent set over a two-object universe and a two-parameter
/// space: all four domains, all {positive, negative, hesitant} cell
/// assignments — 1 + 9 + 9 + 81 = 100 sets.
pub fn all_small_sets() -> Vec<BipolarSoftSet> {
    let universe = universe(2);
    let space = space(2);
    let domains: [&[&str]; 4] = [&[], &["e1"], &["e2"], &["e1", "e2"]];
    let mut sets = Vec::new();
    for domain in domains {
        let k = domain.len();
        // Each of the k*2 cells independently takes one of three states.
        for mut code in 0..3usize.pow((k * 2) as u32) {
            let mut pos = Vec::with_capacity(k);
            let mut neg = Vec::with_capacity(k);
            for _ in 0..k {
                let mut f = Subset::empty(2);
                let mut g = Subset::empty(2);
                for i in 0..2 {
                    match code % 3 {
                        0 => f.insert(i),
                        1 => g.insert(i),
                        _ => {}
                    }
                    code /= 3;
                }
                pos.push(f);
                neg.push(g);
            }
            sets.push(
                BipolarSoftSet::from_subsets(
                    universe.clone(),
                    space.clone(),
                    domain,
                    pos,
                    neg,
                )
                .unwrap(),
            );
        }
    }
    assert_eq!(sets.len(), 100);
    sets
}
