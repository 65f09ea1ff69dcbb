//! A deliberately naive reference model: string-keyed maps of string
//! sets, with every operation computed per element, per parameter,
//! directly from the case-split definitions. Nothing here shares code or
//! data structures with the library, so agreement is meaningful.

use std::collections::{BTreeMap, BTreeSet};

use bipolar_soft_sets::BipolarSoftSet;

type Objects = BTreeSet<String>;

/// The reference representation of a bipolar soft set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Naive {
    pub universe: Vec<String>,
    /// Positive side per domain parameter (keyed by positive label).
    pub pos: BTreeMap<String, Objects>,
    /// Negative side per domain parameter (same keys).
    pub neg: BTreeMap<String, Objects>,
}

fn to_names(labels: Vec<&str>) -> Objects {
    labels.into_iter().map(str::to_owned).collect()
}

impl Naive {
    /// Reads a library set into the reference representation.
    pub fn from_set(set: &BipolarSoftSet) -> Naive {
        let mut pos = BTreeMap::new();
        let mut neg = BTreeMap::new();
        for label in set.domain_labels() {
            let f = set.universe().labels_of(set.positive(label).unwrap());
            let g = set.universe().labels_of(set.negative(label).unwrap());
            pos.insert(label.to_owned(), to_names(f));
            neg.insert(label.to_owned(), to_names(g));
        }
        Naive {
            universe: set.universe().iter().map(str::to_owned).collect(),
            pos,
            neg,
        }
    }

    pub fn domain(&self) -> BTreeSet<&String> {
        self.pos.keys().collect()
    }

    pub fn is_consistent(&self) -> bool {
        self.pos
            .iter()
            .all(|(label, f)| f.is_disjoint(&self.neg[label]))
    }

    pub fn complement(&self) -> Naive {
        Naive {
            universe: self.universe.clone(),
            pos: self.neg.clone(),
            neg: self.pos.clone(),
        }
    }

    /// Extended union/intersection: domain is the union of the domains,
    /// with the three-way case split per parameter.
    fn extended(&self, other: &Naive, union: bool) -> Naive {
        let mut pos = BTreeMap::new();
        let mut neg = BTreeMap::new();
        let labels: BTreeSet<&String> = self.pos.keys().chain(other.pos.keys()).collect();
        for label in labels {
            let (f, g) = match (self.pos.get(label), other.pos.get(label)) {
                (Some(f), None) => (f.clone(), self.neg[label].clone()),
                (None, Some(f1)) => (f1.clone(), other.neg[label].clone()),
                (Some(f), Some(f1)) => {
                    let (g, g1) = (&self.neg[label], &other.neg[label]);
                    if union {
                        (f | f1, g & g1)
                    } else {
                        (f & f1, g | g1)
                    }
                }
                (None, None) => unreachable!("label came from one of the domains"),
            };
            pos.insert(label.clone(), f);
            neg.insert(label.clone(), g);
        }
        Naive {
            universe: self.universe.clone(),
            pos,
            neg,
        }
    }

    pub fn union_extended(&self, other: &Naive) -> Naive {
        self.extended(other, true)
    }

    pub fn intersection_extended(&self, other: &Naive) -> Naive {
        self.extended(other, false)
    }

    /// Restricted union/intersection: only the common domain, `None` when
    /// there is none.
    fn restricted(&self, other: &Naive, union: bool) -> Option<Naive> {
        let labels: Vec<&String> = self
            .pos
            .keys()
            .filter(|l| other.pos.contains_key(*l))
            .collect();
        if labels.is_empty() {
            return None;
        }
        let mut pos = BTreeMap::new();
        let mut neg = BTreeMap::new();
        for label in labels {
            let (f, f1) = (&self.pos[label], &other.pos[label]);
            let (g, g1) = (&self.neg[label], &other.neg[label]);
            let (h, i) = if union { (f | f1, g & g1) } else { (f & f1, g | g1) };
            pos.insert(label.clone(), h);
            neg.insert(label.clone(), i);
        }
        Some(Naive {
            universe: self.universe.clone(),
            pos,
            neg,
        })
    }

    pub fn union_restricted(&self, other: &Naive) -> Option<Naive> {
        self.restricted(other, true)
    }

    pub fn intersection_restricted(&self, other: &Naive) -> Option<Naive> {
        self.restricted(other, false)
    }

    /// AND/OR products over all parameter pairs, with `(a,b)` labels.
    fn product(&self, other: &Naive, and: bool) -> Naive {
        let mut pos = BTreeMap::new();
        let mut neg = BTreeMap::new();
        for (a, f) in &self.pos {
            for (b, f1) in &other.pos {
                let label = format!("({a},{b})");
                let (g, g1) = (&self.neg[a], &other.neg[b]);
                let (h, i) = if and { (f & f1, g | g1) } else { (f | f1, g & g1) };
                pos.insert(label.clone(), h);
                neg.insert(label, i);
            }
        }
        Naive {
            universe: self.universe.clone(),
            pos,
            neg,
        }
    }

    pub fn and_product(&self, other: &Naive) -> Naive {
        self.product(other, true)
    }

    pub fn or_product(&self, other: &Naive) -> Naive {
        self.product(other, false)
    }
}

// ---------------------------------------------------------------------
// Decision-side oracles: tables as plain i64 matrices, partitions as
// boolean "same block" relations over row pairs.
// ---------------------------------------------------------------------

/// An equivalence relation on row indices, stored pairwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    pub n: usize,
    pub same: Vec<Vec<bool>>,
}

impl Relation {
    fn from_key<K: PartialEq>(keys: &[K]) -> Relation {
        let n = keys.len();
        let same = (0..n)
            .map(|i| (0..n).map(|j| keys[i] == keys[j]).collect())
            .collect();
        Relation { n, same }
    }

    /// True when `self` is finer: whenever it relates two rows, `coarser`
    /// does too.
    pub fn refines(&self, coarser: &Relation) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| !self.same[i][j] || coarser.same[i][j]))
    }

    /// Canonical block list (ascending members, ordered by smallest), for
    /// comparing against the library's partitions.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut blocks = Vec::new();
        for i in 0..self.n {
            if seen[i] {
                continue;
            }
            let block: Vec<usize> = (i..self.n).filter(|&j| self.same[i][j]).collect();
            for &j in &block {
                seen[j] = true;
            }
            blocks.push(block);
        }
        blocks
    }
}

/// Rows grouped by their entries over the chosen columns.
pub fn condition_relation(rows: &[Vec<i64>], cols: &[usize]) -> Relation {
    let keys: Vec<Vec<i64>> = rows
        .iter()
        .map(|row| cols.iter().map(|&j| row[j]).collect())
        .collect();
    Relation::from_key(&keys)
}

/// Rows grouped by their decision values (sums over the chosen columns).
pub fn decision_relation(rows: &[Vec<i64>], cols: &[usize]) -> Relation {
    let sums: Vec<i64> = rows
        .iter()
        .map(|row| cols.iter().map(|&j| row[j]).sum())
        .collect();
    Relation::from_key(&sums)
}

/// Whether dropping column `j` keeps (1) the remaining columns able to
/// predict the recomputed decisions and (2) the decision grouping itself.
pub fn dispensable(rows: &[Vec<i64>], active: &[usize], j: usize) -> bool {
    let rest: Vec<usize> = active.iter().copied().filter(|&c| c != j).collect();
    let full: Vec<usize> = (0..rows.first().map_or(0, Vec::len)).collect();
    let decision = decision_relation(rows, &rest);
    decision == decision_relation(rows, &full) && condition_relation(rows, &rest).refines(&decision)
}

/// The same left-to-right, restart-after-elimination scan the library
/// promises, driven entirely by the relation oracles above. Returns
/// (eliminated, core) as column indices.
pub fn reduce(rows: &[Vec<i64>]) -> (Vec<usize>, Vec<usize>) {
    let n_cols = rows.first().map_or(0, Vec::len);
    let mut active: Vec<usize> = (0..n_cols).collect();
    let mut eliminated = Vec::new();
    'scan: loop {
        for (k, &j) in active.iter().enumerate() {
            if dispensable(rows, &active, j) {
                eliminated.push(j);
                active.remove(k);
                continue 'scan;
            }
        }
        break;
    }
    (eliminated, active)
}
