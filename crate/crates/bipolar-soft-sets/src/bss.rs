//! Bipolar soft sets and their operation algebra.

use crate::error::{Error, Result};
use crate::params::{Parameter, ParameterSpace};
use crate::universe::{Subset, Universe};

/// A two-sided parameterized family of subsets: for every parameter `e` of
/// its domain, a set of positive examples `F(e)`, a set of negative examples
/// `G(¬e)`, and implicitly the remaining "gray area" in between (the
/// [hesitation](BipolarSoftSet::hesitation)).
///
/// The defining invariant — no object is simultaneously a positive and a
/// negative example of the same parameter — is checked by every constructor
/// and preserved by every operation.
///
/// A set lives over a [`Universe`] of objects and a [`ParameterSpace`]; its
/// *domain* is the subset of the space it actually speaks about. Two sets
/// can be combined exactly when their universes and spaces are equal.
///
/// ```
/// use bipolar_soft_sets::{BipolarSoftSet, ParameterSpace, Universe};
///
/// let houses = Universe::new(["h1", "h2", "h3", "h4", "h5"])?;
/// let traits = ParameterSpace::from_tokens(["cheap/expensive", "wooden"])?;
///
/// let offer = BipolarSoftSet::builder(houses, traits)
///     .param("cheap", &["h2", "h3"], &["h4", "h5"])
///     .param("wooden", &["h1"], &["h2", "h4"])
///     .build()?;
///
/// // h1 is neither cheap nor expensive: it sits in the hesitation gap.
/// let gap = offer.hesitation("cheap")?;
/// assert_eq!(offer.universe().labels_of(&gap), ["h1"]);
/// # Ok::<(), bipolar_soft_sets::Error>(())
/// ```
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BipolarSoftSet {
    universe: Universe,
    space: ParameterSpace,
    domain: Vec<usize>, // sorted indices into `space`
    pos: Vec<Subset>,   // aligned with `domain`
    neg: Vec<Subset>,   // aligned with `domain`
}

// How the two sides combine on a shared parameter. Union accumulates
// positive evidence and insists on agreement for negative evidence;
// intersection does the opposite.
#[derive(Clone, Copy)]
enum Combine {
    Union,
    Intersection,
}

fn combine_pair(
    how: Combine,
    p1: &Subset,
    n1: &Subset,
    p2: &Subset,
    n2: &Subset,
) -> (Subset, Subset) {
    match how {
        Combine::Union => (p1.union(p2), n1.intersection(n2)),
        Combine::Intersection => (p1.intersection(p2), n1.union(n2)),
    }
}

impl BipolarSoftSet {
    /// Starts building a set by listing positive/negative examples per
    /// parameter; see [`Builder`].
    pub fn builder(universe: Universe, space: ParameterSpace) -> Builder {
        Builder {
            universe,
            space,
            entries: Vec::new(),
        }
    }

    /// Builds a set from label-keyed membership lists.
    ///
    /// `positive` is keyed by positive labels and `negative` by negation
    /// labels; both must cover the declared domain exactly (every domain
    /// parameter once, nothing else).
    pub fn new(
        universe: Universe,
        space: ParameterSpace,
        domain: &[&str],
        positive: &[(&str, &[&str])],
        negative: &[(&str, &[&str])],
    ) -> Result<BipolarSoftSet> {
        let mut idx = Vec::with_capacity(domain.len());
        for label in domain {
            let i = space.require(label)?;
            if idx.contains(&i) {
                return Err(Error::DuplicateIdentifier((*label).to_owned()));
            }
            idx.push(i);
        }
        idx.sort_unstable();

        let mut pos: Vec<Option<Subset>> = vec![None; idx.len()];
        for (label, objects) in positive {
            let slot = idx
                .iter()
                .position(|&i| space.get(i).positive() == *label)
                .ok_or_else(|| Error::DomainMismatch {
                    parameter: (*label).to_owned(),
                })?;
            if pos[slot].is_some() {
                return Err(Error::DuplicateIdentifier((*label).to_owned()));
            }
            pos[slot] = Some(universe.subset(objects.iter().copied())?);
        }
        let mut neg: Vec<Option<Subset>> = vec![None; idx.len()];
        for (label, objects) in negative {
            let slot = idx
                .iter()
                .position(|&i| space.get(i).negation() == *label)
                .ok_or_else(|| Error::DomainMismatch {
                    parameter: (*label).to_owned(),
                })?;
            if neg[slot].is_some() {
                return Err(Error::DuplicateIdentifier((*label).to_owned()));
            }
            neg[slot] = Some(universe.subset(objects.iter().copied())?);
        }

        // Both maps must be total on the domain.
        for (slot, &i) in idx.iter().enumerate() {
            if pos[slot].is_none() {
                return Err(Error::DomainMismatch {
                    parameter: space.get(i).positive().to_owned(),
                });
            }
            if neg[slot].is_none() {
                return Err(Error::DomainMismatch {
                    parameter: space.get(i).negation().to_owned(),
                });
            }
        }

        let set = BipolarSoftSet {
            universe,
            space,
            domain: idx,
            pos: pos.into_iter().map(Option::unwrap).collect(),
            neg: neg.into_iter().map(Option::unwrap).collect(),
        };
        set.check_consistency()?;
        Ok(set)
    }

    /// Builds a set from pre-assembled subsets, aligned with `domain` as
    /// given (any order; the set stores them in space order).
    pub fn from_subsets(
        universe: Universe,
        space: ParameterSpace,
        domain: &[&str],
        positive: Vec<Subset>,
        negative: Vec<Subset>,
    ) -> Result<BipolarSoftSet> {
        if positive.len() != domain.len() {
            return Err(Error::SizeMismatch {
                what: "positive approximations",
                expected: domain.len(),
                found: positive.len(),
            });
        }
        if negative.len() != domain.len() {
            return Err(Error::SizeMismatch {
                what: "negative approximations",
                expected: domain.len(),
                found: negative.len(),
            });
        }
        let mut triples: Vec<(usize, Subset, Subset)> = Vec::with_capacity(domain.len());
        for ((label, p), n) in domain.iter().zip(positive).zip(negative) {
            let i = space.require(label)?;
            if triples.iter().any(|t| t.0 == i) {
                return Err(Error::DuplicateIdentifier((*label).to_owned()));
            }
            for s in [&p, &n] {
                if s.universe_len() != universe.len() {
                    return Err(Error::SizeMismatch {
                        what: "subset bits",
                        expected: universe.len(),
                        found: s.universe_len(),
                    });
                }
            }
            triples.push((i, p, n));
        }
        triples.sort_by_key(|t| t.0);
        let mut domain = Vec::with_capacity(triples.len());
        let mut pos = Vec::with_capacity(triples.len());
        let mut neg = Vec::with_capacity(triples.len());
        for (i, p, n) in triples {
            domain.push(i);
            pos.push(p);
            neg.push(n);
        }
        let set = BipolarSoftSet {
            universe,
            space,
            domain,
            pos,
            neg,
        };
        set.check_consistency()?;
        Ok(set)
    }

    /// The set that is everywhere maximally negative: `F(e) = ∅`,
    /// `G(¬e) = U` for every domain parameter.
    pub fn relative_null(
        universe: Universe,
        space: ParameterSpace,
        domain: &[&str],
    ) -> Result<BipolarSoftSet> {
        let (n, k) = (universe.len(), domain.len());
        Self::from_subsets(
            universe,
            space,
            domain,
            vec![Subset::empty(n); k],
            vec![Subset::full(n); k],
        )
    }

    /// The set that is everywhere maximally positive: `F(e) = U`,
    /// `G(¬e) = ∅` for every domain parameter.
    pub fn relative_absolute(
        universe: Universe,
        space: ParameterSpace,
        domain: &[&str],
    ) -> Result<BipolarSoftSet> {
        let (n, k) = (universe.len(), domain.len());
        Self::from_subsets(
            universe,
            space,
            domain,
            vec![Subset::full(n); k],
            vec![Subset::empty(n); k],
        )
    }

    fn check_consistency(&self) -> Result<()> {
        for (slot, &i) in self.domain.iter().enumerate() {
            let both = self.pos[slot].intersection(&self.neg[slot]);
            let offender = both.iter().next();
            if let Some(obj) = offender {
                return Err(Error::ConsistencyViolation {
                    parameter: self.space.get(i).positive().to_owned(),
                    object: self.universe.label(obj).to_owned(),
                });
            }
        }
        Ok(())
    }

    // Assembly for operation results whose consistency is guaranteed by
    // construction (`domain` must already be sorted and deduplicated).
    fn assemble(
        universe: Universe,
        space: ParameterSpace,
        domain: Vec<usize>,
        pos: Vec<Subset>,
        neg: Vec<Subset>,
    ) -> BipolarSoftSet {
        let set = BipolarSoftSet {
            universe,
            space,
            domain,
            pos,
            neg,
        };
        debug_assert!(set.domain.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(set.check_consistency().is_ok());
        set
    }

    /// The objects.
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// The ambient parameter space.
    pub fn space(&self) -> &ParameterSpace {
        &self.space
    }

    /// The domain parameters, in space order.
    pub fn domain(&self) -> impl Iterator<Item = &Parameter> {
        self.domain.iter().map(|&i| self.space.get(i))
    }

    /// The positive labels of the domain, in space order.
    pub fn domain_labels(&self) -> impl Iterator<Item = &str> {
        self.domain().map(Parameter::positive)
    }

    /// Number of domain parameters.
    pub fn domain_len(&self) -> usize {
        self.domain.len()
    }

    /// Whether a positive label names a domain parameter.
    pub fn contains_parameter(&self, label: &str) -> bool {
        self.slot(label).is_ok()
    }

    fn slot(&self, label: &str) -> Result<usize> {
        let i = self
            .space
            .index_of(label)
            .ok_or_else(|| Error::UnknownParameter(label.to_owned()))?;
        self.domain
            .binary_search(&i)
            .map_err(|_| Error::UnknownParameter(label.to_owned()))
    }

    /// The positive examples `F(e)` of a domain parameter.
    pub fn positive(&self, label: &str) -> Result<&Subset> {
        Ok(&self.pos[self.slot(label)?])
    }

    /// The negative examples `G(¬e)` of a domain parameter (addressed by
    /// its positive label).
    pub fn negative(&self, label: &str) -> Result<&Subset> {
        Ok(&self.neg[self.slot(label)?])
    }

    /// The hesitation gap `H(e) = U − (F(e) ∪ G(¬e))`: objects classified by
    /// neither side. For every domain parameter, `F(e)`, `G(¬e)`, and `H(e)`
    /// are pairwise disjoint and cover the universe.
    pub fn hesitation(&self, label: &str) -> Result<Subset> {
        let slot = self.slot(label)?;
        Ok(self.pos[slot].union(&self.neg[slot]).complement())
    }

    fn check_compatible(&self, other: &BipolarSoftSet) -> Result<()> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch);
        }
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(())
    }

    /// Whether `self ⊆̃ other`: the domain is contained in `other`'s and, on
    /// every shared parameter, `self` claims fewer positive examples and at
    /// least the negative examples of `other`.
    pub fn is_subset_of(&self, other: &BipolarSoftSet) -> Result<bool> {
        self.check_compatible(other)?;
        for (slot, &i) in self.domain.iter().enumerate() {
            let Ok(oslot) = other.domain.binary_search(&i) else {
                return Ok(false);
            };
            if !self.pos[slot].is_subset_of(&other.pos[oslot]) {
                return Ok(false);
            }
            if !other.neg[oslot].is_subset_of(&self.neg[slot]) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Mutual containment. Once universes and spaces agree this coincides
    /// with structural equality (`==`); unlike `==`, it reports mismatched
    /// universes or spaces as errors instead of `false`.
    pub fn equals(&self, other: &BipolarSoftSet) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self == other)
    }

    /// Swaps the positive and negative sides of every parameter. An
    /// involution: applying it twice restores the original set.
    pub fn complement(&self) -> BipolarSoftSet {
        BipolarSoftSet {
            universe: self.universe.clone(),
            space: self.space.clone(),
            domain: self.domain.clone(),
            pos: self.neg.clone(),
            neg: self.pos.clone(),
        }
    }

    /// Union over the combined domain. Where only one operand speaks, it is
    /// copied through; where both do, positive examples accumulate
    /// (`F ∪ F₁`) and negative examples must agree (`G ∩ G₁`).
    pub fn union_extended(&self, other: &BipolarSoftSet) -> Result<BipolarSoftSet> {
        self.combine_extended(other, Combine::Union)
    }

    /// Intersection over the combined domain. Where only one operand
    /// speaks, it is copied through; where both do, positive examples must
    /// agree (`F ∩ F₁`) and negative examples accumulate (`G ∪ G₁`).
    pub fn intersection_extended(&self, other: &BipolarSoftSet) -> Result<BipolarSoftSet> {
        self.combine_extended(other, Combine::Intersection)
    }

    /// Union over the common domain only (`F ∪ F₁`, `G ∩ G₁` there); fails
    /// with [`Error::EmptyCommonDomain`] when the domains share nothing.
    pub fn union_restricted(&self, other: &BipolarSoftSet) -> Result<BipolarSoftSet> {
        self.combine_restricted(other, Combine::Union)
    }

    /// Intersection over the common domain only (`F ∩ F₁`, `G ∪ G₁` there);
    /// fails with [`Error::EmptyCommonDomain`] when the domains share
    /// nothing.
    pub fn intersection_restricted(&self, other: &BipolarSoftSet) -> Result<BipolarSoftSet> {
        self.combine_restricted(other, Combine::Intersection)
    }

    fn combine_extended(&self, other: &BipolarSoftSet, how: Combine) -> Result<BipolarSoftSet> {
        self.check_compatible(other)?;
        let mut domain = Vec::new();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for i in 0..self.space.len() {
            let a = self.domain.binary_search(&i).ok();
            let b = other.domain.binary_search(&i).ok();
            let (p, n) = match (a, b) {
                (Some(sa), None) => (self.pos[sa].clone(), self.neg[sa].clone()),
                (None, Some(sb)) => (other.pos[sb].clone(), other.neg[sb].clone()),
                (Some(sa), Some(sb)) => combine_pair(
                    how,
                    &self.pos[sa],
                    &self.neg[sa],
                    &other.pos[sb],
                    &other.neg[sb],
                ),
                (None, None) => continue,
            };
            domain.push(i);
            pos.push(p);
            neg.push(n);
        }
        Ok(Self::assemble(
            self.universe.clone(),
            self.space.clone(),
            domain,
            pos,
            neg,
        ))
    }

    fn combine_restricted(&self, other: &BipolarSoftSet, how: Combine) -> Result<BipolarSoftSet> {
        self.check_compatible(other)?;
        let mut domain = Vec::new();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for (sa, &i) in self.domain.iter().enumerate() {
            let Ok(sb) = other.domain.binary_search(&i) else {
                continue;
            };
            let (p, n) = combine_pair(
                how,
                &self.pos[sa],
                &self.neg[sa],
                &other.pos[sb],
                &other.neg[sb],
            );
            domain.push(i);
            pos.push(p);
            neg.push(n);
        }
        if domain.is_empty() {
            return Err(Error::EmptyCommonDomain);
        }
        Ok(Self::assemble(
            self.universe.clone(),
            self.space.clone(),
            domain,
            pos,
            neg,
        ))
    }

    /// The conjunction product over parameter pairs `(a,b)`: positive where
    /// both sides are positive (`F(a) ∩ F₁(b)`), negative where either is
    /// negative (`G(¬a) ∪ G₁(¬b)`). The result lives over a fresh space made
    /// of the paired parameters.
    pub fn and_product(&self, other: &BipolarSoftSet) -> Result<BipolarSoftSet> {
        self.product(other, Combine::Intersection)
    }

    /// The disjunction product over parameter pairs `(a,b)`: positive where
    /// either side is positive (`F(a) ∪ F₁(b)`), negative where both are
    /// (`G(¬a) ∩ G₁(¬b)`).
    pub fn or_product(&self, other: &BipolarSoftSet) -> Result<BipolarSoftSet> {
        self.product(other, Combine::Union)
    }

    fn product(&self, other: &BipolarSoftSet, how: Combine) -> Result<BipolarSoftSet> {
        self.check_compatible(other)?;
        let mut params = Vec::new();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for (sa, &ia) in self.domain.iter().enumerate() {
            for (sb, &ib) in other.domain.iter().enumerate() {
                params.push(self.space.get(ia).product(other.space.get(ib)));
                let (p, n) = combine_pair(
                    how,
                    &self.pos[sa],
                    &self.neg[sa],
                    &other.pos[sb],
                    &other.neg[sb],
                );
                pos.push(p);
                neg.push(n);
            }
        }
        // Pair labels are distinct whenever the operand labels are, except
        // for pathological comma-bearing labels; the space constructor
        // reports those rather than silently merging columns.
        let space = ParameterSpace::new(params)?;
        let domain = (0..space.len()).collect();
        Ok(Self::assemble(
            self.universe.clone(),
            space,
            domain,
            pos,
            neg,
        ))
    }
}

/// Incremental constructor for [`BipolarSoftSet`], listing positive and
/// negative examples parameter by parameter. Parameters never mentioned stay
/// outside the domain.
///
/// Validation happens in [`build`](Builder::build): unknown labels,
/// duplicate parameters, and consistency violations are all reported there.
pub struct Builder {
    universe: Universe,
    space: ParameterSpace,
    entries: Vec<(String, Vec<String>, Vec<String>)>,
}

impl Builder {
    /// Adds a parameter to the domain with its positive and negative
    /// examples.
    pub fn param(mut self, label: &str, positive: &[&str], negative: &[&str]) -> Builder {
        self.entries.push((
            label.to_owned(),
            positive.iter().map(|s| (*s).to_owned()).collect(),
            negative.iter().map(|s| (*s).to_owned()).collect(),
        ));
        self
    }

    /// Validates and assembles the set.
    pub fn build(self) -> Result<BipolarSoftSet> {
        let Builder {
            universe,
            space,
            entries,
        } = self;
        let mut domain = Vec::with_capacity(entries.len());
        let mut pos = Vec::with_capacity(entries.len());
        let mut neg = Vec::with_capacity(entries.len());
        for (label, p, n) in &entries {
            domain.push(label.as_str());
            pos.push(universe.subset(p)?);
            neg.push(universe.subset(n)?);
        }
        BipolarSoftSet::from_subsets(universe, space, &domain, pos, neg)
    }
}
