//! Objects under discussion and subsets of them.

use std::fmt;

use crate::error::{Error, Result};

/// Checks a label against the lexical rules shared by object and parameter
/// identifiers: non-empty, no whitespace, and none of `:`, `/`, `"`, `#`
/// (all reserved by the file formats).
pub(crate) fn validate_label(label: &str) -> Result<()> {
    if label.is_empty() {
        return Err(Error::InvalidIdentifier {
            label: label.to_owned(),
            reason: "labels must be non-empty",
        });
    }
    if label.chars().any(char::is_whitespace) {
        return Err(Error::InvalidIdentifier {
            label: label.to_owned(),
            reason: "labels must not contain whitespace",
        });
    }
    if label.chars().any(|c| matches!(c, ':' | '/' | '"' | '#')) {
        return Err(Error::InvalidIdentifier {
            label: label.to_owned(),
            reason: "labels must not contain ':', '/', '\"', or '#'",
        });
    }
    Ok(())
}

/// The ordered, finite collection of objects a bipolar soft set talks about.
///
/// Order is fixed at construction; it drives every tabular row index, every
/// partition block listing, and tie-breaking in decision rankings.
///
/// ```
/// use bipolar_soft_sets::Universe;
///
/// let houses = Universe::new(["h1", "h2", "h3"])?;
/// assert_eq!(houses.len(), 3);
/// assert_eq!(houses.index_of("h2"), Some(1));
/// # Ok::<(), bipolar_soft_sets::Error>(())
/// ```
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Universe {
    labels: Vec<String>,
}

impl Universe {
    /// Builds a universe from distinct object labels, preserving their
    /// order.
    pub fn new<I, S>(labels: I) -> Result<Universe>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        for (i, label) in labels.iter().enumerate() {
            validate_label(label)?;
            if labels[..i].contains(label) {
                return Err(Error::DuplicateIdentifier(label.clone()));
            }
        }
        Ok(Universe { labels })
    }

    /// Number of objects.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// True when there are no objects at all.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// The label at a given position.
    ///
    /// # Panics
    ///
    /// Panics when `index` is out of range.
    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    /// Position of a label, if present.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Position of a label, or [`Error::UnknownObject`].
    pub fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownObject(label.to_owned()))
    }

    /// Iterates over the labels in universe order.
    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(String::as_str)
    }

    /// Builds the subset holding exactly the given objects.
    pub fn subset<I, S>(&self, labels: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut subset = Subset::empty(self.len());
        for label in labels {
            subset.insert(self.require(label.as_ref())?);
        }
        Ok(subset)
    }

    /// The labels of a subset's members, in universe order.
    pub fn labels_of<'a>(&'a self, subset: &Subset) -> Vec<&'a str> {
        assert_eq!(
            subset.universe_len(),
            self.len(),
            "subset belongs to a universe of a different size"
        );
        subset.iter().map(|i| self.label(i)).collect()
    }
}

/// A subset of a universe, stored as a fixed-width bit vector.
///
/// A `Subset` knows positions, not labels; [`Universe::subset`] and
/// [`Universe::labels_of`] translate in both directions. Binary operations
/// require both operands to come from universes of the same size and panic
/// otherwise — mixing universes is a programming error, not a recoverable
/// condition.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    len: usize,
    bits: Vec<u64>,
}

impl Subset {
    /// The empty subset of a universe with `len` objects.
    pub fn empty(len: usize) -> Subset {
        Subset {
            len,
            bits: vec![0; len.div_ceil(64)],
        }
    }

    /// The subset holding every one of the `len` objects.
    pub fn full(len: usize) -> Subset {
        let mut subset = Subset::empty(len);
        for word in &mut subset.bits {
            *word = u64::MAX;
        }
        subset.mask_tail();
        subset
    }

    /// Builds a subset from member positions.
    ///
    /// # Panics
    ///
    /// Panics when a position is out of range.
    pub fn from_indices(len: usize, indices: &[usize]) -> Subset {
        let mut subset = Subset::empty(len);
        for &i in indices {
            subset.insert(i);
        }
        subset
    }

    /// Size of the underlying universe (not the member count).
    pub fn universe_len(&self) -> usize {
        self.len
    }

    /// Number of members.
    pub fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True when the subset has no members.
    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Membership test.
    ///
    /// # Panics
    ///
    /// Panics when `index` is out of range.
    pub fn contains(&self, index: usize) -> bool {
        assert!(index < self.len, "index {index} out of range");
        self.bits[index / 64] & (1 << (index % 64)) != 0
    }

    /// Adds a member.
    pub fn insert(&mut self, index: usize) {
        assert!(index < self.len, "index {index} out of range");
        self.bits[index / 64] |= 1 << (index % 64);
    }

    /// Removes a member.
    pub fn remove(&mut self, index: usize) {
        assert!(index < self.len, "index {index} out of range");
        self.bits[index / 64] &= !(1 << (index % 64));
    }

    /// Members of either subset.
    pub fn union(&self, other: &Subset) -> Subset {
        self.zip_words(other, |a, b| a | b)
    }

    /// Members of both subsets.
    pub fn intersection(&self, other: &Subset) -> Subset {
        self.zip_words(other, |a, b| a & b)
    }

    /// Members of `self` that are not in `other`.
    pub fn difference(&self, other: &Subset) -> Subset {
        self.zip_words(other, |a, b| a & !b)
    }

    /// The complement within the universe.
    pub fn complement(&self) -> Subset {
        let mut out = self.clone();
        for word in &mut out.bits {
            *word = !*word;
        }
        out.mask_tail();
        out
    }

    /// True when every member of `self` is a member of `other`.
    pub fn is_subset_of(&self, other: &Subset) -> bool {
        assert_eq!(self.len, other.len, "subsets of different universes");
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// True when the two subsets share no member.
    pub fn is_disjoint(&self, other: &Subset) -> bool {
        assert_eq!(self.len, other.len, "subsets of different universes");
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & b == 0)
    }

    /// Iterates over member positions in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }

    fn zip_words(&self, other: &Subset, op: impl Fn(u64, u64) -> u64) -> Subset {
        assert_eq!(self.len, other.len, "subsets of different universes");
        Subset {
            len: self.len,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }

    // Clears the bits above `len` in the last word so that equality and
    // counting stay exact after a complement.
    fn mask_tail(&mut self) {
        let used = self.len % 64;
        if used != 0 {
            if let Some(last) = self.bits.last_mut() {
                *last &= (1u64 << used) - 1;
            }
        }
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}} of {}", self.len)
    }
}
