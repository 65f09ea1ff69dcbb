//! {−1, 0, 1} table encodings of a bipolar soft set.
//!
//! Two equivalent encodings exist: the single [`TriTable`], whose cells say
//! which side of a parameter an object falls on, and the [`PairTable`] of
//! two 0/1 indicator matrices (one per side). They interconvert exactly —
//! the tri-valued cell is the difference of the two indicators.

use std::fmt;

use crate::bss::BipolarSoftSet;
use crate::error::{Error, Result};
use crate::params::{Parameter, ParameterSpace};
use crate::universe::{Subset, Universe};

/// A single table cell: positive example, negative example, or neither.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Entry {
    /// The object is a negative example (value −1).
    Negative,
    /// The object is claimed by neither side (value 0).
    Hesitant,
    /// The object is a positive example (value 1).
    Positive,
}

impl Entry {
    /// Numeric value of the cell: 1, 0, or −1.
    pub fn value(self) -> i64 {
        match self {
            Entry::Positive => 1,
            Entry::Hesitant => 0,
            Entry::Negative => -1,
        }
    }

    /// The cell for a numeric value, or [`Error::BadEntry`] for anything
    /// outside {−1, 0, 1}.
    pub fn from_value(value: i64) -> Result<Entry> {
        match value {
            1 => Ok(Entry::Positive),
            0 => Ok(Entry::Hesitant),
            -1 => Ok(Entry::Negative),
            other => Err(Error::BadEntry(other.to_string())),
        }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Entry::Positive => "1",
            Entry::Hesitant => "0",
            Entry::Negative => "-1",
        })
    }
}

fn check_labels(labels: &[String], what: &'static str) -> Result<()> {
    for (i, label) in labels.iter().enumerate() {
        crate::universe::validate_label(label)?;
        if labels[..i].contains(label) {
            return Err(Error::DuplicateIdentifier(label.clone()));
        }
    }
    let _ = what;
    Ok(())
}

/// The one-table encoding: rows are objects, columns are parameters, each
/// cell records the side the object falls on.
///
/// Row order follows the universe and column order the domain, so encoding
/// is deterministic and golden tables compare cell for cell.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TriTable {
    row_labels: Vec<String>,
    columns: Vec<Parameter>,
    entries: Vec<Vec<Entry>>, // row-major
}

impl TriTable {
    /// Builds a table, validating label distinctness and dimensions.
    pub fn new(
        row_labels: Vec<String>,
        columns: Vec<Parameter>,
        entries: Vec<Vec<Entry>>,
    ) -> Result<TriTable> {
        check_labels(&row_labels, "row labels")?;
        let column_labels: Vec<String> =
            columns.iter().map(|p| p.positive().to_owned()).collect();
        check_labels(&column_labels, "column labels")?;
        if entries.len() != row_labels.len() {
            return Err(Error::SizeMismatch {
                what: "rows",
                expected: row_labels.len(),
                found: entries.len(),
            });
        }
        for row in &entries {
            if row.len() != columns.len() {
                return Err(Error::SizeMismatch {
                    what: "row entries",
                    expected: columns.len(),
                    found: row.len(),
                });
            }
        }
        Ok(TriTable {
            row_labels,
            columns,
            entries,
        })
    }

    /// Encodes a set: 1 on `F(e)`, −1 on `G(¬e)`, 0 on the hesitation gap.
    pub fn from_set(set: &BipolarSoftSet) -> TriTable {
        let row_labels: Vec<String> = set.universe().iter().map(str::to_owned).collect();
        let columns: Vec<Parameter> = set.domain().cloned().collect();
        let entries = (0..set.universe().len())
            .map(|i| {
                columns
                    .iter()
                    .map(|p| {
                        let label = p.positive();
                        if set.positive(label).unwrap().contains(i) {
                            Entry::Positive
                        } else if set.negative(label).unwrap().contains(i) {
                            Entry::Negative
                        } else {
                            Entry::Hesitant
                        }
                    })
                    .collect()
            })
            .collect();
        TriTable {
            row_labels,
            columns,
            entries,
        }
    }

    /// Decodes back into a set over the given space. The universe is
    /// rebuilt from the row labels; every column must name a space
    /// parameter with a matching negation label.
    pub fn to_set(&self, space: &ParameterSpace) -> Result<BipolarSoftSet> {
        let universe = Universe::new(self.row_labels.clone())?;
        let mut domain = Vec::with_capacity(self.columns.len());
        for column in &self.columns {
            let i = space.require(column.positive())?;
            if space.get(i) != column {
                return Err(Error::UnknownParameter(column.token()));
            }
            domain.push(column.positive());
        }
        let n = universe.len();
        let mut pos = vec![Subset::empty(n); self.columns.len()];
        let mut neg = vec![Subset::empty(n); self.columns.len()];
        for (i, row) in self.entries.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                match entry {
                    Entry::Positive => pos[j].insert(i),
                    Entry::Negative => neg[j].insert(i),
                    Entry::Hesitant => {}
                }
            }
        }
        BipolarSoftSet::from_subsets(universe, space.clone(), &domain, pos, neg)
    }

    /// Keeps only the named columns, in the order given.
    pub fn select_columns(&self, labels: &[&str]) -> Result<TriTable> {
        let mut picked = Vec::with_capacity(labels.len());
        for (k, label) in labels.iter().enumerate() {
            if labels[..k].contains(label) {
                return Err(Error::DuplicateIdentifier((*label).to_owned()));
            }
            let j = self
                .columns
                .iter()
                .position(|p| p.positive() == *label)
                .ok_or_else(|| Error::UnknownParameter((*label).to_owned()))?;
            picked.push(j);
        }
        TriTable::new(
            self.row_labels.clone(),
            picked.iter().map(|&j| self.columns[j].clone()).collect(),
            self.entries
                .iter()
                .map(|row| picked.iter().map(|&j| row[j]).collect())
                .collect(),
        )
    }

    /// Splits into the pair-of-indicator-matrices encoding.
    pub fn to_pair(&self) -> PairTable {
        PairTable {
            row_labels: self.row_labels.clone(),
            columns: self.columns.clone(),
            f_entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|&e| e == Entry::Positive).collect())
                .collect(),
            g_entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|&e| e == Entry::Negative).collect())
                .collect(),
        }
    }

    /// Row labels (objects), in universe order.
    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    /// Column parameters, in domain order.
    pub fn columns(&self) -> &[Parameter] {
        &self.columns
    }

    /// Positive labels of the columns, in domain order.
    pub fn column_labels(&self) -> impl Iterator<Item = &str> {
        self.columns.iter().map(Parameter::positive)
    }

    /// Number of rows.
    pub fn n_rows(&self) -> usize {
        self.row_labels.len()
    }

    /// Number of columns.
    pub fn n_cols(&self) -> usize {
        self.columns.len()
    }

    /// The cell at (row, column).
    ///
    /// # Panics
    ///
    /// Panics when either index is out of range.
    pub fn entry(&self, row: usize, column: usize) -> Entry {
        self.entries[row][column]
    }

    /// One row of cells.
    pub fn row(&self, row: usize) -> &[Entry] {
        &self.entries[row]
    }
}

/// The two-table encoding: a 0/1 indicator matrix for the positive side and
/// another for the negative side, over the same rows and columns.
///
/// The invariant mirrors the set-level consistency constraint: no cell is 1
/// in both matrices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairTable {
    row_labels: Vec<String>,
    columns: Vec<Parameter>,
    f_entries: Vec<Vec<bool>>,
    g_entries: Vec<Vec<bool>>,
}

impl PairTable {
    /// Builds a pair of indicator tables, validating dimensions and the
    /// no-cell-in-both rule.
    pub fn new(
        row_labels: Vec<String>,
        columns: Vec<Parameter>,
        f_entries: Vec<Vec<bool>>,
        g_entries: Vec<Vec<bool>>,
    ) -> Result<PairTable> {
        check_labels(&row_labels, "row labels")?;
        let column_labels: Vec<String> =
            columns.iter().map(|p| p.positive().to_owned()).collect();
        check_labels(&column_labels, "column labels")?;
        for (matrix, what) in [(&f_entries, "rows"), (&g_entries, "rows")] {
            if matrix.len() != row_labels.len() {
                return Err(Error::SizeMismatch {
                    what,
                    expected: row_labels.len(),
                    found: matrix.len(),
                });
            }
            for row in matrix.iter() {
                if row.len() != columns.len() {
                    return Err(Error::SizeMismatch {
                        what: "row entries",
                        expected: columns.len(),
                        found: row.len(),
                    });
                }
            }
        }
        for (i, (frow, grow)) in f_entries.iter().zip(&g_entries).enumerate() {
            for (j, (&f, &g)) in frow.iter().zip(grow).enumerate() {
                if f && g {
                    return Err(Error::ConsistencyViolation {
                        parameter: columns[j].positive().to_owned(),
                        object: row_labels[i].clone(),
                    });
                }
            }
        }
        Ok(PairTable {
            row_labels,
            columns,
            f_entries,
            g_entries,
        })
    }

    /// Encodes a set as its two indicator matrices.
    pub fn from_set(set: &BipolarSoftSet) -> PairTable {
        TriTable::from_set(set).to_pair()
    }

    /// Decodes back into a set over the given space.
    pub fn to_set(&self, space: &ParameterSpace) -> Result<BipolarSoftSet> {
        self.to_tri().to_set(space)
    }

    /// Merges into the single tri-valued table: cell = f − g.
    pub fn to_tri(&self) -> TriTable {
        TriTable {
            row_labels: self.row_labels.clone(),
            columns: self.columns.clone(),
            entries: self
                .f_entries
                .iter()
                .zip(&self.g_entries)
                .map(|(frow, grow)| {
                    frow.iter()
                        .zip(grow)
                        .map(|(&f, &g)| {
                            Entry::from_value(i64::from(f) - i64::from(g))
                                .expect("indicator difference is always -1, 0, or 1")
                        })
                        .collect()
                })
                .collect(),
        }
    }

    /// Row labels (objects), in universe order.
    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    /// Column parameters, in domain order.
    pub fn columns(&self) -> &[Parameter] {
        &self.columns
    }

    /// Number of rows.
    pub fn n_rows(&self) -> usize {
        self.row_labels.len()
    }

    /// Number of columns.
    pub fn n_cols(&self) -> usize {
        self.columns.len()
    }

    /// Positive-side indicator at (row, column).
    pub fn f(&self, row: usize, column: usize) -> bool {
        self.f_entries[row][column]
    }

    /// Negative-side indicator at (row, column).
    pub fn g(&self, row: usize, column: usize) -> bool {
        self.g_entries[row][column]
    }
}
