//! Decision analysis over tri-valued tables: indiscernibility partitions,
//! parameter reduction, and (weighted) choice rankings.
//!
//! The pipeline mirrors how a choice among objects is made: restrict a
//! [`BipolarSoftSet`] to the parameters that matter
//! ([`decision_table`](BipolarSoftSet::decision_table)), read off each
//! object's decision value (its row sum), check that indiscernible objects
//! agree on it, drop the parameters that carry no information
//! ([`reduce`](DecisionTable::reduce)), and rank
//! ([`decide`](BipolarSoftSet::decide)). The weighted variant scales
//! positive cells by a per-parameter weight `w` and negative cells by
//! `−(1−w)` first.

use crate::bss::BipolarSoftSet;
use crate::error::{Error, Result};
use crate::tabular::{Entry, TriTable};

/// A partition of universe positions into disjoint, covering blocks.
///
/// Stored canonically — each block ascending, blocks ordered by smallest
/// member — so equal partitions compare equal structurally.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// The identity partition: every element alone in its own block.
    pub fn singletons(n: usize) -> Partition {
        Partition {
            n,
            blocks: (0..n).map(|i| vec![i]).collect(),
        }
    }

    /// The universal partition: one block holding everything (no blocks at
    /// all over an empty universe).
    pub fn universal(n: usize) -> Partition {
        Partition {
            n,
            blocks: if n == 0 { Vec::new() } else { vec![(0..n).collect()] },
        }
    }

    /// Groups positions that carry equal values.
    pub fn from_equal_values<T: PartialEq>(values: &[T]) -> Partition {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, v) in values.iter().enumerate() {
            match blocks.iter_mut().find(|b| values[b[0]] == *v) {
                Some(block) => block.push(i),
                None => blocks.push(vec![i]),
            }
        }
        // Blocks arise in order of first occurrence with ascending members:
        // already canonical.
        Partition {
            n: values.len(),
            blocks,
        }
    }

    /// Groups positions whose values sit within `tolerance` of each other,
    /// chaining through intermediate values: a new group starts where the
    /// gap between adjacent sorted values exceeds the tolerance.
    ///
    /// # Panics
    ///
    /// Panics when a value is NaN.
    pub fn from_close_values(values: &[f64], tolerance: f64) -> Partition {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by(|&a, &b| {
            values[a]
                .partial_cmp(&values[b])
                .expect("decision values must not be NaN")
        });
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut current: Vec<usize> = Vec::new();
        for (k, &i) in order.iter().enumerate() {
            if k > 0 && values[i] - values[order[k - 1]] > tolerance {
                blocks.push(std::mem::take(&mut current));
            }
            current.push(i);
        }
        if !current.is_empty() {
            blocks.push(current);
        }
        for block in &mut blocks {
            block.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        Partition {
            n: values.len(),
            blocks,
        }
    }

    /// Size of the underlying universe.
    pub fn universe_len(&self) -> usize {
        self.n
    }

    /// The blocks, canonically ordered.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    // Block index per element.
    fn block_ids(&self) -> Vec<usize> {
        let mut ids = vec![0; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &i in block {
                ids[i] = b;
            }
        }
        ids
    }

    /// Index (into [`blocks`](Partition::blocks)) of the block containing
    /// an element.
    ///
    /// # Panics
    ///
    /// Panics when `element` is out of range.
    pub fn block_of(&self, element: usize) -> usize {
        assert!(element < self.n, "element {element} out of range");
        self.block_ids()[element]
    }

    /// The common refinement: elements share a block iff they share one in
    /// both inputs.
    ///
    /// # Panics
    ///
    /// Panics when the partitions cover universes of different sizes.
    pub fn meet(&self, other: &Partition) -> Partition {
        assert_eq!(self.n, other.n, "partitions of different universes");
        let (a, b) = (self.block_ids(), other.block_ids());
        let keys: Vec<(usize, usize)> = (0..self.n).map(|i| (a[i], b[i])).collect();
        Partition::from_equal_values(&keys)
    }

    /// True when every block of `self` fits inside a block of `coarser` —
    /// the partition-level reading of relation inclusion.
    ///
    /// # Panics
    ///
    /// Panics when the partitions cover universes of different sizes.
    pub fn refines(&self, coarser: &Partition) -> bool {
        assert_eq!(self.n, coarser.n, "partitions of different universes");
        let ids = coarser.block_ids();
        self.blocks
            .iter()
            .all(|block| block.iter().all(|&i| ids[i] == ids[block[0]]))
    }
}

impl BipolarSoftSet {
    /// The three-way split of the universe a single domain parameter
    /// induces: positive examples, negative examples, and the hesitation
    /// gap, with empty classes dropped. When one class swallows the whole
    /// universe this degenerates to the universal partition.
    pub fn sigma(&self, param: &str) -> Result<Partition> {
        let classes = [
            self.positive(param)?.clone(),
            self.negative(param)?.clone(),
            self.hesitation(param)?,
        ];
        let mut blocks: Vec<Vec<usize>> = classes
            .iter()
            .map(|c| c.iter().collect::<Vec<usize>>())
            .filter(|b| !b.is_empty())
            .collect();
        blocks.sort_by_key(|b| b[0]);
        Ok(Partition {
            n: self.universe().len(),
            blocks,
        })
    }

    /// Indiscernibility over a collection of domain parameters: the meet of
    /// their [`sigma`](BipolarSoftSet::sigma) splits. Two objects share a
    /// block iff no chosen parameter tells them apart. The empty collection
    /// yields the universal partition (nothing distinguishes anything).
    pub fn ind(&self, params: &[&str]) -> Result<Partition> {
        let mut partition = Partition::universal(self.universe().len());
        for param in params {
            partition = partition.meet(&self.sigma(param)?);
        }
        Ok(partition)
    }

    /// Restricts the set to the chosen parameters (in the order given) and
    /// adjoins each object's decision value — its row sum.
    pub fn decision_table(&self, params: &[&str]) -> Result<DecisionTable> {
        let tri = TriTable::from_set(self).select_columns(params)?;
        Ok(DecisionTable::new(tri))
    }

    /// Runs the whole unweighted selection procedure over the chosen
    /// parameters: decision table, consistency check, reduction (skipped
    /// when inconsistent), and the ranking with its maximizer set.
    pub fn decide(&self, params: &[&str]) -> Result<DecisionReport> {
        let table = self.decision_table(params)?;
        let condition = table.condition_partition();
        let decision = table.decision_partition();
        let consistent = condition.refines(&decision);
        let reduction = if consistent {
            Some(table.reduce()?)
        } else {
            None
        };
        let (ranking, maximizers) =
            ranking_from_blocks(table.tri().row_labels(), &decision, table.decisions());
        Ok(DecisionReport {
            table,
            condition,
            decision,
            consistent,
            reduction,
            ranking,
            maximizers,
        })
    }

    /// The weighted variant of [`decide`](BipolarSoftSet::decide): scales
    /// entries by the given per-parameter weights (aligned with `params`)
    /// before summing.
    pub fn decide_weighted(
        &self,
        params: &[&str],
        weights: &[f64],
    ) -> Result<WeightedDecisionReport> {
        let tri = TriTable::from_set(self).select_columns(params)?;
        let table = WeightedDecisionTable::new(tri, weights)?;
        let condition = table.condition_partition();
        let decision = table.decision_partition();
        let consistent = condition.refines(&decision);
        let reduction = if consistent {
            Some(table.reduce()?)
        } else {
            None
        };
        let (ranking, maximizers) =
            ranking_from_blocks(table.tri().row_labels(), &decision, table.decisions());
        Ok(WeightedDecisionReport {
            table,
            condition,
            decision,
            consistent,
            reduction,
            ranking,
            maximizers,
        })
    }
}

// Ranking shared by both table kinds: blocks of (near-)equal decision
// values ordered by descending value, members within a block in universe
// order. The maximizers are the whole top block.
fn ranking_from_blocks<T: Copy + PartialOrd>(
    labels: &[String],
    decision: &Partition,
    values: &[T],
) -> (Vec<(String, T)>, Vec<String>) {
    let mut blocks: Vec<&Vec<usize>> = decision.blocks().iter().collect();
    blocks.sort_by(|a, b| {
        values[b[0]]
            .partial_cmp(&values[a[0]])
            .expect("decision values must not be NaN")
    });
    let ranking = blocks
        .iter()
        .flat_map(|block| block.iter().map(|&i| (labels[i].clone(), values[i])))
        .collect();
    let maximizers = blocks
        .first()
        .map(|block| block.iter().map(|&i| labels[i].clone()).collect())
        .unwrap_or_default();
    (ranking, maximizers)
}

// The dispensability scan shared by both table kinds. `condition_of` and
// `decision_of` regroup the rows using only the given (still active)
// columns; `full_decision` is the grouping the reduction must preserve.
fn run_reduction(
    column_labels: Vec<String>,
    full_decision: &Partition,
    condition_of: impl Fn(&[usize]) -> Partition,
    decision_of: impl Fn(&[usize]) -> Partition,
) -> ReductionReport {
    let mut active: Vec<usize> = (0..column_labels.len()).collect();
    let mut eliminated = Vec::new();
    let mut equality_held = Vec::new();
    // Deterministic left-to-right scan, restarting after every elimination:
    // reducts are order-dependent, so the order is part of the contract.
    'scan: loop {
        for (k, &col) in active.iter().enumerate() {
            let rest: Vec<usize> = active.iter().copied().filter(|&c| c != col).collect();
            let decision = decision_of(&rest);
            if decision != *full_decision {
                continue;
            }
            let condition = condition_of(&rest);
            if !condition.refines(&decision) {
                continue;
            }
            equality_held.push(condition == decision);
            eliminated.push(column_labels[col].clone());
            active.remove(k);
            continue 'scan;
        }
        break;
    }
    ReductionReport {
        core: active.iter().map(|&c| column_labels[c].clone()).collect(),
        eliminated,
        consistent: true,
        equality_held,
    }
}

/// A tri-valued table over chosen condition parameters with a decision
/// value per row.
///
/// [`DecisionTable::new`] computes decisions as row sums, which makes the
/// table consistent by construction (equal rows sum equally);
/// [`DecisionTable::with_decisions`] adjoins an externally sourced decision
/// column instead, which may not be.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecisionTable {
    tri: TriTable,
    decisions: Vec<i64>,
    // Whether `decisions` are the row sums. Row-sum decisions are
    // recomputed when a column is dropped during reduction; external ones
    // are fixed data and survive column drops unchanged.
    derived: bool,
}

impl DecisionTable {
    /// Adjoins row-sum decision values.
    pub fn new(tri: TriTable) -> DecisionTable {
        let decisions = (0..tri.n_rows())
            .map(|i| tri.row(i).iter().map(|e| e.value()).sum())
            .collect();
        DecisionTable {
            tri,
            decisions,
            derived: true,
        }
    }

    /// Adjoins caller-supplied decision values (one per row). Unlike
    /// [`DecisionTable::new`], the result can be inconsistent.
    pub fn with_decisions(tri: TriTable, decisions: Vec<i64>) -> Result<DecisionTable> {
        if decisions.len() != tri.n_rows() {
            return Err(Error::SizeMismatch {
                what: "decision values",
                expected: tri.n_rows(),
                found: decisions.len(),
            });
        }
        Ok(DecisionTable {
            tri,
            decisions,
            derived: false,
        })
    }

    /// The condition columns.
    pub fn tri(&self) -> &TriTable {
        &self.tri
    }

    /// The decision value of each row.
    pub fn decisions(&self) -> &[i64] {
        &self.decisions
    }

    /// Indiscernibility over the condition columns: rows grouped by their
    /// full entry vectors. (Grouping column by column and intersecting
    /// yields the same thing; one pass over whole rows is just cheaper.)
    pub fn condition_partition(&self) -> Partition {
        self.condition_over(&(0..self.tri.n_cols()).collect::<Vec<_>>())
    }

    /// Rows grouped by equal decision values.
    pub fn decision_partition(&self) -> Partition {
        Partition::from_equal_values(&self.decisions)
    }

    /// Whether knowing the condition entries pins down the decision value:
    /// the condition partition refines the decision partition.
    pub fn is_consistent(&self) -> bool {
        self.condition_partition().refines(&self.decision_partition())
    }

    fn condition_over(&self, cols: &[usize]) -> Partition {
        let keys: Vec<Vec<Entry>> = (0..self.tri.n_rows())
            .map(|i| cols.iter().map(|&j| self.tri.entry(i, j)).collect())
            .collect();
        Partition::from_equal_values(&keys)
    }

    fn decision_over(&self, cols: &[usize]) -> Partition {
        if self.derived {
            let sums: Vec<i64> = (0..self.tri.n_rows())
                .map(|i| cols.iter().map(|&j| self.tri.entry(i, j).value()).sum())
                .collect();
            Partition::from_equal_values(&sums)
        } else {
            self.decision_partition()
        }
    }

    /// Whether dropping the named column would (1) leave the remaining
    /// columns still able to predict the recomputed decision values and (2)
    /// leave the decision grouping itself unchanged.
    pub fn dispensable(&self, label: &str) -> Result<bool> {
        let j = self
            .tri
            .column_labels()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownParameter(label.to_owned()))?;
        let rest: Vec<usize> = (0..self.tri.n_cols()).filter(|&c| c != j).collect();
        let decision = self.decision_over(&rest);
        Ok(decision == self.decision_partition() && self.condition_over(&rest).refines(&decision))
    }

    /// Eliminates dispensable columns one at a time (left-to-right scan,
    /// restarting after each hit) until none remains; the survivors are the
    /// core. Fails with [`Error::InconsistentTable`] when the input table
    /// is inconsistent, since dispensability is undefined there.
    pub fn reduce(&self) -> Result<ReductionReport> {
        if !self.is_consistent() {
            return Err(Error::InconsistentTable);
        }
        Ok(run_reduction(
            self.tri.column_labels().map(str::to_owned).collect(),
            &self.decision_partition(),
            |cols| self.condition_over(cols),
            |cols| self.decision_over(cols),
        ))
    }

    /// Scales the table by per-column weights; see
    /// [`WeightedDecisionTable`].
    pub fn weighted(&self, weights: &[f64]) -> Result<WeightedDecisionTable> {
        WeightedDecisionTable::new(self.tri.clone(), weights)
    }
}

/// A decision table whose cells were scaled by per-parameter weights
/// `w ∈ [0, 1]`: positive cells become `w`, negative cells `−(1−w)`,
/// hesitant cells stay 0; decisions are the scaled row sums.
///
/// Indiscernibility over the condition side still uses the underlying
/// tri-valued entries — weighting changes how much a parameter counts, not
/// what it observes.
#[derive(Clone, PartialEq, Debug)]
pub struct WeightedDecisionTable {
    tri: TriTable,
    weights: Vec<f64>,
    entries: Vec<Vec<f64>>,
    decisions: Vec<f64>,
}

impl WeightedDecisionTable {
    /// Absolute tolerance under which two weighted decision values count as
    /// tied. Weights are short decimal inputs, so exact binary comparison
    /// would split ties that are equal on paper.
    pub const TOLERANCE: f64 = 1e-9;

    /// Scales a tri-valued table by one weight per column.
    pub fn new(tri: TriTable, weights: &[f64]) -> Result<WeightedDecisionTable> {
        if weights.len() != tri.n_cols() {
            return Err(Error::WeightCountMismatch {
                expected: tri.n_cols(),
                found: weights.len(),
            });
        }
        for (j, &w) in weights.iter().enumerate() {
            if !(0.0..=1.0).contains(&w) {
                return Err(Error::WeightOutOfRange {
                    parameter: tri.columns()[j].positive().to_owned(),
                    value: w,
                });
            }
        }
        let entries: Vec<Vec<f64>> = (0..tri.n_rows())
            .map(|i| {
                tri.row(i)
                    .iter()
                    .zip(weights)
                    .map(|(&e, &w)| match e {
                        Entry::Positive => w,
                        Entry::Hesitant => 0.0,
                        Entry::Negative => -(1.0 - w),
                    })
                    .collect()
            })
            .collect();
        let decisions = entries.iter().map(|row| row.iter().sum()).collect();
        Ok(WeightedDecisionTable {
            tri,
            weights: weights.to_vec(),
            entries,
            decisions,
        })
    }

    /// The underlying tri-valued columns.
    pub fn tri(&self) -> &TriTable {
        &self.tri
    }

    /// The per-column weights.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// The scaled cells, row-major.
    pub fn entries(&self) -> &[Vec<f64>] {
        &self.entries
    }

    /// The weighted decision value of each row.
    pub fn decisions(&self) -> &[f64] {
        &self.decisions
    }

    /// Indiscernibility over the condition columns (from the tri-valued
    /// entries, not the scaled ones).
    pub fn condition_partition(&self) -> Partition {
        let keys: Vec<Vec<Entry>> = (0..self.tri.n_rows())
            .map(|i| self.tri.row(i).to_vec())
            .collect();
        Partition::from_equal_values(&keys)
    }

    /// Rows grouped by decision values within
    /// [`TOLERANCE`](WeightedDecisionTable::TOLERANCE) of each other.
    pub fn decision_partition(&self) -> Partition {
        Partition::from_close_values(&self.decisions, Self::TOLERANCE)
    }

    /// Whether the condition partition refines the decision partition.
    pub fn is_consistent(&self) -> bool {
        self.condition_partition().refines(&self.decision_partition())
    }

    fn condition_over(&self, cols: &[usize]) -> Partition {
        let keys: Vec<Vec<Entry>> = (0..self.tri.n_rows())
            .map(|i| cols.iter().map(|&j| self.tri.entry(i, j)).collect())
            .collect();
        Partition::from_equal_values(&keys)
    }

    fn decision_over(&self, cols: &[usize]) -> Partition {
        let sums: Vec<f64> = (0..self.tri.n_rows())
            .map(|i| cols.iter().map(|&j| self.entries[i][j]).sum())
            .collect();
        Partition::from_close_values(&sums, Self::TOLERANCE)
    }

    /// The weighted reading of [`DecisionTable::dispensable`]: decision
    /// values are recomputed from the scaled cells.
    pub fn dispensable(&self, label: &str) -> Result<bool> {
        let j = self
            .tri
            .column_labels()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownParameter(label.to_owned()))?;
        let rest: Vec<usize> = (0..self.tri.n_cols()).filter(|&c| c != j).collect();
        let decision = self.decision_over(&rest);
        Ok(decision == self.decision_partition() && self.condition_over(&rest).refines(&decision))
    }

    /// The weighted reading of [`DecisionTable::reduce`].
    pub fn reduce(&self) -> Result<ReductionReport> {
        if !self.is_consistent() {
            return Err(Error::InconsistentTable);
        }
        Ok(run_reduction(
            self.tri.column_labels().map(str::to_owned).collect(),
            &self.decision_partition(),
            |cols| self.condition_over(cols),
            |cols| self.decision_over(cols),
        ))
    }
}

/// What a reduction run did.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionReport {
    /// Columns removed, in elimination order.
    pub eliminated: Vec<String>,
    /// Columns that survived — the core. Together with `eliminated` this is
    /// exactly the original column set.
    pub core: Vec<String>,
    /// Whether the input table was consistent (always true for reports
    /// produced by `reduce`, which rejects inconsistent tables).
    pub consistent: bool,
    /// For each elimination, whether the remaining condition partition was
    /// *equal* to the recomputed decision partition rather than merely
    /// refining it.
    pub equality_held: Vec<bool>,
}

/// Everything [`decide`](BipolarSoftSet::decide) found.
#[derive(Clone, Debug)]
pub struct DecisionReport {
    /// The decision table the analysis ran on.
    pub table: DecisionTable,
    /// Indiscernibility over the chosen parameters.
    pub condition: Partition,
    /// Grouping of objects by decision value.
    pub decision: Partition,
    /// Whether `condition` refines `decision`.
    pub consistent: bool,
    /// The reduction outcome; `None` when the table was inconsistent.
    pub reduction: Option<ReductionReport>,
    /// Objects with their decision values, best first; ties keep universe
    /// order.
    pub ranking: Vec<(String, i64)>,
    /// All objects attaining the maximal decision value.
    pub maximizers: Vec<String>,
}

/// Everything [`decide_weighted`](BipolarSoftSet::decide_weighted) found.
#[derive(Clone, Debug)]
pub struct WeightedDecisionReport {
    /// The weighted decision table the analysis ran on.
    pub table: WeightedDecisionTable,
    /// Indiscernibility over the chosen parameters.
    pub condition: Partition,
    /// Grouping of objects by weighted decision value (within tolerance).
    pub decision: Partition,
    /// Whether `condition` refines `decision`.
    pub consistent: bool,
    /// The reduction outcome; `None` when the table was inconsistent.
    pub reduction: Option<ReductionReport>,
    /// Objects with their weighted decision values, best first; ties keep
    /// universe order.
    pub ranking: Vec<(String, f64)>,
    /// All objects whose decision value ties the maximum (within
    /// tolerance).
    pub maximizers: Vec<String>,
}
