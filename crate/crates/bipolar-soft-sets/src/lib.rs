//! Bipolar soft sets: two-sided approximate set algebra, tri-valued
//! tables, and decision analysis.
//!
//! A *bipolar soft set* describes a collection of objects through a family
//! of parameters, recording **both** kinds of evidence separately: for each
//! parameter `e` it keeps the objects that definitely satisfy `e` (the
//! positive side `F(e)`) and the objects that definitely satisfy its
//! opposite `¬e` (the negative side `G(¬e)`). The two sides must never
//! overlap, and whatever falls in neither is the *hesitation gap* —
//! objects the data stays silent about. That third region is the point of
//! the model: "not cheap" is weaker than "expensive", and collapsing the
//! two loses information that single-sided set models cannot recover.
//!
//! The crate provides:
//!
//! - [`BipolarSoftSet`] with the full operation algebra: subset/equality
//!   comparisons, complement, extended and restricted unions and
//!   intersections, and the AND/OR products over paired parameters. Every
//!   operation preserves the disjointness of the two sides.
//! - [`TriTable`] / [`PairTable`] — the two tabular encodings (one matrix
//!   over `{-1, 0, 1}`, or a pair of 0/1 indicator matrices) with lossless
//!   conversions in both directions.
//! - [`DecisionTable`] / [`WeightedDecisionTable`] — choice analysis:
//!   decision values as (optionally weighted) row sums, indiscernibility
//!   [`Partition`]s, consistency checking, and reduction to a core of
//!   load-bearing parameters.
//! - [`io`] — a structured text format and a CSV table format for
//!   datasets, plus weight files.
//! - [`cli`] — the `bss` binary: `validate`, `op`, `hesitation`, `table`,
//!   `decide`, and `reduce` subcommands over those files.
//!
//! # Quick start
//!
//! ```
//! use bipolar_soft_sets::{BipolarSoftSet, ParameterSpace, Universe};
//!
//! let universe = Universe::new(["h1", "h2", "h3", "h4"])?;
//! let space = ParameterSpace::from_tokens(["cheap/expensive", "quiet", "green"])?;
//! let houses = BipolarSoftSet::builder(universe, space)
//!     .param("cheap", &["h1", "h2"], &["h4"])
//!     .param("quiet", &["h2"], &["h1", "h3"])
//!     .param("green", &["h1", "h2", "h3"], &[])
//!     .build()?;
//!
//! // Each parameter splits the universe three ways: for, against, silent.
//! let gap = houses.hesitation("cheap")?;
//! assert_eq!(houses.universe().labels_of(&gap), ["h3"]);
//!
//! // Rank the houses by how strongly the evidence favours each.
//! let report = houses.decide(&["cheap", "quiet", "green"])?;
//! assert_eq!(report.maximizers, ["h2"]);
//! # Ok::<(), bipolar_soft_sets::Error>(())
//! ```
//!
//! # Where to look next
//!
//! The `examples/` directory walks through each capability end to end —
//! `cargo run --example house_hunting` is a good starting point, and
//! `cargo run --example dataset_files` shows the on-disk formats. The
//! algebra's laws (De Morgan dualities, lattice structure, distributivity)
//! are exercised in the test suite and demonstrated in
//! `cargo run --example algebraic_laws`.

mod bss;
mod decision;
mod error;
mod params;
mod tabular;
mod universe;

pub mod cli;
pub mod io;

pub use bss::{BipolarSoftSet, Builder};
pub use decision::{
    DecisionReport, DecisionTable, Partition, ReductionReport, WeightedDecisionReport,
    WeightedDecisionTable,
};
pub use error::{Error, Result};
pub use params::{Parameter, ParameterSpace};
pub use tabular::{Entry, PairTable, TriTable};
pub use universe::{Subset, Universe};
