//! The crate-wide error type.

use thiserror::Error;

/// Crate-wide result alias; every fallible operation in the crate returns
/// this.
pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong while building sets, combining them, or
/// reading them from files.
///
/// The `bss` command-line tool maps these variants onto its documented exit
/// codes; the library itself attaches no meaning beyond what each variant
/// documents.
#[derive(Debug, Error)]
#[non_exhaustive]
pub enum Error {
    /// A dataset or weights file is structurally malformed.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An object shows up as both a positive and a negative example of the
    /// same parameter.
    #[error("'{object}' is both a positive and a negative example of '{parameter}'")]
    ConsistencyViolation { parameter: String, object: String },

    /// A label is unusable as an identifier: empty, containing whitespace,
    /// or containing a character the file formats reserve.
    #[error("invalid identifier '{label}': {reason}")]
    InvalidIdentifier { label: String, reason: &'static str },

    /// The same identifier occurs twice where distinct ones are required.
    #[error("duplicate identifier '{0}'")]
    DuplicateIdentifier(String),

    /// An object label does not belong to the universe in use.
    #[error("unknown object '{0}'")]
    UnknownObject(String),

    /// A parameter label does not belong to the space (or domain) in use.
    #[error("unknown parameter '{0}'")]
    UnknownParameter(String),

    /// The positive/negative maps do not line up with the declared domain:
    /// a key falls outside it, or a domain parameter has no map entry.
    #[error("parameter '{parameter}' is not covered by the declared domain")]
    DomainMismatch { parameter: String },

    /// Two sets were combined although they range over different universes.
    #[error("operands range over different universes")]
    UniverseMismatch,

    /// Two sets were combined although they use different parameter spaces.
    #[error("operands use different parameter spaces")]
    SpaceMismatch,

    /// A restricted union/intersection was requested, but the two domains
    /// share no parameter.
    #[error("restricted operations require a non-empty common domain")]
    EmptyCommonDomain,

    /// A collection has the wrong length for the structure it feeds.
    #[error("wrong number of {what}: expected {expected}, found {found}")]
    SizeMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    /// A table entry lies outside {-1, 0, 1}.
    #[error("table entries must be -1, 0, or 1 (found '{0}')")]
    BadEntry(String),

    /// Objects that agree on every condition parameter carry different
    /// decision values, so reduction is undefined.
    #[error("decision table is inconsistent: indiscernible objects have different decision values")]
    InconsistentTable,

    /// A weight lies outside [0, 1].
    #[error("weight for '{parameter}' is out of range: {value} (must lie within [0, 1])")]
    WeightOutOfRange { parameter: String, value: f64 },

    /// The number of weights does not match the number of table columns.
    #[error("expected {expected} weights, found {found}")]
    WeightCountMismatch { expected: usize, found: usize },

    /// A chosen parameter has no weight assigned.
    #[error("no weight given for parameter '{0}'")]
    MissingWeight(String),

    /// A weights file references a parameter the dataset does not define.
    #[error("weights file references unknown parameter '{0}'")]
    UnknownWeightParameter(String),

    /// An underlying I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
