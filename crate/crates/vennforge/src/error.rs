use thiserror::Error;

/// Errors raised while building or transforming families.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("ground size must be at least 1")]
    EmptyGround,
    #[error("ground size {0} exceeds the supported maximum of {max}", max = crate::set_word::MAX_GROUND)]
    GroundTooLarge(usize),
    #[error("element {element} out of range 1..={ground_size} (set #{set_index})")]
    ElementOutOfRange {
        element: usize,
        ground_size: usize,
        set_index: usize,
    },
    #[error("duplicate set: inputs #{first} and #{second} are equal")]
    DuplicateSet { first: usize, second: usize },
    #[error("mismatched ground sizes: {0} vs {1}")]
    GroundMismatch(usize, usize),
    #[error("projection target is empty")]
    EmptyProjection,
    #[error("operation undefined on the empty family")]
    EmptyFamily,
}

/// Errors raised while parsing the setfam v1 text format.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {source}")]
    Family {
        line: usize,
        #[source]
        source: FamilyError,
    },
    #[error("line {line}: malformed header, expected `n=<int>`")]
    BadHeader { line: usize },
    #[error("missing `n=<int>` header")]
    MissingHeader,
    #[error("line {line}: malformed set `{text}` (expected strictly increasing comma-separated elements, or `-`)")]
    BadSet { line: usize, text: String },
}

/// Errors raised by the constructive finders.
#[derive(Debug, Error)]
pub enum ConstructiveError {
    /// A proof-mandated existence failed even though its size hypothesis
    /// held. The theorems guarantee the object exists, so this always
    /// signals an implementation bug, never a property of the input.
    #[error("falsification: {0}")]
    Falsification(String),
    #[error("precondition: {0}")]
    Precondition(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
}
