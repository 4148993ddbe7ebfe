use thiserror::Error;

/// Errors shared across the crate.
///
/// Computation refusals (`Budget`, `Overflow`) are kept separate from input
/// errors so callers can distinguish "can't afford" from "won't accept".
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid braid word: {0}")]
    InvalidWord(String),

    #[error("cannot parse {what}: {text:?}")]
    Parse { what: &'static str, text: String },

    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("{0}")]
    Unsupported(String),

    #[error("closure is not a knot ({components} components)")]
    NotAKnot { components: usize },

    #[error("operation on the zero polynomial")]
    ZeroPolynomial,

    #[error("integer overflow in exact polynomial arithmetic")]
    Overflow,

    #[error("computation budget exceeded ({used} of {limit} {unit})")]
    Budget {
        used: usize,
        limit: usize,
        unit: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
