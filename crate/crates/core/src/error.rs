use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range input (bad endpoints, self-loops, non-edges).
    #[error("invalid input: {0}")]
    Input(String),

    /// Text that could not be parsed. `location` is a line number or byte offset.
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    /// A caller-side precondition of an operation was not met.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A search or enumeration exceeded its configured budget.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// The regularity computed over GF(2) and GF(3) differ.
    #[error("characteristic-sensitive instance: reg over GF(2) = {gf2}, over GF(3) = {gf3}")]
    CharacteristicSensitive { gf2: usize, gf3: usize },

    /// An internal invariant failed. Always a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse_at_line(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { location: format!("line {line}"), message: message.into() }
    }

    pub(crate) fn parse_at_byte(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse { location: format!("byte {offset}"), message: message.into() }
    }

    /// True for errors caused by budget or capacity, as opposed to bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource(_))
    }
}
