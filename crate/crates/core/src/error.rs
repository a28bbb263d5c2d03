use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("cover relation has a cycle through `{0}`")]
    Cycle(String),
    #[error("poset is not bounded: {0}")]
    NotBounded(String),
    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("poset must have at least one element")]
    EmptyPoset,
    #[error("poset has {0} elements, at most {max} are supported", max = crate::set::MAX_ELEMENTS)]
    TooLarge(usize),
    #[error("empty set argument")]
    EmptyInput,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("{what} of size {n} exceeds the bound {max}")]
    BoundExceeded {
        what: &'static str,
        n: usize,
        max: usize,
    },
    #[error("universe has {size} sets, the cap is {cap}")]
    UniverseTooLarge { size: usize, cap: usize },
    #[error("universe is missing {} required set(s): {}", .0.len(), .0.join(", "))]
    UniverseIncomplete(Vec<String>),
    #[error("parse error: {0}")]
    Parse(String),
}
