use thiserror::Error;

/// Errors raised by group construction and subgroup operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("empty generating set")]
    EmptySeed,
    #[error("{what} has order {order}, above the cap of {cap}")]
    CapExceeded { what: &'static str, order: usize, cap: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group of order {0} is not a p-group")]
    NotPGroup(usize),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("invalid construction: {0}")]
    Construction(String),
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
