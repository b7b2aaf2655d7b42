use thiserror::Error;

pub type Result<T, E = GroupError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} appears more than once")]
    DuplicatePoint(usize),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("image table is not a bijection")]
    NotBijection,
    #[error("group order {order} exceeds the element cap {cap}")]
    OrderCapExceeded { order: u128, cap: usize },
    #[error("degree {degree} exceeds the degree cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup containment violated")]
    NotContained,
    #[error("{0} does not divide the group order")]
    NotADivisor(u64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no qualifying element: {0}")]
    NotFound(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl GroupError {
    /// Cap violations are reported as skips by corpus scans rather than failures.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            GroupError::OrderCapExceeded { .. } | GroupError::DegreeCapExceeded { .. }
        )
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        GroupError::Parse {
            line,
            message: message.into(),
        }
    }
}
