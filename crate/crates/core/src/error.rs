use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group closure exceeded the element cap of {cap}")]
    ElementCap { cap: usize },

    #[error("subgroup enumeration exceeded the cap of {cap} subgroups")]
    SubgroupCap { cap: usize },

    #[error("group of order {order} is above the lattice bound of {bound}")]
    GroupTooLarge { order: usize, bound: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("element set is not a subgroup")]
    NotSubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("subgroup {sub} is not contained in subgroup {sup}")]
    NotContained { sub: usize, sup: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown group {0:?}")]
    UnknownGroup(String),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    /// Two independent characterizations of a class disagreed on one group.
    #[error("{predicate}: routes disagree ({routes})")]
    RouteDisagreement {
        predicate: &'static str,
        routes: String,
    },

    /// An internal consistency assertion failed.
    #[error("consistency check failed: {0}")]
    Consistency(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Resource limits (element cap, subgroup cap, lattice bound).
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::ElementCap { .. } | Error::SubgroupCap { .. } | Error::GroupTooLarge { .. }
        )
    }
}
