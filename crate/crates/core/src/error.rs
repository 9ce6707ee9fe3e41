use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a partial order: the cover relation contains a cycle through element {0}")]
    NotPartialOrder(usize),

    #[error("element index {index} out of range for a poset of {d} elements")]
    IndexOutOfRange { index: usize, d: usize },

    #[error("a poset needs at least one element")]
    EmptyPoset,

    #[error("{0} elements exceeds the supported capacity of {max} elements", max = crate::set::MAX_ELEMENTS)]
    CapacityExceeded(usize),

    #[error("enumeration too large: more than {cap} sets")]
    EnumerationTooLarge { cap: usize },

    #[error("poset is not graded: maximal chains have different lengths")]
    NotGraded,

    #[error("poset is not maximal ranked")]
    NotMaximalRanked,

    #[error("invalid level composition: {0}")]
    InvalidComposition(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("oracle cap exceeded: {what} would need {needed} checks, cap is {cap}")]
    OracleCapExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("point {0:?} is not a vertex of the polytope")]
    NotAVertex(Vec<i64>),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("invalid poset file: {0}")]
    Parse(String),
}
