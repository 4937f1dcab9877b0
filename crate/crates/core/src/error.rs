use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed context or family data (bad labels, duplicates, A = C, ...).
    #[error("{0}")]
    Invalid(String),

    /// The family does not intersect down to the target set.
    #[error("not a C-representation of A: element {witness} lies in the symmetric difference")]
    NotRepresentation { witness: String },

    #[error("member {member} does not contain A")]
    MemberMissesTarget { member: String },

    /// An exhaustive computation would exceed its configured size cap.
    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("point {0} is not in the chosen subfamily")]
    NotInSubfamily(String),

    #[error("subset is not an antichain: {lower} is contained in {upper}")]
    NotAntichain { lower: String, upper: String },

    #[error("ring hypothesis failed: {0}")]
    Ring(String),

    /// A cross-check between two independent routes disagreed.
    #[error("{theorem} failed: {detail}")]
    TheoremViolation { theorem: String, detail: String },
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn violation(theorem: &str, detail: impl Into<String>) -> Self {
        Error::TheoremViolation {
            theorem: theorem.to_string(),
            detail: detail.into(),
        }
    }
}
