use thiserror::Error;

/// Errors raised by the constructors and algorithms in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("{what} exceeds the supported size ({got} > {limit})")]
    SizeLimit {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("block class mismatch: {0}")]
    ClassMismatch(String),

    #[error("element is not supported on the source ideal: {0}")]
    SupportViolation(String),

    #[error("cannot compose: {0}")]
    CompositionMismatch(String),

    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("conflicting twists while transporting along orbit witnesses: {0}")]
    TwistTransportConflict(String),

    #[error("algebra is not a product of K-line blocks: {0}")]
    NotKBlocks(String),

    #[error("algebra is not indecomposable: it has {0} blocks")]
    NotIndecomposable(usize),

    #[error("input is not a valid partial action: {0}")]
    InvalidAction(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
