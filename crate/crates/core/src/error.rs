use thiserror::Error;

use crate::atom::Literal;
use crate::program::ProgramKind;
use crate::syntax::SyntaxError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate rule label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown rule label `{0}`")]
    UnknownLabel(String),
    #[error("rule `{label}` is not allowed in a {kind} program: {reason}")]
    KindViolation {
        label: String,
        kind: ProgramKind,
        reason: &'static str,
    },
    #[error("order contains a cycle: {}", .0.join(" < "))]
    CycleDetected(Vec<String>),
    #[error("order is over {order} rules but the program has {rules}")]
    OrderMismatch { order: usize, rules: usize },
    #[error("literal set is inconsistent: it contains both {0} and its complement")]
    Inconsistent(Literal),
    #[error("rule `{0}` contains negation as failure")]
    NafNotAllowed(String),
    #[error("rule `{0}` is a constraint, which is not allowed here")]
    ConstraintNotAllowed(String),
    #[error("generated atom `{0}` already occurs in the input program")]
    FreshCollision(String),
    #[error("rule `{0}` derives the reserved atom `inconsistent`")]
    ReservedHead(String),
    #[error("constraint mentions atom `{0}`, which does not occur in the database")]
    ForeignAtom(String),
    #[error("constraint set has no model")]
    InconsistentConstraints,
    #[error("{what} is {size}, above the exhaustive-search limit of {limit}")]
    SizeGuard {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("module `{0}` is declared twice")]
    DuplicateModule(String),
    #[error("order assertion refers to undeclared `{0}`")]
    UndeclaredModule(String),
    #[error("{0}")]
    Syntax(#[from] SyntaxError),
    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
