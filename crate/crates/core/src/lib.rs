//! Ordered logic programs.
//!
//! Ground programs with classical negation and negation as failure, a strict
//! partial order on rules, and the extended / preferred answer set semantics
//! built on them. Besides the solver the crate has the program transformations
//! that embed other formalisms (stable models, disjunction, ordered
//! disjunction, consistency-restoring rules, database repair) and brute-force
//! reference implementations used for differential testing.

pub mod atom;
pub mod check;
pub mod elaborate;
pub mod error;
pub mod interp;
pub mod oracle;
pub mod order;
pub mod prefsolve;
pub mod principles;
pub mod program;
pub mod random;
pub mod rule;
pub mod semantics;
pub mod syntax;
pub mod transforms;

pub use atom::{Atom, ExtLiteral, Literal};
pub use elaborate::{elaborate, elaborate_repair, Elaborated};
pub use error::{Error, Result};
pub use interp::{applied, defeated, herbrand_base, reduct, satisfies, star_closure, Interpretation, StarResult};
pub use order::{down_closure, validate_order, OrderedProgram, StrictOrder};
pub use program::{Program, ProgramKind, RuleId, RuleSet};
pub use rule::{Head, Rule};
pub use syntax::{Dialect, SourceDocument, SyntaxError};
