//! Translations from other formalisms into (extended) ordered programs.
//!
//! Every translation returns a [`Translation`]: the target program together
//! with the Herbrand base of the source, so answers can be projected back.
//! Generated atoms start with `_` and are checked against the source base;
//! a clash is reported as [`Error::FreshCollision`].

mod cr;
mod disj;
mod lpod;
mod repair;
mod stable;

use std::collections::BTreeSet;

use crate::atom::{Atom, Literal};
use crate::error::{Error, Result};
use crate::interp::Interpretation;
use crate::order::OrderedProgram;
use crate::program::Program;
use crate::rule::Rule;

pub use cr::{cr_translate, CrProgram, INCONSISTENT};
pub use disj::{disj_naf_sim, disj_sim};
pub use lpod::lpod_translate;
pub use repair::{
    db_repair_program, parse_constraints, parse_database, repairs, ConstraintClause, Database,
    RepairDelta,
};
pub use stable::{elp_remove_naf_heads, eolp_to_olp, naf_sim, slp_to_elp};

/// A translated program and the base of the program it came from.
#[derive(Clone, Debug)]
pub struct Translation {
    pub target: OrderedProgram,
    pub source_base: BTreeSet<Atom>,
}

impl Translation {
    /// `M ∩ (B ∪ ¬B)` for the source base `B`.
    pub fn project(&self, m: &Interpretation) -> Interpretation {
        m.project(&self.source_base)
    }

    /// Atoms of the target that are not in the source base.
    pub fn fresh_atoms(&self) -> BTreeSet<Atom> {
        self.target
            .program()
            .herbrand_base()
            .into_iter()
            .filter(|a| !self.source_base.contains(a))
            .collect()
    }
}

/// Hands out generated atoms, refusing names already used by the source.
pub(crate) struct Fresh<'a> {
    base: &'a BTreeSet<Atom>,
}

impl<'a> Fresh<'a> {
    pub(crate) fn new(base: &'a BTreeSet<Atom>) -> Fresh<'a> {
        Fresh { base }
    }

    pub(crate) fn atom(&self, name: String) -> Result<Atom> {
        let a = Atom::new(&name);
        if self.base.contains(&a) {
            Err(Error::FreshCollision(name))
        } else {
            Ok(a)
        }
    }
}

/// Rejects a rule that fails `ok`, naming the transformation's requirement.
pub(crate) fn require(p: &Program, ok: impl Fn(&Rule) -> bool, reason: &'static str) -> Result<()> {
    match p.rules().iter().find(|r| !ok(r)) {
        Some(r) => Err(Error::KindViolation {
            label: r.label().to_string(),
            kind: p.kind(),
            reason,
        }),
        None => Ok(()),
    }
}

pub(crate) fn all_positive<'a>(mut ls: impl Iterator<Item = &'a Literal>) -> bool {
    ls.all(Literal::is_positive)
}
