//! Database repair: a database is a consistent set of literals, a
//! constraint a clause over its atoms, and a repair a model of the clauses
//! whose set of changes `D' \ D` is minimal under inclusion.

use std::collections::BTreeSet;
use std::fmt;

use crate::atom::{Atom, Literal};
use crate::error::{Error, Result};
use crate::order::OrderedProgram;
use crate::prefsolve::{preferred_answer_sets, SolveOptions};
use crate::program::ProgramKind;
use crate::rule::Rule;

use super::Translation;

/// A consistent set of ground literals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Database {
    facts: BTreeSet<Literal>,
}

impl Database {
    pub fn new(facts: impl IntoIterator<Item = Literal>) -> Result<Database> {
        let facts: BTreeSet<Literal> = facts.into_iter().collect();
        if let Some(l) = facts.iter().find(|l| facts.contains(&l.negate())) {
            return Err(Error::Inconsistent(l.clone()));
        }
        Ok(Database { facts })
    }

    pub fn facts(&self) -> &BTreeSet<Literal> {
        &self.facts
    }

    pub fn base(&self) -> BTreeSet<Atom> {
        self.facts.iter().map(|l| l.atom().clone()).collect()
    }

    /// Whether every clause has a true disjunct.
    pub fn satisfies(&self, clauses: &[ConstraintClause]) -> bool {
        clauses.iter().all(|c| c.literals().iter().any(|l| self.facts.contains(l)))
    }
}

/// A nonempty disjunction of literals.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ConstraintClause {
    literals: BTreeSet<Literal>,
}

impl ConstraintClause {
    pub fn new(literals: impl IntoIterator<Item = Literal>) -> Result<ConstraintClause> {
        let literals: BTreeSet<Literal> = literals.into_iter().collect();
        if literals.is_empty() {
            return Err(Error::Input("a constraint needs at least one literal".into()));
        }
        Ok(ConstraintClause { literals })
    }

    pub fn literals(&self) -> &BTreeSet<Literal> {
        &self.literals
    }
}

impl fmt::Display for ConstraintClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.literals.iter().map(Literal::to_string).collect();
        f.write_str(&parts.join(" ; "))
    }
}

/// One repair: the repaired database and the changes `D' \ D`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RepairDelta {
    pub added: BTreeSet<Literal>,
    pub repaired: BTreeSet<Literal>,
}

impl RepairDelta {
    pub fn new(d: &Database, repaired: BTreeSet<Literal>) -> RepairDelta {
        let added = repaired.difference(d.facts()).cloned().collect();
        RepairDelta { added, repaired }
    }

    /// Atoms whose truth value changed.
    pub fn changed_atoms(&self) -> BTreeSet<Atom> {
        self.added.iter().map(|l| l.atom().clone()).collect()
    }
}

fn strip_line(line: &str) -> &str {
    let line = line.split('%').next().unwrap_or("").trim();
    line.strip_suffix('.').unwrap_or(line).trim()
}

fn literal_at(text: &str, line: usize) -> Result<Literal> {
    Literal::parse(text).ok_or_else(|| Error::Input(format!("line {line}: `{text}` is not a literal")))
}

/// One literal per line (`a` or `-a`, optional trailing `.`); `%` starts a
/// comment.
pub fn parse_database(text: &str) -> Result<Database> {
    let mut facts = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = strip_line(line);
        if !line.is_empty() {
            facts.push(literal_at(line, k + 1)?);
        }
    }
    Database::new(facts)
}

/// One clause per line, disjuncts separated by `;`.
pub fn parse_constraints(text: &str) -> Result<Vec<ConstraintClause>> {
    let mut clauses = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = strip_line(line);
        if line.is_empty() {
            continue;
        }
        let lits = line.split(';').map(|part| literal_at(part.trim(), k + 1)).collect::<Result<Vec<_>>>()?;
        clauses.push(ConstraintClause::new(lits)?);
    }
    Ok(clauses)
}

/// Backtracking satisfiability check with unit propagation.
fn satisfiable(clauses: &[ConstraintClause]) -> bool {
    fn go(clauses: &[Vec<Literal>], assigned: &mut BTreeSet<Literal>) -> bool {
        let mut pick = None;
        for c in clauses {
            if c.iter().any(|l| assigned.contains(l)) {
                continue;
            }
            let open: Vec<&Literal> = c.iter().filter(|l| !assigned.contains(&l.negate())).collect();
            match open.len() {
                0 => return false,
                1 => {
                    pick = Some(vec![open[0].clone()]);
                    break;
                }
                _ if pick.is_none() => pick = Some(vec![open[0].clone(), open[0].negate()]),
                _ => {}
            }
        }
        let Some(choices) = pick else { return true };
        for l in choices {
            assigned.insert(l.clone());
            if go(clauses, assigned) {
                return true;
            }
            assigned.remove(&l);
        }
        false
    }
    let cs: Vec<Vec<Literal>> = clauses.iter().map(|c| c.literals().iter().cloned().collect()).collect();
    go(&cs, &mut BTreeSet::new())
}

/// `P(D, C)`, ordered `c < d < n`: the clause rules
/// `a :- -(A \ {a})` are strongest, then the database facts, then the
/// complements of the facts.
pub fn db_repair_program(d: &Database, clauses: &[ConstraintClause]) -> Result<Translation> {
    let base = d.base();
    for c in clauses {
        if let Some(l) = c.literals().iter().find(|l| !base.contains(l.atom())) {
            return Err(Error::ForeignAtom(l.atom().to_string()));
        }
    }
    if !satisfiable(clauses) {
        return Err(Error::InconsistentConstraints);
    }
    let mut c_rules = Vec::new();
    for (i, c) in clauses.iter().enumerate() {
        for (j, a) in c.literals().iter().enumerate() {
            let rest = c.literals().iter().filter(|b| *b != a).map(|b| b.negate().ext());
            c_rules.push(Rule::single(format!("c{}.{}", i + 1, j + 1), a.clone(), rest));
        }
    }
    let d_rules = d.facts().iter().enumerate().map(|(k, l)| Rule::fact(format!("d{}", k + 1), l.clone())).collect();
    let n_rules = d.facts().iter().enumerate().map(|(k, l)| Rule::fact(format!("n{}", k + 1), l.negate())).collect();
    let target = OrderedProgram::layered(ProgramKind::Simple, vec![c_rules, d_rules, n_rules])?;
    Ok(Translation { target, source_base: base })
}

/// The `C`-repairs of `D`, read off the preferred answer sets of `P(D, C)`.
pub fn repairs(d: &Database, clauses: &[ConstraintClause]) -> Result<Vec<RepairDelta>> {
    let t = db_repair_program(d, clauses)?;
    let mut out: Vec<RepairDelta> = preferred_answer_sets(&t.target, SolveOptions::default())
        .into_iter()
        .map(|r| RepairDelta::new(d, r.interpretation.into_literals()))
        .collect();
    out.sort();
    Ok(out)
}
