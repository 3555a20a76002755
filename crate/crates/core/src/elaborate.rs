//! From a parsed document to a program ready for solving.
//!
//! Order assertions relate modules: in `A < B` every rule of `A` is
//! preferred over every rule of `B`. `A.k` names the `k`-th rule of `A`
//! alone. The lpod and cr dialects are routed through their translations;
//! repair input comes as two separate files.

use std::collections::BTreeSet;

use crate::atom::Atom;
use crate::error::{Error, Result};
use crate::order::{validate_order, OrderedProgram};
use crate::program::{Program, ProgramKind};
use crate::rule::Rule;
use crate::syntax::{Dialect, OrderRef, SourceDocument};
use crate::transforms::{self, CrProgram, Translation};

/// A program to solve, and how to read its answers.
#[derive(Clone, Debug)]
pub struct Elaborated {
    pub dialect: Dialect,
    pub target: OrderedProgram,
    /// Answers are projected onto this base, if set.
    pub projection: Option<BTreeSet<Atom>>,
    /// The translation is only faithful for proper preferred answer sets.
    pub proper_only: bool,
}

impl Elaborated {
    fn direct(dialect: Dialect, target: OrderedProgram) -> Elaborated {
        Elaborated { dialect, target, projection: None, proper_only: false }
    }

    fn translated(dialect: Dialect, t: Translation, proper_only: bool) -> Elaborated {
        Elaborated { dialect, target: t.target, projection: Some(t.source_base), proper_only }
    }

    pub fn project(&self, m: &crate::Interpretation) -> crate::Interpretation {
        match &self.projection {
            Some(base) => m.project(base),
            None => m.clone(),
        }
    }
}

/// Labels of the rules a reference stands for.
fn resolve<'d>(doc: &'d SourceDocument, r: &OrderRef) -> Result<Vec<&'d str>> {
    let (name, k) = match r {
        OrderRef::Module(m) => (m, None),
        OrderRef::Rule(m, k) => (m, Some(*k)),
    };
    let module = doc.module(name).ok_or_else(|| Error::UndeclaredModule(name.clone()))?;
    match k {
        None => Ok(module.rules.iter().map(Rule::label).collect()),
        Some(k) if k >= 1 && k <= module.rules.len() => Ok(vec![module.rules[k - 1].label()]),
        Some(k) => Err(Error::UnknownLabel(format!("{name}.{k}"))),
    }
}

/// `(less, greater)` label pairs induced by the document's chains.
pub fn order_edges(doc: &SourceDocument) -> Result<Vec<(String, String)>> {
    let mut edges = Vec::new();
    for chain in &doc.order_assertions {
        for pair in chain.windows(2) {
            let (lo, hi) = (resolve(doc, &pair[0])?, resolve(doc, &pair[1])?);
            for a in &lo {
                for b in &hi {
                    edges.push((a.to_string(), b.to_string()));
                }
            }
        }
    }
    Ok(edges)
}

fn ordered(doc: &SourceDocument, program: Program) -> Result<OrderedProgram> {
    let edges = order_edges(doc)?;
    let pairs: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let labels: Vec<&str> = program.rules().iter().map(Rule::label).collect();
    let order = validate_order(&labels, &pairs)?;
    OrderedProgram::new(program, order)
}

/// Builds the program for an olp, lpod or cr document.
pub fn elaborate(doc: &SourceDocument) -> Result<Elaborated> {
    let rules: Vec<Rule> = doc.rules().cloned().collect();
    match doc.dialect {
        Dialect::Olp => {
            let kind = if rules.iter().any(Rule::has_naf) { ProgramKind::Extended } else { ProgramKind::Simple };
            let program = Program::new(kind, rules)?;
            Ok(Elaborated::direct(Dialect::Olp, ordered(doc, program)?))
        }
        Dialect::Lpod => {
            if !doc.order_assertions.is_empty() {
                return Err(Error::Input("LPOD documents take no order assertions".into()));
            }
            let t = transforms::lpod_translate(&Program::new(ProgramKind::Lpod, rules)?)?;
            Ok(Elaborated::translated(Dialect::Lpod, t, true))
        }
        Dialect::Cr => {
            let edges = order_edges(doc)?;
            let pairs: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
            let c = CrProgram::new(Program::new(ProgramKind::Cr, rules)?, &pairs)?;
            Ok(Elaborated::translated(Dialect::Cr, transforms::cr_translate(&c)?, false))
        }
        Dialect::Repair => Err(Error::Input(
            "repair input is a database file and a constraint file, not a rule document".into(),
        )),
    }
}

/// Builds `P(D, C)` from the two repair files.
pub fn elaborate_repair(database: &str, constraints: &str) -> Result<Elaborated> {
    let d = transforms::parse_database(database)?;
    let c = transforms::parse_constraints(constraints)?;
    let t = transforms::db_repair_program(&d, &c)?;
    Ok(Elaborated::translated(Dialect::Repair, t, false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prefsolve::{preferred_answer_sets, SolveOptions};
    use crate::syntax::parse;

    fn solve(e: &Elaborated) -> Vec<String> {
        let opts = SolveOptions { proper: true, ..SolveOptions::default() };
        let mut out: Vec<String> =
            preferred_answer_sets(&e.target, opts).iter().map(|r| e.project(&r.interpretation).to_string()).collect();
        out.sort();
        out
    }

    #[test]
    fn module_chain_expands_to_rule_pairs() {
        let e = elaborate(&parse("A { a. } B { -a. } A < B").unwrap()).unwrap();
        assert_eq!(e.target.len(), 2);
        assert!(e.target.order().less(0, 1));
        assert_eq!(solve(&e), ["{ a }"]);
    }

    #[test]
    fn rule_references() {
        let doc = parse("A { a. b. } B { -a. -b. } B.2 < A.2").unwrap();
        let e = elaborate(&doc).unwrap();
        let p = e.target.program();
        assert!(e.target.order().less(p.id_of("B.2").unwrap(), p.id_of("A.2").unwrap()));
        assert_eq!(e.target.order().pair_count(), 1);
    }

    #[test]
    fn cycles_are_rejected() {
        let doc = parse("A { a. } B { b. } A < B\nB < A").unwrap();
        assert!(matches!(elaborate(&doc), Err(Error::CycleDetected(_))));
    }

    #[test]
    fn lpod_and_cr_documents() {
        let lpod = parse("#dialect lpod.\nb * c * d.\nc * a * d.\n-c :- b.").unwrap();
        assert_eq!(solve(&elaborate(&lpod).unwrap()), ["{ a, b, -c }", "{ c }"]);
        let cr = parse("#dialect cr.\nR1 { p +- not t. }\nR2 { q +- not t. }\ns.\n:- not p, not q.\nR2 < R1").unwrap();
        assert_eq!(solve(&elaborate(&cr).unwrap()), ["{ inconsistent, q, s }"]);
    }

    #[test]
    fn repair_files() {
        let e = elaborate_repair("p\nq\nr\n", "-p ; q\n-p ; -q\n-q ; r\n-q ; -r\n-r ; p\n-r ; -p\n").unwrap();
        assert_eq!(solve(&e), ["{ -p, -q, -r }"]);
        assert!(elaborate(&parse("#dialect repair.").unwrap()).is_err());
    }
}
