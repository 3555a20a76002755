//! Agreement checks between the translations, the solver and the
//! exhaustive oracles, one instance at a time.
//!
//! Each check returns `Ok(())` when both sides agree and `Err` with a short
//! description of the disagreement otherwise. A translation or oracle error
//! counts as a disagreement.

use std::collections::BTreeSet;
use std::fmt::Debug;

use crate::atom::{Atom, Literal};
use crate::interp::Interpretation;
use crate::oracle::{self, AtomSet};
use crate::order::OrderedProgram;
use crate::prefsolve::{aset_with, preferred_answer_sets, AsetOptions, SearchConstraint, SolveOptions, Specification};
use crate::program::Program;
use crate::semantics;
use crate::transforms::{self, ConstraintClause, Database, Translation};

pub type Outcome = std::result::Result<(), String>;

fn ok<T>(r: crate::Result<T>, what: &str) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn same<T: Ord + Debug>(what: &str, mut left: Vec<T>, mut right: Vec<T>) -> Outcome {
    left.sort();
    left.dedup();
    right.sort();
    right.dedup();
    if left == right {
        Ok(())
    } else {
        Err(format!("{what}: {left:?} != {right:?}"))
    }
}

fn proper(op: &OrderedProgram) -> Vec<Interpretation> {
    let opts = SolveOptions { proper: true, ..SolveOptions::default() };
    preferred_answer_sets(op, opts).into_iter().map(|r| r.interpretation).collect()
}

fn projected_proper(t: &Translation) -> Vec<Interpretation> {
    proper(&t.target).iter().map(|m| t.project(m)).collect()
}

/// Positive parts of the proper preferred answer sets, each of which must
/// be total on the source base.
fn proper_models(t: &Translation) -> std::result::Result<Vec<AtomSet>, String> {
    let mut out = Vec::new();
    for m in proper(&t.target) {
        if !m.is_total(&t.source_base) {
            return Err(format!("proper preferred answer set {m} is not total"));
        }
        out.push(t.project(&m).positive_atoms());
    }
    Ok(out)
}

/// Extended answer sets of a simple program are the answer sets of `E(P)`.
pub fn slp_vs_elp(p: &Program) -> Outcome {
    let t = ok(transforms::slp_to_elp(p), "E(P)")?;
    let via = ok(oracle::classical_answer_sets(t.target.program()), "answer sets of E(P)")?;
    let direct = ok(oracle::extended_answer_sets(p), "oracle")?;
    same("E(P) vs oracle", via.clone(), direct)?;
    same("E(P) vs enumeration", via, semantics::enumerate_extended_answer_sets(p))
}

/// Extended answer sets of an extended program are the projected answer
/// sets of its naf-head-free version.
pub fn eas_sim(p: &Program) -> Outcome {
    let t = ok(transforms::elp_remove_naf_heads(p), "E(P)")?;
    let via = ok(oracle::classical_answer_sets(t.target.program()), "answer sets of E(P)")?;
    let direct = ok(oracle::extended_answer_sets(p), "oracle")?;
    same("projected E(P) vs oracle", via.iter().map(|m| t.project(m)).collect(), direct)
}

/// Stable models of a normal program are the proper preferred answer sets
/// of `N(P)`, completed with the false atoms.
pub fn naf_olp(p: &Program) -> Outcome {
    let t = ok(transforms::naf_sim(p), "N(P)")?;
    let base: BTreeSet<Atom> = t.source_base.clone();
    let stable: Vec<Interpretation> = ok(oracle::stable_models(p), "stable models")?
        .iter()
        .map(|m| Interpretation::completion(m, &base))
        .collect();
    same("N(P) solver vs stable models", proper(&t.target), stable.clone())?;
    let brute = ok(oracle::brute_force_proper_preferred(&t.target), "N(P) oracle")?;
    same("N(P) oracle vs stable models", brute, stable)
}

/// Minimal models of a positive disjunctive program are the proper
/// preferred answer sets of `D(P)`.
pub fn disj_olp(p: &Program) -> Outcome {
    let t = ok(transforms::disj_sim(p), "D(P)")?;
    same("D(P) vs minimal models", proper_models(&t)?, ok(oracle::minimal_models(p), "minimal models")?)
}

/// Minimal possible models of a seminegative disjunctive program are the
/// proper preferred answer sets of `Dn(P)`.
pub fn dnp_pm(p: &Program) -> Outcome {
    let t = ok(transforms::disj_naf_sim(p), "Dn(P)")?;
    let want = ok(oracle::minimal_possible_models(p), "minimal possible models")?;
    same("Dn(P) vs minimal possible models", proper_models(&t)?, want)
}

/// Every answer set of a seminegative disjunctive program shows up among
/// the proper preferred answer sets of `Dn(P)`. The converse is not claimed.
pub fn dlp_olp(p: &Program) -> Outcome {
    let t = ok(transforms::disj_naf_sim(p), "Dn(P)")?;
    let got: BTreeSet<AtomSet> = proper_models(&t)?.into_iter().collect();
    match ok(oracle::dlp_answer_sets(p), "answer sets")?.into_iter().find(|s| !got.contains(s)) {
        None => Ok(()),
        Some(s) => Err(format!("answer set {s:?} missing from Dn(P)")),
    }
}

/// Preferred answer sets of an extended ordered program are the projected
/// proper preferred answer sets of `N_s(P)`.
pub fn eolp_to_olp(op: &OrderedProgram) -> Outcome {
    let t = ok(transforms::eolp_to_olp(op), "N_s(P)")?;
    let want = ok(oracle::brute_force_preferred(op), "oracle")?;
    same("projected N_s(P) vs oracle", projected_proper(&t), want)
}

/// Preferred LPOD answer sets are the projected proper preferred answer
/// sets of `L(P)`.
pub fn lpod(p: &Program) -> Outcome {
    let t = ok(transforms::lpod_translate(p), "L(P)")?;
    let want = ok(oracle::lpod_preferred(p), "oracle")?;
    same("projected L(P) vs oracle", projected_proper(&t), want)
}

/// Repairs read off `P(D, C)` are the brute-force repairs.
pub fn repair(d: &Database, c: &[ConstraintClause]) -> Outcome {
    let got: Vec<BTreeSet<Literal>> = ok(transforms::repairs(d, c), "repairs")?.into_iter().map(|r| r.repaired).collect();
    let raw: Vec<BTreeSet<Literal>> = c.iter().map(|x| x.literals().clone()).collect();
    same("P(D, C) vs brute force", got, ok(oracle::brute_force_repairs(d.facts(), &raw), "oracle")?)
}

/// `aset(⟨∅, ∅⟩, {∅})` against the brute-force preferred answer sets, with
/// and without pruning.
pub fn solver_vs_oracle(op: &OrderedProgram) -> Outcome {
    let want = ok(oracle::brute_force_preferred(op), "oracle")?;
    let idx = op.program().index();
    for prune in [false, true] {
        let s = Specification::empty(op.len());
        let c = SearchConstraint::unconstrained(op.len());
        let got: Vec<Interpretation> = aset_with(&s, &c, op, AsetOptions { prune })
            .0
            .iter()
            .map(|r| Interpretation::new(idx.decode(&idx.least_model(r, None).0)).expect("answer sets are consistent"))
            .collect();
        same(if prune { "aset (pruned) vs oracle" } else { "aset vs oracle" }, got, want.clone())?;
    }
    Ok(())
}

/// The constructed answer set of a constraint-free simple program passes
/// the direct check.
pub fn universality(p: &Program) -> Outcome {
    let m = ok(semantics::construct_extended_answer_set(p), "construction")?;
    if oracle::check_extended_answer_set(p, m.literals()) {
        Ok(())
    } else {
        Err(format!("{m} is not an extended answer set"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::program::ProgramKind;

    #[test]
    fn named_instances_agree() {
        let slp = Program::parse(ProgramKind::Simple, "-a.\n-b.\na :- -b.\nb :- -a.").unwrap();
        assert_eq!(slp_vs_elp(&slp), Ok(()));
        assert_eq!(universality(&slp), Ok(()));
        let elp = Program::parse(ProgramKind::Extended, "a.\nnot a.").unwrap();
        assert_eq!(eas_sim(&elp), Ok(()));
        let dlp = Program::parse(ProgramKind::Disjunctive, "a | b.\na :- b.\nb :- a.").unwrap();
        assert_eq!(disj_olp(&dlp), Ok(()));
        assert_eq!(dlp_olp(&dlp), Ok(()));
    }

    #[test]
    fn disagreement_is_reported() {
        let e = same("x", vec![1], vec![2]).unwrap_err();
        assert!(e.starts_with("x: "));
    }
}
