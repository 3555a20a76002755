//! Disjunctive programs as ordered programs.

use crate::atom::{ExtLiteral, Literal};
use crate::error::Result;
use crate::order::OrderedProgram;
use crate::program::{Program, ProgramKind};
use crate::rule::{Head, Rule};

use super::stable::naf_to_neg;
use super::{all_positive, require, Translation};

fn head_atoms(r: &Rule) -> Vec<Literal> {
    match r.head() {
        Head::Empty => Vec::new(),
        Head::Single(e) => vec![e.underlying().clone()],
        Head::Disjunction(ls) | Head::Ordered(ls) => ls.clone(),
    }
}

fn check_disjunctive(p: &Program, allow_naf: bool) -> Result<()> {
    require(
        p,
        |r| {
            all_positive(r.body().iter().map(ExtLiteral::underlying))
                && all_positive(r.head().literals().iter().map(ExtLiteral::underlying))
                && !matches!(r.head(), Head::Ordered(_))
                && !r.single_head().is_some_and(ExtLiteral::is_naf)
        },
        "a disjunctive program has atoms only and no naf in heads",
    )?;
    if !allow_naf {
        require(p, |r| r.naf_body().next().is_none(), "a positive disjunctive program has no naf")?;
    }
    Ok(())
}

/// `a :- β', -(α \ {a})` for every rule `α :- β` and `a ∈ α`; constraints
/// are kept (with `β'`).
fn model_rules(p: &Program) -> Vec<Rule> {
    let mut out = Vec::new();
    for r in p.rules() {
        let body: Vec<ExtLiteral> = r.body().iter().map(naf_to_neg).collect();
        let heads = head_atoms(r);
        if heads.is_empty() {
            out.push(Rule::constraint(r.label(), body));
            continue;
        }
        for (i, a) in heads.iter().enumerate() {
            let others = heads.iter().filter(|b| *b != a).map(|b| b.negate().ext());
            out.push(Rule::single(format!("{}:p{}", r.label(), i + 1), a.clone(), body.iter().cloned().chain(others)));
        }
    }
    out
}

fn minimize(p: &Program) -> Vec<Rule> {
    p.herbrand_base().iter().map(|a| Rule::fact(format!("min:{a}"), a.neg())).collect()
}

/// `D(P)` for a positive disjunctive program, ordered `P_p < P_- < P_+`.
/// `M` is a minimal model iff `M ∪ -(B \ M)` is a proper preferred answer
/// set of the result.
pub fn disj_sim(p: &Program) -> Result<Translation> {
    check_disjunctive(p, false)?;
    let plus = p.herbrand_base().iter().map(|a| Rule::fact(format!("max:{a}"), a.pos())).collect();
    let target = OrderedProgram::layered(ProgramKind::Simple, vec![model_rules(p), minimize(p), plus])?;
    Ok(Translation { target, source_base: p.herbrand_base() })
}

/// `D_n(P)` for a disjunctive program with naf in bodies, ordered
/// `P_p < P_- < P_c`, where `not a` is read as `-a` throughout. Proper
/// preferred answer sets correspond to minimal possible models.
pub fn disj_naf_sim(p: &Program) -> Result<Translation> {
    check_disjunctive(p, true)?;
    let mut choose = Vec::new();
    for r in p.rules() {
        let body: Vec<ExtLiteral> = r.body().iter().map(naf_to_neg).collect();
        for (i, a) in head_atoms(r).iter().enumerate() {
            choose.push(Rule::single(format!("{}:c{}", r.label(), i + 1), a.clone(), body.clone()));
        }
    }
    let target = OrderedProgram::layered(ProgramKind::Simple, vec![model_rules(p), minimize(p), choose])?;
    Ok(Translation { target, source_base: p.herbrand_base() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interp::Interpretation;
    use crate::oracle;
    use crate::prefsolve::{preferred_answer_sets, SolveOptions};

    fn proper_positive(t: &Translation) -> Vec<Vec<String>> {
        let opts = SolveOptions { proper: true, ..SolveOptions::default() };
        let mut out: Vec<Vec<String>> = preferred_answer_sets(&t.target, opts)
            .iter()
            .map(|r| {
                let m: &Interpretation = &r.interpretation;
                assert!(m.is_total(&t.source_base));
                m.positive_atoms().iter().map(|a| a.to_string()).collect()
            })
            .collect();
        out.sort();
        out
    }

    fn names(sets: Vec<oracle::AtomSet>) -> Vec<Vec<String>> {
        sets.iter().map(|s| s.iter().map(|a| a.to_string()).collect()).collect()
    }

    #[test]
    fn minimal_models_of_ex7() {
        let p = Program::parse(ProgramKind::Disjunctive, "a | b.\na :- b.\nb :- a.").unwrap();
        let t = disj_sim(&p).unwrap();
        assert_eq!(proper_positive(&t), [["a", "b"]]);
        assert_eq!(names(oracle::minimal_models(&p).unwrap()), [["a", "b"]]);
    }

    #[test]
    fn plain_disjunction_has_two_minimal_models() {
        let p = Program::parse(ProgramKind::Disjunctive, "a | b.").unwrap();
        assert_eq!(proper_positive(&disj_sim(&p).unwrap()), [["a"], ["b"]]);
    }

    #[test]
    fn ex8_possible_model_without_answer_set() {
        let p = Program::parse(ProgramKind::Disjunctive, "a | b.\nb :- a.\na :- not a.").unwrap();
        assert!(oracle::dlp_answer_sets(&p).unwrap().is_empty());
        let t = disj_naf_sim(&p).unwrap();
        assert_eq!(proper_positive(&t), [["a", "b"]]);
        assert_eq!(names(oracle::minimal_possible_models(&p).unwrap()), [["a", "b"]]);
        assert!(disj_sim(&p).is_err());
    }

    #[test]
    fn rejects_classical_negation() {
        let p = Program::parse(ProgramKind::Disjunctive, "-a | b.").unwrap();
        assert!(disj_sim(&p).is_err());
    }
}
