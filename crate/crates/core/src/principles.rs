//! Executable checks of two principles for prioritized rule systems.
//!
//! Principle 1′: if two extended answer sets `M1`, `M2` have reducts
//! `R' ∪ {d1}` and `R' ∪ {d2}` with `d1 < d2`, then `M2` is not preferred.
//!
//! Principle 2: adding a rule that is inapplicable w.r.t. a preferred answer
//! set `M`, under an order that agrees with the old one on the old rules,
//! keeps `M` preferred. The semantics does not obey this in general; see
//! [`principle_2_counterexample`].

use crate::error::Result;
use crate::interp::{self, Interpretation};
use crate::order::{OrderedProgram, StrictOrder};
use crate::prefsolve::{preferred_answer_sets, SolveOptions};
use crate::program::{Program, RuleId};
use crate::rule::Rule;
use crate::semantics::{self, Preference};

/// Preferred answer sets of `op`, sorted.
fn preferred(op: &OrderedProgram) -> Vec<Interpretation> {
    preferred_answer_sets(op, SolveOptions::default()).into_iter().map(|r| r.interpretation).collect()
}

/// A pair of answer sets meeting the premise of Principle 1′.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Principle1Instance {
    pub m1: Interpretation,
    pub m2: Interpretation,
    pub d1: RuleId,
    pub d2: RuleId,
    /// Whether `M2` is nonetheless preferred; `true` breaks the principle.
    pub m2_preferred: bool,
}

/// Every ordered pair of extended answer sets of `op` meeting the premise
/// of Principle 1′, each with the verdict on `M2`.
pub fn principle_1_prime(op: &OrderedProgram) -> Vec<Principle1Instance> {
    let p = op.program();
    let all = semantics::enumerate_extended_answer_sets(p);
    let best = preferred(op);
    let reducts: Vec<_> = all.iter().map(|m| interp::reduct(p, m)).collect();
    let mut out = Vec::new();
    for (i, r1) in reducts.iter().enumerate() {
        for (j, r2) in reducts.iter().enumerate() {
            let (only1, only2) = (r1.difference(r2), r2.difference(r1));
            if i == j || only1.len() != 1 || only2.len() != 1 {
                continue;
            }
            let (d1, d2) = (only1.ids()[0], only2.ids()[0]);
            if op.order().less(d1, d2) {
                out.push(Principle1Instance {
                    m1: all[i].clone(),
                    m2: all[j].clone(),
                    d1,
                    d2,
                    m2_preferred: best.contains(&all[j]),
                });
            }
        }
    }
    out
}

/// Outcome of one Principle 2 check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Principle2Outcome {
    /// `M` is not preferred, the rule is applicable, or the new order drops
    /// an old preference.
    Vacuous,
    Holds,
    /// `M` stopped being preferred; `beaten_by` is strictly better.
    Violated { beaten_by: Interpretation },
}

/// Checks Principle 2 for `M`, the rule `r` appended to `op` as the last
/// rule, and the order `extended` over the enlarged program.
pub fn principle_2(op: &OrderedProgram, m: &Interpretation, r: Rule, extended: StrictOrder) -> Result<Principle2Outcome> {
    let n = op.len();
    let agrees = extended.len() == n + 1
        && (0..n).all(|x| (0..n).all(|y| op.order().less(x, y) == extended.less(x, y)));
    if !agrees || m.holds_all(r.body()) || !preferred(op).contains(m) {
        return Ok(Principle2Outcome::Vacuous);
    }
    let mut rules = op.program().rules().to_vec();
    rules.push(r);
    let kind = op.program().kind();
    let bigger = OrderedProgram::new(Program::new(kind, rules)?, extended)?;
    let p = bigger.program();
    if !semantics::is_extended_answer_set(m, p) {
        // An inapplicable rule is satisfied, so this cannot happen; kept as a
        // guard against a broken premise.
        return Ok(Principle2Outcome::Vacuous);
    }
    let beaten_by = semantics::enumerate_extended_answer_sets(p)
        .into_iter()
        .find(|n| semantics::answer_set_prefer(n, m, &bigger) == Preference::Less);
    Ok(match beaten_by {
        Some(beaten_by) => Principle2Outcome::Violated { beaten_by },
        None => Principle2Outcome::Holds,
    })
}

/// A concrete instance refuting Principle 2.
///
/// `c. :- c, -b.` < `-c.` < `-b.` has the single extended answer set
/// `M = {-c, -b}`, which is therefore preferred. The rule `b :- c` is
/// inapplicable w.r.t. `M`, yet adding it (unordered) creates the answer set
/// `{b, c}`, whose reduct keeps the most preferred rule `c.` and so beats
/// `M`.
pub fn principle_2_counterexample() -> (OrderedProgram, Interpretation, Rule, StrictOrder) {
    let op = OrderedProgram::parse_layers(crate::ProgramKind::Simple, "c.\n:- c, -b.\n---\n-c.\n---\n-b.")
        .expect("well-formed program");
    let m = Interpretation::parse("-c, -b").expect("consistent");
    let r = Rule::parse("r5", "b :- c.").expect("well-formed rule");
    let extended = op.order().extend_to(op.len() + 1, []).expect("no new edges");
    (op, m, r, extended)
}
