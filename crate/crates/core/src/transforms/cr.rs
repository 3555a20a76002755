//! Consistency-restoring rules.

use std::collections::BTreeSet;

use crate::atom::{Atom, ExtLiteral};
use crate::error::{Error, Result};
use crate::order::{validate_order, OrderedProgram, StrictOrder};
use crate::program::{Program, ProgramKind, RuleId};
use crate::rule::{Head, Rule};

use super::Translation;

/// The reserved atom marking that the regular part is violated.
pub const INCONSISTENT: &str = "inconsistent";

/// A program with consistency-restoring rules and a preference among them.
///
/// `pref` holds pairs `(r, s)` meaning that applying `r` is preferred over
/// applying `s`; both must be cr-rules.
#[derive(Clone, Debug)]
pub struct CrProgram {
    program: Program,
    pref: Vec<(RuleId, RuleId)>,
}

impl CrProgram {
    pub fn new(program: Program, pref: &[(&str, &str)]) -> Result<CrProgram> {
        let reserved = Atom::new(INCONSISTENT);
        for r in program.rules() {
            if r.head().literals().iter().any(|e| *e.underlying().atom() == reserved) {
                return Err(Error::ReservedHead(r.label().to_string()));
            }
            if r.is_cr() && r.single_head().is_some_and(ExtLiteral::is_naf) {
                return Err(Error::KindViolation {
                    label: r.label().to_string(),
                    kind: program.kind(),
                    reason: "consistency-restoring rules need an ordinary head",
                });
            }
        }
        let mut ids = Vec::with_capacity(pref.len());
        for (a, b) in pref {
            let id = |l: &str| match program.id_of(l) {
                Some(k) if program.rule(k).is_cr() => Ok(k),
                Some(_) => Err(Error::Input(format!("`{l}` is not a consistency-restoring rule"))),
                None => Err(Error::UnknownLabel(l.to_string())),
            };
            ids.push((id(a)?, id(b)?));
        }
        let labels: Vec<&str> = program.rules().iter().map(Rule::label).collect();
        validate_order(&labels, pref)?;
        Ok(CrProgram { program, pref: ids })
    }

    pub fn parse(text: &str, pref: &[(&str, &str)]) -> Result<CrProgram> {
        CrProgram::new(Program::parse(ProgramKind::Cr, text)?, pref)
    }

    pub fn program(&self) -> &Program {
        &self.program
    }

    pub fn preferences(&self) -> &[(RuleId, RuleId)] {
        &self.pref
    }
}

/// Translates a cr-program into an extended ordered program, most
/// preferred first:
///
/// 1. the regular rules, plus `inconsistent :- β, not h` for each regular
///    rule `h :- β` and `inconsistent :- β` for each constraint;
/// 2. `not inconsistent.`;
/// 3. `not h :- inconsistent` for each cr-rule `h +- β`, ordered opposite to
///    the cr preference;
/// 4. `h :- β, inconsistent` for each cr-rule, and the fact `inconsistent.`
///
/// Layer 2 keeps `inconsistent` out unless the regular part forces it, and
/// layer 4 is what makes it founded when it is forced. The source base
/// includes `inconsistent`, so answers keep it when cr-rules were needed.
pub fn cr_translate(c: &CrProgram) -> Result<Translation> {
    let p = c.program();
    let inc = Atom::new(INCONSISTENT);
    let mut regular = Vec::new();
    let mut cr_ids = Vec::new();
    for (id, r) in p.rules().iter().enumerate() {
        if r.is_cr() {
            cr_ids.push(id);
            continue;
        }
        regular.push(r.clone());
        let detector = match r.head() {
            Head::Empty => r.body().to_vec(),
            Head::Single(h) => {
                let against = if h.is_naf() { h.underlying().ext() } else { h.underlying().naf() };
                r.body().iter().cloned().chain([against]).collect()
            }
            Head::Disjunction(_) | Head::Ordered(_) => unreachable!("cr programs have single heads"),
        };
        regular.push(Rule::single(format!("{}:inc", r.label()), inc.pos(), detector));
    }
    let guard = vec![Rule::fact("inc:0", inc.pos().naf())];
    let defeat: Vec<Rule> = cr_ids
        .iter()
        .map(|&k| {
            let r = p.rule(k);
            let h = r.single_head().expect("cr rules have a head").underlying();
            Rule::single(format!("{}:defeat", r.label()), h.naf(), [inc.pos().ext()])
        })
        .collect();
    let mut top: Vec<Rule> = cr_ids
        .iter()
        .map(|&k| {
            let r = p.rule(k);
            Rule::new(r.label(), r.head().clone(), r.body().iter().cloned().chain([inc.pos().ext()]))
        })
        .collect();
    top.push(Rule::fact("inc:1", inc.pos()));

    let (a, b, d) = (regular.len(), 1, defeat.len());
    let layers: Vec<Vec<RuleId>> = vec![
        (0..a).collect(),
        (a..a + b).collect(),
        (a + b..a + b + d).collect(),
        (a + b + d..a + b + d + top.len()).collect(),
    ];
    let position = |k: RuleId| a + b + cr_ids.iter().position(|&x| x == k).expect("cr rule");
    let n = a + b + d + top.len();
    let layered = StrictOrder::layered(n, &layers);
    let reversed = c.preferences().iter().map(|&(x, y)| (position(y), position(x)));
    let order = layered.extend_to(n, reversed).map_err(|_| Error::CycleDetected(vec!["cr preference".into()]))?;

    let rules: Vec<Rule> = regular.into_iter().chain(guard).chain(defeat).chain(top).collect();
    let program = Program::new(ProgramKind::Extended, rules)?;
    let target = OrderedProgram::new(program, order)?;
    let mut source_base: BTreeSet<Atom> = p.herbrand_base();
    source_base.insert(inc);
    Ok(Translation { target, source_base })
}
