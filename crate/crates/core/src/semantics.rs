//! Answer set semantics: classical answer sets, extended answer sets, the
//! reduct order and preferred / proper answer sets.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::atom::ExtLiteral;
use crate::error::{Error, Result};
use crate::interp::{self, Interpretation};
use crate::order::{OrderedProgram, StrictOrder};
use crate::program::{CHead, Index, LitSet, Program, ProgramKind, RuleSet};
use crate::rule::{Head, Rule};

/// The Gelfond-Lifschitz transformation `P^I`.
///
/// A rule is dropped when some `not l` in its body has `l ∈ I`. A naf head
/// `not l` keeps the rule as a constraint when `l ∈ I` and drops it
/// otherwise. Naf literals are removed from the rules that stay.
pub fn gl_reduct(p: &Program, i: &Interpretation) -> Program {
    let mut rules = Vec::new();
    for r in p.rules() {
        if r.naf_body().any(|l| i.contains(l)) {
            continue;
        }
        let body: Vec<ExtLiteral> = r.pos_body().map(|l| l.ext()).collect();
        let head = match r.head() {
            Head::Single(e) if e.is_naf() => {
                if !i.contains(e.underlying()) {
                    continue;
                }
                Head::Empty
            }
            h => h.clone(),
        };
        rules.push(Rule::new(r.label(), head, body));
    }
    let kind = if rules.iter().all(|r| matches!(r.head(), Head::Empty | Head::Single(_))) {
        ProgramKind::Simple
    } else {
        ProgramKind::Disjunctive
    };
    Program::new(kind, rules).expect("labels stay unique and naf is gone")
}

fn encode(p: &Program, i: &Interpretation) -> Option<LitSet> {
    p.index().encode(i.iter())
}

/// `I` is a (consistent) answer set of `p`: the least model of `P^I`
/// equals `I` and no constraint of `P^I` fires.
pub fn is_classical_answer_set(i: &Interpretation, p: &Program) -> bool {
    if has_multi_head(p) {
        return false;
    }
    let Some(s) = encode(p, i) else {
        return false;
    };
    let idx = p.index();
    let (model, bottom) = idx.least_model(&p.full_set(), Some(&s));
    !bottom && model == s
}

fn has_multi_head(p: &Program) -> bool {
    p.rules()
        .iter()
        .any(|r| matches!(r.head(), Head::Disjunction(_) | Head::Ordered(_)))
}

/// `(P_I)★ = I` for a naf-free program.
pub fn is_founded(i: &Interpretation, p: &Program) -> Result<bool> {
    if let Some(r) = p.rules().iter().find(|r| r.has_naf()) {
        return Err(Error::NafNotAllowed(r.label().to_string()));
    }
    let Some(s) = encode(p, i) else {
        return Ok(false);
    };
    let idx = p.index();
    let (model, bottom) = idx.least_model(&idx.reduct(&s), None);
    Ok(!bottom && model == s)
}

/// Founded (for an extended program: an answer set of `P_I`) and every rule
/// satisfied or defeated.
pub fn is_extended_answer_set(i: &Interpretation, p: &Program) -> bool {
    match encode(p, i) {
        Some(s) => p.index().is_extended_answer_set(&s),
        None => false,
    }
}

/// Search state for [`enumerate_extended_answer_sets`].
struct Enumerator<'a> {
    idx: &'a Index,
    full: RuleSet,
    found: Vec<LitSet>,
    limit: Option<usize>,
}

impl Enumerator<'_> {
    /// Least model of the rules that may still fire: naf body disjoint from
    /// `inn`, head not ruled out. Every answer set extending `inn` lies
    /// inside it.
    fn upper_bound(&self, inn: &LitSet, out: &LitSet) -> LitSet {
        let mut keep = RuleSet::empty(self.full.universe());
        for id in self.full.iter() {
            let r = &self.idx.rules[id];
            let ok = match r.head {
                CHead::Lit(h) => !out.contains(h),
                _ => false,
            };
            if ok && r.naf.iter().all(|&l| !inn.contains(l)) && r.pos.iter().all(|&l| !out.contains(l)) {
                keep.insert(id);
            }
        }
        self.idx.least_model(&keep, None).0
    }

    fn constraint_violated(&self, inn: &LitSet, out: &LitSet) -> bool {
        self.idx.rules.iter().any(|r| {
            matches!(r.head, CHead::None)
                && r.pos.iter().all(|&l| inn.contains(l))
                && r.naf.iter().all(|&l| out.contains(l))
        })
    }

    fn search(&mut self, inn: LitSet, mut out: LitSet) {
        if self.limit.is_some_and(|k| self.found.len() >= k) {
            return;
        }
        loop {
            let ub = self.upper_bound(&inn, &out);
            if inn.ones().any(|l| !ub.contains(l)) {
                return;
            }
            let mut changed = false;
            for l in 0..self.idx.nlits() {
                if !ub.contains(l) && !out.contains(l) {
                    out.insert(l);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if self.constraint_violated(&inn, &out) {
            return;
        }
        let next = (0..self.idx.nlits()).find(|&l| !inn.contains(l) && !out.contains(l));
        match next {
            None => {
                if self.idx.is_extended_answer_set(&inn) {
                    self.found.push(inn);
                }
            }
            Some(l) => {
                let mut inn2 = inn.clone();
                let mut out2 = out.clone();
                inn2.insert(l);
                out2.insert(l ^ 1);
                self.search(inn2, out2);
                out.insert(l);
                self.search(inn, out);
            }
        }
    }
}

fn enumerate_codes(p: &Program, limit: Option<usize>) -> Vec<LitSet> {
    let idx = p.index();
    let n = idx.nlits();
    let mut e = Enumerator {
        idx,
        full: p.full_set(),
        found: Vec::new(),
        limit,
    };
    e.search(LitSet::with_capacity(n), LitSet::with_capacity(n));
    e.found
}

/// All extended answer sets, in a deterministic order.
pub fn enumerate_extended_answer_sets(p: &Program) -> Vec<Interpretation> {
    enumerate_extended_answer_sets_limited(p, None)
}

/// At most `limit` extended answer sets.
pub fn enumerate_extended_answer_sets_limited(p: &Program, limit: Option<usize>) -> Vec<Interpretation> {
    let idx = p.index();
    let mut out: Vec<Interpretation> = enumerate_codes(p, limit)
        .iter()
        .map(|s| Interpretation::new(idx.decode(s)).expect("answer sets are consistent"))
        .collect();
    out.sort();
    out
}

/// Builds one extended answer set of a constraint-free simple program by
/// repeatedly adding the head of the first rule (in program order) whose
/// body holds and whose head is neither present nor contradicted.
pub fn construct_extended_answer_set(p: &Program) -> Result<Interpretation> {
    let mut lits = BTreeSet::new();
    for r in p.rules() {
        if r.is_constraint() {
            return Err(Error::ConstraintNotAllowed(r.label().to_string()));
        }
        if r.has_naf() {
            return Err(Error::NafNotAllowed(r.label().to_string()));
        }
        if r.single_head().is_none() {
            return Err(Error::KindViolation {
                label: r.label().to_string(),
                kind: ProgramKind::Simple,
                reason: "heads hold at most one literal",
            });
        }
    }
    loop {
        let step = p.rules().iter().find_map(|r| {
            let h = r.single_head()?.underlying();
            let eligible = r.pos_body().all(|l| lits.contains(l))
                && !lits.contains(h)
                && !lits.contains(&h.negate());
            eligible.then(|| h.clone())
        });
        match step {
            Some(h) => {
                lits.insert(h);
            }
            None => break,
        }
    }
    Interpretation::new(lits)
}

/// `R1 ⊑ R2`: every rule in `R2 \ R1` is beaten by a more preferred rule in
/// `R1 \ R2`.
pub fn reduct_preceq(r1: &RuleSet, r2: &RuleSet, o: &StrictOrder) -> bool {
    let only1 = r1.difference(r2);
    let only2 = r2.difference(r1);
    let ok = only2.iter().all(|x| !o.below(x).is_disjoint(&only1));
    ok
}

/// Outcome of comparing two answer sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Preference {
    /// The first is strictly preferred.
    Less,
    Greater,
    Equal,
    Incomparable,
}

impl Preference {
    pub fn as_ordering(self) -> Option<Ordering> {
        match self {
            Preference::Less => Some(Ordering::Less),
            Preference::Greater => Some(Ordering::Greater),
            Preference::Equal => Some(Ordering::Equal),
            Preference::Incomparable => None,
        }
    }
}

/// Compares reducts. Distinct answer sets with the same reduct (possible only
/// with naf) are incomparable.
pub fn compare_reducts(r1: &RuleSet, r2: &RuleSet, same: bool, o: &StrictOrder) -> Preference {
    if r1 == r2 {
        return if same {
            Preference::Equal
        } else {
            Preference::Incomparable
        };
    }
    match (reduct_preceq(r1, r2, o), reduct_preceq(r2, r1, o)) {
        (true, false) => Preference::Less,
        (false, true) => Preference::Greater,
        // antisymmetry rules out (true, true) for distinct reducts
        _ => Preference::Incomparable,
    }
}

/// Compares two extended answer sets of `op` by their reducts.
pub fn answer_set_prefer(m1: &Interpretation, m2: &Interpretation, op: &OrderedProgram) -> Preference {
    let p = op.program();
    let r1 = interp::reduct(p, m1);
    let r2 = interp::reduct(p, m2);
    compare_reducts(&r1, &r2, m1 == m2, op.order())
}

/// `m` satisfies every `<`-minimal rule.
pub fn is_proper(m: &Interpretation, op: &OrderedProgram) -> bool {
    let p = op.program();
    op.order().minimal().iter().all(|id| interp::satisfies(m, p.rule(id)))
}

/// Keeps the answer sets that no other one strictly beats.
pub fn minimal_answer_sets(op: &OrderedProgram, sets: Vec<Interpretation>) -> Vec<Interpretation> {
    let p = op.program();
    let reducts: Vec<RuleSet> = sets.iter().map(|m| interp::reduct(p, m)).collect();
    let mut keep = Vec::new();
    for (k, m) in sets.iter().enumerate() {
        let beaten = (0..sets.len()).any(|j| {
            j != k
                && compare_reducts(&reducts[j], &reducts[k], sets[j] == sets[k], op.order())
                    == Preference::Less
        });
        if !beaten {
            keep.push(m.clone());
        }
    }
    keep
}

/// Preferred answer sets by enumeration followed by a `⊑`-minimality
/// filter. Works for any extended ordered program.
pub fn preferred_by_enumeration(op: &OrderedProgram) -> Vec<Interpretation> {
    minimal_answer_sets(op, enumerate_extended_answer_sets(op.program()))
}

/// How an answer set was classified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AnswerSetKind {
    Classical,
    Extended,
    Preferred,
    ProperPreferred,
}

impl AnswerSetKind {
    pub fn name(self) -> &'static str {
        match self {
            AnswerSetKind::Classical => "classical",
            AnswerSetKind::Extended => "extended",
            AnswerSetKind::Preferred => "preferred",
            AnswerSetKind::ProperPreferred => "proper-preferred",
        }
    }
}

/// An answer set together with its reduct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnswerSetReport {
    pub interpretation: Interpretation,
    pub reduct: RuleSet,
    pub reduct_labels: Vec<String>,
    pub kind: AnswerSetKind,
}

impl AnswerSetReport {
    pub fn new(p: &Program, interpretation: Interpretation, kind: AnswerSetKind) -> AnswerSetReport {
        let reduct = interp::reduct(p, &interpretation);
        let reduct_labels = p.labels(&reduct).into_iter().map(str::to_string).collect();
        AnswerSetReport {
            interpretation,
            reduct,
            reduct_labels,
            kind,
        }
    }

    /// Labels of the rules the answer set does not satisfy (all defeated).
    pub fn defeated_labels<'p>(&self, p: &'p Program) -> Vec<&'p str> {
        p.labels(&self.reduct.complement())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn interp(s: &str) -> Interpretation {
        Interpretation::parse(s).unwrap()
    }

    fn strs(v: &[Interpretation]) -> Vec<String> {
        v.iter().map(|i| i.to_string()).collect()
    }

    fn ex0() -> Program {
        Program::parse(ProgramKind::Simple, "-a.\n-b.\na :- -b.\nb :- -a.").unwrap()
    }

    fn ex0b() -> Program {
        Program::parse(
            ProgramKind::Extended,
            "-a.\n-b.\nc.\na :- not b.\nb :- not a.\nnot c :- a.",
        )
        .unwrap()
    }

    #[test]
    fn gl_reduct_of_ex0b() {
        let p = ex0b();
        let i = interp("a, -b");
        let pi: Vec<Rule> = interp::reduct(&p, &i).iter().map(|k| p.rule(k).clone()).collect();
        let pi = Program::extended(pi).unwrap();
        let texts: Vec<String> = gl_reduct(&pi, &i).rules().iter().map(Rule::text).collect();
        assert_eq!(texts, ["-b.", "a."]);
        let q = Program::parse(ProgramKind::Extended, "not a.").unwrap();
        let g = gl_reduct(&q, &interp("a"));
        assert_eq!(g.rules()[0].text(), ":-.");
        assert!(!is_classical_answer_set(&interp("a"), &q));
        assert_eq!(gl_reduct(&ex0(), &interp("a")), ex0());
    }

    #[test]
    fn classical_answer_sets() {
        let p = Program::parse(ProgramKind::Extended, "a :- not b.\nb :- not a.").unwrap();
        assert!(is_classical_answer_set(&interp("a"), &p));
        assert!(!is_classical_answer_set(&interp("a, b"), &p));
        let f = Program::parse(ProgramKind::Simple, "a.").unwrap();
        assert!(!is_classical_answer_set(&Interpretation::empty(), &f));
        let ex9 = Program::parse(ProgramKind::Extended, "a :- not b.\nb :- a, not c.").unwrap();
        for s in ["", "a", "b", "c", "a, b", "a, c", "b, c", "a, b, c"] {
            assert!(!is_classical_answer_set(&interp(s), &ex9), "{s}");
        }
    }

    #[test]
    fn foundedness() {
        let p4 = Program::parse(ProgramKind::Simple, "-a.\nb.\n-b :- -a.").unwrap();
        assert!(is_founded(&interp("b"), &p4).unwrap());
        assert!(is_founded(&interp("-a, b"), &ex0()).unwrap());
        assert!(!is_founded(&interp("a, b"), &ex0()).unwrap());
        assert!(is_founded(&interp("b"), &ex0b()).is_err());
    }

    #[test]
    fn extended_answer_sets_of_examples() {
        assert_eq!(
            strs(&enumerate_extended_answer_sets(&ex0())),
            ["{ -a, -b }", "{ -a, b }", "{ a, -b }"]
        );
        let p3 = Program::parse(ProgramKind::Simple, "a.\n-a.\n:- a.").unwrap();
        assert!(!is_extended_answer_set(&interp("a"), &p3));
        assert_eq!(strs(&enumerate_extended_answer_sets(&p3)), ["{ -a }"]);
        assert_eq!(
            strs(&enumerate_extended_answer_sets(&ex0b())),
            ["{ -a, -b, c }", "{ -a, b, c }", "{ a, -b }", "{ a, -b, c }"]
        );
        let ex9 = Program::parse(ProgramKind::Extended, "a :- not b.\nb :- a, not c.").unwrap();
        assert!(enumerate_extended_answer_sets(&ex9).is_empty());
        let f = Program::parse(ProgramKind::Simple, "a.").unwrap();
        assert_eq!(strs(&enumerate_extended_answer_sets(&f)), ["{ a }"]);
        let e = Program::simple(vec![]).unwrap();
        assert_eq!(strs(&enumerate_extended_answer_sets(&e)), ["{ }"]);
    }

    #[test]
    fn universality_construction() {
        let m = construct_extended_answer_set(&ex0()).unwrap();
        assert!(is_extended_answer_set(&m, &ex0()));
        assert_eq!(m.to_string(), "{ -a, -b }");
        let e = Program::simple(vec![]).unwrap();
        assert_eq!(construct_extended_answer_set(&e).unwrap(), Interpretation::empty());
        let p = Program::parse(ProgramKind::Simple, "a.\n-a :- a.").unwrap();
        let m = construct_extended_answer_set(&p).unwrap();
        assert_eq!(m.to_string(), "{ a }");
        assert!(is_extended_answer_set(&m, &p));
        assert_eq!(enumerate_extended_answer_sets(&p), vec![m]);
        let c = Program::parse(ProgramKind::Simple, "a.\n:- a.").unwrap();
        assert!(matches!(
            construct_extended_answer_set(&c),
            Err(Error::ConstraintNotAllowed(_))
        ));
    }

    fn ex1() -> OrderedProgram {
        OrderedProgram::parse_layers(
            ProgramKind::Simple,
            "b :- p.\np.\n---\n-f :- p.\n---\nf :- b.",
        )
        .unwrap()
    }

    #[test]
    fn penguin_order() {
        let op = ex1();
        let p = op.program();
        let i1 = interp("p, b, f");
        let i2 = interp("p, b, -f");
        let r1 = interp::reduct(p, &i1);
        let r2 = interp::reduct(p, &i2);
        assert!(reduct_preceq(&r2, &r1, op.order()));
        assert!(!reduct_preceq(&r1, &r2, op.order()));
        assert!(reduct_preceq(&r1, &r1, op.order()));
        assert_eq!(answer_set_prefer(&i2, &i1, &op), Preference::Less);
        assert_eq!(answer_set_prefer(&i1, &i2, &op), Preference::Greater);
        assert_eq!(answer_set_prefer(&i1, &i1, &op), Preference::Equal);
        assert_eq!(strs(&preferred_by_enumeration(&op)), ["{ b, -f, p }"]);
    }

    #[test]
    fn study_example_proper() {
        let op = OrderedProgram::parse_layers(
            ProgramKind::Simple,
            "-pass :- -study.\npass :- -pass.\n---\n-study.\n---\npass :- study.\nstudy.",
        )
        .unwrap();
        // M2 and M4 are not founded; the order still ranks all four
        let sets = enumerate_extended_answer_sets(op.program());
        let m1 = interp("study, pass");
        let m3 = interp("-study, -pass");
        assert_eq!(sets, vec![m3.clone(), m1.clone()]);
        let p = op.program();
        let r = |s: &str| interp::reduct(p, &interp(s));
        for other in ["-study, pass", "-study, -pass", "study, -pass"] {
            assert!(reduct_preceq(&r("study, pass"), &r(other), op.order()), "{other}");
            assert!(!reduct_preceq(&r(other), &r("study, pass"), op.order()), "{other}");
        }
        assert!(reduct_preceq(&r("-study, -pass"), &r("study, -pass"), op.order()));
        assert_eq!(p.labels(&r("study, pass")), ["r1", "r2", "r4", "r5"]);
        assert_eq!(answer_set_prefer(&m1, &m3, &op), Preference::Less);
        assert!(is_proper(&m1, &op));
        assert!(!is_proper(&m3, &op));
        let proper: Vec<_> = preferred_by_enumeration(&op)
            .into_iter()
            .filter(|m| is_proper(m, &op))
            .collect();
        assert_eq!(proper, vec![m1]);
    }

    #[test]
    fn equal_reducts_are_incomparable() {
        let p = Program::parse(ProgramKind::Extended, "a :- not b.\nb :- not a.").unwrap();
        let op = OrderedProgram::unordered(p);
        assert_eq!(
            answer_set_prefer(&interp("a"), &interp("b"), &op),
            Preference::Incomparable
        );
        assert_eq!(preferred_by_enumeration(&op).len(), 2);
    }

    #[test]
    fn reports_list_defeated_rules() {
        let p = ex0();
        let r = AnswerSetReport::new(&p, interp("-a, b"), AnswerSetKind::Extended);
        assert_eq!(r.reduct_labels, ["r1", "r3", "r4"]);
        assert_eq!(r.defeated_labels(&p), ["r2"]);
    }
}
