//! Interpretations and the primitive judgments on rules.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::atom::{Atom, ExtLiteral, Literal};
use crate::error::{Error, Result};
use crate::program::{Program, RuleSet};
use crate::rule::{Head, Rule};

/// A consistent set of classical literals.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Interpretation(BTreeSet<Literal>);

impl Interpretation {
    pub fn new(lits: impl IntoIterator<Item = Literal>) -> Result<Interpretation> {
        let set: BTreeSet<Literal> = lits.into_iter().collect();
        if let Some(l) = set.iter().find(|l| l.is_positive() && set.contains(&l.negate())) {
            return Err(Error::Inconsistent(l.clone()));
        }
        Ok(Interpretation(set))
    }

    pub fn empty() -> Interpretation {
        Interpretation(BTreeSet::new())
    }

    /// Parses `a, -b` (surrounding braces optional).
    pub fn parse(text: &str) -> Result<Interpretation> {
        let text = text.trim().trim_start_matches('{').trim_end_matches('}');
        let mut lits = Vec::new();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            lits.push(
                Literal::parse(part)
                    .ok_or_else(|| Error::Input(format!("`{part}` is not a literal")))?,
            );
        }
        Interpretation::new(lits)
    }

    pub fn literals(&self) -> &BTreeSet<Literal> {
        &self.0
    }

    pub fn into_literals(self) -> BTreeSet<Literal> {
        self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = &Literal> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, l: &Literal) -> bool {
        self.0.contains(l)
    }

    /// `I ⊨ e`: `l ∈ I`, or `l ∉ I` for `e = not l`.
    pub fn holds(&self, e: &ExtLiteral) -> bool {
        self.0.contains(e.underlying()) != e.is_naf()
    }

    pub fn holds_all<'a>(&self, es: impl IntoIterator<Item = &'a ExtLiteral>) -> bool {
        es.into_iter().all(|e| self.holds(e))
    }

    /// The positive part `I⁺` as a set of atoms.
    pub fn positive_atoms(&self) -> BTreeSet<Atom> {
        self.0
            .iter()
            .filter(|l| l.is_positive())
            .map(|l| l.atom().clone())
            .collect()
    }

    /// `I ∩ (B ∪ ¬B)`.
    pub fn project(&self, base: &BTreeSet<Atom>) -> Interpretation {
        Interpretation(self.0.iter().filter(|l| base.contains(l.atom())).cloned().collect())
    }

    /// `B ⊆ I ∪ ¬I`.
    pub fn is_total(&self, base: &BTreeSet<Atom>) -> bool {
        base.iter().all(|a| self.0.contains(&a.pos()) || self.0.contains(&a.neg()))
    }

    /// `M ∪ ¬(B \ M)` for a set of atoms `M`.
    pub fn completion(atoms: &BTreeSet<Atom>, base: &BTreeSet<Atom>) -> Interpretation {
        Interpretation(
            base.iter()
                .map(|a| if atoms.contains(a) { a.pos() } else { a.neg() })
                .chain(atoms.iter().map(Atom::pos))
                .collect(),
        )
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(Literal::to_string).collect();
        if items.is_empty() {
            f.write_str("{ }")
        } else {
            write!(f, "{{ {} }}", items.join(", "))
        }
    }
}

impl fmt::Debug for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl TryFrom<BTreeSet<Literal>> for Interpretation {
    type Error = Error;

    fn try_from(set: BTreeSet<Literal>) -> Result<Interpretation> {
        Interpretation::new(set)
    }
}

/// Result of the star operator: a least model in which `-a` is just another
/// atom, plus whether some constraint fired.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarResult {
    pub literals: BTreeSet<Literal>,
    pub bottom: bool,
}

impl StarResult {
    pub fn consistent(&self) -> bool {
        !self.bottom
            && self
                .literals
                .iter()
                .all(|l| !l.is_positive() || !self.literals.contains(&l.negate()))
    }

    pub fn interpretation(&self) -> Option<Interpretation> {
        if self.consistent() {
            Some(Interpretation(self.literals.clone()))
        } else {
            None
        }
    }
}

/// Atoms occurring in any head or body.
pub fn herbrand_base(p: &Program) -> BTreeSet<Atom> {
    p.herbrand_base()
}

/// `R★` for naf-free rules: a worklist fixpoint where a constraint whose body
/// is derived sets `bottom`.
pub fn star_closure<'a>(rules: impl IntoIterator<Item = &'a Rule>) -> Result<StarResult> {
    let rules: Vec<&Rule> = rules.into_iter().collect();
    let mut waiting: HashMap<&Literal, Vec<usize>> = HashMap::new();
    let mut missing = Vec::with_capacity(rules.len());
    let mut literals = BTreeSet::new();
    let mut queue = Vec::new();
    let mut bottom = false;
    for (k, r) in rules.iter().enumerate() {
        if r.has_naf() {
            return Err(Error::NafNotAllowed(r.label().to_string()));
        }
        let body: BTreeSet<&Literal> = r.pos_body().collect();
        for l in &body {
            waiting.entry(*l).or_default().push(k);
        }
        missing.push(body.len());
    }
    let fire = |r: &Rule, literals: &mut BTreeSet<Literal>, queue: &mut Vec<Literal>, bottom: &mut bool| {
        match r.head() {
            Head::Empty => *bottom = true,
            Head::Single(e) => {
                if literals.insert(e.underlying().clone()) {
                    queue.push(e.underlying().clone());
                }
            }
            Head::Disjunction(_) | Head::Ordered(_) => {}
        }
    };
    for (k, r) in rules.iter().enumerate() {
        if missing[k] == 0 {
            fire(r, &mut literals, &mut queue, &mut bottom);
        }
    }
    while let Some(l) = queue.pop() {
        if let Some(ks) = waiting.get(&l) {
            for &k in ks {
                missing[k] -= 1;
                if missing[k] == 0 {
                    fire(rules[k], &mut literals, &mut queue, &mut bottom);
                }
            }
        }
    }
    Ok(StarResult { literals, bottom })
}

fn head_holds(i: &Interpretation, r: &Rule) -> bool {
    match r.head() {
        Head::Empty => false,
        Head::Single(e) => i.holds(e),
        Head::Disjunction(ls) | Head::Ordered(ls) => ls.iter().any(|l| i.contains(l)),
    }
}

/// `I ⊨ r`: the body is false or some head literal is true.
pub fn satisfies(i: &Interpretation, r: &Rule) -> bool {
    !i.holds_all(r.body()) || head_holds(i, r)
}

/// The body and some head literal are true.
pub fn applied(i: &Interpretation, r: &Rule) -> bool {
    i.holds_all(r.body()) && head_holds(i, r)
}

/// Some applied rule of `p` has a head that conflicts with the head of `r`.
/// Constraints and rules with several head literals are never defeated.
pub fn defeated(r: &Rule, i: &Interpretation, p: &Program) -> bool {
    let Head::Single(h) = r.head() else {
        return false;
    };
    p.rules().iter().any(|other| match other.head() {
        Head::Single(h2) => h.conflicts_with(h2) && applied(i, other),
        _ => false,
    })
}

/// `P_I`: the rules satisfied by `I`.
pub fn reduct(p: &Program, i: &Interpretation) -> RuleSet {
    RuleSet::from_ids(p.len(), (0..p.len()).filter(|&k| satisfies(i, p.rule(k))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::program::ProgramKind;

    fn interp(s: &str) -> Interpretation {
        Interpretation::parse(s).unwrap()
    }

    fn ex0() -> Program {
        Program::parse(ProgramKind::Simple, "-a.\n-b.\na :- -b.\nb :- -a.").unwrap()
    }

    #[test]
    fn interpretations_reject_conflicts() {
        assert!(matches!(Interpretation::parse("a, -a"), Err(Error::Inconsistent(_))));
        assert_eq!(interp("{ -b, a }").to_string(), "{ a, -b }");
        assert_eq!(Interpretation::empty().to_string(), "{ }");
    }

    #[test]
    fn base_of_ex0() {
        let names: Vec<String> = herbrand_base(&ex0()).iter().map(|a| a.to_string()).collect();
        assert_eq!(names, ["a", "b"]);
        let empty = Program::simple(vec![]).unwrap();
        assert!(herbrand_base(&empty).is_empty());
        let c = Program::parse(ProgramKind::Extended, ":- a, not b.").unwrap();
        assert_eq!(herbrand_base(&c).len(), 2);
    }

    #[test]
    fn star_of_ex0_is_inconsistent() {
        let p = ex0();
        let s = star_closure(p.rules()).unwrap();
        assert_eq!(s.literals.len(), 4);
        assert!(!s.bottom);
        assert!(!s.consistent());
        let e = star_closure(std::iter::empty()).unwrap();
        assert!(e.literals.is_empty() && !e.bottom);
        let q = Program::parse(ProgramKind::Simple, "a.\n:- a.").unwrap();
        assert!(star_closure(q.rules()).unwrap().bottom);
        let n = Program::parse(ProgramKind::Extended, "a :- not b.").unwrap();
        assert!(matches!(star_closure(n.rules()), Err(Error::NafNotAllowed(_))));
    }

    #[test]
    fn judgments_on_ex0() {
        let p = ex0();
        let i = interp("-a, b");
        let by = |l: &str| p.rules().iter().find(|r| r.text() == l).unwrap();
        assert!(!satisfies(&i, by("-b.")));
        assert!(satisfies(&i, by("a :- -b.")));
        assert!(applied(&i, by("b :- -a.")));
        assert!(defeated(by("-b."), &i, &p));
        assert_eq!(p.labels(&reduct(&p, &i)), ["r1", "r3", "r4"]);
        let c = Rule::parse("c", ":- a.").unwrap();
        assert!(satisfies(&Interpretation::empty(), &c));
        assert!(!applied(&Interpretation::empty(), &c));
        assert!(!defeated(&c, &interp("a"), &p));
    }

    #[test]
    fn ex4_fact_not_defeated() {
        let p = Program::parse(ProgramKind::Simple, "-a.\nb.\n-b :- -a.").unwrap();
        assert!(!defeated(p.rule(0), &interp("b"), &p));
    }

    #[test]
    fn naf_head_defeats() {
        let p = Program::parse(
            ProgramKind::Extended,
            "-a.\n-b.\nc.\na :- not b.\nb :- not a.\nnot c :- a.",
        )
        .unwrap();
        assert!(defeated(p.rule(2), &interp("a, -b"), &p));
        assert!(defeated(p.rule(0), &interp("a, -b"), &p));
    }
}
