//! Programs, rule sets and the compiled index the solvers work on.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::atom::{Atom, Literal};
use crate::error::{Error, Result};
use crate::rule::{Head, Rule};

/// Position of a rule in its program (declaration order).
pub type RuleId = usize;

/// The syntactic class of a program; checked for every rule at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProgramKind {
    /// Classical negation only, at most one head literal.
    Simple,
    /// Naf allowed in heads and bodies, at most one head literal.
    Extended,
    /// Disjunctive heads of ordinary literals, naf in bodies.
    Disjunctive,
    /// Ordered disjunction heads, naf in bodies.
    Lpod,
    /// Extended rules plus consistency-restoring rules.
    Cr,
}

impl fmt::Display for ProgramKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProgramKind::Simple => "simple",
            ProgramKind::Extended => "extended",
            ProgramKind::Disjunctive => "disjunctive",
            ProgramKind::Lpod => "LPOD",
            ProgramKind::Cr => "cr",
        })
    }
}

fn check_kind(kind: ProgramKind, r: &Rule) -> std::result::Result<(), &'static str> {
    let naf_head = matches!(r.head(), Head::Single(e) if e.is_naf());
    let naf_body = r.naf_body().next().is_some();
    if r.is_cr() && kind != ProgramKind::Cr {
        return Err("consistency-restoring rules need the cr dialect");
    }
    match r.head() {
        Head::Disjunction(ls) | Head::Ordered(ls) if ls.is_empty() => {
            return Err("disjunctive heads must be nonempty")
        }
        Head::Ordered(ls) => {
            let distinct: BTreeSet<&Literal> = ls.iter().collect();
            if distinct.len() != ls.len() {
                return Err("ordered disjunction repeats an option");
            }
        }
        _ => {}
    }
    match kind {
        ProgramKind::Simple => match r.head() {
            _ if naf_head || naf_body => Err("negation as failure is not allowed"),
            Head::Disjunction(_) | Head::Ordered(_) => Err("heads hold at most one literal"),
            _ => Ok(()),
        },
        ProgramKind::Extended => match r.head() {
            Head::Disjunction(_) | Head::Ordered(_) => Err("heads hold at most one literal"),
            _ => Ok(()),
        },
        ProgramKind::Disjunctive => match r.head() {
            _ if naf_head => Err("naf is not allowed in disjunctive heads"),
            Head::Ordered(_) => Err("ordered disjunction needs the LPOD dialect"),
            _ => Ok(()),
        },
        ProgramKind::Lpod => match r.head() {
            _ if naf_head => Err("naf is not allowed in LPOD heads"),
            Head::Disjunction(_) => Err("plain disjunction is not allowed in an LPOD"),
            _ => Ok(()),
        },
        ProgramKind::Cr => match r.head() {
            Head::Disjunction(_) | Head::Ordered(_) => Err("heads hold at most one literal"),
            Head::Empty if r.is_cr() => Err("consistency-restoring rules need a head"),
            _ => Ok(()),
        },
    }
}

/// A finite set of labelled rules of one syntactic kind.
#[derive(Clone)]
pub struct Program {
    kind: ProgramKind,
    rules: Vec<Rule>,
    by_label: HashMap<String, RuleId>,
    index: Arc<Index>,
}

impl Program {
    pub fn new(kind: ProgramKind, rules: Vec<Rule>) -> Result<Program> {
        let mut by_label = HashMap::with_capacity(rules.len());
        for (id, r) in rules.iter().enumerate() {
            if let Err(reason) = check_kind(kind, r) {
                return Err(Error::KindViolation {
                    label: r.label().to_string(),
                    kind,
                    reason,
                });
            }
            if by_label.insert(r.label().to_string(), id).is_some() {
                return Err(Error::DuplicateLabel(r.label().to_string()));
            }
        }
        let index = Arc::new(Index::build(&rules));
        Ok(Program {
            kind,
            rules,
            by_label,
            index,
        })
    }

    pub fn simple(rules: Vec<Rule>) -> Result<Program> {
        Program::new(ProgramKind::Simple, rules)
    }

    pub fn extended(rules: Vec<Rule>) -> Result<Program> {
        Program::new(ProgramKind::Extended, rules)
    }

    /// The most specific kind that accepts every rule.
    pub fn infer(rules: Vec<Rule>) -> Result<Program> {
        let kinds = [
            ProgramKind::Simple,
            ProgramKind::Extended,
            ProgramKind::Disjunctive,
            ProgramKind::Lpod,
            ProgramKind::Cr,
        ];
        let kind = kinds
            .into_iter()
            .find(|k| rules.iter().all(|r| check_kind(*k, r).is_ok()))
            .unwrap_or(ProgramKind::Extended);
        Program::new(kind, rules)
    }

    /// Parses one rule per line, labelling them `r1`, `r2`, ...; `%` starts a
    /// comment. Convenient for tests and examples.
    pub fn parse(kind: ProgramKind, text: &str) -> Result<Program> {
        let rules = crate::syntax::parse_rule_lines(text)?;
        Program::new(kind, rules)
    }

    pub fn kind(&self) -> ProgramKind {
        self.kind
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn rule(&self, id: RuleId) -> &Rule {
        &self.rules[id]
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn id_of(&self, label: &str) -> Option<RuleId> {
        self.by_label.get(label).copied()
    }

    pub fn rule_by_label(&self, label: &str) -> Option<&Rule> {
        self.id_of(label).map(|id| &self.rules[id])
    }

    pub fn has_naf(&self) -> bool {
        self.rules.iter().any(Rule::has_naf)
    }

    pub fn has_constraints(&self) -> bool {
        self.rules.iter().any(Rule::is_constraint)
    }

    /// Every atom occurring anywhere in the program.
    pub fn herbrand_base(&self) -> BTreeSet<Atom> {
        self.index.atoms.iter().cloned().collect()
    }

    /// `H(P) ∪ ¬H(P)`.
    pub fn literal_base(&self) -> BTreeSet<Literal> {
        self.index
            .atoms
            .iter()
            .flat_map(|a| [a.pos(), a.neg()])
            .collect()
    }

    pub fn empty_set(&self) -> RuleSet {
        RuleSet::empty(self.len())
    }

    pub fn full_set(&self) -> RuleSet {
        RuleSet::full(self.len())
    }

    pub fn rule_set<'a>(&self, labels: impl IntoIterator<Item = &'a str>) -> Result<RuleSet> {
        let mut set = self.empty_set();
        for l in labels {
            let id = self.id_of(l).ok_or_else(|| Error::UnknownLabel(l.to_string()))?;
            set.insert(id);
        }
        Ok(set)
    }

    /// Labels of the rules in `set`, in declaration order.
    pub fn labels(&self, set: &RuleSet) -> Vec<&str> {
        set.iter().map(|id| self.rules[id].label()).collect()
    }

    pub(crate) fn index(&self) -> &Index {
        &self.index
    }
}

impl PartialEq for Program {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.rules == other.rules
    }
}

impl Eq for Program {}

impl fmt::Debug for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Program")
            .field("kind", &self.kind)
            .field("rules", &self.rules)
            .finish()
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rules {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// A set of rules of one program, as a bitset over rule ids.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RuleSet(FixedBitSet);

impl RuleSet {
    pub fn empty(n: usize) -> RuleSet {
        RuleSet(FixedBitSet::with_capacity(n))
    }

    pub fn full(n: usize) -> RuleSet {
        let mut s = FixedBitSet::with_capacity(n);
        s.insert_range(..);
        RuleSet(s)
    }

    pub fn from_ids(n: usize, ids: impl IntoIterator<Item = RuleId>) -> RuleSet {
        let mut s = RuleSet::empty(n);
        for id in ids {
            s.insert(id);
        }
        s
    }

    /// Size of the universe (number of rules of the program).
    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, id: RuleId) -> bool {
        self.0.contains(id)
    }

    pub fn insert(&mut self, id: RuleId) {
        self.0.insert(id)
    }

    pub fn remove(&mut self, id: RuleId) {
        self.0.set(id, false)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = RuleId> + '_ {
        self.0.ones()
    }

    pub fn is_subset(&self, other: &RuleSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &RuleSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union_with(&mut self, other: &RuleSet) {
        self.0.union_with(&other.0)
    }

    pub fn intersect_with(&mut self, other: &RuleSet) {
        self.0.intersect_with(&other.0)
    }

    pub fn difference_with(&mut self, other: &RuleSet) {
        self.0.difference_with(&other.0)
    }

    pub fn union(&self, other: &RuleSet) -> RuleSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &RuleSet) -> RuleSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &RuleSet) -> RuleSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> RuleSet {
        let mut s = self.clone();
        s.0.toggle_range(..);
        s
    }

    pub fn ids(&self) -> Vec<RuleId> {
        self.iter().collect()
    }
}

impl fmt::Debug for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Literal codes: atom `i` gives `2i` for `a` and `2i + 1` for `-a`.
pub(crate) type Lit = usize;

#[inline]
pub(crate) fn compl(l: Lit) -> Lit {
    l ^ 1
}

#[derive(Clone, Debug)]
pub(crate) enum CHead {
    None,
    Lit(Lit),
    Naf(Lit),
    Multi(Vec<Lit>),
}

#[derive(Clone, Debug)]
pub(crate) struct CRule {
    pub head: CHead,
    pub pos: Vec<Lit>,
    pub naf: Vec<Lit>,
}

/// Compiled form of a program: atoms numbered in name order, literals as
/// small integers, occurrence lists for the fixpoint computations.
#[derive(Debug)]
pub(crate) struct Index {
    pub atoms: Vec<Atom>,
    pub atom_id: HashMap<Atom, usize>,
    pub rules: Vec<CRule>,
    pub pos_occ: Vec<Vec<RuleId>>,
    pub head_occ: Vec<Vec<RuleId>>,
    pub naf_head_occ: Vec<Vec<RuleId>>,
}

/// A set of literal codes.
pub(crate) type LitSet = FixedBitSet;

impl Index {
    fn build(rules: &[Rule]) -> Index {
        let atoms: BTreeSet<Atom> = rules.iter().flat_map(|r| r.atoms().cloned()).collect();
        let atoms: Vec<Atom> = atoms.into_iter().collect();
        let atom_id: HashMap<Atom, usize> =
            atoms.iter().enumerate().map(|(i, a)| (a.clone(), i)).collect();
        let code = |l: &Literal| atom_id[l.atom()] * 2 + usize::from(!l.is_positive());
        let nlits = atoms.len() * 2;
        let mut pos_occ = vec![Vec::new(); nlits];
        let mut head_occ = vec![Vec::new(); nlits];
        let mut naf_head_occ = vec![Vec::new(); nlits];
        let mut compiled = Vec::with_capacity(rules.len());
        for (id, r) in rules.iter().enumerate() {
            let head = match r.head() {
                Head::Empty => CHead::None,
                Head::Single(e) if e.is_naf() => CHead::Naf(code(e.underlying())),
                Head::Single(e) => CHead::Lit(code(e.underlying())),
                Head::Disjunction(ls) | Head::Ordered(ls) => {
                    CHead::Multi(ls.iter().map(code).collect())
                }
            };
            match &head {
                CHead::Lit(l) => head_occ[*l].push(id),
                CHead::Naf(l) => naf_head_occ[*l].push(id),
                _ => {}
            }
            let pos: Vec<Lit> = r.pos_body().map(code).collect();
            let naf: Vec<Lit> = r.naf_body().map(code).collect();
            for &l in &pos {
                pos_occ[l].push(id);
            }
            compiled.push(CRule { head, pos, naf });
        }
        Index {
            atoms,
            atom_id,
            rules: compiled,
            pos_occ,
            head_occ,
            naf_head_occ,
        }
    }

    pub fn nlits(&self) -> usize {
        self.atoms.len() * 2
    }

    pub fn code(&self, l: &Literal) -> Option<Lit> {
        self.atom_id
            .get(l.atom())
            .map(|i| i * 2 + usize::from(!l.is_positive()))
    }

    pub fn literal(&self, l: Lit) -> Literal {
        Literal::new(self.atoms[l / 2].clone(), l % 2 == 0)
    }

    /// `None` when the set mentions an atom outside the program.
    pub fn encode<'a>(&self, lits: impl IntoIterator<Item = &'a Literal>) -> Option<LitSet> {
        let mut s = LitSet::with_capacity(self.nlits());
        for l in lits {
            s.insert(self.code(l)?);
        }
        Some(s)
    }

    pub fn decode(&self, s: &LitSet) -> BTreeSet<Literal> {
        s.ones().map(|l| self.literal(l)).collect()
    }

    pub fn consistent(s: &LitSet) -> bool {
        s.ones().all(|l| l % 2 == 0 || !s.contains(l - 1))
    }

    #[inline]
    pub fn body_true(&self, i: &LitSet, r: &CRule) -> bool {
        r.pos.iter().all(|&l| i.contains(l)) && r.naf.iter().all(|&l| !i.contains(l))
    }

    #[inline]
    pub fn head_true(&self, i: &LitSet, r: &CRule) -> bool {
        match &r.head {
            CHead::None => false,
            CHead::Lit(l) => i.contains(*l),
            CHead::Naf(l) => !i.contains(*l),
            CHead::Multi(ls) => ls.iter().any(|&l| i.contains(l)),
        }
    }

    pub fn satisfied(&self, i: &LitSet, id: RuleId) -> bool {
        let r = &self.rules[id];
        !self.body_true(i, r) || self.head_true(i, r)
    }

    pub fn applied(&self, i: &LitSet, id: RuleId) -> bool {
        let r = &self.rules[id];
        self.body_true(i, r) && self.head_true(i, r)
    }

    /// An applied rule with a conflicting head exists. Constraints and
    /// multi-literal heads are never defeated.
    pub fn defeated(&self, i: &LitSet, id: RuleId) -> bool {
        match self.rules[id].head {
            CHead::Lit(l) => self.head_occ[compl(l)]
                .iter()
                .chain(&self.naf_head_occ[l])
                .any(|&k| self.applied(i, k)),
            CHead::Naf(l) => self.head_occ[l].iter().any(|&k| self.applied(i, k)),
            CHead::None | CHead::Multi(_) => false,
        }
    }

    pub fn reduct(&self, i: &LitSet) -> RuleSet {
        let mut s = RuleSet::empty(self.rules.len());
        for id in 0..self.rules.len() {
            if self.satisfied(i, id) {
                s.insert(id);
            }
        }
        s
    }

    /// Least model of the rules in `rules` after the GL transformation with
    /// respect to `i` (`¬a` is an ordinary atom here). The flag reports a
    /// constraint whose body became derivable. With `i = None` naf is ignored
    /// entirely, which is the star operator on naf-free rules.
    pub fn least_model(&self, rules: &RuleSet, i: Option<&LitSet>) -> (LitSet, bool) {
        let n = self.rules.len();
        let mut missing = vec![usize::MAX; n];
        let mut model = LitSet::with_capacity(self.nlits());
        let mut queue: Vec<Lit> = Vec::new();
        let mut bottom = false;
        let fire = |id: RuleId, model: &mut LitSet, queue: &mut Vec<Lit>, bottom: &mut bool| {
            match self.rules[id].head {
                CHead::Lit(l) => {
                    if !model.put(l) {
                        queue.push(l);
                    }
                }
                // a naf head that survived the transformation is a constraint
                CHead::None | CHead::Naf(_) => *bottom = true,
                CHead::Multi(_) => {}
            }
        };
        for id in rules.iter() {
            let r = &self.rules[id];
            if let Some(i) = i {
                if r.naf.iter().any(|&l| i.contains(l)) {
                    continue;
                }
                if let CHead::Naf(l) = r.head {
                    if !i.contains(l) {
                        continue;
                    }
                }
            }
            missing[id] = r.pos.len();
            if r.pos.is_empty() {
                fire(id, &mut model, &mut queue, &mut bottom);
            }
        }
        while let Some(l) = queue.pop() {
            for &id in &self.pos_occ[l] {
                if missing[id] == usize::MAX || missing[id] == 0 {
                    continue;
                }
                missing[id] -= 1;
                if missing[id] == 0 {
                    fire(id, &mut model, &mut queue, &mut bottom);
                }
            }
        }
        (model, bottom)
    }

    /// `I` is an extended answer set: consistent, an answer set of `P_I`
    /// under the GL transformation, and every unsatisfied rule defeated.
    pub fn is_extended_answer_set(&self, i: &LitSet) -> bool {
        if !Index::consistent(i) {
            return false;
        }
        let reduct = self.reduct(i);
        for id in 0..self.rules.len() {
            if !reduct.contains(id) && !self.defeated(i, id) {
                return false;
            }
        }
        let (model, bottom) = self.least_model(&reduct, Some(i));
        !bottom && model == *i
    }
}
