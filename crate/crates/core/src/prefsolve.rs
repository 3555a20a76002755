//! Search for preferred answer sets of ordered simple programs.
//!
//! Answer sets are handled through their reducts: a rule set `R` stands for
//! the interpretation `R★`. The recursive [`aset`] procedure splits on the
//! most preferred undecided rule and uses constraints made of witnesses to
//! skip answer sets that are beaten by ones already found.

use crate::error::{Error, Result};
use crate::interp::Interpretation;
use crate::order::OrderedProgram;
use crate::program::{CHead, Index, LitSet, RuleSet};
use crate::semantics::{self, AnswerSetKind, AnswerSetReport};

/// A pair `⟨R_i, R_o⟩` of rules that must / must not be satisfied.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Specification {
    pub r_in: RuleSet,
    pub r_out: RuleSet,
}

impl Specification {
    /// Checks disjointness and downward closure of the union.
    pub fn new(r_in: RuleSet, r_out: RuleSet, op: &OrderedProgram) -> Result<Specification> {
        let s = Specification { r_in, r_out };
        if !s.r_in.is_disjoint(&s.r_out) {
            return Err(Error::Input("specification sides overlap".into()));
        }
        if !op.order().is_downward_closed(&s.r_in.union(&s.r_out)) {
            return Err(Error::Input("specification is not downward closed".into()));
        }
        Ok(s)
    }

    /// `⟨∅, ∅⟩`.
    pub fn empty(n: usize) -> Specification {
        Specification {
            r_in: RuleSet::empty(n),
            r_out: RuleSet::empty(n),
        }
    }

    /// `s ⪯ self`.
    pub fn extends(&self, s: &Specification) -> bool {
        s.r_in.is_subset(&self.r_in) && s.r_out.is_subset(&self.r_out)
    }
}

/// A disjunction of rule sets; a rule set satisfies it when it includes
/// one of them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SearchConstraint {
    clauses: Vec<RuleSet>,
}

impl SearchConstraint {
    /// `{∅}`, satisfied by everything.
    pub fn unconstrained(n: usize) -> SearchConstraint {
        SearchConstraint {
            clauses: vec![RuleSet::empty(n)],
        }
    }

    /// `{}`, satisfied by nothing.
    pub fn unsatisfiable() -> SearchConstraint {
        SearchConstraint { clauses: Vec::new() }
    }

    pub fn new(clauses: impl IntoIterator<Item = RuleSet>) -> SearchConstraint {
        let mut c = SearchConstraint::unsatisfiable();
        for x in clauses {
            c.add(x);
        }
        c
    }

    pub fn clauses(&self) -> &[RuleSet] {
        &self.clauses
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    /// Adds a clause unless a subset is present; drops its supersets.
    fn add(&mut self, x: RuleSet) {
        if self.clauses.iter().any(|c| c.is_subset(&x)) {
            return;
        }
        self.clauses.retain(|c| !x.is_subset(c));
        self.clauses.push(x);
    }

    /// `{ c ∪ x | c ∈ C, x ∈ W, r ∉ x }`.
    fn refine(&self, w: &WitnessFamily, r: usize) -> SearchConstraint {
        let mut out = SearchConstraint::unsatisfiable();
        for x in w.sets.iter().filter(|x| !x.contains(r)) {
            for c in &self.clauses {
                out.add(c.union(x));
            }
        }
        out
    }
}

/// `W(T) = { {r} ∪ (↓{r} ∩ T) | r ∉ T }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessFamily {
    pub sets: Vec<RuleSet>,
}

/// `R★` is an extended answer set, `R_i ⊆ R`, `R ∩ R_o = ∅` and `R★`
/// violates every rule of `R_o`.
pub fn spec_satisfied(r: &RuleSet, s: &Specification, op: &OrderedProgram) -> bool {
    let idx = op.program().index();
    let (star, bottom) = idx.least_model(r, None);
    !bottom
        && idx.is_extended_answer_set(&star)
        && s.r_in.is_subset(r)
        && s.r_out.is_disjoint(r)
        && s.r_out.iter().all(|k| !idx.satisfied(&star, k))
}

pub fn constraint_satisfied(r: &RuleSet, c: &SearchConstraint) -> bool {
    c.clauses.iter().any(|x| x.is_subset(r))
}

pub fn spec_consistent_with(s: &Specification, c: &SearchConstraint) -> bool {
    c.clauses.iter().any(|x| x.is_disjoint(&s.r_out))
}

pub fn witnesses(t: &RuleSet, op: &OrderedProgram) -> WitnessFamily {
    let o = op.order();
    let sets = (0..op.len())
        .filter(|&r| !t.contains(r))
        .map(|r| {
            let mut x = o.below(r).intersection(t);
            x.insert(r);
            x
        })
        .collect();
    WitnessFamily { sets }
}

/// Some member of `W(T)` lies inside `R`; equivalently `T ⋢ R`.
pub fn has_witness(r: &RuleSet, t: &RuleSet, op: &OrderedProgram) -> bool {
    witnesses(t, op).sets.iter().any(|x| x.is_subset(r))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AsetOptions {
    /// Cut branches that cannot contain an answer set. Off gives the
    /// procedure exactly as stated.
    pub prune: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AsetStats {
    pub calls: usize,
    pub leaves: usize,
    pub pruned: usize,
}

struct Search<'a> {
    op: &'a OrderedProgram,
    idx: &'a Index,
    constraints: RuleSet,
    opts: AsetOptions,
    stats: AsetStats,
}

impl Search<'_> {
    fn leaf(&mut self, r_in: &RuleSet) -> bool {
        self.stats.leaves += 1;
        let (star, bottom) = self.idx.least_model(r_in, None);
        // R_i must be the reduct of R_i★, not merely a subset of it
        !bottom && self.idx.is_extended_answer_set(&star) && self.idx.reduct(&star) == *r_in
    }

    /// True when no answer set can satisfy `s`.
    fn hopeless(&self, s: &Specification) -> bool {
        let idx = self.idx;
        let (star, bottom) = idx.least_model(&s.r_in, None);
        if bottom || !Index::consistent(&star) {
            return true;
        }
        if !s.r_out.is_disjoint(&self.constraints) {
            return true;
        }
        let open = s.r_out.complement();
        let (upper, _) = idx.least_model(&open, None);
        let inside = |set: &LitSet, l: usize| set.contains(l);
        for k in s.r_out.iter() {
            let r = &idx.rules[k];
            let CHead::Lit(h) = r.head else {
                return true;
            };
            if inside(&star, h) || !inside(&upper, h ^ 1) {
                return true;
            }
            if r.pos.iter().any(|&l| inside(&star, l ^ 1) || !inside(&upper, l)) {
                return true;
            }
        }
        self.constraints.iter().any(|k| {
            let r = &idx.rules[k];
            r.pos.iter().all(|&l| inside(&star, l))
        })
    }

    fn choose(&self, assigned: &RuleSet) -> Option<usize> {
        let o = self.op.order();
        (0..self.op.len()).find(|&r| !assigned.contains(r) && o.below(r).is_subset(assigned))
    }

    fn aset(&mut self, s: Specification, c: SearchConstraint) -> Vec<RuleSet> {
        self.stats.calls += 1;
        if !spec_consistent_with(&s, &c) {
            return Vec::new();
        }
        if self.opts.prune && self.hopeless(&s) {
            self.stats.pruned += 1;
            return Vec::new();
        }
        let assigned = s.r_in.union(&s.r_out);
        let Some(r) = self.choose(&assigned) else {
            return if self.leaf(&s.r_in) {
                vec![s.r_in]
            } else {
                Vec::new()
            };
        };
        let mut with_r = s.clone();
        with_r.r_in.insert(r);
        let mut m = self.aset(with_r, c.clone());
        let mut c2 = c;
        for found in &m {
            c2 = c2.refine(&witnesses(found, self.op), r);
        }
        if c2.is_empty() {
            return m;
        }
        let mut without_r = s;
        without_r.r_out.insert(r);
        m.extend(self.aset(without_r, c2));
        m
    }
}

/// Fig. 1 style search: the `⊑`-minimal rule sets `R` with `R ⊨ s` and
/// `R ⊨ c`. The program must be naf free.
pub fn aset(s: &Specification, c: &SearchConstraint, op: &OrderedProgram) -> Vec<RuleSet> {
    aset_with(s, c, op, AsetOptions::default()).0
}

pub fn aset_with(
    s: &Specification,
    c: &SearchConstraint,
    op: &OrderedProgram,
    opts: AsetOptions,
) -> (Vec<RuleSet>, AsetStats) {
    let idx = op.program().index();
    let constraints = RuleSet::from_ids(
        op.len(),
        (0..op.len()).filter(|&k| matches!(idx.rules[k].head, CHead::None)),
    );
    let mut search = Search {
        op,
        idx,
        constraints,
        opts,
        stats: AsetStats::default(),
    };
    let mut out = search.aset(s.clone(), c.clone());
    out.sort();
    out.dedup();
    (out, search.stats)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Only proper preferred answer sets.
    pub proper: bool,
    pub prune: bool,
    /// Report at most this many.
    pub max: Option<usize>,
}

impl Default for SolveOptions {
    fn default() -> SolveOptions {
        SolveOptions {
            proper: false,
            prune: false,
            max: None,
        }
    }
}

/// Preferred (or proper preferred) answer sets, sorted.
///
/// Programs without naf go through [`aset`]; with `proper` the search starts
/// from `⟨minimal rules, ∅⟩`, which yields exactly the proper preferred
/// ones. Programs with naf are enumerated and filtered.
pub fn preferred_answer_sets(op: &OrderedProgram, opts: SolveOptions) -> Vec<AnswerSetReport> {
    let p = op.program();
    let kind = if opts.proper {
        AnswerSetKind::ProperPreferred
    } else {
        AnswerSetKind::Preferred
    };
    let mut sets: Vec<Interpretation> = if p.has_naf() {
        semantics::preferred_by_enumeration(op)
            .into_iter()
            .filter(|m| !opts.proper || semantics::is_proper(m, op))
            .collect()
    } else {
        let s = if opts.proper {
            Specification {
                r_in: op.order().minimal(),
                r_out: RuleSet::empty(op.len()),
            }
        } else {
            Specification::empty(op.len())
        };
        let c = SearchConstraint::unconstrained(op.len());
        let idx = p.index();
        aset_with(&s, &c, op, AsetOptions { prune: opts.prune })
            .0
            .iter()
            .map(|r| {
                let lits = idx.decode(&idx.least_model(r, None).0);
                Interpretation::new(lits).expect("answer sets are consistent")
            })
            .collect()
    };
    sets.sort();
    if let Some(k) = opts.max {
        sets.truncate(k);
    }
    sets.into_iter().map(|m| AnswerSetReport::new(p, m, kind)).collect()
}
