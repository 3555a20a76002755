//! Negation as failure: removing it from heads, simulating it with
//! classical negation and preference, and lowering extended ordered
//! programs to simple ones.

use std::collections::BTreeSet;

use crate::atom::{Atom, ExtLiteral, Literal};
use crate::error::Result;
use crate::order::{OrderedProgram, StrictOrder};
use crate::program::{Program, ProgramKind};
use crate::rule::{Head, Rule};

use super::{all_positive, require, Fresh, Translation};

fn unordered(kind: ProgramKind, rules: Vec<Rule>, source_base: BTreeSet<Atom>) -> Result<Translation> {
    let target = OrderedProgram::unordered(Program::new(kind, rules)?);
    Ok(Translation { target, source_base })
}

/// `E(P)` for a simple program: each `l :- β` becomes `l :- β, not -l`.
/// Extended answer sets of `P` are exactly the answer sets of the result.
pub fn slp_to_elp(p: &Program) -> Result<Translation> {
    require(p, |r| !r.has_naf(), "the simple-to-extended translation expects no naf")?;
    require(p, |r| matches!(r.head(), Head::Empty | Head::Single(_)), "heads hold at most one literal")?;
    let rules = p
        .rules()
        .iter()
        .map(|r| match r.single_head() {
            Some(h) => {
                let block = h.underlying().negate().naf();
                Rule::single(r.label(), h.clone(), r.body().iter().cloned().chain([block]))
            }
            None => r.clone(),
        })
        .collect();
    unordered(ProgramKind::Extended, rules, p.herbrand_base())
}

fn absent(fresh: &Fresh, l: &Literal) -> Result<Atom> {
    let sign = if l.is_positive() { "abs" } else { "absneg" };
    fresh.atom(format!("_{sign}_{}", l.atom()))
}

/// `E(P)` for an extended program: heads `not l` are replaced by a fresh
/// atom recording that `l` was withdrawn, and ordinary rules for `l` are
/// blocked by it and by `-l`. Extended answer sets of `P` are the answer
/// sets of the result projected onto the base of `P`.
pub fn elp_remove_naf_heads(p: &Program) -> Result<Translation> {
    require(p, |r| matches!(r.head(), Head::Empty | Head::Single(_)), "heads hold at most one literal")?;
    let base = p.herbrand_base();
    let fresh = Fresh::new(&base);
    let mut rules = Vec::with_capacity(p.len());
    for r in p.rules() {
        let Some(h) = r.single_head() else {
            rules.push(r.as_regular());
            continue;
        };
        let l = h.underlying();
        let abs = absent(&fresh, l)?;
        let rule = if h.is_naf() {
            Rule::single(r.label(), abs.pos(), r.body().iter().cloned().chain([l.naf()]))
        } else {
            let blocks = [l.negate().naf(), abs.pos().naf()];
            Rule::single(r.label(), l.clone(), r.body().iter().cloned().chain(blocks))
        };
        rules.push(rule);
    }
    unordered(ProgramKind::Extended, rules, base)
}

/// `N(P)` for a normal program: `not a` in bodies becomes `-a`, and a less
/// preferred layer assumes `-a` for every atom. `M` is a stable model iff
/// `M ∪ -(B \ M)` is a proper preferred answer set of the result.
pub fn naf_sim(p: &Program) -> Result<Translation> {
    require(
        p,
        |r| all_positive(r.body().iter().map(ExtLiteral::underlying)) && all_positive(r.head().literals().iter().map(ExtLiteral::underlying)),
        "a normal program has no classical negation",
    )?;
    require(p, |r| matches!(r.head(), Head::Empty) || matches!(r.head(), Head::Single(e) if !e.is_naf()), "a normal program has one plain atom per head")?;
    let base = p.herbrand_base();
    let primed: Vec<Rule> = p
        .rules()
        .iter()
        .map(|r| Rule::new(r.label(), r.head().clone(), r.body().iter().map(naf_to_neg)))
        .collect();
    let assume: Vec<Rule> = base.iter().map(|a| Rule::fact(format!("assume:-{a}"), a.neg())).collect();
    let target = OrderedProgram::layered(ProgramKind::Simple, vec![primed, assume])?;
    Ok(Translation { target, source_base: base })
}

/// `not l` becomes `-l`; ordinary literals are kept.
pub(crate) fn naf_to_neg(e: &ExtLiteral) -> ExtLiteral {
    if e.is_naf() {
        e.underlying().negate().ext()
    } else {
        e.clone()
    }
}

/// Names for the four images of an atom under `φ`.
struct Phi {
    pos: Atom,
    neg: Atom,
    not_pos: Atom,
    not_neg: Atom,
}

impl Phi {
    fn new(fresh: &Fresh, a: &Atom) -> Result<Phi> {
        Ok(Phi {
            pos: fresh.atom(format!("_pos_{a}"))?,
            neg: fresh.atom(format!("_neg_{a}"))?,
            not_pos: fresh.atom(format!("_not_{a}"))?,
            not_neg: fresh.atom(format!("_notneg_{a}"))?,
        })
    }

    fn lit(&self, l: &Literal) -> Literal {
        if l.is_positive() { self.pos.pos() } else { self.neg.pos() }
    }

    fn absent(&self, l: &Literal) -> Literal {
        if l.is_positive() { self.not_pos.pos() } else { self.not_neg.pos() }
    }
}

/// `N_s(P)`: an equivalent simple ordered program for an extended one.
///
/// Every extended literal `e` of `P` is represented by a fresh atom `φ(e)`.
/// The result is ordered `R_c < R' < R_n`, where `R'` carries the original
/// order. The preferred answer sets of `P` are exactly the projections of
/// the proper preferred answer sets of the result onto the literals of `P`.
pub fn eolp_to_olp(op: &OrderedProgram) -> Result<Translation> {
    let p = op.program();
    require(p, |r| matches!(r.head(), Head::Empty | Head::Single(_)), "heads hold at most one literal")?;
    let base = p.herbrand_base();
    let fresh = Fresh::new(&base);
    let phis: std::collections::BTreeMap<Atom, Phi> =
        base.iter().map(|a| Ok((a.clone(), Phi::new(&fresh, a)?))).collect::<Result<_>>()?;
    let phi = |e: &ExtLiteral| {
        let f = &phis[e.underlying().atom()];
        let l = e.underlying();
        if e.is_naf() { f.absent(l).ext() } else { f.lit(l).ext() }
    };

    let mut constraints = Vec::new();
    for r in p.rules().iter().filter(|r| r.is_constraint()) {
        constraints.push(Rule::constraint(format!("c:{}", r.label()), r.body().iter().map(phi)));
    }
    for (a, f) in &phis {
        for l in [a.pos(), a.neg()] {
            let tag = if l.is_positive() { a.to_string() } else { format!("-{a}") };
            constraints.push(Rule::constraint(format!("c:{tag}:naf"), [f.lit(&l).ext(), f.absent(&l).ext()]));
            constraints.push(Rule::single(format!("c:{tag}:up"), l.clone(), [f.lit(&l).ext()]));
        }
        constraints.push(Rule::constraint(format!("c:{a}:cons"), [f.pos.pos().ext(), f.neg.pos().ext()]));
    }

    // Images of the original rules, remembering which original rule each
    // one came from so the order can be carried over.
    let mut lifted = Vec::new();
    let mut origin = Vec::new();
    for (id, r) in p.rules().iter().enumerate() {
        let Some(h) = r.single_head() else { continue };
        let body: Vec<ExtLiteral> = r.body().iter().map(phi).collect();
        let l = h.underlying();
        let f = &phis[l.atom()];
        let with = |extra: Literal| body.iter().cloned().chain([extra.ext()]).collect::<Vec<_>>();
        let images = if h.is_naf() {
            vec![
                Rule::single(format!("{}:1", r.label()), f.absent(l), body.clone()),
                Rule::single(format!("{}:2", r.label()), f.lit(l).negate(), with(f.absent(l))),
            ]
        } else {
            vec![
                Rule::single(format!("{}:1", r.label()), f.lit(l), body.clone()),
                Rule::single(format!("{}:2", r.label()), f.lit(&l.negate()).negate(), with(f.lit(l))),
                Rule::single(format!("{}:3", r.label()), f.absent(l).negate(), with(f.lit(l))),
            ]
        };
        origin.extend(std::iter::repeat(id).take(images.len()));
        lifted.extend(images);
    }

    let mut assumptions = Vec::new();
    for (a, f) in &phis {
        assumptions.push(Rule::fact(format!("n:{a}"), f.not_pos.pos()));
        assumptions.push(Rule::fact(format!("n:-{a}"), f.not_neg.pos()));
    }

    let (nc, nl, nn) = (constraints.len(), lifted.len(), assumptions.len());
    let n = nc + nl + nn;
    let mut edges = Vec::new();
    for c in 0..nc {
        edges.extend((nc..nc + nl).map(|x| (c, x)));
    }
    for x in nc..nc + nl {
        edges.extend((nc + nl..n).map(|y| (x, y)));
    }
    for (i, &oi) in origin.iter().enumerate() {
        for (j, &oj) in origin.iter().enumerate() {
            if op.order().less(oi, oj) {
                edges.push((nc + i, nc + j));
            }
        }
    }
    let rules: Vec<Rule> = constraints.into_iter().chain(lifted).chain(assumptions).collect();
    let program = Program::new(ProgramKind::Simple, rules)?;
    let order = StrictOrder::from_edges(n, edges).expect("layered construction is acyclic");
    let target = OrderedProgram::new(program, order)?;
    Ok(Translation { target, source_base: base })
}
