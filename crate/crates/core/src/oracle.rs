//! Brute-force reference semantics for differential testing.
//!
//! Everything here enumerates candidate interpretations and checks the
//! definitions literally, on plain sets, without the compiled index or the
//! search procedures the solver uses. Enumeration is bounded by size guards.

use std::collections::{BTreeMap, BTreeSet};

use crate::atom::{Atom, ExtLiteral, Literal};
use crate::error::{Error, Result};
use crate::interp::{self, Interpretation};
use crate::order::OrderedProgram;
use crate::program::{Program, ProgramKind, RuleId};
use crate::rule::{Head, Rule};

/// Atoms allowed when enumerating subsets of the base.
pub const MAX_SUBSET_ATOMS: usize = 14;
/// Atoms allowed when enumerating consistent literal sets (`3^n`).
pub const MAX_LITERAL_ATOMS: usize = 10;
/// Split programs allowed in one enumeration.
pub const MAX_SPLITS: usize = 1 << 12;

pub type AtomSet = BTreeSet<Atom>;

fn guard(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::SizeGuard { what, size, limit })
    } else {
        Ok(())
    }
}

/// Every subset of `atoms`, in binary counting order.
fn subsets(atoms: &[Atom]) -> impl Iterator<Item = AtomSet> + '_ {
    (0u64..1 << atoms.len()).map(move |mask| {
        atoms
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, a)| a.clone())
            .collect()
    })
}

/// Every consistent set of literals over `atoms`.
fn literal_sets(atoms: &[Atom]) -> Vec<BTreeSet<Literal>> {
    let mut out = vec![BTreeSet::new()];
    for a in atoms {
        let mut next = Vec::with_capacity(out.len() * 3);
        for s in &out {
            next.push(s.clone());
            let mut p = s.clone();
            p.insert(a.pos());
            next.push(p);
            let mut n = s.clone();
            n.insert(a.neg());
            next.push(n);
        }
        out = next;
    }
    out
}

/// A definite rule over literals; `None` as head is `⊥`.
type Definite = (Option<Literal>, Vec<Literal>);

/// Naive least fixpoint; `¬a` is just another symbol. Returns the model
/// and whether `⊥` was derived.
fn least_model(rules: &[Definite]) -> (BTreeSet<Literal>, bool) {
    let mut m = BTreeSet::new();
    let mut bottom = false;
    loop {
        let mut changed = false;
        for (h, body) in rules {
            if body.iter().all(|l| m.contains(l)) {
                match h {
                    Some(h) => changed |= m.insert(h.clone()),
                    None => bottom = true,
                }
            }
        }
        if !changed {
            return (m, bottom);
        }
    }
}

fn holds(i: &BTreeSet<Literal>, e: &ExtLiteral) -> bool {
    i.contains(e.underlying()) != e.is_naf()
}

/// The GL transformation of single-head rules as definite rules.
fn gl(rules: &[&Rule], i: &BTreeSet<Literal>) -> Vec<Definite> {
    let mut out = Vec::new();
    for r in rules {
        if r.body().iter().any(|e| e.is_naf() && i.contains(e.underlying())) {
            continue;
        }
        let body: Vec<Literal> = r
            .body()
            .iter()
            .filter(|e| !e.is_naf())
            .map(|e| e.underlying().clone())
            .collect();
        let head = match r.head() {
            Head::Empty => None,
            Head::Single(e) if e.is_naf() => {
                if !i.contains(e.underlying()) {
                    continue;
                }
                None
            }
            Head::Single(e) => Some(e.underlying().clone()),
            Head::Disjunction(_) | Head::Ordered(_) => {
                panic!("gl: multi-literal head in {}", r.label())
            }
        };
        out.push((head, body));
    }
    out
}

fn is_answer_set_of(rules: &[&Rule], i: &BTreeSet<Literal>) -> bool {
    let (m, bottom) = least_model(&gl(rules, i));
    !bottom && m == *i
}

fn base_of(p: &Program) -> Vec<Atom> {
    p.herbrand_base().into_iter().collect()
}

fn require(p: &Program, ok: impl Fn(&Rule) -> bool, what: &str) -> Result<()> {
    match p.rules().iter().find(|r| !ok(r)) {
        Some(r) => Err(Error::Input(format!("rule {} is not {what}", r.label()))),
        None => Ok(()),
    }
}

fn atoms_only(r: &Rule) -> bool {
    r.head().literals().iter().chain(r.body()).all(|e| e.underlying().is_positive())
}

fn seminegative(r: &Rule) -> bool {
    atoms_only(r) && !matches!(r.head(), Head::Single(e) if e.is_naf())
}

/// Stable models of a normal program over atoms (naf in bodies only).
pub fn stable_models(p: &Program) -> Result<Vec<AtomSet>> {
    require(p, |r| seminegative(r) && !matches!(r.head(), Head::Disjunction(_) | Head::Ordered(_)), "a normal rule over atoms")?;
    let atoms = base_of(p);
    guard("atoms", atoms.len(), MAX_SUBSET_ATOMS)?;
    let rules: Vec<&Rule> = p.rules().iter().collect();
    let mut out = Vec::new();
    for s in subsets(&atoms) {
        let lits: BTreeSet<Literal> = s.iter().map(Atom::pos).collect();
        if is_answer_set_of(&rules, &lits) {
            out.push(s);
        }
    }
    Ok(out)
}

/// `I` is closed under a disjunctive program: every rule with a true body
/// has a true head literal.
fn closed(i: &AtomSet, p: &Program, reduct_of: Option<&AtomSet>) -> bool {
    p.rules().iter().all(|r| {
        if let Some(j) = reduct_of {
            if r.naf_body().any(|l| j.contains(l.atom())) {
                return true;
            }
        }
        let body = r.pos_body().all(|l| i.contains(l.atom()));
        !body || r.head().literals().iter().any(|e| i.contains(e.underlying().atom()))
    })
}

fn subset_minimal(mut sets: Vec<AtomSet>) -> Vec<AtomSet> {
    sets.sort();
    sets.dedup();
    let keep: Vec<AtomSet> = sets
        .iter()
        .filter(|s| !sets.iter().any(|t| t != *s && t.is_subset(s)))
        .cloned()
        .collect();
    keep
}

/// `⊆`-minimal models of a positive disjunctive program.
pub fn minimal_models(p: &Program) -> Result<Vec<AtomSet>> {
    require(p, |r| seminegative(r) && r.naf_body().next().is_none(), "a positive disjunctive rule")?;
    let atoms = base_of(p);
    guard("atoms", atoms.len(), MAX_SUBSET_ATOMS)?;
    let models: Vec<AtomSet> = subsets(&atoms).filter(|s| closed(s, p, None)).collect();
    Ok(subset_minimal(models))
}

/// Answer sets of a seminegative disjunctive program: `I` is a minimal model
/// of `P^I`.
pub fn dlp_answer_sets(p: &Program) -> Result<Vec<AtomSet>> {
    require(p, seminegative, "a seminegative rule")?;
    let atoms = base_of(p);
    guard("atoms", atoms.len(), MAX_SUBSET_ATOMS)?;
    let all: Vec<AtomSet> = subsets(&atoms).collect();
    let mut out = Vec::new();
    for i in &all {
        if !closed(i, p, Some(i)) {
            continue;
        }
        let smaller = all
            .iter()
            .any(|j| j != i && j.is_subset(i) && closed(j, p, Some(i)));
        if !smaller {
            out.push(i.clone());
        }
    }
    Ok(out)
}

/// All split programs: each disjunctive rule replaced by the rules
/// `a ← β` for the atoms of one nonempty subset of its head.
pub fn split_programs(p: &Program) -> Result<Vec<Program>> {
    let mut choices: Vec<Vec<Vec<Rule>>> = Vec::new();
    let mut count = 1usize;
    for r in p.rules() {
        let heads: Vec<Literal> = match r.head() {
            Head::Disjunction(ls) | Head::Ordered(ls) => ls.clone(),
            _ => {
                choices.push(vec![vec![r.clone()]]);
                continue;
            }
        };
        let mut opts = Vec::new();
        for mask in 1u64..1 << heads.len() {
            let rules = heads
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(k, h)| Rule::single(format!("{}~{}", r.label(), k + 1), h.clone(), r.body().to_vec()))
                .collect();
            opts.push(rules);
        }
        count = count.saturating_mul(opts.len());
        guard("split programs", count, MAX_SPLITS)?;
        choices.push(opts);
    }
    let mut out = vec![Vec::new()];
    for opts in choices {
        let mut next = Vec::with_capacity(out.len() * opts.len());
        for prefix in &out {
            for o in &opts {
                let mut v: Vec<Rule> = prefix.clone();
                v.extend(o.iter().cloned());
                next.push(v);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|rules| Program::new(ProgramKind::Extended, rules))
        .collect()
}

/// Union of the stable models of all split programs.
pub fn possible_models(p: &Program) -> Result<Vec<AtomSet>> {
    require(p, seminegative, "a seminegative rule")?;
    let mut all = BTreeSet::new();
    for sp in split_programs(p)? {
        // a split program can lose atoms that only occurred in dropped options
        let atoms = base_of(p);
        guard("atoms", atoms.len(), MAX_SUBSET_ATOMS)?;
        let rules: Vec<&Rule> = sp.rules().iter().collect();
        for s in subsets(&atoms) {
            let lits: BTreeSet<Literal> = s.iter().map(Atom::pos).collect();
            if is_answer_set_of(&rules, &lits) {
                all.insert(s);
            }
        }
    }
    Ok(all.into_iter().collect())
}

pub fn minimal_possible_models(p: &Program) -> Result<Vec<AtomSet>> {
    Ok(subset_minimal(possible_models(p)?))
}

/// Consistent answer sets of a program with single (possibly naf) heads,
/// by enumeration of all consistent literal sets.
pub fn classical_answer_sets(p: &Program) -> Result<Vec<Interpretation>> {
    require(p, |r| !matches!(r.head(), Head::Disjunction(_) | Head::Ordered(_)), "a single-head rule")?;
    let atoms = base_of(p);
    guard("atoms", atoms.len(), MAX_LITERAL_ATOMS)?;
    let rules: Vec<&Rule> = p.rules().iter().collect();
    Ok(literal_sets(&atoms)
        .into_iter()
        .filter(|i| is_answer_set_of(&rules, i))
        .map(|i| Interpretation::new(i).expect("enumerated sets are consistent"))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect())
}

fn satisfied(i: &BTreeSet<Literal>, r: &Rule) -> bool {
    let body = r.body().iter().all(|e| holds(i, e));
    !body || r.head().literals().iter().any(|e| holds(i, e))
}

/// Direct check of the extended answer set definition on a literal set.
pub fn check_extended_answer_set(p: &Program, i: &BTreeSet<Literal>) -> bool {
    let interp = match Interpretation::new(i.iter().cloned()) {
        Ok(x) => x,
        Err(_) => return false,
    };
    let kept: Vec<&Rule> = p.rules().iter().filter(|r| satisfied(i, r)).collect();
    if p.rules().iter().any(|r| !satisfied(i, r) && !interp::defeated(r, &interp, p)) {
        return false;
    }
    if p.has_naf() {
        is_answer_set_of(&kept, i)
    } else {
        let definite: Vec<Definite> = kept
            .iter()
            .map(|r| {
                let h = r.single_head().map(|e| e.underlying().clone());
                (h, r.pos_body().cloned().collect())
            })
            .collect();
        let (m, bottom) = least_model(&definite);
        !bottom && m == *i
    }
}

/// All extended answer sets by exhaustive enumeration.
pub fn extended_answer_sets(p: &Program) -> Result<Vec<Interpretation>> {
    require(p, |r| !matches!(r.head(), Head::Disjunction(_) | Head::Ordered(_)), "a single-head rule")?;
    let atoms = base_of(p);
    guard("atoms", atoms.len(), MAX_LITERAL_ATOMS)?;
    Ok(literal_sets(&atoms)
        .into_iter()
        .filter(|i| check_extended_answer_set(p, i))
        .map(|i| Interpretation::new(i).expect("enumerated sets are consistent"))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect())
}

fn reduct_ids(p: &Program, i: &Interpretation) -> BTreeSet<RuleId> {
    (0..p.len())
        .filter(|&k| satisfied(i.literals(), p.rule(k)))
        .collect()
}

/// `R1 ⊑ R2` straight from the definition.
pub fn preceq(op: &OrderedProgram, r1: &BTreeSet<RuleId>, r2: &BTreeSet<RuleId>) -> bool {
    r2.difference(r1)
        .all(|&x| r1.difference(r2).any(|&y| op.order().less(y, x)))
}

/// `m1` strictly beats `m2`. Programs with naf use the extended variant
/// (distinct reducts and `⊑`), others `⊑` one way and not the other.
pub fn strictly_preferred(op: &OrderedProgram, m1: &Interpretation, m2: &Interpretation) -> bool {
    let p = op.program();
    let r1 = reduct_ids(p, m1);
    let r2 = reduct_ids(p, m2);
    if p.has_naf() {
        r1 != r2 && preceq(op, &r1, &r2)
    } else {
        preceq(op, &r1, &r2) && !preceq(op, &r2, &r1)
    }
}

/// `⊑`-minimal extended answer sets by exhaustive enumeration.
pub fn brute_force_preferred(op: &OrderedProgram) -> Result<Vec<Interpretation>> {
    let all = extended_answer_sets(op.program())?;
    Ok(all
        .iter()
        .filter(|m| !all.iter().any(|n| strictly_preferred(op, n, m)))
        .cloned()
        .collect())
}

/// Preferred answer sets that satisfy every `<`-minimal rule.
pub fn brute_force_proper_preferred(op: &OrderedProgram) -> Result<Vec<Interpretation>> {
    let p = op.program();
    let minimal: Vec<RuleId> = (0..p.len())
        .filter(|&y| (0..p.len()).all(|x| !op.order().less(x, y)))
        .collect();
    Ok(brute_force_preferred(op)?
        .into_iter()
        .filter(|m| minimal.iter().all(|&k| satisfied(m.literals(), p.rule(k))))
        .collect())
}

/// Satisfaction degrees of the rules of an LPOD with respect to a set of
/// literals, and the rules grouped by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub levels: BTreeMap<usize, BTreeSet<RuleId>>,
}

impl DegreeProfile {
    pub fn new(p: &Program, s: &Interpretation) -> DegreeProfile {
        let degrees: Vec<usize> = p
            .rules()
            .iter()
            .map(|r| {
                if !r.body().iter().all(|e| s.holds(e)) {
                    return 1;
                }
                let options: Vec<Literal> = match r.head() {
                    Head::Ordered(ls) | Head::Disjunction(ls) => ls.clone(),
                    Head::Single(e) => vec![e.underlying().clone()],
                    Head::Empty => Vec::new(),
                };
                options
                    .iter()
                    .position(|l| s.contains(l))
                    .map_or(options.len().max(1), |k| k + 1)
            })
            .collect();
        let mut levels: BTreeMap<usize, BTreeSet<RuleId>> = BTreeMap::new();
        for (k, &d) in degrees.iter().enumerate() {
            levels.entry(d).or_default().insert(k);
        }
        DegreeProfile { degrees, levels }
    }

    /// `S^i(P)`.
    pub fn level(&self, i: usize) -> BTreeSet<RuleId> {
        self.levels.get(&i).cloned().unwrap_or_default()
    }

    /// `self ⊏_b other`.
    pub fn beats(&self, other: &DegreeProfile) -> bool {
        let top = self.degrees.iter().chain(&other.degrees).copied().max().unwrap_or(0);
        for k in 1..=top {
            let (mine, theirs) = (self.level(k), other.level(k));
            if mine == theirs {
                continue;
            }
            return theirs.is_subset(&mine);
        }
        false
    }
}

/// `r^k = a_k ← β, not a_1, ..., not a_{k-1}`.
pub fn lpod_option(r: &Rule, k: usize, label: String) -> Rule {
    let Head::Ordered(ls) = r.head() else {
        return r.with_label(label);
    };
    let mut body = r.body().to_vec();
    body.extend(ls[..k - 1].iter().map(Literal::naf));
    Rule::single(label, ls[k - 1].clone(), body)
}

/// LPOD answer sets: answer sets of split programs.
pub fn lpod_answer_sets(p: &Program) -> Result<Vec<Interpretation>> {
    let mut splits: Vec<Vec<Rule>> = vec![Vec::new()];
    for r in p.rules() {
        let n = match r.head() {
            Head::Ordered(ls) => ls.len(),
            Head::Disjunction(_) => return Err(Error::Input(format!("rule {} is disjunctive", r.label()))),
            _ => 1,
        };
        guard("split programs", splits.len() * n, MAX_SPLITS)?;
        let mut next = Vec::with_capacity(splits.len() * n);
        for prefix in &splits {
            for k in 1..=n {
                let mut v = prefix.clone();
                v.push(lpod_option(r, k, r.label().to_string()));
                next.push(v);
            }
        }
        splits = next;
    }
    let atoms = base_of(p);
    guard("atoms", atoms.len(), MAX_LITERAL_ATOMS)?;
    let candidates = literal_sets(&atoms);
    let mut out = BTreeSet::new();
    for rules in splits {
        let rules: Vec<&Rule> = rules.iter().collect();
        for i in candidates.iter().filter(|i| is_answer_set_of(&rules, i)) {
            out.insert(Interpretation::new(i.iter().cloned()).expect("consistent"));
        }
    }
    Ok(out.into_iter().collect())
}

/// `⊏_b`-minimal LPOD answer sets.
pub fn lpod_preferred(p: &Program) -> Result<Vec<Interpretation>> {
    let all = lpod_answer_sets(p)?;
    let profiles: Vec<DegreeProfile> = all.iter().map(|s| DegreeProfile::new(p, s)).collect();
    Ok(all
        .iter()
        .enumerate()
        .filter(|(k, _)| !profiles.iter().any(|q| q.beats(&profiles[*k])))
        .map(|(_, s)| s.clone())
        .collect())
}

/// `Δ_D(D′) = D′ \ D`.
pub fn delta(d: &BTreeSet<Literal>, d2: &BTreeSet<Literal>) -> BTreeSet<Literal> {
    d2.difference(d).cloned().collect()
}

/// `(D⁺ \ D′⁺) ∪ (D′⁺ \ D⁺)`.
pub fn symmetric_delta(d: &BTreeSet<Literal>, d2: &BTreeSet<Literal>) -> AtomSet {
    let pos = |s: &BTreeSet<Literal>| -> AtomSet {
        s.iter().filter(|l| l.is_positive()).map(|l| l.atom().clone()).collect()
    };
    let (a, b) = (pos(d), pos(d2));
    a.symmetric_difference(&b).cloned().collect()
}

/// `C`-repairs of `D`: total databases over `H(D)` satisfying every clause,
/// with `⊆`-minimal `Δ_D`.
pub fn brute_force_repairs(d: &BTreeSet<Literal>, clauses: &[BTreeSet<Literal>]) -> Result<Vec<BTreeSet<Literal>>> {
    let atoms: Vec<Atom> = d.iter().map(|l| l.atom().clone()).collect::<AtomSet>().into_iter().collect();
    guard("atoms", atoms.len(), MAX_SUBSET_ATOMS)?;
    let models: Vec<BTreeSet<Literal>> = subsets(&atoms)
        .map(|s| atoms.iter().map(|a| if s.contains(a) { a.pos() } else { a.neg() }).collect::<BTreeSet<Literal>>())
        .filter(|m| clauses.iter().all(|c| c.iter().any(|l| m.contains(l))))
        .collect();
    Ok(models
        .iter()
        .filter(|m| {
            let dm = delta(d, m);
            !models.iter().any(|n| n != *m && delta(d, n).is_subset(&dm))
        })
        .cloned()
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prog(kind: ProgramKind, text: &str) -> Program {
        Program::parse(kind, text).unwrap()
    }

    fn names(v: &[AtomSet]) -> Vec<String> {
        v.iter()
            .map(|s| s.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(","))
            .collect()
    }

    fn strs(v: &[Interpretation]) -> Vec<String> {
        v.iter().map(|i| i.to_string()).collect()
    }

    #[test]
    fn stable_models_examples() {
        let p = prog(ProgramKind::Extended, "a :- not b.\nb :- not a.");
        assert_eq!(names(&stable_models(&p).unwrap()), ["a", "b"]);
        let loop_ = prog(ProgramKind::Extended, "a :- a.");
        assert_eq!(names(&stable_models(&loop_).unwrap()), [""]);
        let odd = prog(ProgramKind::Extended, "a :- not a.");
        assert!(stable_models(&odd).unwrap().is_empty());
        let neg = prog(ProgramKind::Extended, "-a.");
        assert!(stable_models(&neg).is_err());
    }

    #[test]
    fn minimal_and_possible_models() {
        let ex7 = prog(ProgramKind::Disjunctive, "a | b.\na :- b.\nb :- a.");
        assert_eq!(names(&minimal_models(&ex7).unwrap()), ["a,b"]);
        let ab = prog(ProgramKind::Disjunctive, "a | b.");
        assert_eq!(names(&minimal_models(&ab).unwrap()), ["a", "b"]);
        let empty = Program::new(ProgramKind::Disjunctive, vec![]).unwrap();
        assert_eq!(names(&minimal_models(&empty).unwrap()), [""]);
        let mut pm = names(&possible_models(&ab).unwrap());
        pm.sort();
        assert_eq!(pm, ["a", "a,b", "b"]);
        let ex8 = prog(ProgramKind::Disjunctive, "a | b.\nb :- a.\na :- not a.");
        assert_eq!(names(&minimal_possible_models(&ex8).unwrap()), ["a,b"]);
        let normal = prog(ProgramKind::Extended, "a :- not b.\nb :- not a.");
        assert_eq!(possible_models(&normal).unwrap(), stable_models(&normal).unwrap());
    }

    #[test]
    fn dlp_answer_sets_examples() {
        let ab = prog(ProgramKind::Disjunctive, "a | b.");
        assert_eq!(names(&dlp_answer_sets(&ab).unwrap()), ["a", "b"]);
        let ex8 = prog(ProgramKind::Disjunctive, "a | b.\nb :- a.\na :- not a.");
        assert!(dlp_answer_sets(&ex8).unwrap().is_empty());
    }

    #[test]
    fn naive_extended_answer_sets() {
        let ex0 = prog(ProgramKind::Simple, "-a.\n-b.\na :- -b.\nb :- -a.");
        assert_eq!(
            strs(&extended_answer_sets(&ex0).unwrap()),
            ["{ -a, -b }", "{ -a, b }", "{ a, -b }"]
        );
        let ex9 = prog(ProgramKind::Extended, "a :- not b.\nb :- a, not c.");
        assert!(extended_answer_sets(&ex9).unwrap().is_empty());
    }

    #[test]
    fn preferred_by_brute_force() {
        let ex1 = OrderedProgram::parse_layers(
            ProgramKind::Simple,
            "b :- p.\np.\n---\n-f :- p.\n---\nf :- b.",
        )
        .unwrap();
        assert_eq!(strs(&brute_force_preferred(&ex1).unwrap()), ["{ b, -f, p }"]);
        let nafhead = OrderedProgram::parse_layers(ProgramKind::Extended, ":- a.\n---\na.\n---\nnot a.").unwrap();
        assert_eq!(strs(&brute_force_preferred(&nafhead).unwrap()), ["{ }"]);
    }

    #[test]
    fn lpod_example() {
        let p = prog(ProgramKind::Lpod, "b * c * d.\nc * a * d.\n-c :- b.");
        assert_eq!(
            strs(&lpod_answer_sets(&p).unwrap()),
            ["{ a, b, -c }", "{ a, d }", "{ b, -c, d }", "{ c }", "{ d }"]
        );
        assert_eq!(strs(&lpod_preferred(&p).unwrap()), ["{ a, b, -c }", "{ c }"]);
        let s = Interpretation::parse("d").unwrap();
        let prof = DegreeProfile::new(&p, &s);
        assert_eq!(prof.degrees, [3, 3, 1]);
        let one = prog(ProgramKind::Lpod, "b * c.");
        assert_eq!(strs(&lpod_answer_sets(&one).unwrap()), ["{ b }", "{ c }"]);
        assert_eq!(strs(&lpod_preferred(&one).unwrap()), ["{ b }"]);
        let blocked = prog(ProgramKind::Lpod, "c * d :- a.\na :- not b.\nb :- not a.");
        assert_eq!(strs(&lpod_preferred(&blocked).unwrap()), ["{ a, c }", "{ b }"]);
    }

    #[test]
    fn repair_example() {
        let lit = |s: &str| Literal::parse(s).unwrap();
        let set = |v: &[&str]| v.iter().map(|s| lit(s)).collect::<BTreeSet<_>>();
        let d = set(&["p", "q", "r"]);
        let c: Vec<BTreeSet<Literal>> = [
            ["-p", "q"],
            ["-p", "-q"],
            ["-q", "r"],
            ["-q", "-r"],
            ["-r", "p"],
            ["-r", "-p"],
        ]
        .iter()
        .map(|x| set(x))
        .collect();
        assert_eq!(brute_force_repairs(&d, &c).unwrap(), [set(&["-p", "-q", "-r"])]);
        let d2 = set(&["-a", "-b"]);
        let c2 = vec![set(&["a", "-b"]), set(&["-a", "b"])];
        assert_eq!(brute_force_repairs(&d2, &c2).unwrap(), [d2.clone()]);
        assert_eq!(brute_force_repairs(&d, &[]).unwrap(), [d.clone()]);
        assert_eq!(symmetric_delta(&d, &set(&["-p", "q", "r"])).len(), 1);
    }

    #[test]
    fn size_guard() {
        let text: Vec<String> = (0..12).map(|k| format!("a{k}.")).collect();
        let p = prog(ProgramKind::Simple, &text.join("\n"));
        assert!(matches!(extended_answer_sets(&p), Err(Error::SizeGuard { .. })));
    }
}
