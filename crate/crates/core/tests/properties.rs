//! Property tests of the basic judgments and of the reduct order.

use std::collections::BTreeSet;

use olp_core::prefsolve::{aset, constraint_satisfied, has_witness, spec_satisfied, witnesses, SearchConstraint, Specification};
use olp_core::random::{random_order, random_ordered_program, random_program, random_subset, ProgramShape};
use olp_core::semantics::{compare_reducts, is_extended_answer_set, reduct_preceq, Preference};
use olp_core::{applied, oracle, reduct, satisfies, star_closure, Interpretation, Literal, OrderedProgram, Program, RuleSet};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn ids(s: &RuleSet) -> BTreeSet<usize> {
    s.iter().collect()
}

/// A random consistent interpretation over the atoms of `p`.
fn random_interpretation(rng: &mut ChaCha8Rng, p: &Program) -> Interpretation {
    let lits = p.herbrand_base().into_iter().filter_map(|a| match rng.random_range(0..3) {
        0 => Some(a.pos()),
        1 => Some(a.neg()),
        _ => None,
    });
    Interpretation::new(lits).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn preceq_is_a_partial_order(seed in any::<u64>(), n in 1usize..10, density in 0.0f64..0.6) {
        let mut rng = rng(seed);
        let o = random_order(&mut rng, n, density);
        let (a, b, c) = (random_subset(&mut rng, n), random_subset(&mut rng, n), random_subset(&mut rng, n));
        prop_assert!(reduct_preceq(&a, &a, &o));
        if reduct_preceq(&a, &b, &o) && reduct_preceq(&b, &a, &o) {
            prop_assert_eq!(&a, &b);
        }
        if reduct_preceq(&a, &b, &o) && reduct_preceq(&b, &c, &o) {
            prop_assert!(reduct_preceq(&a, &c, &o));
        }
    }

    #[test]
    fn preceq_matches_the_definition(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let op = random_ordered_program(&mut rng, &ProgramShape::simple(3, 8), 0.3);
        let (a, b) = (random_subset(&mut rng, op.len()), random_subset(&mut rng, op.len()));
        prop_assert_eq!(reduct_preceq(&a, &b, op.order()), oracle::preceq(&op, &ids(&a), &ids(&b)));
        let cmp = compare_reducts(&a, &b, a == b, op.order());
        let flipped = compare_reducts(&b, &a, a == b, op.order());
        let mirror = match cmp {
            Preference::Less => Preference::Greater,
            Preference::Greater => Preference::Less,
            other => other,
        };
        prop_assert_eq!(flipped, mirror);
    }

    #[test]
    fn witness_lemma(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let op = random_ordered_program(&mut rng, &ProgramShape::simple(3, 9), 0.35);
        let (t, r) = (random_subset(&mut rng, op.len()), random_subset(&mut rng, op.len()));
        prop_assert_eq!(!reduct_preceq(&t, &r, op.order()), has_witness(&r, &t, &op));
        for x in witnesses(&t, &op).sets {
            prop_assert_eq!(x.difference(&t).len(), 1);
        }
    }

    #[test]
    fn applied_rules_are_satisfied(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let p = random_program(&mut rng, &ProgramShape::extended(4, 8));
        let i = random_interpretation(&mut rng, &p);
        for r in p.rules() {
            prop_assert!(!applied(&i, r) || satisfies(&i, r));
        }
        let red = reduct(&p, &i);
        prop_assert!((0..p.len()).all(|k| red.contains(k) == satisfies(&i, p.rule(k))));
    }

    #[test]
    fn star_is_monotone(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let p = random_program(&mut rng, &ProgramShape::simple(4, 10));
        let small = random_subset(&mut rng, p.len());
        let big = small.union(&random_subset(&mut rng, p.len()));
        let s = star_closure(small.iter().map(|k| p.rule(k))).unwrap();
        let b = star_closure(big.iter().map(|k| p.rule(k))).unwrap();
        prop_assert!(s.literals.is_subset(&b.literals));
        prop_assert!(!s.bottom || b.bottom);
    }

    #[test]
    fn answer_sets_agree_with_the_direct_check(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let p = random_program(&mut rng, &ProgramShape::extended(3, 6));
        let i = random_interpretation(&mut rng, &p);
        let lits: BTreeSet<Literal> = i.literals().clone();
        prop_assert_eq!(is_extended_answer_set(&i, &p), oracle::check_extended_answer_set(&p, &lits));
    }

    #[test]
    fn aset_respects_specification_and_constraint(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let op = random_ordered_program(&mut rng, &ProgramShape::simple(3, 7), 0.3);
        let n = op.len();
        let closed = op.order().down_closure(&random_subset(&mut rng, n));
        let r_in = closed.intersection(&random_subset(&mut rng, n));
        let r_out = closed.difference(&r_in);
        let s = Specification::new(r_in, r_out, &op).unwrap();
        let c = SearchConstraint::new((0..rng.random_range(1..3)).map(|_| {
            let mut x = random_subset(&mut rng, n);
            x.intersect_with(&random_subset(&mut rng, n));
            x
        }));
        for r in aset(&s, &c, &op) {
            prop_assert!(spec_satisfied(&r, &s, &op));
            prop_assert!(constraint_satisfied(&r, &c));
        }
    }

    #[test]
    fn rule_text_round_trips(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let p = random_program(&mut rng, &ProgramShape::extended(4, 8));
        for r in p.rules() {
            let again = olp_core::Rule::parse(r.label(), &r.text()).unwrap();
            prop_assert_eq!(&again, r);
        }
    }
}

#[test]
fn unordered_programs_prefer_nothing() {
    let p = Program::parse(olp_core::ProgramKind::Simple, "a.\n-a.\nb :- a.").unwrap();
    let op = OrderedProgram::unordered(p);
    let all = oracle::extended_answer_sets(op.program()).unwrap();
    assert_eq!(oracle::brute_force_preferred(&op).unwrap(), all);
}
