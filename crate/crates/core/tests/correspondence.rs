//! Translations against oracles on seeded random instances.

use olp_core::check::{self, Outcome};
use olp_core::random::{
    random_disjunctive, random_lpod, random_ordered_program, random_program, random_repair_instance, ProgramShape,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CASES: u64 = 60;

/// Runs `check` on `CASES` generated instances, each of a size drawn from
/// `sizes`, and fails on the first disagreement, naming its seed.
fn sweep<T>(
    base: u64,
    sizes: std::ops::Range<usize>,
    mut gen: impl FnMut(&mut ChaCha8Rng, usize) -> T,
    check: impl Fn(&T) -> Outcome,
) {
    for seed in base..base + CASES {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(sizes.clone());
        let x = gen(&mut rng, n);
        if let Err(e) = check(&x) {
            panic!("seed {seed}: {e}");
        }
    }
}

#[test]
fn simple_to_extended() {
    sweep(1_000, 2..9, |r, n| random_program(r, &ProgramShape::simple(4, n)), check::slp_vs_elp);
}

#[test]
fn naf_heads_removed() {
    sweep(2_000, 2..7, |r, n| random_program(r, &ProgramShape::extended(3, n)), check::eas_sim);
}

#[test]
fn naf_as_order() {
    sweep(3_000, 2..8, |r, n| random_program(r, &ProgramShape::normal(4, n)), check::naf_olp);
}

#[test]
fn disjunction_as_order() {
    sweep(4_000, 1..6, |r, n| random_disjunctive(r, 4, n, false), check::disj_olp);
}

#[test]
fn disjunction_with_naf_as_order() {
    sweep(5_000, 1..6, |r, n| random_disjunctive(r, 3, n, true), check::dnp_pm);
    sweep(6_000, 1..6, |r, n| random_disjunctive(r, 4, n, true), check::dlp_olp);
}

#[test]
fn extended_ordered_lowered() {
    sweep(7_000, 2..6, |r, n| random_ordered_program(r, &ProgramShape::extended(2, n), 0.4), check::eolp_to_olp);
}

#[test]
fn ordered_disjunction() {
    sweep(8_000, 1..5, |r, n| random_lpod(r, 3, n), check::lpod);
}

#[test]
fn database_repair() {
    sweep(9_000, 1..6, |r, n| random_repair_instance(r, 4, n), |(d, c)| check::repair(d, c));
}

#[test]
fn solver_matches_oracle() {
    sweep(10_000, 2..11, |r, n| random_ordered_program(r, &ProgramShape::simple(5, n), 0.3), check::solver_vs_oracle);
}

#[test]
fn construction_yields_answer_sets() {
    let shape = |n| ProgramShape { constraint_rate: 0.0, ..ProgramShape::simple(5, n) };
    sweep(11_000, 1..12, |r, n| random_program(r, &shape(n)), check::universality);
}
