//! Worked examples checked through the library, down to individual reducts.

use olp_core::semantics::{compare_reducts, Preference};
use olp_core::{oracle, reduct, Interpretation, OrderedProgram, ProgramKind};

fn interp(s: &str) -> Interpretation {
    Interpretation::parse(s).unwrap()
}

fn labels(op: &OrderedProgram, m: &Interpretation) -> Vec<String> {
    let p = op.program();
    p.labels(&reduct(p, m)).into_iter().map(str::to_string).collect()
}

#[test]
fn studying_reducts() {
    // Bottom layer first: r1 and r2 are the strongest rules.
    let op = OrderedProgram::parse_layers(
        ProgramKind::Simple,
        "-pass :- -study.\npass :- -pass.\n---\n-study.\n---\npass :- study.\nstudy.",
    )
    .unwrap();
    let m: Vec<Interpretation> =
        ["study, pass", "-study, pass", "-study, -pass", "study, -pass"].iter().map(|s| interp(s)).collect();
    assert_eq!(labels(&op, &m[0]), ["r1", "r2", "r4", "r5"]);
    assert_eq!(labels(&op, &m[1]), ["r2", "r3", "r4"]);
    let p = op.program();
    let r: Vec<_> = m.iter().map(|x| reduct(p, x)).collect();
    let cmp = |i: usize, j: usize| compare_reducts(&r[i], &r[j], i == j, op.order());
    assert_eq!(cmp(0, 1), Preference::Less);
    assert_eq!(cmp(0, 2), Preference::Less);
    assert_eq!(cmp(0, 3), Preference::Less);
    assert_eq!(cmp(2, 3), Preference::Less);
    assert_eq!(oracle::brute_force_proper_preferred(&op).unwrap(), [m[0].clone()]);
}

#[test]
fn even_loop_with_classical_negation() {
    let op = OrderedProgram::parse_layers(ProgramKind::Simple, "a :- -b.\nb :- -a.\n---\n-a.\n-b.").unwrap();
    let all = oracle::extended_answer_sets(op.program()).unwrap();
    assert_eq!(all.len(), 3);
    // Each reduct misses exactly the rules it defeats.
    let missing = |m: &str| {
        let p = op.program();
        let r = reduct(p, &interp(m));
        p.labels(&r.complement()).into_iter().map(str::to_string).collect::<Vec<_>>()
    };
    assert_eq!(missing("-a, b"), ["r4"]);
    assert_eq!(missing("a, -b"), ["r3"]);
    assert_eq!(missing("-a, -b"), ["r1", "r2"]);
    assert_eq!(oracle::brute_force_preferred(&op).unwrap(), [interp("-a, b"), interp("a, -b")]);
}

#[test]
fn penguin_reducts() {
    let op = OrderedProgram::parse_layers(ProgramKind::Simple, "b :- p.\np.\n---\n-f :- p.\n---\nf :- b.").unwrap();
    let (i1, i2) = (interp("p, b, f"), interp("p, b, -f"));
    assert_eq!(labels(&op, &i1), ["r1", "r2", "r4"]);
    assert_eq!(labels(&op, &i2), ["r1", "r2", "r3"]);
    let p = op.program();
    assert_eq!(compare_reducts(&reduct(p, &i2), &reduct(p, &i1), false, op.order()), Preference::Less);
}
