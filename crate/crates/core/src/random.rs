//! Seeded generators of small random instances for differential and
//! property testing. All generators draw from a caller-supplied RNG, so a
//! fixed seed reproduces an instance exactly.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

use crate::atom::{Atom, ExtLiteral, Literal};
use crate::order::{OrderedProgram, StrictOrder};
use crate::program::{Program, ProgramKind, RuleId};
use crate::rule::{Head, Rule};
use crate::transforms::{ConstraintClause, Database};

/// Shape of a random program.
#[derive(Clone, Copy, Debug)]
pub struct ProgramShape {
    pub atoms: usize,
    pub rules: usize,
    pub max_body: usize,
    /// Allow `-a`.
    pub classical_negation: bool,
    /// Allow `not l` in bodies.
    pub naf_bodies: bool,
    /// Allow `not l` as a head.
    pub naf_heads: bool,
    /// Probability that a rule is a constraint.
    pub constraint_rate: f64,
}

impl ProgramShape {
    /// A simple program: classical negation and constraints, no naf.
    pub fn simple(atoms: usize, rules: usize) -> ProgramShape {
        ProgramShape {
            atoms,
            rules,
            max_body: 2,
            classical_negation: true,
            naf_bodies: false,
            naf_heads: false,
            constraint_rate: 0.1,
        }
    }

    pub fn extended(atoms: usize, rules: usize) -> ProgramShape {
        ProgramShape {
            naf_bodies: true,
            naf_heads: true,
            ..ProgramShape::simple(atoms, rules)
        }
    }

    /// A normal program: atoms only, naf in bodies, no constraints.
    pub fn normal(atoms: usize, rules: usize) -> ProgramShape {
        ProgramShape {
            classical_negation: false,
            naf_bodies: true,
            constraint_rate: 0.0,
            ..ProgramShape::simple(atoms, rules)
        }
    }

    fn kind(&self) -> ProgramKind {
        if self.naf_bodies || self.naf_heads {
            ProgramKind::Extended
        } else {
            ProgramKind::Simple
        }
    }
}

/// Atoms `a0`, `a1`, ...
pub fn atom_pool(n: usize) -> Vec<Atom> {
    (0..n).map(|k| Atom::new(&format!("a{k}"))).collect()
}

fn literal<R: Rng>(rng: &mut R, atoms: &[Atom], negation: bool) -> Literal {
    let a = atoms[rng.random_range(0..atoms.len())].clone();
    if negation && rng.random_bool(0.5) {
        a.neg()
    } else {
        a.pos()
    }
}

fn body<R: Rng>(rng: &mut R, atoms: &[Atom], shape: &ProgramShape) -> Vec<ExtLiteral> {
    let len = rng.random_range(0..=shape.max_body);
    (0..len)
        .map(|_| {
            let l = literal(rng, atoms, shape.classical_negation);
            if shape.naf_bodies && rng.random_bool(0.4) {
                l.naf()
            } else {
                l.ext()
            }
        })
        .collect()
}

/// A random program labelled `r1..rn`.
pub fn random_program<R: Rng>(rng: &mut R, shape: &ProgramShape) -> Program {
    let atoms = atom_pool(shape.atoms.max(1));
    let rules = (0..shape.rules)
        .map(|k| {
            let label = format!("r{}", k + 1);
            let b = body(rng, &atoms, shape);
            if rng.random_bool(shape.constraint_rate) {
                let b = if b.is_empty() { vec![literal(rng, &atoms, shape.classical_negation).ext()] } else { b };
                return Rule::constraint(label, b);
            }
            let h = literal(rng, &atoms, shape.classical_negation);
            let h = if shape.naf_heads && rng.random_bool(0.2) { h.naf() } else { h.ext() };
            Rule::single(label, h, b)
        })
        .collect();
    Program::new(shape.kind(), rules).expect("generated rules fit the shape")
}

/// A random strict partial order: edges follow a random permutation, so the
/// result is acyclic by construction.
pub fn random_order<R: Rng>(rng: &mut R, n: usize, density: f64) -> StrictOrder {
    let mut perm: Vec<RuleId> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(density) {
                edges.push((perm[i], perm[j]));
            }
        }
    }
    StrictOrder::from_edges(n, edges).expect("edges follow a permutation")
}

pub fn random_ordered_program<R: Rng>(rng: &mut R, shape: &ProgramShape, density: f64) -> OrderedProgram {
    let p = random_program(rng, shape);
    let o = random_order(rng, p.len(), density);
    OrderedProgram::new(p, o).expect("order matches program")
}

/// A random subset of `0..n`.
pub fn random_subset<R: Rng>(rng: &mut R, n: usize) -> crate::program::RuleSet {
    crate::program::RuleSet::from_ids(n, (0..n).filter(|_| rng.random_bool(0.5)))
}

/// A disjunctive program over atoms only; `naf` allows `not a` in bodies.
pub fn random_disjunctive<R: Rng>(rng: &mut R, atoms: usize, rules: usize, naf: bool) -> Program {
    let pool = atom_pool(atoms.max(1));
    let shape = ProgramShape {
        naf_bodies: naf,
        ..ProgramShape::normal(atoms, rules)
    };
    let rules = (0..rules)
        .map(|k| {
            let width = rng.random_range(1..=2.min(pool.len()));
            let heads: Vec<Literal> = pool.choose_multiple(rng, width).map(Atom::pos).collect();
            Rule::disjunctive(format!("r{}", k + 1), heads, body(rng, &pool, &shape))
        })
        .collect();
    Program::new(ProgramKind::Disjunctive, rules).expect("disjunctive shape")
}

/// An LPOD with ordered heads of up to three options over atoms only.
pub fn random_lpod<R: Rng>(rng: &mut R, atoms: usize, rules: usize) -> Program {
    let pool = atom_pool(atoms.max(1));
    let shape = ProgramShape {
        max_body: 1,
        ..ProgramShape::normal(atoms, rules)
    };
    let rules = (0..rules)
        .map(|k| {
            let label = format!("r{}", k + 1);
            let b = body(rng, &pool, &shape);
            if rng.random_bool(0.5) {
                let width = rng.random_range(2..=3.min(pool.len()).max(2));
                let opts: Vec<Literal> = pool.choose_multiple(rng, width.min(pool.len())).map(Atom::pos).collect();
                if opts.len() >= 2 {
                    return Rule::new(label, Head::Ordered(opts), b);
                }
            }
            Rule::single(label, literal(rng, &pool, false), b)
        })
        .collect();
    Program::new(ProgramKind::Lpod, rules).expect("LPOD shape")
}

/// A total database over `atoms` atoms and up to `clauses` satisfiable
/// clauses of width one to three.
pub fn random_repair_instance<R: Rng>(rng: &mut R, atoms: usize, clauses: usize) -> (Database, Vec<ConstraintClause>) {
    let pool = atom_pool(atoms.max(1));
    let d = Database::new(pool.iter().map(|a| if rng.random_bool(0.5) { a.pos() } else { a.neg() }))
        .expect("one literal per atom");
    // Clauses are drawn so that a hidden assignment satisfies all of them.
    let hidden: Vec<Literal> = pool.iter().map(|a| if rng.random_bool(0.5) { a.pos() } else { a.neg() }).collect();
    let cs = (0..clauses)
        .map(|_| {
            let width = rng.random_range(1..=3.min(pool.len()));
            let mut lits: Vec<Literal> = pool.choose_multiple(rng, width).map(|a| literal_of(rng, a)).collect();
            let anchor = rng.random_range(0..lits.len());
            let k = pool.iter().position(|a| a == lits[anchor].atom()).expect("pool atom");
            lits[anchor] = hidden[k].clone();
            ConstraintClause::new(lits).expect("nonempty")
        })
        .collect();
    (d, cs)
}

fn literal_of<R: Rng>(rng: &mut R, a: &Atom) -> Literal {
    if rng.random_bool(0.5) {
        a.pos()
    } else {
        a.neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn seeds_reproduce() {
        let shape = ProgramShape::extended(4, 6);
        let a = random_ordered_program(&mut ChaCha8Rng::seed_from_u64(7), &shape, 0.3);
        let b = random_ordered_program(&mut ChaCha8Rng::seed_from_u64(7), &shape, 0.3);
        assert_eq!(a, b);
        assert_eq!(a.len(), 6);
    }

    #[test]
    fn shapes_are_respected() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let p = random_program(&mut rng, &ProgramShape::normal(3, 5));
            assert!(p.rules().iter().all(|r| r.single_head().is_some_and(|h| h.underlying().is_positive())));
            let d = random_disjunctive(&mut rng, 3, 4, false);
            assert!(!d.has_naf());
            let l = random_lpod(&mut rng, 3, 4);
            assert_eq!(l.kind(), ProgramKind::Lpod);
            let (db, cs) = random_repair_instance(&mut rng, 3, 4);
            assert_eq!(db.base().len(), 3);
            assert!(crate::transforms::db_repair_program(&db, &cs).is_ok());
        }
    }
}
