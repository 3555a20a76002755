//! Ordered disjunction as an extended ordered program.

use crate::atom::ExtLiteral;
use crate::error::Result;
use crate::order::OrderedProgram;
use crate::program::{Program, ProgramKind};
use crate::rule::{Head, Rule};

use super::{require, Fresh, Translation};

/// `L(P)`: layers `P_r < P_1 < ... < P_n < P_d`.
///
/// `P_r` makes every rule of `P` hold, `P_k` prefers the `k`-th option of
/// each ordered disjunction, and `P_d` lets an option be given up for a
/// later one. A fresh `_nap_k` atom marks that the body of the `k`-th rule
/// is false, so blocking a rule is not rewarded. Preferred LPOD answer sets
/// are the projections of the proper preferred answer sets of the result.
///
/// A rule with a single option is treated as the plain rule it denotes.
pub fn lpod_translate(p: &Program) -> Result<Translation> {
    require(
        p,
        |r| match r.head() {
            Head::Empty | Head::Ordered(_) => true,
            Head::Single(e) => !e.is_naf(),
            Head::Disjunction(_) => false,
        },
        "an LPOD has plain or ordered heads",
    )?;
    let base = p.herbrand_base();
    let fresh = Fresh::new(&base);
    let n = p
        .rules()
        .iter()
        .filter_map(|r| match r.head() {
            Head::Ordered(os) => Some(os.len()),
            _ => None,
        })
        .max()
        .unwrap_or(0);
    let mut regular = Vec::new();
    let mut ranks: Vec<Vec<Rule>> = vec![Vec::new(); n];
    let mut defeat = Vec::new();
    for (k, r) in p.rules().iter().enumerate() {
        let label = r.label();
        let options = match r.head() {
            Head::Ordered(os) if os.len() >= 2 => os,
            Head::Ordered(os) => {
                regular.push(Rule::single(label, os[0].clone(), r.body().iter().cloned()));
                continue;
            }
            _ => {
                regular.push(r.clone());
                continue;
            }
        };
        let nap = fresh.atom(format!("_nap_{}", k + 1))?;
        for (i, a) in options.iter().enumerate() {
            let others = options.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, b)| b.naf());
            regular.push(Rule::single(format!("{label}:o{}", i + 1), a.clone(), r.body().iter().cloned().chain(others)));
        }
        for (j, e) in r.body().iter().enumerate() {
            let flipped = if e.is_naf() { e.underlying().ext() } else { e.underlying().naf() };
            regular.push(Rule::single(format!("{label}:nap{}", j + 1), nap.pos(), [flipped]));
        }
        defeat.push(Rule::fact(format!("{label}:d0"), nap.pos().naf()));
        for (i, a) in options.iter().enumerate() {
            let before = options[..i].iter().map(|b| b.naf());
            let body: Vec<ExtLiteral> = r.body().iter().cloned().chain(before).collect();
            ranks[i].push(Rule::single(format!("{label}:k{}", i + 1), a.clone(), body.clone()));
            defeat.push(Rule::single(format!("{label}:d{}", i + 1), a.naf(), body));
        }
    }
    let mut layers = vec![regular];
    layers.extend(ranks);
    layers.push(defeat);
    let target = OrderedProgram::layered(ProgramKind::Extended, layers)?;
    Ok(Translation { target, source_base: base })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interp::Interpretation;
    use crate::oracle;
    use crate::prefsolve::{preferred_answer_sets, SolveOptions};

    fn translated_preferred(text: &str) -> Vec<String> {
        let p = Program::parse(ProgramKind::Lpod, text).unwrap();
        let t = lpod_translate(&p).unwrap();
        let opts = SolveOptions { proper: true, ..SolveOptions::default() };
        let mut got: Vec<Interpretation> =
            preferred_answer_sets(&t.target, opts).iter().map(|r| t.project(&r.interpretation)).collect();
        got.sort();
        got.dedup();
        let want = oracle::lpod_preferred(&p).unwrap();
        assert_eq!(got, want);
        got.iter().map(|i| i.to_string()).collect()
    }

    #[test]
    fn example_with_three_options() {
        let got = translated_preferred("b * c * d.\nc * a * d.\n-c :- b.");
        assert_eq!(got, ["{ a, b, -c }", "{ c }"]);
    }

    #[test]
    fn blocked_rule_is_not_rewarded() {
        let got = translated_preferred("c * d :- a.\na :- not b.\nb :- not a.");
        assert_eq!(got, ["{ a, c }", "{ b }"]);
    }

    #[test]
    fn layer_shape() {
        let p = Program::parse(ProgramKind::Lpod, "c * d :- a.\na :- not b.\nb :- not a.").unwrap();
        let t = lpod_translate(&p).unwrap();
        // P_r: 2 options, 1 nap rule, 2 plain rules; P_1, P_2: one each; P_d: 3.
        assert_eq!(t.target.len(), 5 + 2 + 3);
        assert_eq!(t.fresh_atoms().iter().map(|a| a.name().to_string()).collect::<Vec<_>>(), ["_nap_1"]);
        let first = t.target.program().rule_by_label("r1:k1").unwrap();
        let last = t.target.program().rule_by_label("r1:d2").unwrap();
        assert_eq!(first.text(), "c :- a.");
        assert_eq!(last.text(), "not d :- a, not c.");
    }
}
