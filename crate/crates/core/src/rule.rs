//! Labelled ground rules.

use std::collections::BTreeSet;
use std::fmt;

use crate::atom::{Atom, ExtLiteral, Literal};

/// The head of a rule.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Head {
    /// A constraint.
    Empty,
    /// One extended literal; `not l` heads are only legal in extended programs.
    Single(ExtLiteral),
    /// `a | b | ...`, kept sorted and duplicate free.
    Disjunction(Vec<Literal>),
    /// `a * b * ...`: options in decreasing order of preference.
    Ordered(Vec<Literal>),
}

impl Head {
    /// Every extended literal occurring in the head.
    pub fn literals(&self) -> Vec<ExtLiteral> {
        match self {
            Head::Empty => Vec::new(),
            Head::Single(e) => vec![e.clone()],
            Head::Disjunction(ls) | Head::Ordered(ls) => ls.iter().map(Literal::ext).collect(),
        }
    }
}

/// A ground rule `head :- body` with a label that is unique in its program.
///
/// The body is stored as a sorted set. Two rules with the same content but
/// different labels are distinct rules, so a program behaves like a
/// multiset of clauses.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rule {
    label: String,
    head: Head,
    body: Vec<ExtLiteral>,
    cr: bool,
}

impl Rule {
    pub fn new(label: impl Into<String>, head: Head, body: impl IntoIterator<Item = ExtLiteral>) -> Rule {
        let body: BTreeSet<ExtLiteral> = body.into_iter().collect();
        let head = match head {
            Head::Disjunction(ls) => {
                let set: BTreeSet<Literal> = ls.into_iter().collect();
                Head::Disjunction(set.into_iter().collect())
            }
            other => other,
        };
        Rule {
            label: label.into(),
            head,
            body: body.into_iter().collect(),
            cr: false,
        }
    }

    /// `head :- body` with a single ordinary or naf head.
    pub fn single(label: impl Into<String>, head: impl Into<ExtLiteral>, body: impl IntoIterator<Item = ExtLiteral>) -> Rule {
        Rule::new(label, Head::Single(head.into()), body)
    }

    pub fn fact(label: impl Into<String>, head: impl Into<ExtLiteral>) -> Rule {
        Rule::single(label, head, [])
    }

    pub fn constraint(label: impl Into<String>, body: impl IntoIterator<Item = ExtLiteral>) -> Rule {
        Rule::new(label, Head::Empty, body)
    }

    pub fn disjunctive(label: impl Into<String>, head: Vec<Literal>, body: impl IntoIterator<Item = ExtLiteral>) -> Rule {
        Rule::new(label, Head::Disjunction(head), body)
    }

    pub fn ordered(label: impl Into<String>, options: Vec<Literal>, body: impl IntoIterator<Item = ExtLiteral>) -> Rule {
        Rule::new(label, Head::Ordered(options), body)
    }

    /// A consistency-restoring rule `head +- body`.
    pub fn cr(label: impl Into<String>, head: impl Into<ExtLiteral>, body: impl IntoIterator<Item = ExtLiteral>) -> Rule {
        let mut r = Rule::single(label, head, body);
        r.cr = true;
        r
    }

    /// Parses rule text such as `a :- -b, not c` (the final `.` is optional).
    pub fn parse(label: impl Into<String>, text: &str) -> Result<Rule, crate::syntax::SyntaxError> {
        crate::syntax::parse_rule(label.into(), text)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn head(&self) -> &Head {
        &self.head
    }

    pub fn body(&self) -> &[ExtLiteral] {
        &self.body
    }

    pub fn is_cr(&self) -> bool {
        self.cr
    }

    pub fn is_constraint(&self) -> bool {
        matches!(self.head, Head::Empty)
    }

    /// The single head literal of a plain rule, if any.
    pub fn single_head(&self) -> Option<&ExtLiteral> {
        match &self.head {
            Head::Single(e) => Some(e),
            _ => None,
        }
    }

    pub fn has_naf(&self) -> bool {
        self.body.iter().any(ExtLiteral::is_naf)
            || matches!(&self.head, Head::Single(e) if e.is_naf())
    }

    /// Ordinary literals of the body (`β⁺`).
    pub fn pos_body(&self) -> impl Iterator<Item = &Literal> {
        self.body.iter().filter(|e| !e.is_naf()).map(ExtLiteral::underlying)
    }

    /// Literals under `not` in the body (`β⁻`).
    pub fn naf_body(&self) -> impl Iterator<Item = &Literal> {
        self.body.iter().filter(|e| e.is_naf()).map(ExtLiteral::underlying)
    }

    pub fn atoms(&self) -> impl Iterator<Item = &Atom> {
        let head: Box<dyn Iterator<Item = &Literal>> = match &self.head {
            Head::Empty => Box::new(std::iter::empty()),
            Head::Single(e) => Box::new(std::iter::once(e.underlying())),
            Head::Disjunction(ls) | Head::Ordered(ls) => Box::new(ls.iter()),
        };
        head.chain(self.body.iter().map(ExtLiteral::underlying)).map(Literal::atom)
    }

    pub fn with_label(&self, label: impl Into<String>) -> Rule {
        Rule {
            label: label.into(),
            ..self.clone()
        }
    }

    /// Same rule without the consistency-restoring marker.
    pub fn as_regular(&self) -> Rule {
        Rule {
            cr: false,
            ..self.clone()
        }
    }

    /// Rule text without label, in the concrete syntax accepted by the parser.
    pub fn text(&self) -> String {
        let join = |sep: &str, ls: &[Literal]| {
            ls.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(sep)
        };
        let head = match &self.head {
            Head::Empty => String::new(),
            Head::Single(e) => e.to_string(),
            Head::Disjunction(ls) => join(" | ", ls),
            Head::Ordered(ls) => join(" * ", ls),
        };
        let body = self.body.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ");
        let arrow = if self.cr { "+-" } else { ":-" };
        match (head.is_empty(), body.is_empty()) {
            (false, true) if !self.cr => format!("{head}."),
            (false, true) => format!("{head} {arrow}."),
            (true, true) => format!("{arrow}."),
            (true, false) => format!("{arrow} {body}."),
            (false, false) => format!("{head} {arrow} {body}."),
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.label, self.text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lit(s: &str) -> Literal {
        Literal::parse(s).unwrap()
    }

    #[test]
    fn body_is_a_set() {
        let r = Rule::single("r", lit("a"), [lit("b").ext(), lit("b").ext(), lit("-c").naf()]);
        assert_eq!(r.body().len(), 2);
        assert!(r.has_naf());
        assert_eq!(r.text(), "a :- b, not -c.");
    }

    #[test]
    fn texts() {
        assert_eq!(Rule::fact("f", lit("-a")).text(), "-a.");
        assert_eq!(Rule::constraint("c", [lit("a").ext()]).text(), ":- a.");
        assert_eq!(Rule::constraint("c", []).text(), ":-.");
        assert_eq!(Rule::ordered("o", vec![lit("b"), lit("a")], []).text(), "b * a.");
        assert_eq!(Rule::disjunctive("d", vec![lit("b"), lit("a")], []).text(), "a | b.");
        assert_eq!(Rule::cr("c", lit("p"), [lit("t").naf()]).text(), "p +- not t.");
        assert_eq!(Rule::cr("c", lit("p"), []).text(), "p +-.");
        assert_eq!(Rule::fact("n", lit("a").naf()).text(), "not a.");
    }

    #[test]
    fn atoms_cover_head_and_body() {
        let r = Rule::disjunctive("d", vec![lit("x"), lit("-y")], [lit("z").naf()]);
        let names: Vec<&str> = r.atoms().map(Atom::name).collect();
        assert_eq!(names, ["x", "y", "z"]);
    }
}
