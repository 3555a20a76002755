//! Atoms, classical literals and extended (naf) literals.

use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

fn pool() -> &'static Mutex<HashSet<Arc<str>>> {
    static POOL: OnceLock<Mutex<HashSet<Arc<str>>>> = OnceLock::new();
    POOL.get_or_init(|| Mutex::new(HashSet::new()))
}

/// An interned propositional atom.
///
/// Equal names share one allocation, so clones are a reference-count bump and
/// equality usually resolves on the pointer. Ordering is lexicographic on the
/// name, which makes every enumeration over atoms reproducible.
#[derive(Clone)]
pub struct Atom(Arc<str>);

impl Atom {
    /// Interns `name`.
    ///
    /// Panics on an empty name; callers reading untrusted input should
    /// validate first (the parser does).
    pub fn new(name: &str) -> Atom {
        assert!(!name.is_empty(), "atom names must be nonempty");
        let mut pool = pool().lock().expect("atom pool poisoned");
        if let Some(existing) = pool.get(name) {
            return Atom(existing.clone());
        }
        let interned: Arc<str> = Arc::from(name);
        pool.insert(interned.clone());
        Atom(interned)
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    pub fn pos(&self) -> Literal {
        Literal::new(self.clone(), true)
    }

    pub fn neg(&self) -> Literal {
        Literal::new(self.clone(), false)
    }
}

impl PartialEq for Atom {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Atom {}

impl std::hash::Hash for Atom {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl PartialOrd for Atom {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Atom {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            std::cmp::Ordering::Equal
        } else {
            self.0.cmp(&other.0)
        }
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Atom {
    fn from(name: &str) -> Self {
        Atom::new(name)
    }
}

/// A classical literal: `a` or `-a`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    atom: Atom,
    positive: bool,
}

impl Literal {
    pub fn new(atom: Atom, positive: bool) -> Literal {
        Literal { atom, positive }
    }

    pub fn atom(&self) -> &Atom {
        &self.atom
    }

    pub fn is_positive(&self) -> bool {
        self.positive
    }

    /// Classical complement; `l.negate().negate() == l`.
    pub fn negate(&self) -> Literal {
        Literal::new(self.atom.clone(), !self.positive)
    }

    pub fn naf(&self) -> ExtLiteral {
        ExtLiteral::naf(self.clone())
    }

    pub fn ext(&self) -> ExtLiteral {
        ExtLiteral::plain(self.clone())
    }

    /// Parses `a` or `-a`.
    pub fn parse(text: &str) -> Option<Literal> {
        let text = text.trim();
        let (positive, name) = match text.strip_prefix('-') {
            Some(rest) => (false, rest.trim_start()),
            None => (true, text),
        };
        if crate::syntax::is_identifier(name) {
            Some(Literal::new(Atom::new(name), positive))
        } else {
            None
        }
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "{}", self.atom)
        } else {
            write!(f, "-{}", self.atom)
        }
    }
}

/// A literal, possibly under one layer of negation as failure.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtLiteral {
    naf: bool,
    lit: Literal,
}

impl ExtLiteral {
    pub fn plain(lit: Literal) -> ExtLiteral {
        ExtLiteral { naf: false, lit }
    }

    pub fn naf(lit: Literal) -> ExtLiteral {
        ExtLiteral { naf: true, lit }
    }

    pub fn is_naf(&self) -> bool {
        self.naf
    }

    /// The ordinary literal underneath (`|not l| = l`).
    pub fn underlying(&self) -> &Literal {
        &self.lit
    }

    /// Whether `{self, other}` is an inconsistent pair of extended literals:
    /// `l` against `-l`, or `l` against `not l`.
    pub fn conflicts_with(&self, other: &ExtLiteral) -> bool {
        match (self.naf, other.naf) {
            (false, false) => self.lit == other.lit.negate(),
            (false, true) | (true, false) => self.lit == other.lit,
            (true, true) => false,
        }
    }

    /// Parses `a`, `-a`, `not a` or `not -a`.
    pub fn parse(text: &str) -> Option<ExtLiteral> {
        let text = text.trim();
        match text.strip_prefix("not") {
            Some(rest) if rest.starts_with(char::is_whitespace) => {
                Literal::parse(rest).map(ExtLiteral::naf)
            }
            _ => Literal::parse(text).map(ExtLiteral::plain),
        }
    }
}

impl From<Literal> for ExtLiteral {
    fn from(lit: Literal) -> Self {
        ExtLiteral::plain(lit)
    }
}

impl fmt::Debug for ExtLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ExtLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.naf {
            write!(f, "not {}", self.lit)
        } else {
            write!(f, "{}", self.lit)
        }
    }
}
