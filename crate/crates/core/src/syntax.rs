//! The module/order text format.
//!
//! ```text
//! document  := ('#dialect' name '.'?)? item*
//! item      := name '{' rule* '}' | chain | rule
//! chain     := ref ('<' ref)+          ref := name | name '.' number
//! rule      := head '.' | head ':-' body? '.' | head '+-' body? '.' | ':-' body? '.'
//! head      := 'not'? lit | lit ('|' lit)+ | lit ('*' lit)+
//! body      := elit (',' elit)*        elit := 'not'? lit      lit := '-'? name
//! ```
//!
//! `%` starts a comment that runs to the end of the line. Rules inside
//! module `M` are labelled `M.1`, `M.2`, ...; rules outside any module are
//! labelled `r1`, `r2`, ... A chain `A < B` puts every rule of `A` below
//! (more preferred than) every rule of `B`; `A.2 < B` names a single rule.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::atom::{Atom, ExtLiteral, Literal};
use crate::rule::{Head, Rule};

/// Atom names: `[A-Za-z_][A-Za-z0-9_]*`, excluding the keyword `not`.
pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && s != "not"
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: expected {expected}, found {found}")]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub expected: String,
    pub found: String,
}

/// Which front end a document is meant for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Dialect {
    #[default]
    Olp,
    Lpod,
    Cr,
    Repair,
}

impl Dialect {
    pub fn name(self) -> &'static str {
        match self {
            Dialect::Olp => "olp",
            Dialect::Lpod => "lpod",
            Dialect::Cr => "cr",
            Dialect::Repair => "repair",
        }
    }

    pub fn from_name(s: &str) -> Option<Dialect> {
        match s {
            "olp" => Some(Dialect::Olp),
            "lpod" => Some(Dialect::Lpod),
            "cr" => Some(Dialect::Cr),
            "repair" => Some(Dialect::Repair),
            _ => None,
        }
    }
}

impl fmt::Display for Dialect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    pub name: String,
    pub rules: Vec<Rule>,
}

/// One side of an order assertion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderRef {
    Module(String),
    /// A single rule by module name and 1-based position.
    Rule(String, usize),
}

impl fmt::Display for OrderRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderRef::Module(m) => f.write_str(m),
            OrderRef::Rule(m, k) => write!(f, "{m}.{k}"),
        }
    }
}

/// A parsed document: named modules, rules outside modules, and order chains.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SourceDocument {
    pub dialect: Dialect,
    pub modules: Vec<Module>,
    pub top: Vec<Rule>,
    pub order_assertions: Vec<Vec<OrderRef>>,
}

impl SourceDocument {
    /// Every rule: module rules in declaration order, then top-level rules.
    pub fn rules(&self) -> impl Iterator<Item = &Rule> {
        self.modules.iter().flat_map(|m| m.rules.iter()).chain(self.top.iter())
    }

    pub fn module(&self, name: &str) -> Option<&Module> {
        self.modules.iter().find(|m| m.name == name)
    }

    /// Canonical text; `parse(&doc.print()) == Ok(doc)`.
    pub fn print(&self) -> String {
        let mut out = String::new();
        if self.dialect != Dialect::Olp {
            out.push_str(&format!("#dialect {}.\n", self.dialect));
        }
        for m in &self.modules {
            out.push_str(&format!("{} {{\n", m.name));
            for r in &m.rules {
                out.push_str(&format!("    {}\n", r.text()));
            }
            out.push_str("}\n");
        }
        for r in &self.top {
            out.push_str(&format!("{}\n", r.text()));
        }
        for chain in &self.order_assertions {
            let refs: Vec<String> = chain.iter().map(OrderRef::to_string).collect();
            out.push_str(&format!("{}\n", refs.join(" < ")));
        }
        out
    }
}

impl fmt::Display for SourceDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.print())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(usize),
    Dot,
    Comma,
    If,
    CrIf,
    Minus,
    Lt,
    Pipe,
    Star,
    LBrace,
    RBrace,
    Hash,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Number(n) => write!(f, "`{n}`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::If => f.write_str("`:-`"),
            Tok::CrIf => f.write_str("`+-`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Lt => f.write_str("`<`"),
            Tok::Pipe => f.write_str("`|`"),
            Tok::Star => f.write_str("`*`"),
            Tok::LBrace => f.write_str("`{`"),
            Tok::RBrace => f.write_str("`}`"),
            Tok::Hash => f.write_str("`#`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, SyntaxError> {
    let mut toks = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let start = (line, col);
        let mut push = |tok: Tok, len: usize, i: &mut usize, col: &mut usize| {
            toks.push(Spanned {
                tok,
                line: start.0,
                column: start.1,
            });
            *i += len;
            *col += len;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                i += 1;
                col += 1;
            }
            '%' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            '.' => push(Tok::Dot, 1, &mut i, &mut col),
            ',' => push(Tok::Comma, 1, &mut i, &mut col),
            '<' => push(Tok::Lt, 1, &mut i, &mut col),
            '|' => push(Tok::Pipe, 1, &mut i, &mut col),
            '*' => push(Tok::Star, 1, &mut i, &mut col),
            '{' => push(Tok::LBrace, 1, &mut i, &mut col),
            '}' => push(Tok::RBrace, 1, &mut i, &mut col),
            '#' => push(Tok::Hash, 1, &mut i, &mut col),
            '-' => push(Tok::Minus, 1, &mut i, &mut col),
            ':' if chars.get(i + 1) == Some(&'-') => push(Tok::If, 2, &mut i, &mut col),
            '+' if chars.get(i + 1) == Some(&'-') => push(Tok::CrIf, 2, &mut i, &mut col),
            c if c.is_ascii_digit() => {
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let s: String = chars[i..j].iter().collect();
                let n = s.parse().map_err(|_| SyntaxError {
                    line,
                    column: col,
                    expected: "a rule number".into(),
                    found: format!("`{s}`"),
                })?;
                push(Tok::Number(n), j - i, &mut i, &mut col);
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut j = i;
                while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                let s: String = chars[i..j].iter().collect();
                push(Tok::Ident(s), j - i, &mut i, &mut col);
            }
            other => {
                return Err(SyntaxError {
                    line,
                    column: col,
                    expected: "a token".into(),
                    found: format!("`{other}`"),
                })
            }
        }
    }
    toks.push(Spanned {
        tok: Tok::Eof,
        line,
        column: col,
    });
    Ok(toks)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        let i = (self.pos + k).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> SyntaxError {
        let s = &self.toks[self.pos];
        SyntaxError {
            line: s.line,
            column: s.column,
            expected: expected.into(),
            found: s.tok.to_string(),
        }
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<(), SyntaxError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn name(&mut self, expected: &str) -> Result<String, SyntaxError> {
        match self.peek() {
            Tok::Ident(s) if s != "not" => {
                let s = s.clone();
                self.bump();
                Ok(s)
            }
            _ => Err(self.error(expected)),
        }
    }

    fn literal(&mut self) -> Result<Literal, SyntaxError> {
        let positive = if *self.peek() == Tok::Minus {
            self.bump();
            false
        } else {
            true
        };
        let name = self.name("an atom")?;
        Ok(Literal::new(Atom::new(&name), positive))
    }

    fn is_not(&self) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == "not")
    }

    fn ext_literal(&mut self) -> Result<ExtLiteral, SyntaxError> {
        if self.is_not() {
            self.bump();
            Ok(ExtLiteral::naf(self.literal()?))
        } else {
            Ok(ExtLiteral::plain(self.literal()?))
        }
    }

    /// A rule with a head needs a body after `:-`; `+-` and a bare `:-`
    /// may be followed directly by the closing dot.
    fn body(&mut self, may_be_empty: bool) -> Result<Vec<ExtLiteral>, SyntaxError> {
        let mut body = Vec::new();
        if may_be_empty && *self.peek() == Tok::Dot {
            return Ok(body);
        }
        body.push(self.ext_literal()?);
        while *self.peek() == Tok::Comma {
            self.bump();
            body.push(self.ext_literal()?);
        }
        Ok(body)
    }

    fn rule(&mut self, label: String) -> Result<Rule, SyntaxError> {
        if *self.peek() == Tok::If {
            self.bump();
            let body = self.body(true)?;
            self.expect(Tok::Dot, "`,` or `.`")?;
            return Ok(Rule::constraint(label, body));
        }
        let head = if self.is_not() {
            self.bump();
            Head::Single(ExtLiteral::naf(self.literal()?))
        } else {
            let first = self.literal()?;
            match self.peek() {
                Tok::Pipe | Tok::Star => {
                    let sep = self.peek().clone();
                    let mut lits = vec![first];
                    while *self.peek() == sep {
                        self.bump();
                        lits.push(self.literal()?);
                    }
                    if sep == Tok::Pipe {
                        Head::Disjunction(lits)
                    } else {
                        Head::Ordered(lits)
                    }
                }
                _ => Head::Single(ExtLiteral::plain(first)),
            }
        };
        match self.bump() {
            Tok::Dot => Ok(Rule::new(label, head, [])),
            Tok::If => {
                let body = self.body(false)?;
                self.expect(Tok::Dot, "`,` or `.`")?;
                Ok(Rule::new(label, head, body))
            }
            Tok::CrIf => {
                let Head::Single(h) = head else {
                    self.pos -= 1;
                    return Err(self.error("`:-` after a disjunctive head"));
                };
                let body = self.body(true)?;
                self.expect(Tok::Dot, "`,` or `.`")?;
                Ok(Rule::cr(label, h, body))
            }
            _ => {
                self.pos -= 1;
                Err(self.error("`.`, `:-` or `+-`"))
            }
        }
    }

    fn order_ref(&mut self) -> Result<(OrderRef, usize), SyntaxError> {
        let at = self.pos;
        let name = self.name("a module name")?;
        if *self.peek() == Tok::Dot {
            if let Tok::Number(k) = *self.peek_at(1) {
                self.bump();
                self.bump();
                return Ok((OrderRef::Rule(name, k), at));
            }
        }
        Ok((OrderRef::Module(name), at))
    }

    fn document(&mut self) -> Result<SourceDocument, SyntaxError> {
        let mut doc = SourceDocument::default();
        if *self.peek() == Tok::Hash {
            self.bump();
            match self.peek() {
                Tok::Ident(s) if s == "dialect" => {
                    self.bump();
                }
                _ => return Err(self.error("`dialect`")),
            }
            let at = self.pos;
            let name = self.name("a dialect name")?;
            doc.dialect = Dialect::from_name(&name).ok_or_else(|| {
                self.pos = at;
                self.error("one of `olp`, `lpod`, `cr`, `repair`")
            })?;
            if *self.peek() == Tok::Dot {
                self.bump();
            }
        }
        let mut declared = HashSet::new();
        let mut pending: Vec<(String, usize, usize)> = Vec::new();
        loop {
            match (self.peek().clone(), self.peek_at(1).clone(), self.peek_at(2).clone()) {
                (Tok::Eof, _, _) => break,
                (Tok::Ident(name), Tok::LBrace, _) if name != "not" => {
                    if !declared.insert(name.clone()) {
                        return Err(self.error("a module name not declared before"));
                    }
                    self.bump();
                    self.bump();
                    let mut rules = Vec::new();
                    while *self.peek() != Tok::RBrace {
                        if *self.peek() == Tok::Eof {
                            return Err(self.error("`}`"));
                        }
                        let label = format!("{}.{}", name, rules.len() + 1);
                        rules.push(self.rule(label)?);
                    }
                    self.bump();
                    doc.modules.push(Module { name, rules });
                }
                (Tok::Ident(name), Tok::Lt, _) | (Tok::Ident(name), Tok::Dot, Tok::Number(_))
                    if name != "not" =>
                {
                    let mut chain = Vec::new();
                    let (first, at) = self.order_ref()?;
                    chain.push((first, at));
                    if *self.peek() != Tok::Lt {
                        return Err(self.error("`<`"));
                    }
                    while *self.peek() == Tok::Lt {
                        self.bump();
                        chain.push(self.order_ref()?);
                    }
                    for (r, at) in &chain {
                        let (m, k) = match r {
                            OrderRef::Module(m) => (m.clone(), 0),
                            OrderRef::Rule(m, k) => (m.clone(), *k),
                        };
                        pending.push((m, k, *at));
                    }
                    doc.order_assertions.push(chain.into_iter().map(|(r, _)| r).collect());
                }
                _ => {
                    let label = format!("r{}", doc.top.len() + 1);
                    let rule = self.rule(label)?;
                    doc.top.push(rule);
                }
            }
        }
        for (m, k, at) in pending {
            let ok = match doc.module(&m) {
                Some(_) if k == 0 => true,
                Some(module) => k <= module.rules.len(),
                None => false,
            };
            if !ok {
                self.pos = at;
                return Err(self.error(if k == 0 {
                    "a declared module name"
                } else {
                    "a reference to an existing rule"
                }));
            }
        }
        Ok(doc)
    }
}

/// Parses a whole document.
pub fn parse(text: &str) -> Result<SourceDocument, SyntaxError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    p.document()
}

/// Parses one rule; the terminating `.` may be omitted.
pub fn parse_rule(label: String, text: &str) -> Result<Rule, SyntaxError> {
    let text = text.trim();
    let owned;
    let text = if text.ends_with('.') {
        text
    } else {
        owned = format!("{text}.");
        &owned
    };
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let rule = p.rule(label)?;
    if *p.peek() != Tok::Eof {
        return Err(p.error("end of rule"));
    }
    Ok(rule)
}

/// Parses a sequence of rules outside any module, labelled `r1`, `r2`, ...
pub fn parse_rule_lines(text: &str) -> Result<Vec<Rule>, SyntaxError> {
    let doc = parse(text)?;
    Ok(doc.rules().cloned().collect())
}
