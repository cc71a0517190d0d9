//! Algebra expressions such as `st(3,R) x derived(st(4,R)) x abelian(2)`.
//!
//! ```text
//! expr := term ('x' term)*
//! term := atom | 'derived(' expr ')'
//! atom := name '(' int (',' field)? ')'
//! ```
//!
//! Products associate to the left. Whitespace is ignored between tokens.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    R,
    C,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::R => "R",
            Field::C => "C",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AtomName {
    St,
    Nt,
    Sl,
    Abelian,
    Strn,
}

impl AtomName {
    pub const ALL: [AtomName; 5] = [AtomName::St, AtomName::Nt, AtomName::Sl, AtomName::Abelian, AtomName::Strn];

    pub fn as_str(self) -> &'static str {
        match self {
            AtomName::St => "st",
            AtomName::Nt => "nt",
            AtomName::Sl => "sl",
            AtomName::Abelian => "abelian",
            AtomName::Strn => "strn",
        }
    }

    fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|a| a.as_str() == s)
    }

    /// Whether the atom takes a field argument.
    pub fn takes_field(self) -> bool {
        matches!(self, AtomName::St | AtomName::Nt | AtomName::Sl)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraExpr {
    Atom { name: AtomName, size: u32, field: Option<Field> },
    Product(Box<AlgebraExpr>, Box<AlgebraExpr>),
    Derived(Box<AlgebraExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: expected {}", expected.join(" or "))]
    SyntaxError { offset: usize, expected: Vec<String> },
    #[error("`{name}` at byte {offset} takes {expected} argument(s), found {found}")]
    ArityError { offset: usize, name: String, expected: usize, found: usize },
    #[error("unknown algebra `{name}` at byte {offset}")]
    UnknownName { offset: usize, name: String },
}

impl AlgebraExpr {
    pub fn atom(name: AtomName, size: u32, field: Option<Field>) -> Self {
        AlgebraExpr::Atom { name, size, field }
    }

    /// Direct product, kept left-nested as the parser builds it.
    pub fn product(a: Self, b: Self) -> Self {
        match b {
            AlgebraExpr::Product(l, r) => AlgebraExpr::product(AlgebraExpr::product(a, *l), *r),
            b => AlgebraExpr::Product(Box::new(a), Box::new(b)),
        }
    }

    pub fn derived(a: Self) -> Self {
        AlgebraExpr::Derived(Box::new(a))
    }

    /// Top-level factors of a (left-nested) product, in order.
    pub fn factors(&self) -> Vec<&AlgebraExpr> {
        match self {
            AlgebraExpr::Product(a, b) => {
                let mut v = a.factors();
                v.extend(b.factors());
                v
            }
            other => vec![other],
        }
    }
}

impl fmt::Display for AlgebraExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraExpr::Atom { name, size, field: Some(fl) } => write!(f, "{}({size},{fl})", name.as_str()),
            AlgebraExpr::Atom { name, size, field: None } => write!(f, "{}({size})", name.as_str()),
            AlgebraExpr::Product(a, b) => write!(f, "{a} x {b}"),
            AlgebraExpr::Derived(a) => write!(f, "derived({a})"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        Err(ParseError::SyntaxError { offset: self.pos, expected: expected.iter().map(|s| s.to_string()).collect() })
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(&[&format!("`{}`", c as char)])
        }
    }

    fn ident(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        (self.pos > start).then(|| (start, std::str::from_utf8(&self.src[start..self.pos]).unwrap()))
    }

    fn expr(&mut self) -> Result<AlgebraExpr, ParseError> {
        let mut acc = self.term()?;
        // no atom name starts with `x`, so it is always the product operator here
        while self.peek() == Some(b'x') {
            self.pos += 1;
            let rhs = self.term()?;
            acc = AlgebraExpr::product(acc, rhs);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<AlgebraExpr, ParseError> {
        let Some((start, name)) = self.ident() else {
            return self.fail(&["algebra name", "`derived(`"]);
        };
        if name == "derived" {
            self.expect(b'(')?;
            let inner = self.expr()?;
            self.expect(b')')?;
            return Ok(AlgebraExpr::derived(inner));
        }
        let Some(atom) = AtomName::from_name(name) else {
            return Err(ParseError::UnknownName { offset: start, name: name.to_string() });
        };
        self.expect(b'(')?;
        let size = self.integer()?;
        let mut args = 1;
        let mut field = None;
        if self.peek() == Some(b',') {
            self.pos += 1;
            field = Some(self.field()?);
            args += 1;
        }
        if self.peek() != Some(b')') {
            return self.fail(&["`,`", "`)`"]);
        }
        self.pos += 1;
        let expected = if atom.takes_field() { 2 } else { 1 };
        if args != expected {
            return Err(ParseError::ArityError { offset: start, name: name.to_string(), expected, found: args });
        }
        Ok(AlgebraExpr::atom(atom, size, field))
    }

    fn integer(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail(&["integer"]);
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().or_else(|_| {
            self.pos = start;
            self.fail(&["integer below 2^32"])
        })
    }

    fn field(&mut self) -> Result<Field, ParseError> {
        let field = match self.peek() {
            Some(b'R') => Field::R,
            Some(b'C') => Field::C,
            _ => return self.fail(&["`R`", "`C`"]),
        };
        self.pos += 1;
        Ok(field)
    }
}

pub fn parse_expression(text: &str) -> Result<AlgebraExpr, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.fail(&["`x`", "end of input"]);
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_of_atoms() {
        let e = parse_expression("st(3,R) x abelian(2)").unwrap();
        assert_eq!(
            e,
            AlgebraExpr::product(
                AlgebraExpr::atom(AtomName::St, 3, Some(Field::R)),
                AlgebraExpr::atom(AtomName::Abelian, 2, None)
            )
        );
    }

    #[test]
    fn derived_atom() {
        let e = parse_expression("derived(st(4,R))").unwrap();
        assert_eq!(e, AlgebraExpr::derived(AlgebraExpr::atom(AtomName::St, 4, Some(Field::R))));
    }

    #[test]
    fn missing_comma() {
        match parse_expression("st(3 R)") {
            Err(ParseError::SyntaxError { offset, expected }) => {
                assert_eq!(offset, 5);
                assert!(expected.contains(&"`,`".to_string()));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn arity_and_names() {
        assert!(matches!(parse_expression("st(3)"), Err(ParseError::ArityError { expected: 2, found: 1, .. })));
        assert!(matches!(parse_expression("abelian(3,R)"), Err(ParseError::ArityError { .. })));
        assert!(matches!(parse_expression("so(3,R)"), Err(ParseError::UnknownName { offset: 0, .. })));
        assert!(matches!(parse_expression("st(3,Q)"), Err(ParseError::SyntaxError { offset: 5, .. })));
        assert!(matches!(parse_expression("st(3,R) st(2,R)"), Err(ParseError::SyntaxError { offset: 8, .. })));
    }

    #[test]
    fn products_associate_left_and_print_flat() {
        let e = parse_expression(" nt(3,R)x nt(3,R) x  derived( sl(2,C) ) ").unwrap();
        assert_eq!(e.to_string(), "nt(3,R) x nt(3,R) x derived(sl(2,C))");
        assert!(matches!(&e, AlgebraExpr::Product(a, _) if matches!(**a, AlgebraExpr::Product(..))));
        assert_eq!(parse_expression(&e.to_string()).unwrap(), e);
        assert_eq!(e.factors().len(), 3);
    }
}
