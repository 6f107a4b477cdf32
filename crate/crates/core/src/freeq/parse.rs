//! Word grammar: `expr := term ('*' '-'? term)*`, left-associated, with
//! `term := name | '(' expr ')'`. A `-` after `*` selects `*⁻¹`.

use std::collections::HashMap;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FreeqParseError {
    #[error("unexpected {found} at position {pos}")]
    Unexpected { pos: usize, found: String },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("empty expression")]
    Empty,
}

/// Generator names. Unseen names are added on parse unless the alphabet is frozen.
#[derive(Clone, Debug, Default)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, u32>,
    frozen: bool,
}

impl Alphabet {
    pub fn from_names<S: AsRef<str>>(names: impl IntoIterator<Item = S>) -> Self {
        let mut a = Alphabet::default();
        for n in names {
            a.intern(n.as_ref());
        }
        a
    }

    /// Like `from_names`, but parsing rejects names outside the list.
    pub fn fixed<S: AsRef<str>>(names: impl IntoIterator<Item = S>) -> Self {
        let mut a = Alphabet::from_names(names);
        a.frozen = true;
        a
    }

    pub fn intern(&mut self, name: &str) -> u32 {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        let i = self.names.len() as u32;
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), i);
        i
    }

    pub fn lookup(&self, name: &str) -> Option<u32> {
        self.index.get(name).copied()
    }

    /// Name of generator `s`; letters `a, b, …` for generators never named.
    pub fn name(&self, s: u32) -> String {
        match self.names.get(s as usize) {
            Some(n) => n.clone(),
            None if s < 26 => ((b'a' + s as u8) as char).to_string(),
            None => format!("g{s}"),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

/// A parenthesised quandle expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuandleExpr {
    Gen(u32),
    /// `left *^{sign} right`
    Op(Box<QuandleExpr>, Box<QuandleExpr>, i8),
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    alphabet: &'a mut Alphabet,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn unexpected(&self) -> FreeqParseError {
        match self.chars.get(self.pos) {
            Some(&(p, c)) => FreeqParseError::Unexpected {
                pos: p,
                found: format!("{c:?}"),
            },
            None => FreeqParseError::Unexpected {
                pos: self.chars.last().map_or(0, |&(p, _)| p + 1),
                found: "end of input".into(),
            },
        }
    }

    fn term(&mut self) -> Result<QuandleExpr, FreeqParseError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.unexpected());
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_alphanumeric() || c == '_' => {
                let start = self.pos;
                while self
                    .chars
                    .get(self.pos)
                    .is_some_and(|(_, c)| c.is_alphanumeric() || *c == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
                let id = match self.alphabet.lookup(&name) {
                    Some(i) => i,
                    None if self.alphabet.frozen => return Err(FreeqParseError::UnknownGenerator(name)),
                    None => self.alphabet.intern(&name),
                };
                Ok(QuandleExpr::Gen(id))
            }
            _ => Err(self.unexpected()),
        }
    }

    fn expr(&mut self) -> Result<QuandleExpr, FreeqParseError> {
        let mut left = self.term()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let sign = if self.peek() == Some('-') {
                self.pos += 1;
                -1
            } else {
                1
            };
            let right = self.term()?;
            left = QuandleExpr::Op(Box::new(left), Box::new(right), sign);
        }
        Ok(left)
    }
}

pub fn parse_expr(s: &str, alphabet: &mut Alphabet) -> Result<QuandleExpr, FreeqParseError> {
    if s.trim().is_empty() {
        return Err(FreeqParseError::Empty);
    }
    let mut p = Parser {
        chars: s.char_indices().collect(),
        pos: 0,
        alphabet,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.unexpected());
    }
    Ok(e)
}

impl QuandleExpr {
    /// The written letters of a left-associated chain without `*⁻¹`, or
    /// `None` if the expression has parentheses on the right or inverses.
    pub fn as_plain_sequence(&self) -> Option<Vec<u32>> {
        match self {
            QuandleExpr::Gen(s) => Some(vec![*s]),
            QuandleExpr::Op(l, r, 1) => match **r {
                QuandleExpr::Gen(s) => {
                    let mut v = l.as_plain_sequence()?;
                    v.push(s);
                    Some(v)
                }
                _ => None,
            },
            QuandleExpr::Op(..) => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn left_associated() {
        let mut a = Alphabet::default();
        let e = parse_expr("a*b*-c", &mut a).unwrap();
        let expected = QuandleExpr::Op(
            Box::new(QuandleExpr::Op(
                Box::new(QuandleExpr::Gen(0)),
                Box::new(QuandleExpr::Gen(1)),
                1,
            )),
            Box::new(QuandleExpr::Gen(2)),
            -1,
        );
        assert_eq!(e, expected);
        assert_eq!(a.len(), 3);
        assert_eq!(e.as_plain_sequence(), None);
        assert_eq!(parse_expr("x * y * x", &mut a).unwrap().as_plain_sequence(), Some(vec![3, 4, 3]));
    }

    #[test]
    fn parentheses_and_errors() {
        let mut a = Alphabet::fixed(["a", "b"]);
        assert!(parse_expr("a*(b*a)", &mut a).is_ok());
        assert_eq!(parse_expr("a*c", &mut a), Err(FreeqParseError::UnknownGenerator("c".into())));
        assert!(matches!(parse_expr("a*", &mut a), Err(FreeqParseError::Unexpected { .. })));
        assert!(matches!(parse_expr("(a", &mut a), Err(FreeqParseError::Unexpected { .. })));
        assert!(matches!(parse_expr("a b", &mut a), Err(FreeqParseError::Unexpected { pos: 2, .. })));
        assert_eq!(parse_expr("  ", &mut a), Err(FreeqParseError::Empty));
    }
}
