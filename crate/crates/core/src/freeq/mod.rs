//! Free quandles inside free groups, free involutory quandles, and the
//! embedding of the latter into the core of a free group.

mod involutory;
mod parse;
mod probe;

use std::fmt;

use serde::Serialize;

pub use involutory::{core_embed, core_op, inv_multiply, inv_normalize, InvolutoryWord};
pub use parse::{parse_expr, Alphabet, FreeqParseError, QuandleExpr};
pub use probe::{evaluate, freeness_probe, normal_forms_of_length, Relation, PROBE_MAX_DEPTH};

use crate::quandles::QuandleModel;

/// Letter `(generator, ±1)`.
pub type Letter = (u32, i8);

/// A freely reduced word in the free group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FreeGroupWord {
    letters: Vec<Letter>,
}

impl FreeGroupWord {
    /// Freely reduces `letters`.
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for (s, e) in letters {
            assert!(e == 1 || e == -1, "exponent must be ±1");
            if out.last() == Some(&(s, -e)) {
                out.pop();
            } else {
                out.push((s, e));
            }
        }
        FreeGroupWord { letters: out }
    }

    pub fn letter(s: u32) -> Self {
        FreeGroupWord { letters: vec![(s, 1)] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        FreeGroupWord {
            letters: self.letters.iter().rev().map(|&(s, e)| (s, -e)).collect(),
        }
    }

    pub fn mul(&self, other: &FreeGroupWord) -> Self {
        FreeGroupWord::new(self.letters.iter().chain(&other.letters).copied())
    }

    pub fn is_palindrome(&self) -> bool {
        self.letters.iter().eq(self.letters.iter().rev())
    }

    pub fn display(&self, alphabet: &Alphabet) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        self.letters
            .iter()
            .map(|&(s, e)| {
                let name = alphabet.name(s);
                if e < 0 {
                    format!("{name}^-1")
                } else {
                    name.to_string()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A left-associated word `base *^{e_1} s_1 *^{e_2} s_2 ⋯`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuandleWord {
    pub base: u32,
    pub ops: Vec<Letter>,
}

impl QuandleWord {
    pub fn new(base: u32, ops: Vec<Letter>) -> Self {
        QuandleWord { base, ops }
    }

    /// Number of letters, base included.
    pub fn len(&self) -> usize {
        1 + self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn display(&self, alphabet: &Alphabet) -> String {
        let mut s = alphabet.name(self.base).to_string();
        for &(g, e) in &self.ops {
            s.push('*');
            if e < 0 {
                s.push('-');
            }
            s.push_str(&alphabet.name(g));
        }
        s
    }
}

/// Normal form of a free quandle element `c · base · c⁻¹`, where `c` is
/// reduced and does not end in `base^{±1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FreeQuandleElement {
    pub conjugator: FreeGroupWord,
    pub base: u32,
}

impl FreeQuandleElement {
    pub fn generator(s: u32) -> Self {
        FreeQuandleElement {
            conjugator: FreeGroupWord::default(),
            base: s,
        }
    }

    fn from_parts(conjugator: FreeGroupWord, base: u32) -> Self {
        let mut letters = conjugator.letters;
        while letters.last().is_some_and(|&(s, _)| s == base) {
            letters.pop();
        }
        FreeQuandleElement {
            conjugator: FreeGroupWord { letters },
            base,
        }
    }

    /// The group element `c · base · c⁻¹`.
    pub fn as_group_word(&self) -> FreeGroupWord {
        self.conjugator
            .mul(&FreeGroupWord::letter(self.base))
            .mul(&self.conjugator.inverse())
    }

    /// `self *^{sign} other`, i.e. `g x g⁻¹` or `g⁻¹ x g` for `g` the group
    /// element of `other`.
    pub fn operate(&self, other: &FreeQuandleElement, sign: i8) -> Self {
        let b = if sign > 0 { 1 } else { -1 };
        let g = other
            .conjugator
            .mul(&FreeGroupWord::new([(other.base, b)]))
            .mul(&other.conjugator.inverse());
        FreeQuandleElement::from_parts(g.mul(&self.conjugator), self.base)
    }

    /// A left-associated word with this normal form.
    pub fn to_word(&self) -> QuandleWord {
        // c = s_k^{e_k} ⋯ s_1^{e_1} is produced by the ops s_1, …, s_k
        QuandleWord {
            base: self.base,
            ops: self.conjugator.letters.iter().rev().copied().collect(),
        }
    }

    pub fn display(&self, alphabet: &Alphabet) -> String {
        self.to_word().display(alphabet)
    }
}

/// Normal form of a left-associated word.
pub fn free_normalize(w: &QuandleWord) -> FreeQuandleElement {
    // x *^e s conjugates by s^e, so c accumulates s_k^{e_k} ⋯ s_1^{e_1}
    let c = FreeGroupWord::new(w.ops.iter().rev().copied());
    FreeQuandleElement::from_parts(c, w.base)
}

/// Normal form of an arbitrary parenthesised expression.
pub fn free_normalize_expr(e: &QuandleExpr) -> FreeQuandleElement {
    match e {
        QuandleExpr::Gen(s) => FreeQuandleElement::generator(*s),
        QuandleExpr::Op(l, r, sign) => free_normalize_expr(l).operate(&free_normalize_expr(r), *sign),
    }
}

pub fn free_equal(a: &QuandleExpr, b: &QuandleExpr) -> bool {
    free_normalize_expr(a) == free_normalize_expr(b)
}

/// The free quandle as a model for probing and property tests.
#[derive(Clone, Copy, Debug, Default)]
pub struct FreeQuandle;

impl QuandleModel for FreeQuandle {
    type Elem = FreeQuandleElement;

    fn op(&self, x: &FreeQuandleElement, y: &FreeQuandleElement) -> FreeQuandleElement {
        x.operate(y, 1)
    }

    fn op_inv(&self, x: &FreeQuandleElement, y: &FreeQuandleElement) -> FreeQuandleElement {
        x.operate(y, -1)
    }
}

impl fmt::Display for FreeQuandleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = Alphabet::default();
        f.write_str(&self.display(&a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expr(s: &str) -> QuandleExpr {
        let mut a = Alphabet::from_names(["a", "b", "c"]);
        parse_expr(s, &mut a).unwrap()
    }

    #[test]
    fn reduction() {
        let w = FreeGroupWord::new([(0, 1), (1, 1), (1, -1), (0, 1)]);
        assert_eq!(w.letters(), &[(0, 1), (0, 1)]);
        assert!(FreeGroupWord::new([(0, 1), (0, -1)]).is_empty());
        assert!(w.mul(&w.inverse()).is_empty());
    }

    #[test]
    fn normal_forms() {
        let n = free_normalize_expr(&expr("a*b"));
        assert_eq!(n.conjugator.letters(), &[(1, 1)]);
        assert_eq!(n.base, 0);
        assert_eq!(free_normalize_expr(&expr("a*-a")), FreeQuandleElement::generator(0));
        assert_eq!(free_normalize_expr(&expr("a*b*-b")), FreeQuandleElement::generator(0));
        assert_eq!(free_normalize_expr(&expr("a*a*a")), FreeQuandleElement::generator(0));
    }

    #[test]
    fn equality() {
        assert!(free_equal(&expr("a*b*c"), &expr("a*c*(b*c)")));
        assert!(!free_equal(&expr("a"), &expr("b")));
        assert!(!free_equal(&expr("a*b"), &expr("b*a")));
        assert!(free_equal(&expr("(a*b)*-(c*b)"), &expr("a*-c*b")));
    }

    #[test]
    fn word_round_trip() {
        let e = free_normalize_expr(&expr("a*(b*-c)*c*a"));
        assert_eq!(free_normalize(&e.to_word()), e);
        let a = Alphabet::from_names(["a", "b", "c"]);
        let shown = e.display(&a);
        let mut a2 = a.clone();
        assert_eq!(free_normalize_expr(&parse_expr(&shown, &mut a2).unwrap()), e);
    }

    #[test]
    fn group_word_is_conjugate() {
        let e = free_normalize_expr(&expr("a*b"));
        assert_eq!(e.as_group_word().letters(), &[(1, 1), (0, 1), (1, -1)]);
    }
}
