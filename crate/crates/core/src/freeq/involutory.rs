//! Free involutory quandles as left-associated words `x_n * x_{n-1} * ⋯ * x_1`
//! with no two adjacent letters equal.

use serde::Serialize;

use super::{FreeGroupWord, Letter};

/// Letters as written: `letters[0]` is `x_n`, the last one is `x_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct InvolutoryWord {
    letters: Vec<u32>,
}

impl InvolutoryWord {
    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// Reduces a written sequence using `x * y * y = x` and `x * x = x`.
pub fn inv_normalize(seq: &[u32]) -> InvolutoryWord {
    assert!(!seq.is_empty(), "word needs a base letter");
    let mut stack: Vec<u32> = vec![seq[0]];
    for &s in &seq[1..] {
        if stack.len() == 1 && s == stack[0] {
            continue;
        }
        if stack.len() > 1 && stack.last() == Some(&s) {
            stack.pop();
        } else {
            stack.push(s);
        }
    }
    InvolutoryWord { letters: stack }
}

/// `u * v` by the product rule for left-associated normal forms.
pub fn inv_multiply(u: &InvolutoryWord, v: &InvolutoryWord) -> InvolutoryWord {
    let mut seq = u.letters.clone();
    // y_1, …, y_m then y_{m-1}, …, y_1
    seq.extend(v.letters.iter().rev());
    seq.extend(&v.letters[1..]);
    inv_normalize(&seq)
}

/// `x_1^{d_1} ⋯ x_{n-1}^{d_{n-1}} x_n^{d_n} x_{n-1}^{d_{n-1}} ⋯ x_1^{d_1}`
/// with `d_i = (-1)^{i+1}`.
pub fn core_embed(u: &InvolutoryWord) -> FreeGroupWord {
    let n = u.letters.len();
    let x = |i: usize| u.letters[n - i];
    let d = |i: usize| -> i8 { if i % 2 == 1 { 1 } else { -1 } };
    let mut letters: Vec<Letter> = (1..=n).map(|i| (x(i), d(i))).collect();
    letters.extend((1..n).rev().map(|i| (x(i), d(i))));
    FreeGroupWord::new(letters)
}

/// Core operation `x * y = y x⁻¹ y` in the free group.
pub fn core_op(x: &FreeGroupWord, y: &FreeGroupWord) -> FreeGroupWord {
    y.mul(&x.inverse()).mul(y)
}
