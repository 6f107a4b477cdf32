//! Searches for relations between two elements of a quandle model by
//! evaluating every free normal form in two generators, shortest first.

use std::collections::HashMap;

use serde::Serialize;

use super::{Letter, QuandleWord};
use crate::quandles::QuandleModel;

pub const PROBE_MAX_DEPTH: usize = 8;

/// Two distinct free normal forms (in generators `0 = x`, `1 = y`) that
/// evaluate to the same model element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub lhs: QuandleWord,
    pub rhs: QuandleWord,
    /// Word length of the later form.
    pub length: usize,
}

/// Every free normal form of length `len` in the generators `0` and `1`.
pub fn normal_forms_of_length(len: usize) -> Vec<QuandleWord> {
    let mut out = Vec::new();
    if len == 0 {
        return out;
    }
    for base in 0..2u32 {
        let mut ops: Vec<Letter> = Vec::new();
        extend(base, len - 1, &mut ops, &mut out);
    }
    out
}

// ops is the conjugator read backwards: reduced, and its first letter is not the base
fn extend(base: u32, remaining: usize, ops: &mut Vec<Letter>, out: &mut Vec<QuandleWord>) {
    if remaining == 0 {
        out.push(QuandleWord::new(base, ops.clone()));
        return;
    }
    for s in 0..2u32 {
        for e in [1i8, -1] {
            let ok = match ops.last() {
                None => s != base,
                Some(&(t, f)) => !(t == s && f == -e),
            };
            if ok {
                ops.push((s, e));
                extend(base, remaining - 1, ops, out);
                ops.pop();
            }
        }
    }
}

/// Value of `w` with generator `i` sent to `gens[i]`.
pub fn evaluate<M: QuandleModel>(model: &M, gens: [&M::Elem; 2], w: &QuandleWord) -> M::Elem {
    let mut v = gens[w.base as usize].clone();
    for &(s, e) in &w.ops {
        v = if e > 0 {
            model.op(&v, gens[s as usize])
        } else {
            model.op_inv(&v, gens[s as usize])
        };
    }
    v
}

/// First collision among free normal forms of length at most `depth`
/// (capped at `PROBE_MAX_DEPTH`), or `None`.
pub fn freeness_probe<M: QuandleModel>(model: &M, x: &M::Elem, y: &M::Elem, depth: usize) -> Option<Relation> {
    let mut seen: HashMap<M::Elem, QuandleWord> = HashMap::new();
    for len in 1..=depth.min(PROBE_MAX_DEPTH) {
        for w in normal_forms_of_length(len) {
            let v = evaluate(model, [x, y], &w);
            if let Some(prev) = seen.get(&v) {
                return Some(Relation {
                    lhs: prev.clone(),
                    rhs: w,
                    length: len,
                });
            }
            seen.insert(v, w);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeq::{free_normalize, FreeQuandle, FreeQuandleElement};
    use crate::quandles::FiniteQuandle;

    #[test]
    fn forms_are_distinct_normal_forms() {
        let all: Vec<QuandleWord> = (1..=6).flat_map(normal_forms_of_length).collect();
        assert_eq!(all.len(), 2 + 4 * (1 + 3 + 9 + 27 + 81));
        let mut nf: Vec<FreeQuandleElement> = all.iter().map(free_normalize).collect();
        for (w, n) in all.iter().zip(&nf) {
            assert_eq!(&n.to_word(), w);
        }
        nf.sort();
        nf.dedup();
        assert_eq!(nf.len(), all.len());
    }

    #[test]
    fn free_quandle_has_no_relations() {
        let (x, y) = (FreeQuandleElement::generator(0), FreeQuandleElement::generator(1));
        assert_eq!(freeness_probe(&FreeQuandle, &x, &y, 6), None);
    }

    #[test]
    fn dihedral_three_collides_early() {
        let r3 = FiniteQuandle::dihedral(3);
        let rel = freeness_probe(&r3, &0, &1, 8).unwrap();
        assert!(rel.length <= 3);
    }
}
