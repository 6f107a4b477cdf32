//! Isomorphism and automorphism search.
//!
//! A homomorphism is determined by where it sends a generating set, so the
//! search branches only on generator images and derives the rest by closing
//! the partial map under `*` and `*⁻¹`.

use std::collections::HashMap;

use super::{FiniteQuandle, QuandleError, AUT_BOUND, ISO_BOUND};
use crate::groups::{Element, FiniteGroup, Permutation};

const NONE: usize = usize::MAX;

/// Isomorphism-invariant data attached to each element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Signature {
    cycle_type: Vec<usize>,
    component_size: usize,
    fixed_left: usize,
}

fn signatures(q: &FiniteQuandle) -> Vec<Signature> {
    let comps = q.components();
    let mut comp_size = vec![0; q.size()];
    for c in &comps {
        for &x in c {
            comp_size[x] = c.len();
        }
    }
    (0..q.size())
        .map(|y| Signature {
            cycle_type: Permutation::from_images(q.translation(y)).unwrap().cycle_type(),
            component_size: comp_size[y],
            fixed_left: (0..q.size()).filter(|&z| q.op(y, z) == y).count(),
        })
        .collect()
}

struct Search<'a> {
    src: &'a FiniteQuandle,
    dst: &'a FiniteQuandle,
    gens: Vec<usize>,
    sig_src: Vec<Signature>,
    sig_dst: Vec<Signature>,
    img: Vec<usize>,
    pre: Vec<usize>,
    assigned: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(src: &'a FiniteQuandle, dst: &'a FiniteQuandle) -> Self {
        Search {
            src,
            dst,
            gens: src.generating_set(),
            sig_src: signatures(src),
            sig_dst: signatures(dst),
            img: vec![NONE; src.size()],
            pre: vec![NONE; dst.size()],
            assigned: Vec::new(),
        }
    }

    fn set(&mut self, x: usize, t: usize) -> bool {
        if self.img[x] != NONE {
            return self.img[x] == t;
        }
        if self.pre[t] != NONE || self.sig_src[x] != self.sig_dst[t] {
            return false;
        }
        self.img[x] = t;
        self.pre[t] = x;
        self.assigned.push(x);
        true
    }

    /// Assigns `x ↦ t` and closes the map; `false` on contradiction.
    fn assign(&mut self, x: usize, t: usize) -> bool {
        let start = self.assigned.len();
        if !self.set(x, t) {
            return false;
        }
        let mut i = start;
        while i < self.assigned.len() {
            let u = self.assigned[i];
            for j in 0..=i {
                let v = self.assigned[j];
                let (iu, iv) = (self.img[u], self.img[v]);
                let pairs = [
                    (self.src.op(u, v), self.dst.op(iu, iv)),
                    (self.src.op(v, u), self.dst.op(iv, iu)),
                    (self.src.dual_op(u, v), self.dst.dual_op(iu, iv)),
                    (self.src.dual_op(v, u), self.dst.dual_op(iv, iu)),
                ];
                for (a, b) in pairs {
                    if !self.set(a, b) {
                        return false;
                    }
                }
            }
            i += 1;
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.assigned.len() > mark {
            let x = self.assigned.pop().unwrap();
            self.pre[self.img[x]] = NONE;
            self.img[x] = NONE;
        }
    }

    /// Depth-first over generator images; `visit` returns `false` to stop.
    fn run(&mut self, k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if k == self.gens.len() {
            debug_assert!(self.img.iter().all(|&t| t != NONE));
            return visit(&self.img);
        }
        let x = self.gens[k];
        if self.img[x] != NONE {
            return self.run(k + 1, visit);
        }
        let n = self.dst.size();
        let order = std::iter::once(x).filter(|&t| t < n).chain((0..n).filter(|&t| t != x));
        for t in order.collect::<Vec<_>>() {
            let mark = self.assigned.len();
            if self.assign(x, t) && !self.run(k + 1, visit) {
                self.undo(mark);
                return false;
            }
            self.undo(mark);
        }
        true
    }
}

fn same_signature_multiset(a: &[Signature], b: &[Signature]) -> bool {
    let mut count: HashMap<&Signature, i64> = HashMap::new();
    for s in a {
        *count.entry(s).or_default() += 1;
    }
    for s in b {
        *count.entry(s).or_default() -= 1;
    }
    count.values().all(|&c| c == 0)
}

impl FiniteQuandle {
    /// An isomorphism `self → other` as an image array, if one exists.
    pub fn find_isomorphism(&self, other: &FiniteQuandle) -> Result<Option<Vec<usize>>, QuandleError> {
        self.find_isomorphism_bounded(other, ISO_BOUND)
    }

    pub fn find_isomorphism_bounded(
        &self,
        other: &FiniteQuandle,
        bound: usize,
    ) -> Result<Option<Vec<usize>>, QuandleError> {
        let size = self.size().max(other.size());
        if size > bound {
            return Err(QuandleError::BoundExceeded { size, bound });
        }
        if self.size() != other.size() {
            return Ok(None);
        }
        let mut s = Search::new(self, other);
        if !same_signature_multiset(&s.sig_src, &s.sig_dst) {
            return Ok(None);
        }
        let mut found = None;
        s.run(0, &mut |m| {
            found = Some(m.to_vec());
            false
        });
        Ok(found)
    }

    pub fn is_isomorphic(&self, other: &FiniteQuandle) -> Result<bool, QuandleError> {
        Ok(self.find_isomorphism(other)?.is_some())
    }

    /// Every automorphism, as image arrays, in search order (identity first).
    pub fn automorphisms(&self) -> Result<Vec<Vec<usize>>, QuandleError> {
        if self.size() > AUT_BOUND {
            return Err(QuandleError::BoundExceeded {
                size: self.size(),
                bound: AUT_BOUND,
            });
        }
        let mut s = Search::new(self, self);
        let mut all = Vec::new();
        s.run(0, &mut |m| {
            all.push(m.to_vec());
            true
        });
        Ok(all)
    }

    /// `Aut(Q)` as a permutation group on the elements.
    pub fn aut_group(&self) -> Result<FiniteGroup, QuandleError> {
        let gens: Vec<Element> = self
            .automorphisms()?
            .into_iter()
            .map(|m| Permutation::from_images(m).unwrap().into())
            .collect();
        Ok(FiniteGroup::generate(&gens, crate::groups::DEFAULT_CAP)?)
    }

    /// `true` iff `map` is an injective, operation-preserving map into `other`.
    pub fn is_homomorphism(&self, other: &FiniteQuandle, map: &[usize]) -> bool {
        map.len() == self.size()
            && map.iter().all(|&t| t < other.size())
            && (0..self.size()).all(|x| {
                (0..self.size()).all(|y| map[self.op(x, y)] == other.op(map[x], map[y]))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel(q: &FiniteQuandle, p: &[usize]) -> FiniteQuandle {
        // new table with element x renamed p[x]
        let n = q.size();
        let mut inv = vec![0; n];
        for (x, &y) in p.iter().enumerate() {
            inv[y] = x;
        }
        FiniteQuandle::from_fn(n, |a, b| p[q.op(inv[a], inv[b])]).unwrap()
    }

    #[test]
    fn dihedral_three_has_six_automorphisms() {
        let r3 = FiniteQuandle::dihedral(3);
        let auts = r3.automorphisms().unwrap();
        assert_eq!(auts.len(), 6);
        assert_eq!(auts[0], vec![0, 1, 2]);
        assert_eq!(r3.aut_group().unwrap().order(), 6);
    }

    #[test]
    fn trivial_quandle_automorphisms_are_all_permutations() {
        assert_eq!(FiniteQuandle::trivial(4).automorphisms().unwrap().len(), 24);
    }

    #[test]
    fn relabelled_quandle_is_isomorphic() {
        let q = FiniteQuandle::dihedral(5).product(&FiniteQuandle::dihedral(3));
        let p: Vec<usize> = (0..15).map(|i| (i * 7 + 3) % 15).collect();
        let r = relabel(&q, &p);
        let iso = q.find_isomorphism(&r).unwrap().unwrap();
        assert!(q.is_homomorphism(&r, &iso));
    }

    #[test]
    fn non_isomorphic_pairs() {
        let r4 = FiniteQuandle::dihedral(4);
        let t4 = FiniteQuandle::trivial(4);
        assert_eq!(r4.find_isomorphism(&t4).unwrap(), None);
        assert_eq!(r4.find_isomorphism(&FiniteQuandle::trivial(3)).unwrap(), None);
    }

    #[test]
    fn bounds_are_enforced() {
        let big = FiniteQuandle::trivial(65);
        assert!(matches!(big.automorphisms(), Err(QuandleError::BoundExceeded { .. })));
    }
}
