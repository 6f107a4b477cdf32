//! Finite groups given by permutation or matrix generators.
//!
//! Groups are enumerated by breadth-first closure and then kept immutable.
//! Products are computed on demand from the stored elements; there is no
//! Cayley table, so groups with a few million elements remain usable.

mod matrix;
mod parse;
mod perm;
mod snf;

use std::collections::{HashMap, VecDeque};

use rand::Rng;
use thiserror::Error;

pub use matrix::MatModN;
pub use parse::{parse_element, parse_generators};
pub use perm::Permutation;
pub use snf::{smith_normal_form, IntMatrix};

/// Default closure cap; large enough for `Sp(6, 2)` (order 1,451,520).
pub const DEFAULT_CAP: usize = 2_000_000;

/// Largest quotient materialised by [`FiniteGroup::quotient_by_center`].
pub const QUOTIENT_LIMIT: usize = 5000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("generators mix carriers (permutations vs matrices, or different degree/modulus)")]
    MixedCarriers,
    #[error("no generators given")]
    NoGenerators,
    #[error("image array is not a bijection")]
    NotBijective,
    #[error("matrix is not square")]
    NotSquare,
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u32),
    #[error("matrix determinant is not a unit")]
    NotInvertible,
    #[error("element does not belong to the group")]
    NotInGroup,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A group element: a permutation or an invertible matrix over `Z_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Perm(Permutation),
    Mat(MatModN),
}

/// Identifies which family of groups an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Carrier {
    Perm { degree: usize },
    Mat { dim: usize, modulus: u32 },
}

impl Element {
    fn carrier(&self) -> Carrier {
        match self {
            Element::Perm(p) => Carrier::Perm { degree: p.degree() },
            Element::Mat(m) => Carrier::Mat {
                dim: m.dim(),
                modulus: m.modulus(),
            },
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Element) -> Element {
        match (self, other) {
            (Element::Perm(a), Element::Perm(b)) => Element::Perm(a.compose(b)),
            (Element::Mat(a), Element::Mat(b)) => Element::Mat(a.compose(b)),
            _ => panic!("composing elements of different carriers"),
        }
    }

    pub fn inverse(&self) -> Element {
        match self {
            Element::Perm(p) => Element::Perm(p.inverse()),
            Element::Mat(m) => Element::Mat(m.inverse().expect("group matrices are invertible")),
        }
    }

    pub fn identity_like(&self) -> Element {
        match self {
            Element::Perm(p) => Element::Perm(Permutation::identity(p.degree())),
            Element::Mat(m) => Element::Mat(MatModN::identity(m.dim(), m.modulus())),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Element::Perm(p) => p.is_identity(),
            Element::Mat(m) => m.is_identity(),
        }
    }

    /// Canonical byte serialization: image array or row-major residues.
    pub fn encode(&self) -> Vec<u8> {
        match self {
            Element::Perm(p) => {
                let mut v = vec![0u8];
                v.extend(p.encode());
                v
            }
            Element::Mat(m) => {
                let mut v = vec![1u8];
                v.extend(m.encode());
                v
            }
        }
    }

    pub fn as_perm(&self) -> Option<&Permutation> {
        match self {
            Element::Perm(p) => Some(p),
            Element::Mat(_) => None,
        }
    }

    pub fn as_mat(&self) -> Option<&MatModN> {
        match self {
            Element::Mat(m) => Some(m),
            Element::Perm(_) => None,
        }
    }
}

impl std::fmt::Display for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Element::Perm(p) => p.fmt(f),
            Element::Mat(m) => m.fmt(f),
        }
    }
}

impl From<Permutation> for Element {
    fn from(p: Permutation) -> Self {
        Element::Perm(p)
    }
}

impl From<MatModN> for Element {
    fn from(m: MatModN) -> Self {
        Element::Mat(m)
    }
}

/// An enumerated finite group. Index 0 is always the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    elements: Vec<Element>,
    index: HashMap<Element, usize>,
    inverses: Vec<usize>,
    generators: Vec<usize>,
}

impl FiniteGroup {
    /// Breadth-first closure of `gens` and their inverses.
    pub fn generate(gens: &[Element], cap: usize) -> Result<FiniteGroup, GroupError> {
        let first = gens.first().ok_or(GroupError::NoGenerators)?;
        let carrier = first.carrier();
        if gens.iter().any(|g| g.carrier() != carrier) {
            return Err(GroupError::MixedCarriers);
        }
        let cap = cap.max(1);

        // multiply by generators and their inverses, deduplicated
        let mut steps: Vec<(Element, Element)> = Vec::new();
        for g in gens {
            let gi = g.inverse();
            for (a, b) in [(g.clone(), gi.clone()), (gi, g.clone())] {
                if !steps.iter().any(|(s, _)| *s == a) {
                    steps.push((a, b));
                }
            }
        }

        let id = first.identity_like();
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0usize);
        // parent[i] = (p, k) with elements[i] = elements[p] ∘ steps[k].0
        let mut parent: Vec<(usize, usize)> = vec![(0, usize::MAX)];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (k, (s, _)) in steps.iter().enumerate() {
                let prod = elements[i].compose(s);
                if index.contains_key(&prod) {
                    continue;
                }
                if elements.len() >= cap {
                    return Err(GroupError::CapExceeded { cap });
                }
                let j = elements.len();
                index.insert(prod.clone(), j);
                elements.push(prod);
                parent.push((i, k));
                queue.push_back(j);
            }
        }

        // (p ∘ s)^-1 = s^-1 ∘ p^-1, filled in BFS order
        let mut inverses = vec![usize::MAX; elements.len()];
        inverses[0] = 0;
        for j in 1..elements.len() {
            if inverses[j] != usize::MAX {
                continue;
            }
            let (p, k) = parent[j];
            let inv = steps[k].1.compose(&elements[inverses[p]]);
            let ij = index[&inv];
            inverses[j] = ij;
            inverses[ij] = j;
        }

        let generators = gens.iter().map(|g| index[g]).collect();
        Ok(FiniteGroup {
            elements,
            index,
            inverses,
            generators,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn element(&self, i: usize) -> &Element {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn index_of(&self, e: &Element) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Index of `elements[a] ∘ elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let p = self.elements[a].compose(&self.elements[b]);
        self.index[&p]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g x g⁻¹`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverses[g])
    }

    pub fn pow(&self, x: usize, k: i64) -> usize {
        let base = if k < 0 { self.inverses[x] } else { x };
        let mut acc = 0;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    /// Least `k ≥ 1` with `x^k = id`.
    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut acc = x;
        while acc != 0 {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    /// `{g x g⁻¹ : g ∈ G}`, sorted.
    pub fn conjugacy_class(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for g in 0..self.order() {
            let c = self.conjugate(g, x);
            if !seen[c] {
                seen[c] = true;
                out.push(c);
            }
        }
        out.sort_unstable();
        out
    }

    /// All conjugacy classes, ordered by least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.order()];
        let mut out = Vec::new();
        for x in 0..self.order() {
            if assigned[x] {
                continue;
            }
            let class = self.conjugacy_class(x);
            for &c in &class {
                assigned[c] = true;
            }
            out.push(class);
        }
        out
    }

    /// Elements commuting with every generator (hence with all of G).
    pub fn center(&self) -> Vec<usize> {
        let gens = self.spanning_generators();
        (0..self.order())
            .filter(|&x| gens.iter().all(|&g| self.mul(g, x) == self.mul(x, g)))
            .collect()
    }

    fn spanning_generators(&self) -> Vec<usize> {
        let mut g = self.generators.clone();
        g.sort_unstable();
        g.dedup();
        g
    }

    /// Index of the coset `xZ` (its least element) for every element.
    fn center_cosets(&self, center: &[usize]) -> Vec<usize> {
        let mut rep = vec![usize::MAX; self.order()];
        for x in 0..self.order() {
            if rep[x] != usize::MAX {
                continue;
            }
            for &z in center {
                rep[self.mul(x, z)] = x;
            }
        }
        rep
    }

    /// `G / Z(G)` realised by left multiplication on the cosets of the centre.
    pub fn quotient_by_center(&self) -> Result<FiniteGroup, GroupError> {
        self.quotient_by_center_with_limit(QUOTIENT_LIMIT)
    }

    pub fn quotient_by_center_with_limit(&self, limit: usize) -> Result<FiniteGroup, GroupError> {
        let center = self.center();
        let quotient_order = self.order() / center.len();
        if quotient_order > limit {
            return Err(GroupError::CapExceeded { cap: limit });
        }
        let rep = self.center_cosets(&center);
        let mut reps: Vec<usize> = rep.clone();
        reps.sort_unstable();
        reps.dedup();
        let pos: HashMap<usize, usize> = reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let perm_of = |g: usize| {
            let images = reps.iter().map(|&r| pos[&rep[self.mul(g, r)]]).collect();
            Permutation::from_images(images).expect("left multiplication permutes cosets")
        };
        let gens: Vec<Element> = self
            .spanning_generators()
            .into_iter()
            .map(|g| Element::Perm(perm_of(g)))
            .collect();
        let gens = if gens.is_empty() {
            vec![Element::Perm(Permutation::identity(reps.len()))]
        } else {
            gens
        };
        FiniteGroup::generate(&gens, limit.max(1))
    }

    /// Checks closure, identity, inverse and associativity laws.
    /// Associativity is exhaustive up to `exhaustive_limit` elements and
    /// sampled on `samples` random triples above it.
    pub fn verify_axioms<R: Rng>(&self, exhaustive_limit: usize, samples: usize, rng: &mut R) -> bool {
        let n = self.order();
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return false;
            }
            if self.mul(a, self.inv(a)) != 0 {
                return false;
            }
        }
        let assoc = |a: usize, b: usize, c: usize| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c));
        if n <= exhaustive_limit {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return false;
                        }
                    }
                }
            }
            true
        } else {
            (0..samples).all(|_| assoc(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
        }
    }

    /// Cyclic group of order `n` as powers of an `n`-cycle;
    /// element `k` is the `k`-th power of the generator.
    pub fn cyclic(n: usize) -> FiniteGroup {
        let n = n.max(1);
        let images = (0..n).map(|i| (i + 1) % n).collect();
        let c = Element::Perm(Permutation::from_images(images).unwrap());
        // index k holds c^k
        let mut elems = Vec::with_capacity(n);
        let mut acc = c.identity_like();
        for _ in 0..n {
            elems.push(acc.clone());
            acc = acc.compose(&c);
        }
        FiniteGroup::from_ordered(elems, &[c])
    }

    /// Symmetric group on `n` points generated by adjacent transpositions.
    pub fn symmetric(n: usize) -> FiniteGroup {
        let gens: Vec<Element> = if n < 2 {
            vec![Element::Perm(Permutation::identity(n.max(1)))]
        } else {
            (0..n - 1)
                .map(|i| Element::Perm(Permutation::from_cycles(n, &[vec![i, i + 1]]).unwrap()))
                .collect()
        };
        FiniteGroup::generate(&gens, DEFAULT_CAP).unwrap()
    }

    /// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
    pub fn dihedral(n: usize) -> FiniteGroup {
        assert!(n >= 3);
        let r = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).unwrap();
        let s = Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).unwrap();
        FiniteGroup::generate(&[r.into(), s.into()], DEFAULT_CAP).unwrap()
    }

    /// Builds the group whose element list is exactly `elems` (must be closed).
    fn from_ordered(elems: Vec<Element>, gens: &[Element]) -> FiniteGroup {
        let index: HashMap<Element, usize> = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let inverses = elems.iter().map(|e| index[&e.inverse()]).collect();
        let generators = gens.iter().map(|g| index[g]).collect();
        FiniteGroup {
            elements: elems,
            index,
            inverses,
            generators,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn t(n: usize, a: usize, b: usize) -> Element {
        Permutation::from_cycles(n, &[vec![a, b]]).unwrap().into()
    }

    fn sl23() -> FiniteGroup {
        let a = MatModN::new(3, vec![vec![1, 1], vec![0, 1]]).unwrap();
        let b = MatModN::new(3, vec![vec![1, 0], vec![1, 1]]).unwrap();
        FiniteGroup::generate(&[a.into(), b.into()], DEFAULT_CAP).unwrap()
    }

    /// Brute-force count of 2x2 matrices over Z_3 with determinant 1.
    fn sl23_oracle_order() -> usize {
        let mut count = 0;
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    for d in 0..3 {
                        if (a * d + 9 - b * c) % 3 == 1 {
                            count += 1;
                        }
                    }
                }
            }
        }
        count
    }

    #[test]
    fn s3_from_two_transpositions() {
        let g = FiniteGroup::generate(&[t(3, 0, 1), t(3, 1, 2)], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.generators().len(), 2);
    }

    #[test]
    fn identity_generator_gives_trivial_group() {
        let g = FiniteGroup::generate(&[Permutation::identity(4).into()], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn sl23_order_matches_brute_force() {
        assert_eq!(sl23_oracle_order(), 24);
        assert_eq!(sl23().order(), 24);
    }

    #[test]
    fn cap_and_mixed_carriers() {
        assert_eq!(
            FiniteGroup::generate(&[t(3, 0, 1), t(3, 1, 2)], 5).unwrap_err(),
            GroupError::CapExceeded { cap: 5 }
        );
        let m = MatModN::new(3, vec![vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(
            FiniteGroup::generate(&[t(3, 0, 1), m.into()], 10).unwrap_err(),
            GroupError::MixedCarriers
        );
        assert_eq!(
            FiniteGroup::generate(&[t(3, 0, 1), t(4, 0, 1)], 10).unwrap_err(),
            GroupError::MixedCarriers
        );
    }

    #[test]
    fn conjugacy_classes() {
        let s3 = FiniteGroup::generate(&[t(3, 0, 1), t(3, 1, 2)], DEFAULT_CAP).unwrap();
        let x = s3.index_of(&t(3, 0, 1)).unwrap();
        assert_eq!(s3.conjugacy_class(x).len(), 3);
        assert_eq!(s3.conjugacy_class(0), vec![0]);

        let g = sl23();
        let u = g.index_of(&MatModN::new(3, vec![vec![1, 1], vec![0, 1]]).unwrap().into()).unwrap();
        assert_eq!(g.conjugacy_class(u).len(), 4);
        let total: usize = g.conjugacy_classes().iter().map(|c| c.len()).sum();
        assert_eq!(total, 24);
    }

    #[test]
    fn centers_and_quotients() {
        assert_eq!(FiniteGroup::symmetric(3).center(), vec![0]);
        assert_eq!(FiniteGroup::cyclic(4).center().len(), 4);
        let g = sl23();
        let z = g.center();
        assert_eq!(z.len(), 2);
        let minus = MatModN::new(3, vec![vec![2, 0], vec![0, 2]]).unwrap();
        assert!(z.contains(&g.index_of(&minus.into()).unwrap()));

        assert_eq!(g.quotient_by_center().unwrap().order(), 12);
        assert_eq!(FiniteGroup::cyclic(6).quotient_by_center().unwrap().order(), 1);
        assert_eq!(FiniteGroup::symmetric(3).quotient_by_center().unwrap().order(), 6);
    }

    #[test]
    fn element_orders() {
        let s3 = FiniteGroup::symmetric(3);
        let x = s3.index_of(&t(3, 0, 1)).unwrap();
        assert_eq!(s3.element_order(x), 2);
        assert_eq!(s3.element_order(0), 1);
        let g = sl23();
        let u = g.index_of(&MatModN::new(3, vec![vec![1, 1], vec![0, 1]]).unwrap().into()).unwrap();
        assert_eq!(g.element_order(u), 3);
    }

    #[test]
    fn group_laws_hold() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for g in [FiniteGroup::symmetric(4), sl23(), FiniteGroup::dihedral(4), FiniteGroup::cyclic(6)] {
            assert!(g.verify_axioms(200, 1000, &mut rng));
            let z = g.center().len();
            assert_eq!(g.order(), z * g.quotient_by_center().unwrap().order());
        }
    }

    #[test]
    fn cyclic_indices_are_powers() {
        let z5 = FiniteGroup::cyclic(5);
        let c = z5.generators()[0];
        assert_eq!(c, 1);
        for k in 0..5 {
            assert_eq!(z5.pow(c, k as i64), k);
        }
    }
}
