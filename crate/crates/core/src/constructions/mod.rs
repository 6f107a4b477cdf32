//! Quandles built from groups: conjugation, core, generalised Alexander and
//! Dehn quandles, with enveloping-group and inner-group checks.

mod biorder;

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::groups::{smith_normal_form, Element, FiniteGroup, GroupError, IntMatrix, QUOTIENT_LIMIT};
use crate::quandles::{FiniteQuandle, QuandleError};

pub use biorder::{alexander_biorder_check, BiorderVerdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("map is not an automorphism of the group")]
    NotAutomorphism,
    #[error("subset is not closed under conjugation")]
    NotClosed,
    #[error("seed set is empty")]
    EmptySeeds,
    #[error("seeds generate a subgroup of order {generated}, not the whole group of order {order}")]
    SeedsDoNotGenerate { generated: usize, order: usize },
    #[error("matrix must have determinant ±1")]
    NotUnimodular,
    #[error("linear form vanishes on a nonzero integer vector")]
    DegenerateForm,
    #[error(transparent)]
    Quandle(#[from] QuandleError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

fn labelled(group: &FiniteGroup, members: &[usize], q: FiniteQuandle) -> FiniteQuandle {
    q.with_labels(members.iter().map(|&g| group.element(g).to_string()).collect())
}

fn table_on(
    group: &FiniteGroup,
    members: &[usize],
    op: impl Fn(usize, usize) -> usize,
) -> Result<FiniteQuandle, ConstructionError> {
    let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    let mut table = Vec::with_capacity(members.len());
    for &x in members {
        let mut row = Vec::with_capacity(members.len());
        for &y in members {
            row.push(*pos.get(&op(x, y)).ok_or(ConstructionError::NotClosed)?);
        }
        table.push(row);
    }
    let q = FiniteQuandle::validate(table)?;
    Ok(labelled(group, members, q))
}

/// `Conj(G)`: `x * y = y x y⁻¹`, on all of `G` or on `restrict` (which must
/// be closed under conjugation by its own elements). Element `i` of the
/// quandle is group element `restrict[i]` (or `i`).
pub fn conj_quandle(group: &FiniteGroup, restrict: Option<&[usize]>) -> Result<FiniteQuandle, ConstructionError> {
    let all: Vec<usize> = (0..group.order()).collect();
    let members = restrict.unwrap_or(&all);
    table_on(group, members, |x, y| group.conjugate(y, x))
}

/// `Core(G)`: `x * y = y x⁻¹ y`, element `i` is group element `i`.
pub fn core_quandle(group: &FiniteGroup) -> FiniteQuandle {
    let all: Vec<usize> = (0..group.order()).collect();
    table_on(group, &all, |x, y| group.mul(group.mul(y, group.inv(x)), y)).expect("core quandle")
}

/// `Alex(G, φ)`: `x * y = φ(x y⁻¹) y`, with `φ` given on element indices.
pub fn alexander_quandle(group: &FiniteGroup, phi: &[usize]) -> Result<FiniteQuandle, ConstructionError> {
    let n = group.order();
    if phi.len() != n || phi.iter().any(|&p| p >= n) || phi.iter().collect::<HashSet<_>>().len() != n {
        return Err(ConstructionError::NotAutomorphism);
    }
    for a in 0..n {
        for b in 0..n {
            if phi[group.mul(a, b)] != group.mul(phi[a], phi[b]) {
                return Err(ConstructionError::NotAutomorphism);
            }
        }
    }
    let all: Vec<usize> = (0..n).collect();
    table_on(group, &all, |x, y| group.mul(phi[group.mul(x, group.inv(y))], y))
}

/// The Dehn quandle `D(A^G)` together with its embedding into `G`.
#[derive(Clone, Debug)]
pub struct DehnQuandle {
    pub quandle: FiniteQuandle,
    pub group: FiniteGroup,
    pub seed_indices: Vec<usize>,
    /// Quandle element `i` is group element `element_to_group[i]`.
    pub element_to_group: Vec<usize>,
}

/// Union of the conjugacy classes of `seeds`, with conjugation. Classes
/// appear in seed order, each sorted by group index.
pub fn dehn_quandle(group: FiniteGroup, seeds: &[usize]) -> Result<DehnQuandle, ConstructionError> {
    if seeds.is_empty() {
        return Err(ConstructionError::EmptySeeds);
    }
    let mut members = Vec::new();
    let mut seen = HashSet::new();
    for &s in seeds {
        if seen.contains(&s) {
            continue;
        }
        for c in group.conjugacy_class(s) {
            seen.insert(c);
            members.push(c);
        }
    }
    let quandle = conj_quandle(&group, Some(&members))?;
    Ok(DehnQuandle {
        quandle,
        group,
        seed_indices: seeds.to_vec(),
        element_to_group: members,
    })
}

impl DehnQuandle {
    /// Quandle element carrying group element `g`.
    pub fn element_of(&self, g: usize) -> Option<usize> {
        self.element_to_group.iter().position(|&e| e == g)
    }

    /// `(c, ct)`: seed conjugacy classes, and those with a torsion
    /// representative (every class, in a finite group).
    pub fn class_counts(&self) -> (usize, usize) {
        let mut classes = HashSet::new();
        for &s in &self.seed_indices {
            classes.insert(self.group.conjugacy_class(s)[0]);
        }
        (classes.len(), classes.len())
    }

    /// Checks `Inn(D) ≅ G / Z(G)`. Requires `A^G` to generate `G`.
    pub fn inn_equals_central_quotient(&self) -> Result<InnReport, ConstructionError> {
        self.inn_equals_central_quotient_with_limit(QUOTIENT_LIMIT)
    }

    pub fn inn_equals_central_quotient_with_limit(&self, limit: usize) -> Result<InnReport, ConstructionError> {
        let seeds: Vec<Element> = self
            .element_to_group
            .iter()
            .map(|&s| self.group.element(s).clone())
            .collect();
        let generated = FiniteGroup::generate(&seeds, self.group.order() + 1)?.order();
        if generated != self.group.order() {
            return Err(ConstructionError::SeedsDoNotGenerate {
                generated,
                order: self.group.order(),
            });
        }
        let inn = self.quandle.inner_group(self.group.order().max(1))?;
        let center = self.group.center();
        let quotient_order = self.group.order() / center.len();
        let mut report = InnReport {
            inn_order: inn.order(),
            quotient_order,
            order_only: true,
            natural_map_verified: false,
            holds: inn.order() == quotient_order,
        };
        if quotient_order > limit {
            return Ok(report);
        }
        let quotient = self.group.quotient_by_center_with_limit(limit)?;
        report.quotient_order = quotient.order();
        report.order_only = false;
        report.natural_map_verified = self.natural_map_is_iso(&inn, &center);
        report.holds = report.inn_order == report.quotient_order && report.natural_map_verified;
        Ok(report)
    }

    /// `g ↦ (x ↦ g x g⁻¹)` lands in `Inn(D)`, hits all of it, and has kernel `Z(G)`.
    fn natural_map_is_iso(&self, inn: &FiniteGroup, center: &[usize]) -> bool {
        let pos: HashMap<usize, usize> = self.element_to_group.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let mut image = HashSet::new();
        let mut kernel = Vec::new();
        for g in 0..self.group.order() {
            let images: Vec<usize> = self
                .element_to_group
                .iter()
                .map(|&x| pos[&self.group.conjugate(g, x)])
                .collect();
            if images.iter().enumerate().all(|(i, &j)| i == j) {
                kernel.push(g);
            }
            let e: Element = crate::groups::Permutation::from_images(images).unwrap().into();
            if inn.index_of(&e).is_none() {
                return false;
            }
            image.insert(e);
        }
        image.len() == inn.order() && kernel == center
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InnReport {
    pub inn_order: usize,
    pub quotient_order: usize,
    /// Only the orders were compared (quotient above the size limit).
    pub order_only: bool,
    pub natural_map_verified: bool,
    pub holds: bool,
}

/// Abelianized enveloping group `Z^free_rank ⊕ ⨁ Z/d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvAbelianization {
    /// Torsion invariant factors, each greater than one.
    pub invariant_factors: Vec<BigInt>,
    pub free_rank: usize,
}

/// Abelianizes `e_{x*y} = e_y e_x e_y⁻¹` to `e_{x*y} - e_x = 0` and reads
/// off the cokernel from the Smith normal form.
pub fn env_abelianization(q: &FiniteQuandle) -> EnvAbelianization {
    let n = q.size();
    let mut rows: HashSet<(usize, usize)> = HashSet::new();
    for x in 0..n {
        for y in 0..n {
            let z = q.op(x, y);
            if z != x {
                rows.insert((z, x));
            }
        }
    }
    let mut rows: Vec<(usize, usize)> = rows.into_iter().collect();
    rows.sort_unstable();
    if rows.is_empty() {
        return EnvAbelianization {
            invariant_factors: Vec::new(),
            free_rank: n,
        };
    }
    let mut m = IntMatrix::zeros(rows.len(), n);
    for (r, &(z, x)) in rows.iter().enumerate() {
        m.set(r, z, BigInt::one());
        m.set(r, x, -BigInt::one());
    }
    let diag = smith_normal_form(&m);
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    EnvAbelianization {
        invariant_factors: diag.into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect(),
        free_rank: n - rank,
    }
}

/// A Dehn quandle isomorphic to `q`, together with the isomorphism.
#[derive(Clone, Debug)]
pub struct DehnWitness {
    pub dehn: DehnQuandle,
    /// `iso[x]` is the element of `dehn.quandle` matched with `x`.
    pub iso: Vec<usize>,
}

/// For faithful `q`, realises `q` as `D(A^G)` with `G = Inn(q)` and
/// `A = {S_x}`. Returns `None` (undetermined) otherwise.
pub fn dehn_witness(q: &FiniteQuandle) -> Result<Option<DehnWitness>, ConstructionError> {
    if !q.is_faithful() {
        return Ok(None);
    }
    let inn = q.inner_group(crate::groups::DEFAULT_CAP)?;
    let seeds: Vec<usize> = (0..q.size())
        .map(|x| {
            let s: Element = crate::groups::Permutation::from_images(q.translation(x)).unwrap().into();
            inn.index_of(&s).expect("translations lie in Inn")
        })
        .collect();
    let dehn = dehn_quandle(inn, &seeds)?;
    let iso: Vec<usize> = seeds
        .iter()
        .map(|&s| dehn.element_of(s).expect("seeds lie in the Dehn quandle"))
        .collect();
    if dehn.quandle.size() != q.size() || !q.is_homomorphism(&dehn.quandle, &iso) {
        return Ok(None);
    }
    Ok(Some(DehnWitness { dehn, iso }))
}

/// Realises `Core(G)` as a Dehn quandle inside `H = (G × G) ⋊ Z_2` (swap
/// action) via `x ↦ (x, x⁻¹) t`. Works whether or not `Core(G)` is faithful.
pub fn core_dehn_witness(group: &FiniteGroup) -> Result<DehnWitness, ConstructionError> {
    let n = group.order();
    // H acts on two copies of G: (a, b) multiplies the copies on the left, t swaps them
    let point = |copy: usize, g: usize| copy * n + g;
    let pair = |a: usize, b: usize| -> Vec<usize> {
        let mut images = vec![0; 2 * n];
        for g in 0..n {
            images[point(0, g)] = point(0, group.mul(a, g));
            images[point(1, g)] = point(1, group.mul(b, g));
        }
        images
    };
    let swap: Vec<usize> = (0..2 * n).map(|p| (p + n) % (2 * n)).collect();
    let embed = |x: usize| -> Element {
        let ab = pair(x, group.inv(x));
        // (x, x⁻¹) ∘ t
        let images = (0..2 * n).map(|p| ab[swap[p]]).collect();
        crate::groups::Permutation::from_images(images).unwrap().into()
    };
    let mut gens: Vec<Element> = Vec::new();
    for &g in group.generators() {
        gens.push(crate::groups::Permutation::from_images(pair(g, 0)).unwrap().into());
        gens.push(crate::groups::Permutation::from_images(pair(0, g)).unwrap().into());
    }
    gens.push(crate::groups::Permutation::from_images(swap.clone()).unwrap().into());
    let h = FiniteGroup::generate(&gens, crate::groups::DEFAULT_CAP)?;
    let seeds: Vec<usize> = (0..n).map(|x| h.index_of(&embed(x)).expect("image lies in H")).collect();
    let dehn = dehn_quandle(h, &seeds)?;
    let core = core_quandle(group);
    let iso: Vec<usize> = seeds.iter().map(|&s| dehn.element_of(s).unwrap()).collect();
    if dehn.quandle.size() != n || !core.is_homomorphism(&dehn.quandle, &iso) {
        return Err(ConstructionError::NotClosed);
    }
    Ok(DehnWitness { dehn, iso })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{parse_element, parse_generators, Permutation};

    fn s3() -> FiniteGroup {
        FiniteGroup::symmetric(3)
    }

    fn idx(g: &FiniteGroup, lit: &str) -> usize {
        g.index_of(&parse_element(lit, Some(3)).unwrap()).unwrap()
    }

    fn klein() -> FiniteGroup {
        let (gens, _) = parse_generators("(0 1)\n(2 3)").unwrap();
        FiniteGroup::generate(&gens, 100).unwrap()
    }

    fn sl23() -> FiniteGroup {
        let (gens, _) = parse_generators("mod=3; 1 1 / 0 1\nmod=3; 1 0 / 1 1").unwrap();
        FiniteGroup::generate(&gens, 100).unwrap()
    }

    #[test]
    fn conjugation_quandles() {
        assert_eq!(conj_quandle(&klein(), None).unwrap().table(), FiniteQuandle::trivial(4).table());
        let g = s3();
        let full = conj_quandle(&g, None).unwrap();
        assert_eq!(full.size(), 6);
        assert_eq!(full.components().len(), 3);
        let t = g.conjugacy_class(idx(&g, "(0 1)"));
        let q = conj_quandle(&g, Some(&t)).unwrap();
        assert!(q.is_isomorphic(&FiniteQuandle::dihedral(3)).unwrap());
        assert_eq!(
            conj_quandle(&g, Some(&[idx(&g, "(0 1)"), idx(&g, "(1 2)")])).unwrap_err(),
            ConstructionError::NotClosed
        );
    }

    #[test]
    fn core_quandles_are_dihedral() {
        for n in 1..=6 {
            assert_eq!(core_quandle(&FiniteGroup::cyclic(n)).table(), FiniteQuandle::dihedral(n).table());
        }
        assert_eq!(core_quandle(&FiniteGroup::cyclic(4)).components().len(), 2);
        // S_0 = S_2 in Core(Z_4): both send x to -x
        assert!(!core_quandle(&FiniteGroup::cyclic(4)).is_faithful());
        assert!(core_quandle(&FiniteGroup::cyclic(5)).is_faithful());
        assert_eq!(core_quandle(&FiniteGroup::cyclic(5)).exponent(), 2);
    }

    #[test]
    fn three_cycles_of_s3_commute() {
        let s3 = FiniteGroup::symmetric(3);
        let cycles: Vec<usize> = (0..6).filter(|&g| s3.element_order(g) == 3).collect();
        let q = conj_quandle(&s3, Some(&cycles)).unwrap();
        assert_eq!(q.size(), 2);
        // c and c^2 commute, so every S_y is the identity
        assert_eq!(q.table(), FiniteQuandle::trivial(2).table());
        assert_eq!(q.exponent(), 1);
    }

    #[test]
    fn alexander_quandles() {
        let z3 = FiniteGroup::cyclic(3);
        let neg = vec![0, 2, 1];
        assert_eq!(alexander_quandle(&z3, &neg).unwrap().table(), FiniteQuandle::dihedral(3).table());
        assert_eq!(alexander_quandle(&z3, &[0, 1, 2]).unwrap().table(), FiniteQuandle::trivial(3).table());
        let z5 = FiniteGroup::cyclic(5);
        let dbl: Vec<usize> = (0..5).map(|k| 2 * k % 5).collect();
        let q = alexander_quandle(&z5, &dbl).unwrap();
        assert!(q.is_connected() && q.is_faithful());
        assert_eq!(
            alexander_quandle(&z5, &[0, 2, 1, 3, 4]).unwrap_err(),
            ConstructionError::NotAutomorphism
        );
    }

    #[test]
    fn dehn_quandles() {
        let g = s3();
        let t = idx(&g, "(0 1)");
        let d = dehn_quandle(g, &[t]).unwrap();
        assert_eq!(d.quandle.size(), 3);
        assert!(d.quandle.is_isomorphic(&FiniteQuandle::dihedral(3)).unwrap());
        for x in 0..3 {
            for y in 0..3 {
                let gx = d.element_to_group[x];
                let gy = d.element_to_group[y];
                assert_eq!(d.element_to_group[d.quandle.op(x, y)], d.group.conjugate(gy, gx));
            }
        }

        let trivial = FiniteGroup::generate(&[Permutation::identity(2).into()], 10).unwrap();
        assert_eq!(dehn_quandle(trivial, &[0]).unwrap().quandle.size(), 1);

        let sl = sl23();
        let u = sl.index_of(&parse_element("mod=3; 1 1 / 0 1", None).unwrap()).unwrap();
        let d = dehn_quandle(sl, &[u]).unwrap();
        assert_eq!(d.quandle.size(), 4);
        assert!(d.quandle.is_connected());
    }

    #[test]
    fn class_counting() {
        let g = s3();
        let (a, b, c) = (idx(&g, "(0 1)"), idx(&g, "(0 1 2)"), idx(&g, "(1 2)"));
        assert_eq!(dehn_quandle(g.clone(), &[a, b]).unwrap().class_counts(), (2, 2));
        assert_eq!(dehn_quandle(g.clone(), &[a]).unwrap().class_counts(), (1, 1));
        assert_eq!(dehn_quandle(g, &[a, c]).unwrap().class_counts(), (1, 1));
    }

    #[test]
    fn enveloping_abelianizations() {
        let r3 = env_abelianization(&FiniteQuandle::dihedral(3));
        assert_eq!((r3.free_rank, r3.invariant_factors.len()), (1, 0));
        assert_eq!(env_abelianization(&FiniteQuandle::trivial(4)).free_rank, 4);
        assert_eq!(env_abelianization(&conj_quandle(&s3(), None).unwrap()).free_rank, 3);
    }

    #[test]
    fn witnesses() {
        let w = dehn_witness(&FiniteQuandle::dihedral(3)).unwrap().unwrap();
        assert_eq!(w.dehn.group.order(), 6);
        assert!(dehn_witness(&core_quandle(&FiniteGroup::cyclic(5))).unwrap().is_some());
        assert!(dehn_witness(&core_quandle(&FiniteGroup::cyclic(4))).unwrap().is_none());
        assert!(dehn_witness(&FiniteQuandle::trivial(2)).unwrap().is_none());
    }

    #[test]
    fn core_quandles_embed_by_doubling() {
        for g in [FiniteGroup::cyclic(4), FiniteGroup::cyclic(6), s3(), klein()] {
            let w = core_dehn_witness(&g).unwrap();
            assert_eq!(w.dehn.quandle.size(), g.order());
            assert_eq!(w.dehn.group.order(), 2 * g.order() * g.order());
        }
    }

    #[test]
    fn inner_group_is_central_quotient() {
        let g = s3();
        let t = idx(&g, "(0 1)");
        let r = dehn_quandle(g, &[t]).unwrap().inn_equals_central_quotient().unwrap();
        assert!(r.holds && r.natural_map_verified);
        assert_eq!((r.inn_order, r.quotient_order), (6, 6));

        let z4 = FiniteGroup::cyclic(4);
        let r = dehn_quandle(z4, &[1]).unwrap().inn_equals_central_quotient().unwrap();
        assert!(r.holds);
        assert_eq!(r.inn_order, 1);

        let sl = sl23();
        let gens: Vec<usize> = sl.generators().to_vec();
        let r = dehn_quandle(sl, &gens).unwrap().inn_equals_central_quotient().unwrap();
        assert!(r.holds);
        assert_eq!((r.inn_order, r.quotient_order), (12, 12));

        let g = s3();
        let t = idx(&g, "(0 1)");
        let r = dehn_quandle(g, &[t]).unwrap().inn_equals_central_quotient_with_limit(2).unwrap();
        assert!(r.order_only && r.holds);
    }

    #[test]
    fn seeds_must_generate() {
        let g = s3();
        let c = idx(&g, "(0 1 2)");
        assert!(matches!(
            dehn_quandle(g, &[c]).unwrap().inn_equals_central_quotient(),
            Err(ConstructionError::SeedsDoNotGenerate { generated: 3, order: 6 })
        ));
    }
}
