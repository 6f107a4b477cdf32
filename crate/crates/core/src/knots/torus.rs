//! The trefoil against the torus homology model.
//!
//! The reference model for the trefoil knot quandle is the conjugacy class
//! of `σ_1` in `B_3` under its reduced Burau representation, which is
//! faithful for three strands. The centralizer of `σ_1` is the peripheral
//! subgroup, so the quandle embeds in the group and equality of quandle
//! words is equality of matrices.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Serialize;

use crate::freeq::{evaluate, freeness_probe, normal_forms_of_length, Letter, QuandleWord, Relation};
use crate::homsym::{intersection_form, HomologyModel, PrimitiveClass};
use crate::quandles::QuandleModel;

pub const TORUS_PROBE_DEPTH: usize = 3;

/// Integer Laurent polynomial in `t`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Laurent(BTreeMap<i32, i64>);

impl Laurent {
    pub fn monomial(c: i64, e: i32) -> Self {
        let mut m = BTreeMap::new();
        if c != 0 {
            m.insert(e, c);
        }
        Laurent(m)
    }

    pub fn constant(c: i64) -> Self {
        Laurent::monomial(c, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, o: &Laurent) -> Laurent {
        let mut m = self.0.clone();
        for (&e, &c) in &o.0 {
            let v = m.entry(e).or_insert(0);
            *v += c;
            if *v == 0 {
                m.remove(&e);
            }
        }
        Laurent(m)
    }

    pub fn neg(&self) -> Laurent {
        Laurent(self.0.iter().map(|(&e, &c)| (e, -c)).collect())
    }

    pub fn mul(&self, o: &Laurent) -> Laurent {
        let mut out = Laurent::default();
        for (&e1, &c1) in &self.0 {
            for (&e2, &c2) in &o.0 {
                out = out.add(&Laurent::monomial(c1 * c2, e1 + e2));
            }
        }
        out
    }

    /// `(c, e)` when the polynomial is the unit `c t^e`.
    fn as_unit(&self) -> Option<(i64, i32)> {
        match self.0.iter().collect::<Vec<_>>()[..] {
            [(&e, &c)] if c == 1 || c == -1 => Some((c, e)),
            _ => None,
        }
    }
}

/// A 2×2 matrix over `Z[t, t⁻¹]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BurauMatrix(pub [[Laurent; 2]; 2]);

impl BurauMatrix {
    pub fn sigma1() -> Self {
        BurauMatrix([
            [Laurent::monomial(-1, 1), Laurent::constant(1)],
            [Laurent::default(), Laurent::constant(1)],
        ])
    }

    pub fn sigma2() -> Self {
        BurauMatrix([
            [Laurent::constant(1), Laurent::default()],
            [Laurent::monomial(1, 1), Laurent::monomial(-1, 1)],
        ])
    }

    pub fn mul(&self, o: &BurauMatrix) -> BurauMatrix {
        let a = &self.0;
        let b = &o.0;
        let e = |i: usize, j: usize| a[i][0].mul(&b[0][j]).add(&a[i][1].mul(&b[1][j]));
        BurauMatrix([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    /// Inverse over the Laurent ring; panics unless the determinant is a unit.
    pub fn inverse(&self) -> BurauMatrix {
        let a = &self.0;
        let det = a[0][0].mul(&a[1][1]).add(&a[0][1].mul(&a[1][0]).neg());
        let (c, e) = det.as_unit().expect("unit determinant");
        let u = Laurent::monomial(c, -e);
        BurauMatrix([
            [a[1][1].mul(&u), a[0][1].neg().mul(&u)],
            [a[1][0].neg().mul(&u), a[0][0].mul(&u)],
        ])
    }
}

/// Conjugates of braid generators with `x * y = y x y⁻¹`.
#[derive(Clone, Copy, Debug, Default)]
pub struct BurauModel;

impl QuandleModel for BurauModel {
    type Elem = BurauMatrix;

    fn op(&self, x: &BurauMatrix, y: &BurauMatrix) -> BurauMatrix {
        y.mul(x).mul(&y.inverse())
    }

    fn op_inv(&self, x: &BurauMatrix, y: &BurauMatrix) -> BurauMatrix {
        y.inverse().mul(x).mul(y)
    }
}

fn class(v: [i64; 2]) -> PrimitiveClass {
    PrimitiveClass::new(v.to_vec(), 0).expect("primitive vector")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusReport {
    /// `a*b*a = b` and `b*a*b = a` for `a = (1,0)`, `b = (0,1)`.
    pub braid_relations: bool,
    pub idempotent: bool,
    pub bound: i64,
    /// Primitive classes with entries in `[-bound, bound]`.
    pub classes_in_box: usize,
    pub reachable: usize,
    /// Every reachability word re-evaluates to its class.
    pub witnesses_valid: bool,
    pub probe_depth: usize,
    /// Pairs of distinct normal forms equal in the homology model.
    pub model_relations: usize,
    /// Relations of the homology model that fail in the reference model.
    pub unexplained: Vec<Relation>,
    /// Witness words for the boxed classes, as `(class, word)` in `a = 0`, `b = 1`.
    #[serde(skip)]
    pub witnesses: Vec<(PrimitiveClass, QuandleWord)>,
}

impl TorusReport {
    pub fn holds(&self) -> bool {
        self.braid_relations
            && self.idempotent
            && self.reachable == self.classes_in_box
            && self.witnesses_valid
            && self.unexplained.is_empty()
    }
}

pub fn trefoil_torus_check(bound: i64) -> TorusReport {
    trefoil_torus_check_with(bound, TORUS_PROBE_DEPTH)
}

/// Braid relations, generation of every boxed class by breadth-first search
/// inside the box, and agreement of all normal-form coincidences up to
/// `depth` with the reference model.
pub fn trefoil_torus_check_with(bound: i64, depth: usize) -> TorusReport {
    let bound = bound.max(1);
    let m = HomologyModel;
    let a = class([1, 0]);
    let b = class([0, 1]);
    let braid_relations = m.op(&m.op(&a, &b), &a) == b && m.op(&m.op(&b, &a), &b) == a;
    let idempotent = m.op(&a, &a) == a && m.op(&b, &b) == b;

    let in_box = |c: &PrimitiveClass| c.vector().iter().all(|x| x.abs() <= bound);
    let mut classes_in_box = 0;
    for p in -bound..=bound {
        for q in -bound..=bound {
            if let Ok(c) = PrimitiveClass::new(vec![p, q], 0) {
                if c.vector() == [p, q] {
                    classes_in_box += 1;
                }
            }
        }
    }

    let gens = [a.clone(), b.clone()];
    let mut words: HashMap<PrimitiveClass, QuandleWord> = HashMap::new();
    let mut queue = VecDeque::new();
    for (i, g) in gens.iter().enumerate() {
        words.insert(g.clone(), QuandleWord::new(i as u32, vec![]));
        queue.push_back(g.clone());
    }
    while let Some(x) = queue.pop_front() {
        for (s, g) in gens.iter().enumerate() {
            for e in [1i8, -1] {
                let y = if e > 0 { m.op(&x, g) } else { m.op_inv(&x, g) };
                if in_box(&y) && !words.contains_key(&y) {
                    let mut w = words[&x].clone();
                    w.ops.push((s as u32, e) as Letter);
                    words.insert(y.clone(), w);
                    queue.push_back(y);
                }
            }
        }
    }
    let mut witnesses: Vec<(PrimitiveClass, QuandleWord)> = words.into_iter().collect();
    witnesses.sort_by(|x, y| x.0.cmp(&y.0));
    let witnesses_valid = witnesses.iter().all(|(c, w)| &evaluate(&m, [&a, &b], w) == c);

    let forms: Vec<QuandleWord> = (1..=depth).flat_map(normal_forms_of_length).collect();
    let (sa, sb) = (BurauMatrix::sigma1(), BurauMatrix::sigma2());
    let mut first: HashMap<PrimitiveClass, (QuandleWord, BurauMatrix)> = HashMap::new();
    let mut model_relations = 0;
    let mut unexplained = Vec::new();
    for w in forms {
        let v = evaluate(&m, [&a, &b], &w);
        let r = evaluate(&BurauModel, [&sa, &sb], &w);
        match first.get(&v) {
            Some((w0, r0)) => {
                model_relations += 1;
                if *r0 != r {
                    unexplained.push(Relation {
                        lhs: w0.clone(),
                        length: w.len(),
                        rhs: w,
                    });
                }
            }
            None => {
                first.insert(v, (w, r));
            }
        }
    }

    TorusReport {
        braid_relations,
        idempotent,
        bound,
        classes_in_box,
        reachable: witnesses.len(),
        witnesses_valid,
        probe_depth: depth,
        model_relations,
        unexplained,
        witnesses,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TwoGeneratorKind {
    /// `|î| = 0`: `x*y = x` and `y*x = y`.
    Trivial,
    /// `|î| = 1`: both braid relations.
    Trefoil,
    /// `|î| ≥ 2`: no relation among short normal forms.
    Free,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoGeneratorReport {
    pub intersection: i64,
    pub kind: TwoGeneratorKind,
    /// The relations expected for the kind hold.
    pub verified: bool,
    /// First relation found by the probe.
    pub relation: Option<Relation>,
}

/// Classifies the subquandle generated by two classes of the torus model by
/// their algebraic intersection number.
pub fn two_generator_structure(x: &PrimitiveClass, y: &PrimitiveClass, depth: usize) -> TwoGeneratorReport {
    let m = HomologyModel;
    let intersection = intersection_form(x.vector(), y.vector(), 0).expect("classes of equal genus");
    let relation = freeness_probe(&m, x, y, depth);
    let (kind, verified) = match intersection.abs() {
        0 => (TwoGeneratorKind::Trivial, m.op(x, y) == *x && m.op(y, x) == *y),
        1 => (
            TwoGeneratorKind::Trefoil,
            m.op(&m.op(x, y), x) == *y && m.op(&m.op(y, x), y) == *x,
        ),
        _ => (TwoGeneratorKind::Free, relation.is_none()),
    };
    TwoGeneratorReport {
        intersection,
        kind,
        verified,
        relation,
    }
}
