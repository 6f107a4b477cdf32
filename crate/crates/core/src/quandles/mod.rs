//! Finite quandles stored as operation tables.
//!
//! `table[x][y] = x * y`. Column `y` of the table is the right translation
//! `S_y : x ↦ x * y`; the quandle axioms say each `S_y` is a bijection fixing
//! `y` and distributing over `*`.

mod morphism;
mod order;

use std::collections::HashSet;
use std::fmt;
use std::hash::Hash;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groups::{Element, FiniteGroup, GroupError, Permutation};

pub use order::{OrderSemantics, OrderSide, ORDER_BOUND};

/// Default size bound for automorphism search.
pub const AUT_BOUND: usize = 64;
/// Default size bound for isomorphism search.
pub const ISO_BOUND: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Idempotence,
    RightBijectivity,
    Distributivity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Idempotence => "idempotence",
            Axiom::RightBijectivity => "right bijectivity",
            Axiom::Distributivity => "right self-distributivity",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuandleError {
    #[error("malformed table: {0}")]
    Malformed(String),
    #[error("axiom violation ({axiom}) at {witness:?}")]
    AxiomViolation { axiom: Axiom, witness: Vec<usize> },
    #[error("quandle of size {size} exceeds the search bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("json: {0}")]
    Json(String),
}

/// Anything with an evaluable quandle operation and its dual.
pub trait QuandleModel {
    type Elem: Clone + Eq + Hash + fmt::Debug;
    fn op(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn op_inv(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
}

/// A validated finite quandle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuandle {
    n: usize,
    table: Vec<u32>,
    dual: Vec<u32>,
    labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct QuandleJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    v: Option<u32>,
    size: usize,
    table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl FiniteQuandle {
    /// Checks every axiom exhaustively and returns the quandle or the first
    /// violation found (bijectivity, then idempotence, then distributivity).
    pub fn validate(table: Vec<Vec<usize>>) -> Result<FiniteQuandle, QuandleError> {
        let n = table.len();
        if n == 0 {
            return Err(QuandleError::Malformed("empty table".into()));
        }
        if let Some(r) = table.iter().position(|row| row.len() != n) {
            return Err(QuandleError::Malformed(format!("row {r} has wrong length")));
        }
        if table.iter().flatten().any(|&e| e >= n) {
            return Err(QuandleError::Malformed("entry out of range".into()));
        }
        let mut dual = vec![u32::MAX; n * n];
        for y in 0..n {
            for (x, row) in table.iter().enumerate() {
                let z = row[y];
                if dual[z * n + y] != u32::MAX {
                    // x and dual[z][y] collide under S_y
                    return Err(QuandleError::AxiomViolation {
                        axiom: Axiom::RightBijectivity,
                        witness: vec![dual[z * n + y] as usize, x, y],
                    });
                }
                dual[z * n + y] = x as u32;
            }
        }
        for (x, row) in table.iter().enumerate() {
            if row[x] != x {
                return Err(QuandleError::AxiomViolation {
                    axiom: Axiom::Idempotence,
                    witness: vec![x],
                });
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = table[x][y];
                for z in 0..n {
                    if table[xy][z] != table[table[x][z]][table[y][z]] {
                        return Err(QuandleError::AxiomViolation {
                            axiom: Axiom::Distributivity,
                            witness: vec![x, y, z],
                        });
                    }
                }
            }
        }
        let flat = table.into_iter().flatten().map(|e| e as u32).collect();
        Ok(FiniteQuandle {
            n,
            table: flat,
            dual,
            labels: None,
        })
    }

    /// Builds and validates the table of `op` on `{0, …, n-1}`.
    pub fn from_fn(n: usize, op: impl Fn(usize, usize) -> usize) -> Result<FiniteQuandle, QuandleError> {
        let table = (0..n).map(|x| (0..n).map(|y| op(x, y)).collect()).collect();
        FiniteQuandle::validate(table)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    /// Trivial quandle `x * y = x` on `n` elements.
    pub fn trivial(n: usize) -> FiniteQuandle {
        FiniteQuandle::from_fn(n, |x, _| x).expect("trivial quandle")
    }

    /// Dihedral quandle `R_n`: `x * y = 2y - x mod n`.
    pub fn dihedral(n: usize) -> FiniteQuandle {
        FiniteQuandle::from_fn(n, |x, y| (2 * y + n - x) % n).expect("dihedral quandle")
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        self.labels
            .as_ref()
            .map_or_else(|| x.to_string(), |l| l[x].clone())
    }

    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y] as usize
    }

    /// `x *⁻¹ y`: the unique `z` with `z * y = x`.
    pub fn dual_op(&self, x: usize, y: usize) -> usize {
        self.dual[x * self.n + y] as usize
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.n)
            .map(|r| r.iter().map(|&e| e as usize).collect())
            .collect()
    }

    /// `S_y` as an image array.
    pub fn translation(&self, y: usize) -> Vec<usize> {
        (0..self.n).map(|x| self.op(x, y)).collect()
    }

    fn translation_perm(&self, y: usize) -> Permutation {
        Permutation::from_images(self.translation(y)).expect("columns are bijections")
    }

    /// Orbits of `Inn(Q)`, each sorted, ordered by least element.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for x in 0..self.n {
            for y in 0..self.n {
                let a = find(&mut parent, x);
                let b = find(&mut parent, self.op(x, y));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; self.n];
        for x in 0..self.n {
            let r = find(&mut parent, x);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[r]].push(x);
        }
        groups
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Permutation group generated by the right translations.
    pub fn inner_group(&self, cap: usize) -> Result<FiniteGroup, QuandleError> {
        let gens: Vec<Element> = (0..self.n).map(|y| self.translation_perm(y).into()).collect();
        Ok(FiniteGroup::generate(&gens, cap)?)
    }

    /// Least `k` with `S_y^k = id` for all `y`.
    pub fn exponent(&self) -> usize {
        (0..self.n)
            .map(|y| {
                self.translation_perm(y)
                    .cycle_type()
                    .into_iter()
                    .fold(1usize, |a, l| a.lcm(&l))
            })
            .fold(1usize, |a, o| a.lcm(&o))
    }

    pub fn is_involutory(&self) -> bool {
        self.exponent() <= 2
    }

    /// `true` iff `y ↦ S_y` is injective.
    pub fn is_faithful(&self) -> bool {
        let mut seen = HashSet::new();
        (0..self.n).all(|y| seen.insert(self.translation(y)))
    }

    /// First pair (lowest indices) of distinct `x, y` with
    /// `x*y*x = y` and `y*x*y = x`.
    pub fn braid_pair(&self) -> Option<(usize, usize)> {
        for x in 0..self.n {
            for y in 0..self.n {
                if x != y && self.op(self.op(x, y), x) == y && self.op(self.op(y, x), y) == x {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// Closure of `seeds` under `*` and `*⁻¹`, sorted.
    pub fn subquandle_generated(&self, seeds: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.n];
        let mut list: Vec<usize> = Vec::new();
        for &s in seeds {
            if !inside[s] {
                inside[s] = true;
                list.push(s);
            }
        }
        let mut i = 0;
        while i < list.len() {
            let u = list[i];
            for j in 0..=i {
                let v = list[j];
                for w in [self.op(u, v), self.op(v, u), self.dual_op(u, v), self.dual_op(v, u)] {
                    if !inside[w] {
                        inside[w] = true;
                        list.push(w);
                    }
                }
            }
            i += 1;
        }
        list.sort_unstable();
        list
    }

    /// Greedy generating set: repeatedly add the element whose closure gain
    /// is largest, lowest index on ties.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut closure: Vec<usize> = Vec::new();
        while closure.len() < self.n {
            let mut inside = vec![false; self.n];
            for &c in &closure {
                inside[c] = true;
            }
            let mut best: Option<(usize, Vec<usize>)> = None;
            for x in (0..self.n).filter(|&x| !inside[x]) {
                let mut trial = gens.clone();
                trial.push(x);
                let cl = self.subquandle_generated(&trial);
                if best.as_ref().is_none_or(|(_, b)| cl.len() > b.len()) {
                    let full = cl.len() == self.n;
                    best = Some((x, cl));
                    if full {
                        break;
                    }
                }
            }
            let (x, cl) = best.expect("some element lies outside a proper closure");
            gens.push(x);
            closure = cl;
        }
        gens
    }

    /// Direct product with componentwise operation; `(a, b)` has index `a * |Q2| + b`.
    pub fn product(&self, other: &FiniteQuandle) -> FiniteQuandle {
        let m = other.n;
        let mut q = FiniteQuandle::from_fn(self.n * m, |x, y| {
            self.op(x / m, y / m) * m + other.op(x % m, y % m)
        })
        .expect("product of quandles is a quandle");
        if self.labels.is_some() || other.labels.is_some() {
            let labels = (0..self.n * m)
                .map(|i| format!("({},{})", self.label(i / m), other.label(i % m)))
                .collect();
            q = q.with_labels(labels);
        }
        q
    }

    /// Disjoint union; each side acts trivially on the other.
    /// Elements of `other` are shifted by `|self|`.
    pub fn disjoint_union(&self, other: &FiniteQuandle) -> FiniteQuandle {
        let n1 = self.n;
        let mut q = FiniteQuandle::from_fn(n1 + other.n, |x, y| match (x < n1, y < n1) {
            (true, true) => self.op(x, y),
            (false, false) => n1 + other.op(x - n1, y - n1),
            _ => x,
        })
        .expect("disjoint union of quandles is a quandle");
        if self.labels.is_some() || other.labels.is_some() {
            let labels = (0..n1)
                .map(|i| self.label(i))
                .chain((0..other.n).map(|i| other.label(i)))
                .collect();
            q = q.with_labels(labels);
        }
        q
    }

    /// Restriction to a subset closed under `*` (checked).
    pub fn restrict(&self, subset: &[usize]) -> Result<FiniteQuandle, QuandleError> {
        let pos: std::collections::HashMap<usize, usize> =
            subset.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut table = Vec::with_capacity(subset.len());
        for &x in subset {
            let mut row = Vec::with_capacity(subset.len());
            for &y in subset {
                let z = self.op(x, y);
                row.push(*pos.get(&z).ok_or_else(|| QuandleError::Malformed("subset not closed".into()))?);
            }
            table.push(row);
        }
        let mut q = FiniteQuandle::validate(table)?;
        if let Some(l) = &self.labels {
            q = q.with_labels(subset.iter().map(|&x| l[x].clone()).collect());
        }
        Ok(q)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&QuandleJson {
            v: Some(1),
            size: self.n,
            table: self.table(),
            labels: self.labels.clone(),
        })
        .expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<FiniteQuandle, QuandleError> {
        let j: QuandleJson = serde_json::from_str(s).map_err(|e| QuandleError::Json(e.to_string()))?;
        if let Some(v) = j.v {
            if v != 1 {
                return Err(QuandleError::Json(format!("unsupported schema version {v}")));
            }
        }
        if j.size != j.table.len() {
            return Err(QuandleError::Malformed(format!(
                "size {} but {} rows",
                j.size,
                j.table.len()
            )));
        }
        let q = FiniteQuandle::validate(j.table)?;
        match j.labels {
            Some(l) if l.len() == q.n => Ok(q.with_labels(l)),
            Some(_) => Err(QuandleError::Malformed("label count differs from size".into())),
            None => Ok(q),
        }
    }

    /// Table as CSV, header row and column of labels.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("*");
        for y in 0..self.n {
            out.push(',');
            out.push_str(&self.label(y));
        }
        out.push('\n');
        for x in 0..self.n {
            out.push_str(&self.label(x));
            for y in 0..self.n {
                out.push(',');
                out.push_str(&self.label(self.op(x, y)));
            }
            out.push('\n');
        }
        out
    }
}

impl QuandleModel for FiniteQuandle {
    type Elem = usize;

    fn op(&self, x: &usize, y: &usize) -> usize {
        FiniteQuandle::op(self, *x, *y)
    }

    fn op_inv(&self, x: &usize, y: &usize) -> usize {
        self.dual_op(*x, *y)
    }
}
