//! Point enumeration for involutory quandle presentations.
//!
//! Elements are points acted on by the generator involutions `σ_s`
//! (`x ↦ x*s`). Relators are generator strings `r` with `x·r = x` at every
//! point. Universal rules give relators directly; a point relation `u = v`
//! also forces `S_u = S_v`, where `S_{b*w} = σ_{w^R} σ_b σ_w` acts as
//! `z ↦ z·rev(w)·b·w`. Enumeration is HLT-style with deduction on one-step
//! gaps and a coincidence queue. Afterwards every edge `p·s = q` is checked
//! for `S_q = σ_s S_p σ_s`; failures become new relators and enumeration
//! resumes.

use std::collections::{BTreeSet, VecDeque};

use super::{CompletionError, InvPresentation};
use crate::freeq::{parse_expr, Alphabet, FreeqParseError, QuandleWord};
use crate::quandles::{FiniteQuandle, QuandleError};

pub const DEFAULT_CAP: usize = 10_000;

/// Largest completed size for which the full operation table is built.
pub const TABLE_BOUND: usize = 1024;

const NONE: u32 = u32::MAX;

struct Enumerator {
    k: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    witness: Vec<(u32, Vec<u32>)>,
    live: usize,
    cap: usize,
    queue: VecDeque<(u32, u32)>,
}

impl Enumerator {
    fn new(k: usize, cap: usize) -> Self {
        let mut e = Enumerator {
            k,
            table: vec![NONE; k * k],
            parent: (0..k as u32).collect(),
            witness: (0..k as u32).map(|s| (s, Vec::new())).collect(),
            live: k,
            cap,
            queue: VecDeque::new(),
        };
        for s in 0..k {
            e.table[s * k + s] = s as u32;
        }
        e
    }

    fn points(&self) -> usize {
        self.parent.len()
    }

    fn get(&self, p: u32, s: u32) -> u32 {
        self.table[p as usize * self.k + s as usize]
    }

    fn set(&mut self, p: u32, s: u32, q: u32) {
        self.table[p as usize * self.k + s as usize] = q;
        self.table[q as usize * self.k + s as usize] = p;
    }

    fn alive(&self, p: u32) -> bool {
        self.parent[p as usize] == p
    }

    fn find(&mut self, p: u32) -> u32 {
        let mut r = p;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = p;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn define(&mut self, p: u32, s: u32) -> Result<u32, CompletionError> {
        if self.live >= self.cap {
            return Err(CompletionError::CapExceeded { cap: self.cap });
        }
        let q = self.points() as u32;
        self.parent.push(q);
        self.table.extend(std::iter::repeat_n(NONE, self.k));
        let (base, mut ops) = self.witness[p as usize].clone();
        ops.push(s);
        self.witness.push((base, ops));
        self.live += 1;
        self.set(p, s, q);
        Ok(q)
    }

    fn coincide(&mut self, a: u32, b: u32) {
        self.queue.push_back((a, b));
        while let Some((a, b)) = self.queue.pop_front() {
            let (a, b) = (self.find(a), self.find(b));
            if a == b {
                continue;
            }
            let (keep, dead) = (a.min(b), a.max(b));
            self.parent[dead as usize] = keep;
            self.live -= 1;
            if self.witness[dead as usize].1.len() < self.witness[keep as usize].1.len() {
                self.witness.swap(dead as usize, keep as usize);
            }
            for s in 0..self.k as u32 {
                let d = self.get(dead, s);
                if d == NONE {
                    continue;
                }
                self.table[dead as usize * self.k + s as usize] = NONE;
                if d != dead {
                    self.table[d as usize * self.k + s as usize] = NONE;
                }
                let d = if d == dead { keep } else { d };
                let e = self.get(keep, s);
                if e == NONE {
                    self.set(keep, s, d);
                } else {
                    self.queue.push_back((e, d));
                }
            }
        }
    }

    /// Scans `r` at `x`, defining points to close the cycle.
    fn scan_and_fill(&mut self, x: u32, r: &[u32]) -> Result<(), CompletionError> {
        let (mut f, mut i) = (x, 0);
        let (mut b, mut j) = (x, r.len());
        loop {
            while i < j {
                let y = self.get(f, r[i]);
                if y == NONE {
                    break;
                }
                f = y;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincide(f, b);
                }
                return Ok(());
            }
            while j > i {
                let y = self.get(b, r[j - 1]);
                if y == NONE {
                    break;
                }
                b = y;
                j -= 1;
            }
            if i == j {
                self.coincide(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.set(f, r[i], b);
                return Ok(());
            }
            f = self.define(f, r[i])?;
            i += 1;
        }
    }

    fn trace_define(&mut self, w: &QuandleWord) -> Result<u32, CompletionError> {
        let mut p = self.find(w.base);
        for &(s, _) in &w.ops {
            let q = self.get(p, s);
            p = if q == NONE { self.define(p, s)? } else { q };
        }
        Ok(p)
    }

    /// HLT pass over every live point from `start`: scan all relators, then fill the row.
    fn pass(&mut self, relators: &[Vec<u32>], start: usize) -> Result<(), CompletionError> {
        let mut x = start as u32;
        while (x as usize) < self.points() {
            for r in relators {
                if !self.alive(x) {
                    break;
                }
                self.scan_and_fill(x, r)?;
            }
            for s in 0..self.k as u32 {
                if !self.alive(x) {
                    break;
                }
                if self.get(x, s) == NONE {
                    self.define(x, s)?;
                }
            }
            x += 1;
        }
        Ok(())
    }

    fn root(&self, p: u32) -> u32 {
        let mut r = p;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        r
    }

    fn live_points(&self) -> Vec<u32> {
        (0..self.points() as u32).filter(|&p| self.alive(p)).collect()
    }

    /// Relators witnessing an inconsistent translation, if any.
    fn consistency_relators(&self) -> Vec<Vec<u32>> {
        let live = self.live_points();
        let translation = |w: &(u32, Vec<u32>), z: u32| {
            let mut z = z;
            for &s in w.1.iter().rev().chain([&w.0]).chain(&w.1) {
                z = self.get(z, s);
            }
            z
        };
        let mut out = Vec::new();
        let word_of = |w: &(u32, Vec<u32>)| {
            let mut v: Vec<u32> = w.1.iter().rev().copied().collect();
            v.push(w.0);
            v.extend(&w.1);
            v
        };
        for a in 0..self.k as u32 {
            let wp = &self.witness[self.root(a) as usize];
            if live.iter().any(|&z| translation(wp, z) != self.get(z, a)) {
                let mut r = word_of(wp);
                r.push(a);
                out.push(r);
            }
        }
        for &p in &live {
            let wp = &self.witness[p as usize];
            for s in 0..self.k as u32 {
                let q = self.get(p, s);
                let wq = &self.witness[q as usize];
                let ok = live
                    .iter()
                    .all(|&z| translation(wq, z) == self.get(translation(wp, self.get(z, s)), s));
                if !ok {
                    let mut r = word_of(wq);
                    r.push(s);
                    r.extend(word_of(wp));
                    r.push(s);
                    out.push(r);
                }
            }
        }
        out
    }

    fn run(&mut self, p: &InvPresentation) -> Result<Vec<Vec<u32>>, CompletionError> {
        let mut relators = RelatorSet::default();
        for (u, w) in &p.universal_rules {
            let mut r = u.clone();
            r.extend(w.iter().rev());
            relators.insert(r);
        }
        for (u, v) in &p.point_relations {
            let mut r = translation_word(u);
            r.extend(translation_word(v).iter().rev());
            relators.insert(r);
        }
        for (u, v) in &p.point_relations {
            let a = self.trace_define(u)?;
            let b = self.trace_define(v)?;
            self.coincide(a, b);
        }
        self.pass(relators.list(), 0)?;
        loop {
            let mut fresh = Vec::new();
            for r in self.consistency_relators() {
                if let Some(r) = relators.insert(r) {
                    fresh.push(r);
                }
            }
            if fresh.is_empty() {
                return Ok(relators.list().to_vec());
            }
            for x in 0..self.points() as u32 {
                for r in &fresh {
                    if self.alive(x) {
                        self.scan_and_fill(x, r)?;
                    }
                }
            }
            self.pass(relators.list(), 0)?;
        }
    }
}

/// `rev(w)·b·w` for `b*w`.
fn translation_word(w: &QuandleWord) -> Vec<u32> {
    let ops: Vec<u32> = w.ops.iter().map(|&(s, _)| s).collect();
    let mut v: Vec<u32> = ops.iter().rev().copied().collect();
    v.push(w.base);
    v.extend(&ops);
    v
}

/// Relators deduplicated up to rotation and reversal after cancelling `ss`.
#[derive(Default)]
struct RelatorSet {
    seen: BTreeSet<Vec<u32>>,
    list: Vec<Vec<u32>>,
}

impl RelatorSet {
    fn insert(&mut self, r: Vec<u32>) -> Option<Vec<u32>> {
        let r = cyclic_reduce(r);
        if r.is_empty() {
            return None;
        }
        let key = canonical_rotation(&r);
        if !self.seen.insert(key) {
            return None;
        }
        self.list.push(r.clone());
        Some(r)
    }

    fn list(&self) -> &[Vec<u32>] {
        &self.list
    }
}

fn cyclic_reduce(r: Vec<u32>) -> Vec<u32> {
    let mut out: Vec<u32> = Vec::with_capacity(r.len());
    for s in r {
        if out.last() == Some(&s) {
            out.pop();
        } else {
            out.push(s);
        }
    }
    while out.len() >= 2 && out.first() == out.last() {
        out.pop();
        out.remove(0);
    }
    out
}

fn canonical_rotation(r: &[u32]) -> Vec<u32> {
    let n = r.len();
    let rev: Vec<u32> = r.iter().rev().copied().collect();
    let mut best: Option<Vec<u32>> = None;
    for w in [r, &rev[..]] {
        for i in 0..n {
            let cand: Vec<u32> = w[i..].iter().chain(&w[..i]).copied().collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// A completed presentation: the quandle, its generator columns, and a
/// shortest-found witness word for every element.
#[derive(Clone, Debug)]
pub struct Completion {
    names: Vec<String>,
    columns: Vec<Vec<usize>>,
    witnesses: Vec<QuandleWord>,
    generator_elements: Vec<usize>,
    relators: Vec<Vec<u32>>,
    point_relations: Vec<(QuandleWord, QuandleWord)>,
    quandle: FiniteQuandle,
}

/// Enumerates the involutory quandle presented by `p`, stopping with
/// `CapExceeded` once more than `cap` elements are live.
pub fn complete(p: &InvPresentation, cap: usize) -> Result<Completion, CompletionError> {
    let k = p.generators.len();
    if cap < k || k == 0 {
        return Err(CompletionError::CapTooSmall { cap, generators: k });
    }
    let in_range = |w: &QuandleWord| w.base < k as u32 && w.ops.iter().all(|&(s, _)| s < k as u32);
    for (u, v) in &p.point_relations {
        if !in_range(u) || !in_range(v) {
            return Err(CompletionError::UnknownGenerator(format!("index out of range in {u:?} = {v:?}")));
        }
    }
    if p.universal_rules.iter().flat_map(|(u, w)| u.iter().chain(w)).any(|&s| s >= k as u32) {
        return Err(CompletionError::UnknownGenerator("index out of range in a universal rule".into()));
    }

    let mut e = Enumerator::new(k, cap);
    let relators = e.run(p)?;
    let live = e.live_points();
    let mut index = vec![usize::MAX; e.points()];
    for (i, &pt) in live.iter().enumerate() {
        index[pt as usize] = i;
    }
    let columns: Vec<Vec<usize>> = live
        .iter()
        .map(|&pt| (0..k as u32).map(|s| index[e.get(pt, s) as usize]).collect())
        .collect();
    let witnesses: Vec<QuandleWord> = live
        .iter()
        .map(|&pt| {
            let (b, ops) = &e.witness[pt as usize];
            QuandleWord::new(*b, ops.iter().map(|&s| (s, 1)).collect())
        })
        .collect();
    let generator_elements = (0..k as u32).map(|s| index[e.root(s) as usize]).collect();
    let n = live.len();
    if n > TABLE_BOUND {
        return Err(QuandleError::BoundExceeded {
            size: n,
            bound: TABLE_BOUND,
        }
        .into());
    }
    let mut table = vec![vec![0usize; n]; n];
    for (y, w) in witnesses.iter().enumerate() {
        let seq = translation_word(w);
        for (x, row) in table.iter_mut().enumerate() {
            row[y] = seq.iter().fold(x, |z, &s| columns[z][s as usize]);
        }
    }
    let alphabet = Alphabet::from_names(&p.generators);
    let labels = witnesses.iter().map(|w| w.display(&alphabet)).collect();
    let quandle = FiniteQuandle::validate(table)?.with_labels(labels);
    Ok(Completion {
        names: p.generators.clone(),
        columns,
        witnesses,
        generator_elements,
        relators,
        point_relations: p.point_relations.clone(),
        quandle,
    })
}

impl Completion {
    pub fn quandle(&self) -> &FiniteQuandle {
        &self.quandle
    }

    pub fn size(&self) -> usize {
        self.columns.len()
    }

    pub fn generators(&self) -> &[String] {
        &self.names
    }

    /// The element of generator `s`.
    pub fn generator_element(&self, s: usize) -> usize {
        self.generator_elements[s]
    }

    pub fn witness(&self, x: usize) -> &QuandleWord {
        &self.witnesses[x]
    }

    pub fn witnesses(&self) -> &[QuandleWord] {
        &self.witnesses
    }

    /// Relators used by the final enumeration, including discovered ones.
    pub fn relators(&self) -> &[Vec<u32>] {
        &self.relators
    }

    /// `x*s` for a generator `s`.
    pub fn act(&self, x: usize, s: usize) -> usize {
        self.columns[x][s]
    }

    /// Folds a left-associated word through the generator columns; signs are
    /// ignored.
    pub fn evaluate_word(&self, w: &QuandleWord) -> Result<usize, CompletionError> {
        let k = self.names.len() as u32;
        let unknown = |s: u32| CompletionError::UnknownGenerator(format!("generator index {s}"));
        if w.base >= k {
            return Err(unknown(w.base));
        }
        let mut x = self.generator_elements[w.base as usize];
        for &(s, _) in &w.ops {
            if s >= k {
                return Err(unknown(s));
            }
            x = self.columns[x][s as usize];
        }
        Ok(x)
    }

    /// Evaluates `base * s_1 * ⋯` given as generator indices.
    pub fn evaluate_seq(&self, seq: &[usize]) -> Result<usize, CompletionError> {
        let (&base, rest) = seq
            .split_first()
            .ok_or_else(|| CompletionError::UnknownGenerator("empty word".into()))?;
        let w = QuandleWord::new(base as u32, rest.iter().map(|&s| (s as u32, 1)).collect());
        self.evaluate_word(&w)
    }

    /// Parses and evaluates an expression over the generator names.
    pub fn evaluate_str(&self, s: &str) -> Result<usize, CompletionError> {
        let mut a = Alphabet::fixed(&self.names);
        let e = parse_expr(s, &mut a).map_err(|e| match e {
            FreeqParseError::UnknownGenerator(n) => CompletionError::UnknownGenerator(n),
            e => CompletionError::Parse {
                line: 1,
                message: e.to_string(),
            },
        })?;
        let w = super::involutory_word(&e);
        self.evaluate_word(&w)
    }

    /// Re-traces every relator at every element and every point relation
    /// without defining anything; true when all close.
    pub fn retrace_stable(&self) -> bool {
        let n = self.size();
        for r in &self.relators {
            for x in 0..n {
                if r.iter().fold(x, |z, &s| self.columns[z][s as usize]) != x {
                    return false;
                }
            }
        }
        for x in 0..n {
            for s in 0..self.names.len() {
                if self.columns[self.columns[x][s]][s] != x {
                    return false;
                }
            }
        }
        (0..self.names.len()).all(|s| {
            let p = self.generator_elements[s];
            self.columns[p][s] == p
        })
            && self
                .point_relations
                .iter()
                .all(|(u, v)| self.evaluate_word(u).ok() == self.evaluate_word(v).ok())
            && self
                .witnesses
                .iter()
                .enumerate()
                .all(|(x, w)| self.evaluate_word(w).ok() == Some(x))
    }

    /// One `index<TAB>word` line per element.
    pub fn witness_listing(&self) -> String {
        let a = Alphabet::from_names(&self.names);
        self.witnesses
            .iter()
            .enumerate()
            .map(|(i, w)| format!("{i}\t{}\n", w.display(&a)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::completion::{humphries, parse_presentation, relations_from_graph, IntersectionGraph};

    #[test]
    fn reduction_and_rotation() {
        assert_eq!(cyclic_reduce(vec![0, 1, 1, 0]), Vec::<u32>::new());
        assert_eq!(cyclic_reduce(vec![0, 1, 2, 0]), vec![1, 2]);
        assert_eq!(canonical_rotation(&[2, 0, 1]), vec![0, 1, 2]);
        assert_eq!(canonical_rotation(&[1, 0, 2]), vec![0, 1, 2]);
    }

    #[test]
    fn genus_one() {
        let c = complete(&humphries(1), DEFAULT_CAP).unwrap();
        assert_eq!(c.size(), 3);
        let labels = c.quandle().labels().unwrap().to_vec();
        assert_eq!(labels, vec!["a0", "a1", "a0*a1"]);
        assert!(c.retrace_stable());
    }

    #[test]
    fn genus_two_is_chains() {
        let c = complete(&humphries(2), DEFAULT_CAP).unwrap();
        assert_eq!(c.size(), 15);
        let mut hit = BTreeSet::new();
        for m in 0..=4 {
            for n in m..=4 {
                hit.insert(c.evaluate_seq(&(m..=n).collect::<Vec<_>>()).unwrap());
            }
        }
        assert_eq!(hit.len(), 15);
        assert!(c.retrace_stable());
    }

    #[test]
    fn trefoil_presentation_is_r3() {
        let p = parse_presentation("gens: a b\nrel: a*b*a = b\nrel: b*a*b = a\n").unwrap();
        let c = complete(&p, DEFAULT_CAP).unwrap();
        assert_eq!(c.size(), 3);
        assert!(c.quandle().is_isomorphic(&FiniteQuandle::dihedral(3)).unwrap());
    }

    #[test]
    fn edgeless_graph_gives_trivial_quandle() {
        let g = IntersectionGraph::new(vec!["a".into(), "b".into(), "c".into()], []).unwrap();
        let c = complete(&relations_from_graph(&g), 100).unwrap();
        assert!(c.quandle().is_isomorphic(&FiniteQuandle::trivial(3)).unwrap());
    }

    #[test]
    fn free_involutory_on_two_hits_cap() {
        let p = parse_presentation("gens: a b\n").unwrap();
        assert_eq!(complete(&p, 50).unwrap_err(), CompletionError::CapExceeded { cap: 50 });
        assert!(matches!(complete(&p, 1), Err(CompletionError::CapTooSmall { .. })));
    }

    #[test]
    fn homological_identification() {
        for g in 1..=3 {
            let c = complete(&humphries(g), DEFAULT_CAP).unwrap();
            assert_eq!(c.size(), (1 << (2 * g)) - 1);
            assert!(c.quandle().exponent() <= 2);
            assert!(crate::completion::quotient_iso_to_homological(&c, g).unwrap().is_some());
        }
    }

    #[test]
    fn genus_four_hits_cap() {
        assert_eq!(complete(&humphries(4), 300).unwrap_err(), CompletionError::CapExceeded { cap: 300 });
    }

    #[test]
    fn added_relations_never_grow() {
        let base = humphries(2);
        let size = complete(&base, DEFAULT_CAP).unwrap().size();
        for (a, b) in [(0u32, 2u32), (1, 3), (0, 4), (2, 4)] {
            let mut p = base.clone();
            p.point_relations.push((QuandleWord::new(a, vec![(b, 1), (a, 1)]), QuandleWord::new(b, vec![])));
            p.universal_rules.push((vec![a, b, a], vec![b, a, b]));
            let c = complete(&p, DEFAULT_CAP).unwrap();
            assert!(c.size() <= size);
            assert!(c.retrace_stable());
        }
    }

    #[test]
    fn evaluation() {
        let c = complete(&humphries(1), DEFAULT_CAP).unwrap();
        assert_eq!(c.evaluate_str("a0*a1*a1").unwrap(), 0);
        assert_eq!(c.evaluate_str("a1*a1").unwrap(), 1);
        assert_eq!(c.evaluate_str("a0*-a1").unwrap(), c.evaluate_str("a0*a1").unwrap());
        assert_eq!(c.evaluate_str("a0*a1*a0").unwrap(), 1);
        assert!(matches!(c.evaluate_str("a0*a7"), Err(CompletionError::UnknownGenerator(_))));
        assert!(c.witness_listing().starts_with("0\ta0\n"));
    }
}
