//! Checks on the completed genus-three quotient: the chain identities, the
//! products table of the closure set, the closure set itself, and the
//! identification with the mod-2 homological quandle.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::table1::TABLE1;
use super::{Completion, CompletionError};
use crate::homsym::hquandle;

/// Vertices of the tree `Γ_{1,6}` as `(name, parent, label)`, root `x0`.
/// `x_{i,j}` and `y_{i,j}` carry label `a_i`.
const GAMMA: [(&str, &str, usize); 16] = [
    ("x01", "x0", 0),
    ("x41", "x01", 4),
    ("y31", "x41", 3),
    ("y21", "y31", 2),
    ("y51", "y21", 5),
    ("x42", "y51", 4),
    ("x31", "x42", 3),
    ("x02", "x31", 0),
    ("x43", "x02", 4),
    ("x51", "x43", 5),
    ("x61", "x51", 6),
    ("x03", "x42", 0),
    ("y52", "y31", 5),
    ("x44", "y52", 4),
    ("x04", "x44", 0),
    ("y53", "x41", 5),
];

/// `c_{m,n} = a_m*⋯*a_n` as generator indices.
fn chain(m: usize, n: usize) -> Vec<usize> {
    (m..=n).collect()
}

fn gamma_entry(v: &str) -> Option<&'static (&'static str, &'static str, usize)> {
    GAMMA.iter().find(|e| e.0 == v)
}

/// Path labels from the root to `v` in `Γ_{m,n}`, or `None` when `v` is
/// removed: a vertex `y_{i,j}` with `i ∈ {m, n}` removes its whole branch.
fn gamma_path(m: usize, n: usize, v: &str) -> Option<Vec<usize>> {
    let mut labels = Vec::new();
    let mut cur = v;
    while cur != "x0" {
        let &(name, parent, label) = gamma_entry(cur)?;
        if name.starts_with('y') && (label == m || label == n) {
            return None;
        }
        labels.push(label);
        cur = parent;
    }
    labels.reverse();
    Some(labels)
}

/// Vertices of `Γ_{m,n}` other than the root, in the order listed above.
fn gamma_vertices(m: usize, n: usize) -> Vec<&'static str> {
    GAMMA.iter().map(|e| e.0).filter(|v| gamma_path(m, n, v).is_some()).collect()
}

/// An entry of the products table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableExpr {
    /// `c_{m,n}`
    C(usize, usize),
    /// `c_{m,n} * a_0`
    CA0(usize, usize),
    /// `f_{m,n}(v) = c_{m,n} * f(v_1) * ⋯ * f(v)`
    F(usize, usize, &'static str),
}

impl TableExpr {
    /// The generator sequence of the expression, or `None` if `v ∉ Γ_{m,n}`.
    pub fn sequence(&self) -> Option<Vec<usize>> {
        match *self {
            TableExpr::C(m, n) => Some(chain(m, n)),
            TableExpr::CA0(m, n) => Some(chain(m, n).into_iter().chain([0]).collect()),
            TableExpr::F(m, n, v) => {
                let mut s = chain(m, n);
                s.extend(gamma_path(m, n, v)?);
                Some(s)
            }
        }
    }
}

impl fmt::Display for TableExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableExpr::C(m, n) => write!(f, "c_{{{m},{n}}}"),
            TableExpr::CA0(m, n) => write!(f, "c_{{{m},{n}}}*a_0"),
            TableExpr::F(m, n, v) => {
                let (kind, rest) = v.split_at(1);
                let (i, j) = rest.split_at(1);
                write!(f, "f_{{{m},{n}}}({kind}_{{{i},{j}}})")
            }
        }
    }
}

fn ensure_genus_three(c: &Completion) -> Result<(), CompletionError> {
    if c.generators().len() != 7 {
        return Err(CompletionError::WrongGenus { expected: 3 });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaInstance {
    pub name: String,
    /// Label of `x` for identities quantified over all elements.
    pub x: Option<String>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub instances: Vec<LemmaInstance>,
}

impl LemmaReport {
    pub fn all_hold(&self) -> bool {
        self.instances.iter().all(|i| i.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LemmaInstance> {
        self.instances.iter().filter(|i| !i.holds)
    }
}

fn desc(from: usize, to: usize) -> Vec<usize> {
    if from < to {
        Vec::new()
    } else {
        (to..=from).rev().collect()
    }
}

fn asc(from: usize, to: usize) -> Vec<usize> {
    if from > to {
        Vec::new()
    } else {
        (from..=to).collect()
    }
}

fn cat(parts: &[&[usize]]) -> Vec<usize> {
    parts.concat()
}

/// Evaluates both sides of the genus-three chain identities:
///
/// 1(i) `x·(a_3⋯a_m)(a_4⋯a_m) = x·(a_4⋯a_m)(a_4⋯a_{m+1})` for `m = 1,2,3`;
/// 1(ii) `x·(a_5⋯a_n)(a_4⋯a_n) = x·(a_4⋯a_n)(a_4⋯a_{n-1})` for `n = 5,6`;
/// at every element `x`, and for `c = c_{m,n}` with `m ≤ 3`, `n ∈ {5,6}`:
/// 2(i) `c·a_0 a_4 a_0 = c·a_0 a_4`;
/// 2(ii) `c·a_0 a_4 (a_3⋯a_m) = c·a_0 a_4 (a_3⋯a_{m+1})`;
/// 2(iii) `c·a_0 a_4 (a_5⋯a_n) = c·a_0 a_4 (a_5⋯a_{n-1})`.
pub fn verify_lemma_identities(c: &Completion) -> Result<LemmaReport, CompletionError> {
    ensure_genus_three(c)?;
    let q = c.quandle();
    let apply = |x: usize, ops: &[usize]| ops.iter().fold(x, |z, &s| c.act(z, s));
    let mut instances = Vec::new();
    for x in 0..c.size() {
        for m in 1..=3 {
            let lhs = cat(&[&desc(3, m), &desc(4, m)]);
            let rhs = cat(&[&desc(4, m), &desc(4, m + 1)]);
            instances.push(LemmaInstance {
                name: format!("1(i) m={m}"),
                x: Some(q.label(x)),
                holds: apply(x, &lhs) == apply(x, &rhs),
            });
        }
        for n in 5..=6 {
            let lhs = cat(&[&asc(5, n), &asc(4, n)]);
            let rhs = cat(&[&asc(4, n), &asc(4, n - 1)]);
            instances.push(LemmaInstance {
                name: format!("1(ii) n={n}"),
                x: Some(q.label(x)),
                holds: apply(x, &lhs) == apply(x, &rhs),
            });
        }
    }
    for m in 1..=3 {
        for n in 5..=6 {
            let cmn = c.evaluate_seq(&chain(m, n))?;
            let sides = [
                ("2(i)", vec![0, 4, 0], vec![0, 4]),
                ("2(ii)", cat(&[&[0, 4], &desc(3, m)]), cat(&[&[0, 4], &desc(3, m + 1)])),
                ("2(iii)", cat(&[&[0, 4], &asc(5, n)]), cat(&[&[0, 4], &asc(5, n - 1)])),
            ];
            for (name, lhs, rhs) in sides {
                instances.push(LemmaInstance {
                    name: format!("{name} m={m} n={n}"),
                    x: None,
                    holds: apply(cmn, &lhs) == apply(cmn, &rhs),
                });
            }
        }
    }
    Ok(LemmaReport { instances })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellMismatch {
    pub row: String,
    pub column: usize,
    pub expected: String,
    pub computed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Report {
    pub rows: usize,
    pub cells_checked: usize,
    pub mismatches: Vec<CellMismatch>,
}

impl Table1Report {
    pub fn all_match(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// `MismatchedCell` for the first mismatch.
    pub fn ensure(&self) -> Result<(), CompletionError> {
        match self.mismatches.first() {
            None => Ok(()),
            Some(m) => Err(CompletionError::MismatchedCell {
                row: m.row.clone(),
                column: m.column,
            }),
        }
    }
}

/// Evaluates `row * a_i` for every row and column of the products table
/// and compares with the tabulated entry.
pub fn verify_table1(c: &Completion) -> Result<Table1Report, CompletionError> {
    ensure_genus_three(c)?;
    let q = c.quandle();
    let eval = |e: &TableExpr| -> Result<usize, CompletionError> {
        let seq = e.sequence().ok_or_else(|| CompletionError::MismatchedCell {
            row: e.to_string(),
            column: 0,
        })?;
        c.evaluate_seq(&seq)
    };
    let mut report = Table1Report {
        rows: TABLE1.len(),
        cells_checked: 0,
        mismatches: Vec::new(),
    };
    for (row, cells) in TABLE1.iter() {
        let x = eval(row)?;
        for (i, cell) in cells.iter().enumerate() {
            report.cells_checked += 1;
            let got = c.act(x, i);
            let want = eval(cell)?;
            if got != want {
                report.mismatches.push(CellMismatch {
                    row: row.to_string(),
                    column: i,
                    expected: cell.to_string(),
                    computed: q.label(got),
                });
            }
        }
    }
    Ok(report)
}

/// Sizes of the closure sets `A = {c_{m,n}}`, `B` and `C = ⋃ C_{m,n}` as
/// evaluated in the completed quandle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    /// Distinct elements of `A ∪ B ∪ C`.
    pub union: usize,
    pub quandle_size: usize,
    /// `x * a_i ∈ A ∪ B ∪ C` for every `x` in the union and every `i`.
    pub closed: bool,
}

impl ClosureReport {
    pub fn covers(&self) -> bool {
        self.closed && self.union == self.quandle_size
    }
}

pub fn closure_sets(c: &Completion) -> Result<ClosureReport, CompletionError> {
    ensure_genus_three(c)?;
    let mut a = BTreeSet::new();
    for m in 1..=6 {
        for n in m..=6 {
            a.insert(c.evaluate_seq(&chain(m, n))?);
        }
    }
    let mut b_words = vec![vec![0], vec![4, 0]];
    b_words.extend((1..=3).map(|m| cat(&[&chain(m, 4), &[0]])));
    b_words.extend((5..=6).map(|n| cat(&[&chain(4, n), &[0]])));
    let mut b = BTreeSet::new();
    for w in &b_words {
        b.insert(c.evaluate_seq(w)?);
    }
    let mut cs = BTreeSet::new();
    for m in 1..=3 {
        for n in 5..=6 {
            for v in gamma_vertices(m, n) {
                let seq = TableExpr::F(m, n, v).sequence().expect("vertex in graph");
                cs.insert(c.evaluate_seq(&seq)?);
            }
        }
    }
    let union: BTreeSet<usize> = a.iter().chain(&b).chain(&cs).copied().collect();
    let closed = union.iter().all(|&x| (0..7).all(|i| union.contains(&c.act(x, i))));
    Ok(ClosureReport {
        a: a.len(),
        b: b.len(),
        c: cs.len(),
        union: union.len(),
        quandle_size: c.size(),
        closed,
    })
}

/// An isomorphism from the completed quandle onto the mod-2 homological
/// quandle of genus `g`, if one exists.
pub fn quotient_iso_to_homological(c: &Completion, g: usize) -> Result<Option<Vec<usize>>, CompletionError> {
    let (p, _) = hquandle(g, 2)?;
    Ok(c.quandle().find_isomorphism(&p)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::completion::{complete, humphries, DEFAULT_CAP};

    #[test]
    fn gamma_subgraph_sizes() {
        let sizes: Vec<usize> = [(1, 5), (1, 6), (2, 5), (2, 6), (3, 5), (3, 6)]
            .iter()
            .map(|&(m, n)| gamma_vertices(m, n).len())
            .collect();
        assert_eq!(sizes, vec![4, 16, 3, 7, 2, 3]);
        assert_eq!(sizes.iter().sum::<usize>(), 35);
        assert_eq!(gamma_vertices(3, 6), vec!["x01", "x41", "y53"]);
    }

    #[test]
    fn table_rows_cover_the_graphs() {
        let rows: Vec<TableExpr> = TABLE1.iter().map(|r| r.0).collect();
        for &(m, n) in &[(1, 5), (1, 6), (2, 5), (2, 6), (3, 5), (3, 6)] {
            for v in gamma_vertices(m, n) {
                assert!(rows.contains(&TableExpr::F(m, n, v)), "missing row f_{m},{n}({v})");
            }
        }
        for (_, cells) in TABLE1.iter() {
            for cell in cells {
                assert!(cell.sequence().is_some(), "{cell} is not a vertex");
            }
        }
    }

    #[test]
    fn expression_words() {
        assert_eq!(TableExpr::F(1, 6, "x43").sequence().unwrap(), vec![1, 2, 3, 4, 5, 6, 0, 4, 3, 2, 5, 4, 3, 0, 4]);
        assert_eq!(TableExpr::F(2, 6, "x04").sequence().unwrap(), vec![2, 3, 4, 5, 6, 0, 4, 3, 5, 4, 0]);
        assert_eq!(TableExpr::F(1, 5, "y51").sequence(), None);
        assert_eq!(TableExpr::F(1, 5, "y21").to_string(), "f_{1,5}(y_{2,1})");
        assert_eq!(TableExpr::CA0(1, 4).to_string(), "c_{1,4}*a_0");
    }

    #[test]
    fn genus_three_checks() {
        let c = complete(&humphries(3), DEFAULT_CAP).unwrap();
        assert_eq!(c.size(), 63);
        let r = verify_table1(&c).unwrap();
        assert_eq!(r.cells_checked, 245);
        assert!(r.all_match(), "{:?}", r.mismatches);
        let l = verify_lemma_identities(&c).unwrap();
        assert!(l.all_hold());
        assert_eq!(l.instances.len(), 63 * 5 + 18);
        let cl = closure_sets(&c).unwrap();
        assert_eq!((cl.a, cl.b, cl.c, cl.union), (21, 7, 35, 63));
        assert!(cl.covers());
    }

    #[test]
    fn wrong_genus_rejected() {
        let c = complete(&humphries(1), DEFAULT_CAP).unwrap();
        assert_eq!(verify_table1(&c).unwrap_err(), CompletionError::WrongGenus { expected: 3 });
        assert!(quotient_iso_to_homological(&c, 1).unwrap().is_some());
    }
}
