//! Completion of finitely presented involutory quandles by point enumeration,
//! with presets for the Humphries intersection graphs.

mod engine;
mod humphries;
mod table1;

use std::collections::BTreeSet;

use thiserror::Error;

pub use engine::{complete, Completion, DEFAULT_CAP, TABLE_BOUND};
pub use humphries::{
    closure_sets, quotient_iso_to_homological, verify_lemma_identities, verify_table1, CellMismatch,
    ClosureReport, LemmaInstance, LemmaReport, Table1Report, TableExpr,
};

use crate::freeq::{parse_expr, Alphabet, FreeqParseError, QuandleExpr, QuandleWord};
use crate::homsym::HomError;
use crate::quandles::QuandleError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompletionError {
    #[error("more than {cap} live elements; the presentation may be infinite")]
    CapExceeded { cap: usize },
    #[error("cap {cap} is below the number of generators {generators}")]
    CapTooSmall { cap: usize, generators: usize },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("table mismatch at row {row}, column a_{column}")]
    MismatchedCell { row: String, column: usize },
    #[error("operation requires genus {expected}")]
    WrongGenus { expected: usize },
    #[error(transparent)]
    Quandle(#[from] QuandleError),
    #[error(transparent)]
    Hom(#[from] HomError),
}

/// Simple graph on named vertices; an edge means intersection number one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionGraph {
    names: Vec<String>,
    edges: BTreeSet<(usize, usize)>,
}

impl IntersectionGraph {
    pub fn new(names: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, CompletionError> {
        let n = names.len();
        let distinct: BTreeSet<&String> = names.iter().collect();
        if distinct.len() != n {
            return Err(CompletionError::InvalidGraph("repeated vertex name".into()));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(CompletionError::InvalidGraph(format!("edge ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(CompletionError::InvalidGraph(format!("loop at {}", names[a])));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(IntersectionGraph { names, edges: set })
    }

    /// Humphries generators: the edge `a_0 – a_1` for `g = 1`, the path
    /// `a_0 – ⋯ – a_4` for `g = 2`, and the path `a_1 – ⋯ – a_{2g}` plus
    /// `a_0 – a_4` for `g ≥ 3`.
    pub fn humphries(g: usize) -> Self {
        assert!(g >= 1, "genus must be positive");
        let count = if g == 1 { 2 } else { 2 * g + 1 };
        let names = (0..count).map(|i| format!("a{i}")).collect();
        let edges: Vec<(usize, usize)> = match g {
            1 => vec![(0, 1)],
            2 => (0..4).map(|i| (i, i + 1)).collect(),
            _ => (1..2 * g).map(|i| (i, i + 1)).chain([(0, 4)]).collect(),
        };
        IntersectionGraph::new(names, edges).expect("preset graph")
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }
}

/// Involutory quandle presentation. Involution `x·s·s = x` and idempotence
/// `s·s = s` are implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvPresentation {
    pub generators: Vec<String>,
    /// Equalities of two elements.
    pub point_relations: Vec<(QuandleWord, QuandleWord)>,
    /// `(u, w)` means `x·u = x·w` for every element `x`.
    pub universal_rules: Vec<(Vec<u32>, Vec<u32>)>,
}

fn word(base: usize, ops: &[usize]) -> QuandleWord {
    QuandleWord::new(base as u32, ops.iter().map(|&s| (s as u32, 1)).collect())
}

/// Disjointness and braid relations of the graph: `a*b = a` and
/// `x·a·b = x·b·a` for non-edges, `a*b*a = b` and `x·a·b·a = x·b·a·b` for
/// edges.
pub fn relations_from_graph(graph: &IntersectionGraph) -> InvPresentation {
    let n = graph.len();
    let mut p = InvPresentation {
        generators: graph.names.clone(),
        point_relations: Vec::new(),
        universal_rules: Vec::new(),
    };
    for a in 0..n {
        for b in a + 1..n {
            let (sa, sb) = (a as u32, b as u32);
            if graph.has_edge(a, b) {
                p.point_relations.push((word(a, &[b, a]), word(b, &[])));
                p.point_relations.push((word(b, &[a, b]), word(a, &[])));
                p.universal_rules.push((vec![sa, sb, sa], vec![sb, sa, sb]));
            } else {
                p.point_relations.push((word(a, &[b]), word(a, &[])));
                p.point_relations.push((word(b, &[a]), word(b, &[])));
                p.universal_rules.push((vec![sa, sb], vec![sb, sa]));
            }
        }
    }
    p
}

pub fn humphries(g: usize) -> InvPresentation {
    relations_from_graph(&IntersectionGraph::humphries(g))
}

/// Involutory reading of an expression: `x*(b*w) = x*rev(w)*b*w`, signs ignored.
pub fn involutory_word(e: &QuandleExpr) -> QuandleWord {
    fn go(e: &QuandleExpr) -> (u32, Vec<u32>) {
        match e {
            QuandleExpr::Gen(s) => (*s, Vec::new()),
            QuandleExpr::Op(l, r, _) => {
                let (base, mut ops) = go(l);
                let (b, w) = go(r);
                ops.extend(w.iter().rev());
                ops.push(b);
                ops.extend(&w);
                (base, ops)
            }
        }
    }
    let (base, ops) = go(e);
    QuandleWord::new(base, ops.into_iter().map(|s| (s, 1)).collect())
}

/// Parses a presentation file.
///
/// ```text
/// gens: a b
/// rel: a*b*a = b
/// rule: *a*b*a = *b*a*b
/// ```
///
/// `edge: a b` lines (or `edges: none`) add the relations of the graph on
/// all listed generators. `#` starts a comment.
pub fn parse_presentation(text: &str) -> Result<InvPresentation, CompletionError> {
    let mut alphabet: Option<Alphabet> = None;
    let mut graph_mode = false;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut rels: Vec<(usize, String, String)> = Vec::new();
    let mut rules: Vec<(usize, String, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| CompletionError::Parse { line: line_no, message };
        let (key, rest) = line.split_once(':').ok_or_else(|| err("expected `key: value`".into()))?;
        let rest = rest.trim();
        match key.trim() {
            "gens" => {
                if alphabet.is_some() {
                    return Err(err("duplicate gens line".into()));
                }
                let names: Vec<&str> = rest.split_whitespace().collect();
                if names.is_empty() {
                    return Err(err("no generators".into()));
                }
                if names.iter().any(|n| !n.chars().all(|c| c.is_alphanumeric() || c == '_')) {
                    return Err(err("generator names must be alphanumeric".into()));
                }
                let a = Alphabet::fixed(&names);
                if a.len() != names.len() {
                    return Err(err("repeated generator".into()));
                }
                alphabet = Some(a);
            }
            "edge" => {
                let a = alphabet.as_ref().ok_or_else(|| err("edge before gens".into()))?;
                let ends: Vec<&str> = rest.split_whitespace().collect();
                if ends.len() != 2 {
                    return Err(err("edge needs two generators".into()));
                }
                let look = |n: &str| a.lookup(n).ok_or_else(|| CompletionError::UnknownGenerator(n.to_string()));
                edges.push((line_no, look(ends[0])? as usize, look(ends[1])? as usize));
                graph_mode = true;
            }
            "edges" if rest == "none" => graph_mode = true,
            "rel" | "rule" => {
                let (l, r) = rest.split_once('=').ok_or_else(|| err("expected `=`".into()))?;
                let entry = (line_no, l.trim().to_string(), r.trim().to_string());
                if key.trim() == "rel" {
                    rels.push(entry);
                } else {
                    rules.push(entry);
                }
            }
            other => return Err(err(format!("unknown key {other:?}"))),
        }
    }

    let mut alphabet = alphabet.unwrap_or_default();
    let mut parsed_rels = Vec::new();
    for (line, l, r) in &rels {
        let mut side = |s: &str| {
            parse_expr(s, &mut alphabet).map(|e| involutory_word(&e)).map_err(|e| match e {
                FreeqParseError::UnknownGenerator(n) => CompletionError::UnknownGenerator(n),
                e => CompletionError::Parse {
                    line: *line,
                    message: e.to_string(),
                },
            })
        };
        let lw = side(l)?;
        let rw = side(r)?;
        parsed_rels.push((lw, rw));
    }
    let mut parsed_rules = Vec::new();
    for (line, l, r) in &rules {
        let lw = parse_rule_side(l, *line, &mut alphabet)?;
        let rw = parse_rule_side(r, *line, &mut alphabet)?;
        parsed_rules.push((lw, rw));
    }
    let names: Vec<String> = (0..alphabet.len() as u32).map(|s| alphabet.name(s)).collect();
    if names.is_empty() {
        return Err(CompletionError::Parse {
            line: 0,
            message: "no generators".into(),
        });
    }

    let mut p = if graph_mode {
        let graph = IntersectionGraph::new(names.clone(), edges.iter().map(|&(_, a, b)| (a, b))).map_err(|e| {
            CompletionError::Parse {
                line: edges.first().map_or(0, |e| e.0),
                message: e.to_string(),
            }
        })?;
        relations_from_graph(&graph)
    } else {
        InvPresentation {
            generators: names,
            point_relations: Vec::new(),
            universal_rules: Vec::new(),
        }
    };
    p.point_relations.extend(parsed_rels);
    p.universal_rules.extend(parsed_rules);
    Ok(p)
}

// `*a*b*-c`: a string of operations applied to an arbitrary element
fn parse_rule_side(s: &str, line: usize, alphabet: &mut Alphabet) -> Result<Vec<u32>, CompletionError> {
    let s = s.trim();
    let body = s.strip_prefix('*').ok_or_else(|| CompletionError::Parse {
        line,
        message: format!("rule side {s:?} must start with `*`"),
    })?;
    let mut out = Vec::new();
    for part in body.split('*') {
        let name = part.trim().trim_start_matches('-').trim();
        if name.is_empty() {
            return Err(CompletionError::Parse {
                line,
                message: format!("empty operation in {s:?}"),
            });
        }
        let id = match alphabet.lookup(name) {
            Some(i) => i,
            None => {
                let mut probe = alphabet.clone();
                match parse_expr(name, &mut probe) {
                    Ok(_) => alphabet.intern(name),
                    Err(FreeqParseError::UnknownGenerator(n)) => return Err(CompletionError::UnknownGenerator(n)),
                    Err(e) => {
                        return Err(CompletionError::Parse {
                            line,
                            message: e.to_string(),
                        })
                    }
                }
            }
        };
        out.push(id);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_counts() {
        let p1 = humphries(1);
        assert_eq!(p1.point_relations.len(), 2);
        assert_eq!(p1.universal_rules, vec![(vec![0, 1, 0], vec![1, 0, 1])]);
        let p2 = humphries(2);
        assert_eq!(p2.point_relations.len(), 20);
        let braid = p2.universal_rules.iter().filter(|(u, _)| u.len() == 3).count();
        assert_eq!(braid, 4);
        assert_eq!(p2.universal_rules.len() - braid, 6);
        let p3 = humphries(3);
        assert_eq!(p3.generators.len(), 7);
        assert_eq!(p3.universal_rules.iter().filter(|(u, _)| u.len() == 3).count(), 6);
    }

    #[test]
    fn humphries_edges() {
        let g = IntersectionGraph::humphries(3);
        assert!(g.has_edge(0, 4) && g.has_edge(4, 0) && g.has_edge(1, 2) && g.has_edge(5, 6));
        assert!(!g.has_edge(0, 1) && !g.has_edge(0, 3));
        assert_eq!(g.edges().count(), 6);
        assert!(IntersectionGraph::humphries(2).has_edge(0, 1));
    }

    #[test]
    fn edgeless_graph_is_trivial_presentation() {
        let g = IntersectionGraph::new(vec!["a".into(), "b".into()], []).unwrap();
        let p = relations_from_graph(&g);
        assert_eq!(p.point_relations.len(), 2);
        assert_eq!(p.universal_rules, vec![(vec![0, 1], vec![1, 0])]);
    }

    #[test]
    fn graph_errors() {
        assert!(IntersectionGraph::new(vec!["a".into()], [(0, 0)]).is_err());
        assert!(IntersectionGraph::new(vec!["a".into()], [(0, 1)]).is_err());
        assert!(IntersectionGraph::new(vec!["a".into(), "a".into()], []).is_err());
    }

    #[test]
    fn involutory_reading() {
        let mut a = Alphabet::from_names(["a", "b", "c"]);
        let e = parse_expr("a*(b*c)*-a", &mut a).unwrap();
        assert_eq!(involutory_word(&e), QuandleWord::new(0, vec![(2, 1), (1, 1), (2, 1), (0, 1)]));
    }

    #[test]
    fn parse_file() {
        let text = "# trefoil\ngens: a b\nrel: a*b*a = b\nrel: b*a*b = a\nrule: *a*b*a = *b*a*b\n";
        let p = parse_presentation(text).unwrap();
        assert_eq!(p.generators, vec!["a", "b"]);
        assert_eq!(p.point_relations.len(), 2);
        assert_eq!(p.universal_rules, vec![(vec![0, 1, 0], vec![1, 0, 1])]);

        let g = parse_presentation("gens: a0 a1 a2\nedge: a0 a1\nedge: a1 a2\n").unwrap();
        assert_eq!(g.point_relations.len(), 6);
        let none = parse_presentation("gens: x y\nedges: none\n").unwrap();
        assert_eq!(none.universal_rules.len(), 1);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_presentation("gens: a b\nrel: a*c = a\n"),
            Err(CompletionError::UnknownGenerator(_))
        ));
        assert!(matches!(
            parse_presentation("gens: a\nfoo: a\n"),
            Err(CompletionError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_presentation("gens: a b\nrule: a*b = *b*a\n"),
            Err(CompletionError::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_presentation("edge: a b\n"), Err(CompletionError::Parse { line: 1, .. })));
        assert!(parse_presentation("# nothing\n").is_err());
    }
}
