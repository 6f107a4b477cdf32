//! Knot diagrams as crossing lists, Wirtinger presentations, colorings by
//! finite quandles, and the trefoil in the torus homology model.

mod torus;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use torus::{
    trefoil_torus_check, trefoil_torus_check_with, two_generator_structure, BurauMatrix, BurauModel, Laurent,
    TorusReport, TwoGeneratorKind, TwoGeneratorReport, TORUS_PROBE_DEPTH,
};

use crate::completion::InvPresentation;
use crate::freeq::QuandleWord;
use crate::quandles::FiniteQuandle;

/// Largest quandle accepted by `coloring_count`.
pub const COLORING_BOUND: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KnotError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("arc {arc}: {message}")]
    InvalidArcUsage { arc: usize, message: String },
    #[error("quandle of size {size} exceeds the coloring bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
}

/// At a crossing, `under_out = under_in * over` for sign `+1` and
/// `under_in *⁻¹ over` for `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Crossing {
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
    pub sign: i8,
}

/// A single-component knot diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagram {
    arcs: usize,
    crossings: Vec<Crossing>,
}

impl Diagram {
    /// Checks that every arc ends exactly once and starts exactly once at an
    /// under-crossing; with no crossings there must be a single arc.
    pub fn new(arcs: usize, crossings: Vec<Crossing>) -> Result<Self, KnotError> {
        if arcs == 0 {
            return Err(KnotError::InvalidArcUsage {
                arc: 0,
                message: "a diagram needs at least one arc".into(),
            });
        }
        if crossings.is_empty() && arcs != 1 {
            return Err(KnotError::InvalidArcUsage {
                arc: 1,
                message: "a diagram without crossings has exactly one arc".into(),
            });
        }
        let mut ins = vec![0usize; arcs];
        let mut outs = vec![0usize; arcs];
        for c in &crossings {
            for a in [c.over, c.under_in, c.under_out] {
                if a >= arcs {
                    return Err(KnotError::InvalidArcUsage {
                        arc: a,
                        message: format!("out of range for {arcs} arcs"),
                    });
                }
            }
            if c.sign != 1 && c.sign != -1 {
                return Err(KnotError::InvalidArcUsage {
                    arc: c.under_in,
                    message: "crossing sign must be ±1".into(),
                });
            }
            ins[c.under_in] += 1;
            outs[c.under_out] += 1;
        }
        if !crossings.is_empty() {
            for a in 0..arcs {
                if ins[a] != 1 || outs[a] != 1 {
                    return Err(KnotError::InvalidArcUsage {
                        arc: a,
                        message: format!("used {} times as incoming and {} times as outgoing under-arc", ins[a], outs[a]),
                    });
                }
            }
            let mut next = vec![0usize; arcs];
            for c in &crossings {
                next[c.under_in] = c.under_out;
            }
            let (mut a, mut steps) = (next[0], 1);
            while a != 0 {
                a = next[a];
                steps += 1;
            }
            if steps != arcs {
                return Err(KnotError::InvalidArcUsage {
                    arc: 0,
                    message: "the under-arcs form more than one component".into(),
                });
            }
        }
        Ok(Diagram { arcs, crossings })
    }

    pub fn unknot() -> Self {
        Diagram {
            arcs: 1,
            crossings: Vec::new(),
        }
    }

    /// The standard positive trefoil.
    pub fn trefoil() -> Self {
        parse_diagram("c 1 0 2 +\nc 2 1 0 +\nc 0 2 1 +\n").expect("trefoil diagram")
    }

    pub fn figure_eight() -> Self {
        parse_diagram("c 0 1 2 +\nc 2 3 0 +\nc 1 2 3 -\nc 3 0 1 -\n").expect("figure-eight diagram")
    }

    pub fn arcs(&self) -> usize {
        self.arcs
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// The same diagram with arc `a` renamed `perm[a]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, KnotError> {
        let crossings = self
            .crossings
            .iter()
            .map(|c| Crossing {
                over: perm[c.over],
                under_in: perm[c.under_in],
                under_out: perm[c.under_out],
                sign: c.sign,
            })
            .collect();
        Diagram::new(self.arcs, crossings)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("arcs {}\n", self.arcs);
        for c in &self.crossings {
            let sign = if c.sign > 0 { '+' } else { '-' };
            s.push_str(&format!("c {} {} {} {sign}\n", c.over, c.under_in, c.under_out));
        }
        s
    }
}

/// Parses `c <over> <under_in> <under_out> <+|->` lines, an optional
/// `arcs <n>` line, and `#` comments.
pub fn parse_diagram(text: &str) -> Result<Diagram, KnotError> {
    let mut arcs: Option<usize> = None;
    let mut crossings = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let err = |message: String| KnotError::Parse { line, message };
        let fields: Vec<&str> = body.split_whitespace().collect();
        let num = |s: &str| s.parse::<usize>().map_err(|_| err(format!("{s:?} is not an arc index")));
        match fields[0] {
            "arcs" if fields.len() == 2 => {
                if arcs.is_some() {
                    return Err(err("duplicate arcs line".into()));
                }
                arcs = Some(num(fields[1])?);
            }
            "c" if fields.len() == 5 => {
                let sign = match fields[4] {
                    "+" | "+1" => 1,
                    "-" | "-1" => -1,
                    s => return Err(err(format!("bad sign {s:?}"))),
                };
                crossings.push(Crossing {
                    over: num(fields[1])?,
                    under_in: num(fields[2])?,
                    under_out: num(fields[3])?,
                    sign,
                });
            }
            _ => return Err(err(format!("expected `c <over> <in> <out> <sign>` or `arcs <n>`, got {body:?}"))),
        }
    }
    let arcs = arcs.unwrap_or_else(|| {
        crossings
            .iter()
            .map(|c| c.over.max(c.under_in).max(c.under_out) + 1)
            .max()
            .unwrap_or(1)
    });
    Diagram::new(arcs, crossings)
}

/// Arcs as generators, one relation per crossing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WirtingerPresentation {
    pub generators: usize,
    pub relations: Vec<Crossing>,
}

impl WirtingerPresentation {
    /// The involutory quotient: signs are dropped.
    pub fn to_involutory(&self) -> InvPresentation {
        InvPresentation {
            generators: (0..self.generators).map(|a| format!("x{a}")).collect(),
            point_relations: self
                .relations
                .iter()
                .map(|c| {
                    (
                        QuandleWord::new(c.under_in as u32, vec![(c.over as u32, 1)]),
                        QuandleWord::new(c.under_out as u32, vec![]),
                    )
                })
                .collect(),
            universal_rules: Vec::new(),
        }
    }
}

impl fmt::Display for WirtingerPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (0..self.generators).map(|a| format!("x{a}")).collect();
        writeln!(f, "generators: {}", gens.join(" "))?;
        for c in &self.relations {
            let op = if c.sign > 0 { "*" } else { "*-" };
            writeln!(f, "x{} = x{}{op}x{}", c.under_out, c.under_in, c.over)?;
        }
        Ok(())
    }
}

pub fn wirtinger_presentation(d: &Diagram) -> WirtingerPresentation {
    WirtingerPresentation {
        generators: d.arcs,
        relations: d.crossings.clone(),
    }
}

fn crossing_holds(q: &FiniteQuandle, c: &Crossing, color: &[usize]) -> bool {
    let out = if c.sign > 0 {
        q.op(color[c.under_in], color[c.over])
    } else {
        q.dual_op(color[c.under_in], color[c.over])
    };
    out == color[c.under_out]
}

/// Number of arc colorings by `q` satisfying every crossing relation.
pub fn coloring_count(d: &Diagram, q: &FiniteQuandle) -> Result<u64, KnotError> {
    let mut count = 0u64;
    for_each_coloring(d, q, &mut |_| count += 1)?;
    Ok(count)
}

/// All colorings in lexicographic order.
pub fn colorings(d: &Diagram, q: &FiniteQuandle) -> Result<Vec<Vec<usize>>, KnotError> {
    let mut out = Vec::new();
    for_each_coloring(d, q, &mut |c| out.push(c.to_vec()))?;
    out.sort();
    Ok(out)
}

fn for_each_coloring(d: &Diagram, q: &FiniteQuandle, visit: &mut dyn FnMut(&[usize])) -> Result<(), KnotError> {
    let n = q.size();
    if n > COLORING_BOUND {
        return Err(KnotError::BoundExceeded {
            size: n,
            bound: COLORING_BOUND,
        });
    }
    if d.arcs < 4 && n <= 64 {
        let mut color = vec![0usize; d.arcs];
        loop {
            if d.crossings.iter().all(|c| crossing_holds(q, c, &color)) {
                visit(&color);
            }
            let mut i = 0;
            loop {
                if i == d.arcs {
                    return Ok(());
                }
                color[i] += 1;
                if color[i] < n {
                    break;
                }
                color[i] = 0;
                i += 1;
            }
        }
    }
    let color: Vec<Option<usize>> = vec![None; d.arcs];
    backtrack(d, q, &color, visit);
    Ok(())
}

// fills forced arcs; false on a contradiction
fn propagate(d: &Diagram, q: &FiniteQuandle, color: &mut [Option<usize>]) -> bool {
    loop {
        let mut changed = false;
        for c in &d.crossings {
            let (o, i, u) = (color[c.over], color[c.under_in], color[c.under_out]);
            match (o, i, u) {
                (Some(o), Some(i), u) => {
                    let v = if c.sign > 0 { q.op(i, o) } else { q.dual_op(i, o) };
                    match u {
                        Some(u) if u != v => return false,
                        Some(_) => {}
                        None => {
                            color[c.under_out] = Some(v);
                            changed = true;
                        }
                    }
                }
                (Some(o), None, Some(u)) => {
                    let v = if c.sign > 0 { q.dual_op(u, o) } else { q.op(u, o) };
                    color[c.under_in] = Some(v);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            return true;
        }
    }
}

fn backtrack(d: &Diagram, q: &FiniteQuandle, color: &[Option<usize>], visit: &mut dyn FnMut(&[usize])) {
    let Some(a) = color.iter().position(Option::is_none) else {
        let full: Vec<usize> = color.iter().map(|c| c.expect("assigned")).collect();
        if d.crossings.iter().all(|c| crossing_holds(q, c, &full)) {
            visit(&full);
        }
        return;
    };
    for v in 0..q.size() {
        let mut next = color.to_vec();
        next[a] = Some(v);
        if propagate(d, q, &mut next) {
            backtrack(d, q, &next, visit);
        }
    }
}
