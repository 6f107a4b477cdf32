//! Text format for generators: one per line, permutations in cycle notation
//! `(0 1)(2 3)`, matrices as `mod=3; 1 1 / 0 1` with rows slash-separated.
//! Blank lines and `#` comments are ignored. An optional `degree=N` line
//! fixes the permutation degree; otherwise it is the largest point plus one.

use super::{Element, GroupError, MatModN, Permutation};

enum Raw {
    Cycles(Vec<Vec<usize>>),
    Mat(MatModN),
}

fn perr(line: usize, msg: impl Into<String>) -> GroupError {
    GroupError::Parse { line, msg: msg.into() }
}

fn parse_cycles(s: &str, line: usize) -> Result<Vec<Vec<usize>>, GroupError> {
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(perr(line, format!("expected '(' at {rest:?}")));
        };
        let close = body.find(')').ok_or_else(|| perr(line, "unclosed cycle"))?;
        let points = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| perr(line, format!("bad point {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

fn parse_matrix(s: &str, line: usize) -> Result<MatModN, GroupError> {
    let (head, body) = s.split_once(';').ok_or_else(|| perr(line, "expected 'mod=N; rows'"))?;
    let modulus = head
        .trim()
        .strip_prefix("mod=")
        .and_then(|m| m.trim().parse::<u32>().ok())
        .ok_or_else(|| perr(line, "bad modulus"))?;
    let rows = body
        .split('/')
        .map(|r| {
            r.split_whitespace()
                .map(|t| t.parse::<i64>().map_err(|_| perr(line, format!("bad entry {t:?}"))))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    MatModN::new(modulus, rows).map_err(|e| perr(line, e.to_string()))
}

fn parse_raw(s: &str, line: usize) -> Result<Raw, GroupError> {
    let s = s.trim();
    if s.starts_with("mod=") {
        parse_matrix(s, line).map(Raw::Mat)
    } else if s.starts_with('(') {
        parse_cycles(s, line).map(Raw::Cycles)
    } else {
        Err(perr(line, format!("unrecognised element {s:?}")))
    }
}

fn max_point(cycles: &[Vec<usize>]) -> Option<usize> {
    cycles.iter().flatten().copied().max()
}

/// Parses a single element literal. Permutations need a degree unless the
/// cycles themselves determine one.
pub fn parse_element(s: &str, degree: Option<usize>) -> Result<Element, GroupError> {
    match parse_raw(s, 1)? {
        Raw::Mat(m) => Ok(m.into()),
        Raw::Cycles(c) => {
            let d = degree.unwrap_or_else(|| max_point(&c).map_or(1, |m| m + 1));
            Permutation::from_cycles(d, &c)
                .map(Into::into)
                .map_err(|e| perr(1, e.to_string()))
        }
    }
}

/// Parses a generator file. Returns the generators and the permutation
/// degree in force (if any permutations were present).
pub fn parse_generators(text: &str) -> Result<(Vec<Element>, Option<usize>), GroupError> {
    let mut degree: Option<usize> = None;
    let mut raws = Vec::new();
    for (i, l) in text.lines().enumerate() {
        let line = i + 1;
        let l = l.split('#').next().unwrap_or("").trim();
        if l.is_empty() {
            continue;
        }
        if let Some(d) = l.strip_prefix("degree=") {
            degree = Some(d.trim().parse().map_err(|_| perr(line, "bad degree"))?);
            continue;
        }
        raws.push((line, parse_raw(l, line)?));
    }
    let inferred = raws
        .iter()
        .filter_map(|(_, r)| match r {
            Raw::Cycles(c) => Some(max_point(c).map_or(1, |m| m + 1)),
            Raw::Mat(_) => None,
        })
        .max();
    let degree = degree.or(inferred);
    let gens = raws
        .into_iter()
        .map(|(line, r)| match r {
            Raw::Mat(m) => Ok(m.into()),
            Raw::Cycles(c) => Permutation::from_cycles(degree.unwrap_or(1), &c)
                .map(Into::into)
                .map_err(|e| perr(line, e.to_string())),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if gens.is_empty() {
        return Err(GroupError::NoGenerators);
    }
    Ok((gens, degree))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_and_degree() {
        let (g, d) = parse_generators("# S4\n(0 1)\n(1 2)(0 3)\n").unwrap();
        assert_eq!(d, Some(4));
        assert_eq!(g.len(), 2);
        let (g, d) = parse_generators("degree=5\n(0 1)\n").unwrap();
        assert_eq!(d, Some(5));
        assert_eq!(g[0].as_perm().unwrap().degree(), 5);
    }

    #[test]
    fn matrices() {
        let (g, _) = parse_generators("mod=3; 1 1 / 0 1\nmod=3; 1 0 / 1 1").unwrap();
        assert_eq!(g[1].as_mat().unwrap().rows(), vec![vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_generators("(0 1)\n\n(0 x)").unwrap_err();
        assert!(matches!(err, GroupError::Parse { line: 3, .. }));
        assert!(parse_generators("mod=4; 2 0 / 0 1").is_err());
        assert_eq!(parse_generators("# nothing\n").unwrap_err(), GroupError::NoGenerators);
    }

    #[test]
    fn single_element_literal() {
        let e = parse_element("(0 2)", Some(3)).unwrap();
        assert_eq!(e.as_perm().unwrap().images(), vec![2, 1, 0]);
        let e = parse_element("()", Some(3)).unwrap();
        assert!(e.is_identity());
    }
}
