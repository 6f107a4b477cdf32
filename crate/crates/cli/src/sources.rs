use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use dehnkit::constructions::{conj_quandle, core_quandle};
use dehnkit::groups::{parse_generators, Element, FiniteGroup, MatModN};
use dehnkit::homsym::{hquandle, sp_group_with_cap};
use dehnkit::quandles::{FiniteQuandle, QuandleError};

use crate::report::{usage, UsageError};

pub const CAP_VAR: &str = "DEHNKIT_CAP";

/// `default`, unless `DEHNKIT_CAP` is set.
pub fn cap(default: usize) -> Result<usize, UsageError> {
    match std::env::var(CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(format!("{CAP_VAR} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(default),
    }
}

pub fn read(path: &Path) -> Result<String, UsageError> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn num<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, UsageError> {
    s.trim().parse().map_err(|_| usage(format!("bad {what} {s:?}")))
}

#[derive(Args, Debug, Clone)]
pub struct GroupSource {
    /// cyclic:N, sym:N, dihedral:N, sl2:P or sp:G:Q
    #[arg(long, conflicts_with = "gens")]
    pub preset: Option<String>,
    /// Generator file: one element per line, cycles `(0 1 2)` or `mod=P; a b / c d`
    #[arg(long)]
    pub gens: Option<PathBuf>,
}

impl GroupSource {
    pub fn load(&self) -> Result<FiniteGroup, UsageError> {
        match (&self.preset, &self.gens) {
            (Some(p), _) => group_preset(p),
            (None, Some(path)) => {
                let (gens, _) = parse_generators(&read(path)?)?;
                Ok(FiniteGroup::generate(&gens, cap(dehnkit::groups::DEFAULT_CAP)?)?)
            }
            (None, None) => Err(usage("a group needs --preset or --gens")),
        }
    }
}

pub fn group_preset(spec: &str) -> Result<FiniteGroup, UsageError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let group_cap = cap(dehnkit::groups::DEFAULT_CAP)?;
    match parts.as_slice() {
        ["cyclic", n] => {
            let n: usize = num(n, "order")?;
            if n == 0 {
                return Err(usage("cyclic order must be positive"));
            }
            Ok(FiniteGroup::cyclic(n))
        }
        ["sym", n] => {
            let n: usize = num(n, "degree")?;
            if n == 0 || n > 8 {
                return Err(usage("sym degree must be in 1..=8"));
            }
            Ok(FiniteGroup::symmetric(n))
        }
        ["dihedral", n] => {
            let n: usize = num(n, "polygon size")?;
            if n < 3 {
                return Err(usage("dihedral:N needs N >= 3"));
            }
            Ok(FiniteGroup::dihedral(n))
        }
        ["sl2", p] => {
            let p: u32 = num(p, "modulus")?;
            if p < 2 {
                return Err(usage("sl2 modulus must be at least 2"));
            }
            let a: Element = MatModN::new(p, vec![vec![1, 1], vec![0, 1]])?.into();
            let b: Element = MatModN::new(p, vec![vec![1, 0], vec![1, 1]])?.into();
            Ok(FiniteGroup::generate(&[a, b], group_cap)?)
        }
        ["sp", g, q] => Ok(sp_group_with_cap(num(g, "genus")?, num(q, "modulus")?, group_cap)?),
        _ => Err(usage(format!("unknown group preset {spec:?}"))),
    }
}

#[derive(Args, Debug, Clone)]
pub struct QuandleSource {
    /// JSON table file
    #[arg(long = "in", conflicts_with = "preset")]
    pub input: Option<PathBuf>,
    /// trivial:N, dihedral:N, alexander:N:T, hom:G:N, conj:GROUP, core:GROUP
    /// (GROUP is any group preset, e.g. conj:sym:3)
    #[arg(long)]
    pub preset: Option<String>,
}

/// A quandle that could not be loaded because its table breaks an axiom.
pub enum Loaded {
    Ok(FiniteQuandle),
    Invalid(QuandleError),
}

impl QuandleSource {
    pub fn load_checked(&self) -> Result<Loaded, UsageError> {
        match (&self.input, &self.preset) {
            (Some(path), _) => quandle_file(path),
            (None, Some(p)) => quandle_preset(p).map(Loaded::Ok),
            (None, None) => Err(usage("a quandle needs --in or --preset")),
        }
    }

    pub fn load(&self) -> Result<FiniteQuandle, UsageError> {
        match self.load_checked()? {
            Loaded::Ok(q) => Ok(q),
            Loaded::Invalid(e) => Err(usage(format!("invalid quandle: {e}"))),
        }
    }
}

fn quandle_file(path: &Path) -> Result<Loaded, UsageError> {
    match FiniteQuandle::from_json(&read(path)?) {
        Ok(q) => Ok(Loaded::Ok(q)),
        Err(e @ QuandleError::AxiomViolation { .. }) => Ok(Loaded::Invalid(e)),
        Err(e) => Err(usage(format!("{}: {e}", path.display()))),
    }
}

/// A file path if one exists under that name, otherwise a preset.
pub fn quandle_spec(spec: &str) -> Result<FiniteQuandle, UsageError> {
    let path = Path::new(spec);
    if path.is_file() {
        match quandle_file(path)? {
            Loaded::Ok(q) => Ok(q),
            Loaded::Invalid(e) => Err(usage(format!("invalid quandle: {e}"))),
        }
    } else {
        quandle_preset(spec)
    }
}

pub fn quandle_preset(spec: &str) -> Result<FiniteQuandle, UsageError> {
    let (head, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let args: Vec<&str> = rest.split(':').collect();
    match head {
        "trivial" => {
            let n: usize = num(rest, "size")?;
            if n == 0 {
                return Err(usage("trivial quandle size must be positive"));
            }
            Ok(FiniteQuandle::trivial(n))
        }
        "dihedral" => {
            let n: usize = num(rest, "size")?;
            if n == 0 {
                return Err(usage("dihedral quandle size must be positive"));
            }
            Ok(FiniteQuandle::dihedral(n))
        }
        "alexander" => {
            let [n, t] = args.as_slice() else {
                return Err(usage("alexander:N:T expects two numbers"));
            };
            let n: usize = num(n, "modulus")?;
            let t: i64 = num(t, "multiplier")?;
            if n == 0 {
                return Err(usage("alexander modulus must be positive"));
            }
            let m = n as i64;
            let q = FiniteQuandle::from_fn(n, |x, y| (t * x as i64 + (1 - t) * y as i64).rem_euclid(m) as usize)
                .map_err(|e| usage(format!("alexander:{n}:{t} is not a quandle: {e}")))?;
            Ok(q)
        }
        "hom" => {
            let [g, n] = args.as_slice() else {
                return Err(usage("hom:G:N expects genus and modulus"));
            };
            Ok(hquandle(num(g, "genus")?, num(n, "modulus")?)?.0)
        }
        "conj" => Ok(conj_quandle(&group_preset(rest)?, None)?),
        "core" => Ok(core_quandle(&group_preset(rest)?)),
        _ => Err(usage(format!("unknown quandle preset {spec:?}"))),
    }
}

pub fn format_classes(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

/// Exactly `n` comma-separated integers.
pub fn parse_ints(s: &str, n: usize) -> Result<Vec<i64>, UsageError> {
    let v = s.split(',').map(|t| num(t, "integer")).collect::<Result<Vec<i64>, _>>()?;
    if v.len() != n {
        return Err(usage(format!("expected {n} comma-separated integers, got {s:?}")));
    }
    Ok(v)
}
