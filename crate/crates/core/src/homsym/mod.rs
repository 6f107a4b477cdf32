//! Homological quandles of primitive homology classes with the algebraic
//! intersection form, transvections, and symplectic groups over `Z_q`.
//!
//! Classes are row vectors of length `2g`; the form pairs coordinates
//! `(2i-1, 2i)` with `î(e_{2i-1}, e_{2i}) = 1`.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::constructions::{dehn_quandle, ConstructionError, DehnQuandle};
use crate::groups::{Element, FiniteGroup, GroupError, MatModN, DEFAULT_CAP};
use crate::quandles::{FiniteQuandle, QuandleError, QuandleModel};

/// Default bound on the number of classes enumerated by [`hquandle`].
pub const HQUANDLE_BOUND: usize = 1024;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomError {
    #[error("vectors have different lengths")]
    LengthMismatch,
    #[error("classes live over different coefficient rings")]
    ModulusMismatch,
    #[error("vector length must be even and positive")]
    OddLength,
    #[error("vector is not primitive")]
    NotPrimitive,
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u32),
    #[error("{size} classes exceed the bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Quandle(#[from] QuandleError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

/// A primitive class up to sign, stored as its canonical representative.
/// `modulus == 0` means integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PrimitiveClass {
    v: Vec<i64>,
    modulus: u32,
}

fn reduce(v: &[i64], modulus: u32) -> Vec<i64> {
    if modulus == 0 {
        v.to_vec()
    } else {
        v.iter().map(|x| x.rem_euclid(modulus as i64)).collect()
    }
}

fn negate(v: &[i64], modulus: u32) -> Vec<i64> {
    reduce(&v.iter().map(|x| -x).collect::<Vec<_>>(), modulus)
}

fn is_primitive(v: &[i64], modulus: u32) -> bool {
    let g = v.iter().fold(0i64, |a, &x| a.gcd(&x));
    if modulus == 0 {
        g == 1
    } else {
        g.gcd(&(modulus as i64)) == 1
    }
}

impl PrimitiveClass {
    pub fn new(v: Vec<i64>, modulus: u32) -> Result<Self, HomError> {
        if v.is_empty() || v.len() % 2 == 1 {
            return Err(HomError::OddLength);
        }
        if modulus == 1 {
            return Err(HomError::BadModulus(1));
        }
        let r = reduce(&v, modulus);
        if !is_primitive(&r, modulus) {
            return Err(HomError::NotPrimitive);
        }
        Ok(PrimitiveClass::canonical(r, modulus))
    }

    fn canonical(v: Vec<i64>, modulus: u32) -> Self {
        let v = if modulus == 0 {
            match v.iter().find(|&&x| x != 0) {
                Some(&x) if x < 0 => v.iter().map(|x| -x).collect(),
                _ => v,
            }
        } else {
            let n = negate(&v, modulus);
            v.min(n)
        };
        PrimitiveClass { v, modulus }
    }

    pub fn vector(&self) -> &[i64] {
        &self.v
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn genus(&self) -> usize {
        self.v.len() / 2
    }

    /// `[x] * [y] = [x + î(x, y) y]`, well defined on sign classes.
    pub fn op(&self, y: &PrimitiveClass) -> Result<PrimitiveClass, HomError> {
        self.shift(y, 1)
    }

    /// `[x] *⁻¹ [y] = [x - î(x, y) y]`.
    pub fn op_inv(&self, y: &PrimitiveClass) -> Result<PrimitiveClass, HomError> {
        self.shift(y, -1)
    }

    fn shift(&self, y: &PrimitiveClass, sign: i64) -> Result<PrimitiveClass, HomError> {
        if self.modulus != y.modulus {
            return Err(HomError::ModulusMismatch);
        }
        let k = sign * intersection_form(&self.v, &y.v, self.modulus)?;
        let w: Vec<i64> = self.v.iter().zip(&y.v).map(|(a, b)| a + k * b).collect();
        Ok(PrimitiveClass::canonical(reduce(&w, self.modulus), self.modulus))
    }

    /// Image in `Z_n` coefficients.
    pub fn mod_reduce(&self, n: u32) -> Result<PrimitiveClass, HomError> {
        PrimitiveClass::new(self.v.clone(), n)
    }
}

/// Primitive classes as a lazily evaluated quandle. Operands must share
/// genus and modulus.
#[derive(Clone, Copy, Debug, Default)]
pub struct HomologyModel;

impl QuandleModel for HomologyModel {
    type Elem = PrimitiveClass;

    fn op(&self, x: &PrimitiveClass, y: &PrimitiveClass) -> PrimitiveClass {
        x.op(y).expect("classes in the same homology group")
    }

    fn op_inv(&self, x: &PrimitiveClass, y: &PrimitiveClass) -> PrimitiveClass {
        x.op_inv(y).expect("classes in the same homology group")
    }
}

impl fmt::Display for PrimitiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.v.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// `î(x, y) = Σ x_{2i-1} y_{2i} - x_{2i} y_{2i-1}`, reduced into `[0, n)`
/// when `n > 0`.
pub fn intersection_form(x: &[i64], y: &[i64], modulus: u32) -> Result<i64, HomError> {
    if x.len() != y.len() {
        return Err(HomError::LengthMismatch);
    }
    if x.len() % 2 == 1 {
        return Err(HomError::OddLength);
    }
    let s: i64 = x.chunks(2).zip(y.chunks(2)).map(|(a, b)| a[0] * b[1] - a[1] * b[0]).sum();
    Ok(if modulus == 0 { s } else { s.rem_euclid(modulus as i64) })
}

/// All primitive classes of `Z_n^{2g}` up to sign, sorted.
pub fn primitive_classes(g: usize, n: u32, bound: usize) -> Result<Vec<PrimitiveClass>, HomError> {
    if g == 0 {
        return Err(HomError::OddLength);
    }
    if n < 2 {
        return Err(HomError::BadModulus(n));
    }
    let dim = 2 * g;
    let total = (n as u128).checked_pow(dim as u32).unwrap_or(u128::MAX);
    // at least (total - 1) / n classes when n is prime; bail out early on hopeless sizes
    if total / 2 / (n as u128) > bound as u128 * 4 {
        return Err(HomError::BoundExceeded {
            size: (total / 2).min(usize::MAX as u128) as usize,
            bound,
        });
    }
    let mut out = Vec::new();
    let mut v = vec![0i64; dim];
    loop {
        if is_primitive(&v, n) && v <= negate(&v, n) {
            out.push(PrimitiveClass {
                v: v.clone(),
                modulus: n,
            });
            if out.len() > bound {
                return Err(HomError::BoundExceeded { size: out.len(), bound });
            }
        }
        // odometer, last coordinate fastest
        let mut i = dim;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            v[i] += 1;
            if v[i] < n as i64 {
                break;
            }
            v[i] = 0;
        }
    }
}

/// The homological quandle `P_{g,n}`, labelled by class tuples.
pub fn hquandle(g: usize, n: u32) -> Result<(FiniteQuandle, Vec<PrimitiveClass>), HomError> {
    hquandle_bounded(g, n, HQUANDLE_BOUND)
}

pub fn hquandle_bounded(g: usize, n: u32, bound: usize) -> Result<(FiniteQuandle, Vec<PrimitiveClass>), HomError> {
    let classes = primitive_classes(g, n, bound)?;
    let pos: HashMap<&PrimitiveClass, usize> = classes.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut table = Vec::with_capacity(classes.len());
    for x in &classes {
        let row = classes
            .iter()
            .map(|y| pos[&x.op(y).expect("same ring")])
            .collect();
        table.push(row);
    }
    let q = FiniteQuandle::validate(table)?.with_labels(classes.iter().map(|c| c.to_string()).collect());
    Ok((q, classes))
}

/// Matrix of `z ↦ z + î(z, v) v` acting on row vectors mod `n`.
pub fn transvection(v: &[i64], n: u32) -> Result<MatModN, HomError> {
    if v.is_empty() || v.len() % 2 == 1 {
        return Err(HomError::OddLength);
    }
    if n < 2 {
        return Err(HomError::BadModulus(n));
    }
    let d = v.len();
    let rows = (0..d)
        .map(|i| {
            let mut e = vec![0i64; d];
            e[i] = 1;
            let k = intersection_form(&e, v, 0).unwrap();
            e.iter().zip(v).map(|(a, b)| a + k * b).collect()
        })
        .collect();
    Ok(MatModN::new(n, rows)?)
}

/// `î(xM, yM) = î(x, y)` on all basis pairs.
pub fn preserves_form(m: &MatModN) -> bool {
    let d = m.dim();
    let n = m.modulus();
    let basis = |i: usize| -> Vec<u32> { (0..d).map(|j| u32::from(i == j)).collect() };
    let as_i64 = |v: Vec<u32>| -> Vec<i64> { v.into_iter().map(i64::from).collect() };
    (0..d).all(|i| {
        (0..d).all(|j| {
            let lhs = intersection_form(&as_i64(m.act(&basis(i))), &as_i64(m.act(&basis(j))), n).unwrap();
            let rhs = intersection_form(&as_i64(basis(i)), &as_i64(basis(j)), n).unwrap();
            lhs == rhs
        })
    })
}

fn is_prime(q: u32) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Vectors whose transvections generate `Sp(2g, Z)`: `x_i = e_{2i-1}`,
/// `y_i = e_{2i}` and `x_i - x_{i+1}`.
pub fn lickorish_vectors(g: usize) -> Vec<Vec<i64>> {
    let d = 2 * g;
    let e = |i: usize| -> Vec<i64> { (0..d).map(|j| i64::from(i == j)).collect() };
    let mut out = Vec::new();
    for i in 0..g {
        out.push(e(2 * i));
        out.push(e(2 * i + 1));
        if i + 1 < g {
            out.push(e(2 * i).iter().zip(e(2 * i + 2)).map(|(a, b)| a - b).collect());
        }
    }
    out
}

/// `Sp(2g, Z_q)` for prime `q`, as the matrix group generated by transvections.
pub fn sp_group(g: usize, q: u32) -> Result<FiniteGroup, HomError> {
    sp_group_with_cap(g, q, DEFAULT_CAP)
}

pub fn sp_group_with_cap(g: usize, q: u32, cap: usize) -> Result<FiniteGroup, HomError> {
    if !is_prime(q) {
        return Err(HomError::NotPrime(q));
    }
    if g == 0 {
        return Err(HomError::OddLength);
    }
    let gens: Vec<Element> = lickorish_vectors(g)
        .iter()
        .map(|v| transvection(v, q).map(Element::from))
        .collect::<Result<_, _>>()?;
    Ok(FiniteGroup::generate(&gens, cap)?)
}

/// `|Sp(2g, q)| = q^{g²} Π_{i=1}^{g} (q^{2i} - 1)`.
pub fn sp_order_formula(g: u32, q: u64) -> u128 {
    let q = q as u128;
    (1..=g).fold(q.pow(g * g), |acc, i| acc * (q.pow(2 * i) - 1))
}

/// The Dehn quandle of `Sp(2g, Z_q)` seeded by the transvection of `e_1`.
pub fn dehn_of_sp(g: usize, q: u32) -> Result<DehnQuandle, HomError> {
    let group = sp_group(g, q)?;
    let mut e1 = vec![0i64; 2 * g];
    e1[0] = 1;
    let seed = group
        .index_of(&transvection(&e1, q)?.into())
        .ok_or(GroupError::NotInGroup)?;
    Ok(dehn_quandle(group, &[seed])?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaReport {
    pub classes: usize,
    pub dehn_size: usize,
    pub bijective: bool,
    pub homomorphism: bool,
}

impl LambdaReport {
    pub fn holds(&self) -> bool {
        self.bijective && self.homomorphism
    }
}

/// Checks that `[b] ↦ T_b` is an isomorphism `P_{g,q} → D(T_{e_1}^{Sp})`.
pub fn lambda_check(g: usize, q: u32) -> Result<LambdaReport, HomError> {
    let (p, classes) = hquandle(g, q)?;
    let d = dehn_of_sp(g, q)?;
    let mut lambda = Vec::with_capacity(classes.len());
    for c in &classes {
        let t: Element = transvection(c.vector(), q)?.into();
        let image = d.group.index_of(&t).and_then(|gi| d.element_of(gi));
        match image {
            Some(i) => lambda.push(i),
            None => {
                return Ok(LambdaReport {
                    classes: classes.len(),
                    dehn_size: d.quandle.size(),
                    bijective: false,
                    homomorphism: false,
                })
            }
        }
    }
    let mut sorted = lambda.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let bijective = sorted.len() == classes.len() && classes.len() == d.quandle.size();
    let homomorphism = (0..p.size()).all(|x| (0..p.size()).all(|y| lambda[p.op(x, y)] == d.quandle.op(lambda[x], lambda[y])));
    Ok(LambdaReport {
        classes: classes.len(),
        dehn_size: d.quandle.size(),
        bijective,
        homomorphism,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModReduceReport {
    pub target_size: usize,
    /// One integral primitive lift per target class, in target order.
    pub lifts: Vec<Vec<i64>>,
    pub surjective: bool,
    pub pairs_checked: usize,
    pub homomorphism: bool,
}

/// Smallest-box integral primitive vector reducing to `r` mod `n`.
fn lift(r: &[i64], n: u32) -> Option<Vec<i64>> {
    let d = r.len();
    for radius in 0..=4i64 {
        let side = (2 * radius + 1) as usize;
        let mut k = vec![0usize; d];
        loop {
            let cand: Vec<i64> = r.iter().zip(&k).map(|(x, &ki)| x + n as i64 * (ki as i64 - radius)).collect();
            if is_primitive(&cand, 0) {
                return Some(cand);
            }
            let mut i = d;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                k[i] += 1;
                if k[i] < side {
                    break;
                }
                k[i] = 0;
            }
            if k.iter().all(|&x| x == 0) {
                break;
            }
        }
    }
    None
}

/// Checks reduction `P_g → P_{g,n}`: a homomorphism on `samples` random
/// pairs from `[-range, range]^{2g}` and onto via explicit lifts.
pub fn mod_reduce_check<R: Rng>(
    g: usize,
    n: u32,
    samples: usize,
    range: i64,
    rng: &mut R,
) -> Result<ModReduceReport, HomError> {
    let (p, classes) = hquandle(g, n)?;
    let pos: HashMap<&PrimitiveClass, usize> = classes.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut lifts = Vec::with_capacity(classes.len());
    let mut surjective = true;
    for c in &classes {
        match lift(c.vector(), n) {
            Some(l) if PrimitiveClass::new(l.clone(), 0)?.mod_reduce(n)? == *c => lifts.push(l),
            _ => surjective = false,
        }
    }
    let mut draw = || -> PrimitiveClass {
        loop {
            let v: Vec<i64> = (0..2 * g).map(|_| rng.gen_range(-range..=range)).collect();
            if let Ok(c) = PrimitiveClass::new(v, 0) {
                return c;
            }
        }
    };
    let mut homomorphism = true;
    for _ in 0..samples {
        let (x, y) = (draw(), draw());
        let lhs = pos[&x.op(&y)?.mod_reduce(n)?];
        let rhs = p.op(pos[&x.mod_reduce(n)?], pos[&y.mod_reduce(n)?]);
        homomorphism &= lhs == rhs;
    }
    Ok(ModReduceReport {
        target_size: classes.len(),
        lifts,
        surjective,
        pairs_checked: samples,
        homomorphism,
    })
}
