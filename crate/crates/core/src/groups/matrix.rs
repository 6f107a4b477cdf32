use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::GroupError;

/// A square matrix over `Z_n`, acting on row vectors from the right.
///
/// As a group element the matrix stands for the map `z ↦ z·M`, so the group
/// product `compose(a, b)` ("a after b") is the matrix product `b·a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatModN {
    dim: usize,
    modulus: u32,
    entries: Vec<u32>,
}

impl MatModN {
    pub fn new(modulus: u32, rows: Vec<Vec<i64>>) -> Result<Self, GroupError> {
        if modulus < 2 {
            return Err(GroupError::BadModulus(modulus));
        }
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(GroupError::NotSquare);
        }
        let m = modulus as i64;
        let entries = rows
            .into_iter()
            .flatten()
            .map(|e| e.rem_euclid(m) as u32)
            .collect();
        let mat = MatModN { dim, modulus, entries };
        if !mat.is_invertible() {
            return Err(GroupError::NotInvertible);
        }
        Ok(mat)
    }

    pub fn identity(dim: usize, modulus: u32) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        MatModN { dim, modulus, entries }
    }

    pub(crate) fn from_raw(dim: usize, modulus: u32, entries: Vec<u32>) -> Self {
        debug_assert_eq!(entries.len(), dim * dim);
        MatModN { dim, modulus, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.dim + c]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    /// Ordinary matrix product `self · rhs`.
    pub fn matmul(&self, rhs: &MatModN) -> MatModN {
        let d = self.dim;
        let n = self.modulus as u64;
        let mut out = vec![0u32; d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.entries[i * d + k] as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..d {
                    let idx = i * d + j;
                    out[idx] = ((out[idx] as u64 + a * rhs.entries[k * d + j] as u64) % n) as u32;
                }
            }
        }
        MatModN::from_raw(d, self.modulus, out)
    }

    /// Group product: the map `self ∘ other` on row vectors, i.e. `other · self`.
    pub fn compose(&self, other: &MatModN) -> MatModN {
        other.matmul(self)
    }

    /// Row vector times matrix.
    pub fn act(&self, row: &[u32]) -> Vec<u32> {
        let d = self.dim;
        let n = self.modulus as u64;
        (0..d)
            .map(|j| {
                (0..d)
                    .map(|i| row[i] as u64 * self.entries[i * d + j] as u64)
                    .sum::<u64>()
                    % n
            })
            .map(|x| x as u32)
            .collect()
    }

    fn as_bigint_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows()
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect()
    }

    /// Determinant reduced into `[0, n)`.
    pub fn det(&self) -> u32 {
        let d = bareiss_det(self.as_bigint_rows());
        d.mod_floor(&BigInt::from(self.modulus)).to_u32().unwrap()
    }

    pub fn is_invertible(&self) -> bool {
        (self.det() as u64).gcd(&(self.modulus as u64)) == 1
    }

    /// Inverse via the adjugate; `None` if the determinant is not a unit.
    pub fn inverse(&self) -> Option<MatModN> {
        let n = BigInt::from(self.modulus);
        let det = bareiss_det(self.as_bigint_rows()).mod_floor(&n);
        let det_inv = mod_inverse(&det, &n)?;
        let d = self.dim;
        if d == 1 {
            return Some(MatModN::from_raw(1, self.modulus, vec![det_inv.to_u32().unwrap()]));
        }
        let rows = self.as_bigint_rows();
        let mut out = vec![0u32; d * d];
        for i in 0..d {
            for j in 0..d {
                let minor: Vec<Vec<BigInt>> = rows
                    .iter()
                    .enumerate()
                    .filter(|(r, _)| *r != i)
                    .map(|(_, row)| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, e)| e.clone())
                            .collect()
                    })
                    .collect();
                let mut cof = bareiss_det(minor);
                if (i + j) % 2 == 1 {
                    cof = -cof;
                }
                // adj[j][i] = cofactor(i, j)
                let v = (cof * &det_inv).mod_floor(&n);
                out[j * d + i] = v.to_u32().unwrap();
            }
        }
        Some(MatModN::from_raw(d, self.modulus, out))
    }

    pub fn is_identity(&self) -> bool {
        let d = self.dim;
        self.entries
            .iter()
            .enumerate()
            .all(|(k, &e)| e == u32::from(k / d == k % d))
    }

    pub(crate) fn encode(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(8 + self.entries.len() * 4);
        out.extend_from_slice(&self.modulus.to_le_bytes());
        out.extend_from_slice(&(self.dim as u32).to_le_bytes());
        for e in &self.entries {
            out.extend_from_slice(&e.to_le_bytes());
        }
        out
    }
}

impl fmt::Display for MatModN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "mod={}; {}", self.modulus, rows.join(" / "))
    }
}

/// Fraction-free Gaussian elimination determinant.
pub(crate) fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

pub(crate) fn mod_inverse(a: &BigInt, n: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(n);
    if !e.gcd.abs().is_one() {
        return None;
    }
    Some(e.x.mod_floor(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_and_inverse_mod_3() {
        let a = MatModN::new(3, vec![vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(a.det(), 1);
        let inv = a.inverse().unwrap();
        assert_eq!(inv.rows(), vec![vec![1, 2], vec![0, 1]]);
        assert!(a.matmul(&inv).is_identity());
    }

    #[test]
    fn singular_rejected() {
        assert!(matches!(
            MatModN::new(4, vec![vec![2, 0], vec![0, 1]]),
            Err(GroupError::NotInvertible)
        ));
    }

    #[test]
    fn compose_is_map_composition_on_rows() {
        let a = MatModN::new(5, vec![vec![1, 2], vec![0, 1]]).unwrap();
        let b = MatModN::new(5, vec![vec![1, 0], vec![3, 1]]).unwrap();
        let z = vec![1, 4];
        assert_eq!(a.compose(&b).act(&z), a.act(&b.act(&z)));
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m: Vec<Vec<BigInt>> = vec![vec![2, -1, 3], vec![0, 4, 5], vec![1, 1, -2]]
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect();
        // 2(-8-5) + 1(0-5) + 3(0-4) = -26 - 5 - 12
        assert_eq!(bareiss_det(m), BigInt::from(-43));
    }
}
