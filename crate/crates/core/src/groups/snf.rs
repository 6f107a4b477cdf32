use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Dense integer matrix, arbitrary precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        IntMatrix {
            rows: r,
            cols: c,
            entries: rows.iter().flat_map(|row| row.iter().cloned().map(Into::into)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] -= k * row[src]
    fn sub_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for c in 0..self.cols {
            let v = &self.entries[src * self.cols + c] * k;
            self.entries[dst * self.cols + c] -= v;
        }
    }

    /// col[dst] -= k * col[src]
    fn sub_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for r in 0..self.rows {
            let v = &self.entries[r * self.cols + src] * k;
            self.entries[r * self.cols + dst] -= v;
        }
    }

    fn add_row(&mut self, dst: usize, src: usize) {
        for c in 0..self.cols {
            let v = self.entries[src * self.cols + c].clone();
            self.entries[dst * self.cols + c] += v;
        }
    }
}

/// Invariant factors `d_1 | d_2 | …` of `m`, one per diagonal position
/// (`min(rows, cols)` of them), trailing zeros included.
pub fn smith_normal_form(m: &IntMatrix) -> Vec<BigInt> {
    let mut a = m.clone();
    let k = a.rows.min(a.cols);
    for t in 0..k {
        // pivot: smallest nonzero absolute value in the trailing block
        let Some((pr, pc)) = min_nonzero(&a, t) else {
            break;
        };
        a.swap_rows(t, pr);
        a.swap_cols(t, pc);
        loop {
            let mut dirty = false;
            for r in t + 1..a.rows {
                if a.get(r, t).is_zero() {
                    continue;
                }
                let q = a.get(r, t).div_floor(a.get(t, t));
                a.sub_row(r, t, &q);
                if !a.get(r, t).is_zero() {
                    dirty = true;
                }
            }
            for c in t + 1..a.cols {
                if a.get(t, c).is_zero() {
                    continue;
                }
                let q = a.get(t, c).div_floor(a.get(t, t));
                a.sub_col(c, t, &q);
                if !a.get(t, c).is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // row and column cleared; enforce divisibility of the block
                let p = a.get(t, t).clone();
                let bad = (t + 1..a.rows)
                    .find(|&r| (t + 1..a.cols).any(|c| !a.get(r, c).is_multiple_of(&p)));
                match bad {
                    Some(r) => {
                        a.add_row(t, r);
                        continue;
                    }
                    None => break,
                }
            }
            // repivot on the smallest entry left in row/column t
            let (pr, pc) = min_in_cross(&a, t);
            a.swap_rows(t, pr);
            a.swap_cols(t, pc);
        }
        if a.get(t, t).is_negative() {
            let v = -a.get(t, t).clone();
            a.set(t, t, v);
        }
    }
    (0..k).map(|t| a.get(t, t).clone()).collect()
}

fn min_nonzero(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for r in t..a.rows {
        for c in t..a.cols {
            let v = a.get(r, c).abs();
            if v.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(_, _, b)| v < *b) {
                best = Some((r, c, v));
            }
        }
    }
    best.map(|(r, c, _)| (r, c))
}

fn min_in_cross(a: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t, a.get(t, t).abs());
    for r in t + 1..a.rows {
        let v = a.get(r, t).abs();
        if !v.is_zero() && v < best.2 {
            best = (r, t, v);
        }
    }
    for c in t + 1..a.cols {
        let v = a.get(t, c).abs();
        if !v.is_zero() && v < best.2 {
            best = (t, c, v);
        }
    }
    (best.0, best.1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf(rows: &[Vec<i64>]) -> Vec<i64> {
        smith_normal_form(&IntMatrix::from_rows(rows))
            .into_iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn diagonal_two_three() {
        assert_eq!(snf(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
    }

    #[test]
    fn zero_matrix() {
        assert_eq!(snf(&[vec![0, 0], vec![0, 0]]), vec![0, 0]);
    }

    #[test]
    fn two_four_six_eight() {
        assert_eq!(snf(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
    }

    #[test]
    fn rectangular_with_free_part() {
        // rows e1-e0, e2-e1 on three generators: rank 2, cokernel Z
        assert_eq!(snf(&[vec![-1, 1, 0], vec![0, -1, 1]]), vec![1, 1]);
        assert_eq!(snf(&[vec![4, 6, 0]]), vec![2]);
    }

    #[test]
    fn divisibility_repair() {
        // diag(2,3) in disguise needs the row-add step
        assert_eq!(snf(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 4]]), vec![1, 2, 12]);
    }
}
