//! Bi-order check for Alexander quandles on `Z²`.
//!
//! `Z²` is bi-ordered by `u < v ⟺ f(v - u) > 0` with
//! `f(a, b) = 2a - b - b√5`; `f` is irrational on every nonzero integer
//! vector, so this is a linear order.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::ConstructionError;

/// Sign of `p + q√5`, exactly.
fn surd_sign(p: i128, q: i128) -> i32 {
    let sp = p.signum() as i32;
    let sq = q.signum() as i32;
    if sp == 0 {
        return sq;
    }
    if sq == 0 || sp == sq {
        return sp;
    }
    // opposite signs: the larger of p² and 5q² wins
    match (p * p).cmp(&(5 * q * q)) {
        std::cmp::Ordering::Greater => sp,
        std::cmp::Ordering::Less => sq,
        std::cmp::Ordering::Equal => 0,
    }
}

/// Sign of `f(v)`.
fn form_sign(v: [i128; 2]) -> i32 {
    surd_sign(2 * v[0] - v[1], -v[1])
}

fn apply(m: &[[i64; 2]; 2], v: [i128; 2]) -> [i128; 2] {
    [
        m[0][0] as i128 * v[0] + m[0][1] as i128 * v[1],
        m[1][0] as i128 * v[0] + m[1][1] as i128 * v[1],
    ]
}

fn sub(a: [i128; 2], b: [i128; 2]) -> [i128; 2] {
    [a[0] - b[0], a[1] - b[1]]
}

fn add(a: [i128; 2], b: [i128; 2]) -> [i128; 2] {
    [a[0] + b[0], a[1] + b[1]]
}

fn less(u: [i128; 2], v: [i128; 2]) -> bool {
    form_sign(sub(v, u)) > 0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BiorderVerdict {
    /// `0 < Mv < v` held for every sampled positive `v`.
    pub condition_holds: bool,
    /// Left and right monotonicity of `x*y = M(x-y) + y` held on every sampled triple.
    pub operation_monotone: bool,
    pub positive_samples: usize,
    pub triples: usize,
    /// First positive `v` violating the condition.
    pub counterexample: Option<[i64; 2]>,
}

impl BiorderVerdict {
    pub fn holds(&self) -> bool {
        self.condition_holds && self.operation_monotone
    }
}

/// Samples vectors in `[-range, range]²` and checks the bi-order condition
/// for `φ = M` together with monotonicity of the Alexander operation.
pub fn alexander_biorder_check(
    m: [[i64; 2]; 2],
    samples: usize,
    range: i64,
    seed: u64,
) -> Result<BiorderVerdict, ConstructionError> {
    let det = m[0][0] as i128 * m[1][1] as i128 - m[0][1] as i128 * m[1][0] as i128;
    if det.abs() != 1 {
        return Err(ConstructionError::NotUnimodular);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| [rng.gen_range(-range..=range) as i128, rng.gen_range(-range..=range) as i128];

    let mut verdict = BiorderVerdict {
        condition_holds: true,
        operation_monotone: true,
        positive_samples: 0,
        triples: 0,
        counterexample: None,
    };
    for _ in 0..samples {
        let v = draw(&mut rng);
        let s = form_sign(v);
        if v != [0, 0] && s == 0 {
            return Err(ConstructionError::DegenerateForm);
        }
        if s <= 0 {
            continue;
        }
        verdict.positive_samples += 1;
        let mv = apply(&m, v);
        if verdict.condition_holds && !(form_sign(mv) > 0 && form_sign(sub(v, mv)) > 0) {
            verdict.condition_holds = false;
            verdict.counterexample = Some([v[0] as i64, v[1] as i64]);
        }
    }

    let op = |x: [i128; 2], y: [i128; 2]| add(apply(&m, sub(x, y)), y);
    for _ in 0..samples {
        let (mut x, mut y, z) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
        if x == y {
            continue;
        }
        if less(y, x) {
            std::mem::swap(&mut x, &mut y);
        }
        verdict.triples += 1;
        if !(less(op(x, z), op(y, z)) && less(op(z, x), op(z, y))) {
            verdict.operation_monotone = false;
        }
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surd_signs() {
        assert_eq!(surd_sign(3, -1), 1);
        assert_eq!(surd_sign(2, -1), -1);
        assert_eq!(surd_sign(-3, 1), -1);
        assert_eq!(surd_sign(0, 0), 0);
        assert_eq!(surd_sign(0, -2), -1);
        // 2.236… vs 9/4: √5 ≈ 2.2360 < 2.25
        assert_eq!(surd_sign(-9, 4), -1);
        assert_eq!(surd_sign(-161, 72), -1);
        assert_eq!(surd_sign(-161, 73), 1);
    }

    #[test]
    fn form_sign_matches_floats_away_from_zero() {
        let r5 = 5f64.sqrt();
        for a in -30i128..=30 {
            for b in -30i128..=30 {
                let f = 2.0 * a as f64 - b as f64 - b as f64 * r5;
                if f.abs() > 1e-6 {
                    assert_eq!(form_sign([a, b]), f.signum() as i32);
                }
            }
        }
    }

    #[test]
    fn golden_matrix_is_biordered() {
        let v = alexander_biorder_check([[2, 1], [1, 1]], 2000, 1000, 7).unwrap();
        assert!(v.holds());
        assert!(v.positive_samples > 500);
    }

    #[test]
    fn identity_and_negation_fail() {
        let id = alexander_biorder_check([[1, 0], [0, 1]], 500, 50, 1).unwrap();
        assert!(!id.condition_holds);
        let neg = alexander_biorder_check([[-1, 0], [0, -1]], 500, 50, 1).unwrap();
        assert!(!neg.condition_holds && !neg.operation_monotone);
        assert!(neg.counterexample.is_some());
    }

    #[test]
    fn non_unimodular_rejected() {
        assert_eq!(
            alexander_biorder_check([[2, 0], [0, 1]], 1, 1, 0).unwrap_err(),
            ConstructionError::NotUnimodular
        );
    }
}
