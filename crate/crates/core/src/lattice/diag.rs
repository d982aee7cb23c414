//! Exact determinant and signature of symmetric integer forms.
//!
//! Signature by Lagrange diagonalization over ℚ: congruence transformations
//! only, so the inertia (b₂⁺, b₂⁻) is preserved. Zero diagonal entries are
//! handled by the standard basis change bₖ ↦ bₖ + bⱼ against an off-diagonal
//! partner.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Determinant of a symmetric integer matrix, exact.
pub fn determinant(form: &[Vec<i64>]) -> BigInt {
    let n = form.len();
    let mut m: Vec<Vec<BigRational>> = form
        .iter()
        .map(|row| row.iter().map(|&x| rat(x)).collect())
        .collect();
    let mut det = BigRational::one();
    for k in 0..n {
        let pivot_row = (k..n).find(|&r| !m[r][k].is_zero());
        let Some(p) = pivot_row else {
            return BigInt::zero();
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        det *= m[k][k].clone();
        let pivot = m[k][k].clone();
        for r in k + 1..n {
            if m[r][k].is_zero() {
                continue;
            }
            let factor = m[r][k].clone() / pivot.clone();
            for col in k..n {
                let sub = factor.clone() * m[k][col].clone();
                m[r][col] -= sub;
            }
        }
    }
    debug_assert!(det.is_integer());
    det.to_integer()
}

/// Inertia (positive, negative, zero) counts of a symmetric integer form.
pub fn inertia(form: &[Vec<i64>]) -> (usize, usize, usize) {
    let n = form.len();
    let mut m: Vec<Vec<BigRational>> = form
        .iter()
        .map(|row| row.iter().map(|&x| rat(x)).collect())
        .collect();
    let (mut pos, mut neg, mut zero) = (0usize, 0usize, 0usize);
    for k in 0..n {
        if m[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !m[j][j].is_zero()) {
                // swap basis vectors k and j
                m.swap(k, j);
                for row in m.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !m[k][j].is_zero()) {
                // bₖ ↦ bₖ + bⱼ makes the (k,k) entry 2·m[k][j] ≠ 0
                for col in 0..n {
                    let add = m[j][col].clone();
                    m[k][col] += add;
                }
                for row in 0..n {
                    let add = m[row][j].clone();
                    m[row][k] += add;
                }
            } else {
                zero += 1;
                continue;
            }
        }
        let pivot = m[k][k].clone();
        if pivot.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        // symmetric elimination: bᵣ ↦ bᵣ − (m[r][k]/pivot)·bₖ, row then column
        for r in k + 1..n {
            if m[r][k].is_zero() {
                continue;
            }
            let factor = m[r][k].clone() / pivot.clone();
            for col in 0..n {
                let sub = factor.clone() * m[k][col].clone();
                m[r][col] -= sub;
            }
            for row in 0..n {
                let sub = factor.clone() * m[row][k].clone();
                m[row][r] -= sub;
            }
        }
    }
    (pos, neg, zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_forms() {
        let f = vec![vec![1, 0, 0], vec![0, -1, 0], vec![0, 0, -1]];
        assert_eq!(determinant(&f), BigInt::from(1));
        assert_eq!(inertia(&f), (1, 2, 0));
    }

    #[test]
    fn hyperbolic_plane() {
        // U = [[0,1],[1,0]] has signature (1,1), det = −1.
        let f = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(determinant(&f), BigInt::from(-1));
        assert_eq!(inertia(&f), (1, 1, 0));
    }

    #[test]
    fn degenerate_detected() {
        let f = vec![vec![1, 1], vec![1, 1]];
        assert_eq!(determinant(&f), BigInt::from(0));
        let (_, _, z) = inertia(&f);
        assert_eq!(z, 1);
    }

    #[test]
    fn hyperbolic_blowup_and_dense_form() {
        let f = vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, -1]];
        assert_eq!(inertia(&f), (1, 2, 0));
        assert_eq!(determinant(&f), BigInt::from(1));

        // a dense symmetric form with known inertia: eigenvalues of
        // [[2,1],[1,2]] are 1, 3
        let f = vec![vec![2, 1], vec![1, 2]];
        assert_eq!(inertia(&f), (2, 0, 0));
        assert_eq!(determinant(&f), BigInt::from(3));
    }
}
