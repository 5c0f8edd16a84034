use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// Exact determinant by Bareiss fraction-free elimination. Every intermediate
/// entry is itself a minor of the input, so all divisions are exact.
pub fn det_fraction_free(a: &IntMatrix) -> Result<BigInt> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut m = a.clone();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            match (k + 1..n).find(|&r| !m[(r, k)].is_zero()) {
                Some(r) => {
                    m.swap_rows(k, r);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[(k, k)] * &m[(i, j)] - &m[(i, k)] * &m[(k, j)];
                m[(i, j)] = v / &prev;
            }
        }
        prev = m[(k, k)].clone();
    }
    let d = m[(n - 1, n - 1)].clone();
    Ok(if sign < 0 { -d } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_singular() {
        assert_eq!(det_fraction_free(&IntMatrix::identity(5)).unwrap(), BigInt::one());
        let s = IntMatrix::from_rows(&[[1, 2, 3], [2, 4, 6], [0, 1, 1]]).unwrap();
        assert!(det_fraction_free(&s).unwrap().is_zero());
    }

    #[test]
    fn needs_pivoting() {
        let a = IntMatrix::from_rows(&[[0, 1], [1, 0]]).unwrap();
        assert_eq!(det_fraction_free(&a).unwrap(), BigInt::from(-1));
        let b = IntMatrix::from_rows(&[[0, 0, 1], [0, 2, 0], [3, 0, 0]]).unwrap();
        assert_eq!(det_fraction_free(&b).unwrap(), BigInt::from(-6));
    }

    #[test]
    fn rejects_rectangular() {
        let a = IntMatrix::zeros(2, 3);
        assert_eq!(det_fraction_free(&a), Err(Error::NotSquare { rows: 2, cols: 3 }));
    }

    #[test]
    fn empty_matrix_has_unit_determinant() {
        assert_eq!(det_fraction_free(&IntMatrix::zeros(0, 0)).unwrap(), BigInt::one());
    }
}
