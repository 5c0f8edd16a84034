use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;
use super::smith::smith_normal_form;
use crate::error::{Error, Result};

/// Decides whether `v` is an integer combination of the columns of `basis`.
///
/// With `U * B * V = D` in Smith form, `B x = v` has an integer solution iff
/// `D y = U v` does, which is a coordinate-wise divisibility test.
pub fn lattice_contains(basis: &IntMatrix, v: &[BigInt]) -> Result<bool> {
    if v.len() != basis.rows() {
        return Err(Error::DimensionMismatch { expected: basis.rows(), got: v.len() });
    }
    let snf = smith_normal_form(basis);
    let w = snf.left_inverse.mul_vec(v)?;
    Ok(w.iter().enumerate().all(|(i, wi)| match snf.factors.get(i) {
        Some(q) if !q.is_zero() => wi.is_multiple_of(q),
        _ => wi.is_zero(),
    }))
}

/// Outcome of an exact rational solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RationalSolution {
    /// One solution; free variables are set to zero.
    Solution(Vec<BigRational>),
    Inconsistent,
}

impl RationalSolution {
    pub fn solution(&self) -> Option<&[BigRational]> {
        match self {
            RationalSolution::Solution(x) => Some(x),
            RationalSolution::Inconsistent => None,
        }
    }
}

/// Solves `A x = y` over the rationals by Gauss-Jordan elimination.
pub fn solve_rational(a: &IntMatrix, y: &[BigInt]) -> Result<RationalSolution> {
    let (m, n) = (a.rows(), a.cols());
    if y.len() != m {
        return Err(Error::DimensionMismatch { expected: m, got: y.len() });
    }
    // Augmented matrix [A | y].
    let mut aug: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut row: Vec<BigRational> =
                a.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect();
            row.push(BigRational::from_integer(y[i].clone()));
            row
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let inv = BigRational::one() / &aug[r][c];
        for x in aug[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m {
            if i == r || aug[i][c].is_zero() {
                continue;
            }
            let f = aug[i][c].clone();
            let pivot_row = aug[r].clone();
            for (x, p) in aug[i][c..=n].iter_mut().zip(&pivot_row[c..=n]) {
                *x -= &f * p;
            }
        }
        pivots.push(c);
        r += 1;
        if r == m {
            break;
        }
    }
    if aug[r..].iter().any(|row| !row[n].is_zero()) {
        return Ok(RationalSolution::Inconsistent);
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug[i][n].clone();
    }
    Ok(RationalSolution::Solution(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn c3() -> IntMatrix {
        IntMatrix::from_rows(&[[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]).unwrap()
    }

    #[test]
    fn columns_and_zero_are_members() {
        let b = c3();
        for j in 0..3 {
            assert!(lattice_contains(&b, &b.column(j)).unwrap());
        }
        assert!(lattice_contains(&b, &ints(&[0, 0, 0])).unwrap());
    }

    #[test]
    fn one_third_is_not_integral() {
        assert!(!lattice_contains(&c3(), &ints(&[1, -1, 0])).unwrap());
        assert!(lattice_contains(&c3(), &ints(&[3, -3, 0])).unwrap());
    }

    #[test]
    fn dimension_checked() {
        assert!(matches!(
            lattice_contains(&c3(), &ints(&[1, 2])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn identity_solve() {
        let y = ints(&[4, -2, 7]);
        let sol = solve_rational(&IntMatrix::identity(3), &y).unwrap();
        let expect: Vec<BigRational> = y.iter().cloned().map(BigRational::from_integer).collect();
        assert_eq!(sol, RationalSolution::Solution(expect));
    }

    #[test]
    fn laplacian_solve_checks_by_substitution() {
        let a = c3();
        let y = ints(&[1, 1, -2]);
        let sol = solve_rational(&a, &y).unwrap();
        let x = sol.solution().unwrap();
        for i in 0..3 {
            let lhs: BigRational = (0..3)
                .map(|j| BigRational::from_integer(a[(i, j)].clone()) * &x[j])
                .sum();
            assert_eq!(lhs, BigRational::from_integer(y[i].clone()));
        }
    }

    #[test]
    fn off_root_lattice_is_inconsistent() {
        let sol = solve_rational(&c3(), &ints(&[1, 0, 0])).unwrap();
        assert_eq!(sol, RationalSolution::Inconsistent);
    }
}
