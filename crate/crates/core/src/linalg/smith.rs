//! Smith normal form over the integers, with unimodular witnesses.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::det::det_fraction_free;
use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// Invariant factors of a matrix together with the unimodular matrices that
/// witness the equivalence.
///
/// With `D = diag(factors)` of the original shape, both
/// `left * D * right == A` and `left_inverse * A * right_inverse == D` hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub factors: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
    pub left_inverse: IntMatrix,
    pub right_inverse: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.factors.iter().take_while(|q| !q.is_zero()).count()
    }

    pub fn diagonal_matrix(&self) -> IntMatrix {
        IntMatrix::diagonal(self.left.rows(), self.right.cols(), &self.factors)
    }

    /// Re-derives `left * D * right` and compares it with `original`; also
    /// checks the divisibility chain and that both witnesses are unimodular.
    pub fn verify(&self, original: &IntMatrix) -> bool {
        let chain_ok = self.factors.windows(2).all(|w| {
            if w[0].is_zero() {
                w[1].is_zero()
            } else {
                w[1].is_multiple_of(&w[0])
            }
        });
        let nonneg = self.factors.iter().all(|q| !q.is_negative());
        let product = self
            .left
            .mul(&self.diagonal_matrix())
            .and_then(|m| m.mul(&self.right));
        let unimodular = |m: &IntMatrix| {
            det_fraction_free(m).map(|d| d.abs().is_one()).unwrap_or(false)
        };
        chain_ok
            && nonneg
            && product.as_ref() == Ok(original)
            && unimodular(&self.left)
            && unimodular(&self.right)
    }
}

struct Reduction {
    work: IntMatrix,
    // u * a0 * v == work, a0 == u_inv * work * v_inv
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reduction {
    fn row_add(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.work.add_row_multiple(dst, src, c);
        self.u.add_row_multiple(dst, src, c);
        self.u_inv.add_col_multiple(src, dst, &-c);
    }

    fn col_add(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.work.add_col_multiple(dst, src, c);
        self.v.add_col_multiple(dst, src, c);
        self.v_inv.add_row_multiple(src, dst, &-c);
    }

    fn row_swap(&mut self, a: usize, b: usize) {
        self.work.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn col_swap(&mut self, a: usize, b: usize) {
        self.work.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    fn row_negate(&mut self, i: usize) {
        self.work.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// Nonzero entry of least absolute value in the trailing block; ties go to
    /// the smallest row, then the smallest column.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.work.rows() {
            for j in t..self.work.cols() {
                let x = &self.work[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let a = x.abs();
                if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                    best = Some((i, j, a));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn diagonalize(&mut self) {
        let m = self.work.rows();
        let n = self.work.cols();
        for t in 0..m.min(n) {
            loop {
                let Some((pi, pj)) = self.min_pivot(t) else {
                    return;
                };
                self.row_swap(t, pi);
                self.col_swap(t, pj);

                let mut clean = true;
                for i in t + 1..m {
                    if self.work[(i, t)].is_zero() {
                        continue;
                    }
                    let q = &self.work[(i, t)] / &self.work[(t, t)];
                    self.row_add(i, t, &-q);
                    clean &= self.work[(i, t)].is_zero();
                }
                for j in t + 1..n {
                    if self.work[(t, j)].is_zero() {
                        continue;
                    }
                    let q = &self.work[(t, j)] / &self.work[(t, t)];
                    self.col_add(j, t, &-q);
                    clean &= self.work[(t, j)].is_zero();
                }
                if !clean {
                    continue;
                }

                // Pivot must divide the whole trailing block.
                let pivot = self.work[(t, t)].clone();
                let offender = (t + 1..m).find(|&i| {
                    (t + 1..n).any(|j| !self.work[(i, j)].is_multiple_of(&pivot))
                });
                match offender {
                    Some(i) => self.row_add(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.work[(t, t)].is_negative() {
                self.row_negate(t);
            }
        }
    }
}

/// Smith normal form by elementary unimodular row and column operations.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let mut red = Reduction {
        work: a.clone(),
        u: IntMatrix::identity(m),
        u_inv: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
        v_inv: IntMatrix::identity(n),
    };
    red.diagonalize();
    let factors = (0..m.min(n)).map(|i| red.work[(i, i)].clone()).collect();
    SmithForm {
        factors,
        left: red.u_inv,
        right: red.v_inv,
        left_inverse: red.u,
        right_inverse: red.v,
    }
}

/// Default bound on the number of minors `invariant_factors_by_minors` will
/// evaluate.
pub const DEFAULT_MINOR_LIMIT: u128 = 250_000;

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Invariant factors from determinantal divisors: with `d_s` the gcd of all
/// `s x s` minors, `q_s = d_s / d_{s-1}` (and zero once `d_s` vanishes).
///
/// Exponential in the matrix size; refuses inputs needing more than `limit`
/// minors.
pub fn invariant_factors_by_minors(a: &IntMatrix, limit: u128) -> Result<Vec<BigInt>> {
    let (m, n) = (a.rows(), a.cols());
    let r = m.min(n);
    let total: u128 = (1..=r).map(|s| binomial(m, s) * binomial(n, s)).sum();
    if total > limit {
        return Err(Error::TooLarge { what: "minor enumeration", size: total, limit });
    }
    let mut factors = Vec::with_capacity(r);
    let mut prev = BigInt::one();
    for s in 1..=r {
        let mut d = BigInt::zero();
        let row_sets = combinations(m, s);
        let col_sets = combinations(n, s);
        for rs in &row_sets {
            for cs in &col_sets {
                let minor = det_fraction_free(&a.submatrix(rs, cs))?;
                d = d.gcd(&minor);
                if d.is_one() {
                    break;
                }
            }
            if d.is_one() {
                break;
            }
        }
        if d.is_zero() || prev.is_zero() {
            factors.push(BigInt::zero());
            prev = BigInt::zero();
        } else {
            factors.push(&d / &prev);
            prev = d;
        }
    }
    Ok(factors)
}
