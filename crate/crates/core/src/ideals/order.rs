//! The weighted spanning-tree monomial order.
//!
//! Monomials are compared by a weight `λ` first; `λ` solves `Λ λ = y` with
//! `y = 1` everywhere except `-(n-1)` at the root, so every block away from
//! the sink has positive weight on its firing vector. Ties are broken by total
//! degree and then reverse-lexicographically, with the root as the smallest
//! variable and descendants larger than their ancestors in the rooted spanning
//! tree. The degree step only matters across degrees; all binomials involved
//! are homogeneous.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::monomial::Monomial;
use crate::chipfire::laplacian_block_vectors;
use crate::error::{Error, Result};
use crate::graph::{pargraph_spanning_tree, tree_ordering, Pargraph};
use crate::linalg::{solve_rational, RationalSolution};

/// Integral weights `λ = scale · (λ̃ - min λ̃)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    pub weights: Vec<i64>,
    /// Denominator cleared from the rational solution; `λ · b_{V_i} = scale · |V_i|`
    /// for every non-sink block.
    pub scale: i64,
}

pub fn weight_vector(pg: &Pargraph) -> Result<WeightVector> {
    let n = pg.n();
    let y: Vec<BigInt> = (0..n)
        .map(|v| if v == pg.root() { BigInt::from(1) - BigInt::from(n) } else { BigInt::one() })
        .collect();
    let sol = match solve_rational(&pg.graph().laplacian(), &y)? {
        RationalSolution::Solution(x) => x,
        RationalSolution::Inconsistent => {
            return Err(Error::ComplexInconsistent("Laplacian system has no solution".into()))
        }
    };
    let min = sol.iter().min().cloned().unwrap_or_else(BigRational::zero);
    let shifted: Vec<BigRational> = sol.iter().map(|x| x - &min).collect();
    let scale = shifted.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let to_i64 = |x: &BigInt| x.to_i64().ok_or_else(|| Error::Overflow(x.to_string()));
    let weights = shifted
        .iter()
        .map(|x| to_i64(&(x.numer() * (&scale / x.denom()))))
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightVector { weights, scale: to_i64(&scale)? })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MRevOrder {
    weights: Vec<i64>,
    /// Vertices from smallest to largest variable: the tree ordering.
    tree_order: Vec<usize>,
}

impl MRevOrder {
    /// The order attached to `pg` with its deterministic rooted spanning tree.
    pub fn for_pargraph(pg: &Pargraph) -> Result<Self> {
        let w = weight_vector(pg)?;
        let tree = pargraph_spanning_tree(pg);
        Self::new(pg, w.weights, tree_ordering(&tree))
    }

    /// Validates `λ ≥ 0` and `λ · b_{V_i} > 0` for every non-sink block.
    pub fn new(pg: &Pargraph, weights: Vec<i64>, tree_order: Vec<usize>) -> Result<Self> {
        if weights.len() != pg.n() || tree_order.len() != pg.n() {
            return Err(Error::DimensionMismatch { expected: pg.n(), got: weights.len() });
        }
        if weights.iter().any(|&w| w < 0) {
            return Err(Error::Validation("weights must be non-negative".into()));
        }
        for (b, bv) in laplacian_block_vectors(pg).iter().enumerate() {
            if b == pg.sink_block() {
                continue;
            }
            let dot: i128 = bv.iter().zip(&weights).map(|(&x, &w)| x as i128 * w as i128).sum();
            if dot <= 0 {
                return Err(Error::Validation(format!(
                    "weight vector is not positive on block {}",
                    b + 1
                )));
            }
        }
        Ok(MRevOrder { weights, tree_order })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn tree_order(&self) -> &[usize] {
        &self.tree_order
    }

    pub fn weight(&self, m: &Monomial) -> i128 {
        m.0.iter().zip(&self.weights).map(|(&e, &w)| e as i128 * w as i128).sum()
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.weight(a)
            .cmp(&self.weight(b))
            .then_with(|| a.degree().cmp(&b.degree()))
            .then_with(|| {
                for &v in &self.tree_order {
                    match a.0[v].cmp(&b.0[v]) {
                        Ordering::Equal => continue,
                        // more of a smaller variable makes the monomial smaller
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            })
    }
}

pub fn mrev_compare(a: &Monomial, b: &Monomial, ord: &MRevOrder) -> Ordering {
    ord.compare(a, b)
}

impl WeightVector {
    /// `λ · b_{V_i}` for each block.
    pub fn block_pairings(&self, pg: &Pargraph) -> Vec<i64> {
        laplacian_block_vectors(pg)
            .iter()
            .map(|bv| bv.iter().zip(&self.weights).map(|(x, w)| x * w).sum())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Multigraph;

    fn c3() -> Pargraph {
        Pargraph::singletons(Multigraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()).unwrap()
    }

    #[test]
    fn triangle_weights() {
        let w = weight_vector(&c3()).unwrap();
        assert_eq!(w.weights, vec![1, 1, 0]);
        assert_eq!(w.scale, 1);
    }

    #[test]
    fn single_edge_weights() {
        let pg = Pargraph::singletons(Multigraph::from_edges(2, &[(0, 1)]).unwrap()).unwrap();
        assert_eq!(weight_vector(&pg).unwrap().weights, vec![1, 0]);
    }

    #[test]
    fn four_cycle_needs_a_denominator() {
        let c4 = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let pg = Pargraph::singletons(c4).unwrap();
        let w = weight_vector(&pg).unwrap();
        assert_eq!(w.scale, 2);
        assert_eq!(w.weights, vec![3, 4, 3, 0]);
        assert_eq!(w.block_pairings(&pg)[..3], [2, 2, 2]);
    }

    #[test]
    fn compare_by_weight_then_revlex() {
        let ord = MRevOrder::for_pargraph(&c3()).unwrap();
        let x1sq = Monomial(vec![2, 0, 0]);
        let x2x3 = Monomial(vec![0, 1, 1]);
        assert_eq!(ord.compare(&x1sq, &x2x3), Ordering::Greater);
        assert_eq!(ord.compare(&x2x3, &x2x3), Ordering::Equal);
        // same weight and degree; tree order is 3, 1, 2 and x1^3 x3 has more x1
        let a = Monomial(vec![0, 3, 1]);
        let b = Monomial(vec![3, 0, 1]);
        assert_eq!(ord.compare(&a, &b), Ordering::Greater);
    }

    #[test]
    fn rejects_bad_weights() {
        let pg = c3();
        assert!(MRevOrder::new(&pg, vec![0, 0, 0], vec![2, 0, 1]).is_err());
        assert!(MRevOrder::new(&pg, vec![1, -1, 0], vec![2, 0, 1]).is_err());
    }
}
