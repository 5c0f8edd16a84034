use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{mask_iter, Pargraph, Parset, VertexMask};
use crate::ideals::{Monomial, ParsetBinomial};

/// A point of the affine slice: one rational value per block, zero on the
/// sink block, with `Σ |V_i| p_i = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArrangementPoint {
    pub coords: Vec<BigRational>,
}

impl ArrangementPoint {
    pub fn new(pg: &Pargraph, coords: Vec<BigRational>) -> Result<Self> {
        if coords.len() != pg.k() {
            return Err(Error::DimensionMismatch { expected: pg.k(), got: coords.len() });
        }
        if !coords[pg.sink_block()].is_zero() {
            return Err(Error::Validation("sink block coordinate must be 0".into()));
        }
        let total: BigRational = coords
            .iter()
            .enumerate()
            .map(|(b, c)| c * BigInt::from(pg.blocks()[b].len()))
            .sum();
        if !total.is_one() {
            return Err(Error::Validation(format!("weighted coordinate sum is {total}, not 1")));
        }
        Ok(ArrangementPoint { coords })
    }

    /// `χ_J / |J|` for a parset `J` avoiding the sink block.
    pub fn indicator(pg: &Pargraph, j: &Parset) -> Self {
        let v = BigRational::new(BigInt::one(), BigInt::from(j.size()));
        let coords =
            (0..pg.k()).map(|b| if j.contains_block(b) { v.clone() } else { BigRational::zero() }).collect();
        ArrangementPoint { coords }
    }

    pub fn barycenter(points: &[&ArrangementPoint]) -> Self {
        let k = points[0].coords.len();
        let m = BigInt::from(points.len());
        let coords = (0..k)
            .map(|b| points.iter().map(|p| &p.coords[b]).sum::<BigRational>() / &m)
            .collect();
        ArrangementPoint { coords }
    }

    pub fn value_at(&self, pg: &Pargraph, v: usize) -> &BigRational {
        &self.coords[pg.block_of(v)]
    }

    /// Sign of `p_i − p_j` on each relevant edge `(i, j)`, in
    /// [`Pargraph::relevant_edges`] order.
    pub fn sign_vector(&self, pg: &Pargraph) -> Vec<i8> {
        pg.relevant_edges()
            .iter()
            .map(|&(i, j, _)| match self.value_at(pg, i).cmp(self.value_at(pg, j)) {
                std::cmp::Ordering::Less => -1,
                std::cmp::Ordering::Equal => 0,
                std::cmp::Ordering::Greater => 1,
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroCell {
    pub parset: Parset,
    pub point: ArrangementPoint,
    pub label: Monomial,
}

/// The vertices `χ_J/|J|` of the bounded complex, labelled `x^{J→J̄}`, one per
/// doubly connected parset avoiding the sink block.
pub fn zero_cells(pg: &Pargraph) -> Vec<ZeroCell> {
    pg.doubly_connected_parsets()
        .iter()
        .map(|j| ZeroCell {
            parset: *j,
            point: ArrangementPoint::indicator(pg, j),
            label: ParsetBinomial::from_parset(pg, j).lead,
        })
        .collect()
}

/// `G/p`: components of the equal-value subgraphs, arcs pointing downhill.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientDigraph {
    pub classes: Vec<VertexMask>,
    /// `(a, b)` means class `a` has larger value than its neighbour `b`.
    pub arcs: Vec<(usize, usize)>,
}

impl QuotientDigraph {
    pub fn class_of(&self, v: usize) -> usize {
        self.classes.iter().position(|c| c >> v & 1 == 1).expect("classes cover all vertices")
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.classes.len()).filter(|&c| !self.arcs.iter().any(|&(a, _)| a == c)).collect()
    }

    /// The only sink is the class containing `v`.
    pub fn has_unique_sink_at(&self, v: usize) -> bool {
        self.sinks() == [self.class_of(v)]
    }
}

pub fn quotient_digraph(pg: &Pargraph, p: &ArrangementPoint) -> QuotientDigraph {
    let g = pg.graph();
    let mut classes: Vec<VertexMask> = Vec::new();
    let mut seen: VertexMask = 0;
    for v in 0..pg.n() {
        if seen >> v & 1 == 1 {
            continue;
        }
        let level = (0..pg.n())
            .filter(|&u| p.value_at(pg, u) == p.value_at(pg, v))
            .fold(0u64, |m, u| m | 1 << u);
        let class = g.component_of(v, level);
        seen |= class;
        classes.push(class);
    }
    let mut arcs = Vec::new();
    for a in 0..classes.len() {
        for b in 0..classes.len() {
            let adjacent = mask_iter(classes[a]).any(|u| g.neighbor_mask(u) & classes[b] != 0);
            let va = p.value_at(pg, classes[a].trailing_zeros() as usize);
            let vb = p.value_at(pg, classes[b].trailing_zeros() as usize);
            if a != b && adjacent && va > vb {
                arcs.push((a, b));
            }
        }
    }
    QuotientDigraph { classes, arcs }
}

/// Whether `p` lies in the support of the bounded complex.
pub fn in_bounded_complex(pg: &Pargraph, p: &ArrangementPoint) -> bool {
    quotient_digraph(pg, p).has_unique_sink_at(pg.root())
}
