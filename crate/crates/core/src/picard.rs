//! Structure of the Picard group `Z^n / L` and sufficient conditions for it to
//! be free.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::chipfire::{block_lattice_matrix, laplacian_block_vectors};
use crate::error::{Error, Result};
use crate::graph::{spanning_tree_count, Multigraph, Pargraph};
use crate::linalg::smith_normal_form;

/// `Z^free_rank ⊕ Z/t_1 ⊕ … ⊕ Z/t_m` with `t_1 | t_2 | … | t_m`, all `t_i > 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PicardStructure {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
    /// All invariant factors of the `n x k` block-vector matrix.
    pub invariant_factors: Vec<BigInt>,
    pub lattice_rank: usize,
}

impl PicardStructure {
    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Order of the torsion (Jacobian) subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }
}

pub fn picard_structure(pg: &Pargraph) -> PicardStructure {
    let snf = smith_normal_form(&block_lattice_matrix(pg));
    let rank = snf.rank();
    let torsion = snf.factors.iter().filter(|q| **q > BigInt::one()).cloned().collect();
    PicardStructure {
        free_rank: pg.n() - rank,
        torsion,
        invariant_factors: snf.factors,
        lattice_rank: rank,
    }
}

/// Evidence that the Picard group is free.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FreenessCertificate {
    /// Removing the basic edges leaves a forest; these are its edges.
    Forest { forest_edges: Vec<(usize, usize)> },
    /// A graph with the same block vectors whose spanning-tree count is coprime
    /// to that of the original.
    CoprimeTrees {
        #[serde(serialize_with = "ser_bigint")]
        trees: BigInt,
        #[serde(serialize_with = "ser_bigint")]
        alt_trees: BigInt,
        #[serde(serialize_with = "ser_bigint")]
        gcd: BigInt,
        #[serde(skip)]
        alt: Multigraph,
    },
    /// Every nonzero invariant factor is 1.
    DirectSnf {
        #[serde(serialize_with = "ser_bigints")]
        invariant_factors: Vec<BigInt>,
    },
}

fn ser_bigint<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn ser_bigints<S: serde::Serializer>(xs: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|x| x.to_string()))
}

impl FreenessCertificate {
    pub fn kind(&self) -> &'static str {
        match self {
            FreenessCertificate::Forest { .. } => "forest",
            FreenessCertificate::CoprimeTrees { .. } => "coprime_trees",
            FreenessCertificate::DirectSnf { .. } => "direct_snf",
        }
    }

    /// Re-checks the evidence against `pg` from scratch.
    pub fn verify(&self, pg: &Pargraph) -> bool {
        match self {
            FreenessCertificate::Forest { forest_edges } => {
                let relevant: Vec<(usize, usize)> = pg
                    .graph()
                    .edges()
                    .into_iter()
                    .filter(|&(i, j, _)| !pg.is_basic(i, j))
                    .map(|(i, j, _)| (i, j))
                    .collect();
                pg.graph().is_simple()
                    && *forest_edges == relevant
                    && Multigraph::from_edges(pg.n(), forest_edges).is_ok_and(|f| f.is_forest())
            }
            FreenessCertificate::CoprimeTrees { trees, alt_trees, gcd, alt } => {
                same_block_vectors(pg, alt).is_ok()
                    && *trees == spanning_tree_count(pg.graph())
                    && *alt_trees == spanning_tree_count(alt)
                    && *gcd == trees.gcd(alt_trees)
                    && gcd.is_one()
            }
            FreenessCertificate::DirectSnf { invariant_factors } => {
                *invariant_factors == smith_normal_form(&block_lattice_matrix(pg)).factors
                    && invariant_factors.iter().all(|q| q.is_zero() || q.is_one())
            }
        }
    }
}

/// Forest criterion: defined for simple pargraphs only. `Ok(None)` means the
/// criterion does not apply, which says nothing about freeness.
pub fn freeness_by_forest(pg: &Pargraph) -> Result<Option<FreenessCertificate>> {
    if let Some((i, j, m)) = pg.graph().edges().into_iter().find(|&(_, _, m)| m > 1) {
        return Err(Error::NotSimple { i: i + 1, j: j + 1, mult: m });
    }
    let relevant: Vec<(usize, usize)> = pg
        .relevant_edges()
        .into_iter()
        .map(|(i, j, _)| (i, j))
        .collect();
    let forest = Multigraph::from_edges(pg.n(), &relevant)?;
    Ok(forest.is_forest().then_some(FreenessCertificate::Forest { forest_edges: relevant }))
}

/// Block vectors of `alt` under the partition of `pg` must match those of `pg`.
fn same_block_vectors(pg: &Pargraph, alt: &Multigraph) -> Result<()> {
    if alt.n() != pg.n() {
        return Err(Error::DimensionMismatch { expected: pg.n(), got: alt.n() });
    }
    let ours = laplacian_block_vectors(pg);
    let rows = alt.laplacian_rows();
    for (b, block) in pg.blocks().iter().enumerate() {
        let theirs: Vec<i64> = (0..pg.n()).map(|c| block.iter().map(|&j| rows[j][c]).sum()).collect();
        if theirs != ours[b] {
            return Err(Error::HypothesisViolated { block: b + 1 });
        }
    }
    Ok(())
}

/// Coprime spanning-tree criterion against a user-supplied graph on the same
/// vertices; the alternative may leave blocks disconnected.
pub fn freeness_by_coprime(pg: &Pargraph, alt: &Multigraph) -> Result<Option<FreenessCertificate>> {
    same_block_vectors(pg, alt)?;
    let trees = spanning_tree_count(pg.graph());
    let alt_trees = spanning_tree_count(alt);
    let gcd = trees.gcd(&alt_trees);
    Ok(gcd.is_one().then(|| FreenessCertificate::CoprimeTrees {
        trees,
        alt_trees,
        gcd,
        alt: alt.clone(),
    }))
}

/// Tries `G` minus one copy of each basic edge as the alternative graph.
pub fn search_coprime_alternative(pg: &Pargraph) -> Option<FreenessCertificate> {
    pg.basic_edges()
        .into_iter()
        .find_map(|(i, j, _)| freeness_by_coprime(pg, &pg.graph().without_edge(i, j)).ok().flatten())
}

pub fn freeness_by_snf(pg: &Pargraph) -> Option<FreenessCertificate> {
    let pic = picard_structure(pg);
    pic.is_free().then_some(FreenessCertificate::DirectSnf {
        invariant_factors: pic.invariant_factors,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ToricStatus {
    /// The Picard group is free, hence the toppling ideal is toric.
    ToricByFreeness,
    /// Torsion is present; no conclusion is drawn.
    Unknown,
}

pub fn toric_certificate(pg: &Pargraph) -> ToricStatus {
    if picard_structure(pg).is_free() {
        ToricStatus::ToricByFreeness
    } else {
        ToricStatus::Unknown
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_pargraph;

    const SEVEN_VERTEX_EDGES: &str = "edges 1-2,2-5,3-1,3-4,3-6,4-5,6-7,7-5";

    fn first_partition() -> Pargraph {
        parse_pargraph(&format!(
            "vertices 7\n{SEVEN_VERTEX_EDGES}\npartition [2,5] [1] [3] [4] [6] [7]\n"
        ))
        .unwrap()
    }

    fn second_partition() -> Pargraph {
        parse_pargraph(&format!(
            "vertices 7\n{SEVEN_VERTEX_EDGES}\npartition [2,5,7] [1] [3] [4] [6]\nsink_block 1\n"
        ))
        .unwrap()
    }

    fn cycle(n: usize) -> Multigraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Multigraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn single_block_is_free_of_full_rank() {
        let pg = Pargraph::new(cycle(4), vec![vec![0, 1, 2, 3]], 0, None).unwrap();
        let pic = picard_structure(&pg);
        assert_eq!(pic.free_rank, 4);
        assert!(pic.torsion.is_empty());
    }

    #[test]
    fn triangle_has_three_torsion() {
        let pg = Pargraph::singletons(cycle(3)).unwrap();
        let pic = picard_structure(&pg);
        assert_eq!(pic.free_rank, 1);
        assert_eq!(pic.torsion, vec![BigInt::from(3)]);
        assert_eq!(toric_certificate(&pg), ToricStatus::Unknown);
        assert!(freeness_by_snf(&pg).is_none());
    }

    #[test]
    fn seven_vertex_split_partition() {
        let pg = first_partition();
        let pic = picard_structure(&pg);
        assert_eq!(pic.free_rank, 2);
        assert!(pic.is_free());
        assert_eq!(freeness_by_forest(&pg).unwrap(), None);
        let alt = pg.graph().without_edge(1, 4);
        let cert = freeness_by_coprime(&pg, &alt).unwrap().expect("21 and 5 are coprime");
        match &cert {
            FreenessCertificate::CoprimeTrees { trees, alt_trees, gcd, .. } => {
                assert_eq!(*trees, BigInt::from(21));
                assert_eq!(*alt_trees, BigInt::from(5));
                assert!(gcd.is_one());
            }
            other => panic!("unexpected certificate {other:?}"),
        }
        assert!(cert.verify(&pg));
        assert_eq!(search_coprime_alternative(&pg).as_ref().map(|c| c.kind()), Some("coprime_trees"));
        assert_eq!(toric_certificate(&pg), ToricStatus::ToricByFreeness);
    }

    #[test]
    fn seven_vertex_merged_partition_forest() {
        let pg = second_partition();
        let cert = freeness_by_forest(&pg).unwrap().expect("forest criterion applies");
        assert!(cert.verify(&pg));
        assert!(picard_structure(&pg).is_free());
    }

    #[test]
    fn coprime_against_itself_is_not_applicable() {
        let pg = first_partition();
        assert_eq!(freeness_by_coprime(&pg, pg.graph()).unwrap(), None);
    }

    #[test]
    fn changed_relevant_edge_violates_hypothesis() {
        let pg = first_partition();
        // drop relevant edge 1-2 (0-based 0-1)
        let alt = pg.graph().without_edge(0, 1);
        assert_eq!(freeness_by_coprime(&pg, &alt), Err(Error::HypothesisViolated { block: 1 }));
    }

    #[test]
    fn forest_rejects_multigraphs() {
        let g = Multigraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let pg = Pargraph::singletons(g).unwrap();
        assert!(matches!(freeness_by_forest(&pg), Err(Error::NotSimple { .. })));
    }

    #[test]
    fn tree_with_singletons_has_forest_certificate() {
        let path = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let pg = Pargraph::singletons(path).unwrap();
        assert!(freeness_by_forest(&pg).unwrap().is_some());
    }

    #[test]
    fn cycles_with_a_merged_block_are_toric() {
        for n in 3..8 {
            let pg = Pargraph::new(
                cycle(n),
                std::iter::once(vec![0, 1]).chain((2..n).map(|v| vec![v])).collect(),
                n - 2,
                None,
            )
            .unwrap();
            assert_eq!(toric_certificate(&pg), ToricStatus::ToricByFreeness, "C_{n}");
        }
    }
}
