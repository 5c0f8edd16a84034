use std::collections::BTreeMap;

use serde::Serialize;

use super::complex::{bounded_complex, euler_characteristic, f_vector, LabelledCell};
use crate::error::{Error, Result};
use crate::graph::Pargraph;
use crate::ideals::{hilbert_counts, krull_dimension, monomial_count, parking_ideal};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionReport {
    pub f_vector: Vec<usize>,
    /// `β_0 = 1`, `β_{i+1}` = number of `i`-cells.
    pub betti: Vec<usize>,
    /// Per homological degree, label degree → count.
    pub graded_betti: Vec<BTreeMap<u64, usize>>,
    pub krull_dim: usize,
    pub proj_dim: usize,
    pub depth: usize,
    pub cohen_macaulay: bool,
}

pub fn graded_betti(cells: &[LabelledCell]) -> Vec<BTreeMap<u64, usize>> {
    let mut out = vec![BTreeMap::from([(0, 1)])];
    for c in cells {
        if out.len() < c.dim + 2 {
            out.resize_with(c.dim + 2, BTreeMap::new);
        }
        *out[c.dim + 1].entry(c.label.degree()).or_insert(0) += 1;
    }
    out
}

/// Betti numbers, dimensions and the Cohen–Macaulay verdict for the quotient
/// of the full polynomial ring by the parking ideal.
pub fn resolution_report(pg: &Pargraph) -> Result<ResolutionReport> {
    let cells = bounded_complex(pg)?;
    report_from_cells(pg, &cells)
}

pub fn report_from_cells(pg: &Pargraph, cells: &[LabelledCell]) -> Result<ResolutionReport> {
    let f = f_vector(cells);
    let betti: Vec<usize> = std::iter::once(1).chain(f.iter().copied()).collect();
    let proj_dim = betti.iter().rposition(|&b| b != 0).unwrap_or(0);
    if proj_dim + 1 != pg.k() {
        return Err(Error::ComplexInconsistent(format!(
            "projective dimension {proj_dim} but {} blocks",
            pg.k()
        )));
    }
    let krull_dim = krull_dimension(pg.n(), &parking_ideal(pg))?;
    let depth = pg.n() - proj_dim;
    Ok(ResolutionReport {
        f_vector: f,
        betti,
        graded_betti: graded_betti(cells),
        krull_dim,
        proj_dim,
        depth,
        cohen_macaulay: krull_dim == depth,
    })
}

/// Degree-`e` parts of the alternating sum over the labelled cells against
/// a direct count of standard monomials, for `e = 0..=max_degree`.
pub fn euler_and_hilbert_check(pg: &Pargraph, max_degree: u64) -> Result<bool> {
    let cells = bounded_complex(pg)?;
    euler_and_hilbert_check_cells(pg, &cells, max_degree)
}

pub fn euler_and_hilbert_check_cells(pg: &Pargraph, cells: &[LabelledCell], max_degree: u64) -> Result<bool> {
    let n = pg.n();
    let direct = hilbert_counts(n, &parking_ideal(pg), max_degree)?;
    for (e, &h) in direct.iter().enumerate() {
        let e = e as u64;
        let mut total = monomial_count(n, e) as i128;
        for c in cells {
            let d = c.label.degree();
            if d <= e {
                let m = monomial_count(n, e - d) as i128;
                total += if c.dim % 2 == 0 { -m } else { m };
            }
        }
        if total != h as i128 {
            return Ok(false);
        }
    }
    Ok(euler_characteristic(cells) == 1.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Multigraph;

    #[test]
    fn triangle_report() {
        let pg = Pargraph::singletons(Multigraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()).unwrap();
        let r = resolution_report(&pg).unwrap();
        assert_eq!(r.betti, vec![1, 3, 2]);
        assert_eq!((r.krull_dim, r.proj_dim, r.depth, r.cohen_macaulay), (1, 2, 1, true));
        assert_eq!(r.graded_betti[1], BTreeMap::from([(2, 3)]));
        assert_eq!(r.graded_betti[2], BTreeMap::from([(3, 2)]));
        assert!(euler_and_hilbert_check(&pg, 4).unwrap());
    }

    #[test]
    fn merged_four_cycle_report() {
        let g = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let pg = Pargraph::new(g, vec![vec![0], vec![1], vec![2, 3]], 2, None).unwrap();
        let r = resolution_report(&pg).unwrap();
        assert_eq!(r.betti, vec![1, 3, 2]);
        assert_eq!(r.krull_dim, 2);
        assert!(r.cohen_macaulay);
        assert!(euler_and_hilbert_check(&pg, 5).unwrap());
    }

    #[test]
    fn principal_case() {
        let g = Multigraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let pg = Pargraph::new(g, vec![vec![0, 1], vec![2]], 1, None).unwrap();
        let r = resolution_report(&pg).unwrap();
        assert_eq!(r.betti, vec![1, 1]);
        assert_eq!(r.krull_dim, 2);
        assert!(euler_and_hilbert_check(&pg, 6).unwrap());
    }

    #[test]
    fn single_block_is_rejected() {
        let g = Multigraph::from_edges(2, &[(0, 1)]).unwrap();
        let pg = Pargraph::new(g, vec![vec![0, 1]], 0, None).unwrap();
        assert!(matches!(resolution_report(&pg), Err(Error::Validation(_))));
    }
}
