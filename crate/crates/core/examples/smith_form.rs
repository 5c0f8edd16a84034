//! Smith normal form of a block-vector matrix, with unimodular witnesses,
//! checked against gcds of minors.

use pargraph::chipfire::block_lattice_matrix;
use pargraph::graph::parse_pargraph;
use pargraph::linalg::{invariant_factors_by_minors, smith_normal_form, DEFAULT_MINOR_LIMIT};

fn main() -> pargraph::Result<()> {
    let pg = parse_pargraph(
        "vertices 7\nedges 1-2,2-5,3-1,3-4,3-6,4-5,6-7,7-5\npartition [1] [2,5] [3] [4] [6] [7]\n",
    )?;
    let a = block_lattice_matrix(&pg);
    println!("block vectors as columns:\n{a}");
    let snf = smith_normal_form(&a);
    println!("invariant factors: {:?}", snf.factors.iter().map(|f| f.to_string()).collect::<Vec<_>>());
    println!("left  =\n{}", snf.left);
    println!("right =\n{}", snf.right);
    assert!(snf.verify(&a));
    assert_eq!(snf.factors, invariant_factors_by_minors(&a, DEFAULT_MINOR_LIMIT)?);
    println!("left * A * right is diagonal and both witnesses are unimodular");
    Ok(())
}
