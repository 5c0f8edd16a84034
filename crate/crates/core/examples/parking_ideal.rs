//! Minimal generators of the parking ideal and its Hilbert function in both
//! ambient rings.

use pargraph::graph::parse_pargraph;
use pargraph::ideals::{hilbert_counts_in, krull_dimension, parking_ideal, verify_minimal, Ambient};

fn main() -> pargraph::Result<()> {
    let pg = parse_pargraph(
        "vertices 7\nedges 1-2,2-5,3-1,3-4,3-6,4-5,6-7,7-5\npartition [1] [2,5] [3] [4] [6] [7]\n",
    )?;
    let gens = parking_ideal(&pg);
    println!("{} minimal generators:", gens.len());
    for m in &gens {
        println!("  {}", m.to_latex());
    }
    assert!(verify_minimal(&gens));
    for ambient in [Ambient::Full, Ambient::DropRoot] {
        let counts = hilbert_counts_in(pg.n(), &ambient.variables(&pg), &gens, 6)?;
        println!("{ambient:?}: {counts:?}");
    }
    println!("Krull dimension {} (n - k + 1 = {})", krull_dimension(pg.n(), &gens)?, pg.n() - pg.k() + 1);
    Ok(())
}
