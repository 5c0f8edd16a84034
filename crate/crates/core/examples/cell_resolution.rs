//! The labelled bounded complex and the Betti numbers it yields.

use pargraph::cellres::{bounded_complex, euler_and_hilbert_check, resolution_report, zero_cells};
use pargraph::graph::parse_pargraph;

fn main() -> pargraph::Result<()> {
    let docs = [
        ("triangle", "vertices 3\nedges 1-2,2-3,1-3\npartition [1] [2] [3]\n"),
        ("square, merged sink", "vertices 4\nedges 1-2,2-3,3-4,4-1\npartition [1] [2] [3,4]\n"),
        ("K4", "vertices 4\nedges 1-2,1-3,1-4,2-3,2-4,3-4\npartition [1] [2] [3] [4]\n"),
    ];
    for (name, doc) in docs {
        let pg = parse_pargraph(doc)?;
        println!("== {name}");
        for (i, z) in zero_cells(&pg).iter().enumerate() {
            let coords: Vec<String> = z.point.coords.iter().map(|c| c.to_string()).collect();
            println!("  vertex {i}: ({}) label {}", coords.join(", "), z.label);
        }
        for c in bounded_complex(&pg)?.iter().filter(|c| c.dim > 0) {
            println!("  {}-cell on {:?} label {}", c.dim, c.vertices, c.label);
        }
        let r = resolution_report(&pg)?;
        println!(
            "  betti {:?}, krull {}, depth {}, proj dim {}, Cohen-Macaulay {}",
            r.betti, r.krull_dim, r.depth, r.proj_dim, r.cohen_macaulay
        );
        println!("  Hilbert check to degree 6: {}", euler_and_hilbert_check(&pg, 6)?);
    }
    Ok(())
}
