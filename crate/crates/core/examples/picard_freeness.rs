//! Picard groups and their freeness certificates.

use pargraph::graph::{parse_pargraph, Multigraph, Pargraph};
use pargraph::picard::{freeness_by_coprime, freeness_by_forest, picard_structure, toric_certificate};

const EDGES: &str = "edges 1-2,2-5,3-1,3-4,3-6,4-5,6-7,7-5";

fn main() -> pargraph::Result<()> {
    let pi1 = parse_pargraph(&format!("vertices 7\n{EDGES}\npartition [1] [2,5] [3] [4] [6] [7]\n"))?;
    let pic = picard_structure(&pi1);
    println!("first partition: Z^{} plus torsion {:?}", pic.free_rank, pic.torsion);
    println!("  forest test: {:?}", freeness_by_forest(&pi1)?.map(|c| c.kind()));
    // dropping the basic edge keeps every block vector
    let alt = pi1.graph().without_edge(1, 4);
    let cert = freeness_by_coprime(&pi1, &alt)?.expect("21 and 5 are coprime");
    println!("  coprime trees: {}", serde_json::to_string(&cert).unwrap());

    let pi2 = parse_pargraph(&format!(
        "vertices 7\n{EDGES}\npartition [1] [2,5,7] [3] [4] [6]\nsink_block 2\n"
    ))?;
    let forest = freeness_by_forest(&pi2)?.expect("relevant edges form a forest");
    println!("second partition: {}", serde_json::to_string(&forest).unwrap());

    for n in 3..=6 {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let cycle = Pargraph::singletons(Multigraph::from_edges(n, &edges)?)?;
        let p = picard_structure(&cycle);
        println!(
            "C_{n} singletons: Z^{} torsion {:?} -> {:?}",
            p.free_rank,
            p.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            toric_certificate(&cycle)
        );
    }
    Ok(())
}
