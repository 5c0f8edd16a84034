//! The weighted order, the Gröbner basis of the toppling ideal, Buchberger's
//! criterion and normal forms.

use pargraph::chipfire::{reduce, Divisor};
use pargraph::graph::parse_pargraph;
use pargraph::ideals::{
    groebner_basis, normal_form, toppling_generators, verify_buchberger, weight_vector, MRevOrder, Monomial,
};

fn main() -> pargraph::Result<()> {
    let pg = parse_pargraph("vertices 4\nedges 1-2,2-3,3-4,4-1\npartition [1] [2] [3,4]\n")?;
    let w = weight_vector(&pg)?;
    println!("weights {:?} (scale {})", w.weights, w.scale);
    let ord = MRevOrder::for_pargraph(&pg)?;
    println!("variables from smallest: {:?}", ord.tree_order().iter().map(|v| v + 1).collect::<Vec<_>>());

    println!("generators:");
    for g in toppling_generators(&pg) {
        println!("  {} - {}", g.lead, g.tail);
    }
    let gb = groebner_basis(&pg);
    println!("Gröbner basis:");
    for g in &gb {
        println!("  {}", g.to_latex());
    }
    println!("Buchberger: {}", verify_buchberger(&gb, &ord)?);

    let d = Divisor(vec![3, 2, 0, 1]);
    let x = Monomial(d.0.iter().map(|&c| c as u32).collect());
    let nf = normal_form(&x, &gb, &ord);
    println!("normal form of {x} is {nf}; reduced divisor {:?}", reduce(&pg, &d)?.divisor.0);
    Ok(())
}
