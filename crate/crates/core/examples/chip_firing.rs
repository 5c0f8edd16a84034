//! Block firing on the seven-vertex example: reduce a divisor, check that
//! random legal firing orders land on the same reduced divisor, and test
//! equivalence.

use pargraph::chipfire::{equivalent, fire, is_reduced, random_legal_play, reduce, Divisor};
use pargraph::graph::parse_pargraph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const DOC: &str = "\
vertices 7
edges 1-2,2-5,3-1,3-4,3-6,4-5,6-7,7-5
partition [1] [2,5] [3] [4] [6] [7]
";

fn main() -> pargraph::Result<()> {
    let pg = parse_pargraph(DOC)?;
    let d = Divisor(vec![3, 0, 4, 1, 2, 0, 0]);
    let r = reduce(&pg, &d)?;
    println!("D            = {:?}", d.0);
    println!("reduced      = {:?}", r.divisor.0);
    println!("block script = {:?}", r.script.counts);
    assert!(is_reduced(&pg, &r.divisor));
    assert_eq!(r.script.apply(&pg, &d), r.divisor);

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..5 {
        let (end, steps) = random_legal_play(&pg, &d, &mut rng);
        println!("random play: {steps:>3} firings -> {:?}", end.0);
        assert_eq!(end, r.divisor);
    }

    // firing the block {2,5} is always an equivalence; moving one chip is not
    let fired = fire(&pg, &d, &pg.parset_of(&[1]));
    let moved = Divisor(vec![2, 1, 4, 1, 2, 0, 0]);
    println!("D ~ {:?}: {}", fired.0, equivalent(&pg, &d, &fired));
    println!("D ~ {:?}: {}", moved.0, equivalent(&pg, &d, &moved));
    Ok(())
}
