//! The bounded complex against the barycenter construction, plus the
//! worked examples.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use pargraph::cellres::{
    bounded_complex, bounded_complex_by_barycenters, conforms, euler_characteristic, quotient_digraph,
    resolution_report, zero_cells, ArrangementPoint,
};
use pargraph::corpus::corpus;
use pargraph::graph::parse_pargraph;

#[test]
fn faces_match_barycenter_oracle() {
    let mut compared = 0;
    for pg in corpus(5).iter().filter(|pg| pg.k() >= 2) {
        let fast = bounded_complex(pg).unwrap();
        let slow = bounded_complex_by_barycenters(pg).unwrap();
        assert_eq!(fast, slow, "{}", pargraph::graph::to_document(pg));
        compared += 1;
    }
    assert!(compared > 1000);
}

#[test]
fn face_vertices_are_the_conforming_zero_cells() {
    for pg in corpus(5).iter().filter(|pg| pg.k() >= 2) {
        let zeros = zero_cells(pg);
        let signs: Vec<Vec<i8>> = zeros.iter().map(|z| z.point.sign_vector(pg)).collect();
        let cells = bounded_complex(pg).unwrap();
        assert_eq!(euler_characteristic(&cells), BigInt::from(1));
        for c in &cells {
            // a face sits in the closure of another exactly when its sign vector conforms
            for d in &cells {
                let closure = conforms(&d.sign_vector, &c.sign_vector);
                let subset = d.vertices.iter().all(|v| c.vertices.contains(v));
                assert_eq!(closure, subset);
                if closure && d != c {
                    assert!(d.dim < c.dim);
                }
            }
            for (z, s) in signs.iter().enumerate() {
                assert_eq!(c.vertices.contains(&z), conforms(s, &c.sign_vector));
            }
        }
        for z in &zeros {
            assert!(quotient_digraph(pg, &z.point).has_unique_sink_at(pg.root()));
        }
    }
}

#[test]
fn seven_vertex_quotient() {
    let pg = parse_pargraph(
        "vertices 7\nedges 1-2,2-5,3-1,3-4,3-6,4-5,6-7,7-5\npartition [1] [2,5] [3] [4] [6] [7]\n",
    )
    .unwrap();
    // χ_{1,3}/2 in block coordinates
    let half = BigRational::new(1.into(), 2.into());
    let z = BigRational::zero();
    let p = ArrangementPoint::new(&pg, vec![half.clone(), z.clone(), half, z.clone(), z.clone(), z]).unwrap();
    let q = quotient_digraph(&pg, &p);
    assert_eq!(q.classes, vec![0b000_0101, 0b111_1010]);
    assert_eq!(q.arcs, vec![(0, 1)]);
    assert!(q.has_unique_sink_at(6));
    let r = resolution_report(&pg).unwrap();
    assert_eq!(r.betti.len(), 6);
    assert_eq!((r.krull_dim, r.depth, r.proj_dim), (2, 2, 5));
    assert!(r.cohen_macaulay);
}

#[test]
fn path_on_three_vertices() {
    let pg = parse_pargraph("vertices 3\nedges 1-2,2-3\npartition [1] [2] [3]\n").unwrap();
    let r = resolution_report(&pg).unwrap();
    // ⟨x1, x2⟩: a Koszul complex
    assert_eq!(r.betti, vec![1, 2, 1]);
    assert_eq!(r.f_vector, vec![2, 1]);
}
