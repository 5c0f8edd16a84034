//! The bounded complex of the graphical arrangement and the cellular
//! resolution of the parking ideal it supports.

mod arrangement;
mod complex;
mod resolution;

pub use arrangement::{
    in_bounded_complex, quotient_digraph, zero_cells, ArrangementPoint, QuotientDigraph, ZeroCell,
};
pub use complex::{
    bounded_complex, bounded_complex_by_barycenters, conforms, euler_characteristic, f_vector,
    face_dimension, LabelledCell, BARYCENTER_SUBSET_LIMIT, MAX_COMPLEX_BLOCKS,
};
pub use resolution::{
    euler_and_hilbert_check, euler_and_hilbert_check_cells, graded_betti, report_from_cells,
    resolution_report, ResolutionReport,
};
