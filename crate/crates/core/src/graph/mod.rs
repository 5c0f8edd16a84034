//! Multigraphs, vertex partitions and the combinatorics built on them.
//!
//! Vertices are `0..n` in the API and `1..n` in documents and JSON output.

mod multigraph;
mod pargraph;
mod parse;
mod tree;

pub use multigraph::{mask_iter, Multigraph, VertexMask, MAX_VERTICES};
pub use pargraph::{BlockMask, Pargraph, Parset, ParsetFilter};
pub use parse::{parse_multigraph, parse_pargraph, to_document};
pub use tree::{pargraph_spanning_tree, spanning_tree_count, tree_ordering, RootedSpanningTree};
