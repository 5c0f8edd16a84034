//! Chip-firing on partitioned graphs and the algebra attached to it.
//!
//! A *pargraph* is a connected multigraph whose vertices are partitioned into
//! blocks that each induce a connected subgraph. Chips may only be fired by
//! whole blocks. This crate computes, exactly:
//!
//! - reduced divisors and chip-firing equivalence ([`chipfire`]);
//! - the Picard group `Z^n / L` of the block-firing lattice, with forest and
//!   coprime-spanning-tree freeness certificates ([`picard`]);
//! - the Gröbner basis of the toppling ideal under a weighted spanning-tree
//!   order, the parking ideal and Hilbert functions ([`ideals`]);
//! - the bounded complex of the restricted graphical arrangement, Betti numbers
//!   of its cellular resolution and the Cohen–Macaulay report ([`cellres`]).
//!
//! The integer linear algebra underneath (Smith form, determinants, lattice
//! membership) lives in [`linalg`]; [`cli`] wires everything into the
//! `pargraph` command-line tool.
//!
//! ```
//! use pargraph::graph::parse_pargraph;
//! use pargraph::picard::picard_structure;
//!
//! let pg = parse_pargraph(
//!     "vertices 3\nedges 1-2,2-3,1-3\npartition [1] [2] [3]\n",
//! ).unwrap();
//! let pic = picard_structure(&pg);
//! assert_eq!(pic.free_rank, 1);
//! assert_eq!(pic.torsion, vec![3u32.into()]);
//! ```

pub mod cellres;
pub mod chipfire;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod ideals;
pub mod linalg;
pub mod picard;

pub use error::{Error, Result};
