use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Vertex sets are bitmasks; bit `v` stands for vertex `v`.
pub type VertexMask = u64;

/// Largest supported vertex count (one bit per vertex in a [`VertexMask`]).
pub const MAX_VERTICES: usize = 64;

/// Loop-free undirected multigraph on vertices `0..n`.
///
/// Multiplicities live in a dense symmetric `n x n` table; a neighbour bitmask
/// per vertex makes connectivity queries on vertex subsets cheap.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    mult: Vec<u32>,
    adj: Vec<VertexMask>,
}

impl Multigraph {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Validation(format!(
                "{n} vertices exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        Ok(Multigraph { n, mult: vec![0; n * n], adj: vec![0; n] })
    }

    /// Builds a graph from an edge list; repeating a pair raises its multiplicity.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n)?;
        for &(i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        self.add_edges(i, j, 1)
    }

    pub fn add_edges(&mut self, i: usize, j: usize, count: u32) -> Result<()> {
        if i >= self.n || j >= self.n {
            return Err(Error::Validation(format!(
                "edge {}-{} references a vertex outside 1..{}",
                i + 1,
                j + 1,
                self.n
            )));
        }
        if i == j {
            return Err(Error::Validation(format!("loop at vertex {}", i + 1)));
        }
        if count == 0 {
            return Ok(());
        }
        self.mult[i * self.n + j] += count;
        self.mult[j * self.n + i] += count;
        self.adj[i] |= 1 << j;
        self.adj[j] |= 1 << i;
        Ok(())
    }

    /// Copy with one parallel copy of `{i, j}` removed (no-op if absent).
    pub fn without_edge(&self, i: usize, j: usize) -> Self {
        let mut g = self.clone();
        if i < self.n && j < self.n && g.mult[i * self.n + j] > 0 {
            g.mult[i * self.n + j] -= 1;
            g.mult[j * self.n + i] -= 1;
            if g.mult[i * self.n + j] == 0 {
                g.adj[i] &= !(1 << j);
                g.adj[j] &= !(1 << i);
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn all_vertices(&self) -> VertexMask {
        if self.n == MAX_VERTICES {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn multiplicity(&self, i: usize, j: usize) -> u32 {
        self.mult[i * self.n + j]
    }

    pub fn neighbor_mask(&self, i: usize) -> VertexMask {
        self.adj[i]
    }

    /// Neighbours of `i` in ascending order.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        mask_iter(self.adj[i])
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.mult[i * self.n..(i + 1) * self.n].iter().sum()
    }

    /// Distinct edges `(i, j, multiplicity)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let m = self.multiplicity(i, j);
                if m > 0 {
                    out.push((i, j, m));
                }
            }
        }
        out
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.edges().iter().map(|&(_, _, m)| m as u64).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.mult.iter().all(|&m| m <= 1)
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.is_connected_subset(self.all_vertices())
    }

    /// Whether the induced subgraph on `mask` is connected. The empty set is not.
    pub fn is_connected_subset(&self, mask: VertexMask) -> bool {
        if mask == 0 {
            return false;
        }
        self.component_of(mask.trailing_zeros() as usize, mask) == mask
    }

    /// Vertices reachable from `start` inside the induced subgraph on `within`.
    pub fn component_of(&self, start: usize, within: VertexMask) -> VertexMask {
        let mut reached: VertexMask = 1 << start;
        let mut frontier = reached;
        while frontier != 0 {
            let mut next = 0;
            for v in mask_iter(frontier) {
                next |= self.adj[v];
            }
            frontier = next & within & !reached;
            reached |= frontier;
        }
        reached
    }

    /// Connected components of the induced subgraph on `within`, ordered by
    /// smallest vertex.
    pub fn components(&self, within: VertexMask) -> Vec<VertexMask> {
        let mut rest = within;
        let mut out = Vec::new();
        while rest != 0 {
            let c = self.component_of(rest.trailing_zeros() as usize, within);
            out.push(c);
            rest &= !c;
        }
        out
    }

    /// Whether the graph has no cycle (parallel edges count as a cycle).
    pub fn is_forest(&self) -> bool {
        let comps = self.components(self.all_vertices()).len() as u64;
        self.is_simple() && self.edge_count() + comps == self.n as u64
    }

    /// Number of edges (with multiplicity) between `i` and the vertex set `mask`.
    pub fn edges_to(&self, i: usize, mask: VertexMask) -> u32 {
        mask_iter(mask & self.adj[i]).map(|j| self.multiplicity(i, j)).sum()
    }

    /// Laplacian rows as machine integers.
    pub fn laplacian_rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        if i == j {
                            self.degree(i) as i64
                        } else {
                            -(self.multiplicity(i, j) as i64)
                        }
                    })
                    .collect()
            })
            .collect()
    }

    pub fn laplacian(&self) -> IntMatrix {
        let rows = self.laplacian_rows();
        IntMatrix::from_fn(self.n, self.n, |i, j| BigInt::from(rows[i][j]))
    }
}

/// Iterates the set bits of a mask in ascending order.
pub fn mask_iter(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}
