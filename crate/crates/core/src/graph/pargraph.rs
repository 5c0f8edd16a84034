use super::multigraph::{mask_iter, Multigraph, VertexMask};
use crate::error::{Error, Result};

/// Bitmask over block indices; bit `i` stands for block `i`.
pub type BlockMask = u64;

/// A connected multigraph with a partition of its vertices into blocks.
///
/// One block is the sink block; the root is a vertex inside it. When every
/// block induces a connected subgraph this is a pargraph, otherwise the value
/// carries the `pseudo` flag and only the constructions that tolerate
/// disconnected blocks should be applied to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pargraph {
    graph: Multigraph,
    blocks: Vec<Vec<usize>>,
    block_masks: Vec<VertexMask>,
    block_of: Vec<usize>,
    sink: usize,
    root: usize,
    pseudo: bool,
}

impl Pargraph {
    /// Validates and builds a pargraph. `root` defaults to the largest vertex,
    /// which must then lie in the sink block.
    pub fn new(
        graph: Multigraph,
        blocks: Vec<Vec<usize>>,
        sink: usize,
        root: Option<usize>,
    ) -> Result<Self> {
        Self::build(graph, blocks, sink, root, false)
    }

    /// Like [`Pargraph::new`] but tolerates blocks that induce disconnected
    /// subgraphs.
    pub fn new_pseudo(
        graph: Multigraph,
        blocks: Vec<Vec<usize>>,
        sink: usize,
        root: Option<usize>,
    ) -> Result<Self> {
        Self::build(graph, blocks, sink, root, true)
    }

    /// Every vertex its own block; the sink block is the one holding the last
    /// vertex.
    pub fn singletons(graph: Multigraph) -> Result<Self> {
        let n = graph.n();
        let blocks = (0..n).map(|v| vec![v]).collect();
        Self::new(graph, blocks, n.saturating_sub(1), None)
    }

    fn build(
        graph: Multigraph,
        mut blocks: Vec<Vec<usize>>,
        sink: usize,
        root: Option<usize>,
        allow_pseudo: bool,
    ) -> Result<Self> {
        let n = graph.n();
        if n == 0 {
            return Err(Error::Validation("graph has no vertices".into()));
        }
        if !graph.is_connected() {
            return Err(Error::Validation("graph is not connected".into()));
        }
        if blocks.len() > 64 {
            return Err(Error::Validation("more than 64 blocks".into()));
        }
        let mut block_of = vec![usize::MAX; n];
        let mut block_masks = Vec::with_capacity(blocks.len());
        for (b, block) in blocks.iter_mut().enumerate() {
            if block.is_empty() {
                return Err(Error::Validation(format!("block {} is empty", b + 1)));
            }
            block.sort_unstable();
            let mut mask = 0;
            for &v in block.iter() {
                if v >= n {
                    return Err(Error::Validation(format!(
                        "block {} names vertex {} outside 1..{n}",
                        b + 1,
                        v + 1
                    )));
                }
                if block_of[v] != usize::MAX {
                    return Err(Error::Validation(format!(
                        "vertex {} appears in more than one block",
                        v + 1
                    )));
                }
                block_of[v] = b;
                mask |= 1u64 << v;
            }
            block_masks.push(mask);
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::Validation(format!("vertex {} is in no block", v + 1)));
        }
        if sink >= blocks.len() {
            return Err(Error::Validation(format!(
                "sink block {} out of range 1..{}",
                sink + 1,
                blocks.len()
            )));
        }
        let disconnected = block_masks.iter().position(|&m| !graph.is_connected_subset(m));
        if let Some(b) = disconnected {
            if !allow_pseudo {
                return Err(Error::Validation(format!(
                    "block {} does not induce a connected subgraph",
                    b + 1
                )));
            }
        }
        let root = root.unwrap_or(n - 1);
        if root >= n || block_of[root] != sink {
            return Err(Error::Validation(format!(
                "root {} is not in the sink block {}",
                root + 1,
                sink + 1
            )));
        }
        Ok(Pargraph {
            graph,
            blocks,
            block_masks,
            block_of,
            sink,
            root,
            pseudo: disconnected.is_some(),
        })
    }

    /// Same pargraph rooted at a different vertex of the sink block.
    pub fn with_root(&self, root: usize) -> Result<Self> {
        Self::build(self.graph.clone(), self.blocks.clone(), self.sink, Some(root), self.pseudo)
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Number of blocks.
    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_mask(&self, b: usize) -> VertexMask {
        self.block_masks[b]
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    pub fn sink_block(&self) -> usize {
        self.sink
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn is_pseudo(&self) -> bool {
        self.pseudo
    }

    pub fn all_blocks(&self) -> BlockMask {
        if self.k() == 64 {
            u64::MAX
        } else {
            (1u64 << self.k()) - 1
        }
    }

    pub fn is_basic(&self, i: usize, j: usize) -> bool {
        self.block_of[i] == self.block_of[j]
    }

    /// Distinct edges joining two different blocks, `(i, j, multiplicity)` with `i < j`.
    pub fn relevant_edges(&self) -> Vec<(usize, usize, u32)> {
        self.graph.edges().into_iter().filter(|&(i, j, _)| !self.is_basic(i, j)).collect()
    }

    /// Distinct edges inside a block.
    pub fn basic_edges(&self) -> Vec<(usize, usize, u32)> {
        self.graph.edges().into_iter().filter(|&(i, j, _)| self.is_basic(i, j)).collect()
    }

    pub fn vertices_of(&self, blocks: BlockMask) -> VertexMask {
        mask_iter(blocks).fold(0, |acc, b| acc | self.block_masks[b])
    }

    pub fn parset(&self, blocks: BlockMask) -> Parset {
        let blocks = blocks & self.all_blocks();
        let vertices = self.vertices_of(blocks);
        let complement = self.graph.all_vertices() & !vertices;
        Parset {
            blocks,
            vertices,
            connected: self.graph.is_connected_subset(vertices),
            complement_connected: self.graph.is_connected_subset(complement),
        }
    }

    /// The parset made of the given block indices.
    pub fn parset_of(&self, blocks: &[usize]) -> Parset {
        self.parset(blocks.iter().fold(0, |m, &b| m | (1u64 << b)))
    }

    pub fn complement(&self, s: &Parset) -> Parset {
        self.parset(self.all_blocks() & !s.blocks)
    }

    /// Number of edges from `v` to vertices outside `s`.
    pub fn outdeg(&self, s: &Parset, v: usize) -> Result<u32> {
        if v >= self.n() || !s.contains_vertex(v) {
            return Err(Error::Domain { vertex: v + 1 });
        }
        Ok(self.graph.edges_to(v, !s.vertices))
    }

    /// Exponent vector of `x^{S -> S̄}`: outdegrees on `S`, zero elsewhere.
    pub fn outdeg_vector(&self, s: &Parset) -> Vec<u32> {
        let outside = !s.vertices;
        (0..self.n())
            .map(|v| if s.contains_vertex(v) { self.graph.edges_to(v, outside) } else { 0 })
            .collect()
    }

    /// Lazily yields all parsets passing `filter`, ordered by ascending block mask.
    pub fn parsets(&self, filter: ParsetFilter) -> impl Iterator<Item = Parset> + '_ {
        let sink_bit = 1u64 << self.sink;
        let count = if self.k() == 64 { u64::MAX } else { 1u64 << self.k() };
        (0..count).filter_map(move |mask| {
            if filter.exclude_sink && (mask == 0 || mask & sink_bit != 0) {
                return None;
            }
            let s = self.parset(mask);
            if filter.connected && !s.connected {
                return None;
            }
            if filter.connected_complement && !s.complement_connected {
                return None;
            }
            Some(s)
        })
    }

    pub fn enumerate_parsets(&self, filter: ParsetFilter) -> Vec<Parset> {
        self.parsets(filter).collect()
    }

    /// Parsets `S` avoiding the sink block with `S` and its complement both
    /// connected: the index set of the Gröbner basis and of the 0-cells.
    pub fn doubly_connected_parsets(&self) -> Vec<Parset> {
        self.enumerate_parsets(ParsetFilter::DOUBLY_CONNECTED)
    }
}

/// Union of blocks, stored as both a block mask and a vertex mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Parset {
    pub blocks: BlockMask,
    pub vertices: VertexMask,
    connected: bool,
    complement_connected: bool,
}

impl Parset {
    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn complement_is_connected(&self) -> bool {
        self.complement_connected
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        v < 64 && self.vertices >> v & 1 == 1
    }

    pub fn contains_block(&self, b: usize) -> bool {
        b < 64 && self.blocks >> b & 1 == 1
    }

    pub fn block_indices(&self) -> Vec<usize> {
        mask_iter(self.blocks).collect()
    }

    pub fn vertex_list(&self) -> Vec<usize> {
        mask_iter(self.vertices).collect()
    }

    pub fn size(&self) -> usize {
        self.vertices.count_ones() as usize
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ParsetFilter {
    /// Drop parsets containing the sink block, and the empty parset.
    pub exclude_sink: bool,
    pub connected: bool,
    pub connected_complement: bool,
}

impl ParsetFilter {
    pub const ALL: ParsetFilter =
        ParsetFilter { exclude_sink: false, connected: false, connected_complement: false };
    pub const AVOIDING_SINK: ParsetFilter =
        ParsetFilter { exclude_sink: true, connected: false, connected_complement: false };
    pub const DOUBLY_CONNECTED: ParsetFilter =
        ParsetFilter { exclude_sink: true, connected: true, connected_complement: true };
}
