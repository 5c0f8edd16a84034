use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::Zero;

use super::multigraph::Multigraph;
use super::pargraph::Pargraph;
use crate::linalg::{det_fraction_free, IntMatrix};

/// Spanning tree stored as a parent map; the root is its own parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedSpanningTree {
    pub parent: Vec<usize>,
    pub root: usize,
}

impl RootedSpanningTree {
    /// Tree edges `(child, parent)` for every non-root vertex, by child.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.parent.len())
            .filter(|&v| v != self.root)
            .map(|v| (v, self.parent[v]))
            .collect()
    }

    /// Distance to the root, or `None` if the parent map has a cycle or a
    /// dangling pointer.
    pub fn depths(&self) -> Option<Vec<usize>> {
        let n = self.parent.len();
        if self.root >= n || self.parent[self.root] != self.root {
            return None;
        }
        let mut depth = vec![usize::MAX; n];
        depth[self.root] = 0;
        for start in 0..n {
            let mut path = Vec::new();
            let mut v = start;
            while depth[v] == usize::MAX {
                if path.len() > n {
                    return None;
                }
                path.push(v);
                v = *self.parent.get(v)?;
                if v >= n {
                    return None;
                }
            }
            let mut d = depth[v];
            for &u in path.iter().rev() {
                d += 1;
                depth[u] = d;
            }
        }
        Some(depth)
    }

    /// Whether every tree edge is an edge of `g` and the parent map is acyclic.
    pub fn is_spanning_tree_of(&self, g: &Multigraph) -> bool {
        self.parent.len() == g.n()
            && self.depths().is_some()
            && self.edges().iter().all(|&(c, p)| g.multiplicity(c, p) > 0)
    }

    /// Whether the tree restricted to each block of `pg` is a spanning tree of
    /// that block.
    pub fn spans_blocks(&self, pg: &Pargraph) -> bool {
        let tree = match Multigraph::from_edges(self.parent.len(), &self.edges()) {
            Ok(t) => t,
            Err(_) => return false,
        };
        (0..pg.k()).all(|b| {
            let mask = pg.block_mask(b);
            let inner = self
                .edges()
                .iter()
                .filter(|&&(c, p)| mask >> c & 1 == 1 && mask >> p & 1 == 1)
                .count();
            inner + 1 == mask.count_ones() as usize && tree.is_connected_subset(mask)
        })
    }
}

/// Number of spanning trees, as the determinant of the Laplacian with the
/// last row and column deleted. Zero for disconnected graphs.
pub fn spanning_tree_count(g: &Multigraph) -> BigInt {
    let n = g.n();
    if n == 0 || !g.is_connected() {
        return BigInt::zero();
    }
    let lap = g.laplacian();
    let keep: Vec<usize> = (0..n - 1).collect();
    let reduced: IntMatrix = lap.submatrix(&keep, &keep);
    det_fraction_free(&reduced).expect("reduced Laplacian is square")
}

/// Deterministic spanning tree of `pg` rooted at its root whose restriction to
/// every block spans that block.
///
/// Breadth-first from the root over relevant edges, but whenever a new block is
/// entered it is flooded through its basic edges first, so every vertex of a
/// block hangs off the block's entry vertex inside the block. Neighbours are
/// visited in ascending order.
pub fn pargraph_spanning_tree(pg: &Pargraph) -> RootedSpanningTree {
    let g = pg.graph();
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = VecDeque::new();

    let enter_block = |entry: usize, from: usize, parent: &mut Vec<usize>, order: &mut VecDeque<usize>| {
        parent[entry] = from;
        let mut inner = VecDeque::from([entry]);
        order.push_back(entry);
        while let Some(v) = inner.pop_front() {
            for u in g.neighbors(v) {
                if parent[u] == usize::MAX && pg.is_basic(u, v) {
                    parent[u] = v;
                    inner.push_back(u);
                    order.push_back(u);
                }
            }
        }
    };

    let root = pg.root();
    enter_block(root, root, &mut parent, &mut order);
    while let Some(v) = order.pop_front() {
        for u in g.neighbors(v) {
            if parent[u] == usize::MAX {
                enter_block(u, v, &mut parent, &mut order);
            }
        }
    }
    RootedSpanningTree { parent, root }
}

/// Tree ordering: root first, then depth-major with ascending vertex names at
/// equal depth. Ancestors always precede descendants.
pub fn tree_ordering(t: &RootedSpanningTree) -> Vec<usize> {
    let depth = t.depths().expect("valid rooted tree");
    let mut order: Vec<usize> = (0..t.parent.len()).collect();
    order.sort_by_key(|&v| (depth[v], v));
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_for_small_graphs() {
        let k3 = Multigraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(spanning_tree_count(&k3), BigInt::from(3));
        let path = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(spanning_tree_count(&path), BigInt::from(1));
        let split = Multigraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(spanning_tree_count(&split), BigInt::zero());
        let doubled = Multigraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(spanning_tree_count(&doubled), BigInt::from(2));
        assert_eq!(spanning_tree_count(&Multigraph::new(1).unwrap()), BigInt::from(1));
    }

    #[test]
    fn tree_input_is_returned() {
        let path = Multigraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let pg = Pargraph::singletons(path.clone()).unwrap();
        let t = pargraph_spanning_tree(&pg);
        assert_eq!(t.parent, vec![1, 2, 2]);
        assert!(t.is_spanning_tree_of(&path));
        assert_eq!(tree_ordering(&t), vec![2, 1, 0]);
    }

    #[test]
    fn four_cycle_drops_one_edge() {
        let c4 = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let pg = Pargraph::singletons(c4.clone()).unwrap();
        let t = pargraph_spanning_tree(&pg);
        assert!(t.is_spanning_tree_of(&c4));
        // root 4 reaches 1 and 3 first; 2 hangs off 1
        assert_eq!(t.parent, vec![3, 0, 3, 3]);
        assert_eq!(tree_ordering(&t), vec![3, 0, 2, 1]);
    }

    #[test]
    fn block_entered_by_two_relevant_edges_is_still_spanned() {
        // root 0 adjacent to both 1 and 2, which form one block.
        let g = Multigraph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let pg = Pargraph::new(g.clone(), vec![vec![1, 2], vec![0]], 1, Some(0)).unwrap();
        let t = pargraph_spanning_tree(&pg);
        assert!(t.is_spanning_tree_of(&g));
        assert!(t.spans_blocks(&pg));
        assert_eq!(t.parent, vec![0, 0, 1]);
    }

    #[test]
    fn star_ordering() {
        let star = Multigraph::from_edges(4, &[(3, 0), (3, 2), (3, 1)]).unwrap();
        let pg = Pargraph::singletons(star).unwrap();
        let t = pargraph_spanning_tree(&pg);
        assert_eq!(tree_ordering(&t), vec![3, 0, 1, 2]);
    }

    #[test]
    fn malformed_parent_map() {
        let t = RootedSpanningTree { parent: vec![1, 0, 2], root: 2 };
        assert!(t.depths().is_none());
    }
}
