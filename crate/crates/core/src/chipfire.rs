//! Divisors, block firings and reduced divisors.
//!
//! Firing a parset `S` subtracts `Σ_{i∈S} b_{V_i}` from a divisor, where
//! `b_{V_i}` is the sum of the Laplacian rows of block `i`. Every vertex of
//! `S` sends one chip along each edge leaving `S`. A divisor is reduced when
//! it is non-negative off the sink block and no parset avoiding the sink block
//! can fire without some vertex going negative.

use std::collections::VecDeque;

use num_bigint::BigInt;
use rand::seq::IndexedRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Pargraph, Parset, ParsetFilter};
use crate::linalg::{lattice_contains, IntMatrix};

/// Integer chip counts, one per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Divisor(pub Vec<i64>);

impl Divisor {
    pub fn zero(n: usize) -> Self {
        Divisor(vec![0; n])
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<i64>> for Divisor {
    fn from(v: Vec<i64>) -> Self {
        Divisor(v)
    }
}

/// Net number of times each block fired.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FiringScript {
    pub counts: Vec<i64>,
}

impl FiringScript {
    pub fn zero(k: usize) -> Self {
        FiringScript { counts: vec![0; k] }
    }

    pub fn is_zero(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    fn record(&mut self, s: &Parset, times: i64) {
        for b in s.block_indices() {
            self.counts[b] += times;
        }
    }

    /// `D - Σ_i counts[i] · b_{V_i}`
    pub fn apply(&self, pg: &Pargraph, d: &Divisor) -> Divisor {
        let vectors = laplacian_block_vectors(pg);
        let mut out = d.0.clone();
        for (b, &c) in self.counts.iter().enumerate() {
            for (x, bv) in out.iter_mut().zip(&vectors[b]) {
                *x -= c * bv;
            }
        }
        Divisor(out)
    }
}

/// `b_{V_1}, …, b_{V_k}`: blockwise sums of Laplacian rows.
pub fn laplacian_block_vectors(pg: &Pargraph) -> Vec<Vec<i64>> {
    let rows = pg.graph().laplacian_rows();
    pg.blocks()
        .iter()
        .map(|block| {
            let mut v = vec![0i64; pg.n()];
            for &j in block {
                for (acc, x) in v.iter_mut().zip(&rows[j]) {
                    *acc += x;
                }
            }
            v
        })
        .collect()
}

/// `n x k` matrix whose columns generate the Laplacian lattice.
pub fn block_lattice_matrix(pg: &Pargraph) -> IntMatrix {
    IntMatrix::from_columns(pg.n(), &laplacian_block_vectors(pg)).expect("columns have length n")
}

/// Change in chips when `s` fires: `(S̄ -> S) - (S -> S̄)`.
pub fn firing_delta(pg: &Pargraph, s: &Parset) -> Vec<i64> {
    let out = pg.outdeg_vector(s);
    let back = pg.outdeg_vector(&pg.complement(s));
    out.iter().zip(&back).map(|(&o, &b)| b as i64 - o as i64).collect()
}

pub fn is_legal(pg: &Pargraph, d: &Divisor, s: &Parset) -> bool {
    let outside = !s.vertices;
    s.vertex_list()
        .into_iter()
        .all(|v| d.0[v] >= pg.graph().edges_to(v, outside) as i64)
}

/// Fires `s` once. Legality is not checked.
pub fn fire(pg: &Pargraph, d: &Divisor, s: &Parset) -> Divisor {
    fire_times(pg, d, s, 1)
}

fn fire_times(pg: &Pargraph, d: &Divisor, s: &Parset, times: i64) -> Divisor {
    let delta = firing_delta(pg, s);
    Divisor(d.0.iter().zip(&delta).map(|(x, dx)| x + times * dx).collect())
}

fn nonnegative_off_sink(pg: &Pargraph, d: &Divisor) -> bool {
    let sink = pg.block_mask(pg.sink_block());
    d.0.iter().enumerate().all(|(v, &x)| sink >> v & 1 == 1 || x >= 0)
}

pub fn is_reduced(pg: &Pargraph, d: &Divisor) -> bool {
    nonnegative_off_sink(pg, d)
        && !pg.parsets(ParsetFilter::AVOIDING_SINK).any(|s| is_legal(pg, d, &s))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reduction {
    pub divisor: Divisor,
    pub script: FiringScript,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ReduceOptions {
    /// Accept divisors with negative entries by first moving chips outward
    /// from the sink block. Not every such divisor can be repaired; those
    /// still fail with `NotEffective`.
    pub allow_non_effective: bool,
}

/// The reduced divisor equivalent to an effective divisor, and the net firing
/// script that reaches it.
pub fn reduce(pg: &Pargraph, d: &Divisor) -> Result<Reduction> {
    reduce_with(pg, d, ReduceOptions::default())
}

pub fn reduce_with(pg: &Pargraph, d: &Divisor, opts: ReduceOptions) -> Result<Reduction> {
    if d.len() != pg.n() {
        return Err(Error::DimensionMismatch { expected: pg.n(), got: d.len() });
    }
    let mut script = FiringScript::zero(pg.k());
    let mut cur = d.clone();
    if let Some(v) = cur.0.iter().position(|&x| x < 0) {
        if !opts.allow_non_effective {
            return Err(Error::NotEffective { vertex: v + 1, value: cur.0[v] });
        }
        cur = make_nonnegative_off_sink(pg, cur, &mut script)?;
    }

    let singles: Vec<Parset> = (0..pg.k())
        .filter(|&b| b != pg.sink_block())
        .map(|b| pg.parset_of(&[b]))
        .collect();
    let candidates = pg.enumerate_parsets(ParsetFilter::AVOIDING_SINK);
    loop {
        // Single blocks first; they are cheap and do most of the work.
        let mut fired = true;
        while fired {
            fired = false;
            for s in &singles {
                if is_legal(pg, &cur, s) {
                    cur = fire(pg, &cur, s);
                    script.record(s, 1);
                    fired = true;
                }
            }
        }
        match candidates.iter().find(|s| is_legal(pg, &cur, s)) {
            Some(s) => {
                cur = fire(pg, &cur, s);
                script.record(s, 1);
            }
            None => return Ok(Reduction { divisor: cur, script }),
        }
    }
}

/// Block distances from the sink block in the quotient graph on blocks.
fn block_distances(pg: &Pargraph) -> Vec<usize> {
    let mut dist = vec![usize::MAX; pg.k()];
    dist[pg.sink_block()] = 0;
    let mut queue = VecDeque::from([pg.sink_block()]);
    while let Some(b) = queue.pop_front() {
        for &v in &pg.blocks()[b] {
            for u in pg.graph().neighbors(v) {
                let c = pg.block_of(u);
                if dist[c] == usize::MAX {
                    dist[c] = dist[b] + 1;
                    queue.push_back(c);
                }
            }
        }
    }
    dist
}

/// Layer by layer, deepest first: a negative vertex at block distance `d`
/// borrows from layer `d - 1` by un-firing every block at distance `>= d`.
/// Deeper layers are untouched by later steps, so this terminates. A
/// negative vertex with no edge towards the sink side cannot be repaired.
fn make_nonnegative_off_sink(
    pg: &Pargraph,
    mut cur: Divisor,
    script: &mut FiringScript,
) -> Result<Divisor> {
    let dist = block_distances(pg);
    let depth = dist.iter().copied().max().unwrap_or(0);
    for layer in (1..=depth).rev() {
        let mask = (0..pg.k())
            .filter(|&b| dist[b] >= layer)
            .fold(0u64, |m, b| m | 1 << b);
        let s = pg.parset(mask);
        let outside = !s.vertices;
        for v in s.vertex_list() {
            if dist[pg.block_of(v)] != layer || cur.0[v] >= 0 {
                continue;
            }
            let gain = pg.graph().edges_to(v, outside) as i64;
            if gain == 0 {
                return Err(Error::NotEffective { vertex: v + 1, value: cur.0[v] });
            }
            let times = (-cur.0[v] + gain - 1) / gain;
            cur = fire_times(pg, &cur, &s, -times);
            script.record(&s, -times);
        }
    }
    Ok(cur)
}

/// Chip-firing equivalence: `d1 - d2` lies in the Laplacian lattice.
pub fn equivalent(pg: &Pargraph, d1: &Divisor, d2: &Divisor) -> bool {
    if d1.len() != pg.n() || d2.len() != pg.n() {
        return false;
    }
    if d1.degree() != d2.degree() {
        return false;
    }
    let diff: Vec<BigInt> = d1.0.iter().zip(&d2.0).map(|(a, b)| BigInt::from(a - b)).collect();
    lattice_contains(&block_lattice_matrix(pg), &diff).unwrap_or(false)
}

/// Plays legal firings from parsets avoiding the sink block, chosen uniformly
/// at random, until none is legal. Returns the final divisor and the number of
/// firings.
pub fn random_legal_play<R: Rng + ?Sized>(pg: &Pargraph, d: &Divisor, rng: &mut R) -> (Divisor, usize) {
    let candidates = pg.enumerate_parsets(ParsetFilter::AVOIDING_SINK);
    let mut cur = d.clone();
    let mut steps = 0;
    loop {
        let legal: Vec<&Parset> = candidates.iter().filter(|s| is_legal(pg, &cur, s)).collect();
        match legal.choose(rng) {
            Some(s) => {
                cur = fire(pg, &cur, s);
                steps += 1;
            }
            None => return (cur, steps),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Multigraph;

    fn c3() -> Pargraph {
        Pargraph::singletons(Multigraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()).unwrap()
    }

    fn c4_merged() -> Pargraph {
        let g = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        Pargraph::new(g, vec![vec![0], vec![1], vec![2, 3]], 2, None).unwrap()
    }

    #[test]
    fn block_vectors() {
        assert_eq!(
            laplacian_block_vectors(&c3()),
            vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]
        );
        assert_eq!(laplacian_block_vectors(&c4_merged())[2], vec![-1, -1, 1, 1]);
        let g = Multigraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let one = Pargraph::new(g, vec![vec![0, 1, 2]], 0, None).unwrap();
        assert_eq!(laplacian_block_vectors(&one), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn legality_and_firing() {
        let pg = c3();
        let s = pg.parset_of(&[0]);
        let d = Divisor(vec![2, 0, 0]);
        assert!(is_legal(&pg, &d, &s));
        assert!(!is_legal(&pg, &Divisor::zero(3), &s));
        assert_eq!(fire(&pg, &d, &s), Divisor(vec![0, 1, 1]));
        let all = pg.parset(pg.all_blocks());
        assert_eq!(fire(&pg, &d, &all), d);
        let back = fire(&pg, &fire(&pg, &d, &s), &pg.complement(&s));
        assert_eq!(back, d);
    }

    #[test]
    fn reduced_checks() {
        let pg = c3();
        assert!(is_reduced(&pg, &Divisor::zero(3)));
        assert!(is_reduced(&pg, &Divisor(vec![0, 1, 1])));
        assert!(!is_reduced(&pg, &Divisor(vec![2, 0, 0])));
    }

    #[test]
    fn reduce_triangle() {
        let pg = c3();
        let r = reduce(&pg, &Divisor(vec![2, 0, 0])).unwrap();
        assert_eq!(r.divisor, Divisor(vec![0, 1, 1]));
        assert_eq!(r.script.counts, vec![1, 0, 0]);
        let again = reduce(&pg, &r.divisor).unwrap();
        assert_eq!(again.divisor, r.divisor);
        assert!(again.script.is_zero());
    }

    #[test]
    fn reduce_merged_four_cycle() {
        // vertex 1 has neighbours 2 and 4: firing it gives (0,1,0,1).
        let pg = c4_merged();
        let r = reduce(&pg, &Divisor(vec![2, 0, 0, 0])).unwrap();
        assert_eq!(r.divisor, Divisor(vec![0, 1, 0, 1]));
        assert_eq!(r.script.apply(&pg, &Divisor(vec![2, 0, 0, 0])), r.divisor);
    }

    #[test]
    fn non_effective_needs_flag() {
        let pg = c3();
        let d = Divisor(vec![-1, 0, 3]);
        assert!(matches!(reduce(&pg, &d), Err(Error::NotEffective { vertex: 1, value: -1 })));
        let opts = ReduceOptions { allow_non_effective: true };
        let r = reduce_with(&pg, &d, opts).unwrap();
        assert!(is_reduced(&pg, &r.divisor));
        assert!(equivalent(&pg, &d, &r.divisor));
        assert_eq!(r.script.apply(&pg, &d), r.divisor);
    }

    #[test]
    fn interior_deficit_cannot_be_repaired() {
        // block {1,2,3} path with 1 interior-only on the far side
        let g = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let pg = Pargraph::new(g, vec![vec![0, 1, 2], vec![3]], 1, None).unwrap();
        let opts = ReduceOptions { allow_non_effective: true };
        assert!(matches!(
            reduce_with(&pg, &Divisor(vec![-1, 0, 0, 5]), opts),
            Err(Error::NotEffective { vertex: 1, .. })
        ));
    }

    #[test]
    fn equivalence() {
        let pg = c3();
        let d = Divisor(vec![2, 0, 0]);
        assert!(equivalent(&pg, &d, &fire(&pg, &d, &pg.parset_of(&[1]))));
        assert!(!equivalent(&pg, &Divisor(vec![1, 0, 0]), &Divisor(vec![0, 1, 0])));
        assert!(!equivalent(&pg, &Divisor(vec![1, 0, 0]), &Divisor(vec![0, 0, 0])));
        assert!(equivalent(&pg, &Divisor(vec![3, 0, 0]), &Divisor(vec![0, 3, 0])));
    }
}
