//! Exhaustive small-instance corpus and the invariant suite run over it.
//!
//! Graphs are generated by enumerating edge sets and keeping the smallest
//! relabelling of each connected one, so every connected simple graph on `n`
//! vertices appears exactly once. Each is paired with every partition into
//! connected blocks and every choice of sink block (rooted at its largest
//! vertex).

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cellres::{bounded_complex, euler_and_hilbert_check_cells, report_from_cells, zero_cells};
use crate::chipfire::{is_reduced, random_legal_play, reduce, Divisor};
use crate::graph::{to_document, Multigraph, Pargraph};
use crate::ideals::{
    groebner_basis, lead_divisible, normal_form, parking_ideal, toppling_generators, verify_buchberger,
    verify_minimal, MRevOrder, Monomial,
};
use crate::picard::{freeness_by_forest, picard_structure, search_coprime_alternative};

/// Largest vertex count the isomorphism-naive generator accepts.
pub const MAX_CORPUS_VERTICES: usize = 7;

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { break };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

fn mask_graph(n: usize, pairs: &[(usize, usize)], mask: u32) -> Multigraph {
    let edges: Vec<(usize, usize)> =
        pairs.iter().enumerate().filter(|(e, _)| mask >> e & 1 == 1).map(|(_, &p)| p).collect();
    Multigraph::from_edges(n, &edges).expect("pairs are in range")
}

/// All connected simple graphs on `n` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Vec<Multigraph> {
    assert!((1..=MAX_CORPUS_VERTICES).contains(&n), "corpus supports 1..={MAX_CORPUS_VERTICES} vertices");
    let pairs = pair_index(n);
    let index: BTreeMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(e, &p)| (p, e)).collect();
    // for each permutation, where each pair index is sent
    let images: Vec<Vec<usize>> = permutations(n)
        .iter()
        .map(|perm| {
            pairs
                .iter()
                .map(|&(i, j)| index[&(perm[i].min(perm[j]), perm[i].max(perm[j]))])
                .collect()
        })
        .collect();
    let canonical: BTreeSet<u32> = (0u32..1 << pairs.len())
        .into_par_iter()
        .filter(|&m| mask_graph(n, &pairs, m).is_connected())
        .map(|m| {
            images
                .iter()
                .map(|img| (0..pairs.len()).filter(|&e| m >> e & 1 == 1).fold(0u32, |a, e| a | 1 << img[e]))
                .min()
                .unwrap()
        })
        .collect();
    canonical.into_iter().map(|m| mask_graph(n, &pairs, m)).collect()
}

/// Partitions of the vertices into blocks inducing connected subgraphs.
pub fn connected_partitions(g: &Multigraph) -> Vec<Vec<Vec<usize>>> {
    let n = g.n();
    let mut out = Vec::new();
    let mut assign = vec![0usize; n];
    fn rec(g: &Multigraph, at: usize, used: usize, assign: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
        if at == assign.len() {
            let mut blocks = vec![Vec::new(); used];
            for (v, &b) in assign.iter().enumerate() {
                blocks[b].push(v);
            }
            let connected = blocks
                .iter()
                .all(|b| g.is_connected_subset(b.iter().fold(0u64, |m, &v| m | 1 << v)));
            if connected {
                out.push(blocks);
            }
            return;
        }
        for b in 0..=used {
            assign[at] = b;
            rec(g, at + 1, used.max(b + 1), assign, out);
        }
    }
    rec(g, 0, 0, &mut assign, &mut out);
    out
}

/// Every pargraph on up to `limit` vertices, in a fixed order.
pub fn corpus(limit: usize) -> Vec<Pargraph> {
    let mut out = Vec::new();
    for n in 1..=limit {
        for g in connected_graphs(n) {
            for blocks in connected_partitions(&g) {
                for sink in 0..blocks.len() {
                    let root = *blocks[sink].iter().max().unwrap();
                    out.push(
                        Pargraph::new(g.clone(), blocks.clone(), sink, Some(root))
                            .expect("generated partitions are valid"),
                    );
                }
            }
        }
    }
    out
}

/// Deterministic per-instance generator.
pub fn instance_rng(seed: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Effective divisor of uniformly random degree `≤ max_degree`, chips dropped
/// on uniformly random vertices.
pub fn random_effective_divisor<R: Rng + ?Sized>(n: usize, max_degree: u64, rng: &mut R) -> Divisor {
    let mut d = vec![0i64; n];
    for _ in 0..rng.random_range(0..=max_degree) {
        d[rng.random_range(0..n)] += 1;
    }
    Divisor(d)
}

pub type Check = std::result::Result<(), String>;

/// Certificates never contradict the Smith form.
pub fn check_picard(pg: &Pargraph) -> Check {
    let pic = picard_structure(pg);
    if pic.lattice_rank + 1 != pg.k() {
        return Err(format!("lattice rank {} with {} blocks", pic.lattice_rank, pg.k()));
    }
    let forest = freeness_by_forest(pg).map_err(|e| e.to_string())?;
    for cert in forest.iter().chain(search_coprime_alternative(pg).iter()) {
        if !cert.verify(pg) {
            return Err(format!("{} certificate does not verify", cert.kind()));
        }
        if !pic.is_free() {
            return Err(format!("{} certificate but torsion {:?}", cert.kind(), pic.torsion));
        }
    }
    Ok(())
}

/// Buchberger's criterion, lead terms on the parset side, homogeneity, and
/// every toppling generator reducible by some Gröbner lead.
pub fn check_groebner(pg: &Pargraph) -> Check {
    let ord = MRevOrder::for_pargraph(pg).map_err(|e| e.to_string())?;
    let gb = groebner_basis(pg);
    for g in &gb {
        if ord.compare(&g.lead, &g.tail) != std::cmp::Ordering::Greater {
            return Err(format!("lead {} is not leading against {}", g.lead, g.tail));
        }
        if !g.is_homogeneous() {
            return Err(format!("{} - {} is not homogeneous", g.lead, g.tail));
        }
    }
    if !verify_buchberger(&gb, &ord).map_err(|e| e.to_string())? {
        return Err("an S-polynomial does not reduce to zero".into());
    }
    if let Some(g) = toppling_generators(pg).iter().find(|g| !lead_divisible(&g.lead, &gb)) {
        return Err(format!("generator lead {} escapes the basis", g.lead));
    }
    Ok(())
}

/// Random legal firing orders agree with the reduction, which agrees with
/// the normal form.
pub fn check_abelianity(pg: &Pargraph, rng: &mut ChaCha8Rng, divisors: usize, plays: usize) -> Check {
    let ord = MRevOrder::for_pargraph(pg).map_err(|e| e.to_string())?;
    let gb = groebner_basis(pg);
    let n = pg.n();
    for _ in 0..divisors {
        let d = random_effective_divisor(n, 2 * n as u64, rng);
        let r = reduce(pg, &d).map_err(|e| e.to_string())?.divisor;
        if !is_reduced(pg, &r) {
            return Err(format!("reduce({:?}) = {:?} is not reduced", d.0, r.0));
        }
        for _ in 0..plays {
            let (end, _) = random_legal_play(pg, &d, rng);
            if end != r {
                return Err(format!("play from {:?} ends at {:?}, not {:?}", d.0, end.0, r.0));
            }
        }
        let x = Monomial(d.0.iter().map(|&c| c as u32).collect());
        let nf = normal_form(&x, &gb, &ord);
        if nf.0.iter().zip(&r.0).any(|(&a, &b)| a as i64 != b) {
            return Err(format!("normal form of {:?} is {:?}, reduction {:?}", d.0, nf.0, r.0));
        }
    }
    Ok(())
}

/// Minimal generators, none on the sink block, matching the 0-cell labels.
pub fn check_parking(pg: &Pargraph) -> Check {
    let gens = parking_ideal(pg);
    if !verify_minimal(&gens) {
        return Err("parking generators are not minimal".into());
    }
    let sink = pg.block_mask(pg.sink_block());
    if let Some(m) = gens.iter().find(|m| m.support() & sink != 0) {
        return Err(format!("generator {m} uses a sink variable"));
    }
    let mut a = gens;
    let mut b: Vec<Monomial> = zero_cells(pg).into_iter().map(|z| z.label).collect();
    a.sort();
    b.sort();
    if a != b {
        return Err(format!("{} generators vs {} zero-cell labels", a.len(), b.len()));
    }
    Ok(())
}

/// Structure of the bounded complex and the resolution it supports.
pub fn check_resolution(pg: &Pargraph, max_degree: u64) -> Check {
    if pg.k() < 2 {
        return Ok(());
    }
    let (n, k) = (pg.n(), pg.k());
    let cells = bounded_complex(pg).map_err(|e| e.to_string())?;
    let top = cells.iter().map(|c| c.dim).max().unwrap_or(0);
    if top + 2 != k {
        return Err(format!("complex dimension {top} with {k} blocks"));
    }
    let r = report_from_cells(pg, &cells).map_err(|e| e.to_string())?;
    let expected = n - k + 1;
    if r.krull_dim != expected || r.depth != expected || r.proj_dim != k - 1 || !r.cohen_macaulay {
        return Err(format!(
            "krull {} depth {} proj {} cm {}",
            r.krull_dim, r.depth, r.proj_dim, r.cohen_macaulay
        ));
    }
    if !euler_and_hilbert_check_cells(pg, &cells, max_degree).map_err(|e| e.to_string())? {
        return Err("cell labels do not reproduce the Hilbert function".into());
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub limit: usize,
    pub seed: u64,
    /// Random divisors per instance for the abelianity check.
    pub divisors: usize,
    pub max_degree: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { limit: 6, seed: 0, divisors: 50, max_degree: 5 }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: String,
    pub instance: usize,
    pub document: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusSummary {
    pub limit: usize,
    pub seed: u64,
    pub instances: usize,
    pub checks: BTreeMap<String, Tally>,
    pub first_counterexample: Option<Counterexample>,
}

impl CorpusSummary {
    pub fn all_passed(&self) -> bool {
        self.checks.values().all(|t| t.failed == 0)
    }
}

const CHECKS: [&str; 5] = ["picard", "groebner", "abelianity", "parking", "resolution"];

pub fn run_suite(opts: &SuiteOptions) -> CorpusSummary {
    let instances = corpus(opts.limit);
    let results: Vec<Vec<Check>> = instances
        .par_iter()
        .enumerate()
        .map(|(i, pg)| {
            let mut rng = instance_rng(opts.seed, i);
            vec![
                check_picard(pg),
                check_groebner(pg),
                check_abelianity(pg, &mut rng, opts.divisors, 3),
                check_parking(pg),
                check_resolution(pg, opts.max_degree),
            ]
        })
        .collect();
    let mut checks: BTreeMap<String, Tally> = CHECKS.iter().map(|c| (c.to_string(), Tally::default())).collect();
    let mut first = None;
    for (i, row) in results.iter().enumerate() {
        for (name, res) in CHECKS.iter().zip(row) {
            let t = checks.get_mut(*name).unwrap();
            match res {
                Ok(()) => t.passed += 1,
                Err(msg) => {
                    t.failed += 1;
                    first.get_or_insert_with(|| Counterexample {
                        check: name.to_string(),
                        instance: i,
                        document: to_document(&instances[i]),
                        message: msg.clone(),
                    });
                }
            }
        }
    }
    CorpusSummary {
        limit: opts.limit,
        seed: opts.seed,
        instances: instances.len(),
        checks,
        first_counterexample: first,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts() {
        // connected graphs up to isomorphism
        let counts: Vec<usize> = (1..=5).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn partition_counts() {
        let path = Multigraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        // {123}, {12|3}, {1|23}, {1|2|3}; {13|2} is disconnected
        assert_eq!(connected_partitions(&path).len(), 4);
        let tri = Multigraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(connected_partitions(&tri).len(), 5);
    }

    #[test]
    fn small_suite_passes() {
        let s = run_suite(&SuiteOptions { limit: 4, seed: 7, divisors: 10, max_degree: 4 });
        assert!(s.instances > 0);
        assert!(s.all_passed(), "{:?}", s.first_counterexample);
    }

    #[test]
    fn single_vertex() {
        let s = run_suite(&SuiteOptions { limit: 1, ..SuiteOptions::default() });
        assert_eq!(s.instances, 1);
        assert!(s.all_passed());
    }

    #[test]
    fn seeded_divisors_repeat() {
        let a = random_effective_divisor(5, 10, &mut instance_rng(3, 11));
        let b = random_effective_divisor(5, 10, &mut instance_rng(3, 11));
        assert_eq!(a, b);
    }
}
