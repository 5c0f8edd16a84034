//! Faces of the bounded complex.
//!
//! A face is fixed by the equal-value classes of its interior points (each a
//! connected union of blocks) together with the acyclic orientation of the
//! contracted graph; it is bounded exactly when the class holding the root is
//! the orientation's only sink. [`bounded_complex`] enumerates those pairs
//! directly. [`bounded_complex_by_barycenters`] rebuilds the same face set from
//! barycenters of vertex subsets and serves as a slow cross-check.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use super::arrangement::{in_bounded_complex, zero_cells, ArrangementPoint, ZeroCell};
use crate::error::{Error, Result};
use crate::graph::{mask_iter, Pargraph};
use crate::ideals::Monomial;
use crate::linalg::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelledCell {
    pub dim: usize,
    /// Sign of `p_i − p_j` on each relevant edge, in
    /// [`Pargraph::relevant_edges`] order.
    pub sign_vector: Vec<i8>,
    /// Indices into [`zero_cells`].
    pub vertices: Vec<usize>,
    pub label: Monomial,
}

/// Refuse set-partition enumeration beyond this many blocks.
pub const MAX_COMPLEX_BLOCKS: usize = 12;
/// Refuse barycenter enumeration beyond this many vertex subsets.
pub const BARYCENTER_SUBSET_LIMIT: u128 = 1 << 18;

/// `sign` lies in the closure of the face with sign vector `face`.
pub fn conforms(sign: &[i8], face: &[i8]) -> bool {
    sign.iter().zip(face).all(|(&s, &f)| s == 0 || s == f)
}

/// Affine dimension of the face cut out by the zeros of `sign` within the slice.
pub fn face_dimension(pg: &Pargraph, sign: &[i8]) -> usize {
    let k = pg.k();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut pin = vec![0; k];
    pin[pg.sink_block()] = 1;
    rows.push(pin);
    rows.push((0..k).map(|b| if b == pg.sink_block() { 0 } else { pg.blocks()[b].len() as i64 }).collect());
    for (&(i, j, _), &s) in pg.relevant_edges().iter().zip(sign) {
        if s == 0 {
            let mut r = vec![0; k];
            r[pg.block_of(i)] += 1;
            r[pg.block_of(j)] -= 1;
            rows.push(r);
        }
    }
    let rank = IntMatrix::from_rows(&rows).expect("rows have length k").rank();
    k - rank
}

fn vertices_and_label(pg: &Pargraph, zeros: &[ZeroCell], signs: &[Vec<i8>], sign: &[i8]) -> (Vec<usize>, Monomial) {
    let vertices: Vec<usize> = (0..zeros.len()).filter(|&z| conforms(&signs[z], sign)).collect();
    let label = vertices.iter().fold(Monomial::one(pg.n()), |m, &z| m.lcm(&zeros[z].label));
    (vertices, label)
}

fn sort_cells(cells: &mut [LabelledCell]) {
    cells.sort_by(|a, b| (a.dim, &a.vertices, &a.sign_vector).cmp(&(b.dim, &b.vertices, &b.sign_vector)));
}

/// Partitions of the blocks into classes inducing connected subgraphs.
fn connected_block_partitions(pg: &Pargraph) -> Vec<Vec<u64>> {
    let k = pg.k();
    let mut out = Vec::new();
    let mut assign = vec![0usize; k];
    fn rec(pg: &Pargraph, at: usize, used: usize, assign: &mut Vec<usize>, out: &mut Vec<Vec<u64>>) {
        if at == assign.len() {
            let mut classes = vec![0u64; used];
            for (b, &c) in assign.iter().enumerate() {
                classes[c] |= 1 << b;
            }
            if classes.iter().all(|&c| pg.graph().is_connected_subset(pg.vertices_of(c))) {
                out.push(classes);
            }
            return;
        }
        for c in 0..=used {
            assign[at] = c;
            rec(pg, at + 1, used.max(c + 1), assign, out);
        }
    }
    rec(pg, 0, 0, &mut assign, &mut out);
    out
}

/// Acyclic orientations of the class graph whose only sink is `sink`.
/// Each result lists, per adjacent pair `(a, b)` with `a < b`, whether `a → b`.
fn sink_orientations(pairs: &[(usize, usize)], classes: usize, sink: usize) -> Vec<Vec<bool>> {
    fn rec(
        pairs: &[(usize, usize)],
        at: usize,
        reach: Vec<u64>,
        chosen: &mut Vec<bool>,
        sink: usize,
        out: &mut Vec<Vec<bool>>,
    ) {
        if at == pairs.len() {
            let has_out: u64 = pairs
                .iter()
                .zip(chosen.iter())
                .fold(0, |m, (&(a, b), &fwd)| m | 1 << if fwd { a } else { b });
            let all = if reach.len() == 64 { u64::MAX } else { (1u64 << reach.len()) - 1 };
            if all & !has_out == 1 << sink {
                out.push(chosen.clone());
            }
            return;
        }
        let (a, b) = pairs[at];
        for fwd in [true, false] {
            let (from, to) = if fwd { (a, b) } else { (b, a) };
            if from == sink || reach[to] >> from & 1 == 1 {
                continue;
            }
            let mut next = reach.clone();
            for x in next.iter_mut() {
                if *x >> from & 1 == 1 {
                    *x |= reach[to];
                }
            }
            chosen.push(fwd);
            rec(pairs, at + 1, next, chosen, sink, out);
            chosen.pop();
        }
    }
    let reach = (0..classes).map(|c| 1u64 << c).collect();
    let mut out = Vec::new();
    rec(pairs, 0, reach, &mut Vec::new(), sink, &mut out);
    out
}

/// Every face of the bounded complex, sorted by dimension.
///
/// Labels are the lcm of the vertex labels; they are checked against the
/// orientation (each vertex raised to its number of downhill edges).
pub fn bounded_complex(pg: &Pargraph) -> Result<Vec<LabelledCell>> {
    let k = pg.k();
    if k < 2 {
        return Err(Error::Validation("the bounded complex needs at least two blocks".into()));
    }
    if k > MAX_COMPLEX_BLOCKS {
        return Err(Error::TooLarge { what: "blocks", size: k as u128, limit: MAX_COMPLEX_BLOCKS as u128 });
    }
    let g = pg.graph();
    let zeros = zero_cells(pg);
    let signs: Vec<Vec<i8>> = zeros.iter().map(|z| z.point.sign_vector(pg)).collect();
    let relevant = pg.relevant_edges();
    let mut cells = Vec::new();
    for classes in connected_block_partitions(pg) {
        if classes.len() < 2 {
            continue;
        }
        let class_of_block: Vec<usize> =
            (0..k).map(|b| classes.iter().position(|c| c >> b & 1 == 1).unwrap()).collect();
        let class_of = |v: usize| class_of_block[pg.block_of(v)];
        let mut pairs: Vec<(usize, usize)> = relevant
            .iter()
            .map(|&(i, j, _)| (class_of(i).min(class_of(j)), class_of(i).max(class_of(j))))
            .filter(|(a, b)| a != b)
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        let sink = class_of_block[pg.sink_block()];
        for orientation in sink_orientations(&pairs, classes.len(), sink) {
            let downhill = |a: usize, b: usize| {
                let idx = pairs.binary_search(&(a.min(b), a.max(b))).unwrap();
                orientation[idx] == (a < b)
            };
            let sign: Vec<i8> = relevant
                .iter()
                .map(|&(i, j, _)| {
                    let (a, b) = (class_of(i), class_of(j));
                    if a == b {
                        0
                    } else if downhill(a, b) {
                        1
                    } else {
                        -1
                    }
                })
                .collect();
            let dim = face_dimension(pg, &sign);
            if dim + 2 != classes.len() {
                return Err(Error::ComplexInconsistent(format!(
                    "face with {} classes has dimension {dim}",
                    classes.len()
                )));
            }
            let (vertices, label) = vertices_and_label(pg, &zeros, &signs, &sign);
            let expected: Vec<u32> = (0..pg.n())
                .map(|v| {
                    mask_iter(g.neighbor_mask(v))
                        .filter(|&u| class_of(u) != class_of(v) && downhill(class_of(v), class_of(u)))
                        .map(|u| g.multiplicity(v, u))
                        .sum()
                })
                .collect();
            if vertices.is_empty() || label.0 != expected {
                return Err(Error::ComplexInconsistent(format!(
                    "label {label} of face {sign:?} disagrees with its orientation"
                )));
            }
            cells.push(LabelledCell { dim, sign_vector: sign, vertices, label });
        }
    }
    sort_cells(&mut cells);
    Ok(cells)
}

/// The same face set, from barycenters of all nonempty vertex subsets that
/// land in the complex, deduplicated by sign vector.
pub fn bounded_complex_by_barycenters(pg: &Pargraph) -> Result<Vec<LabelledCell>> {
    if pg.k() < 2 {
        return Err(Error::Validation("the bounded complex needs at least two blocks".into()));
    }
    let zeros = zero_cells(pg);
    let subsets = 1u128 << zeros.len().min(127);
    if zeros.len() > 62 || subsets > BARYCENTER_SUBSET_LIMIT {
        return Err(Error::TooLarge { what: "vertex subsets", size: subsets, limit: BARYCENTER_SUBSET_LIMIT });
    }
    let signs: Vec<Vec<i8>> = zeros.iter().map(|z| z.point.sign_vector(pg)).collect();
    let mut faces: BTreeMap<Vec<i8>, ()> = BTreeMap::new();
    for sub in 1u64..1 << zeros.len() {
        let pts: Vec<&ArrangementPoint> = mask_iter(sub).map(|z| &zeros[z].point).collect();
        let p = ArrangementPoint::barycenter(&pts);
        if in_bounded_complex(pg, &p) {
            faces.insert(p.sign_vector(pg), ());
        }
    }
    let mut cells: Vec<LabelledCell> = faces
        .into_keys()
        .map(|sign| {
            let (vertices, label) = vertices_and_label(pg, &zeros, &signs, &sign);
            LabelledCell { dim: face_dimension(pg, &sign), sign_vector: sign, vertices, label }
        })
        .collect();
    sort_cells(&mut cells);
    Ok(cells)
}

pub fn f_vector(cells: &[LabelledCell]) -> Vec<usize> {
    let top = cells.iter().map(|c| c.dim + 1).max().unwrap_or(0);
    let mut f = vec![0; top];
    for c in cells {
        f[c.dim] += 1;
    }
    f
}

pub fn euler_characteristic(cells: &[LabelledCell]) -> BigInt {
    cells.iter().map(|c| if c.dim % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) }).sum()
}
