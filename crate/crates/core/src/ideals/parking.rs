use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use super::toppling::groebner_basis;
use crate::error::{Error, Result};
use crate::graph::{mask_iter, Pargraph};

/// Minimal generators of the parking ideal: the Gröbner leads `x^{S→S̄}`.
pub fn parking_ideal(pg: &Pargraph) -> Vec<Monomial> {
    let mut gens: Vec<Monomial> = groebner_basis(pg).into_iter().map(|g| g.lead).collect();
    let mut seen = std::collections::HashSet::new();
    gens.retain(|m| seen.insert(m.clone()));
    gens
}

/// No generator divides another.
pub fn verify_minimal(gens: &[Monomial]) -> bool {
    gens.iter().enumerate().all(|(i, a)| {
        gens.iter().enumerate().all(|(j, b)| i == j || !a.divides(b))
    })
}

/// Which polynomial ring the quotient is taken in.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Ambient {
    /// All `n` variables.
    #[default]
    Full,
    /// Every variable except the root's.
    DropRoot,
}

impl Ambient {
    pub fn variables(self, pg: &Pargraph) -> Vec<usize> {
        match self {
            Ambient::Full => (0..pg.n()).collect(),
            Ambient::DropRoot => (0..pg.n()).filter(|&v| v != pg.root()).collect(),
        }
    }
}

/// Refuse to enumerate more monomials than this.
pub const MONOMIAL_LIMIT: u128 = 50_000_000;

/// Number of monomials of degree `e` in `nvars` variables.
pub fn monomial_count(nvars: usize, e: u64) -> u128 {
    if nvars == 0 {
        return (e == 0) as u128;
    }
    // C(e + nvars - 1, nvars - 1)
    let r = (nvars - 1) as u128;
    (1..=r).fold(1u128, |acc, i| acc * (e as u128 + i) / i)
}

/// Standard monomials of each degree `0..=max_degree` in all `nvars` variables.
pub fn hilbert_counts(nvars: usize, gens: &[Monomial], max_degree: u64) -> Result<Vec<u64>> {
    hilbert_counts_in(nvars, &(0..nvars).collect::<Vec<_>>(), gens, max_degree)
}

/// As [`hilbert_counts`] but in the subring generated by `vars`.
pub fn hilbert_counts_in(
    nvars: usize,
    vars: &[usize],
    gens: &[Monomial],
    max_degree: u64,
) -> Result<Vec<u64>> {
    if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
        return Err(Error::DimensionMismatch { expected: nvars, got: g.nvars() });
    }
    let total: u128 = (0..=max_degree).map(|e| monomial_count(vars.len(), e)).sum();
    if total > MONOMIAL_LIMIT {
        return Err(Error::TooLarge { what: "monomials", size: total, limit: MONOMIAL_LIMIT });
    }
    let mut counts = vec![0u64; max_degree as usize + 1];
    let mut exp = vec![0u32; nvars];
    walk(vars, 0, max_degree, &mut exp, gens, &mut counts);
    Ok(counts)
}

fn walk(vars: &[usize], at: usize, left: u64, exp: &mut Vec<u32>, gens: &[Monomial], counts: &mut [u64]) {
    // divisibility only grows along a branch, so prune as soon as it happens
    if gens.iter().any(|g| g.0.iter().zip(exp.iter()).all(|(a, b)| a <= b)) {
        return;
    }
    if at == vars.len() {
        let deg: u64 = exp.iter().map(|&e| e as u64).sum();
        counts[deg as usize] += 1;
        return;
    }
    let v = vars[at];
    for e in 0..=left {
        exp[v] = e as u32;
        walk(vars, at + 1, left - e, exp, gens, counts);
        // any multiple along this variable is divisible as well
        if e < left && gens.iter().any(|g| g.0.iter().zip(exp.iter()).all(|(a, b)| a <= b)) {
            break;
        }
    }
    exp[v] = 0;
}

/// Krull dimension of `k[x_1..x_n]/⟨gens⟩`: the largest variable set
/// containing the support of no generator.
pub fn krull_dimension(nvars: usize, gens: &[Monomial]) -> Result<usize> {
    let supports: Vec<u64> = gens.iter().map(Monomial::support).collect();
    if supports.contains(&0) {
        return Ok(0);
    }
    let touched = supports.iter().fold(0u64, |m, s| m | s);
    let free = nvars - touched.count_ones() as usize;
    let vars: Vec<usize> = mask_iter(touched).collect();
    if vars.len() > 24 {
        return Err(Error::TooLarge { what: "variables", size: vars.len() as u128, limit: 24 });
    }
    let mut best = 0;
    for sub in 0u64..1 << vars.len() {
        let size = sub.count_ones() as usize;
        if size <= best {
            continue;
        }
        let set = vars.iter().enumerate().filter(|(i, _)| sub >> i & 1 == 1).fold(0u64, |m, (_, &v)| m | 1 << v);
        if supports.iter().all(|s| s & !set != 0) {
            best = size;
        }
    }
    Ok(free + best)
}
