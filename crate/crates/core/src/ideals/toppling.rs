use std::cmp::Ordering;

use super::monomial::Monomial;
use super::order::MRevOrder;
use crate::error::{Error, Result};
use crate::graph::{Pargraph, Parset, ParsetFilter};

/// `x^{S→S̄} − x^{S̄→S}` for a parset `S` avoiding the sink block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsetBinomial {
    pub source_parset: Parset,
    pub lead: Monomial,
    pub tail: Monomial,
}

impl ParsetBinomial {
    pub fn from_parset(pg: &Pargraph, s: &Parset) -> Self {
        let out = pg.outdeg_vector(s);
        let back = pg.outdeg_vector(&pg.complement(s));
        let lead = (0..pg.n()).map(|v| if s.contains_vertex(v) { out[v] } else { 0 }).collect();
        let tail = (0..pg.n()).map(|v| if s.contains_vertex(v) { 0 } else { back[v] }).collect();
        ParsetBinomial { source_parset: *s, lead: Monomial(lead), tail: Monomial(tail) }
    }

    /// `lead − tail` as an exponent vector; an element of the firing lattice.
    pub fn exponent_difference(&self) -> Vec<i64> {
        self.lead.0.iter().zip(&self.tail.0).map(|(&a, &b)| a as i64 - b as i64).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.lead.degree() == self.tail.degree()
    }

    pub fn to_latex(&self) -> String {
        format!("{} - {}", self.lead.to_latex(), self.tail.to_latex())
    }
}

/// One binomial per nonempty parset avoiding the sink block.
pub fn toppling_generators(pg: &Pargraph) -> Vec<ParsetBinomial> {
    pg.parsets(ParsetFilter::AVOIDING_SINK).map(|s| ParsetBinomial::from_parset(pg, &s)).collect()
}

/// Binomials of the doubly connected parsets avoiding the sink block.
pub fn groebner_basis(pg: &Pargraph) -> Vec<ParsetBinomial> {
    pg.doubly_connected_parsets().iter().map(|s| ParsetBinomial::from_parset(pg, s)).collect()
}

/// Rewrites `m` by `lead → tail` until no lead divides it.
pub fn normal_form(m: &Monomial, gb: &[ParsetBinomial], ord: &MRevOrder) -> Monomial {
    let mut m = m.clone();
    while let Some((g, q)) = gb.iter().find_map(|g| m.div(&g.lead).map(|q| (g, q))) {
        let next = q.mul(&g.tail);
        debug_assert_eq!(ord.compare(&next, &m), Ordering::Less);
        m = next;
    }
    m
}

pub fn lead_divisible(m: &Monomial, gb: &[ParsetBinomial]) -> bool {
    gb.iter().any(|g| g.lead.divides(m))
}

pub const DEFAULT_PAIR_LIMIT: u128 = 1 << 20;

type Poly = Vec<(Monomial, i64)>;

fn add_term(p: &mut Poly, m: Monomial, c: i64) {
    if let Some(pos) = p.iter().position(|(x, _)| *x == m) {
        p[pos].1 += c;
        if p[pos].1 == 0 {
            p.swap_remove(pos);
        }
    } else if c != 0 {
        p.push((m, c));
    }
}

/// Remainder of multivariate division of `p` by the binomials `gb`.
fn remainder(mut p: Poly, gb: &[ParsetBinomial], ord: &MRevOrder) -> Poly {
    let mut rem = Poly::new();
    while let Some(idx) = (0..p.len()).max_by(|&a, &b| ord.compare(&p[a].0, &p[b].0)) {
        let (m, c) = p.swap_remove(idx);
        match gb.iter().find_map(|g| m.div(&g.lead).map(|q| (g, q))) {
            // m − c·q·(lead − tail) leaves c·q·tail
            Some((g, q)) => add_term(&mut p, q.mul(&g.tail), c),
            None => add_term(&mut rem, m, c),
        }
    }
    rem
}

fn s_polynomial(f: &ParsetBinomial, g: &ParsetBinomial) -> Poly {
    let l = f.lead.lcm(&g.lead);
    let mut p = Poly::new();
    add_term(&mut p, l.div(&f.lead).unwrap().mul(&f.tail), -1);
    add_term(&mut p, l.div(&g.lead).unwrap().mul(&g.tail), 1);
    p
}

/// Buchberger's criterion: every S-polynomial reduces to zero modulo `gb`.
///
/// Also fails if some binomial's `lead` is not its leading term under `ord`.
pub fn verify_buchberger(gb: &[ParsetBinomial], ord: &MRevOrder) -> Result<bool> {
    verify_buchberger_with_limit(gb, ord, DEFAULT_PAIR_LIMIT)
}

pub fn verify_buchberger_with_limit(gb: &[ParsetBinomial], ord: &MRevOrder, limit: u128) -> Result<bool> {
    let pairs = gb.len() as u128 * (gb.len() as u128).saturating_sub(1) / 2;
    if pairs > limit {
        return Err(Error::TooLarge { what: "S-pairs", size: pairs, limit });
    }
    if gb.iter().any(|g| ord.compare(&g.lead, &g.tail) != Ordering::Greater) {
        return Ok(false);
    }
    for (i, f) in gb.iter().enumerate() {
        for g in &gb[i + 1..] {
            if !remainder(s_polynomial(f, g), gb, ord).is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
