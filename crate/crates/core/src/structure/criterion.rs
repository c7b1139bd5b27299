//! The matrices `A^(j)` and the generation and independence criteria.
//!
//! Component indices are 0-based throughout.

use rayon::prelude::*;

use super::DecompositionReport;
use crate::bitset::BitSet;
use crate::characteristic::is_prime;
use crate::error::{Error, Result};
use crate::genset::GenSearch;
use crate::group::Group;
use crate::subgroup::subgroup_closure;

/// `A^(j)(g_1, …, g_t)`, stored by rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionMatrix {
    pub p: usize,
    pub rows: Vec<Vec<u32>>,
}

impl CriterionMatrix {
    pub fn columns(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn column(&self, i: usize) -> Vec<u32> {
        self.rows.iter().map(|r| r[i]).collect()
    }

    pub fn column_is_zero(&self, i: usize) -> bool {
        self.rows.iter().all(|r| r[i] == 0)
    }

    pub fn rank(&self) -> usize {
        rank_mod_p(&self.rows, self.p)
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r, mut base, mut e) = (1u64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    r
}

/// Rank over `F_p` by Gaussian elimination; `p` must be prime.
pub fn rank_mod_p(rows: &[Vec<u32>], p: usize) -> usize {
    let p = p as u64;
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as u64 % p).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = inv_mod(m[rank][c], p);
        for x in &mut m[rank] {
            *x = *x * inv % p;
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                let pivot = m[rank].clone();
                for (a, b) in m[r].iter_mut().zip(&pivot) {
                    *a = (*a + (p - f) * b) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn require_decomposed(dec: &DecompositionReport) -> Result<&Group> {
    dec.h_group()
        .ok_or_else(|| Error::PreconditionsFailed("group was not decomposed".into()))
}

pub fn build_criterion_matrix(
    dec: &DecompositionReport,
    elems: &[usize],
    j: usize,
) -> Result<CriterionMatrix> {
    require_decomposed(dec)?;
    let comp = dec
        .components
        .get(j)
        .ok_or_else(|| Error::PreconditionsFailed(format!("no component {j}")))?;
    let p = comp.p;
    let mut rows = vec![Vec::with_capacity(elems.len()); comp.delta + 1];
    for &x in elems {
        let (h, w) = dec.factor(x)?;
        rows[0].push(((1 + p - dec.alpha(j, h)?) % p) as u32);
        for (k, &c) in dec.coordinates(w, j)?.iter().enumerate() {
            rows[k + 1].push(c);
        }
    }
    Ok(CriterionMatrix { p, rows })
}

/// `⟨hs⟩Φ(H)`, in local ids of `H`.
fn phi_span(dec: &DecompositionReport, hs: &[usize]) -> Result<BitSet> {
    let hg = require_decomposed(dec)?;
    let mut seed = hs
        .iter()
        .map(|&h| dec.h_local(h))
        .collect::<Result<Vec<_>>>()?;
    seed.extend_from_slice(dec.h_frattini_local());
    Ok(subgroup_closure(hg, &seed).into_bits())
}

fn h_parts(dec: &DecompositionReport, elems: &[usize]) -> Result<Vec<usize>> {
    elems
        .iter()
        .map(|&x| dec.factor(x).map(|(h, _)| h))
        .collect()
}

/// `⟨g_1, …, g_t⟩ = G`, decided by the H-parts and the ranks of the `A^(j)`.
pub fn generation_by_criterion(dec: &DecompositionReport, elems: &[usize]) -> Result<bool> {
    let hg = require_decomposed(dec)?;
    let hs = h_parts(dec, elems)?;
    let local = hs
        .iter()
        .map(|&h| dec.h_local(h))
        .collect::<Result<Vec<_>>>()?;
    if subgroup_closure(hg, &local).order() != hg.order() {
        return Ok(false);
    }
    for (j, c) in dec.components.iter().enumerate() {
        if build_criterion_matrix(dec, elems, j)?.rank() != c.delta + 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn j_independent(dec: &DecompositionReport, g1: usize, g2: usize, j: usize) -> Result<bool> {
    let a = build_criterion_matrix(dec, &[g1, g2], j)?;
    if a.rank() == 2 {
        return Ok(true);
    }
    let hs = h_parts(dec, &[g1, g2])?;
    let both = phi_span(dec, &hs)?;
    for (l, m) in [(0, 1), (1, 0)] {
        if !a.column_is_zero(l) && a.column_is_zero(m) && phi_span(dec, &[hs[l]])? != both {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `{i, j}`-independence for distinct components `i` and `j`.
pub fn pair_set_independent(
    dec: &DecompositionReport,
    g1: usize,
    g2: usize,
    i: usize,
    j: usize,
) -> Result<bool> {
    if i == j {
        return Err(Error::PreconditionsFailed(
            "component indices must differ".into(),
        ));
    }
    let hs = h_parts(dec, &[g1, g2])?;
    if phi_span(dec, &hs[..1])? != phi_span(dec, &hs[1..])? {
        return Ok(false);
    }
    let ai = build_criterion_matrix(dec, &[g1, g2], i)?;
    let aj = build_criterion_matrix(dec, &[g1, g2], j)?;
    Ok([(0, 1), (1, 0)].into_iter().any(|(l, m)| {
        !ai.column_is_zero(l)
            && !aj.column_is_zero(m)
            && aj.column_is_zero(l)
            && ai.column_is_zero(m)
    }))
}

/// `|H / C_H(V_i)|` is prime whenever `δ_i = 1`.
pub fn condition_a(dec: &DecompositionReport) -> bool {
    dec.components
        .iter()
        .all(|c| c.delta != 1 || is_prime(c.action_order()))
}

/// `|H|` is coprime to every `|V_i|`.
pub fn condition_c(dec: &DecompositionReport) -> bool {
    dec.components
        .iter()
        .all(|c| !dec.h.order().is_multiple_of(c.p))
}

/// For `x, y ∈ H` with `y ∈ ⟨x⟩Φ(H)` and `I_x ⊆ I_y`, one of `x`, `y` is a
/// power of the other, and `y ∈ ⟨x⟩` as soon as `I_x` is nonempty.
pub fn condition_d(dec: &DecompositionReport) -> Result<bool> {
    let hg = require_decomposed(dec)?;
    let members: Vec<usize> = dec.h.members().collect();
    let mask = |h: usize| -> u64 {
        dec.components
            .iter()
            .enumerate()
            .filter(|(_, c)| c.alpha[&h] == 1)
            .fold(0, |m, (i, _)| m | 1 << i)
    };
    let bad = members.par_iter().map(|&x| -> Result<bool> {
        let span = phi_span(dec, &[x])?;
        let ix = mask(x);
        let lx = dec.h_local(x)?;
        let cyc_x = hg.cyclic_bits(lx);
        for &y in &members {
            let ly = dec.h_local(y)?;
            if !span.contains(ly) || ix & !mask(y) != 0 {
                continue;
            }
            let y_in_x = cyc_x.contains(ly);
            if !y_in_x && (ix != 0 || !hg.cyclic_bits(ly).contains(lx)) {
                return Ok(true);
            }
        }
        Ok(false)
    });
    let bad: Vec<bool> = bad.collect::<Result<_>>()?;
    Ok(!bad.into_iter().any(|b| b))
}

/// The independence criterion, with the brute-force search on `H` kept
/// alive across queries.
pub struct CriterionContext<'d> {
    dec: &'d DecompositionReport,
    h_search: GenSearch<'d>,
}

impl<'d> CriterionContext<'d> {
    /// Fails with `PreconditionsFailed` unless the decomposition exists and
    /// satisfies conditions (a) and (c); (b) holds by construction.
    pub fn new(dec: &'d DecompositionReport) -> Result<Self> {
        let hg = require_decomposed(dec)?;
        if !condition_a(dec) {
            return Err(Error::PreconditionsFailed("condition (a) fails".into()));
        }
        if !condition_c(dec) {
            return Err(Error::PreconditionsFailed("condition (c) fails".into()));
        }
        Ok(CriterionContext {
            dec,
            h_search: GenSearch::new(hg)?,
        })
    }

    pub fn report(&self) -> &'d DecompositionReport {
        self.dec
    }

    pub fn independent(&self, g1: usize, g2: usize) -> Result<bool> {
        let dec = self.dec;
        let (h1, _) = dec.factor(g1)?;
        let (h2, _) = dec.factor(g2)?;
        if self
            .h_search
            .independent(dec.h_local(h1)?, dec.h_local(h2)?)?
        {
            return Ok(true);
        }
        let r = dec.rank();
        for j in 0..r {
            if j_independent(dec, g1, g2, j)? {
                return Ok(true);
            }
        }
        for i in 0..r {
            for j in i + 1..r {
                if pair_set_independent(dec, g1, g2, i, j)? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

pub fn independent_by_criterion(dec: &DecompositionReport, g1: usize, g2: usize) -> Result<bool> {
    CriterionContext::new(dec)?.independent(g1, g2)
}
