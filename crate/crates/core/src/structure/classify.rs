//! Structural deciders for the independence and rank-independence
//! properties.

use std::fmt;

use serde::Serialize;

use super::criterion::{condition_a, condition_c, condition_d};
use super::{decompose, DecompositionStatus, Refusal};
use crate::characteristic::{frattini, is_prime, is_supersoluble, prime_factors};
use crate::error::Result;
use crate::genset::GenSearch;
use crate::group::Group;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Reason {
    NontrivialFrattini,
    NotSupersoluble,
    /// Two components of `W` share the prime `p`.
    RepeatedPrime {
        p: usize,
    },
    /// `δ = 1` on the `p`-component but `|H / C_H(V)|` is not prime.
    ConditionA {
        p: usize,
    },
    /// `p` divides `|H|`.
    ConditionC {
        p: usize,
    },
    ConditionD,
    Refused(Refusal),
    /// `d(G) = 2` and none of the three two-generator shapes match.
    NoTwoGeneratorShape,
    /// `d(G) ≥ 3` and `G` is not `P ⋊ C` with scalar action.
    NoScalarSplit,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::NontrivialFrattini => write!(f, "NontrivialFrattini"),
            Reason::NotSupersoluble => write!(f, "NotSupersoluble"),
            Reason::RepeatedPrime { p } => write!(f, "RepeatedPrime({p})"),
            Reason::ConditionA { p } => write!(f, "ConditionA({p})"),
            Reason::ConditionC { p } => write!(f, "ConditionC({p})"),
            Reason::ConditionD => write!(f, "ConditionD"),
            Reason::Refused(r) => write!(f, "Refused({r})"),
            Reason::NoTwoGeneratorShape => write!(f, "NoTwoGeneratorShape"),
            Reason::NoScalarSplit => write!(f, "NoScalarSplit"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StructuralVerdict {
    True,
    False(Reason),
    Undecided(Reason),
    /// Rank-independence is not defined for cyclic groups.
    VacuousCyclic,
}

impl StructuralVerdict {
    /// Cyclic groups count as true, matching
    /// [`crate::genset::RankProperty::as_bool`].
    pub fn as_bool(self) -> Option<bool> {
        match self {
            StructuralVerdict::True | StructuralVerdict::VacuousCyclic => Some(true),
            StructuralVerdict::False(_) => Some(false),
            StructuralVerdict::Undecided(_) => None,
        }
    }
}

impl fmt::Display for StructuralVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructuralVerdict::True => write!(f, "True"),
            StructuralVerdict::False(r) => write!(f, "False({r})"),
            StructuralVerdict::Undecided(r) => write!(f, "Undecided({r})"),
            StructuralVerdict::VacuousCyclic => write!(f, "VacuousCyclic"),
        }
    }
}

/// Order 8, non-abelian, a single involution.
pub fn is_quaternion8(g: &Group) -> bool {
    g.order() == 8 && !g.is_abelian() && (0..8).filter(|&x| g.elem_order(x) == 2).count() == 1
}

fn is_prime_power(n: usize) -> bool {
    prime_factors(n).len() <= 1
}

pub fn decide_independence_structural(g: &Group) -> Result<StructuralVerdict> {
    if (g.is_cyclic() && is_prime_power(g.order())) || is_quaternion8(g) {
        return Ok(StructuralVerdict::True);
    }
    if !frattini(g)?.is_trivial() {
        return Ok(StructuralVerdict::False(Reason::NontrivialFrattini));
    }
    if !is_supersoluble(g)? {
        return Ok(StructuralVerdict::False(Reason::NotSupersoluble));
    }
    let dec = decompose(g)?;
    match dec.status {
        DecompositionStatus::Decomposed => {}
        // With Φ(G) = 1 and G supersoluble, W_p is a sum of modules of
        // order p; a non-scalar action means two of them are not isomorphic.
        DecompositionStatus::Refused(Refusal::NonScalarAction { p }) => {
            return Ok(StructuralVerdict::False(Reason::RepeatedPrime { p }))
        }
        DecompositionStatus::Refused(r) => {
            return Ok(StructuralVerdict::Undecided(Reason::Refused(r)))
        }
    }
    if !condition_a(&dec) {
        let c = dec
            .components
            .iter()
            .find(|c| c.delta == 1 && !is_prime(c.action_order()));
        return Ok(StructuralVerdict::False(Reason::ConditionA {
            p: c.map_or(0, |c| c.p),
        }));
    }
    if !condition_c(&dec) {
        let p = dec
            .components
            .iter()
            .find(|c| dec.h.order() % c.p == 0)
            .map_or(0, |c| c.p);
        return Ok(StructuralVerdict::False(Reason::ConditionC { p }));
    }
    if !condition_d(&dec)? {
        return Ok(StructuralVerdict::False(Reason::ConditionD));
    }
    Ok(StructuralVerdict::True)
}

/// Which of the rank-independence shapes a group has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RankShape {
    /// `C_p × C_p`.
    ElementaryRankTwo {
        p: usize,
    },
    Quaternion8,
    /// `C_p ⋊ C_{q^m}` with the cyclic factor inducing an automorphism of
    /// order exactly `q`.
    PrimeByCyclic {
        p: usize,
        q: usize,
        m: u32,
    },
    /// `P ⋊ C` with `P` an elementary abelian normal Sylow `p`-subgroup of
    /// rank `k` and `C` cyclic of coprime order acting by scalars.
    ScalarSplit {
        p: usize,
        k: u32,
        c: usize,
    },
}

fn two_generator_shape(g: &Group) -> Option<RankShape> {
    let n = g.order();
    let f = prime_factors(n);
    if g.is_abelian() && f.len() == 1 && f[0].1 == 2 && !g.is_cyclic() {
        return Some(RankShape::ElementaryRankTwo { p: f[0].0 });
    }
    if is_quaternion8(g) {
        return Some(RankShape::Quaternion8);
    }
    if f.len() != 2 {
        return None;
    }
    for (pi, qi) in [(0, 1), (1, 0)] {
        let (p, a) = f[pi];
        let (q, m) = f[qi];
        if a != 1 {
            continue;
        }
        let ps: Vec<usize> = (0..n).filter(|&x| g.elem_order(x) == p).collect();
        let qm = q.pow(m);
        let Some(c) = (0..n).find(|&x| g.elem_order(x) == qm) else {
            continue;
        };
        // The p-elements form a single subgroup iff the Sylow p is normal.
        if ps.len() != p - 1 {
            continue;
        }
        let v = ps[0];
        let image = g.conj(v, c);
        let k = g
            .powers(v)
            .iter()
            .position(|&z| z == image)
            .expect("normal Sylow");
        let mut order = 1;
        let mut e = k % p;
        while e != 1 {
            e = e * k % p;
            order += 1;
        }
        if order == q {
            return Some(RankShape::PrimeByCyclic { p, q, m });
        }
    }
    None
}

fn scalar_split_shape(g: &Group) -> Option<RankShape> {
    let n = g.order();
    for (p, a) in prime_factors(n) {
        let pa = p.pow(a);
        let ps: Vec<usize> = (0..n)
            .filter(|&x| prime_factors(g.elem_order(x)).iter().all(|&(q, _)| q == p))
            .collect();
        if ps.len() != pa || ps.iter().any(|&x| x != 0 && g.elem_order(x) != p) {
            continue;
        }
        if ps.iter().any(|&x| ps.iter().any(|&y| !g.commute(x, y))) {
            continue;
        }
        let c_order = n / pa;
        let Some(c) = (0..n).find(|&x| g.elem_order(x) == c_order) else {
            continue;
        };
        let v = ps[1];
        let image = g.conj(v, c);
        let Some(k) = g.powers(v).iter().position(|&z| z == image) else {
            continue;
        };
        if ps.iter().all(|&x| g.conj(x, c) == g.pow(x, k)) {
            return Some(RankShape::ScalarSplit {
                p,
                k: a,
                c: c_order,
            });
        }
    }
    None
}

/// The shape matching `d(G)`, if any.
pub fn rank_shape(g: &Group, d: usize) -> Option<RankShape> {
    match d {
        2 => two_generator_shape(g),
        d if d >= 3 => scalar_split_shape(g),
        _ => None,
    }
}

pub fn decide_rank_independence_structural(g: &Group) -> Result<StructuralVerdict> {
    if g.is_cyclic() {
        return Ok(StructuralVerdict::VacuousCyclic);
    }
    let d = GenSearch::new(g)?.d()?;
    Ok(match rank_shape(g, d) {
        Some(_) => StructuralVerdict::True,
        None if d == 2 => StructuralVerdict::False(Reason::NoTwoGeneratorShape),
        None => StructuralVerdict::False(Reason::NoScalarSplit),
    })
}
