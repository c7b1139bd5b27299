//! Split supersoluble groups as `W ⋊ H`, with `W = V_1^δ_1 × … × V_r^δ_r`
//! a product of elementary abelian components on which the abelian group
//! `H` acts by scalars, together with the matrix criteria for generation and
//! independence and the structural classifiers built on them.

mod classify;
mod criterion;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::characteristic::{center, frattini, minimal_normal_subgroups, prime_factors};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::subgroup::Subgroup;

pub use classify::{
    decide_independence_structural, decide_rank_independence_structural, is_quaternion8,
    rank_shape, RankShape, Reason, StructuralVerdict,
};
pub use criterion::{
    build_criterion_matrix, condition_a, condition_c, condition_d, generation_by_criterion,
    independent_by_criterion, j_independent, pair_set_independent, rank_mod_p, CriterionContext,
    CriterionMatrix,
};

/// Why a group was not split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Refusal {
    NontrivialFrattini,
    /// The product of the non-central minimal normal subgroups is not abelian.
    NonAbelianSocle,
    /// The Sylow `p`-part of `W` has elements of order `p^2` or more.
    NotElementary {
        p: usize,
    },
    /// Some element of `H` does not act on the `p`-part of `W` as a scalar.
    NonScalarAction {
        p: usize,
    },
    NoComplement,
    NonAbelianComplement,
}

impl fmt::Display for Refusal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Refusal::NontrivialFrattini => write!(f, "nontrivial Frattini subgroup"),
            Refusal::NonAbelianSocle => write!(f, "non-central socle is not abelian"),
            Refusal::NotElementary { p } => write!(f, "{p}-part of W is not elementary abelian"),
            Refusal::NonScalarAction { p } => {
                write!(f, "H does not act on the {p}-part of W by scalars")
            }
            Refusal::NoComplement => write!(f, "W has no complement"),
            Refusal::NonAbelianComplement => write!(f, "complement of W is not abelian"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DecompositionStatus {
    Decomposed,
    Refused(Refusal),
}

/// One homogeneous component `W_i = V_i^δ_i`.
#[derive(Debug, Clone)]
pub struct Component {
    pub p: usize,
    pub delta: usize,
    /// `δ` elements of `W_i` forming a basis over `F_p`.
    pub basis: Vec<usize>,
    /// `α_i(h)` for every element id `h` of `H`.
    pub alpha: BTreeMap<usize, usize>,
}

impl Component {
    /// `|H / C_H(V_i)|`, the order of the image of `α_i`.
    pub fn action_order(&self) -> usize {
        let mut image: Vec<usize> = self.alpha.values().copied().collect();
        image.sort_unstable();
        image.dedup();
        image.len()
    }
}

/// `I_h`: the indices of the components centralized by `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HIndexSet {
    sets: BTreeMap<usize, Vec<usize>>,
}

impl HIndexSet {
    pub fn get(&self, h: usize) -> Option<&[usize]> {
        self.sets.get(&h).map(Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &[usize])> {
        self.sets.iter().map(|(&h, s)| (h, s.as_slice()))
    }
}

pub struct DecompositionReport {
    pub status: DecompositionStatus,
    pub w: Subgroup,
    pub h: Subgroup,
    pub components: Vec<Component>,
    /// `Φ(H)`, as a subgroup of `G`.
    pub frattini_of_h: Subgroup,
    /// `g = h · w` for every element of `G`.
    split: Vec<(usize, usize)>,
    /// Coordinates of each element of `W`, component by component.
    coords: Vec<Option<Vec<u32>>>,
    h_group: Option<Group>,
    /// Element id of `G` to element id of `h_group`.
    h_local: BTreeMap<usize, usize>,
    h_frattini_local: Vec<usize>,
}

impl fmt::Debug for DecompositionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DecompositionReport")
            .field("status", &self.status)
            .field("w", &self.w.order())
            .field("h", &self.h.order())
            .field("components", &self.components)
            .finish()
    }
}

#[derive(Serialize)]
struct ComponentJson {
    p: usize,
    delta: usize,
    basis: Vec<usize>,
    alpha_on_h_generators: Vec<usize>,
}

#[derive(Serialize)]
struct ReportJson {
    status: &'static str,
    refusal: Option<String>,
    order_w: usize,
    order_h: usize,
    h_generators: Vec<usize>,
    order_frattini_h: usize,
    components: Vec<ComponentJson>,
}

impl Serialize for DecompositionReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (status, refusal) = match self.status {
            DecompositionStatus::Decomposed => ("decomposed", None),
            DecompositionStatus::Refused(r) => ("refused", Some(r.to_string())),
        };
        let gens = self.h.gens().to_vec();
        ReportJson {
            status,
            refusal,
            order_w: self.w.order(),
            order_h: self.h.order(),
            order_frattini_h: self.frattini_of_h.order(),
            components: self
                .components
                .iter()
                .map(|c| ComponentJson {
                    p: c.p,
                    delta: c.delta,
                    basis: c.basis.clone(),
                    alpha_on_h_generators: gens.iter().map(|h| c.alpha[h]).collect(),
                })
                .collect(),
            h_generators: gens,
        }
        .serialize(s)
    }
}

impl DecompositionReport {
    fn refused(g: &Group, r: Refusal) -> Self {
        DecompositionReport {
            status: DecompositionStatus::Refused(r),
            w: Subgroup::trivial(g),
            h: Subgroup::trivial(g),
            components: Vec::new(),
            frattini_of_h: Subgroup::trivial(g),
            split: Vec::new(),
            coords: Vec::new(),
            h_group: None,
            h_local: BTreeMap::new(),
            h_frattini_local: Vec::new(),
        }
    }

    pub fn is_decomposed(&self) -> bool {
        self.status == DecompositionStatus::Decomposed
    }

    /// `r`, the number of components.
    pub fn rank(&self) -> usize {
        self.components.len()
    }

    /// Writes `x = h · w` with `h ∈ H`, `w ∈ W`.
    pub fn factor(&self, x: usize) -> Result<(usize, usize)> {
        self.split.get(x).copied().ok_or(Error::NotInSplit(x))
    }

    /// Coordinates of `w ∈ W` in component `j`.
    pub fn coordinates(&self, w: usize, j: usize) -> Result<&[u32]> {
        let all = self
            .coords
            .get(w)
            .and_then(Option::as_ref)
            .ok_or(Error::NotInSplit(w))?;
        let start: usize = self.components[..j].iter().map(|c| c.delta).sum();
        Ok(&all[start..start + self.components[j].delta])
    }

    pub fn alpha(&self, j: usize, h: usize) -> Result<usize> {
        self.components[j]
            .alpha
            .get(&h)
            .copied()
            .ok_or(Error::NotInSplit(h))
    }

    pub fn h_index_set(&self) -> HIndexSet {
        let sets = self
            .h
            .members()
            .map(|h| {
                let ids = (0..self.rank())
                    .filter(|&i| self.components[i].alpha[&h] == 1)
                    .collect();
                (h, ids)
            })
            .collect();
        HIndexSet { sets }
    }

    /// `H` as a group in its own right.
    pub fn h_group(&self) -> Option<&Group> {
        self.h_group.as_ref()
    }

    /// Maps an element of `H` to its id in [`Self::h_group`].
    pub fn h_local(&self, h: usize) -> Result<usize> {
        self.h_local.get(&h).copied().ok_or(Error::NotInSplit(h))
    }

    pub(crate) fn h_frattini_local(&self) -> &[usize] {
        &self.h_frattini_local
    }
}

fn p_part(g: &Group, s: &Subgroup, p: usize) -> Subgroup {
    let bits = BitSet::from_ids(
        g.order(),
        s.members()
            .filter(|&x| prime_factors(g.elem_order(x)).iter().all(|&(q, _)| q == p)),
    );
    Subgroup::from_bits(g, bits)
}

/// Exponent `a` with `y = x^a`, if any.
fn discrete_log(g: &Group, x: usize, y: usize) -> Option<usize> {
    g.powers(x).iter().position(|&z| z == y)
}

pub fn decompose(g: &Group) -> Result<DecompositionReport> {
    let lat = g.lattice()?;
    if !frattini(g)?.is_trivial() {
        return Ok(DecompositionReport::refused(g, Refusal::NontrivialFrattini));
    }
    let z = center(g);
    let mut w = Subgroup::trivial(g);
    for m in minimal_normal_subgroups(g)? {
        if !m.is_subgroup_of(&z) {
            w = w.join_subgroup(g, &m);
        }
    }
    if !w.is_abelian(g) {
        return Ok(DecompositionReport::refused(g, Refusal::NonAbelianSocle));
    }

    let mut components = Vec::new();
    for (p, _) in prime_factors(w.order()) {
        let wp = p_part(g, &w, p);
        if wp.members().any(|x| x != 0 && g.elem_order(x) != p) {
            return Ok(DecompositionReport::refused(
                g,
                Refusal::NotElementary { p },
            ));
        }
        let mut span = Subgroup::trivial(g);
        let mut basis = Vec::new();
        for x in wp.members() {
            if !span.contains(x) {
                span = span.join(g, x);
                basis.push(x);
            }
        }
        components.push(Component {
            p,
            delta: basis.len(),
            basis,
            alpha: BTreeMap::new(),
        });
    }

    let target = g.order() / w.order();
    let Some(h) = lat
        .subgroups()
        .iter()
        .find(|s| s.order() == target && s.bits().intersection_count(w.bits()) == 1)
        .cloned()
    else {
        return Ok(DecompositionReport::refused(g, Refusal::NoComplement));
    };
    if !h.is_abelian(g) {
        return Ok(DecompositionReport::refused(
            g,
            Refusal::NonAbelianComplement,
        ));
    }

    for c in &mut components {
        for x in h.members() {
            let b0 = c.basis[0];
            let a = discrete_log(g, b0, g.conj(b0, x));
            let scalar = a.filter(|&a| c.basis.iter().all(|&b| g.conj(b, x) == g.pow(b, a)));
            let Some(a) = scalar else {
                return Ok(DecompositionReport::refused(
                    g,
                    Refusal::NonScalarAction { p: c.p },
                ));
            };
            c.alpha.insert(x, a % c.p);
        }
    }

    // Coordinates by enumerating all products of basis powers.
    let dims: Vec<(usize, usize)> = components
        .iter()
        .flat_map(|c| c.basis.iter().map(move |&b| (b, c.p)))
        .collect();
    let mut coords = vec![None; g.order()];
    let mut digits = vec![0u32; dims.len()];
    loop {
        let mut x = 0;
        for (&(b, _), &k) in dims.iter().zip(&digits) {
            x = g.mul(x, g.pow(b, k as usize));
        }
        coords[x] = Some(digits.clone());
        let mut i = 0;
        while i < dims.len() {
            digits[i] += 1;
            if (digits[i] as usize) < dims[i].1 {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if i == dims.len() {
            break;
        }
    }

    let mut split = vec![(usize::MAX, usize::MAX); g.order()];
    for x in h.members() {
        for y in w.members() {
            split[g.mul(x, y)] = (x, y);
        }
    }
    debug_assert!(split.iter().all(|&(x, _)| x != usize::MAX));

    let gens = h.gens().iter().map(|&x| g.element(x).clone()).collect();
    let hg = Group::from_generators(format!("{}_H", g.name()), g.degree(), gens, g.caps())?;
    let h_local: BTreeMap<usize, usize> = h
        .members()
        .map(|x| (x, hg.index_of(g.element(x)).expect("element of H")))
        .collect();
    let phi_local = frattini(&hg)?;
    let phi_bits = BitSet::from_ids(
        g.order(),
        h_local
            .iter()
            .filter(|(_, &l)| phi_local.contains(l))
            .map(|(&x, _)| x),
    );

    Ok(DecompositionReport {
        status: DecompositionStatus::Decomposed,
        frattini_of_h: Subgroup::from_bits(g, phi_bits),
        h_frattini_local: phi_local.members().collect(),
        w,
        h,
        components,
        split,
        coords,
        h_group: Some(hg),
        h_local,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{build_str, example600};

    #[test]
    fn sym3_splits_with_scalar_two() {
        let g = build_str("Sym3").unwrap();
        let dec = decompose(&g).unwrap();
        assert!(dec.is_decomposed());
        assert_eq!(dec.rank(), 1);
        let c = &dec.components[0];
        assert_eq!((c.p, c.delta), (3, 1));
        assert_eq!(dec.h.order(), 2);
        let h = dec.h.members().find(|&x| x != 0).unwrap();
        assert_eq!(c.alpha[&h], 2);
        assert_eq!(c.alpha[&0], 1);
    }

    #[test]
    fn refusals() {
        let q8 = build_str("Q8").unwrap();
        assert_eq!(
            decompose(&q8).unwrap().status,
            DecompositionStatus::Refused(Refusal::NontrivialFrattini)
        );
        let a4 = build_str("Alt4").unwrap();
        assert_eq!(
            decompose(&a4).unwrap().status,
            DecompositionStatus::Refused(Refusal::NonScalarAction { p: 2 })
        );
    }

    #[test]
    fn abelian_groups_have_no_components() {
        let g = build_str("C6").unwrap();
        let dec = decompose(&g).unwrap();
        assert!(dec.is_decomposed());
        assert_eq!(dec.rank(), 0);
        assert_eq!(dec.h.order(), 6);
        assert!(dec.w.is_trivial());
    }

    #[test]
    fn split_is_a_bijection() {
        let (g, _, _) = example600();
        let dec = decompose(&g).unwrap();
        assert!(dec.is_decomposed());
        let primes: Vec<(usize, usize)> = dec.components.iter().map(|c| (c.p, c.delta)).collect();
        assert_eq!(primes, vec![(3, 1), (5, 2)]);
        let mut seen = std::collections::HashSet::new();
        for x in 0..g.order() {
            let (h, w) = dec.factor(x).unwrap();
            assert!(dec.h.contains(h) && dec.w.contains(w));
            assert_eq!(g.mul(h, w), x);
            assert!(seen.insert((h, w)));
        }
        for w in dec.w.members() {
            for j in 0..dec.rank() {
                assert_eq!(
                    dec.coordinates(w, j).unwrap().len(),
                    dec.components[j].delta
                );
            }
        }
    }

    #[test]
    fn alpha_is_a_homomorphism() {
        let g = build_str("ScalarSemidirect(5,2,4)").unwrap();
        let dec = decompose(&g).unwrap();
        for c in &dec.components {
            for x in dec.h.members() {
                for y in dec.h.members() {
                    assert_eq!(c.alpha[&g.mul(x, y)], c.alpha[&x] * c.alpha[&y] % c.p);
                }
            }
        }
    }

    #[test]
    fn report_serializes() {
        let g = build_str("Sym3").unwrap();
        let json = serde_json::to_value(decompose(&g).unwrap()).unwrap();
        assert_eq!(json["status"], "decomposed");
        assert_eq!(json["components"][0]["p"], 3);
        assert_eq!(json["components"][0]["alpha_on_h_generators"][0], 2);
    }
}
