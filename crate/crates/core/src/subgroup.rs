//! Subgroups stored as bitsets over the owner's element ids.

use std::hash::{Hash, Hasher};

use crate::bitset::BitSet;
use crate::group::Group;

/// A subgroup of some [`Group`], with a generating set carried along so
/// further joins stay cheap. Equality, hashing and ordering only look at the
/// members; order is `(|H|, member list)`.
#[derive(Clone, Debug)]
pub struct Subgroup {
    bits: BitSet,
    order: usize,
    gens: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state)
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.bits.cmp(&other.bits))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Subgroup {
    pub fn trivial(g: &Group) -> Subgroup {
        Subgroup {
            bits: BitSet::from_ids(g.order(), [0]),
            order: 1,
            gens: Vec::new(),
        }
    }

    pub fn whole(g: &Group) -> Subgroup {
        Subgroup {
            bits: BitSet::full(g.order()),
            order: g.order(),
            gens: g
                .generator_ids()
                .iter()
                .copied()
                .filter(|&x| x != 0)
                .collect(),
        }
    }

    /// Wraps a member set already known to be a subgroup and picks a small
    /// generating set for it.
    pub fn from_bits(g: &Group, bits: BitSet) -> Subgroup {
        let mut members = bits.to_vec();
        members.sort_by_key(|&x| std::cmp::Reverse(g.elem_order(x)));
        let mut cur = Subgroup::trivial(g);
        for x in members {
            if cur.order == bits.count() {
                break;
            }
            if !cur.contains(x) {
                cur = cur.join(g, x);
            }
        }
        debug_assert_eq!(cur.bits, bits);
        cur
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn into_bits(self) -> BitSet {
        self.bits
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order <= other.order && self.bits.is_subset(&other.bits)
    }

    /// `⟨self, x⟩`, extending cosets of `self` (Dimino's method).
    pub fn join(&self, g: &Group, x: usize) -> Subgroup {
        if self.contains(x) {
            return self.clone();
        }
        let base: Vec<usize> = self.bits.iter().collect();
        let mut bits = self.bits.clone();
        let mut gens = self.gens.clone();
        gens.push(x);
        let mut reps = vec![0usize];
        let add_coset = |r: usize, bits: &mut BitSet| {
            for &h in &base {
                bits.insert(g.mul(h, r));
            }
        };
        add_coset(x, &mut bits);
        reps.push(x);
        let mut i = 0;
        while i < reps.len() {
            let r = reps[i];
            for &t in &gens {
                let e = g.mul(r, t);
                if !bits.contains(e) {
                    add_coset(e, &mut bits);
                    reps.push(e);
                }
            }
            i += 1;
        }
        Subgroup {
            order: base.len() * reps.len(),
            bits,
            gens,
        }
    }

    pub fn join_all(&self, g: &Group, xs: impl IntoIterator<Item = usize>) -> Subgroup {
        let mut cur = self.clone();
        for x in xs {
            if !cur.contains(x) {
                cur = cur.join(g, x);
            }
        }
        cur
    }

    /// `⟨self, other⟩`.
    pub fn join_subgroup(&self, g: &Group, other: &Subgroup) -> Subgroup {
        self.join_all(g, other.gens.iter().copied())
    }

    pub fn intersection(&self, g: &Group, other: &Subgroup) -> Subgroup {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Subgroup::from_bits(g, bits)
    }

    /// `self^t = t⁻¹ self t`.
    pub fn conjugate(&self, g: &Group, t: usize) -> Subgroup {
        let mut bits = BitSet::new(g.order());
        for h in self.bits.iter() {
            bits.insert(g.conj(h, t));
        }
        Subgroup {
            bits,
            order: self.order,
            gens: self.gens.iter().map(|&h| g.conj(h, t)).collect(),
        }
    }

    pub fn is_normal(&self, g: &Group) -> bool {
        g.generator_ids()
            .iter()
            .all(|&t| self.gens.iter().all(|&h| self.contains(g.conj(h, t))))
    }

    /// True iff some member generates the whole subgroup.
    pub fn is_cyclic(&self, g: &Group) -> bool {
        self.bits.iter().any(|x| g.elem_order(x) == self.order)
    }

    pub fn is_abelian(&self, g: &Group) -> bool {
        self.gens
            .iter()
            .enumerate()
            .all(|(i, &a)| self.gens[i + 1..].iter().all(|&b| g.commute(a, b)))
    }
}

/// Least subgroup containing `seed`.
pub fn subgroup_closure(g: &Group, seed: &[usize]) -> Subgroup {
    Subgroup::trivial(g).join_all(g, seed.iter().copied())
}

pub fn is_cyclic_subgroup(g: &Group, s: &Subgroup) -> bool {
    s.is_cyclic(g)
}
