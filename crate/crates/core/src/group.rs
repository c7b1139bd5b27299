//! Fully enumerated permutation groups.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::perm::Permutation;

/// Groups up to this order get a precomputed multiplication table.
const TABLE_LIMIT: usize = 8192;

/// Enumeration limits shared by every expensive query on a group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of elements produced by closure.
    pub elements: usize,
    /// Maximum group order for which the subgroup lattice is computed.
    pub lattice_order: usize,
    /// Maximum number of subgroups the lattice may hold.
    pub lattice_subgroups: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            elements: 200_000,
            lattice_order: 10_000,
            lattice_subgroups: 200_000,
        }
    }
}

/// A finite permutation group with every element enumerated and indexed.
///
/// Element id 0 is the identity. Ids follow breadth-first closure order from
/// the identity, each layer sorted by image array, so the numbering is a
/// deterministic function of the generator list.
pub struct Group {
    name: String,
    degree: usize,
    generators: Vec<Permutation>,
    generator_ids: Vec<usize>,
    elements: Vec<Permutation>,
    lookup: HashMap<Permutation, u32>,
    table: Option<Vec<u16>>,
    inverses: Vec<u32>,
    orders: Vec<u32>,
    caps: Caps,
    lattice: OnceLock<Result<Arc<Lattice>>>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .finish()
    }
}

/// Closes `generators` under composition.
pub fn enumerate(degree: usize, generators: &[Permutation], caps: Caps) -> Result<Group> {
    Group::from_generators("G", degree, generators.to_vec(), caps)
}

impl Group {
    pub fn from_generators(
        name: impl Into<String>,
        degree: usize,
        generators: Vec<Permutation>,
        caps: Caps,
    ) -> Result<Group> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        if caps.elements == 0 {
            return Err(Error::CapExceeded {
                what: "element enumeration",
                cap: 0,
            });
        }
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut lookup = HashMap::new();
        lookup.insert(identity, 0u32);
        // (parent id, generator index) for every non-identity element
        let mut parent: Vec<(u32, u32)> = vec![(0, 0)];
        let mut layer = vec![0usize];
        while !layer.is_empty() {
            let mut fresh: Vec<(Permutation, u32, u32)> = Vec::new();
            for &e in &layer {
                for (gi, g) in generators.iter().enumerate() {
                    let p = elements[e].then(g);
                    if !lookup.contains_key(&p) {
                        fresh.push((p, e as u32, gi as u32));
                    }
                }
            }
            fresh.sort_by(|a, b| a.0.cmp(&b.0));
            fresh.dedup_by(|a, b| a.0 == b.0);
            layer.clear();
            for (p, par, gi) in fresh {
                if elements.len() >= caps.elements {
                    return Err(Error::CapExceeded {
                        what: "element enumeration",
                        cap: caps.elements,
                    });
                }
                let id = elements.len();
                lookup.insert(p.clone(), id as u32);
                elements.push(p);
                parent.push((par, gi));
                layer.push(id);
            }
        }

        let n = elements.len();
        let generator_ids = generators.iter().map(|g| lookup[g] as usize).collect();
        let orders = elements.iter().map(|p| p.order() as u32).collect();
        let inverses = elements.iter().map(|p| lookup[&p.inverse()]).collect();

        let table = (n <= TABLE_LIMIT).then(|| {
            // right multiplication by each generator
            let right: Vec<Vec<u16>> = generators
                .iter()
                .map(|g| elements.iter().map(|p| lookup[&p.then(g)] as u16).collect())
                .collect();
            let mut table = vec![0u16; n * n];
            for a in 0..n {
                let row = &mut table[a * n..(a + 1) * n];
                row[0] = a as u16;
                // ids are in BFS order so parents precede children
                for b in 1..n {
                    let (par, gi) = parent[b];
                    row[b] = right[gi as usize][row[par as usize] as usize];
                }
            }
            table
        });

        Ok(Group {
            name: name.into(),
            degree,
            generators,
            generator_ids,
            elements,
            lookup,
            table,
            inverses,
            orders,
            caps,
            lattice: OnceLock::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Element ids of the defining generators.
    pub fn generator_ids(&self) -> &[usize] {
        &self.generator_ids
    }

    pub fn element(&self, id: usize) -> &Permutation {
        &self.elements[id]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.lookup.get(p).map(|&i| i as usize)
    }

    pub fn check_id(&self, id: usize) -> Result<()> {
        if id < self.order() {
            Ok(())
        } else {
            Err(Error::BadElement(id))
        }
    }

    /// Product `a * b` (apply `a`, then `b`).
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.lookup[&self.elements[a].then(&self.elements[b])] as usize,
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `x^g = g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    #[inline]
    pub fn elem_order(&self, a: usize) -> usize {
        self.orders[a] as usize
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let k = k % self.elem_order(a);
        let (mut acc, mut base, mut k) = (0, a, k);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generator_ids;
        g.iter()
            .enumerate()
            .all(|(i, &a)| g[i + 1..].iter().all(|&b| self.commute(a, b)))
    }

    /// Elements of the cyclic subgroup generated by `a`, in power order.
    pub fn powers(&self, a: usize) -> Vec<usize> {
        let mut out = vec![0];
        let mut cur = a;
        while cur != 0 {
            out.push(cur);
            cur = self.mul(cur, a);
        }
        out
    }

    pub fn cyclic_bits(&self, a: usize) -> BitSet {
        BitSet::from_ids(self.order(), self.powers(a))
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.iter().any(|&o| o as usize == self.order())
    }

    /// The subgroup lattice, computed on first use and shared afterwards.
    pub fn lattice(&self) -> Result<Arc<Lattice>> {
        self.lattice
            .get_or_init(|| Lattice::compute(self).map(Arc::new))
            .clone()
    }
}
