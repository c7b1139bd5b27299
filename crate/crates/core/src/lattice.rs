//! The full subgroup lattice, built by joining with cyclic subgroups.

use std::collections::HashMap;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::subgroup::Subgroup;

/// Every subgroup of a group, sorted by `(order, member list)`, with
/// conjugacy classes and maximality flags.
#[derive(Debug)]
pub struct Lattice {
    subgroups: Vec<Subgroup>,
    index: HashMap<BitSet, usize>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    maximal: Vec<bool>,
    cyclic: Vec<usize>,
}

impl Lattice {
    /// Closes the set of cyclic subgroups under joins. Only one
    /// representative per conjugacy class is expanded; conjugates are added
    /// as orbits under the generators.
    pub fn compute(g: &Group) -> Result<Lattice> {
        let caps = g.caps();
        if g.order() > caps.lattice_order {
            return Err(Error::CapExceeded {
                what: "lattice group order",
                cap: caps.lattice_order,
            });
        }
        let mut cyclics: Vec<Subgroup> = Vec::new();
        let mut seen: HashMap<BitSet, ()> = HashMap::new();
        for x in 0..g.order() {
            let bits = g.cyclic_bits(x);
            if seen.insert(bits, ()).is_none() {
                cyclics.push(Subgroup::trivial(g).join(g, x));
            }
        }
        // larger cyclic subgroups first: joins grow faster
        cyclics.sort_by(|a, b| b.order().cmp(&a.order()).then_with(|| a.cmp(b)));

        let mut all: Vec<Subgroup> = Vec::new();
        let mut index: HashMap<BitSet, usize> = HashMap::new();
        let mut class_of: Vec<usize> = Vec::new();
        let mut reps: Vec<usize> = Vec::new();
        let mut rep_maximal: Vec<bool> = Vec::new();

        let add_class = |h: Subgroup,
                         all: &mut Vec<Subgroup>,
                         index: &mut HashMap<BitSet, usize>,
                         class_of: &mut Vec<usize>,
                         reps: &mut Vec<usize>|
         -> Result<()> {
            let class = reps.len();
            let first = all.len();
            reps.push(first);
            index.insert(h.bits().clone(), first);
            all.push(h);
            class_of.push(class);
            let mut i = first;
            while i < all.len() {
                for &t in g.generator_ids() {
                    let c = all[i].conjugate(g, t);
                    if !index.contains_key(c.bits()) {
                        if all.len() >= caps.lattice_subgroups {
                            return Err(Error::CapExceeded {
                                what: "lattice subgroup count",
                                cap: caps.lattice_subgroups,
                            });
                        }
                        index.insert(c.bits().clone(), all.len());
                        all.push(c);
                        class_of.push(class);
                    }
                }
                i += 1;
            }
            Ok(())
        };

        add_class(
            Subgroup::trivial(g),
            &mut all,
            &mut index,
            &mut class_of,
            &mut reps,
        )?;
        let mut next = 0;
        while next < reps.len() {
            let h = all[reps[next]].clone();
            let mut is_max = h.order() < g.order();
            for c in &cyclics {
                if c.is_subgroup_of(&h) {
                    continue;
                }
                let j = h.join_subgroup(g, c);
                if j.order() < g.order() {
                    is_max = false;
                }
                if !index.contains_key(j.bits()) {
                    add_class(j, &mut all, &mut index, &mut class_of, &mut reps)?;
                }
            }
            rep_maximal.push(is_max);
            next += 1;
        }

        // canonical order
        let mut perm: Vec<usize> = (0..all.len()).collect();
        perm.sort_by(|&a, &b| all[a].cmp(&all[b]));
        let mut new_pos = vec![0; all.len()];
        for (pos, &old) in perm.iter().enumerate() {
            new_pos[old] = pos;
        }
        // classes numbered by their least subgroup in the new order
        let mut class_rank: Vec<(usize, usize)> = reps
            .iter()
            .enumerate()
            .map(|(c, _)| (usize::MAX, c))
            .collect();
        for (old, &c) in class_of.iter().enumerate() {
            class_rank[c].0 = class_rank[c].0.min(new_pos[old]);
        }
        class_rank.sort();
        let mut class_id = vec![0; reps.len()];
        for (new_c, &(_, c)) in class_rank.iter().enumerate() {
            class_id[c] = new_c;
        }

        let mut subgroups = Vec::with_capacity(all.len());
        let mut new_class_of = Vec::with_capacity(all.len());
        let mut maximal = Vec::with_capacity(all.len());
        let mut slots: Vec<Option<Subgroup>> = all.into_iter().map(Some).collect();
        for &old in &perm {
            let c = class_of[old];
            subgroups.push(slots[old].take().expect("each slot moved once"));
            new_class_of.push(class_id[c]);
            maximal.push(rep_maximal[c]);
        }
        let mut classes = vec![Vec::new(); reps.len()];
        for (i, &c) in new_class_of.iter().enumerate() {
            classes[c].push(i);
        }
        let index = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.bits().clone(), i))
            .collect();
        let cyclic = subgroups
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_cyclic(g))
            .map(|(i, _)| i)
            .collect();
        Ok(Lattice {
            subgroups,
            index,
            class_of: new_class_of,
            classes,
            maximal,
            cyclic,
        })
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn position(&self, bits: &BitSet) -> Option<usize> {
        self.index.get(bits).copied()
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    /// Conjugacy classes of subgroups, as lists of lattice positions.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.maximal[i]
    }

    pub fn maximal_positions(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.maximal[i])
    }

    pub fn maximal_subgroups(&self) -> Vec<Subgroup> {
        self.maximal_positions()
            .map(|i| self.subgroups[i].clone())
            .collect()
    }

    pub fn cyclic_positions(&self) -> &[usize] {
        &self.cyclic
    }

    /// A subgroup is normal iff its conjugacy class is a singleton.
    pub fn is_normal(&self, i: usize) -> bool {
        self.classes[self.class_of[i]].len() == 1
    }

    pub fn normal_positions(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.is_normal(i))
    }
}

/// Every subgroup exactly once, sorted by `(order, member list)`.
pub fn all_subgroups(g: &Group) -> Result<Vec<Subgroup>> {
    Ok(g.lattice()?.subgroups().to_vec())
}

pub fn maximal_subgroups(g: &Group) -> Result<Vec<Subgroup>> {
    Ok(g.lattice()?.maximal_subgroups())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{build, GroupSpec};
    use crate::subgroup::subgroup_closure;

    fn group(spec: &str) -> Group {
        build(&spec.parse::<GroupSpec>().unwrap()).unwrap()
    }

    /// Brute force: closures of all pairs, closed again under pairwise joins.
    fn brute_lattice(g: &Group) -> Vec<BitSet> {
        let mut set: std::collections::BTreeSet<BitSet> = Default::default();
        for a in 0..g.order() {
            for b in a..g.order() {
                set.insert(subgroup_closure(g, &[a, b]).into_bits());
            }
        }
        loop {
            let cur: Vec<BitSet> = set.iter().cloned().collect();
            let before = set.len();
            for x in &cur {
                for y in &cur {
                    let mut seed = x.to_vec();
                    seed.extend(y.iter());
                    set.insert(subgroup_closure(g, &seed).into_bits());
                }
            }
            if set.len() == before {
                break;
            }
        }
        set.into_iter().collect()
    }

    #[test]
    fn small_counts() {
        assert_eq!(group("Cyclic(6)").lattice().unwrap().len(), 4);
        assert_eq!(group("Q8").lattice().unwrap().len(), 6);
        assert_eq!(group("Sym(3)").lattice().unwrap().len(), 6);
        assert_eq!(group("Sym(4)").lattice().unwrap().len(), 30);
        assert_eq!(group("Alt(5)").lattice().unwrap().len(), 59);
    }

    #[test]
    fn matches_brute_force() {
        for spec in ["Sym(4)", "Dihedral(12)", "ElementaryAbelian(2,3)", "Q16"] {
            let g = group(spec);
            let lat = g.lattice().unwrap();
            let mut ours: Vec<BitSet> = lat.subgroups().iter().map(|s| s.bits().clone()).collect();
            ours.sort();
            assert_eq!(ours, brute_lattice(&g), "{spec}");
        }
    }

    #[test]
    fn maximals_alt5() {
        let g = group("Alt(5)");
        let lat = g.lattice().unwrap();
        let max: Vec<usize> = lat.maximal_positions().collect();
        assert_eq!(max.len(), 21);
        let mut by_class: std::collections::BTreeMap<usize, (usize, usize)> = Default::default();
        for &i in &max {
            let e = by_class
                .entry(lat.class_of(i))
                .or_insert((lat.get(i).order(), 0));
            e.1 += 1;
        }
        let mut shape: Vec<(usize, usize)> = by_class.into_values().collect();
        shape.sort();
        assert_eq!(shape, vec![(6, 10), (10, 6), (12, 5)]);
    }

    #[test]
    fn maximality_cross_check() {
        for spec in ["Sym(4)", "Q8", "Cyclic(6)", "Dihedral(10)"] {
            let g = group(spec);
            let lat = g.lattice().unwrap();
            for (i, m) in lat.subgroups().iter().enumerate() {
                let brute = m.order() < g.order()
                    && (0..g.order())
                        .filter(|&x| !m.contains(x))
                        .all(|x| m.join(&g, x).order() == g.order());
                assert_eq!(lat.is_maximal(i), brute, "{spec} #{i}");
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let spec: GroupSpec = "Sym(5)".parse().unwrap();
        let g = crate::constructors::build_with_caps(
            &spec,
            crate::group::Caps {
                lattice_order: 100,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(matches!(g.lattice(), Err(Error::CapExceeded { .. })));
    }
}
