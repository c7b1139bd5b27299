//! Characteristic subgroups, normalizers and centralizers, and the
//! nilpotent/supersoluble tests.

use crate::bitset::BitSet;
use crate::error::Result;
use crate::group::Group;
use crate::subgroup::{subgroup_closure, Subgroup};

pub(crate) fn prime_factors(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && prime_factors(n) == [(n, 1)]
}

/// Intersection of all maximal subgroups; the trivial group is its own
/// Frattini subgroup.
pub fn frattini(g: &Group) -> Result<Subgroup> {
    let lat = g.lattice()?;
    let mut bits = BitSet::full(g.order());
    for i in lat.maximal_positions() {
        bits.intersect_with(lat.get(i).bits());
    }
    Ok(Subgroup::from_bits(g, bits))
}

/// Nilpotent iff, for every prime p, the p-elements number exactly the
/// p-part of the order (every Sylow subgroup is normal).
pub fn subgroup_is_nilpotent(g: &Group, h: &Subgroup) -> bool {
    prime_factors(h.order()).into_iter().all(|(p, k)| {
        let pk = p.pow(k);
        let count = h
            .members()
            .filter(|&x| {
                let o = g.elem_order(x);
                pk % o == 0
            })
            .count();
        count == pk
    })
}

pub fn is_nilpotent(g: &Group) -> bool {
    subgroup_is_nilpotent(g, &Subgroup::whole(g))
}

/// The largest normal nilpotent subgroup.
pub fn fitting(g: &Group) -> Result<Subgroup> {
    let lat = g.lattice()?;
    let best = lat
        .normal_positions()
        .filter(|&i| subgroup_is_nilpotent(g, lat.get(i)))
        .max_by_key(|&i| lat.get(i).order())
        .expect("trivial subgroup is normal and nilpotent");
    Ok(lat.get(best).clone())
}

pub fn minimal_normal_subgroups(g: &Group) -> Result<Vec<Subgroup>> {
    let lat = g.lattice()?;
    let normals: Vec<&Subgroup> = lat
        .normal_positions()
        .map(|i| lat.get(i))
        .filter(|s| !s.is_trivial())
        .collect();
    Ok(normals
        .iter()
        .filter(|n| {
            !normals
                .iter()
                .any(|m| m.order() < n.order() && m.is_subgroup_of(n))
        })
        .map(|n| (*n).clone())
        .collect())
}

pub fn normalizer(g: &Group, s: &Subgroup) -> Subgroup {
    let bits = BitSet::from_ids(
        g.order(),
        (0..g.order()).filter(|&t| s.gens().iter().all(|&h| s.contains(g.conj(h, t)))),
    );
    Subgroup::from_bits(g, bits)
}

pub fn centralizer(g: &Group, x: usize) -> Subgroup {
    centralizer_of_set(g, &[x])
}

pub fn centralizer_of_set(g: &Group, xs: &[usize]) -> Subgroup {
    let bits = BitSet::from_ids(
        g.order(),
        (0..g.order()).filter(|&t| xs.iter().all(|&x| g.commute(x, t))),
    );
    Subgroup::from_bits(g, bits)
}

pub fn center(g: &Group) -> Subgroup {
    centralizer_of_set(g, g.generator_ids())
}

/// Smallest normal subgroup containing `seed`.
pub fn normal_closure(g: &Group, seed: &[usize]) -> Subgroup {
    let mut cur = subgroup_closure(g, seed);
    loop {
        let extra: Vec<usize> = cur
            .gens()
            .iter()
            .flat_map(|&h| g.generator_ids().iter().map(move |&t| (h, t)))
            .map(|(h, t)| g.conj(h, t))
            .filter(|&c| !cur.contains(c))
            .collect();
        if extra.is_empty() {
            return cur;
        }
        cur = cur.join_all(g, extra);
    }
}

pub fn derived_subgroup(g: &Group) -> Subgroup {
    let gens = g.generator_ids();
    let comms: Vec<usize> = gens
        .iter()
        .flat_map(|&a| gens.iter().map(move |&b| (a, b)))
        .map(|(a, b)| g.commutator(a, b))
        .collect();
    normal_closure(g, &comms)
}

/// Ascends a chain of normal subgroups with prime-order factors; succeeds
/// iff the chain reaches the whole group.
pub fn is_supersoluble(g: &Group) -> Result<bool> {
    let lat = g.lattice()?;
    let normals: Vec<usize> = lat.normal_positions().collect();
    let mut cur = Subgroup::trivial(g);
    while cur.order() < g.order() {
        let step = normals.iter().map(|&i| lat.get(i)).find(|m| {
            m.order() % cur.order() == 0
                && is_prime(m.order() / cur.order())
                && cur.is_subgroup_of(m)
        });
        match step {
            Some(m) => cur = m.clone(),
            None => return Ok(false),
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{build, GroupSpec};

    fn group(spec: &str) -> Group {
        build(&spec.parse::<GroupSpec>().unwrap()).unwrap()
    }

    #[test]
    fn frattini_examples() {
        assert_eq!(frattini(&group("Sym(3)")).unwrap().order(), 1);
        assert_eq!(frattini(&group("Q8")).unwrap().order(), 2);
        assert_eq!(frattini(&group("Cyclic(4)")).unwrap().order(), 2);
        assert_eq!(frattini(&group("Cyclic(12)")).unwrap().order(), 2);
        assert_eq!(frattini(&group("Cyclic(1)")).unwrap().order(), 1);
    }

    #[test]
    fn fitting_examples() {
        assert_eq!(fitting(&group("Sym(4)")).unwrap().order(), 4);
        assert_eq!(fitting(&group("Sym(3)")).unwrap().order(), 3);
        assert_eq!(fitting(&group("Q8")).unwrap().order(), 8);
        assert_eq!(fitting(&group("Alt(5)")).unwrap().order(), 1);
    }

    #[test]
    fn minimal_normals() {
        let orders = |s: &str| {
            let mut v: Vec<usize> = minimal_normal_subgroups(&group(s))
                .unwrap()
                .iter()
                .map(|n| n.order())
                .collect();
            v.sort();
            v
        };
        assert_eq!(orders("Sym(4)"), vec![4]);
        assert_eq!(orders("Cyclic(6)"), vec![2, 3]);
        assert_eq!(orders("Alt(5)"), vec![60]);
    }

    #[test]
    fn normalizers_and_centralizers() {
        let a5 = group("Alt(5)");
        let five = (0..60).find(|&x| a5.elem_order(x) == 5).unwrap();
        let c = subgroup_closure(&a5, &[five]);
        assert_eq!(normalizer(&a5, &c).order(), 10);
        assert_eq!(centralizer(&a5, five).order(), 5);
        assert_eq!(centralizer(&a5, 0).order(), 60);
        assert_eq!(center(&a5).order(), 1);
        assert_eq!(center(&group("Q8")).order(), 2);
        assert_eq!(derived_subgroup(&group("Sym(3)")).order(), 3);
        assert_eq!(derived_subgroup(&group("Sym(4)")).order(), 12);
        assert_eq!(derived_subgroup(&group("Alt(5)")).order(), 60);
    }

    #[test]
    fn nilpotent_and_supersoluble() {
        assert!(is_nilpotent(&group("Q8")));
        assert!(!is_nilpotent(&group("Sym(3)")));
        assert!(is_supersoluble(&group("Sym(3)")).unwrap());
        assert!(!is_supersoluble(&group("Sym(4)")).unwrap());
        assert!(!is_supersoluble(&group("Alt(4)")).unwrap());
        assert!(is_supersoluble(&group("Dihedral(8)")).unwrap());
    }

    #[test]
    fn frattini_elements_are_non_generators() {
        for spec in ["Q8", "Cyclic(12)", "Dihedral(8)", "Sym(4)", "Q16"] {
            let g = group(spec);
            let phi = frattini(&g).unwrap();
            for a in 0..g.order() {
                for b in 0..g.order() {
                    for x in phi.members() {
                        let with = subgroup_closure(&g, &[a, b, x]).order();
                        let without = subgroup_closure(&g, &[a, b]).order();
                        assert_eq!(with == g.order(), without == g.order());
                    }
                }
            }
        }
    }

    #[test]
    fn prime_helpers() {
        assert_eq!(prime_factors(600), vec![(2, 3), (3, 1), (5, 2)]);
        assert!(is_prime(7));
        assert!(!is_prime(1));
        assert!(!is_prime(9));
    }
}
