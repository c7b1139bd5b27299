//! Maximal-subgroup census of small simple groups, and the search for an
//! element `s` together with a non-commuting `x` lying in every maximal
//! subgroup that contains `s`.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::characteristic::{centralizer, normal_closure, normalizer};
use crate::conjugacy::conjugacy_classes;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::lattice::Lattice;
use crate::subgroup::Subgroup;

/// The maximal subgroups of a group, grouped into conjugacy classes.
#[derive(Debug, Clone)]
pub struct MaximalCensus {
    maximals: Vec<Subgroup>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl MaximalCensus {
    pub fn from_lattice(lat: &Lattice) -> Self {
        let positions: Vec<usize> = lat.maximal_positions().collect();
        let mut class_ids: Vec<usize> = Vec::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = Vec::with_capacity(positions.len());
        for (i, &pos) in positions.iter().enumerate() {
            let c = lat.class_of(pos);
            let k = match class_ids.iter().position(|&x| x == c) {
                Some(k) => k,
                None => {
                    class_ids.push(c);
                    classes.push(Vec::new());
                    class_ids.len() - 1
                }
            };
            classes[k].push(i);
            class_of.push(k);
        }
        MaximalCensus {
            maximals: positions.iter().map(|&p| lat.get(p).clone()).collect(),
            class_of,
            classes,
        }
    }

    pub fn maximals(&self) -> &[Subgroup] {
        &self.maximals
    }

    /// Index lists into [`Self::maximals`], one per conjugacy class.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn per_class_order(&self) -> Vec<usize> {
        self.classes
            .iter()
            .map(|c| self.maximals[c[0]].order())
            .collect()
    }

    /// Indices of the maximal subgroups containing `s`.
    pub fn containing(&self, s: usize) -> Vec<usize> {
        (0..self.maximals.len())
            .filter(|&i| self.maximals[i].contains(s))
            .collect()
    }

    /// Number of conjugacy classes met by the given maximal subgroups.
    pub fn classes_met(&self, idx: &[usize]) -> usize {
        let mut cs: Vec<usize> = idx.iter().map(|&i| self.class_of[i]).collect();
        cs.sort_unstable();
        cs.dedup();
        cs.len()
    }

    /// Tab-separated table: class id, subgroup order, class size, and one
    /// column per candidate counting the members of the class containing it.
    pub fn to_tsv(&self, candidates: &[usize]) -> String {
        let mut out = String::from("class\torder\tsize");
        for s in candidates {
            let _ = write!(out, "\tcontains_e{s}");
        }
        out.push('\n');
        for (k, class) in self.classes.iter().enumerate() {
            let _ = write!(
                out,
                "{k}\t{}\t{}",
                self.maximals[class[0]].order(),
                class.len()
            );
            for &s in candidates {
                let n = class
                    .iter()
                    .filter(|&&i| self.maximals[i].contains(s))
                    .count();
                let _ = write!(out, "\t{n}");
            }
            out.push('\n');
        }
        out
    }
}

pub fn census(g: &Group) -> Result<MaximalCensus> {
    Ok(MaximalCensus::from_lattice(&*g.lattice()?))
}

pub fn maximals_containing(census: &MaximalCensus, s: usize) -> Vec<&Subgroup> {
    census
        .containing(s)
        .into_iter()
        .map(|i| &census.maximals[i])
        .collect()
}

/// True iff no two of the listed census members are conjugate.
pub fn no_two_conjugate(census: &MaximalCensus, idx: &[usize]) -> bool {
    census.classes_met(idx) == idx.len()
}

/// `|N(⟨s⟩)| > |C(s)|`.
pub fn normalizer_exceeds_centralizer(g: &Group, s: usize) -> bool {
    let cyc = Subgroup::from_bits(g, g.cyclic_bits(s));
    normalizer(g, &cyc).order() > centralizer(g, s).order()
}

/// Non-abelian with no proper nontrivial normal subgroup.
pub fn is_nonabelian_simple(g: &Group) -> bool {
    !g.is_abelian()
        && conjugacy_classes(g)
            .iter()
            .skip(1)
            .all(|(x, _)| normal_closure(g, &[*x]).order() == g.order())
}

/// Preferred order of `s` for the groups where one is known to give a
/// clean census.
pub fn hint_order(name: &str) -> Option<usize> {
    match name {
        "Alt5" => Some(5),
        "Alt6" => Some(5),
        "Alt7" => Some(7),
        "PSL3(4)" | "PSL(3,4)" => Some(7),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WitnessChecks {
    pub x_in_intersection: bool,
    pub non_commuting: bool,
    pub x_normalizes_not_centralizes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimpleWitness {
    pub s: usize,
    pub x: usize,
    /// Census indices of the maximal subgroups containing `s`.
    pub containing: Vec<usize>,
    pub checks: WitnessChecks,
}

fn require_simple(g: &Group) -> Result<()> {
    if is_nonabelian_simple(g) {
        Ok(())
    } else {
        Err(Error::NotSimple(g.name().to_string()))
    }
}

/// Class representatives, hinted order first, then by decreasing order.
pub fn candidate_order(g: &Group) -> Vec<usize> {
    let mut reps: Vec<usize> = conjugacy_classes(g)
        .into_iter()
        .map(|(x, _)| x)
        .skip(1)
        .collect();
    let hint = hint_order(g.name());
    reps.sort_by_key(|&x| {
        (
            Some(g.elem_order(x)) != hint,
            std::cmp::Reverse(g.elem_order(x)),
            x,
        )
    });
    reps
}

fn witness_for(g: &Group, census: &MaximalCensus, s: usize) -> Option<SimpleWitness> {
    let containing = census.containing(s);
    let mut inter = crate::bitset::BitSet::full(g.order());
    for &i in &containing {
        inter.intersect_with(census.maximals[i].bits());
    }
    let cyc = Subgroup::from_bits(g, g.cyclic_bits(s));
    let norm = normalizer(g, &cyc);
    let candidates: Vec<usize> = inter.iter().filter(|&x| !g.commute(x, s)).collect();
    let x = candidates
        .iter()
        .copied()
        .find(|&x| norm.contains(x))
        .or_else(|| candidates.first().copied())?;
    Some(SimpleWitness {
        s,
        x,
        checks: WitnessChecks {
            x_in_intersection: containing.iter().all(|&i| census.maximals[i].contains(x)),
            non_commuting: !g.commute(x, s),
            x_normalizes_not_centralizes: norm.contains(x) && !g.commute(x, s),
        },
        containing,
    })
}

/// First witness over [`candidate_order`], or `None` if no class
/// representative admits one.
pub fn find_witness(g: &Group) -> Result<Option<SimpleWitness>> {
    require_simple(g)?;
    let census = census(g)?;
    Ok(candidate_order(g)
        .into_iter()
        .find_map(|s| witness_for(g, &census, s)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateRow {
    pub s: usize,
    pub order: usize,
    pub maximals_containing: usize,
    pub classes_met: usize,
    pub no_two_conjugate: bool,
    pub n_gt_c: bool,
}

impl CandidateRow {
    pub fn satisfies_both(&self) -> bool {
        self.no_two_conjugate && self.n_gt_c
    }
}

/// Both clauses for every class representative, in [`candidate_order`].
pub fn candidate_report(g: &Group) -> Result<Vec<CandidateRow>> {
    require_simple(g)?;
    let census = census(g)?;
    Ok(candidate_order(g)
        .into_par_iter()
        .map(|s| {
            let idx = census.containing(s);
            CandidateRow {
                s,
                order: g.elem_order(s),
                maximals_containing: idx.len(),
                classes_met: census.classes_met(&idx),
                no_two_conjugate: no_two_conjugate(&census, &idx),
                n_gt_c: normalizer_exceeds_centralizer(g, s),
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conjugacy::are_conjugate_subgroups;
    use crate::constructors::build_str;

    #[test]
    fn alt5_census() {
        let g = build_str("Alt5").unwrap();
        let c = census(&g).unwrap();
        assert_eq!(c.maximals().len(), 21);
        assert_eq!(c.containing(0).len(), 21);
        let s = (0..g.order()).find(|&x| g.elem_order(x) == 5).unwrap();
        let m = maximals_containing(&c, s);
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].order(), 10);
        assert!(normalizer_exceeds_centralizer(&g, s));
        for class in c.classes() {
            for &i in class {
                assert!(are_conjugate_subgroups(
                    &g,
                    &c.maximals()[class[0]],
                    &c.maximals()[i]
                ));
            }
        }
    }

    #[test]
    fn alt5_involution_fails_clause_two() {
        let g = build_str("Alt5").unwrap();
        let rows = candidate_report(&g).unwrap();
        let inv = rows.iter().find(|r| r.order == 2).unwrap();
        assert!(!inv.no_two_conjugate);
        let five = rows.iter().find(|r| r.order == 5).unwrap();
        assert!(five.satisfies_both());
        assert_eq!(rows[0].order, 5);
    }

    #[test]
    fn alt5_witness_inverts_s() {
        let g = build_str("Alt5").unwrap();
        let w = find_witness(&g).unwrap().unwrap();
        assert_eq!(g.elem_order(w.s), 5);
        assert_eq!(g.elem_order(w.x), 2);
        assert_eq!(g.conj(w.s, w.x), g.inv(w.s));
        assert!(w.checks.x_in_intersection && w.checks.non_commuting);
        assert!(w.checks.x_normalizes_not_centralizes);
    }

    #[test]
    fn non_simple_groups_are_rejected() {
        let g = build_str("Sym4").unwrap();
        assert!(!is_nonabelian_simple(&g));
        assert!(matches!(find_witness(&g), Err(Error::NotSimple(_))));
        assert!(!is_nonabelian_simple(&build_str("C5").unwrap()));
    }

    #[test]
    fn normalizer_vs_centralizer() {
        let s3 = build_str("Sym3").unwrap();
        let r = (0..6).find(|&x| s3.elem_order(x) == 3).unwrap();
        assert!(normalizer_exceeds_centralizer(&s3, r));
        let c6 = build_str("C6").unwrap();
        assert!((0..6).all(|x| !normalizer_exceeds_centralizer(&c6, x)));
    }

    #[test]
    fn conjugate_pair_detected() {
        let g = build_str("Alt5").unwrap();
        let c = census(&g).unwrap();
        let a4 = c
            .classes()
            .iter()
            .find(|cl| c.maximals()[cl[0]].order() == 12)
            .unwrap();
        assert!(!no_two_conjugate(&c, &a4[..2]));
        assert!(no_two_conjugate(&c, &a4[..1]));
    }

    #[test]
    fn census_tsv_shape() {
        let g = build_str("Alt5").unwrap();
        let c = census(&g).unwrap();
        let tsv = c.to_tsv(&[0]);
        let lines: Vec<&str> = tsv.lines().collect();
        assert_eq!(lines[0], "class\torder\tsize\tcontains_e0");
        assert_eq!(lines.len(), 4);
    }
}
