use crate::bitset::BitSet;
use crate::group::Group;
use crate::subgroup::Subgroup;

/// Element conjugacy classes, each as `(least member, members)`, in order of
/// their representatives.
pub fn conjugacy_classes(g: &Group) -> Vec<(usize, BitSet)> {
    let mut assigned = BitSet::new(g.order());
    let mut out = Vec::new();
    for x in 0..g.order() {
        if assigned.contains(x) {
            continue;
        }
        let mut class = BitSet::from_ids(g.order(), [x]);
        let mut queue = vec![x];
        while let Some(y) = queue.pop() {
            for &t in g.generator_ids() {
                let z = g.conj(y, t);
                if class.insert(z) {
                    queue.push(z);
                }
            }
        }
        assigned.union_with(&class);
        out.push((x, class));
    }
    out
}

/// Some `t` with `a^t = b`, scanning the whole group.
pub fn conjugating_element(g: &Group, a: &Subgroup, b: &Subgroup) -> Option<usize> {
    if a.order() != b.order() {
        return None;
    }
    if a == b {
        return Some(0);
    }
    let profile = |s: &Subgroup| {
        let mut v: Vec<usize> = s.members().map(|x| g.elem_order(x)).collect();
        v.sort_unstable();
        v
    };
    if profile(a) != profile(b) {
        return None;
    }
    (0..g.order()).find(|&t| a.gens().iter().all(|&h| b.contains(g.conj(h, t))))
}

pub fn are_conjugate_subgroups(g: &Group, a: &Subgroup, b: &Subgroup) -> bool {
    conjugating_element(g, a, b).is_some()
}
