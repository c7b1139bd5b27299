//! Cross-checks against naive oracles that enumerate subsets of elements
//! directly, sharing nothing with the search code but the multiplication
//! table.

use std::collections::HashSet;

use grouplab::genset::{GenSearch, RankProperty};
use grouplab::graphs::{enhanced_power_graph, power_graph};
use grouplab::{build_str, Group};

fn closure_size(g: &Group, seed: &[usize]) -> usize {
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &s in seed {
            let y = g.mul(x, s);
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count
}

fn generates(g: &Group, set: &[usize]) -> bool {
    closure_size(g, set) == g.order()
}

fn is_minimal(g: &Group, set: &[usize]) -> bool {
    generates(g, set)
        && (0..set.len()).all(|i| {
            let rest: Vec<usize> = set
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &x)| x)
                .collect();
            !generates(g, &rest)
        })
}

/// Every minimal generating set, by enumerating subsets of non-identity
/// elements up to size `1 + log2 |G|`.
fn all_minimal_sets(g: &Group) -> Vec<Vec<usize>> {
    let limit = 1 + (usize::BITS - 1 - g.order().leading_zeros()) as usize;
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(g: &Group, start: usize, limit: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() && is_minimal(g, cur) {
            out.push(cur.clone());
            return;
        }
        if cur.len() == limit {
            return;
        }
        for x in start..g.order() {
            cur.push(x);
            rec(g, x + 1, limit, cur, out);
            cur.pop();
        }
    }
    rec(g, 1, limit, &mut cur, &mut out);
    out
}

struct Naive {
    d: usize,
    m: usize,
    independent: HashSet<(usize, usize)>,
    rank_independent: HashSet<(usize, usize)>,
}

fn naive(g: &Group) -> Naive {
    let sets = all_minimal_sets(g);
    let d = sets.iter().map(Vec::len).min().unwrap_or(0);
    let m = sets.iter().map(Vec::len).max().unwrap_or(0);
    let mut independent = HashSet::new();
    let mut rank_independent = HashSet::new();
    for s in &sets {
        for (i, &a) in s.iter().enumerate() {
            for &b in &s[i + 1..] {
                independent.insert((a.min(b), a.max(b)));
                if s.len() == d {
                    rank_independent.insert((a.min(b), a.max(b)));
                }
            }
        }
    }
    Naive {
        d,
        m,
        independent,
        rank_independent,
    }
}

const SMALL: &[&str] = &[
    "C6",
    "C2^2",
    "C2^3",
    "Sym3",
    "D8",
    "D10",
    "D12",
    "Q8",
    "Alt4",
    "C12",
    "DirectProduct(C2,C4)",
    "CpByCqm(3,2,2)",
    "ScalarSemidirect(3,2,2)",
    "ScalarSemidirect(2,2,3)",
    "AGL1(5)",
    "Sym4",
];

#[test]
fn search_matches_subset_enumeration() {
    for spec in SMALL {
        let g = build_str(spec).unwrap();
        let oracle = naive(&g);
        let s = GenSearch::new(&g).unwrap();
        assert_eq!(s.d().unwrap(), oracle.d, "d({spec})");
        assert_eq!(s.m().unwrap(), oracle.m, "m({spec})");
        for x in 0..g.order() {
            for y in x + 1..g.order() {
                let key = (x, y);
                assert_eq!(
                    s.independent(x, y).unwrap(),
                    oracle.independent.contains(&key),
                    "{spec} {key:?}"
                );
                assert_eq!(
                    s.rank_independent(x, y).unwrap(),
                    oracle.rank_independent.contains(&key),
                    "{spec} rank {key:?}"
                );
            }
        }
    }
}

#[test]
fn properties_match_definitions() {
    for spec in SMALL {
        let g = build_str(spec).unwrap();
        let oracle = naive(&g);
        let n = g.order();
        let power = |x: usize, y: usize| g.powers(x).contains(&y) || g.powers(y).contains(&x);
        let cyclic_pair = |x: usize, y: usize| {
            let size = closure_size(&g, &[x, y]);
            (0..n).any(|z| {
                g.elem_order(z) == size && g.powers(z).contains(&x) && g.powers(z).contains(&y)
            })
        };
        let ind =
            (0..n).all(|x| (x + 1..n).all(|y| power(x, y) || oracle.independent.contains(&(x, y))));
        let s = GenSearch::new(&g).unwrap();
        assert_eq!(s.has_independence_property().unwrap(), ind, "{spec}");
        let expected = if closure_size(&g, &(0..n).collect::<Vec<_>>()) == n && oracle.d <= 1 {
            RankProperty::VacuousCyclic
        } else if (0..n).all(|x| {
            (x + 1..n).all(|y| cyclic_pair(x, y) || oracle.rank_independent.contains(&(x, y)))
        }) {
            RankProperty::Holds
        } else {
            RankProperty::Fails
        };
        assert_eq!(
            s.has_rank_independence_property().unwrap(),
            expected,
            "{spec}"
        );
    }
}

#[test]
fn graphs_match_definitions() {
    for spec in ["Sym3", "Q8", "C12", "D10"] {
        let g = build_str(spec).unwrap();
        let n = g.order();
        let p = power_graph(&g);
        let e = enhanced_power_graph(&g);
        for x in 0..n {
            for y in x + 1..n {
                let pw = g.powers(x).contains(&y) || g.powers(y).contains(&x);
                assert_eq!(p.has_edge(x, y), pw, "{spec} power {x} {y}");
                let size = closure_size(&g, &[x, y]);
                let cyc = (0..n).any(|z| {
                    g.elem_order(z) == size && g.powers(z).contains(&x) && g.powers(z).contains(&y)
                });
                assert_eq!(e.has_edge(x, y), cyc, "{spec} epower {x} {y}");
            }
        }
    }
}
