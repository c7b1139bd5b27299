//! Power, enhanced power, independence and rank graphs on a group's
//! elements, with DOT and TSV export.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::genset::GenSearch;
use crate::group::Group;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GraphKind {
    Power,
    EnhancedPower,
    Independence,
    Rank,
}

impl GraphKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphKind::Power => "power",
            GraphKind::EnhancedPower => "epower",
            GraphKind::Independence => "independence",
            GraphKind::Rank => "rank",
        }
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "power" => Ok(GraphKind::Power),
            "epower" | "enhanced" | "enhanced-power" => Ok(GraphKind::EnhancedPower),
            "independence" => Ok(GraphKind::Independence),
            "rank" => Ok(GraphKind::Rank),
            _ => Err(Error::InvalidSpec(format!("unknown graph kind {s:?}"))),
        }
    }
}

/// A simple graph on element ids, stored as symmetric bitset rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupGraph {
    name: String,
    kind: GraphKind,
    rows: Vec<BitSet>,
    orders: Vec<usize>,
}

impl GroupGraph {
    fn from_rows(g: &Group, kind: GraphKind, mut rows: Vec<BitSet>) -> GroupGraph {
        let n = rows.len();
        for x in 0..n {
            rows[x].remove(x);
            for y in rows[x].clone().iter() {
                rows[y].insert(x);
            }
        }
        GroupGraph {
            name: g.name().to_string(),
            kind,
            rows,
            orders: (0..n).map(|x| g.elem_order(x)).collect(),
        }
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    pub fn neighbours(&self, x: usize) -> &BitSet {
        &self.rows[x]
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, row) in self.rows.iter().enumerate() {
            out.extend(row.iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// The complement on the same vertex set, without loops.
    pub fn complement(&self) -> Vec<BitSet> {
        self.rows
            .iter()
            .enumerate()
            .map(|(x, r)| {
                let mut c = r.complement();
                c.remove(x);
                c
            })
            .collect()
    }

    pub fn is_complement_of(&self, other: &GroupGraph) -> bool {
        self.rows == other.complement()
    }

    /// True iff every edge of `self` is an edge of `other`.
    pub fn is_subgraph_of(&self, other: &GroupGraph) -> bool {
        self.rows
            .iter()
            .zip(&other.rows)
            .all(|(a, b)| a.is_subset(b))
    }

    pub fn is_edge_disjoint(&self, other: &GroupGraph) -> bool {
        self.rows
            .iter()
            .zip(&other.rows)
            .all(|(a, b)| a.is_disjoint(b))
    }

    pub fn to_dot(&self) -> String {
        let mut s = format!("graph \"{}_{}\" {{\n", self.name, self.kind.as_str());
        for (x, o) in self.orders.iter().enumerate() {
            let _ = writeln!(s, "  e{x} [label=\"e{x}(ord={o})\"];");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(s, "  e{u} -- e{v};");
        }
        s.push_str("}\n");
        s
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{u}\t{v}");
        }
        s
    }
}

pub fn power_graph(g: &Group) -> GroupGraph {
    let rows = (0..g.order()).map(|x| g.cyclic_bits(x)).collect();
    GroupGraph::from_rows(g, GraphKind::Power, rows)
}

/// `x ~ y` iff `⟨x, y⟩` is cyclic, i.e. both lie in one cyclic subgroup.
pub fn enhanced_power_graph(g: &Group) -> GroupGraph {
    let n = g.order();
    let mut rows = vec![BitSet::new(n); n];
    let mut seen = std::collections::HashSet::new();
    for x in 0..n {
        let c = g.cyclic_bits(x);
        if !seen.insert(c.clone()) {
            continue;
        }
        for y in c.iter() {
            rows[y].union_with(&c);
        }
    }
    GroupGraph::from_rows(g, GraphKind::EnhancedPower, rows)
}

fn relation_graph(
    g: &Group,
    kind: GraphKind,
    related: impl Fn(usize, usize) -> Result<bool> + Sync,
) -> Result<GroupGraph> {
    let n = g.order();
    let rows: Vec<BitSet> = (0..n)
        .into_par_iter()
        .map(|x| {
            let mut row = BitSet::new(n);
            for y in x + 1..n {
                if related(x, y)? {
                    row.insert(y);
                }
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;
    Ok(GroupGraph::from_rows(g, kind, rows))
}

pub fn independence_graph(search: &GenSearch<'_>) -> Result<GroupGraph> {
    relation_graph(search.group(), GraphKind::Independence, |x, y| {
        search.independent(x, y)
    })
}

pub fn rank_graph(search: &GenSearch<'_>) -> Result<GroupGraph> {
    relation_graph(search.group(), GraphKind::Rank, |x, y| {
        search.rank_independent(x, y)
    })
}

pub fn build_graph(search: &GenSearch<'_>, kind: GraphKind) -> Result<GroupGraph> {
    let g = search.group();
    match kind {
        GraphKind::Power => Ok(power_graph(g)),
        GraphKind::EnhancedPower => Ok(enhanced_power_graph(g)),
        GraphKind::Independence => independence_graph(search),
        GraphKind::Rank => rank_graph(search),
    }
}

/// Independence: independence graph = complement of the power graph.
/// Rank: rank graph = complement of the enhanced power graph.
pub fn complement_identity_holds(search: &GenSearch<'_>, kind: GraphKind) -> Result<bool> {
    let g = search.group();
    Ok(match kind {
        GraphKind::Independence | GraphKind::Power => {
            independence_graph(search)?.is_complement_of(&power_graph(g))
        }
        GraphKind::Rank | GraphKind::EnhancedPower => {
            rank_graph(search)?.is_complement_of(&enhanced_power_graph(g))
        }
    })
}

pub fn export_dot(graph: &GroupGraph, path: &Path) -> Result<()> {
    std::fs::write(path, graph.to_dot()).map_err(|e| Error::io(path, e))
}

pub fn export_tsv(graph: &GroupGraph, path: &Path) -> Result<()> {
    std::fs::write(path, graph.to_tsv()).map_err(|e| Error::io(path, e))
}

/// Reads back the node count and edge list of a DOT file written by
/// [`GroupGraph::to_dot`].
pub fn parse_dot(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let node = |tok: &str| -> Result<usize> {
        tok.trim()
            .trim_end_matches(';')
            .strip_prefix('e')
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::InvalidSpec(format!("bad DOT node {tok:?}")))
    };
    let mut nodes = 0;
    let mut edges = Vec::new();
    for line in text.lines().map(str::trim) {
        if let Some((a, b)) = line.split_once("--") {
            edges.push((node(a)?, node(b)?));
        } else if line.starts_with('e') && line.contains("[label=") {
            nodes += 1;
        }
    }
    Ok((nodes, edges))
}
