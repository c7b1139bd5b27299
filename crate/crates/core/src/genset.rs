//! Minimal generating sets, `d(G)`, `m(G)`, and the independence and
//! rank-independence relations.
//!
//! Membership of `x` in a minimal generating set only depends on `⟨x⟩`, so
//! every search here runs over families of cyclic subgroups. A family `T` is
//! tracked as the state `(J, {U_t})` with `J = ⟨T⟩` and `U_t = ⟨T \ t⟩`; it is
//! irredundant iff no `U_t` equals `J`, and its possible extensions depend
//! on the state alone, so failed states are memoized across queries.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;
use std::time::{Duration, Instant};

use dashmap::DashMap;
use serde::Serialize;

use crate::bitset::BitSet;
use crate::characteristic::prime_factors;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::lattice::Lattice;
use crate::subgroup::subgroup_closure;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSetSearchConfig {
    /// Upper bound on the size of sets considered; `None` means
    /// `1 + ⌊log2 |G|⌋`, which no irredundant set can exceed.
    pub max_set_size: Option<usize>,
    /// Wall-clock budget per top-level query.
    pub time_budget: Option<Duration>,
    /// Collapse candidate extensions that lead to identical search states.
    pub canonical_order_pruning: bool,
}

impl Default for GenSetSearchConfig {
    fn default() -> Self {
        GenSetSearchConfig {
            max_set_size: None,
            time_budget: None,
            canonical_order_pruning: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Obstruction {
    /// One element is a power of the other.
    PowerRelation,
    /// No minimal generating set (of the required size) contains the pair.
    NoExtension,
    /// `⟨x, y⟩` is cyclic, so no generating set of size `d(G)` holds both.
    CyclicPair,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependenceVerdict {
    pub independent: bool,
    /// A minimal generating set containing both inputs, when independent.
    pub witness: Option<Vec<usize>>,
    pub obstruction: Option<Obstruction>,
}

impl IndependenceVerdict {
    fn yes(witness: Vec<usize>) -> Self {
        IndependenceVerdict {
            independent: true,
            witness: Some(witness),
            obstruction: None,
        }
    }

    fn no(o: Obstruction) -> Self {
        IndependenceVerdict {
            independent: false,
            witness: None,
            obstruction: Some(o),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RankProperty {
    Holds,
    Fails,
    /// Cyclic groups fall outside the definition.
    VacuousCyclic,
}

impl RankProperty {
    /// Truth value used when comparing deciders; cyclic groups count as true.
    pub fn as_bool(self) -> bool {
        !matches!(self, RankProperty::Fails)
    }
}

/// Shared caches for all generating-set queries on one group.
pub struct GenSearch<'g> {
    g: &'g Group,
    lat: Arc<Lattice>,
    cfg: GenSetSearchConfig,
    whole: u32,
    trivial: u32,
    /// Lattice positions of the cyclic subgroups.
    cyclics: Vec<u32>,
    /// A generator of each cyclic subgroup.
    cyc_gen: Vec<usize>,
    /// Index into `cyclics` of `⟨x⟩` for every element `x`.
    cyc_of: Vec<u32>,
    maximals: Vec<u32>,
    omega_order: u32,
    joins: DashMap<(u32, u32), u32>,
    inside: DashMap<u32, Arc<BitSet>>,
    above: DashMap<u32, Arc<BitSet>>,
    dead: DashMap<Box<[u32]>, ()>,
    reach: DashMap<(u32, u32), bool>,
    pair_cache: DashMap<(u32, u32), bool>,
    d: std::sync::OnceLock<usize>,
}

fn omega(n: usize) -> u32 {
    prime_factors(n).iter().map(|&(_, k)| k).sum()
}

impl<'g> GenSearch<'g> {
    pub fn new(g: &'g Group) -> Result<Self> {
        Self::with_config(g, GenSetSearchConfig::default())
    }

    pub fn with_config(g: &'g Group, cfg: GenSetSearchConfig) -> Result<Self> {
        let lat = g.lattice()?;
        let whole = (lat.len() - 1) as u32;
        let mut cyclics = Vec::new();
        let mut cyc_gen = Vec::new();
        let mut cyc_of = vec![u32::MAX; g.order()];
        for &pos in lat.cyclic_positions() {
            let s = lat.get(pos);
            let gen = s
                .members()
                .find(|&x| g.elem_order(x) == s.order())
                .expect("cyclic subgroup has a generator");
            let idx = cyclics.len() as u32;
            for x in s.members() {
                if g.elem_order(x) == s.order() {
                    cyc_of[x] = idx;
                }
            }
            cyclics.push(pos as u32);
            cyc_gen.push(gen);
        }
        let maximals = lat.maximal_positions().map(|i| i as u32).collect();
        Ok(GenSearch {
            g,
            whole,
            trivial: 0,
            cyclics,
            cyc_gen,
            cyc_of,
            maximals,
            omega_order: omega(g.order()),
            lat,
            cfg,
            joins: DashMap::new(),
            inside: DashMap::new(),
            above: DashMap::new(),
            dead: DashMap::new(),
            reach: DashMap::new(),
            pair_cache: DashMap::new(),
            d: std::sync::OnceLock::new(),
        })
    }

    pub fn group(&self) -> &'g Group {
        self.g
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lat
    }

    fn deadline(&self) -> Option<Instant> {
        self.cfg.time_budget.map(|b| Instant::now() + b)
    }

    fn tick(deadline: Option<Instant>) -> Result<()> {
        match deadline {
            Some(t) if Instant::now() > t => Err(Error::TimeBudgetExceeded),
            _ => Ok(()),
        }
    }

    fn max_set_size(&self) -> usize {
        self.cfg
            .max_set_size
            .unwrap_or(1 + (usize::BITS - 1 - self.g.order().leading_zeros()) as usize)
    }

    fn order_of(&self, pos: u32) -> usize {
        self.lat.get(pos as usize).order()
    }

    fn index_omega(&self, pos: u32) -> u32 {
        self.omega_order - omega(self.order_of(pos))
    }

    /// `⟨S, C⟩` for a lattice position `S` and a cyclic index `C`.
    fn join(&self, pos: u32, c: u32) -> u32 {
        if let Some(v) = self.joins.get(&(pos, c)) {
            return *v;
        }
        let s = self.lat.get(pos as usize);
        let j = s.join(self.g, self.cyc_gen[c as usize]);
        let r = self.lat.position(j.bits()).expect("lattice is complete") as u32;
        self.joins.insert((pos, c), r);
        r
    }

    /// Cyclic indices contained in a lattice position.
    fn inside(&self, pos: u32) -> Arc<BitSet> {
        if let Some(v) = self.inside.get(&pos) {
            return v.clone();
        }
        let s = self.lat.get(pos as usize);
        let bits = Arc::new(BitSet::from_ids(
            self.cyclics.len(),
            (0..self.cyclics.len()).filter(|&c| s.contains(self.cyc_gen[c])),
        ));
        self.inside.insert(pos, bits.clone());
        bits
    }

    /// Indices (into `maximals`) of the maximal subgroups containing `pos`.
    fn above(&self, pos: u32) -> Arc<BitSet> {
        if let Some(v) = self.above.get(&pos) {
            return v.clone();
        }
        let s = self.lat.get(pos as usize);
        let bits = Arc::new(BitSet::from_ids(
            self.maximals.len(),
            (0..self.maximals.len())
                .filter(|&i| s.is_subgroup_of(self.lat.get(self.maximals[i] as usize))),
        ));
        self.above.insert(pos, bits.clone());
        bits
    }

    /// Cyclic indices that may still be added to the state, or `None` if the
    /// state can never be completed to an irredundant generating family:
    /// each `U_t` must stay inside a maximal subgroup that misses `J`.
    fn candidates(&self, j: u32, us: &[u32]) -> Option<BitSet> {
        let above_j = self.above(j);
        let mut allowed: Option<BitSet> = None;
        for &u in us {
            let mut adm = (*self.above(u)).clone();
            adm.difference_with(&above_j);
            if adm.is_empty() {
                return None;
            }
            let mut region = BitSet::new(self.cyclics.len());
            for i in adm.iter() {
                region.union_with(&self.inside(self.maximals[i]));
            }
            match allowed.as_mut() {
                Some(a) => a.intersect_with(&region),
                None => allowed = Some(region),
            }
        }
        let mut allowed = allowed.unwrap_or_else(|| BitSet::full(self.cyclics.len()));
        allowed.difference_with(&self.inside(j));
        Some(allowed)
    }

    /// Children of a state, as `(J', sorted U's, added cyclic index)`.
    fn children(&self, j: u32, us: &[u32], cands: &BitSet) -> Vec<(u32, Vec<u32>, u32)> {
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        'c: for c in cands.iter() {
            let c = c as u32;
            let nj = self.join(j, c);
            let mut nus = Vec::with_capacity(us.len() + 1);
            for &u in us {
                let nu = self.join(u, c);
                if nu == nj {
                    continue 'c;
                }
                nus.push(nu);
            }
            nus.push(j);
            nus.sort_unstable();
            if self.cfg.canonical_order_pruning && !seen.insert((nj, nus.clone())) {
                continue;
            }
            out.push((nj, nus, c));
        }
        out
    }

    fn key(j: u32, us: &[u32]) -> Box<[u32]> {
        let mut k = Vec::with_capacity(us.len() + 1);
        k.push(j);
        k.extend_from_slice(us);
        k.into_boxed_slice()
    }

    /// Completes an irredundant family to an irredundant generating family;
    /// returns the cyclic indices added.
    fn complete(&self, j: u32, us: &[u32], deadline: Option<Instant>) -> Result<Option<Vec<u32>>> {
        if j == self.whole {
            return Ok(Some(Vec::new()));
        }
        if us.len() >= self.max_set_size() {
            return Ok(None);
        }
        Self::tick(deadline)?;
        let key = Self::key(j, us);
        if self.dead.contains_key(&key) {
            return Ok(None);
        }
        if let Some(cands) = self.candidates(j, us) {
            let mut kids = self.children(j, us, &cands);
            kids.sort_by_key(|(nj, _, c)| (std::cmp::Reverse(self.order_of(*nj)), *c));
            for (nj, nus, c) in kids {
                if let Some(mut path) = self.complete(nj, &nus, deadline)? {
                    path.push(c);
                    return Ok(Some(path));
                }
            }
        }
        self.dead.insert(key, ());
        Ok(None)
    }

    fn cyc(&self, x: usize) -> u32 {
        self.cyc_of[x]
    }

    fn cyc_contains(&self, a: u32, b: u32) -> bool {
        self.inside(self.cyclics[a as usize]).contains(b as usize)
    }

    /// Independence of two cyclic subgroups; returns the added cyclic
    /// indices of a witness family.
    fn cyclic_pair_independent(
        &self,
        a: u32,
        b: u32,
        deadline: Option<Instant>,
    ) -> Result<Option<Vec<u32>>> {
        let (pa, pb) = (self.cyclics[a as usize], self.cyclics[b as usize]);
        let j = self.join(pa, b);
        let mut us = vec![pa, pb];
        us.sort_unstable();
        self.complete(j, &us, deadline)
    }

    pub fn are_independent(&self, x: usize, y: usize) -> Result<IndependenceVerdict> {
        self.g.check_id(x)?;
        self.g.check_id(y)?;
        let (a, b) = (self.cyc(x), self.cyc(y));
        if self.cyc_contains(a, b) || self.cyc_contains(b, a) {
            return Ok(IndependenceVerdict::no(Obstruction::PowerRelation));
        }
        match self.cyclic_pair_independent(a, b, self.deadline())? {
            Some(path) => {
                let mut w = vec![x, y];
                w.extend(path.iter().rev().map(|&c| self.cyc_gen[c as usize]));
                Ok(IndependenceVerdict::yes(w))
            }
            None => Ok(IndependenceVerdict::no(Obstruction::NoExtension)),
        }
    }

    /// Boolean independence with a per-pair cache, for graph building.
    pub fn independent(&self, x: usize, y: usize) -> Result<bool> {
        let (a, b) = (self.cyc(x), self.cyc(y));
        if self.cyc_contains(a, b) || self.cyc_contains(b, a) {
            return Ok(false);
        }
        let key = (a.min(b), a.max(b));
        if let Some(v) = self.pair_cache.get(&key) {
            return Ok(*v);
        }
        let v = self
            .cyclic_pair_independent(a, b, self.deadline())?
            .is_some();
        self.pair_cache.insert(key, v);
        Ok(v)
    }

    /// `d(G)`, by breadth-first joins over conjugacy classes of subgroups.
    pub fn d(&self) -> Result<usize> {
        if let Some(&d) = self.d.get() {
            return Ok(d);
        }
        let d = self.compute_d(self.deadline())?;
        Ok(*self.d.get_or_init(|| d))
    }

    fn compute_d(&self, deadline: Option<Instant>) -> Result<usize> {
        if self.whole == self.trivial {
            return Ok(0);
        }
        let rep_of = |pos: u32| self.lat.classes()[self.lat.class_of(pos as usize)][0] as u32;
        let mut level: Vec<u32> = {
            let mut v: Vec<u32> = self.cyclics.iter().map(|&p| rep_of(p)).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let mut k = 1;
        loop {
            if level.contains(&self.whole) {
                return Ok(k);
            }
            let mut next = HashSet::new();
            for &s in &level {
                Self::tick(deadline)?;
                let inside = self.inside(s);
                for c in 0..self.cyclics.len() as u32 {
                    if !inside.contains(c as usize) {
                        next.insert(rep_of(self.join(s, c)));
                    }
                }
            }
            let mut v: Vec<u32> = next.into_iter().collect();
            v.sort_unstable();
            level = v;
            k += 1;
        }
    }

    /// Can `pos` reach `G` by joining `k` cyclic subgroups?
    fn reaches(&self, pos: u32, k: u32, deadline: Option<Instant>) -> Result<Option<Vec<u32>>> {
        if pos == self.whole {
            return Ok(Some(Vec::new()));
        }
        if k == 0 {
            return Ok(None);
        }
        if let Some(v) = self.reach.get(&(pos, k)) {
            if !*v {
                return Ok(None);
            }
        }
        Self::tick(deadline)?;
        let inside = self.inside(pos);
        let mut kids: Vec<(u32, u32)> = (0..self.cyclics.len() as u32)
            .filter(|&c| !inside.contains(c as usize))
            .map(|c| (self.join(pos, c), c))
            .collect();
        kids.sort_by_key(|&(nj, c)| (std::cmp::Reverse(self.order_of(nj)), nj, c));
        kids.dedup_by_key(|&mut (nj, _)| nj);
        for (nj, c) in kids {
            if let Some(mut path) = self.reaches(nj, k - 1, deadline)? {
                path.push(c);
                self.reach.insert((pos, k), true);
                return Ok(Some(path));
            }
        }
        self.reach.insert((pos, k), false);
        Ok(None)
    }

    pub fn are_rank_independent(&self, x: usize, y: usize) -> Result<IndependenceVerdict> {
        self.g.check_id(x)?;
        self.g.check_id(y)?;
        if x == y {
            return Ok(IndependenceVerdict::no(Obstruction::PowerRelation));
        }
        let deadline = self.deadline();
        let d = self.d()?;
        let pair = self.join(self.cyclics[self.cyc(x) as usize], self.cyc(y));
        if self.lat.get(pair as usize).is_cyclic(self.g) {
            return Ok(IndependenceVerdict::no(Obstruction::CyclicPair));
        }
        match self.reaches(pair, d.saturating_sub(2) as u32, deadline)? {
            Some(path) => {
                let mut w = vec![x, y];
                w.extend(path.iter().rev().map(|&c| self.cyc_gen[c as usize]));
                Ok(IndependenceVerdict::yes(w))
            }
            None => Ok(IndependenceVerdict::no(Obstruction::NoExtension)),
        }
    }

    pub fn rank_independent(&self, x: usize, y: usize) -> Result<bool> {
        Ok(self.are_rank_independent(x, y)?.independent)
    }

    /// Cyclic subgroup pairs to test, first member up to conjugacy, in order
    /// of `(|A|, |B|, A, B)`.
    fn pairs(&self) -> Vec<(u32, u32)> {
        let mut reps: Vec<u32> = (0..self.cyclics.len() as u32)
            .filter(|&c| {
                let pos = self.cyclics[c as usize] as usize;
                self.lat.classes()[self.lat.class_of(pos)][0] == pos && pos != self.trivial as usize
            })
            .collect();
        let by_order = |c: &u32| (self.order_of(self.cyclics[*c as usize]), *c);
        reps.sort_by_key(by_order);
        let mut all: Vec<u32> = (1..self.cyclics.len() as u32).collect();
        all.sort_by_key(by_order);
        let mut out = Vec::new();
        for &a in &reps {
            for &b in &all {
                if a != b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// First pair `(x, y)` with no power relation that is not independent.
    pub fn independence_counterexample(&self) -> Result<Option<(usize, usize)>> {
        let deadline = self.deadline();
        for (a, b) in self.pairs() {
            if self.cyc_contains(a, b) || self.cyc_contains(b, a) {
                continue;
            }
            if self.cyclic_pair_independent(a, b, deadline)?.is_none() {
                return Ok(Some((self.cyc_gen[a as usize], self.cyc_gen[b as usize])));
            }
        }
        Ok(None)
    }

    pub fn has_independence_property(&self) -> Result<bool> {
        Ok(self.independence_counterexample()?.is_none())
    }

    /// First pair with `⟨x, y⟩` non-cyclic that is not rank-independent.
    pub fn rank_counterexample(&self) -> Result<Option<(usize, usize)>> {
        let deadline = self.deadline();
        let d = self.d()?;
        for (a, b) in self.pairs() {
            let pair = self.join(self.cyclics[a as usize], b);
            if self.lat.get(pair as usize).is_cyclic(self.g) {
                continue;
            }
            if self
                .reaches(pair, d.saturating_sub(2) as u32, deadline)?
                .is_none()
            {
                return Ok(Some((self.cyc_gen[a as usize], self.cyc_gen[b as usize])));
            }
        }
        Ok(None)
    }

    pub fn has_rank_independence_property(&self) -> Result<RankProperty> {
        if self.g.is_cyclic() {
            return Ok(RankProperty::VacuousCyclic);
        }
        Ok(match self.rank_counterexample()? {
            None => RankProperty::Holds,
            Some(_) => RankProperty::Fails,
        })
    }

    /// Nontrivial cyclic subgroups up to conjugacy, as starting families.
    fn first_choices(&self) -> Vec<u32> {
        let mut seen = HashSet::new();
        (1..self.cyclics.len() as u32)
            .filter(|&c| seen.insert(self.lat.class_of(self.cyclics[c as usize] as usize)))
            .collect()
    }

    /// Some minimal generating set of exactly `k` elements.
    pub fn minimal_generating_set_of_size(&self, k: usize) -> Result<Option<Vec<usize>>> {
        if self.whole == self.trivial {
            return Ok((k == 0).then(Vec::new));
        }
        if k == 0 || k > self.max_set_size() {
            return Ok(None);
        }
        let deadline = self.deadline();
        let mut failed = HashSet::new();
        for c in self.first_choices() {
            let j = self.cyclics[c as usize];
            if let Some(mut path) = self.exact(j, &[self.trivial], k, &mut failed, deadline)? {
                path.push(c);
                return Ok(Some(
                    path.iter()
                        .rev()
                        .map(|&c| self.cyc_gen[c as usize])
                        .collect(),
                ));
            }
        }
        Ok(None)
    }

    fn exact(
        &self,
        j: u32,
        us: &[u32],
        k: usize,
        failed: &mut HashSet<Box<[u32]>>,
        deadline: Option<Instant>,
    ) -> Result<Option<Vec<u32>>> {
        if j == self.whole {
            return Ok((us.len() == k).then(Vec::new));
        }
        if us.len() >= k || us.len() + (self.index_omega(j) as usize) < k {
            return Ok(None);
        }
        Self::tick(deadline)?;
        let key = Self::key(j, us);
        if failed.contains(&key) {
            return Ok(None);
        }
        if let Some(cands) = self.candidates(j, us) {
            let mut kids = self.children(j, us, &cands);
            kids.sort_by_key(|(nj, _, c)| (self.order_of(*nj), *c));
            for (nj, nus, c) in kids {
                if let Some(mut path) = self.exact(nj, &nus, k, failed, deadline)? {
                    path.push(c);
                    return Ok(Some(path));
                }
            }
        }
        failed.insert(key);
        Ok(None)
    }

    /// `m(G)` together with a minimal generating set of that size.
    pub fn largest_minimal_generating_set(&self) -> Result<Vec<usize>> {
        if self.whole == self.trivial {
            return Ok(Vec::new());
        }
        let deadline = self.deadline();
        let mut best: Vec<u32> = Vec::new();
        let mut visited = HashSet::new();
        let mut path = Vec::new();
        for c in self.first_choices() {
            path.push(c);
            let j = self.cyclics[c as usize];
            self.longest(
                j,
                &[self.trivial],
                &mut path,
                &mut best,
                &mut visited,
                deadline,
            )?;
            path.pop();
        }
        Ok(best.iter().map(|&c| self.cyc_gen[c as usize]).collect())
    }

    fn longest(
        &self,
        j: u32,
        us: &[u32],
        path: &mut Vec<u32>,
        best: &mut Vec<u32>,
        visited: &mut HashSet<Box<[u32]>>,
        deadline: Option<Instant>,
    ) -> Result<()> {
        if j == self.whole {
            if us.len() > best.len() {
                *best = path.clone();
            }
            return Ok(());
        }
        if us.len() + self.index_omega(j) as usize <= best.len() || us.len() >= self.max_set_size()
        {
            return Ok(());
        }
        Self::tick(deadline)?;
        if !visited.insert(Self::key(j, us)) {
            return Ok(());
        }
        if let Some(cands) = self.candidates(j, us) {
            let mut kids = self.children(j, us, &cands);
            kids.sort_by_key(|(nj, _, c)| (self.order_of(*nj), *c));
            for (nj, nus, c) in kids {
                path.push(c);
                self.longest(nj, &nus, path, best, visited, deadline)?;
                path.pop();
            }
        }
        Ok(())
    }

    pub fn m(&self) -> Result<usize> {
        Ok(self.largest_minimal_generating_set()?.len())
    }
}

/// True iff `ids` are distinct, generate `G`, and no proper subset does.
pub fn is_minimal_generating_set(g: &Group, ids: &[usize]) -> bool {
    let distinct: HashSet<usize> = ids.iter().copied().collect();
    if distinct.len() != ids.len() || ids.iter().any(|&x| x >= g.order()) {
        return false;
    }
    if subgroup_closure(g, ids).order() != g.order() {
        return false;
    }
    (0..ids.len()).all(|i| {
        let rest: Vec<usize> = ids
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &x)| x)
            .collect();
        subgroup_closure(g, &rest).order() != g.order()
    })
}

pub fn smallest_generating_size(g: &Group) -> Result<usize> {
    GenSearch::new(g)?.d()
}

pub fn largest_minimal_generating_size(g: &Group) -> Result<usize> {
    GenSearch::new(g)?.m()
}

pub fn minimal_generating_set_of_size(g: &Group, k: usize) -> Result<Option<Vec<usize>>> {
    GenSearch::new(g)?.minimal_generating_set_of_size(k)
}

pub fn are_independent(g: &Group, x: usize, y: usize) -> Result<IndependenceVerdict> {
    GenSearch::new(g)?.are_independent(x, y)
}

pub fn are_rank_independent(g: &Group, x: usize, y: usize) -> Result<IndependenceVerdict> {
    GenSearch::new(g)?.are_rank_independent(x, y)
}

pub fn has_independence_property(g: &Group) -> Result<bool> {
    GenSearch::new(g)?.has_independence_property()
}

pub fn has_rank_independence_property(g: &Group) -> Result<RankProperty> {
    GenSearch::new(g)?.has_rank_independence_property()
}

/// Brute-force `d(G)` from the definition: the least `k` such that some
/// `k` elements generate. Exponential; for tests on tiny groups.
pub fn brute_d(g: &Group) -> usize {
    if g.order() == 1 {
        return 0;
    }
    let mut frontier: HashMap<BitSet, ()> = HashMap::new();
    frontier.insert(BitSet::from_ids(g.order(), [0]), ());
    for k in 1.. {
        let mut next = HashMap::new();
        for s in frontier.keys() {
            let seed: Vec<usize> = s.iter().collect();
            for x in 0..g.order() {
                let mut with = seed.clone();
                with.push(x);
                let h = subgroup_closure(g, &with);
                if h.order() == g.order() {
                    return k;
                }
                next.insert(h.into_bits(), ());
            }
        }
        frontier = next;
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::build_str;

    fn gen_of_order(g: &Group, n: usize) -> usize {
        (0..g.order()).find(|&x| g.elem_order(x) == n).unwrap()
    }

    #[test]
    fn minimal_generating_set_checks() {
        let c6 = build_str("C6").unwrap();
        let g = gen_of_order(&c6, 6);
        assert!(is_minimal_generating_set(&c6, &[g]));
        assert!(is_minimal_generating_set(
            &c6,
            &[c6.pow(g, 2), c6.pow(g, 3)]
        ));
        let s3 = build_str("Sym3").unwrap();
        let t: Vec<usize> = (0..6).filter(|&x| s3.elem_order(x) == 2).collect();
        let c = gen_of_order(&s3, 3);
        assert!(!is_minimal_generating_set(&s3, &[t[0], c, t[1]]));
        assert!(is_minimal_generating_set(&s3, &[t[0], t[1]]));
    }

    #[test]
    fn d_values() {
        for (spec, d) in [
            ("C1", 0),
            ("C7", 1),
            ("Sym4", 2),
            ("C2^3", 3),
            ("Q8", 2),
            ("C2^4", 4),
            ("Alt5", 2),
        ] {
            let g = build_str(spec).unwrap();
            assert_eq!(smallest_generating_size(&g).unwrap(), d, "{spec}");
        }
    }

    #[test]
    fn d_matches_brute_force() {
        for spec in ["Sym3", "D8", "C2^3", "DirectProduct(C2,C4)", "Alt4", "C3^2"] {
            let g = build_str(spec).unwrap();
            assert_eq!(smallest_generating_size(&g).unwrap(), brute_d(&g), "{spec}");
        }
    }

    #[test]
    fn m_values() {
        for (spec, m) in [
            ("C1", 0),
            ("C5", 1),
            ("C6", 2),
            ("C12", 2),
            ("Sym3", 2),
            ("Sym4", 3),
            ("C2^3", 3),
        ] {
            let g = build_str(spec).unwrap();
            let gs = GenSearch::new(&g).unwrap();
            let best = gs.largest_minimal_generating_set().unwrap();
            assert_eq!(best.len(), m, "{spec}");
            assert!(g.order() == 1 || is_minimal_generating_set(&g, &best));
        }
    }

    #[test]
    fn sized_sets_for_sym4() {
        let g = build_str("Sym4").unwrap();
        let gs = GenSearch::new(&g).unwrap();
        for k in [2, 3] {
            let set = gs.minimal_generating_set_of_size(k).unwrap().unwrap();
            assert_eq!(set.len(), k);
            assert!(is_minimal_generating_set(&g, &set));
        }
        assert_eq!(gs.minimal_generating_set_of_size(1).unwrap(), None);
        assert_eq!(gs.minimal_generating_set_of_size(4).unwrap(), None);
    }

    #[test]
    fn independence_in_c6() {
        let c6 = build_str("C6").unwrap();
        let g = gen_of_order(&c6, 6);
        let (g2, g3) = (c6.pow(g, 2), c6.pow(g, 3));
        let v = are_independent(&c6, g2, g3).unwrap();
        assert!(v.independent);
        let mut w = v.witness.unwrap();
        w.sort();
        let mut expect = vec![g2, g3];
        expect.sort();
        assert_eq!(w, expect);
        let v = are_independent(&c6, g, g2).unwrap();
        assert_eq!(v.obstruction, Some(Obstruction::PowerRelation));
    }

    #[test]
    fn rank_independence_examples() {
        let v4 = build_str("C2^2").unwrap();
        for x in 1..4 {
            for y in 1..4 {
                if x != y {
                    assert!(are_rank_independent(&v4, x, y).unwrap().independent);
                }
            }
        }
        let d8 = build_str("D8").unwrap();
        let r = gen_of_order(&d8, 4);
        let r2 = d8.pow(r, 2);
        let s = (0..8)
            .find(|&x| d8.elem_order(x) == 2 && x != r2 && !d8.commute(x, r))
            .unwrap();
        let v = are_rank_independent(&d8, r2, s).unwrap();
        assert!(!v.independent);
        assert_eq!(subgroup_closure(&d8, &[r2, s]).order(), 4);
        let q8 = build_str("Q8").unwrap();
        let i = gen_of_order(&q8, 4);
        let j = (0..8)
            .find(|&y| q8.elem_order(y) == 4 && !q8.cyclic_bits(i).contains(y))
            .unwrap();
        assert!(are_rank_independent(&q8, i, j).unwrap().independent);
    }

    #[test]
    fn property_deciders() {
        let yes = |s: &str| has_independence_property(&build_str(s).unwrap()).unwrap();
        assert!(yes("Q8"));
        assert!(yes("Sym3"));
        assert!(!yes("C12"));
        let rank = |s: &str| has_rank_independence_property(&build_str(s).unwrap()).unwrap();
        assert_eq!(rank("CpByCqm(3,2,2)"), RankProperty::Holds);
        assert_eq!(rank("D8"), RankProperty::Fails);
        assert_eq!(rank("ScalarSemidirect(5,2,4)"), RankProperty::Holds);
        assert_eq!(rank("C9"), RankProperty::VacuousCyclic);
    }

    #[test]
    fn c12_counterexample_is_power_free() {
        let g = build_str("C12").unwrap();
        let (x, y) = GenSearch::new(&g)
            .unwrap()
            .independence_counterexample()
            .unwrap()
            .unwrap();
        assert!(!g.cyclic_bits(x).contains(y) && !g.cyclic_bits(y).contains(x));
    }

    #[test]
    fn time_budget_is_enforced() {
        let g = build_str("Sym5").unwrap();
        let gs = GenSearch::with_config(
            &g,
            GenSetSearchConfig {
                time_budget: Some(Duration::ZERO),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(gs.m().unwrap_err(), Error::TimeBudgetExceeded);
    }
}
