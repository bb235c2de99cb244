//! Constrained Star-Cut Decomposition: solution checker, brute-force oracle,
//! and the record-based dynamic program over a nice tree-decomposition.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::treedec::{validate_nice, NiceTreeDecomposition, NodeKind};

#[derive(Debug, Error)]
pub enum StarcutError {
    #[error("brute-force oracle limited to 10 vertices, got {0}")]
    TooLarge(usize),
    #[error("weight function must cover all {expected} vertices, got {got}")]
    BadGamma { expected: usize, got: usize },
    #[error("nice tree-decomposition is invalid for this graph")]
    InvalidDecomposition,
}

/// An instance (G, α, k, γ); γ is indexed by vertex id.
#[derive(Debug, Clone)]
pub struct StarCutInstance {
    pub graph: Graph,
    pub alpha: usize,
    pub k: usize,
    pub gamma: Vec<usize>,
}

impl StarCutInstance {
    pub fn new(graph: Graph, alpha: usize, k: usize, gamma: Vec<usize>) -> Result<Self, StarcutError> {
        if gamma.len() != graph.vertex_count() {
            return Err(StarcutError::BadGamma { expected: graph.vertex_count(), got: gamma.len() });
        }
        Ok(StarCutInstance { graph, alpha, k, gamma })
    }

    pub fn gamma_of(&self, s: &VertexSet) -> usize {
        s.iter().map(|v| self.gamma[v]).sum()
    }

    /// γ(X_t) bound for leaf bags.
    pub fn leaf_gamma_limit(&self) -> usize {
        self.alpha * self.alpha + 2 * self.k
    }

    /// |δ(X_t, X_{t_c})| bound for leaf bags.
    pub fn leaf_delta_limit(&self) -> usize {
        self.alpha * self.alpha + self.k
    }
}

/// A star decomposition: one center bag plus at least one leaf bag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarCutSolution {
    pub center: VertexSet,
    pub leaves: Vec<VertexSet>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct StarCutSolutionJson {
    pub center: Vec<usize>,
    pub leaves: Vec<Vec<usize>>,
}

impl StarCutSolution {
    pub fn to_json(&self) -> StarCutSolutionJson {
        StarCutSolutionJson {
            center: self.center.members().to_vec(),
            leaves: self.leaves.iter().map(|l| l.members().to_vec()).collect(),
        }
    }

    pub fn from_json(j: &StarCutSolutionJson) -> Self {
        StarCutSolution {
            center: VertexSet::new(j.center.clone()),
            leaves: j.leaves.iter().map(|l| VertexSet::new(l.clone())).collect(),
        }
    }
}

/// Checks every condition of the problem box; returns the violations found.
pub fn check_solution(inst: &StarCutInstance, sol: &StarCutSolution) -> (bool, Vec<String>) {
    let g = &inst.graph;
    let n = g.vertex_count();
    let mut violations = Vec::new();
    if sol.leaves.is_empty() {
        violations.push("star must have at least one leaf".into());
    }
    let mut owner: Vec<Option<usize>> = vec![None; n];
    let mut mark = |set: &VertexSet, id: usize, violations: &mut Vec<String>| {
        for v in set.iter() {
            if v >= n {
                violations.push(format!("vertex {v} out of range"));
            } else if owner[v].is_some() {
                violations.push(format!("vertex {v} appears in two bags"));
            } else {
                owner[v] = Some(id);
            }
        }
    };
    mark(&sol.center, 0, &mut violations);
    for (i, leaf) in sol.leaves.iter().enumerate() {
        mark(leaf, i + 1, &mut violations);
    }
    for v in 0..n {
        if owner[v].is_none() {
            violations.push(format!("vertex {v} is uncovered"));
        }
    }
    if !violations.is_empty() {
        return (false, violations);
    }
    if sol.center.len() > inst.alpha {
        violations.push(format!("center has {} > α = {} vertices", sol.center.len(), inst.alpha));
    }
    let crossing = g
        .edges()
        .iter()
        .filter(|&&(u, v)| {
            let (a, b) = (owner[u].unwrap(), owner[v].unwrap());
            a != b && a != 0 && b != 0
        })
        .count();
    if crossing > inst.k {
        violations.push(format!("center crossing {crossing} > k = {}", inst.k));
    }
    for (i, leaf) in sol.leaves.iter().enumerate() {
        let gamma = inst.gamma_of(leaf);
        if gamma > inst.leaf_gamma_limit() {
            violations.push(format!("leaf {i} has γ = {gamma} > {}", inst.leaf_gamma_limit()));
        }
        let delta = g.delta(leaf, &sol.center).map(|d| d.len()).unwrap_or(usize::MAX);
        if delta > inst.leaf_delta_limit() {
            violations.push(format!("leaf {i} has |δ(leaf, center)| = {delta} > {}", inst.leaf_delta_limit()));
        }
        if leaf.len() == n {
            violations.push(format!("leaf {i} equals V(G)"));
        }
    }
    (violations.is_empty(), violations)
}

fn set_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let mut result = Vec::new();
    let mut current: Vec<Vec<usize>> = Vec::new();
    fn go(items: &[usize], pos: usize, current: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if pos == items.len() {
            out.push(current.clone());
            return;
        }
        for i in 0..current.len() {
            current[i].push(items[pos]);
            go(items, pos + 1, current, out);
            current[i].pop();
        }
        current.push(vec![items[pos]]);
        go(items, pos + 1, current, out);
        current.pop();
    }
    go(items, 0, &mut current, &mut result);
    result
}

/// Exhaustive search over center bags and set partitions of the rest.
pub fn brute_star_cut(inst: &StarCutInstance) -> Result<Option<StarCutSolution>, StarcutError> {
    let n = inst.graph.vertex_count();
    if n > 10 {
        return Err(StarcutError::TooLarge(n));
    }
    let vertices: Vec<usize> = (0..n).collect();
    for center_mask in 0u32..(1 << n) {
        let center: VertexSet = vertices.iter().copied().filter(|&v| center_mask >> v & 1 == 1).collect();
        if center.len() > inst.alpha {
            continue;
        }
        let rest: Vec<usize> = vertices.iter().copied().filter(|&v| !center.contains(v)).collect();
        for partition in set_partitions(&rest) {
            let mut leaves: Vec<VertexSet> =
                partition.into_iter().map(|block| block.into_iter().collect()).collect();
            if leaves.is_empty() {
                leaves.push(VertexSet::empty());
            }
            let sol = StarCutSolution { center: center.clone(), leaves };
            if check_solution(inst, &sol).0 {
                return Ok(Some(sol));
            }
        }
    }
    Ok(None)
}

/// A legitimate pair (X_0..X_{2k}, Y with partition P) with respect to some Z.
#[derive(Debug, Clone)]
pub struct LegitimatePair {
    /// X_0, X_1, ..., X_{2k}
    pub x: Vec<VertexSet>,
    /// the parts of P; Y is their union
    pub parts: Vec<VertexSet>,
}

impl LegitimatePair {
    pub fn y(&self) -> VertexSet {
        let mut y = VertexSet::empty();
        for p in &self.parts {
            y = y.union(p);
        }
        y
    }

    /// Restriction to Z' ⊆ Z: intersect every set, drop emptied parts.
    pub fn restrict(&self, z: &VertexSet) -> LegitimatePair {
        LegitimatePair {
            x: self.x.iter().map(|s| s.intersection(z)).collect(),
            parts: self
                .parts
                .iter()
                .map(|p| p.intersection(z))
                .filter(|p| !p.is_empty())
                .collect(),
        }
    }
}

/// Checks the legitimate-pair conditions with respect to Z. Parts must also
/// satisfy the γ bound so that they can serve as leaf bags later.
pub fn check_legitimate(inst: &StarCutInstance, z: &VertexSet, pair: &LegitimatePair) -> bool {
    let g = &inst.graph;
    let k2 = 2 * inst.k;
    if pair.x.len() != k2 + 1 {
        return false;
    }
    let mut seen = VertexSet::empty();
    let mut total = 0;
    for s in pair.x.iter().chain(pair.parts.iter()) {
        if !s.is_disjoint(&seen) || !s.iter().all(|v| z.contains(v)) {
            return false;
        }
        total += s.len();
        seen = seen.union(s);
    }
    if total != z.len() {
        return false;
    }
    if pair.x[0].len() > inst.alpha {
        return false;
    }
    let delta = |a: &VertexSet, b: &VertexSet| g.delta(a, b).map(|d| d.len()).unwrap_or(usize::MAX);
    for i in 1..=k2 {
        if delta(&pair.x[i], &pair.x[0]) > inst.leaf_delta_limit()
            || inst.gamma_of(&pair.x[i]) > inst.leaf_gamma_limit()
        {
            return false;
        }
    }
    let mut cross = 0;
    for i in 1..=k2 {
        for j in i + 1..=k2 {
            cross += delta(&pair.x[i], &pair.x[j]);
        }
    }
    if cross > inst.k {
        return false;
    }
    for p in &pair.parts {
        if p.is_empty() {
            return false;
        }
        if delta(&pair.x[0], p) > inst.leaf_delta_limit() || inst.gamma_of(p) > inst.leaf_gamma_limit() {
            return false;
        }
        for i in 1..=k2 {
            if delta(&pair.x[i], p) != 0 {
                return false;
            }
        }
    }
    for (i, p) in pair.parts.iter().enumerate() {
        for q in &pair.parts[i + 1..] {
            if delta(p, q) != 0 {
                return false;
            }
        }
    }
    true
}

/// DP record: class assignment on the bag, bag partition of the Y-class,
/// running weight/boundary/size counters, plus two summary fields (`mask`,
/// `closed`) that let the root filter reject whole-graph leaves per record.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct RecordKey {
    /// class of each bag vertex (parallel to sorted bag members); 0 = center,
    /// 1..=2k = crossing-leaf classes, 2k+1 = the Y class
    classes: Vec<u8>,
    /// canonical partition of the Y-class bag vertices (vertex ids)
    parts: Vec<Vec<usize>>,
    c1: Vec<u16>,
    d1: Vec<u16>,
    c2: Vec<u16>,
    d2: Vec<u16>,
    a: u16,
    b: u16,
    /// bit i set iff X_i ∩ A_t ≠ ∅ for i ∈ [2k]
    mask: u32,
    /// parts of P whose bag restriction has emptied, capped at 2
    closed: u8,
}

#[derive(Debug, Clone)]
enum Prov {
    Leaf,
    Forget { pred: usize },
    Introduce { pred: usize, class: u8, part: Option<usize> },
    Join { left: usize, right: usize },
}

struct NodeRecords {
    recs: Vec<(RecordKey, Prov)>,
    index: HashMap<RecordKey, usize>,
}

impl NodeRecords {
    fn new() -> Self {
        NodeRecords { recs: Vec::new(), index: HashMap::new() }
    }

    fn insert(&mut self, key: RecordKey, prov: Prov) {
        if !self.index.contains_key(&key) {
            self.index.insert(key.clone(), self.recs.len());
            self.recs.push((key, prov));
        }
    }
}

struct Dp<'a> {
    inst: &'a StarCutInstance,
    ntd: &'a NiceTreeDecomposition,
    children: Vec<Vec<usize>>,
    store: Vec<NodeRecords>,
}

impl<'a> Dp<'a> {
    fn k2(&self) -> usize {
        2 * self.inst.k
    }

    fn bag_members(&self, t: usize) -> &[usize] {
        self.ntd.td.bag(t).members()
    }

    fn gamma_limit(&self) -> u16 {
        self.inst.leaf_gamma_limit() as u16
    }

    fn delta_limit(&self) -> u16 {
        self.inst.leaf_delta_limit() as u16
    }

    /// Canonicalizes parts (with their c2/d2 values) by sorted-min order.
    fn canonical_parts(parts: Vec<Vec<usize>>, c2: Vec<u16>, d2: Vec<u16>) -> (Vec<Vec<usize>>, Vec<u16>, Vec<u16>) {
        let mut zipped: Vec<(Vec<usize>, u16, u16)> = parts
            .into_iter()
            .zip(c2)
            .zip(d2)
            .map(|((mut p, c), d)| {
                p.sort_unstable();
                (p, c, d)
            })
            .collect();
        zipped.sort_by_key(|(p, _, _)| p[0]);
        let mut parts = Vec::with_capacity(zipped.len());
        let mut c2 = Vec::with_capacity(zipped.len());
        let mut d2 = Vec::with_capacity(zipped.len());
        for (p, c, d) in zipped {
            parts.push(p);
            c2.push(c);
            d2.push(d);
        }
        (parts, c2, d2)
    }

    fn leaf_node(&mut self, t: usize) {
        let v = self.bag_members(t)[0];
        let k2 = self.k2();
        let gamma_v = self.inst.gamma[v] as u16;
        for class in 0..=k2 + 1 {
            let mut key = RecordKey {
                classes: vec![class as u8],
                parts: Vec::new(),
                c1: vec![0; k2],
                d1: vec![0; k2],
                c2: Vec::new(),
                d2: Vec::new(),
                a: 0,
                b: 0,
                mask: 0,
                closed: 0,
            };
            match class {
                0 => {
                    if self.inst.alpha < 1 {
                        continue;
                    }
                    key.a = 1;
                }
                c if c <= k2 => {
                    if gamma_v > self.gamma_limit() {
                        continue;
                    }
                    key.c1[c - 1] = gamma_v;
                    key.mask = 1 << c;
                }
                _ => {
                    if gamma_v > self.gamma_limit() {
                        continue;
                    }
                    key.parts = vec![vec![v]];
                    key.c2 = vec![gamma_v];
                    key.d2 = vec![0];
                }
            }
            self.store[t].insert(key, Prov::Leaf);
        }
    }

    fn forget_node(&mut self, t: usize, child: usize, v: usize) {
        let pos = self.bag_members(child).iter().position(|&u| u == v).expect("forgotten vertex in child bag");
        let k2 = self.k2();
        let mut additions: Vec<(RecordKey, Prov)> = Vec::new();
        for (idx, (key, _)) in self.store[child].recs.iter().enumerate() {
            let mut key = key.clone();
            let class = key.classes.remove(pos) as usize;
            if class == k2 + 1 {
                let pi = key.parts.iter().position(|p| p.contains(&v)).expect("Y vertex in some part");
                key.parts[pi].retain(|&u| u != v);
                if key.parts[pi].is_empty() {
                    key.parts.remove(pi);
                    key.c2.remove(pi);
                    key.d2.remove(pi);
                    key.closed = (key.closed + 1).min(2);
                } else {
                    let (p, c, d) = Self::canonical_parts(
                        std::mem::take(&mut key.parts),
                        std::mem::take(&mut key.c2),
                        std::mem::take(&mut key.d2),
                    );
                    key.parts = p;
                    key.c2 = c;
                    key.d2 = d;
                }
            }
            additions.push((key, Prov::Forget { pred: idx }));
        }
        for (key, prov) in additions {
            self.store[t].insert(key, prov);
        }
    }

    fn introduce_node(&mut self, t: usize, child: usize, v: usize) {
        let k2 = self.k2();
        let child_bag: Vec<usize> = self.bag_members(child).to_vec();
        let pos = self.bag_members(t).iter().position(|&u| u == v).expect("introduced vertex in bag");
        // neighbors of v inside the child bag, with their positions
        let nbrs: Vec<usize> = child_bag
            .iter()
            .enumerate()
            .filter(|(_, &u)| self.inst.graph.has_edge(v, u))
            .map(|(i, _)| i)
            .collect();
        let gamma_v = self.inst.gamma[v] as u16;
        let mut additions: Vec<(RecordKey, Prov)> = Vec::new();
        for (idx, (key0, _)) in self.store[child].recs.iter().enumerate() {
            let nbr_class = |c: usize| nbrs.iter().filter(|&&i| key0.classes[i] as usize == c).count() as u16;
            for class in 0..=k2 + 1 {
                let part_options: Vec<Option<usize>> = if class == k2 + 1 {
                    let mut opts: Vec<Option<usize>> = (0..key0.parts.len()).map(Some).collect();
                    opts.push(None);
                    opts
                } else {
                    vec![Some(usize::MAX)]
                };
                for part_choice in part_options {
                    let mut key = key0.clone();
                    key.classes.insert(pos, class as u8);
                    let ok = match class {
                        0 => {
                            if key.a as usize + 1 > self.inst.alpha {
                                false
                            } else {
                                key.a += 1;
                                let mut ok = true;
                                for j in 1..=k2 {
                                    key.d1[j - 1] += nbr_class(j);
                                    if key.d1[j - 1] > self.delta_limit() {
                                        ok = false;
                                    }
                                }
                                for (pi, part) in key0.parts.iter().enumerate() {
                                    let cnt = part.iter().filter(|&&u| self.inst.graph.has_edge(v, u)).count() as u16;
                                    key.d2[pi] += cnt;
                                    if key.d2[pi] > self.delta_limit() {
                                        ok = false;
                                    }
                                }
                                ok
                            }
                        }
                        c if c <= k2 => {
                            // no edge from a crossing-leaf class into Y
                            if nbr_class(k2 + 1) > 0 {
                                false
                            } else {
                                key.c1[c - 1] += gamma_v;
                                key.d1[c - 1] += nbr_class(0);
                                let cross: u16 = (1..=k2).filter(|&j| j != c).map(nbr_class).sum();
                                key.b += cross;
                                key.mask |= 1 << c;
                                key.c1[c - 1] <= self.gamma_limit()
                                    && key.d1[c - 1] <= self.delta_limit()
                                    && key.b as usize <= self.inst.k
                            }
                        }
                        _ => {
                            if (1..=k2).map(nbr_class).sum::<u16>() > 0 {
                                false
                            } else {
                                // Y-neighbors of v must all lie in the chosen part
                                let allowed = match part_choice {
                                    Some(pi) => {
                                        let part = &key0.parts[pi];
                                        nbrs.iter()
                                            .filter(|&&i| key0.classes[i] as usize == k2 + 1)
                                            .all(|&i| part.contains(&child_bag[i]))
                                    }
                                    None => nbr_class(k2 + 1) == 0,
                                };
                                if !allowed {
                                    false
                                } else {
                                    match part_choice {
                                        Some(pi) => {
                                            key.parts[pi].push(v);
                                            key.c2[pi] += gamma_v;
                                            key.d2[pi] += nbr_class(0);
                                            key.c2[pi] <= self.gamma_limit() && key.d2[pi] <= self.delta_limit()
                                        }
                                        None => {
                                            key.parts.push(vec![v]);
                                            key.c2.push(gamma_v);
                                            key.d2.push(nbr_class(0));
                                            gamma_v <= self.gamma_limit()
                                        }
                                    }
                                }
                            }
                        }
                    };
                    if !ok {
                        continue;
                    }
                    if class == k2 + 1 {
                        let (p, c, d) = Self::canonical_parts(
                            std::mem::take(&mut key.parts),
                            std::mem::take(&mut key.c2),
                            std::mem::take(&mut key.d2),
                        );
                        key.parts = p;
                        key.c2 = c;
                        key.d2 = d;
                    }
                    let part = if class == k2 + 1 { part_choice } else { None };
                    additions.push((key, Prov::Introduce { pred: idx, class: class as u8, part }));
                }
            }
        }
        for (key, prov) in additions {
            self.store[t].insert(key, prov);
        }
    }

    fn join_node(&mut self, t: usize, left: usize, right: usize) {
        let k2 = self.k2();
        let bag: Vec<usize> = self.bag_members(t).to_vec();
        // bag-internal correction terms are shared by all records with the
        // same class assignment
        let mut grouped: HashMap<(Vec<u8>, Vec<Vec<usize>>), Vec<usize>> = HashMap::new();
        for (idx, (key, _)) in self.store[right].recs.iter().enumerate() {
            grouped.entry((key.classes.clone(), key.parts.clone())).or_default().push(idx);
        }
        let mut additions: Vec<(RecordKey, Prov)> = Vec::new();
        for (li, (lk, _)) in self.store[left].recs.iter().enumerate() {
            let Some(partners) = grouped.get(&(lk.classes.clone(), lk.parts.clone())) else {
                continue;
            };
            // per-class bag edge/weight totals for this assignment
            let class_of = |i: usize| lk.classes[i] as usize;
            let bag_edges = |c1: usize, c2v: usize| -> u16 {
                let mut cnt = 0;
                for i in 0..bag.len() {
                    for j in 0..bag.len() {
                        if i < j
                            && ((class_of(i) == c1 && class_of(j) == c2v)
                                || (class_of(i) == c2v && class_of(j) == c1))
                            && self.inst.graph.has_edge(bag[i], bag[j])
                        {
                            cnt += 1;
                        }
                    }
                }
                cnt
            };
            let gamma_class = |c: usize| -> u16 {
                bag.iter()
                    .enumerate()
                    .filter(|(i, _)| class_of(*i) == c)
                    .map(|(_, &v)| self.inst.gamma[v] as u16)
                    .sum()
            };
            let part_gamma: Vec<u16> = lk
                .parts
                .iter()
                .map(|p| p.iter().map(|&v| self.inst.gamma[v] as u16).sum())
                .collect();
            let part_d: Vec<u16> = lk
                .parts
                .iter()
                .map(|p| {
                    let mut cnt = 0;
                    for &u in p {
                        for (i, &w) in bag.iter().enumerate() {
                            if class_of(i) == 0 && self.inst.graph.has_edge(u, w) {
                                cnt += 1;
                            }
                        }
                    }
                    cnt
                })
                .collect();
            let center_bag = lk.classes.iter().filter(|&&c| c == 0).count() as u16;
            let cross_bag: u16 = {
                let mut cnt = 0;
                for i in 1..=k2 {
                    for j in i + 1..=k2 {
                        cnt += bag_edges(i, j);
                    }
                }
                cnt
            };
            for &ri in partners {
                let rk = &self.store[right].recs[ri].0;
                let mut key = lk.clone();
                let mut ok = true;
                for i in 0..k2 {
                    let c = lk.c1[i] + rk.c1[i];
                    let g = gamma_class(i + 1);
                    if c < g {
                        ok = false;
                        break;
                    }
                    key.c1[i] = c - g;
                    let d = lk.d1[i] + rk.d1[i];
                    let e = bag_edges(i + 1, 0);
                    if d < e {
                        ok = false;
                        break;
                    }
                    key.d1[i] = d - e;
                    if key.c1[i] > self.gamma_limit() || key.d1[i] > self.delta_limit() {
                        ok = false;
                        break;
                    }
                }
                if !ok {
                    continue;
                }
                for pi in 0..lk.parts.len() {
                    let c = lk.c2[pi] + rk.c2[pi];
                    let d = lk.d2[pi] + rk.d2[pi];
                    if c < part_gamma[pi] || d < part_d[pi] {
                        ok = false;
                        break;
                    }
                    key.c2[pi] = c - part_gamma[pi];
                    key.d2[pi] = d - part_d[pi];
                    if key.c2[pi] > self.gamma_limit() || key.d2[pi] > self.delta_limit() {
                        ok = false;
                        break;
                    }
                }
                if !ok {
                    continue;
                }
                let a = lk.a + rk.a;
                let b = lk.b + rk.b;
                if a < center_bag || b < cross_bag {
                    continue;
                }
                key.a = a - center_bag;
                key.b = b - cross_bag;
                if key.a as usize > self.inst.alpha || key.b as usize > self.inst.k {
                    continue;
                }
                key.mask = lk.mask | rk.mask;
                key.closed = (lk.closed + rk.closed).min(2);
                additions.push((key, Prov::Join { left: li, right: ri }));
            }
        }
        for (key, prov) in additions {
            self.store[t].insert(key, prov);
        }
    }

    /// Rebuilds the legitimate pair represented by a record, walking the
    /// provenance chain top-down.
    fn reconstruct(&self, t: usize, idx: usize) -> LegitimatePair {
        let k2 = self.k2();
        let (key, prov) = &self.store[t].recs[idx];
        match prov {
            Prov::Leaf => {
                let v = self.bag_members(t)[0];
                let class = key.classes[0] as usize;
                let mut x = vec![VertexSet::empty(); k2 + 1];
                let mut parts = Vec::new();
                if class <= k2 {
                    x[class].insert(v);
                } else {
                    parts.push(VertexSet::singleton(v));
                }
                LegitimatePair { x, parts }
            }
            Prov::Forget { pred } => {
                let child = self.children[t][0];
                self.reconstruct(child, *pred)
            }
            Prov::Introduce { pred, class, part } => {
                let child = self.children[t][0];
                let mut pair = self.reconstruct(child, *pred);
                let v: usize = {
                    let child_bag = self.bag_members(child);
                    *self
                        .bag_members(t)
                        .iter()
                        .find(|u| !child_bag.contains(u))
                        .expect("introduced vertex")
                };
                let class = *class as usize;
                if class <= k2 {
                    pair.x[class].insert(v);
                } else {
                    match part {
                        None => pair.parts.push(VertexSet::singleton(v)),
                        Some(pi) => {
                            let target: &Vec<usize> = &self.store[child].recs[*pred].0.parts[*pi];
                            let child_bag = self.bag_members(child);
                            let slot = pair
                                .parts
                                .iter_mut()
                                .find(|p| {
                                    let restriction: Vec<usize> =
                                        p.iter().filter(|u| child_bag.contains(u)).collect();
                                    let mut t2 = target.clone();
                                    t2.sort_unstable();
                                    restriction == t2
                                })
                                .expect("part with matching bag restriction");
                            slot.insert(v);
                        }
                    }
                }
                pair
            }
            Prov::Join { left, right } => {
                let (c1, c2) = (self.children[t][0], self.children[t][1]);
                let lp = self.reconstruct(c1, *left);
                let rp = self.reconstruct(c2, *right);
                let bag = self.bag_members(t);
                let mut x = Vec::with_capacity(k2 + 1);
                for i in 0..=k2 {
                    x.push(lp.x[i].union(&rp.x[i]));
                }
                // merge parts whose bag restrictions coincide
                let mut merged: Vec<VertexSet> = Vec::new();
                let mut open: HashMap<Vec<usize>, usize> = HashMap::new();
                for p in lp.parts.iter().chain(rp.parts.iter()) {
                    let restriction: Vec<usize> = p.iter().filter(|u| bag.contains(u)).collect();
                    if restriction.is_empty() {
                        merged.push(p.clone());
                    } else {
                        match open.get(&restriction) {
                            Some(&mi) => merged[mi] = merged[mi].union(p),
                            None => {
                                open.insert(restriction, merged.len());
                                merged.push(p.clone());
                            }
                        }
                    }
                }
                LegitimatePair { x, parts: merged }
            }
        }
    }
}

/// Decides the instance on a nice tree-decomposition; on Yes, returns a
/// solution reconstructed from the record provenance.
pub fn solve_star_cut(
    inst: &StarCutInstance,
    ntd: &NiceTreeDecomposition,
) -> Result<Option<StarCutSolution>, StarcutError> {
    if !validate_nice(&inst.graph, ntd).ok {
        return Err(StarcutError::InvalidDecomposition);
    }
    let (children, _) = ntd.rooted();
    let node_count = ntd.td.node_count();
    let mut dp = Dp {
        inst,
        ntd,
        children,
        store: (0..node_count).map(|_| NodeRecords::new()).collect(),
    };
    let order = ntd.topological_order();
    for &t in &order {
        match ntd.kinds[t] {
            NodeKind::Leaf => {
                if ntd.td.bag(t).len() != 1 {
                    return Err(StarcutError::InvalidDecomposition);
                }
                dp.leaf_node(t);
            }
            NodeKind::Forget(v) => {
                let child = dp.children[t][0];
                dp.forget_node(t, child, v);
            }
            NodeKind::Introduce(v) => {
                let child = dp.children[t][0];
                dp.introduce_node(t, child, v);
            }
            NodeKind::Join => {
                let (l, r) = (dp.children[t][0], dp.children[t][1]);
                dp.join_node(t, l, r);
            }
        }
        debug_assert!(dp.store[t].recs.len() as f64 <= record_bound(inst, ntd.td.bag(t).len()));
    }
    let root = ntd.root();
    let n = inst.graph.vertex_count();
    let full = VertexSet::full(n);
    for idx in 0..dp.store[root].recs.len() {
        let key = &dp.store[root].recs[idx].0;
        let other_groups = key.mask.count_ones() as usize + key.closed as usize + key.parts.len();
        if key.a == 0 && other_groups == 1 {
            continue; // the single non-center group would be all of V(G)
        }
        let pair = dp.reconstruct(root, idx);
        debug_assert!(check_legitimate(inst, &full, &pair));
        let mut leaves: Vec<VertexSet> = pair.x[1..].iter().filter(|s| !s.is_empty()).cloned().collect();
        leaves.extend(pair.parts.iter().filter(|p| !p.is_empty()).cloned());
        if leaves.is_empty() {
            leaves.push(VertexSet::empty());
        }
        let sol = StarCutSolution { center: pair.x[0].clone(), leaves };
        let (ok, violations) = check_solution(inst, &sol);
        assert!(ok, "reconstructed solution must pass the checker: {violations:?}");
        return Ok(Some(sol));
    }
    Ok(None)
}

/// Loose count of possible record keys for a bag of size q, used as a DP
/// sanity bound. Bell numbers are overshot by q^q; the trailing factor covers
/// the mask/closed summary fields.
fn record_bound(inst: &StarCutInstance, q: usize) -> f64 {
    let k2 = 2.0 * inst.k as f64;
    let qf = q as f64;
    let classes = (k2 + 2.0).powf(qf);
    let partitions = if q == 0 { 1.0 } else { qf.powf(qf) };
    let c_range = (inst.leaf_gamma_limit() as f64 + 1.0).powf(k2 + qf);
    let d_range = (inst.leaf_delta_limit() as f64 + 1.0).powf(k2 + qf);
    let ab = (inst.alpha as f64 + 1.0) * (inst.k as f64 + 1.0);
    let summary = 2f64.powf(k2) * 3.0;
    classes * partitions * c_range * d_range * ab * summary
}
