//! Tree-decompositions: a width-budget builder (min-fill heuristic backed by
//! an exact elimination-order DP), a validator, and conversion to nice form.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decomp::DecompositionJson;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error)]
pub enum TreedecError {
    #[error("tree-width exceeds budget {budget}")]
    TooWide { budget: usize },
    #[error("exact tree-width computation limited to 25 vertices, got {0}")]
    TooLarge(usize),
    #[error("input decomposition is invalid")]
    InvalidInput,
    #[error("unknown node id {0}")]
    UnknownNode(usize),
    #[error("invalid decomposition json: {0}")]
    BadJson(String),
}

/// A tree of (possibly overlapping) bags covering all vertices and edges.
#[derive(Debug, Clone)]
pub struct TreeDecomposition {
    node_count: usize,
    tree_edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    bags: Vec<VertexSet>,
    root: Option<usize>,
}

impl TreeDecomposition {
    pub fn new(tree_edges: Vec<(usize, usize)>, bags: Vec<VertexSet>, root: Option<usize>) -> Self {
        let node_count = bags.len();
        let mut adj = vec![Vec::new(); node_count];
        for &(a, b) in &tree_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        TreeDecomposition { node_count, tree_edges, adj, bags, root }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }

    pub fn tree_neighbors(&self, t: usize) -> &[usize] {
        &self.adj[t]
    }

    pub fn bag(&self, t: usize) -> &VertexSet {
        &self.bags[t]
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn nodes(&self) -> impl Iterator<Item = usize> {
        0..self.node_count
    }

    /// Max bag size minus one; zero for a decomposition with only empty bags.
    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn to_json(&self) -> DecompositionJson {
        let mut bags = BTreeMap::new();
        for t in self.nodes() {
            bags.insert(t.to_string(), self.bag(t).members().to_vec());
        }
        let mut tree_edges: Vec<(usize, usize)> =
            self.tree_edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        tree_edges.sort_unstable();
        DecompositionJson { nodes: (0..self.node_count).collect(), tree_edges, bags, root: self.root }
    }

    pub fn from_json(j: &DecompositionJson) -> Result<Self, TreedecError> {
        let n = j.nodes.len();
        let mut bags = vec![VertexSet::empty(); n];
        for (key, members) in &j.bags {
            let id: usize =
                key.parse().map_err(|_| TreedecError::BadJson(format!("bad node id {key:?}")))?;
            if id >= n {
                return Err(TreedecError::BadJson(format!("bag for unknown node {id}")));
            }
            bags[id] = VertexSet::new(members.clone());
        }
        for &(a, b) in &j.tree_edges {
            if a >= n || b >= n {
                return Err(TreedecError::BadJson(format!("tree edge {a}-{b} out of range")));
            }
        }
        Ok(TreeDecomposition::new(j.tree_edges.clone(), bags, j.root))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum TdViolation {
    TreeDisconnected,
    TreeHasCycle,
    Uncovered { vertex: usize },
    EdgeUncovered { u: usize, v: usize },
    OccurrencesDisconnected { vertex: usize },
    OutOfRange { vertex: usize },
}

#[derive(Debug, Clone, Serialize)]
pub struct TdValidityReport {
    pub ok: bool,
    pub width: usize,
    pub violations: Vec<TdViolation>,
}

pub fn validate_td(g: &Graph, d: &TreeDecomposition) -> TdValidityReport {
    let mut violations = Vec::new();
    let nodes = d.node_count();
    if nodes > 0 {
        if d.tree_edges().len() + 1 != nodes {
            violations.push(if d.tree_edges().len() + 1 < nodes {
                TdViolation::TreeDisconnected
            } else {
                TdViolation::TreeHasCycle
            });
        } else {
            let mut seen = vec![false; nodes];
            let mut stack = vec![0];
            seen[0] = true;
            let mut count = 1;
            while let Some(t) = stack.pop() {
                for &c in d.tree_neighbors(t) {
                    if !seen[c] {
                        seen[c] = true;
                        count += 1;
                        stack.push(c);
                    }
                }
            }
            if count != nodes {
                violations.push(TdViolation::TreeDisconnected);
                violations.push(TdViolation::TreeHasCycle);
            }
        }
    }
    let n = g.vertex_count();
    let mut occurrences: Vec<Vec<usize>> = vec![Vec::new(); n];
    for t in d.nodes() {
        for v in d.bag(t).iter() {
            if v >= n {
                violations.push(TdViolation::OutOfRange { vertex: v });
            } else {
                occurrences[v].push(t);
            }
        }
    }
    for (v, occ) in occurrences.iter().enumerate() {
        if occ.is_empty() {
            violations.push(TdViolation::Uncovered { vertex: v });
            continue;
        }
        // connectivity of the occurrence set in T
        let occ_set: BTreeSet<usize> = occ.iter().copied().collect();
        let mut stack = vec![occ[0]];
        let mut seen = BTreeSet::new();
        seen.insert(occ[0]);
        while let Some(t) = stack.pop() {
            for &c in d.tree_neighbors(t) {
                if occ_set.contains(&c) && seen.insert(c) {
                    stack.push(c);
                }
            }
        }
        if seen.len() != occ_set.len() {
            violations.push(TdViolation::OccurrencesDisconnected { vertex: v });
        }
    }
    for &(u, v) in g.edges() {
        let covered = d.nodes().any(|t| d.bag(t).contains(u) && d.bag(t).contains(v));
        if !covered {
            violations.push(TdViolation::EdgeUncovered { u, v });
        }
    }
    TdValidityReport { ok: violations.is_empty(), width: d.width(), violations }
}

/// Elimination simulation: returns (width, bags in elimination order) where
/// bag_i = {order[i]} ∪ current neighbors at elimination time.
fn eliminate(g: &Graph, order: &[usize]) -> (usize, Vec<BTreeSet<usize>>) {
    let n = g.vertex_count();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut width = 0;
    let mut bags = Vec::with_capacity(n);
    for &v in order {
        let nbrs: Vec<usize> = adj[v].iter().copied().filter(|&u| alive[u]).collect();
        width = width.max(nbrs.len());
        let mut bag: BTreeSet<usize> = nbrs.iter().copied().collect();
        bag.insert(v);
        bags.push(bag);
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                adj[nbrs[i]].insert(nbrs[j]);
                adj[nbrs[j]].insert(nbrs[i]);
            }
        }
        alive[v] = false;
    }
    (width, bags)
}

fn min_fill_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best = None;
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            let nbrs: Vec<usize> = adj[v].iter().copied().filter(|&u| alive[u]).collect();
            let mut fill = 0usize;
            for i in 0..nbrs.len() {
                for j in i + 1..nbrs.len() {
                    if !adj[nbrs[i]].contains(&nbrs[j]) {
                        fill += 1;
                    }
                }
            }
            if best.map_or(true, |(bf, _)| fill < bf) {
                best = Some((fill, v));
            }
        }
        let (_, v) = best.unwrap();
        let nbrs: Vec<usize> = adj[v].iter().copied().filter(|&u| alive[u]).collect();
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                adj[nbrs[i]].insert(nbrs[j]);
                adj[nbrs[j]].insert(nbrs[i]);
            }
        }
        alive[v] = false;
        order.push(v);
    }
    order
}

/// Tree-decomposition from an elimination order: node i gets the clique bag
/// of order[i]; its parent is the node of the first-eliminated bag neighbor.
fn td_from_order(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.vertex_count();
    if n == 0 {
        return TreeDecomposition::new(Vec::new(), vec![VertexSet::empty()], Some(0));
    }
    let (_, bags) = eliminate(g, order);
    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut tree_edges = Vec::new();
    for (i, bag) in bags.iter().enumerate() {
        let parent = bag
            .iter()
            .filter(|&&u| u != order[i])
            .map(|&u| position[u])
            .min()
            .unwrap_or(i + 1);
        if parent < n {
            tree_edges.push((i, parent));
        }
    }
    let bags = bags
        .into_iter()
        .map(|b| b.into_iter().collect())
        .collect();
    TreeDecomposition::new(tree_edges, bags, Some(n - 1))
}

/// Exact tree-width with a witness elimination order, by a DP over vertex
/// subsets keyed on the last-eliminated vertex.
pub fn exact_treewidth(g: &Graph) -> Result<(usize, Vec<usize>), TreedecError> {
    let n = g.vertex_count();
    if n > 25 {
        return Err(TreedecError::TooLarge(n));
    }
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let masks = g.adjacency_masks();
    let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    // q(S, v): later vertices adjacent to v or reachable from it through S
    let q = |s: u64, v: usize| -> usize {
        let mut reach = 1u64 << v;
        let mut frontier = reach;
        let mut out = masks[v] & !s & !(1u64 << v);
        while frontier != 0 {
            let mut grow = 0u64;
            let mut f = frontier;
            while f != 0 {
                let x = f.trailing_zeros() as usize;
                f &= f - 1;
                grow |= masks[x];
            }
            out |= grow & !s & !(1u64 << v);
            let new = grow & s & !reach;
            reach |= new;
            frontier = new;
        }
        out.count_ones() as usize
    };
    let size = 1usize << n;
    let mut dp = vec![u8::MAX; size];
    let mut choice = vec![0u8; size];
    dp[0] = 0;
    let mut by_popcount: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for s in 0..size {
        by_popcount[(s as u64).count_ones() as usize].push(s);
    }
    for card in 1..=n {
        for &s in &by_popcount[card] {
            let mut bits = s as u64;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let rest = s & !(1usize << v);
                let cost = dp[rest].max(q(rest as u64, v) as u8);
                if cost < dp[s] {
                    dp[s] = cost;
                    choice[s] = v as u8;
                }
            }
        }
    }
    let tw = dp[full as usize] as usize;
    let mut order = Vec::with_capacity(n);
    let mut s = full as usize;
    while s != 0 {
        let v = choice[s] as usize;
        order.push(v);
        s &= !(1usize << v);
    }
    order.reverse();
    Ok((tw, order))
}

/// Builds a tree-decomposition of width ≤ 2w+1 or certifies tw(G) > w.
/// Small graphs are decided exactly; beyond that the min-fill heuristic is
/// accepted whenever it meets the 2w+1 budget, with the exact DP as the
/// certifying fallback. TooWide is always a true certificate of tw(G) > w.
pub fn build_tree_decomposition(g: &Graph, w: usize) -> Result<TreeDecomposition, TreedecError> {
    if g.vertex_count() > 12 {
        let order = min_fill_order(g);
        let (width, _) = eliminate(g, &order);
        if width <= 2 * w + 1 {
            return Ok(td_from_order(g, &order));
        }
    }
    let (tw, exact_order) = exact_treewidth(g)?;
    if tw > w {
        return Err(TreedecError::TooWide { budget: w });
    }
    Ok(td_from_order(g, &exact_order))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    Forget(usize),
    Introduce(usize),
    Join,
}

impl NodeKind {
    fn label(self) -> String {
        match self {
            NodeKind::Leaf => "leaf".into(),
            NodeKind::Forget(v) => format!("forget {v}"),
            NodeKind::Introduce(v) => format!("introduce {v}"),
            NodeKind::Join => "join".into(),
        }
    }

    fn parse(s: &str) -> Option<NodeKind> {
        match s {
            "leaf" => Some(NodeKind::Leaf),
            "join" => Some(NodeKind::Join),
            _ => {
                let (word, arg) = s.split_once(' ')?;
                let v = arg.parse().ok()?;
                match word {
                    "forget" => Some(NodeKind::Forget(v)),
                    "introduce" => Some(NodeKind::Introduce(v)),
                    _ => None,
                }
            }
        }
    }
}

/// A rooted tree-decomposition with leaf / forget / introduce / join typing.
#[derive(Debug, Clone)]
pub struct NiceTreeDecomposition {
    pub td: TreeDecomposition,
    pub kinds: Vec<NodeKind>,
}

impl NiceTreeDecomposition {
    pub fn root(&self) -> usize {
        self.td.root().expect("nice decomposition is rooted")
    }

    /// Children lists and parents with respect to the root.
    pub fn rooted(&self) -> (Vec<Vec<usize>>, Vec<Option<usize>>) {
        let root = self.root();
        let mut children = vec![Vec::new(); self.td.node_count()];
        let mut parent = vec![None; self.td.node_count()];
        let mut visited = vec![false; self.td.node_count()];
        let mut stack = vec![root];
        visited[root] = true;
        while let Some(t) = stack.pop() {
            for &c in self.td.tree_neighbors(t) {
                if !visited[c] {
                    visited[c] = true;
                    parent[c] = Some(t);
                    children[t].push(c);
                    stack.push(c);
                }
            }
        }
        (children, parent)
    }

    /// Nodes in bottom-up (children before parents) order.
    pub fn topological_order(&self) -> Vec<usize> {
        let (children, _) = self.rooted();
        let mut order = Vec::with_capacity(self.td.node_count());
        let mut stack = vec![self.root()];
        while let Some(t) = stack.pop() {
            order.push(t);
            for &c in &children[t] {
                stack.push(c);
            }
        }
        order.reverse();
        order
    }

    pub fn to_json(&self) -> NiceDecompositionJson {
        let mut kind = BTreeMap::new();
        for t in self.td.nodes() {
            kind.insert(t.to_string(), self.kinds[t].label());
        }
        NiceDecompositionJson { base: self.td.to_json(), kind }
    }

    pub fn from_json(j: &NiceDecompositionJson) -> Result<Self, TreedecError> {
        let td = TreeDecomposition::from_json(&j.base)?;
        let mut kinds = vec![NodeKind::Leaf; td.node_count()];
        for (key, label) in &j.kind {
            let id: usize =
                key.parse().map_err(|_| TreedecError::BadJson(format!("bad node id {key:?}")))?;
            if id >= td.node_count() {
                return Err(TreedecError::BadJson(format!("kind for unknown node {id}")));
            }
            kinds[id] = NodeKind::parse(label)
                .ok_or_else(|| TreedecError::BadJson(format!("bad kind {label:?}")))?;
        }
        if td.root().is_none() {
            return Err(TreedecError::BadJson("nice decomposition must have a root".into()));
        }
        Ok(NiceTreeDecomposition { td, kinds })
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct NiceDecompositionJson {
    #[serde(flatten)]
    pub base: DecompositionJson,
    pub kind: BTreeMap<String, String>,
}

/// Checks the nice-typing invariants on top of plain validity.
pub fn validate_nice(g: &Graph, ntd: &NiceTreeDecomposition) -> TdValidityReport {
    let mut report = validate_td(g, &ntd.td);
    if !report.ok {
        return report;
    }
    let (children, _) = ntd.rooted();
    let root = ntd.root();
    let mut typing_ok = true;
    for t in ntd.td.nodes() {
        let bag = ntd.td.bag(t);
        let ok = match (&ntd.kinds[t], children[t].as_slice()) {
            (NodeKind::Leaf, []) => t == root || bag.len() == 1,
            (NodeKind::Forget(v), [c]) => {
                let cb = ntd.td.bag(*c);
                cb.contains(*v) && !bag.contains(*v) && {
                    let mut expect = cb.clone();
                    expect.remove(*v);
                    expect == *bag
                }
            }
            (NodeKind::Introduce(v), [c]) => {
                let cb = ntd.td.bag(*c);
                bag.contains(*v) && !cb.contains(*v) && {
                    let mut expect = bag.clone();
                    expect.remove(*v);
                    expect == *cb
                }
            }
            (NodeKind::Join, [a, b]) => ntd.td.bag(*a) == bag && ntd.td.bag(*b) == bag,
            _ => false,
        };
        if !ok {
            typing_ok = false;
        }
    }
    if !typing_ok {
        report.ok = false;
        report.violations.push(TdViolation::OccurrencesDisconnected { vertex: usize::MAX });
    }
    report
}

struct NiceBuilder {
    bags: Vec<VertexSet>,
    kinds: Vec<NodeKind>,
    edges: Vec<(usize, usize)>,
}

impl NiceBuilder {
    fn push(&mut self, bag: VertexSet, kind: NodeKind, child: Option<usize>) -> usize {
        let id = self.bags.len();
        self.bags.push(bag);
        self.kinds.push(kind);
        if let Some(c) = child {
            self.edges.push((id, c));
        }
        id
    }

    /// Chain of forgets then introduces transforming `from` into `to` on top
    /// of node `top`; returns the new top (or `top` itself if `from == to`).
    fn morph(&mut self, mut top: usize, from: &VertexSet, to: &VertexSet) -> usize {
        let mut cur = from.clone();
        for v in from.difference(to).iter() {
            cur.remove(v);
            top = self.push(cur.clone(), NodeKind::Forget(v), Some(top));
        }
        for v in to.difference(from).iter() {
            cur.insert(v);
            top = self.push(cur.clone(), NodeKind::Introduce(v), Some(top));
        }
        top
    }

    /// Leaf with the first vertex, then introduces for the rest of `bag`.
    fn leaf_chain(&mut self, bag: &VertexSet) -> usize {
        let mut it = bag.iter();
        let first = it.next().expect("leaf bag must be non-empty");
        let mut cur = VertexSet::singleton(first);
        let mut top = self.push(cur.clone(), NodeKind::Leaf, None);
        for v in it {
            cur.insert(v);
            top = self.push(cur.clone(), NodeKind::Introduce(v), Some(top));
        }
        top
    }
}

/// Contracts tree edges whose endpoint bags are comparable, dropping the
/// smaller bag; the result has at most max(n, 1) nodes.
fn contract_comparable(d: &TreeDecomposition) -> TreeDecomposition {
    let mut bags: Vec<Option<VertexSet>> = d.bags().iter().cloned().map(Some).collect();
    let mut adj: Vec<BTreeSet<usize>> =
        (0..d.node_count()).map(|t| d.tree_neighbors(t).iter().copied().collect()).collect();
    loop {
        let mut contracted = false;
        'outer: for a in 0..bags.len() {
            if bags[a].is_none() {
                continue;
            }
            for &b in adj[a].clone().iter() {
                let (ba, bb) = (bags[a].as_ref().unwrap(), bags[b].as_ref().unwrap());
                let keep_b = ba.iter().all(|v| bb.contains(v));
                let keep_a = bb.iter().all(|v| ba.contains(v));
                if keep_a || keep_b {
                    let (gone, kept) = if keep_b { (a, b) } else { (b, a) };
                    for &x in adj[gone].clone().iter() {
                        adj[x].remove(&gone);
                        if x != kept {
                            adj[x].insert(kept);
                            adj[kept].insert(x);
                        }
                    }
                    adj[gone].clear();
                    bags[gone] = None;
                    contracted = true;
                    break 'outer;
                }
            }
        }
        if !contracted {
            break;
        }
    }
    let mut remap = vec![usize::MAX; bags.len()];
    let mut new_bags = Vec::new();
    for (i, b) in bags.iter().enumerate() {
        if let Some(b) = b {
            remap[i] = new_bags.len();
            new_bags.push(b.clone());
        }
    }
    let mut edges = Vec::new();
    for (a, nb) in adj.iter().enumerate() {
        for &b in nb {
            if a < b {
                edges.push((remap[a], remap[b]));
            }
        }
    }
    TreeDecomposition::new(edges, new_bags, None)
}

/// Converts a valid tree-decomposition into a nice one of the same width with
/// an empty root bag. Node count is at most 8·(w+1)·n + 2 (c = 8).
pub fn make_nice(g: &Graph, d: &TreeDecomposition) -> Result<NiceTreeDecomposition, TreedecError> {
    if !validate_td(g, d).ok {
        return Err(TreedecError::InvalidInput);
    }
    let d = contract_comparable(d);
    // root at the node containing the lowest vertex id (ties: lowest node id)
    let root_orig = d
        .nodes()
        .filter(|&t| !d.bag(t).is_empty())
        .min_by_key(|&t| (d.bag(t).members()[0], t))
        .ok_or(TreedecError::InvalidInput)?;
    let mut children = vec![Vec::new(); d.node_count()];
    {
        let mut visited = vec![false; d.node_count()];
        let mut stack = vec![root_orig];
        visited[root_orig] = true;
        while let Some(t) = stack.pop() {
            for &c in d.tree_neighbors(t) {
                if !visited[c] {
                    visited[c] = true;
                    children[t].push(c);
                    stack.push(c);
                }
            }
        }
    }
    let mut b = NiceBuilder { bags: Vec::new(), kinds: Vec::new(), edges: Vec::new() };
    // post-order over the original tree, building each node's nice top
    let mut order = Vec::new();
    let mut stack = vec![root_orig];
    while let Some(t) = stack.pop() {
        order.push(t);
        for &c in &children[t] {
            stack.push(c);
        }
    }
    let mut top_of = vec![usize::MAX; d.node_count()];
    for &t in order.iter().rev() {
        let bag = d.bag(t);
        let child_tops: Vec<usize> = children[t]
            .iter()
            .map(|&c| b.morph(top_of[c], d.bag(c), bag))
            .collect();
        top_of[t] = match child_tops.as_slice() {
            [] => b.leaf_chain(bag),
            [single] => *single,
            many => {
                let mut acc = many[0];
                for &next in &many[1..] {
                    acc = b.push(bag.clone(), NodeKind::Join, Some(acc));
                    b.edges.push((acc, next));
                }
                acc
            }
        };
    }
    // forget everything on top so the root bag is empty
    let root_bag = d.bag(root_orig).clone();
    let root = b.morph(top_of[root_orig], &root_bag, &VertexSet::empty());
    debug_assert!(b.bags.len() <= 8 * (d.width() + 1) * g.vertex_count().max(1) + 2);
    let td = TreeDecomposition::new(b.edges, b.bags, Some(root));
    Ok(NiceTreeDecomposition { td, kinds: b.kinds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_family, FamilySpec};
    use crate::graph::parse_graph;

    fn k3() -> Graph {
        parse_graph("0 1\n1 2\n0 2").unwrap()
    }

    #[test]
    fn validate_examples() {
        let g = parse_graph("0 1\n1 2").unwrap();
        let single = TreeDecomposition::new(Vec::new(), vec![VertexSet::full(3)], None);
        let rep = validate_td(&g, &single);
        assert!(rep.ok);
        assert_eq!(rep.width, 2);

        let good = TreeDecomposition::new(
            vec![(0, 1)],
            vec![VertexSet::new(vec![0, 1]), VertexSet::new(vec![1, 2])],
            None,
        );
        let rep = validate_td(&g, &good);
        assert!(rep.ok);
        assert_eq!(rep.width, 1);

        let bad = TreeDecomposition::new(
            vec![(0, 1)],
            vec![VertexSet::new(vec![0, 1]), VertexSet::singleton(2)],
            None,
        );
        let rep = validate_td(&g, &bad);
        assert!(rep.violations.contains(&TdViolation::EdgeUncovered { u: 1, v: 2 }));

        let split = TreeDecomposition::new(
            vec![(0, 1), (1, 2)],
            vec![VertexSet::new(vec![0, 1]), VertexSet::new(vec![1, 2]), VertexSet::new(vec![0, 1])],
            None,
        );
        assert!(validate_td(&g, &split)
            .violations
            .contains(&TdViolation::OccurrencesDisconnected { vertex: 0 }));
    }

    #[test]
    fn exact_treewidth_values() {
        assert_eq!(exact_treewidth(&k3()).unwrap().0, 2);
        let p4 = parse_graph("0 1\n1 2\n2 3").unwrap();
        assert_eq!(exact_treewidth(&p4).unwrap().0, 1);
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(exact_treewidth(&k4).unwrap().0, 3);
        let grid3 = gen_family(&FamilySpec::Grid { n: 3 }).unwrap().0;
        assert_eq!(exact_treewidth(&grid3).unwrap().0, 3);
        let c5 = parse_graph("0 1\n1 2\n2 3\n3 4\n0 4").unwrap();
        assert_eq!(exact_treewidth(&c5).unwrap().0, 2);
    }

    #[test]
    fn build_examples() {
        let d = build_tree_decomposition(&k3(), 2).unwrap();
        assert!(validate_td(&k3(), &d).ok);
        assert!(d.width() <= 5);
        assert!(matches!(
            build_tree_decomposition(&k3(), 1),
            Err(TreedecError::TooWide { budget: 1 })
        ));
        let grid4 = gen_family(&FamilySpec::Grid { n: 4 }).unwrap().0;
        let d = build_tree_decomposition(&grid4, 3).unwrap();
        assert!(validate_td(&grid4, &d).ok);
        assert!(d.width() <= 7);
    }

    #[test]
    fn build_disconnected() {
        let g = Graph::new(5, &[(0, 1), (3, 4)]).unwrap();
        let d = build_tree_decomposition(&g, 1).unwrap();
        assert!(validate_td(&g, &d).ok);
    }

    #[test]
    fn nice_single_vertex() {
        let g = Graph::new(1, &[]).unwrap();
        let d = TreeDecomposition::new(Vec::new(), vec![VertexSet::singleton(0)], None);
        let ntd = make_nice(&g, &d).unwrap();
        assert!(validate_nice(&g, &ntd).ok);
        assert!(ntd.td.bag(ntd.root()).is_empty());
        let leaves: Vec<_> =
            ntd.kinds.iter().filter(|k| matches!(k, NodeKind::Leaf)).collect();
        assert_eq!(leaves.len(), 1);
    }

    #[test]
    fn nice_k3_single_bag() {
        let g = k3();
        let d = TreeDecomposition::new(Vec::new(), vec![VertexSet::full(3)], None);
        let ntd = make_nice(&g, &d).unwrap();
        assert!(validate_nice(&g, &ntd).ok);
        assert_eq!(ntd.td.width(), 2);
        assert!(ntd
            .kinds
            .iter()
            .filter(|k| matches!(k, NodeKind::Introduce(_)))
            .count()
            >= 2);
    }

    #[test]
    fn nice_p3() {
        let g = parse_graph("0 1\n1 2").unwrap();
        let d = TreeDecomposition::new(
            vec![(0, 1)],
            vec![VertexSet::new(vec![0, 1]), VertexSet::new(vec![1, 2])],
            None,
        );
        let ntd = make_nice(&g, &d).unwrap();
        assert!(validate_nice(&g, &ntd).ok);
        assert_eq!(ntd.td.width(), 1);
    }

    #[test]
    fn nice_preserves_width_and_size() {
        for spec in [FamilySpec::Grid { n: 3 }, FamilySpec::S { k: 3, n: 2 }, FamilySpec::Fan { n: 5 }] {
            let g = gen_family(&spec).unwrap().0;
            let d = build_tree_decomposition(&g, 4).unwrap();
            let ntd = make_nice(&g, &d).unwrap();
            assert!(validate_nice(&g, &ntd).ok);
            assert_eq!(ntd.td.width(), d.width());
            assert!(ntd.td.node_count() <= 8 * (d.width() + 1) * g.vertex_count() + 2);
        }
    }

    #[test]
    fn nice_with_join_nodes() {
        // star K_{1,3} with one bag per edge forces joins at the center bag
        let g = gen_family(&FamilySpec::Star { n: 3 }).unwrap().0;
        let d = TreeDecomposition::new(
            vec![(0, 1), (0, 2)],
            vec![
                VertexSet::new(vec![0, 1]),
                VertexSet::new(vec![0, 2]),
                VertexSet::new(vec![0, 3]),
            ],
            None,
        );
        let ntd = make_nice(&g, &d).unwrap();
        assert!(validate_nice(&g, &ntd).ok);
        assert!(ntd.kinds.iter().any(|k| matches!(k, NodeKind::Join)));
    }

    #[test]
    fn nice_json_round_trip() {
        let g = parse_graph("0 1\n1 2").unwrap();
        let d = build_tree_decomposition(&g, 1).unwrap();
        let ntd = make_nice(&g, &d).unwrap();
        let text = serde_json::to_string(&ntd.to_json()).unwrap();
        let back: NiceDecompositionJson = serde_json::from_str(&text).unwrap();
        let ntd2 = NiceTreeDecomposition::from_json(&back).unwrap();
        assert!(validate_nice(&g, &ntd2).ok);
        assert_eq!(ntd2.kinds, ntd.kinds);
    }

    #[test]
    fn build_never_too_wide_when_feasible() {
        // every connected graph on 4 vertices, w in 1..=3
        let all4: &[&[(usize, usize)]] = &[
            &[(0, 1), (1, 2), (2, 3)],
            &[(0, 1), (0, 2), (0, 3)],
            &[(0, 1), (1, 2), (2, 3), (0, 3)],
            &[(0, 1), (1, 2), (2, 3), (0, 2)],
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)],
        ];
        for edges in all4 {
            let g = Graph::new(4, edges).unwrap();
            let (tw, _) = exact_treewidth(&g).unwrap();
            for w in 1..=3 {
                match build_tree_decomposition(&g, w) {
                    Ok(d) => {
                        assert!(validate_td(&g, &d).ok);
                        assert!(d.width() <= 2 * w + 1);
                    }
                    Err(TreedecError::TooWide { .. }) => assert!(tw > w),
                    Err(e) => panic!("unexpected error {e}"),
                }
            }
        }
    }
}
