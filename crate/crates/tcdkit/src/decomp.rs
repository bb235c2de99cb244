//! Tree-cut decompositions: validity checking, crossing/thickness/adhesion
//! metrics, the tree-partition test, edge-cut width of a spanning forest, and
//! the singleton-bag decomposition built from a maximal spanning forest.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error)]
pub enum DecompError {
    #[error("unknown tree node id {0}")]
    UnknownNode(usize),
    #[error("{0} is not a tree edge")]
    NotTreeEdge(String),
    #[error("forest is not acyclic")]
    ForestCyclic,
    #[error("forest is not maximal: edge {0} {1} joins two forest components")]
    ForestNotMaximal(usize, usize),
    #[error("forest edge {0} {1} is not a graph edge")]
    ForestEdgeNotInGraph(usize, usize),
    #[error("invalid decomposition json: {0}")]
    BadJson(String),
}

/// A tree on node ids `0..node_count` with disjoint (possibly empty) bags
/// covering the vertex set of the decomposed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeCutDecomposition {
    node_count: usize,
    tree_edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    bags: Vec<VertexSet>,
    root: Option<usize>,
}

impl TreeCutDecomposition {
    pub fn new(
        tree_edges: Vec<(usize, usize)>,
        bags: Vec<VertexSet>,
        root: Option<usize>,
    ) -> Self {
        let node_count = bags.len();
        let mut adj = vec![Vec::new(); node_count];
        for &(a, b) in &tree_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        TreeCutDecomposition { node_count, tree_edges, adj, bags, root }
    }

    pub fn single_node(vertices: VertexSet) -> Self {
        TreeCutDecomposition::new(Vec::new(), vec![vertices], Some(0))
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

    pub fn with_root(mut self, root: usize) -> Self {
        self.root = Some(root);
        self
    }

    pub fn nodes(&self) -> impl Iterator<Item = usize> {
        0..self.node_count
    }

    /// Children lists and parents for the rooted view.
    pub fn rooted(&self, root: usize) -> (Vec<Vec<usize>>, Vec<Option<usize>>) {
        let mut children = vec![Vec::new(); self.node_count];
        let mut parent = vec![None; self.node_count];
        let mut visited = vec![false; self.node_count];
        let mut stack = vec![root];
        visited[root] = true;
        while let Some(t) = stack.pop() {
            for &c in &self.adj[t] {
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

    /// Restriction to an induced subgraph: keeps the tree, intersects bags.
    pub fn restrict(&self, keep: &VertexSet, old_to_new: &BTreeMap<usize, usize>) -> Self {
        let bags = self
            .bags
            .iter()
            .map(|b| b.iter().filter(|v| keep.contains(*v)).map(|v| old_to_new[&v]).collect())
            .collect();
        TreeCutDecomposition::new(self.tree_edges.clone(), bags, self.root)
    }
}

/// One structural violation found by the validator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    TreeDisconnected,
    TreeHasCycle,
    BagOverlap { vertex: usize, nodes: (usize, usize) },
    Uncovered { vertex: usize },
    OutOfRange { vertex: usize },
}

/// Machine-checkable validity report.
#[derive(Debug, Clone, Serialize)]
pub struct ValidityReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

/// Checks that the tree is a tree and the bags partition `V(G)`.
pub fn validate_tcd(g: &Graph, d: &TreeCutDecomposition) -> ValidityReport {
    let mut violations = Vec::new();
    let nodes = d.node_count();
    if d.tree_edges().len() + 1 != nodes {
        if d.tree_edges().len() + 1 < nodes {
            violations.push(Violation::TreeDisconnected);
        } else {
            violations.push(Violation::TreeHasCycle);
        }
    } else if nodes > 0 {
        // right edge count: connected iff acyclic
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
            violations.push(Violation::TreeDisconnected);
            violations.push(Violation::TreeHasCycle);
        }
    }
    let mut owner: Vec<Option<usize>> = vec![None; g.vertex_count()];
    for t in d.nodes() {
        for v in d.bag(t).iter() {
            if v >= g.vertex_count() {
                violations.push(Violation::OutOfRange { vertex: v });
                continue;
            }
            match owner[v] {
                Some(prev) => violations.push(Violation::BagOverlap { vertex: v, nodes: (prev, t) }),
                None => owner[v] = Some(t),
            }
        }
    }
    for (v, o) in owner.iter().enumerate() {
        if o.is_none() {
            violations.push(Violation::Uncovered { vertex: v });
        }
    }
    ValidityReport { ok: violations.is_empty(), violations }
}

/// Component label of every graph vertex in `T - t`; vertices of `X_t` get
/// `usize::MAX`.
fn component_labels(g: &Graph, d: &TreeCutDecomposition, t: usize) -> Vec<usize> {
    let mut node_comp = vec![usize::MAX; d.node_count()];
    let mut comp = 0;
    for &start in d.tree_neighbors(t) {
        if node_comp[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        node_comp[start] = comp;
        while let Some(x) = stack.pop() {
            for &y in d.tree_neighbors(x) {
                if y != t && node_comp[y] == usize::MAX {
                    node_comp[y] = comp;
                    stack.push(y);
                }
            }
        }
        comp += 1;
    }
    let mut vertex_comp = vec![usize::MAX; g.vertex_count()];
    for node in d.nodes() {
        if node == t {
            continue;
        }
        for v in d.bag(node).iter() {
            vertex_comp[v] = node_comp[node];
        }
    }
    vertex_comp
}

/// Number of graph edges joining two distinct components of `T - t`.
pub fn crossing_at(g: &Graph, d: &TreeCutDecomposition, t: usize) -> Result<usize, DecompError> {
    if t >= d.node_count() {
        return Err(DecompError::UnknownNode(t));
    }
    let labels = component_labels(g, d, t);
    Ok(g.edges()
        .iter()
        .filter(|&&(u, v)| {
            labels[u] != usize::MAX && labels[v] != usize::MAX && labels[u] != labels[v]
        })
        .count())
}

/// (thickness, crossing number, edge-crossing width) of a valid decomposition.
pub fn metrics(g: &Graph, d: &TreeCutDecomposition) -> (usize, usize, usize) {
    let thickness = d.bags().iter().map(|b| b.len()).max().unwrap_or(0);
    let crossing = d
        .nodes()
        .map(|t| crossing_at(g, d, t).expect("node in range"))
        .max()
        .unwrap_or(0);
    (thickness, crossing, thickness.max(crossing))
}

/// Number of graph edges between the two bag-unions separated by tree edge `e`.
pub fn adhesion(g: &Graph, d: &TreeCutDecomposition, e: (usize, usize)) -> Result<usize, DecompError> {
    let (a, b) = e;
    if !d.tree_edges().iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a)) {
        return Err(DecompError::NotTreeEdge(format!("{a}-{b}")));
    }
    // side of a in T - ab
    let mut side = vec![false; d.node_count()];
    side[a] = true;
    let mut stack = vec![a];
    while let Some(t) = stack.pop() {
        for &c in d.tree_neighbors(t) {
            if !(t == a && c == b) && !(t == b && c == a) && !side[c] {
                side[c] = true;
                stack.push(c);
            }
        }
    }
    let mut in_a = vec![false; g.vertex_count()];
    for t in d.nodes() {
        if side[t] {
            for v in d.bag(t).iter() {
                in_a[v] = true;
            }
        }
    }
    Ok(g.edges().iter().filter(|&&(u, v)| in_a[u] != in_a[v]).count())
}

/// True iff every graph edge lies inside one bag or between bags of adjacent
/// tree nodes.
pub fn is_tree_partition(g: &Graph, d: &TreeCutDecomposition) -> bool {
    let mut owner = vec![usize::MAX; g.vertex_count()];
    for t in d.nodes() {
        for v in d.bag(t).iter() {
            owner[v] = t;
        }
    }
    g.edges().iter().all(|&(u, v)| {
        let (a, b) = (owner[u], owner[v]);
        a == b || d.tree_neighbors(a).binary_search(&b).is_ok()
    })
}

/// A graph together with a maximal spanning forest of it.
#[derive(Debug, Clone)]
pub struct SpanningForestPair {
    pub graph: Graph,
    pub forest: Vec<(usize, usize)>,
}

impl SpanningForestPair {
    pub fn new(graph: Graph, forest: Vec<(usize, usize)>) -> Result<Self, DecompError> {
        let pair = SpanningForestPair { graph, forest };
        pair.check()?;
        Ok(pair)
    }

    fn check(&self) -> Result<(), DecompError> {
        let n = self.graph.vertex_count();
        let mut dsu = Dsu::new(n);
        for &(u, v) in &self.forest {
            if !self.graph.has_edge(u, v) {
                return Err(DecompError::ForestEdgeNotInGraph(u, v));
            }
            if !dsu.union(u, v) {
                return Err(DecompError::ForestCyclic);
            }
        }
        for &(u, v) in self.graph.edges() {
            if dsu.find(u) != dsu.find(v) {
                return Err(DecompError::ForestNotMaximal(u, v));
            }
        }
        Ok(())
    }

    fn is_forest_edge(&self, u: usize, v: usize) -> bool {
        self.forest.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    /// The unique forest path between `u` and `v` (they share a component).
    fn forest_path(&self, u: usize, v: usize) -> Vec<usize> {
        let n = self.graph.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.forest {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut prev = vec![usize::MAX; n];
        let mut stack = vec![u];
        let mut seen = vec![false; n];
        seen[u] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    prev[y] = x;
                    stack.push(y);
                }
            }
        }
        let mut path = vec![v];
        let mut cur = v;
        while cur != u {
            cur = prev[cur];
            path.push(cur);
        }
        path
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Edge-cut width of `(G, F)`: one plus the largest local feedback edge set.
pub fn ecw_of_forest(pair: &SpanningForestPair) -> Result<usize, DecompError> {
    pair.check()?;
    let n = pair.graph.vertex_count();
    let mut local = vec![0usize; n];
    for &(u, v) in pair.graph.edges() {
        if pair.is_forest_edge(u, v) {
            continue;
        }
        for w in pair.forest_path(u, v) {
            local[w] += 1;
        }
    }
    Ok(1 + local.iter().copied().max().unwrap_or(0))
}

/// Extends the forest to a tree (linking lowest-id component representatives)
/// and returns the singleton-bag tree-cut decomposition on it.
pub fn tcd_from_spanning_forest(pair: &SpanningForestPair) -> Result<TreeCutDecomposition, DecompError> {
    pair.check()?;
    let n = pair.graph.vertex_count();
    let mut dsu = Dsu::new(n);
    let mut tree_edges = pair.forest.clone();
    for &(u, v) in &pair.forest {
        dsu.union(u, v);
    }
    // lowest-id representative per component, in component order
    let mut reps: Vec<usize> = Vec::new();
    for v in 0..n {
        if reps.iter().all(|&r| dsu.find(r) != dsu.find(v)) {
            reps.push(v);
        }
    }
    for w in reps.iter().skip(1) {
        tree_edges.push((reps[0], *w));
    }
    let bags = (0..n).map(VertexSet::singleton).collect();
    Ok(TreeCutDecomposition::new(tree_edges, bags, None))
}

/// Canonical JSON form of a (tree-cut or tree) decomposition.
#[derive(Debug, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub nodes: Vec<usize>,
    pub tree_edges: Vec<(usize, usize)>,
    pub bags: BTreeMap<String, Vec<usize>>,
    pub root: Option<usize>,
}

impl TreeCutDecomposition {
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

    pub fn from_json(j: &DecompositionJson) -> Result<Self, DecompError> {
        let n = j.nodes.len();
        let mut bags = vec![VertexSet::empty(); n];
        for (key, members) in &j.bags {
            let id: usize = key.parse().map_err(|_| DecompError::BadJson(format!("bad node id {key:?}")))?;
            if id >= n {
                return Err(DecompError::BadJson(format!("bag for unknown node {id}")));
            }
            bags[id] = VertexSet::new(members.clone());
        }
        for &(a, b) in &j.tree_edges {
            if a >= n || b >= n {
                return Err(DecompError::BadJson(format!("tree edge {a}-{b} out of range")));
            }
        }
        Ok(TreeCutDecomposition::new(j.tree_edges.clone(), bags, j.root))
    }
}
